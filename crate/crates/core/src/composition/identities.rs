//! Seeded checks of the octonion identities: the quadratic equation, norm and
//! trace through the involution, the polarized norm, the Moufang-type
//! cancellation `ā(ab) = n(a)b = (ba)ā`, the composition law and alternativity.

use serde::Serialize;

use crate::composition::oct::Oct;
use crate::composition::quat::Quat;
use crate::linalg::Matrix;
use crate::sample::Sampler;
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub statement: &'static str,
    pub checked: usize,
    pub failures: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentitiesReport {
    pub seed: u64,
    pub samples: usize,
    pub checks: Vec<IdentityCheck>,
    /// Rank of the Gram matrix of `t(·,·)` on the coordinate basis.
    pub tform_rank: usize,
    /// Samples where `t(ā, b) = t(a, b)` holds, read with `t(·,·)` the polarized norm.
    pub conj_first_argument_agrees: usize,
}

impl IdentitiesReport {
    pub fn passed(&self) -> bool {
        self.tform_rank == 8 && self.checks.iter().all(|c| c.failures == 0)
    }

    pub fn failures(&self) -> usize {
        self.checks.iter().map(|c| c.failures).sum()
    }
}

struct Tally {
    checks: Vec<IdentityCheck>,
}

impl Tally {
    fn record(&mut self, name: &'static str, statement: &'static str, ok: bool) {
        let entry = match self.checks.iter_mut().find(|c| c.name == name) {
            Some(c) => c,
            None => {
                self.checks.push(IdentityCheck { name, statement, checked: 0, failures: 0 });
                self.checks.last_mut().expect("pushed")
            }
        };
        entry.checked += 1;
        if !ok {
            entry.failures += 1;
        }
    }
}

/// `k·1`.
fn s1(k: Scalar) -> Oct {
    Oct::scalar(k)
}

pub fn check_identities(samples: usize, seed: u64) -> IdentitiesReport {
    let mut rng = Sampler::new(seed);
    let mut tally = Tally { checks: Vec::new() };
    let mut conj_first = 0;
    for _ in 0..samples {
        let (a, b, x) = (rng.oct(), rng.oct(), rng.oct());
        let (n, t) = (x.norm(), x.trace());
        let xbar = x.conj();

        tally.record("quadratic", "x^2 - t(x)x + n(x) = 0", (&(&x * &x) - &x.scale(&t)) + s1(n.clone()) == Oct::zero());
        tally.record("norm", "n(x) = x x̄ = x̄ x", &x * &xbar == s1(n.clone()) && &xbar * &x == s1(n.clone()));
        tally.record("trace", "t(x) = t(x,1) = x + x̄", x.tform(&Oct::one()) == t && &x + &xbar == s1(t.clone()));

        let tab = a.tform(&b);
        let (abar, bbar) = (a.conj(), b.conj());
        let forms = [&(&a * &bbar) + &(&b * &abar), &(&abar * &b) + &(&bbar * &a)];
        tally.record(
            "polarization",
            "t(a,b) = n(a+b) - n(a) - n(b) = a b̄ + b ā = ā b + b̄ a = t(ā b)",
            forms.iter().all(|f| *f == s1(tab.clone())) && (&abar * &b).trace() == tab,
        );
        if abar.tform(&b) == tab {
            conj_first += 1;
        }

        let nab = b.scale(&a.norm());
        tally.record("cancellation", "ā(ab) = n(a)b = (ba)ā", &abar * &(&a * &b) == nab && &(&b * &a) * &abar == nab);
        tally.record("composition", "n(ab) = n(a)n(b)", (&a * &b).norm() == &a.norm() * &b.norm());
        let aa = &a * &a;
        tally.record(
            "alternativity",
            "(aa)b = a(ab), b(aa) = (ba)a",
            &aa * &b == &a * &(&a * &b) && &b * &aa == &(&b * &a) * &a,
        );
        tally.record("involution", "conj(ab) = b̄ ā", (&a * &b).conj() == &bbar * &abar);

        let q = Oct::from_quat(rng.quat());
        let d = rng.scalar();
        let shifted = &q + &Oct::scalar(d.clone());
        tally.record(
            "shifted norm",
            "n(q + δ) = n(q) + δ t(q) + δ^2 for q in Q",
            shifted.norm() == q.norm() + &d * &q.trace() + &d * &d,
        );
    }
    IdentitiesReport {
        seed,
        samples,
        checks: tally.checks,
        tform_rank: tform_gram().rank(),
        conj_first_argument_agrees: conj_first,
    }
}

/// Gram matrix of `t(·,·)` on the eight coordinate vectors.
pub fn tform_gram() -> Matrix {
    let basis: Vec<Oct> = (0..8).map(|n| Oct::from_coords(&crate::linalg::unit_vector(8, n))).collect();
    let mut g = Matrix::zeros(8, 8);
    for (i, u) in basis.iter().enumerate() {
        for (j, w) in basis.iter().enumerate() {
            g.set(i, j, u.tform(w));
        }
    }
    g
}

/// `a = b = i`: returns `(t(ā, b), t(a, b)) = (-2, 2)`.
pub fn conj_first_argument_counterexample() -> (Scalar, Scalar) {
    let i = Oct::from_quat(Quat::i());
    (i.conj().tform(&i), i.tform(&i))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_identities_hold() {
        let r = check_identities(200, 3);
        assert!(r.passed(), "{r:?}");
        assert_eq!(r.checks.len(), 9);
        assert!(r.checks.iter().all(|c| c.checked == 200));
        assert!(r.conj_first_argument_agrees < 200);
    }

    #[test]
    fn counterexample_values() {
        assert_eq!(conj_first_argument_counterexample(), (Scalar::from(-2), Scalar::from(2)));
    }
}
