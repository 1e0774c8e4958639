//! The automorphism `φ = U_θ(a) U_θ(b)` and the decomposition
//! `H₃(O) = A + φ(S)` into two copies of H(Q₃).

use serde::Serialize;

use crate::albert::{self, embed_offdiag, op_from_linear_action, AlbertElem, LinOp27, DIM};
use crate::composition::{Oct, Quat};
use crate::construct::named::{build_named, s_generators, Name};
use crate::error::{AlgebraError, Result};
use crate::linalg::{span_of, subspace_sum_intersect, Subspace, Vector};
use crate::sample::Sampler;
use crate::scalar::Scalar;
use crate::structure::{ideal_closure, is_simple, StructureReport, Subalgebra};

/// `1 + iv`, a null octonion (`n = 0`).
pub fn one_plus_iv() -> Oct {
    Oct::new(Quat::one(), Quat::i())
}

/// The pair `(a, b)`: `a` has diagonal `(1, -1, 0)/√3` and `(1 + iv)/√3` at
/// [12]; `b = diag(1, -1, 0)`. With `normalized`, `a` is multiplied by √3.
pub fn build_ab(normalized: bool) -> (AlbertElem, AlbertElem) {
    let b = AlbertElem::diag(1, -1, 0);
    let base = &(&AlbertElem::e(1) - &AlbertElem::e(2)) + &embed_offdiag(&one_plus_iv(), 1, 2).expect("slot");
    let a = if normalized { base } else { base.scale(&Scalar::sqrt3().inv().expect("nonzero")) };
    (a, b)
}

/// `θ(x) = E33 + x`.
pub fn theta(x: &AlbertElem) -> AlbertElem {
    x + &AlbertElem::e(3)
}

/// Membership in `C = Φ(E11 - E22) ⊕ J12`.
pub fn in_c(x: &AlbertElem) -> bool {
    x.d[2].is_zero() && (&x.d[0] + &x.d[1]).is_zero() && x.o[1].is_zero() && x.o[2].is_zero()
}

/// `X ↦ X U_θ(v)` as a matrix, for `v ∈ C`.
pub fn u_theta_op(v: &AlbertElem) -> Result<LinOp27> {
    if !in_c(v) {
        return Err(AlgebraError::NotInC);
    }
    let w = theta(v);
    op_from_linear_action(|x| albert::u_operator(x, &w))
}

/// `φ = U_θ(a) U_θ(b)` in right-operator order: `U_θ(a)` acts first.
pub fn build_phi(normalized: bool) -> Result<LinOp27> {
    let (a, b) = build_ab(normalized);
    Ok(u_theta_op(&a)?.then(&u_theta_op(&b)?))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AutoReport {
    /// Canonical basis pairs `(i, j)`, `i ≤ j`, where `φ(bᵢ∘bⱼ) ≠ φ(bᵢ)∘φ(bⱼ)`.
    pub multiplicative_failures: Vec<(usize, usize)>,
    pub pairs_checked: usize,
    pub fixes_e3: bool,
    pub rank: usize,
    pub is_automorphism: bool,
}

/// Exact multiplicativity on all 378 unordered basis pairs, rank and `φ(E33) = E33`.
pub fn is_automorphism(op: &LinOp27) -> AutoReport {
    let images: Vec<Vector> = (0..DIM).map(|n| op.apply_coords(&crate::linalg::unit_vector(DIM, n))).collect();
    let mut failures = Vec::new();
    let mut pairs = 0;
    for i in 0..DIM {
        for j in i..DIM {
            pairs += 1;
            let prod = albert::jordan_coords(&crate::linalg::unit_vector(DIM, i), &crate::linalg::unit_vector(DIM, j));
            if op.apply_coords(&prod) != albert::jordan_coords(&images[i], &images[j]) {
                failures.push((i, j));
            }
        }
    }
    let e3 = AlbertElem::e(3);
    let fixes_e3 = op.apply(&e3) == e3;
    let rank = op.rank();
    let is_automorphism = failures.is_empty() && fixes_e3 && rank == DIM;
    AutoReport { multiplicative_failures: failures, pairs_checked: pairs, fixes_e3, rank, is_automorphism }
}

/// Side conditions for one choice of `a`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VariantReport {
    pub normalized: bool,
    pub q_a: String,
    pub q_b: String,
    pub q_product: String,
    pub a_plus_e33_squared_is_identity: bool,
    pub b_plus_e33_squared_is_identity: bool,
    pub auto: AutoReport,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NormalizationReport {
    pub variants: Vec<VariantReport>,
    /// The unique variant whose `φ` is an automorphism.
    pub chosen: Option<bool>,
}

pub fn variant_report(normalized: bool) -> Result<VariantReport> {
    let (a, b) = build_ab(normalized);
    let (qa, qb) = (albert::qform_q(&a), albert::qform_q(&b));
    let id = AlbertElem::identity();
    Ok(VariantReport {
        normalized,
        q_a: qa.to_string(),
        q_b: qb.to_string(),
        q_product: (&qa * &qb).to_string(),
        a_plus_e33_squared_is_identity: albert::square(&theta(&a)) == id,
        b_plus_e33_squared_is_identity: albert::square(&theta(&b)) == id,
        auto: is_automorphism(&build_phi(normalized)?),
    })
}

/// Runs both choices of `a` and selects the one whose `φ` is an automorphism.
pub fn resolve_normalization() -> Result<NormalizationReport> {
    let variants = vec![variant_report(false)?, variant_report(true)?];
    let passing: Vec<bool> = variants.iter().filter(|v| v.auto.is_automorphism).map(|v| v.normalized).collect();
    let chosen = (passing.len() == 1).then(|| passing[0]);
    Ok(NormalizationReport { variants, chosen })
}

/// The automorphism used downstream; errors unless exactly one variant passes.
pub fn chosen_phi() -> Result<(bool, LinOp27)> {
    let report = resolve_normalization()?;
    let normalized = report.chosen.ok_or(AlgebraError::NoAutomorphism)?;
    Ok((normalized, build_phi(normalized)?))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Lemma1Report {
    pub dim: usize,
    pub closed: bool,
    pub structure: Option<StructureReport>,
    pub ideal_from_e11_plus_e22_dim: Option<usize>,
    pub a0_samples: usize,
    pub a0_failures: usize,
    pub passed: bool,
}

/// Checks that `space` is a 15-dimensional simple subalgebra generated as an
/// ideal by `E11 + E22`, plus `(x0 v)[12]² = -n(x0)(E11 + E22)` for random `x0 ∈ Q`.
pub fn verify_lemma1_on(space: &Subspace, seed: u64) -> Result<Lemma1Report> {
    let alg = Subalgebra::from_space(space.clone())?;
    let dim = alg.dim();
    let mut sampler = Sampler::new(seed);
    let a0_samples = 10;
    let e12 = &AlbertElem::e(1) + &AlbertElem::e(2);
    let a0_failures = (0..a0_samples)
        .filter(|_| {
            let x0 = Oct::from_quat(sampler.quat());
            let a0 = embed_offdiag(&(&x0 * &Oct::v()), 1, 2).expect("slot");
            albert::square(&a0) != e12.scale(&-x0.norm())
        })
        .count();
    let (structure, ideal_dim) = if alg.closed {
        let ideal_dim = if alg.contains(&e12) { Some(ideal_closure(&alg, &[e12])?.dim()) } else { None };
        (Some(is_simple(&alg)?), ideal_dim)
    } else {
        (None, None)
    };
    let passed = alg.closed
        && dim == 15
        && structure.as_ref().is_some_and(|s| s.simple)
        && ideal_dim == Some(dim)
        && a0_failures == 0;
    Ok(Lemma1Report {
        dim,
        closed: alg.closed,
        structure,
        ideal_from_e11_plus_e22_dim: ideal_dim,
        a0_samples,
        a0_failures,
        passed,
    })
}

pub fn s_space() -> Result<Subspace> {
    span_of(&s_generators().iter().map(AlbertElem::coords).collect::<Vec<_>>(), DIM)
}

pub fn verify_lemma1(seed: u64) -> Result<Lemma1Report> {
    verify_lemma1_on(&s_space()?, seed)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Example1Report {
    pub normalized: bool,
    pub b_dim: usize,
    pub b_closed: bool,
    pub b_structure: StructureReport,
    pub sum_dim: usize,
    pub intersection_dim: usize,
    pub control_sum_dim: usize,
    pub control_intersection_dim: usize,
    pub phi_a_simple: bool,
    pub a_simple: bool,
    pub passed: bool,
}

/// Builds `B = φ(S)` with the automorphism-passing `φ` and measures `A + B`.
pub fn verify_example1() -> Result<Example1Report> {
    let (normalized, phi) = chosen_phi()?;
    let a = build_named(Name::A)?.albert().cloned().expect("A lives in H3(O)");
    let s = build_named(Name::S)?.albert().cloned().expect("S lives in H3(O)");
    let b = s.image(&phi)?;
    let b_structure = is_simple(&b)?;
    let (sum, meet) = subspace_sum_intersect(&a.space, &b.space)?;
    let (control_sum, control_meet) = subspace_sum_intersect(&a.space, &s.space)?;
    let a_simple = is_simple(&a)?.simple;
    let phi_a_simple = is_simple(&a.image(&phi)?)?.simple;
    let passed = b.closed
        && b_structure.simple
        && b.dim() == 15
        && sum.dim() == DIM
        && meet.dim() == 3
        && sum.dim() + meet.dim() == a.dim() + b.dim();
    Ok(Example1Report {
        normalized,
        b_dim: b.dim(),
        b_closed: b.closed,
        b_structure,
        sum_dim: sum.dim(),
        intersection_dim: meet.dim(),
        control_sum_dim: control_sum.dim(),
        control_intersection_dim: control_meet.dim(),
        phi_a_simple,
        a_simple,
        passed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn q_values() {
        let (a, b) = build_ab(false);
        assert_eq!(albert::qform_q(&a), Scalar::frac(1, 3));
        assert_eq!(albert::qform_q(&b), Scalar::one());
        let (a1, _) = build_ab(true);
        assert_eq!(albert::qform_q(&a1), Scalar::one());
        let id = AlbertElem::identity();
        assert_eq!(albert::square(&theta(&a1)), id);
        assert_eq!(albert::square(&theta(&b)), id);
        assert_ne!(albert::square(&theta(&a)), id);
        assert!(one_plus_iv().norm().is_zero());
    }

    #[test]
    fn u_theta_b() {
        let (_, b) = build_ab(true);
        let u = u_theta_op(&b).unwrap();
        let z = embed_offdiag(&Oct::from_quat(Quat::from_ints(1, 2, -1, 0)), 2, 3).unwrap();
        assert_eq!(u.apply(&z), -&z);
        assert_eq!(u.apply(&AlbertElem::e(1)), AlbertElem::e(1));
        assert_eq!(u.then(&u), LinOp27::identity());
        assert_eq!(u_theta_op(&AlbertElem::e(3)), Err(AlgebraError::NotInC));
    }

    #[test]
    fn automorphism_checks() {
        assert!(is_automorphism(&LinOp27::identity()).is_automorphism);
        let twice = is_automorphism(&LinOp27::identity().scaled(&Scalar::from(2)));
        assert!(!twice.is_automorphism);
        assert!(twice.multiplicative_failures.contains(&(0, 0)));
        let report = resolve_normalization().unwrap();
        assert_eq!(report.chosen, Some(true));
        let phi = build_phi(true).unwrap();
        assert_eq!(phi.apply(&AlbertElem::e(3)), AlbertElem::e(3));
        assert_eq!(phi.rank(), 27);
        let mut s = Sampler::new(12);
        for _ in 0..20 {
            let (x, y) = (s.albert(), s.albert());
            assert_eq!(phi.apply(&albert::jordan_mul(&x, &y)), albert::jordan_mul(&phi.apply(&x), &phi.apply(&y)));
        }
    }
}
