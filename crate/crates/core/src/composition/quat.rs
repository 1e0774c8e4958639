use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::linalg::Vector;
use crate::scalar::Scalar;

/// Split quaternion, realized as a 2×2 matrix `[[m11, m12], [m21, m22]]`.
///
/// Conjugation is the adjugate, the norm is the determinant and the trace is the
/// matrix trace.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Quat {
    pub m: [Scalar; 4],
}

impl Quat {
    pub fn new(m11: Scalar, m12: Scalar, m21: Scalar, m22: Scalar) -> Self {
        Quat { m: [m11, m12, m21, m22] }
    }

    pub fn from_ints(m11: i64, m12: i64, m21: i64, m22: i64) -> Self {
        Quat::new(m11.into(), m12.into(), m21.into(), m22.into())
    }

    pub fn zero() -> Self {
        Quat::default()
    }

    pub fn one() -> Self {
        Quat::scalar(Scalar::one())
    }

    pub fn scalar(k: Scalar) -> Self {
        Quat::new(k.clone(), Scalar::zero(), Scalar::zero(), k)
    }

    /// Matrix unit `E_ab`, `a, b ∈ {1, 2}`.
    pub fn unit(a: usize, b: usize) -> Self {
        let mut q = Quat::zero();
        q.m[2 * (a - 1) + (b - 1)] = Scalar::one();
        q
    }

    /// `i = E12 - E21`, with `i² = -1`.
    pub fn i() -> Self {
        Quat::from_ints(0, 1, -1, 0)
    }

    /// `j = E11 - E22`, with `j² = 1`.
    pub fn j() -> Self {
        Quat::from_ints(1, 0, 0, -1)
    }

    /// `k = ij`, with `k² = 1`.
    pub fn k() -> Self {
        Quat::from_ints(0, -1, -1, 0)
    }

    pub fn is_zero(&self) -> bool {
        self.m.iter().all(Scalar::is_zero)
    }

    pub fn conj(&self) -> Self {
        let [a, b, c, d] = &self.m;
        Quat::new(d.clone(), -b, -c, a.clone())
    }

    pub fn norm(&self) -> Scalar {
        let [a, b, c, d] = &self.m;
        a * d - b * c
    }

    pub fn trace(&self) -> Scalar {
        &self.m[0] + &self.m[3]
    }

    pub fn scale(&self, k: &Scalar) -> Self {
        Quat { m: self.m.clone().map(|x| k * x) }
    }

    /// Matrix-unit coordinates `(m11, m12, m21, m22)`.
    pub fn coords(&self) -> Vector {
        self.m.to_vec()
    }

    pub fn from_coords(c: &[Scalar]) -> Self {
        Quat::new(c[0].clone(), c[1].clone(), c[2].clone(), c[3].clone())
    }

    /// Coordinates in the basis `(1, i, j, k)`.
    pub fn ijk_coords(&self) -> [Scalar; 4] {
        let [m11, m12, m21, m22] = &self.m;
        [(m11 + m22).half(), (m12 - m21).half(), (m11 - m22).half(), -(m12 + m21).half()]
    }

    pub fn from_ijk(c: &[Scalar]) -> Self {
        let (a, b, cc, d) = (&c[0], &c[1], &c[2], &c[3]);
        Quat::new(a + cc, b - d, -(b + d), a - cc)
    }
}

impl<'a> Mul<&'a Quat> for &'a Quat {
    type Output = Quat;
    fn mul(self, rhs: &Quat) -> Quat {
        let [a, b, c, d] = &self.m;
        let [e, f, g, h] = &rhs.m;
        Quat::new(a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)
    }
}

impl<'a> Add<&'a Quat> for &'a Quat {
    type Output = Quat;
    fn add(self, rhs: &Quat) -> Quat {
        Quat { m: std::array::from_fn(|n| &self.m[n] + &rhs.m[n]) }
    }
}

impl<'a> Sub<&'a Quat> for &'a Quat {
    type Output = Quat;
    fn sub(self, rhs: &Quat) -> Quat {
        Quat { m: std::array::from_fn(|n| &self.m[n] - &rhs.m[n]) }
    }
}

impl Neg for &Quat {
    type Output = Quat;
    fn neg(self) -> Quat {
        Quat { m: std::array::from_fn(|n| -&self.m[n]) }
    }
}

impl fmt::Debug for Quat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = &self.m;
        write!(f, "[[{a}, {b}], [{c}, {d}]]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sample::Sampler;

    #[test]
    fn unit_products() {
        assert_eq!(&Quat::i() * &Quat::i(), -&Quat::one());
        assert_eq!(&Quat::j() * &Quat::j(), Quat::one());
        assert_eq!(&Quat::k() * &Quat::k(), Quat::one());
        assert_eq!(&Quat::i() * &Quat::j(), Quat::k());
        assert_eq!(&Quat::unit(1, 1) * &Quat::unit(1, 2), Quat::unit(1, 2));
    }

    #[test]
    fn conj_norm_trace() {
        let mut s = Sampler::new(3);
        for _ in 0..50 {
            let p = s.quat();
            assert_eq!(&p * &Quat::one(), p);
            assert_eq!(&p * &p.conj(), Quat::scalar(p.norm()));
            // Cayley–Hamilton
            let lhs = &(&(&p * &p) - &p.scale(&p.trace())) + &Quat::scalar(p.norm());
            assert!(lhs.is_zero());
            assert_eq!(Quat::from_ijk(&p.ijk_coords()), p);
        }
    }

    #[test]
    fn associative() {
        let mut s = Sampler::new(4);
        for _ in 0..50 {
            let (a, b, c) = (s.quat(), s.quat(), s.quat());
            assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        }
    }
}
