use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::atomic::{AtomicBool, Ordering};

use crate::composition::quat::Quat;
use crate::linalg::Vector;
use crate::scalar::Scalar;

static FAULT: AtomicBool = AtomicBool::new(false);

/// Corrupts the octonion product process-wide (negative-control hook for the
/// verification harness). Never enable this in a process that expects correct
/// answers.
#[doc(hidden)]
pub fn set_fault_injection(on: bool) {
    FAULT.store(on, Ordering::SeqCst);
}

/// Split octonion `q + r·v` built by Cayley–Dickson doubling of [`Quat`].
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Oct {
    pub q: Quat,
    pub r: Quat,
}

/// Display names of the `(1, i, j, k, v, iv, jv, kv)` basis.
pub const CD_NAMES: [&str; 8] = ["1", "i", "j", "k", "v", "i*v", "j*v", "k*v"];

impl Oct {
    pub fn new(q: Quat, r: Quat) -> Self {
        Oct { q, r }
    }

    pub fn zero() -> Self {
        Oct::default()
    }

    pub fn one() -> Self {
        Oct::scalar(Scalar::one())
    }

    pub fn scalar(k: Scalar) -> Self {
        Oct::new(Quat::scalar(k), Quat::zero())
    }

    pub fn from_quat(q: Quat) -> Self {
        Oct::new(q, Quat::zero())
    }

    pub fn v() -> Self {
        Oct::new(Quat::zero(), Quat::one())
    }

    pub fn is_zero(&self) -> bool {
        self.q.is_zero() && self.r.is_zero()
    }

    pub fn conj(&self) -> Self {
        Oct::new(self.q.conj(), -&self.r)
    }

    pub fn norm(&self) -> Scalar {
        self.q.norm() - self.r.norm()
    }

    pub fn trace(&self) -> Scalar {
        self.q.trace()
    }

    /// Polarized norm `t(a, b) = n(a + b) - n(a) - n(b)`.
    pub fn tform(&self, other: &Oct) -> Scalar {
        (self + other).norm() - self.norm() - other.norm()
    }

    pub fn scale(&self, k: &Scalar) -> Self {
        Oct::new(self.q.scale(k), self.r.scale(k))
    }

    /// `Some(λ)` when the element is `λ·1`.
    pub fn as_scalar(&self) -> Option<Scalar> {
        let [a, b, c, d] = &self.q.m;
        (b.is_zero() && c.is_zero() && a == d && self.r.is_zero()).then(|| a.clone())
    }

    /// Eight coordinates `(q11, q12, q21, q22, r11, r12, r21, r22)`.
    pub fn coords(&self) -> Vector {
        self.q.m.iter().chain(&self.r.m).cloned().collect()
    }

    pub fn from_coords(c: &[Scalar]) -> Self {
        Oct::new(Quat::from_coords(&c[..4]), Quat::from_coords(&c[4..8]))
    }

    /// Coordinates in the basis [`CD_NAMES`].
    pub fn cd_coords(&self) -> Vector {
        self.q.ijk_coords().into_iter().chain(self.r.ijk_coords()).collect()
    }

    pub fn from_cd_coords(c: &[Scalar]) -> Self {
        Oct::new(Quat::from_ijk(&c[..4]), Quat::from_ijk(&c[4..8]))
    }

    /// Basis element `CD_NAMES[n]`.
    pub fn cd_basis(n: usize) -> Self {
        let mut c = vec![Scalar::zero(); 8];
        c[n] = Scalar::one();
        Oct::from_cd_coords(&c)
    }
}

impl<'a> Mul<&'a Oct> for &'a Oct {
    type Output = Oct;
    /// `(q + rv)(s + tv) = (qs + t̄r) + (tq + r s̄)v`.
    fn mul(self, rhs: &Oct) -> Oct {
        let (q, r) = (&self.q, &self.r);
        let (s, t) = (&rhs.q, &rhs.r);
        let mut twist = &t.conj() * r;
        if FAULT.load(Ordering::Relaxed) {
            twist = -&twist;
        }
        Oct::new(&(q * s) + &twist, &(t * q) + &(r * &s.conj()))
    }
}

impl Mul<Oct> for Oct {
    type Output = Oct;
    fn mul(self, rhs: Oct) -> Oct {
        &self * &rhs
    }
}

impl<'a> Add<&'a Oct> for &'a Oct {
    type Output = Oct;
    fn add(self, rhs: &Oct) -> Oct {
        Oct::new(&self.q + &rhs.q, &self.r + &rhs.r)
    }
}

impl Add<Oct> for Oct {
    type Output = Oct;
    fn add(self, rhs: Oct) -> Oct {
        &self + &rhs
    }
}

impl<'a> Sub<&'a Oct> for &'a Oct {
    type Output = Oct;
    fn sub(self, rhs: &Oct) -> Oct {
        Oct::new(&self.q - &rhs.q, &self.r - &rhs.r)
    }
}

impl Sub<Oct> for Oct {
    type Output = Oct;
    fn sub(self, rhs: Oct) -> Oct {
        &self - &rhs
    }
}

impl Neg for &Oct {
    type Output = Oct;
    fn neg(self) -> Oct {
        Oct::new(-&self.q, -&self.r)
    }
}

impl Neg for Oct {
    type Output = Oct;
    fn neg(self) -> Oct {
        -&self
    }
}

impl fmt::Debug for Oct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Oct({:?} + {:?}v)", self.q, self.r)
    }
}
