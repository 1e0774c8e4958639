//! The 27-dimensional Jordan algebra H₃(O) of Hermitian 3×3 octonion matrices.
//!
//! Global coordinates: `(d1, d2, d3, o12[8], o13[8], o23[8])`, each octonion
//! contributing `(q11, q12, q21, q22, r11, r12, r21, r22)`.

use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::sync::OnceLock;

use crate::composition::Oct;
use crate::error::{AlgebraError, Result};
use crate::linalg::{self, Matrix, Vector};
use crate::sample::Sampler;
use crate::scalar::Scalar;

pub const DIM: usize = 27;

/// Off-diagonal slots in storage order.
pub const SLOTS: [(usize, usize); 3] = [(1, 2), (1, 3), (2, 3)];

const COORD_NAMES: [&str; 8] = ["q11", "q12", "q21", "q22", "r11", "r12", "r21", "r22"];

fn slot_of(i: usize, j: usize) -> Result<usize> {
    SLOTS.iter().position(|&s| s == (i, j)).ok_or(AlgebraError::Index { i, j })
}

/// Hermitian matrix `Σ dᵢEᵢᵢ + o12[12] + o13[13] + o23[23]`, where
/// `x[ij] = xEᵢⱼ + x̄Eⱼᵢ`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct AlbertElem {
    pub d: [Scalar; 3],
    pub o: [Oct; 3],
}

impl AlbertElem {
    pub fn new(d: [Scalar; 3], o: [Oct; 3]) -> Self {
        AlbertElem { d, o }
    }

    pub fn zero() -> Self {
        AlbertElem::default()
    }

    pub fn identity() -> Self {
        AlbertElem::diag(1, 1, 1)
    }

    pub fn diag(a: i64, b: i64, c: i64) -> Self {
        AlbertElem::new([a.into(), b.into(), c.into()], Default::default())
    }

    /// Diagonal matrix unit `E_ii`, `i ∈ {1, 2, 3}`.
    pub fn e(i: usize) -> Self {
        let mut x = AlbertElem::zero();
        x.d[i - 1] = Scalar::one();
        x
    }

    pub fn is_zero(&self) -> bool {
        self.d.iter().all(Scalar::is_zero) && self.o.iter().all(Oct::is_zero)
    }

    /// Octonion entry at `(i, j)`, 1-based, as a full matrix would show it.
    pub fn entry(&self, i: usize, j: usize) -> Oct {
        match i.cmp(&j) {
            std::cmp::Ordering::Equal => Oct::scalar(self.d[i - 1].clone()),
            std::cmp::Ordering::Less => self.o[slot_of(i, j).unwrap()].clone(),
            std::cmp::Ordering::Greater => self.o[slot_of(j, i).unwrap()].conj(),
        }
    }

    pub fn scale(&self, k: &Scalar) -> Self {
        AlbertElem::new(self.d.clone().map(|x| k * x), self.o.clone().map(|x| x.scale(k)))
    }

    pub fn coords(&self) -> Vector {
        let mut c = self.d.to_vec();
        for o in &self.o {
            c.extend(o.coords());
        }
        c
    }

    pub fn from_coords(c: &[Scalar]) -> Result<Self> {
        if c.len() != DIM {
            return Err(AlgebraError::DimensionMismatch { expected: DIM, got: c.len() });
        }
        Ok(AlbertElem::new(
            [c[0].clone(), c[1].clone(), c[2].clone()],
            std::array::from_fn(|s| Oct::from_coords(&c[3 + 8 * s..11 + 8 * s])),
        ))
    }

    /// The `n`-th coordinate basis element.
    pub fn basis(n: usize) -> Self {
        AlbertElem::from_coords(&linalg::unit_vector(DIM, n)).expect("27 coordinates")
    }

    pub fn basis_name(n: usize) -> String {
        match n {
            0..=2 => format!("E{0}{0}", n + 1),
            _ => {
                let (i, j) = SLOTS[(n - 3) / 8];
                format!("{}[{i}{j}]", COORD_NAMES[(n - 3) % 8])
            }
        }
    }
}

/// `x[ij] = xEᵢⱼ + x̄Eⱼᵢ`.
pub fn embed_offdiag(x: &Oct, i: usize, j: usize) -> Result<AlbertElem> {
    let s = slot_of(i, j)?;
    let mut out = AlbertElem::zero();
    out.o[s] = x.clone();
    Ok(out)
}

fn full_matrix(x: &AlbertElem) -> [[Oct; 3]; 3] {
    std::array::from_fn(|i| std::array::from_fn(|j| x.entry(i + 1, j + 1)))
}

fn matmul(x: &[[Oct; 3]; 3], y: &[[Oct; 3]; 3]) -> [[Oct; 3]; 3] {
    std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            (0..3).fold(Oct::zero(), |acc, k| {
                if x[i][k].is_zero() || y[k][j].is_zero() {
                    acc
                } else {
                    &acc + &(&x[i][k] * &y[k][j])
                }
            })
        })
    })
}

/// `X∘Y = ½(XY + YX)` from the entrywise octonion matrix products. Errors if
/// the symmetrized matrix is not Hermitian, which would mean a broken kernel.
pub fn try_jordan_mul(x: &AlbertElem, y: &AlbertElem) -> Result<AlbertElem> {
    let (mx, my) = (full_matrix(x), full_matrix(y));
    let (xy, yx) = (matmul(&mx, &my), matmul(&my, &mx));
    let sym: [[Oct; 3]; 3] =
        std::array::from_fn(|i| std::array::from_fn(|j| (&xy[i][j] + &yx[i][j]).scale(&Scalar::frac(1, 2))));
    let mut out = AlbertElem::zero();
    for i in 0..3 {
        out.d[i] = sym[i][i].as_scalar().ok_or(AlgebraError::NotHermitian(i + 1, i + 1))?;
    }
    for (s, &(i, j)) in SLOTS.iter().enumerate() {
        if sym[j - 1][i - 1] != sym[i - 1][j - 1].conj() {
            return Err(AlgebraError::NotHermitian(j, i));
        }
        out.o[s] = sym[i - 1][j - 1].clone();
    }
    Ok(out)
}

pub fn jordan_mul(x: &AlbertElem, y: &AlbertElem) -> AlbertElem {
    try_jordan_mul(x, y).unwrap_or_else(|e| panic!("internal error in the Jordan product: {e}"))
}

pub fn square(x: &AlbertElem) -> AlbertElem {
    jordan_mul(x, x)
}

pub fn gen_trace(x: &AlbertElem) -> Scalar {
    x.d.iter().cloned().sum()
}

pub fn trace_form(x: &AlbertElem, y: &AlbertElem) -> Scalar {
    gen_trace(&jordan_mul(x, y))
}

/// `Q(x) = ½·t(x²)`.
pub fn qform_q(x: &AlbertElem) -> Scalar {
    gen_trace(&square(x)).half()
}

/// `X U_W = 2(X∘W)∘W - X∘W²`.
pub fn u_operator(x: &AlbertElem, w: &AlbertElem) -> AlbertElem {
    let xw = jordan_mul(x, w);
    &jordan_mul(&xw, w).scale(&Scalar::from(2)) - &jordan_mul(x, &square(w))
}

/// Component of `X` in the Peirce space `J_ij` of the frame `{E11, E22, E33}`.
pub fn peirce_project(x: &AlbertElem, i: usize, j: usize) -> Result<AlbertElem> {
    if !(1..=3).contains(&i) || !(1..=3).contains(&j) || i > j {
        return Err(AlgebraError::Index { i, j });
    }
    let mut out = AlbertElem::zero();
    if i == j {
        out.d[i - 1] = x.d[i - 1].clone();
    } else {
        let s = slot_of(i, j)?;
        out.o[s] = x.o[s].clone();
    }
    Ok(out)
}

/// Sparse products of the 27 coordinate basis elements, computed once per
/// process from [`jordan_mul`].
fn basis_products() -> &'static Vec<Vec<Vec<(usize, Scalar)>>> {
    static TABLE: OnceLock<Vec<Vec<Vec<(usize, Scalar)>>>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let basis: Vec<AlbertElem> = (0..DIM).map(AlbertElem::basis).collect();
        let mut table = vec![vec![Vec::new(); DIM]; DIM];
        for a in 0..DIM {
            for b in a..DIM {
                let sparse: Vec<(usize, Scalar)> = jordan_mul(&basis[a], &basis[b])
                    .coords()
                    .into_iter()
                    .enumerate()
                    .filter(|(_, x)| !x.is_zero())
                    .collect();
                table[b][a] = sparse.clone();
                table[a][b] = sparse;
            }
        }
        table
    })
}

/// Jordan product on coordinate vectors via the cached structure constants.
pub fn jordan_coords(u: &[Scalar], v: &[Scalar]) -> Vector {
    let table = basis_products();
    let mut out = linalg::zero_vector(DIM);
    for (a, ua) in u.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
        for (b, vb) in v.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            let k = ua * vb;
            for (c, x) in &table[a][b] {
                out[*c] += &(&k * x);
            }
        }
    }
    out
}

/// Linear operator on H₃(O) as a 27×27 matrix acting on coordinate columns.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LinOp27(pub Matrix);

impl LinOp27 {
    pub fn identity() -> Self {
        LinOp27(Matrix::identity(DIM))
    }

    pub fn apply_coords(&self, v: &[Scalar]) -> Vector {
        self.0.mul_vec(v).expect("27 coordinates")
    }

    pub fn apply(&self, x: &AlbertElem) -> AlbertElem {
        AlbertElem::from_coords(&self.apply_coords(&x.coords())).expect("27 coordinates")
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &LinOp27) -> LinOp27 {
        LinOp27(next.0.mul(&self.0).expect("27×27"))
    }

    pub fn scaled(&self, k: &Scalar) -> LinOp27 {
        LinOp27(self.0.scaled(k))
    }

    pub fn rank(&self) -> usize {
        self.0.rank()
    }
}

const LINEARITY_PROBES: usize = 10;

/// Materializes a linear map, checking it on random combinations.
pub fn op_from_linear_action<F: Fn(&AlbertElem) -> AlbertElem>(f: F) -> Result<LinOp27> {
    let columns: Vec<Vector> = (0..DIM).map(|n| f(&AlbertElem::basis(n)).coords()).collect();
    let op = LinOp27(Matrix::from_columns(DIM, &columns)?);
    let mut sampler = Sampler::new(0x11AE);
    for probe in 0..LINEARITY_PROBES {
        let x = sampler.albert();
        if op.apply(&x) != f(&x) {
            return Err(AlgebraError::LinearityViolation(probe));
        }
    }
    Ok(op)
}

impl<'a> Add<&'a AlbertElem> for &'a AlbertElem {
    type Output = AlbertElem;
    fn add(self, rhs: &AlbertElem) -> AlbertElem {
        AlbertElem::new(
            std::array::from_fn(|n| &self.d[n] + &rhs.d[n]),
            std::array::from_fn(|n| &self.o[n] + &rhs.o[n]),
        )
    }
}

impl<'a> Sub<&'a AlbertElem> for &'a AlbertElem {
    type Output = AlbertElem;
    fn sub(self, rhs: &AlbertElem) -> AlbertElem {
        AlbertElem::new(
            std::array::from_fn(|n| &self.d[n] - &rhs.d[n]),
            std::array::from_fn(|n| &self.o[n] - &rhs.o[n]),
        )
    }
}

impl Neg for &AlbertElem {
    type Output = AlbertElem;
    fn neg(self) -> AlbertElem {
        AlbertElem::new(std::array::from_fn(|n| -&self.d[n]), std::array::from_fn(|n| -&self.o[n]))
    }
}

impl fmt::Debug for AlbertElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Albert(d = [{}, {}, {}], o12 = {:?}, o13 = {:?}, o23 = {:?})",
            self.d[0], self.d[1], self.d[2], self.o[0], self.o[1], self.o[2]
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::composition::Quat;

    fn emb(x: &Oct, i: usize, j: usize) -> AlbertElem {
        embed_offdiag(x, i, j).unwrap()
    }

    #[test]
    fn embedding() {
        let one12 = emb(&Oct::one(), 1, 2);
        let mut expected = linalg::zero_vector(DIM);
        expected[3] = Scalar::one();
        expected[6] = Scalar::one();
        assert_eq!(one12.coords(), expected);
        let mut s = Sampler::new(1);
        let (x, y) = (s.oct(), s.oct());
        assert_eq!(&emb(&x, 1, 2) + &emb(&y, 1, 2), emb(&(&x + &y), 1, 2));
        assert!(embed_offdiag(&x, 2, 1).is_err());
        assert!(embed_offdiag(&x, 1, 4).is_err());
    }

    #[test]
    fn null_block_squares() {
        let mut s = Sampler::new(2);
        for _ in 0..10 {
            let x0 = Oct::from_quat(s.quat());
            let a0 = emb(&(&x0 * &Oct::v()), 1, 2);
            let expected = (&AlbertElem::e(1) + &AlbertElem::e(2)).scale(&-x0.norm());
            assert_eq!(square(&a0), expected);
        }
    }

    #[test]
    fn small_products() {
        let e11 = AlbertElem::e(1);
        assert_eq!(jordan_mul(&e11, &e11), e11);
        let mut s = Sampler::new(3);
        let x = s.oct();
        assert_eq!(jordan_mul(&e11, &emb(&x, 1, 2)), emb(&x.scale(&Scalar::frac(1, 2)), 1, 2));
        assert!(jordan_mul(&AlbertElem::e(3), &emb(&x, 1, 2)).is_zero());
    }

    #[test]
    fn traces_and_q() {
        let (e1, e2) = (AlbertElem::e(1), AlbertElem::e(2));
        assert_eq!(trace_form(&e1, &e1), Scalar::one());
        assert!(trace_form(&e1, &e2).is_zero());
        let mut s = Sampler::new(4);
        for _ in 0..10 {
            let (x, y) = (s.oct(), s.oct());
            assert_eq!(trace_form(&emb(&x, 1, 2), &emb(&y, 1, 2)), x.tform(&y));
            assert_eq!(qform_q(&emb(&x, 1, 2)), x.norm());
            let (a, b, c) = (s.albert(), s.albert(), s.albert());
            assert_eq!(trace_form(&a, &b), trace_form(&b, &a));
            assert_eq!(trace_form(&jordan_mul(&a, &b), &c), trace_form(&a, &jordan_mul(&b, &c)));
        }
    }

    #[test]
    fn u_operators() {
        let mut s = Sampler::new(5);
        let x = s.albert();
        assert_eq!(u_operator(&x, &AlbertElem::identity()), x);
        let w = AlbertElem::diag(1, -1, 1);
        let z = emb(&Oct::from_quat(s.quat()), 2, 3);
        assert_eq!(u_operator(&z, &w), -&z);
        assert_eq!(u_operator(&AlbertElem::e(1), &w), AlbertElem::e(1));
    }

    #[test]
    fn peirce() {
        let e11 = AlbertElem::e(1);
        assert_eq!(peirce_project(&e11, 1, 1).unwrap(), e11);
        let x12 = emb(&Oct::new(Quat::i(), Quat::one()), 1, 2);
        assert_eq!(peirce_project(&x12, 1, 2).unwrap(), x12);
        assert!(peirce_project(&x12, 1, 1).unwrap().is_zero());
        assert!(peirce_project(&x12, 2, 1).is_err());
        assert!(peirce_project(&x12, 0, 1).is_err());
        let mut s = Sampler::new(6);
        for _ in 0..20 {
            let x = s.albert();
            let mut total = AlbertElem::zero();
            for i in 1..=3 {
                for j in i..=3 {
                    let p = peirce_project(&x, i, j).unwrap();
                    for k in 1..=3 {
                        let ek = jordan_mul(&AlbertElem::e(k), &p);
                        let expected = if i == j && k == i {
                            p.clone()
                        } else if i != j && (k == i || k == j) {
                            p.scale(&Scalar::frac(1, 2))
                        } else {
                            AlbertElem::zero()
                        };
                        assert_eq!(ek, expected);
                    }
                    total = &total + &p;
                }
            }
            assert_eq!(total, x);
        }
    }

    #[test]
    fn coordinate_round_trip_and_dimension() {
        let mut s = Sampler::new(7);
        for _ in 0..20 {
            let x = s.albert();
            assert_eq!(AlbertElem::from_coords(&x.coords()).unwrap(), x);
        }
        let basis: Vec<Vector> = (0..DIM).map(|n| AlbertElem::basis(n).coords()).collect();
        assert_eq!(linalg::rank(&basis, DIM).unwrap(), 27);
        assert_eq!(AlbertElem::basis_name(0), "E11");
        assert_eq!(AlbertElem::basis_name(26), "r22[23]");
    }

    #[test]
    fn operators_from_actions() {
        assert_eq!(op_from_linear_action(|x| x.clone()).unwrap(), LinOp27::identity());
        let id = AlbertElem::identity();
        assert_eq!(op_from_linear_action(|x| u_operator(x, &id)).unwrap(), LinOp27::identity());
        let w = AlbertElem::diag(1, -1, 1);
        let m = op_from_linear_action(|x| u_operator(x, &w)).unwrap();
        assert_eq!(m.then(&m), LinOp27::identity());
        let e11 = AlbertElem::e(1);
        assert!(matches!(op_from_linear_action(|x| &x.clone() + &e11), Err(AlgebraError::LinearityViolation(_))));
    }

    #[test]
    fn cached_products_agree() {
        let mut s = Sampler::new(8);
        for _ in 0..10 {
            let (a, b) = (s.albert(), s.albert());
            assert_eq!(jordan_coords(&a.coords(), &b.coords()), jordan_mul(&a, &b).coords());
        }
    }
}
