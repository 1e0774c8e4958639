//! Exact linear algebra over [`Scalar`]: reduced row-echelon subspaces, ranks,
//! kernels, sums and intersections.

use crate::error::{AlgebraError, Result};
use crate::scalar::Scalar;

pub type Vector = Vec<Scalar>;

pub fn zero_vector(n: usize) -> Vector {
    vec![Scalar::zero(); n]
}

pub fn unit_vector(n: usize, i: usize) -> Vector {
    let mut v = zero_vector(n);
    v[i] = Scalar::one();
    v
}

pub fn is_zero_vector(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

/// `acc += k·v`.
pub fn axpy(acc: &mut [Scalar], k: &Scalar, v: &[Scalar]) {
    if k.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            *a += &(k * x);
        }
    }
}

pub fn scale(k: &Scalar, v: &[Scalar]) -> Vector {
    v.iter().map(|x| k * x).collect()
}

pub fn add(u: &[Scalar], v: &[Scalar]) -> Vector {
    u.iter().zip(v).map(|(a, b)| a + b).collect()
}

pub fn sub(u: &[Scalar], v: &[Scalar]) -> Vector {
    u.iter().zip(v).map(|(a, b)| a - b).collect()
}

pub fn dot(u: &[Scalar], v: &[Scalar]) -> Scalar {
    u.iter().zip(v).filter(|(a, b)| !a.is_zero() && !b.is_zero()).map(|(a, b)| a * b).sum()
}

fn check_len(v: &[Scalar], n: usize) -> Result<()> {
    if v.len() != n {
        return Err(AlgebraError::DimensionMismatch { expected: n, got: v.len() });
    }
    Ok(())
}

/// Subspace of `Φ^n` held as its unique reduced row-echelon basis.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subspace {
    ambient_dim: usize,
    rows: Vec<Vector>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Subspace { ambient_dim, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            rows: (0..ambient_dim).map(|i| unit_vector(ambient_dim, i)).collect(),
            pivots: (0..ambient_dim).collect(),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn basis(&self) -> &[Vector] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Remainder of `v` after clearing every pivot column.
    pub fn reduce(&self, v: &[Scalar]) -> Vector {
        let mut out = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if !out[p].is_zero() {
                let k = -out[p].clone();
                axpy(&mut out, &k, row);
            }
        }
        out
    }

    /// Adds `v` to the spanning set; returns whether the dimension grew.
    pub fn insert(&mut self, v: &[Scalar]) -> Result<bool> {
        check_len(v, self.ambient_dim)?;
        let mut r = self.reduce(v);
        let Some(p) = r.iter().position(|x| !x.is_zero()) else {
            return Ok(false);
        };
        let inv = r[p].inv()?;
        r = scale(&inv, &r);
        for row in &mut self.rows {
            if !row[p].is_zero() {
                let k = -row[p].clone();
                axpy(row, &k, &r);
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, r);
        Ok(true)
    }

    pub fn contains(&self, v: &[Scalar]) -> Result<bool> {
        check_len(v, self.ambient_dim)?;
        Ok(is_zero_vector(&self.reduce(v)))
    }

    /// Coefficients of `v` in the echelon basis, or `None` if `v` is outside.
    pub fn coords_of(&self, v: &[Scalar]) -> Result<Option<Vector>> {
        if !self.contains(v)? {
            return Ok(None);
        }
        Ok(Some(self.pivots.iter().map(|&p| v[p].clone()).collect()))
    }

    /// Inverse of [`Subspace::coords_of`].
    pub fn combine(&self, coeffs: &[Scalar]) -> Vector {
        let mut out = zero_vector(self.ambient_dim);
        for (c, row) in coeffs.iter().zip(&self.rows) {
            axpy(&mut out, c, row);
        }
        out
    }

    pub fn contains_subspace(&self, other: &Subspace) -> Result<bool> {
        for v in other.basis() {
            if !self.contains(v)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Image under a linear map given on vectors.
    pub fn map<F: FnMut(&[Scalar]) -> Vector>(&self, f: F) -> Result<Subspace> {
        let images: Vec<Vector> = self.rows.iter().map(|r| r.as_slice()).map(f).collect();
        span_of(&images, self.ambient_dim)
    }
}

/// Reduced row-echelon basis of the span of `vectors`.
pub fn span_of(vectors: &[Vector], ambient_dim: usize) -> Result<Subspace> {
    let mut s = Subspace::zero(ambient_dim);
    for v in vectors {
        s.insert(v)?;
    }
    Ok(s)
}

/// Basis of `{x : Σ_j rows[i][j]·x[j] = 0 for all i}`.
pub fn nullspace(rows: &[Vector], ncols: usize) -> Result<Vec<Vector>> {
    let echelon = span_of(rows, ncols)?;
    let pivots = echelon.pivots();
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut x = unit_vector(ncols, free);
        for (row, &p) in echelon.basis().iter().zip(pivots) {
            x[p] = -row[free].clone();
        }
        basis.push(x);
    }
    Ok(basis)
}

pub fn rank(rows: &[Vector], ncols: usize) -> Result<usize> {
    Ok(span_of(rows, ncols)?.dim())
}

/// Returns `(U + V, U ∩ V)`.
pub fn subspace_sum_intersect(u: &Subspace, v: &Subspace) -> Result<(Subspace, Subspace)> {
    let n = u.ambient_dim();
    if v.ambient_dim() != n {
        return Err(AlgebraError::DimensionMismatch { expected: n, got: v.ambient_dim() });
    }
    let mut sum = u.clone();
    for b in v.basis() {
        sum.insert(b)?;
    }
    // Kernel of (α, β) ↦ Σ αᵢuᵢ - Σ βⱼvⱼ: one equation per ambient coordinate.
    let (du, dv) = (u.dim(), v.dim());
    let equations: Vec<Vector> = (0..n)
        .map(|c| u.basis().iter().map(|r| r[c].clone()).chain(v.basis().iter().map(|r| -&r[c])).collect())
        .collect();
    let kernel = nullspace(&equations, du + dv)?;
    let meets: Vec<Vector> = kernel.iter().map(|k| u.combine(&k[..du])).collect();
    Ok((sum, span_of(&meets, n)?))
}

/// Dense matrix over [`Scalar`], row-major.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix {
    nrows: usize,
    ncols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        Matrix { nrows, ncols, data: vec![Scalar::zero(); nrows * ncols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = Scalar::one();
        }
        m
    }

    pub fn from_columns(nrows: usize, columns: &[Vector]) -> Result<Self> {
        let mut m = Matrix::zeros(nrows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            check_len(col, nrows)?;
            for (i, x) in col.iter().enumerate() {
                m.data[i * m.ncols + j] = x.clone();
            }
        }
        Ok(m)
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.ncols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: Scalar) {
        self.data[i * self.ncols + j] = x;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.ncols..(i + 1) * self.ncols]
    }

    pub fn rows(&self) -> Vec<Vector> {
        (0..self.nrows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Result<Vector> {
        check_len(v, self.ncols)?;
        Ok((0..self.nrows).map(|i| dot(self.row(i), v)).collect())
    }

    pub fn mul(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.ncols != rhs.nrows {
            return Err(AlgebraError::DimensionMismatch { expected: self.ncols, got: rhs.nrows });
        }
        let mut out = Matrix::zeros(self.nrows, rhs.ncols);
        for i in 0..self.nrows {
            for k in 0..self.ncols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.ncols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        out.data[i * rhs.ncols + j] += &(a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn scaled(&self, k: &Scalar) -> Matrix {
        Matrix { nrows: self.nrows, ncols: self.ncols, data: scale(k, &self.data) }
    }

    pub fn rank(&self) -> usize {
        rank(&self.rows(), self.ncols).expect("rows have matrix width")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sample::Sampler;
    use proptest::prelude::*;

    fn v(xs: &[i64]) -> Vector {
        xs.iter().map(|&x| Scalar::from(x)).collect()
    }

    /// Fraction-free (Bareiss-style) elimination choosing pivots from the last
    /// column and bottom row first. Independent of the RREF routine above.
    fn rank_oracle(rows: &[Vector], ncols: usize) -> usize {
        let mut m: Vec<Vector> = rows.to_vec();
        let mut rank = 0;
        let mut prev = Scalar::one();
        for col in (0..ncols).rev() {
            let Some(p) = (rank..m.len()).rev().find(|&r| !m[r][col].is_zero()) else {
                continue;
            };
            m.swap(rank, p);
            for r in rank + 1..m.len() {
                for c in 0..ncols {
                    let num = &(&m[rank][col] * &m[r][c]) - &(&m[r][col] * &m[rank][c]);
                    m[r][c] = num.checked_div(&prev).unwrap();
                }
            }
            prev = m[rank][col].clone();
            rank += 1;
        }
        rank
    }

    #[test]
    fn spans() {
        assert_eq!(span_of(&[v(&[1, 0]), v(&[0, 1])], 2).unwrap().dim(), 2);
        let s = span_of(&[v(&[1, 1]), v(&[2, 2])], 2).unwrap();
        assert_eq!(s.dim(), 1);
        assert_eq!(s.basis(), &[v(&[1, 1])]);
        assert!(matches!(span_of(&[v(&[1, 0, 0])], 2), Err(AlgebraError::DimensionMismatch { expected: 2, got: 3 })));
    }

    #[test]
    fn rank_matches_oracle_on_mixed_spaces() {
        let mut s = Sampler::new(11);
        let u: Vec<Vector> = (0..15).map(|_| s.vector(27)).collect();
        let w: Vec<Vector> = (0..15).map(|_| s.vector(27)).collect();
        // 30 random vectors drawn from span(u) and span(w).
        let mut picks = Vec::new();
        for k in 0..30 {
            let src = if k % 2 == 0 { &u } else { &w };
            let mut acc = zero_vector(27);
            for b in src {
                axpy(&mut acc, &s.scalar(), b);
            }
            picks.push(acc);
        }
        let r = rank(&picks, 27).unwrap();
        assert_eq!(r, rank_oracle(&picks, 27));
        // Identical canonical basis regardless of insertion order.
        let mut reversed = picks.clone();
        reversed.reverse();
        assert_eq!(span_of(&picks, 27).unwrap(), span_of(&reversed, 27).unwrap());
    }

    #[test]
    fn sum_and_intersection() {
        let x = span_of(&[v(&[1, 0])], 2).unwrap();
        let y = span_of(&[v(&[0, 1])], 2).unwrap();
        let (s, i) = subspace_sum_intersect(&x, &y).unwrap();
        assert_eq!((s.dim(), i.dim()), (2, 0));
        let (s, i) = subspace_sum_intersect(&x, &x).unwrap();
        assert_eq!((s, i), (x.clone(), x.clone()));
        let z = Subspace::zero(3);
        assert!(subspace_sum_intersect(&x, &z).is_err());
    }

    #[test]
    fn membership() {
        let y = span_of(&[v(&[0, 1])], 2).unwrap();
        assert!(y.contains(&v(&[0, 0])).unwrap());
        assert!(Subspace::zero(2).contains(&v(&[0, 0])).unwrap());
        assert!(!y.contains(&v(&[1, 0])).unwrap());
        assert!(y.contains(&v(&[1])).is_err());
    }

    #[test]
    fn nullspace_solves() {
        let rows = vec![v(&[1, 2, 3]), v(&[2, 4, 6])];
        let k = nullspace(&rows, 3).unwrap();
        assert_eq!(k.len(), 2);
        for x in &k {
            for r in &rows {
                assert!(dot(r, x).is_zero());
            }
        }
    }

    fn arb_vectors() -> impl Strategy<Value = (Vec<Vec<i64>>, Vec<Vec<i64>>)> {
        let vecs = prop::collection::vec(prop::collection::vec(-2i64..=2, 6), 0..6);
        (vecs.clone(), vecs)
    }

    fn to_vectors(xs: &[Vec<i64>]) -> Vec<Vector> {
        xs.iter().map(|r| v(r)).collect()
    }

    proptest! {
        #[test]
        fn rank_nullity_for_sum_and_intersection((a, b) in arb_vectors()) {
            let u = span_of(&to_vectors(&a), 6).unwrap();
            let w = span_of(&to_vectors(&b), 6).unwrap();
            let (s, i) = subspace_sum_intersect(&u, &w).unwrap();
            prop_assert_eq!(s.dim() + i.dim(), u.dim() + w.dim());
            prop_assert!(s.contains_subspace(&u).unwrap() && s.contains_subspace(&w).unwrap());
            prop_assert!(u.contains_subspace(&i).unwrap() && w.contains_subspace(&i).unwrap());
        }

        #[test]
        fn echelon_invariants((a, _b) in arb_vectors()) {
            let u = span_of(&to_vectors(&a), 6).unwrap();
            prop_assert_eq!(span_of(u.basis(), 6).unwrap(), u.clone());
            prop_assert!(u.pivots().windows(2).all(|w| w[0] < w[1]));
            for (row, &p) in u.basis().iter().zip(u.pivots()) {
                prop_assert!(row[p].is_one());
                prop_assert!(row[..p].iter().all(Scalar::is_zero));
                for other in u.basis() {
                    if other != row {
                        prop_assert!(other[p].is_zero());
                    }
                }
            }
            prop_assert_eq!(u.dim(), rank_oracle(&to_vectors(&a), 6));
        }
    }
}
