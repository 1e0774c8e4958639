//! Subalgebras and ideals of H₃(O), trace radicals, centroids and a simplicity
//! certificate.
//!
//! Intrinsic computations run on [`FinAlgebra`], a finite-dimensional
//! commutative algebra given by structure constants and a symmetric bilinear
//! trace form. A [`Subalgebra`] of H₃(O) converts to one by reading products in
//! its echelon basis; quotients are produced directly as `FinAlgebra`s.

use serde::Serialize;

use crate::albert::{self, AlbertElem, LinOp27, DIM};
use crate::error::{AlgebraError, Result};
use crate::linalg::{self, nullspace, span_of, Matrix, Subspace, Vector};
use crate::scalar::Scalar;

/// Subspace of H₃(O) coordinates, flagged once closure under ∘ is verified.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subalgebra {
    pub space: Subspace,
    pub closed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StructureReport {
    pub dim: usize,
    pub radical_dim: usize,
    pub centroid_dim: usize,
    pub simple: bool,
    pub detail: String,
}

/// Finite-dimensional commutative algebra with structure constants
/// `e_i∘e_j = Σ_k consts[i][j][k]·e_k` and a trace form `gram`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinAlgebra {
    dim: usize,
    consts: Vec<Vec<Vector>>,
    gram: Matrix,
}

fn is_closed(space: &Subspace) -> Result<bool> {
    let basis = space.basis();
    for (n, u) in basis.iter().enumerate() {
        for v in &basis[n..] {
            if !space.contains(&albert::jordan_coords(u, v))? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

impl Subalgebra {
    /// Wraps a subspace, recording whether it is closed under ∘.
    pub fn from_space(space: Subspace) -> Result<Self> {
        let closed = is_closed(&space)?;
        Ok(Subalgebra { space, closed })
    }

    pub fn whole() -> Self {
        Subalgebra { space: Subspace::full(DIM), closed: true }
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn basis_elems(&self) -> Vec<AlbertElem> {
        self.space.basis().iter().map(|v| AlbertElem::from_coords(v).expect("27 coordinates")).collect()
    }

    pub fn contains(&self, x: &AlbertElem) -> bool {
        self.space.contains(&x.coords()).expect("27 coordinates")
    }

    /// Intrinsic structure constants in the echelon basis, with the generic
    /// trace form `gen_trace(x∘y)` of the ambient algebra.
    pub fn intrinsic(&self) -> Result<FinAlgebra> {
        let basis = self.space.basis();
        let n = basis.len();
        let mut consts = vec![vec![Vec::new(); n]; n];
        let mut gram = Matrix::zeros(n, n);
        for i in 0..n {
            for j in i..n {
                let prod = albert::jordan_coords(&basis[i], &basis[j]);
                let c = self.space.coords_of(&prod)?.ok_or(AlgebraError::NotInSubalgebra)?;
                let t: Scalar = prod[..3].iter().cloned().sum();
                gram.set(i, j, t.clone());
                gram.set(j, i, t);
                consts[j][i] = c.clone();
                consts[i][j] = c;
            }
        }
        Ok(FinAlgebra { dim: n, consts, gram })
    }

    /// Image under a linear operator.
    pub fn image(&self, op: &LinOp27) -> Result<Subalgebra> {
        Subalgebra::from_space(self.space.map(|v| op.apply_coords(v))?)
    }
}

/// Smallest ∘-closed subspace containing `gens`.
pub fn subalgebra_closure(gens: &[AlbertElem]) -> Result<Subalgebra> {
    let mut space = span_of(&gens.iter().map(AlbertElem::coords).collect::<Vec<_>>(), DIM)?;
    // Echelon rows change as the space grows, so each pass redoes all pairs.
    loop {
        let basis = space.basis().to_vec();
        let mut grew = false;
        for (n, u) in basis.iter().enumerate() {
            for v in &basis[n..] {
                grew |= space.insert(&albert::jordan_coords(u, v))?;
            }
        }
        if !grew {
            return Ok(Subalgebra { space, closed: true });
        }
    }
}

/// Smallest subspace `I ⊆ A` containing `gens` with `A∘I ⊆ I`.
pub fn ideal_closure(a: &Subalgebra, gens: &[AlbertElem]) -> Result<Subspace> {
    for g in gens {
        if !a.contains(g) {
            return Err(AlgebraError::NotInSubalgebra);
        }
    }
    let mut ideal = span_of(&gens.iter().map(AlbertElem::coords).collect::<Vec<_>>(), DIM)?;
    let mut frontier: Vec<Vector> = ideal.basis().to_vec();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for u in &frontier {
            for b in a.space.basis() {
                let p = albert::jordan_coords(b, u);
                if ideal.insert(&p)? {
                    next.push(p);
                }
            }
        }
        frontier = next;
    }
    Ok(ideal)
}

fn map_to_ambient(a: &Subalgebra, intrinsic: &Subspace) -> Result<Subspace> {
    span_of(&intrinsic.basis().iter().map(|c| a.space.combine(c)).collect::<Vec<_>>(), DIM)
}

fn from_ambient(a: &Subalgebra, s: &Subspace) -> Result<Subspace> {
    let n = a.dim();
    let coords = s
        .basis()
        .iter()
        .map(|v| a.space.coords_of(v)?.ok_or(AlgebraError::NotInSubalgebra))
        .collect::<Result<Vec<_>>>()?;
    span_of(&coords, n)
}

/// Kernel of the generic trace form restricted to `A`, verified to be a nil
/// ideal. Returned in ambient coordinates.
pub fn trace_radical(a: &Subalgebra) -> Result<Subspace> {
    let r = a.intrinsic()?.radical()?;
    map_to_ambient(a, &r)
}

pub fn centroid_dim(a: &Subalgebra) -> Result<usize> {
    a.intrinsic()?.centroid_dim()
}

pub fn is_simple(a: &Subalgebra) -> Result<StructureReport> {
    a.intrinsic()?.structure_report()
}

/// `A / I` for an ideal `I` given in ambient coordinates.
pub fn quotient_algebra(a: &Subalgebra, ideal: &Subspace) -> Result<FinAlgebra> {
    a.intrinsic()?.quotient(&from_ambient(a, ideal)?)
}

/// Idealizer `{x : x∘z ∈ Φz}` of the line through `z`.
pub fn idealizer(z: &AlbertElem) -> Result<Subalgebra> {
    if z.is_zero() {
        return Err(AlgebraError::ZeroElement);
    }
    let zc = z.coords();
    // Unknowns (x, λ) with x∘z - λz = 0.
    let mut columns: Vec<Vector> = (0..DIM).map(|n| albert::jordan_coords(&linalg::unit_vector(DIM, n), &zc)).collect();
    columns.push(zc.iter().map(|x| -x).collect());
    let system = Matrix::from_columns(DIM, &columns)?;
    let kernel = nullspace(&system.rows(), DIM + 1)?;
    let xs: Vec<Vector> = kernel.iter().map(|k| k[..DIM].to_vec()).collect();
    Subalgebra::from_space(span_of(&xs, DIM)?)
}

impl FinAlgebra {
    /// Builds an algebra from explicit structure constants and trace form.
    pub fn new(consts: Vec<Vec<Vector>>, gram: Matrix) -> Result<Self> {
        let dim = consts.len();
        if gram.nrows() != dim || gram.ncols() != dim {
            return Err(AlgebraError::DimensionMismatch { expected: dim, got: gram.nrows() });
        }
        for row in &consts {
            if row.len() != dim || row.iter().any(|v| v.len() != dim) {
                return Err(AlgebraError::DimensionMismatch { expected: dim, got: row.len() });
            }
        }
        Ok(FinAlgebra { dim, consts, gram })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn consts(&self) -> &[Vec<Vector>] {
        &self.consts
    }

    pub fn gram(&self) -> &Matrix {
        &self.gram
    }

    pub fn mul(&self, u: &[Scalar], v: &[Scalar]) -> Vector {
        let mut out = linalg::zero_vector(self.dim);
        for (i, ui) in u.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (j, vj) in v.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
                linalg::axpy(&mut out, &(ui * vj), &self.consts[i][j]);
            }
        }
        out
    }

    pub fn form(&self, u: &[Scalar], v: &[Scalar]) -> Scalar {
        linalg::dot(u, &self.gram.mul_vec(v).expect("dimension"))
    }

    fn basis(&self) -> Vec<Vector> {
        (0..self.dim).map(|i| linalg::unit_vector(self.dim, i)).collect()
    }

    /// Smallest ideal containing `gens` (intrinsic coordinates).
    pub fn ideal_closure(&self, gens: &[Vector]) -> Result<Subspace> {
        let mut ideal = span_of(gens, self.dim)?;
        let mut frontier = ideal.basis().to_vec();
        let basis = self.basis();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for u in &frontier {
                for b in &basis {
                    let p = self.mul(b, u);
                    if ideal.insert(&p)? {
                        next.push(p);
                    }
                }
            }
            frontier = next;
        }
        Ok(ideal)
    }

    /// Kernel of the trace form, verified to be an ideal whose right-normed
    /// product chain `R, R∘R, (R∘R)∘R, …` reaches zero.
    pub fn radical(&self) -> Result<Subspace> {
        let kernel = span_of(&nullspace(&self.gram.rows(), self.dim)?, self.dim)?;
        if self.ideal_closure(kernel.basis())? != kernel {
            return Err(AlgebraError::RadicalVerification("trace-form kernel is not an ideal".into()));
        }
        let mut power = kernel.clone();
        for _ in 0..=self.dim {
            if power.dim() == 0 {
                return Ok(kernel);
            }
            let products: Vec<Vector> = power
                .basis()
                .iter()
                .flat_map(|p| kernel.basis().iter().map(move |r| (p, r)))
                .map(|(p, r)| self.mul(p, r))
                .collect();
            let next = span_of(&products, self.dim)?;
            if next == power {
                break;
            }
            power = next;
        }
        Err(AlgebraError::RadicalVerification("trace-form kernel is not nil".into()))
    }

    /// Identity element, if the algebra is unital.
    pub fn identity(&self) -> Result<Option<Vector>> {
        let n = self.dim;
        // e∘b_j = b_j for all j: unknowns (e, s) with Σ e_m C[m][j] - s·b_j = 0.
        let mut rows = Vec::new();
        for j in 0..n {
            for l in 0..n {
                let mut row: Vector = (0..n).map(|m| self.consts[m][j][l].clone()).collect();
                row.push(if l == j { Scalar::from(-1) } else { Scalar::zero() });
                rows.push(row);
            }
        }
        let kernel = nullspace(&rows, n + 1)?;
        let Some(sol) = kernel.iter().find(|k| !k[n].is_zero()) else {
            return Ok(None);
        };
        let inv = sol[n].inv()?;
        Ok(Some(sol[..n].iter().map(|x| x * &inv).collect()))
    }

    /// Dimension of the centroid: linear `T` with `T(a∘b) = T(a)∘b`.
    pub fn centroid_dim(&self) -> Result<usize> {
        let n = self.dim;
        if n == 0 {
            return Ok(0);
        }
        let c = &self.consts;
        if self.identity()?.is_some() {
            // T = L_c with c = T(1); condition c∘(a∘b) = (c∘a)∘b.
            let mut eqs = Subspace::zero(n);
            for i in 0..n {
                for j in i..n {
                    for l in 0..n {
                        let row: Vector = (0..n)
                            .map(|m| {
                                let lhs: Scalar =
                                    (0..n).filter(|&k| !c[i][j][k].is_zero()).map(|k| &c[i][j][k] * &c[m][k][l]).sum();
                                let rhs: Scalar =
                                    (0..n).filter(|&p| !c[m][i][p].is_zero()).map(|p| &c[m][i][p] * &c[p][j][l]).sum();
                                lhs - rhs
                            })
                            .collect();
                        eqs.insert(&row)?;
                    }
                    if eqs.dim() == n - 1 {
                        return Ok(1);
                    }
                }
            }
            return Ok(n - eqs.dim());
        }
        // General case: unknown matrix t[l][m] with T(e_m) = Σ_l t[l][m] e_l.
        let unknowns = n * n;
        let mut eqs = Subspace::zero(unknowns);
        for i in 0..n {
            for j in 0..n {
                for l in 0..n {
                    let mut row = linalg::zero_vector(unknowns);
                    for k in 0..n {
                        row[l * n + k] += &c[i][j][k];
                    }
                    for p in 0..n {
                        row[p * n + i] -= &c[p][j][l];
                    }
                    eqs.insert(&row)?;
                }
            }
        }
        Ok(unknowns - eqs.dim())
    }

    /// Simple iff the trace radical is zero and the centroid is one-dimensional.
    pub fn structure_report(&self) -> Result<StructureReport> {
        let radical_dim = self.radical()?.dim();
        let centroid_dim = self.centroid_dim()?;
        let simple = self.dim >= 1 && radical_dim == 0 && centroid_dim == 1;
        let detail = format!(
            "dim {}, trace radical dim {}, centroid dim {} -> {}",
            self.dim,
            radical_dim,
            centroid_dim,
            if simple { "simple" } else { "not simple" }
        );
        Ok(StructureReport { dim: self.dim, radical_dim, centroid_dim, simple, detail })
    }

    /// `A / I` on the complement spanned by the non-pivot coordinates of `I`.
    /// The quotient carries the form `tr L_{x∘y}`.
    pub fn quotient(&self, ideal: &Subspace) -> Result<FinAlgebra> {
        if ideal.ambient_dim() != self.dim {
            return Err(AlgebraError::DimensionMismatch { expected: self.dim, got: ideal.ambient_dim() });
        }
        if &self.ideal_closure(ideal.basis())? != ideal {
            return Err(AlgebraError::NotAnIdeal);
        }
        let keep: Vec<usize> = (0..self.dim).filter(|c| !ideal.pivots().contains(c)).collect();
        let m = keep.len();
        let mut consts = vec![vec![Vec::new(); m]; m];
        for (a, &i) in keep.iter().enumerate() {
            for (b, &j) in keep.iter().enumerate() {
                let reduced = ideal.reduce(&self.consts[i][j]);
                consts[a][b] = keep.iter().map(|&k| reduced[k].clone()).collect();
            }
        }
        let mut q = FinAlgebra { dim: m, consts, gram: Matrix::zeros(m, m) };
        q.gram = q.multiplication_trace_form();
        Ok(q)
    }

    /// `(x, y) ↦ tr L_{x∘y}`.
    pub fn multiplication_trace_form(&self) -> Matrix {
        let n = self.dim;
        // tr L_{e_k} = Σ_j consts[k][j][j]
        let traces: Vec<Scalar> = (0..n).map(|k| (0..n).map(|j| self.consts[k][j][j].clone()).sum()).collect();
        let mut g = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                g.set(i, j, linalg::dot(&self.consts[i][j], &traces));
            }
        }
        g
    }

    /// Restriction of the trace form to the complement basis used by
    /// [`FinAlgebra::quotient`].
    pub fn complement_gram(&self, ideal: &Subspace) -> Matrix {
        let keep: Vec<usize> = (0..self.dim).filter(|c| !ideal.pivots().contains(c)).collect();
        let mut g = Matrix::zeros(keep.len(), keep.len());
        for (a, &i) in keep.iter().enumerate() {
            for (b, &j) in keep.iter().enumerate() {
                g.set(a, b, self.gram.get(i, j).clone());
            }
        }
        g
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::albert::embed_offdiag;
    use crate::composition::Oct;

    fn e(i: usize) -> AlbertElem {
        AlbertElem::e(i)
    }

    #[test]
    fn closures() {
        assert_eq!(subalgebra_closure(&[e(1), e(2)]).unwrap().dim(), 2);
        assert_eq!(subalgebra_closure(&[]).unwrap().dim(), 0);
        let x = embed_offdiag(&Oct::one(), 1, 2).unwrap();
        // E11, 1[12] generate E11, E22 and the [12] line.
        assert_eq!(subalgebra_closure(&[e(1), x]).unwrap().dim(), 3);
    }

    #[test]
    fn ideals() {
        let whole = Subalgebra::whole();
        assert_eq!(ideal_closure(&whole, &[e(1)]).unwrap().dim(), 27);
        assert_eq!(ideal_closure(&whole, &[AlbertElem::zero()]).unwrap().dim(), 0);
        let diag2 = subalgebra_closure(&[e(1), e(2)]).unwrap();
        assert_eq!(ideal_closure(&diag2, &[e(1)]).unwrap().dim(), 1);
        assert_eq!(ideal_closure(&diag2, &[e(3)]), Err(AlgebraError::NotInSubalgebra));
    }

    #[test]
    fn small_structure() {
        let e1 = subalgebra_closure(&[e(1)]).unwrap();
        assert_eq!(centroid_dim(&e1).unwrap(), 1);
        let d2 = subalgebra_closure(&[e(1), e(2)]).unwrap();
        assert_eq!(centroid_dim(&d2).unwrap(), 2);
        let d3 = subalgebra_closure(&[e(1), e(2), e(3)]).unwrap();
        let report = is_simple(&d3).unwrap();
        assert!(!report.simple);
        assert_eq!(report.centroid_dim, 3);
        assert_eq!(report.radical_dim, 0);
    }

    #[test]
    fn general_centroid_path_agrees() {
        // Non-unital: the null line spanned by n[12] with n(n) = 0 squares to zero.
        let n = Oct::new(crate::composition::Quat::one(), crate::composition::Quat::i());
        let z = embed_offdiag(&n, 1, 2).unwrap();
        let line = subalgebra_closure(&[z]).unwrap();
        assert_eq!(line.dim(), 1);
        let fin = line.intrinsic().unwrap();
        assert_eq!(fin.identity().unwrap(), None);
        assert_eq!(fin.centroid_dim().unwrap(), 1);
        // Its trace radical is the whole line.
        assert_eq!(fin.radical().unwrap().dim(), 1);
    }

    #[test]
    fn whole_algebra_is_simple() {
        let report = is_simple(&Subalgebra::whole()).unwrap();
        assert!(report.simple, "{report:?}");
        assert_eq!(report.dim, 27);
        assert_eq!(trace_radical(&Subalgebra::whole()).unwrap().dim(), 0);
    }

    #[test]
    fn idealizers() {
        assert_eq!(idealizer(&AlbertElem::identity()).unwrap().dim(), 1);
        let i11 = idealizer(&e(1)).unwrap();
        assert_eq!(i11.dim(), 11);
        assert!(i11.closed);
        assert_eq!(idealizer(&AlbertElem::zero()), Err(AlgebraError::ZeroElement));
    }

    #[test]
    fn quotients() {
        let d2 = subalgebra_closure(&[e(1), e(2)]).unwrap();
        let fin = d2.intrinsic().unwrap();
        let q0 = fin.quotient(&Subspace::zero(2)).unwrap();
        assert_eq!(q0.dim(), 2);
        assert_eq!(q0.consts(), fin.consts());
        let i1 = ideal_closure(&d2, &[e(1)]).unwrap();
        let q1 = quotient_algebra(&d2, &i1).unwrap();
        assert_eq!(q1.dim(), 1);
        assert!(q1.structure_report().unwrap().simple);
        let d3 = subalgebra_closure(&[e(1), e(2), e(3)]).unwrap().intrinsic().unwrap();
        let not_ideal = span_of(&[linalg::add(&linalg::unit_vector(3, 0), &linalg::unit_vector(3, 1))], 3).unwrap();
        assert_eq!(d3.quotient(&not_ideal), Err(AlgebraError::NotAnIdeal));
    }
}
