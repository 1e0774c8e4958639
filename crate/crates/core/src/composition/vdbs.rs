//! The standard basis `{x0..x3, y0..y3}` of the split octonions.
//!
//! Defining relations (indices of `x_i`, `y_i` for `i ≥ 1` are read mod 3 on
//! `{1, 2, 3}`):
//!
//! ```text
//! x0 x_i = x_i,  y0 y_i = y_i            (0 ≤ i ≤ 3)
//! x_i y_i = -x0, x_i x_{i+1} = y_{i+2}, y_i y_{i+1} = x_{i+2}   (1 ≤ i ≤ 3)
//! ```
//!
//! The full 8×8 table is completed by applying the involution
//! `x0 ↔ y0, x_i ↦ -x_i, y_i ↦ -y_i` (an anti-automorphism, so `ab = c`
//! gives `σ(b)σ(a) = σ(c)`); every product not reached this way is zero.

use serde::Serialize;

use crate::composition::oct::Oct;
use crate::composition::quat::Quat;
use crate::error::{AlgebraError, Result};
use crate::linalg::{rank, Vector};
use crate::scalar::Scalar;

pub const NAMES: [&str; 8] = ["x0", "x1", "x2", "x3", "y0", "y1", "y2", "y3"];

/// Index of `x_i` in the basis order.
pub const fn x(i: usize) -> usize {
    i
}

/// Index of `y_i` in the basis order.
pub const fn y(i: usize) -> usize {
    4 + i
}

/// Cyclic successor on `{1, 2, 3}`.
fn succ(i: usize, k: usize) -> usize {
    (i - 1 + k) % 3 + 1
}

/// Signed basis image of the involution.
fn involution(n: usize) -> (usize, i64) {
    match n {
        0 => (y(0), 1),
        4 => (x(0), 1),
        _ => (n, -1),
    }
}

/// Structure constants as sparse `(index, coefficient)` lists.
pub type RelationTable = [[Vec<(usize, i64)>; 8]; 8];

/// The completed multiplication table of the standard basis, built from the
/// defining relations alone. Fails if the involution images contradict a
/// defining relation.
pub fn relation_table() -> Result<RelationTable> {
    let mut generators: Vec<(usize, usize, usize, i64)> = Vec::new();
    for i in 0..=3 {
        generators.push((x(0), x(i), x(i), 1));
        generators.push((y(0), y(i), y(i), 1));
    }
    for i in 1..=3 {
        generators.push((x(i), y(i), x(0), -1));
        generators.push((x(i), x(succ(i, 1)), y(succ(i, 2)), 1));
        generators.push((y(i), y(succ(i, 1)), x(succ(i, 2)), 1));
    }
    let mut table: RelationTable = Default::default();
    let mut put = |a: usize, b: usize, entry: Vec<(usize, i64)>| {
        if !table[a][b].is_empty() && table[a][b] != entry {
            return Err(AlgebraError::Construction(format!(
                "involution gives {}·{} two different values",
                NAMES[a], NAMES[b]
            )));
        }
        table[a][b] = entry;
        Ok(())
    };
    for (a, b, c, k) in generators {
        put(a, b, vec![(c, k)])?;
        let (sa, ka) = involution(a);
        let (sb, kb) = involution(b);
        let (sc, kc) = involution(c);
        // σ(b)σ(a) = σ(c)  ⇒  b'·a' = (kc / (ka·kb))·c'
        put(sb, sa, vec![(sc, k * kc * ka * kb)])?;
    }
    Ok(table)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StandardBasis {
    /// `x0, x1, x2, x3, y0, y1, y2, y3` inside the Cayley–Dickson model.
    pub elements: [Oct; 8],
    pub table: RelationTable,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VdbsReport {
    pub independent: bool,
    /// `(i, j)` with `e_i e_j` differing from the table.
    pub failures: Vec<(usize, usize)>,
    pub products_checked: usize,
}

impl VdbsReport {
    pub fn passed(&self) -> bool {
        self.independent && self.failures.is_empty()
    }
}

impl StandardBasis {
    pub fn get(&self, n: usize) -> &Oct {
        &self.elements[n]
    }

    /// Model element for a table entry.
    pub fn expand(&self, entry: &[(usize, i64)]) -> Oct {
        entry.iter().fold(Oct::zero(), |acc, &(c, k)| &acc + &self.elements[c].scale(&Scalar::from(k)))
    }

    /// Coordinates of an octonion in this basis.
    pub fn coords_of(&self, x: &Oct) -> Result<Vector> {
        let columns: Vec<Vector> = self.elements.iter().map(Oct::coords).collect();
        let m = crate::linalg::Matrix::from_columns(8, &columns)?;
        // Solve m·c = x by reducing the augmented system.
        let target = x.coords();
        let rows: Vec<Vector> = (0..8)
            .map(|r| {
                let mut row = m.row(r).to_vec();
                row.push(-&target[r]);
                row
            })
            .collect();
        let kernel = crate::linalg::nullspace(&rows, 9)?;
        let sol = kernel
            .iter()
            .find(|k| !k[8].is_zero())
            .ok_or_else(|| AlgebraError::Construction("element outside the span of the basis".into()))?;
        let inv = sol[8].inv()?;
        Ok(sol[..8].iter().map(|c| c * &inv).collect())
    }
}

/// Checks all 64 products against the completed table and the independence of
/// the eight elements.
pub fn vdbs_verify(basis: &StandardBasis) -> VdbsReport {
    let coords: Vec<Vector> = basis.elements.iter().map(Oct::coords).collect();
    let independent = rank(&coords, 8).map(|r| r == 8).unwrap_or(false);
    let reference = &basis.table;
    let mut failures = Vec::new();
    for i in 0..8 {
        for j in 0..8 {
            let got = &basis.elements[i] * &basis.elements[j];
            if got != basis.expand(&reference[i][j]) {
                failures.push((i, j));
            }
        }
    }
    VdbsReport { independent, failures, products_checked: 64 }
}

fn passes(elements: &[Oct; 8], table: &RelationTable) -> bool {
    let basis = StandardBasis { elements: elements.clone(), table: table.clone() };
    (0..8).all(|i| (0..8).all(|j| &basis.elements[i] * &basis.elements[j] == basis.expand(&table[i][j])))
}

/// Builds the standard basis in the Cayley–Dickson model.
///
/// `x0 = E11`, `y0 = E22`; the remaining six elements are chosen by an
/// exhaustive, deterministic search over signed candidates
/// `±E12, ±E21, ±E_ab·v`, and the result is verified before it is returned.
pub fn vdbs_build() -> Result<StandardBasis> {
    let table = relation_table()?;
    let x0 = Oct::from_quat(Quat::unit(1, 1));
    let y0 = Oct::from_quat(Quat::unit(2, 2));
    let candidates: Vec<Oct> = vec![
        Oct::from_quat(Quat::unit(1, 2)),
        Oct::from_quat(Quat::unit(2, 1)),
        Oct::new(Quat::zero(), Quat::unit(1, 1)),
        Oct::new(Quat::zero(), Quat::unit(1, 2)),
        Oct::new(Quat::zero(), Quat::unit(2, 1)),
        Oct::new(Quat::zero(), Quat::unit(2, 2)),
    ];
    // x_i must satisfy x0 x_i = x_i, y_i must satisfy y0 y_i = y_i.
    let x_side: Vec<&Oct> = candidates.iter().filter(|c| &(&x0 * c) == *c).collect();
    let y_side: Vec<&Oct> = candidates.iter().filter(|c| &(&y0 * c) == *c).collect();
    if x_side.len() != 3 || y_side.len() != 3 {
        return Err(AlgebraError::Construction("candidate split is not 3 + 3".into()));
    }
    for xp in permutations3() {
        for yp in permutations3() {
            for signs in 0u32..64 {
                let sign = |n: usize, o: &Oct| if signs >> n & 1 == 1 { -o } else { o.clone() };
                let elements = [
                    x0.clone(),
                    sign(0, x_side[xp[0]]),
                    sign(1, x_side[xp[1]]),
                    sign(2, x_side[xp[2]]),
                    y0.clone(),
                    sign(3, y_side[yp[0]]),
                    sign(4, y_side[yp[1]]),
                    sign(5, y_side[yp[2]]),
                ];
                if passes(&elements, &table) {
                    let basis = StandardBasis { elements, table };
                    let report = vdbs_verify(&basis);
                    if !report.passed() {
                        return Err(AlgebraError::Construction(format!("{report:?}")));
                    }
                    return Ok(basis);
                }
            }
        }
    }
    Err(AlgebraError::Construction("no signed matrix-unit assignment satisfies the relations".into()))
}

fn permutations3() -> [[usize; 3]; 6] {
    [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]]
}

/// First basis triple `(a, b, c)` with `(ab)c ≠ a(bc)`.
pub fn nonassociative_witness(basis: &StandardBasis) -> Option<(usize, usize, usize)> {
    let e = &basis.elements;
    for a in 0..8 {
        for b in 0..8 {
            for c in 0..8 {
                if &(&e[a] * &e[b]) * &e[c] != &e[a] * &(&e[b] * &e[c]) {
                    return Some((a, b, c));
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_shape() {
        let t = relation_table().unwrap();
        let nonzero = t.iter().flatten().filter(|e| !e.is_empty()).count();
        assert_eq!(nonzero, 32);
        assert_eq!(t[x(1)][y(1)], vec![(x(0), -1)]);
        assert_eq!(t[y(1)][x(1)], vec![(y(0), -1)]);
        assert_eq!(t[x(2)][x(1)], vec![(y(3), -1)]);
        assert_eq!(t[x(3)][y(0)], vec![(x(3), 1)]);
        assert!(t[y(0)][x(2)].is_empty());
    }

    #[test]
    fn builds_and_verifies() {
        let b = vdbs_build().unwrap();
        assert!(vdbs_verify(&b).passed());
        assert_eq!(b.get(x(0)) + b.get(y(0)), Oct::one());
        assert_eq!(b.get(x(1)) * b.get(y(1)), -b.get(x(0)));
        assert_eq!(b.get(x(1)) * b.get(x(2)), b.get(y(3)).clone());
        // involution action
        assert_eq!(b.get(x(0)).conj(), b.get(y(0)).clone());
        for i in 1..=3 {
            assert_eq!(b.get(x(i)).conj(), -b.get(x(i)));
            assert_eq!(b.get(y(i)).conj(), -b.get(y(i)));
        }
        assert_eq!(vdbs_build().unwrap(), b);
    }

    #[test]
    fn corrupted_bases_fail() {
        let b = vdbs_build().unwrap();
        let mut swapped = b.clone();
        swapped.elements.swap(x(1), x(2));
        assert!(!vdbs_verify(&swapped).failures.is_empty());

        let mut doubled = b.clone();
        doubled.elements = b.elements.clone().map(|e| e.scale(&Scalar::from(2)));
        let report = vdbs_verify(&doubled);
        assert!(report.failures.contains(&(x(0), x(0))));
    }

    #[test]
    fn coordinates_in_basis() {
        let b = vdbs_build().unwrap();
        for n in 0..8 {
            let c = b.coords_of(b.get(n)).unwrap();
            assert_eq!(c, crate::linalg::unit_vector(8, n));
        }
        let one = b.coords_of(&Oct::one()).unwrap();
        assert_eq!(one, crate::linalg::add(&crate::linalg::unit_vector(8, 0), &crate::linalg::unit_vector(8, 4)));
    }

    #[test]
    fn is_nonassociative() {
        let b = vdbs_build().unwrap();
        assert!(nonassociative_witness(&b).is_some());
    }
}
