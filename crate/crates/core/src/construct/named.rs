use std::fmt;
use std::str::FromStr;

use crate::albert::{embed_offdiag, AlbertElem, DIM};
use crate::composition::vdbs::{x, y};
use crate::composition::{vdbs_build, Oct, Quat};
use crate::error::{AlgebraError, Result};
use crate::linalg::{span_of, Subspace, Vector};
use crate::structure::Subalgebra;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Name {
    /// Matrices with all entries in Q: the canonical H(Q₃).
    A,
    /// Entries `xv, yv` in the first row and `z` in position (2,3), `x, y, z ∈ Q`.
    S,
    /// `Φ(E11 - E22) ⊕ J12`.
    C,
    Diag,
    /// Six-dimensional subalgebra of O spanned by `x0, x1, x2, y0, y1, y3`.
    SextonionO,
    /// Hermitian matrices over that six-dimensional subalgebra.
    HS3,
}

impl Name {
    pub const ALL: [Name; 6] = [Name::A, Name::S, Name::C, Name::Diag, Name::SextonionO, Name::HS3];

    pub fn expected_dim(self) -> usize {
        match self {
            Name::A | Name::S => 15,
            Name::C => 9,
            Name::Diag => 3,
            Name::SextonionO => 6,
            Name::HS3 => 21,
        }
    }

    fn label(self) -> &'static str {
        match self {
            Name::A => "A",
            Name::S => "S",
            Name::C => "C",
            Name::Diag => "diag",
            Name::SextonionO => "sextonion_O",
            Name::HS3 => "H_S3",
        }
    }
}

impl fmt::Display for Name {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for Name {
    type Err = AlgebraError;
    fn from_str(s: &str) -> Result<Self> {
        Name::ALL.into_iter().find(|n| n.label() == s).ok_or_else(|| AlgebraError::UnknownName(s.to_string()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NamedAlgebra {
    Albert(Subalgebra),
    /// Subspace of the 8 octonion coordinates.
    Octonion(Subspace),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NamedSubalgebra {
    pub name: Name,
    pub algebra: NamedAlgebra,
}

impl NamedSubalgebra {
    pub fn dim(&self) -> usize {
        match &self.algebra {
            NamedAlgebra::Albert(a) => a.dim(),
            NamedAlgebra::Octonion(s) => s.dim(),
        }
    }

    pub fn albert(&self) -> Option<&Subalgebra> {
        match &self.algebra {
            NamedAlgebra::Albert(a) => Some(a),
            NamedAlgebra::Octonion(_) => None,
        }
    }
}

/// `(E_ab, 0)` for the four matrix units.
pub fn quat_units() -> Vec<Quat> {
    vec![Quat::unit(1, 1), Quat::unit(1, 2), Quat::unit(2, 1), Quat::unit(2, 2)]
}

fn diagonal() -> Vec<AlbertElem> {
    (1..=3).map(AlbertElem::e).collect()
}

fn emb(o: &Oct, i: usize, j: usize) -> AlbertElem {
    embed_offdiag(o, i, j).expect("valid slot")
}

/// Spanning set of `A`: diagonal plus Q in every off-diagonal slot.
pub fn a_generators() -> Vec<AlbertElem> {
    let mut g = diagonal();
    for (i, j) in [(1, 2), (1, 3), (2, 3)] {
        g.extend(quat_units().into_iter().map(|q| emb(&Oct::from_quat(q), i, j)));
    }
    g
}

/// Spanning set of `S`: diagonal, `Qv` at [12] and [13], `Q` at [23].
pub fn s_generators() -> Vec<AlbertElem> {
    let mut g = diagonal();
    for (i, j) in [(1, 2), (1, 3)] {
        g.extend(quat_units().into_iter().map(|q| emb(&Oct::new(Quat::zero(), q), i, j)));
    }
    g.extend(quat_units().into_iter().map(|q| emb(&Oct::from_quat(q), 2, 3)));
    g
}

pub fn c_generators() -> Vec<AlbertElem> {
    let mut g = vec![&AlbertElem::e(1) - &AlbertElem::e(2)];
    for n in 0..8 {
        let mut c = vec![crate::scalar::Scalar::zero(); 8];
        c[n] = crate::scalar::Scalar::one();
        g.push(emb(&Oct::from_coords(&c), 1, 2));
    }
    g
}

/// Standard-basis indices spanning the six-dimensional subalgebra.
pub const SEXTONION_BASIS: [usize; 6] = [x(0), x(1), x(2), y(0), y(1), y(3)];
/// The index-pattern alternative with `y2` in place of `y3`.
pub const SEXTONION_ALTERNATIVE: [usize; 6] = [x(0), x(1), x(2), y(0), y(1), y(2)];

pub fn sextonion_elements(indices: &[usize]) -> Result<Vec<Oct>> {
    let basis = vdbs_build()?;
    Ok(indices.iter().map(|&n| basis.get(n).clone()).collect())
}

pub fn octonion_span(elements: &[Oct]) -> Result<Subspace> {
    span_of(&elements.iter().map(Oct::coords).collect::<Vec<Vector>>(), 8)
}

/// Whether an 8-coordinate subspace is closed under the octonion product.
pub fn octonion_closed(space: &Subspace) -> Result<bool> {
    let basis = space.basis();
    for u in basis {
        for v in basis {
            let p = &Oct::from_coords(u) * &Oct::from_coords(v);
            if !space.contains(&p.coords())? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Hermitian 3×3 matrices with diagonal in Φ and off-diagonal entries in `entries`.
pub fn hermitian_over(entries: &Subspace) -> Result<Subspace> {
    let mut g = diagonal();
    for (i, j) in [(1, 2), (1, 3), (2, 3)] {
        g.extend(entries.basis().iter().map(|c| emb(&Oct::from_coords(c), i, j)));
    }
    span_of(&g.iter().map(AlbertElem::coords).collect::<Vec<_>>(), DIM)
}

fn albert_span(gens: &[AlbertElem]) -> Result<Subspace> {
    span_of(&gens.iter().map(AlbertElem::coords).collect::<Vec<_>>(), DIM)
}

/// Builds a named object and checks it is closed with its expected dimension.
pub fn build_named(name: Name) -> Result<NamedSubalgebra> {
    let algebra = match name {
        Name::A => NamedAlgebra::Albert(Subalgebra::from_space(albert_span(&a_generators())?)?),
        Name::S => NamedAlgebra::Albert(Subalgebra::from_space(albert_span(&s_generators())?)?),
        Name::C => NamedAlgebra::Albert(Subalgebra::from_space(albert_span(&c_generators())?)?),
        Name::Diag => NamedAlgebra::Albert(Subalgebra::from_space(albert_span(&diagonal())?)?),
        Name::SextonionO => NamedAlgebra::Octonion(octonion_span(&sextonion_elements(&SEXTONION_BASIS)?)?),
        Name::HS3 => {
            let s = octonion_span(&sextonion_elements(&SEXTONION_BASIS)?)?;
            NamedAlgebra::Albert(Subalgebra::from_space(hermitian_over(&s)?)?)
        }
    };
    let closed = match (&algebra, name) {
        // C is the vector part of the algebra of the form Q; closure is
        // checked on C ⊕ Φ(E11 + E22).
        (NamedAlgebra::Albert(_), Name::C) => {
            let mut g = c_generators();
            g.push(&AlbertElem::e(1) + &AlbertElem::e(2));
            Subalgebra::from_space(albert_span(&g)?)?.closed
        }
        (NamedAlgebra::Albert(a), _) => a.closed,
        (NamedAlgebra::Octonion(s), _) => octonion_closed(s)?,
    };
    if !closed {
        return Err(AlgebraError::Construction(format!("{name} is not closed")));
    }
    let built = NamedSubalgebra { name, algebra };
    if built.dim() != name.expected_dim() {
        return Err(AlgebraError::Construction(format!(
            "{name} has dimension {}, expected {}",
            built.dim(),
            name.expected_dim()
        )));
    }
    Ok(built)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dims_and_closure() {
        for name in Name::ALL {
            let built = build_named(name).unwrap();
            assert_eq!(built.dim(), name.expected_dim(), "{name}");
        }
        assert_eq!(build_named(Name::A).unwrap().dim(), 15);
        assert_eq!(build_named(Name::S).unwrap().dim(), 15);
        let c = build_named(Name::C).unwrap();
        assert_eq!(c.dim(), 9);
        assert!(!c.albert().unwrap().closed);
    }

    #[test]
    fn names_parse() {
        for name in Name::ALL {
            assert_eq!(name.to_string().parse::<Name>().unwrap(), name);
        }
        assert!(matches!("T".parse::<Name>(), Err(AlgebraError::UnknownName(_))));
    }

    #[test]
    fn sextonion_variants() {
        let primary = octonion_span(&sextonion_elements(&SEXTONION_BASIS).unwrap()).unwrap();
        let alt = octonion_span(&sextonion_elements(&SEXTONION_ALTERNATIVE).unwrap()).unwrap();
        assert!(octonion_closed(&primary).unwrap());
        assert!(!octonion_closed(&alt).unwrap());
    }
}
