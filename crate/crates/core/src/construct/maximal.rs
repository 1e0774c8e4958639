//! Maximal-subalgebra data: the sextonion chain `S ⊂ O`, `H(S₃) ⊂ H₃(O)`,
//! idealizers of null lines, and the dimension count behind the uniqueness of
//! the `H(Q₃) + H(Q₃)` decomposition.

use serde::Serialize;

use crate::albert::{embed_offdiag, AlbertElem};
use crate::composition::vdbs::{vdbs_build, x, y, NAMES};
use crate::construct::named::{
    hermitian_over, octonion_closed, octonion_span, sextonion_elements, SEXTONION_ALTERNATIVE, SEXTONION_BASIS,
};
use crate::error::Result;
use crate::structure::{idealizer, is_simple, quotient_algebra, trace_radical, StructureReport, Subalgebra};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpanVariant {
    pub basis: Vec<String>,
    pub dim: usize,
    pub closed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SextonionReport {
    pub primary: SpanVariant,
    /// Tried only when the primary set is not closed.
    pub alternative: Option<SpanVariant>,
    /// Basis names of the variant used below.
    pub used: Vec<String>,
    pub hermitian_dim: usize,
    pub hermitian_closed: bool,
    pub radical_dim: usize,
    pub quotient: StructureReport,
    /// Rank of the generic trace form on the complement of the radical.
    pub complement_gram_rank: usize,
}

impl SextonionReport {
    pub fn passed(&self) -> bool {
        let oct_ok = self.primary.closed && self.primary.dim == 6
            || self.alternative.as_ref().is_some_and(|a| a.closed && a.dim == 6);
        oct_ok
            && self.hermitian_closed
            && self.hermitian_dim == 21
            && self.radical_dim == 6
            && self.quotient.dim == 15
            && self.quotient.simple
            && self.complement_gram_rank == 15
    }
}

fn span_variant(indices: &[usize]) -> Result<SpanVariant> {
    let space = octonion_span(&sextonion_elements(indices)?)?;
    Ok(SpanVariant {
        basis: indices.iter().map(|&n| NAMES[n].to_string()).collect(),
        dim: space.dim(),
        closed: octonion_closed(&space)?,
    })
}

pub fn sextonion_report() -> Result<SextonionReport> {
    let primary = span_variant(&SEXTONION_BASIS)?;
    let (alternative, indices) = if primary.closed {
        (None, SEXTONION_BASIS)
    } else {
        let alt = span_variant(&SEXTONION_ALTERNATIVE)?;
        let use_alt = alt.closed;
        (Some(alt), if use_alt { SEXTONION_ALTERNATIVE } else { SEXTONION_BASIS })
    };
    let entries = octonion_span(&sextonion_elements(&indices)?)?;
    let h = Subalgebra::from_space(hermitian_over(&entries)?)?;
    let radical = trace_radical(&h)?;
    let intrinsic = h.intrinsic()?;
    let local_radical = intrinsic.radical()?;
    let gram = intrinsic.complement_gram(&local_radical);
    let quotient = quotient_algebra(&h, &radical)?;
    Ok(SextonionReport {
        used: indices.iter().map(|&n| NAMES[n].to_string()).collect(),
        primary,
        alternative,
        hermitian_dim: h.dim(),
        hermitian_closed: h.closed,
        radical_dim: radical.dim(),
        quotient: quotient.structure_report()?,
        complement_gram_rank: gram.rank(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdealizerProbe {
    /// e.g. `x1[12]`.
    pub z: String,
    pub dim: usize,
    pub closed: bool,
    pub radical_dim: usize,
    pub quotient: StructureReport,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdealizerSearch {
    /// `idealizer(E11)`.
    pub primitive_idempotent: StructureReport,
    pub probes: Vec<IdealizerProbe>,
    /// Whether some probe has dimension 18.
    pub found_18: bool,
}

/// Idealizers of `Φz` for the null standard-basis vectors `x_i, y_i`
/// (`i = 1, 2, 3`) placed in each off-diagonal slot.
pub fn idealizer_search() -> Result<IdealizerSearch> {
    let basis = vdbs_build()?;
    let mut probes = Vec::new();
    for n in [x(1), x(2), x(3), y(1), y(2), y(3)] {
        for (i, j) in [(1, 2), (1, 3), (2, 3)] {
            let z = embed_offdiag(basis.get(n), i, j)?;
            let id = idealizer(&z)?;
            let radical = trace_radical(&id)?;
            let quotient = quotient_algebra(&id, &radical)?.structure_report()?;
            probes.push(IdealizerProbe {
                z: format!("{}[{i}{j}]", NAMES[n]),
                dim: id.dim(),
                closed: id.closed,
                radical_dim: radical.dim(),
                quotient,
            });
        }
    }
    let found_18 = probes.iter().any(|p| p.dim == 18 && p.closed);
    Ok(IdealizerSearch { primitive_idempotent: is_simple(&idealizer(&AlbertElem::e(1))?)?, probes, found_18 })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MaximalType {
    pub label: &'static str,
    pub dim: usize,
    /// Dimension of an explicit representative built here, if any.
    pub computed: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Bound {
    /// Type of the maximal subalgebra `M` covering a `J(f,1)` subalgebra.
    pub cover: &'static str,
    pub max_dim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SimpleType {
    pub label: &'static str,
    pub max_dim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TypePair {
    pub a: &'static str,
    pub b: &'static str,
    pub sum: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Theorem2Report {
    pub maximal_types: Vec<MaximalType>,
    pub cover_bounds: Vec<Bound>,
    /// Largest possible dimension of a `J(f,1)` subalgebra of H₃(O).
    pub jf1_bound: usize,
    pub simple_types: Vec<SimpleType>,
    /// Unordered pairs with `dim A + dim B ≥ 27`.
    pub surviving: Vec<TypePair>,
}

impl Theorem2Report {
    pub fn passed(&self) -> bool {
        self.surviving.len() == 1
            && self.surviving[0].a == "H(Q3)"
            && self.surviving[0].b == "H(Q3)"
            && self.maximal_types.iter().all(|t| t.computed.is_none_or(|c| c == t.dim))
    }
}

pub const MAXIMAL_TYPE_DIMS: [(&str, usize); 6] = [
    ("A(+), A division of degree 3", 9),
    ("H(A,*), second kind", 9),
    ("H(L3,J), L quaternion", 15),
    ("Phi e + J0(e)", 11),
    ("H(S3)", 21),
    ("J(Phi z)", 18),
];

pub const COVER_BOUNDS: [(&str, usize); 6] = [
    ("A(+), A division of degree 3", 9),
    ("H(A,*), second kind", 9),
    ("Phi e + J0(e)", 11),
    ("H(Q3)", 4),
    ("H(S3)", 4),
    ("J(Phi z)", 8),
];

/// Simple subalgebra types with their largest dimension in H₃(O); `J(f,1)`
/// takes the cover bound.
pub fn simple_types(jf1_bound: usize) -> Vec<SimpleType> {
    vec![
        SimpleType { label: "J(f,1)", max_dim: jf1_bound },
        SimpleType { label: "H(F3)", max_dim: 6 },
        SimpleType { label: "F3(+)", max_dim: 9 },
        SimpleType { label: "H(Q3)", max_dim: 15 },
    ]
}

/// Unordered pairs of types whose dimensions can add up to 27.
pub fn surviving_pairs(types: &[SimpleType]) -> Vec<TypePair> {
    let mut out = Vec::new();
    for (n, a) in types.iter().enumerate() {
        for b in &types[n..] {
            let sum = a.max_dim + b.max_dim;
            if sum >= 27 {
                out.push(TypePair { a: a.label, b: b.label, sum });
            }
        }
    }
    out
}

/// The dimension table, with types (3)-(6) also built and measured.
pub fn theorem2_report() -> Result<Theorem2Report> {
    let h_q3 = crate::construct::named::build_named(crate::construct::named::Name::A)?.dim();
    let idempotent = idealizer(&AlbertElem::e(1))?.dim();
    let h_s3 = sextonion_report()?.hermitian_dim;
    let null = idealizer(&embed_offdiag(vdbs_build()?.get(x(1)), 1, 2)?)?.dim();
    let computed = [None, None, Some(h_q3), Some(idempotent), Some(h_s3), Some(null)];
    let maximal_types = MAXIMAL_TYPE_DIMS
        .iter()
        .zip(computed)
        .map(|(&(label, dim), computed)| MaximalType { label, dim, computed })
        .collect();
    let cover_bounds: Vec<Bound> = COVER_BOUNDS.iter().map(|&(cover, max_dim)| Bound { cover, max_dim }).collect();
    let jf1_bound = cover_bounds.iter().map(|b| b.max_dim).max().unwrap_or(0);
    let types = simple_types(jf1_bound);
    let surviving = surviving_pairs(&types);
    Ok(Theorem2Report { maximal_types, cover_bounds, jf1_bound, simple_types: types, surviving })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pair_arithmetic() {
        let pairs = surviving_pairs(&simple_types(11));
        assert_eq!(pairs, vec![TypePair { a: "H(Q3)", b: "H(Q3)", sum: 30 }]);
        // A larger J(f,1) bound would admit a mixed pair.
        assert_eq!(surviving_pairs(&simple_types(12)).len(), 2);
    }

    #[test]
    fn idempotent_idealizer_is_semisimple() {
        let r = is_simple(&idealizer(&AlbertElem::e(1)).unwrap()).unwrap();
        assert_eq!(r.dim, 11);
        assert_eq!(r.radical_dim, 0);
        assert!(!r.simple);
    }
}
