//! Values computed once with this crate and frozen here.

use albert_core::composition::identities::check_identities;
use albert_core::composition::vdbs::{vdbs_build, vdbs_verify};
use albert_core::construct::example1::{resolve_normalization, verify_example1, verify_lemma1};
use albert_core::construct::maximal::{idealizer_search, sextonion_report, theorem2_report};
use albert_core::construct::named::{
    build_named, octonion_closed, octonion_span, sextonion_elements, Name, SEXTONION_ALTERNATIVE,
};
use albert_core::construct::oracles::{b_entry_audit, formula2_audit};
use albert_core::sample::DEFAULT_SEED;
use albert_core::structure::idealizer;
use albert_core::AlbertElem;

#[test]
fn identities_hold_on_default_seed() {
    let r = check_identities(1000, DEFAULT_SEED);
    assert!(r.passed());
    assert_eq!(r.tform_rank, 8);
}

#[test]
fn standard_basis_table() {
    let r = vdbs_verify(&vdbs_build().unwrap());
    assert!(r.passed());
    assert_eq!(r.products_checked, 64);
}

#[test]
fn lemma1_values() {
    let r = verify_lemma1(DEFAULT_SEED).unwrap();
    assert_eq!((r.dim, r.closed, r.ideal_from_e11_plus_e22_dim), (15, true, Some(15)));
    let s = r.structure.unwrap();
    assert_eq!((s.radical_dim, s.centroid_dim), (0, 1));
    assert_eq!(r.a0_failures, 0);
}

#[test]
fn normalization_values() {
    let n = resolve_normalization().unwrap();
    assert_eq!(n.chosen, Some(true));
    let q: Vec<(bool, &str)> = n.variants.iter().map(|v| (v.normalized, v.q_a.as_str())).collect();
    assert!(q.contains(&(false, "1/3")));
    assert!(q.contains(&(true, "1")));
}

#[test]
fn example1_ranks() {
    let r = verify_example1().unwrap();
    assert_eq!((r.sum_dim, r.intersection_dim), (27, 3));
    assert_eq!((r.control_sum_dim, r.control_intersection_dim), (23, 7));
    assert_eq!(r.b_dim, 15);
}

#[test]
fn oracle_discrepancies() {
    let f = formula2_audit(500, DEFAULT_SEED);
    assert!(f.accounted());
    assert_eq!(f.discrepancies, vec!["b23".to_string()]);
    let b = b_entry_audit(500, DEFAULT_SEED).unwrap();
    assert!(b.accounted());
    assert_eq!(b.discrepancies, vec!["b12".to_string(), "b13".to_string(), "b23".to_string()]);
}

#[test]
fn sextonion_values() {
    let r = sextonion_report().unwrap();
    assert!(r.passed());
    assert_eq!((r.primary.dim, r.hermitian_dim, r.radical_dim, r.quotient.dim), (6, 21, 6, 15));
    assert!(r.quotient.simple);
    let alt = octonion_span(&sextonion_elements(&SEXTONION_ALTERNATIVE).unwrap()).unwrap();
    assert!(!octonion_closed(&alt).unwrap());
}

#[test]
fn idealizer_values() {
    assert_eq!(idealizer(&AlbertElem::e(1)).unwrap().dim(), 11);
    let s = idealizer_search().unwrap();
    assert_eq!(s.probes.len(), 18);
    assert!(s.probes.iter().all(|p| p.dim == 18 && p.radical_dim == 9 && p.quotient.dim == 9));
}

#[test]
fn theorem2_values() {
    let r = theorem2_report().unwrap();
    assert!(r.passed());
    assert_eq!(r.jf1_bound, 11);
    let dims: Vec<usize> = r.maximal_types.iter().map(|t| t.dim).collect();
    assert_eq!(dims, vec![9, 9, 15, 11, 21, 18]);
    assert_eq!(r.surviving.len(), 1);
    assert_eq!(r.surviving[0].sum, 30);
}

#[test]
fn named_dims() {
    for name in Name::ALL {
        assert_eq!(build_named(name).unwrap().dim(), name.expected_dim(), "{name}");
    }
}
