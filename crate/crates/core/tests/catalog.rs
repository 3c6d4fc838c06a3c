mod common;

use common::span;
use leibalg::algebra::Kind;
use leibalg::catalog::{
    catalog, check_annotations, lookup, parse, random_algebra, serialize, CatalogError, CheckStatus, Recipe,
};
use leibalg::exact::rat;

#[test]
fn builtin_annotations_all_match() {
    for e in catalog() {
        let a = e.analysis();
        for c in check_annotations(&a) {
            assert_eq!(c.status, CheckStatus::Matches, "{} {}: {}", e.id, c.name, c.detail);
        }
    }
}

#[test]
fn base_changed_annotations_never_mismatch() {
    for e in catalog() {
        for seed in 0..3u64 {
            let changed = random_algebra(seed, &Recipe::BaseChange(e.clone())).unwrap();
            assert_eq!(changed.kind, e.kind);
            for c in check_annotations(&changed.analysis()) {
                assert_ne!(c.status, CheckStatus::Mismatch, "{} {}: {}", changed.id, c.name, c.detail);
            }
        }
    }
}

#[test]
fn serialisation_round_trips_and_is_deterministic() {
    for e in catalog() {
        let text = serialize(&e);
        assert_eq!(text, serialize(&e));
        let back = parse(&text).unwrap();
        assert_eq!(back, e);
        assert_eq!(serialize(&back), text);
    }
}

#[test]
fn cyclic4_table() {
    let e = lookup("cyclic4").unwrap();
    assert_eq!(e.constants.dim(), 4);
    assert_eq!(e.constants.nonzero_products().count(), 4);
    assert_eq!(e.kind, Kind::Right);
}

#[test]
fn zero_denominator_is_rejected() {
    let err = parse("leibalg v1 dim=2 kind=right\n1 1 -> 1:1/0\n").unwrap_err();
    assert!(matches!(err, CatalogError::Parse { line: 2, .. }), "{err}");
}

#[test]
fn failed_identity_is_rejected() {
    // [e1,e1] = e2 is not alternating
    let err = parse("leibalg v1 dim=2 kind=lie\n1 1 -> 2:1\n").unwrap_err();
    assert!(matches!(err, CatalogError::Validation { .. }), "{err}");
}

#[test]
fn cyclic_recipe_reproduces_cyclic4() {
    let tail = vec![rat(0), rat(0), rat(0), rat(1)];
    let e = random_algebra(0, &Recipe::Cyclic { n: 4, tail: Some(tail) }).unwrap();
    assert_eq!(e.constants, lookup("cyclic4").unwrap().constants);
}

#[test]
fn base_change_preserves_invariant_dimensions() {
    let symm3 = lookup("symm3").unwrap();
    let base = symm3.analysis();
    for seed in 0..10u64 {
        let changed = random_algebra(seed, &Recipe::BaseChange(symm3.clone())).unwrap().analysis();
        assert_eq!(changed.leibniz_kernel().dim(), base.leibniz_kernel().dim());
        assert_eq!(changed.nilradical().unwrap().dim(), base.nilradical().unwrap().dim());
        assert_eq!(changed.centers().right.dim(), base.centers().right.dim());
    }
}

#[test]
fn radical_of_a_sum_with_sl2_is_the_abelian_summand() {
    let e = random_algebra(0, &Recipe::DirectSum(vec![lookup("abelian1").unwrap(), lookup("sl2").unwrap()])).unwrap();
    assert_eq!(e.kind, Kind::Lie);
    let a = e.analysis();
    assert_eq!(*a.radical().unwrap(), span(4, &[&[1, 0, 0, 0]]));
    assert_eq!(*a.nilradical().unwrap(), span(4, &[&[1, 0, 0, 0]]));
}
