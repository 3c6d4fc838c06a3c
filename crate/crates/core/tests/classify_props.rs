mod common;

use common::population;
use leibalg::algebra::StructureConstants;
use leibalg::classify::{verify, Analysis, Decision, Property, Witness};
use leibalg::exact::vector_from_i64;
use leibalg::structure::{l_split_check, LSplit, RightMultAlgebra};

#[test]
fn every_decision_re_verifies() {
    for e in population(40) {
        let a = e.analysis();
        for p in Property::ALL {
            let d = a.decision(p);
            if let Decision::Unknown(r) = d {
                assert!(!r.detail.is_empty(), "{} {p}", e.id);
            }
            if let Err(err) = verify(a.algebra(), p, d) {
                panic!("{} {p}: {d} fails verification: {}", e.id, err.0);
            }
        }
    }
}

#[test]
fn frattini_bounds_are_consistent() {
    for e in population(40) {
        let a = e.analysis();
        let fr = a.frattini();
        assert!(fr.upper.contains(&fr.lower), "{}", e.id);
        assert!(a.algebra().is_ideal(&fr.lower), "{}", e.id);
        if fr.exact {
            assert!(a.algebra().is_ideal(&fr.upper), "{}", e.id);
            for m in &fr.maximal_subalgebras_found {
                assert!(m.contains(&fr.upper), "{}: phi not inside {m}", e.id);
            }
        }
    }
}

#[test]
fn certified_implications_hold() {
    for e in population(40) {
        let a = e.analysis();
        let yes = |p| a.decision(p).is_yes();
        if yes(Property::PhiFree) {
            assert!(yes(Property::AlmostReductive), "{}", e.id);
        }
        if yes(Property::AlmostReductive) {
            assert!(yes(Property::AlmostAlgebraic), "{}", e.id);
        }
    }
}

/// `[x,a] = a`, `[x,b] = a + b`: `ad x` has a Jordan block whose semisimple
/// part is not inner.
fn jordan_block_algebra() -> StructureConstants {
    StructureConstants::lie_from_table(
        3,
        vec![(0, 1, vector_from_i64(&[0, 1, 0])), (0, 2, vector_from_i64(&[0, 1, 1]))],
    )
    .unwrap()
}

fn innermost(w: &Witness) -> &Witness {
    match w {
        Witness::ViaLiesation { inner, .. } | Witness::ViaFrattiniQuotient { inner, .. } => innermost(inner),
        other => other,
    }
}

#[test]
fn non_algebraic_lie_algebra_has_a_jordan_witness() {
    let l = jordan_block_algebra();
    let a = Analysis::bare("jordan-block", l.clone());
    let d = a.decision(Property::AlmostAlgebraic);
    let Decision::No(w) = d else {
        panic!("expected no, got {d}");
    };
    let Witness::JordanPart { element, .. } = innermost(w) else {
        panic!("unexpected witness {w}");
    };
    let rl = RightMultAlgebra::new(&l);
    assert!(matches!(l_split_check(&l, &rl, element), LSplit::NotSplit { .. }));
    verify(&l, Property::AlmostAlgebraic, d).unwrap();
    assert!(a.decision(Property::AlmostReductive).is_no());
}

#[test]
fn almost_algebraic_no_comes_with_a_non_split_element() {
    for e in population(40) {
        let a = e.analysis();
        if let Decision::No(w) = a.decision(Property::AlmostAlgebraic) {
            let Witness::ViaLiesation { lie, inner, .. } = w else {
                panic!("{}: {w}", e.id);
            };
            let Witness::JordanPart { element, .. } = inner.as_ref() else {
                panic!("{}: {w}", e.id);
            };
            let rl = RightMultAlgebra::new(lie);
            assert!(matches!(l_split_check(lie, &rl, element), LSplit::NotSplit { .. }), "{}", e.id);
        }
    }
}
