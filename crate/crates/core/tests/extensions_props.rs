mod common;

use common::{population, rng, unimodular};
use leibalg::algebra::StructureConstants;
use leibalg::exact::Subspace;
use leibalg::extensions::{split_over_abelian_ideal, split_over_ideal, SplitStatus};
use leibalg::structure::{abelian_socle, nilradical};

fn abelian_ideals(l: &StructureConstants) -> Vec<Subspace> {
    let mut out = vec![l.leibniz_kernel(), l.centers().center, abelian_socle(l)];
    if let Ok(n) = nilradical(l) {
        let n = n.subspace;
        out.push(l.product_subspace(&n, &n));
        out.push(n);
    }
    out.retain(|a| l.is_ideal(a) && l.is_abelian_subspace(a));
    out.dedup();
    out
}

#[test]
fn splitting_over_abelian_ideals_is_two_valued_and_checked() {
    for e in population(40) {
        let l = e.right_leibniz();
        for a in abelian_ideals(&l) {
            let r = split_over_abelian_ideal(&l, &a).unwrap();
            match r.status {
                SplitStatus::Split => {
                    let c = r.complement.unwrap();
                    assert!(c.intersect(&a).is_zero(), "{}", e.id);
                    assert!(c.sum(&a).is_full(), "{}", e.id);
                    assert_eq!(l.subalgebra_closure(&c), c, "{}", e.id);
                }
                SplitStatus::NonSplit => assert!(r.obstruction.unwrap().certifies(), "{}", e.id),
                SplitStatus::Unknown => panic!("{}: unknown over abelian {a}", e.id),
            }
        }
    }
}

#[test]
fn general_ideals_give_checked_complements() {
    for e in population(40) {
        let l = e.right_leibniz();
        let full = l.full();
        for a in [l.product_subspace(&full, &full), l.leibniz_kernel()] {
            let r = split_over_ideal(&l, &a).unwrap();
            if r.status == SplitStatus::Split {
                let c = r.complement.unwrap();
                assert!(c.intersect(&a).is_zero() && c.sum(&a).is_full() && l.is_subalgebra(&c), "{}", e.id);
            }
        }
    }
}

#[test]
fn splitting_is_invariant_under_basis_change() {
    let mut r = rng(21);
    for e in population(20) {
        let l = e.right_leibniz();
        for _ in 0..3 {
            let p = unimodular(&mut r, l.dim());
            let to_new = p.inverse().unwrap();
            let m = l.change_basis(&p).unwrap();
            for a in abelian_ideals(&l) {
                let before = split_over_abelian_ideal(&l, &a).unwrap().status;
                let after = split_over_abelian_ideal(&m, &a.image(&to_new)).unwrap().status;
                assert_eq!(before, after, "{}", e.id);
            }
        }
    }
}
