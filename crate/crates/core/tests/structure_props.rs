mod common;

use common::population;
use leibalg::algebra::StructureConstants;
use leibalg::classify::unit_grid;
use leibalg::envelope::MatrixSpace;
use leibalg::exact::{Matrix, Subspace};
use leibalg::structure::{nilradical, radical, radical_of_right_mult, theta_check, theta_preimage, RightMultAlgebra};

/// Ideal closures of single grid vectors and of consecutive pairs.
fn sampled_ideals(l: &StructureConstants) -> Vec<Subspace> {
    let n = l.dim();
    let grid = unit_grid(n);
    let mut out: Vec<Subspace> = Vec::new();
    for (k, v) in grid.iter().enumerate() {
        let mut seeds = vec![Subspace::spanned_by(n, std::slice::from_ref(v))];
        if let Some(w) = grid.get(k + 1) {
            seeds.push(Subspace::spanned_by(n, &[v.clone(), w.clone()]));
        }
        for s in seeds {
            let c = l.ideal_closure(&s);
            if !out.contains(&c) {
                out.push(c);
            }
        }
    }
    out
}

#[test]
fn radical_and_nilradical_contain_sampled_ideals() {
    for e in population(20) {
        let l = e.right_leibniz();
        let gamma = radical(&l).unwrap();
        let nil = nilradical(&l).unwrap().subspace;
        for j in sampled_ideals(&l) {
            if l.is_solvable_subalgebra(&j) {
                assert!(gamma.contains(&j), "{}: solvable {j} outside {gamma}", e.id);
            }
            if l.is_nilpotent_subalgebra(&j) {
                assert!(nil.contains(&j), "{}: nilpotent {j} outside {nil}", e.id);
            }
        }
    }
}

#[test]
fn standard_containments() {
    for e in population(20) {
        let l = e.right_leibniz();
        let gamma = radical(&l).unwrap();
        let nil = nilradical(&l).unwrap();
        assert!(nil.certificate.passes(), "{}", e.id);
        assert!(gamma.contains(&nil.subspace), "{}", e.id);
        assert!(nil.subspace.contains(&l.leibniz_kernel()), "{}", e.id);
        if l.is_solvable() {
            assert!(nil.subspace.contains(&l.centers().right), "{}", e.id);
        }
    }
}

#[test]
fn theta_is_a_homomorphism_with_kernel_the_right_center() {
    for e in population(20) {
        let l = e.right_leibniz();
        let n = l.dim();
        for i in 0..n {
            for j in 0..n {
                let lhs = l.right_mult(l.basis_product(j, i));
                let rhs = l.right_mult_basis(i).commutator(&l.right_mult_basis(j));
                assert_eq!(lhs, rhs, "{}", e.id);
            }
        }
        assert!(theta_check(&l).holds(), "{}", e.id);
    }
}

fn is_lie_ideal(space: &MatrixSpace, ambient: &[Matrix]) -> bool {
    space
        .basis()
        .iter()
        .all(|k| ambient.iter().all(|r| space.contains(&k.commutator(r))))
}

#[test]
fn ideals_correspond_under_theta() {
    for e in population(20) {
        let l = e.right_leibniz();
        let rl = RightMultAlgebra::new(&l);
        for u in sampled_ideals(&l) {
            assert!(is_lie_ideal(&rl.image_of(&l, &u), rl.operator_basis()), "{}: R_U for {u}", e.id);
        }
        let lie = rl.lie_algebra();
        for k in sampled_ideals(&lie) {
            let ops: Vec<Matrix> = k.basis().iter().map(|c| rl.operator(c)).collect();
            let space = MatrixSpace::spanned_by(l.dim(), &ops);
            let pre = theta_preimage(&l, &space);
            assert!(l.is_ideal(&pre), "{}: preimage of {k}", e.id);
            assert_eq!(rl.image_of(&l, &pre), space, "{}", e.id);
        }
    }
}

/// Largest solvable ideal among sums of sampled ideal closures.
fn brute_force_radical(lie: &StructureConstants) -> Subspace {
    sampled_ideals(lie)
        .into_iter()
        .filter(|j| lie.is_solvable_subalgebra(j))
        .fold(Subspace::zero(lie.dim()), |acc, j| acc.sum(&j))
}

#[test]
fn radical_of_right_multiplications_is_the_image_of_the_radical() {
    for e in population(20) {
        let l = e.right_leibniz();
        let rl = RightMultAlgebra::new(&l);
        let gamma = radical(&l).unwrap();
        let image = rl.image_of(&l, &gamma);
        assert_eq!(radical_of_right_mult(&rl), image, "{}", e.id);
        let lie = rl.lie_algebra();
        let oracle = brute_force_radical(&lie);
        let ops: Vec<Matrix> = oracle.basis().iter().map(|c| rl.operator(c)).collect();
        assert_eq!(MatrixSpace::spanned_by(l.dim(), &ops), image, "{}", e.id);
    }
}
