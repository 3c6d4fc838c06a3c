use num_traits::Zero;

use crate::algebra::StructureConstants;
use crate::envelope::MatrixSpace;
use crate::exact::{jordan_chevalley, sub_vectors, unit_vector, Matrix, Rational, Subspace, Vector};

/// `R(L) = {R_x}` with a basis of operators and one preimage per basis operator.
#[derive(Clone, Debug)]
pub struct RightMultAlgebra {
    size: usize,
    operator_basis: Vec<Matrix>,
    preimages: Vec<Vector>,
    space: MatrixSpace,
}

impl RightMultAlgebra {
    pub fn new(l: &StructureConstants) -> Self {
        let n = l.dim();
        let mut operator_basis = Vec::new();
        let mut preimages = Vec::new();
        let mut flat = Subspace::zero(n * n);
        for i in 0..n {
            let r = l.right_mult_basis(i);
            if flat.insert(&r.flatten()) {
                operator_basis.push(r);
                preimages.push(unit_vector(n, i));
            }
        }
        let space = MatrixSpace::spanned_by(n, &operator_basis);
        RightMultAlgebra {
            size: n,
            operator_basis,
            preimages,
            space,
        }
    }

    pub fn dim(&self) -> usize {
        self.operator_basis.len()
    }

    pub fn operator_basis(&self) -> &[Matrix] {
        &self.operator_basis
    }

    pub fn preimages(&self) -> &[Vector] {
        &self.preimages
    }

    pub fn space(&self) -> &MatrixSpace {
        &self.space
    }

    pub fn contains(&self, m: &Matrix) -> bool {
        self.space.contains(m)
    }

    /// Some `x` with `R_x = m`, if `m` lies in `R(L)`.
    pub fn preimage(&self, m: &Matrix) -> Option<Vector> {
        if self.operator_basis.is_empty() {
            return if m.is_zero() {
                Some(vec![Rational::zero(); self.size])
            } else {
                None
            };
        }
        let cols: Vec<Vector> = self.operator_basis.iter().map(Matrix::flatten).collect();
        let a = Matrix::from_columns(&cols, self.size * self.size).expect("flattened operators");
        let c = a.solve(&m.flatten())?;
        let mut x = vec![Rational::zero(); self.size];
        for (ci, p) in c.iter().zip(&self.preimages) {
            if !ci.is_zero() {
                crate::exact::axpy(&mut x, ci, p);
            }
        }
        Some(x)
    }

    /// `R(L)` as a Lie algebra under the commutator, on `operator_basis`.
    pub fn lie_algebra(&self) -> StructureConstants {
        let k = self.dim();
        let mut table = Vec::with_capacity(k * k);
        for a in &self.operator_basis {
            for b in &self.operator_basis {
                let c = a.commutator(b);
                table.push(self.space_coordinates(&c));
            }
        }
        StructureConstants::new(k, table).expect("square table")
    }

    /// Coordinates with respect to `operator_basis` (not the canonical basis).
    pub fn space_coordinates(&self, m: &Matrix) -> Vector {
        let cols: Vec<Vector> = self.operator_basis.iter().map(Matrix::flatten).collect();
        let a = Matrix::from_columns(&cols, self.size * self.size).expect("flattened operators");
        a.solve(&m.flatten()).expect("operator lies in R(L)")
    }

    /// Operators of `R(L)` from coordinates on `operator_basis`.
    pub fn operator(&self, coords: &[Rational]) -> Matrix {
        let mut out = Matrix::zeros(self.size, self.size);
        for (c, b) in coords.iter().zip(&self.operator_basis) {
            if !c.is_zero() {
                out = &out + &b.scale(c);
            }
        }
        out
    }

    /// `R_U` for a subspace `U` of `L`.
    pub fn image_of(&self, l: &StructureConstants, u: &Subspace) -> MatrixSpace {
        let mats: Vec<Matrix> = u.basis().iter().map(|v| l.right_mult(v)).collect();
        MatrixSpace::spanned_by(self.size, &mats)
    }
}

/// Result of checking `R_{[y,x]} = [R_x, R_y]` and `ker θ = Z_r(L)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThetaReport {
    /// First basis pair `(i, j)` with `R_{[b_i,b_j]} != [R_{b_j}, R_{b_i}]`.
    pub failing_pair: Option<(usize, usize)>,
    pub kernel: Subspace,
    pub kernel_is_right_center: bool,
    pub rank_matches: bool,
}

impl ThetaReport {
    pub fn holds(&self) -> bool {
        self.failing_pair.is_none() && self.kernel_is_right_center && self.rank_matches
    }
}

/// Kernel of `x -> R_x`, computed from the flattened operators.
pub fn theta_kernel(l: &StructureConstants) -> Subspace {
    let n = l.dim();
    let cols: Vec<Vector> = (0..n).map(|i| l.right_mult_basis(i).flatten()).collect();
    if n == 0 {
        return Subspace::zero(0);
    }
    let m = Matrix::from_columns(&cols, n * n).expect("flattened operators");
    Subspace::spanned_by(n, &m.kernel())
}

pub fn theta_check(l: &StructureConstants) -> ThetaReport {
    let n = l.dim();
    let rs: Vec<Matrix> = (0..n).map(|i| l.right_mult_basis(i)).collect();
    let mut failing_pair = None;
    'outer: for i in 0..n {
        for j in 0..n {
            let lhs = l.right_mult(l.basis_product(i, j));
            if lhs != rs[j].commutator(&rs[i]) {
                failing_pair = Some((i, j));
                break 'outer;
            }
        }
    }
    let kernel = theta_kernel(l);
    let zr = l.centers().right;
    let rl = RightMultAlgebra::new(l);
    ThetaReport {
        failing_pair,
        kernel_is_right_center: kernel == zr,
        rank_matches: rl.dim() + zr.dim() == n,
        kernel,
    }
}

/// Compares `R_{[y,_n x]}` with `(-1)^n [R_y,_{n-1} R_x]` for `n = 1..=max_n`,
/// returning the first `n` where they differ.
pub fn bracket_power_mismatch(l: &StructureConstants, x: &[Rational], y: &[Rational], max_n: usize) -> Option<usize> {
    let rx = l.right_mult(x);
    let ry = l.right_mult(y);
    let mut power = y.to_vec();
    let mut nested = ry.commutator(&rx);
    for n in 1..=max_n {
        power = rx.apply(&power);
        let lhs = l.right_mult(&power);
        let rhs = if n % 2 == 0 { nested.clone() } else { -&nested };
        if lhs != rhs {
            return Some(n);
        }
        nested = nested.commutator(&rx);
    }
    None
}

pub fn bracket_power_identity_check(l: &StructureConstants, samples: &[(Vector, Vector)], max_n: usize) -> bool {
    samples
        .iter()
        .all(|(x, y)| bracket_power_mismatch(l, x, y, max_n).is_none())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LSplit {
    /// `R_x = R_s + R_n` is the Jordan decomposition.
    Split { s: Vector, n: Vector },
    /// The semisimple part of `R_x` is not a right multiplication.
    NotSplit { semisimple: Matrix },
}

pub fn l_split_check(l: &StructureConstants, rl: &RightMultAlgebra, x: &[Rational]) -> LSplit {
    let rx = l.right_mult(x);
    let jc = jordan_chevalley(&rx).expect("square");
    match rl.preimage(&jc.semisimple) {
        Some(s) => {
            let n = sub_vectors(x, &s);
            debug_assert_eq!(l.right_mult(&n), jc.nilpotent);
            LSplit::Split { s, n }
        }
        None => LSplit::NotSplit {
            semisimple: jc.semisimple,
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::StructureConstants;
    use crate::exact::vector_from_i64;

    fn cyclic4() -> StructureConstants {
        StructureConstants::from_products(
            4,
            vec![
                (0, 0, vector_from_i64(&[0, 1, 0, 0])),
                (1, 0, vector_from_i64(&[0, 0, 1, 0])),
                (2, 0, vector_from_i64(&[0, 0, 0, 1])),
                (3, 0, vector_from_i64(&[0, 0, 0, 1])),
            ],
        )
        .unwrap()
    }

    fn symm3() -> StructureConstants {
        StructureConstants::from_products(
            3,
            vec![
                (0, 1, vector_from_i64(&[1, 0, 0])),
                (1, 0, vector_from_i64(&[-1, 0, 0])),
                (1, 1, vector_from_i64(&[0, 0, 1])),
            ],
        )
        .unwrap()
    }

    fn heisenberg() -> StructureConstants {
        StructureConstants::lie_from_table(3, vec![(0, 1, vector_from_i64(&[0, 0, 1]))]).unwrap()
    }

    #[test]
    fn dimensions_of_r() {
        assert_eq!(RightMultAlgebra::new(&cyclic4()).dim(), 1);
        assert_eq!(RightMultAlgebra::new(&StructureConstants::abelian(3)).dim(), 0);
        assert_eq!(RightMultAlgebra::new(&heisenberg()).dim(), 2);
        for l in [cyclic4(), symm3(), heisenberg()] {
            assert!(theta_check(&l).holds());
        }
    }

    #[test]
    fn bracket_powers() {
        let l = cyclic4();
        let a = vector_from_i64(&[1, 0, 0, 0]);
        let a4 = vector_from_i64(&[0, 0, 0, 1]);
        assert_eq!(bracket_power_mismatch(&l, &a, &a4, 1), None);
        assert!(l.right_mult(&a4).is_zero());
        let h = heisenberg();
        let x = vector_from_i64(&[1, 2, 0]);
        let y = vector_from_i64(&[-1, 1, 3]);
        assert_eq!(bracket_power_mismatch(&h, &x, &y, 5), None);
        assert!(h.right_mult(&h.right_mult(&x).apply(&h.right_mult(&x).apply(&y))).is_zero());
    }

    #[test]
    fn l_split() {
        let l = cyclic4();
        let rl = RightMultAlgebra::new(&l);
        assert!(matches!(
            l_split_check(&l, &rl, &vector_from_i64(&[1, 0, 0, 0])),
            LSplit::NotSplit { .. }
        ));
        let s = symm3();
        let rs = RightMultAlgebra::new(&s);
        // R_{e2} sends e1 -> e1, e2 -> e3 -> 0; its semisimple part is the
        // projection onto e1, which no right multiplication realises
        let e2 = vector_from_i64(&[0, 1, 0]);
        let LSplit::NotSplit { semisimple } = l_split_check(&s, &rs, &e2) else {
            panic!("e2 is not split")
        };
        assert_eq!(semisimple, Matrix::from_i64(3, 3, &[1, 0, 0, 0, 0, 0, 0, 0, 0]));
        assert!(!rs.contains(&semisimple));
        let e1 = vector_from_i64(&[1, 0, 0]);
        let LSplit::Split { s: ss, n } = l_split_check(&s, &rs, &e1) else {
            panic!("e1 splits")
        };
        let jc = jordan_chevalley(&s.right_mult(&e1)).unwrap();
        assert_eq!(s.right_mult(&ss), jc.semisimple);
        assert_eq!(s.right_mult(&n), jc.nilpotent);
        let h = heisenberg();
        let rh = RightMultAlgebra::new(&h);
        let x = vector_from_i64(&[1, 1, 1]);
        let LSplit::Split { s: hs, n: hn } = l_split_check(&h, &rh, &x) else {
            panic!("nilpotent algebras split")
        };
        assert!(h.right_mult(&hs).is_zero());
        assert_eq!(h.right_mult(&hn), h.right_mult(&x));
    }
}
