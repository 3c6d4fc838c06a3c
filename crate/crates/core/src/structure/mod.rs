//! Radical, nilradical, Levi subalgebra, abelian socle and the algebra of
//! right multiplications.

mod rmult;

pub use rmult::{
    bracket_power_identity_check, bracket_power_mismatch, l_split_check, theta_check, theta_kernel, LSplit,
    RightMultAlgebra, ThetaReport,
};

use thiserror::Error;

use crate::algebra::{AlgebraError, Kind, StructureConstants};
use crate::envelope::{AssocEnvelope, OperatorFamily};
use crate::exact::{axpy, sub_vectors, unit_vector, Matrix, Rational, Subspace, Vector};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum StructureError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("verification failed: {0}")]
    Verification(String),
    #[error("nilradical candidate failed its certificate ({reason}); candidate {partial}")]
    NilradicalUncertified { partial: Subspace, reason: String },
}

/// Gram matrix of `(a, b) -> tr(R_a R_b)` on the basis.
pub fn killing_matrix(l: &StructureConstants) -> Matrix {
    let n = l.dim();
    let rs: Vec<Matrix> = (0..n).map(|i| l.right_mult_basis(i)).collect();
    let mut g = Matrix::zeros(n, n);
    for i in 0..n {
        for j in i..n {
            let t = (&rs[i] * &rs[j]).trace();
            g.set(i, j, t.clone());
            g.set(j, i, t);
        }
    }
    g
}

/// Radical of a Lie algebra as the Killing-orthogonal of its derived algebra.
fn lie_radical(lie: &StructureConstants) -> Subspace {
    let n = lie.dim();
    let kg = killing_matrix(lie);
    let derived = lie.product_subspace(&lie.full(), &lie.full());
    if derived.is_zero() {
        return lie.full();
    }
    // rows: y^T K for y in the derived basis
    let rows: Vec<Vector> = derived
        .basis()
        .iter()
        .map(|y| kg.transpose().apply(y))
        .collect();
    let m = Matrix::from_rows(&rows, n).expect("lengths");
    Subspace::spanned_by(n, &m.kernel())
}

/// Largest solvable ideal: the Killing radical of the liesation, pulled back.
pub fn radical(l: &StructureConstants) -> Result<Subspace, StructureError> {
    let q = l.liesation();
    let gamma = q.preimage(&lie_radical(&q.algebra));
    if !l.is_ideal(&gamma) {
        return Err(StructureError::Verification("radical candidate is not an ideal".into()));
    }
    if !l.is_solvable_subalgebra(&gamma) {
        return Err(StructureError::Verification("radical candidate is not solvable".into()));
    }
    let top = l.quotient(&gamma)?;
    if !lie_radical(&top.algebra).is_zero() {
        return Err(StructureError::Verification("quotient by the radical is not semisimple".into()));
    }
    Ok(gamma)
}

/// Evidence that the nilradical is a nilpotent ideal which no single basis
/// extension inside the radical enlarges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NilradicalCertificate {
    pub is_ideal: bool,
    pub is_nilpotent: bool,
    /// Each tested extension vector from the radical and whether the ideal it
    /// generates together with `N` fails to be nilpotent.
    pub extensions: Vec<(Vector, bool)>,
}

impl NilradicalCertificate {
    pub fn passes(&self) -> bool {
        self.is_ideal && self.is_nilpotent && self.extensions.iter().all(|(_, blocked)| *blocked)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Nilradical {
    pub subspace: Subspace,
    pub certificate: NilradicalCertificate,
}

/// `{x in Γ : R_x in rad(env{R_y : y in Γ})}`, certified.
pub fn nilradical_within(l: &StructureConstants, gamma: &Subspace) -> Result<Nilradical, StructureError> {
    let n = l.dim();
    let ops: Vec<Matrix> = gamma.basis().iter().map(|y| l.right_mult(y)).collect();
    let env = AssocEnvelope::generate(&OperatorFamily::new(n, ops.clone()), false);
    let rad = env.trace_radical();
    // x = sum c_k g_k has R_x = sum c_k R_{g_k}; membership is linear in c
    let mut nil = Subspace::zero(n);
    if !gamma.is_zero() {
        let reduced: Vec<Vector> = ops.iter().map(|r| rad.flat().reduce(&r.flatten())).collect();
        let m = Matrix::from_columns(&reduced, n * n).expect("flattened");
        for c in m.kernel() {
            let mut x = vec![Rational::from_integer(0.into()); n];
            for (ck, gk) in c.iter().zip(gamma.basis()) {
                axpy(&mut x, ck, gk);
            }
            nil.insert(&x);
        }
    }
    let is_ideal = l.is_ideal(&nil);
    let is_nilpotent = is_ideal && l.is_nilpotent_subalgebra(&nil);
    let extensions = nil
        .extension_within(gamma)
        .into_iter()
        .map(|v| {
            let mut ext = nil.clone();
            ext.insert(&v);
            let closure = l.ideal_closure(&ext);
            let blocked = !l.is_nilpotent_subalgebra(&closure);
            (v, blocked)
        })
        .collect();
    let certificate = NilradicalCertificate {
        is_ideal,
        is_nilpotent,
        extensions,
    };
    if !certificate.passes() {
        return Err(StructureError::NilradicalUncertified {
            partial: nil,
            reason: if !is_ideal {
                "not an ideal".into()
            } else if !is_nilpotent {
                "not nilpotent".into()
            } else {
                "a basis extension stays nilpotent".into()
            },
        });
    }
    Ok(Nilradical {
        subspace: nil,
        certificate,
    })
}

pub fn nilradical(l: &StructureConstants) -> Result<Nilradical, StructureError> {
    let gamma = radical(l)?;
    nilradical_within(l, &gamma)
}

/// A semisimple subalgebra complementing the radical, found by correcting the
/// canonical complement through the derived series of `Γ`.
pub fn levi_subalgebra(l: &StructureConstants, gamma: &Subspace) -> Result<Subspace, StructureError> {
    let n = l.dim();
    if gamma.is_full() {
        return Ok(Subspace::zero(n));
    }
    let top = l.quotient(gamma)?;
    let mut ys: Vec<Vector> = top.section.clone();
    let s = ys.len();
    // structure constants of L/Γ on the section
    let c: Vec<Vec<Vector>> = (0..s)
        .map(|i| (0..s).map(|j| top.algebra.basis_product(i, j).to_vec()).collect())
        .collect();
    let mut stages = vec![gamma.clone()];
    loop {
        let last = stages.last().unwrap();
        if last.is_zero() {
            break;
        }
        let next = l.ideal_closure(&l.product_subspace(last, last));
        if &next == last {
            return Err(StructureError::Verification("radical has a perfect derived term".into()));
        }
        stages.push(next);
    }
    let defect = |ys: &[Vector], i: usize, j: usize| -> Vector {
        let mut d = l.product(&ys[i], &ys[j]);
        for (k, ck) in c[i][j].iter().enumerate() {
            axpy(&mut d, &-ck, &ys[k]);
        }
        d
    };
    for w in stages.windows(2) {
        let (cur, next) = (&w[0], &w[1]);
        let proj = next.quotient_projection();
        let q = proj.rows();
        let g = cur.basis();
        let m = g.len();
        // unknowns r_i = sum_t u_{i,t} g_t; equations per pair (i, j) mod `next`
        let mut rows: Vec<Vector> = Vec::new();
        let mut rhs: Vec<Rational> = Vec::new();
        for i in 0..s {
            for j in 0..s {
                let mut block = vec![vec![Rational::from_integer(0.into()); s * m]; q];
                for (t, gt) in g.iter().enumerate() {
                    // [y_i, r_j]
                    let a = proj.apply(&l.product(&ys[i], gt));
                    // [r_i, y_j]
                    let b = proj.apply(&l.product(gt, &ys[j]));
                    for r in 0..q {
                        block[r][j * m + t] += &a[r];
                        block[r][i * m + t] += &b[r];
                    }
                    // - sum_k c_ijk r_k
                    let pg = proj.apply(gt);
                    for (k, ck) in c[i][j].iter().enumerate() {
                        for r in 0..q {
                            block[r][k * m + t] -= ck * &pg[r];
                        }
                    }
                }
                let d = proj.apply(&defect(&ys, i, j));
                rows.extend(block);
                rhs.extend(d.into_iter().map(|x| -x));
            }
        }
        if rows.is_empty() {
            continue;
        }
        let a = Matrix::from_rows(&rows, s * m).expect("row length");
        let u = a
            .solve(&rhs)
            .ok_or_else(|| StructureError::Verification("Levi lifting system is infeasible".into()))?;
        for (i, y) in ys.iter_mut().enumerate() {
            for (t, gt) in g.iter().enumerate() {
                axpy(y, &u[i * m + t], gt);
            }
        }
    }
    let levi = Subspace::spanned_by(n, &ys);
    if levi.dim() != s || !levi.intersect(gamma).is_zero() {
        return Err(StructureError::Verification("Levi candidate meets the radical".into()));
    }
    if !l.is_subalgebra(&levi) {
        return Err(StructureError::Verification("Levi candidate is not a subalgebra".into()));
    }
    let sub = l.restrict(&levi)?;
    if !sub.algebra.satisfies(Kind::Lie) || killing_matrix(&sub.algebra).determinant() == Rational::from_integer(0.into())
    {
        return Err(StructureError::Verification("Levi candidate is not semisimple".into()));
    }
    Ok(levi)
}

/// Envelope of all left and right multiplications, with identity.
pub fn multiplication_envelope(l: &StructureConstants) -> AssocEnvelope {
    let n = l.dim();
    let mut ops = Vec::with_capacity(2 * n);
    for i in 0..n {
        ops.push(l.right_mult_basis(i));
        ops.push(l.left_mult_basis(i));
    }
    AssocEnvelope::generate(&OperatorFamily::new(n, ops), true)
}

/// Sum of all minimal ideals: the vectors killed by the radical of the
/// multiplication envelope.
pub fn socle(l: &StructureConstants) -> Subspace {
    let n = l.dim();
    let rad = multiplication_envelope(l).trace_radical();
    let mut rows = Vec::new();
    for r in rad.basis() {
        rows.extend(r.row_vectors());
    }
    if rows.is_empty() {
        return Subspace::full(n);
    }
    let m = Matrix::from_rows(&rows, n).expect("square operators");
    Subspace::spanned_by(n, &m.kernel())
}

/// Sum of the minimal abelian ideals: the part of the socle that multiplies
/// the socle to zero on both sides.
pub fn abelian_socle(l: &StructureConstants) -> Subspace {
    let soc = socle(l);
    soc.intersect(&l.annihilator(&soc))
}

pub fn idealiser(l: &StructureConstants, b: &Subspace) -> Result<Subspace, StructureError> {
    if !l.is_subalgebra(b) {
        return Err(AlgebraError::NotASubalgebra.into());
    }
    let out = l.idealiser(b);
    debug_assert!(out.contains(b) && l.is_subalgebra(&out));
    Ok(out)
}

/// Vector `x - s` where `R_s` is the semisimple part of `R_x`, if `L`-split.
pub fn nilpotent_part(l: &StructureConstants, rl: &RightMultAlgebra, x: &[Rational]) -> Option<Vector> {
    match l_split_check(l, rl, x) {
        LSplit::Split { s, .. } => Some(sub_vectors(x, &s)),
        LSplit::NotSplit { .. } => None,
    }
}

/// Radical of the Lie algebra `R(L)` as a space of operators.
pub fn radical_of_right_mult(rl: &RightMultAlgebra) -> crate::envelope::MatrixSpace {
    let lie = rl.lie_algebra();
    let rad = lie_radical(&lie);
    let mats: Vec<Matrix> = rad.basis().iter().map(|c| rl.operator(c)).collect();
    crate::envelope::MatrixSpace::spanned_by(rl.space().size(), &mats)
}

/// `θ^{-1}(K)` for a matrix space `K` inside `R(L)`.
pub fn theta_preimage(l: &StructureConstants, k: &crate::envelope::MatrixSpace) -> Subspace {
    let n = l.dim();
    let reduced: Vec<Vector> = (0..n)
        .map(|i| k.flat().reduce(&l.right_mult_basis(i).flatten()))
        .collect();
    if n == 0 {
        return Subspace::zero(0);
    }
    let m = Matrix::from_columns(&reduced, n * n).expect("flattened");
    let vs: Vec<Vector> = m
        .kernel()
        .iter()
        .map(|c| {
            let mut x = vec![Rational::from_integer(0.into()); n];
            for (i, ci) in c.iter().enumerate() {
                axpy(&mut x, ci, &unit_vector(n, i));
            }
            x
        })
        .collect();
    Subspace::spanned_by(n, &vs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, vector_from_i64};

    fn span(n: usize, vs: &[&[i64]]) -> Subspace {
        Subspace::spanned_by(n, &vs.iter().map(|v| vector_from_i64(v)).collect::<Vec<_>>())
    }

    fn cyclic4() -> StructureConstants {
        StructureConstants::cyclic(4, &[rat(0), rat(0), rat(0), rat(1)]).unwrap()
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

    fn sl2() -> StructureConstants {
        StructureConstants::lie_from_table(
            3,
            vec![
                (0, 1, vector_from_i64(&[-2, 0, 0])),
                (0, 2, vector_from_i64(&[0, 1, 0])),
                (1, 2, vector_from_i64(&[0, 0, -2])),
            ],
        )
        .unwrap()
    }

    fn sl2_actions() -> Vec<Matrix> {
        vec![
            Matrix::from_i64(2, 2, &[0, -1, 0, 0]),
            Matrix::from_i64(2, 2, &[-1, 0, 0, 1]),
            Matrix::from_i64(2, 2, &[0, 0, -1, 0]),
        ]
    }

    #[test]
    fn radicals() {
        assert!(radical(&cyclic4()).unwrap().is_full());
        assert!(radical(&sl2()).unwrap().is_zero());
        let d = StructureConstants::demisemidirect(&sl2(), &sl2_actions()).unwrap();
        assert_eq!(radical(&d).unwrap(), span(5, &[&[0, 0, 0, 1, 0], &[0, 0, 0, 0, 1]]));
    }

    #[test]
    fn nilradicals() {
        let c = nilradical(&cyclic4()).unwrap();
        assert_eq!(c.subspace, span(4, &[&[0, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1]]));
        assert!(c.certificate.passes());
        let s = nilradical(&symm3()).unwrap();
        assert_eq!(s.subspace, span(3, &[&[1, 0, 0], &[0, 0, 1]]));
        let h = StructureConstants::lie_from_table(3, vec![(0, 1, vector_from_i64(&[0, 0, 1]))]).unwrap();
        assert!(nilradical(&h).unwrap().subspace.is_full());
    }

    #[test]
    fn levi() {
        let l = sl2();
        assert!(levi_subalgebra(&l, &l.zero_subspace()).unwrap().is_full());
        let c = cyclic4();
        assert!(levi_subalgebra(&c, &c.full()).unwrap().is_zero());
        let v = StructureConstants::demisemidirect(&sl2(), &sl2_actions()).unwrap();
        let g = radical(&v).unwrap();
        assert_eq!(levi_subalgebra(&v, &g).unwrap().dim(), 3);
        // a Lie semidirect product, rotated so the canonical complement is not closed
        let lie = semidirect_lie();
        let g = radical(&lie).unwrap();
        let s = levi_subalgebra(&lie, &g).unwrap();
        assert_eq!(s.dim(), 3);
        assert!(lie.is_subalgebra(&s));
    }

    fn semidirect_lie() -> StructureConstants {
        let mut products = Vec::new();
        let s = sl2();
        let pi = [
            Matrix::from_i64(2, 2, &[0, 1, 0, 0]),
            Matrix::from_i64(2, 2, &[1, 0, 0, -1]),
            Matrix::from_i64(2, 2, &[0, 0, 1, 0]),
        ];
        for i in 0..3 {
            for j in 0..3 {
                let mut v = s.basis_product(i, j).to_vec();
                v.extend([rat(0), rat(0)]);
                products.push((i, j, v));
            }
            for m in 0..2 {
                let col = pi[i].column(m);
                let mut v = vec![rat(0); 3];
                v.extend(col.iter().cloned());
                products.push((i, 3 + m, v.clone()));
                products.push((3 + m, i, v.iter().map(|x| -x).collect()));
            }
        }
        let lie = StructureConstants::from_products(5, products).unwrap();
        assert!(lie.satisfies(Kind::Lie));
        let p = Matrix::from_i64(
            5,
            5,
            &[1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 2, 0, 1, 0, 0, 1, -1, 0, 1],
        );
        lie.change_basis(&p).unwrap()
    }

    #[test]
    fn socles() {
        assert!(abelian_socle(&StructureConstants::abelian(3)).is_full());
        assert!(abelian_socle(&sl2()).is_zero());
        let s = symm3();
        let asoc = abelian_socle(&s);
        assert!(s.is_ideal(&asoc));
    }

    #[test]
    fn r_radical_matches_theta_image() {
        for l in [cyclic4(), symm3(), sl2()] {
            let rl = RightMultAlgebra::new(&l);
            let g = radical(&l).unwrap();
            assert_eq!(radical_of_right_mult(&rl), rl.image_of(&l, &g));
        }
    }
}
