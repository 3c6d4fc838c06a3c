//! Maximal subalgebras: the codimension-one search and maximality checks.

use num_traits::{One, Zero};
use thiserror::Error;

use crate::algebra::StructureConstants;
use crate::envelope::{irreducibility, Irreducibility, OperatorFamily};
use crate::exact::{axpy, minimal_polynomial, unit_vector, Matrix, Rational, Subspace, Vector};
use crate::extensions::{complement_system, ComplementConditions};
use crate::structure::abelian_socle;

use super::mpoly::{rational_points, GroebnerBudget, MPoly};

pub const CODIM1_MAX_DIM: usize = 6;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ScopeError {
    #[error("dimension {dim} exceeds the codimension-one search limit {CODIM1_MAX_DIM}")]
    TooLarge { dim: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Codim1Search {
    pub subalgebras: Vec<Subspace>,
    /// Some solution family was represented by integer samples only, so the
    /// list may miss members (the intersection is still an upper bound).
    pub families_sampled: bool,
}

/// Every hyperplane `H` with `[H, H] ⊆ H`, up to affine families that are
/// listed through an affinely spanning set.
///
/// A one-dimensional ideal `D = span{d}` with `d² = 0` is either inside `H`
/// (recurse on `L/D`) or complemented by `H`, and the complements form the
/// solution set of a linear system. Minimal abelian ideals of dimension at
/// least two lie in every such `H`. Only algebras without abelian ideals reach
/// the polynomial search.
pub fn maximal_subalgebras_codim1(l: &StructureConstants) -> Result<Codim1Search, ScopeError> {
    let n = l.dim();
    if n > CODIM1_MAX_DIM {
        return Err(ScopeError::TooLarge { dim: n });
    }
    Ok(codim1(l))
}

fn codim1(l: &StructureConstants) -> Codim1Search {
    let n = l.dim();
    if n == 0 {
        return Codim1Search {
            subalgebras: Vec::new(),
            families_sampled: false,
        };
    }
    let soc = abelian_socle(l);
    if soc.is_zero() {
        return polynomial_search(l);
    }
    let ops: Vec<Matrix> = (0..n)
        .flat_map(|i| [l.right_mult_basis(i), l.left_mult_basis(i)])
        .collect();
    let Some(line) = joint_eigenspaces(&ops, &soc).into_iter().next() else {
        return lifted(l, &soc, Vec::new());
    };
    let d = Subspace::spanned_by(n, &line.basis()[..1]);
    lifted(l, &d, line_complements(l, &d))
}

/// Hyperplanes through `j` from the quotient, plus `extra`.
fn lifted(l: &StructureConstants, j: &Subspace, extra: Vec<Subspace>) -> Codim1Search {
    let q = l.quotient(j).expect("abelian socle pieces are ideals");
    let inner = codim1(&q.algebra);
    let mut subalgebras: Vec<Subspace> = inner.subalgebras.iter().map(|h| q.preimage(h)).collect();
    for h in extra {
        if !subalgebras.contains(&h) {
            subalgebras.push(h);
        }
    }
    Codim1Search {
        subalgebras,
        families_sampled: inner.families_sampled,
    }
}

/// Subalgebra complements of a one-dimensional ideal: a particular solution
/// of the complement system and its translates by a kernel basis.
fn line_complements(l: &StructureConstants, d: &Subspace) -> Vec<Subspace> {
    let (matrix, rhs) = complement_system(l, d, ComplementConditions::SUBALGEBRA);
    let particular = if matrix.rows() == 0 {
        Some(vec![Rational::zero(); matrix.cols()])
    } else {
        matrix.solve(&rhs)
    };
    let Some(u0) = particular else {
        return Vec::new();
    };
    let reps = d.complement_basis();
    let dv = &d.basis()[0];
    let build = |u: &[Rational]| -> Subspace {
        let ys: Vec<Vector> = reps
            .iter()
            .zip(u)
            .map(|(c, t)| {
                let mut y = c.clone();
                axpy(&mut y, t, dv);
                y
            })
            .collect();
        Subspace::spanned_by(l.dim(), &ys)
    };
    let mut out = vec![build(&u0)];
    for k in matrix.kernel() {
        let u: Vector = u0.iter().zip(&k).map(|(a, b)| a + b).collect();
        out.push(build(&u));
    }
    out
}

/// Maximal subspaces of `within` on which every operator acts as a scalar,
/// one per rational joint eigenvalue.
pub fn joint_eigenspaces(ops: &[Matrix], within: &Subspace) -> Vec<Subspace> {
    let n = within.ambient_dim();
    let zero = Subspace::zero(n);
    let mut spaces = vec![within.clone()];
    for t in ops {
        let mut next = Vec::new();
        for w in spaces {
            let mut inv = w;
            loop {
                let smaller = inv.preimage_within(t, &inv);
                if smaller == inv {
                    break;
                }
                inv = smaller;
            }
            if inv.is_zero() {
                continue;
            }
            let cols: Vec<Vector> = inv
                .basis()
                .iter()
                .map(|b| inv.coordinates(&t.apply(b)).expect("invariant"))
                .collect();
            let restricted = Matrix::from_columns(&cols, inv.dim()).expect("square");
            let minpoly = minimal_polynomial(&restricted).expect("square");
            for lambda in minpoly.rational_roots() {
                let shifted = t - &Matrix::identity(n).scale(&lambda);
                let eig = inv.preimage_within(&shifted, &zero);
                if !eig.is_zero() {
                    next.push(eig);
                }
            }
        }
        spaces = next;
    }
    spaces
}

/// Chart `k` normalises `f_k = 1` with `f_j = 0` for `j < k`; the closure
/// conditions `f([u_p, u_q]) = 0` on the chart basis `u_p = e_p - f_p e_k`
/// are cubic polynomial equations in the free coordinates.
fn polynomial_search(l: &StructureConstants) -> Codim1Search {
    let n = l.dim();
    let mut found: Vec<Subspace> = Vec::new();
    let mut families_sampled = false;
    for k in 0..n {
        let m = n - 1 - k;
        let fcoord = |c: usize| -> MPoly {
            if c < k {
                MPoly::zero(m)
            } else if c == k {
                MPoly::constant(m, Rational::one())
            } else {
                MPoly::var(m, c - k - 1)
            }
        };
        // u_p as polynomial vectors
        let u: Vec<Vec<MPoly>> = (0..n)
            .filter(|&p| p != k)
            .map(|p| {
                let mut v: Vec<MPoly> = (0..n).map(|_| MPoly::zero(m)).collect();
                v[p] = MPoly::constant(m, Rational::one());
                v[k] = MPoly::zero(m).sub(&fcoord(p));
                v
            })
            .collect();
        let f: Vec<MPoly> = (0..n).map(fcoord).collect();
        let mut eqs = Vec::new();
        for up in &u {
            for uq in &u {
                let mut e = MPoly::zero(m);
                for (a, ua) in up.iter().enumerate() {
                    if ua.is_zero() {
                        continue;
                    }
                    for (b, ub) in uq.iter().enumerate() {
                        if ub.is_zero() {
                            continue;
                        }
                        let prod = l.basis_product(a, b);
                        let mut lin = MPoly::zero(m);
                        for (c, coef) in prod.iter().enumerate() {
                            if !coef.is_zero() {
                                lin = lin.add(&f[c].scale(coef));
                            }
                        }
                        if !lin.is_zero() {
                            e = e.add(&ua.mul(ub).mul(&lin));
                        }
                    }
                }
                if !e.is_zero() && !eqs.contains(&e) {
                    eqs.push(e);
                }
            }
        }
        let pts = rational_points(&eqs, m, GroebnerBudget::default());
        families_sampled |= pts.sampled;
        for p in pts.points {
            let mut func = vec![Rational::zero(); n];
            func[k] = Rational::one();
            for (i, x) in p.into_iter().enumerate() {
                func[k + 1 + i] = x;
            }
            let h = hyperplane(&func);
            if l.is_subalgebra(&h) && !found.contains(&h) {
                found.push(h);
            }
        }
    }
    Codim1Search {
        subalgebras: found,
        families_sampled,
    }
}

fn hyperplane(func: &[Rational]) -> Subspace {
    let n = func.len();
    let row = Matrix::from_rows(&[func.to_vec()], n).expect("functional");
    Subspace::spanned_by(n, &row.kernel())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Maximality {
    Maximal,
    NotASubalgebra,
    /// A proper subalgebra strictly between the candidate and `L`.
    Intermediate(Subspace),
    Undecided,
}

/// Codimension one, or `L/M` irreducible under the two-sided action of `M`,
/// proves maximality; an intermediate subalgebra refutes it.
pub fn check_maximal(l: &StructureConstants, m: &Subspace) -> Maximality {
    let n = l.dim();
    if !l.is_subalgebra(m) || m.is_full() {
        return Maximality::NotASubalgebra;
    }
    if m.dim() + 1 == n {
        return Maximality::Maximal;
    }
    let mut ops = Vec::new();
    for b in m.basis() {
        ops.push(l.right_mult(b));
        ops.push(l.left_mult(b));
    }
    let fam = OperatorFamily::new(n, ops)
        .quotient(m)
        .expect("a subalgebra is invariant under its own multiplications");
    if irreducibility(&fam) == Irreducibility::Irreducible {
        return Maximality::Maximal;
    }
    let mut probes: Vec<Vector> = (0..n).map(|i| unit_vector(n, i)).collect();
    for i in 0..n {
        for j in i + 1..n {
            let mut v = unit_vector(n, i);
            v[j] = Rational::one();
            probes.push(v);
        }
    }
    for v in probes {
        if m.contains_vector(&v) {
            continue;
        }
        let mut ext = m.clone();
        ext.insert(&v);
        let c = l.subalgebra_closure(&ext);
        if !c.is_full() {
            return Maximality::Intermediate(c);
        }
    }
    Maximality::Undecided
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::fixtures;
    use crate::exact::vector_from_i64;

    fn span(n: usize, vs: &[&[i64]]) -> Subspace {
        Subspace::spanned_by(n, &vs.iter().map(|v| vector_from_i64(v)).collect::<Vec<_>>())
    }

    #[test]
    fn cyclic_hyperplanes() {
        let l = fixtures::cyclic4();
        let s = maximal_subalgebras_codim1(&l).unwrap();
        let i = span(4, &[&[0, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1]]);
        let m = span(4, &[&[1, -1, 0, 0], &[0, 1, -1, 0], &[0, 0, 1, -1]]);
        assert_eq!(s.subalgebras.len(), 2);
        assert!(s.subalgebras.contains(&i) && s.subalgebras.contains(&m));
        assert!(!s.families_sampled);
    }

    #[test]
    fn symm3_family() {
        let l = fixtures::symm3();
        let s = maximal_subalgebras_codim1(&l).unwrap();
        assert!(s.subalgebras.contains(&span(3, &[&[1, 0, 0], &[0, 0, 1]])));
        assert!(s.subalgebras.contains(&span(3, &[&[0, 1, 0], &[0, 0, 1]])));
        let e3 = span(3, &[&[0, 0, 1]]);
        for h in &s.subalgebras {
            assert!(h.contains(&e3));
        }
        let meet = s.subalgebras.iter().fold(Subspace::full(3), |acc, h| acc.intersect(h));
        assert_eq!(meet, e3);
    }

    #[test]
    fn abelian_lines() {
        let l = StructureConstants::abelian(2);
        let s = maximal_subalgebras_codim1(&l).unwrap();
        let meet = s.subalgebras.iter().fold(Subspace::full(2), |acc, h| acc.intersect(h));
        assert!(meet.is_zero());
        assert!(s.subalgebras.len() >= 3);
    }

    #[test]
    fn rotation_torus_is_maximal() {
        // [t,u] = v, [t,v] = -u
        let l = StructureConstants::lie_from_table(
            3,
            vec![(0, 1, vector_from_i64(&[0, 0, 1])), (0, 2, vector_from_i64(&[0, -1, 0]))],
        )
        .unwrap();
        assert_eq!(check_maximal(&l, &span(3, &[&[1, 0, 0]])), Maximality::Maximal);
        let s = maximal_subalgebras_codim1(&l).unwrap();
        assert_eq!(s.subalgebras, vec![span(3, &[&[0, 1, 0], &[0, 0, 1]])]);
        let h = fixtures::heisenberg();
        assert!(matches!(
            check_maximal(&h, &span(3, &[&[1, 0, 0]])),
            Maximality::Intermediate(_)
        ));
    }

    #[test]
    fn scope() {
        assert!(maximal_subalgebras_codim1(&StructureConstants::abelian(7)).is_err());
    }
}
