use num_traits::Zero;

use super::{AlgebraError, Kind, StructureConstants};
use crate::exact::{axpy, zero_vector, Matrix, Rational, Subspace, Vector};

/// `L/J` on the canonical coset representatives of `J`.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub algebra: StructureConstants,
    pub ideal: Subspace,
    /// `(n - dim J) x n`, kills `J`.
    pub projection: Matrix,
    /// Coset representatives: unit vectors at the non-pivot columns of `J`.
    pub section: Vec<Vector>,
}

impl Quotient {
    pub fn project(&self, v: &[Rational]) -> Vector {
        self.projection.apply(v)
    }

    pub fn lift(&self, w: &[Rational]) -> Vector {
        let n = self.ideal.ambient_dim();
        let mut out = zero_vector(n);
        for (c, rep) in w.iter().zip(&self.section) {
            if !c.is_zero() {
                axpy(&mut out, c, rep);
            }
        }
        out
    }

    pub fn project_subspace(&self, u: &Subspace) -> Subspace {
        u.image(&self.projection)
    }

    /// Full preimage `lift(W) + J`.
    pub fn preimage(&self, w: &Subspace) -> Subspace {
        let n = self.ideal.ambient_dim();
        let lifted: Vec<Vector> = w.basis().iter().map(|v| self.lift(v)).collect();
        Subspace::spanned_by(n, &lifted).sum(&self.ideal)
    }
}

/// A subalgebra presented as an algebra on its canonical basis.
#[derive(Clone, Debug)]
pub struct Subalgebra {
    pub algebra: StructureConstants,
    pub subspace: Subspace,
}

impl Subalgebra {
    /// Ambient vector for subalgebra coordinates `w`.
    pub fn include(&self, w: &[Rational]) -> Vector {
        let mut out = zero_vector(self.subspace.ambient_dim());
        for (c, b) in w.iter().zip(self.subspace.basis()) {
            if !c.is_zero() {
                axpy(&mut out, c, b);
            }
        }
        out
    }

    pub fn include_subspace(&self, u: &Subspace) -> Subspace {
        let vs: Vec<Vector> = u.basis().iter().map(|w| self.include(w)).collect();
        Subspace::spanned_by(self.subspace.ambient_dim(), &vs)
    }

    /// Coordinates of an ambient subspace lying inside the subalgebra.
    pub fn restrict_subspace(&self, u: &Subspace) -> Option<Subspace> {
        let vs: Option<Vec<Vector>> = u.basis().iter().map(|v| self.subspace.coordinates(v)).collect();
        Some(Subspace::spanned_by(self.subspace.dim(), &vs?))
    }
}

impl StructureConstants {
    pub fn quotient(&self, j: &Subspace) -> Result<Quotient, AlgebraError> {
        if !self.is_ideal(j) {
            return Err(AlgebraError::NotAnIdeal);
        }
        let projection = j.quotient_projection();
        let section = j.complement_basis();
        let m = section.len();
        let mut table = Vec::with_capacity(m * m);
        for a in &section {
            for b in &section {
                table.push(projection.apply(&self.product(a, b)));
            }
        }
        let algebra = StructureConstants::new(m, table)?;
        let q = Quotient {
            algebra,
            ideal: j.clone(),
            projection,
            section,
        };
        debug_assert!(q.is_homomorphism(self));
        Ok(q)
    }

    /// `L/I`, a Lie algebra.
    pub fn liesation(&self) -> Quotient {
        self.quotient(&self.leibniz_kernel()).expect("the Leibniz kernel is an ideal")
    }

    pub fn restrict(&self, s: &Subspace) -> Result<Subalgebra, AlgebraError> {
        if !self.is_subalgebra(s) {
            return Err(AlgebraError::NotASubalgebra);
        }
        let basis = s.basis();
        let mut table = Vec::with_capacity(basis.len() * basis.len());
        for a in basis {
            for b in basis {
                table.push(s.coordinates(&self.product(a, b)).expect("closed"));
            }
        }
        Ok(Subalgebra {
            algebra: StructureConstants::new(basis.len(), table)?,
            subspace: s.clone(),
        })
    }

    /// `A ⊕ B` with the summands on the first and last coordinates.
    pub fn direct_sum(a: &StructureConstants, b: &StructureConstants) -> StructureConstants {
        let (p, q) = (a.dim, b.dim);
        let n = p + q;
        let mut out = StructureConstants::abelian(n);
        for i in 0..p {
            for j in 0..p {
                out.table[i * n + j][..p].clone_from_slice(a.basis_product(i, j));
            }
        }
        for i in 0..q {
            for j in 0..q {
                out.table[(p + i) * n + p + j][p..].clone_from_slice(b.basis_product(i, j));
            }
        }
        out
    }

    /// Right Leibniz algebra `g ⊕ M` with `[x+m, y+n] = [x,y] + m·y`, where
    /// `actions[i]` is the matrix of `m -> m·b_i` on column vectors.
    pub fn demisemidirect(g: &StructureConstants, actions: &[Matrix]) -> Result<StructureConstants, AlgebraError> {
        g.require(Kind::Lie)?;
        let p = g.dim;
        if actions.len() != p {
            return Err(AlgebraError::InvalidParameters(format!(
                "expected {p} action matrices, found {}",
                actions.len()
            )));
        }
        let q = actions.first().map_or(0, |a| a.rows());
        if actions.iter().any(|a| a.rows() != q || a.cols() != q) {
            return Err(AlgebraError::InvalidParameters("action matrices must share one square size".into()));
        }
        // right module: (m·x)·y - (m·y)·x = m·[x,y]
        for i in 0..p {
            for j in 0..p {
                let mut lhs = Matrix::zeros(q, q);
                for (k, c) in g.basis_product(i, j).iter().enumerate() {
                    if !c.is_zero() {
                        lhs = &lhs + &actions[k].scale(c);
                    }
                }
                if lhs != actions[j].commutator(&actions[i]) {
                    return Err(AlgebraError::ModuleAxiom(i, j));
                }
            }
        }
        let n = p + q;
        let mut out = StructureConstants::abelian(n);
        for i in 0..p {
            for j in 0..p {
                out.table[i * n + j][..p].clone_from_slice(g.basis_product(i, j));
            }
        }
        for (j, a) in actions.iter().enumerate() {
            for m in 0..q {
                let col = a.column(m);
                out.table[(p + m) * n + j][p..].clone_from_slice(&col);
            }
        }
        out.require(Kind::Right)?;
        Ok(out)
    }

    /// Cyclic right Leibniz algebra on `a, a^2, ..., a^n` with
    /// `[a^k, a] = a^(k+1)` and `[a^n, a] = sum tail[k] a^(k+1)`.
    pub fn cyclic(n: usize, tail: &[Rational]) -> Result<StructureConstants, AlgebraError> {
        if n == 0 || tail.len() != n {
            return Err(AlgebraError::InvalidParameters(format!(
                "cyclic algebra of dimension {n} needs {n} tail coefficients"
            )));
        }
        if !tail[0].is_zero() {
            return Err(AlgebraError::InvalidParameters(
                "the tail may not have an `a` component".into(),
            ));
        }
        let mut out = StructureConstants::abelian(n);
        for k in 0..n - 1 {
            out.table[k * n][k + 1] = Rational::from_integer(1.into());
        }
        out.table[(n - 1) * n] = tail.to_vec();
        out.require(Kind::Right)?;
        Ok(out)
    }

    /// Lie algebra from the brackets `[b_i, b_j]` with `i < j`.
    pub fn lie_from_table<I>(dim: usize, brackets: I) -> Result<StructureConstants, AlgebraError>
    where
        I: IntoIterator<Item = (usize, usize, Vector)>,
    {
        let mut products = Vec::new();
        for (i, j, v) in brackets {
            if i >= j {
                return Err(AlgebraError::InvalidParameters(format!(
                    "bracket ({}, {}) must have i < j",
                    i + 1,
                    j + 1
                )));
            }
            let neg: Vector = v.iter().map(|c| -c).collect();
            products.push((i, j, v));
            products.push((j, i, neg));
        }
        let out = StructureConstants::from_products(dim, products)?;
        out.require(Kind::Lie)?;
        Ok(out)
    }
}

impl Quotient {
    /// `pi([b_i, b_j]) = [pi b_i, pi b_j]` on all basis pairs.
    pub fn is_homomorphism(&self, parent: &StructureConstants) -> bool {
        let n = parent.dim;
        let images: Vec<Vector> = (0..n)
            .map(|i| self.project(&crate::exact::unit_vector(n, i)))
            .collect();
        (0..n).all(|i| {
            (0..n).all(|j| {
                self.project(parent.basis_product(i, j)) == self.algebra.product(&images[i], &images[j])
            })
        })
    }
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::*;
    use crate::exact::{rat, vector_from_i64};

    fn sl2_natural() -> Vec<Matrix> {
        // standard representation pi, right action m·x = -pi(x) m
        vec![
            Matrix::from_i64(2, 2, &[0, -1, 0, 0]),
            Matrix::from_i64(2, 2, &[-1, 0, 0, 1]),
            Matrix::from_i64(2, 2, &[0, 0, -1, 0]),
        ]
    }

    #[test]
    fn cyclic_matches_fixture() {
        let tail = vec![rat(0), rat(0), rat(0), rat(1)];
        assert_eq!(StructureConstants::cyclic(4, &tail).unwrap(), cyclic4());
        assert!(StructureConstants::cyclic(3, &[rat(1), rat(0), rat(0)]).is_err());
    }

    #[test]
    fn symm3_liesation() {
        let q = symm3().liesation();
        assert_eq!(q.algebra.dim(), 2);
        assert!(q.algebra.satisfies(Kind::Lie));
        assert_eq!(q.algebra.basis_product(0, 1), &vector_from_i64(&[1, 0])[..]);
        assert!(q.is_homomorphism(&symm3()));
        let c = cyclic4().liesation();
        assert_eq!(c.algebra.dim(), 1);
        assert!(c.algebra.is_abelian());
    }

    #[test]
    fn trivial_quotients() {
        let l = sl2();
        assert_eq!(l.quotient(&l.zero_subspace()).unwrap().algebra, l);
        assert_eq!(l.quotient(&l.full()).unwrap().algebra.dim(), 0);
        let bad = Subspace::spanned_by(3, &[vector_from_i64(&[1, 0, 0])]);
        assert!(matches!(l.quotient(&bad), Err(AlgebraError::NotAnIdeal)));
    }

    #[test]
    fn demisemidirect_sl2() {
        let l = StructureConstants::demisemidirect(&sl2(), &sl2_natural()).unwrap();
        assert_eq!(l.dim(), 5);
        assert!(!l.satisfies(Kind::Lie));
        let module = Subspace::spanned_by(5, &[vector_from_i64(&[0, 0, 0, 1, 0]), vector_from_i64(&[0, 0, 0, 0, 1])]);
        assert_eq!(l.leibniz_kernel(), module);
        let wrong: Vec<Matrix> = sl2_natural().iter().map(|m| m.scale(&rat(-1))).collect();
        assert!(matches!(
            StructureConstants::demisemidirect(&sl2(), &wrong),
            Err(AlgebraError::ModuleAxiom(..))
        ));
    }

    #[test]
    fn direct_sum_of_lie_is_lie() {
        let s = StructureConstants::direct_sum(&sl2(), &heisenberg());
        assert!(s.satisfies(Kind::Lie));
        assert_eq!(s.dim(), 6);
    }

    #[test]
    fn restriction() {
        let l = symm3();
        let s = Subspace::spanned_by(3, &[vector_from_i64(&[1, 0, 0]), vector_from_i64(&[0, 0, 1])]);
        let sub = l.restrict(&s).unwrap();
        assert!(sub.algebra.is_abelian());
        let half_vec = vec![half(), rat(0)];
        assert_eq!(sub.include(&half_vec), vec![half(), rat(0), rat(0)]);
    }
}
