//! Leibniz algebras given by structure constants.

mod construct;
mod subobjects;

pub use construct::{Quotient, Subalgebra};
pub use subobjects::{Centers, Series, SeriesKind};

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use thiserror::Error;

use crate::exact::{axpy, is_zero_vector, unit_vector, zero_vector, ExactError, Matrix, Rational, Subspace, Vector};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error("table has {found} entries, expected {expected}")]
    TableShape { expected: usize, found: usize },
    #[error("subspace is not an ideal")]
    NotAnIdeal,
    #[error("subspace is not a subalgebra")]
    NotASubalgebra,
    #[error("{kind} identity fails: {failure}")]
    IdentityFailure { kind: Kind, failure: IdentityFailure },
    #[error("module action fails the representation axiom at generators ({0}, {1})")]
    ModuleAxiom(usize, usize),
    #[error("invalid construction parameters: {0}")]
    InvalidParameters(String),
}

/// Which defining identity an algebra is claimed to satisfy.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kind {
    Right,
    Left,
    Symmetric,
    Lie,
}

impl Kind {
    pub const ALL: [Kind; 4] = [Kind::Right, Kind::Left, Kind::Symmetric, Kind::Lie];

    pub fn as_str(self) -> &'static str {
        match self {
            Kind::Right => "right",
            Kind::Left => "left",
            Kind::Symmetric => "symmetric",
            Kind::Lie => "lie",
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Kind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "right" => Ok(Kind::Right),
            "left" => Ok(Kind::Left),
            "symmetric" => Ok(Kind::Symmetric),
            "lie" => Ok(Kind::Lie),
            other => Err(format!("unknown algebra kind `{other}`")),
        }
    }
}

/// First basis configuration at which an identity fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IdentityFailure {
    /// `(x, y, z)` basis indices violating a three-term identity.
    Triple(usize, usize, usize),
    /// `[b_i, b_i] != 0` in a claimed Lie algebra.
    NonzeroSquare(usize),
    /// `[b_i, b_j] != -[b_j, b_i]` in a claimed Lie algebra.
    NotAntisymmetric(usize, usize),
}

impl fmt::Display for IdentityFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IdentityFailure::Triple(i, j, k) => write!(f, "basis triple ({}, {}, {})", i + 1, j + 1, k + 1),
            IdentityFailure::NonzeroSquare(i) => write!(f, "nonzero square of basis vector {}", i + 1),
            IdentityFailure::NotAntisymmetric(i, j) => {
                write!(f, "basis pair ({}, {}) not antisymmetric", i + 1, j + 1)
            }
        }
    }
}

/// An `n`-dimensional algebra over the rationals: `table[i*n + j]` holds the
/// coordinates of `[b_i, b_j]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StructureConstants {
    dim: usize,
    table: Vec<Vector>,
    labels: Option<Vec<String>>,
}

impl StructureConstants {
    pub fn new(dim: usize, table: Vec<Vector>) -> Result<Self, AlgebraError> {
        if table.len() != dim * dim {
            return Err(AlgebraError::TableShape {
                expected: dim * dim,
                found: table.len(),
            });
        }
        for v in &table {
            if v.len() != dim {
                return Err(ExactError::DimensionMismatch {
                    expected: dim,
                    found: v.len(),
                }
                .into());
            }
        }
        Ok(StructureConstants {
            dim,
            table,
            labels: None,
        })
    }

    /// The abelian algebra of dimension `dim`.
    pub fn abelian(dim: usize) -> Self {
        StructureConstants {
            dim,
            table: vec![zero_vector(dim); dim * dim],
            labels: None,
        }
    }

    /// Builds a table from the nonzero products `(i, j, [b_i, b_j])`.
    pub fn from_products<I>(dim: usize, products: I) -> Result<Self, AlgebraError>
    where
        I: IntoIterator<Item = (usize, usize, Vector)>,
    {
        let mut alg = StructureConstants::abelian(dim);
        for (i, j, v) in products {
            if i >= dim || j >= dim {
                return Err(AlgebraError::InvalidParameters(format!(
                    "product index ({}, {}) out of range for dimension {dim}",
                    i + 1,
                    j + 1
                )));
            }
            if v.len() != dim {
                return Err(ExactError::DimensionMismatch {
                    expected: dim,
                    found: v.len(),
                }
                .into());
            }
            alg.table[i * dim + j] = v;
        }
        Ok(alg)
    }

    pub fn with_labels(mut self, labels: Option<Vec<String>>) -> Self {
        self.labels = labels.filter(|l| l.len() == self.dim);
        self
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis_product(&self, i: usize, j: usize) -> &[Rational] {
        &self.table[i * self.dim + j]
    }

    pub fn table(&self) -> &[Vector] {
        &self.table
    }

    /// Nonzero products `(i, j, [b_i, b_j])` in row-major order.
    pub fn nonzero_products(&self) -> impl Iterator<Item = (usize, usize, &Vector)> {
        let n = self.dim;
        self.table
            .iter()
            .enumerate()
            .filter(|(_, v)| !is_zero_vector(v))
            .map(move |(k, v)| (k / n, k % n, v))
    }

    /// `[x, y]` by bilinearity.
    pub fn product(&self, x: &[Rational], y: &[Rational]) -> Vector {
        let n = self.dim;
        debug_assert_eq!(x.len(), n);
        debug_assert_eq!(y.len(), n);
        let mut out = zero_vector(n);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                axpy(&mut out, &(xi * yj), &self.table[i * n + j]);
            }
        }
        out
    }

    /// Matrix of `R_x : y -> [y, x]` (column `j` holds `[b_j, x]`).
    pub fn right_mult(&self, x: &[Rational]) -> Matrix {
        let n = self.dim;
        let cols: Vec<Vector> = (0..n).map(|j| self.product(&unit_vector(n, j), x)).collect();
        Matrix::from_columns(&cols, n).expect("square")
    }

    /// Matrix of `L_x : y -> [x, y]`.
    pub fn left_mult(&self, x: &[Rational]) -> Matrix {
        let n = self.dim;
        let cols: Vec<Vector> = (0..n).map(|j| self.product(x, &unit_vector(n, j))).collect();
        Matrix::from_columns(&cols, n).expect("square")
    }

    pub fn right_mult_basis(&self, i: usize) -> Matrix {
        self.right_mult(&unit_vector(self.dim, i))
    }

    pub fn left_mult_basis(&self, i: usize) -> Matrix {
        self.left_mult(&unit_vector(self.dim, i))
    }

    pub fn is_abelian(&self) -> bool {
        self.table.iter().all(|v| is_zero_vector(v))
    }

    /// Evaluates the identity of `kind` on every basis triple; by
    /// multilinearity this decides it on the whole algebra.
    pub fn check_identity(&self, kind: Kind) -> Result<(), IdentityFailure> {
        match kind {
            Kind::Right => self.check_three_term(right_defect),
            Kind::Left => self.check_three_term(left_defect),
            Kind::Symmetric => {
                self.check_three_term(right_defect)?;
                self.check_three_term(left_defect)
            }
            Kind::Lie => {
                let n = self.dim;
                for i in 0..n {
                    if !is_zero_vector(self.basis_product(i, i)) {
                        return Err(IdentityFailure::NonzeroSquare(i));
                    }
                    for j in i + 1..n {
                        let s: Vector = self
                            .basis_product(i, j)
                            .iter()
                            .zip(self.basis_product(j, i))
                            .map(|(a, b)| a + b)
                            .collect();
                        if !is_zero_vector(&s) {
                            return Err(IdentityFailure::NotAntisymmetric(i, j));
                        }
                    }
                }
                // antisymmetric + right Leibniz = Jacobi
                self.check_three_term(right_defect)
            }
        }
    }

    pub fn satisfies(&self, kind: Kind) -> bool {
        self.check_identity(kind).is_ok()
    }

    /// Verifies the identity of `kind`, as a typed error.
    pub fn require(&self, kind: Kind) -> Result<(), AlgebraError> {
        self.check_identity(kind)
            .map_err(|failure| AlgebraError::IdentityFailure { kind, failure })
    }

    fn check_three_term(
        &self,
        defect: fn(&StructureConstants, &[Rational], &[Rational], &[Rational]) -> Vector,
    ) -> Result<(), IdentityFailure> {
        let n = self.dim;
        for i in 0..n {
            let x = unit_vector(n, i);
            for j in 0..n {
                let y = unit_vector(n, j);
                for k in 0..n {
                    let z = unit_vector(n, k);
                    if !is_zero_vector(&defect(self, &x, &y, &z)) {
                        return Err(IdentityFailure::Triple(i, j, k));
                    }
                }
            }
        }
        Ok(())
    }

    /// Strongest kind among lie, symmetric, right, left that the table satisfies.
    pub fn strongest_kind(&self) -> Option<Kind> {
        [Kind::Lie, Kind::Symmetric, Kind::Right, Kind::Left]
            .into_iter()
            .find(|&k| self.satisfies(k))
    }

    /// Span of `[u, w]` over canonical basis pairs.
    pub fn product_subspace(&self, u: &Subspace, w: &Subspace) -> Subspace {
        let mut vectors = Vec::new();
        for a in u.basis() {
            for b in w.basis() {
                let p = self.product(a, b);
                if !is_zero_vector(&p) {
                    vectors.push(p);
                }
            }
        }
        Subspace::spanned_by(self.dim, &vectors)
    }

    pub fn full(&self) -> Subspace {
        Subspace::full(self.dim)
    }

    pub fn zero_subspace(&self) -> Subspace {
        Subspace::zero(self.dim)
    }

    /// Relabels coordinates by an invertible change of basis whose columns are
    /// the new basis vectors written in the old basis.
    pub fn change_basis(&self, p: &Matrix) -> Result<StructureConstants, AlgebraError> {
        let n = self.dim;
        if p.rows() != n || p.cols() != n {
            return Err(AlgebraError::InvalidParameters("change of basis must be n x n".into()));
        }
        let inv = p
            .inverse()
            .ok_or_else(|| AlgebraError::InvalidParameters("change of basis is singular".into()))?;
        let new_basis: Vec<Vector> = (0..n).map(|j| p.column(j)).collect();
        let mut table = Vec::with_capacity(n * n);
        for a in &new_basis {
            for b in &new_basis {
                table.push(inv.apply(&self.product(a, b)));
            }
        }
        StructureConstants::new(n, table)
    }
}

/// `[x,[y,z]] - [[x,y],z] + [[x,z],y]`
fn right_defect(l: &StructureConstants, x: &[Rational], y: &[Rational], z: &[Rational]) -> Vector {
    let lhs = l.product(x, &l.product(y, z));
    let a = l.product(&l.product(x, y), z);
    let b = l.product(&l.product(x, z), y);
    lhs.iter().zip(&a).zip(&b).map(|((p, q), r)| p - q + r).collect()
}

/// `[x,[y,z]] - [[x,y],z] - [y,[x,z]]`
fn left_defect(l: &StructureConstants, x: &[Rational], y: &[Rational], z: &[Rational]) -> Vector {
    let lhs = l.product(x, &l.product(y, z));
    let a = l.product(&l.product(x, y), z);
    let b = l.product(y, &l.product(x, z));
    lhs.iter().zip(&a).zip(&b).map(|((p, q), r)| p - q - r).collect()
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::*;
    use crate::exact::{rat, vector_from_i64};

    /// Cyclic algebra on `a, a^2, a^3, a^4` with `[a^4, a] = a^4`.
    pub fn cyclic4() -> StructureConstants {
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

    /// `[e1,e2] = e1, [e2,e1] = -e1, [e2,e2] = e3`.
    pub fn symm3() -> StructureConstants {
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

    /// Basis `e, h, f`.
    pub fn sl2() -> StructureConstants {
        StructureConstants::from_products(
            3,
            vec![
                (1, 0, vector_from_i64(&[2, 0, 0])),
                (0, 1, vector_from_i64(&[-2, 0, 0])),
                (1, 2, vector_from_i64(&[0, 0, -2])),
                (2, 1, vector_from_i64(&[0, 0, 2])),
                (0, 2, vector_from_i64(&[0, 1, 0])),
                (2, 0, vector_from_i64(&[0, -1, 0])),
            ],
        )
        .unwrap()
    }

    pub fn heisenberg() -> StructureConstants {
        StructureConstants::from_products(
            3,
            vec![(0, 1, vector_from_i64(&[0, 0, 1])), (1, 0, vector_from_i64(&[0, 0, -1]))],
        )
        .unwrap()
    }

    pub fn half() -> Rational {
        rat(1) / rat(2)
    }
}

#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;
    use crate::exact::vector_from_i64;

    #[test]
    fn catalog_examples_satisfy_their_identities() {
        assert!(cyclic4().satisfies(Kind::Right));
        assert!(!cyclic4().satisfies(Kind::Left));
        assert!(symm3().satisfies(Kind::Symmetric));
        assert!(!symm3().satisfies(Kind::Lie));
        for k in Kind::ALL {
            assert!(sl2().satisfies(k), "sl2 fails {k}");
        }
    }

    #[test]
    fn cyclic_tails_without_generator_component_stay_leibniz() {
        // only products [-, a] are nonzero, so any tail inside L^2 is fine
        let mut table = cyclic4().table().to_vec();
        table[3 * 4] = vector_from_i64(&[0, 0, 1, 1]);
        let ok = StructureConstants::new(4, table).unwrap();
        assert!(ok.satisfies(Kind::Right));
    }

    #[test]
    fn perturbed_cyclic_fails_with_witness() {
        let mut table = cyclic4().table().to_vec();
        table[3 * 4] = vector_from_i64(&[1, 0, 0, 1]);
        let bad = StructureConstants::new(4, table).unwrap();
        let err = bad.check_identity(Kind::Right).unwrap_err();
        let IdentityFailure::Triple(i, j, k) = err else { panic!("expected a triple") };
        let (x, y, z) = (unit_vector(4, i), unit_vector(4, j), unit_vector(4, k));
        assert!(!is_zero_vector(&right_defect(&bad, &x, &y, &z)));
    }

    #[test]
    fn derived_algebra_of_cyclic() {
        let l = cyclic4();
        let l2 = l.product_subspace(&l.full(), &l.full());
        let expected = Subspace::spanned_by(
            4,
            &[vector_from_i64(&[0, 1, 0, 0]), vector_from_i64(&[0, 0, 1, 0]), vector_from_i64(&[0, 0, 0, 1])],
        );
        assert_eq!(l2, expected);
        assert!(l.product_subspace(&l.full(), &l.zero_subspace()).is_zero());
    }

    #[test]
    fn right_multiplication_of_generator() {
        let l = cyclic4();
        let ra = l.right_mult_basis(0);
        assert_eq!(ra.apply(&vector_from_i64(&[1, 0, 0, 0])), vector_from_i64(&[0, 1, 0, 0]));
        assert_eq!(ra.apply(&vector_from_i64(&[0, 0, 0, 1])), vector_from_i64(&[0, 0, 0, 1]));
    }
}
