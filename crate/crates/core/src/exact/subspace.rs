use std::fmt;

use num_traits::{One, Zero};

use super::{axpy, format_rational, unit_vector, zero_vector, ExactError, Matrix, Rational, Vector};

/// A subspace of `Q^n` held in its canonical reduced row-echelon basis.
///
/// Two subspaces are equal exactly when their canonical bases are identical,
/// so the derived `PartialEq`/`Hash` give subspace equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vector>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: (0..ambient).map(|i| unit_vector(ambient, i)).collect(),
            pivots: (0..ambient).collect(),
        }
    }

    /// Canonical subspace spanned by `vectors` (the row-echelon canonicalizer).
    pub fn span<I, V>(ambient: usize, vectors: I) -> Result<Self, ExactError>
    where
        I: IntoIterator<Item = V>,
        V: AsRef<[Rational]>,
    {
        let mut rows = Vec::new();
        for v in vectors {
            let v = v.as_ref();
            if v.len() != ambient {
                return Err(ExactError::DimensionMismatch {
                    expected: ambient,
                    found: v.len(),
                });
            }
            rows.push(v.to_vec());
        }
        Ok(Self::from_rows_unchecked(ambient, rows))
    }

    /// Like [`Subspace::span`] for vectors already known to have the right length.
    pub fn spanned_by(ambient: usize, vectors: &[Vector]) -> Self {
        Self::span(ambient, vectors).expect("vector length matches ambient dimension")
    }

    fn from_rows_unchecked(ambient: usize, rows: Vec<Vector>) -> Self {
        if rows.is_empty() {
            return Subspace::zero(ambient);
        }
        let m = Matrix::from_rows(&rows, ambient).expect("rows checked");
        let (r, pivots) = m.rref();
        let basis = (0..pivots.len()).map(|i| r.row(i).to_vec()).collect();
        Subspace {
            ambient,
            basis,
            pivots,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.basis.len() == self.ambient
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn basis_matrix(&self) -> Matrix {
        Matrix::from_rows(&self.basis, self.ambient).expect("canonical rows")
    }

    /// `v` minus its component along the canonical basis; zero exactly when `v`
    /// lies in the subspace, and zero at every pivot column otherwise.
    pub fn reduce(&self, v: &[Rational]) -> Vector {
        assert_eq!(v.len(), self.ambient, "reduce: length");
        let mut out = v.to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            let c = out[p].clone();
            if !c.is_zero() {
                axpy(&mut out, &-c, row);
            }
        }
        out
    }

    pub fn contains_vector(&self, v: &[Rational]) -> bool {
        self.reduce(v).iter().all(Zero::is_zero)
    }

    /// Coordinates of `v` in the canonical basis, if `v` is in the subspace.
    pub fn coordinates(&self, v: &[Rational]) -> Option<Vector> {
        if !self.contains_vector(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    pub fn contains(&self, other: &Subspace) -> bool {
        assert_eq!(self.ambient, other.ambient, "ambient mismatch");
        other.basis.iter().all(|v| self.contains_vector(v))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient, "ambient mismatch");
        let rows: Vec<Vector> = self.basis.iter().chain(&other.basis).cloned().collect();
        Self::from_rows_unchecked(self.ambient, rows)
    }

    pub fn checked_sum(&self, other: &Subspace) -> Result<Subspace, ExactError> {
        self.check_ambient(other)?;
        Ok(self.sum(other))
    }

    pub fn intersect(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient, "ambient mismatch");
        if self.is_zero() || other.is_zero() {
            return Subspace::zero(self.ambient);
        }
        // w = sum c_k w_k lies in self iff self.reduce(w) = 0, which is linear in c.
        let reduced: Vec<Vector> = other.basis.iter().map(|w| self.reduce(w)).collect();
        let m = Matrix::from_columns(&reduced, self.ambient).expect("lengths");
        let vectors: Vec<Vector> = m
            .kernel()
            .iter()
            .map(|c| {
                let mut w = zero_vector(self.ambient);
                for (ck, wk) in c.iter().zip(&other.basis) {
                    axpy(&mut w, ck, wk);
                }
                w
            })
            .collect();
        Self::from_rows_unchecked(self.ambient, vectors)
    }

    pub fn checked_intersect(&self, other: &Subspace) -> Result<Subspace, ExactError> {
        self.check_ambient(other)?;
        Ok(self.intersect(other))
    }

    pub fn checked_contains(&self, other: &Subspace) -> Result<bool, ExactError> {
        self.check_ambient(other)?;
        Ok(self.contains(other))
    }

    fn check_ambient(&self, other: &Subspace) -> Result<(), ExactError> {
        if self.ambient != other.ambient {
            return Err(ExactError::DimensionMismatch {
                expected: self.ambient,
                found: other.ambient,
            });
        }
        Ok(())
    }

    /// Columns not used as pivots; their unit vectors complete the basis.
    pub fn free_columns(&self) -> Vec<usize> {
        (0..self.ambient).filter(|c| !self.pivots.contains(c)).collect()
    }

    /// Unit vectors at the non-pivot columns: the canonical complement, used
    /// as coset representatives for quotients.
    pub fn complement_basis(&self) -> Vec<Vector> {
        self.free_columns()
            .into_iter()
            .map(|c| unit_vector(self.ambient, c))
            .collect()
    }

    /// Projection onto the canonical complement coordinates:
    /// `v -> (reduce(v)[c] for c in free_columns)`.
    pub fn quotient_projection(&self) -> Matrix {
        let free = self.free_columns();
        let mut m = Matrix::zeros(free.len(), self.ambient);
        for j in 0..self.ambient {
            let r = self.reduce(&unit_vector(self.ambient, j));
            for (i, &c) in free.iter().enumerate() {
                m.set(i, j, r[c].clone());
            }
        }
        m
    }

    /// Image under a linear map given as a matrix acting on column vectors.
    pub fn image(&self, map: &Matrix) -> Subspace {
        assert_eq!(map.cols(), self.ambient, "image: map domain");
        let vectors: Vec<Vector> = self.basis.iter().map(|v| map.apply(v)).collect();
        Self::from_rows_unchecked(map.rows(), vectors)
    }

    /// `{ v in self : map(v) in target }`.
    pub fn preimage_within(&self, map: &Matrix, target: &Subspace) -> Subspace {
        assert_eq!(map.rows(), target.ambient, "preimage: codomain");
        if self.is_zero() {
            return self.clone();
        }
        let reduced: Vec<Vector> = self.basis.iter().map(|v| target.reduce(&map.apply(v))).collect();
        let m = Matrix::from_columns(&reduced, target.ambient).expect("lengths");
        let vectors: Vec<Vector> = m
            .kernel()
            .iter()
            .map(|c| {
                let mut w = zero_vector(self.ambient);
                for (ck, vk) in c.iter().zip(&self.basis) {
                    axpy(&mut w, ck, vk);
                }
                w
            })
            .collect();
        Self::from_rows_unchecked(self.ambient, vectors)
    }

    /// Adds a vector, returning whether the dimension grew.
    pub fn insert(&mut self, v: &[Rational]) -> bool {
        let r = self.reduce(v);
        if r.iter().all(Zero::is_zero) {
            return false;
        }
        let mut rows = std::mem::take(&mut self.basis);
        rows.push(r);
        *self = Self::from_rows_unchecked(self.ambient, rows);
        true
    }

    /// Vectors of `other` completing this subspace's basis to a basis of
    /// `self + other`, chosen greedily from `other`'s canonical basis.
    pub fn extension_within(&self, other: &Subspace) -> Vec<Vector> {
        let mut acc = self.clone();
        let mut out = Vec::new();
        for v in other.basis() {
            if acc.insert(v) {
                out.push(v.clone());
            }
        }
        out
    }

    /// True when the canonical basis is the identity, i.e. the coordinates
    /// are the ambient coordinates.
    pub fn is_standard(&self) -> bool {
        self.is_full() && self.basis.iter().enumerate().all(|(i, v)| {
            v.iter()
                .enumerate()
                .all(|(j, x)| if i == j { x.is_one() } else { x.is_zero() })
        })
    }
}

impl fmt::Display for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.basis.is_empty() {
            return write!(f, "0");
        }
        write!(f, "span{{")?;
        for (i, v) in self.basis.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            let parts: Vec<String> = v.iter().map(format_rational).collect();
            write!(f, "({})", parts.join(" "))?;
        }
        write!(f, "}}")
    }
}
