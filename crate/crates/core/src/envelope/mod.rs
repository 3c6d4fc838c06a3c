//! Associative envelopes of matrix families and their trace-form radicals.

use num_traits::Zero;

use crate::exact::{axpy, minimal_polynomial, zero_vector, Matrix, Rational, Subspace, Vector};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OperatorFamily {
    ambient_dim: usize,
    generators: Vec<Matrix>,
}

impl OperatorFamily {
    /// Panics if a generator is not `ambient_dim x ambient_dim`.
    pub fn new(ambient_dim: usize, generators: Vec<Matrix>) -> Self {
        for g in &generators {
            assert!(
                g.rows() == ambient_dim && g.cols() == ambient_dim,
                "operator family: generator size"
            );
        }
        OperatorFamily {
            ambient_dim,
            generators,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn generators(&self) -> &[Matrix] {
        &self.generators
    }

    /// Restriction to an invariant subspace, in its canonical coordinates.
    /// Returns `None` if some generator does not preserve `w`.
    pub fn restrict(&self, w: &Subspace) -> Option<OperatorFamily> {
        let mut gens = Vec::with_capacity(self.generators.len());
        for g in &self.generators {
            let mut cols = Vec::with_capacity(w.dim());
            for b in w.basis() {
                cols.push(w.coordinates(&g.apply(b))?);
            }
            gens.push(Matrix::from_columns(&cols, w.dim()).expect("coordinates"));
        }
        Some(OperatorFamily::new(w.dim(), gens))
    }

    /// Induced action on `V / w`, in the canonical complement coordinates.
    pub fn quotient(&self, w: &Subspace) -> Option<OperatorFamily> {
        let proj = w.quotient_projection();
        let reps = w.complement_basis();
        let mut gens = Vec::with_capacity(self.generators.len());
        for g in &self.generators {
            for b in w.basis() {
                if !w.contains_vector(&g.apply(b)) {
                    return None;
                }
            }
            let cols: Vec<Vector> = reps.iter().map(|r| proj.apply(&g.apply(r))).collect();
            gens.push(Matrix::from_columns(&cols, reps.len()).expect("projection"));
        }
        Some(OperatorFamily::new(reps.len(), gens))
    }
}

/// A linear space of square matrices with a canonical basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixSpace {
    size: usize,
    flat: Subspace,
}

impl MatrixSpace {
    pub fn zero(size: usize) -> Self {
        MatrixSpace {
            size,
            flat: Subspace::zero(size * size),
        }
    }

    pub fn spanned_by(size: usize, mats: &[Matrix]) -> Self {
        let flat: Vec<Vector> = mats.iter().map(Matrix::flatten).collect();
        MatrixSpace {
            size,
            flat: Subspace::spanned_by(size * size, &flat),
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn dim(&self) -> usize {
        self.flat.dim()
    }

    pub fn is_zero(&self) -> bool {
        self.flat.is_zero()
    }

    pub fn basis(&self) -> Vec<Matrix> {
        self.flat
            .basis()
            .iter()
            .map(|v| Matrix::from_flat(self.size, v))
            .collect()
    }

    pub fn contains(&self, m: &Matrix) -> bool {
        self.flat.contains_vector(&m.flatten())
    }

    pub fn coordinates(&self, m: &Matrix) -> Option<Vector> {
        self.flat.coordinates(&m.flatten())
    }

    pub fn flat(&self) -> &Subspace {
        &self.flat
    }

    fn insert(&mut self, m: &Matrix) -> bool {
        self.flat.insert(&m.flatten())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AssocEnvelope {
    space: MatrixSpace,
    with_identity: bool,
}

impl AssocEnvelope {
    /// Least product-closed matrix space containing the generators (and the
    /// identity if requested).
    pub fn generate(fam: &OperatorFamily, with_identity: bool) -> Self {
        let n = fam.ambient_dim();
        let mut space = MatrixSpace::zero(n);
        let mut frontier = Vec::new();
        if with_identity {
            let id = Matrix::identity(n);
            if space.insert(&id) {
                frontier.push(id);
            }
        }
        for g in fam.generators() {
            if space.insert(g) {
                frontier.push(g.clone());
            }
        }
        // every word is a shorter word times a generator
        while let Some(w) = frontier.pop() {
            for g in fam.generators() {
                let p = &w * g;
                if space.insert(&p) {
                    frontier.push(p);
                }
            }
        }
        AssocEnvelope {
            space,
            with_identity,
        }
    }

    pub fn with_identity(&self) -> bool {
        self.with_identity
    }

    pub fn space(&self) -> &MatrixSpace {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn basis(&self) -> Vec<Matrix> {
        self.space.basis()
    }

    pub fn contains(&self, m: &Matrix) -> bool {
        self.space.contains(m)
    }

    /// `{a in E : tr(ab) = 0 for all b in E}`, the radical in characteristic zero.
    pub fn trace_radical(&self) -> MatrixSpace {
        let basis = self.basis();
        let k = basis.len();
        if k == 0 {
            return MatrixSpace::zero(self.space.size());
        }
        let mut gram = Matrix::zeros(k, k);
        for i in 0..k {
            for j in i..k {
                let t = (&basis[i] * &basis[j]).trace();
                gram.set(i, j, t.clone());
                gram.set(j, i, t);
            }
        }
        let elems: Vec<Matrix> = gram
            .kernel()
            .iter()
            .map(|c| combine_matrices(c, &basis, self.space.size()))
            .collect();
        MatrixSpace::spanned_by(self.space.size(), &elems)
    }

    /// `{X : X g = g X}` for all generators, as a matrix space.
    pub fn commutant(fam: &OperatorFamily) -> MatrixSpace {
        let n = fam.ambient_dim();
        let nn = n * n;
        let mut rows: Vec<Vector> = Vec::new();
        for g in fam.generators() {
            // (Xg - gX)_{ij} as a linear form in the entries x_{pq}
            for i in 0..n {
                for j in 0..n {
                    let mut row = zero_vector(nn);
                    for p in 0..n {
                        let gpj = g.get(p, j);
                        if !gpj.is_zero() {
                            row[i * n + p] += gpj;
                        }
                        let gip = g.get(i, p);
                        if !gip.is_zero() {
                            row[p * n + j] -= gip;
                        }
                    }
                    rows.push(row);
                }
            }
        }
        if rows.is_empty() {
            return MatrixSpace {
                size: n,
                flat: Subspace::full(nn),
            };
        }
        let m = Matrix::from_rows(&rows, nn).expect("row length");
        let kernel = m.kernel();
        MatrixSpace {
            size: n,
            flat: Subspace::spanned_by(nn, &kernel),
        }
    }
}

fn combine_matrices(coeffs: &[Rational], mats: &[Matrix], size: usize) -> Matrix {
    let mut flat = zero_vector(size * size);
    for (c, m) in coeffs.iter().zip(mats) {
        if !c.is_zero() {
            axpy(&mut flat, c, m.entries());
        }
    }
    Matrix::from_flat(size, &flat)
}

pub fn associative_envelope(fam: &OperatorFamily, with_identity: bool) -> AssocEnvelope {
    AssocEnvelope::generate(fam, with_identity)
}

pub fn trace_radical(env: &AssocEnvelope) -> MatrixSpace {
    env.trace_radical()
}

/// A nonzero element of the radical of the unital envelope, if any; `None`
/// means the module is completely reducible.
pub fn reducibility_witness(fam: &OperatorFamily) -> Option<Matrix> {
    if fam.ambient_dim() == 0 {
        return None;
    }
    let env = AssocEnvelope::generate(fam, true);
    env.trace_radical().basis().into_iter().next()
}

pub fn is_completely_reducible(fam: &OperatorFamily) -> bool {
    reducibility_witness(fam).is_none()
}

/// Every element of the (non-unital) envelope is nilpotent.
pub fn is_nil_family(fam: &OperatorFamily) -> bool {
    let env = AssocEnvelope::generate(fam, false);
    env.trace_radical().dim() == env.dim()
}

/// Outcome of an irreducibility test on a module.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Irreducibility {
    Irreducible,
    /// Either not semisimple or the commutant is not a division algebra.
    Reducible,
    /// The commutant is semisimple but too large to decide here.
    Undecided,
}

/// Irreducibility of the module given by `fam`: semisimple with a commutant
/// that is a field. Fields are recognised when the commutant is generated by
/// one element whose minimal polynomial has degree at most 3 and no rational
/// root.
pub fn irreducibility(fam: &OperatorFamily) -> Irreducibility {
    let n = fam.ambient_dim();
    if n == 0 {
        return Irreducibility::Reducible;
    }
    if n == 1 {
        return Irreducibility::Irreducible;
    }
    if !is_completely_reducible(fam) {
        return Irreducibility::Reducible;
    }
    let comm = AssocEnvelope::commutant(fam);
    if comm.dim() == 1 {
        return Irreducibility::Irreducible;
    }
    let basis = comm.basis();
    let mut minpolys = Vec::with_capacity(basis.len());
    for a in &basis {
        let m = minimal_polynomial(a).expect("square");
        // a zero divisor in the commutant splits the module
        if m.degree().unwrap_or(0) > 1 && !m.rational_roots().is_empty() {
            return Irreducibility::Reducible;
        }
        minpolys.push(m);
    }
    for a in &basis {
        for b in &basis {
            if a * b != b * a {
                return Irreducibility::Undecided;
            }
        }
    }
    for m in &minpolys {
        let deg = m.degree().unwrap_or(0);
        if deg == comm.dim() {
            if deg <= 3 {
                return if m.rational_roots().is_empty() {
                    Irreducibility::Irreducible
                } else {
                    Irreducibility::Reducible
                };
            }
            return Irreducibility::Undecided;
        }
    }
    Irreducibility::Undecided
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fam(n: usize, gens: &[&[i64]]) -> OperatorFamily {
        OperatorFamily::new(n, gens.iter().map(|g| Matrix::from_i64(n, n, g)).collect())
    }

    #[test]
    fn jordan_block_envelope() {
        let f = fam(3, &[&[0, 1, 0, 0, 0, 1, 0, 0, 0]]);
        let e = associative_envelope(&f, false);
        assert_eq!(e.dim(), 2);
        let nb = Matrix::from_i64(3, 3, &[0, 1, 0, 0, 0, 1, 0, 0, 0]);
        assert!(e.contains(&nb.pow(2)));
        assert!(is_nil_family(&f));
    }

    #[test]
    fn diagonal_envelope() {
        let f = fam(3, &[&[1, 0, 0, 0, 1, 0, 0, 0, 0]]);
        let e = associative_envelope(&f, true);
        assert_eq!(e.dim(), 2);
        assert!(e.trace_radical().is_zero());
    }

    #[test]
    fn radicals() {
        let full = fam(2, &[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 0]]);
        assert!(associative_envelope(&full, false).trace_radical().is_zero());
        let upper = fam(2, &[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 0, 1]]);
        let r = associative_envelope(&upper, false).trace_radical();
        assert_eq!(r.basis(), vec![Matrix::from_i64(2, 2, &[0, 1, 0, 0])]);
    }

    #[test]
    fn complete_reducibility() {
        assert!(is_completely_reducible(&fam(2, &[&[0, 0, 0, 0]])));
        assert!(is_completely_reducible(&OperatorFamily::new(3, vec![])));
        assert!(!is_completely_reducible(&fam(2, &[&[0, 1, 0, 0]])));
        assert!(!is_nil_family(&fam(2, &[&[1, 0, 0, 1]])));
    }

    #[test]
    fn irreducible_rotation() {
        assert_eq!(irreducibility(&fam(2, &[&[0, -1, 1, 0]])), Irreducibility::Irreducible);
        assert_eq!(irreducibility(&fam(2, &[&[1, 0, 0, 2]])), Irreducibility::Reducible);
        assert_eq!(irreducibility(&fam(2, &[&[0, 0, 0, 0]])), Irreducibility::Reducible);
        let sl2 = fam(2, &[&[0, 1, 0, 0], &[1, 0, 0, -1], &[0, 0, 1, 0]]);
        assert_eq!(irreducibility(&sl2), Irreducibility::Irreducible);
    }
}
