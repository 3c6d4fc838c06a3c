use super::StructureConstants;
use crate::exact::{is_zero_vector, unit_vector, Matrix, Subspace, Vector};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeriesKind {
    LowerCentral,
    Derived,
}

/// Terms of a descending series, starting with the algebra itself and ending
/// at the first repeated term.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Series {
    pub kind: SeriesKind,
    pub terms: Vec<Subspace>,
}

impl Series {
    pub fn stable_term(&self) -> &Subspace {
        self.terms.last().expect("series has at least one term")
    }

    /// True when the series reaches zero.
    pub fn terminates(&self) -> bool {
        self.stable_term().is_zero()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Centers {
    pub center: Subspace,
    pub right: Subspace,
    pub left: Subspace,
}

impl StructureConstants {
    pub fn is_subalgebra(&self, s: &Subspace) -> bool {
        s.basis()
            .iter()
            .all(|u| s.basis().iter().all(|w| s.contains_vector(&self.product(u, w))))
    }

    pub fn is_ideal(&self, s: &Subspace) -> bool {
        let n = self.dim;
        s.basis().iter().all(|u| {
            (0..n).all(|j| {
                let b = unit_vector(n, j);
                s.contains_vector(&self.product(u, &b)) && s.contains_vector(&self.product(&b, u))
            })
        })
    }

    /// Least subalgebra containing `s`.
    pub fn subalgebra_closure(&self, s: &Subspace) -> Subspace {
        let mut acc = s.clone();
        loop {
            let mut grew = false;
            let basis = acc.basis().to_vec();
            for u in &basis {
                for w in &basis {
                    let p = self.product(u, w);
                    if !is_zero_vector(&p) && acc.insert(&p) {
                        grew = true;
                    }
                }
            }
            if !grew {
                return acc;
            }
        }
    }

    /// Least ideal containing `s`.
    pub fn ideal_closure(&self, s: &Subspace) -> Subspace {
        let n = self.dim;
        let mut acc = s.clone();
        let mut frontier: Vec<Vector> = acc.basis().to_vec();
        while let Some(u) = frontier.pop() {
            for j in 0..n {
                let b = unit_vector(n, j);
                for p in [self.product(&u, &b), self.product(&b, &u)] {
                    if acc.insert(&p) {
                        frontier.push(p);
                    }
                }
            }
        }
        acc
    }

    /// Largest ideal of the algebra contained in `u` (the core of `u`).
    pub fn largest_ideal_in(&self, u: &Subspace) -> Subspace {
        let n = self.dim;
        let rights: Vec<Matrix> = (0..n).map(|j| self.right_mult_basis(j)).collect();
        let lefts: Vec<Matrix> = (0..n).map(|j| self.left_mult_basis(j)).collect();
        let mut v = u.clone();
        loop {
            let mut next = v.clone();
            for m in rights.iter().chain(&lefts) {
                next = next.preimage_within(m, &v);
            }
            if next == v {
                return v;
            }
            v = next;
        }
    }

    /// The ideal generated by all squares; the algebra is Lie exactly when it
    /// is zero.
    pub fn leibniz_kernel(&self) -> Subspace {
        let n = self.dim;
        let mut squares = Subspace::zero(n);
        for i in 0..n {
            squares.insert(self.basis_product(i, i));
            for j in i + 1..n {
                // (b_i + b_j)^2 - b_i^2 - b_j^2 = [b_i,b_j] + [b_j,b_i]
                let sym: Vector = self
                    .basis_product(i, j)
                    .iter()
                    .zip(self.basis_product(j, i))
                    .map(|(a, b)| a + b)
                    .collect();
                squares.insert(&sym);
            }
        }
        self.ideal_closure(&squares)
    }

    /// Series of the subalgebra `u` (pass the full space for the algebra itself).
    pub fn series_of(&self, u: &Subspace, kind: SeriesKind) -> Series {
        let mut terms = vec![u.clone()];
        loop {
            let last = terms.last().unwrap();
            let next = match kind {
                SeriesKind::LowerCentral => self.product_subspace(last, u),
                SeriesKind::Derived => self.product_subspace(last, last),
            };
            if &next == last {
                break;
            }
            let done = next.is_zero();
            terms.push(next);
            if done {
                break;
            }
        }
        Series { kind, terms }
    }

    pub fn series(&self, kind: SeriesKind) -> Series {
        self.series_of(&self.full(), kind)
    }

    pub fn is_nilpotent(&self) -> bool {
        self.series(SeriesKind::LowerCentral).terminates()
    }

    pub fn is_solvable(&self) -> bool {
        self.series(SeriesKind::Derived).terminates()
    }

    /// Nilpotency of a subalgebra as an algebra in its own right.
    pub fn is_nilpotent_subalgebra(&self, u: &Subspace) -> bool {
        self.series_of(u, SeriesKind::LowerCentral).terminates()
    }

    pub fn is_solvable_subalgebra(&self, u: &Subspace) -> bool {
        self.series_of(u, SeriesKind::Derived).terminates()
    }

    pub fn is_abelian_subspace(&self, u: &Subspace) -> bool {
        self.product_subspace(u, u).is_zero()
    }

    /// `Z(L)`, `Z_r(L) = {z : [L,z] = 0}` and `Z_l(L) = {z : [z,L] = 0}`.
    pub fn centers(&self) -> Centers {
        let n = self.dim;
        let lefts: Vec<Matrix> = (0..n).map(|i| self.left_mult_basis(i)).collect();
        let rights: Vec<Matrix> = (0..n).map(|i| self.right_mult_basis(i)).collect();
        let right = common_kernel(n, &lefts);
        let left = common_kernel(n, &rights);
        let center = right.intersect(&left);
        Centers { center, right, left }
    }

    pub fn right_center(&self) -> Subspace {
        let n = self.dim;
        let lefts: Vec<Matrix> = (0..n).map(|i| self.left_mult_basis(i)).collect();
        common_kernel(n, &lefts)
    }

    /// Centraliser-style annihilator: `{x : [x,U] = 0 = [U,x]}`.
    pub fn annihilator(&self, u: &Subspace) -> Subspace {
        let n = self.dim;
        let mats: Vec<Matrix> = u
            .basis()
            .iter()
            .flat_map(|v| [self.right_mult(v), self.left_mult(v)])
            .collect();
        common_kernel(n, &mats)
    }

    /// Largest subspace whose products with `b` on either side stay in `b`.
    pub fn idealiser(&self, b: &Subspace) -> Subspace {
        let n = self.dim;
        let mut acc = Subspace::full(n);
        for v in b.basis() {
            acc = acc.preimage_within(&self.right_mult(v), b);
            acc = acc.preimage_within(&self.left_mult(v), b);
        }
        acc
    }

    pub fn opposite(&self) -> StructureConstants {
        let n = self.dim;
        let mut table = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                table.push(self.basis_product(j, i).to_vec());
            }
        }
        StructureConstants::new(n, table)
            .expect("transposed table keeps its shape")
            .with_labels(self.labels.clone())
    }
}

/// Vectors killed by every matrix in `mats`.
pub(crate) fn common_kernel(n: usize, mats: &[Matrix]) -> Subspace {
    if mats.is_empty() {
        return Subspace::full(n);
    }
    let mut rows: Vec<Vector> = Vec::new();
    for m in mats {
        rows.extend(m.row_vectors());
    }
    let stacked = Matrix::from_rows(&rows, n).expect("square operators");
    Subspace::spanned_by(n, &stacked.kernel())
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::super::Kind;
    use super::*;
    use crate::exact::vector_from_i64;

    fn span(n: usize, vs: &[&[i64]]) -> Subspace {
        Subspace::spanned_by(n, &vs.iter().map(|v| vector_from_i64(v)).collect::<Vec<_>>())
    }

    #[test]
    fn cyclic_closures() {
        let l = cyclic4();
        let i = l.ideal_closure(&span(4, &[&[0, 1, 0, 0]]));
        assert_eq!(i, span(4, &[&[0, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1]]));
        assert_eq!(l.ideal_closure(&i), i);
        assert!(l.subalgebra_closure(&span(4, &[&[1, 0, 0, 0]])).is_full());
    }

    #[test]
    fn leibniz_kernels() {
        let l = cyclic4();
        let l2 = l.product_subspace(&l.full(), &l.full());
        assert_eq!(l.leibniz_kernel(), l2);
        assert_eq!(symm3().leibniz_kernel(), span(3, &[&[0, 0, 1]]));
        assert!(sl2().leibniz_kernel().is_zero());
        assert!(heisenberg().leibniz_kernel().is_zero());
    }

    #[test]
    fn series_flags() {
        let l = cyclic4();
        assert!(l.is_solvable());
        assert!(!l.is_nilpotent());
        let lc = l.series(SeriesKind::LowerCentral);
        assert_eq!(lc.stable_term(), &span(4, &[&[0, 0, 0, 1]]));
        let ab = StructureConstants::abelian(3);
        let s = ab.series(SeriesKind::LowerCentral);
        assert_eq!(s.terms.len(), 2);
        assert!(s.terminates());
        let d = sl2().series(SeriesKind::Derived);
        assert_eq!(d.terms.len(), 1);
        assert!(!d.terminates());
    }

    #[test]
    fn centres() {
        let c = cyclic4().centers();
        assert_eq!(c.right, span(4, &[&[0, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1]]));
        let s = symm3().centers();
        assert_eq!(s.center, span(3, &[&[0, 0, 1]]));
        let a = StructureConstants::abelian(2).centers();
        assert!(a.center.is_full() && a.left.is_full() && a.right.is_full());
    }

    #[test]
    fn opposite_swaps_sides() {
        let l = cyclic4();
        let op = l.opposite();
        assert!(op.satisfies(Kind::Left));
        assert!(!op.satisfies(Kind::Right));
        assert_eq!(op.opposite(), l);
    }

    #[test]
    fn idealisers() {
        let l = symm3();
        assert!(l.idealiser(&span(3, &[&[1, 0, 0]])).is_full());
        let c = cyclic4();
        let b = span(4, &[&[0, 0, 1, -1]]);
        let ib = c.idealiser(&b);
        assert!(ib.contains(&b));
        assert!(c.is_subalgebra(&ib));
    }

    #[test]
    fn core_of_subspace() {
        let l = cyclic4();
        // the maximal subalgebra spanned by successive differences has core
        // spanned by the last two differences
        let m = span(4, &[&[1, -1, 0, 0], &[0, 1, -1, 0], &[0, 0, 1, -1]]);
        assert!(l.is_subalgebra(&m));
        let core = l.largest_ideal_in(&m);
        assert!(l.is_ideal(&core));
        assert!(m.contains(&core));
    }
}
