//! Splitting over ideals: complement subalgebras from linear systems.

use std::fmt;

use num_traits::Zero;
use thiserror::Error;

use crate::algebra::StructureConstants;
use crate::exact::{axpy, zero_vector, Matrix, Rational, Subspace, Vector};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ExtensionError {
    #[error("subspace is not an ideal")]
    NotAnIdeal,
    #[error("ideal is not abelian")]
    NotAbelian,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SplitStatus {
    Split,
    NonSplit,
    Unknown,
}

impl fmt::Display for SplitStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SplitStatus::Split => "split",
            SplitStatus::NonSplit => "non_split",
            SplitStatus::Unknown => "unknown",
        })
    }
}

/// An inconsistent linear system `M u = b` together with a vector `y` such
/// that `y M = 0` and `y b != 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Infeasibility {
    pub description: String,
    pub matrix: Matrix,
    pub rhs: Vector,
    pub dual: Vector,
}

impl Infeasibility {
    /// Re-checks the Fredholm certificate.
    pub fn certifies(&self) -> bool {
        let yt = self.matrix.transpose().apply(&self.dual);
        let yb: Rational = self.dual.iter().zip(&self.rhs).map(|(a, b)| a * b).sum();
        yt.iter().all(Zero::is_zero) && !yb.is_zero()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitResult {
    pub status: SplitStatus,
    pub complement: Option<Subspace>,
    pub obstruction: Option<Infeasibility>,
    /// Why the result is `Unknown`.
    pub reason: Option<String>,
}

impl SplitResult {
    fn split(c: Subspace) -> Self {
        SplitResult {
            status: SplitStatus::Split,
            complement: Some(c),
            obstruction: None,
            reason: None,
        }
    }

    fn non_split(o: Infeasibility) -> Self {
        SplitResult {
            status: SplitStatus::NonSplit,
            complement: None,
            obstruction: Some(o),
            reason: None,
        }
    }

    fn unknown(reason: &str) -> Self {
        SplitResult {
            status: SplitStatus::Unknown,
            complement: None,
            obstruction: None,
            reason: Some(reason.into()),
        }
    }
}

/// Which conditions the complement `span{c_i + τ_i}` must satisfy.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ComplementConditions {
    /// Closed under the product.
    pub closed: bool,
    /// All squares vanish (a Lie subalgebra when also closed).
    pub lie: bool,
}

impl ComplementConditions {
    pub const SUBALGEBRA: ComplementConditions = ComplementConditions {
        closed: true,
        lie: false,
    };
    pub const SQUARES: ComplementConditions = ComplementConditions {
        closed: false,
        lie: true,
    };
    pub const LIE_SUBALGEBRA: ComplementConditions = ComplementConditions {
        closed: true,
        lie: true,
    };
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ComplementSearch {
    Found(Subspace),
    Infeasible(Infeasibility),
}

/// Linear system in the corrections `τ_i ∈ A` of the canonical complement
/// `c_i` of an abelian ideal `A`. Returns the system matrix and right-hand side.
pub fn complement_system(l: &StructureConstants, a: &Subspace, conds: ComplementConditions) -> (Matrix, Vector) {
    let n = l.dim();
    let reps = a.complement_basis();
    let s = reps.len();
    let abasis = a.basis();
    let m = abasis.len();
    let proj = a.quotient_projection();
    let unknowns = s * m;
    let mut rows: Vec<Vector> = Vec::new();
    let mut rhs: Vec<Rational> = Vec::new();
    if conds.closed {
        for i in 0..s {
            for j in 0..s {
                let prod = l.product(&reps[i], &reps[j]);
                let gamma = proj.apply(&prod);
                // constant: [c_i,c_j] - sum gamma_k c_k
                let mut konst = prod.clone();
                for (k, g) in gamma.iter().enumerate() {
                    axpy(&mut konst, &-g, &reps[k]);
                }
                let mut block = vec![zero_vector(unknowns); n];
                for (t, at) in abasis.iter().enumerate() {
                    let left = l.product(&reps[i], at);
                    let right = l.product(at, &reps[j]);
                    for r in 0..n {
                        block[r][j * m + t] += &left[r];
                        block[r][i * m + t] += &right[r];
                    }
                    for (k, g) in gamma.iter().enumerate() {
                        if !g.is_zero() {
                            for r in 0..n {
                                block[r][k * m + t] -= g * &at[r];
                            }
                        }
                    }
                }
                rows.extend(block);
                rhs.extend(konst.into_iter().map(|x| -x));
            }
        }
    }
    if conds.lie {
        for i in 0..s {
            for j in i..s {
                let konst: Vector = l
                    .product(&reps[i], &reps[j])
                    .iter()
                    .zip(l.product(&reps[j], &reps[i]))
                    .map(|(x, y)| x + y)
                    .collect();
                let mut block = vec![zero_vector(unknowns); n];
                for (t, at) in abasis.iter().enumerate() {
                    // [c_i, τ_j] + [τ_j, c_i]
                    let pj = sym_product(l, &reps[i], at);
                    // [τ_i, c_j] + [c_j, τ_i]
                    let pi = sym_product(l, &reps[j], at);
                    for r in 0..n {
                        block[r][j * m + t] += &pj[r];
                        block[r][i * m + t] += &pi[r];
                    }
                }
                rows.extend(block);
                rhs.extend(konst.into_iter().map(|x| -x));
            }
        }
    }
    let matrix = if rows.is_empty() {
        Matrix::zeros(0, unknowns)
    } else {
        Matrix::from_rows(&rows, unknowns).expect("row length")
    };
    (matrix, rhs)
}

fn sym_product(l: &StructureConstants, x: &[Rational], y: &[Rational]) -> Vector {
    l.product(x, y)
        .iter()
        .zip(l.product(y, x))
        .map(|(p, q)| p + q)
        .collect()
}

/// Solves [`complement_system`]; infeasibility comes with a dual certificate.
pub fn find_complement(
    l: &StructureConstants,
    a: &Subspace,
    conds: ComplementConditions,
) -> Result<ComplementSearch, ExtensionError> {
    check_abelian_ideal(l, a)?;
    let (matrix, rhs) = complement_system(l, a, conds);
    let reps = a.complement_basis();
    let m = a.dim();
    let solution = if matrix.rows() == 0 {
        Some(zero_vector(matrix.cols()))
    } else {
        matrix.solve(&rhs)
    };
    match solution {
        Some(u) => {
            let ys: Vec<Vector> = reps
                .iter()
                .enumerate()
                .map(|(i, c)| {
                    let mut y = c.clone();
                    for (t, at) in a.basis().iter().enumerate() {
                        axpy(&mut y, &u[i * m + t], at);
                    }
                    y
                })
                .collect();
            Ok(ComplementSearch::Found(Subspace::spanned_by(l.dim(), &ys)))
        }
        None => {
            let dual = dual_certificate(&matrix, &rhs).expect("inconsistent system has a dual certificate");
            let what = match (conds.closed, conds.lie) {
                (true, true) => "no complement is a Lie subalgebra",
                (true, false) => "no complement is a subalgebra",
                (false, true) => "no complement has vanishing squares",
                (false, false) => "empty condition set",
            };
            Ok(ComplementSearch::Infeasible(Infeasibility {
                description: format!(
                    "{what}: {} equations in {} unknowns are inconsistent",
                    matrix.rows(),
                    matrix.cols()
                ),
                matrix,
                rhs,
                dual,
            }))
        }
    }
}

/// `y` with `y M = 0`, `y b = 1`, when `M u = b` has no solution.
pub fn dual_certificate(matrix: &Matrix, rhs: &[Rational]) -> Option<Vector> {
    let left_null = matrix.transpose().kernel();
    for y in left_null {
        let yb: Rational = y.iter().zip(rhs).map(|(a, b)| a * b).sum();
        if !yb.is_zero() {
            return Some(y.iter().map(|v| v / &yb).collect());
        }
    }
    if matrix.cols() == 0 {
        // no unknowns: any nonzero rhs coordinate is its own certificate
        let k = rhs.iter().position(|x| !x.is_zero())?;
        let mut y = zero_vector(rhs.len());
        y[k] = Rational::from_integer(1.into()) / &rhs[k];
        return Some(y);
    }
    None
}

fn check_abelian_ideal(l: &StructureConstants, a: &Subspace) -> Result<(), ExtensionError> {
    if !l.is_ideal(a) {
        return Err(ExtensionError::NotAnIdeal);
    }
    if !l.is_abelian_subspace(a) {
        return Err(ExtensionError::NotAbelian);
    }
    Ok(())
}

/// `complement` is a subalgebra with `complement ⊕ a = L`.
pub fn is_complement_subalgebra(l: &StructureConstants, a: &Subspace, complement: &Subspace) -> bool {
    complement.intersect(a).is_zero() && complement.sum(a).is_full() && l.is_subalgebra(complement)
}

pub fn split_over_abelian_ideal(l: &StructureConstants, a: &Subspace) -> Result<SplitResult, ExtensionError> {
    match find_complement(l, a, ComplementConditions::SUBALGEBRA)? {
        ComplementSearch::Found(c) => {
            debug_assert!(is_complement_subalgebra(l, a, &c));
            Ok(SplitResult::split(c))
        }
        ComplementSearch::Infeasible(o) => Ok(SplitResult::non_split(o)),
    }
}

/// Splitting over an arbitrary ideal through `A/A²`, then inside the
/// preimage of the complement over `A²`.
pub fn split_over_ideal(l: &StructureConstants, a: &Subspace) -> Result<SplitResult, ExtensionError> {
    if !l.is_ideal(a) {
        return Err(ExtensionError::NotAnIdeal);
    }
    if a.is_zero() {
        return Ok(SplitResult::split(l.full()));
    }
    if l.is_abelian_subspace(a) {
        return split_over_abelian_ideal(l, a);
    }
    let a2 = l.ideal_closure(&l.product_subspace(a, a));
    if &a2 == a {
        let ann = l.annihilator(a);
        if is_complement_subalgebra(l, a, &ann) {
            return Ok(SplitResult::split(ann));
        }
        return Ok(SplitResult::unknown("perfect ideal without a centralising complement"));
    }
    let q = l.quotient(&a2).expect("A² is an ideal");
    let abar = q.project_subspace(a);
    let top = split_over_abelian_ideal(&q.algebra, &abar)?;
    let kbar = match top.status {
        SplitStatus::NonSplit => return Ok(top),
        SplitStatus::Split => top.complement.expect("split carries a complement"),
        SplitStatus::Unknown => unreachable!("abelian splitting is two-valued"),
    };
    let k = q.preimage(&kbar);
    let sub = l.restrict(&k).expect("preimage of a subalgebra");
    let a2_in_k = sub.restrict_subspace(&a2).expect("A² inside K");
    let inner = split_over_ideal(&sub.algebra, &a2_in_k)?;
    match inner.status {
        SplitStatus::Split => {
            let c = sub.include_subspace(&inner.complement.expect("complement"));
            debug_assert!(is_complement_subalgebra(l, a, &c));
            Ok(SplitResult::split(c))
        }
        _ => Ok(SplitResult::unknown(
            "the chosen complement modulo A² does not lift; other choices untested",
        )),
    }
}
