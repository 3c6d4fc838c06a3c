//! Re-verification of certificates and witnesses along code paths that the
//! deciders do not use: Bareiss determinants, derivation-form identities,
//! complement systems rebuilt by evaluation, and nilpotency by word powers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::algebra::{IdentityFailure, Kind, StructureConstants};
use crate::envelope::{AssocEnvelope, MatrixSpace, OperatorFamily};
use crate::exact::{axpy, is_zero_vector, minimal_polynomial, unit_vector, zero_vector, Matrix, Rational, Subspace, Vector};
use crate::extensions::{ComplementConditions, Infeasibility};
use crate::structure::nilradical;

use super::decision::{Certificate, Decision, Obstruction, ObstructionKind, Witness};
use super::deciders::{subalgebra_frattini_lower, Property};
use super::frattini::{core_of_intersection, frattini_lower, FrattiniResult, UpperWitness};
use super::maximal::{check_maximal, Maximality};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("verification failed: {0}")]
pub struct VerifyError(pub String);

fn ensure(cond: bool, what: impl FnOnce() -> String) -> Result<(), VerifyError> {
    if cond {
        Ok(())
    } else {
        Err(VerifyError(what()))
    }
}

/// Fraction-free determinant: rows are scaled to integers, then Bareiss
/// elimination runs over the integers.
pub fn bareiss_determinant(m: &Matrix) -> Rational {
    let n = m.rows();
    assert_eq!(n, m.cols(), "determinant of a non-square matrix");
    if n == 0 {
        return Rational::one();
    }
    let mut scale = Rational::one();
    let mut a: Vec<Vec<BigInt>> = Vec::with_capacity(n);
    for i in 0..n {
        let row = m.row(i);
        let lcm = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        scale *= Rational::from_integer(lcm.clone());
        a.push(row.iter().map(|x| x.numer() * (&lcm / x.denom())).collect());
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return Rational::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    Rational::from_integer(sign * &a[n - 1][n - 1]) / scale
}

/// Complete reducibility as nondegeneracy of the trace form on the unital
/// envelope, decided by a Bareiss determinant of its Gram matrix.
pub fn completely_reducible_by_determinant(fam: &OperatorFamily) -> bool {
    let env = AssocEnvelope::generate(fam, true);
    let basis = env.basis();
    let k = basis.len();
    let mut g = Matrix::zeros(k, k);
    for i in 0..k {
        for j in 0..k {
            g.set(i, j, (&basis[i] * &basis[j]).trace());
        }
    }
    !bareiss_determinant(&g).is_zero()
}

/// The associative algebra (without identity) generated by `ops` is
/// nilpotent: words of length `dim + 1` all vanish.
fn words_vanish(size: usize, ops: &[Matrix]) -> bool {
    let mut layer = MatrixSpace::spanned_by(size, ops);
    for _ in 0..=size {
        if layer.is_zero() {
            return true;
        }
        let mut next = Vec::new();
        for w in layer.basis() {
            for g in ops {
                next.push(&w * g);
            }
        }
        layer = MatrixSpace::spanned_by(size, &next);
    }
    layer.is_zero()
}

fn in_span(space: &Subspace, v: &[Rational]) -> bool {
    space.contains_vector(v)
}

fn closed(l: &StructureConstants, s: &Subspace) -> bool {
    s.basis()
        .iter()
        .all(|x| s.basis().iter().all(|y| in_span(s, &l.product(x, y))))
}

fn two_sided_ideal(l: &StructureConstants, s: &Subspace) -> bool {
    let n = l.dim();
    s.basis().iter().all(|x| {
        (0..n).all(|i| {
            let b = unit_vector(n, i);
            in_span(s, &l.product(x, &b)) && in_span(s, &l.product(&b, x))
        })
    })
}

fn squares_vanish(l: &StructureConstants, s: &Subspace) -> bool {
    let b = s.basis();
    (0..b.len()).all(|i| {
        is_zero_vector(&l.product(&b[i], &b[i]))
            && (i + 1..b.len()).all(|j| {
                let p = l.product(&b[i], &b[j]);
                let q = l.product(&b[j], &b[i]);
                p.iter().zip(&q).all(|(x, y)| (x + y).is_zero())
            })
    })
}

/// Nilpotency of a subalgebra through its multiplication words restricted to it.
fn nilpotent_by_words(l: &StructureConstants, s: &Subspace) -> bool {
    let mut ops = Vec::new();
    for x in s.basis() {
        ops.push(l.right_mult(x));
        ops.push(l.left_mult(x));
    }
    match OperatorFamily::new(l.dim(), ops).restrict(s) {
        Some(f) => words_vanish(s.dim(), f.generators()),
        None => false,
    }
}

fn bimodule(l: &StructureConstants, sigma: &Subspace, n: &Subspace) -> Option<OperatorFamily> {
    let mut ops = Vec::new();
    for s in sigma.basis() {
        ops.push(l.right_mult(s));
        ops.push(l.left_mult(s));
    }
    OperatorFamily::new(l.dim(), ops).restrict(n)
}

/// Right (left) Leibniz as "every right (left) multiplication is a
/// derivation", checked as matrix identities.
pub fn identity_by_derivations(l: &StructureConstants, kind: Kind) -> bool {
    let n = l.dim();
    let rs: Vec<Matrix> = (0..n).map(|i| l.right_mult_basis(i)).collect();
    let ls: Vec<Matrix> = (0..n).map(|i| l.left_mult_basis(i)).collect();
    let right = || {
        (0..n).all(|z| {
            (0..n).all(|x| {
                let rzx = rs[z].apply(&unit_vector(n, x));
                &rs[z] * &ls[x] == &l.left_mult(&rzx) + &(&ls[x] * &rs[z])
            })
        })
    };
    let left = || {
        (0..n).all(|z| {
            (0..n).all(|x| {
                let lzx = ls[z].apply(&unit_vector(n, x));
                &ls[z] * &ls[x] == &l.left_mult(&lzx) + &(&ls[x] * &ls[z])
            })
        })
    };
    match kind {
        Kind::Right => right(),
        Kind::Left => left(),
        Kind::Symmetric => right() && left(),
        Kind::Lie => (0..n).all(|i| (&rs[i] + &ls[i]).is_zero()) && right(),
    }
}

fn identity_fails_at(l: &StructureConstants, kind: Kind, failure: &IdentityFailure) -> bool {
    let n = l.dim();
    let e = |i: usize| unit_vector(n, i);
    match *failure {
        IdentityFailure::Triple(i, j, k) => {
            let (x, y, z) = (e(i), e(j), e(k));
            let lhs = l.product(&x, &l.product(&y, &z));
            let xy_z = l.product(&l.product(&x, &y), &z);
            let right_rhs: Vector = xy_z
                .iter()
                .zip(l.product(&l.product(&x, &z), &y))
                .map(|(a, b)| a - b)
                .collect();
            let left_rhs: Vector = xy_z
                .iter()
                .zip(l.product(&y, &l.product(&x, &z)))
                .map(|(a, b)| a + b)
                .collect();
            match kind {
                Kind::Right | Kind::Lie => lhs != right_rhs,
                Kind::Left => lhs != left_rhs,
                Kind::Symmetric => lhs != right_rhs || lhs != left_rhs,
            }
        }
        IdentityFailure::NonzeroSquare(i) => kind == Kind::Lie && !is_zero_vector(&l.product(&e(i), &e(i))),
        IdentityFailure::NotAntisymmetric(i, j) => {
            let p = l.product(&e(i), &e(j));
            let q = l.product(&e(j), &e(i));
            kind == Kind::Lie && p.iter().zip(&q).any(|(a, b)| !(a + b).is_zero())
        }
    }
}

/// Rebuilds the complement system of an abelian ideal by evaluating the
/// conditions on trial complements: the system is affine in the corrections,
/// so evaluations at `0` and at unit corrections recover it.
pub fn complement_system_by_evaluation(
    l: &StructureConstants,
    a: &Subspace,
    conds: ComplementConditions,
) -> (Matrix, Vector) {
    let reps = a.complement_basis();
    let abasis = a.basis();
    let (s, m) = (reps.len(), abasis.len());
    let unknowns = s * m;
    let proj = a.quotient_projection();
    let eval = |u: &[Rational]| -> Vector {
        let ys: Vec<Vector> = (0..s)
            .map(|i| {
                let mut y = reps[i].clone();
                for (t, at) in abasis.iter().enumerate() {
                    axpy(&mut y, &u[i * m + t], at);
                }
                y
            })
            .collect();
        let mut out = Vec::new();
        if conds.closed {
            for i in 0..s {
                for j in 0..s {
                    let p = l.product(&ys[i], &ys[j]);
                    let gamma = proj.apply(&p);
                    let mut d = p;
                    for (k, g) in gamma.iter().enumerate() {
                        axpy(&mut d, &-g, &ys[k]);
                    }
                    out.extend(d);
                }
            }
        }
        if conds.lie {
            for i in 0..s {
                for j in i..s {
                    let p = l.product(&ys[i], &ys[j]);
                    let q = l.product(&ys[j], &ys[i]);
                    out.extend(p.iter().zip(&q).map(|(x, y)| x + y));
                }
            }
        }
        out
    };
    let base = eval(&zero_vector(unknowns));
    let rows = base.len();
    let mut mat = Matrix::zeros(rows, unknowns);
    for k in 0..unknowns {
        let v = eval(&unit_vector(unknowns, k));
        for r in 0..rows {
            mat.set(r, k, &v[r] - &base[r]);
        }
    }
    let rhs = base.into_iter().map(|x| -x).collect();
    (mat, rhs)
}

fn verify_nilradical(l: &StructureConstants, n: &Subspace) -> Result<(), VerifyError> {
    ensure(two_sided_ideal(l, n), || format!("N = {n} is not an ideal"))?;
    ensure(nilpotent_by_words(l, n), || format!("N = {n} is not nilpotent"))?;
    let recomputed = nilradical(l).map_err(|e| VerifyError(e.to_string()))?;
    ensure(recomputed.subspace == *n, || format!("N = {n} is not the nilradical"))
}

fn complement_of(l: &StructureConstants, n: &Subspace, sigma: &Subspace) -> Result<(), VerifyError> {
    ensure(sigma.dim() + n.dim() == l.dim() && sigma.intersect(n).is_zero(), || {
        format!("{sigma} does not complement {n}")
    })?;
    ensure(closed(l, sigma), || format!("{sigma} is not a subalgebra"))
}

pub fn verify_frattini(l: &StructureConstants, fr: &FrattiniResult) -> Result<(), VerifyError> {
    let n = l.dim();
    ensure(fr.upper.contains(&fr.lower), || "Frattini bounds cross".into())?;
    ensure(two_sided_ideal(l, &fr.lower) && two_sided_ideal(l, &fr.upper), || {
        "Frattini bounds are not ideals".into()
    })?;
    for w in &fr.upper_witnesses {
        match w {
            UpperWitness::Codim1(h) => {
                ensure(h.dim() + 1 == n && closed(l, h), || format!("{h} is not a codimension-one subalgebra"))?
            }
            UpperWitness::Annotated(m) => {
                ensure(check_maximal(l, m) == Maximality::Maximal, || format!("{m} is not maximal"))?
            }
            UpperWitness::SocleComplement { complement, socle } => {
                ensure(two_sided_ideal(l, socle), || "socle is not an ideal".into())?;
                ensure(
                    socle
                        .basis()
                        .iter()
                        .all(|x| socle.basis().iter().all(|y| is_zero_vector(&l.product(x, y)))),
                    || "socle is not abelian".into(),
                )?;
                let fam = bimodule(l, &l.full(), socle).ok_or_else(|| VerifyError("socle not invariant".into()))?;
                ensure(completely_reducible_by_determinant(&fam), || {
                    "socle is not a sum of minimal ideals".into()
                })?;
                complement_of(l, socle, complement)?;
            }
        }
    }
    let meet = core_of_intersection(l, fr.upper_witnesses.iter().map(UpperWitness::subspace));
    if fr.via_complete_list {
        for m in &fr.complete_list {
            ensure(check_maximal(l, m) == Maximality::Maximal, || format!("listed {m} is not maximal"))?;
        }
        let value = core_of_intersection(l, &fr.complete_list);
        ensure(fr.exact && fr.lower == value && fr.upper == value, || {
            "complete list does not give the recorded value".into()
        })?;
        ensure(meet.contains(&value), || "complete list conflicts with the witnesses".into())?;
    } else {
        ensure(meet == fr.upper, || "upper bound does not match its witnesses".into())?;
        ensure(frattini_lower(l).contains(&fr.lower), || "lower bound is not certified".into())?;
        ensure(fr.exact == (fr.lower == fr.upper), || "exact flag is inconsistent".into())?;
    }
    Ok(())
}

fn verify_aa_lie(l: &StructureConstants, c: &Certificate) -> Result<(), VerifyError> {
    let Certificate::AlmostAlgebraicLie {
        nilradical,
        torus,
        levi,
    } = c
    else {
        return Err(VerifyError("expected a Lie-level decomposition".into()));
    };
    ensure(identity_by_derivations(l, Kind::Lie), || "not a Lie algebra".into())?;
    verify_nilradical(l, nilradical)?;
    let sigma = torus.sum(levi);
    ensure(torus.intersect(levi).is_zero(), || "T meets S".into())?;
    complement_of(l, nilradical, &sigma)?;
    ensure(
        torus
            .basis()
            .iter()
            .all(|t| torus.basis().iter().chain(levi.basis()).all(|y| is_zero_vector(&l.product(t, y)))),
        || "T is not central in T ⊕ S".into(),
    )?;
    if !levi.is_zero() {
        ensure(closed(l, levi), || "S is not a subalgebra".into())?;
        let b = levi.basis();
        let k = b.len();
        let mut g = Matrix::zeros(k, k);
        for i in 0..k {
            for j in 0..k {
                let op = &l.right_mult(&b[i]) * &l.right_mult(&b[j]);
                // trace of the restriction to S
                let fam = OperatorFamily::new(l.dim(), vec![op]).restrict(levi);
                let t = fam.map(|f| f.generators()[0].trace()).unwrap_or_else(Rational::zero);
                g.set(i, j, t);
            }
        }
        ensure(!bareiss_determinant(&g).is_zero(), || "S is not semisimple".into())?;
    }
    let fam = bimodule(l, &sigma, nilradical).ok_or_else(|| VerifyError("N not invariant".into()))?;
    ensure(completely_reducible_by_determinant(&fam), || {
        "T ⊕ S does not act completely reducibly on N".into()
    })
}

fn verify_obstruction(l: &StructureConstants, o: &Obstruction) -> Result<(), VerifyError> {
    verify_nilradical(l, &o.nilradical)?;
    let n2 = l.ideal_closure(&l.product_subspace(&o.nilradical, &o.nilradical));
    let q = l.quotient(&n2).map_err(|e| VerifyError(e.to_string()))?;
    let abar = q.project_subspace(&o.nilradical);
    let conds = match o.kind {
        ObstructionKind::NonSplit => ComplementConditions::SUBALGEBRA,
        ObstructionKind::Squares => ComplementConditions::SQUARES,
        ObstructionKind::LieComplement => ComplementConditions::LIE_SUBALGEBRA,
    };
    let (matrix, rhs) = complement_system_by_evaluation(&q.algebra, &abar, conds);
    let Infeasibility {
        matrix: m2, rhs: b2, ..
    } = &o.infeasibility;
    ensure(matrix == *m2 && rhs == *b2, || "obstruction system does not match the algebra".into())?;
    ensure(o.infeasibility.certifies(), || "dual vector does not certify infeasibility".into())
}

fn verify_jordan(l: &StructureConstants, element: &[Rational], semisimple: &Matrix) -> Result<(), VerifyError> {
    ensure(identity_by_derivations(l, Kind::Lie), || "not a Lie algebra".into())?;
    let a = l.right_mult(element);
    let nil = &a - semisimple;
    ensure(nil.is_nilpotent(), || "A - S is not nilpotent".into())?;
    ensure(&nil * semisimple == semisimple * &nil, || "S and A - S do not commute".into())?;
    let mp = minimal_polynomial(semisimple).map_err(|e| VerifyError(e.to_string()))?;
    ensure(mp.is_squarefree(), || "S is not semisimple".into())?;
    let n = l.dim();
    let mut cols: Vec<Vector> = (0..n).map(|i| l.right_mult_basis(i).flatten()).collect();
    let before = Matrix::from_columns(&cols, n * n).map(|m| m.rank()).unwrap_or(0);
    cols.push(semisimple.flatten());
    let after = Matrix::from_columns(&cols, n * n).map(|m| m.rank()).unwrap_or(0);
    ensure(after > before, || "S is a right multiplication".into())
}

fn verify_liesation(l: &StructureConstants, kernel: &Subspace, lie: &StructureConstants) -> Result<(), VerifyError> {
    ensure(*kernel == l.leibniz_kernel(), || "kernel is not I".into())?;
    let q = l.quotient(kernel).map_err(|e| VerifyError(e.to_string()))?;
    ensure(q.algebra == *lie, || "liesation table does not match".into())
}

fn verify_quotient(l: &StructureConstants, fr: &FrattiniResult, quotient: &StructureConstants) -> Result<(), VerifyError> {
    verify_frattini(l, fr)?;
    ensure(fr.exact, || "Frattini ideal is not exact".into())?;
    let q = l.quotient(&fr.upper).map_err(|e| VerifyError(e.to_string()))?;
    ensure(q.algebra == *quotient, || "quotient table does not match".into())
}

fn verify_certificate(l: &StructureConstants, p: Property, c: &Certificate) -> Result<(), VerifyError> {
    match (p, c) {
        (Property::Lie | Property::Symmetric, Certificate::IdentityHolds(k)) => {
            let expected = if p == Property::Lie { Kind::Lie } else { Kind::Symmetric };
            ensure(*k == expected, || "certificate is for another identity".into())?;
            ensure(identity_by_derivations(l, *k), || format!("{k} identity fails"))
        }
        (_, Certificate::Abelian) => ensure(l.is_abelian(), || "algebra is not abelian".into()),
        (Property::AlmostReductive, Certificate::AlmostReductive { nilradical, sigma }) => {
            verify_nilradical(l, nilradical)?;
            complement_of(l, nilradical, sigma)?;
            ensure(squares_vanish(l, sigma), || "Sigma is not a Lie algebra".into())?;
            let fam = bimodule(l, sigma, nilradical).ok_or_else(|| VerifyError("N not invariant".into()))?;
            ensure(completely_reducible_by_determinant(&fam), || {
                "Sigma does not act completely reducibly on N".into()
            })
        }
        (Property::AlmostAlgebraic, Certificate::ViaLiesation { kernel, lie, inner }) => {
            verify_liesation(l, kernel, lie)?;
            verify_aa_lie(lie, inner)
        }
        (Property::PhiFree, Certificate::FrattiniZero(fr)) => {
            verify_frattini(l, fr)?;
            ensure(fr.exact && fr.upper.is_zero(), || "phi is not zero".into())
        }
        (Property::Elementary, Certificate::SmallFrattiniFree(fr)) => {
            ensure(l.dim() <= 2, || "dimension exceeds two".into())?;
            verify_frattini(l, fr)?;
            ensure(fr.exact && fr.upper.is_zero(), || "phi is not zero".into())
        }
        (Property::AAlgebra | Property::Elementary | Property::EAlgebra, Certificate::SweepAndAnnotation { swept }) => {
            for b in swept {
                ensure(closed(l, b), || format!("swept {b} is not a subalgebra"))?;
                match p {
                    Property::AAlgebra => ensure(
                        l.is_abelian_subspace(b) || !nilpotent_by_words(l, b),
                        || format!("{b} is nilpotent and not abelian"),
                    )?,
                    Property::Elementary => ensure(subalgebra_frattini_lower(l, b).is_zero(), || {
                        format!("phi({b}) is nonzero")
                    })?,
                    _ => {}
                }
            }
            Ok(())
        }
        (
            Property::EAlgebra,
            Certificate::ViaFrattiniQuotient {
                frattini,
                quotient,
                inner,
            },
        ) => {
            verify_quotient(l, frattini, quotient)?;
            verify_certificate(quotient, Property::Elementary, inner)
        }
        _ => Err(VerifyError(format!("certificate kind does not apply to {p}"))),
    }
}

fn verify_witness(l: &StructureConstants, p: Property, w: &Witness) -> Result<(), VerifyError> {
    match (p, w) {
        (Property::Lie | Property::Symmetric, Witness::IdentityFails { kind, failure }) => {
            ensure(identity_fails_at(l, *kind, failure), || "identity holds at the witness".into())
        }
        (Property::AlmostReductive, Witness::Obstructions(obs)) => {
            ensure(!obs.is_empty(), || "no obstruction recorded".into())?;
            obs.iter().try_for_each(|o| verify_obstruction(l, o))
        }
        (
            Property::AlmostReductive,
            Witness::NotCompletelyReducible {
                nilradical,
                complement,
            },
        ) => {
            verify_nilradical(l, nilradical)?;
            ensure(l.is_abelian_subspace(nilradical), || "N is not abelian".into())?;
            complement_of(l, nilradical, complement)?;
            ensure(squares_vanish(l, complement), || "complement is not Lie".into())?;
            let fam = bimodule(l, complement, nilradical).ok_or_else(|| VerifyError("N not invariant".into()))?;
            ensure(!completely_reducible_by_determinant(&fam), || "action is completely reducible".into())
        }
        (Property::AlmostAlgebraic, Witness::ViaLiesation { kernel, lie, inner }) => {
            verify_liesation(l, kernel, lie)?;
            match inner.as_ref() {
                Witness::JordanPart { element, semisimple } => verify_jordan(lie, element, semisimple),
                _ => Err(VerifyError("expected a Jordan-part witness".into())),
            }
        }
        (Property::AAlgebra, Witness::NonabelianNilpotent { subalgebra }) => {
            ensure(closed(l, subalgebra), || "not a subalgebra".into())?;
            ensure(!l.is_abelian_subspace(subalgebra), || "subalgebra is abelian".into())?;
            ensure(nilpotent_by_words(l, subalgebra), || "subalgebra is not nilpotent".into())
        }
        (Property::PhiFree | Property::Elementary, Witness::FrattiniNonzero { subalgebra, lower }) => {
            if p == Property::PhiFree {
                ensure(subalgebra.is_full(), || "phi-free witness must be L itself".into())?;
            }
            ensure(closed(l, subalgebra), || "not a subalgebra".into())?;
            ensure(!lower.is_zero(), || "lower bound is zero".into())?;
            ensure(subalgebra_frattini_lower(l, subalgebra).contains(lower), || {
                "lower bound is not certified".into()
            })
        }
        (
            Property::EAlgebra,
            Witness::FrattiniNotContained {
                subalgebra,
                lower,
                frattini,
            },
        ) => {
            verify_frattini(l, frattini)?;
            ensure(closed(l, subalgebra), || "not a subalgebra".into())?;
            ensure(subalgebra_frattini_lower(l, subalgebra).contains(lower), || {
                "lower bound is not certified".into()
            })?;
            ensure(!frattini.upper.contains(lower), || "phi(B) part lies in phi(L)".into())
        }
        (
            Property::EAlgebra,
            Witness::ViaFrattiniQuotient {
                frattini,
                quotient,
                inner,
            },
        ) => {
            verify_quotient(l, frattini, quotient)?;
            verify_witness(quotient, Property::Elementary, inner)
        }
        _ => Err(VerifyError(format!("witness kind does not apply to {p}"))),
    }
}

/// Independent re-check of a decision. `Unknown` passes when its reason is
/// filled in.
pub fn verify(l: &StructureConstants, p: Property, d: &Decision) -> Result<(), VerifyError> {
    match d {
        Decision::Yes(c) => verify_certificate(l, p, c),
        Decision::No(w) => verify_witness(l, p, w),
        Decision::Unknown(r) => ensure(!r.detail.is_empty(), || "unknown without a reason".into()),
    }
}

/// Checks a Lie-level almost-algebraic decision.
pub fn verify_lie_level(lie: &StructureConstants, d: &Decision) -> Result<(), VerifyError> {
    match d {
        Decision::Yes(c) => verify_aa_lie(lie, c),
        Decision::No(Witness::JordanPart { element, semisimple }) => verify_jordan(lie, element, semisimple),
        Decision::No(_) => Err(VerifyError("expected a Jordan-part witness".into())),
        Decision::Unknown(r) => ensure(!r.detail.is_empty(), || "unknown without a reason".into()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn bareiss_matches_elimination() {
        let m = Matrix::new(
            3,
            3,
            vec![rat(2), rat(1) / rat(3), rat(0), rat(-1), rat(4), rat(5) / rat(2), rat(7), rat(0), rat(1)],
        )
        .unwrap();
        assert_eq!(bareiss_determinant(&m), m.determinant());
        let z = Matrix::from_i64(2, 2, &[0, 1, 0, 3]);
        assert!(bareiss_determinant(&z).is_zero());
        let p = Matrix::from_i64(2, 2, &[0, 1, 1, 0]);
        assert_eq!(bareiss_determinant(&p), rat(-1));
    }

    #[test]
    fn derivation_identities_agree() {
        use crate::algebra::fixtures;
        for l in [fixtures::cyclic4(), fixtures::symm3(), fixtures::sl2(), fixtures::heisenberg()] {
            for k in Kind::ALL {
                assert_eq!(identity_by_derivations(&l, k), l.satisfies(k), "{k}");
            }
        }
    }
}
