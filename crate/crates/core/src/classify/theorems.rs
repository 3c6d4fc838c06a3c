//! Structure theorems checked as implications between certified decisions.

use std::cmp::Ordering;
use std::fmt;

use num_traits::Zero;
use rayon::prelude::*;
use sha2::{Digest, Sha256};

use crate::algebra::StructureConstants;
use crate::envelope::{MatrixSpace, OperatorFamily};
use crate::exact::{minimal_polynomial, Subspace, Vector};
use crate::structure::{
    bracket_power_mismatch, killing_matrix, l_split_check, levi_subalgebra, nilradical, radical, theta_check, LSplit,
};

use super::analysis::Analysis;
use super::deciders::{decide_almost_algebraic_lie, Property};
use super::decision::{Certificate, Decision, Witness};
use super::sweep::{sample_elements, SWEEP_SEED};

/// Proper subalgebras taken from the sweep for the subalgebra-quantified entries.
const SUBALGEBRA_PROBES: usize = 3;
const BRACKET_POWER_PAIRS: usize = 5;
const BRACKET_POWER_DEPTH: usize = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Verdict {
    Holds,
    Violated,
    Skipped,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Holds => "holds",
            Verdict::Violated => "violated",
            Verdict::Skipped => "skipped",
        }
    }

    /// Worst case over several instances of one entry.
    fn combine(verdicts: impl IntoIterator<Item = Verdict>) -> Verdict {
        let mut out = Verdict::Skipped;
        for v in verdicts {
            match v {
                Verdict::Violated => return Verdict::Violated,
                Verdict::Holds => out = Verdict::Holds,
                Verdict::Skipped => {}
            }
        }
        out
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A certified truth value; `Undecided` when the deciders could not settle it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Truth {
    True,
    False,
    Undecided,
}

impl Truth {
    pub fn of(d: &Decision) -> Truth {
        match d {
            Decision::Yes(_) => Truth::True,
            Decision::No(_) => Truth::False,
            Decision::Unknown(_) => Truth::Undecided,
        }
    }

    pub fn from_bool(b: bool) -> Truth {
        if b {
            Truth::True
        } else {
            Truth::False
        }
    }

    pub fn and(self, other: Truth) -> Truth {
        match (self, other) {
            (Truth::False, _) | (_, Truth::False) => Truth::False,
            (Truth::True, Truth::True) => Truth::True,
            _ => Truth::Undecided,
        }
    }

    pub fn iff(self, other: Truth) -> Truth {
        match (self, other) {
            (Truth::Undecided, _) | (_, Truth::Undecided) => Truth::Undecided,
            (a, b) => Truth::from_bool(a == b),
        }
    }
}

/// `hyp ⇒ concl`: holds when the hypothesis is certified false or the
/// conclusion certified true, violated when a certified-true hypothesis meets
/// a certified-false conclusion.
pub fn implication(hyp: Truth, concl: Truth) -> Verdict {
    match (hyp, concl) {
        (Truth::False, _) | (_, Truth::True) => Verdict::Holds,
        (Truth::True, Truth::False) => Verdict::Violated,
        _ => Verdict::Skipped,
    }
}

/// One checked entry on one algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Finding {
    pub id: String,
    pub verdict: Verdict,
    pub evidence: String,
}

impl Finding {
    fn new(id: &str, verdict: Verdict, evidence: impl Into<String>) -> Finding {
        Finding {
            id: id.to_string(),
            verdict,
            evidence: evidence.into(),
        }
    }

    fn implication(id: &str, hyp: (Truth, String), concl: (Truth, String)) -> Finding {
        let verdict = implication(hyp.0, concl.0);
        Finding::new(id, verdict, format!("if {} then {}", hyp.1, concl.1))
    }

    fn combined(id: &str, parts: Vec<(Verdict, String)>) -> Finding {
        let verdict = Verdict::combine(parts.iter().map(|p| p.0));
        let evidence = parts
            .into_iter()
            .map(|(v, e)| format!("[{v}] {e}"))
            .collect::<Vec<_>>()
            .join("; ");
        Finding::new(id, verdict, evidence)
    }
}

/// A finding tagged with its algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub algebra: String,
    pub theorem: String,
    pub verdict: Verdict,
    pub evidence: String,
}

impl Outcome {
    /// SHA-256 over the algebra id, entry id, verdict and evidence text.
    pub fn digest(&self) -> String {
        let mut h = Sha256::new();
        for part in [&self.algebra, &self.theorem, self.verdict.as_str(), &self.evidence] {
            h.update(part.as_bytes());
            h.update([0u8]);
        }
        hex::encode(h.finalize())
    }

    pub fn line(&self) -> String {
        format!("{} {} {} {}", self.algebra, self.theorem, self.verdict, self.digest())
    }
}

pub trait Theorem: Send + Sync {
    /// Entry id; findings carry this id or a dotted sub-id.
    fn id(&self) -> &'static str;
    fn statement(&self) -> &'static str;
    fn check(&self, a: &Analysis) -> Vec<Finding>;
}

fn decision_evidence(a: &Analysis, p: Property) -> (Truth, String) {
    let d = a.decision(p);
    (Truth::of(d), format!("{p}: {d}"))
}

fn sub_decision(a: &Analysis, b: &Subspace, tag: &str, p: Property) -> (Truth, String) {
    match a.subalgebra(b, format!("{}[{tag}]", a.id())) {
        Some(sub) => {
            let d = sub.decision(p);
            (Truth::of(d), format!("{p} of {tag} = {b}: {d}"))
        }
        None => (Truth::Undecided, format!("{tag} = {b} is not a subalgebra")),
    }
}

fn quotient_decision(a: &Analysis, j: &Subspace, tag: &str, p: Property) -> (Truth, String) {
    match a.quotient(j, format!("{}/{tag}", a.id())) {
        Some((_, q)) => {
            let d = q.decision(p);
            (Truth::of(d), format!("{p} of L/{tag}, {tag} = {j}: {d}"))
        }
        None => (Truth::Undecided, format!("{tag} = {j} is not an ideal")),
    }
}

fn both(x: (Truth, String), y: (Truth, String)) -> (Truth, String) {
    (x.0.and(y.0), format!("{} and {}", x.1, y.1))
}

fn fact(b: bool, what: impl Into<String>) -> (Truth, String) {
    let what = what.into();
    (Truth::from_bool(b), if b { what } else { format!("not ({what})") })
}

fn proper_subalgebras(a: &Analysis) -> Vec<Subspace> {
    a.sweep()
        .iter()
        .filter(|b| !b.is_full())
        .take(SUBALGEBRA_PROBES)
        .cloned()
        .collect()
}

fn is_semisimple_lie(s: &StructureConstants) -> bool {
    s.dim() == 0 || !killing_matrix(s).determinant().is_zero()
}

/// Every `R_c|_N` for `c` in `basis` is diagonalisable over the closure.
fn acts_semisimply(l: &StructureConstants, basis: &[Vector], n: &Subspace) -> bool {
    basis.iter().all(|c| {
        let fam = OperatorFamily::new(l.dim(), vec![l.right_mult(c)]);
        match fam.restrict(n) {
            Some(r) => minimal_polynomial(&r.generators()[0]).map(|p| p.is_squarefree()).unwrap_or(false),
            None => false,
        }
    })
}

fn center_of_sigma_shape(l: &StructureConstants, n: &Subspace, sigma: &Subspace) -> Result<(), String> {
    if sigma.is_zero() {
        return Ok(());
    }
    let sub = l.restrict(sigma).map_err(|e| e.to_string())?;
    let s = &sub.algebra;
    let c = s.centers().center;
    let full = s.full();
    let derived = s.product_subspace(&full, &full);
    if !c.intersect(&derived).is_zero() || c.dim() + derived.dim() != s.dim() {
        return Err(format!("Sigma = {sigma} is not the sum of its centre and derived algebra"));
    }
    let ss = s.restrict(&derived).map_err(|e| e.to_string())?;
    if !is_semisimple_lie(&ss.algebra) {
        return Err("[Sigma, Sigma] is not semisimple".into());
    }
    let cs: Vec<Vector> = c.basis().iter().map(|v| sub.include(v)).collect();
    if !acts_semisimply(l, &cs, n) {
        return Err("some R_c on N is not semisimple".into());
    }
    Ok(())
}

struct SigmaShape;
struct ReductiveImpliesAlgebraic;
struct PhiFreeCharacterisation;
struct PhiFreeCentralKernel;
struct OneDimensionalRightCentre;
struct SubalgebraLiesation;
struct RadicalTransfer;
struct SymmetricStructure;
struct QuotientTransfer;
struct FrattiniIsNilradicalSquare;
struct SymmetricEAlgebra;
struct RightMultiplicationBlock;
struct AAlgebraBlock;

impl Theorem for SigmaShape {
    fn id(&self) -> &'static str {
        "T1"
    }

    fn statement(&self) -> &'static str {
        "almost reductive: Sigma = C ⊕ S, C abelian acting semisimply on N, S semisimple"
    }

    fn check(&self, a: &Analysis) -> Vec<Finding> {
        let d = a.decision(Property::AlmostReductive);
        let f = match d {
            Decision::Yes(Certificate::AlmostReductive { nilradical, sigma }) => {
                match center_of_sigma_shape(a.algebra(), nilradical, sigma) {
                    Ok(()) => Finding::new("T1", Verdict::Holds, format!("Sigma = {sigma}")),
                    Err(e) => Finding::new("T1", Verdict::Violated, e),
                }
            }
            _ => Finding::new("T1", Verdict::Skipped, format!("almost-reductive: {}", d.status())),
        };
        vec![f]
    }
}

impl Theorem for ReductiveImpliesAlgebraic {
    fn id(&self) -> &'static str {
        "T2"
    }

    fn statement(&self) -> &'static str {
        "almost reductive implies almost algebraic"
    }

    fn check(&self, a: &Analysis) -> Vec<Finding> {
        vec![Finding::implication(
            "T2",
            decision_evidence(a, Property::AlmostReductive),
            decision_evidence(a, Property::AlmostAlgebraic),
        )]
    }
}

impl Theorem for PhiFreeCharacterisation {
    fn id(&self) -> &'static str {
        "T3"
    }

    fn statement(&self) -> &'static str {
        "phi-free implies almost reductive; an almost-reductive algebra is phi-free iff N is abelian"
    }

    fn check(&self, a: &Analysis) -> Vec<Finding> {
        let first = Finding::implication(
            "T3.i",
            decision_evidence(a, Property::PhiFree),
            decision_evidence(a, Property::AlmostReductive),
        );
        let abelian = match a.nilradical() {
            Ok(n) => Truth::from_bool(a.algebra().is_abelian_subspace(n)),
            Err(_) => Truth::Undecided,
        };
        let (phi, phi_text) = decision_evidence(a, Property::PhiFree);
        let second = Finding::implication(
            "T3.ii",
            decision_evidence(a, Property::AlmostReductive),
            (phi.iff(abelian), format!("({phi_text}) iff N abelian ({abelian:?})")),
        );
        vec![first, second]
    }
}

impl Theorem for PhiFreeCentralKernel {
    fn id(&self) -> &'static str {
        "T4"
    }

    fn statement(&self) -> &'static str {
        "a phi-free algebra with I inside Z(L) is a Lie algebra"
    }

    fn check(&self, a: &Analysis) -> Vec<Finding> {
        let central = a.centers().center.contains(a.leibniz_kernel());
        vec![Finding::implication(
            "T4",
            both(decision_evidence(a, Property::PhiFree), fact(central, "I ⊆ Z(L)")),
            decision_evidence(a, Property::Lie),
        )]
    }
}

impl Theorem for OneDimensionalRightCentre {
    fn id(&self) -> &'static str {
        "T5"
    }

    fn statement(&self) -> &'static str {
        "L/Z_r(L) semisimple with dim Z_r(L) = 1 implies L is a Lie algebra"
    }

    fn check(&self, a: &Analysis) -> Vec<Finding> {
        let zr = &a.centers().right;
        let semisimple = a
            .algebra()
            .quotient(zr)
            .map(|q| is_semisimple_lie(&q.algebra))
            .unwrap_or(false);
        vec![Finding::implication(
            "T5",
            both(
                fact(zr.dim() == 1, "dim Z_r = 1"),
                fact(semisimple, "L/Z_r semisimple"),
            ),
            decision_evidence(a, Property::Lie),
        )]
    }
}

impl Theorem for SubalgebraLiesation {
    fn id(&self) -> &'static str {
        "T6"
    }

    fn statement(&self) -> &'static str {
        "an almost-algebraic subalgebra B has almost-algebraic image (B+I)/I"
    }

    fn check(&self, a: &Analysis) -> Vec<Finding> {
        let q = a.liesation();
        let lie = Analysis::bare(format!("{}/I", a.id()), q.algebra.clone());
        let mut parts = Vec::new();
        for (k, b) in proper_subalgebras(a).iter().enumerate() {
            let tag = format!("B{k}");
            let hyp = sub_decision(a, b, &tag, Property::AlmostAlgebraic);
            let image = q.project_subspace(b);
            let concl = sub_decision(&lie, &image, &format!("(B{k}+I)/I"), Property::AlmostAlgebraic);
            parts.push((implication(hyp.0, concl.0), format!("{}; {}", hyp.1, concl.1)));
        }
        vec![Finding::combined("T6", parts)]
    }
}

impl Theorem for RadicalTransfer {
    fn id(&self) -> &'static str {
        "T7"
    }

    fn statement(&self) -> &'static str {
        "Gamma almost algebraic implies L almost algebraic; L almost reductive implies Gamma almost reductive"
    }

    fn check(&self, a: &Analysis) -> Vec<Finding> {
        let gamma = match a.radical() {
            Ok(g) => g.clone(),
            Err(e) => {
                return vec![
                    Finding::new("T7.i", Verdict::Skipped, e.to_string()),
                    Finding::new("T7.ii", Verdict::Skipped, e.to_string()),
                ]
            }
        };
        vec![
            Finding::implication(
                "T7.i",
                sub_decision(a, &gamma, "Gamma", Property::AlmostAlgebraic),
                decision_evidence(a, Property::AlmostAlgebraic),
            ),
            Finding::implication(
                "T7.ii",
                decision_evidence(a, Property::AlmostReductive),
                sub_decision(a, &gamma, "Gamma", Property::AlmostReductive),
            ),
        ]
    }
}

/// `L = N + Σ` with `N ∩ Σ = I`, `Σ = (Γ∩Σ) ⊕ S`, `(Γ∩Σ)³ = 0` and
/// `R_{c+I}` semisimple on `N/I`, built from the almost-algebraic certificate.
fn symmetric_structure(a: &Analysis) -> (Truth, String) {
    let Decision::Yes(Certificate::ViaLiesation { inner, .. }) = a.decision(Property::AlmostAlgebraic) else {
        return (Truth::Undecided, "no almost-algebraic certificate".into());
    };
    let Certificate::AlmostAlgebraicLie { torus, levi, .. } = inner.as_ref() else {
        return (Truth::Undecided, "certificate has no decomposition".into());
    };
    let (Ok(n), Ok(gamma)) = (a.nilradical(), a.radical()) else {
        return (Truth::Undecided, "radicals uncertified".into());
    };
    let l = a.algebra();
    let q = a.liesation();
    let i = a.leibniz_kernel();
    let sigma = q.preimage(&torus.sum(levi));
    let fail = |what: &str| (Truth::False, format!("Sigma = {sigma}: {what}"));
    if n.sum(&sigma) != l.full() || n.intersect(&sigma) != *i {
        return fail("L = N + Sigma with N ∩ Sigma = I fails");
    }
    let x = gamma.intersect(&sigma);
    let x2 = l.product_subspace(&x, &x);
    if !l.product_subspace(&x2, &x).is_zero() || !l.product_subspace(&x, &x2).is_zero() {
        return fail("(Gamma ∩ Sigma)^3 != 0");
    }
    let Ok(sub) = l.restrict(&sigma) else {
        return fail("Sigma is not a subalgebra");
    };
    let Some(x_in) = sub.restrict_subspace(&x) else {
        return fail("Gamma ∩ Sigma leaves Sigma");
    };
    let s = match levi_subalgebra(&sub.algebra, &x_in) {
        Ok(s) => sub.include_subspace(&s),
        Err(e) => return (Truth::Undecided, format!("no Levi subalgebra of Sigma: {e}")),
    };
    if !s.intersect(&x).is_zero() || s.sum(&x) != sigma {
        return fail("Sigma != (Gamma ∩ Sigma) ⊕ S");
    }
    if !l.product_subspace(&x, &s).is_zero() || !l.product_subspace(&s, &x).is_zero() {
        return fail("Gamma ∩ Sigma and S do not annihilate each other");
    }
    let semisimple = l.restrict(&s).map(|r| is_semisimple_lie(&r.algebra)).unwrap_or(false);
    if !semisimple {
        return fail("S is not semisimple");
    }
    let xbar: Vec<Vector> = q.project_subspace(&x).basis().to_vec();
    if !acts_semisimply(&q.algebra, &xbar, &q.project_subspace(n)) {
        return fail("some R_{c+I} on N/I is not semisimple");
    }
    (Truth::True, format!("Sigma = {sigma}, S = {s}"))
}

impl Theorem for SymmetricStructure {
    fn id(&self) -> &'static str {
        "T8"
    }

    fn statement(&self) -> &'static str {
        "structure of almost-algebraic symmetric algebras and of those with almost-reductive radical"
    }

    fn check(&self, a: &Analysis) -> Vec<Finding> {
        let symmetric = decision_evidence(a, Property::Symmetric);
        let first = Finding::implication(
            "T8.i",
            both(symmetric.clone(), decision_evidence(a, Property::AlmostAlgebraic)),
            symmetric_structure(a),
        );
        let second = match a.radical() {
            Ok(gamma) => {
                let g = Analysis::bare(format!("{}[Gamma]", a.id()), a.algebra().restrict(gamma).map(|s| s.algebra).unwrap_or_else(|_| a.algebra().clone()));
                let hyp = both(symmetric, {
                    let d = g.decision(Property::AlmostReductive);
                    (Truth::of(d), format!("almost-reductive of Gamma: {d}"))
                });
                let shape = match g.decision(Property::AlmostReductive) {
                    Decision::Yes(Certificate::AlmostReductive { nilradical, sigma }) => {
                        let abelian = g.algebra().is_abelian_subspace(sigma);
                        let semisimple = acts_semisimply(g.algebra(), sigma.basis(), nilradical);
                        fact(abelian && semisimple, format!("Gamma = N ∔ C with C = {sigma} abelian and semisimple on N"))
                    }
                    _ => (Truth::Undecided, "no decomposition of Gamma".into()),
                };
                let concl = both(both(decision_evidence(a, Property::AlmostAlgebraic), symmetric_structure(a)), shape);
                Finding::implication("T8.ii", hyp, concl)
            }
            Err(e) => Finding::new("T8.ii", Verdict::Skipped, e.to_string()),
        };
        vec![first, second]
    }
}

fn candidate_ideals(a: &Analysis) -> Vec<(&'static str, Subspace)> {
    let l = a.algebra();
    let mut out: Vec<(&'static str, Subspace)> = Vec::new();
    let mut push = |tag: &'static str, s: Subspace| {
        if !s.is_zero() && !s.is_full() && !out.iter().any(|(_, t)| *t == s) {
            out.push((tag, s));
        }
    };
    push("I", a.leibniz_kernel().clone());
    push("Z", a.centers().center.clone());
    if let Ok(n) = a.nilradical() {
        push("N", n.clone());
    }
    if let Ok(g) = a.radical() {
        push("Gamma", g.clone());
    }
    push("L2", l.product_subspace(&l.full(), &l.full()));
    out
}

impl Theorem for QuotientTransfer {
    fn id(&self) -> &'static str {
        "T9"
    }

    fn statement(&self) -> &'static str {
        "quotients by almost-algebraic ideals stay almost algebraic; quotients of almost-reductive algebras by ideals inside phi stay almost reductive"
    }

    fn check(&self, a: &Analysis) -> Vec<Finding> {
        let aa = decision_evidence(a, Property::AlmostAlgebraic);
        let mut first = Vec::new();
        for (tag, j) in candidate_ideals(a) {
            let hyp = both(aa.clone(), sub_decision(a, &j, tag, Property::AlmostAlgebraic));
            let concl = quotient_decision(a, &j, tag, Property::AlmostAlgebraic);
            first.push((implication(hyp.0, concl.0), format!("{}; {}", hyp.1, concl.1)));
        }
        let ar = decision_evidence(a, Property::AlmostReductive);
        let fr = a.frattini();
        let mut inside_phi = vec![("phi-lower", fr.lower.clone())];
        if fr.exact {
            inside_phi.push(("phi", fr.upper.clone()));
        }
        let mut second = Vec::new();
        for (tag, j) in inside_phi {
            if j.is_zero() || inside_phi_seen(&second, &j) {
                continue;
            }
            let concl = quotient_decision(a, &j, tag, Property::AlmostReductive);
            second.push((implication(ar.0, concl.0), format!("{}; {}", ar.1, concl.1), j));
        }
        vec![
            Finding::combined("T9.i", first),
            Finding::combined("T9.ii", second.into_iter().map(|(v, e, _)| (v, e)).collect()),
        ]
    }
}

fn inside_phi_seen(done: &[(Verdict, String, Subspace)], j: &Subspace) -> bool {
    done.iter().any(|(_, _, s)| s == j)
}

impl Theorem for FrattiniIsNilradicalSquare {
    fn id(&self) -> &'static str {
        "T10"
    }

    fn statement(&self) -> &'static str {
        "almost reductive implies phi(L) = N^2"
    }

    fn check(&self, a: &Analysis) -> Vec<Finding> {
        let concl = match a.nilradical() {
            Ok(n) => {
                let l = a.algebra();
                let n2 = l.product_subspace(n, n);
                let fr = a.frattini();
                if fr.exact {
                    fact(fr.upper == n2, format!("phi = {} equals N^2 = {n2}", fr.upper))
                } else if !fr.upper.contains(&n2) || !n2.contains(&fr.lower) {
                    (Truth::False, format!("N^2 = {n2} outside {} ⊆ phi ⊆ {}", fr.lower, fr.upper))
                } else {
                    (Truth::Undecided, format!("phi inexact, N^2 = {n2} within the bounds"))
                }
            }
            Err(e) => (Truth::Undecided, e.to_string()),
        };
        vec![Finding::implication("T10", decision_evidence(a, Property::AlmostReductive), concl)]
    }
}

/// "Every almost-algebraic subalgebra is phi-free": true when the algebra is
/// elementary, false when a swept almost-algebraic subalgebra has nonzero phi.
fn aa_subalgebras_phi_free(a: &Analysis) -> (Truth, String) {
    match a.decision(Property::Elementary) {
        Decision::Yes(_) => (Truth::True, format!("{} elementary", a.id())),
        Decision::No(Witness::FrattiniNonzero { subalgebra, .. }) => {
            let (t, e) = sub_decision(a, subalgebra, "B", Property::AlmostAlgebraic);
            match t {
                Truth::True => (Truth::False, format!("{e} with phi(B) != 0")),
                _ => (Truth::Undecided, e),
            }
        }
        d => (Truth::Undecided, format!("elementary: {}", d.status())),
    }
}

impl Theorem for SymmetricEAlgebra {
    fn id(&self) -> &'static str {
        "T11"
    }

    fn statement(&self) -> &'static str {
        "almost-reductive symmetric algebras whose almost-algebraic subalgebras are phi-free"
    }

    fn check(&self, a: &Analysis) -> Vec<Finding> {
        let base = both(
            decision_evidence(a, Property::Symmetric),
            decision_evidence(a, Property::AlmostReductive),
        );
        let first = Finding::implication(
            "T11.i",
            both(base.clone(), aa_subalgebras_phi_free(a)),
            both(
                decision_evidence(a, Property::Elementary),
                decision_evidence(a, Property::Lie),
            ),
        );
        let q = a.liesation();
        let lie = Analysis::bare(format!("{}/I", a.id()), q.algebra.clone());
        let fr = a.frattini();
        let values = match a.nilradical() {
            Ok(n) if fr.exact => {
                let n2 = a.algebra().product_subspace(n, n);
                fact(
                    fr.upper == n2 && n2 == *a.leibniz_kernel(),
                    format!("phi = {} = N^2 = I", fr.upper),
                )
            }
            _ => (Truth::Undecided, "phi or N uncertified".into()),
        };
        let second = Finding::implication(
            "T11.ii",
            both(base, aa_subalgebras_phi_free(&lie)),
            both(values, decision_evidence(a, Property::EAlgebra)),
        );
        vec![first, second]
    }
}

fn lie_coordinates(a: &Analysis, u: &Subspace) -> Subspace {
    let rl = a.right_mult();
    let l = a.algebra();
    let coords: Vec<Vector> = u
        .basis()
        .iter()
        .map(|v| rl.space_coordinates(&l.right_mult(v)))
        .collect();
    Subspace::spanned_by(rl.dim(), &coords)
}

fn operators_of(a: &Analysis, coords: &Subspace) -> MatrixSpace {
    let rl = a.right_mult();
    let mats: Vec<_> = coords.basis().iter().map(|c| rl.operator(c)).collect();
    MatrixSpace::spanned_by(a.dim(), &mats)
}

impl Theorem for RightMultiplicationBlock {
    fn id(&self) -> &'static str {
        "T12"
    }

    fn statement(&self) -> &'static str {
        "right multiplications: bracket powers, theta, radical and nilradical correspondence, almost-algebraic transfer, L-split elements, idealisers"
    }

    fn check(&self, a: &Analysis) -> Vec<Finding> {
        let l = a.algebra();
        let n = l.dim();
        let mut out = Vec::new();

        let xs = sample_elements(n, BRACKET_POWER_PAIRS, SWEEP_SEED ^ 0xb1);
        let ys = sample_elements(n, BRACKET_POWER_PAIRS, SWEEP_SEED ^ 0xb2);
        let mismatch = xs
            .iter()
            .zip(&ys)
            .find_map(|(x, y)| bracket_power_mismatch(l, x, y, BRACKET_POWER_DEPTH));
        out.push(match mismatch {
            None => Finding::new("T12.a", Verdict::Holds, format!("{BRACKET_POWER_PAIRS} pairs, n <= {BRACKET_POWER_DEPTH}")),
            Some(k) => Finding::new("T12.a", Verdict::Violated, format!("mismatch at n = {k}")),
        });

        let theta = theta_check(l);
        out.push(Finding::new(
            "T12.b",
            if theta.holds() { Verdict::Holds } else { Verdict::Violated },
            format!("ker theta = {}", theta.kernel),
        ));

        let lie = a.right_mult().lie_algebra();
        out.push(match (a.radical(), radical(&lie)) {
            (Ok(gamma), Ok(rad)) => {
                let image = a.right_mult().image_of(l, gamma);
                let ok = image.flat() == operators_of(a, &rad).flat();
                Finding::new(
                    "T12.c",
                    if ok { Verdict::Holds } else { Verdict::Violated },
                    format!("R_Gamma has dim {}, radical of R(L) has dim {}", image.dim(), rad.dim()),
                )
            }
            _ => Finding::new("T12.c", Verdict::Skipped, "radical uncertified"),
        });

        let zr = &a.centers().right;
        let fr = a.frattini();
        let hyp = if fr.lower.contains(zr) {
            (Truth::True, format!("Z_r = {zr} ⊆ phi"))
        } else if !fr.upper.contains(zr) {
            (Truth::False, format!("Z_r = {zr} ⊄ phi"))
        } else {
            (Truth::Undecided, "Z_r within the phi bounds".to_string())
        };
        let concl = match (a.nilradical(), nilradical(&lie)) {
            (Ok(nl), Ok(nr)) => {
                let image = a.right_mult().image_of(l, nl);
                fact(
                    image.flat() == operators_of(a, &nr.subspace).flat(),
                    "R_N is the nilradical of R(L)",
                )
            }
            _ => (Truth::Undecided, "nilradical uncertified".into()),
        };
        out.push(Finding::implication("T12.d", hyp, concl));

        let lie_aa = match decide_almost_algebraic_lie(&lie) {
            Ok(d) => (Truth::of(&d), format!("R(L): {d}")),
            Err(e) => (Truth::Undecided, e.to_string()),
        };
        out.push(Finding::implication(
            "T12.e",
            decision_evidence(a, Property::AlmostAlgebraic),
            lie_aa,
        ));

        // contrapositive probe: recorded, never a violation
        let aa = decision_evidence(a, Property::AlmostAlgebraic);
        out.push(if aa.0 == Truth::False {
            let mut probes: Vec<Vector> = (0..n).map(|i| crate::exact::unit_vector(n, i)).collect();
            probes.extend(sample_elements(n, 8, SWEEP_SEED));
            let rl = a.right_mult();
            match probes
                .iter()
                .find(|x| matches!(l_split_check(l, rl, x), LSplit::NotSplit { .. }))
            {
                Some(x) => Finding::new(
                    "T12.f",
                    Verdict::Holds,
                    format!("{}; non-L-split element {}", aa.1, crate::exact::format_vector(x)),
                ),
                None => Finding::new("T12.f", Verdict::Skipped, format!("{}; every probe is L-split", aa.1)),
            }
        } else {
            Finding::implication("T12.f", (Truth::Undecided, "every element L-split".into()), aa)
        });

        let mut parts = Vec::new();
        let aa = decision_evidence(a, Property::AlmostAlgebraic);
        for (k, b) in proper_subalgebras(a).iter().enumerate() {
            let rb = lie_coordinates(a, b);
            let idealiser = lie.idealiser(&rb);
            let concl = match lie.restrict(&idealiser).map_err(|e| e.to_string()).and_then(|s| {
                decide_almost_algebraic_lie(&s.algebra).map_err(|e| e.to_string())
            }) {
                Ok(d) => (Truth::of(&d), format!("idealiser of R_B{k} in R(L): {d}")),
                Err(e) => (Truth::Undecided, e),
            };
            parts.push((implication(aa.0, concl.0), format!("{}; {}", aa.1, concl.1)));
        }
        out.push(Finding::combined("T12.g", parts));
        out
    }
}

impl Theorem for AAlgebraBlock {
    fn id(&self) -> &'static str {
        "T13"
    }

    fn statement(&self) -> &'static str {
        "symmetric A-algebras, E-algebras through L/phi(L), central extensions of A-algebras"
    }

    fn check(&self, a: &Analysis) -> Vec<Finding> {
        let symmetric = decision_evidence(a, Property::Symmetric);
        let a_alg = decision_evidence(a, Property::AAlgebra);
        let sym_a = both(symmetric, a_alg.clone());
        let ar = decision_evidence(a, Property::AlmostReductive);
        let lie = decision_evidence(a, Property::Lie);
        let elementary = decision_evidence(a, Property::Elementary);
        let mut out = vec![Finding::implication("T13.a", both(sym_a.clone(), ar.clone()), lie.clone())];

        let q = a.liesation();
        let liesation = Analysis::bare(format!("{}/I", a.id()), q.algebra.clone());
        let d = liesation.decision(Property::AAlgebra);
        out.push(Finding::implication(
            "T13.b",
            sym_a.clone(),
            (Truth::of(d), format!("a-algebra of L/I: {d}")),
        ));

        let el_lie = both(elementary.clone(), lie.clone());
        out.push(Finding::implication(
            "T13.c",
            sym_a.clone(),
            (ar.0.iff(el_lie.0), format!("({}) iff ({})", ar.1, el_lie.1)),
        ));

        let fr = a.frattini();
        out.push(if fr.exact {
            let e = decision_evidence(a, Property::EAlgebra);
            let quotient = quotient_decision(a, &fr.upper, "phi", Property::Elementary);
            Finding::implication(
                "T13.d",
                (Truth::True, "phi exact".into()),
                (e.0.iff(quotient.0), format!("({}) iff ({})", e.1, quotient.1)),
            )
        } else {
            Finding::new("T13.d", Verdict::Skipped, "phi inexact")
        });

        out.push(Finding::implication(
            "T13.e",
            sym_a.clone(),
            decision_evidence(a, Property::EAlgebra),
        ));

        let gamma_phi_free = match a.radical() {
            Ok(g) => sub_decision(a, g, "Gamma", Property::PhiFree),
            Err(e) => (Truth::Undecided, e.to_string()),
        };
        out.push(Finding::implication("T13.f", both(sym_a, gamma_phi_free), el_lie));

        let z = a.centers().center.clone();
        let g = if z.is_zero() {
            Finding::new("T13.g", Verdict::Skipped, "Z(L) = 0")
        } else {
            Finding::implication(
                "T13.g",
                both(a_alg, quotient_decision(a, &z, "Z", Property::AlmostAlgebraic)),
                decision_evidence(a, Property::AlmostAlgebraic),
            )
        };
        out.push(g);
        out
    }
}

static THEOREMS: [&dyn Theorem; 13] = [
    &SigmaShape,
    &ReductiveImpliesAlgebraic,
    &PhiFreeCharacterisation,
    &PhiFreeCentralKernel,
    &OneDimensionalRightCentre,
    &SubalgebraLiesation,
    &RadicalTransfer,
    &SymmetricStructure,
    &QuotientTransfer,
    &FrattiniIsNilradicalSquare,
    &SymmetricEAlgebra,
    &RightMultiplicationBlock,
    &AAlgebraBlock,
];

pub fn theorem_registry() -> &'static [&'static dyn Theorem] {
    &THEOREMS
}

pub fn theorem(id: &str) -> Option<&'static dyn Theorem> {
    THEOREMS.iter().copied().find(|t| t.id() == id)
}

/// `T12.c` sorts after `T2` and `T12.b`.
fn theorem_order(a: &str, b: &str) -> Ordering {
    fn key(s: &str) -> (u32, &str) {
        let body = s.trim_start_matches('T');
        let (num, rest) = body.split_at(body.find('.').unwrap_or(body.len()));
        (num.parse().unwrap_or(u32::MAX), rest)
    }
    key(a).cmp(&key(b))
}

pub fn check_algebra(a: &Analysis, theorems: &[&dyn Theorem]) -> Vec<Outcome> {
    theorems
        .iter()
        .flat_map(|t| t.check(a))
        .map(|f| Outcome {
            algebra: a.id().to_string(),
            theorem: f.id,
            verdict: f.verdict,
            evidence: f.evidence,
        })
        .collect()
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SuiteReport {
    pub outcomes: Vec<Outcome>,
    /// Algebras decided almost algebraic but not almost reductive.
    pub separations: Vec<String>,
}

impl SuiteReport {
    pub fn violations(&self) -> impl Iterator<Item = &Outcome> {
        self.outcomes.iter().filter(|o| o.verdict == Verdict::Violated)
    }

    pub fn count(&self, v: Verdict) -> usize {
        self.outcomes.iter().filter(|o| o.verdict == v).count()
    }

    pub fn render(&self) -> String {
        let mut s = String::new();
        for o in &self.outcomes {
            s.push_str(&o.line());
            s.push('\n');
        }
        s
    }
}

/// Checks every algebra in parallel; output is ordered by algebra id, then
/// entry id, whatever the scheduling.
pub fn run_suite(analyses: &[Analysis], theorems: &[&dyn Theorem]) -> SuiteReport {
    let per: Vec<(Vec<Outcome>, bool)> = analyses
        .par_iter()
        .map(|a| {
            let sep = a.decision(Property::AlmostAlgebraic).is_yes() && a.decision(Property::AlmostReductive).is_no();
            (check_algebra(a, theorems), sep)
        })
        .collect();
    let mut separations = Vec::new();
    let mut outcomes = Vec::new();
    for (a, (o, sep)) in analyses.iter().zip(per) {
        if sep {
            separations.push(a.id().to_string());
        }
        outcomes.extend(o);
    }
    outcomes.sort_by(|x, y| x.algebra.cmp(&y.algebra).then_with(|| theorem_order(&x.theorem, &y.theorem)));
    separations.sort();
    SuiteReport { outcomes, separations }
}
