//! Registered class-membership deciders.

use std::fmt;
use std::str::FromStr;

use crate::algebra::{AlgebraError, Kind, StructureConstants};
use crate::envelope::{is_completely_reducible, OperatorFamily};
use crate::exact::{jordan_chevalley, unit_vector, Subspace, Vector};
use crate::extensions::{find_complement, ComplementConditions, ComplementSearch};
use crate::structure::{l_split_check, levi_subalgebra, LSplit, RightMultAlgebra};

use super::analysis::Analysis;
use super::decision::{Certificate, Decision, Obstruction, ObstructionKind, UnknownCode, Witness};
use super::frattini::frattini_lower;
use super::sweep::{sample_elements, unit_grid, SWEEP_SEED};
use crate::catalog::Flag;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Property {
    AlmostReductive,
    AlmostAlgebraic,
    PhiFree,
    AAlgebra,
    Elementary,
    EAlgebra,
    Lie,
    Symmetric,
}

impl Property {
    pub const ALL: [Property; 8] = [
        Property::AlmostReductive,
        Property::AlmostAlgebraic,
        Property::PhiFree,
        Property::AAlgebra,
        Property::Elementary,
        Property::EAlgebra,
        Property::Lie,
        Property::Symmetric,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Property::AlmostReductive => "almost-reductive",
            Property::AlmostAlgebraic => "almost-algebraic",
            Property::PhiFree => "phi-free",
            Property::AAlgebra => "a-algebra",
            Property::Elementary => "elementary",
            Property::EAlgebra => "e-algebra",
            Property::Lie => "lie",
            Property::Symmetric => "symmetric",
        }
    }

    pub(crate) fn index(self) -> usize {
        self as usize
    }

    /// The catalog flag recording this property, if any.
    pub fn flag(self) -> Option<Flag> {
        match self {
            Property::AlmostReductive => Some(Flag::AlmostReductive),
            Property::AlmostAlgebraic => Some(Flag::AlmostAlgebraic),
            Property::PhiFree => Some(Flag::PhiFree),
            Property::AAlgebra => Some(Flag::AAlgebra),
            Property::Elementary => Some(Flag::Elementary),
            Property::EAlgebra => Some(Flag::EAlgebra),
            Property::Lie | Property::Symmetric => None,
        }
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Property {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Property::ALL
            .into_iter()
            .find(|p| p.as_str() == s)
            .ok_or_else(|| format!("unknown property `{s}`"))
    }
}

pub trait Decider: Send + Sync {
    fn property(&self) -> Property;
    fn decide(&self, a: &Analysis) -> Decision;
}

struct AlmostReductiveDecider;
struct AlmostAlgebraicDecider;
struct PhiFreeDecider;
struct AAlgebraDecider;
struct ElementaryDecider;
struct EAlgebraDecider;
struct IdentityDecider(Property, Kind);

static REGISTRY: [&dyn Decider; 8] = [
    &AlmostReductiveDecider,
    &AlmostAlgebraicDecider,
    &PhiFreeDecider,
    &AAlgebraDecider,
    &ElementaryDecider,
    &EAlgebraDecider,
    &IdentityDecider(Property::Lie, Kind::Lie),
    &IdentityDecider(Property::Symmetric, Kind::Symmetric),
];

pub fn registry() -> &'static [&'static dyn Decider] {
    &REGISTRY
}

pub fn decider(p: Property) -> &'static dyn Decider {
    REGISTRY
        .iter()
        .copied()
        .find(|d| d.property() == p)
        .expect("every property has a registered decider")
}

impl Decider for AlmostReductiveDecider {
    fn property(&self) -> Property {
        Property::AlmostReductive
    }

    fn decide(&self, a: &Analysis) -> Decision {
        decide_almost_reductive(a)
    }
}

impl Decider for AlmostAlgebraicDecider {
    fn property(&self) -> Property {
        Property::AlmostAlgebraic
    }

    fn decide(&self, a: &Analysis) -> Decision {
        let q = a.liesation();
        match decide_almost_algebraic_lie(&q.algebra) {
            Ok(Decision::Yes(c)) => Decision::Yes(Certificate::ViaLiesation {
                kernel: q.ideal.clone(),
                lie: q.algebra.clone(),
                inner: Box::new(c),
            }),
            Ok(Decision::No(w)) => Decision::No(Witness::ViaLiesation {
                kernel: q.ideal.clone(),
                lie: q.algebra.clone(),
                inner: Box::new(w),
            }),
            Ok(u) => u,
            Err(e) => Decision::unknown(UnknownCode::ComputationFailed, e.to_string()),
        }
    }
}

impl Decider for PhiFreeDecider {
    fn property(&self) -> Property {
        Property::PhiFree
    }

    fn decide(&self, a: &Analysis) -> Decision {
        // the certified part only; an annotation-raised lower bound has no
        // witness of its own
        let lower = a.frattini_lower();
        if !lower.is_zero() {
            return Decision::No(Witness::FrattiniNonzero {
                subalgebra: a.algebra().full(),
                lower: lower.clone(),
            });
        }
        let fr = a.frattini();
        if fr.upper.is_zero() {
            return Decision::Yes(Certificate::FrattiniZero(Box::new(fr.clone())));
        }
        Decision::unknown(
            UnknownCode::FrattiniInexact,
            format!("0 ⊆ phi ⊆ {} and the bounds do not meet", fr.upper),
        )
    }
}

impl Decider for AAlgebraDecider {
    fn property(&self) -> Property {
        Property::AAlgebra
    }

    fn decide(&self, a: &Analysis) -> Decision {
        let l = a.algebra();
        if l.is_abelian() {
            return Decision::Yes(Certificate::Abelian);
        }
        for b in a.sweep() {
            if !l.is_abelian_subspace(b) && l.is_nilpotent_subalgebra(b) {
                return Decision::No(Witness::NonabelianNilpotent { subalgebra: b.clone() });
            }
        }
        annotated_or_unknown(a, Property::AAlgebra)
    }
}

impl Decider for ElementaryDecider {
    fn property(&self) -> Property {
        Property::Elementary
    }

    fn decide(&self, a: &Analysis) -> Decision {
        let l = a.algebra();
        if l.is_abelian() {
            return Decision::Yes(Certificate::Abelian);
        }
        for b in a.sweep() {
            let lower = subalgebra_frattini_lower(l, b);
            if !lower.is_zero() {
                return Decision::No(Witness::FrattiniNonzero {
                    subalgebra: b.clone(),
                    lower,
                });
            }
        }
        let fr = a.frattini();
        if l.dim() <= 2 && fr.exact && fr.upper.is_zero() {
            return Decision::Yes(Certificate::SmallFrattiniFree(Box::new(fr.clone())));
        }
        annotated_or_unknown(a, Property::Elementary)
    }
}

impl Decider for EAlgebraDecider {
    fn property(&self) -> Property {
        Property::EAlgebra
    }

    fn decide(&self, a: &Analysis) -> Decision {
        let l = a.algebra();
        if l.is_abelian() {
            return Decision::Yes(Certificate::Abelian);
        }
        let fr = a.frattini();
        if fr.exact {
            if let Some((q, qa)) = a.quotient(&fr.upper, format!("{}/phi", a.id())) {
                match qa.decision(Property::Elementary).clone() {
                    Decision::Yes(c) => {
                        return Decision::Yes(Certificate::ViaFrattiniQuotient {
                            frattini: Box::new(fr.clone()),
                            quotient: q.algebra,
                            inner: Box::new(c),
                        })
                    }
                    Decision::No(w) => {
                        return Decision::No(Witness::ViaFrattiniQuotient {
                            frattini: Box::new(fr.clone()),
                            quotient: q.algebra,
                            inner: Box::new(w),
                        })
                    }
                    Decision::Unknown(_) => {}
                }
            }
        }
        if let Some(w) = direct_e_witness(a) {
            return Decision::No(w);
        }
        if fr.exact {
            return annotated_or_unknown(a, Property::EAlgebra);
        }
        match annotated_or_unknown(a, Property::EAlgebra) {
            Decision::Unknown(_) => Decision::unknown(
                UnknownCode::FrattiniInexact,
                format!("phi lies between {} and {}", fr.lower, fr.upper),
            ),
            d => d,
        }
    }
}

/// A swept subalgebra `B` whose certified part of `φ(B)` leaves the upper
/// bound for `φ(L)`.
pub fn direct_e_witness(a: &Analysis) -> Option<Witness> {
    let l = a.algebra();
    let fr = a.frattini();
    for b in a.sweep() {
        let lower = subalgebra_frattini_lower(l, b);
        if !fr.upper.contains(&lower) {
            return Some(Witness::FrattiniNotContained {
                subalgebra: b.clone(),
                lower,
                frattini: Box::new(fr.clone()),
            });
        }
    }
    None
}

impl Decider for IdentityDecider {
    fn property(&self) -> Property {
        self.0
    }

    fn decide(&self, a: &Analysis) -> Decision {
        match a.algebra().check_identity(self.1) {
            Ok(()) => Decision::Yes(Certificate::IdentityHolds(self.1)),
            Err(failure) => Decision::No(Witness::IdentityFails { kind: self.1, failure }),
        }
    }
}

fn annotated_or_unknown(a: &Analysis, p: Property) -> Decision {
    let confirmed = p.flag().and_then(|f| a.annotations().flag(f)) == Some(true);
    if confirmed {
        Decision::Yes(Certificate::SweepAndAnnotation {
            swept: a.sweep().to_vec(),
        })
    } else {
        Decision::unknown(
            UnknownCode::SweepInconclusive,
            format!("{} candidate subalgebras swept without a counterexample", a.sweep().len()),
        )
    }
}

/// Certified part of `φ(B)` for a subalgebra `B`, in the coordinates of `L`.
pub fn subalgebra_frattini_lower(l: &StructureConstants, b: &Subspace) -> Subspace {
    if l.is_abelian_subspace(b) {
        return Subspace::zero(l.dim());
    }
    let sub = l.restrict(b).expect("swept spaces are subalgebras");
    sub.include_subspace(&frattini_lower(&sub.algebra))
}

/// Family of left and right multiplications by `sigma`, restricted to `n`.
pub fn bimodule_action(l: &StructureConstants, sigma: &Subspace, n: &Subspace) -> Option<OperatorFamily> {
    let mut ops = Vec::new();
    for s in sigma.basis() {
        ops.push(l.right_mult(s));
        ops.push(l.left_mult(s));
    }
    OperatorFamily::new(l.dim(), ops).restrict(n)
}

/// A Lie subalgebra complementing the ideal `n`, built stage by stage over
/// the derived series of `n`. `None` when some stage has no Lie complement.
pub fn lie_complement_through(l: &StructureConstants, n: &Subspace) -> Option<Subspace> {
    let mut alg = l.clone();
    let mut ideal = n.clone();
    // embeddings of the current algebra's coordinates back into L
    let mut embed: Vec<crate::algebra::Subalgebra> = Vec::new();
    loop {
        if ideal.is_zero() {
            let mut out = alg.full();
            for s in embed.iter().rev() {
                out = s.include_subspace(&out);
            }
            return Some(out);
        }
        let d = alg.ideal_closure(&alg.product_subspace(&ideal, &ideal));
        let q = alg.quotient(&d).ok()?;
        let abar = q.project_subspace(&ideal);
        let c = match find_complement(&q.algebra, &abar, ComplementConditions::LIE_SUBALGEBRA).ok()? {
            ComplementSearch::Found(c) => c,
            ComplementSearch::Infeasible(_) => return None,
        };
        let k = q.preimage(&c);
        let sub = alg.restrict(&k).ok()?;
        let next_ideal = sub.restrict_subspace(&d)?;
        if d.is_zero() {
            // c itself is the complement
            let mut out = k;
            for s in embed.iter().rev() {
                out = s.include_subspace(&out);
            }
            return Some(out);
        }
        alg = sub.algebra.clone();
        ideal = next_ideal;
        embed.push(sub);
    }
}

/// `sigma` is a Lie subalgebra complementing `n` and `n` is a completely
/// reducible `sigma`-bimodule.
pub fn is_reductive_complement(l: &StructureConstants, n: &Subspace, sigma: &Subspace) -> bool {
    if !(sigma.intersect(n).is_zero() && sigma.sum(n).is_full() && l.is_subalgebra(sigma)) {
        return false;
    }
    let sub = l.restrict(sigma).expect("subalgebra");
    if !sub.algebra.leibniz_kernel().is_zero() {
        return false;
    }
    bimodule_action(l, sigma, n).is_some_and(|f| is_completely_reducible(&f))
}

pub fn decide_almost_reductive(a: &Analysis) -> Decision {
    let l = a.algebra();
    let nil = match a.nilradical() {
        Ok(n) => n.clone(),
        Err(e) => return Decision::unknown(UnknownCode::NilradicalUncertified, e.to_string()),
    };
    if nil.is_full() {
        return Decision::Yes(Certificate::AlmostReductive {
            nilradical: nil,
            sigma: l.zero_subspace(),
        });
    }
    let n2 = l.ideal_closure(&l.product_subspace(&nil, &nil));
    let q = l.quotient(&n2).expect("N² is an ideal");
    let abar = q.project_subspace(&nil);
    let mut obstructions = Vec::new();
    for (kind, conds) in [
        (ObstructionKind::Squares, ComplementConditions::SQUARES),
        (ObstructionKind::NonSplit, ComplementConditions::SUBALGEBRA),
        (ObstructionKind::LieComplement, ComplementConditions::LIE_SUBALGEBRA),
    ] {
        match find_complement(&q.algebra, &abar, conds) {
            Ok(ComplementSearch::Found(_)) => {}
            Ok(ComplementSearch::Infeasible(infeasibility)) => obstructions.push(Obstruction {
                kind,
                nilradical: nil.clone(),
                infeasibility,
            }),
            Err(e) => return Decision::unknown(UnknownCode::ComputationFailed, e.to_string()),
        }
    }
    if !obstructions.is_empty() {
        return Decision::No(Witness::Obstructions(obstructions));
    }
    let primary = lie_complement_through(l, &nil);
    if n2.is_zero() {
        let sigma = primary.expect("abelian stage was feasible");
        // with [N,N] = 0 every complement acts on N through the same operators
        return if is_reductive_complement(l, &nil, &sigma) {
            Decision::Yes(Certificate::AlmostReductive { nilradical: nil, sigma })
        } else {
            Decision::No(Witness::NotCompletelyReducible {
                nilradical: nil,
                complement: sigma,
            })
        };
    }
    let mut candidates: Vec<Subspace> = primary.into_iter().collect();
    if let Ok(gamma) = a.radical() {
        if let Ok(levi) = levi_subalgebra(l, gamma) {
            let t0 = nil.extension_within(gamma);
            let mut plain = levi.clone();
            for t in &t0 {
                plain.insert(t);
            }
            candidates.push(plain);
            let rl = a.right_mult();
            let mut split = levi;
            for t in &t0 {
                if let LSplit::Split { s, .. } = l_split_check(l, rl, t) {
                    split.insert(&s);
                }
            }
            candidates.push(split);
        }
    }
    for sigma in candidates {
        if is_reductive_complement(l, &nil, &sigma) {
            return Decision::Yes(Certificate::AlmostReductive { nilradical: nil, sigma });
        }
    }
    Decision::unknown(
        UnknownCode::NonabelianNilradical,
        "no obstruction over N/N², and no tried complement acts completely reducibly on the non-abelian nilradical",
    )
}

/// Elements probed for a Jordan-part witness.
fn jordan_probes(n: usize) -> Vec<Vector> {
    let mut probes: Vec<Vector> = (0..n).map(|i| unit_vector(n, i)).collect();
    if n <= 4 {
        probes.extend(unit_grid(n));
    }
    probes.extend(sample_elements(n, 8, SWEEP_SEED ^ 0x7a));
    probes
}

/// Some `x` whose `ad x` has a semisimple part outside `ad Λ`.
pub fn jordan_witness(lie: &StructureConstants) -> Option<Witness> {
    let rl = RightMultAlgebra::new(lie);
    for x in jordan_probes(lie.dim()) {
        let jc = jordan_chevalley(&lie.right_mult(&x)).expect("square");
        if !rl.contains(&jc.semisimple) {
            return Some(Witness::JordanPart {
                element: x,
                semisimple: jc.semisimple,
            });
        }
    }
    None
}

pub fn decide_almost_algebraic_lie(lie: &StructureConstants) -> Result<Decision, AlgebraError> {
    lie.require(Kind::Lie)?;
    let a = Analysis::bare("lie", lie.clone());
    let ar = decide_almost_reductive(&a);
    if let Decision::Yes(Certificate::AlmostReductive { nilradical, sigma }) = &ar {
        let sub = lie.restrict(sigma)?;
        let torus = sub.include_subspace(&sub.algebra.centers().center);
        let full = sub.algebra.full();
        let levi = sub.include_subspace(&sub.algebra.product_subspace(&full, &full));
        if torus.intersect(&levi).is_zero() && torus.sum(&levi) == *sigma {
            return Ok(Decision::Yes(Certificate::AlmostAlgebraicLie {
                nilradical: nilradical.clone(),
                torus,
                levi,
            }));
        }
    }
    if let Some(w) = jordan_witness(lie) {
        return Ok(Decision::No(w));
    }
    Ok(Decision::unknown(
        UnknownCode::NoJordanWitness,
        format!("almost-reductive test: {}; no probed element has an outer semisimple part", ar.status()),
    ))
}
