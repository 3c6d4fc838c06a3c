use std::fmt;

use crate::algebra::{IdentityFailure, Kind, StructureConstants};
use crate::exact::{format_vector, Matrix, Subspace, Vector};
use crate::extensions::Infeasibility;

use super::frattini::FrattiniResult;

/// Three-valued outcome of a class-membership test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Decision {
    Yes(Certificate),
    No(Witness),
    Unknown(UnknownReason),
}

impl Decision {
    pub fn status(&self) -> Status {
        match self {
            Decision::Yes(_) => Status::Yes,
            Decision::No(_) => Status::No,
            Decision::Unknown(_) => Status::Unknown,
        }
    }

    pub fn is_yes(&self) -> bool {
        matches!(self, Decision::Yes(_))
    }

    pub fn is_no(&self) -> bool {
        matches!(self, Decision::No(_))
    }

    pub fn unknown(code: UnknownCode, detail: impl Into<String>) -> Decision {
        Decision::Unknown(UnknownReason {
            code,
            detail: detail.into(),
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Status {
    Yes,
    No,
    Unknown,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Yes => "yes",
            Status::No => "no",
            Status::Unknown => "unknown",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Machine-readable cause of an `Unknown`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum UnknownCode {
    NilradicalUncertified,
    NonabelianNilradical,
    NoJordanWitness,
    FrattiniInexact,
    SweepInconclusive,
    QuotientUndecided,
    ComputationFailed,
}

impl UnknownCode {
    pub fn as_str(self) -> &'static str {
        match self {
            UnknownCode::NilradicalUncertified => "nilradical-uncertified",
            UnknownCode::NonabelianNilradical => "nonabelian-nilradical",
            UnknownCode::NoJordanWitness => "no-jordan-witness",
            UnknownCode::FrattiniInexact => "frattini-inexact",
            UnknownCode::SweepInconclusive => "sweep-inconclusive",
            UnknownCode::QuotientUndecided => "quotient-undecided",
            UnknownCode::ComputationFailed => "computation-failed",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnknownReason {
    pub code: UnknownCode,
    pub detail: String,
}

/// Evidence for a `Yes`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    /// Every class in question contains the abelian algebras.
    Abelian,
    IdentityHolds(Kind),
    /// `L = N ∔ Σ` with `Σ` a Lie subalgebra acting completely reducibly on `N`.
    AlmostReductive { nilradical: Subspace, sigma: Subspace },
    /// Lie algebra `Λ = N ∔ (T ⊕ S)`, `T` abelian, `S` semisimple, acting
    /// completely reducibly on `N`.
    AlmostAlgebraicLie {
        nilradical: Subspace,
        torus: Subspace,
        levi: Subspace,
    },
    /// A certificate for the liesation `lie = L/I`.
    ViaLiesation {
        kernel: Subspace,
        lie: StructureConstants,
        inner: Box<Certificate>,
    },
    /// `φ(L) = 0`.
    FrattiniZero(Box<FrattiniResult>),
    /// No swept subalgebra refutes the property and a catalog annotation
    /// asserts it.
    SweepAndAnnotation { swept: Vec<Subspace> },
    /// `φ(L)` is exact and `L/φ(L)` carries the inner certificate.
    ViaFrattiniQuotient {
        frattini: Box<FrattiniResult>,
        quotient: StructureConstants,
        inner: Box<Certificate>,
    },
    /// Subalgebras of a two-dimensional algebra are `L`, lines and `0`.
    SmallFrattiniFree(Box<FrattiniResult>),
}

/// Obstruction to `L = N ∔ Σ` found in `W = L/N²` over `A = N/N²`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Obstruction {
    pub kind: ObstructionKind,
    pub nilradical: Subspace,
    pub infeasibility: Infeasibility,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ObstructionKind {
    /// No complement is a subalgebra.
    NonSplit,
    /// No complement has vanishing squares.
    Squares,
    /// No complement is a Lie subalgebra.
    LieComplement,
}

impl ObstructionKind {
    pub fn as_str(self) -> &'static str {
        match self {
            ObstructionKind::NonSplit => "non-split",
            ObstructionKind::Squares => "square-obstruction",
            ObstructionKind::LieComplement => "lie-complement-obstruction",
        }
    }
}

/// Evidence for a `No`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// Infeasible complement systems.
    Obstructions(Vec<Obstruction>),
    /// With abelian `N` every Lie complement acts the same way on `N`, and
    /// that action is not completely reducible.
    NotCompletelyReducible { nilradical: Subspace, complement: Subspace },
    /// `(R_x)_s` is not a right multiplication of the Lie algebra.
    JordanPart { element: Vector, semisimple: Matrix },
    ViaLiesation {
        kernel: Subspace,
        lie: StructureConstants,
        inner: Box<Witness>,
    },
    NonabelianNilpotent { subalgebra: Subspace },
    /// `φ(B)` contains the nonzero `lower`.
    FrattiniNonzero { subalgebra: Subspace, lower: Subspace },
    /// `φ(B) ⊇ lower` is not inside the upper bound for `φ(L)`.
    FrattiniNotContained {
        subalgebra: Subspace,
        lower: Subspace,
        frattini: Box<FrattiniResult>,
    },
    ViaFrattiniQuotient {
        frattini: Box<FrattiniResult>,
        quotient: StructureConstants,
        inner: Box<Witness>,
    },
    IdentityFails { kind: Kind, failure: IdentityFailure },
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Certificate::Abelian => write!(f, "abelian"),
            Certificate::IdentityHolds(k) => write!(f, "{k} identity holds on all basis triples"),
            Certificate::AlmostReductive { nilradical, sigma } => {
                write!(f, "N = {nilradical}; Sigma = {sigma}")
            }
            Certificate::AlmostAlgebraicLie {
                nilradical,
                torus,
                levi,
            } => write!(f, "N = {nilradical}; T = {torus}; S = {levi}"),
            Certificate::ViaLiesation { kernel, inner, .. } => {
                write!(f, "I = {kernel}; liesation: {inner}")
            }
            Certificate::FrattiniZero(fr) | Certificate::SmallFrattiniFree(fr) => {
                write!(f, "phi = 0 from {} maximal-subalgebra witnesses", fr.upper_witnesses.len())
            }
            Certificate::SweepAndAnnotation { swept } => {
                write!(f, "{} swept subalgebras, annotation confirms", swept.len())
            }
            Certificate::ViaFrattiniQuotient { frattini, inner, .. } => {
                write!(f, "phi = {}; L/phi: {inner}", frattini.upper)
            }
        }
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Obstructions(obs) => {
                let kinds: Vec<&str> = obs.iter().map(|o| o.kind.as_str()).collect();
                write!(f, "{}", kinds.join(", "))?;
                if let Some(o) = obs.first() {
                    write!(f, " over N = {}: {}", o.nilradical, o.infeasibility.description)?;
                }
                Ok(())
            }
            Witness::NotCompletelyReducible {
                nilradical,
                complement,
            } => write!(f, "Sigma = {complement} does not act completely reducibly on N = {nilradical}"),
            Witness::JordanPart { element, .. } => {
                write!(f, "semisimple part of ad {} is not inner", format_vector(element))
            }
            Witness::ViaLiesation { kernel, inner, .. } => write!(f, "I = {kernel}; liesation: {inner}"),
            Witness::NonabelianNilpotent { subalgebra } => {
                write!(f, "non-abelian nilpotent subalgebra {subalgebra}")
            }
            Witness::FrattiniNonzero { subalgebra, lower } => {
                write!(f, "phi({subalgebra}) contains {lower}")
            }
            Witness::FrattiniNotContained {
                subalgebra,
                lower,
                frattini,
            } => write!(f, "phi({subalgebra}) contains {lower}, not inside {}", frattini.upper),
            Witness::ViaFrattiniQuotient { frattini, inner, .. } => {
                write!(f, "phi = {}; L/phi: {inner}", frattini.upper)
            }
            Witness::IdentityFails { kind, failure } => write!(f, "{kind} identity fails at {failure}"),
        }
    }
}

impl fmt::Display for Decision {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Decision::Yes(c) => write!(f, "yes: {c}"),
            Decision::No(w) => write!(f, "no: {w}"),
            Decision::Unknown(r) => write!(f, "unknown [{}]: {}", r.code.as_str(), r.detail),
        }
    }
}
