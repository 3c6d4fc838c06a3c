use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::exact::{Matrix, Subspace};

/// Where an annotated value comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Provenance {
    Paper,
    Derived,
    Trivial,
}

impl Provenance {
    pub fn as_str(self) -> &'static str {
        match self {
            Provenance::Paper => "paper",
            Provenance::Derived => "derived",
            Provenance::Trivial => "trivial",
        }
    }
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Provenance {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "paper" => Ok(Provenance::Paper),
            "derived" => Ok(Provenance::Derived),
            "trivial" => Ok(Provenance::Trivial),
            other => Err(format!("unknown provenance `{other}`")),
        }
    }
}

/// Class-membership flags that a catalog entry may record.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Flag {
    AAlgebra,
    Elementary,
    EAlgebra,
    PhiFree,
    AlmostReductive,
    AlmostAlgebraic,
}

impl Flag {
    pub const ALL: [Flag; 6] = [
        Flag::AAlgebra,
        Flag::Elementary,
        Flag::EAlgebra,
        Flag::PhiFree,
        Flag::AlmostReductive,
        Flag::AlmostAlgebraic,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Flag::AAlgebra => "a-algebra",
            Flag::Elementary => "elementary",
            Flag::EAlgebra => "e-algebra",
            Flag::PhiFree => "phi-free",
            Flag::AlmostReductive => "almost-reductive",
            Flag::AlmostAlgebraic => "almost-algebraic",
        }
    }
}

impl fmt::Display for Flag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Flag {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Flag::ALL
            .into_iter()
            .find(|f| f.as_str() == s)
            .ok_or_else(|| format!("unknown flag `{s}`"))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Annotated<T> {
    pub value: T,
    pub provenance: Provenance,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaximalList {
    pub subalgebras: Vec<Annotated<Subspace>>,
    /// Declared to be every maximal subalgebra.
    pub complete: Option<Provenance>,
}

/// Ground truth recorded alongside a catalog algebra.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Annotations {
    pub nilradical: Option<Annotated<Subspace>>,
    pub leibniz_kernel: Option<Annotated<Subspace>>,
    pub frattini: Option<Annotated<Subspace>>,
    pub maximals: Option<MaximalList>,
    pub flags: BTreeMap<Flag, Annotated<bool>>,
}

impl Annotations {
    pub fn is_empty(&self) -> bool {
        self.nilradical.is_none()
            && self.leibniz_kernel.is_none()
            && self.frattini.is_none()
            && self.maximals.is_none()
            && self.flags.is_empty()
    }

    pub fn flag(&self, f: Flag) -> Option<bool> {
        self.flags.get(&f).map(|a| a.value)
    }

    /// Maximal subalgebras declared complete, if any.
    pub fn complete_maximals(&self) -> Option<Vec<Subspace>> {
        let list = self.maximals.as_ref()?;
        list.complete?;
        Some(list.subalgebras.iter().map(|a| a.value.clone()).collect())
    }

    pub fn maximal_subspaces(&self) -> Vec<Subspace> {
        self.maximals
            .as_ref()
            .map(|m| m.subalgebras.iter().map(|a| a.value.clone()).collect())
            .unwrap_or_default()
    }

    /// Rewrites every subspace for new coordinates `v -> to_new * v`. Flags
    /// are basis independent and carry over unchanged.
    pub fn transformed(&self, to_new: &Matrix) -> Annotations {
        let map = |a: &Annotated<Subspace>| Annotated {
            value: a.value.image(to_new),
            provenance: a.provenance,
        };
        Annotations {
            nilradical: self.nilradical.as_ref().map(map),
            leibniz_kernel: self.leibniz_kernel.as_ref().map(map),
            frattini: self.frattini.as_ref().map(map),
            maximals: self.maximals.as_ref().map(|m| MaximalList {
                subalgebras: m.subalgebras.iter().map(map).collect(),
                complete: m.complete,
            }),
            flags: self.flags.clone(),
        }
    }
}
