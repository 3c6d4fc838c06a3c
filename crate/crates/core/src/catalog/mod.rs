//! Built-in algebras with provenance-tagged annotations, the `leibalg v1`
//! text format and seeded random constructions.

mod annotations;
mod format;
mod random;

use thiserror::Error;

use crate::algebra::{IdentityFailure, Kind, StructureConstants};
use crate::classify::{check_maximal, Analysis, Decision, Maximality, Property};
use crate::exact::Subspace;

pub use annotations::*;
pub use format::{parse, parse_named, parse_rational, serialize};
pub use random::{random_algebra, random_population, ModuleSpec, Recipe};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("declared {kind} identity fails at {failure}")]
    Validation { kind: Kind, failure: IdentityFailure },
    #[error("annotation does not fit the algebra: {0}")]
    Annotation(String),
    #[error("unknown catalog id `{0}`")]
    UnknownId(String),
    #[error("invalid recipe parameters: {0}")]
    Recipe(String),
}

/// A named algebra, its declared identity and its annotations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraEntry {
    pub id: String,
    pub kind: Kind,
    pub constants: StructureConstants,
    pub annotations: Annotations,
}

impl AlgebraEntry {
    /// Validates the declared identity and the annotation dimensions.
    pub fn new(
        id: impl Into<String>,
        kind: Kind,
        constants: StructureConstants,
        annotations: Annotations,
    ) -> Result<Self, CatalogError> {
        constants
            .check_identity(kind)
            .map_err(|failure| CatalogError::Validation { kind, failure })?;
        let n = constants.dim();
        let mut spaces: Vec<&Subspace> = [&annotations.nilradical, &annotations.leibniz_kernel, &annotations.frattini]
            .into_iter()
            .flatten()
            .map(|a| &a.value)
            .collect();
        spaces.extend(annotations.maximals.iter().flat_map(|m| m.subalgebras.iter().map(|a| &a.value)));
        if let Some(s) = spaces.iter().find(|s| s.ambient_dim() != n) {
            return Err(CatalogError::Annotation(format!(
                "subspace of ambient dimension {} in a {n}-dimensional algebra",
                s.ambient_dim()
            )));
        }
        Ok(AlgebraEntry {
            id: id.into(),
            kind,
            constants,
            annotations,
        })
    }

    /// The algebra as a right Leibniz algebra; left entries are read through
    /// their opposite.
    pub fn right_leibniz(&self) -> StructureConstants {
        match self.kind {
            Kind::Left => self.constants.opposite(),
            _ => self.constants.clone(),
        }
    }

    pub fn analysis(&self) -> Analysis {
        Analysis::new(self.id.clone(), self.right_leibniz(), self.annotations.clone())
    }
}

const BUILTIN: [&str; 12] = [
    include_str!("../../data/abelian1.leibalg"),
    include_str!("../../data/abelian2.leibalg"),
    include_str!("../../data/abelian3.leibalg"),
    include_str!("../../data/abelian4.leibalg"),
    include_str!("../../data/cyclic4.leibalg"),
    include_str!("../../data/symm3.leibalg"),
    include_str!("../../data/heisenberg3.leibalg"),
    include_str!("../../data/solvable2.leibalg"),
    include_str!("../../data/rotation3.leibalg"),
    include_str!("../../data/sl2.leibalg"),
    include_str!("../../data/sl2-semidirect-v2.leibalg"),
    include_str!("../../data/sl2-demisemidirect-v2.leibalg"),
];

/// Every built-in entry, in a fixed order.
pub fn catalog() -> Vec<AlgebraEntry> {
    BUILTIN
        .iter()
        .map(|text| parse(text).expect("built-in catalog files are valid"))
        .collect()
}

/// The raw text of a built-in entry.
pub fn builtin_text(id: &str) -> Option<&'static str> {
    BUILTIN
        .iter()
        .copied()
        .find(|t| t.lines().any(|l| l.trim() == format!("@id {id}")))
}

pub fn lookup(id: &str) -> Result<AlgebraEntry, CatalogError> {
    builtin_text(id)
        .map(|t| parse(t).expect("built-in catalog files are valid"))
        .ok_or_else(|| CatalogError::UnknownId(id.to_string()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckStatus {
    Matches,
    Mismatch,
    /// The computation could not settle the value; consistent bounds only.
    Unsettled,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnnotationCheck {
    pub name: String,
    pub provenance: Provenance,
    pub status: CheckStatus,
    pub detail: String,
}

fn subspace_check(name: &str, a: &Annotated<Subspace>, computed: Option<&Subspace>) -> AnnotationCheck {
    let (status, detail) = match computed {
        Some(c) if *c == a.value => (CheckStatus::Matches, format!("{c}")),
        Some(c) => (CheckStatus::Mismatch, format!("annotated {}, computed {c}", a.value)),
        None => (CheckStatus::Unsettled, "not computed".into()),
    };
    AnnotationCheck {
        name: name.to_string(),
        provenance: a.provenance,
        status,
        detail,
    }
}

/// Re-checks every annotation of an analysed entry against computed values.
pub fn check_annotations(a: &Analysis) -> Vec<AnnotationCheck> {
    let ann = a.annotations();
    let l = a.algebra();
    let mut out = Vec::new();
    if let Some(n) = &ann.nilradical {
        out.push(subspace_check("nilradical", n, a.nilradical().ok()));
    }
    if let Some(k) = &ann.leibniz_kernel {
        out.push(subspace_check("leibniz-kernel", k, Some(a.leibniz_kernel())));
    }
    if let Some(f) = &ann.frattini {
        let fr = a.frattini();
        out.push(if fr.exact {
            subspace_check("frattini", f, Some(&fr.upper))
        } else {
            let consistent = f.value.contains(&fr.lower) && fr.upper.contains(&f.value);
            AnnotationCheck {
                name: "frattini".into(),
                provenance: f.provenance,
                status: if consistent { CheckStatus::Unsettled } else { CheckStatus::Mismatch },
                detail: format!("bounds {} ⊆ phi ⊆ {}", fr.lower, fr.upper),
            }
        });
    }
    if let Some(m) = &ann.maximals {
        for s in &m.subalgebras {
            let verdict = check_maximal(l, &s.value);
            let status = match verdict {
                Maximality::Maximal => CheckStatus::Matches,
                Maximality::Undecided => CheckStatus::Unsettled,
                _ => CheckStatus::Mismatch,
            };
            out.push(AnnotationCheck {
                name: "maximal".into(),
                provenance: s.provenance,
                status,
                detail: format!("{}: {verdict:?}", s.value),
            });
        }
    }
    for (flag, v) in &ann.flags {
        let p = Property::ALL
            .into_iter()
            .find(|p| p.flag() == Some(*flag))
            .expect("every flag names a property");
        let d = a.decision(p);
        let status = match d {
            Decision::Yes(_) if v.value => CheckStatus::Matches,
            Decision::No(_) if !v.value => CheckStatus::Matches,
            Decision::Unknown(_) => CheckStatus::Unsettled,
            _ => CheckStatus::Mismatch,
        };
        out.push(AnnotationCheck {
            name: flag.as_str().to_string(),
            provenance: v.provenance,
            status,
            detail: d.status().to_string(),
        });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtins_parse_and_round_trip() {
        let all = catalog();
        assert_eq!(all.len(), BUILTIN.len());
        for e in &all {
            let text = serialize(e);
            assert_eq!(parse(&text).unwrap(), *e, "{}", e.id);
            assert_eq!(serialize(&parse(&text).unwrap()), text);
        }
    }

    #[test]
    fn lookup_by_id() {
        assert_eq!(lookup("cyclic4").unwrap().constants.nonzero_products().count(), 4);
        assert!(matches!(lookup("nope"), Err(CatalogError::UnknownId(_))));
    }
}
