use std::sync::OnceLock;

use crate::algebra::{Centers, Quotient, StructureConstants};
use crate::catalog::Annotations;
use crate::exact::Subspace;
use crate::structure::{nilradical_within, radical, RightMultAlgebra, StructureError};

use super::deciders::{decider, Property};
use super::frattini::{frattini_ideal, frattini_lower, FrattiniResult};
use super::sweep::candidate_subalgebras;
use super::Decision;

/// Lazily computed invariants of one algebra, shared by deciders and
/// theorem checks.
pub struct Analysis {
    id: String,
    algebra: StructureConstants,
    annotations: Annotations,
    kernel: OnceLock<Subspace>,
    centers: OnceLock<Centers>,
    radical: OnceLock<Result<Subspace, StructureError>>,
    nilradical: OnceLock<Result<Subspace, StructureError>>,
    liesation: OnceLock<Quotient>,
    right_mult: OnceLock<RightMultAlgebra>,
    frattini: OnceLock<FrattiniResult>,
    frattini_lower: OnceLock<Subspace>,
    sweep: OnceLock<Vec<Subspace>>,
    decisions: [OnceLock<Decision>; Property::ALL.len()],
}

impl Analysis {
    pub fn new(id: impl Into<String>, algebra: StructureConstants, annotations: Annotations) -> Self {
        Analysis {
            id: id.into(),
            algebra,
            annotations,
            kernel: OnceLock::new(),
            centers: OnceLock::new(),
            radical: OnceLock::new(),
            nilradical: OnceLock::new(),
            liesation: OnceLock::new(),
            right_mult: OnceLock::new(),
            frattini: OnceLock::new(),
            frattini_lower: OnceLock::new(),
            sweep: OnceLock::new(),
            decisions: Default::default(),
        }
    }

    /// An unannotated algebra.
    pub fn bare(id: impl Into<String>, algebra: StructureConstants) -> Self {
        Analysis::new(id, algebra, Annotations::default())
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn algebra(&self) -> &StructureConstants {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn annotations(&self) -> &Annotations {
        &self.annotations
    }

    pub fn leibniz_kernel(&self) -> &Subspace {
        self.kernel.get_or_init(|| self.algebra.leibniz_kernel())
    }

    pub fn centers(&self) -> &Centers {
        self.centers.get_or_init(|| self.algebra.centers())
    }

    pub fn radical(&self) -> Result<&Subspace, &StructureError> {
        self.radical.get_or_init(|| radical(&self.algebra)).as_ref()
    }

    pub fn nilradical(&self) -> Result<&Subspace, &StructureError> {
        self.nilradical
            .get_or_init(|| {
                let gamma = radical(&self.algebra)?;
                nilradical_within(&self.algebra, &gamma).map(|n| n.subspace)
            })
            .as_ref()
    }

    pub fn liesation(&self) -> &Quotient {
        self.liesation.get_or_init(|| self.algebra.liesation())
    }

    pub fn right_mult(&self) -> &RightMultAlgebra {
        self.right_mult.get_or_init(|| RightMultAlgebra::new(&self.algebra))
    }

    pub fn frattini(&self) -> &FrattiniResult {
        self.frattini.get_or_init(|| {
            let ann = (!self.annotations.is_empty()).then_some(&self.annotations);
            frattini_ideal(&self.algebra, ann)
        })
    }

    /// The structural lower bound alone, without the maximal-subalgebra search.
    pub fn frattini_lower(&self) -> &Subspace {
        self.frattini_lower.get_or_init(|| frattini_lower(&self.algebra))
    }

    /// Candidate subalgebras for the sampling deciders.
    pub fn sweep(&self) -> &[Subspace] {
        self.sweep.get_or_init(|| candidate_subalgebras(self))
    }

    pub fn decision(&self, p: Property) -> &Decision {
        self.decisions[p.index()].get_or_init(|| decider(p).decide(self))
    }

    /// `L/J` as a fresh analysis.
    pub fn quotient(&self, j: &Subspace, id: impl Into<String>) -> Option<(Quotient, Analysis)> {
        let q = self.algebra.quotient(j).ok()?;
        let a = Analysis::bare(id, q.algebra.clone());
        Some((q, a))
    }

    /// The subalgebra `B` as a fresh analysis.
    pub fn subalgebra(&self, b: &Subspace, id: impl Into<String>) -> Option<Analysis> {
        let s = self.algebra.restrict(b).ok()?;
        Some(Analysis::bare(id, s.algebra))
    }
}
