//! Frattini ideal bounds.

use crate::algebra::StructureConstants;
use crate::catalog::Annotations;
use crate::exact::Subspace;
use crate::extensions::{split_over_abelian_ideal, SplitStatus};
use crate::structure::{abelian_socle, nilradical};

use super::maximal::{check_maximal, maximal_subalgebras_codim1, Maximality};

/// Why a subspace is an intersection of maximal subalgebras.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum UpperWitness {
    /// A subalgebra of codimension one.
    Codim1(Subspace),
    /// An annotated subalgebra whose maximality was re-checked.
    Annotated(Subspace),
    /// A complement subalgebra of the abelian socle `socle`: adding all but
    /// one minimal summand back gives a maximal subalgebra, and these meet in
    /// the complement.
    SocleComplement { complement: Subspace, socle: Subspace },
}

impl UpperWitness {
    pub fn subspace(&self) -> &Subspace {
        match self {
            UpperWitness::Codim1(s) | UpperWitness::Annotated(s) => s,
            UpperWitness::SocleComplement { complement, .. } => complement,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrattiniResult {
    /// Certified to lie in `φ(L)`.
    pub lower: Subspace,
    /// Certified to contain `φ(L)`.
    pub upper: Subspace,
    pub exact: bool,
    pub maximal_subalgebras_found: Vec<Subspace>,
    pub upper_witnesses: Vec<UpperWitness>,
    /// Exactness rests on an annotated complete list of maximal subalgebras.
    pub via_complete_list: bool,
    /// The annotated complete list, when `via_complete_list`.
    pub complete_list: Vec<Subspace>,
    pub families_sampled: bool,
}

impl FrattiniResult {
    pub fn value(&self) -> Option<&Subspace> {
        self.exact.then_some(&self.upper)
    }
}

/// `N² + (Z(L) ∩ L²)`, or `L²` for nilpotent `L`, reduced to its largest
/// ideal. Falls back to `Z ∩ L²` when the nilradical is uncertified.
pub fn frattini_lower(l: &StructureConstants) -> Subspace {
    let full = l.full();
    let l2 = l.product_subspace(&full, &full);
    if l.is_nilpotent() {
        return l2;
    }
    let mut lower = l.centers().center.intersect(&l2);
    if let Ok(nil) = nilradical(l) {
        let n = nil.subspace;
        lower = lower.sum(&l.product_subspace(&n, &n));
    }
    l.largest_ideal_in(&lower)
}

/// Intersection of the witnesses, reduced to its largest ideal.
pub fn core_of_intersection<'a>(l: &StructureConstants, spaces: impl IntoIterator<Item = &'a Subspace>) -> Subspace {
    let meet = spaces.into_iter().fold(l.full(), |acc, s| acc.intersect(s));
    l.largest_ideal_in(&meet)
}

pub fn frattini_ideal(l: &StructureConstants, annotations: Option<&Annotations>) -> FrattiniResult {
    let lower = frattini_lower(l);
    let mut witnesses: Vec<UpperWitness> = Vec::new();
    let mut found: Vec<Subspace> = Vec::new();
    let mut families_sampled = true;
    if let Ok(search) = maximal_subalgebras_codim1(l) {
        families_sampled = search.families_sampled;
        for h in search.subalgebras {
            found.push(h.clone());
            witnesses.push(UpperWitness::Codim1(h));
        }
    }
    let mut annotated_ok = true;
    let annotated = annotations.map(Annotations::maximal_subspaces).unwrap_or_default();
    for m in &annotated {
        if m.ambient_dim() == l.dim() && check_maximal(l, m) == Maximality::Maximal {
            if !found.contains(m) {
                found.push(m.clone());
                witnesses.push(UpperWitness::Annotated(m.clone()));
            }
        } else {
            annotated_ok = false;
        }
    }
    let socle = abelian_socle(l);
    if !socle.is_zero() {
        if let Ok(split) = split_over_abelian_ideal(l, &socle) {
            if split.status == SplitStatus::Split {
                let complement = split.complement.expect("split carries a complement");
                witnesses.push(UpperWitness::SocleComplement { complement, socle });
            }
        }
    }
    let upper = core_of_intersection(l, witnesses.iter().map(UpperWitness::subspace));
    debug_assert!(upper.contains(&lower), "Frattini bounds cross");
    let mut result = FrattiniResult {
        exact: lower == upper,
        lower,
        upper,
        maximal_subalgebras_found: found,
        upper_witnesses: witnesses,
        via_complete_list: false,
        complete_list: Vec::new(),
        families_sampled,
    };
    if !result.exact {
        let complete = annotations.and_then(Annotations::complete_maximals);
        if let Some(list) = complete {
            let covers_search = result
                .upper_witnesses
                .iter()
                .all(|w| !matches!(w, UpperWitness::Codim1(h) if !list.contains(h)));
            let value = core_of_intersection(l, &list);
            if annotated_ok && covers_search && value.contains(&result.lower) && result.upper.contains(&value) {
                result.lower = value.clone();
                result.upper = value;
                result.exact = true;
                result.via_complete_list = true;
                result.complete_list = list;
            }
        }
    }
    result
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::fixtures;
    use crate::catalog::{Annotated, MaximalList, Provenance};
    use crate::exact::vector_from_i64;

    fn span(n: usize, vs: &[&[i64]]) -> Subspace {
        Subspace::spanned_by(n, &vs.iter().map(|v| vector_from_i64(v)).collect::<Vec<_>>())
    }

    #[test]
    fn symm3_exact_without_annotations() {
        let l = fixtures::symm3();
        let fr = frattini_ideal(&l, None);
        assert!(fr.exact && !fr.via_complete_list);
        assert_eq!(fr.upper, span(3, &[&[0, 0, 1]]));
    }

    #[test]
    fn cyclic_needs_complete_list() {
        let l = fixtures::cyclic4();
        let fr = frattini_ideal(&l, None);
        assert!(!fr.exact);
        assert_eq!(fr.lower, span(4, &[&[0, 0, 1, -1]]));
        let phi = span(4, &[&[0, 1, -1, 0], &[0, 0, 1, -1]]);
        assert_eq!(fr.upper, phi);
        let ann = Annotations {
            maximals: Some(MaximalList {
                subalgebras: vec![
                    Annotated {
                        value: span(4, &[&[0, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1]]),
                        provenance: Provenance::Paper,
                    },
                    Annotated {
                        value: span(4, &[&[1, -1, 0, 0], &[0, 1, -1, 0], &[0, 0, 1, -1]]),
                        provenance: Provenance::Paper,
                    },
                ],
                complete: Some(Provenance::Paper),
            }),
            ..Annotations::default()
        };
        let fr = frattini_ideal(&l, Some(&ann));
        assert!(fr.exact && fr.via_complete_list);
        assert_eq!(fr.value(), Some(&phi));
    }

    #[test]
    fn nilpotent_and_semisimple() {
        let h = fixtures::heisenberg();
        let fr = frattini_ideal(&h, None);
        assert!(fr.exact);
        assert_eq!(fr.upper, span(3, &[&[0, 0, 1]]));
        let s = fixtures::sl2();
        let fr = frattini_ideal(&s, None);
        assert!(fr.exact && fr.upper.is_zero());
        let a = StructureConstants::abelian(3);
        assert!(frattini_ideal(&a, None).upper.is_zero());
    }
}
