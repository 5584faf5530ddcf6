//! Finitely presented group engine: free reduction, bounded Tietze
//! simplification, integer Smith normal form, bounded Todd–Coxeter coset
//! enumeration, and group classification.

pub mod presentation;
pub mod snf;
pub mod todd_coxeter;
pub mod word;

pub use presentation::{Presentation, Simplified, DEFAULT_TIETZE_BUDGET};
pub use snf::{in_row_lattice, smith_normal_form, IntMatrix, Snf};
pub use todd_coxeter::{todd_coxeter, CosetResult, CosetTable, DEFAULT_MAX_COSETS};
pub use word::{Lit, Word};

use num_bigint::BigInt;
use num_traits::Zero;
use std::fmt;

/// Three-valued answer for questions the engine may not be able to decide.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Decision {
    Yes,
    No,
    Unknown(String),
}

impl Decision {
    pub fn is_yes(&self) -> bool {
        matches!(self, Decision::Yes)
    }

    pub fn is_no(&self) -> bool {
        matches!(self, Decision::No)
    }
}

/// Classification tag for a presented group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Classification {
    Free(usize),
    InfiniteCyclic,
    Trivial,
    Finite {
        order: usize,
        invariants: Vec<BigInt>,
    },
    Unknown(String),
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Classification::Free(n) => write!(f, "free({n})"),
            Classification::InfiniteCyclic => write!(f, "infinite-cyclic"),
            Classification::Trivial => write!(f, "trivial"),
            Classification::Finite { order, invariants } => {
                let inv: Vec<String> = invariants.iter().map(|d| d.to_string()).collect();
                write!(f, "finite({order}, ({}))", inv.join(","))
            }
            Classification::Unknown(reason) => write!(f, "unknown({reason})"),
        }
    }
}

/// Invariants extracted from a presentation: sizes after simplification,
/// abelian invariants, and a classification tag.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupFingerprint {
    pub generators: usize,
    pub relators: usize,
    pub abelian_invariants: Vec<BigInt>,
    pub classification: Classification,
}

/// Resource limits for the strategy chain.
#[derive(Debug, Clone, Copy)]
pub struct EngineLimits {
    pub tietze_budget: usize,
    pub max_cosets: usize,
}

impl Default for EngineLimits {
    fn default() -> Self {
        EngineLimits {
            tietze_budget: DEFAULT_TIETZE_BUDGET,
            max_cosets: DEFAULT_MAX_COSETS,
        }
    }
}

/// Classifies a presented group: simplify; a relator-free result is free
/// (rank 0 = trivial, rank 1 = infinite cyclic); otherwise compare the
/// Todd–Coxeter order against the abelianization.
pub fn classify(p: &Presentation) -> GroupFingerprint {
    classify_with(p, EngineLimits::default())
}

pub fn classify_with(p: &Presentation, limits: EngineLimits) -> GroupFingerprint {
    let s = p.simplify(limits.tietze_budget);
    let sp = &s.presentation;
    let invariants = sp.abelian_invariants();
    let generators = sp.generator_count();
    let relators = sp.relator_count();
    let classification = if relators == 0 && !s.budget_exhausted {
        match generators {
            0 => Classification::Trivial,
            1 => Classification::InfiniteCyclic,
            n => Classification::Free(n),
        }
    } else if invariants.iter().any(|d| d.is_zero()) {
        Classification::Unknown("infinite abelianization with relators remaining".into())
    } else {
        let ab_order: BigInt = invariants.iter().product();
        match todd_coxeter(sp, limits.max_cosets) {
            CosetResult::Closed { order, .. } => {
                if BigInt::from(order) == ab_order {
                    if order == 1 {
                        Classification::Trivial
                    } else {
                        Classification::Finite {
                            order,
                            invariants: invariants.clone(),
                        }
                    }
                } else {
                    Classification::Unknown(format!(
                        "finite of order {order} but abelianization has order {ab_order}"
                    ))
                }
            }
            CosetResult::Exceeded => Classification::Unknown(format!(
                "coset enumeration exceeded {} cosets",
                limits.max_cosets
            )),
        }
    };
    GroupFingerprint {
        generators,
        relators,
        abelian_invariants: invariants,
        classification,
    }
}

/// Is `w` trivial in the group presented by `p`? Strategy chain: nontrivial
/// abelianized image is a certain "no"; a simplification to a free group
/// decides exactly; a closed coset table decides exactly; otherwise unknown.
/// The strategies are cross-checked against each other at runtime.
pub fn word_trivial(p: &Presentation, w: &Word) -> Decision {
    word_trivial_with(p, w, EngineLimits::default())
}

pub fn word_trivial_with(p: &Presentation, w: &Word, limits: EngineLimits) -> Decision {
    for &(g, _) in w.lits() {
        assert!(g < p.generator_count(), "word letter outside presentation");
    }
    if w.is_empty() {
        return Decision::Yes;
    }
    let snf = p.abelianization();
    let ab_trivial = in_row_lattice(&snf, &w.exponents(p.generator_count()));

    let s = p.simplify(limits.tietze_budget);
    let rewritten = w.substitute(&s.images);
    if s.presentation.relator_count() == 0 && !s.budget_exhausted {
        let ans = rewritten.is_empty();
        assert!(
            ab_trivial || !ans,
            "abelianization and free-reduction strategies disagree"
        );
        return if ans { Decision::Yes } else { Decision::No };
    }
    if !ab_trivial {
        return Decision::No;
    }
    match todd_coxeter(&s.presentation, limits.max_cosets) {
        CosetResult::Closed { table, .. } => {
            if table.trace(&rewritten) == 0 {
                Decision::Yes
            } else {
                Decision::No
            }
        }
        CosetResult::Exceeded => Decision::Unknown(format!(
            "word problem undecided within {} cosets",
            limits.max_cosets
        )),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pres(gens: &[&str], relators: Vec<Vec<(usize, bool)>>) -> Presentation {
        Presentation::new(
            gens.iter().map(|s| s.to_string()).collect(),
            relators.into_iter().map(Word::from_lits).collect(),
        )
    }

    #[test]
    fn classify_free_and_cyclic() {
        assert_eq!(
            classify(&pres(&["a", "b"], vec![])).classification,
            Classification::Free(2)
        );
        assert_eq!(
            classify(&pres(&["a", "b"], vec![vec![(0, false)]])).classification,
            Classification::InfiniteCyclic
        );
        assert_eq!(
            classify(&pres(&["a", "b"], vec![vec![(0, false)], vec![(1, false)]])).classification,
            Classification::Trivial
        );
    }

    #[test]
    fn classify_z2() {
        let fp = classify(&pres(
            &["a", "b"],
            vec![vec![(1, false), (0, false)], vec![(0, false), (1, true)]],
        ));
        assert_eq!(
            fp.classification,
            Classification::Finite {
                order: 2,
                invariants: vec![BigInt::from(2)]
            }
        );
        assert_eq!(fp.abelian_invariants, vec![BigInt::from(2)]);
    }

    #[test]
    fn classify_finite_cyclic_range() {
        for n in 2..=12usize {
            let fp = classify(&pres(&["a"], vec![vec![(0, false); n]]));
            assert_eq!(
                fp.classification,
                Classification::Finite {
                    order: n,
                    invariants: vec![BigInt::from(n)]
                },
                "cyclic group of order {n}"
            );
        }
    }

    #[test]
    fn word_trivial_examples() {
        let p = pres(&["a", "b"], vec![vec![(0, false)]]);
        assert_eq!(word_trivial(&p, &Word::generator(0)), Decision::Yes);
        assert_eq!(word_trivial(&p, &Word::generator(1)), Decision::No);

        let z2 = pres(
            &["a", "b"],
            vec![vec![(1, false), (0, false)], vec![(0, false), (1, true)]],
        );
        assert_eq!(word_trivial(&z2, &Word::generator(0)), Decision::No);
        assert_eq!(
            word_trivial(&z2, &Word::from_lits(vec![(0, false), (0, false)])),
            Decision::Yes
        );
        assert_eq!(word_trivial(&z2, &Word::empty()), Decision::Yes);
    }
}
