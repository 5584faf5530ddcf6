//! Group presentations and bounded Tietze simplification.

use super::snf::{smith_normal_form, IntMatrix, Snf};
use super::word::Word;
use num_bigint::BigInt;

/// A finite presentation: ordered generator names and freely and cyclically
/// reduced relators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    gens: Vec<String>,
    relators: Vec<Word>,
}

/// Outcome of [`Presentation::simplify`]. `images` rewrites each original
/// generator as a word in the simplified generators.
#[derive(Debug, Clone)]
pub struct Simplified {
    pub presentation: Presentation,
    pub images: Vec<Word>,
    pub budget_exhausted: bool,
}

pub const DEFAULT_TIETZE_BUDGET: usize = 10_000;

impl Presentation {
    pub fn new(gens: Vec<String>, relators: Vec<Word>) -> Presentation {
        let relators = normalize_relators(relators);
        Presentation { gens, relators }
    }

    pub fn free(gens: Vec<String>) -> Presentation {
        Presentation::new(gens, Vec::new())
    }

    pub fn generators(&self) -> &[String] {
        &self.gens
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn generator_count(&self) -> usize {
        self.gens.len()
    }

    pub fn relator_count(&self) -> usize {
        self.relators.len()
    }

    /// Exponent-sum matrix: one row per relator, one column per generator.
    pub fn exponent_matrix(&self) -> IntMatrix {
        if self.relators.is_empty() {
            // `from_rows` cannot infer the width of an empty matrix.
            return IntMatrix::zero(0, self.gens.len());
        }
        IntMatrix::from_rows(
            self.relators
                .iter()
                .map(|r| r.exponents(self.gens.len()))
                .collect(),
        )
    }

    pub fn abelianization(&self) -> Snf {
        smith_normal_form(&self.exponent_matrix())
    }

    /// Abelian invariants: torsion coefficients in divisibility order,
    /// followed by one `0` per free factor.
    pub fn abelian_invariants(&self) -> Vec<BigInt> {
        self.abelianization().abelian_invariants(self.gens.len())
    }

    /// Bounded, deterministic Tietze simplification. Applies, until fixpoint
    /// or budget: free/cyclic reduction, removal of empty and duplicate
    /// relators, elimination of a generator via a length-1 or length-2
    /// relator (shortest eligible relator first, ties by letter order), and
    /// relator-against-relator length reduction.
    pub fn simplify(&self, budget: usize) -> Simplified {
        let mut gens = self.gens.clone();
        let mut relators = self.relators.clone();
        let mut images: Vec<Word> = (0..self.gens.len()).map(Word::generator).collect();
        let mut steps = 0usize;
        let mut exhausted = false;

        'outer: loop {
            relators = normalize_relators(std::mem::take(&mut relators));
            if steps >= budget {
                exhausted = true;
                break;
            }

            // Generator elimination via length-1 / length-2 relators.
            if let Some((ri, gen)) = find_elimination(&relators) {
                let rel = &relators[ri];
                let replacement = elimination_word(rel, gen);
                let sub: Vec<Word> = (0..gens.len())
                    .map(|g| {
                        if g == gen {
                            replacement.clone()
                        } else {
                            Word::generator(g)
                        }
                    })
                    .collect();
                relators = relators
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| *i != ri)
                    .map(|(_, r)| r.substitute(&sub))
                    .collect();
                for img in images.iter_mut() {
                    *img = img.substitute(&sub);
                }
                // Drop the generator and reindex.
                let reindex: Vec<Word> = (0..gens.len())
                    .map(|g| {
                        if g < gen {
                            Word::generator(g)
                        } else if g == gen {
                            Word::empty() // unused: gen no longer occurs
                        } else {
                            Word::generator(g - 1)
                        }
                    })
                    .collect();
                relators = relators.iter().map(|r| r.substitute(&reindex)).collect();
                for img in images.iter_mut() {
                    *img = img.substitute(&reindex);
                }
                gens.remove(gen);
                steps += 1;
                continue 'outer;
            }

            // Relator-against-relator reduction on cyclic words.
            for i in 0..relators.len() {
                for j in 0..relators.len() {
                    if i == j || relators[j].len() > relators[i].len() {
                        continue;
                    }
                    let mut best: Option<Word> = None;
                    for ri in relators[i].rotations() {
                        for s in [relators[j].clone(), relators[j].inverse()] {
                            for sj in s.rotations() {
                                let t = ri.concat(&sj).cyclically_reduced();
                                if t.len() < relators[i].len()
                                    && best.as_ref().map(|b| t < *b).unwrap_or(true)
                                {
                                    best = Some(t);
                                }
                            }
                        }
                    }
                    if let Some(t) = best {
                        relators[i] = t;
                        steps += 1;
                        continue 'outer;
                    }
                }
            }

            break;
        }

        Simplified {
            presentation: Presentation {
                gens,
                relators: normalize_relators(relators),
            },
            images,
            budget_exhausted: exhausted,
        }
    }
}

/// Freely and cyclically reduce, drop empties and duplicates, sort for
/// determinism.
fn normalize_relators(relators: Vec<Word>) -> Vec<Word> {
    let mut out: Vec<Word> = relators
        .into_iter()
        .map(|r| r.cyclically_reduced())
        .filter(|r| !r.is_empty())
        .collect();
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out.dedup();
    out
}

/// Finds the relator and generator for the next elimination: relators of
/// length 1, or length 2 on two distinct generators, shortest first, ties by
/// the eliminated generator's index.
fn find_elimination(relators: &[Word]) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, usize)> = None; // (len, gen, relator idx)
    for (i, r) in relators.iter().enumerate() {
        let cand = match r.lits() {
            [(g, _)] => Some((1usize, *g)),
            [(g, _), (h, _)] if g != h => Some((2usize, (*g).min(*h))),
            _ => None,
        };
        if let Some((len, gen)) = cand {
            if best
                .map(|(bl, bg, _)| (len, gen) < (bl, bg))
                .unwrap_or(true)
            {
                best = Some((len, gen, i));
            }
        }
    }
    best.map(|(_, gen, i)| (i, gen))
}

/// Solves a length-1 or length-2 relator for `gen`, returning the word the
/// generator equals.
fn elimination_word(rel: &Word, gen: usize) -> Word {
    match rel.lits() {
        [(g, _)] => {
            assert_eq!(*g, gen);
            Word::empty()
        }
        [a, b] => {
            let (&(g, ginv), &(h, hinv)) = if a.0 == gen { (a, b) } else { (b, a) };
            assert_eq!(g, gen);
            // g^e h^f = 1  =>  g = h^(-f*e)
            let inv_of_h = ginv == hinv;
            Word::from_lits(vec![(h, inv_of_h)])
        }
        _ => unreachable!("elimination only from length-1/2 relators"),
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
    fn length_one_elimination() {
        // <a, b | a>  ->  <b | >
        let p = pres(&["a", "b"], vec![vec![(0, false)]]);
        let s = p.simplify(DEFAULT_TIETZE_BUDGET);
        assert_eq!(s.presentation.generators(), &["b".to_string()]);
        assert!(s.presentation.relators().is_empty());
        // a maps to the empty word, b survives as the single generator.
        assert!(s.images[0].is_empty());
        assert_eq!(s.images[1], Word::generator(0));
    }

    #[test]
    fn length_two_elimination_yields_a_squared() {
        // <a, b | b*a, a*b^-1>  ->  <a | a^2> (b = a^-1)
        let p = pres(
            &["a", "b"],
            vec![vec![(1, false), (0, false)], vec![(0, false), (1, true)]],
        );
        let s = p.simplify(DEFAULT_TIETZE_BUDGET);
        assert_eq!(s.presentation.generator_count(), 1);
        assert_eq!(s.presentation.relator_count(), 1);
        assert_eq!(s.presentation.relators()[0].len(), 2);
    }

    #[test]
    fn free_presentation_is_fixpoint() {
        let p = pres(&["a", "b"], vec![]);
        let s = p.simplify(DEFAULT_TIETZE_BUDGET);
        assert_eq!(s.presentation, p);
        assert!(!s.budget_exhausted);
    }

    #[test]
    fn abelian_invariants_examples() {
        // <a,b | > -> (0, 0)
        let p = pres(&["a", "b"], vec![]);
        assert_eq!(
            p.abelian_invariants(),
            vec![BigInt::from(0), BigInt::from(0)]
        );
        // <a,b | b*a, a*b^-1> -> (2)
        let p = pres(
            &["a", "b"],
            vec![vec![(1, false), (0, false)], vec![(0, false), (1, true)]],
        );
        assert_eq!(p.abelian_invariants(), vec![BigInt::from(2)]);
        // <a,b | a, b> -> ()
        let p = pres(&["a", "b"], vec![vec![(0, false)], vec![(1, false)]]);
        assert!(p.abelian_invariants().is_empty());
    }

    #[test]
    fn simplify_preserves_abelian_invariants() {
        let p = pres(
            &["a", "b", "c"],
            vec![
                vec![(0, false), (1, false), (2, true)],
                vec![(2, false), (2, false)],
            ],
        );
        let before = p.abelian_invariants();
        let s = p.simplify(DEFAULT_TIETZE_BUDGET);
        assert_eq!(before, s.presentation.abelian_invariants());
    }
}
