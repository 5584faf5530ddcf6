//! Freely reduced words in a free group.

use num_bigint::BigInt;
use std::fmt;

/// A letter: generator index plus inversion flag.
pub type Lit = (usize, bool);

/// A freely reduced word. Construction reduces eagerly, so equality of
/// `Word`s is equality in the free group.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Word(Vec<Lit>);

impl Word {
    pub fn empty() -> Word {
        Word(Vec::new())
    }

    pub fn generator(g: usize) -> Word {
        Word(vec![(g, false)])
    }

    pub fn from_lits(lits: Vec<Lit>) -> Word {
        let mut stack: Vec<Lit> = Vec::new();
        for (g, inv) in lits {
            match stack.last() {
                Some(&(h, hinv)) if h == g && hinv != inv => {
                    stack.pop();
                }
                _ => stack.push((g, inv)),
            }
        }
        Word(stack)
    }

    pub fn lits(&self) -> &[Lit] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|&(g, inv)| (g, !inv)).collect())
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut lits = self.0.clone();
        lits.extend_from_slice(&other.0);
        Word::from_lits(lits)
    }

    /// Strips matching first/last inverse letters. The result generates the
    /// same normal closure as `self`.
    pub fn cyclically_reduced(&self) -> Word {
        let mut w = self.0.clone();
        while w.len() >= 2 {
            let (f, l) = (w[0], w[w.len() - 1]);
            if f.0 == l.0 && f.1 != l.1 {
                w.remove(0);
                w.pop();
            } else {
                break;
            }
        }
        Word(w)
    }

    /// All cyclic rotations (each freely reduced).
    pub fn rotations(&self) -> Vec<Word> {
        let n = self.0.len().max(1);
        (0..n)
            .map(|k| {
                let mut lits = self.0[k..].to_vec();
                lits.extend_from_slice(&self.0[..k]);
                Word::from_lits(lits)
            })
            .collect()
    }

    /// Exponent-sum vector over `ngens` generators (image in the free
    /// abelian group).
    pub fn exponents(&self, ngens: usize) -> Vec<BigInt> {
        let mut e = vec![BigInt::from(0); ngens];
        for &(g, inv) in &self.0 {
            if inv {
                e[g] -= 1;
            } else {
                e[g] += 1;
            }
        }
        e
    }

    /// Substitutes each generator by a word and freely reduces.
    pub fn substitute(&self, images: &[Word]) -> Word {
        let mut lits = Vec::new();
        for &(g, inv) in &self.0 {
            let img = if inv {
                images[g].inverse()
            } else {
                images[g].clone()
            };
            lits.extend_from_slice(img.lits());
        }
        Word::from_lits(lits)
    }

    pub fn render(&self, names: &[String]) -> String {
        if self.0.is_empty() {
            return "1".to_string();
        }
        self.0
            .iter()
            .map(|&(g, inv)| {
                if inv {
                    format!("{}^-1", names[g])
                } else {
                    names[g].clone()
                }
            })
            .collect::<Vec<_>>()
            .join("*")
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|&(g, inv)| {
                if inv {
                    format!("g{}^-1", g)
                } else {
                    format!("g{}", g)
                }
            })
            .collect();
        write!(f, "{}", parts.join("*"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduction_and_inverse() {
        let w = Word::from_lits(vec![(0, false), (1, false), (1, true), (0, false)]);
        assert_eq!(w, Word::from_lits(vec![(0, false), (0, false)]));
        assert!(w.concat(&w.inverse()).is_empty());
    }

    #[test]
    fn cyclic_reduction() {
        let w = Word::from_lits(vec![(0, true), (1, false), (0, false)]);
        assert_eq!(w.cyclically_reduced(), Word::generator(1));
    }

    #[test]
    fn exponents() {
        let w = Word::from_lits(vec![(0, false), (1, true), (0, false)]);
        assert_eq!(w.exponents(2), vec![BigInt::from(2), BigInt::from(-1)]);
    }
}
