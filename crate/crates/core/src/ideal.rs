//! Two-sided ideals of the path algebra, stored as canonical reduced-echelon
//! bases per `(source, target)` pair.

use crate::algebra::{Algebra, AlgebraElement};
use crate::linalg::{self, Echelon};
use crate::quiver::VertexId;
use crate::scalar::Scalar;
use std::collections::BTreeMap;

/// A two-sided ideal. The per-pair bases are in reduced echelon form with
/// respect to the canonical path order, so ideal equality is basis equality.
#[derive(Debug, Clone)]
pub struct Ideal {
    bases: BTreeMap<(VertexId, VertexId), Echelon>,
    generators: Vec<AlgebraElement>,
}

/// Canonical, comparable form of an ideal: the echelon rows per pair.
pub type CanonicalKey = Vec<((VertexId, VertexId), Vec<Vec<Scalar>>)>;

/// One admissibility violation: a basis element supported on a path that is
/// too short.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdmissibilityViolation {
    pub pair: (VertexId, VertexId),
    pub element: AlgebraElement,
    pub shortest_path_len: usize,
}

impl Ideal {
    /// The two-sided ideal generated by `gens`: saturates `{u·g·w}` over all
    /// path prefixes `u` and suffixes `w` (stationary included) and reduces
    /// to canonical echelon form. Idempotent and generator-order-insensitive.
    pub fn closure(alg: &Algebra, gens: &[AlgebraElement]) -> Ideal {
        let paths = alg.paths();
        let mut per_pair: BTreeMap<(VertexId, VertexId), Vec<Vec<Scalar>>> = BTreeMap::new();
        for g in gens {
            if g.is_zero() {
                continue;
            }
            for s in alg.quiver().vertices() {
                for u in paths.pair_paths(s, g.source) {
                    let left = alg
                        .element_from_path(paths.path(*u))
                        .expect("enumerated path");
                    let ug = alg.multiply(&left, g).expect("composable");
                    for t in alg.quiver().vertices() {
                        for w in paths.pair_paths(g.target, t) {
                            let right = alg
                                .element_from_path(paths.path(*w))
                                .expect("enumerated path");
                            let ugw = alg.multiply(&ug, &right).expect("composable");
                            if !ugw.is_zero() {
                                per_pair
                                    .entry((ugw.source, ugw.target))
                                    .or_default()
                                    .push(alg.to_vector(&ugw));
                            }
                        }
                    }
                }
            }
        }
        let bases = per_pair
            .into_iter()
            .map(|(pair, rows)| {
                let ncols = paths.pair_paths(pair.0, pair.1).len();
                (pair, linalg::echelon(alg.field(), rows, ncols))
            })
            .filter(|(_, e)| e.dim() > 0)
            .collect();
        Ideal {
            bases,
            generators: gens.iter().filter(|g| !g.is_zero()).cloned().collect(),
        }
    }

    pub fn zero() -> Ideal {
        Ideal {
            bases: BTreeMap::new(),
            generators: Vec::new(),
        }
    }

    pub fn generators(&self) -> &[AlgebraElement] {
        &self.generators
    }

    /// Pairs with a nonzero subspace.
    pub fn nonzero_pairs(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.bases.keys().copied()
    }

    pub fn basis(&self, source: VertexId, target: VertexId) -> Option<&Echelon> {
        self.bases.get(&(source, target))
    }

    pub fn dimension(&self, source: VertexId, target: VertexId) -> usize {
        self.basis(source, target).map(|e| e.dim()).unwrap_or(0)
    }

    pub fn total_dimension(&self) -> usize {
        self.bases.values().map(|e| e.dim()).sum()
    }

    /// Canonical basis elements for a pair.
    pub fn basis_elements(
        &self,
        alg: &Algebra,
        source: VertexId,
        target: VertexId,
    ) -> Vec<AlgebraElement> {
        self.basis(source, target)
            .map(|e| {
                e.rows
                    .iter()
                    .map(|row| alg.from_vector(source, target, row))
                    .collect()
            })
            .unwrap_or_default()
    }

    /// Membership test; the zero element is always a member.
    pub fn contains(&self, alg: &Algebra, x: &AlgebraElement) -> bool {
        if x.is_zero() {
            return true;
        }
        match self.bases.get(&(x.source, x.target)) {
            None => false,
            Some(e) => linalg::contains(alg.field(), e, &alg.to_vector(x)),
        }
    }

    /// Equality of ideals: the canonical bases coincide for every pair.
    pub fn equal(&self, other: &Ideal) -> bool {
        self.bases == other.bases
    }

    /// Canonical form usable as a deduplication key.
    pub fn canonical_key(&self) -> CanonicalKey {
        self.bases
            .iter()
            .map(|(pair, e)| (*pair, e.rows.clone()))
            .collect()
    }

    /// Admissibility: every basis element must be supported on paths of
    /// length >= 2 (containment in the square of the arrow ideal; containing
    /// a power of the arrow ideal is automatic for acyclic quivers).
    pub fn admissible(&self, alg: &Algebra) -> Result<(), Vec<AdmissibilityViolation>> {
        let mut violations = Vec::new();
        for (pair, e) in &self.bases {
            for row in &e.rows {
                let elem = alg.from_vector(pair.0, pair.1, row);
                let shortest = elem
                    .support()
                    .map(|p| alg.paths().path(p).len())
                    .min()
                    .unwrap_or(usize::MAX);
                if shortest < 2 {
                    violations.push(AdmissibilityViolation {
                        pair: *pair,
                        element: elem,
                        shortest_path_len: shortest,
                    });
                }
            }
        }
        if violations.is_empty() {
            Ok(())
        } else {
            Err(violations)
        }
    }
}

impl PartialEq for Ideal {
    fn eq(&self, other: &Self) -> bool {
        self.equal(other)
    }
}

impl Eq for Ideal {}
