//! Minimal relations, the homotopy relation of an admissible presentation,
//! the fundamental-group presentation, and decision procedures for comparing
//! homotopy relations.
//!
//! A minimal relation is an ideal member no proper nonempty sub-sum of which
//! lies in the ideal; its support links the involved parallel paths
//! homotopically. The homotopy relation is generated by these pairs together
//! with walk reduction, so homotopy of parallel walks reduces to a word
//! problem in the derived fundamental-group presentation.

use crate::algebra::{Algebra, AlgebraElement, PathId};
use crate::fpgroup::{self, Decision, EngineLimits, Presentation, Word};
use crate::ideal::Ideal;
use crate::linalg;
use crate::quiver::{VertexId, Walk};
use crate::scalar::Scalar;
use std::collections::BTreeSet;
use thiserror::Error;

/// Bounds for the minimal-relation scan and the group-engine backends.
#[derive(Debug, Clone, Copy)]
pub struct HomotopyConfig {
    /// Maximum number of parallel paths per (source, target) pair; the
    /// subset scan is exponential in this.
    pub subset_bound: usize,
    /// Cap on exhaustive vector enumeration over small prime fields.
    pub enumeration_cap: usize,
    pub engine: EngineLimits,
}

impl Default for HomotopyConfig {
    fn default() -> Self {
        HomotopyConfig {
            subset_bound: 16,
            enumeration_cap: 1 << 20,
            engine: EngineLimits::default(),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HomotopyError {
    #[error("pair ({0}, {1}) has {2} parallel paths, above the configured bound {3}")]
    PathCountExceeded(String, String, usize, usize),
    #[error("exhaustive enumeration over pair ({0}, {1}) needs {2} vectors, above the cap {3}")]
    EnumerationCapExceeded(String, String, usize, usize),
    #[error("ideal is not admissible")]
    NotAdmissible,
    #[error("walks are not parallel")]
    NotParallel,
    #[error("relation containment does not hold: {0}")]
    NotContained(String),
}

/// A minimal relation: its support set and one witnessing ideal member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinimalSupport {
    pub source: VertexId,
    pub target: VertexId,
    pub support: BTreeSet<PathId>,
    pub witness: AlgebraElement,
}

/// The homotopy relation of an admissible presentation, presented by its
/// generating pairs of parallel paths.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomotopyRelation {
    pub pairs: BTreeSet<(PathId, PathId)>,
    pub provenance: Vec<String>,
}

/// The canonical surjection between fundamental groups of comparable
/// relations: identity on letters, surjective by construction.
#[derive(Debug, Clone)]
pub struct Surjection {
    pub basepoint: VertexId,
    pub generators: Vec<String>,
    pub source: Presentation,
    pub target: Presentation,
}

/// Exactly the supports `S` for which some ideal member has support `S` and
/// no proper nonempty restriction of it is an ideal member, with one witness
/// each. Supports are scanned in increasing size, masks in increasing value.
pub fn minimal_supports(
    alg: &Algebra,
    ideal: &Ideal,
    config: &HomotopyConfig,
) -> Result<Vec<MinimalSupport>, HomotopyError> {
    if ideal.admissible(alg).is_err() {
        return Err(HomotopyError::NotAdmissible);
    }
    let mut out = Vec::new();
    for (s, t) in ideal.nonzero_pairs() {
        let pair_paths = alg.paths().pair_paths(s, t);
        let n = pair_paths.len();
        if n > config.subset_bound {
            return Err(HomotopyError::PathCountExceeded(
                alg.quiver().vertex_name(s).to_string(),
                alg.quiver().vertex_name(t).to_string(),
                n,
                config.subset_bound,
            ));
        }
        let basis = &ideal.basis(s, t).expect("nonzero pair").rows;
        let mut masks: Vec<u32> = (1..(1u32 << n)).collect();
        masks.sort_by_key(|m| (m.count_ones(), *m));
        for mask in masks {
            if let Some(witness_vec) = minimal_witness(alg, ideal, s, t, basis, n, mask, config)? {
                let support: BTreeSet<PathId> = (0..n)
                    .filter(|i| mask & (1 << i) != 0)
                    .map(|i| pair_paths[i])
                    .collect();
                out.push(MinimalSupport {
                    source: s,
                    target: t,
                    support,
                    witness: alg.from_vector(s, t, &witness_vec),
                });
            }
        }
    }
    Ok(out)
}

/// Decides whether `mask` is a minimal support within the pair subspace and,
/// if so, produces an explicit witness vector.
#[allow(clippy::too_many_arguments)]
fn minimal_witness(
    alg: &Algebra,
    ideal: &Ideal,
    s: VertexId,
    t: VertexId,
    basis: &[Vec<Scalar>],
    n: usize,
    mask: u32,
    config: &HomotopyConfig,
) -> Result<Option<Vec<Scalar>>, HomotopyError> {
    let field = alg.field();
    let d = basis.len();
    // V_S = members of the pair subspace supported inside S, as combinations
    // of the pair basis: kernel of the outside-S coordinate constraints.
    let constraints: Vec<Vec<Scalar>> = (0..n)
        .filter(|i| mask & (1 << i) == 0)
        .map(|i| basis.iter().map(|row| row[i].clone()).collect())
        .collect();
    let coeff_basis = linalg::kernel_basis(field, &constraints, d);
    if coeff_basis.is_empty() {
        return Ok(None);
    }
    let vs_basis: Vec<Vec<Scalar>> = coeff_basis
        .iter()
        .map(|c| linalg::apply(field, c, basis))
        .collect();

    let in_mask: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
    let restricts_into_ideal = |v: &[Scalar], sub: u32| -> bool {
        let mut r = vec![field.zero(); n];
        for &i in &in_mask {
            if sub & (1 << i) != 0 {
                r[i] = v[i].clone();
            }
        }
        ideal.contains(alg, &alg.from_vector(s, t, &r))
    };
    let full_support = |v: &[Scalar]| in_mask.iter().all(|&i| !field.is_zero(&v[i]));
    let is_witness = |v: &[Scalar]| {
        full_support(v) && proper_submasks(mask).all(|sub| !restricts_into_ideal(v, sub))
    };

    match field.nonzero_elements() {
        None => {
            // Rationals: a finite union of proper subspaces cannot cover
            // V_S, so it is enough that each bad condition (a coordinate
            // vanishing, a restriction landing in the ideal) fails on some
            // basis vector of V_S; an explicit witness is then found by a
            // deterministic scan over small integer coefficient vectors.
            for &i in &in_mask {
                if vs_basis.iter().all(|b| field.is_zero(&b[i])) {
                    return Ok(None);
                }
            }
            for sub in proper_submasks(mask) {
                if vs_basis.iter().all(|b| restricts_into_ideal(b, sub)) {
                    return Ok(None);
                }
            }
            let k = vs_basis.len();
            for radius in 1i64.. {
                let mut coeffs = vec![-radius; k];
                loop {
                    if coeffs.iter().any(|c| c.abs() == radius) {
                        let v = combine_vectors(alg, &vs_basis, &coeffs, n);
                        if is_witness(&v) {
                            return Ok(Some(v));
                        }
                    }
                    if !next_coeff_vector(&mut coeffs, radius) {
                        break;
                    }
                }
            }
            unreachable!("a generic witness exists over the rationals");
        }
        Some(nonzero) => {
            // Small prime field: exhaust the coefficient space.
            let p = nonzero.len() + 1;
            let k = vs_basis.len();
            let size = p.checked_pow(k as u32).unwrap_or(usize::MAX);
            if size > config.enumeration_cap {
                return Err(HomotopyError::EnumerationCapExceeded(
                    alg.quiver().vertex_name(s).to_string(),
                    alg.quiver().vertex_name(t).to_string(),
                    size,
                    config.enumeration_cap,
                ));
            }
            let mut coeffs = vec![0u64; k];
            loop {
                if coeffs.iter().any(|&c| c != 0) {
                    let cvec: Vec<Scalar> = coeffs.iter().map(|&c| Scalar::Residue(c)).collect();
                    let v = linalg::apply(field, &cvec, &vs_basis);
                    if is_witness(&v) {
                        return Ok(Some(v));
                    }
                }
                // Odometer over residues.
                let mut idx = 0;
                loop {
                    if idx == k {
                        return Ok(None);
                    }
                    coeffs[idx] += 1;
                    if coeffs[idx] as usize == p {
                        coeffs[idx] = 0;
                        idx += 1;
                    } else {
                        break;
                    }
                }
            }
        }
    }
}

/// All proper nonempty submasks of `mask`.
fn proper_submasks(mask: u32) -> impl Iterator<Item = u32> {
    let m = mask;
    std::iter::successors(Some((m - 1) & m), move |&sub| {
        if sub == 0 {
            None
        } else {
            Some((sub - 1) & m)
        }
    })
    .filter(move |&sub| sub != 0 && sub != m)
}

fn combine_vectors(alg: &Algebra, basis: &[Vec<Scalar>], coeffs: &[i64], n: usize) -> Vec<Scalar> {
    let field = alg.field();
    let mut v = vec![field.zero(); n];
    for (c, b) in coeffs.iter().zip(basis) {
        if *c == 0 {
            continue;
        }
        let s = field.from_integer(*c);
        for (vi, bi) in v.iter_mut().zip(b) {
            *vi = field.add(vi, &field.mul(&s, bi));
        }
    }
    v
}

/// Advances `coeffs` through the box [-radius, radius]^k in lexicographic
/// order; false when exhausted.
fn next_coeff_vector(coeffs: &mut [i64], radius: i64) -> bool {
    for c in coeffs.iter_mut() {
        *c += 1;
        if *c > radius {
            *c = -radius;
        } else {
            return true;
        }
    }
    false
}

/// All unordered pairs of distinct parallel paths lying in a common minimal
/// support.
pub fn generating_pairs(
    alg: &Algebra,
    ideal: &Ideal,
    config: &HomotopyConfig,
) -> Result<BTreeSet<(PathId, PathId)>, HomotopyError> {
    let supports = minimal_supports(alg, ideal, config)?;
    let mut pairs = BTreeSet::new();
    for ms in &supports {
        let members: Vec<PathId> = ms.support.iter().copied().collect();
        for (i, p) in members.iter().enumerate() {
            for q in &members[i + 1..] {
                pairs.insert((*p, *q));
            }
        }
    }
    Ok(pairs)
}

/// The homotopy relation of an admissible ideal.
pub fn relation_of_ideal(
    alg: &Algebra,
    ideal: &Ideal,
    name: &str,
    config: &HomotopyConfig,
) -> Result<HomotopyRelation, HomotopyError> {
    Ok(HomotopyRelation {
        pairs: generating_pairs(alg, ideal, config)?,
        provenance: vec![name.to_string()],
    })
}

/// Fundamental-group presentation at a basepoint: generators are the
/// non-tree letters of the deterministic spanning tree, relators are
/// `word(p) * word(q)^-1` over the generating pairs.
pub fn pi1_presentation(
    alg: &Algebra,
    relation: &HomotopyRelation,
    basepoint: VertexId,
) -> Presentation {
    let tree = alg.quiver().spanning_tree(basepoint);
    let gens: Vec<String> = tree
        .letters()
        .iter()
        .map(|a| alg.quiver().arrow_name(*a).to_string())
        .collect();
    let relators: Vec<Word> = relation
        .pairs
        .iter()
        .map(|(p, q)| {
            let wp = tree.walk_word(&alg.paths().path(*p).as_walk());
            let wq = tree.walk_word(&alg.paths().path(*q).as_walk());
            wp.concat(&wq.inverse())
        })
        .collect();
    Presentation::new(gens, relators)
}

/// The canonical basepoint used for relation comparisons (answers are
/// basepoint-invariant).
pub fn canonical_basepoint() -> VertexId {
    VertexId(0)
}

/// Are two parallel walks homotopic under the relation? Groupoid equality
/// reduces to triviality of `word(w1) * word(w2)^-1` in the derived
/// presentation.
pub fn walks_homotopic(
    alg: &Algebra,
    relation: &HomotopyRelation,
    w1: &Walk,
    w2: &Walk,
    config: &HomotopyConfig,
) -> Result<Decision, HomotopyError> {
    let q = alg.quiver();
    if w1.source != w2.source || w1.target(q) != w2.target(q) {
        return Err(HomotopyError::NotParallel);
    }
    let tree = q.spanning_tree(canonical_basepoint());
    let word = tree.walk_word(w1).concat(&tree.walk_word(w2).inverse());
    let pres = pi1_presentation(alg, relation, canonical_basepoint());
    Ok(fpgroup::word_trivial_with(&pres, &word, config.engine))
}

/// Is `r1` contained in `r2` (every pair of `r1`-homotopic walks also
/// `r2`-homotopic)? Decided on the generating pairs.
pub fn relation_leq(
    alg: &Algebra,
    r1: &HomotopyRelation,
    r2: &HomotopyRelation,
    config: &HomotopyConfig,
) -> Decision {
    let mut unknown = None;
    for (p, q) in &r1.pairs {
        let wp = alg.paths().path(*p).as_walk();
        let wq = alg.paths().path(*q).as_walk();
        match walks_homotopic(alg, r2, &wp, &wq, config).expect("parallel by construction") {
            Decision::Yes => {}
            Decision::No => return Decision::No,
            Decision::Unknown(r) => unknown = Some(r),
        }
    }
    match unknown {
        None => Decision::Yes,
        Some(r) => Decision::Unknown(r),
    }
}

pub fn relation_equal(
    alg: &Algebra,
    r1: &HomotopyRelation,
    r2: &HomotopyRelation,
    config: &HomotopyConfig,
) -> Decision {
    match relation_leq(alg, r1, r2, config) {
        Decision::Yes => relation_leq(alg, r2, r1, config),
        other => other,
    }
}

/// The canonical surjection between the fundamental groups of contained
/// relations: both presentations share the letters of the same spanning
/// tree, and the map is the identity on letters.
pub fn canonical_surjection(
    alg: &Algebra,
    finer: &HomotopyRelation,
    coarser: &HomotopyRelation,
    basepoint: VertexId,
    config: &HomotopyConfig,
) -> Result<Surjection, HomotopyError> {
    match relation_leq(alg, finer, coarser, config) {
        Decision::Yes => {}
        other => {
            return Err(HomotopyError::NotContained(format!(
                "relation_leq returned {other:?}"
            )))
        }
    }
    let tree = alg.quiver().spanning_tree(basepoint);
    Ok(Surjection {
        basepoint,
        generators: tree
            .letters()
            .iter()
            .map(|a| alg.quiver().arrow_name(*a).to_string())
            .collect(),
        source: pi1_presentation(alg, finer, basepoint),
        target: pi1_presentation(alg, coarser, basepoint),
    })
}
