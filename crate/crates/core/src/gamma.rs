//! The quiver of homotopy relations over a family of admissible
//! presentations: vertices are relation classes, arrows are strict relation
//! containments witnessed by a single transvection. Also breadth-first orbit
//! exploration of a presentation under transvections.

use crate::algebra::Algebra;
use crate::fpgroup::{self, Decision, GroupFingerprint};
use crate::homotopy::{self, HomotopyConfig, HomotopyError, HomotopyRelation};
use crate::ideal::Ideal;
use crate::morphism::Morphism;
use crate::quiver::Path;
use crate::scalar::{Field, FieldSpec, Scalar};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum GammaError {
    #[error("comparison could not be decided: {0}")]
    Undecided(String),
    #[error(transparent)]
    Homotopy(#[from] HomotopyError),
}

/// One vertex of the quiver: a class of presentations sharing a homotopy
/// relation.
#[derive(Debug, Clone)]
pub struct RelationClass {
    /// Named member ideals, in input order; the first is the representative.
    pub members: Vec<(String, Ideal)>,
    pub relation: HomotopyRelation,
    /// Fundamental group at the canonical basepoint.
    pub fingerprint: GroupFingerprint,
}

/// A family of admissible presentations of a fixed quiver algebra, grouped
/// into homotopy-relation classes.
#[derive(Debug, Clone)]
pub struct PresentationFamily {
    pub classes: Vec<RelationClass>,
}

/// The transvection witnessing an arrow: applied to `member`, it produces an
/// ideal whose homotopy relation is the target class.
#[derive(Debug, Clone)]
pub struct TransvectionWitness {
    pub member: String,
    pub arrow: String,
    pub bypass: Vec<String>,
    pub tau: Scalar,
}

#[derive(Debug, Clone)]
pub struct GammaArrow {
    pub from: usize,
    pub to: usize,
    pub witness: TransvectionWitness,
}

#[derive(Debug, Clone)]
pub struct GammaQuiver {
    pub family: PresentationFamily,
    pub arrows: Vec<GammaArrow>,
}

impl PresentationFamily {
    /// Groups named ideals into relation classes. Deterministic: classes
    /// appear in order of their first member.
    pub fn build(
        alg: &Algebra,
        ideals: &[(String, Ideal)],
        config: &HomotopyConfig,
    ) -> Result<PresentationFamily, GammaError> {
        let mut family = PresentationFamily {
            classes: Vec::new(),
        };
        for (name, ideal) in ideals {
            family.insert(alg, name, ideal, config)?;
        }
        Ok(family)
    }

    fn insert(
        &mut self,
        alg: &Algebra,
        name: &str,
        ideal: &Ideal,
        config: &HomotopyConfig,
    ) -> Result<usize, GammaError> {
        let relation = homotopy::relation_of_ideal(alg, ideal, name, config)?;
        match self.class_of(alg, &relation, config)? {
            Some(idx) => {
                self.classes[idx]
                    .members
                    .push((name.to_string(), ideal.clone()));
                Ok(idx)
            }
            None => {
                let pres =
                    homotopy::pi1_presentation(alg, &relation, homotopy::canonical_basepoint());
                let fingerprint = fpgroup::classify_with(&pres, config.engine);
                self.classes.push(RelationClass {
                    members: vec![(name.to_string(), ideal.clone())],
                    relation,
                    fingerprint,
                });
                Ok(self.classes.len() - 1)
            }
        }
    }

    /// Index of the class whose relation equals `relation`, if any.
    pub fn class_of(
        &self,
        alg: &Algebra,
        relation: &HomotopyRelation,
        config: &HomotopyConfig,
    ) -> Result<Option<usize>, GammaError> {
        for (idx, class) in self.classes.iter().enumerate() {
            match homotopy::relation_equal(alg, relation, &class.relation, config) {
                Decision::Yes => return Ok(Some(idx)),
                Decision::No => {}
                Decision::Unknown(r) => return Err(GammaError::Undecided(r)),
            }
        }
        Ok(None)
    }

    pub fn class_name(&self, idx: usize) -> &str {
        &self.classes[idx].members[0].0
    }
}

/// Default transvection coefficients to try: a few small rationals, or every
/// nonzero residue over a prime field.
pub fn default_tau_samples(field: &Field) -> Vec<Scalar> {
    match field.spec() {
        FieldSpec::Rationals => [(1, 1), (-1, 1), (2, 1), (-2, 1), (1, 2), (-1, 2)]
            .iter()
            .map(|(n, d)| field.from_fraction(*n, *d).expect("characteristic zero"))
            .collect(),
        FieldSpec::Prime(_) => field.nonzero_elements().expect("prime field"),
    }
}

/// All bypasses of an arrow: parallel paths other than the arrow itself.
fn bypasses(alg: &Algebra, arrow: crate::quiver::ArrowId) -> Vec<Path> {
    let q = alg.quiver();
    let arr = q.arrow(arrow);
    alg.paths()
        .pair_paths(arr.source, arr.target)
        .iter()
        .map(|p| alg.paths().path(*p).clone())
        .filter(|p| p.arrows != [arrow])
        .collect()
}

/// Builds the quiver over a family: an arrow `i -> j` exists when the
/// relation of class `i` is strictly contained in that of class `j` and some
/// single transvection maps a member ideal of `i` to an ideal in class `j`.
/// The recorded witness is the first found in deterministic order (members,
/// then arrows, then bypasses, then `taus`). Candidates whose class
/// membership cannot be decided are skipped; undecidable containments are an
/// error.
pub fn build_gamma(
    alg: &Algebra,
    family: PresentationFamily,
    taus: &[Scalar],
    config: &HomotopyConfig,
) -> Result<GammaQuiver, GammaError> {
    let n = family.classes.len();
    let mut arrows: Vec<GammaArrow> = Vec::new();
    for i in 0..n {
        // Classes reachable from i by one transvection, with witnesses.
        let mut found: Vec<Option<TransvectionWitness>> = vec![None; n];
        for (member_name, member_ideal) in &family.classes[i].members {
            for a in alg.quiver().arrows() {
                for bypass in bypasses(alg, a) {
                    for tau in taus {
                        let phi = Morphism::transvection(alg, a, &bypass, tau)
                            .expect("valid bypass and nonzero tau");
                        let image = phi.apply_to_ideal(alg, member_ideal);
                        let rel = homotopy::relation_of_ideal(alg, &image, "image", config)?;
                        if let Some(j) = family.class_of(alg, &rel, config).unwrap_or(None) {
                            if j != i && found[j].is_none() {
                                found[j] = Some(TransvectionWitness {
                                    member: member_name.clone(),
                                    arrow: alg.quiver().arrow_name(a).to_string(),
                                    bypass: bypass
                                        .arrows
                                        .iter()
                                        .map(|b| alg.quiver().arrow_name(*b).to_string())
                                        .collect(),
                                    tau: tau.clone(),
                                });
                            }
                        }
                    }
                }
            }
        }
        for (j, witness) in found.into_iter().enumerate() {
            let Some(witness) = witness else { continue };
            let contained = homotopy::relation_leq(
                alg,
                &family.classes[i].relation,
                &family.classes[j].relation,
                config,
            );
            match contained {
                Decision::Yes => arrows.push(GammaArrow {
                    from: i,
                    to: j,
                    witness,
                }),
                Decision::No => {}
                Decision::Unknown(r) => return Err(GammaError::Undecided(r)),
            }
        }
    }
    Ok(GammaQuiver { family, arrows })
}

impl GammaQuiver {
    /// Classes with no incoming arrow.
    pub fn sources(&self) -> Vec<usize> {
        (0..self.family.classes.len())
            .filter(|i| self.arrows.iter().all(|a| a.to != *i))
            .collect()
    }

    /// Classes with no outgoing arrow.
    pub fn sinks(&self) -> Vec<usize> {
        (0..self.family.classes.len())
            .filter(|i| self.arrows.iter().all(|a| a.from != *i))
            .collect()
    }

    /// Is `to` reachable from `from` along arrows? Reflexively true.
    pub fn reachable(&self, from: usize, to: usize) -> bool {
        let mut seen = vec![false; self.family.classes.len()];
        let mut stack = vec![from];
        seen[from] = true;
        while let Some(v) = stack.pop() {
            if v == to {
                return true;
            }
            for a in &self.arrows {
                if a.from == v && !seen[a.to] {
                    seen[a.to] = true;
                    stack.push(a.to);
                }
            }
        }
        false
    }
}

/// One ideal discovered during orbit exploration.
#[derive(Debug, Clone)]
pub struct OrbitNode {
    pub ideal: Ideal,
    pub depth: usize,
    pub parent: Option<usize>,
    /// The transvection producing this node from its parent; `None` for the
    /// seed.
    pub witness: Option<TransvectionWitness>,
}

#[derive(Debug, Clone)]
pub struct OrbitResult {
    pub nodes: Vec<OrbitNode>,
    /// True when the node cap stopped the search before `depth` was
    /// exhausted.
    pub truncated: bool,
}

/// Breadth-first orbit of an ideal under single transvections, up to `depth`
/// applications, deduplicated by canonical ideal form, capped at `node_cap`
/// nodes.
pub fn orbit_search(
    alg: &Algebra,
    seed: &Ideal,
    taus: &[Scalar],
    depth: usize,
    node_cap: usize,
) -> OrbitResult {
    let mut nodes = vec![OrbitNode {
        ideal: seed.clone(),
        depth: 0,
        parent: None,
        witness: None,
    }];
    let mut keys = std::collections::BTreeSet::new();
    keys.insert(seed.canonical_key());
    let mut truncated = false;
    let mut next = 0;
    while next < nodes.len() {
        let idx = next;
        next += 1;
        if nodes[idx].depth == depth {
            continue;
        }
        for a in alg.quiver().arrows() {
            for bypass in bypasses(alg, a) {
                for tau in taus {
                    let phi = Morphism::transvection(alg, a, &bypass, tau)
                        .expect("valid bypass and nonzero tau");
                    let image = phi.apply_to_ideal(alg, &nodes[idx].ideal);
                    if !keys.insert(image.canonical_key()) {
                        continue;
                    }
                    if nodes.len() == node_cap {
                        truncated = true;
                        return OrbitResult { nodes, truncated };
                    }
                    let witness = TransvectionWitness {
                        member: format!("#{idx}"),
                        arrow: alg.quiver().arrow_name(a).to_string(),
                        bypass: bypass
                            .arrows
                            .iter()
                            .map(|b| alg.quiver().arrow_name(*b).to_string())
                            .collect(),
                        tau: tau.clone(),
                    };
                    nodes.push(OrbitNode {
                        ideal: image,
                        depth: nodes[idx].depth + 1,
                        parent: Some(idx),
                        witness: Some(witness),
                    });
                }
            }
        }
    }
    OrbitResult { nodes, truncated }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counterexample as ce;
    use crate::fpgroup::Classification;
    use crate::quiver::ArrowId;

    fn setup() -> (Algebra, HomotopyConfig) {
        (ce::algebra(Field::rationals()), HomotopyConfig::default())
    }

    fn paper_family(alg: &Algebra, cfg: &HomotopyConfig) -> PresentationFamily {
        PresentationFamily::build(alg, &ce::ideals(alg), cfg).unwrap()
    }

    #[test]
    fn the_five_ideals_fall_into_five_classes() {
        let (alg, cfg) = setup();
        let fam = paper_family(&alg, &cfg);
        assert_eq!(fam.classes.len(), 5);
        let classes: Vec<Classification> = fam
            .classes
            .iter()
            .map(|c| c.fingerprint.classification.clone())
            .collect();
        assert_eq!(classes[0], Classification::Free(2));
        assert_eq!(classes[1], Classification::InfiniteCyclic);
        assert_eq!(classes[2], Classification::InfiniteCyclic);
        assert_eq!(classes[3], Classification::Trivial);
        assert!(matches!(
            classes[4],
            Classification::Finite { order: 2, .. }
        ));
    }

    #[test]
    fn equivalent_presentations_merge_into_one_class() {
        let (alg, cfg) = setup();
        // The transvection a2 -> a2 + a1 applied to I yields an ideal whose
        // relation agrees with I1's even though the ideals differ.
        let a2 = alg.quiver().arrow_id("a2").unwrap();
        let bypass = alg.quiver().path_by_names(&["a1"]).unwrap();
        let phi = Morphism::transvection(&alg, a2, &bypass, &alg.field().one()).unwrap();
        let moved = phi.apply_to_ideal(&alg, &ce::ideal_i(&alg));
        assert!(!moved.equal(&ce::ideal_i1(&alg)));

        let mut ideals = ce::ideals(&alg);
        ideals.push(("J".to_string(), moved));
        let fam = PresentationFamily::build(&alg, &ideals, &cfg).unwrap();
        assert_eq!(fam.classes.len(), 5);
        let members: Vec<&str> = fam.classes[1]
            .members
            .iter()
            .map(|(n, _)| n.as_str())
            .collect();
        assert_eq!(members, vec!["I1", "J"]);
    }

    #[test]
    fn gamma_of_the_five_classes() {
        let (alg, cfg) = setup();
        let fam = paper_family(&alg, &cfg);
        let taus = default_tau_samples(alg.field());
        let gamma = build_gamma(&alg, fam, &taus, &cfg).unwrap();

        let name = |i: usize| gamma.family.class_name(i).to_string();
        let mut edges: Vec<(String, String)> = gamma
            .arrows
            .iter()
            .map(|a| (name(a.from), name(a.to)))
            .collect();
        edges.sort();
        assert_eq!(
            edges,
            vec![
                ("I".to_string(), "I1".to_string()),
                ("I".to_string(), "I2".to_string()),
                ("I1".to_string(), "I3".to_string()),
                ("I2".to_string(), "I3".to_string()),
                ("I4".to_string(), "I3".to_string()),
            ]
        );

        let sources: Vec<String> = gamma.sources().into_iter().map(name).collect();
        assert_eq!(sources, vec!["I".to_string(), "I4".to_string()]);
        assert_eq!(
            gamma.sinks().into_iter().map(name).collect::<Vec<_>>(),
            vec!["I3"]
        );

        // I4's class is not reachable from I's: the family has no unique
        // source.
        assert!(!gamma.reachable(0, 4));
        assert!(!gamma.reachable(4, 0));
        assert!(gamma.reachable(0, 3));
        assert!(gamma.reachable(0, 0));
    }

    #[test]
    fn gamma_witnesses_check_out() {
        let (alg, cfg) = setup();
        let fam = paper_family(&alg, &cfg);
        let taus = default_tau_samples(alg.field());
        let gamma = build_gamma(&alg, fam, &taus, &cfg).unwrap();
        for arrow in &gamma.arrows {
            let w = &arrow.witness;
            let src = gamma.family.classes[arrow.from]
                .members
                .iter()
                .find(|(n, _)| *n == w.member)
                .map(|(_, i)| i)
                .unwrap();
            let a: ArrowId = alg.quiver().arrow_id(&w.arrow).unwrap();
            let names: Vec<&str> = w.bypass.iter().map(|s| s.as_str()).collect();
            let bypass = alg.quiver().path_by_names(&names).unwrap();
            let phi = Morphism::transvection(&alg, a, &bypass, &w.tau).unwrap();
            let image = phi.apply_to_ideal(&alg, src);
            let rel = homotopy::relation_of_ideal(&alg, &image, "w", &cfg).unwrap();
            assert_eq!(
                gamma.family.class_of(&alg, &rel, &cfg).unwrap(),
                Some(arrow.to)
            );
        }
    }

    #[test]
    fn orbit_of_the_monomial_ideal() {
        let (alg, cfg) = setup();
        let taus = vec![alg.field().one(), alg.field().from_integer(-1)];

        let shallow = orbit_search(&alg, &ce::ideal_i(&alg), &taus, 1, 10_000);
        assert!(!shallow.truncated);
        let fam_ideals: Vec<(String, Ideal)> = shallow
            .nodes
            .iter()
            .enumerate()
            .map(|(k, n)| (format!("#{k}"), n.ideal.clone()))
            .collect();
        let fam = PresentationFamily::build(&alg, &fam_ideals, &cfg).unwrap();
        // Depth 1 reaches the I1 and I2 classes but not I3's.
        assert_eq!(fam.classes.len(), 3);

        let deep = orbit_search(&alg, &ce::ideal_i(&alg), &taus, 2, 10_000);
        assert!(!deep.truncated);
        let deep_ideals: Vec<(String, Ideal)> = deep
            .nodes
            .iter()
            .enumerate()
            .map(|(k, n)| (format!("#{k}"), n.ideal.clone()))
            .collect();
        let deep_fam = PresentationFamily::build(&alg, &deep_ideals, &cfg).unwrap();
        assert_eq!(deep_fam.classes.len(), 4);

        // No orbit ideal ever lands in I4's class.
        let r4 = homotopy::relation_of_ideal(&alg, &ce::ideal_i4(&alg), "I4", &cfg).unwrap();
        assert!(deep_fam.class_of(&alg, &r4, &cfg).unwrap().is_none());
    }

    #[test]
    fn orbit_respects_the_node_cap() {
        let (alg, _) = setup();
        let taus = default_tau_samples(alg.field());
        let capped = orbit_search(&alg, &ce::ideal_i(&alg), &taus, 3, 5);
        assert!(capped.truncated);
        assert_eq!(capped.nodes.len(), 5);
    }
}
