//! Deterministic DOT and JSON renderings. JSON keys follow struct
//! declaration order; all numbers are integers, all field coefficients are
//! rendered as integer or fraction strings (never floats).

use bqg_core::fpgroup::GroupFingerprint;
use bqg_core::gamma::{GammaQuiver, TransvectionWitness};
use bqg_core::quiver::VertexId;
use bqg_core::Algebra;
use serde::Serialize;

#[derive(Serialize)]
pub struct Pi1Json {
    pub ideal: String,
    pub basepoint: String,
    pub generators: usize,
    pub relators: usize,
    pub abelian_invariants: Vec<String>,
    pub classification: String,
}

pub fn pi1_json(alg: &Algebra, ideal: &str, basepoint: VertexId, fp: &GroupFingerprint) -> String {
    let doc = Pi1Json {
        ideal: ideal.to_string(),
        basepoint: alg.quiver().vertex_name(basepoint).to_string(),
        generators: fp.generators,
        relators: fp.relators,
        abelian_invariants: fp
            .abelian_invariants
            .iter()
            .map(|d| d.to_string())
            .collect(),
        classification: fp.classification.to_string(),
    };
    serde_json::to_string_pretty(&doc).expect("serializable")
}

#[derive(Serialize)]
struct ClassJson {
    name: String,
    members: Vec<String>,
    classification: String,
    abelian_invariants: Vec<String>,
}

#[derive(Serialize)]
struct WitnessJson {
    member: String,
    arrow: String,
    bypass: String,
    tau: String,
}

#[derive(Serialize)]
struct ArrowJson {
    from: String,
    to: String,
    witness: WitnessJson,
}

#[derive(Serialize)]
struct GammaJson {
    classes: Vec<ClassJson>,
    arrows: Vec<ArrowJson>,
    sources: Vec<String>,
    sinks: Vec<String>,
}

fn witness_json(w: &TransvectionWitness) -> WitnessJson {
    WitnessJson {
        member: w.member.clone(),
        arrow: w.arrow.clone(),
        bypass: w.bypass.join("*"),
        tau: w.tau.to_string(),
    }
}

/// Witness rendered as the substitution it performs.
pub fn witness_text(w: &TransvectionWitness) -> String {
    format!(
        "{}: {} -> {} + {} {}",
        w.member,
        w.arrow,
        w.arrow,
        w.tau,
        w.bypass.join("*")
    )
}

pub fn gamma_json(g: &GammaQuiver) -> String {
    let name = |i: usize| g.family.class_name(i).to_string();
    let mut sources: Vec<String> = g.sources().into_iter().map(name).collect();
    sources.sort();
    let mut sinks: Vec<String> = g.sinks().into_iter().map(name).collect();
    sinks.sort();
    let doc = GammaJson {
        classes: g
            .family
            .classes
            .iter()
            .map(|c| ClassJson {
                name: c.members[0].0.clone(),
                members: c.members.iter().map(|(n, _)| n.clone()).collect(),
                classification: c.fingerprint.classification.to_string(),
                abelian_invariants: c
                    .fingerprint
                    .abelian_invariants
                    .iter()
                    .map(|d| d.to_string())
                    .collect(),
            })
            .collect(),
        arrows: g
            .arrows
            .iter()
            .map(|a| ArrowJson {
                from: name(a.from),
                to: name(a.to),
                witness: witness_json(&a.witness),
            })
            .collect(),
        sources,
        sinks,
    };
    serde_json::to_string_pretty(&doc).expect("serializable")
}

pub fn gamma_dot(g: &GammaQuiver) -> String {
    let name = |i: usize| g.family.class_name(i).to_string();
    let mut out = String::from("digraph gamma {\n  rankdir=LR;\n");
    for c in &g.family.classes {
        let members: Vec<String> = c.members.iter().map(|(n, _)| n.clone()).collect();
        out.push_str(&format!(
            "  \"{}\" [label=\"{}\\n{}\"];\n",
            c.members[0].0,
            members.join(", "),
            c.fingerprint.classification
        ));
    }
    for a in &g.arrows {
        out.push_str(&format!(
            "  \"{}\" -> \"{}\" [label=\"{}\"];\n",
            name(a.from),
            name(a.to),
            witness_text(&a.witness)
        ));
    }
    out.push_str("}\n");
    out
}
