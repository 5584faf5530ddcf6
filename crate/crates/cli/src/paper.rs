//! Built-in end-to-end verification of the embedded counter-example,
//! exercising only public library operations. Prints one line per claim.

use bqg_core::counterexample as ce;
use bqg_core::fpgroup::{self, Classification, Decision};
use bqg_core::gamma::{self, PresentationFamily};
use bqg_core::homotopy::{self, HomotopyConfig};
use bqg_core::morphism::Morphism;
use bqg_core::scalar::Field;
use bqg_core::Algebra;
use num_bigint::BigInt;
use std::io::Write;

use crate::commands::{EXIT_FAIL, EXIT_OK};

struct Report<'a, W: Write> {
    out: &'a mut W,
    ok: bool,
}

impl<'a, W: Write> Report<'a, W> {
    fn check(&mut self, label: &str, cond: bool) {
        let tag = if cond { "ok  " } else { "FAIL" };
        self.ok &= cond;
        let _ = writeln!(self.out, "{tag} {label}");
    }
}

pub fn verify<W: Write>(config: &HomotopyConfig, out: &mut W) -> i32 {
    let mut report = Report { out, ok: true };

    verify_over(&mut report, "Q", Field::rationals(), config);

    // The explicit automorphism needs 1/2, so characteristic 2 must refuse.
    let f2 = Field::prime(2).expect("2 is prime");
    report.check(
        "F2: constructing the explicit automorphism fails (1/2 undefined)",
        ce::automorphism_phi(&ce::algebra(f2)).is_err(),
    );

    for p in [3u64, 5] {
        let field = Field::prime(p).expect("prime");
        verify_over(&mut report, &format!("F{p}"), field, config);
    }

    let _ = writeln!(
        report.out,
        "{}",
        if report.ok {
            "all claims verified"
        } else {
            "verification FAILED"
        }
    );
    if report.ok {
        EXIT_OK
    } else {
        EXIT_FAIL
    }
}

fn expected_groups() -> Vec<(&'static str, Classification, Vec<BigInt>)> {
    let b = BigInt::from;
    vec![
        ("I", Classification::Free(2), vec![b(0), b(0)]),
        ("I1", Classification::InfiniteCyclic, vec![b(0)]),
        ("I2", Classification::InfiniteCyclic, vec![b(0)]),
        ("I3", Classification::Trivial, vec![]),
        (
            "I4",
            Classification::Finite {
                order: 2,
                invariants: vec![b(2)],
            },
            vec![b(2)],
        ),
    ]
}

fn transvect(alg: &Algebra, arrow: &str, bypass: &str, tau: i64) -> Morphism {
    let a = alg.quiver().arrow_id(arrow).expect("arrow");
    let u = alg.quiver().path_by_names(&[bypass]).expect("bypass");
    Morphism::transvection(alg, a, &u, &alg.field().from_integer(tau)).expect("transvection")
}

fn verify_over<W: Write>(
    report: &mut Report<'_, W>,
    tag: &str,
    field: Field,
    config: &HomotopyConfig,
) {
    let alg = ce::algebra(field);
    let ideals = ce::ideals(&alg);

    // Claim 1: fundamental groups and abelian invariants.
    for ((name, ideal), (_, class, invariants)) in ideals.iter().zip(expected_groups()) {
        match homotopy::relation_of_ideal(&alg, ideal, name, config) {
            Err(e) => report.check(
                &format!("{tag}: relation of {name} computable ({e})"),
                false,
            ),
            Ok(rel) => {
                let pres = homotopy::pi1_presentation(&alg, &rel, homotopy::canonical_basepoint());
                let fp = fpgroup::classify_with(&pres, config.engine);
                report.check(
                    &format!("{tag}: pi1 of {name} is {class}"),
                    fp.classification == class,
                );
                report.check(
                    &format!("{tag}: abelian invariants of {name}"),
                    fp.abelian_invariants == invariants,
                );
            }
        }
    }

    // Claim 2: the five ideal identities.
    let i = &ideals[0].1;
    let identities = [
        (
            "t(a1,a2,-1)(I) = I1",
            transvect(&alg, "a1", "a2", -1).apply_to_ideal(&alg, i),
            1,
        ),
        (
            "t(b1,b2,-1)(I) = I2",
            transvect(&alg, "b1", "b2", -1).apply_to_ideal(&alg, i),
            2,
        ),
        (
            "t(a1,a2,-1)(I2) = I3",
            transvect(&alg, "a1", "a2", -1).apply_to_ideal(&alg, &ideals[2].1),
            3,
        ),
        (
            "t(b1,b2,-1)(I1) = I3",
            transvect(&alg, "b1", "b2", -1).apply_to_ideal(&alg, &ideals[1].1),
            3,
        ),
    ];
    for (label, image, target) in identities {
        report.check(&format!("{tag}: {label}"), image.equal(&ideals[target].1));
    }
    match ce::automorphism_phi(&alg) {
        Err(e) => report.check(&format!("{tag}: phi constructible ({e})"), false),
        Ok(phi) => report.check(
            &format!("{tag}: phi(I) = I4"),
            phi.apply_to_ideal(&alg, i).equal(&ideals[4].1),
        ),
    }

    // Claim 3: the quiver of homotopy relations.
    let family = match PresentationFamily::build(&alg, &ideals, config) {
        Ok(f) => f,
        Err(e) => {
            report.check(&format!("{tag}: family builds ({e})"), false);
            return;
        }
    };
    report.check(
        &format!("{tag}: the five ideals give five distinct relation classes"),
        family.classes.len() == 5,
    );
    let taus = gamma::default_tau_samples(alg.field());
    let g = match gamma::build_gamma(&alg, family, &taus, config) {
        Ok(g) => g,
        Err(e) => {
            report.check(&format!("{tag}: gamma builds ({e})"), false);
            return;
        }
    };
    let mut edges: Vec<(String, String)> = g
        .arrows
        .iter()
        .map(|a| {
            (
                g.family.class_name(a.from).to_string(),
                g.family.class_name(a.to).to_string(),
            )
        })
        .collect();
    edges.sort();
    let expected_edges: Vec<(String, String)> = [
        ("I", "I1"),
        ("I", "I2"),
        ("I1", "I3"),
        ("I2", "I3"),
        ("I4", "I3"),
    ]
    .iter()
    .map(|(a, b)| (a.to_string(), b.to_string()))
    .collect();
    report.check(
        &format!("{tag}: gamma has exactly the five expected arrows"),
        edges == expected_edges,
    );
    let sources: Vec<&str> = g
        .sources()
        .into_iter()
        .map(|i| g.family.class_name(i))
        .collect();
    report.check(
        &format!("{tag}: gamma has exactly two sources, I and I4"),
        sources == ["I", "I4"],
    );
    report.check(
        &format!("{tag}: the I4 class is not reachable from the I class"),
        !g.reachable(0, 4),
    );

    let r_i = homotopy::relation_of_ideal(&alg, &ideals[0].1, "I", config);
    let r_i4 = homotopy::relation_of_ideal(&alg, &ideals[4].1, "I4", config);
    let surjects = match (r_i, r_i4) {
        (Ok(ri), Ok(r4)) => {
            homotopy::relation_leq(&alg, &ri, &r4, config) == Decision::Yes
                && homotopy::canonical_surjection(
                    &alg,
                    &ri,
                    &r4,
                    homotopy::canonical_basepoint(),
                    config,
                )
                .is_ok()
        }
        _ => false,
    };
    report.check(
        &format!("{tag}: pi1 of I surjects canonically onto pi1 of I4"),
        surjects,
    );
}
