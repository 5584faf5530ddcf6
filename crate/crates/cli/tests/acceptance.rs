//! The acceptance gate: every top-level requirement, one pass/fail line
//! each. All arithmetic is exact; the whole file runs in a few seconds.

use bqg_core::counterexample as ce;
use bqg_core::fpgroup::{self, todd_coxeter, Classification, CosetResult, IntMatrix, Word};
use bqg_core::gamma::{self, PresentationFamily};
use bqg_core::homotopy::{self, HomotopyConfig};
use bqg_core::ideal::Ideal;
use bqg_core::morphism::Morphism;
use bqg_core::quiver::Quiver;
use bqg_core::scalar::{Field, Scalar};
use bqg_core::{Algebra, AlgebraElement, PathId, VertexId};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeSet;

fn cfg() -> HomotopyConfig {
    HomotopyConfig::default()
}

fn expect(cond: bool, what: &str) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what.to_string())
    }
}

/// Criterion 1: fundamental groups of the counter-example, via the shipped
/// `verify-paper` command and cross-checked directly.
fn criterion_1() -> Result<(), String> {
    let out = std::process::Command::new(env!("CARGO_BIN_EXE_bqg"))
        .arg("verify-paper")
        .output()
        .map_err(|e| e.to_string())?;
    expect(out.status.code() == Some(0), "verify-paper exits 0")?;

    let alg = ce::algebra(Field::rationals());
    let b = BigInt::from;
    let expected: Vec<(Classification, Vec<BigInt>)> = vec![
        (Classification::Free(2), vec![b(0), b(0)]),
        (Classification::InfiniteCyclic, vec![b(0)]),
        (Classification::InfiniteCyclic, vec![b(0)]),
        (Classification::Trivial, vec![]),
        (
            Classification::Finite {
                order: 2,
                invariants: vec![b(2)],
            },
            vec![b(2)],
        ),
    ];
    for ((name, ideal), (class, inv)) in ce::ideals(&alg).iter().zip(expected) {
        let rel =
            homotopy::relation_of_ideal(&alg, ideal, name, &cfg()).map_err(|e| e.to_string())?;
        let pres = homotopy::pi1_presentation(&alg, &rel, homotopy::canonical_basepoint());
        let fp = fpgroup::classify(&pres);
        expect(
            fp.classification == class,
            &format!("pi1 of {name} is {class}"),
        )?;
        expect(
            fp.abelian_invariants == inv,
            &format!("abelian invariants of {name}"),
        )?;
    }
    Ok(())
}

fn transvect(alg: &Algebra, arrow: &str, bypass: &str, tau: i64) -> Morphism {
    let a = alg.quiver().arrow_id(arrow).unwrap();
    let u = alg.quiver().path_by_names(&[bypass]).unwrap();
    Morphism::transvection(alg, a, &u, &alg.field().from_integer(tau)).unwrap()
}

/// Criterion 2: the five ideal identities.
fn criterion_2() -> Result<(), String> {
    let alg = ce::algebra(Field::rationals());
    let i = ce::ideal_i(&alg);
    let cases: Vec<(&str, Ideal, Ideal)> = vec![
        (
            "t(a1,a2,-1)(I) = I1",
            transvect(&alg, "a1", "a2", -1).apply_to_ideal(&alg, &i),
            ce::ideal_i1(&alg),
        ),
        (
            "t(b1,b2,-1)(I) = I2",
            transvect(&alg, "b1", "b2", -1).apply_to_ideal(&alg, &i),
            ce::ideal_i2(&alg),
        ),
        (
            "t(a1,a2,-1)(I2) = I3",
            transvect(&alg, "a1", "a2", -1).apply_to_ideal(&alg, &ce::ideal_i2(&alg)),
            ce::ideal_i3(&alg),
        ),
        (
            "t(b1,b2,-1)(I1) = I3",
            transvect(&alg, "b1", "b2", -1).apply_to_ideal(&alg, &ce::ideal_i1(&alg)),
            ce::ideal_i3(&alg),
        ),
        (
            "phi(I) = I4",
            ce::automorphism_phi(&alg)
                .map_err(|e| e.to_string())?
                .apply_to_ideal(&alg, &i),
            ce::ideal_i4(&alg),
        ),
    ];
    for (label, image, target) in cases {
        expect(image.equal(&target), label)?;
    }
    Ok(())
}

/// Criterion 3: the quiver of homotopy relations matches the diagram.
fn criterion_3() -> Result<(), String> {
    gamma_matches(Field::rationals())
}

fn gamma_matches(field: Field) -> Result<(), String> {
    let alg = ce::algebra(field);
    let fam =
        PresentationFamily::build(&alg, &ce::ideals(&alg), &cfg()).map_err(|e| e.to_string())?;
    expect(fam.classes.len() == 5, "five relation classes")?;
    let taus = gamma::default_tau_samples(alg.field());
    let g = gamma::build_gamma(&alg, fam, &taus, &cfg()).map_err(|e| e.to_string())?;
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
    let want = [
        ("I", "I1"),
        ("I", "I2"),
        ("I1", "I3"),
        ("I2", "I3"),
        ("I4", "I3"),
    ];
    expect(
        edges
            == want
                .iter()
                .map(|(a, b)| (a.to_string(), b.to_string()))
                .collect::<Vec<_>>(),
        "exactly the five diagram arrows",
    )?;
    let sources: Vec<&str> = g
        .sources()
        .into_iter()
        .map(|i| g.family.class_name(i))
        .collect();
    expect(sources == ["I", "I4"], "exactly two sources, I and I4")?;
    expect(
        !g.reachable(0, 4),
        "no path from the I class to the I4 class",
    )?;
    let ri = homotopy::relation_of_ideal(&alg, &ce::ideal_i(&alg), "I", &cfg())
        .map_err(|e| e.to_string())?;
    let r4 = homotopy::relation_of_ideal(&alg, &ce::ideal_i4(&alg), "I4", &cfg())
        .map_err(|e| e.to_string())?;
    expect(
        homotopy::canonical_surjection(&alg, &ri, &r4, homotopy::canonical_basepoint(), &cfg())
            .is_ok(),
        "pi1(I) surjects canonically onto pi1(I4)",
    )
}

/// Criterion 4: characteristic guard and odd-characteristic reproduction.
fn criterion_4() -> Result<(), String> {
    let f2 = Field::prime(2).map_err(|e| e.to_string())?;
    expect(
        ce::automorphism_phi(&ce::algebra(f2)).is_err(),
        "phi is rejected over F2 (1/2 undefined)",
    )?;
    for p in [3u64, 5] {
        let field = Field::prime(p).map_err(|e| e.to_string())?;
        let alg = ce::algebra(field);
        let phi = ce::automorphism_phi(&alg).map_err(|e| format!("phi over F{p}: {e}"))?;
        expect(
            phi.apply_to_ideal(&alg, &ce::ideal_i(&alg))
                .equal(&ce::ideal_i4(&alg)),
            &format!("phi(I) = I4 over F{p}"),
        )?;
        gamma_matches(field).map_err(|e| format!("over F{p}: {e}"))?;
    }
    Ok(())
}

/// A random acyclic connected quiver: a spanning set of arrows into each new
/// vertex plus a few extras, all oriented from lower to higher index.
fn random_quiver(rng: &mut ChaCha8Rng) -> Quiver {
    let nv = rng.gen_range(2..6);
    let vertices: Vec<String> = (0..nv).map(|i| format!("v{i}")).collect();
    let mut arrows: Vec<(String, usize, usize)> = Vec::new();
    for i in 1..nv {
        let j = rng.gen_range(0..i);
        arrows.push((format!("e{}", arrows.len()), j, i));
    }
    for _ in 0..rng.gen_range(0..4) {
        let i = rng.gen_range(0..nv - 1);
        let j = rng.gen_range(i + 1..nv);
        arrows.push((format!("e{}", arrows.len()), i, j));
    }
    let vrefs: Vec<&str> = vertices.iter().map(|s| s.as_str()).collect();
    let arefs: Vec<(&str, &str, &str)> = arrows
        .iter()
        .map(|(n, s, t)| (n.as_str(), vrefs[*s], vrefs[*t]))
        .collect();
    Quiver::new(&vrefs, &arefs).expect("connected and acyclic by construction")
}

/// Criterion 5a: random monomial ideals have free fundamental groups of the
/// graph-theoretic rank.
fn criterion_5a() -> Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(101);
    for _ in 0..200 {
        let alg = Algebra::new(random_quiver(&mut rng), Field::rationals());
        let long_paths: Vec<PathId> = alg
            .paths()
            .pairs()
            .flat_map(|(s, t)| alg.paths().pair_paths(s, t).to_vec())
            .filter(|p| alg.paths().path(*p).len() >= 2)
            .collect();
        let gens: Vec<AlgebraElement> = long_paths
            .iter()
            .filter(|_| rng.gen_bool(0.4))
            .map(|p| alg.element_from_path(alg.paths().path(*p)).unwrap())
            .collect();
        let ideal = Ideal::closure(&alg, &gens);
        let pairs = homotopy::generating_pairs(&alg, &ideal, &cfg()).map_err(|e| e.to_string())?;
        expect(pairs.is_empty(), "monomial ideal has no generating pairs")?;
        let rel =
            homotopy::relation_of_ideal(&alg, &ideal, "m", &cfg()).map_err(|e| e.to_string())?;
        let pres = homotopy::pi1_presentation(&alg, &rel, VertexId(0));
        let rank = alg.quiver().arrow_count() + 1 - alg.quiver().vertex_count();
        let want = match rank {
            0 => Classification::Trivial,
            1 => Classification::InfiniteCyclic,
            n => Classification::Free(n),
        };
        let got = fpgroup::classify(&pres).classification;
        expect(got == want, &format!("free of rank {rank}, got {got}"))?;
    }
    Ok(())
}

fn random_pair_element(alg: &Algebra, rng: &mut ChaCha8Rng) -> AlgebraElement {
    let v3 = alg.quiver().vertex_id("3").unwrap();
    let v1 = alg.quiver().vertex_id("1").unwrap();
    let n = alg.paths().pair_paths(v3, v1).len();
    let vec: Vec<Scalar> = (0..n)
        .map(|_| alg.field().from_integer(rng.gen_range(-3..4)))
        .collect();
    alg.from_vector(v3, v1, &vec)
}

/// Criterion 5b: transvection round-trips restore elements and ideals.
fn criterion_5b() -> Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(202);
    let alg = ce::algebra(Field::rationals());
    for _ in 0..100 {
        let arrow = rng.gen_range(0..4usize);
        let twin = ["a2", "a1", "b2", "b1"][arrow];
        let a = bqg_core::ArrowId(arrow);
        let u = alg.quiver().path_by_names(&[twin]).unwrap();
        let tau = alg.field().from_integer(loop {
            let t = rng.gen_range(-5i64..6);
            if t != 0 {
                break t;
            }
        });
        let fwd = Morphism::transvection(&alg, a, &u, &tau).unwrap();
        let back = Morphism::transvection(&alg, a, &u, &alg.field().neg(&tau)).unwrap();
        let round = back.compose(&alg, &fwd);
        expect(
            round.arrow_images() == Morphism::identity(&alg).arrow_images(),
            "inverse transvection composes to the identity",
        )?;
        let gens: Vec<AlgebraElement> = (0..rng.gen_range(1..4))
            .map(|_| random_pair_element(&alg, &mut rng))
            .collect();
        let ideal = Ideal::closure(&alg, &gens);
        let restored = back.apply_to_ideal(&alg, &fwd.apply_to_ideal(&alg, &ideal));
        expect(restored.equal(&ideal), "ideal restored by the inverse")?;
    }
    Ok(())
}

/// Brute-force oracle for minimal supports: verify every reported witness by
/// direct membership, and check sampled members reduce to reported supports.
fn criterion_5c() -> Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(303);
    // Two fixed quivers whose only composite hom-pair has 4 resp. 6 paths.
    let wide = Quiver::new(
        &["1", "2", "3"],
        &[
            ("a1", "2", "1"),
            ("a2", "2", "1"),
            ("b1", "3", "2"),
            ("b2", "3", "2"),
            ("b3", "3", "2"),
        ],
    )
    .unwrap();
    let algebras = [
        ce::algebra(Field::rationals()),
        Algebra::new(wide, Field::rationals()),
    ];
    for case in 0..100 {
        let alg = &algebras[case % 2];
        let v3 = alg.quiver().vertex_id("3").unwrap();
        let v1 = alg.quiver().vertex_id("1").unwrap();
        let n = alg.paths().pair_paths(v3, v1).len();
        let gens: Vec<AlgebraElement> = (0..rng.gen_range(1..4))
            .map(|_| {
                let vec: Vec<Scalar> = (0..n)
                    .map(|_| alg.field().from_integer(rng.gen_range(-3..4)))
                    .collect();
                alg.from_vector(v3, v1, &vec)
            })
            .collect();
        let ideal = Ideal::closure(alg, &gens);
        let supports =
            homotopy::minimal_supports(alg, &ideal, &cfg()).map_err(|e| e.to_string())?;
        let support_sets: BTreeSet<BTreeSet<PathId>> =
            supports.iter().map(|m| m.support.clone()).collect();

        // Soundness of every witness, by direct membership only.
        for ms in &supports {
            expect(ideal.contains(alg, &ms.witness), "witness is a member")?;
            let sup: BTreeSet<PathId> = ms.witness.support().collect();
            expect(sup == ms.support, "witness has the reported support")?;
            let paths: Vec<PathId> = sup.iter().copied().collect();
            for mask in 1..(1u32 << paths.len()) - 1 {
                let terms: Vec<(PathId, Scalar)> = paths
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| mask & (1 << k) != 0)
                    .map(|(_, p)| (*p, ms.witness.coefficient(*p).unwrap().clone()))
                    .collect();
                let sub = alg.element_from_terms(v3, v1, terms).unwrap();
                expect(
                    !ideal.contains(alg, &sub),
                    "no proper restriction of a witness is a member",
                )?;
            }
        }

        // Sampled completeness: a random member, repeatedly replaced by any
        // proper restriction that is itself a member, lands on a reported
        // support.
        let basis = ideal.basis_elements(alg, v3, v1);
        if basis.is_empty() {
            continue;
        }
        for _ in 0..20 {
            let mut v = vec![alg.field().zero(); n];
            for b in &basis {
                let c = alg.field().from_integer(rng.gen_range(-4..5));
                let bv = alg.to_vector(b);
                for k in 0..n {
                    v[k] = alg.field().add(&v[k], &alg.field().mul(&c, &bv[k]));
                }
            }
            let mut member = alg.from_vector(v3, v1, &v);
            'reduce: while !member.is_zero() {
                let sup: Vec<PathId> = member.support().collect();
                for mask in 1..(1u32 << sup.len()) - 1 {
                    let terms: Vec<(PathId, Scalar)> = sup
                        .iter()
                        .enumerate()
                        .filter(|(k, _)| mask & (1 << k) != 0)
                        .map(|(_, p)| (*p, member.coefficient(*p).unwrap().clone()))
                        .collect();
                    let sub = alg.element_from_terms(v3, v1, terms).unwrap();
                    if ideal.contains(alg, &sub) {
                        member = sub;
                        continue 'reduce;
                    }
                }
                break;
            }
            if !member.is_zero() {
                let sup: BTreeSet<PathId> = member.support().collect();
                expect(
                    support_sets.contains(&sup),
                    "reduced member support is reported as minimal",
                )?;
            }
        }
    }
    Ok(())
}

/// Criterion 5d: Smith normal form re-verification on random matrices.
fn criterion_5d() -> Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(404);
    for _ in 0..100 {
        let rows = rng.gen_range(1..7);
        let cols = rng.gen_range(1..7);
        let m = IntMatrix::from_rows(
            (0..rows)
                .map(|_| {
                    (0..cols)
                        .map(|_| BigInt::from(rng.gen_range(-9i64..10)))
                        .collect()
                })
                .collect(),
        );
        let snf = fpgroup::smith_normal_form(&m);
        expect(snf.u.mul(&m).mul(&snf.v) == snf.d, "U*M*V = D")?;
        expect(snf.u.determinant().abs().is_one(), "U unimodular")?;
        expect(snf.v.determinant().abs().is_one(), "V unimodular")?;
        let diag = snf.diagonal();
        for w in diag.windows(2) {
            expect(
                w[0].is_zero() || w[1].is_zero() || (&w[1] % &w[0]).is_zero(),
                "divisibility chain",
            )?;
        }
        expect(
            diag.iter().all(|d| !d.is_negative()),
            "nonnegative diagonal",
        )?;
    }
    Ok(())
}

/// Criterion 5e: coset enumeration of cyclic groups.
fn criterion_5e() -> Result<(), String> {
    for n in 2..=12usize {
        let p = fpgroup::Presentation::new(
            vec!["a".to_string()],
            vec![Word::from_lits(vec![(0, false); n])],
        );
        match todd_coxeter(&p, 10_000) {
            CosetResult::Closed { order, .. } => {
                expect(order == n, &format!("cyclic group of order {n}"))?
            }
            CosetResult::Exceeded => return Err(format!("enumeration of C{n} exceeded")),
        }
    }
    Ok(())
}

/// Criterion 5f: fingerprints are basepoint-invariant.
fn criterion_5f() -> Result<(), String> {
    let alg = ce::algebra(Field::rationals());
    for (name, ideal) in ce::ideals(&alg) {
        let rel =
            homotopy::relation_of_ideal(&alg, &ideal, &name, &cfg()).map_err(|e| e.to_string())?;
        let fps: Vec<_> = alg
            .quiver()
            .vertices()
            .map(|bp| fpgroup::classify(&homotopy::pi1_presentation(&alg, &rel, bp)))
            .collect();
        expect(
            fps.windows(2).all(|w| w[0] == w[1]),
            &format!("fingerprint of {name} is basepoint-invariant"),
        )?;
    }
    Ok(())
}

type Criterion = fn() -> Result<(), String>;

#[test]
fn acceptance() {
    let criteria: Vec<(&str, Criterion)> = vec![
        ("1: fundamental groups of the counter-example", criterion_1),
        (
            "2: ideal identities under transvections and phi",
            criterion_2,
        ),
        (
            "3: quiver of homotopy relations matches the diagram",
            criterion_3,
        ),
        (
            "4: characteristic guard and odd characteristic",
            criterion_4,
        ),
        ("5a: random monomial ideals give free groups", criterion_5a),
        ("5b: transvection round-trips", criterion_5b),
        (
            "5c: minimal supports against a brute-force oracle",
            criterion_5c,
        ),
        ("5d: Smith normal form re-verification", criterion_5d),
        ("5e: coset enumeration of cyclic groups", criterion_5e),
        ("5f: basepoint invariance of fingerprints", criterion_5f),
    ];
    let mut failed = false;
    for (label, f) in criteria {
        match f() {
            Ok(()) => println!("PASS criterion {label}"),
            Err(e) => {
                failed = true;
                println!("FAIL criterion {label}: {e}");
            }
        }
    }
    assert!(!failed, "at least one acceptance criterion failed");
}
