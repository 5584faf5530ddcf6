//! Subcommand dispatch. Exit codes: 0 success, 1 verification failure,
//! 2 input error, 3 undecided result.

use crate::input::{self, InputDocument};
use crate::output;
use crate::paper;
use bqg_core::fpgroup::{self, Classification};
use bqg_core::gamma::{self, GammaError, PresentationFamily};
use bqg_core::homotopy::{self, HomotopyConfig, HomotopyError};
use bqg_core::ideal::Ideal;
use bqg_core::morphism::Morphism;
use bqg_core::scalar::Scalar;
use clap::{Parser, Subcommand};
use std::path::PathBuf;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_UNDECIDED: i32 = 3;

#[derive(Parser)]
#[command(
    name = "bqg",
    about = "Fundamental groups of bound quiver algebras: minimal relations, \
             transvections, and the quiver of homotopy relations"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Fundamental group of an admissible presentation.
    Pi1 {
        file: PathBuf,
        #[arg(long)]
        ideal: String,
        /// Basepoint vertex name (default: first vertex).
        #[arg(long)]
        basepoint: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Minimal relations of an ideal, grouped by support.
    Minrels {
        file: PathBuf,
        #[arg(long)]
        ideal: String,
    },
    /// Generating pairs of the homotopy relation.
    Pairs {
        file: PathBuf,
        #[arg(long)]
        ideal: String,
    },
    /// Apply a transvection `ARROW -> ARROW + TAU * BYPASS` to an ideal.
    Transvect {
        file: PathBuf,
        #[arg(long)]
        ideal: String,
        #[arg(long)]
        arrow: String,
        /// Bypass path, arrow names joined with `*` in traversal order.
        #[arg(long)]
        bypass: String,
        /// Coefficient, an integer or fraction `p/q`.
        #[arg(long, allow_hyphen_values = true)]
        tau: String,
    },
    /// Apply a named morphism to an ideal.
    Apply {
        file: PathBuf,
        #[arg(long)]
        ideal: String,
        #[arg(long)]
        morphism: String,
    },
    /// Compare two ideals for equality.
    IdealEq {
        file: PathBuf,
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
    },
    /// Build the quiver of homotopy relations over named ideals.
    Gamma {
        file: PathBuf,
        /// Comma-separated ideal names.
        #[arg(long, value_delimiter = ',')]
        ideals: Vec<String>,
        /// Also explore the transvection orbit of each listed ideal.
        #[arg(long)]
        search: bool,
        /// Orbit depth for --search.
        #[arg(long, default_value_t = 2)]
        depth: usize,
        /// Comma-separated transvection coefficients to try.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        taus: Vec<String>,
        /// Write DOT output to this path.
        #[arg(long)]
        dot: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Verify the embedded counter-example end to end.
    VerifyPaper,
}

pub fn run_from<I, S>(args: I) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_INPUT,
            };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli.cmd) {
        Ok(code) => code,
        Err(CmdError(code, message)) => {
            eprintln!("error: {message}");
            code
        }
    }
}

struct CmdError(i32, String);

fn input_err(message: impl Into<String>) -> CmdError {
    CmdError(EXIT_INPUT, message.into())
}

impl From<HomotopyError> for CmdError {
    fn from(e: HomotopyError) -> CmdError {
        let code = match e {
            HomotopyError::PathCountExceeded(..) | HomotopyError::EnumerationCapExceeded(..) => {
                EXIT_UNDECIDED
            }
            _ => EXIT_INPUT,
        };
        CmdError(code, e.to_string())
    }
}

impl From<GammaError> for CmdError {
    fn from(e: GammaError) -> CmdError {
        match e {
            GammaError::Undecided(r) => CmdError(EXIT_UNDECIDED, r),
            GammaError::Homotopy(h) => h.into(),
        }
    }
}

/// Homotopy/engine bounds, with the documented environment overrides.
pub fn config_from_env() -> Result<HomotopyConfig, String> {
    let mut c = HomotopyConfig::default();
    if let Ok(v) = std::env::var("BQ_SUBSET_BOUND") {
        c.subset_bound = v
            .parse()
            .map_err(|_| format!("BQ_SUBSET_BOUND: invalid value `{v}`"))?;
    }
    if let Ok(v) = std::env::var("BQ_MAX_COSETS") {
        c.engine.max_cosets = v
            .parse()
            .map_err(|_| format!("BQ_MAX_COSETS: invalid value `{v}`"))?;
    }
    Ok(c)
}

fn load(file: &PathBuf) -> Result<InputDocument, CmdError> {
    let text =
        std::fs::read_to_string(file).map_err(|e| input_err(format!("{}: {e}", file.display())))?;
    input::parse_document(&text).map_err(|e| input_err(format!("{}: {e}", file.display())))
}

fn named_ideal<'a>(doc: &'a InputDocument, name: &str) -> Result<&'a Ideal, CmdError> {
    doc.ideal(name)
        .ok_or_else(|| input_err(format!("unknown ideal `{name}`")))
}

fn print_ideal(doc: &InputDocument, ideal: &Ideal) {
    let alg = &doc.algebra;
    if ideal.total_dimension() == 0 {
        println!("0");
        return;
    }
    for (s, t) in ideal.nonzero_pairs() {
        for b in ideal.basis_elements(alg, s, t) {
            println!("rel {}", alg.render(&b));
        }
    }
}

fn dispatch(cmd: Cmd) -> Result<i32, CmdError> {
    let config = config_from_env().map_err(input_err)?;
    match cmd {
        Cmd::Pi1 {
            file,
            ideal,
            basepoint,
            json,
        } => {
            let doc = load(&file)?;
            let alg = &doc.algebra;
            let i = named_ideal(&doc, &ideal)?;
            let bp = match &basepoint {
                None => homotopy::canonical_basepoint(),
                Some(v) => alg
                    .quiver()
                    .vertex_id(v)
                    .ok_or_else(|| input_err(format!("unknown vertex `{v}`")))?,
            };
            let rel = homotopy::relation_of_ideal(alg, i, &ideal, &config)?;
            let pres = homotopy::pi1_presentation(alg, &rel, bp);
            let fp = fpgroup::classify_with(&pres, config.engine);
            if json {
                println!("{}", output::pi1_json(alg, &ideal, bp, &fp));
            } else {
                println!("ideal: {ideal}");
                println!("basepoint: {}", alg.quiver().vertex_name(bp));
                println!("generators: {}", fp.generators);
                println!("relators: {}", fp.relators);
                let inv: Vec<String> = fp
                    .abelian_invariants
                    .iter()
                    .map(|d| d.to_string())
                    .collect();
                println!("abelian invariants: ({})", inv.join(","));
                println!("classification: {}", fp.classification);
            }
            Ok(if matches!(fp.classification, Classification::Unknown(_)) {
                EXIT_UNDECIDED
            } else {
                EXIT_OK
            })
        }
        Cmd::Minrels { file, ideal } => {
            let doc = load(&file)?;
            let alg = &doc.algebra;
            let i = named_ideal(&doc, &ideal)?;
            for ms in homotopy::minimal_supports(alg, i, &config)? {
                let names: Vec<String> = ms
                    .support
                    .iter()
                    .map(|p| alg.quiver().render_path(alg.paths().path(*p)))
                    .collect();
                println!(
                    "pair {} -> {}: {{{}}}  witness: {}",
                    alg.quiver().vertex_name(ms.source),
                    alg.quiver().vertex_name(ms.target),
                    names.join(", "),
                    alg.render(&ms.witness)
                );
            }
            Ok(EXIT_OK)
        }
        Cmd::Pairs { file, ideal } => {
            let doc = load(&file)?;
            let alg = &doc.algebra;
            let i = named_ideal(&doc, &ideal)?;
            for (p, q) in homotopy::generating_pairs(alg, i, &config)? {
                println!(
                    "{} ~ {}",
                    alg.quiver().render_path(alg.paths().path(p)),
                    alg.quiver().render_path(alg.paths().path(q))
                );
            }
            Ok(EXIT_OK)
        }
        Cmd::Transvect {
            file,
            ideal,
            arrow,
            bypass,
            tau,
        } => {
            let doc = load(&file)?;
            let alg = &doc.algebra;
            let i = named_ideal(&doc, &ideal)?;
            let a = alg
                .quiver()
                .arrow_id(&arrow)
                .ok_or_else(|| input_err(format!("unknown arrow `{arrow}`")))?;
            let u = input::parse_path(alg, &bypass, 0).map_err(|e| input_err(e.message))?;
            let t = input::parse_scalar(alg.field(), &tau, 0).map_err(|e| input_err(e.message))?;
            let phi =
                Morphism::transvection(alg, a, &u, &t).map_err(|e| input_err(e.to_string()))?;
            print_ideal(&doc, &phi.apply_to_ideal(alg, i));
            Ok(EXIT_OK)
        }
        Cmd::Apply {
            file,
            ideal,
            morphism,
        } => {
            let doc = load(&file)?;
            let i = named_ideal(&doc, &ideal)?;
            let m = doc
                .morphism(&morphism)
                .ok_or_else(|| input_err(format!("unknown morphism `{morphism}`")))?;
            print_ideal(&doc, &m.apply_to_ideal(&doc.algebra, i));
            Ok(EXIT_OK)
        }
        Cmd::IdealEq { file, left, right } => {
            let doc = load(&file)?;
            let l = named_ideal(&doc, &left)?;
            let r = named_ideal(&doc, &right)?;
            if l.equal(r) {
                println!("true");
                Ok(EXIT_OK)
            } else {
                println!("false");
                Ok(EXIT_FAIL)
            }
        }
        Cmd::Gamma {
            file,
            ideals,
            search,
            depth,
            taus,
            dot,
            json,
        } => {
            let doc = load(&file)?;
            let alg = &doc.algebra;
            if ideals.is_empty() {
                return Err(input_err("--ideals requires at least one name"));
            }
            let taus: Vec<Scalar> = if taus.is_empty() {
                gamma::default_tau_samples(alg.field())
            } else {
                taus.iter()
                    .map(|t| input::parse_scalar(alg.field(), t, 0))
                    .collect::<Result<_, _>>()
                    .map_err(|e| input_err(e.message))?
            };
            let mut family_ideals: Vec<(String, Ideal)> = Vec::new();
            for name in &ideals {
                family_ideals.push((name.clone(), named_ideal(&doc, name)?.clone()));
            }
            if search {
                for name in &ideals {
                    let seed = named_ideal(&doc, name)?;
                    let orbit = gamma::orbit_search(alg, seed, &taus, depth, 10_000);
                    if orbit.truncated {
                        eprintln!("warning: orbit of `{name}` truncated at the node cap");
                    }
                    for (k, node) in orbit.nodes.iter().enumerate().skip(1) {
                        family_ideals.push((format!("{name}.{k}"), node.ideal.clone()));
                    }
                }
            }
            let family = PresentationFamily::build(alg, &family_ideals, &config)?;
            let g = gamma::build_gamma(alg, family, &taus, &config)?;
            if let Some(path) = dot {
                std::fs::write(&path, output::gamma_dot(&g))
                    .map_err(|e| input_err(format!("{}: {e}", path.display())))?;
            }
            if json {
                println!("{}", output::gamma_json(&g));
            } else {
                for c in &g.family.classes {
                    let members: Vec<String> = c.members.iter().map(|(n, _)| n.clone()).collect();
                    println!(
                        "class {}: {} [{}]",
                        c.members[0].0,
                        c.fingerprint.classification,
                        members.join(", ")
                    );
                }
                for a in &g.arrows {
                    println!(
                        "arrow {} -> {}  [{}]",
                        g.family.class_name(a.from),
                        g.family.class_name(a.to),
                        output::witness_text(&a.witness)
                    );
                }
                let names = |v: Vec<usize>| {
                    let mut n: Vec<String> = v
                        .into_iter()
                        .map(|i| g.family.class_name(i).to_string())
                        .collect();
                    n.sort();
                    n.join(" ")
                };
                println!("sources: {}", names(g.sources()));
                println!("sinks: {}", names(g.sinks()));
            }
            Ok(EXIT_OK)
        }
        Cmd::VerifyPaper => {
            let mut stdout = std::io::stdout();
            Ok(paper::verify(&config, &mut stdout))
        }
    }
}
