//! Line-oriented input format: one `quiver` block, one `field` line, named
//! `ideal` and `morphism` blocks. `#` starts a comment. Paths are written in
//! traversal order with `*` between arrow names: `b1*a1` traverses `b1`,
//! then `a1`.

use bqg_core::algebra::{Algebra, AlgebraElement};
use bqg_core::ideal::Ideal;
use bqg_core::morphism::Morphism;
use bqg_core::quiver::{Path, Quiver};
use bqg_core::scalar::{Field, Scalar};
use std::fmt;

#[derive(Debug)]
pub struct InputError {
    pub line: usize,
    pub message: String,
}

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

impl std::error::Error for InputError {}

fn err<T>(line: usize, message: impl Into<String>) -> Result<T, InputError> {
    Err(InputError {
        line,
        message: message.into(),
    })
}

/// A fully elaborated input file.
pub struct InputDocument {
    pub algebra: Algebra,
    pub ideals: Vec<(String, Ideal)>,
    pub morphisms: Vec<(String, Morphism)>,
}

impl InputDocument {
    pub fn ideal(&self, name: &str) -> Option<&Ideal> {
        self.ideals.iter().find(|(n, _)| n == name).map(|(_, i)| i)
    }

    pub fn morphism(&self, name: &str) -> Option<&Morphism> {
        self.morphisms
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, m)| m)
    }
}

struct RawBlock {
    name: String,
    line: usize,
    items: Vec<(usize, String)>,
}

pub fn parse_document(text: &str) -> Result<InputDocument, InputError> {
    let mut vertices: Vec<String> = Vec::new();
    let mut arrows: Vec<(String, String, String)> = Vec::new();
    let mut quiver_seen = false;
    let mut field: Option<Field> = None;
    let mut ideal_blocks: Vec<RawBlock> = Vec::new();
    let mut morphism_blocks: Vec<RawBlock> = Vec::new();

    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim().to_string()))
        .filter(|(_, l)| !l.is_empty())
        .peekable();

    while let Some((ln, line)) = lines.next() {
        let mut words = line.split_whitespace();
        match words.next().unwrap() {
            "quiver" => {
                if quiver_seen {
                    return err(ln, "duplicate quiver block");
                }
                quiver_seen = true;
                loop {
                    let Some((iln, item)) = lines.next() else {
                        return err(ln, "unterminated quiver block");
                    };
                    let toks: Vec<&str> = item.split_whitespace().collect();
                    match toks.as_slice() {
                        ["end"] => break,
                        ["vertex", name] => vertices.push(name.to_string()),
                        ["arrow", name, src, dst] => {
                            arrows.push((name.to_string(), src.to_string(), dst.to_string()))
                        }
                        _ => return err(iln, format!("unrecognized quiver line `{item}`")),
                    }
                }
            }
            "field" => {
                if field.is_some() {
                    return err(ln, "duplicate field line");
                }
                let rest: Vec<&str> = words.collect();
                field = Some(match rest.as_slice() {
                    ["rational"] => Field::rationals(),
                    ["prime", p] => {
                        let p: u64 = p.parse().map_err(|_| InputError {
                            line: ln,
                            message: format!("invalid prime `{p}`"),
                        })?;
                        Field::prime(p).map_err(|e| InputError {
                            line: ln,
                            message: e.to_string(),
                        })?
                    }
                    _ => return err(ln, "expected `field rational` or `field prime P`"),
                });
            }
            kind @ ("ideal" | "morphism") => {
                let Some(name) = words.next() else {
                    return err(ln, format!("{kind} block needs a name"));
                };
                if words.next().is_some() {
                    return err(ln, format!("trailing tokens after {kind} name"));
                }
                let mut items = Vec::new();
                loop {
                    let Some((iln, item)) = lines.next() else {
                        return err(ln, format!("unterminated {kind} block `{name}`"));
                    };
                    if item == "end" {
                        break;
                    }
                    items.push((iln, item));
                }
                let block = RawBlock {
                    name: name.to_string(),
                    line: ln,
                    items,
                };
                if kind == "ideal" {
                    ideal_blocks.push(block);
                } else {
                    morphism_blocks.push(block);
                }
            }
            other => return err(ln, format!("unrecognized directive `{other}`")),
        }
    }

    if !quiver_seen {
        return err(0, "missing quiver block");
    }
    let Some(field) = field else {
        return err(0, "missing field line");
    };
    let vertex_refs: Vec<&str> = vertices.iter().map(|s| s.as_str()).collect();
    let arrow_refs: Vec<(&str, &str, &str)> = arrows
        .iter()
        .map(|(n, s, t)| (n.as_str(), s.as_str(), t.as_str()))
        .collect();
    let quiver = Quiver::new(&vertex_refs, &arrow_refs).map_err(|e| InputError {
        line: 0,
        message: format!("invalid quiver: {e}"),
    })?;
    let algebra = Algebra::new(quiver, field);

    for blocks in [&ideal_blocks, &morphism_blocks] {
        for (i, b) in blocks.iter().enumerate() {
            if blocks[..i].iter().any(|o| o.name == b.name) {
                return err(b.line, format!("duplicate name `{}`", b.name));
            }
        }
    }

    let mut ideals = Vec::new();
    for block in &ideal_blocks {
        let mut gens = Vec::new();
        for (iln, item) in &block.items {
            let Some(rest) = item.strip_prefix("rel ") else {
                return err(*iln, format!("expected `rel LINCOMB`, got `{item}`"));
            };
            gens.push(parse_lincomb(&algebra, rest, *iln)?);
        }
        ideals.push((block.name.clone(), Ideal::closure(&algebra, &gens)));
    }

    let mut morphisms = Vec::new();
    for block in &morphism_blocks {
        // Unmentioned arrows map to themselves.
        let mut images: Vec<AlgebraElement> = Morphism::identity(&algebra).arrow_images().to_vec();
        for (iln, item) in &block.items {
            let Some((lhs, rhs)) = item.split_once("->") else {
                return err(*iln, format!("expected `ARROW -> LINCOMB`, got `{item}`"));
            };
            let arrow_name = lhs.trim();
            let Some(a) = algebra.quiver().arrow_id(arrow_name) else {
                return err(*iln, format!("unknown arrow `{arrow_name}`"));
            };
            images[a.0] = parse_lincomb(&algebra, rhs.trim(), *iln)?;
        }
        let m = Morphism::new(&algebra, images).map_err(|e| InputError {
            line: block.line,
            message: format!("morphism `{}`: {e}", block.name),
        })?;
        morphisms.push((block.name.clone(), m));
    }

    Ok(InputDocument {
        algebra,
        ideals,
        morphisms,
    })
}

/// Parses a `*`-joined path in traversal order.
pub fn parse_path(alg: &Algebra, text: &str, line: usize) -> Result<Path, InputError> {
    let mut ids = Vec::new();
    for name in text.split('*') {
        let name = name.trim();
        match alg.quiver().arrow_id(name) {
            Some(a) => ids.push(a),
            None => return err(line, format!("unknown arrow `{name}`")),
        }
    }
    alg.quiver().path(&ids).map_err(|e| InputError {
        line,
        message: format!("non-composable path `{text}`: {e}"),
    })
}

/// Parses a coefficient token: an integer or a fraction `p/q`.
pub fn parse_scalar(field: &Field, tok: &str, line: usize) -> Result<Scalar, InputError> {
    let parsed = match tok.split_once('/') {
        Some((num, den)) => match (num.parse::<i64>(), den.parse::<i64>()) {
            (Ok(n), Ok(d)) => field.from_fraction(n, d).map_err(|e| e.to_string()),
            _ => Err(format!("invalid fraction `{tok}`")),
        },
        None => match tok.parse::<i64>() {
            Ok(n) => Ok(field.from_integer(n)),
            Err(_) => Err(format!("invalid coefficient `{tok}`")),
        },
    };
    parsed.map_err(|message| InputError { line, message })
}

fn is_coefficient_token(tok: &str) -> bool {
    tok.chars()
        .next()
        .map(|c| c.is_ascii_digit() || c == '-' || c == '+')
        .unwrap_or(false)
}

/// Parses a linear combination of paths: signed terms `[COEFF] PATH`, with
/// `+`/`-` either free-standing or glued to the coefficient.
pub fn parse_lincomb(alg: &Algebra, text: &str, line: usize) -> Result<AlgebraElement, InputError> {
    let toks: Vec<&str> = text.split_whitespace().collect();
    if toks.is_empty() {
        return err(line, "empty linear combination");
    }
    let field = alg.field();
    let mut acc: Option<AlgebraElement> = None;
    let mut i = 0;
    while i < toks.len() {
        let mut negate = false;
        match toks[i] {
            "+" => i += 1,
            "-" => {
                negate = true;
                i += 1;
            }
            _ => {}
        }
        let mut coeff = field.one();
        if i < toks.len() && is_coefficient_token(toks[i]) {
            coeff = parse_scalar(field, toks[i], line)?;
            i += 1;
        }
        if negate {
            coeff = field.neg(&coeff);
        }
        if field.is_zero(&coeff) {
            return err(line, "zero coefficient");
        }
        if i == toks.len() {
            return err(line, "dangling coefficient without a path");
        }
        let path = parse_path(alg, toks[i], line)?;
        i += 1;
        let term = alg.element_from_path(&path).map_err(|e| InputError {
            line,
            message: e.to_string(),
        })?;
        acc = Some(match acc {
            None => alg.scale(&term, &coeff),
            Some(sum) => alg.combine(&sum, &term, &coeff).map_err(|e| InputError {
                line,
                message: format!("terms are not parallel: {e}"),
            })?,
        });
    }
    Ok(acc.expect("at least one term"))
}

/// Prints a document in canonical form; `parse_document` round-trips it.
pub fn print_document(doc: &InputDocument) -> String {
    let alg = &doc.algebra;
    let q = alg.quiver();
    let mut out = String::from("quiver\n");
    for v in q.vertices() {
        out.push_str(&format!("  vertex {}\n", q.vertex_name(v)));
    }
    for a in q.arrows() {
        let arr = q.arrow(a);
        out.push_str(&format!(
            "  arrow {} {} {}\n",
            arr.name,
            q.vertex_name(arr.source),
            q.vertex_name(arr.target)
        ));
    }
    out.push_str("end\n");
    out.push_str(&match alg.field().spec() {
        bqg_core::scalar::FieldSpec::Rationals => "field rational\n".to_string(),
        bqg_core::scalar::FieldSpec::Prime(p) => format!("field prime {p}\n"),
    });
    for (name, ideal) in &doc.ideals {
        out.push_str(&format!("ideal {name}\n"));
        for g in ideal.generators() {
            out.push_str(&format!("  rel {}\n", alg.render(g)));
        }
        out.push_str("end\n");
    }
    for (name, m) in &doc.morphisms {
        out.push_str(&format!("morphism {name}\n"));
        for a in q.arrows() {
            out.push_str(&format!(
                "  {} -> {}\n",
                q.arrow_name(a),
                alg.render(m.image_of_arrow(a))
            ));
        }
        out.push_str("end\n");
    }
    out
}
