//! The path algebra: canonical path enumeration and field-coefficient linear
//! combinations of parallel paths.

use crate::quiver::{Path, Quiver, VertexId};
use crate::scalar::{Field, Scalar};
use std::collections::{BTreeMap, HashMap};
use thiserror::Error;

/// Index of a path in the canonical enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PathId(pub usize);

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("operands are not parallel")]
    NonParallel,
    #[error("operands do not compose")]
    NonComposable,
    #[error("path is not a path of this quiver")]
    UnknownPath,
}

/// All paths of an acyclic quiver, grouped by `(source, target)` pair. Within
/// a pair, paths are ordered by (length, lexicographic arrow names); this is
/// the canonical basis order used everywhere downstream.
#[derive(Debug, Clone)]
pub struct PathSpace {
    paths: Vec<Path>,
    by_pair: BTreeMap<(VertexId, VertexId), Vec<PathId>>,
    index: HashMap<Path, PathId>,
    pos_in_pair: Vec<usize>,
}

impl PathSpace {
    /// Enumerates every path (including stationary paths). Finite because
    /// the quiver is acyclic.
    pub fn enumerate(q: &Quiver) -> PathSpace {
        let mut per_pair: BTreeMap<(VertexId, VertexId), Vec<Path>> = BTreeMap::new();
        for v in q.vertices() {
            // DFS extending paths from v.
            let mut stack = vec![q.stationary(v)];
            while let Some(p) = stack.pop() {
                per_pair
                    .entry((p.source, p.target))
                    .or_default()
                    .push(p.clone());
                for a in q.arrows() {
                    if q.arrow(a).source == p.target {
                        let mut ext = p.arrows.clone();
                        ext.push(a);
                        stack.push(Path {
                            source: p.source,
                            target: q.arrow(a).target,
                            arrows: ext,
                        });
                    }
                }
            }
        }
        let mut paths = Vec::new();
        let mut by_pair = BTreeMap::new();
        let mut index = HashMap::new();
        let mut pos_in_pair = Vec::new();
        for (pair, mut ps) in per_pair {
            ps.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.arrows.cmp(&b.arrows)));
            let mut ids = Vec::new();
            for (pos, p) in ps.into_iter().enumerate() {
                let id = PathId(paths.len());
                index.insert(p.clone(), id);
                paths.push(p);
                pos_in_pair.push(pos);
                ids.push(id);
            }
            by_pair.insert(pair, ids);
        }
        PathSpace {
            paths,
            by_pair,
            index,
            pos_in_pair,
        }
    }

    pub fn path(&self, id: PathId) -> &Path {
        &self.paths[id.0]
    }

    pub fn id_of(&self, p: &Path) -> Option<PathId> {
        self.index.get(p).copied()
    }

    pub fn pair_paths(&self, source: VertexId, target: VertexId) -> &[PathId] {
        self.by_pair
            .get(&(source, target))
            .map(|v| v.as_slice())
            .unwrap_or(&[])
    }

    /// Position of a path within its pair's canonical basis.
    pub fn position(&self, id: PathId) -> usize {
        self.pos_in_pair[id.0]
    }

    pub fn pairs(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.by_pair.keys().copied()
    }

    pub fn total(&self) -> usize {
        self.paths.len()
    }
}

/// A homogeneous element of the path algebra: a linear combination of
/// parallel paths with nonzero coefficients.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct AlgebraElement {
    pub source: VertexId,
    pub target: VertexId,
    terms: BTreeMap<PathId, Scalar>,
}

impl AlgebraElement {
    pub fn zero(source: VertexId, target: VertexId) -> AlgebraElement {
        AlgebraElement {
            source,
            target,
            terms: BTreeMap::new(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (PathId, &Scalar)> {
        self.terms.iter().map(|(k, v)| (*k, v))
    }

    pub fn support(&self) -> impl Iterator<Item = PathId> + '_ {
        self.terms.keys().copied()
    }

    pub fn support_size(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, p: PathId) -> Option<&Scalar> {
        self.terms.get(&p)
    }
}

/// A quiver together with its path enumeration and a coefficient field: the
/// ambient context for all path-algebra computations.
#[derive(Debug, Clone)]
pub struct Algebra {
    quiver: Quiver,
    paths: PathSpace,
    field: Field,
}

impl Algebra {
    pub fn new(quiver: Quiver, field: Field) -> Algebra {
        let paths = PathSpace::enumerate(&quiver);
        Algebra {
            quiver,
            paths,
            field,
        }
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn paths(&self) -> &PathSpace {
        &self.paths
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn element_from_path(&self, p: &Path) -> Result<AlgebraElement, AlgebraError> {
        let id = self.paths.id_of(p).ok_or(AlgebraError::UnknownPath)?;
        let mut terms = BTreeMap::new();
        terms.insert(id, self.field.one());
        Ok(AlgebraElement {
            source: p.source,
            target: p.target,
            terms,
        })
    }

    pub fn element_from_terms(
        &self,
        source: VertexId,
        target: VertexId,
        terms: impl IntoIterator<Item = (PathId, Scalar)>,
    ) -> Result<AlgebraElement, AlgebraError> {
        let mut out = AlgebraElement::zero(source, target);
        for (id, c) in terms {
            let p = self.paths.path(id);
            if p.source != source || p.target != target {
                return Err(AlgebraError::NonParallel);
            }
            if self.field.is_zero(&c) {
                continue;
            }
            let entry = out.terms.entry(id).or_insert_with(|| self.field.zero());
            *entry = self.field.add(entry, &c);
            if self.field.is_zero(entry) {
                out.terms.remove(&id);
            }
        }
        Ok(out)
    }

    /// `x + c·y`; zero coefficients are dropped.
    pub fn combine(
        &self,
        x: &AlgebraElement,
        y: &AlgebraElement,
        c: &Scalar,
    ) -> Result<AlgebraElement, AlgebraError> {
        if x.source != y.source || x.target != y.target {
            return Err(AlgebraError::NonParallel);
        }
        let mut terms = x.terms.clone();
        for (id, yc) in &y.terms {
            let add = self.field.mul(c, yc);
            let entry = terms.entry(*id).or_insert_with(|| self.field.zero());
            *entry = self.field.add(entry, &add);
            if self.field.is_zero(entry) {
                terms.remove(id);
            }
        }
        Ok(AlgebraElement {
            source: x.source,
            target: x.target,
            terms,
        })
    }

    pub fn scale(&self, x: &AlgebraElement, c: &Scalar) -> AlgebraElement {
        if self.field.is_zero(c) {
            return AlgebraElement::zero(x.source, x.target);
        }
        AlgebraElement {
            source: x.source,
            target: x.target,
            terms: x
                .terms
                .iter()
                .map(|(id, xc)| (*id, self.field.mul(xc, c)))
                .collect(),
        }
    }

    /// Bilinear extension of path concatenation, in traversal order: the
    /// result traverses `x` first, then `y`.
    pub fn multiply(
        &self,
        x: &AlgebraElement,
        y: &AlgebraElement,
    ) -> Result<AlgebraElement, AlgebraError> {
        if x.target != y.source {
            return Err(AlgebraError::NonComposable);
        }
        let mut out = AlgebraElement::zero(x.source, y.target);
        for (xp, xc) in &x.terms {
            for (yp, yc) in &y.terms {
                let mut arrows = self.paths.path(*xp).arrows.clone();
                arrows.extend_from_slice(&self.paths.path(*yp).arrows);
                let cat = Path {
                    source: x.source,
                    target: y.target,
                    arrows,
                };
                let id = self.paths.id_of(&cat).expect("concatenation is a path");
                let c = self.field.mul(xc, yc);
                let entry = out.terms.entry(id).or_insert_with(|| self.field.zero());
                *entry = self.field.add(entry, &c);
                if self.field.is_zero(entry) {
                    out.terms.remove(&id);
                }
            }
        }
        Ok(out)
    }

    /// Dense coordinate vector of `x` over its pair's canonical basis.
    pub fn to_vector(&self, x: &AlgebraElement) -> Vec<Scalar> {
        let n = self.paths.pair_paths(x.source, x.target).len();
        let mut v = vec![self.field.zero(); n];
        for (id, c) in &x.terms {
            v[self.paths.position(*id)] = c.clone();
        }
        v
    }

    /// Element from a dense coordinate vector over a pair's canonical basis.
    pub fn from_vector(&self, source: VertexId, target: VertexId, v: &[Scalar]) -> AlgebraElement {
        let ids = self.paths.pair_paths(source, target);
        debug_assert_eq!(ids.len(), v.len());
        let mut terms = BTreeMap::new();
        for (id, c) in ids.iter().zip(v) {
            if !self.field.is_zero(c) {
                terms.insert(*id, c.clone());
            }
        }
        AlgebraElement {
            source,
            target,
            terms,
        }
    }

    /// Renders an element like `b1*a1 - 1/2 b1*a2`.
    pub fn render(&self, x: &AlgebraElement) -> String {
        if x.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (id, c)) in x.terms.iter().enumerate() {
            let path = self.quiver.render_path(self.paths.path(*id));
            let (sign, mag) = if c.is_negative() {
                ("-", self.field.neg(c))
            } else {
                ("+", c.clone())
            };
            if i == 0 {
                if sign == "-" {
                    out.push_str("- ");
                }
            } else {
                out.push_str(if sign == "-" { " - " } else { " + " });
            }
            if mag.is_one() {
                out.push_str(&path);
            } else {
                out.push_str(&format!("{} {}", mag, path));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::double_double_quiver;

    fn alg() -> Algebra {
        Algebra::new(double_double_quiver(), Field::rationals())
    }

    #[test]
    fn enumerates_paper_quiver_paths() {
        let a = alg();
        let q = a.quiver();
        let v = |n: &str| q.vertex_id(n).unwrap();
        let pair = a.paths().pair_paths(v("3"), v("1"));
        let names: Vec<String> = pair
            .iter()
            .map(|id| q.render_path(a.paths().path(*id)))
            .collect();
        assert_eq!(names, vec!["b1*a1", "b1*a2", "b2*a1", "b2*a2"]);
        assert!(a.paths().pair_paths(v("1"), v("3")).is_empty());
        let loop2 = a.paths().pair_paths(v("2"), v("2"));
        assert_eq!(loop2.len(), 1);
        assert!(a.paths().path(loop2[0]).is_stationary());
    }

    #[test]
    fn combine_and_cancel() {
        let a = alg();
        let p = a.quiver().path_by_names(&["b1", "a1"]).unwrap();
        let x = a.element_from_path(&p).unwrap();
        let minus_one = a.field().from_integer(-1);
        assert!(a.combine(&x, &x, &minus_one).unwrap().is_zero());

        let p2 = a.quiver().path_by_names(&["b1", "a2"]).unwrap();
        let y = a.element_from_path(&p2).unwrap();
        let rel = a.combine(&x, &y, &minus_one).unwrap();
        assert_eq!(a.render(&rel), "b1*a1 - b1*a2");

        let p3 = a.quiver().path_by_names(&["b2", "a2"]).unwrap();
        let z = a.element_from_path(&p3).unwrap();
        let one = a.field().one();
        assert_eq!(a.render(&a.combine(&x, &z, &one).unwrap()), "b1*a1 + b2*a2");
    }

    #[test]
    fn multiplication_distributes() {
        let a = alg();
        let q = a.quiver();
        let elem = |n: &str| {
            a.element_from_path(&q.path_by_names(&[n]).unwrap())
                .unwrap()
        };
        let minus_one = a.field().from_integer(-1);
        let one = a.field().one();

        let prod = a.multiply(&elem("b1"), &elem("a1")).unwrap();
        assert_eq!(a.render(&prod), "b1*a1");

        let b1_minus_b2 = a.combine(&elem("b1"), &elem("b2"), &minus_one).unwrap();
        let prod = a.multiply(&b1_minus_b2, &elem("a1")).unwrap();
        assert_eq!(a.render(&prod), "b1*a1 - b2*a1");

        let bsum = a.combine(&elem("b1"), &elem("b2"), &one).unwrap();
        let asum = a.combine(&elem("a1"), &elem("a2"), &one).unwrap();
        let prod = a.multiply(&bsum, &asum).unwrap();
        assert_eq!(prod.support_size(), 4);
        assert_eq!(a.render(&prod), "b1*a1 + b1*a2 + b2*a1 + b2*a2");
    }

    #[test]
    fn rejects_bad_operands() {
        let a = alg();
        let q = a.quiver();
        let b1 = a
            .element_from_path(&q.path_by_names(&["b1"]).unwrap())
            .unwrap();
        let a1 = a
            .element_from_path(&q.path_by_names(&["a1"]).unwrap())
            .unwrap();
        let one = a.field().one();
        assert_eq!(a.combine(&b1, &a1, &one), Err(AlgebraError::NonParallel));
        assert_eq!(a.multiply(&a1, &b1), Err(AlgebraError::NonComposable));
    }
}
