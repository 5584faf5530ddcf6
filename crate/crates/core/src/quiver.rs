//! Quivers, paths, walks, spanning trees, and the translation of walks into
//! free-group words.
//!
//! A quiver here is a finite directed multigraph that is acyclic (no oriented
//! cycles) and whose underlying undirected graph is connected; both conditions
//! are enforced at construction. Paths are stored in traversal order: the
//! first arrow traversed comes first.

use crate::fpgroup::Word;
use std::collections::HashMap;
use std::fmt;
use thiserror::Error;

/// Index of a vertex, in declaration order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub usize);

/// Index of an arrow, in canonical (name-sorted) order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ArrowId(pub usize);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arrow {
    pub name: String,
    pub source: VertexId,
    pub target: VertexId,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum QuiverError {
    #[error("duplicate vertex name `{0}`")]
    DuplicateVertex(String),
    #[error("duplicate arrow name `{0}`")]
    DuplicateArrow(String),
    #[error("arrow `{arrow}` refers to undeclared vertex `{vertex}`")]
    DanglingEndpoint { arrow: String, vertex: String },
    #[error("directed cycle found: {}", .0.join(" -> "))]
    DirectedCycle(Vec<String>),
    #[error("underlying graph is disconnected")]
    Disconnected,
    #[error("basepoint `{0}` is not a vertex")]
    UnknownBasepoint(String),
    #[error("arrows do not compose at step {0}")]
    NonComposable(usize),
    #[error("empty path needs explicit endpoints")]
    EmptyPath,
}

/// A finite acyclic connected quiver with named vertices and arrows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
    vertex_ids: HashMap<String, VertexId>,
    arrow_ids: HashMap<String, ArrowId>,
}

impl Quiver {
    /// Builds and validates a quiver from vertex names and
    /// `(name, source, target)` arrow triples. Arrows are re-sorted by name,
    /// which fixes the canonical order used everywhere downstream.
    pub fn new(vertices: &[&str], arrows: &[(&str, &str, &str)]) -> Result<Quiver, QuiverError> {
        let mut vertex_ids = HashMap::new();
        let mut vnames = Vec::new();
        for v in vertices {
            if vertex_ids
                .insert(v.to_string(), VertexId(vnames.len()))
                .is_some()
            {
                return Err(QuiverError::DuplicateVertex(v.to_string()));
            }
            vnames.push(v.to_string());
        }
        let mut named: Vec<(&str, &str, &str)> = arrows.to_vec();
        named.sort_by(|a, b| a.0.cmp(b.0));
        let mut arrow_ids = HashMap::new();
        let mut built = Vec::new();
        for (name, src, dst) in &named {
            let source = *vertex_ids
                .get(*src)
                .ok_or_else(|| QuiverError::DanglingEndpoint {
                    arrow: name.to_string(),
                    vertex: src.to_string(),
                })?;
            let target = *vertex_ids
                .get(*dst)
                .ok_or_else(|| QuiverError::DanglingEndpoint {
                    arrow: name.to_string(),
                    vertex: dst.to_string(),
                })?;
            if arrow_ids
                .insert(name.to_string(), ArrowId(built.len()))
                .is_some()
            {
                return Err(QuiverError::DuplicateArrow(name.to_string()));
            }
            built.push(Arrow {
                name: name.to_string(),
                source,
                target,
            });
        }
        let q = Quiver {
            vertices: vnames,
            arrows: built,
            vertex_ids,
            arrow_ids,
        };
        if let Some(cycle) = q.find_directed_cycle() {
            return Err(QuiverError::DirectedCycle(cycle));
        }
        if !q.is_connected() {
            return Err(QuiverError::Disconnected);
        }
        Ok(q)
    }

    fn find_directed_cycle(&self) -> Option<Vec<String>> {
        // DFS with colors; on a back edge, read the cycle off the stack.
        const WHITE: u8 = 0;
        const GRAY: u8 = 1;
        const BLACK: u8 = 2;
        let n = self.vertices.len();
        let mut color = vec![WHITE; n];
        let mut stack: Vec<(usize, usize)> = Vec::new(); // (vertex, next arrow idx)
        let mut arrow_taken: Vec<Option<ArrowId>> = vec![None; n];
        for start in 0..n {
            if color[start] != WHITE {
                continue;
            }
            color[start] = GRAY;
            stack.push((start, 0));
            while let Some(&mut (v, ref mut next)) = stack.last_mut() {
                let mut advanced = false;
                while *next < self.arrows.len() {
                    let a = ArrowId(*next);
                    *next += 1;
                    if self.arrows[a.0].source != VertexId(v) {
                        continue;
                    }
                    let w = self.arrows[a.0].target.0;
                    match color[w] {
                        WHITE => {
                            color[w] = GRAY;
                            arrow_taken[w] = Some(a);
                            stack.push((w, 0));
                            advanced = true;
                            break;
                        }
                        GRAY => {
                            // Cycle: w -> ... -> v -> w.
                            let mut names = vec![self.arrows[a.0].name.clone()];
                            let mut cur = v;
                            while cur != w {
                                let inc = arrow_taken[cur].expect("on gray path");
                                names.push(self.arrows[inc.0].name.clone());
                                cur = self.arrows[inc.0].source.0;
                            }
                            names.reverse();
                            return Some(names);
                        }
                        _ => {}
                    }
                }
                if !advanced {
                    color[v] = BLACK;
                    stack.pop();
                }
            }
        }
        None
    }

    fn is_connected(&self) -> bool {
        let n = self.vertices.len();
        if n == 0 {
            return false;
        }
        let mut seen = vec![false; n];
        let mut queue = vec![0usize];
        seen[0] = true;
        while let Some(v) = queue.pop() {
            for a in &self.arrows {
                for (x, y) in [(a.source.0, a.target.0), (a.target.0, a.source.0)] {
                    if x == v && !seen[y] {
                        seen[y] = true;
                        queue.push(y);
                    }
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        (0..self.vertices.len()).map(VertexId)
    }

    pub fn arrows(&self) -> impl Iterator<Item = ArrowId> {
        (0..self.arrows.len()).map(ArrowId)
    }

    pub fn vertex_name(&self, v: VertexId) -> &str {
        &self.vertices[v.0]
    }

    pub fn arrow(&self, a: ArrowId) -> &Arrow {
        &self.arrows[a.0]
    }

    pub fn arrow_name(&self, a: ArrowId) -> &str {
        &self.arrows[a.0].name
    }

    pub fn vertex_id(&self, name: &str) -> Option<VertexId> {
        self.vertex_ids.get(name).copied()
    }

    pub fn arrow_id(&self, name: &str) -> Option<ArrowId> {
        self.arrow_ids.get(name).copied()
    }

    /// The stationary path at `v`.
    pub fn stationary(&self, v: VertexId) -> Path {
        Path {
            source: v,
            target: v,
            arrows: Vec::new(),
        }
    }

    /// A path from consecutive arrows in traversal order.
    pub fn path(&self, arrows: &[ArrowId]) -> Result<Path, QuiverError> {
        let first = *arrows.first().ok_or(QuiverError::EmptyPath)?;
        let mut at = self.arrows[first.0].target;
        for (i, a) in arrows.iter().enumerate().skip(1) {
            if self.arrows[a.0].source != at {
                return Err(QuiverError::NonComposable(i));
            }
            at = self.arrows[a.0].target;
        }
        Ok(Path {
            source: self.arrows[first.0].source,
            target: at,
            arrows: arrows.to_vec(),
        })
    }

    pub fn path_by_names(&self, names: &[&str]) -> Result<Path, QuiverError> {
        let ids: Vec<ArrowId> = names
            .iter()
            .map(|n| {
                self.arrow_id(n)
                    .ok_or_else(|| QuiverError::DanglingEndpoint {
                        arrow: n.to_string(),
                        vertex: String::new(),
                    })
            })
            .collect::<Result<_, _>>()?;
        self.path(&ids)
    }

    pub fn render_path(&self, p: &Path) -> String {
        if p.arrows.is_empty() {
            format!("e_{}", self.vertex_name(p.source))
        } else {
            p.arrows
                .iter()
                .map(|a| self.arrow_name(*a))
                .collect::<Vec<_>>()
                .join("*")
        }
    }

    /// Deterministic spanning tree: breadth-first from the basepoint over the
    /// underlying graph, scanning arrows in canonical order. Non-tree arrows
    /// become the free-group letters, in canonical order.
    pub fn spanning_tree(&self, basepoint: VertexId) -> SpanningTree {
        let n = self.vertices.len();
        assert!(basepoint.0 < n, "basepoint out of range");
        let mut in_tree = vec![false; self.arrows.len()];
        let mut seen = vec![false; n];
        seen[basepoint.0] = true;
        let mut queue = std::collections::VecDeque::new();
        queue.push_back(basepoint.0);
        while let Some(v) = queue.pop_front() {
            for (i, a) in self.arrows.iter().enumerate() {
                let other = if a.source.0 == v {
                    a.target.0
                } else if a.target.0 == v {
                    a.source.0
                } else {
                    continue;
                };
                if !seen[other] {
                    seen[other] = true;
                    in_tree[i] = true;
                    queue.push_back(other);
                }
            }
        }
        let letters: Vec<ArrowId> = (0..self.arrows.len())
            .filter(|i| !in_tree[*i])
            .map(ArrowId)
            .collect();
        let mut letter_of = vec![None; self.arrows.len()];
        for (k, a) in letters.iter().enumerate() {
            letter_of[a.0] = Some(k);
        }
        SpanningTree {
            basepoint,
            in_tree,
            letters,
            letter_of,
        }
    }
}

/// A directed path: a composable arrow sequence in traversal order, possibly
/// empty (stationary).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Path {
    pub source: VertexId,
    pub target: VertexId,
    pub arrows: Vec<ArrowId>,
}

impl Path {
    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn is_stationary(&self) -> bool {
        self.arrows.is_empty()
    }

    /// The all-forward walk tracing this path.
    pub fn as_walk(&self) -> Walk {
        Walk {
            source: self.source,
            steps: self
                .arrows
                .iter()
                .map(|a| Step {
                    arrow: *a,
                    forward: true,
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Step {
    pub arrow: ArrowId,
    pub forward: bool,
}

/// A walk on the underlying graph: arrows traversed forward or backward.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Walk {
    pub source: VertexId,
    pub steps: Vec<Step>,
}

impl Walk {
    pub fn stationary(v: VertexId) -> Walk {
        Walk {
            source: v,
            steps: Vec::new(),
        }
    }

    /// Builds a walk from `(arrow, forward)` steps, checking that consecutive
    /// steps compose on the underlying graph.
    pub fn new(
        q: &Quiver,
        source: VertexId,
        steps: &[(ArrowId, bool)],
    ) -> Result<Walk, QuiverError> {
        let mut at = source;
        for (i, (a, fwd)) in steps.iter().enumerate() {
            let arr = q.arrow(*a);
            let (from, to) = if *fwd {
                (arr.source, arr.target)
            } else {
                (arr.target, arr.source)
            };
            if from != at {
                return Err(QuiverError::NonComposable(i));
            }
            at = to;
        }
        Ok(Walk {
            source,
            steps: steps
                .iter()
                .map(|(arrow, forward)| Step {
                    arrow: *arrow,
                    forward: *forward,
                })
                .collect(),
        })
    }

    pub fn target(&self, q: &Quiver) -> VertexId {
        match self.steps.last() {
            None => self.source,
            Some(s) => {
                let a = q.arrow(s.arrow);
                if s.forward {
                    a.target
                } else {
                    a.source
                }
            }
        }
    }

    /// Free reduction: cancels every step immediately followed by its own
    /// inverse. Idempotent; endpoints are preserved.
    pub fn reduce(&self) -> Walk {
        let mut stack: Vec<Step> = Vec::new();
        for s in &self.steps {
            match stack.last() {
                Some(t) if t.arrow == s.arrow && t.forward != s.forward => {
                    stack.pop();
                }
                _ => stack.push(*s),
            }
        }
        Walk {
            source: self.source,
            steps: stack,
        }
    }

    pub fn reversed(&self, q: &Quiver) -> Walk {
        Walk {
            source: self.target(q),
            steps: self
                .steps
                .iter()
                .rev()
                .map(|s| Step {
                    arrow: s.arrow,
                    forward: !s.forward,
                })
                .collect(),
        }
    }
}

/// A spanning tree of the underlying graph together with one free-group
/// letter per non-tree arrow.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpanningTree {
    pub basepoint: VertexId,
    in_tree: Vec<bool>,
    letters: Vec<ArrowId>,
    letter_of: Vec<Option<usize>>,
}

impl SpanningTree {
    pub fn contains(&self, a: ArrowId) -> bool {
        self.in_tree[a.0]
    }

    pub fn tree_arrows(&self) -> Vec<ArrowId> {
        (0..self.in_tree.len())
            .filter(|i| self.in_tree[*i])
            .map(ArrowId)
            .collect()
    }

    /// Non-tree arrows in canonical order; index = letter index.
    pub fn letters(&self) -> &[ArrowId] {
        &self.letters
    }

    pub fn letter_count(&self) -> usize {
        self.letters.len()
    }

    /// Translates a walk into a freely reduced word: tree arrows contribute
    /// nothing, a non-tree arrow contributes its letter (inverted when
    /// traversed backward).
    pub fn walk_word(&self, w: &Walk) -> Word {
        let lits = w
            .steps
            .iter()
            .filter_map(|s| self.letter_of[s.arrow.0].map(|g| (g, !s.forward)))
            .collect();
        Word::from_lits(lits)
    }
}

impl fmt::Display for Quiver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "vertices: {}", self.vertices.join(" "))?;
        for a in &self.arrows {
            writeln!(
                f,
                "arrow {} {} {}",
                a.name,
                self.vertex_name(a.source),
                self.vertex_name(a.target)
            )?;
        }
        Ok(())
    }
}

/// The quiver of the counter-example: vertices 1, 2, 3 with double arrows
/// a1, a2: 2 -> 1 and b1, b2: 3 -> 2.
pub fn double_double_quiver() -> Quiver {
    Quiver::new(
        &["1", "2", "3"],
        &[
            ("a1", "2", "1"),
            ("a2", "2", "1"),
            ("b1", "3", "2"),
            ("b2", "3", "2"),
        ],
    )
    .expect("valid quiver")
}
