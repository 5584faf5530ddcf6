//! Bounded Todd–Coxeter coset enumeration over the trivial subgroup, with
//! HLT-style relator scanning.

use super::presentation::Presentation;
use super::word::Word;

pub const DEFAULT_MAX_COSETS: usize = 10_000;

/// Outcome of an enumeration: either the table closed, certifying the exact
/// group order, or the coset budget was exceeded (no conclusion).
#[derive(Debug, Clone)]
pub enum CosetResult {
    Closed { order: usize, table: CosetTable },
    Exceeded,
}

/// A closed, renumbered coset table. Column `2g` is the action of generator
/// `g`, column `2g + 1` of its inverse.
#[derive(Debug, Clone)]
pub struct CosetTable {
    pub ngens: usize,
    pub rows: Vec<Vec<usize>>,
}

impl CosetTable {
    pub fn order(&self) -> usize {
        self.rows.len()
    }

    /// Coset reached from coset 0 by the word; the word is trivial in the
    /// group iff this returns 0 (enumeration is over the trivial subgroup).
    pub fn trace(&self, w: &Word) -> usize {
        let mut c = 0usize;
        for &(g, inv) in w.lits() {
            c = self.rows[c][2 * g + usize::from(inv)];
        }
        c
    }

    /// Independent validity check: every column a permutation, inverse
    /// columns mutually inverse, every relator stabilizes every coset, and
    /// all cosets reachable from 0.
    pub fn verify(&self, p: &Presentation) -> bool {
        let n = self.rows.len();
        if p.generator_count() != self.ngens {
            return false;
        }
        for col in 0..2 * self.ngens {
            let mut seen = vec![false; n];
            for row in &self.rows {
                let t = row[col];
                if t >= n || seen[t] {
                    return false;
                }
                seen[t] = true;
            }
        }
        for c in 0..n {
            for g in 0..self.ngens {
                let t = self.rows[c][2 * g];
                if self.rows[t][2 * g + 1] != c {
                    return false;
                }
            }
        }
        for r in p.relators() {
            for c in 0..n {
                let mut at = c;
                for &(g, inv) in r.lits() {
                    at = self.rows[at][2 * g + usize::from(inv)];
                }
                if at != c {
                    return false;
                }
            }
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(c) = stack.pop() {
            for col in 0..2 * self.ngens {
                let t = self.rows[c][col];
                if !seen[t] {
                    seen[t] = true;
                    stack.push(t);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }
}

struct Enumerator {
    ngens: usize,
    table: Vec<Vec<Option<usize>>>,
    parent: Vec<usize>,
    live: usize,
}

impl Enumerator {
    fn new(ngens: usize) -> Enumerator {
        Enumerator {
            ngens,
            table: vec![vec![None; 2 * ngens]],
            parent: vec![0],
            live: 1,
        }
    }

    fn find(&mut self, mut c: usize) -> usize {
        while self.parent[c] != c {
            let g = self.parent[self.parent[c]];
            self.parent[c] = g;
            c = g;
        }
        c
    }

    fn get(&mut self, c: usize, col: usize) -> Option<usize> {
        self.table[c][col].map(|d| self.find(d))
    }

    fn define(&mut self, c: usize, col: usize) -> usize {
        let fresh = self.table.len();
        self.table.push(vec![None; 2 * self.ngens]);
        self.parent.push(fresh);
        self.live += 1;
        self.table[c][col] = Some(fresh);
        self.table[fresh][col ^ 1] = Some(c);
        fresh
    }

    fn coincidence(&mut self, a: usize, b: usize) {
        let mut queue = vec![(a, b)];
        while let Some((x, y)) = queue.pop() {
            let x = self.find(x);
            let y = self.find(y);
            if x == y {
                continue;
            }
            let (keep, drop) = if x < y { (x, y) } else { (y, x) };
            self.parent[drop] = keep;
            self.live -= 1;
            for col in 0..2 * self.ngens {
                if let Some(t) = self.table[drop][col].take() {
                    let t = self.find(t);
                    match self.table[keep][col] {
                        Some(u) => queue.push((t, u)),
                        None => {
                            self.table[keep][col] = Some(t);
                            match self.table[t][col ^ 1] {
                                Some(v) => {
                                    if self.find(v) != keep {
                                        queue.push((v, keep));
                                    }
                                }
                                None => self.table[t][col ^ 1] = Some(keep),
                            }
                        }
                    }
                }
            }
        }
    }

    /// HLT scan of one relator at one coset, defining cosets to fill gaps.
    fn scan_and_fill(&mut self, c: usize, rel: &[usize]) {
        let mut f = c;
        let mut i = 0usize;
        let mut b = c;
        let mut j = rel.len();
        loop {
            while i < j {
                match self.get(f, rel[i]) {
                    Some(n) => {
                        f = n;
                        i += 1;
                    }
                    None => break,
                }
            }
            if i == j {
                if f != b {
                    self.coincidence(f, b);
                }
                return;
            }
            while j > i {
                match self.get(b, rel[j - 1] ^ 1) {
                    Some(n) => {
                        b = n;
                        j -= 1;
                    }
                    None => break,
                }
            }
            if j == i {
                self.coincidence(f, b);
                return;
            }
            if j == i + 1 {
                // Deduction: f . rel[i] = b.
                self.table[f][rel[i]] = Some(b);
                self.table[b][rel[i] ^ 1] = Some(f);
                return;
            }
            f = self.define(f, rel[i]);
            i += 1;
        }
    }
}

/// Enumerates cosets of the trivial subgroup. Returns the exact group order
/// when the table closes within `max_cosets` live cosets.
#[allow(clippy::needless_range_loop)] // parallel indexing of the union-find and the dense table
pub fn todd_coxeter(p: &Presentation, max_cosets: usize) -> CosetResult {
    let ngens = p.generator_count();
    if ngens == 0 {
        return CosetResult::Closed {
            order: 1,
            table: CosetTable {
                ngens: 0,
                rows: vec![Vec::new()],
            },
        };
    }
    let rels: Vec<Vec<usize>> = p
        .relators()
        .iter()
        .map(|r| {
            r.lits()
                .iter()
                .map(|&(g, inv)| 2 * g + usize::from(inv))
                .collect()
        })
        .collect();
    let mut e = Enumerator::new(ngens);
    let mut c = 0usize;
    while c < e.table.len() {
        if e.find(c) != c {
            c += 1;
            continue;
        }
        for rel in &rels {
            if e.find(c) != c {
                break;
            }
            e.scan_and_fill(c, rel);
            if e.live > max_cosets {
                return CosetResult::Exceeded;
            }
        }
        if e.find(c) == c {
            for col in 0..2 * ngens {
                if e.get(c, col).is_none() {
                    e.define(c, col);
                }
            }
            if e.live > max_cosets {
                return CosetResult::Exceeded;
            }
        }
        c += 1;
    }
    // Renumber live cosets into a dense, closed table.
    let mut number = vec![usize::MAX; e.table.len()];
    let mut order = 0usize;
    for i in 0..e.table.len() {
        if e.find(i) == i {
            number[i] = order;
            order += 1;
        }
    }
    let mut rows = vec![vec![usize::MAX; 2 * ngens]; order];
    for i in 0..e.table.len() {
        if e.find(i) != i {
            continue;
        }
        for col in 0..2 * ngens {
            let t = e.get(i, col).expect("closed table entry");
            rows[number[i]][col] = number[t];
        }
    }
    CosetResult::Closed {
        order,
        table: CosetTable { ngens, rows },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pres(gens: &[&str], relators: Vec<Vec<(usize, bool)>>) -> Presentation {
        Presentation::new(
            gens.iter().map(|s| s.to_string()).collect(),
            relators.into_iter().map(Word::from_lits).collect(),
        )
    }

    #[test]
    fn cyclic_three() {
        let p = pres(&["a"], vec![vec![(0, false); 3]]);
        match todd_coxeter(&p, DEFAULT_MAX_COSETS) {
            CosetResult::Closed { order, table } => {
                assert_eq!(order, 3);
                assert!(table.verify(&p));
            }
            CosetResult::Exceeded => panic!("should close"),
        }
    }

    #[test]
    fn two_generator_order_two() {
        // <a,b | b*a, a*b^-1> has order 2.
        let p = pres(
            &["a", "b"],
            vec![vec![(1, false), (0, false)], vec![(0, false), (1, true)]],
        );
        match todd_coxeter(&p, DEFAULT_MAX_COSETS) {
            CosetResult::Closed { order, table } => {
                assert_eq!(order, 2);
                assert!(table.verify(&p));
                assert_ne!(table.trace(&Word::generator(0)), 0);
            }
            CosetResult::Exceeded => panic!("should close"),
        }
    }

    #[test]
    fn infinite_cyclic_exceeds() {
        let p = pres(&["a"], vec![]);
        assert!(matches!(todd_coxeter(&p, 1000), CosetResult::Exceeded));
    }

    #[test]
    fn trivial_presentation() {
        let p = pres(&[], vec![]);
        match todd_coxeter(&p, 10) {
            CosetResult::Closed { order, .. } => assert_eq!(order, 1),
            _ => panic!(),
        }
    }

    #[test]
    fn symmetric_group_s3() {
        // <a, b | a^2, b^2, (ab)^3>
        let p = pres(
            &["a", "b"],
            vec![
                vec![(0, false); 2],
                vec![(1, false); 2],
                vec![
                    (0, false),
                    (1, false),
                    (0, false),
                    (1, false),
                    (0, false),
                    (1, false),
                ],
            ],
        );
        match todd_coxeter(&p, DEFAULT_MAX_COSETS) {
            CosetResult::Closed { order, table } => {
                assert_eq!(order, 6);
                assert!(table.verify(&p));
            }
            CosetResult::Exceeded => panic!("should close"),
        }
    }
}
