//! Canonical forms for small graphs via equitable refinement plus
//! backtracking over individualizations, with twin and root-orbit pruning.
//! Exact: equal forms if and only if the graphs are isomorphic.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Canonical labeling is only attempted up to this order; searches that need
/// isomorphism dedup all live in the enumeration regime.
pub const CANON_MAX_N: usize = 12;

/// Permutation-invariant fingerprint: `n` plus the upper-triangle bit string
/// of the canonically relabeled adjacency matrix.
#[derive(Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct CanonicalForm {
    n: u8,
    key: u128,
}

impl CanonicalForm {
    pub fn order(&self) -> usize {
        self.n as usize
    }

    /// Packed upper-triangle bits (row-major, MSB first).
    pub fn bytes(&self) -> Vec<u8> {
        let n = self.n as usize;
        let nbits = n * (n - 1) / 2;
        let nbytes = nbits.div_ceil(8);
        let shifted = self.key << (nbytes * 8 - nbits);
        (0..nbytes)
            .map(|i| (shifted >> ((nbytes - 1 - i) * 8)) as u8)
            .collect()
    }
}

#[derive(Copy, Clone)]
struct OrderedPartition {
    order: [u8; CANON_MAX_N],
    /// Bit `i` set when position `i` is the last position of its cell.
    cell_end: u16,
    n: usize,
}

impl OrderedPartition {
    fn unit(n: usize) -> Self {
        let mut order = [0u8; CANON_MAX_N];
        for (i, o) in order.iter_mut().enumerate().take(n) {
            *o = i as u8;
        }
        OrderedPartition {
            order,
            cell_end: 1 << (n - 1),
            n,
        }
    }

    fn is_discrete(&self) -> bool {
        self.cell_end == (1u16 << self.n) - 1
    }

    /// Start position of the first cell with more than one element.
    fn first_non_singleton(&self) -> Option<usize> {
        let mut start = 0;
        while start < self.n {
            let end = self.cell_end_from(start);
            if end > start {
                return Some(start);
            }
            start = end + 1;
        }
        None
    }

    fn cell_end_from(&self, start: usize) -> usize {
        let mut p = start;
        while self.cell_end >> p & 1 == 0 {
            p += 1;
        }
        p
    }

    fn cell_mask(&self, start: usize, end: usize) -> u64 {
        let mut m = 0u64;
        for &v in &self.order[start..=end] {
            m |= 1u64 << v;
        }
        m
    }

    /// 1-WL refinement to the coarsest stable partition.
    fn refine(&mut self, g: &Graph) {
        loop {
            let mut changed = false;
            // snapshot splitter cells at pass start
            let mut splitters = Vec::with_capacity(self.n);
            let mut s = 0;
            while s < self.n {
                let e = self.cell_end_from(s);
                splitters.push(self.cell_mask(s, e));
                s = e + 1;
            }
            for spl in splitters {
                let mut start = 0;
                while start < self.n {
                    let end = self.cell_end_from(start);
                    if end > start {
                        changed |= self.split_cell(g, start, end, spl);
                    }
                    start = end + 1;
                }
            }
            if !changed {
                return;
            }
        }
    }

    fn split_cell(&mut self, g: &Graph, start: usize, end: usize, splitter: u64) -> bool {
        let mut counts = [0u8; CANON_MAX_N];
        let mut uniform = true;
        for p in start..=end {
            counts[p] = (g.neighbors(self.order[p] as usize).bits() & splitter).count_ones() as u8;
            if counts[p] != counts[start] {
                uniform = false;
            }
        }
        if uniform {
            return false;
        }
        // stable sort the slice by count descending
        let mut slice: Vec<(u8, u8)> = (start..=end).map(|p| (counts[p], self.order[p])).collect();
        slice.sort_by_key(|&(c, _)| std::cmp::Reverse(c));
        for (i, (c, v)) in slice.iter().enumerate() {
            self.order[start + i] = *v;
            if start + i < end && *c != slice[i + 1].0 {
                self.cell_end |= 1 << (start + i);
            }
        }
        true
    }

    /// Moves `v` (at position `pos` inside the cell starting at `start`)
    /// into its own cell at the front of that cell.
    fn individualize(&self, start: usize, pos: usize) -> Self {
        let mut p = *self;
        p.order[start..=pos].rotate_right(1);
        p.cell_end |= 1 << start;
        p
    }
}

struct Searcher<'a> {
    g: &'a Graph,
    n: usize,
    best_key: Option<u128>,
    best_perm: [u8; CANON_MAX_N],
    /// union-find over vertices, fed by discovered automorphisms
    orbit: [u8; CANON_MAX_N],
}

impl<'a> Searcher<'a> {
    fn find(&mut self, v: usize) -> usize {
        let mut r = v;
        while self.orbit[r] as usize != r {
            r = self.orbit[r] as usize;
        }
        let mut c = v;
        while self.orbit[c] as usize != c {
            let nxt = self.orbit[c] as usize;
            self.orbit[c] = r as u8;
            c = nxt;
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.orbit[ra] = rb as u8;
        }
    }

    fn key_of(&self, part: &OrderedPartition) -> u128 {
        let mut key = 0u128;
        for i in 0..self.n {
            let vi = part.order[i] as usize;
            for j in (i + 1)..self.n {
                key = (key << 1) | self.g.has_edge(vi, part.order[j] as usize) as u128;
            }
        }
        key
    }

    fn search(&mut self, part: OrderedPartition, depth: usize) {
        if part.is_discrete() {
            let key = self.key_of(&part);
            match self.best_key {
                None => {
                    self.best_key = Some(key);
                    self.best_perm = part.order;
                }
                Some(best) if key < best => {
                    self.best_key = Some(key);
                    self.best_perm = part.order;
                }
                Some(best) if key == best => {
                    // two labelings with identical strings compose to an
                    // automorphism: old at position i in each ordering
                    for i in 0..self.n {
                        self.union(self.best_perm[i] as usize, part.order[i] as usize);
                    }
                }
                _ => {}
            }
            return;
        }
        let start = part.first_non_singleton().unwrap();
        let end = part.cell_end_from(start);
        let mut tried: Vec<u8> = Vec::with_capacity(end - start + 1);
        for pos in start..=end {
            let v = part.order[pos];
            // twins yield identical subtrees
            let dup = tried.iter().any(|&u| {
                let mask = !(1u64 << u | 1u64 << v);
                self.g.neighbors(u as usize).bits() & mask
                    == self.g.neighbors(v as usize).bits() & mask
            });
            if dup {
                continue;
            }
            // automorphism orbits at the root only (global automorphisms)
            if depth == 0 {
                let rv = self.find(v as usize);
                if tried.iter().any(|&u| self.find(u as usize) == rv) {
                    continue;
                }
            }
            tried.push(v);
            let mut child = part.individualize(start, pos);
            child.refine(self.g);
            self.search(child, depth + 1);
        }
    }
}

/// Canonical form plus the canonically relabeled representative.
pub fn canonicalize(g: &Graph) -> Result<(CanonicalForm, Graph)> {
    let n = g.n();
    if n > CANON_MAX_N {
        return Err(Error::CapExceeded(n, CANON_MAX_N));
    }
    let mut part = OrderedPartition::unit(n);
    part.refine(g);
    let mut searcher = Searcher {
        g,
        n,
        best_key: None,
        best_perm: [0; CANON_MAX_N],
        orbit: std::array::from_fn(|i| i as u8),
    };
    searcher.search(part, 0);
    let key = searcher.best_key.unwrap_or(0);
    // best_perm[i] = old vertex placed at new position i
    let mut perm = vec![0usize; n];
    for i in 0..n {
        perm[searcher.best_perm[i] as usize] = i;
    }
    Ok((CanonicalForm { n: n as u8, key }, g.permuted(&perm)))
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    canonicalize(g).map(|(c, _)| c)
}

pub fn are_isomorphic(g: &Graph, h: &Graph) -> Result<bool> {
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return Ok(false);
    }
    Ok(canonical_form(g)? == canonical_form(h)?)
}
