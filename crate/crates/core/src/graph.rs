//! Simple undirected graphs on up to 64 vertices, one bitset row per vertex.

use crate::error::{Error, Result};

/// Hard limit on the number of vertices: one adjacency row per machine word.
pub const MAX_N: usize = 64;

/// A set of vertices as a 64-bit mask restricted to positions below the
/// graph order.
#[derive(Copy, Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct VertexSet {
    bits: u64,
}

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet { bits: 0 };

    #[inline]
    pub fn from_bits(bits: u64) -> Self {
        VertexSet { bits }
    }

    #[inline]
    pub fn singleton(v: usize) -> Self {
        VertexSet { bits: 1u64 << v }
    }

    /// All vertices `0..n`.
    #[inline]
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_N);
        if n == MAX_N {
            VertexSet { bits: u64::MAX }
        } else {
            VertexSet {
                bits: (1u64 << n) - 1,
            }
        }
    }

    #[inline]
    pub fn bits(self) -> u64 {
        self.bits
    }

    #[inline]
    pub fn len(self) -> usize {
        self.bits.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.bits == 0
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        (self.bits >> v) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        self.bits |= 1u64 << v;
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        self.bits &= !(1u64 << v);
    }

    #[inline]
    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet {
            bits: self.bits | other.bits,
        }
    }

    #[inline]
    pub fn intersect(self, other: VertexSet) -> VertexSet {
        VertexSet {
            bits: self.bits & other.bits,
        }
    }

    #[inline]
    pub fn minus(self, other: VertexSet) -> VertexSet {
        VertexSet {
            bits: self.bits & !other.bits,
        }
    }

    #[inline]
    pub fn is_subset_of(self, other: VertexSet) -> bool {
        self.bits & !other.bits == 0
    }

    /// Lowest vertex in the set, if any.
    #[inline]
    pub fn first(self) -> Option<usize> {
        if self.bits == 0 {
            None
        } else {
            Some(self.bits.trailing_zeros() as usize)
        }
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.bits;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(v)
            }
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut bits = 0u64;
        for v in iter {
            bits |= 1u64 << v;
        }
        VertexSet { bits }
    }
}

impl std::fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// An ordered list of disjoint vertex sets covering `0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexPartition {
    parts: Vec<VertexSet>,
    n: usize,
}

impl VertexPartition {
    /// Builds a partition, verifying disjointness and coverage of `0..n`.
    /// Empty parts are allowed.
    pub fn new(n: usize, parts: Vec<VertexSet>) -> Result<Self> {
        let mut seen = VertexSet::EMPTY;
        for p in &parts {
            if !p.intersect(seen).is_empty() {
                return Err(Error::NotAPartition);
            }
            seen = seen.union(*p);
        }
        if seen != VertexSet::full(n) {
            return Err(Error::NotAPartition);
        }
        Ok(VertexPartition { parts, n })
    }

    pub fn parts(&self) -> &[VertexSet] {
        &self.parts
    }

    pub fn num_parts(&self) -> usize {
        self.parts.len()
    }

    pub fn order(&self) -> usize {
        self.n
    }
}

/// Simple undirected graph; row `i` of `adj` is the neighbor set of vertex
/// `i`. Rows are symmetric, loop-free, and zero at positions `>= n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// The empty graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_N {
            return Err(Error::SizeOverflow(n, MAX_N));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub fn complete(n: usize) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        let full = VertexSet::full(n).bits();
        for i in 0..n {
            g.adj[i] = full & !(1u64 << i);
        }
        Ok(g)
    }

    pub fn path(n: usize) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for i in 1..n {
            g.add_edge(i - 1, i);
        }
        Ok(g)
    }

    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidParameter {
                name: "n",
                value: n as i64,
                rule: "cycle needs n >= 3",
            });
        }
        let mut g = Graph::path(n)?;
        g.add_edge(n - 1, 0);
        Ok(g)
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            if u >= n || v >= n || u == v {
                return Err(Error::InvalidVertex(u.max(v), n));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// Builds directly from adjacency rows. Debug-asserts the invariants.
    pub fn from_rows(n: usize, adj: Vec<u64>) -> Self {
        debug_assert_eq!(adj.len(), n);
        let g = Graph { n, adj };
        debug_assert!(g.check_invariants());
        g
    }

    fn check_invariants(&self) -> bool {
        let mask = VertexSet::full(self.n).bits();
        for i in 0..self.n {
            if self.adj[i] & !mask != 0 || self.adj[i] >> i & 1 == 1 {
                return false;
            }
            for j in (i + 1)..self.n {
                if (self.adj[i] >> j) & 1 != (self.adj[j] >> i) & 1 {
                    return false;
                }
            }
        }
        true
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        (self.adj[u] >> v) & 1 == 1
    }

    #[inline]
    pub fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        self.adj[u] |= 1u64 << v;
        self.adj[v] |= 1u64 << u;
    }

    #[inline]
    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u] &= !(1u64 << v);
        self.adj[v] &= !(1u64 << u);
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet::from_bits(self.adj[v])
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.adj
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in VertexSet::from_bits(self.adj[u] >> (u + 1) << (u + 1)).iter() {
                out.push((u, v));
            }
        }
        out
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap()
    }

    /// Returns `Some(k)` when the graph is k-regular.
    pub fn regularity(&self) -> Option<usize> {
        let k = self.degree(0);
        (1..self.n).all(|v| self.degree(v) == k).then_some(k)
    }

    /// Edge complement: `ij` is an edge of the result iff it is not one here.
    pub fn complement(&self) -> Graph {
        let mask = VertexSet::full(self.n).bits();
        let adj = (0..self.n)
            .map(|i| !self.adj[i] & mask & !(1u64 << i))
            .collect();
        Graph { n: self.n, adj }
    }

    /// Disjoint union followed by all cross edges.
    pub fn join(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        if n > MAX_N {
            return Err(Error::SizeOverflow(n, MAX_N));
        }
        let mut g = self.disjoint_union(other)?;
        for u in 0..self.n {
            for v in self.n..n {
                g.add_edge(u, v);
            }
        }
        Ok(g)
    }

    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        if n > MAX_N {
            return Err(Error::SizeOverflow(n, MAX_N));
        }
        let mut adj = vec![0u64; n];
        adj[..self.n].copy_from_slice(&self.adj);
        for (i, row) in other.adj.iter().enumerate() {
            adj[self.n + i] = row << self.n;
        }
        Ok(Graph { n, adj })
    }

    /// Kelmans operation: every neighbor `x` of `v` outside `N(u) ∪ {u}`
    /// loses the edge `vx` and gains `ux`. The `uv` adjacency is untouched.
    pub fn kelmans(&self, u: usize, v: usize) -> Result<Graph> {
        if u >= self.n || v >= self.n || u == v {
            return Err(Error::InvalidVertex(u.max(v), self.n));
        }
        let mut g = self.clone();
        let moved = g.adj[v] & !g.adj[u] & !(1u64 << u) & !(1u64 << v);
        for x in VertexSet::from_bits(moved).iter() {
            g.remove_edge(v, x);
            g.add_edge(u, x);
        }
        Ok(g)
    }

    /// Subgraph induced by `set`, relabeled to `0..set.len()` in increasing
    /// vertex order.
    pub fn induced(&self, set: VertexSet) -> Graph {
        let verts = set.to_vec();
        let mut g = Graph {
            n: verts.len().max(1),
            adj: vec![0; verts.len().max(1)],
        };
        g.n = verts.len();
        g.adj.truncate(verts.len());
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.adj[i] |= 1u64 << j;
                    g.adj[j] |= 1u64 << i;
                }
            }
        }
        g
    }

    /// Applies the vertex relabeling `perm` (new label of old vertex `v` is
    /// `perm[v]`).
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        debug_assert_eq!(perm.len(), self.n);
        let mut adj = vec![0u64; self.n];
        for u in 0..self.n {
            for v in self.neighbors(u).iter() {
                adj[perm[u]] |= 1u64 << perm[v];
            }
        }
        Graph { n: self.n, adj }
    }

    /// Vertices reachable from `start`.
    pub fn component_of(&self, start: usize) -> VertexSet {
        let mut seen = 1u64 << start;
        loop {
            let mut next = seen;
            for v in VertexSet::from_bits(seen).iter() {
                next |= self.adj[v];
            }
            if next == seen {
                return VertexSet::from_bits(seen);
            }
            seen = next;
        }
    }

    pub fn is_connected(&self) -> bool {
        self.component_of(0).len() == self.n
    }

    pub fn components(&self) -> Vec<VertexSet> {
        let mut remaining = VertexSet::full(self.n);
        let mut out = Vec::new();
        while let Some(v) = remaining.first() {
            let comp = self.component_of(v);
            out.push(comp);
            remaining = remaining.minus(comp);
        }
        out
    }

    /// Maximum degree of the subgraph induced by `set`.
    pub fn max_degree_within(&self, set: VertexSet) -> usize {
        set.iter()
            .map(|v| (self.adj[v] & set.bits()).count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    /// True when the graph on `set` is a forest (no cycle within `set`).
    pub fn is_tree(&self) -> bool {
        self.is_connected() && self.edge_count() == self.n - 1
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complement_of_complete_is_empty() {
        let k4 = Graph::complete(4).unwrap();
        assert_eq!(k4.complement().edge_count(), 0);
    }

    #[test]
    fn complement_is_involution() {
        let p5 = Graph::path(5).unwrap();
        assert_eq!(p5.complement().complement(), p5);
    }

    #[test]
    fn join_edge_count_identity() {
        let p3 = Graph::path(3).unwrap();
        let j = p3.join(&p3).unwrap();
        assert_eq!(j.edge_count(), 2 + 2 + 9);
    }

    #[test]
    fn join_of_cocliques_is_c4() {
        let e2 = Graph::empty(2).unwrap();
        let j = e2.join(&e2).unwrap();
        assert_eq!(j.n(), 4);
        assert_eq!(j.edge_count(), 4);
        assert!(j.degrees().iter().all(|&d| d == 2));
        assert!(j.is_connected());
    }

    #[test]
    fn kelmans_on_p4_gives_star() {
        // P4 = 0-1-2-3, reroute neighbors of v=2 that u=1 misses.
        let p4 = Graph::path(4).unwrap();
        let g = p4.kelmans(1, 2).unwrap();
        assert_eq!(g.degree(1), 3);
        assert_eq!(g.edge_count(), 3);
        assert_eq!(g.degree(0), 1);
        assert_eq!(g.degree(3), 1);
    }

    #[test]
    fn kelmans_noop_when_neighbors_covered() {
        // In K4 every pair already shares all neighbors.
        let k4 = Graph::complete(4).unwrap();
        assert_eq!(k4.kelmans(0, 1).unwrap(), k4);
    }

    #[test]
    fn kelmans_preserves_degree_sum() {
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (1, 4)])
            .unwrap();
        let h = g.kelmans(0, 3).unwrap();
        assert_eq!(g.edge_count(), h.edge_count());
        assert!(g.has_edge(0, 3) == h.has_edge(0, 3));
    }

    #[test]
    fn components_and_connectivity() {
        let mut g = Graph::empty(5).unwrap();
        g.add_edge(0, 1);
        g.add_edge(2, 3);
        assert!(!g.is_connected());
        assert_eq!(g.components().len(), 3);
        g.add_edge(1, 2);
        g.add_edge(3, 4);
        assert!(g.is_connected());
    }

    #[test]
    fn induced_subgraph_relabels() {
        let c5 = Graph::cycle(5).unwrap();
        let sub = c5.induced(VertexSet::from_iter([0, 1, 3]));
        assert_eq!(sub.n(), 3);
        assert_eq!(sub.edge_count(), 1);
    }

    #[test]
    fn size_overflow_rejected() {
        assert!(Graph::empty(65).is_err());
        let g32 = Graph::complete(40).unwrap();
        assert!(g32.join(&g32).is_err());
    }
}
