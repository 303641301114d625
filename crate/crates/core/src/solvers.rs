//! Exact NP-hard invariants at desk scale: dissociation and d-independence
//! numbers with witnesses, forbidden complete-multipartite containment,
//! H-family freeness, q-good partitions, and maximum matchings.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexPartition, VertexSet};

/// Order cap for the branch-and-bound solvers.
pub const SOLVER_MAX_N: usize = 40;

/// Order cap for the exact q-good partition search.
pub const QGOOD_MAX_N: usize = 16;

/// An invariant value together with a certificate that attains it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessedValue {
    pub value: usize,
    pub witness: VertexSet,
}

/// Branch and bound state for the maximum d-bounded-degree induced subgraph.
struct IdSolver<'a> {
    g: &'a Graph,
    d: usize,
    best: usize,
    best_set: u64,
    /// Size the search must reach; allows early exit in feasibility probes.
    target: Option<usize>,
}

impl<'a> IdSolver<'a> {
    /// A vertex may join `chosen` iff its chosen-neighbor count stays within
    /// `d` and none of its chosen neighbors is already saturated.
    fn addable(&self, u: usize, chosen: u64, deg_in: &[u8; 64]) -> bool {
        if deg_in[u] as usize > self.d {
            return false;
        }
        VertexSet::from_bits(self.g.neighbors(u).bits() & chosen)
            .iter()
            .all(|w| (deg_in[w] as usize) < self.d)
    }

    /// `deg_in[v]` counts neighbors of `v` inside `chosen`, for every vertex.
    fn run(&mut self, chosen: u64, size: usize, deg_in: &[u8; 64], open: u64) {
        if size > self.best {
            self.best = size;
            self.best_set = chosen;
        }
        if let Some(t) = self.target {
            if self.best >= t {
                return;
            }
        }
        if open == 0 || size + open.count_ones() as usize <= self.best {
            return;
        }
        // pivot: open vertex with most open neighbors, ties to lowest index
        let mut pivot = usize::MAX;
        let mut pivot_deg = 0u32;
        let mut scan = open;
        while scan != 0 {
            let v = scan.trailing_zeros() as usize;
            scan &= scan - 1;
            let dv = (self.g.neighbors(v).bits() & open).count_ones();
            if pivot == usize::MAX || dv > pivot_deg {
                pivot = v;
                pivot_deg = dv;
            }
        }
        let v = pivot;
        let vbit = 1u64 << v;

        // branch 1: include v
        let new_chosen = chosen | vbit;
        let mut new_deg = *deg_in;
        for u in self.g.neighbors(v).iter() {
            new_deg[u] += 1;
        }
        let mut new_open = open & !vbit;
        for u in VertexSet::from_bits(new_open).iter() {
            if !self.addable(u, new_chosen, &new_deg) {
                new_open &= !(1u64 << u);
            }
        }
        self.run(new_chosen, size + 1, &new_deg, new_open);

        // branch 2: exclude v
        self.run(chosen, size, deg_in, open & !vbit);
    }
}

/// Returns `None` when `forced_in` itself violates the degree bound.
fn max_d_independent(
    g: &Graph,
    d: usize,
    forced_in: u64,
    forced_out: u64,
    target: Option<usize>,
) -> Option<(usize, u64)> {
    let n = g.n();
    let mut deg_in = [0u8; 64];
    for (v, slot) in deg_in.iter_mut().enumerate().take(n) {
        *slot = (g.neighbors(v).bits() & forced_in).count_ones() as u8;
    }
    for v in VertexSet::from_bits(forced_in).iter() {
        if deg_in[v] as usize > d {
            return None;
        }
    }
    let mut solver = IdSolver {
        g,
        d,
        best: forced_in.count_ones() as usize,
        best_set: forced_in,
        target,
    };
    let mut open = VertexSet::full(n).bits() & !forced_in & !forced_out;
    for u in VertexSet::from_bits(open).iter() {
        if !solver.addable(u, forced_in, &deg_in) {
            open &= !(1u64 << u);
        }
    }
    solver.run(forced_in, forced_in.count_ones() as usize, &deg_in, open);
    Some((solver.best, solver.best_set))
}

/// Max size of a vertex set inducing a subgraph of maximum degree at most
/// `d`. The witness is the lexicographically smallest optimal set.
pub fn d_independence_number(g: &Graph, d: usize) -> Result<WitnessedValue> {
    if g.n() > SOLVER_MAX_N {
        return Err(Error::CapExceeded(g.n(), SOLVER_MAX_N));
    }
    let (value, _) = max_d_independent(g, d, 0, 0, None).expect("empty set is always valid");
    // lexicographic refinement: force vertices in ascending order when a
    // maximum solution still exists with them
    let mut fixed_in = 0u64;
    let mut fixed_out = 0u64;
    for v in 0..g.n() {
        let try_in = fixed_in | 1 << v;
        let reachable = max_d_independent(g, d, try_in, fixed_out, Some(value))
            .map(|(s, _)| s >= value)
            .unwrap_or(false);
        if reachable {
            fixed_in = try_in;
        } else {
            fixed_out |= 1 << v;
        }
        if fixed_in.count_ones() as usize == value {
            break;
        }
    }
    debug_assert_eq!(fixed_in.count_ones() as usize, value);
    let witness = VertexSet::from_bits(fixed_in);
    debug_assert!(g.max_degree_within(witness) <= d || witness.is_empty());
    Ok(WitnessedValue { value, witness })
}

/// Dissociation number: maximum vertex set inducing degree at most one.
pub fn dissociation_number(g: &Graph) -> Result<WitnessedValue> {
    d_independence_number(g, 1)
}

/// Checks a returned witness against its defining degree condition.
pub fn check_d_independent(g: &Graph, set: VertexSet, d: usize) -> bool {
    set.is_subset_of(VertexSet::full(g.n())) && g.max_degree_within(set) <= d
}

/// Does `g` contain the complete multipartite graph with the given part
/// sizes as a (not necessarily induced) subgraph? Returns an embedding on
/// success: one vertex set per part, matching the input order.
pub fn find_complete_multipartite(g: &Graph, sizes: &[usize]) -> Option<Vec<VertexSet>> {
    if sizes.iter().sum::<usize>() > g.n() {
        return None;
    }
    if sizes.is_empty() {
        return Some(Vec::new());
    }
    // search largest parts first to prune early
    let mut order: Vec<usize> = (0..sizes.len()).collect();
    order.sort_by_key(|&i| std::cmp::Reverse(sizes[i]));
    let sorted: Vec<usize> = order.iter().map(|&i| sizes[i]).collect();
    let mut parts: Vec<u64> = Vec::with_capacity(sizes.len());
    let found = place_part(g, &sorted, 0, VertexSet::full(g.n()).bits(), &mut parts);
    if !found {
        return None;
    }
    let mut out = vec![VertexSet::EMPTY; sizes.len()];
    for (slot, &orig) in order.iter().enumerate() {
        out[orig] = VertexSet::from_bits(parts[slot]);
    }
    Some(out)
}

/// `candidates`: vertices adjacent to every vertex of all placed parts.
fn place_part(
    g: &Graph,
    sizes: &[usize],
    idx: usize,
    candidates: u64,
    parts: &mut Vec<u64>,
) -> bool {
    if idx == sizes.len() {
        return true;
    }
    let need = sizes[idx];
    let remaining: usize = sizes[idx..].iter().sum();
    if (candidates.count_ones() as usize) < remaining {
        return false;
    }
    // equal-size parts are chosen with increasing minimum vertex
    let min_allowed = if idx > 0 && sizes[idx - 1] == need {
        parts[idx - 1].trailing_zeros() as usize + 1
    } else {
        0
    };
    let cand_vec: Vec<usize> = VertexSet::from_bits(candidates)
        .iter()
        .filter(|&v| v >= min_allowed)
        .collect();
    let mut chosen = Vec::with_capacity(need);
    choose_vertices(g, sizes, idx, &cand_vec, 0, candidates, &mut chosen, parts)
}

#[allow(clippy::too_many_arguments)]
fn choose_vertices(
    g: &Graph,
    sizes: &[usize],
    idx: usize,
    cand: &[usize],
    from: usize,
    candidates: u64,
    chosen: &mut Vec<usize>,
    parts: &mut Vec<u64>,
) -> bool {
    if chosen.len() == sizes[idx] {
        let part_bits = chosen.iter().fold(0u64, |acc, &v| acc | 1 << v);
        let mut next_cand = candidates & !part_bits;
        for &v in chosen.iter() {
            next_cand &= g.neighbors(v).bits();
        }
        parts.push(part_bits);
        if place_part(g, sizes, idx + 1, next_cand, parts) {
            return true;
        }
        parts.pop();
        return false;
    }
    let need = sizes[idx] - chosen.len();
    for i in from..cand.len() {
        if cand.len() - i < need {
            return false;
        }
        chosen.push(cand[i]);
        if choose_vertices(g, sizes, idx, cand, i + 1, candidates, chosen, parts) {
            return true;
        }
        chosen.pop();
    }
    false
}

pub fn contains_complete_multipartite(g: &Graph, sizes: &[usize]) -> bool {
    find_complete_multipartite(g, sizes).is_some()
}

/// Minimum-degree criterion for odd-cocktail-party freeness on exactly
/// `2k+1` vertices: free iff the minimum degree is at most `2k-2`.
pub fn is_l_free_by_degree(g: &Graph, k: usize) -> Result<bool> {
    if k < 2 {
        return Err(Error::InvalidParameter {
            name: "k",
            value: k as i64,
            rule: "criterion needs k >= 2",
        });
    }
    if g.n() != 2 * k + 1 {
        return Err(Error::InvalidParameter {
            name: "v(g)",
            value: g.n() as i64,
            rule: "criterion applies to graphs on exactly 2k+1 vertices",
        });
    }
    Ok(g.min_degree() <= 2 * k - 2)
}

/// Freeness from every complement of a max-degree-`d` graph on `s+1`
/// vertices, decided through the complement: free iff `i_d` of the
/// complement is at most `s`.
pub fn is_h_family_free(g: &Graph, s: usize, d: usize) -> Result<bool> {
    if s <= d {
        return Err(Error::InvalidParameter {
            name: "s",
            value: s as i64,
            rule: "family needs s > d >= 0",
        });
    }
    Ok(d_independence_number(&g.complement(), d)?.value <= s)
}

/// A minimum-internal-edge q-partition together with its internal edge
/// count.
#[derive(Clone, Debug)]
pub struct QGoodPartition {
    pub value: usize,
    pub witness: VertexPartition,
}

/// Exact search for a q-partition minimizing internal edges. Parts may be
/// empty unless `require_nonempty` is set.
pub fn q_good_partition(g: &Graph, q: usize, require_nonempty: bool) -> Result<QGoodPartition> {
    if g.n() > QGOOD_MAX_N {
        return Err(Error::CapExceeded(g.n(), QGOOD_MAX_N));
    }
    if q < 2 {
        return Err(Error::InvalidParameter {
            name: "q",
            value: q as i64,
            rule: "partition search needs q >= 2",
        });
    }
    let n = g.n();
    // parts introduced in index order to kill permutation symmetry
    struct Search<'a> {
        g: &'a Graph,
        q: usize,
        require_nonempty: bool,
        part_bits: Vec<u64>,
        assign: Vec<usize>,
        best_cost: usize,
        best_assign: Vec<usize>,
    }
    impl Search<'_> {
        fn rec(&mut self, v: usize, used: usize, cost: usize) {
            let n = self.g.n();
            if cost >= self.best_cost {
                return;
            }
            if v == n {
                if self.require_nonempty && self.part_bits.contains(&0) {
                    return;
                }
                self.best_cost = cost;
                self.best_assign.copy_from_slice(&self.assign);
                return;
            }
            if self.require_nonempty {
                let empties = self.part_bits.iter().filter(|&&b| b == 0).count();
                if empties > n - v {
                    return;
                }
            }
            let limit = (used + 1).min(self.q);
            for p in 0..limit {
                let internal =
                    (self.g.neighbors(v).bits() & self.part_bits[p]).count_ones() as usize;
                self.assign[v] = p;
                self.part_bits[p] |= 1 << v;
                self.rec(v + 1, used.max(p + 1), cost + internal);
                self.part_bits[p] &= !(1u64 << v);
            }
        }
    }
    let mut search = Search {
        g,
        q,
        require_nonempty,
        part_bits: vec![0u64; q],
        assign: vec![0usize; n],
        best_cost: usize::MAX,
        best_assign: vec![0usize; n],
    };
    search.rec(0, 0, 0);
    let (best_cost, best_assign) = (search.best_cost, search.best_assign);
    if best_cost == usize::MAX {
        return Err(Error::Infeasible(
            "no nonempty q-partition of this order".into(),
        ));
    }
    let parts: Vec<VertexSet> = (0..q)
        .map(|p| VertexSet::from_iter((0..n).filter(|&v| best_assign[v] == p)))
        .collect();
    Ok(QGoodPartition {
        value: best_cost,
        witness: VertexPartition::new(n, parts)?,
    })
}

/// A maximum matching and its edges.
#[derive(Clone, Debug)]
pub struct MatchingWitness {
    pub size: usize,
    pub edges: Vec<(usize, usize)>,
}

/// Exact maximum matching by branch and bound on the lowest unsaturated
/// vertex.
pub fn max_matching(g: &Graph) -> MatchingWitness {
    fn rec(
        g: &Graph,
        avail: u64,
        current: &mut Vec<(usize, usize)>,
        best: &mut Vec<(usize, usize)>,
    ) {
        if current.len() + (avail.count_ones() as usize) / 2 <= best.len() {
            return;
        }
        let mut scan = avail;
        // find lowest available vertex with an available neighbor
        let mut head = None;
        while scan != 0 {
            let v = scan.trailing_zeros() as usize;
            scan &= scan - 1;
            if g.neighbors(v).bits() & avail != 0 {
                head = Some(v);
                break;
            }
        }
        let Some(v) = head else {
            if current.len() > best.len() {
                *best = current.clone();
            }
            return;
        };
        for u in VertexSet::from_bits(g.neighbors(v).bits() & avail).iter() {
            current.push((v, u));
            rec(g, avail & !(1 << v) & !(1 << u), current, best);
            current.pop();
        }
        // leave v unmatched
        rec(g, avail & !(1 << v), current, best);
    }
    let mut best = Vec::new();
    let mut current = Vec::new();
    rec(g, VertexSet::full(g.n()).bits(), &mut current, &mut best);
    MatchingWitness {
        size: best.len(),
        edges: best,
    }
}
