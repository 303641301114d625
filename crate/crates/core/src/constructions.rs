//! Builders for the named graph families: cocktail-party blocks, the Turán
//! maximizers `G_{n,2k}`, the reconnected minimizers `T_{n,2k}`, the hatted
//! two-block minimizer for dissociation number four, CP-paths, CP-cycles,
//! the five-block connector gadgets, and the spectral maximizer join.

use crate::canon::{canonical_form, CanonicalForm};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet, MAX_N};

/// Cocktail party graph `CP_d`: the complete graph minus the perfect
/// matching `(0,1), (2,3), ...`. `(d-2)`-regular.
pub fn cocktail_party(d: usize) -> Result<Graph> {
    if d < 2 || !d.is_multiple_of(2) {
        return Err(Error::InvalidParameter {
            name: "d",
            value: d as i64,
            rule: "cocktail party graphs need even d >= 2",
        });
    }
    let mut g = Graph::complete(d)?;
    for i in (0..d).step_by(2) {
        g.remove_edge(i, i + 1);
    }
    Ok(g)
}

/// Odd cocktail party graph `L_d = CP_{d-1} ∨ K_1` for odd `d >= 3`. The
/// join vertex carries the unique maximum degree `d-1` and is placed last.
pub fn odd_cocktail_party(d: usize) -> Result<Graph> {
    if d < 3 || d.is_multiple_of(2) {
        return Err(Error::InvalidParameter {
            name: "d",
            value: d as i64,
            rule: "odd cocktail party graphs need odd d >= 3",
        });
    }
    cocktail_party(d - 1)?.join(&Graph::complete(1)?)
}

/// Complete multipartite graph: edges are exactly the cross-part pairs.
/// Part `i` occupies a consecutive vertex range.
pub fn complete_multipartite(sizes: &[usize]) -> Result<Graph> {
    let n: usize = sizes.iter().sum();
    if n == 0 || n > MAX_N {
        return Err(Error::SizeOverflow(n, MAX_N));
    }
    if sizes.contains(&0) {
        return Err(Error::InvalidParameter {
            name: "sizes",
            value: 0,
            rule: "part sizes must be positive",
        });
    }
    let mut g = Graph::empty(n)?;
    let mut start = 0;
    let mut bounds = Vec::new();
    for &s in sizes {
        bounds.push((start, start + s));
        start += s;
    }
    for (i, &(a0, a1)) in bounds.iter().enumerate() {
        for &(b0, b1) in &bounds[i + 1..] {
            for u in a0..a1 {
                for v in b0..b1 {
                    g.add_edge(u, v);
                }
            }
        }
    }
    Ok(g)
}

/// Valid part-size multisets for `G_{n,2k}`: k positive sizes summing to n,
/// pairwise differing by at most 2, with difference exactly 2 only between
/// two even sizes. Each multiset is returned in non-decreasing order.
pub fn part_size_multisets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, k: usize, min_size: usize, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == 0 {
            if n == 0 {
                out.push(acc.clone());
            }
            return;
        }
        for s in min_size..=n {
            if s * k > n {
                break;
            }
            let ok = acc.iter().all(|&t| {
                let diff = s.abs_diff(t);
                diff <= 1 || (diff == 2 && s % 2 == 0 && t % 2 == 0)
            });
            if ok {
                acc.push(s);
                rec(n - s, k - 1, s, acc, out);
                acc.pop();
            }
        }
    }
    let mut out = Vec::new();
    let mut acc = Vec::new();
    rec(n, k, 1, &mut acc, &mut out);
    out
}

/// One member of the Turán family with its partite sets.
#[derive(Clone, Debug)]
pub struct TuranMember {
    pub graph: Graph,
    pub sizes: Vec<usize>,
    pub parts: Vec<VertexSet>,
}

/// The family `G_{n,2k}`: complete k-partite graphs on every valid part
/// multiset, plus a maximum matching inside each part. Inside an odd part
/// the last vertex stays unmatched.
pub fn turan_family(n: usize, k: usize) -> Result<Vec<TuranMember>> {
    if n > MAX_N {
        return Err(Error::SizeOverflow(n, MAX_N));
    }
    if k == 0 {
        return Err(Error::InvalidParameter {
            name: "k",
            value: 0,
            rule: "the family needs k >= 1 parts",
        });
    }
    let multisets = part_size_multisets(n, k);
    if multisets.is_empty() {
        return Err(Error::Infeasible(format!(
            "no valid part-size multiset for n={n}, k={k}"
        )));
    }
    let mut out = Vec::new();
    for sizes in multisets {
        let mut graph = complete_multipartite(&sizes)?;
        let mut parts = Vec::new();
        let mut start = 0;
        for &s in &sizes {
            parts.push(VertexSet::from_iter(start..start + s));
            let mut v = start;
            while v + 1 < start + s {
                graph.add_edge(v, v + 1);
                v += 2;
            }
            start += s;
        }
        out.push(TuranMember {
            graph,
            sizes,
            parts,
        });
    }
    Ok(out)
}

/// Shared edge count of the family members.
pub fn turan_family_size(n: usize, k: usize) -> Result<usize> {
    Ok(turan_family(n, k)?[0].graph.edge_count())
}

/// All labeled spanning trees on `k` nodes (edge lists), by checking each
/// (k-1)-subset of pairs for acyclicity and coverage.
fn labeled_trees(k: usize) -> Vec<Vec<(usize, usize)>> {
    if k == 1 {
        return vec![Vec::new()];
    }
    let pairs: Vec<(usize, usize)> = (0..k)
        .flat_map(|i| ((i + 1)..k).map(move |j| (i, j)))
        .collect();
    let mut out = Vec::new();
    let m = pairs.len();
    // iterate subsets of size k-1
    let mut idx: Vec<usize> = (0..k - 1).collect();
    loop {
        let edges: Vec<(usize, usize)> = idx.iter().map(|&i| pairs[i]).collect();
        let g = Graph::from_edges(k, &edges).unwrap();
        if g.is_connected() {
            out.push(edges);
        }
        // next combination
        let mut i = k - 1;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] + (k - 1 - i) < m {
                idx[i] += 1;
                for j in (i + 1)..(k - 1) {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// The minimizer family `T_{n,2k}`: complements of the `G_{n,2k}` members
/// whose parts all have at least three vertices (so the complement has
/// exactly k components), reconnected by k-1 new edges in every way, then
/// deduplicated up to isomorphism. Exhaustive for k <= 4 and n within the
/// canonical-form cap.
pub fn minimizer_family(n: usize, k: usize) -> Result<Vec<Graph>> {
    if n < 3 * k {
        return Err(Error::InvalidParameter {
            name: "n",
            value: n as i64,
            rule: "all parts need >= 3 vertices (n >= 3k)",
        });
    }
    if k > 4 {
        return Err(Error::CapExceeded(k, 4));
    }
    let mut seen: Vec<CanonicalForm> = Vec::new();
    let mut out: Vec<Graph> = Vec::new();
    for member in turan_family(n, k)? {
        if member.sizes.iter().any(|&s| s < 3) {
            continue;
        }
        let base = member.graph.complement();
        let blocks: Vec<Vec<usize>> = member.parts.iter().map(|p| p.to_vec()).collect();
        for tree in labeled_trees(k) {
            // choose one endpoint per block side of every tree edge
            let mut choice = vec![0usize; tree.len() * 2];
            loop {
                let mut g = base.clone();
                for (t, &(bi, bj)) in tree.iter().enumerate() {
                    let u = blocks[bi][choice[2 * t]];
                    let v = blocks[bj][choice[2 * t + 1]];
                    g.add_edge(u, v);
                }
                if g.edge_count() == base.edge_count() + tree.len() {
                    let form = canonical_form(&g)?;
                    if !seen.contains(&form) {
                        seen.push(form);
                        out.push(g);
                    }
                }
                // odometer over connector choices
                let mut pos = 0;
                loop {
                    if pos == choice.len() {
                        break;
                    }
                    let limit = blocks[if pos % 2 == 0 {
                        tree[pos / 2].0
                    } else {
                        tree[pos / 2].1
                    }]
                    .len();
                    choice[pos] += 1;
                    if choice[pos] < limit {
                        break;
                    }
                    choice[pos] = 0;
                    pos += 1;
                }
                if pos == choice.len() {
                    break;
                }
            }
        }
    }
    // deterministic order
    let mut pairs: Vec<(CanonicalForm, Graph)> = seen.into_iter().zip(out).collect();
    pairs.sort_by_key(|(f, _)| *f);
    Ok(pairs.into_iter().map(|(_, g)| g).collect())
}

/// Shared edge count of `T_{n,2k}` members.
pub fn minimizer_family_size(n: usize, k: usize) -> Result<usize> {
    let cross: usize = n * (n - 1) / 2 - turan_family_size(n, k)?;
    Ok(cross + k - 1)
}

/// Fast path past the full-enumeration cap: one canonical minimizer built
/// on the most balanced valid multiset, blocks chained path-shaped through
/// good connecting edges (aligned non-adjacent pairs, away from any join
/// vertex).
pub fn representative_minimizer(n: usize, k: usize) -> Result<Graph> {
    if n < 3 * k {
        return Err(Error::InvalidParameter {
            name: "n",
            value: n as i64,
            rule: "all parts need >= 3 vertices (n >= 3k)",
        });
    }
    let sizes = part_size_multisets(n, k)
        .into_iter()
        .filter(|s| s.iter().all(|&x| x >= 3))
        .min_by_key(|s| s.last().unwrap() - s.first().unwrap())
        .ok_or_else(|| Error::Infeasible(format!("no all-large multiset for n={n}, k={k}")))?;
    let mut g = Graph::empty(n)?;
    let mut starts = Vec::new();
    let mut at = 0;
    for &s in &sizes {
        let block = if s % 2 == 0 {
            cocktail_party(s)?
        } else {
            odd_cocktail_party(s)?
        };
        for (u, v) in block.edges() {
            g.add_edge(at + u, at + v);
        }
        starts.push(at);
        at += s;
    }
    // local vertices 0 and 1 form a non-adjacent pair of within-block
    // degree s-2 in both block kinds; chain out of 1, into 0
    for w in starts.windows(2) {
        g.add_edge(w[0] + 1, w[1]);
    }
    Ok(g)
}

/// The hatted minimizer for dissociation number 4, with landmarks.
#[derive(Clone, Debug)]
pub struct HatMinimizer {
    pub graph: Graph,
    /// The good connecting edge; both endpoints have within-block degree
    /// `n_i - 2`.
    pub bridge: (usize, usize),
    /// Non-neighbors of the bridge endpoints inside their blocks.
    pub non_neighbors: (usize, usize),
    /// Join vertices of odd blocks (degree `n_i - 1` within the block).
    pub v_delta: Vec<usize>,
    pub blocks: (VertexSet, VertexSet),
}

/// `T̂_{n,4}`, the near-balanced two-block member of `T_{n,4}` linked by a
/// good connecting edge. Blocks by n mod 4: CP-CP, CP-L, L-L, CP-L.
pub fn hat_minimizer_4(n: usize) -> Result<HatMinimizer> {
    if n < 8 {
        return Err(Error::InvalidParameter {
            name: "n",
            value: n as i64,
            rule: "the hatted minimizer needs n >= 8",
        });
    }
    if n > MAX_N {
        return Err(Error::SizeOverflow(n, MAX_N));
    }
    let (s1, s2) = match n % 4 {
        0 => (n / 2, n / 2),
        1 => ((n - 1) / 2, n.div_ceil(2)),
        2 => (n / 2, n / 2),
        _ => (n.div_ceil(2), (n - 1) / 2),
    };
    let block = |s: usize| -> Result<Graph> {
        if s.is_multiple_of(2) {
            cocktail_party(s)
        } else {
            odd_cocktail_party(s)
        }
    };
    let g1 = block(s1)?;
    let g2 = block(s2)?;
    let mut graph = g1.disjoint_union(&g2)?;
    // vertex 0 of each block has within-block degree s - 2; its non-neighbor
    // is vertex 1 (the matching partner). Odd blocks put the join vertex
    // last.
    let (u, v) = (0, s1);
    graph.add_edge(u, v);
    let mut v_delta = Vec::new();
    if s1 % 2 == 1 {
        v_delta.push(s1 - 1);
    }
    if s2 % 2 == 1 {
        v_delta.push(s1 + s2 - 1);
    }
    Ok(HatMinimizer {
        graph,
        bridge: (u, v),
        non_neighbors: (1, s1 + 1),
        v_delta,
        blocks: (
            VertexSet::from_iter(0..s1),
            VertexSet::from_iter(s1..s1 + s2),
        ),
    })
}

/// Connector labels for a chain or ring of CP blocks: per block an ordered
/// pair of local vertex labels `(u_i, v_i)`; `u_i` receives the incoming
/// edge, `v_i` sends the outgoing one.
#[derive(Clone, Debug)]
pub struct ConnectorSpec {
    pub pairs: Vec<(usize, usize)>,
    pub aligned: bool,
}

impl ConnectorSpec {
    /// Aligned connectors: each block uses the non-adjacent pair `(0, 1)`.
    pub fn aligned(l: usize) -> Self {
        ConnectorSpec {
            pairs: vec![(0, 1); l],
            aligned: true,
        }
    }

    /// Adjacent connectors `(0, 2)` in every block.
    pub fn adjacent(l: usize) -> Self {
        ConnectorSpec {
            pairs: vec![(0, 2); l],
            aligned: false,
        }
    }
}

/// A CP-path or CP-cycle with landmark data.
#[derive(Clone, Debug)]
pub struct CpChain {
    pub graph: Graph,
    pub blocks: Vec<VertexSet>,
    /// Global labels of `(u_i, v_i)` per block.
    pub connectors: Vec<(usize, usize)>,
}

fn cp_chain(l: usize, m: usize, spec: &ConnectorSpec, close: bool) -> Result<CpChain> {
    let min_l = if close { 2 } else { 1 };
    if l < min_l {
        return Err(Error::InvalidParameter {
            name: "l",
            value: l as i64,
            rule: "need l >= 1 blocks for a path, l >= 2 for a cycle",
        });
    }
    if l * m > MAX_N {
        return Err(Error::SizeOverflow(l * m, MAX_N));
    }
    if spec.pairs.len() != l {
        return Err(Error::Infeasible(format!(
            "connector spec has {} pairs for {l} blocks",
            spec.pairs.len()
        )));
    }
    let block = cocktail_party(m)?;
    let mut graph = Graph::empty(l * m)?;
    let mut blocks = Vec::new();
    for b in 0..l {
        for (u, v) in block.edges() {
            graph.add_edge(b * m + u, b * m + v);
        }
        blocks.push(VertexSet::from_iter(b * m..(b + 1) * m));
    }
    let mut connectors = Vec::new();
    for (b, &(u, v)) in spec.pairs.iter().enumerate() {
        if u == v || u >= m || v >= m {
            return Err(Error::InvalidVertex(u.max(v), m));
        }
        if spec.aligned && block.has_edge(u, v) {
            return Err(Error::Infeasible(
                "aligned spec requires non-adjacent connector pairs".into(),
            ));
        }
        connectors.push((b * m + u, b * m + v));
    }
    for b in 0..l.saturating_sub(1) {
        graph.add_edge(connectors[b].1, connectors[b + 1].0);
    }
    if close {
        graph.add_edge(connectors[l - 1].1, connectors[0].0);
    }
    Ok(CpChain {
        graph,
        blocks,
        connectors,
    })
}

/// Chain of `l` blocks `CP_m` linked through consecutive connectors.
pub fn cp_path(l: usize, m: usize, spec: &ConnectorSpec) -> Result<CpChain> {
    cp_chain(l, m, spec, false)
}

/// As `cp_path` plus the closing edge from the last block to the first.
pub fn cp_cycle(l: usize, m: usize, spec: &ConnectorSpec) -> Result<CpChain> {
    cp_chain(l, m, spec, true)
}

pub fn aligned_cp_path(l: usize, m: usize) -> Result<CpChain> {
    cp_path(l, m, &ConnectorSpec::aligned(l))
}

pub fn aligned_cp_cycle(l: usize, m: usize) -> Result<CpChain> {
    cp_cycle(l, m, &ConnectorSpec::aligned(l))
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum GadgetKind {
    /// Central block with two non-adjacent connector pairs, one external
    /// edge from each of the four connectors to its own outer block.
    Fig7,
    /// Central non-adjacent pair; each of the two connectors carries two
    /// external edges.
    Fig8,
    /// Central non-adjacent pair; one connector carries one external edge,
    /// the other three.
    Fig9,
}

/// A five-block gadget with the partition used in its quotient analysis.
#[derive(Clone, Debug)]
pub struct Gadget {
    pub graph: Graph,
    /// Outer attachment vertices, their block partners, outer remainder,
    /// central connectors, central remainder. The fifth part is empty when
    /// m = 4 under `Fig7`.
    pub partition_parts: Vec<VertexSet>,
}

/// Five blocks `CP_m`; block 0 is central, blocks 1..=4 are outer. Outer
/// attachment vertices sit at each outer block's position 0 (partner 1).
pub fn connector_gadget(kind: GadgetKind, m: usize) -> Result<Gadget> {
    if m < 4 || !m.is_multiple_of(2) {
        return Err(Error::InvalidParameter {
            name: "m",
            value: m as i64,
            rule: "gadget blocks need even m >= 4",
        });
    }
    if 5 * m > MAX_N {
        return Err(Error::SizeOverflow(5 * m, MAX_N));
    }
    let block = cocktail_party(m)?;
    let mut graph = Graph::empty(5 * m)?;
    for b in 0..5 {
        for (u, v) in block.edges() {
            graph.add_edge(b * m + u, b * m + v);
        }
    }
    let (a, bb, c, d) = (m, 2 * m, 3 * m, 4 * m);
    let (u1, v1, u2, v2) = (0, 1, 2, 3);
    let central_connectors: Vec<usize> = match kind {
        GadgetKind::Fig7 => {
            graph.add_edge(a, u1);
            graph.add_edge(bb, v1);
            graph.add_edge(c, v2);
            graph.add_edge(d, u2);
            vec![u1, v1, u2, v2]
        }
        GadgetKind::Fig8 => {
            graph.add_edge(a, u1);
            graph.add_edge(d, u1);
            graph.add_edge(bb, v1);
            graph.add_edge(c, v1);
            vec![u1, v1]
        }
        GadgetKind::Fig9 => {
            graph.add_edge(a, u1);
            graph.add_edge(bb, v1);
            graph.add_edge(c, v1);
            graph.add_edge(d, v1);
            vec![u1, v1]
        }
    };
    let attach = VertexSet::from_iter([a, bb, c, d]);
    let partners = VertexSet::from_iter([a + 1, bb + 1, c + 1, d + 1]);
    let outer_rest = VertexSet::from_iter(m..5 * m).minus(attach).minus(partners);
    let central: VertexSet = VertexSet::from_iter(central_connectors.iter().copied());
    let central_rest = VertexSet::from_iter(0..m).minus(central);
    Ok(Gadget {
        graph,
        partition_parts: vec![attach, partners, outer_rest, central, central_rest],
    })
}

/// `G ∨ K_{n-s}` with `G` the circulant d-regular graph on s vertices:
/// neighbors at circular distance up to d/2, plus the antipode when d is
/// odd. Attains the maximum spectral radius for given order and
/// d-independence number s.
pub fn spectral_maximizer(n: usize, s: usize, d: usize) -> Result<Graph> {
    if s > n || n > MAX_N {
        return Err(Error::SizeOverflow(n.max(s), MAX_N));
    }
    if d >= s || !(d * s).is_multiple_of(2) {
        return Err(Error::Infeasible(format!(
            "no d-regular graph on s vertices for d={d}, s={s}"
        )));
    }
    let mut block = Graph::empty(s)?;
    for v in 0..s {
        for step in 1..=(d / 2) {
            block.add_edge(v, (v + step) % s);
        }
    }
    if d % 2 == 1 {
        // d odd forces s even; add the perfect matching of antipodes
        for v in 0..s / 2 {
            block.add_edge(v, v + s / 2);
        }
    }
    debug_assert_eq!(block.regularity(), Some(d));
    if n == s {
        return Ok(block);
    }
    block.join(&Graph::complete(n - s)?)
}
