//! Isomorphism-free enumeration of small graphs: extend each canonical
//! (k-1)-vertex graph by one vertex, dedup the results by canonical form.

use std::collections::HashMap;

use rayon::prelude::*;

use crate::canon::{canonicalize, CanonicalForm};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Default order cap; full enumeration at 9 yields 274,668 classes.
pub const DEFAULT_ENUM_CAP: usize = 9;

#[derive(Clone, Debug)]
pub struct EnumOptions {
    pub connected_only: bool,
    /// Prunes generation: every intermediate level respects the bound, which
    /// is sound because deleting a vertex never adds edges.
    pub max_edges: Option<usize>,
    /// Raise to enumerate past the default cap (memory and time grow fast).
    pub cap: usize,
}

impl Default for EnumOptions {
    fn default() -> Self {
        EnumOptions {
            connected_only: false,
            max_edges: None,
            cap: DEFAULT_ENUM_CAP,
        }
    }
}

impl EnumOptions {
    pub fn connected() -> Self {
        EnumOptions {
            connected_only: true,
            ..Default::default()
        }
    }
}

/// One canonical representative per isomorphism class on `n` vertices, in a
/// deterministic order (by edge count, then canonical key). The order and
/// content do not depend on the rayon worker count.
pub fn enumerate_graphs(n: usize, opts: &EnumOptions) -> Result<Vec<Graph>> {
    if n > opts.cap {
        return Err(Error::CapExceeded(n, opts.cap));
    }
    if n == 0 {
        return Err(Error::SizeOverflow(0, opts.cap));
    }
    let mut level: Vec<(CanonicalForm, Graph)> = vec![canonicalize(&Graph::empty(1)?)?];
    for k in 2..=n {
        let children: Vec<(CanonicalForm, Graph)> = level
            .par_iter()
            .flat_map_iter(|(_, parent)| {
                let budget = opts
                    .max_edges
                    .map(|m| m.saturating_sub(parent.edge_count()));
                extensions(parent, k, budget)
            })
            .collect();
        let mut dedup: HashMap<CanonicalForm, Graph> = HashMap::with_capacity(children.len());
        for (form, g) in children {
            dedup.entry(form).or_insert(g);
        }
        level = dedup.into_iter().collect();
        level.sort_by_key(|(form, g)| (g.edge_count(), *form));
    }
    Ok(level
        .into_iter()
        .map(|(_, g)| g)
        .filter(|g| !opts.connected_only || g.is_connected())
        .collect())
}

/// All one-vertex extensions of `parent` to order `k`, canonicalized.
/// `budget` bounds how many edges the new vertex may carry.
fn extensions(
    parent: &Graph,
    k: usize,
    budget: Option<usize>,
) -> impl Iterator<Item = (CanonicalForm, Graph)> + '_ {
    let base = k - 1;
    (0u64..1 << base).filter_map(move |mask| {
        if let Some(b) = budget {
            if mask.count_ones() as usize > b {
                return None;
            }
        }
        let mut g = Graph::empty(k).unwrap();
        for u in 0..base {
            for v in parent.neighbors(u).iter() {
                if v > u {
                    g.add_edge(u, v);
                }
            }
            if mask >> u & 1 == 1 {
                g.add_edge(u, base);
            }
        }
        Some(canonicalize(&g).unwrap())
    })
}

/// Convenience for sharded scans: classes grouped by edge count.
pub fn enumerate_by_edge_count(n: usize, opts: &EnumOptions) -> Result<Vec<(usize, Vec<Graph>)>> {
    let all = enumerate_graphs(n, opts)?;
    let mut out: Vec<(usize, Vec<Graph>)> = Vec::new();
    for g in all {
        let e = g.edge_count();
        match out.last_mut() {
            Some((le, v)) if *le == e => v.push(g),
            _ => out.push((e, vec![g])),
        }
    }
    Ok(out)
}
