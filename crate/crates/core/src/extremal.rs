//! Brute-force Turán machinery: edge maximizers for forbidden families
//! (optionally among hosts with connected complement), edge and spectral
//! minimizers over connected graphs with fixed dissociation number, the
//! bipartite Zarankiewicz search, and the closed-form comparison values.

use rayon::prelude::*;

use crate::enumerate::{enumerate_graphs, EnumOptions};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::solvers::{contains_complete_multipartite, dissociation_number, is_h_family_free};
use crate::spectral;

/// A forbidden family for subgraph-freeness searches.
#[derive(Clone, Debug)]
pub enum FamilySpec {
    /// Sizes kept sorted ascending.
    CompleteMultipartite(Vec<usize>),
    /// `CP_d`, even d.
    Cocktail(usize),
    /// `L_d`, odd d.
    OddCocktail(usize),
    /// Complements of all max-degree-d graphs on s+1 vertices.
    HFamily { s: usize, d: usize },
    /// Any explicit list of forbidden subgraphs.
    ExplicitSet(Vec<Graph>),
}

impl FamilySpec {
    pub fn validate(&self) -> Result<()> {
        match self {
            FamilySpec::Cocktail(d) if d % 2 != 0 || *d < 2 => Err(Error::InvalidParameter {
                name: "d",
                value: *d as i64,
                rule: "cocktail family needs even d >= 2",
            }),
            FamilySpec::OddCocktail(d) if d % 2 == 0 || *d < 3 => Err(Error::InvalidParameter {
                name: "d",
                value: *d as i64,
                rule: "odd cocktail family needs odd d >= 3",
            }),
            FamilySpec::HFamily { s, d } if s <= d => Err(Error::InvalidParameter {
                name: "s",
                value: *s as i64,
                rule: "H-family needs s > d",
            }),
            FamilySpec::CompleteMultipartite(sizes) if sizes.is_empty() => {
                Err(Error::Infeasible("empty part list".into()))
            }
            _ => Ok(()),
        }
    }

    /// Part sizes of the forbidden complete multipartite pattern, where one
    /// exists.
    pub fn multipartite_sizes(&self) -> Option<Vec<usize>> {
        match self {
            FamilySpec::CompleteMultipartite(sizes) => Some(sizes.clone()),
            FamilySpec::Cocktail(d) => Some(vec![2; d / 2]),
            FamilySpec::OddCocktail(d) => {
                let mut v = vec![1];
                v.extend(std::iter::repeat_n(2, (d - 1) / 2));
                Some(v)
            }
            _ => None,
        }
    }

    /// True when `g` contains no member of the family as a subgraph.
    pub fn is_free(&self, g: &Graph) -> bool {
        match self {
            FamilySpec::HFamily { s, d } => is_h_family_free(g, *s, *d).unwrap(),
            FamilySpec::ExplicitSet(list) => list.iter().all(|h| !subgraph_embeds(h, g)),
            _ => {
                let sizes = self.multipartite_sizes().unwrap();
                !contains_complete_multipartite(g, &sizes)
            }
        }
    }
}

/// Does `h` embed into `g` as a (not necessarily induced) subgraph?
/// Backtracking over vertices of `h` in descending degree order.
pub fn subgraph_embeds(h: &Graph, g: &Graph) -> bool {
    if h.n() > g.n() || h.edge_count() > g.edge_count() {
        return false;
    }
    let mut order: Vec<usize> = (0..h.n()).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(h.degree(v)));
    let mut assigned = vec![usize::MAX; h.n()];
    fn rec(
        h: &Graph,
        g: &Graph,
        order: &[usize],
        pos: usize,
        assigned: &mut [usize],
        used: u64,
    ) -> bool {
        if pos == order.len() {
            return true;
        }
        let hv = order[pos];
        'cand: for gv in 0..g.n() {
            if used >> gv & 1 == 1 {
                continue;
            }
            if g.degree(gv) < h.degree(hv) {
                continue;
            }
            for prev in &order[..pos] {
                if h.has_edge(hv, *prev) && !g.has_edge(gv, assigned[*prev]) {
                    continue 'cand;
                }
            }
            assigned[hv] = gv;
            if rec(h, g, order, pos + 1, assigned, used | 1 << gv) {
                return true;
            }
            assigned[hv] = usize::MAX;
        }
        false
    }
    rec(h, g, &order, 0, &mut assigned, 0)
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum SearchMode {
    Ex,
    ExCc,
    EMin,
    RhoMin,
}

/// Exact search outcome: the optimum and every isomorphism class attaining
/// it, in the enumeration order.
#[derive(Clone, Debug)]
pub struct ExtremalResult {
    pub n: usize,
    pub mode: SearchMode,
    /// Edge count for the edge modes, spectral radius for `RhoMin`.
    pub value: f64,
    pub witnesses: Vec<Graph>,
    /// Spectral ties closer than the margin are reported together here.
    pub tie_warning: bool,
}

impl ExtremalResult {
    pub fn value_int(&self) -> usize {
        self.value as usize
    }
}

/// Caps for the exhaustive searches; override to push past the defaults.
#[derive(Copy, Clone, Debug)]
pub struct SearchCaps {
    pub edge_search: usize,
    pub spectral_search: usize,
}

impl Default for SearchCaps {
    fn default() -> Self {
        SearchCaps {
            edge_search: 9,
            spectral_search: 8,
        }
    }
}

/// Margin under which two spectral radii count as tied.
pub const RHO_TIE_MARGIN: f64 = 1e-7;

/// Maximum edges over all `family`-free graphs on `n` vertices, optionally
/// restricted to hosts whose complement is connected. Returns every
/// extremal class.
pub fn ex_bruteforce(
    n: usize,
    family: &FamilySpec,
    connected_complement: bool,
    caps: &SearchCaps,
) -> Result<ExtremalResult> {
    family.validate()?;
    if n > caps.edge_search {
        return Err(Error::CapExceeded(n, caps.edge_search));
    }
    let opts = EnumOptions {
        cap: caps.edge_search.max(crate::enumerate::DEFAULT_ENUM_CAP),
        ..Default::default()
    };
    let all = enumerate_graphs(n, &opts)?;
    let marked: Vec<(usize, bool)> = all
        .par_iter()
        .map(|g| {
            let ok = (!connected_complement || g.complement().is_connected()) && family.is_free(g);
            (g.edge_count(), ok)
        })
        .collect();
    let best = marked
        .iter()
        .filter(|(_, ok)| *ok)
        .map(|(e, _)| *e)
        .max()
        .ok_or(Error::EmptyFamily)?;
    let witnesses: Vec<Graph> = all
        .iter()
        .zip(&marked)
        .filter(|(_, (e, ok))| *ok && *e == best)
        .map(|(g, _)| g.clone())
        .collect();
    Ok(ExtremalResult {
        n,
        mode: if connected_complement {
            SearchMode::ExCc
        } else {
            SearchMode::Ex
        },
        value: best as f64,
        witnesses,
        tie_warning: false,
    })
}

/// The closed form for `ex(n, L_5)`: `floor(n^2/4 + n/2)`, one less when
/// `n ≡ 2 (mod 4)`.
pub fn ex_l5_closed_form(n: usize) -> Result<usize> {
    if n < 4 {
        return Err(Error::InvalidParameter {
            name: "n",
            value: n as i64,
            rule: "closed form stated for n >= 4",
        });
    }
    let v = (n * n) / 4 + n / 2;
    Ok(if n % 4 == 2 { v - 1 } else { v })
}

/// Connected n-vertex graphs with dissociation number `tau`, with their
/// dissociation values precomputed in parallel.
fn connected_with_tau(n: usize, tau: usize, cap: usize) -> Result<Vec<Graph>> {
    let opts = EnumOptions {
        connected_only: true,
        cap: cap.max(crate::enumerate::DEFAULT_ENUM_CAP),
        ..Default::default()
    };
    let all = enumerate_graphs(n, &opts)?;
    Ok(all
        .into_par_iter()
        .filter(|g| dissociation_number(g).unwrap().value == tau)
        .collect())
}

/// Minimum edge count over connected n-vertex graphs with dissociation
/// number `tau`, with all minimizer classes.
pub fn emin_search(n: usize, tau: usize, caps: &SearchCaps) -> Result<ExtremalResult> {
    if n > caps.edge_search {
        return Err(Error::CapExceeded(n, caps.edge_search));
    }
    let family = connected_with_tau(n, tau, caps.edge_search)?;
    let best = family
        .iter()
        .map(Graph::edge_count)
        .min()
        .ok_or(Error::EmptyFamily)?;
    let witnesses: Vec<Graph> = family
        .into_iter()
        .filter(|g| g.edge_count() == best)
        .collect();
    Ok(ExtremalResult {
        n,
        mode: SearchMode::EMin,
        value: best as f64,
        witnesses,
        tie_warning: false,
    })
}

/// Minimum spectral radius over connected n-vertex graphs with dissociation
/// number `tau`. Classes within `RHO_TIE_MARGIN` of the minimum are all
/// returned and flagged.
pub fn rhomin_search(n: usize, tau: usize, caps: &SearchCaps) -> Result<ExtremalResult> {
    if n > caps.spectral_search {
        return Err(Error::CapExceeded(n, caps.spectral_search));
    }
    let family = connected_with_tau(n, tau, caps.spectral_search)?;
    if family.is_empty() {
        return Err(Error::EmptyFamily);
    }
    let rhos: Vec<f64> = family.par_iter().map(spectral::rho).collect();
    let best = rhos.iter().copied().fold(f64::INFINITY, f64::min);
    let witnesses: Vec<Graph> = family
        .iter()
        .zip(&rhos)
        .filter(|(_, r)| **r <= best + RHO_TIE_MARGIN)
        .map(|(g, _)| g.clone())
        .collect();
    let tie_warning = witnesses.len() > 1;
    Ok(ExtremalResult {
        n,
        mode: SearchMode::RhoMin,
        value: best,
        witnesses,
        tie_warning,
    })
}

/// Maximum edges of a bipartite host with sides `a`, `b` containing no
/// `K_{s,t}` whose s-side lies in A and t-side in B. Exact search over
/// column-type multisets with branch and bound.
pub fn zarankiewicz_bipartite(a: usize, b: usize, s: usize, t: usize) -> Result<usize> {
    const CAP: usize = 7;
    if a > CAP || b > CAP {
        return Err(Error::CapExceeded(a.max(b), CAP));
    }
    if s == 0 || t == 0 || s > a || t > b {
        return Err(Error::Infeasible(format!(
            "pattern K({s},{t}) incompatible with host {a}x{b}"
        )));
    }
    // every s-subset of A may be covered by at most t-1 columns
    let subsets: Vec<u32> = (0u32..1 << a)
        .filter(|m| m.count_ones() as usize == s)
        .collect();
    let sub_index: Vec<Vec<usize>> = (0u32..1 << a)
        .map(|col| {
            subsets
                .iter()
                .enumerate()
                .filter(|(_, &sub)| sub & col == sub)
                .map(|(i, _)| i)
                .collect()
        })
        .collect();
    // column types ordered by decreasing popcount to find strong solutions
    // early; within a branch, later columns use types <= the current one
    let mut types: Vec<u32> = (0..1u32 << a).collect();
    types.sort_by_key(|c| std::cmp::Reverse(c.count_ones()));
    struct State<'a> {
        types: &'a [u32],
        sub_index: &'a [Vec<usize>],
        t: usize,
        best: usize,
    }
    fn rec(st: &mut State, cols_left: usize, from: usize, edges: usize, counts: &mut [usize]) {
        if edges > st.best {
            st.best = edges;
        }
        if cols_left == 0 {
            return;
        }
        // optimistic bound: all remaining columns as heavy as the heaviest
        // still-feasible type
        let mut bound_per_col = 0;
        for (i, &ty) in st.types.iter().enumerate().skip(from) {
            if st.sub_index[ty as usize]
                .iter()
                .all(|&si| counts[si] + 1 < st.t)
            {
                bound_per_col = ty.count_ones() as usize;
                // types are sorted by popcount, so the first feasible from
                // position `from` gives the max
                let _ = i;
                break;
            }
        }
        if edges + cols_left * bound_per_col <= st.best {
            return;
        }
        for i in from..st.types.len() {
            let ty = st.types[i];
            let idx = &st.sub_index[ty as usize];
            if idx.iter().any(|&si| counts[si] + 1 >= st.t) {
                continue;
            }
            for &si in idx {
                counts[si] += 1;
            }
            rec(
                st,
                cols_left - 1,
                i,
                edges + ty.count_ones() as usize,
                counts,
            );
            for &si in idx {
                counts[si] -= 1;
            }
        }
    }
    let mut counts = vec![0usize; subsets.len()];
    let mut st = State {
        types: &types,
        sub_index: &sub_index,
        t,
        best: 0,
    };
    rec(&mut st, b, 0, 0, &mut counts);
    Ok(st.best)
}

/// The Kővári–Sós–Turán comparison value `((t-1)^{1/s} / 2) n^{2-1/s}`
/// (without the vanishing term).
pub fn kst_bound(n: usize, s: usize, t: usize) -> f64 {
    let (n, s, t) = (n as f64, s as f64, t as f64);
    (t - 1.0).powf(1.0 / s) / 2.0 * n.powf(2.0 - 1.0 / s)
}

/// The comparison value of the bipartite-host lemma: `(t-1)^{1/s} n^{2-1/s}`
/// with `n = a + b`.
pub fn zarankiewicz_lemma_bound(a: usize, b: usize, s: usize, t: usize) -> f64 {
    let n = (a + b) as f64;
    let (s, t) = (s as f64, t as f64);
    (t - 1.0).powf(1.0 / s) * n.powf(2.0 - 1.0 / s)
}

/// Predicted edge count of the extremal join: cross pairs plus the exact
/// in-part extremal counts, first part forbidding `K_2(r1, r2)`, the others
/// `K_2(1, r2)`.
pub fn predicted_join_edges(
    part_sizes: &[usize],
    r1: usize,
    r2: usize,
    caps: &SearchCaps,
) -> Result<usize> {
    if part_sizes.is_empty() {
        return Err(Error::Infeasible("no parts".into()));
    }
    if r1 > r2 {
        return Err(Error::InvalidParameter {
            name: "r1",
            value: r1 as i64,
            rule: "needs r1 <= r2",
        });
    }
    let cross: usize = {
        let total: usize = part_sizes.iter().sum();
        let squares: usize = part_sizes.iter().map(|s| s * s).sum();
        (total * total - squares) / 2
    };
    let part_ex = |ni: usize, sizes: Vec<usize>| -> Result<usize> {
        if ni > caps.edge_search {
            return Err(Error::CapExceeded(ni, caps.edge_search));
        }
        // a pattern wider than the part can never embed
        if sizes.iter().sum::<usize>() > ni {
            return Ok(ni * (ni - 1) / 2);
        }
        Ok(ex_bruteforce(ni, &FamilySpec::CompleteMultipartite(sizes), false, caps)?.value_int())
    };
    let mut total = cross + part_ex(part_sizes[0], vec![r1, r2])?;
    for &ni in &part_sizes[1..] {
        total += part_ex(ni, vec![1, r2])?;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::are_isomorphic;
    use crate::constructions::{minimizer_family, turan_family};

    fn l5() -> FamilySpec {
        FamilySpec::OddCocktail(5)
    }

    #[test]
    fn ex_l5_small_orders() {
        let caps = SearchCaps::default();
        let pattern = crate::constructions::odd_cocktail_party(5).unwrap();
        for (n, want, classes) in [(5, 8, 1), (6, 11, 2), (7, 15, 1)] {
            let r = ex_bruteforce(n, &l5(), false, &caps).unwrap();
            assert_eq!(r.value_int(), want, "n={n}");
            assert_eq!(r.witnesses.len(), classes, "n={n}");
            // witnesses are the Turán family members
            let family = turan_family(n, 2).unwrap();
            for w in &r.witnesses {
                assert!(family.iter().any(|m| are_isomorphic(&m.graph, w).unwrap()));
                // independent freeness re-check through the generic
                // subgraph embedder
                assert!(!subgraph_embeds(&pattern, w));
            }
        }
    }

    #[test]
    fn closed_form_matches_brute_force() {
        let caps = SearchCaps::default();
        for n in 4..=7 {
            assert_eq!(
                ex_l5_closed_form(n).unwrap(),
                ex_bruteforce(n, &l5(), false, &caps).unwrap().value_int(),
                "n={n}"
            );
        }
        assert_eq!(ex_l5_closed_form(8).unwrap(), 20);
        assert_eq!(ex_l5_closed_form(9).unwrap(), 24);
        assert!(ex_l5_closed_form(3).is_err());
    }

    #[test]
    fn classical_turan_k3() {
        let caps = SearchCaps::default();
        let r = ex_bruteforce(
            4,
            &FamilySpec::CompleteMultipartite(vec![1, 1, 1]),
            false,
            &caps,
        )
        .unwrap();
        assert_eq!(r.value_int(), 4);
        assert_eq!(r.witnesses.len(), 1);
        assert!(are_isomorphic(&r.witnesses[0], &Graph::cycle(4).unwrap()).unwrap());
    }

    #[test]
    fn emin_small() {
        let caps = SearchCaps::default();
        let r = emin_search(6, 4, &caps).unwrap();
        assert_eq!(r.value_int(), 5);
        let t64 = minimizer_family(6, 2).unwrap();
        for m in &t64 {
            assert!(r.witnesses.iter().any(|w| are_isomorphic(w, m).unwrap()));
        }
        // tau = 2 minimizer at even n is the cocktail party graph
        let r2 = emin_search(6, 2, &caps).unwrap();
        assert_eq!(r2.witnesses.len(), 1);
        assert!(are_isomorphic(
            &r2.witnesses[0],
            &crate::constructions::cocktail_party(6).unwrap()
        )
        .unwrap());
    }

    #[test]
    fn rhomin_small() {
        let caps = SearchCaps::default();
        let r5 = rhomin_search(5, 4, &caps).unwrap();
        assert_eq!(r5.witnesses.len(), 1);
        assert!(are_isomorphic(&r5.witnesses[0], &Graph::path(5).unwrap()).unwrap());
        assert!((r5.value - 3f64.sqrt()).abs() < 1e-9);
        let r7 = rhomin_search(7, 4, &caps).unwrap();
        assert_eq!(r7.witnesses.len(), 1);
        assert!(are_isomorphic(&r7.witnesses[0], &Graph::cycle(7).unwrap()).unwrap());
        assert!((r7.value - 2.0).abs() < 1e-9);
    }

    #[test]
    fn caps_are_enforced() {
        let caps = SearchCaps::default();
        assert!(matches!(
            rhomin_search(9, 4, &caps),
            Err(Error::CapExceeded(9, 8))
        ));
        assert!(matches!(
            ex_bruteforce(10, &l5(), false, &caps),
            Err(Error::CapExceeded(10, 9))
        ));
    }

    #[test]
    fn empty_family_reported() {
        let caps = SearchCaps::default();
        // no connected graph on 5 vertices has dissociation number 2
        // (complete-ish graphs have tau 2... K5 does); tau = 1 is impossible
        assert!(matches!(emin_search(5, 1, &caps), Err(Error::EmptyFamily)));
    }

    #[test]
    fn zarankiewicz_values() {
        assert_eq!(zarankiewicz_bipartite(3, 3, 2, 2).unwrap(), 6);
        assert_eq!(zarankiewicz_bipartite(3, 3, 1, 1).unwrap(), 0);
        // s=1: forbid a row of degree t; t=1: forbid a column of size s
        assert_eq!(zarankiewicz_bipartite(4, 5, 1, 2).unwrap(), 4);
        assert_eq!(zarankiewicz_bipartite(4, 5, 2, 1).unwrap(), 5);
        // classical z(4,4;2,2) = 9, z(5,5;2,2) = 12, z(6,6;2,2) = 16
        assert_eq!(zarankiewicz_bipartite(4, 4, 2, 2).unwrap(), 9);
        assert_eq!(zarankiewicz_bipartite(5, 5, 2, 2).unwrap(), 12);
        assert_eq!(zarankiewicz_bipartite(6, 6, 2, 2).unwrap(), 16);
        assert!(zarankiewicz_bipartite(8, 3, 2, 2).is_err());
    }

    #[test]
    fn kst_bound_values() {
        assert!((kst_bound(9, 2, 2) - 13.5).abs() < 1e-12);
        assert!((kst_bound(4, 2, 2) - 4.0).abs() < 1e-12);
        // monotone in t
        assert!(kst_bound(9, 2, 3) > kst_bound(9, 2, 2));
        // brute force ex(n, C4) stays under it
        let caps = SearchCaps::default();
        let fam = FamilySpec::CompleteMultipartite(vec![2, 2]);
        for n in [4, 7, 9] {
            let ex = ex_bruteforce(n, &fam, false, &caps).unwrap().value_int();
            assert!(ex as f64 <= kst_bound(n, 2, 2) + 1e-9, "n={n}");
        }
    }

    #[test]
    fn predicted_join_reproduces_ex() {
        let caps = SearchCaps::default();
        assert_eq!(predicted_join_edges(&[3, 3], 1, 2, &caps).unwrap(), 11);
        assert_eq!(predicted_join_edges(&[4, 4], 1, 2, &caps).unwrap(), 20);
        // single part reduces to plain ex
        let single = predicted_join_edges(&[5], 1, 2, &caps).unwrap();
        let ex = ex_bruteforce(
            5,
            &FamilySpec::CompleteMultipartite(vec![1, 2]),
            false,
            &caps,
        )
        .unwrap()
        .value_int();
        assert_eq!(single, ex);
    }

    #[test]
    fn explicit_set_family() {
        let fam = FamilySpec::ExplicitSet(vec![Graph::cycle(4).unwrap()]);
        assert!(fam.is_free(&Graph::path(5).unwrap()));
        assert!(!fam.is_free(&Graph::complete(4).unwrap()));
        // subgraph (not induced): C4 inside K4
        assert!(subgraph_embeds(
            &Graph::cycle(4).unwrap(),
            &Graph::complete(4).unwrap()
        ));
        assert!(!subgraph_embeds(
            &Graph::complete(4).unwrap(),
            &Graph::cycle(4).unwrap()
        ));
    }

    #[test]
    fn h_family_search_matches_l5_for_d1_s4() {
        let caps = SearchCaps::default();
        for n in [5, 6, 7] {
            let via_h = ex_bruteforce(n, &FamilySpec::HFamily { s: 4, d: 1 }, false, &caps)
                .unwrap()
                .value_int();
            let via_l5 = ex_bruteforce(n, &l5(), false, &caps).unwrap().value_int();
            assert_eq!(via_h, via_l5, "n={n}");
        }
    }
}
