//! Closed-form bounds on the dissociation number and the spectral radius,
//! each carrying its own hypothesis check.

use crate::error::{Error, Result};
use crate::extremal::{ex_bruteforce, FamilySpec, SearchCaps};
use crate::graph::Graph;
use crate::spectral::spectrum;

/// A bound evaluation; `value` is meaningful only when `applicable` holds.
#[derive(Clone, Debug)]
pub struct BoundResult {
    pub name: &'static str,
    pub value: f64,
    pub applicable: bool,
    pub hypothesis_note: String,
}

/// Hoffman-type upper bound for regular graphs:
/// `tau <= n (1 - lambda_min) / (k - lambda_min)`.
pub fn hoffman_type_upper(g: &Graph) -> BoundResult {
    match g.regularity() {
        Some(k) if k > 0 => {
            let s = spectrum(g);
            let n = g.n() as f64;
            BoundResult {
                name: "hoffman_type_upper",
                value: n * (1.0 - s.lambda_min) / (k as f64 - s.lambda_min),
                applicable: true,
                hypothesis_note: format!("{k}-regular, lambda_min = {:.6}", s.lambda_min),
            }
        }
        Some(_) => BoundResult {
            name: "hoffman_type_upper",
            value: f64::NAN,
            applicable: false,
            hypothesis_note: "edgeless graph: k - lambda_min vanishes".into(),
        },
        None => BoundResult {
            name: "hoffman_type_upper",
            value: f64::NAN,
            applicable: false,
            hypothesis_note: "not regular".into(),
        },
    }
}

/// Probabilistic lower bound:
/// `tau >= 2 ceil( sum_{uv in E} 1 / ((d(u)+d(v)) Delta - 1) )`.
pub fn probabilistic_lower(g: &Graph) -> Result<BoundResult> {
    if g.edge_count() == 0 {
        return Err(Error::NoEdges);
    }
    let delta = g.max_degree() as f64;
    let sum: f64 = g
        .edges()
        .iter()
        .map(|&(u, v)| 1.0 / ((g.degree(u) + g.degree(v)) as f64 * delta - 1.0))
        .sum();
    Ok(BoundResult {
        name: "probabilistic_lower",
        value: 2.0 * sum.ceil(),
        applicable: true,
        hypothesis_note: format!("sum over {} edges = {sum:.6}", g.edge_count()),
    })
}

/// Complement-freeness upper bound: when the complement avoids `CP_d`
/// (even d > 2) or `L_d` (odd d > 3), the dissociation number is at most
/// `d - 1`.
pub fn complement_free_upper(g: &Graph, d: usize) -> Result<BoundResult> {
    let family = if d.is_multiple_of(2) {
        if d <= 2 {
            return Err(Error::InvalidParameter {
                name: "d",
                value: d as i64,
                rule: "even case needs d > 2",
            });
        }
        FamilySpec::Cocktail(d)
    } else {
        if d <= 3 {
            return Err(Error::InvalidParameter {
                name: "d",
                value: d as i64,
                rule: "odd case needs d > 3",
            });
        }
        FamilySpec::OddCocktail(d)
    };
    let free = family.is_free(&g.complement());
    Ok(BoundResult {
        name: "complement_free_upper",
        value: if free { (d - 1) as f64 } else { f64::NAN },
        applicable: free,
        hypothesis_note: if free {
            format!("complement avoids the d = {d} pattern")
        } else {
            format!("complement contains the d = {d} pattern")
        },
    })
}

/// Everything the connected-complement spectral lower bound evaluates.
#[derive(Clone, Debug)]
pub struct SpectralLowerParts {
    pub via_h_family: f64,
    pub via_multipartite: f64,
    pub ex_cc_h_family: usize,
    pub ex_cc_multipartite: usize,
    /// The normalized residue `a` with `a ≡ s+1 (mod d+1)`, `1 <= a <= d+1`.
    pub residue: usize,
}

/// The multipartite relaxation pattern: `K_{ceil((s+1)/(d+1))}(a, d+1, ...,
/// d+1)` with the residue `a` normalized into `1..=d+1`.
pub fn multipartite_relaxation_sizes(s: usize, d: usize) -> Vec<usize> {
    let parts = (s + 1).div_ceil(d + 1);
    let mut a = (s + 1) % (d + 1);
    if a == 0 {
        a = d + 1;
    }
    let mut sizes = vec![a];
    sizes.extend(std::iter::repeat_n(d + 1, parts - 1));
    sizes
}

/// Spectral lower bound for connected graphs with d-independence number s:
/// `rho >= 2 (C(n,2) - ex_cc(n, family)) / n`, evaluated both through the
/// H-family and through its complete-multipartite relaxation. The stronger
/// (H-family) value is returned; both appear in `parts`.
pub fn spectral_lower_from_excc(
    n: usize,
    s: usize,
    d: usize,
    caps: &SearchCaps,
) -> Result<(BoundResult, SpectralLowerParts)> {
    if s <= d {
        return Err(Error::InvalidParameter {
            name: "s",
            value: s as i64,
            rule: "needs s > d >= 0",
        });
    }
    let ex_h = ex_bruteforce(n, &FamilySpec::HFamily { s, d }, true, caps)?.value_int();
    let sizes = multipartite_relaxation_sizes(s, d);
    let ex_mp = ex_bruteforce(
        n,
        &FamilySpec::CompleteMultipartite(sizes.clone()),
        true,
        caps,
    )?
    .value_int();
    let pairs = (n * (n - 1) / 2) as f64;
    let via_h = 2.0 * (pairs - ex_h as f64) / n as f64;
    let via_mp = 2.0 * (pairs - ex_mp as f64) / n as f64;
    let parts = SpectralLowerParts {
        via_h_family: via_h,
        via_multipartite: via_mp,
        ex_cc_h_family: ex_h,
        ex_cc_multipartite: ex_mp,
        residue: sizes[0],
    };
    Ok((
        BoundResult {
            name: "spectral_lower_from_excc",
            value: via_h,
            applicable: true,
            hypothesis_note: format!("ex_cc(H-family) = {ex_h}, ex_cc(K{sizes:?}) = {ex_mp}"),
        },
        parts,
    ))
}

/// Quick re-check that a graph really lies in the bound's target family.
pub fn has_d_independence(g: &Graph, s: usize, d: usize) -> Result<bool> {
    Ok(crate::solvers::d_independence_number(g, d)?.value == s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::cocktail_party;
    use crate::solvers::dissociation_number;

    #[test]
    fn hoffman_tight_on_complete_graphs() {
        for n in [3, 4, 6, 8] {
            let g = Graph::complete(n).unwrap();
            let b = hoffman_type_upper(&g);
            assert!(b.applicable);
            assert!((b.value - 2.0).abs() < 1e-9, "n={n}");
            assert_eq!(dissociation_number(&g).unwrap().value, 2);
        }
    }

    #[test]
    fn hoffman_on_cp8_and_c7() {
        let cp8 = cocktail_party(8).unwrap();
        let b = hoffman_type_upper(&cp8);
        assert!((b.value - 3.0).abs() < 1e-9);
        assert!(b.value >= dissociation_number(&cp8).unwrap().value as f64);
        let c7 = Graph::cycle(7).unwrap();
        let b7 = hoffman_type_upper(&c7);
        assert!((b7.value - 5.159) < 0.01 && b7.value > 5.15);
        assert!(b7.value >= 4.0);
        // inapplicable on irregular graphs
        assert!(!hoffman_type_upper(&Graph::path(4).unwrap()).applicable);
    }

    #[test]
    fn probabilistic_examples() {
        let k2 = Graph::complete(2).unwrap();
        assert_eq!(probabilistic_lower(&k2).unwrap().value, 2.0);
        let c7 = Graph::cycle(7).unwrap();
        assert_eq!(probabilistic_lower(&c7).unwrap().value, 2.0);
        let k4 = Graph::complete(4).unwrap();
        assert_eq!(probabilistic_lower(&k4).unwrap().value, 2.0);
        assert!(probabilistic_lower(&Graph::empty(3).unwrap()).is_err());
    }

    #[test]
    fn complement_free_gate() {
        let cp6 = cocktail_party(6).unwrap();
        let b = complement_free_upper(&cp6, 4).unwrap();
        assert!(b.applicable);
        assert_eq!(b.value, 3.0);
        assert!(dissociation_number(&cp6).unwrap().value as f64 <= b.value);
        // complement of the empty graph is complete: contains every pattern
        let e6 = Graph::empty(6).unwrap();
        assert!(!complement_free_upper(&e6, 4).unwrap().applicable);
        assert!(complement_free_upper(&e6, 2).is_err());
        assert!(complement_free_upper(&e6, 3).is_err());
    }

    #[test]
    fn residue_normalization() {
        assert_eq!(multipartite_relaxation_sizes(4, 1), vec![1, 2, 2]);
        assert_eq!(multipartite_relaxation_sizes(4, 2), vec![2, 3]);
        assert_eq!(multipartite_relaxation_sizes(5, 1), vec![2, 2, 2]);
        assert_eq!(multipartite_relaxation_sizes(3, 1), vec![2, 2]);
    }

    #[test]
    fn spectral_lower_small_instance() {
        let caps = SearchCaps::default();
        let (bound, parts) = spectral_lower_from_excc(6, 4, 1, &caps).unwrap();
        assert!(bound.applicable);
        // the family bound dominates the relaxation
        assert!(parts.via_h_family >= parts.via_multipartite - 1e-12);
        // and for d = 1 the two coincide
        assert!((parts.via_h_family - parts.via_multipartite).abs() < 1e-12);
    }
}
