//! Deterministic dense symmetric eigensolving, equitable partitions and
//! quotient matrices, exact integer characteristic polynomials, and the
//! closed-form spectral values for aligned CP-cycles.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexPartition};

/// Full eigendecomposition data of an adjacency matrix.
#[derive(Clone, Debug)]
pub struct Spectrum {
    /// Ascending.
    pub eigenvalues: Vec<f64>,
    pub rho: f64,
    pub lambda_min: f64,
    /// Eigenvector of `rho`, unit norm, sign fixed so the entry sum is
    /// positive; entrywise positive for connected graphs.
    pub principal_vector: Vec<f64>,
    /// `‖A x − ρ x‖∞` for the returned principal pair.
    pub residual: f64,
}

/// Householder reduction of a symmetric matrix to tridiagonal form with
/// accumulated transformations (classic tred2).
fn tred2(n: usize, z: &mut [f64], d: &mut [f64], e: &mut [f64]) {
    for i in (1..n).rev() {
        let l = i - 1;
        let mut h = 0.0;
        if l > 0 {
            let scale: f64 = (0..=l).map(|k| z[i * n + k].abs()).sum();
            if scale == 0.0 {
                e[i] = z[i * n + l];
            } else {
                for k in 0..=l {
                    z[i * n + k] /= scale;
                    h += z[i * n + k] * z[i * n + k];
                }
                let mut f = z[i * n + l];
                let g = if f >= 0.0 { -h.sqrt() } else { h.sqrt() };
                e[i] = scale * g;
                h -= f * g;
                z[i * n + l] = f - g;
                f = 0.0;
                for j in 0..=l {
                    z[j * n + i] = z[i * n + j] / h;
                    let mut g = 0.0;
                    for k in 0..=j {
                        g += z[j * n + k] * z[i * n + k];
                    }
                    for k in (j + 1)..=l {
                        g += z[k * n + j] * z[i * n + k];
                    }
                    e[j] = g / h;
                    f += e[j] * z[i * n + j];
                }
                let hh = f / (h + h);
                for j in 0..=l {
                    let f = z[i * n + j];
                    let g = e[j] - hh * f;
                    e[j] = g;
                    for k in 0..=j {
                        z[j * n + k] -= f * e[k] + g * z[i * n + k];
                    }
                }
            }
        } else {
            e[i] = z[i * n + l];
        }
        d[i] = h;
    }
    d[0] = 0.0;
    e[0] = 0.0;
    for i in 0..n {
        let l = i;
        if d[i] != 0.0 {
            for j in 0..l {
                let mut g = 0.0;
                for k in 0..l {
                    g += z[i * n + k] * z[k * n + j];
                }
                for k in 0..l {
                    z[k * n + j] -= g * z[k * n + i];
                }
            }
        }
        d[i] = z[i * n + i];
        z[i * n + i] = 1.0;
        for j in 0..l {
            z[j * n + i] = 0.0;
            z[i * n + j] = 0.0;
        }
    }
}

/// Implicit-shift QL iteration on a tridiagonal matrix, updating the
/// eigenvector matrix in place (classic tql2).
fn tql2(n: usize, d: &mut [f64], e: &mut [f64], z: &mut [f64]) {
    for i in 1..n {
        e[i - 1] = e[i];
    }
    e[n - 1] = 0.0;
    for l in 0..n {
        let mut iter = 0;
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= f64::EPSILON * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iter += 1;
            assert!(iter <= 50, "QL iteration failed to converge");
            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let mut r = g.hypot(1.0);
            g = d[m] - d[l] + e[l] / (g + r.copysign(g));
            let (mut s, mut c) = (1.0, 1.0);
            let mut p = 0.0;
            let mut underflow = false;
            for i in (l..m).rev() {
                let mut f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == 0.0 {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
                for k in 0..n {
                    f = z[k * n + i + 1];
                    z[k * n + i + 1] = s * z[k * n + i] + c * f;
                    z[k * n + i] = c * z[k * n + i] - s * f;
                }
            }
            if underflow {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
}

/// Eigenvalues (ascending) and the orthonormal eigenvector columns of a
/// dense symmetric matrix given row-major.
pub fn symmetric_eigen(n: usize, a: &[f64]) -> (Vec<f64>, Vec<f64>) {
    assert_eq!(a.len(), n * n);
    if n == 1 {
        return (vec![a[0]], vec![1.0]);
    }
    let mut z = a.to_vec();
    let mut d = vec![0.0; n];
    let mut e = vec![0.0; n];
    tred2(n, &mut z, &mut d, &mut e);
    tql2(n, &mut d, &mut e, &mut z);
    // sort ascending, carrying eigenvector columns
    let mut idx: Vec<usize> = (0..n).collect();
    idx.sort_by(|&i, &j| d[i].total_cmp(&d[j]));
    let vals: Vec<f64> = idx.iter().map(|&i| d[i]).collect();
    let mut vecs = vec![0.0; n * n];
    for (newc, &oldc) in idx.iter().enumerate() {
        for r in 0..n {
            vecs[r * n + newc] = z[r * n + oldc];
        }
    }
    (vals, vecs)
}

pub fn adjacency_matrix(g: &Graph) -> Vec<f64> {
    let n = g.n();
    let mut a = vec![0.0; n * n];
    for u in 0..n {
        for v in g.neighbors(u).iter() {
            a[u * n + v] = 1.0;
        }
    }
    a
}

/// Full spectrum of the adjacency matrix. Deterministic: identical output
/// for identical input on the same platform.
pub fn spectrum(g: &Graph) -> Spectrum {
    let n = g.n();
    let a = adjacency_matrix(g);
    let (vals, vecs) = symmetric_eigen(n, &a);
    let rho = vals[n - 1];
    let mut principal: Vec<f64> = (0..n).map(|r| vecs[r * n + (n - 1)]).collect();
    if principal.iter().sum::<f64>() < 0.0 {
        for x in &mut principal {
            *x = -*x;
        }
    }
    let norm = principal.iter().map(|x| x * x).sum::<f64>().sqrt();
    for x in &mut principal {
        *x /= norm;
    }
    let mut residual = 0.0f64;
    for r in 0..n {
        let ax: f64 = g.neighbors(r).iter().map(|c| principal[c]).sum();
        residual = residual.max((ax - rho * principal[r]).abs());
    }
    Spectrum {
        lambda_min: vals[0],
        rho,
        eigenvalues: vals,
        principal_vector: principal,
        residual,
    }
}

/// Spectral radius only.
pub fn rho(g: &Graph) -> f64 {
    spectrum(g).rho
}

/// A quotient matrix over an equitable partition; entry `(i,j)` is the
/// neighbor count in part `j` of every vertex of part `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientMatrix {
    k: usize,
    entries: Vec<i64>,
    part_sizes: Vec<usize>,
}

impl QuotientMatrix {
    /// A bare matrix with unit part sizes: fine for `char_poly` and
    /// `largest_root`, but `eigenvalues` needs the true sizes unless the
    /// matrix is already symmetric.
    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        Self::from_rows_with_sizes(rows, &vec![1; rows.len()])
    }

    /// A quotient with its originating part sizes, as needed for the
    /// similarity transform behind `eigenvalues`.
    pub fn from_rows_with_sizes(rows: &[Vec<i64>], part_sizes: &[usize]) -> Self {
        let k = rows.len();
        assert!(rows.iter().all(|r| r.len() == k));
        assert_eq!(part_sizes.len(), k);
        QuotientMatrix {
            k,
            entries: rows.iter().flatten().copied().collect(),
            part_sizes: part_sizes.to_vec(),
        }
    }

    pub fn size(&self) -> usize {
        self.k
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.k + j]
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        (0..self.k)
            .map(|i| (0..self.k).map(|j| self.entry(i, j)).collect())
            .collect()
    }

    /// All eigenvalues, ascending. The quotient of an equitable partition
    /// is diagonally similar (through the part sizes) to a symmetric
    /// matrix, so the spectrum is real. Panics when the stored part sizes
    /// do not symmetrize the matrix.
    pub fn eigenvalues(&self) -> Vec<f64> {
        let k = self.k;
        let mut sym = vec![0.0; k * k];
        for i in 0..k {
            for j in 0..k {
                sym[i * k + j] = self.entry(i, j) as f64
                    * (self.part_sizes[i] as f64 / self.part_sizes[j] as f64).sqrt();
            }
        }
        for i in 0..k {
            for j in (i + 1)..k {
                let diff = (sym[i * k + j] - sym[j * k + i]).abs();
                assert!(
                    diff < 1e-9,
                    "part sizes do not symmetrize the quotient; \
                     use from_rows_with_sizes with the true sizes"
                );
                // erase rounding noise from the square roots
                let m = 0.5 * (sym[i * k + j] + sym[j * k + i]);
                sym[i * k + j] = m;
                sym[j * k + i] = m;
            }
        }
        symmetric_eigen(k, &sym).0
    }

    pub fn rho(&self) -> f64 {
        *self
            .eigenvalues()
            .last()
            .expect("quotient matrix is nonempty")
    }
}

/// True when every vertex of part `i` has the same number of neighbors in
/// part `j`, for all `i, j`. Parts must be nonempty.
pub fn is_equitable(g: &Graph, p: &VertexPartition) -> bool {
    quotient(g, p).is_ok()
}

/// The quotient matrix of an equitable partition (strict mode).
pub fn quotient(g: &Graph, p: &VertexPartition) -> Result<QuotientMatrix> {
    if p.order() != g.n() {
        return Err(Error::NotAPartition);
    }
    let parts = p.parts();
    if parts.iter().any(|s| s.is_empty()) {
        return Err(Error::Infeasible("quotient over an empty part".into()));
    }
    let k = parts.len();
    let mut entries = vec![0i64; k * k];
    for (i, pi) in parts.iter().enumerate() {
        for (j, pj) in parts.iter().enumerate() {
            let mut it = pi.iter();
            let first = (g.neighbors(it.next().unwrap()).bits() & pj.bits()).count_ones();
            for v in it {
                if (g.neighbors(v).bits() & pj.bits()).count_ones() != first {
                    return Err(Error::NotEquitable);
                }
            }
            entries[i * k + j] = first as i64;
        }
    }
    Ok(QuotientMatrix {
        k,
        entries,
        part_sizes: parts.iter().map(|s| s.len()).collect(),
    })
}

/// Lenient mode: row-averaged quotient for any partition into nonempty
/// parts. Diagnostics only; verification paths use the strict quotient.
pub fn averaged_quotient(g: &Graph, p: &VertexPartition) -> Result<Vec<Vec<f64>>> {
    if p.order() != g.n() {
        return Err(Error::NotAPartition);
    }
    let parts = p.parts();
    if parts.iter().any(|s| s.is_empty()) {
        return Err(Error::Infeasible("quotient over an empty part".into()));
    }
    Ok(parts
        .iter()
        .map(|pi| {
            parts
                .iter()
                .map(|pj| {
                    let total: u32 = pi
                        .iter()
                        .map(|v| (g.neighbors(v).bits() & pj.bits()).count_ones())
                        .sum();
                    total as f64 / pi.len() as f64
                })
                .collect()
        })
        .collect())
}

/// Exact integer characteristic polynomial, coefficients from the leading
/// monomial downward.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharPoly {
    coeffs: Vec<i128>,
}

pub const CHAR_POLY_MAX_K: usize = 8;

impl CharPoly {
    pub fn new(coeffs: Vec<i128>) -> Self {
        assert!(!coeffs.is_empty() && coeffs[0] == 1, "monic input expected");
        CharPoly { coeffs }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Leading coefficient first.
    pub fn coefficients(&self) -> &[i128] {
        &self.coeffs
    }

    pub fn eval(&self, x: f64) -> f64 {
        self.coeffs.iter().fold(0.0, |acc, &c| acc * x + c as f64)
    }

    fn derivative_eval(&self, x: f64) -> f64 {
        let d = self.degree();
        self.coeffs[..d]
            .iter()
            .enumerate()
            .fold(0.0, |acc, (i, &c)| acc * x + (d - i) as f64 * c as f64)
    }
}

/// Characteristic polynomial of a quotient matrix by the Faddeev–LeVerrier
/// recurrence in exact 128-bit integer arithmetic.
pub fn char_poly(q: &QuotientMatrix) -> Result<CharPoly> {
    let k = q.size();
    if k > CHAR_POLY_MAX_K {
        return Err(Error::CapExceeded(k, CHAR_POLY_MAX_K));
    }
    let a: Vec<i128> = q.entries.iter().map(|&x| x as i128).collect();
    let mut m: Vec<i128> = (0..k * k).map(|i| (i % (k + 1) == 0) as i128).collect();
    let mut coeffs = vec![1i128];
    for step in 1..=k {
        // am = a * m
        let mut am = vec![0i128; k * k];
        for i in 0..k {
            for l in 0..k {
                let ail = a[i * k + l];
                if ail != 0 {
                    for j in 0..k {
                        am[i * k + j] += ail * m[l * k + j];
                    }
                }
            }
        }
        let trace: i128 = (0..k).map(|i| am[i * (k + 1)]).sum();
        debug_assert_eq!(trace % step as i128, 0, "Faddeev-LeVerrier divisibility");
        let c = -trace / step as i128;
        coeffs.push(c);
        for i in 0..k {
            am[i * (k + 1)] += c;
        }
        m = am;
    }
    Ok(CharPoly { coeffs })
}

/// Largest real root, refined to absolute tolerance 1e-12. Starts at the
/// Cauchy bound; for the real-rooted polynomials produced by `char_poly`,
/// Newton descent from above the top root is monotone, and a final
/// bisection pass certifies the bracket.
pub fn largest_root(p: &CharPoly) -> f64 {
    let cauchy = 1.0
        + p.coefficients()
            .iter()
            .skip(1)
            .map(|c| (*c as f64).abs())
            .fold(0.0, f64::max);
    let mut x = cauchy;
    for _ in 0..200 {
        let f = p.eval(x);
        let df = p.derivative_eval(x);
        if df.abs() < 1e-300 {
            break;
        }
        let step = f / df;
        x -= step;
        if step.abs() < 1e-13 {
            break;
        }
    }
    // certify with a short bisection around the Newton fixpoint
    let (mut lo, mut hi) = (x - 1e-6, x + 1e-6);
    if p.eval(lo) < 0.0 && p.eval(hi) > 0.0 {
        for _ in 0..60 {
            let mid = 0.5 * (lo + hi);
            if p.eval(mid) < 0.0 {
                lo = mid;
            } else {
                hi = mid;
            }
            if hi - lo < 1e-13 {
                break;
            }
        }
        x = 0.5 * (lo + hi);
    }
    x
}

/// Spectral radius of the aligned CP-cycle with blocks `CP_m`:
/// `(m - 3 + sqrt((m-1)^2 + 8)) / 2`.
pub fn cp_cycle_rho_closed_form(m: f64) -> Result<f64> {
    if m < 4.0 {
        return Err(Error::InvalidParameter {
            name: "m",
            value: m as i64,
            rule: "closed form needs m >= 4",
        });
    }
    Ok((m - 3.0 + ((m - 1.0) * (m - 1.0) + 8.0).sqrt()) / 2.0)
}

/// Upper comparison value `n/k - 2 + 2k/(n-k)` from the CP-cycle analysis.
pub fn cp_cycle_rho_bound(n: usize, k: usize) -> f64 {
    let (n, k) = (n as f64, k as f64);
    n / k - 2.0 + 2.0 * k / (n - k)
}
