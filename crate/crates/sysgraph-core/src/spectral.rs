//! Normalized adjacency spectra, threshold ranks, and the threshold-rank
//! lower bound for clique products.
//!
//! The spectral side of the library is deliberately small: a dense
//! symmetric eigensolver (Householder tridiagonalization followed by
//! implicit-shift QL, the classic EISPACK pair) for graphs up to 4096
//! vertices, an independent inertia-counting route through a symmetric
//! indefinite factorization for cross-checking threshold ranks, and the
//! exact rational Rayleigh quotient of copy indicators — the one spectral
//! quantity that needs no floating point at all.

use thiserror::Error;

use crate::constructions::{clique_product, clique_size_sequence, ConstructionError};
use crate::graph::ColoredGraph;
use crate::Rational;

/// Dense routines refuse graphs larger than this.
pub const DENSE_LIMIT: u32 = 4096;

/// Residual guarantee of the dense eigensolver.
pub const SOLVER_TOLERANCE: f64 = 1e-9;

/// Default slack when counting eigenvalues against a threshold.
pub const DEFAULT_TIE_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpectralError {
    #[error("dense spectral routines handle at most {max} vertices (got {n})")]
    TooLarge { n: u32, max: u32 },
    #[error("epsilon = {0} is outside (0, 2]")]
    EpsilonOutOfRange(f64),
    #[error("tie tolerance must be non-negative (got {0})")]
    NegativeTieTolerance(f64),
    #[error("a graph with {n} vertices cannot be a {d}-dimensional clique product")]
    NotCliqueProduct { n: u32, d: u32 },
    #[error("depth {k} is not in 0..{d}")]
    BadDepth { d: u32, k: u32 },
    #[error("copy index {j} is out of range: depth {k} has {copies} copies")]
    BadCopyIndex { k: u32, j: u64, copies: u64 },
    #[error("the theorem requires d > 2 and 0 < k <= d/2 (got d = {d}, k = {k})")]
    BadParameters { d: u32, k: u32 },
    #[error("spectrum has {found} eigenvalues but the {d}-dimensional clique product has {expected} vertices")]
    SpectrumMismatch { found: usize, d: u32, expected: u64 },
    #[error("eigenvalue iteration failed to converge at index {0}")]
    NoConvergence(usize),
    #[error(transparent)]
    Construction(#[from] ConstructionError),
}

/// Which route produced a spectral result.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Solver {
    /// Full dense diagonalization.
    DenseFull,
    /// Eigenvalue counting via the inertia of a shifted matrix.
    InertiaCount,
}

/// All eigenvalues of the normalized adjacency matrix A/d, descending.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectrumReport {
    pub num_vertices: u32,
    pub dimension: u32,
    /// Descending; λ₁ = 1 for connected graphs, all values in [−1, 1]
    /// up to `tolerance`.
    pub eigenvalues: Vec<f64>,
    pub solver: Solver,
    pub tolerance: f64,
}

/// Eigenvalue counts against the threshold 1 − ε.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThresholdRank {
    pub epsilon: f64,
    pub tie_tolerance: f64,
    /// Count of eigenvalues ≥ 1 − ε.
    pub strict: u32,
    /// Count of eigenvalues ≥ 1 − ε − tie_tolerance. Floating spectra
    /// place eigenvalues a rounding error around exact thresholds, so
    /// quantitative claims use this count.
    pub tolerant: u32,
}

fn check_epsilon(epsilon: f64, tie_tolerance: f64) -> Result<(), SpectralError> {
    if !(epsilon > 0.0 && epsilon <= 2.0) {
        return Err(SpectralError::EpsilonOutOfRange(epsilon));
    }
    if tie_tolerance < 0.0 {
        return Err(SpectralError::NegativeTieTolerance(tie_tolerance));
    }
    Ok(())
}

/// The dense normalized adjacency matrix, row-major.
fn normalized_adjacency(g: &ColoredGraph) -> Vec<f64> {
    let n = g.num_vertices() as usize;
    let w = 1.0 / f64::from(g.dimension());
    let mut m = vec![0.0; n * n];
    for v in 0..g.num_vertices() {
        for (u, _) in g.neighbors(v) {
            m[v as usize * n + u as usize] = w;
        }
    }
    m
}

/// Householder reduction of a symmetric matrix to tridiagonal form with
/// accumulated transformations. `v` holds the matrix on entry and the
/// transformation on exit, stored one vector per row; `d` receives the
/// diagonal and `e` the subdiagonal. Ported from the EISPACK `tred2`
/// routine (via its well-known Java transcription), with the
/// vector-per-row layout keeping the inner loops contiguous.
fn tred2(n: usize, v: &mut [f64], d: &mut [f64], e: &mut [f64]) {
    let at = |j: usize, k: usize| j * n + k; // component k of vector j

    for j in 0..n {
        d[j] = v[at(j, n - 1)];
    }

    for i in (1..n).rev() {
        let mut scale = 0.0;
        let mut h = 0.0;
        for item in d.iter().take(i) {
            scale += item.abs();
        }
        if scale == 0.0 {
            e[i] = d[i - 1];
            for j in 0..i {
                d[j] = v[at(j, i - 1)];
                v[at(j, i)] = 0.0;
                v[at(i, j)] = 0.0;
            }
        } else {
            for item in d.iter_mut().take(i) {
                *item /= scale;
                h += *item * *item;
            }
            let f = d[i - 1];
            let mut g = h.sqrt();
            if f > 0.0 {
                g = -g;
            }
            e[i] = scale * g;
            h -= f * g;
            d[i - 1] = f - g;
            for item in e.iter_mut().take(i) {
                *item = 0.0;
            }
            for j in 0..i {
                let f = d[j];
                v[at(i, j)] = f;
                let mut g = e[j] + v[at(j, j)] * f;
                for k in j + 1..i {
                    g += v[at(j, k)] * d[k];
                    e[k] += v[at(j, k)] * f;
                }
                e[j] = g;
            }
            let mut f = 0.0;
            for j in 0..i {
                e[j] /= h;
                f += e[j] * d[j];
            }
            let hh = f / (h + h);
            for j in 0..i {
                e[j] -= hh * d[j];
            }
            for j in 0..i {
                let f = d[j];
                let g = e[j];
                for k in j..i {
                    v[at(j, k)] -= f * e[k] + g * d[k];
                }
                d[j] = v[at(j, i - 1)];
                v[at(j, i)] = 0.0;
            }
        }
        d[i] = h;
    }

    // Accumulate transformations.
    for i in 0..n - 1 {
        v[at(i, n - 1)] = v[at(i, i)];
        v[at(i, i)] = 1.0;
        let h = d[i + 1];
        if h != 0.0 {
            for k in 0..=i {
                d[k] = v[at(i + 1, k)] / h;
            }
            for j in 0..=i {
                let mut g = 0.0;
                for k in 0..=i {
                    g += v[at(i + 1, k)] * v[at(j, k)];
                }
                for k in 0..=i {
                    v[at(j, k)] -= g * d[k];
                }
            }
        }
        for k in 0..=i {
            v[at(i + 1, k)] = 0.0;
        }
    }
    for j in 0..n {
        d[j] = v[at(j, n - 1)];
        v[at(j, n - 1)] = 0.0;
    }
    v[at(n - 1, n - 1)] = 1.0;
    e[0] = 0.0;
}

/// Implicit-shift QL iteration on a symmetric tridiagonal matrix,
/// rotating the accumulated vectors along. Ported from the EISPACK
/// `tql2` routine; errors out instead of looping past 30 iterations
/// per eigenvalue.
fn tql2(n: usize, d: &mut [f64], e: &mut [f64], v: &mut [f64]) -> Result<(), SpectralError> {
    let at = |j: usize, k: usize| j * n + k;

    for i in 1..n {
        e[i - 1] = e[i];
    }
    e[n - 1] = 0.0;

    let mut f = 0.0;
    let mut tst1: f64 = 0.0;
    let eps = 2.0f64.powi(-52);
    for l in 0..n {
        tst1 = tst1.max(d[l].abs() + e[l].abs());
        let mut m = l;
        while m < n {
            if e[m].abs() <= eps * tst1 {
                break;
            }
            m += 1;
        }
        if m > l {
            let mut iter = 0;
            loop {
                iter += 1;
                if iter > 30 {
                    return Err(SpectralError::NoConvergence(l));
                }
                let g = d[l];
                let mut p = (d[l + 1] - g) / (2.0 * e[l]);
                let mut r = p.hypot(1.0);
                if p < 0.0 {
                    r = -r;
                }
                d[l] = e[l] / (p + r);
                d[l + 1] = e[l] * (p + r);
                let dl1 = d[l + 1];
                let mut h = g - d[l];
                for item in d.iter_mut().take(n).skip(l + 2) {
                    *item -= h;
                }
                f += h;

                p = d[m];
                let mut c = 1.0;
                let mut c2 = c;
                let mut c3 = c;
                let el1 = e[l + 1];
                let mut s = 0.0;
                let mut s2 = 0.0;
                for i in (l..m).rev() {
                    c3 = c2;
                    c2 = c;
                    s2 = s;
                    let g = c * e[i];
                    h = c * p;
                    r = p.hypot(e[i]);
                    e[i + 1] = s * r;
                    s = e[i] / r;
                    c = p / r;
                    p = c * d[i] - s * g;
                    d[i + 1] = h + s * (c * g + s * d[i]);

                    let (row_i, row_next) = v.split_at_mut(at(i + 1, 0));
                    let row_i = &mut row_i[at(i, 0)..];
                    for k in 0..n {
                        let h = row_next[k];
                        row_next[k] = s * row_i[k] + c * h;
                        row_i[k] = c * row_i[k] - s * h;
                    }
                }
                p = -s * s2 * c3 * el1 * e[l] / dl1;
                e[l] = s * p;
                d[l] = c * p;
                if e[l].abs() <= eps * tst1 {
                    break;
                }
            }
        }
        d[l] += f;
        e[l] = 0.0;
    }
    Ok(())
}

/// Multiply the normalized adjacency against a vector straight off the
/// graph (used for residual checks; no dense matrix needed).
fn apply_normalized_adjacency(g: &ColoredGraph, x: &[f64], out: &mut [f64]) {
    let w = 1.0 / f64::from(g.dimension());
    for v in 0..g.num_vertices() {
        let mut acc = 0.0;
        for (u, _) in g.neighbors(v) {
            acc += x[u as usize];
        }
        out[v as usize] = acc * w;
    }
}

/// All eigenvalues of A/d by dense diagonalization (n ≤ 4096), sorted
/// descending; ties keep the reduction order. A deterministic sample of
/// eigenpairs is verified to residual ≤ 1e−9 before the vectors are
/// dropped.
pub fn full_spectrum(g: &ColoredGraph) -> Result<SpectrumReport, SpectralError> {
    let n = g.num_vertices();
    if n > DENSE_LIMIT {
        return Err(SpectralError::TooLarge {
            n,
            max: DENSE_LIMIT,
        });
    }
    let n_us = n as usize;
    let mut v = normalized_adjacency(g);
    let mut d = vec![0.0; n_us];
    let mut e = vec![0.0; n_us];
    tred2(n_us, &mut v, &mut d, &mut e);
    tql2(n_us, &mut d, &mut e, &mut v)?;

    let mut order: Vec<usize> = (0..n_us).collect();
    order.sort_by(|&a, &b| d[b].partial_cmp(&d[a]).expect("eigenvalues are finite"));
    let eigenvalues: Vec<f64> = order.iter().map(|&i| d[i]).collect();

    // Spot-check residuals on a deterministic index sample.
    let mut sample: Vec<usize> = vec![0, n_us / 2, n_us - 1];
    let stride = (n_us / 8).max(1);
    sample.extend((0..n_us).step_by(stride));
    sample.sort_unstable();
    sample.dedup();
    let mut mu = vec![0.0; n_us];
    for idx in sample {
        let vector = &v[order[idx] * n_us..(order[idx] + 1) * n_us];
        apply_normalized_adjacency(g, vector, &mut mu);
        let lambda = eigenvalues[idx];
        let residual: f64 = mu
            .iter()
            .zip(vector)
            .map(|(mx, x)| (mx - lambda * x) * (mx - lambda * x))
            .sum::<f64>()
            .sqrt();
        assert!(
            residual <= SOLVER_TOLERANCE,
            "residual {residual} at eigenvalue index {idx}"
        );
    }
    for &lambda in &eigenvalues {
        assert!(
            lambda.abs() <= 1.0 + SOLVER_TOLERANCE,
            "normalized adjacency eigenvalue {lambda} outside [-1, 1]"
        );
    }

    Ok(SpectrumReport {
        num_vertices: n,
        dimension: g.dimension(),
        eigenvalues,
        solver: Solver::DenseFull,
        tolerance: SOLVER_TOLERANCE,
    })
}

/// Count eigenvalues against 1 − ε from an already computed spectrum.
pub fn threshold_rank_from_spectrum(
    spectrum: &SpectrumReport,
    epsilon: f64,
    tie_tolerance: f64,
) -> Result<ThresholdRank, SpectralError> {
    check_epsilon(epsilon, tie_tolerance)?;
    let threshold = 1.0 - epsilon;
    let strict = spectrum.eigenvalues.iter().filter(|&&l| l >= threshold).count() as u32;
    let tolerant = spectrum
        .eigenvalues
        .iter()
        .filter(|&&l| l >= threshold - tie_tolerance)
        .count() as u32;
    Ok(ThresholdRank {
        epsilon,
        tie_tolerance,
        strict,
        tolerant,
    })
}

/// The threshold rank TR_{1−ε}: how many eigenvalues of A/d are at least
/// 1 − ε. Dense diagonalization route.
pub fn threshold_rank(
    g: &ColoredGraph,
    epsilon: f64,
    tie_tolerance: f64,
) -> Result<ThresholdRank, SpectralError> {
    check_epsilon(epsilon, tie_tolerance)?;
    let spectrum = full_spectrum(g)?;
    threshold_rank_from_spectrum(&spectrum, epsilon, tie_tolerance)
}

/// Signs of the diagonal blocks of a symmetric indefinite factorization.
struct Inertia {
    positive: u32,
    negative: u32,
    zero: u32,
}

/// Bunch-Kaufman factorization of a dense symmetric matrix, keeping only
/// the inertia. The matrix is destroyed. Pivots below `norm·n·1e−14`
/// count as zero eigenvalues.
fn symmetric_inertia(a: &mut [f64], n: usize) -> Inertia {
    let alpha = (1.0 + 17.0f64.sqrt()) / 8.0;
    let norm = a.iter().fold(0.0f64, |m, &x| m.max(x.abs()));
    let tiny = norm * n as f64 * 1e-14;
    let mut counts = Inertia {
        positive: 0,
        negative: 0,
        zero: 0,
    };

    let swap_row_col = |a: &mut [f64], x: usize, y: usize| {
        if x == y {
            return;
        }
        for j in 0..n {
            a.swap(x * n + j, y * n + j);
        }
        for i in 0..n {
            a.swap(i * n + x, i * n + y);
        }
    };

    let mut k = 0;
    while k < n {
        let absakk = a[k * n + k].abs();
        let mut imax = k;
        let mut colmax = 0.0;
        for i in k + 1..n {
            let x = a[i * n + k].abs();
            if x > colmax {
                colmax = x;
                imax = i;
            }
        }
        if absakk.max(colmax) <= tiny {
            counts.zero += 1;
            k += 1;
            continue;
        }

        let mut pair = false;
        let mut kp = k;
        if absakk < alpha * colmax {
            let mut rowmax = 0.0f64;
            for j in k..n {
                if j != imax {
                    rowmax = rowmax.max(a[imax * n + j].abs());
                }
            }
            if absakk >= alpha * colmax * (colmax / rowmax) {
                // k-th column is relatively dominant after all.
            } else if a[imax * n + imax].abs() >= alpha * rowmax {
                kp = imax;
            } else {
                kp = imax;
                pair = true;
            }
        }

        if !pair {
            swap_row_col(a, k, kp);
            let pivot = a[k * n + k];
            if pivot.abs() <= tiny {
                counts.zero += 1;
                k += 1;
                continue;
            }
            if pivot < 0.0 {
                counts.negative += 1;
            } else {
                counts.positive += 1;
            }
            for i in k + 1..n {
                let l = a[i * n + k] / pivot;
                if l != 0.0 {
                    for j in k + 1..n {
                        a[i * n + j] -= l * a[k * n + j];
                    }
                }
            }
            k += 1;
        } else {
            swap_row_col(a, k + 1, kp);
            let p = a[k * n + k];
            let b = a[(k + 1) * n + k];
            let q = a[(k + 1) * n + k + 1];
            let det = p * q - b * b;
            if det < 0.0 {
                // The Bunch-Kaufman 2×2 pivot always has one eigenvalue
                // of each sign.
                counts.positive += 1;
                counts.negative += 1;
            } else if p + q < 0.0 {
                counts.negative += 2;
            } else {
                counts.positive += 2;
            }
            for i in k + 2..n {
                let x = a[i * n + k];
                let y = a[i * n + k + 1];
                let l0 = (q * x - b * y) / det;
                let l1 = (p * y - b * x) / det;
                if l0 != 0.0 || l1 != 0.0 {
                    for j in k + 2..n {
                        a[i * n + j] -= l0 * a[k * n + j] + l1 * a[(k + 1) * n + j];
                    }
                }
            }
            k += 2;
        }
    }
    counts
}

/// Threshold rank by inertia counting: eigenvalues of A/d that are ≥ σ
/// are exactly the non-positive eigenvalues of σI − A/d, counted from a
/// symmetric indefinite factorization without diagonalizing.
pub fn threshold_rank_by_inertia(
    g: &ColoredGraph,
    epsilon: f64,
    tie_tolerance: f64,
) -> Result<ThresholdRank, SpectralError> {
    check_epsilon(epsilon, tie_tolerance)?;
    let n = g.num_vertices();
    if n > DENSE_LIMIT {
        return Err(SpectralError::TooLarge {
            n,
            max: DENSE_LIMIT,
        });
    }
    let count_at_least = |sigma: f64| -> u32 {
        let n_us = n as usize;
        let mut shifted = normalized_adjacency(g);
        for x in shifted.iter_mut() {
            *x = -*x;
        }
        for i in 0..n_us {
            shifted[i * n_us + i] += sigma;
        }
        let inertia = symmetric_inertia(&mut shifted, n_us);
        inertia.negative + inertia.zero
    };
    Ok(ThresholdRank {
        epsilon,
        tie_tolerance,
        strict: count_at_least(1.0 - epsilon),
        tolerant: count_at_least(1.0 - epsilon - tie_tolerance),
    })
}

/// The exact Rayleigh quotient ⟨v, Mv⟩ of the normalized indicator of
/// copy j at depth k of a d-dimensional clique product: twice the copy's
/// internal edge count over (copy size · d). Pure edge counting — the
/// result is exactly (d−k)/d.
pub fn copy_rayleigh(g: &ColoredGraph, k: u32, j: u64) -> Result<Rational, SpectralError> {
    let d = g.dimension();
    let sizes = clique_size_sequence(d)?;
    if u64::from(g.num_vertices()) != sizes[d as usize - 1] {
        return Err(SpectralError::NotCliqueProduct {
            n: g.num_vertices(),
            d,
        });
    }
    if k >= d {
        return Err(SpectralError::BadDepth { d, k });
    }
    let copy_size = sizes[(d - k) as usize - 1];
    let copies = sizes[d as usize - 1] / copy_size;
    if j >= copies {
        return Err(SpectralError::BadCopyIndex { k, j, copies });
    }
    let lo = (j * copy_size) as u32;
    let hi = ((j + 1) * copy_size) as u32;
    let mut internal = 0i64;
    for v in lo..hi {
        for (u, _) in g.neighbors(v) {
            if u > v && u >= lo && u < hi {
                internal += 1;
            }
        }
    }
    Ok(Rational::new(
        2 * internal,
        copy_size as i64 * i64::from(d),
    ))
}

/// The proof's counting step: the vertices covered by the 2^k
/// depth-k copy vectors number strictly fewer than the whole graph.
/// Returns (covered, total) as exact integers and asserts the inequality.
pub fn theorem_size_inequality(d: u32, k: u32) -> Result<(u128, u128), SpectralError> {
    if d <= 2 || k == 0 || 2 * k > d {
        return Err(SpectralError::BadParameters { d, k });
    }
    let sizes = clique_size_sequence(d)?;
    let copy = sizes[(d - k) as usize - 1] as u128;
    let covered = copy
        .checked_pow(1 << k)
        .expect("copy counts for d <= 6 fit in u128");
    let total = sizes[d as usize - 1] as u128;
    assert!(
        covered < total,
        "({copy})^(2^{k}) = {covered} must stay below {total}"
    );
    Ok((covered, total))
}

/// Outcome of checking the threshold-rank lower bound for one (d, k).
#[derive(Debug, Clone, PartialEq)]
pub struct ThresholdTheoremReport {
    pub dimension: u32,
    pub k: u32,
    /// 2k/d.
    pub epsilon: f64,
    pub num_vertices: u64,
    pub rank: ThresholdRank,
    /// n^(1 − 2^(−k))/2.
    pub bound: f64,
    /// ⌈bound⌉: the rank the theorem demands.
    pub required: u64,
    /// Tolerant rank ≥ required.
    pub verdict: bool,
}

/// Check the threshold-rank lower bound TR_{1−2k/d}(CP^(d)) ≥ n^(1−2^(−k))/2
/// against a computed spectrum of CP^(d).
pub fn verify_threshold_theorem_with_spectrum(
    spectrum: &SpectrumReport,
    k: u32,
) -> Result<ThresholdTheoremReport, SpectralError> {
    let d = spectrum.dimension;
    if d <= 2 || k == 0 || 2 * k > d {
        return Err(SpectralError::BadParameters { d, k });
    }
    let sizes = clique_size_sequence(d)?;
    let n = sizes[d as usize - 1];
    if u64::from(spectrum.num_vertices) != n {
        return Err(SpectralError::SpectrumMismatch {
            found: spectrum.eigenvalues.len(),
            d,
            expected: n,
        });
    }
    theorem_size_inequality(d, k)?;
    let epsilon = 2.0 * f64::from(k) / f64::from(d);
    let rank = threshold_rank_from_spectrum(spectrum, epsilon, DEFAULT_TIE_TOLERANCE)?;
    let bound = (n as f64).powf(1.0 - 0.5f64.powi(k as i32)) / 2.0;
    let required = bound.ceil() as u64;
    Ok(ThresholdTheoremReport {
        dimension: d,
        k,
        epsilon,
        num_vertices: n,
        rank,
        bound,
        required,
        verdict: u64::from(rank.tolerant) >= required,
    })
}

/// Build CP^(d), diagonalize, and check the threshold-rank lower bound.
pub fn verify_threshold_theorem(d: u32, k: u32) -> Result<ThresholdTheoremReport, SpectralError> {
    if d <= 2 || k == 0 || 2 * k > d {
        return Err(SpectralError::BadParameters { d, k });
    }
    let g = clique_product(d)?;
    let spectrum = full_spectrum(&g)?;
    verify_threshold_theorem_with_spectrum(&spectrum, k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::boolean_cube;

    fn close(a: f64, b: f64) -> bool {
        (a - b).abs() < 1e-9
    }

    #[test]
    fn spectrum_of_a_single_edge() {
        let g = clique_product(1).unwrap();
        let s = full_spectrum(&g).unwrap();
        assert_eq!(s.eigenvalues.len(), 2);
        assert!(close(s.eigenvalues[0], 1.0));
        assert!(close(s.eigenvalues[1], -1.0));
    }

    #[test]
    fn spectrum_of_the_six_cycle() {
        let s = full_spectrum(&clique_product(2).unwrap()).unwrap();
        let expected = [1.0, 0.5, 0.5, -0.5, -0.5, -1.0];
        for (have, want) in s.eigenvalues.iter().zip(expected) {
            assert!(close(*have, want), "{:?}", s.eigenvalues);
        }
    }

    #[test]
    fn spectrum_of_the_cube_has_binomial_multiplicities() {
        // Q_3: eigenvalues (3 − 2i)/3 with multiplicity C(3, i).
        let s = full_spectrum(&boolean_cube(3).unwrap()).unwrap();
        let expected = [
            1.0,
            1.0 / 3.0,
            1.0 / 3.0,
            1.0 / 3.0,
            -1.0 / 3.0,
            -1.0 / 3.0,
            -1.0 / 3.0,
            -1.0,
        ];
        for (have, want) in s.eigenvalues.iter().zip(expected) {
            assert!(close(*have, want), "{:?}", s.eigenvalues);
        }
    }

    #[test]
    fn trace_identities() {
        for g in [
            boolean_cube(4).unwrap(),
            clique_product(3).unwrap(),
        ] {
            let s = full_spectrum(&g).unwrap();
            let n = f64::from(g.num_vertices());
            let sum: f64 = s.eigenvalues.iter().sum();
            let sum_sq: f64 = s.eigenvalues.iter().map(|l| l * l).sum();
            assert!(sum.abs() <= n * 1e-8, "trace(M) = {sum}");
            assert!(
                (sum_sq - n / f64::from(g.dimension())).abs() <= n * 1e-8,
                "trace(M^2) = {sum_sq}"
            );
            assert!(close(s.eigenvalues[0], 1.0));
        }
    }

    #[test]
    fn rejects_oversized_graphs() {
        let g = clique_product(5).unwrap();
        assert_eq!(
            full_spectrum(&g).unwrap_err(),
            SpectralError::TooLarge {
                n: 3_263_442,
                max: 4096
            }
        );
    }

    #[test]
    fn threshold_rank_of_the_six_cycle() {
        let g = clique_product(2).unwrap();
        let r = threshold_rank(&g, 0.5, DEFAULT_TIE_TOLERANCE).unwrap();
        assert_eq!(r.tolerant, 3); // eigenvalues 1, 1/2, 1/2
        let tiny = threshold_rank(&g, 1e-6, DEFAULT_TIE_TOLERANCE).unwrap();
        assert_eq!(tiny.tolerant, 1); // only λ₁ = 1 near the top
        let all = threshold_rank(&g, 2.0, DEFAULT_TIE_TOLERANCE).unwrap();
        assert_eq!(all.tolerant, 6);
        assert_eq!(all.strict, 6);
    }

    #[test]
    fn threshold_rank_is_monotone_in_epsilon() {
        let s = full_spectrum(&clique_product(3).unwrap()).unwrap();
        let mut last = 0;
        for eps in [0.1, 0.3, 0.5, 2.0 / 3.0, 1.0, 1.5, 2.0] {
            let r = threshold_rank_from_spectrum(&s, eps, DEFAULT_TIE_TOLERANCE).unwrap();
            assert!(r.tolerant >= last);
            assert!(r.tolerant >= r.strict);
            last = r.tolerant;
        }
        assert_eq!(last, 42);
    }

    #[test]
    fn epsilon_domain_is_enforced() {
        let g = clique_product(2).unwrap();
        for bad in [0.0, -0.5, 2.5] {
            assert_eq!(
                threshold_rank(&g, bad, 1e-9).unwrap_err(),
                SpectralError::EpsilonOutOfRange(bad)
            );
        }
        assert_eq!(
            threshold_rank(&g, 1.0, -1e-9).unwrap_err(),
            SpectralError::NegativeTieTolerance(-1e-9)
        );
    }

    #[test]
    fn inertia_route_matches_the_dense_spectrum() {
        let graphs = [
            boolean_cube(2).unwrap(),
            boolean_cube(3).unwrap(),
            boolean_cube(4).unwrap(),
            clique_product(2).unwrap(),
            clique_product(3).unwrap(),
        ];
        for g in &graphs {
            let spectrum = full_spectrum(g).unwrap();
            for eps in [0.3, 0.5, 2.0 / 3.0, 1.0, 1.5, 2.0] {
                let dense =
                    threshold_rank_from_spectrum(&spectrum, eps, DEFAULT_TIE_TOLERANCE).unwrap();
                let counted = threshold_rank_by_inertia(g, eps, DEFAULT_TIE_TOLERANCE).unwrap();
                // The tolerant count shifts the threshold off any exact
                // eigenvalue, so the two routes must agree there.
                assert_eq!(
                    dense.tolerant, counted.tolerant,
                    "n = {}, eps = {eps}",
                    g.num_vertices()
                );
            }
        }
    }

    #[test]
    fn copy_rayleigh_is_exact_at_every_depth() {
        for d in 2..=4u32 {
            let g = clique_product(d).unwrap();
            let sizes = clique_size_sequence(d).unwrap();
            for k in 1..d {
                let copies = sizes[d as usize - 1] / sizes[(d - k) as usize - 1];
                for j in 0..copies {
                    assert_eq!(
                        copy_rayleigh(&g, k, j).unwrap(),
                        Rational::new(i64::from(d - k), i64::from(d)),
                        "d = {d}, k = {k}, j = {j}"
                    );
                }
            }
            // Depth 0: the constant vector sees the full degree.
            assert_eq!(copy_rayleigh(&g, 0, 0).unwrap(), Rational::new(1, 1));
        }
    }

    #[test]
    fn copy_rayleigh_rejects_bad_indices() {
        let g = clique_product(3).unwrap();
        assert_eq!(
            copy_rayleigh(&g, 1, 7).unwrap_err(),
            SpectralError::BadCopyIndex {
                k: 1,
                j: 7,
                copies: 7
            }
        );
        assert_eq!(
            copy_rayleigh(&g, 3, 0).unwrap_err(),
            SpectralError::BadDepth { d: 3, k: 3 }
        );
        let cube = boolean_cube(3).unwrap();
        assert_eq!(
            copy_rayleigh(&cube, 1, 0).unwrap_err(),
            SpectralError::NotCliqueProduct { n: 8, d: 3 }
        );
    }

    #[test]
    fn size_inequality_holds_for_reachable_dimensions() {
        for d in 3..=6u32 {
            for k in 1..=d / 2 {
                let (covered, total) = theorem_size_inequality(d, k).unwrap();
                assert!(covered < total, "d = {d}, k = {k}");
            }
        }
        assert!(theorem_size_inequality(2, 1).is_err());
        assert!(theorem_size_inequality(4, 3).is_err());
        assert!(theorem_size_inequality(4, 0).is_err());
    }

    #[test]
    fn threshold_theorem_for_dimension_three() {
        let report = verify_threshold_theorem(3, 1).unwrap();
        assert!(close(report.epsilon, 2.0 / 3.0));
        assert!((report.bound - 42f64.sqrt() / 2.0).abs() < 1e-12);
        assert_eq!(report.required, 4);
        assert!(report.verdict, "rank {:?}", report.rank);
    }

    #[test]
    fn threshold_theorem_rejects_bad_parameters() {
        assert_eq!(
            verify_threshold_theorem(2, 1).unwrap_err(),
            SpectralError::BadParameters { d: 2, k: 1 }
        );
        assert_eq!(
            verify_threshold_theorem(4, 3).unwrap_err(),
            SpectralError::BadParameters { d: 4, k: 3 }
        );
        let s = full_spectrum(&clique_product(3).unwrap()).unwrap();
        let mut wrong = s.clone();
        wrong.num_vertices = 41;
        assert!(matches!(
            verify_threshold_theorem_with_spectrum(&wrong, 1).unwrap_err(),
            SpectralError::SpectrumMismatch { .. }
        ));
    }

    #[test]
    #[ignore = "diagonalizes the 1806-vertex clique product; several seconds"]
    fn threshold_theorem_for_dimension_four() {
        let g = clique_product(4).unwrap();
        let spectrum = full_spectrum(&g).unwrap();
        let k1 = verify_threshold_theorem_with_spectrum(&spectrum, 1).unwrap();
        assert_eq!(k1.required, 22);
        assert!(k1.verdict, "rank {:?}", k1.rank);
        let k2 = verify_threshold_theorem_with_spectrum(&spectrum, 2).unwrap();
        assert_eq!(k2.required, 139);
        assert!(k2.verdict, "rank {:?}", k2.rank);
    }
}
