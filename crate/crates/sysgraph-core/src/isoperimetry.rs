//! Edge boundaries, expansions, and isoperimetric profiles.
//!
//! For a vertex set U of a d-regular graph, `boundary` counts the edges
//! leaving U, `expansion` is the exact rational ∂(U)/|U|, and the profile
//! P(s) is the minimum expansion over all sets of size s. Exact profiles
//! are enumerated (full subset sweep for n ≤ 24, per-size combination
//! enumeration with a feasibility guard otherwise); `heuristic_min_expansion`
//! gives seeded, reproducible upper bounds at sizes where enumeration is out
//! of reach.
//!
//! Everything downstream of the counts stays exact: expansions are rationals
//! and only the logarithmic lower bounds are evaluated in floating point
//! (with an explicit comparison slack).

use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::ColoredGraph;
use crate::Rational;

/// Largest per-size enumeration allowed by [`exact_min_expansion`]:
/// binomial(n, min(s, n-s)) must not exceed this.
pub const ENUMERATION_LIMIT: u128 = 10_000_000;

/// Full-subset sweeps are used instead of per-size enumeration up to this
/// vertex count.
pub const FULL_SWEEP_LIMIT: u32 = 24;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IsoperimetryError {
    #[error("vertex id {0} out of range")]
    IdOutOfRange(u32),
    #[error("vertex set is over 0..{set_universe} but the graph has {graph} vertices")]
    GraphMismatch { set_universe: u32, graph: u32 },
    #[error("expansion of the empty set is undefined")]
    EmptySet,
    #[error("set size {s} is not in 1..={num_vertices}")]
    BadSize { s: u64, num_vertices: u32 },
    #[error("size {s} needs {subsets} subsets, beyond the enumeration limit {limit}")]
    TooLarge { s: u64, subsets: u128, limit: u128 },
    #[error("at least one trial is required")]
    ZeroTrials,
}

/// A subset of the vertices `0..n`, stored as a bitmask.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexSet {
    num_vertices: u32,
    words: Vec<u64>,
    len: u32,
}

impl VertexSet {
    pub fn empty(num_vertices: u32) -> Self {
        VertexSet {
            num_vertices,
            words: vec![0; (num_vertices as usize).div_ceil(64)],
            len: 0,
        }
    }

    pub fn full(num_vertices: u32) -> Self {
        let mut set = Self::empty(num_vertices);
        for v in 0..num_vertices {
            set.insert(v);
        }
        set
    }

    /// Build from ids (duplicates collapse); every id must be in range.
    pub fn from_ids(num_vertices: u32, ids: &[u32]) -> Result<Self, IsoperimetryError> {
        let mut set = Self::empty(num_vertices);
        for &id in ids {
            if id >= num_vertices {
                return Err(IsoperimetryError::IdOutOfRange(id));
            }
            set.insert(id);
        }
        Ok(set)
    }

    pub fn num_vertices(&self) -> u32 {
        self.num_vertices
    }

    /// Number of elements (always the popcount of the mask).
    pub fn len(&self) -> u32 {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn contains(&self, v: u32) -> bool {
        self.words[v as usize / 64] & (1 << (v % 64)) != 0
    }

    /// Returns true if `v` was newly inserted.
    pub fn insert(&mut self, v: u32) -> bool {
        debug_assert!(v < self.num_vertices);
        let w = &mut self.words[v as usize / 64];
        let bit = 1 << (v % 64);
        let new = *w & bit == 0;
        *w |= bit;
        self.len += new as u32;
        new
    }

    /// Returns true if `v` was present.
    pub fn remove(&mut self, v: u32) -> bool {
        let w = &mut self.words[v as usize / 64];
        let bit = 1 << (v % 64);
        let present = *w & bit != 0;
        *w &= !bit;
        self.len -= present as u32;
        present
    }

    /// Elements in ascending order.
    pub fn ids(&self) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.len as usize);
        for v in 0..self.num_vertices {
            if self.contains(v) {
                out.push(v);
            }
        }
        out
    }

    pub fn complement(&self) -> VertexSet {
        let mut out = Self::empty(self.num_vertices);
        for v in 0..self.num_vertices {
            if !self.contains(v) {
                out.insert(v);
            }
        }
        out
    }
}

fn check_universe(g: &ColoredGraph, set: &VertexSet) -> Result<(), IsoperimetryError> {
    if set.num_vertices() != g.num_vertices() {
        return Err(IsoperimetryError::GraphMismatch {
            set_universe: set.num_vertices(),
            graph: g.num_vertices(),
        });
    }
    Ok(())
}

/// The number of edges with exactly one endpoint in `set`; ∂(∅) = 0.
pub fn boundary(g: &ColoredGraph, set: &VertexSet) -> Result<u64, IsoperimetryError> {
    check_universe(g, set)?;
    let mut crossing = 0u64;
    for v in 0..g.num_vertices() {
        if set.contains(v) {
            for (u, _) in g.neighbors(v) {
                if !set.contains(u) {
                    crossing += 1;
                }
            }
        }
    }
    Ok(crossing)
}

/// The exact edge expansion ∂(U)/|U| of a nonempty set.
pub fn expansion(g: &ColoredGraph, set: &VertexSet) -> Result<Rational, IsoperimetryError> {
    check_universe(g, set)?;
    if set.is_empty() {
        return Err(IsoperimetryError::EmptySet);
    }
    let b = boundary(g, set)?;
    Ok(Rational::new(b as i64, i64::from(set.len())))
}

/// Inner edge counts per color: entry c-1 is the number of color-c edges
/// with both endpoints in `set`. The counts always balance the degree sum:
/// `d |U| = ∂(U) + 2 Σ_c e_c(U)`, which is asserted.
pub fn inner_edges_by_color(
    g: &ColoredGraph,
    set: &VertexSet,
) -> Result<Vec<u64>, IsoperimetryError> {
    check_universe(g, set)?;
    let mut inner = vec![0u64; g.dimension() as usize];
    for v in 0..g.num_vertices() {
        if set.contains(v) {
            for (u, c) in g.neighbors(v) {
                if u > v && set.contains(u) {
                    inner[(c - 1) as usize] += 1;
                }
            }
        }
    }
    let total: u64 = inner.iter().sum();
    let b = boundary(g, set)?;
    assert_eq!(
        u64::from(g.dimension()) * u64::from(set.len()),
        b + 2 * total,
        "degree sum identity must hold for every vertex set"
    );
    Ok(inner)
}

/// How a profile row was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    /// Global minimum by enumeration.
    Exact,
    /// Upper bound from seeded search.
    Heuristic,
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Method::Exact => "exact",
            Method::Heuristic => "heuristic",
        })
    }
}

/// One row of an isoperimetric profile.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProfileRow {
    pub s: u32,
    pub min_expansion: Rational,
    /// A set attaining (exact) or certifying an upper bound on (heuristic)
    /// the row value; ascending ids.
    pub witness: Vec<u32>,
    pub method: Method,
}

/// An isoperimetric profile (or heuristic upper-bound table) of one graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProfileReport {
    pub num_vertices: u32,
    pub dimension: u32,
    pub rows: Vec<ProfileRow>,
}

/// Binomial coefficient, saturating at u128::MAX.
fn binomial(n: u64, k: u64) -> u128 {
    let k = k.min(n - k.min(n));
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = match acc.checked_mul((n - i) as u128) {
            Some(x) => x / (i as u128 + 1),
            None => return u128::MAX,
        };
    }
    acc
}

/// Compare two equal-size sets as sorted id lists; bitmask `a` is
/// lexicographically smaller iff the lowest differing bit belongs to `a`.
fn mask_lex_less(a: u32, b: u32) -> bool {
    let x = a ^ b;
    x != 0 && a & (x & x.wrapping_neg()) != 0
}

/// A vertex set under incremental mutation that tracks its own boundary.
struct SweepState<'a> {
    g: &'a ColoredGraph,
    words: Vec<u64>,
    boundary: i64,
}

impl<'a> SweepState<'a> {
    fn new(g: &'a ColoredGraph) -> Self {
        SweepState {
            g,
            words: vec![0; (g.num_vertices() as usize).div_ceil(64)],
            boundary: 0,
        }
    }

    fn contains(&self, v: u32) -> bool {
        self.words[v as usize / 64] & (1 << (v % 64)) != 0
    }

    fn neighbors_inside(&self, v: u32) -> i64 {
        let mut t = 0;
        for (u, _) in self.g.neighbors(v) {
            t += self.contains(u) as i64;
        }
        t
    }

    fn add(&mut self, v: u32) {
        debug_assert!(!self.contains(v));
        self.boundary += i64::from(self.g.dimension()) - 2 * self.neighbors_inside(v);
        self.words[v as usize / 64] |= 1 << (v % 64);
    }

    fn remove(&mut self, v: u32) {
        debug_assert!(self.contains(v));
        self.words[v as usize / 64] &= !(1 << (v % 64));
        self.boundary -= i64::from(self.g.dimension()) - 2 * self.neighbors_inside(v);
    }
}

/// Exact minima for all sizes at once by a Gray-code sweep over all 2^n
/// subsets (n ≤ 24 only). Returns, for s in 1..=n, the minimum boundary and
/// the lex-smallest witness mask.
fn full_sweep(g: &ColoredGraph) -> Vec<(u64, u32)> {
    let n = g.num_vertices();
    assert!(n <= FULL_SWEEP_LIMIT);
    let mut best: Vec<(u64, u32)> = vec![(u64::MAX, 0); n as usize + 1];
    let mut state = SweepState::new(g);
    let mut mask: u32 = 0;
    for k in 1u64..(1u64 << n) {
        let v = k.trailing_zeros();
        let bit = 1u32 << v;
        if mask & bit != 0 {
            state.remove(v);
        } else {
            state.add(v);
        }
        mask ^= bit;
        let s = mask.count_ones() as usize;
        let b = state.boundary as u64;
        let entry = &mut best[s];
        if b < entry.0 || (b == entry.0 && mask_lex_less(mask, entry.1)) {
            *entry = (b, mask);
        }
    }
    best
}

/// Iterates size-k subsets of `0..limit` in colexicographic order on top of
/// a shared incremental state, recording the best (boundary, ids) seen.
/// `extra` is a fixed element already in the state (the partition pivot).
struct RowScan<'a> {
    state: SweepState<'a>,
    extra: u32,
    prefer_lex_max: bool,
    best_boundary: u64,
    best_ids: Vec<u32>,
}

impl<'a> RowScan<'a> {
    fn record(&mut self, indices: &[u32]) {
        let b = self.state.boundary as u64;
        if b > self.best_boundary {
            return;
        }
        if b < self.best_boundary {
            self.best_boundary = b;
            self.best_ids = self.ids(indices);
            return;
        }
        let ids = self.ids(indices);
        let replace = if self.prefer_lex_max {
            ids > self.best_ids
        } else {
            ids < self.best_ids
        };
        if replace {
            self.best_ids = ids;
        }
    }

    fn ids(&self, indices: &[u32]) -> Vec<u32> {
        let mut ids = Vec::with_capacity(indices.len() + 1);
        ids.extend_from_slice(indices);
        ids.push(self.extra);
        ids
    }
}

/// Best (minimum-boundary) size-s set whose largest element is `pivot`.
fn best_with_pivot(
    g: &ColoredGraph,
    s: u32,
    pivot: u32,
    prefer_lex_max: bool,
) -> (u64, Vec<u32>) {
    let k = (s - 1) as usize;
    let mut scan = RowScan {
        state: SweepState::new(g),
        extra: pivot,
        prefer_lex_max,
        best_boundary: u64::MAX,
        best_ids: Vec::new(),
    };
    scan.state.add(pivot);
    let mut indices: Vec<u32> = (0..k as u32).collect();
    for &c in &indices {
        scan.state.add(c);
    }
    scan.record(&indices);
    // Advance in colex order: bump the first index with a free successor,
    // packing the prefix back to 0..i.
    loop {
        let mut i = 0;
        while i < k {
            let next = indices[i] + 1;
            let ceiling = if i + 1 < k { indices[i + 1] } else { pivot };
            if next < ceiling {
                break;
            }
            i += 1;
        }
        if i == k {
            return (scan.best_boundary, scan.best_ids);
        }
        let bumped = indices[i] + 1;
        scan.state.remove(indices[i]);
        scan.state.add(bumped);
        indices[i] = bumped;
        for (j, slot) in indices.iter_mut().enumerate().take(i) {
            let target = j as u32;
            if *slot != target {
                scan.state.remove(*slot);
                scan.state.add(target);
                *slot = target;
            }
        }
        scan.record(&indices);
    }
}

/// Minimum boundary over all size-s sets by direct enumeration, partitioned
/// by largest element. Tie-break: lexicographically smallest ids (largest
/// if `prefer_lex_max`). The partition results are merged in pivot order,
/// so the outcome does not depend on the worker count.
fn min_boundary_for_size(g: &ColoredGraph, s: u32, prefer_lex_max: bool) -> (u64, Vec<u32>) {
    debug_assert!(s >= 1 && s <= g.num_vertices());
    let pivots: Vec<u32> = (s - 1..g.num_vertices()).collect();
    let partials: Vec<(u64, Vec<u32>)> = pivots
        .into_par_iter()
        .map(|pivot| best_with_pivot(g, s, pivot, prefer_lex_max))
        .collect();
    partials
        .into_iter()
        .reduce(|best, cand| {
            if cand.0 < best.0
                || (cand.0 == best.0
                    && (if prefer_lex_max {
                        cand.1 > best.1
                    } else {
                        cand.1 < best.1
                    }))
            {
                cand
            } else {
                best
            }
        })
        .expect("at least one pivot")
}

/// The exact profile value P(s) and its lexicographically smallest witness.
///
/// Enumerates min(s, n-s)-subsets (for s > n/2, complements of the
/// enumerated sets are the candidates, and preferring the lex-largest small
/// set yields the lex-smallest witness); the feasibility guard rejects rows
/// that would need more than [`ENUMERATION_LIMIT`] subsets.
pub fn exact_min_expansion(
    g: &ColoredGraph,
    s: u32,
) -> Result<(Rational, Vec<u32>), IsoperimetryError> {
    let n = g.num_vertices();
    if s < 1 || s > n {
        return Err(IsoperimetryError::BadSize {
            s: u64::from(s),
            num_vertices: n,
        });
    }
    if s == n {
        return Ok((Rational::new(0, 1), (0..n).collect()));
    }
    let small = s.min(n - s);
    let subsets = binomial(u64::from(n), u64::from(small));
    if subsets > ENUMERATION_LIMIT {
        return Err(IsoperimetryError::TooLarge {
            s: u64::from(s),
            subsets,
            limit: ENUMERATION_LIMIT,
        });
    }
    let (b, ids) = if small == s {
        min_boundary_for_size(g, s, false)
    } else {
        // ∂(T) = ∂(V∖T): enumerate the complements. Complementation
        // reverses lex order among equal-size sets, so the lex-largest
        // minimizing T gives the lex-smallest witness U.
        let (b, t_ids) = min_boundary_for_size(g, n - s, true);
        let t = VertexSet::from_ids(n, &t_ids)?;
        (b, t.complement().ids())
    };
    Ok((Rational::new(b as i64, i64::from(s)), ids))
}

/// The exact profile for s = 1..=min(s_max, n): global minima with
/// lex-smallest witnesses. Uses one full subset sweep when n ≤ 24 and
/// per-size enumeration (with the feasibility guard) otherwise.
pub fn exact_profile(
    g: &ColoredGraph,
    s_max: u32,
) -> Result<ProfileReport, IsoperimetryError> {
    let n = g.num_vertices();
    let top = s_max.min(n);
    let mut rows = Vec::with_capacity(top as usize);
    if n <= FULL_SWEEP_LIMIT {
        let best = full_sweep(g);
        for s in 1..=top {
            let (b, mask) = best[s as usize];
            let witness: Vec<u32> = (0..n).filter(|&v| mask & (1 << v) != 0).collect();
            rows.push(ProfileRow {
                s,
                min_expansion: Rational::new(b as i64, i64::from(s)),
                witness,
                method: Method::Exact,
            });
        }
    } else {
        for s in 1..=top {
            let (value, witness) = exact_min_expansion(g, s)?;
            rows.push(ProfileRow {
                s,
                min_expansion: value,
                witness,
                method: Method::Exact,
            });
        }
    }
    Ok(ProfileReport {
        num_vertices: n,
        dimension: g.dimension(),
        rows,
    })
}

/// Seeded upper bound on P(s): multi-start greedy growth (always absorb the
/// frontier vertex with the most neighbors inside, smallest id on ties)
/// followed by first-improvement swap local search. Deterministic given
/// (graph, s, trials, seed); the result is the expansion of a concrete set,
/// so it is always ≥ P(s).
pub fn heuristic_min_expansion(
    g: &ColoredGraph,
    s: u32,
    trials: u32,
    seed: u64,
) -> Result<(Rational, Vec<u32>), IsoperimetryError> {
    let n = g.num_vertices();
    if s < 1 || s > n {
        return Err(IsoperimetryError::BadSize {
            s: u64::from(s),
            num_vertices: n,
        });
    }
    if trials == 0 {
        return Err(IsoperimetryError::ZeroTrials);
    }
    if s == n {
        return Ok((Rational::new(0, 1), (0..n).collect()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut best: Option<(u64, Vec<u32>)> = None;
    for _ in 0..trials {
        let start = rng.gen_range(0..n);
        let candidate = grow_and_polish(g, s, start);
        let replace = match &best {
            None => true,
            Some(b) => candidate.0 < b.0 || (candidate.0 == b.0 && candidate.1 < b.1),
        };
        if replace {
            best = Some(candidate);
        }
    }
    let (b, ids) = best.expect("trials >= 1");
    Ok((Rational::new(b as i64, i64::from(s)), ids))
}

/// Upper limit on applied swaps per trial; each swap strictly decreases the
/// boundary, so this only cuts off pathological cases.
const SWAP_BUDGET: u32 = 10_000;

fn grow_and_polish(g: &ColoredGraph, s: u32, start: u32) -> (u64, Vec<u32>) {
    let n = g.num_vertices();
    let d = g.dimension();
    let mut in_set = VertexSet::empty(n);
    // Number of neighbors inside the set, for every vertex.
    let mut inside_deg = vec![0u32; n as usize];
    // Frontier buckets: vertices outside the set keyed by inside-degree.
    let mut buckets: Vec<std::collections::BTreeSet<u32>> =
        vec![std::collections::BTreeSet::new(); d as usize + 1];
    let mut boundary = 0i64;

    let absorb = |v: u32,
                      in_set: &mut VertexSet,
                      inside_deg: &mut Vec<u32>,
                      buckets: &mut Vec<std::collections::BTreeSet<u32>>,
                      boundary: &mut i64| {
        buckets[inside_deg[v as usize] as usize].remove(&v);
        in_set.insert(v);
        *boundary += i64::from(d) - 2 * i64::from(inside_deg[v as usize]);
        for (u, _) in g.neighbors(v) {
            let du = &mut inside_deg[u as usize];
            if !in_set.contains(u) {
                buckets[*du as usize].remove(&u);
                buckets[*du as usize + 1].insert(u);
            }
            *du += 1;
        }
    };

    absorb(start, &mut in_set, &mut inside_deg, &mut buckets, &mut boundary);
    while in_set.len() < s {
        // Most inside-neighbors first (smallest boundary increase), then
        // smallest id; fall back to the smallest unused vertex if the
        // frontier is empty (the current component is exhausted).
        let pick = buckets
            .iter()
            .rev()
            .find_map(|b| b.iter().next().copied())
            .unwrap_or_else(|| (0..n).find(|&v| !in_set.contains(v)).expect("s < n"));
        absorb(pick, &mut in_set, &mut inside_deg, &mut buckets, &mut boundary);
    }

    // First-improvement swaps: exchange an inside vertex u for a frontier
    // vertex v when that strictly lowers the boundary, restarting the scan
    // after every applied swap. Swapping u out and v in changes the
    // boundary by 2(deg_in(u) − deg_in(v) + [u ~ v]).
    let mut swaps = 0u32;
    while swaps < SWAP_BUDGET {
        let mut improving: Option<(u32, u32)> = None;
        'scan: for u in in_set.ids() {
            let du = inside_deg[u as usize];
            for bucket in buckets.iter().rev() {
                for &v in bucket {
                    let dv = inside_deg[v as usize];
                    if dv <= du {
                        break; // buckets scan high-to-low: rest are no better
                    }
                    let adjacent = g.neighbors(u).any(|(w, _)| w == v);
                    if dv > du + u32::from(adjacent) {
                        improving = Some((u, v));
                        break 'scan;
                    }
                }
            }
        }
        let Some((u, v)) = improving else { break };
        let du = inside_deg[u as usize];
        in_set.remove(u);
        boundary -= i64::from(d) - 2 * i64::from(du);
        for (w, _) in g.neighbors(u) {
            let dw = &mut inside_deg[w as usize];
            *dw -= 1;
            if !in_set.contains(w) {
                buckets[*dw as usize + 1].remove(&w);
                if *dw > 0 {
                    buckets[*dw as usize].insert(w);
                }
            }
        }
        buckets[inside_deg[u as usize] as usize].insert(u);
        absorb(v, &mut in_set, &mut inside_deg, &mut buckets, &mut boundary);
        swaps += 1;
    }

    (boundary as u64, in_set.ids())
}

/// Which lower bound to compare a profile against.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BoundKind {
    /// d − log₂ s: holds for every (weak) pseudo-cube.
    PseudoCube,
    /// d − 8(1 + log₂ log₂ s): holds for every (weakly) dual systolic
    /// graph; vacuous where it is negative.
    DualSystolic,
}

/// Evaluate a lower bound for a d-regular graph at size s.
pub fn profile_bound(kind: BoundKind, dimension: u32, s: u32) -> f64 {
    let d = f64::from(dimension);
    let s = f64::from(s);
    match kind {
        BoundKind::PseudoCube => d - s.log2(),
        BoundKind::DualSystolic => {
            let loglog = if s <= 2.0 { 0.0 } else { s.log2().log2() };
            d - 8.0 * (1.0 + loglog)
        }
    }
}

/// Comparison slack for exact-rational-vs-float bound checks.
pub const BOUND_SLACK: f64 = 1e-9;

/// One row of a bound check: the profile value against the evaluated bound.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundCheck {
    pub s: u32,
    pub min_expansion: Rational,
    pub bound: f64,
    /// `min_expansion ≥ bound − 1e−9`.
    pub pass: bool,
}

/// Compare every row of a profile report against a lower bound.
pub fn check_profile_against_bounds(
    report: &ProfileReport,
    kind: BoundKind,
) -> Vec<BoundCheck> {
    report
        .rows
        .iter()
        .map(|row| {
            let bound = profile_bound(kind, report.dimension, row.s);
            let value = row
                .min_expansion
                .to_f64()
                .expect("profile values are small rationals");
            BoundCheck {
                s: row.s,
                min_expansion: row.min_expansion,
                bound,
                pass: value >= bound - BOUND_SLACK,
            }
        })
        .collect()
}
