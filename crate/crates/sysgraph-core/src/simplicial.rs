//! Pure chromatic non-branching simplicial complexes and their dual graphs.
//!
//! A complex here is given by its facets. It is *pure* of dimension d-1 if
//! every facet has exactly d vertices, *chromatic* if vertices carry colors
//! `1..=d` and every facet contains each color exactly once, and
//! *non-branching* if every co-dimension-1 face lies in exactly two facets.
//!
//! Under those three conditions the *dual graph* — one vertex per facet, one
//! edge per shared co-dimension-1 face — is a d-regular properly
//! edge-d-colored graph: the two facets sharing a face each complete it with
//! a vertex of the same (missing) color, and that color labels the edge.
//!
//! The combinatorial obstruction tracked by [`detect_empty_squares`] is a
//! 4-cycle in the one-skeleton with neither diagonal present; *alternating*
//! empty squares (opposite corners share a color) are the ones whose absence
//! forces the dual graph to be dual systolic.

use std::collections::{BTreeSet, HashMap};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::ColoredGraph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ComplexError {
    /// The number of colors must be a positive integer.
    #[error("number of colors must be at least 1")]
    InvalidDimension,
    /// Vertex ids must be exactly `0..num_vertices`.
    #[error("vertex ids must be 0..n without gaps or repeats (offending id {0})")]
    BadVertexIds(u32),
    /// A vertex color is outside `1..=num_colors`.
    #[error("vertex {vertex} has color {color}, outside 1..={num_colors}")]
    ColorOutOfRange {
        vertex: u32,
        color: u32,
        num_colors: u32,
    },
    /// A facet references a vertex id that was never declared.
    #[error("facet {facet} references undeclared vertex {vertex}")]
    UndeclaredVertex { facet: usize, vertex: u32 },
    /// A facet does not have exactly `num_colors` distinct vertices.
    #[error("facet {facet} has {size} distinct vertices, expected {expected}")]
    NotPure {
        facet: usize,
        size: usize,
        expected: usize,
    },
    /// A facet misses or repeats a color.
    #[error("facet {facet} contains color {color} {count} times, expected exactly once")]
    NotChromatic {
        facet: usize,
        color: u32,
        count: u32,
    },
    /// Two facets have the same vertex set.
    #[error("facets {first} and {second} are identical")]
    DuplicateFacet { first: usize, second: usize },
    /// A co-dimension-1 face lies in a number of facets other than two.
    #[error("face {face:?} lies in {count} facets, expected exactly 2")]
    Branching { face: Vec<u32>, count: u32 },
}

/// An unvalidated complex, as read from a file or built by hand.
///
/// `vertices` lists `(id, color)` pairs; ids must be exactly `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RawComplex {
    pub num_colors: u32,
    pub vertices: Vec<(u32, u32)>,
    pub facets: Vec<Vec<u32>>,
}

impl RawComplex {
    pub fn validate(&self) -> Result<ChromaticComplex, ComplexError> {
        ChromaticComplex::new(self.num_colors, &self.vertices, &self.facets)
    }
}

/// A validated pure chromatic non-branching complex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChromaticComplex {
    num_colors: u32,
    /// Color of each vertex, indexed by id.
    color_of: Vec<u32>,
    /// Facets in input order; each sorted ascending.
    facets: Vec<Vec<u32>>,
}

impl ChromaticComplex {
    /// Validate `(id, color)` vertex declarations and a facet list.
    ///
    /// Checks, in order: the color count is positive; vertex ids are exactly
    /// `0..n` (any order) with colors in range; every facet references
    /// declared vertices, has exactly `num_colors` distinct vertices
    /// (purity), and contains each color exactly once (chromaticity); no two
    /// facets coincide as sets; and every co-dimension-1 face lies in
    /// exactly two facets (non-branching).
    pub fn new(
        num_colors: u32,
        vertices: &[(u32, u32)],
        facets: &[Vec<u32>],
    ) -> Result<Self, ComplexError> {
        if num_colors == 0 {
            return Err(ComplexError::InvalidDimension);
        }
        let n = vertices.len();
        let mut color_of = vec![u32::MAX; n];
        for &(id, color) in vertices {
            if (id as usize) >= n || color_of[id as usize] != u32::MAX {
                return Err(ComplexError::BadVertexIds(id));
            }
            if color < 1 || color > num_colors {
                return Err(ComplexError::ColorOutOfRange {
                    vertex: id,
                    color,
                    num_colors,
                });
            }
            color_of[id as usize] = color;
        }

        let d = num_colors as usize;
        let mut sorted_facets = Vec::with_capacity(facets.len());
        for (fi, facet) in facets.iter().enumerate() {
            for &v in facet {
                if (v as usize) >= n {
                    return Err(ComplexError::UndeclaredVertex { facet: fi, vertex: v });
                }
            }
            let mut sorted = facet.clone();
            sorted.sort_unstable();
            sorted.dedup();
            if sorted.len() != d {
                return Err(ComplexError::NotPure {
                    facet: fi,
                    size: sorted.len(),
                    expected: d,
                });
            }
            let mut count = vec![0u32; d];
            for &v in &sorted {
                count[(color_of[v as usize] - 1) as usize] += 1;
            }
            for (ci, &k) in count.iter().enumerate() {
                if k != 1 {
                    return Err(ComplexError::NotChromatic {
                        facet: fi,
                        color: ci as u32 + 1,
                        count: k,
                    });
                }
            }
            sorted_facets.push(sorted);
        }

        let mut first_seen: HashMap<&[u32], usize> = HashMap::new();
        for (fi, facet) in sorted_facets.iter().enumerate() {
            if let Some(&first) = first_seen.get(facet.as_slice()) {
                return Err(ComplexError::DuplicateFacet { first, second: fi });
            }
            first_seen.insert(facet.as_slice(), fi);
        }

        let mut face_count: HashMap<Vec<u32>, u32> = HashMap::new();
        for facet in &sorted_facets {
            for drop in 0..d {
                let mut face = facet.clone();
                face.remove(drop);
                *face_count.entry(face).or_insert(0) += 1;
            }
        }
        for facet in &sorted_facets {
            for drop in 0..d {
                let mut face = facet.clone();
                face.remove(drop);
                let count = face_count[&face];
                if count != 2 {
                    return Err(ComplexError::Branching { face, count });
                }
            }
        }

        Ok(ChromaticComplex {
            num_colors,
            color_of,
            facets: sorted_facets,
        })
    }

    pub fn num_colors(&self) -> u32 {
        self.num_colors
    }

    pub fn num_vertices(&self) -> u32 {
        self.color_of.len() as u32
    }

    pub fn num_facets(&self) -> usize {
        self.facets.len()
    }

    pub fn color_of(&self, v: u32) -> u32 {
        self.color_of[v as usize]
    }

    /// Facets in input order, each sorted ascending.
    pub fn facets(&self) -> &[Vec<u32>] {
        &self.facets
    }

    /// `(id, color)` pairs, id-ascending (the canonical declaration order).
    pub fn vertex_list(&self) -> Vec<(u32, u32)> {
        self.color_of
            .iter()
            .enumerate()
            .map(|(id, &c)| (id as u32, c))
            .collect()
    }

    /// Indices of the facets containing `v`, ascending.
    pub fn star_facets(&self, v: u32) -> Vec<usize> {
        self.facets
            .iter()
            .enumerate()
            .filter(|(_, f)| f.binary_search(&v).is_ok())
            .map(|(i, _)| i)
            .collect()
    }

    /// Distinct vertex pairs that share a facet, as `(u, v)` with `u < v`,
    /// sorted lexicographically.
    pub fn one_skeleton(&self) -> Vec<(u32, u32)> {
        let mut edges = BTreeSet::new();
        for facet in &self.facets {
            for i in 0..facet.len() {
                for j in i + 1..facet.len() {
                    edges.insert((facet[i], facet[j]));
                }
            }
        }
        edges.into_iter().collect()
    }

    /// Unreduced Euler characteristic: the alternating sum over all
    /// non-empty faces of `(-1)^dim`.
    pub fn euler_characteristic(&self) -> i64 {
        let mut faces: BTreeSet<Vec<u32>> = BTreeSet::new();
        for facet in &self.facets {
            let d = facet.len();
            // Every non-empty subset of a facet is a face.
            for mask in 1u32..(1 << d) {
                let face: Vec<u32> = (0..d)
                    .filter(|&i| mask & (1 << i) != 0)
                    .map(|i| facet[i])
                    .collect();
                faces.insert(face);
            }
        }
        faces
            .iter()
            .map(|f| if f.len() % 2 == 1 { 1i64 } else { -1i64 })
            .sum()
    }

    /// The dual graph: one vertex per facet (same index), one edge per
    /// shared co-dimension-1 face, colored by the face's missing color.
    pub fn dual_graph(&self) -> ColoredGraph {
        let d = self.num_colors as usize;
        let mut face_owners: HashMap<Vec<u32>, (usize, u32)> = HashMap::new();
        let mut triples = Vec::with_capacity(self.facets.len() * d / 2);
        for (fi, facet) in self.facets.iter().enumerate() {
            for drop in 0..d {
                let dropped = facet[drop];
                let mut face = facet.clone();
                face.remove(drop);
                match face_owners.remove(&face) {
                    None => {
                        face_owners.insert(face, (fi, self.color_of(dropped)));
                    }
                    Some((other, color)) => {
                        debug_assert_eq!(color, self.color_of(dropped));
                        let (a, b) = (other.min(fi) as u32, other.max(fi) as u32);
                        triples.push((a, b, color));
                    }
                }
            }
        }
        triples.sort_unstable();
        ColoredGraph::from_edges(self.num_colors, self.facets.len() as u32, &triples)
            .expect("the dual graph of a valid complex is a valid colored graph")
    }

    /// All empty squares: 4-cycles `v1-u1-v2-u2` in the one-skeleton whose
    /// diagonals `(v1, v2)` and `(u1, u2)` are both non-edges. Each square
    /// is listed once, with `v1` its smallest vertex, `v2` the vertex
    /// opposite `v1`, and `u1 < u2`; the list is sorted by
    /// `(v1, v2, u1, u2)`.
    ///
    /// With `alternating_only`, keeps only squares where opposite corners
    /// have equal colors (`color(v1) = color(v2)` and
    /// `color(u1) = color(u2)`).
    pub fn detect_empty_squares(&self, alternating_only: bool) -> Vec<EmptySquare> {
        let n = self.color_of.len();
        let words = n.div_ceil(64);
        let mut adj = vec![0u64; n * words];
        for (u, v) in self.one_skeleton() {
            adj[u as usize * words + v as usize / 64] |= 1 << (v % 64);
            adj[v as usize * words + u as usize / 64] |= 1 << (u % 64);
        }
        let is_edge =
            |a: usize, b: usize| adj[a * words + b / 64] & (1u64 << (b % 64)) != 0;

        let mut out = Vec::new();
        let mut common = vec![0u64; words];
        for v1 in 0..n {
            for v2 in v1 + 1..n {
                if is_edge(v1, v2) {
                    continue;
                }
                for w in 0..words {
                    common[w] = adj[v1 * words + w] & adj[v2 * words + w];
                }
                let commons: Vec<usize> = (0..n)
                    .filter(|&u| common[u / 64] & (1u64 << (u % 64)) != 0)
                    .collect();
                for (i, &u1) in commons.iter().enumerate() {
                    if u1 <= v1 {
                        continue; // v1 must be the smallest corner
                    }
                    for &u2 in &commons[i + 1..] {
                        if is_edge(u1, u2) {
                            continue;
                        }
                        let alternating = self.color_of(v1 as u32)
                            == self.color_of(v2 as u32)
                            && self.color_of(u1 as u32) == self.color_of(u2 as u32);
                        if alternating_only && !alternating {
                            continue;
                        }
                        out.push(EmptySquare {
                            v1: v1 as u32,
                            u1: u1 as u32,
                            v2: v2 as u32,
                            u2: u2 as u32,
                            alternating,
                        });
                    }
                }
            }
        }
        out
    }

    /// All empty triangles: pairwise-adjacent vertex triples contained in no
    /// facet, sorted ascending.
    pub fn detect_empty_triangles(&self) -> Vec<[u32; 3]> {
        let skeleton = self.one_skeleton();
        let n = self.color_of.len();
        let mut neighbors: Vec<Vec<u32>> = vec![Vec::new(); n];
        for &(u, v) in &skeleton {
            neighbors[u as usize].push(v);
        }
        let facet_set: BTreeSet<&[u32]> =
            self.facets.iter().map(|f| f.as_slice()).collect();
        let in_some_facet = |t: &[u32; 3]| {
            if self.num_colors == 3 {
                return facet_set.contains(&t[..]);
            }
            self.facets
                .iter()
                .any(|f| t.iter().all(|v| f.binary_search(v).is_ok()))
        };
        let mut out = Vec::new();
        for a in 0..n as u32 {
            for i in 0..neighbors[a as usize].len() {
                let b = neighbors[a as usize][i];
                for j in i + 1..neighbors[a as usize].len() {
                    let c = neighbors[a as usize][j];
                    if neighbors[b as usize].binary_search(&c).is_ok() {
                        let t = [a, b, c];
                        if !in_some_facet(&t) {
                            out.push(t);
                        }
                    }
                }
            }
        }
        out
    }
}

/// An induced 4-cycle `v1-u1-v2-u2` with both diagonals missing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct EmptySquare {
    pub v1: u32,
    pub u1: u32,
    pub v2: u32,
    pub u2: u32,
    /// Opposite corners share a color on both diagonals.
    pub alternating: bool,
}

/// The boundary complex of the d-dimensional cube: directions `1..=d`, two
/// vertices per direction (`id(i, b) = 2(i-1) + b`, color i), and one facet
/// per point of `{0,1}^d` choosing a side in every direction. Facet index
/// equals the point read as a binary number (direction i is bit i-1), so
/// [`ChromaticComplex::dual_graph`] is edge-identical to
/// [`crate::constructions::boolean_cube`].
pub fn cube_complex(dimension: u32) -> Result<ChromaticComplex, ComplexError> {
    if dimension == 0 {
        return Err(ComplexError::InvalidDimension);
    }
    if dimension > 20 {
        // 2^d facets; anything bigger is not a desk-scale complex.
        return Err(ComplexError::InvalidDimension);
    }
    let d = dimension as usize;
    let vertices: Vec<(u32, u32)> = (0..2 * d as u32)
        .map(|id| (id, id / 2 + 1))
        .collect();
    let mut facets = Vec::with_capacity(1 << d);
    for x in 0..(1u32 << d) {
        let facet: Vec<u32> = (0..d as u32)
            .map(|i| 2 * i + ((x >> i) & 1))
            .collect();
        facets.push(facet);
    }
    ChromaticComplex::new(dimension, &vertices, &facets)
}

/// The card-deal complex for 3 players and 4 cards: vertices are
/// (player, card) pairs (`id(p, c) = 4(p-1) + (c-1)`, color p), and each way
/// of dealing three distinct cards to the players is a facet (ordered by the
/// deal `(a, b, c)` lexicographically). 12 vertices, 36 edges, 24 facets.
pub fn cards_complex() -> ChromaticComplex {
    let vertices: Vec<(u32, u32)> = (0..12).map(|id| (id, id / 4 + 1)).collect();
    let id = |player: u32, card: u32| 4 * (player - 1) + (card - 1);
    let mut facets = Vec::with_capacity(24);
    for a in 1..=4u32 {
        for b in (1..=4u32).filter(|&b| b != a) {
            for c in (1..=4u32).filter(|&c| c != a && c != b) {
                facets.push(vec![id(1, a), id(2, b), id(3, c)]);
            }
        }
    }
    ChromaticComplex::new(3, &vertices, &facets)
        .expect("the card-deal complex is valid by construction")
}
