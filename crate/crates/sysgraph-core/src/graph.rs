//! Properly edge-colored regular graphs.
//!
//! A [`ColoredGraph`] is a simple d-regular graph together with a proper edge
//! d-coloring: every vertex is incident to exactly one edge of each color
//! `1..=d`, so the edges of a fixed color form a perfect matching and
//! `neighbor(v, c)` is a well-defined involution for each color.
//!
//! Construction goes through [`ColoredGraph::from_edges`], which checks
//! simplicity, regularity, and properness, reporting the first violation in a
//! deterministic scan order (edges in input order for range/simplicity
//! violations, then vertices ascending and colors ascending for degree and
//! coloring violations). Everything downstream — restriction to a color
//! subset, connected components, and the contract-all-but-one-color quotient —
//! is deterministic as well, so identical inputs give identical outputs.

use std::collections::{BTreeMap, HashSet};

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Violations detected while validating or transforming a colored graph.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    /// The dimension (number of colors) must be a positive integer.
    #[error("dimension must be at least 1")]
    InvalidDimension,
    /// The vertex count must be a positive integer.
    #[error("graph must have at least one vertex")]
    NoVertices,
    /// An edge endpoint is not in `0..num_vertices`.
    #[error("vertex {0} out of range")]
    VertexOutOfRange(u32),
    /// An edge joins a vertex to itself.
    #[error("self-loop at vertex {0}")]
    SelfLoop(u32),
    /// Two edges join the same pair of vertices (regardless of color).
    #[error("duplicate edge between vertices {0} and {1}")]
    DuplicateEdge(u32, u32),
    /// A vertex has the wrong degree.
    #[error("vertex {vertex} has degree {degree}, expected {expected}")]
    NotRegular {
        vertex: u32,
        degree: u32,
        expected: u32,
    },
    /// A vertex sees a color on zero or several incident edges.
    #[error("vertex {vertex} has {count} incident edges of color {color}, expected exactly 1")]
    ImproperColoring { vertex: u32, color: u32, count: u32 },
    /// A color label is outside `1..=dimension`.
    #[error("color {0} out of range")]
    ColorOutOfRange(u32),
    /// A connected component of a restriction failed re-validation. This
    /// cannot happen for components of a valid graph (properness is a
    /// per-vertex condition, and components are closed under the kept
    /// matchings); it is kept as a defensive error for the recursive
    /// verifiers.
    #[error("component is not a valid colored graph: {0}")]
    ComponentNotRegular(Box<GraphError>),
}

/// An unvalidated edge list, as read from a file or built by hand.
///
/// `edges` are triples `(u, v, color)` with colors in `1..=dimension`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RawGraph {
    pub dimension: u32,
    pub num_vertices: u32,
    pub edges: Vec<(u32, u32, u32)>,
}

impl RawGraph {
    /// Validate into a [`ColoredGraph`]; see [`ColoredGraph::from_edges`].
    pub fn validate(&self) -> Result<ColoredGraph, GraphError> {
        ColoredGraph::from_edges(self.dimension, self.num_vertices, &self.edges)
    }
}

/// A validated d-regular, properly edge-d-colored simple graph.
///
/// Stored as one neighbor slot per (vertex, color) pair, so color-respecting
/// adjacency queries are O(1) and the whole structure is `n * d` words.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoredGraph {
    dimension: u32,
    num_vertices: u32,
    /// `neighbor_by_color[v * d + (c - 1)]` is the color-c neighbor of v.
    neighbor_by_color: Vec<u32>,
}

impl ColoredGraph {
    /// Validate an edge list into a colored graph.
    ///
    /// Checks, in order: the dimension and vertex count are positive; every
    /// endpoint is in range; no edge is a self-loop; colors lie in
    /// `1..=dimension`; no two edges join the same vertex pair; every vertex
    /// has degree exactly `dimension`; and every vertex sees each color
    /// exactly once. The first violation (edges scanned in input order,
    /// then vertices ascending, colors ascending) is returned.
    pub fn from_edges(
        dimension: u32,
        num_vertices: u32,
        edges: &[(u32, u32, u32)],
    ) -> Result<Self, GraphError> {
        if dimension == 0 {
            return Err(GraphError::InvalidDimension);
        }
        if num_vertices == 0 {
            return Err(GraphError::NoVertices);
        }
        let d = dimension as usize;
        let n = num_vertices as usize;

        for &(u, v, c) in edges {
            if u >= num_vertices {
                return Err(GraphError::VertexOutOfRange(u));
            }
            if v >= num_vertices {
                return Err(GraphError::VertexOutOfRange(v));
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if c < 1 || c > dimension {
                return Err(GraphError::ColorOutOfRange(c));
            }
        }

        let mut seen = HashSet::with_capacity(edges.len());
        for &(u, v, _) in edges {
            let key = if u < v { (u, v) } else { (v, u) };
            if !seen.insert(key) {
                return Err(GraphError::DuplicateEdge(key.0, key.1));
            }
        }

        let mut degree = vec![0u32; n];
        let mut color_count = vec![0u32; n * d];
        for &(u, v, c) in edges {
            let ci = (c - 1) as usize;
            degree[u as usize] += 1;
            degree[v as usize] += 1;
            color_count[u as usize * d + ci] += 1;
            color_count[v as usize * d + ci] += 1;
        }
        for v in 0..n {
            if degree[v] != dimension {
                return Err(GraphError::NotRegular {
                    vertex: v as u32,
                    degree: degree[v],
                    expected: dimension,
                });
            }
            for ci in 0..d {
                let count = color_count[v * d + ci];
                if count != 1 {
                    return Err(GraphError::ImproperColoring {
                        vertex: v as u32,
                        color: ci as u32 + 1,
                        count,
                    });
                }
            }
        }

        let mut neighbor_by_color = vec![u32::MAX; n * d];
        for &(u, v, c) in edges {
            let ci = (c - 1) as usize;
            neighbor_by_color[u as usize * d + ci] = v;
            neighbor_by_color[v as usize * d + ci] = u;
        }
        Ok(ColoredGraph {
            dimension,
            num_vertices,
            neighbor_by_color,
        })
    }

    /// Build directly from filled neighbor slots.
    ///
    /// Used by the graph constructions, which produce the slot table in one
    /// pass. The defining invariants (slots filled, per-color involution, no
    /// self-loops, distinct neighbors per vertex) are asserted; they hold by
    /// construction, so a failure here is a bug in the caller.
    pub(crate) fn from_matching_slots(
        dimension: u32,
        num_vertices: u32,
        neighbor_by_color: Vec<u32>,
    ) -> Self {
        let d = dimension as usize;
        let n = num_vertices as usize;
        assert!(dimension >= 1 && num_vertices >= 1);
        assert_eq!(neighbor_by_color.len(), n * d);
        for v in 0..n {
            let slots = &neighbor_by_color[v * d..(v + 1) * d];
            for (ci, &u) in slots.iter().enumerate() {
                assert!((u as usize) < n, "neighbor out of range");
                assert_ne!(u as usize, v, "self-loop");
                assert_eq!(
                    neighbor_by_color[u as usize * d + ci] as usize,
                    v,
                    "color {} is not an involution at vertex {}",
                    ci + 1,
                    v
                );
            }
            for i in 1..d {
                for j in 0..i {
                    assert_ne!(slots[i], slots[j], "parallel edges at vertex {v}");
                }
            }
        }
        ColoredGraph {
            dimension,
            num_vertices,
            neighbor_by_color,
        }
    }

    /// Number of colors (= degree of every vertex).
    pub fn dimension(&self) -> u32 {
        self.dimension
    }

    pub fn num_vertices(&self) -> u32 {
        self.num_vertices
    }

    /// Total number of edges, `n * d / 2`.
    pub fn num_edges(&self) -> u64 {
        u64::from(self.num_vertices) * u64::from(self.dimension) / 2
    }

    /// The unique color-`color` neighbor of `v`. O(1).
    pub fn neighbor(&self, v: u32, color: u32) -> u32 {
        debug_assert!(v < self.num_vertices);
        debug_assert!(color >= 1 && color <= self.dimension);
        self.neighbor_by_color[v as usize * self.dimension as usize + (color - 1) as usize]
    }

    /// All neighbors of `v` with their edge colors, colors ascending.
    pub fn neighbors(&self, v: u32) -> impl Iterator<Item = (u32, u32)> + '_ {
        let d = self.dimension as usize;
        self.neighbor_by_color[v as usize * d..(v + 1) as usize * d]
            .iter()
            .enumerate()
            .map(|(ci, &u)| (u, ci as u32 + 1))
    }

    /// The canonical edge list: triples `(u, v, color)` with `u < v`, sorted
    /// lexicographically. This is the serialization order.
    pub fn edge_triples(&self) -> Vec<(u32, u32, u32)> {
        let mut out = Vec::with_capacity(self.num_edges() as usize);
        let mut local: Vec<(u32, u32)> = Vec::with_capacity(self.dimension as usize);
        for u in 0..self.num_vertices {
            local.clear();
            for (v, c) in self.neighbors(u) {
                if v > u {
                    local.push((v, c));
                }
            }
            local.sort_unstable();
            out.extend(local.iter().map(|&(v, c)| (u, v, c)));
        }
        out
    }

    /// Keep only the edges whose color lies in `keep` (deduplicated).
    ///
    /// The result has the same vertex set; its edge count is
    /// `|keep| * n / 2` since each color is a perfect matching.
    pub fn restrict(&self, keep: &[u32]) -> Result<Subgraph, GraphError> {
        let mut colors = keep.to_vec();
        colors.sort_unstable();
        colors.dedup();
        for &c in &colors {
            if c < 1 || c > self.dimension {
                return Err(GraphError::ColorOutOfRange(c));
            }
        }
        let mut edges =
            Vec::with_capacity(colors.len() * self.num_vertices as usize / 2);
        for u in 0..self.num_vertices {
            let mut local: Vec<(u32, u32)> = Vec::new();
            for &c in &colors {
                let v = self.neighbor(u, c);
                if v > u {
                    local.push((v, c));
                }
            }
            local.sort_unstable();
            edges.extend(local.iter().map(|&(v, c)| (u, v, c)));
        }
        Ok(Subgraph {
            num_vertices: self.num_vertices,
            colors,
            edges,
        })
    }

    /// Connected components of the restriction to `keep`, without
    /// materializing the edge list. Agrees with
    /// `self.restrict(keep)?.components()`.
    pub fn components_with_colors(&self, keep: &[u32]) -> Result<Partition, GraphError> {
        let mut colors = keep.to_vec();
        colors.sort_unstable();
        colors.dedup();
        for &c in &colors {
            if c < 1 || c > self.dimension {
                return Err(GraphError::ColorOutOfRange(c));
            }
        }
        let mut uf = UnionFind::new(self.num_vertices as usize);
        for v in 0..self.num_vertices {
            for &c in &colors {
                uf.union(v as usize, self.neighbor(v, c) as usize);
            }
        }
        Ok(Partition::from_union_find(&mut uf))
    }

    /// Contract every edge whose color is not `color`; color-`color` edges
    /// survive as a multigraph on the contraction blocks.
    ///
    /// Each surviving edge maps to either a loop (both endpoints in one
    /// block) or a block pair; multiplicities are kept. The total edge count
    /// of the quotient is always `n / 2` (one per color-`color` edge).
    pub fn contract_except(&self, color: u32) -> Result<QuotientMultigraph, GraphError> {
        if color < 1 || color > self.dimension {
            return Err(GraphError::ColorOutOfRange(color));
        }
        let others: Vec<u32> = (1..=self.dimension).filter(|&c| c != color).collect();
        let partition = self.components_with_colors(&others)?;
        Ok(self.contract_except_with(color, partition))
    }

    /// [`Self::contract_except`] when the partition into components of the
    /// other colors is already at hand (the recursive verifiers reuse it for
    /// their descent).
    pub fn contract_except_with(&self, color: u32, partition: Partition) -> QuotientMultigraph {
        let mut parallel_edges: BTreeMap<(u32, u32), u32> = BTreeMap::new();
        let mut self_loops: BTreeMap<u32, u32> = BTreeMap::new();
        for v in 0..self.num_vertices {
            let u = self.neighbor(v, color);
            if u > v {
                let a = partition.block_of(v);
                let b = partition.block_of(u);
                if a == b {
                    *self_loops.entry(a).or_insert(0) += 1;
                } else {
                    let key = if a < b { (a, b) } else { (b, a) };
                    *parallel_edges.entry(key).or_insert(0) += 1;
                }
            }
        }
        QuotientMultigraph {
            color,
            partition,
            parallel_edges,
            self_loops,
        }
    }
}

/// The restriction of a colored graph to a subset of its colors.
///
/// Vertices are unchanged; `edges` is the canonical sorted triple list over
/// the kept colors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subgraph {
    pub num_vertices: u32,
    /// Kept colors, ascending and deduplicated.
    pub colors: Vec<u32>,
    /// Triples `(u, v, color)` with `u < v`, sorted lexicographically.
    pub edges: Vec<(u32, u32, u32)>,
}

impl Subgraph {
    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    /// Connected components (isolated vertices form singleton blocks).
    pub fn components(&self) -> Partition {
        let mut uf = UnionFind::new(self.num_vertices as usize);
        for &(u, v, _) in &self.edges {
            uf.union(u as usize, v as usize);
        }
        Partition::from_union_find(&mut uf)
    }
}

/// A partition of `0..n` into connected components, in canonical form:
/// blocks are numbered in order of their smallest vertex and each block
/// lists its vertices ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    block_of: Vec<u32>,
    blocks: Vec<Vec<u32>>,
}

impl Partition {
    fn from_union_find(uf: &mut UnionFind) -> Self {
        let n = uf.len();
        let mut root_block = vec![u32::MAX; n];
        let mut block_of = vec![0u32; n];
        let mut blocks: Vec<Vec<u32>> = Vec::new();
        for v in 0..n {
            let root = uf.find(v);
            let b = if root_block[root] == u32::MAX {
                blocks.push(Vec::new());
                root_block[root] = (blocks.len() - 1) as u32;
                root_block[root]
            } else {
                root_block[root]
            };
            block_of[v] = b;
            blocks[b as usize].push(v as u32);
        }
        Partition { block_of, blocks }
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    /// The block id containing vertex `v`.
    pub fn block_of(&self, v: u32) -> u32 {
        self.block_of[v as usize]
    }

    /// All blocks; block `i` is `blocks()[i]`, vertices ascending.
    pub fn blocks(&self) -> &[Vec<u32>] {
        &self.blocks
    }
}

/// The multigraph obtained by contracting all edges of every color except
/// one. Nodes are contraction blocks; the surviving matching's edges keep
/// their multiplicities, split into proper edges and loops.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientMultigraph {
    /// The surviving color.
    pub color: u32,
    /// The contraction blocks (components of the other colors).
    pub partition: Partition,
    /// Multiplicity of each block pair `(a, b)` with `a < b`.
    pub parallel_edges: BTreeMap<(u32, u32), u32>,
    /// Loop count at each block.
    pub self_loops: BTreeMap<u32, u32>,
}

impl QuotientMultigraph {
    pub fn num_nodes(&self) -> usize {
        self.partition.num_blocks()
    }

    /// Total surviving edges (loops included); always `n / 2`.
    pub fn num_edges(&self) -> u64 {
        let pairs: u64 = self.parallel_edges.values().map(|&m| u64::from(m)).sum();
        let loops: u64 = self.self_loops.values().map(|&m| u64::from(m)).sum();
        pairs + loops
    }

    pub fn has_self_loops(&self) -> bool {
        !self.self_loops.is_empty()
    }

    /// Largest pair multiplicity (0 if there are no proper edges).
    pub fn max_multiplicity(&self) -> u32 {
        self.parallel_edges.values().copied().max().unwrap_or(0)
    }

    /// Loop-free and every pair multiplicity is 1.
    pub fn is_simple(&self) -> bool {
        !self.has_self_loops() && self.max_multiplicity() <= 1
    }
}

/// Disjoint-set forest with path halving and union by size.
#[derive(Debug, Clone)]
pub struct UnionFind {
    parent: Vec<u32>,
    size: Vec<u32>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n as u32).collect(),
            size: vec![1; n],
        }
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] as usize != x {
            let grandparent = self.parent[self.parent[x] as usize];
            self.parent[x] = grandparent;
            x = grandparent as usize;
        }
        x
    }

    /// Union the sets containing `a` and `b`; returns false if already joined.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let mut ra = self.find(a);
        let mut rb = self.find(b);
        if ra == rb {
            return false;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra as u32;
        self.size[ra] += self.size[rb];
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// K_4 with its unique proper 3-edge-coloring.
    fn k4() -> ColoredGraph {
        ColoredGraph::from_edges(
            3,
            4,
            &[
                (0, 1, 1),
                (2, 3, 1),
                (0, 2, 2),
                (1, 3, 2),
                (0, 3, 3),
                (1, 2, 3),
            ],
        )
        .unwrap()
    }

    /// The 2-dimensional boolean cube: a 4-cycle, color i flips bit i.
    fn cube2() -> ColoredGraph {
        ColoredGraph::from_edges(2, 4, &[(0, 1, 1), (2, 3, 1), (0, 2, 2), (1, 3, 2)]).unwrap()
    }

    /// The 6-cycle 0-1-4-5-2-3-0 with the clique-product coloring.
    fn six_cycle() -> ColoredGraph {
        ColoredGraph::from_edges(
            2,
            6,
            &[
                (0, 1, 1),
                (2, 3, 1),
                (4, 5, 1),
                (0, 3, 2),
                (1, 4, 2),
                (2, 5, 2),
            ],
        )
        .unwrap()
    }

    #[test]
    fn accepts_valid_graphs() {
        let g = k4();
        assert_eq!(g.dimension(), 3);
        assert_eq!(g.num_vertices(), 4);
        assert_eq!(g.num_edges(), 6);
        assert_eq!(g.neighbor(0, 1), 1);
        assert_eq!(g.neighbor(0, 2), 2);
        assert_eq!(g.neighbor(0, 3), 3);
        assert_eq!(g.neighbor(3, 1), 2);
    }

    #[test]
    fn rejects_self_loop() {
        let err = ColoredGraph::from_edges(1, 2, &[(0, 0, 1)]).unwrap_err();
        assert_eq!(err, GraphError::SelfLoop(0));
    }

    #[test]
    fn rejects_duplicate_edge_regardless_of_color_or_orientation() {
        let err =
            ColoredGraph::from_edges(2, 2, &[(0, 1, 1), (1, 0, 2)]).unwrap_err();
        assert_eq!(err, GraphError::DuplicateEdge(0, 1));
    }

    #[test]
    fn rejects_color_out_of_range() {
        let err = ColoredGraph::from_edges(1, 2, &[(0, 1, 2)]).unwrap_err();
        assert_eq!(err, GraphError::ColorOutOfRange(2));
        let err = ColoredGraph::from_edges(1, 2, &[(0, 1, 0)]).unwrap_err();
        assert_eq!(err, GraphError::ColorOutOfRange(0));
    }

    #[test]
    fn rejects_wrong_degree() {
        // 6-cycle colored 1,2,3,1,2,3: every vertex has degree 2, not 3.
        let err = ColoredGraph::from_edges(
            3,
            6,
            &[
                (0, 1, 1),
                (1, 2, 2),
                (2, 3, 3),
                (3, 4, 1),
                (4, 5, 2),
                (5, 0, 3),
            ],
        )
        .unwrap_err();
        assert_eq!(
            err,
            GraphError::NotRegular {
                vertex: 0,
                degree: 2,
                expected: 3
            }
        );
    }

    #[test]
    fn rejects_improper_coloring() {
        // Triangle with colors 1,2,2: vertex 2 is regular (degree 2) but
        // misses color 1 and sees color 2 twice. The scan reports the
        // missing color first (colors ascending).
        let err =
            ColoredGraph::from_edges(2, 3, &[(0, 1, 1), (1, 2, 2), (2, 0, 2)]).unwrap_err();
        assert_eq!(
            err,
            GraphError::ImproperColoring {
                vertex: 2,
                color: 1,
                count: 0
            }
        );
    }

    #[test]
    fn rejects_vertex_out_of_range() {
        let err = ColoredGraph::from_edges(1, 2, &[(0, 5, 1)]).unwrap_err();
        assert_eq!(err, GraphError::VertexOutOfRange(5));
    }

    #[test]
    fn edge_triples_round_trip() {
        for g in [k4(), cube2(), six_cycle()] {
            let triples = g.edge_triples();
            let rebuilt =
                ColoredGraph::from_edges(g.dimension(), g.num_vertices(), &triples).unwrap();
            assert_eq!(g, rebuilt);
            let mut sorted = triples.clone();
            sorted.sort_unstable();
            assert_eq!(triples, sorted, "edge_triples must be lex-sorted");
        }
    }

    #[test]
    fn restrict_keeps_one_matching_per_color() {
        let g = k4();
        let sub = g.restrict(&[1]).unwrap();
        assert_eq!(sub.edges, vec![(0, 1, 1), (2, 3, 1)]);
        let parts = sub.components();
        assert_eq!(parts.num_blocks(), 2);
        assert_eq!(parts.blocks()[0], vec![0, 1]);
        assert_eq!(parts.blocks()[1], vec![2, 3]);
    }

    #[test]
    fn restrict_rejects_bad_color() {
        let g = k4();
        assert_eq!(
            g.restrict(&[4]).unwrap_err(),
            GraphError::ColorOutOfRange(4)
        );
    }

    #[test]
    fn fast_components_agree_with_restriction() {
        for g in [k4(), cube2(), six_cycle()] {
            let d = g.dimension();
            for c in 1..=d {
                let keep: Vec<u32> = (1..=d).filter(|&x| x != c).collect();
                let via_subgraph = g.restrict(&keep).unwrap().components();
                let direct = g.components_with_colors(&keep).unwrap();
                assert_eq!(via_subgraph, direct);
            }
        }
    }

    #[test]
    fn cube2_quotient_has_a_double_edge() {
        // Contracting all but color 1 in the 4-cycle leaves 2 nodes joined
        // by a pair of parallel edges.
        let q = cube2().contract_except(1).unwrap();
        assert_eq!(q.num_nodes(), 2);
        assert!(!q.has_self_loops());
        assert_eq!(q.parallel_edges.get(&(0, 1)), Some(&2));
        assert_eq!(q.max_multiplicity(), 2);
        assert!(!q.is_simple());
        assert_eq!(q.num_edges(), 2);
    }

    #[test]
    fn six_cycle_quotient_is_a_triangle() {
        let q = six_cycle().contract_except(1).unwrap();
        assert_eq!(q.num_nodes(), 3);
        assert!(!q.has_self_loops());
        assert_eq!(q.max_multiplicity(), 1);
        assert!(q.is_simple());
        let pairs: Vec<(u32, u32)> = q.parallel_edges.keys().copied().collect();
        assert_eq!(pairs, vec![(0, 1), (0, 2), (1, 2)]);
    }

    #[test]
    fn k4_quotient_is_a_single_node_with_two_loops() {
        let q = k4().contract_except(1).unwrap();
        assert_eq!(q.num_nodes(), 1);
        assert!(q.has_self_loops());
        assert_eq!(q.self_loops.get(&0), Some(&2));
        assert_eq!(q.num_edges(), 2);
    }

    #[test]
    fn quotient_edge_count_is_always_half_the_vertices() {
        for g in [k4(), cube2(), six_cycle()] {
            for c in 1..=g.dimension() {
                let q = g.contract_except(c).unwrap();
                assert_eq!(q.num_edges(), u64::from(g.num_vertices()) / 2);
            }
        }
    }

    #[test]
    fn union_find_groups_elements() {
        let mut uf = UnionFind::new(6);
        assert!(uf.union(0, 1));
        assert!(uf.union(2, 3));
        assert!(uf.union(1, 2));
        assert!(!uf.union(0, 3));
        assert_eq!(uf.find(0), uf.find(3));
        assert_ne!(uf.find(0), uf.find(4));
    }
}
