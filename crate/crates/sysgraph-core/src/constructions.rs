//! Graph families: boolean cubes and clique products.
//!
//! Both families are d-regular with a canonical proper edge d-coloring.
//!
//! The d-dimensional boolean cube has vertex set `0..2^d`; color i joins
//! each vertex to the one differing in bit i-1.
//!
//! The d-dimensional clique product `CP^(d)` is built recursively:
//! `CP^(1)` is a single edge, and `CP^(d+1)` is obtained from `CP^(d)` by
//! [`replace_with_clique`]. Writing `n` for the vertex count of `CP^(d)`,
//! that step takes `m = n + 1` disjoint copies and adds a new perfect
//! matching in color d+1: in copy j, the vertex with local label
//! `i` (labels `1..=n`) is matched to the vertex with local label `m - i`
//! in copy `(i + j) mod m`. The vertex counts grow by `n ↦ n(n + 1)`,
//! giving 2, 6, 42, 1806, 3263442, ...

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::ColoredGraph;

/// Vertex counts above this are rejected by [`clique_size_sequence`]: they
/// are no longer exactly representable as f64 sizes, and nothing at this
/// scale is materializable anyway.
pub const MAX_REPRESENTABLE_VERTICES: u64 = 1 << 53;

/// Largest graph the builders will materialize. `CP^(5)` (3,263,442
/// vertices) fits comfortably; the next clique product would need ~10^13
/// vertices and is out of reach of any in-memory representation.
pub const MAX_BUILD_VERTICES: u64 = 1 << 26;

/// Boolean cubes beyond this dimension are rejected.
pub const MAX_CUBE_DIMENSION: u32 = 30;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    /// The dimension (number of colors) must be a positive integer.
    #[error("dimension must be at least 1")]
    InvalidDimension,
    /// The requested family member is beyond the supported dimension range.
    #[error("dimension {requested} too large; largest supported is {max_dimension}")]
    DimensionTooLarge { requested: u32, max_dimension: u32 },
    /// A size computation left the exactly-representable integer range.
    #[error(
        "vertex count for dimension {requested} exceeds 2^53; largest representable dimension is {max_dimension}"
    )]
    Overflow { requested: u32, max_dimension: u32 },
    /// The graph is representable but too large to materialize.
    #[error("output would have {num_vertices} vertices; the largest buildable graph has {max} vertices")]
    TooManyVertices { num_vertices: u64, max: u64 },
}

/// The d-dimensional boolean cube: vertices `0..2^d`, color i flips bit i-1.
pub fn boolean_cube(dimension: u32) -> Result<ColoredGraph, ConstructionError> {
    if dimension == 0 {
        return Err(ConstructionError::InvalidDimension);
    }
    if dimension > MAX_CUBE_DIMENSION {
        return Err(ConstructionError::DimensionTooLarge {
            requested: dimension,
            max_dimension: MAX_CUBE_DIMENSION,
        });
    }
    let d = dimension as usize;
    let n: usize = 1 << dimension;
    let mut slots = vec![0u32; n * d];
    for v in 0..n {
        for ci in 0..d {
            slots[v * d + ci] = (v ^ (1 << ci)) as u32;
        }
    }
    Ok(ColoredGraph::from_matching_slots(dimension, n as u32, slots))
}

/// Vertex counts of the clique products `CP^(1)..=CP^(dimension)`.
///
/// Starts at 2 and squares-plus-self at each step: `n ↦ n(n + 1)`. Every
/// term must stay within [`MAX_REPRESENTABLE_VERTICES`]; the largest
/// dimension satisfying that is 6.
pub fn clique_size_sequence(dimension: u32) -> Result<Vec<u64>, ConstructionError> {
    if dimension == 0 {
        return Err(ConstructionError::InvalidDimension);
    }
    let mut seq = vec![2u64];
    while (seq.len() as u32) < dimension {
        let n = *seq.last().expect("sequence is non-empty");
        match n.checked_mul(n + 1) {
            Some(next) if next <= MAX_REPRESENTABLE_VERTICES => seq.push(next),
            _ => {
                return Err(ConstructionError::Overflow {
                    requested: dimension,
                    max_dimension: seq.len() as u32,
                })
            }
        }
    }
    Ok(seq)
}

/// One clique-product step: from a d-colored graph on n vertices to a
/// (d+1)-colored graph on n(n+1) vertices.
///
/// Takes `m = n + 1` disjoint copies of the input (copy j occupies the
/// vertex id interval `[j*n, (j+1)*n)`, preserving local ids and colors) and
/// matches them up in a new color d+1: the vertex with local label `i`
/// (labels are `1..=n`, so label = local id + 1) in copy j is joined to the
/// vertex with local label `m - i` in copy `(i + j) mod m`. That rule is an
/// involution without fixed points, so the new color is a perfect matching
/// and the output is again a valid colored graph.
pub fn replace_with_clique(g: &ColoredGraph) -> Result<ColoredGraph, ConstructionError> {
    let n = u64::from(g.num_vertices());
    let m = n + 1;
    let total = n * m;
    if total > MAX_BUILD_VERTICES {
        return Err(ConstructionError::TooManyVertices {
            num_vertices: total,
            max: MAX_BUILD_VERTICES,
        });
    }
    let d_old = g.dimension();
    let d_new = d_old + 1;
    let nn = n as usize;
    let dn = d_new as usize;
    let mut slots = vec![u32::MAX; total as usize * dn];
    for j in 0..m {
        let base = (j * n) as usize;
        for v in 0..nn {
            let row = (base + v) * dn;
            for c in 1..=d_old {
                slots[row + (c - 1) as usize] = base as u32 + g.neighbor(v as u32, c);
            }
            let label = v as u64 + 1;
            let target_copy = (label + j) % m;
            let target_local = (m - label - 1) as usize;
            slots[row + dn - 1] = (target_copy * n) as u32 + target_local as u32;
        }
    }
    Ok(ColoredGraph::from_matching_slots(
        d_new,
        total as u32,
        slots,
    ))
}

/// The d-dimensional clique product `CP^(d)`.
pub fn clique_product(dimension: u32) -> Result<ColoredGraph, ConstructionError> {
    let sizes = clique_size_sequence(dimension)?;
    let final_size = *sizes.last().expect("sequence is non-empty");
    if final_size > MAX_BUILD_VERTICES {
        return Err(ConstructionError::TooManyVertices {
            num_vertices: final_size,
            max: MAX_BUILD_VERTICES,
        });
    }
    // CP^(1) is a single edge in color 1.
    let mut g = ColoredGraph::from_matching_slots(1, 2, vec![1, 0]);
    for _ in 1..dimension {
        g = replace_with_clique(&g)?;
    }
    Ok(g)
}

/// Which family to construct.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    Cube,
    CliqueProduct,
}

/// A buildable family member: family plus dimension.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilySpec {
    pub family: Family,
    pub dimension: u32,
}

impl FamilySpec {
    pub fn build(&self) -> Result<ColoredGraph, ConstructionError> {
        match self.family {
            Family::Cube => boolean_cube(self.dimension),
            Family::CliqueProduct => clique_product(self.dimension),
        }
    }

    /// The vertex count the built graph will have, without building it.
    pub fn expected_vertices(&self) -> Result<u64, ConstructionError> {
        match self.family {
            Family::Cube => {
                if self.dimension == 0 {
                    Err(ConstructionError::InvalidDimension)
                } else if self.dimension > MAX_CUBE_DIMENSION {
                    Err(ConstructionError::DimensionTooLarge {
                        requested: self.dimension,
                        max_dimension: MAX_CUBE_DIMENSION,
                    })
                } else {
                    Ok(1u64 << self.dimension)
                }
            }
            Family::CliqueProduct => Ok(*clique_size_sequence(self.dimension)?
                .last()
                .expect("sequence is non-empty")),
        }
    }
}
