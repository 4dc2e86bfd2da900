//! Properly edge-colored regular graphs and the dual systolic hierarchy.
//!
//! The library is organized around [`graph::ColoredGraph`]: a d-regular graph
//! with a proper edge d-coloring, so the edges of each color form a perfect
//! matching. On top of that sit:
//!
//! - [`constructions`]: boolean cubes and clique products, the two graph
//!   families of interest;
//! - [`simplicial`]: pure chromatic non-branching complexes and their dual
//!   graphs;
//! - [`verify`]: decision procedures (with witnesses) for the pseudo-cube /
//!   dual systolic hierarchy;
//! - [`isoperimetry`]: exact and heuristic vertex-expansion profiles;
//! - [`bounds`]: the bounding-function calculus behind the isoperimetric
//!   lower bounds;
//! - [`spectral`]: dense spectra, eigenvalue counting by matrix inertia, and
//!   threshold-rank certificates;
//! - [`io`]: canonical JSON graph/complex formats, DOT and CSV export;
//! - [`fixtures`]: a small corpus of named graphs and complexes for tests.

pub mod bounds;
pub mod constructions;
pub mod fixtures;
pub mod graph;
pub mod io;
pub mod isoperimetry;
pub mod simplicial;
pub mod spectral;
pub mod verify;

/// Exact expansion values are ratios of small integers.
pub type Rational = num_rational::Ratio<i64>;
