//! Small named graphs and complexes, plus seeded random generators.
//!
//! Property tests and bound checks run over this corpus: hand-built
//! fixtures pin known verdicts (the one-factorized K₄ is *not* a
//! pseudo-cube, even cycles are), while the random generators supply
//! arbitrarily many valid inputs reproducibly from a 64-bit seed.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::collections::HashSet;
use thiserror::Error;

use crate::constructions::{boolean_cube, clique_product};
use crate::graph::ColoredGraph;
use crate::simplicial::{cards_complex, cube_complex, ChromaticComplex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FixtureError {
    #[error("matchings need an even vertex count (got {0})")]
    OddVertexCount(u32),
    #[error("{dimension} disjoint matchings need at least {min} vertices (got {got})")]
    TooFewVertices { dimension: u32, min: u32, got: u32 },
    #[error("no {dimension} disjoint matchings on {num_vertices} vertices found in {attempts} attempts")]
    GenerationFailed {
        dimension: u32,
        num_vertices: u32,
        attempts: u32,
    },
}

/// The 1-regular graph pairing 2i with 2i+1.
pub fn perfect_matching(num_vertices: u32) -> Result<ColoredGraph, FixtureError> {
    if num_vertices == 0 || num_vertices % 2 != 0 {
        return Err(FixtureError::OddVertexCount(num_vertices));
    }
    let edges: Vec<(u32, u32, u32)> = (0..num_vertices / 2).map(|i| (2 * i, 2 * i + 1, 1)).collect();
    Ok(ColoredGraph::from_edges(1, num_vertices, &edges).expect("a matching is always valid"))
}

/// The cycle 0-1-…-(L−1)-0 with colors alternating 1, 2; length must be
/// even and at least 4.
pub fn two_colored_cycle(length: u32) -> Result<ColoredGraph, FixtureError> {
    if length < 4 || length % 2 != 0 {
        return Err(FixtureError::OddVertexCount(length));
    }
    let edges: Vec<(u32, u32, u32)> = (0..length)
        .map(|i| (i, (i + 1) % length, 1 + i % 2))
        .collect();
    Ok(ColoredGraph::from_edges(2, length, &edges).expect("even cycles are always valid"))
}

/// K₄ split into its three perfect matchings. Properly colored and
/// 3-regular, but no pseudo-cube: any two matchings already connect all
/// four vertices, so the third color contracts to self-loops.
pub fn one_factorized_k4() -> ColoredGraph {
    let edges = [
        (0, 1, 1),
        (2, 3, 1),
        (0, 2, 2),
        (1, 3, 2),
        (0, 3, 3),
        (1, 2, 3),
    ];
    ColoredGraph::from_edges(3, 4, &edges).expect("the 1-factorization of K4 is valid")
}

/// Attempts per color before giving up on a random matching.
const MATCHING_ATTEMPTS: u32 = 10_000;

/// A random properly d-edge-colored d-regular graph: the union of d
/// uniformly shuffled perfect matchings, resampling any matching that
/// repeats an edge of an earlier color. Deterministic per seed.
pub fn random_colored_graph(
    dimension: u32,
    num_vertices: u32,
    seed: u64,
) -> Result<ColoredGraph, FixtureError> {
    if num_vertices == 0 || num_vertices % 2 != 0 {
        return Err(FixtureError::OddVertexCount(num_vertices));
    }
    if num_vertices < 2 * dimension {
        return Err(FixtureError::TooFewVertices {
            dimension,
            min: 2 * dimension,
            got: num_vertices,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut used: HashSet<(u32, u32)> = HashSet::new();
    let mut edges: Vec<(u32, u32, u32)> = Vec::with_capacity((num_vertices * dimension / 2) as usize);
    let mut order: Vec<u32> = (0..num_vertices).collect();
    for color in 1..=dimension {
        let mut accepted = false;
        for _ in 0..MATCHING_ATTEMPTS {
            order.shuffle(&mut rng);
            let pairs: Vec<(u32, u32)> = order
                .chunks_exact(2)
                .map(|p| (p[0].min(p[1]), p[0].max(p[1])))
                .collect();
            if pairs.iter().all(|p| !used.contains(p)) {
                for &(u, v) in &pairs {
                    used.insert((u, v));
                    edges.push((u, v, color));
                }
                accepted = true;
                break;
            }
        }
        if !accepted {
            return Err(FixtureError::GenerationFailed {
                dimension,
                num_vertices,
                attempts: MATCHING_ATTEMPTS,
            });
        }
    }
    Ok(ColoredGraph::from_edges(dimension, num_vertices, &edges)
        .expect("disjoint matchings form a valid colored graph"))
}

/// Relabel a complex by a seeded random permutation of vertex ids and
/// shuffle the facet order. All isomorphism-invariant quantities are
/// unchanged.
pub fn permuted_complex(c: &ChromaticComplex, seed: u64) -> ChromaticComplex {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = c.num_vertices();
    let mut image: Vec<u32> = (0..n).collect();
    image.shuffle(&mut rng);
    let mut vertices: Vec<(u32, u32)> = (0..n)
        .map(|v| (image[v as usize], c.color_of(v)))
        .collect();
    vertices.sort_unstable();
    let mut facets: Vec<Vec<u32>> = c
        .facets()
        .iter()
        .map(|f| f.iter().map(|&v| image[v as usize]).collect())
        .collect();
    facets.shuffle(&mut rng);
    ChromaticComplex::new(c.num_colors(), &vertices, &facets)
        .expect("relabeling preserves validity")
}

/// An alternating 2-colored cycle complex of length 2·half_length with
/// random vertex labels; half_length ≥ 3 has no empty squares,
/// half_length = 2 is the empty square.
pub fn random_even_cycle_complex(half_length: u32, seed: u64) -> ChromaticComplex {
    assert!(half_length >= 2, "cycles shorter than 4 are not complexes");
    let length = 2 * half_length;
    let vertices: Vec<(u32, u32)> = (0..length).map(|v| (v, 1 + v % 2)).collect();
    let facets: Vec<Vec<u32>> = (0..length).map(|i| vec![i, (i + 1) % length]).collect();
    let base = ChromaticComplex::new(2, &vertices, &facets)
        .expect("alternating even cycles are valid complexes");
    permuted_complex(&base, seed)
}

/// A seeded relabeling of the three-player card-deal complex.
pub fn permuted_cards_complex(seed: u64) -> ChromaticComplex {
    permuted_complex(&cards_complex(), seed)
}

/// Named small graphs for property tests: hand fixtures, families, and
/// seeded random graphs, all at most a few dozen vertices.
pub fn graph_corpus() -> Vec<(&'static str, ColoredGraph)> {
    vec![
        ("matching-6", perfect_matching(6).unwrap()),
        ("cycle-6", two_colored_cycle(6).unwrap()),
        ("cycle-10", two_colored_cycle(10).unwrap()),
        ("k4", one_factorized_k4()),
        ("cube-2", boolean_cube(2).unwrap()),
        ("cube-3", boolean_cube(3).unwrap()),
        ("cube-4", boolean_cube(4).unwrap()),
        ("clique-product-2", clique_product(2).unwrap()),
        ("clique-product-3", clique_product(3).unwrap()),
        ("random-3-16", random_colored_graph(3, 16, 11).unwrap()),
        ("random-4-24", random_colored_graph(4, 24, 12).unwrap()),
        ("random-5-32", random_colored_graph(5, 32, 13).unwrap()),
    ]
}

/// Named complexes for correspondence tests.
pub fn complex_corpus() -> Vec<(&'static str, ChromaticComplex)> {
    vec![
        ("cube-complex-1", cube_complex(1).unwrap()),
        ("cube-complex-2", cube_complex(2).unwrap()),
        ("cube-complex-3", cube_complex(3).unwrap()),
        ("cube-complex-4", cube_complex(4).unwrap()),
        ("cards", cards_complex()),
        ("cards-permuted", permuted_cards_complex(7)),
        ("cycle-complex-3", random_even_cycle_complex(3, 21)),
        ("cycle-complex-4", random_even_cycle_complex(4, 22)),
        ("cycle-complex-7", random_even_cycle_complex(7, 23)),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::{verify_pseudo_cube, WitnessKind};

    #[test]
    fn hand_fixtures_have_known_shapes() {
        let m = perfect_matching(8).unwrap();
        assert_eq!((m.dimension(), m.num_vertices()), (1, 8));
        let c = two_colored_cycle(6).unwrap();
        assert_eq!(c.edge_triples().len(), 6);
        assert_eq!(perfect_matching(5).unwrap_err(), FixtureError::OddVertexCount(5));
        assert!(two_colored_cycle(4).is_ok());
        assert!(two_colored_cycle(3).is_err());
    }

    #[test]
    fn k4_is_not_a_pseudo_cube() {
        let report = verify_pseudo_cube(&one_factorized_k4());
        assert!(!report.verdict);
        let witness = report.witness.expect("failures carry witnesses");
        assert_eq!(witness.kind, WitnessKind::SelfLoopEdge);
    }

    #[test]
    fn random_graphs_are_valid_and_seed_deterministic() {
        let a = random_colored_graph(4, 24, 99).unwrap();
        let b = random_colored_graph(4, 24, 99).unwrap();
        assert_eq!(a.edge_triples(), b.edge_triples());
        let c = random_colored_graph(4, 24, 100).unwrap();
        assert_ne!(a.edge_triples(), c.edge_triples());
        assert_eq!(a.dimension(), 4);
        assert_eq!(a.num_vertices(), 24);
    }

    #[test]
    fn random_graph_parameter_checks() {
        assert_eq!(
            random_colored_graph(2, 7, 0).unwrap_err(),
            FixtureError::OddVertexCount(7)
        );
        assert_eq!(
            random_colored_graph(4, 6, 0).unwrap_err(),
            FixtureError::TooFewVertices {
                dimension: 4,
                min: 8,
                got: 6
            }
        );
        // The tight case n = 2d is still satisfiable (K_{2d} has a
        // 1-factorization), if only by retrying.
        assert!(random_colored_graph(2, 4, 5).is_ok());
    }

    #[test]
    fn cycle_complexes_have_squares_exactly_at_length_four() {
        let square = random_even_cycle_complex(2, 3);
        assert_eq!(square.detect_empty_squares(false).len(), 1);
        for half in 3..8 {
            let c = random_even_cycle_complex(half, u64::from(half));
            assert_eq!(c.num_vertices(), 2 * half);
            assert!(c.detect_empty_squares(false).is_empty(), "length {}", 2 * half);
        }
    }

    #[test]
    fn permuting_cards_preserves_invariants() {
        let c = permuted_cards_complex(42);
        assert_eq!(c.num_vertices(), 12);
        assert_eq!(c.num_facets(), 24);
        assert_eq!(c.euler_characteristic(), 0);
        assert_eq!(c.detect_empty_squares(false).len(), 54);
        assert_eq!(c.detect_empty_squares(true).len(), 18);
        // Same seed, same complex.
        assert_eq!(permuted_cards_complex(42), c);
    }

    #[test]
    fn corpora_are_well_formed() {
        let graphs = graph_corpus();
        assert!(graphs.len() >= 10);
        let mut names: Vec<&str> = graphs.iter().map(|(n, _)| *n).collect();
        names.dedup();
        assert_eq!(names.len(), graphs.len());
        let complexes = complex_corpus();
        assert!(complexes.len() >= 8);
    }
}
