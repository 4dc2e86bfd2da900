//! The complex/graph dictionary: duals of chromatic complexes are valid
//! colored graphs, cube complexes dualize to boolean cubes, vertex stars
//! match contraction components color by color, and square-free complexes
//! have dual systolic duals.

use sysgraph_core::constructions::boolean_cube;
use sysgraph_core::fixtures::{complex_corpus, permuted_complex, random_even_cycle_complex};
use sysgraph_core::simplicial::{cube_complex, ChromaticComplex};
use sysgraph_core::verify::verify_dual_systolic;

/// Under the binary facet labeling, the dual of the d-cube boundary
/// complex is the boolean cube itself, edge for edge.
#[test]
fn cube_complex_dualizes_to_the_boolean_cube() {
    for d in 1..=6 {
        let dual = cube_complex(d).unwrap().dual_graph();
        let cube = boolean_cube(d).unwrap();
        assert_eq!(dual.dimension(), cube.dimension(), "d = {d}");
        assert_eq!(dual.num_vertices(), cube.num_vertices(), "d = {d}");
        assert_eq!(dual.edge_triples(), cube.edge_triples(), "d = {d}");
    }
}

/// Every corpus complex dualizes to a graph with one vertex per facet and
/// one color per complex color (constructing it revalidates regularity
/// and proper coloring).
#[test]
fn duals_of_corpus_complexes_are_valid() {
    for (name, c) in complex_corpus() {
        let dual = c.dual_graph();
        assert_eq!(dual.num_vertices() as usize, c.num_facets(), "{name}");
        assert_eq!(dual.dimension(), c.num_colors(), "{name}");
    }
}

/// The star of a vertex of color i is exactly one component of the dual
/// graph with color i removed, and distinct vertices of color i give
/// distinct components — blocks of facets correspond to vertices.
fn assert_star_correspondence(name: &str, c: &ChromaticComplex) {
    let dual = c.dual_graph();
    for color in 1..=c.num_colors() {
        let others: Vec<u32> = (1..=c.num_colors()).filter(|&j| j != color).collect();
        let partition = dual.components_with_colors(&others).unwrap();
        let mut seen_blocks = Vec::new();
        for v in 0..c.num_vertices() {
            if c.color_of(v) != color {
                continue;
            }
            let star = c.star_facets(v);
            assert!(!star.is_empty(), "{name}: vertex {v} lies in some facet");
            let block = partition.block_of(star[0] as u32);
            let block_facets: Vec<usize> = partition.blocks()[block as usize]
                .iter()
                .map(|&f| f as usize)
                .collect();
            assert_eq!(
                star, block_facets,
                "{name}: star of vertex {v} (color {color}) must be one component"
            );
            seen_blocks.push(block);
        }
        seen_blocks.sort_unstable();
        let distinct = seen_blocks.len();
        seen_blocks.dedup();
        assert_eq!(
            seen_blocks.len(),
            distinct,
            "{name}: distinct vertices of color {color} give distinct components"
        );
        assert_eq!(
            seen_blocks.len(),
            partition.blocks().len(),
            "{name}: every component of color-{color} removal is some star"
        );
    }
}

#[test]
fn star_correspondence_on_all_fixture_complexes() {
    for (name, c) in complex_corpus() {
        assert_star_correspondence(name, &c);
    }
}

#[test]
fn star_correspondence_on_randomized_complexes() {
    for seed in 0..8 {
        let cycle = random_even_cycle_complex(3 + seed as u32 % 5, seed);
        assert_star_correspondence("random-cycle", &cycle);
        for (name, c) in complex_corpus() {
            assert_star_correspondence(name, &permuted_complex(&c, seed ^ 0x5eed));
        }
    }
}

/// A complex without empty squares has a dual systolic dual. Randomized
/// relabelings keep both sides invariant.
#[test]
fn square_free_complexes_have_dual_systolic_duals() {
    let mut checked = 0;
    for seed in 0..12u64 {
        let half_length = 3 + (seed % 7) as u32;
        let c = permuted_complex(&random_even_cycle_complex(half_length, seed), seed + 100);
        assert!(
            c.detect_empty_squares(false).is_empty(),
            "cycles longer than 4 have no empty squares"
        );
        let report = verify_dual_systolic(&c.dual_graph());
        assert!(report.verdict, "square-free complex, seed {seed}");
        checked += 1;
    }
    assert_eq!(checked, 12);

    // Contrast: the length-4 cycle complex has an empty square and its
    // dual quotient is a double edge.
    let short = random_even_cycle_complex(2, 1);
    assert_eq!(short.detect_empty_squares(false).len(), 1);
    assert!(!verify_dual_systolic(&short.dual_graph()).verdict);
}

/// The implication also runs through the cube family: every cube complex
/// of dimension at least 2 has empty squares, matching the cube duals
/// failing dual systolicity.
#[test]
fn cube_complexes_show_squares_exactly_where_duals_fail() {
    for d in 1..=5 {
        let c = cube_complex(d).unwrap();
        let squares = c.detect_empty_squares(false);
        let report = verify_dual_systolic(&c.dual_graph());
        if d == 1 {
            assert!(squares.is_empty(), "two points carry no squares");
            assert!(report.verdict, "the dual of the 1-cube complex is an edge");
        } else {
            assert!(!squares.is_empty(), "d = {d}");
            assert!(!report.verdict, "d = {d}");
        }
    }
    assert_eq!(cube_complex(2).unwrap().detect_empty_squares(false).len(), 1);
}
