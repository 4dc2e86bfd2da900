//! Decision procedures for the pseudo-cube / dual systolic hierarchy.
//!
//! All four properties are statements about the quotients
//! [`ColoredGraph::contract_except`]:
//!
//! - *pseudo-cube*: for every color i, the quotient by the other colors has
//!   no self-loops (each color behaves independently of the rest);
//! - *dual systolic*: additionally every such quotient is simple (no pair of
//!   blocks is joined twice);
//! - *weak pseudo-cube* / *weakly dual systolic*: the same conditions imposed
//!   on the top color only, recursing into the components of the graph minus
//!   color d; a 1-colored graph (a perfect matching) is the base case.
//!
//! Verdicts come with machine-checkable [`Witness`]es on failure and, for
//! the recursive properties, a [`TraceEntry`] log of every component
//! visited. [`replay_witness`] re-derives the violation from the graph and
//! the witness alone, independently of the verifier's internals.

use serde::{Deserialize, Serialize};

use crate::graph::{ColoredGraph, GraphError, QuotientMultigraph};

/// Which structural property a report is about.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Property {
    PseudoCube,
    DualSystolic,
    WeakPseudoCube,
    WeaklyDualSystolic,
}

/// How the components of the top-color restriction are checked by
/// [`verify_weak_pseudo_cube`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum WeakMode {
    /// Components must be full pseudo-cubes (the definition read literally).
    Literal,
    /// Components must be weak pseudo-cubes, recursively (the reading the
    /// weakly-dual-systolic recursion needs).
    Weak,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum WitnessKind {
    /// An edge whose endpoints were merged by contracting the other colors.
    SelfLoopEdge,
    /// Two edges of one color joining the same pair of contraction blocks.
    ParallelEdgePair,
    /// The violation sits inside a nested component of a recursive check;
    /// `component_path` locates it and the remaining fields describe the
    /// primitive violation there (one edge = loop, two edges = parallel
    /// pair).
    BadComponent,
}

/// Concrete evidence that a property fails.
///
/// `edges` always refer to vertices of the original input graph, whatever
/// recursion depth the violation was found at, so a witness can be checked
/// against the input alone (see [`replay_witness`]).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub kind: WitnessKind,
    /// The color whose quotient is violated.
    pub color: u32,
    /// One edge (self-loop case) or two (parallel pair), lex-sorted,
    /// in original vertex ids.
    pub edges: Vec<(u32, u32, u32)>,
    /// The implicated quotient node(s): one block id for a loop, the two
    /// block ids for a parallel pair, in the quotient where the violation
    /// lives.
    pub component_ids: Vec<u32>,
    /// Loop count at that block, or multiplicity of that block pair.
    pub multiplicity: u32,
    /// Component indices (canonical order) leading from the input graph to
    /// the subgraph containing the violation; empty for top-level failures.
    pub component_path: Vec<u32>,
}

/// One visited component in a recursive verification. Depth 0 is the input
/// graph; components at depth k+1 are numbered across the whole depth in
/// canonical order (parents in order, blocks by smallest vertex).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceEntry {
    pub depth: u32,
    pub component: u32,
    pub verdict: bool,
}

/// The outcome of a verification: verdict, witness iff false, and (for the
/// recursive properties) the visited-component trace. The trace stops at the
/// first failing component; completed siblings keep their verdicts.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub property: Property,
    pub mode: Option<WeakMode>,
    pub verdict: bool,
    pub witness: Option<Witness>,
    pub recursion_trace: Vec<TraceEntry>,
}

impl VerificationReport {
    fn new(property: Property, mode: Option<WeakMode>) -> Self {
        VerificationReport {
            property,
            mode,
            verdict: true,
            witness: None,
            recursion_trace: Vec::new(),
        }
    }

    fn fail(mut self, witness: Witness) -> Self {
        self.verdict = false;
        self.witness = Some(witness);
        self
    }
}

/// The lex-smallest loop edge at the smallest looped block of `q`.
fn self_loop_witness(g: &ColoredGraph, q: &QuotientMultigraph) -> Witness {
    let (&node, &multiplicity) = q
        .self_loops
        .iter()
        .next()
        .expect("caller checked for self-loops");
    for &v in &q.partition.blocks()[node as usize] {
        let u = g.neighbor(v, q.color);
        if u > v && q.partition.block_of(u) == node {
            return Witness {
                kind: WitnessKind::SelfLoopEdge,
                color: q.color,
                edges: vec![(v, u, q.color)],
                component_ids: vec![node],
                multiplicity,
                component_path: Vec::new(),
            };
        }
    }
    unreachable!("a looped block contains a loop edge");
}

/// The two lex-smallest edges joining the smallest block pair of
/// multiplicity at least 2.
fn parallel_pair_witness(g: &ColoredGraph, q: &QuotientMultigraph) -> Witness {
    let (&(a, b), &multiplicity) = q
        .parallel_edges
        .iter()
        .find(|&(_, &m)| m >= 2)
        .expect("caller checked for a multiple pair");
    let mut edges = Vec::new();
    for &v in &q.partition.blocks()[a as usize] {
        let u = g.neighbor(v, q.color);
        if q.partition.block_of(u) == b {
            let (x, y) = if v < u { (v, u) } else { (u, v) };
            edges.push((x, y, q.color));
        }
    }
    edges.sort_unstable();
    edges.truncate(2);
    Witness {
        kind: WitnessKind::ParallelEdgePair,
        color: q.color,
        edges,
        component_ids: vec![a, b],
        multiplicity,
        component_path: Vec::new(),
    }
}

/// True iff every color's quotient is free of self-loops.
pub fn verify_pseudo_cube(g: &ColoredGraph) -> VerificationReport {
    let report = VerificationReport::new(Property::PseudoCube, None);
    for color in 1..=g.dimension() {
        let q = g.contract_except(color).expect("color is in range");
        if q.has_self_loops() {
            return report.fail(self_loop_witness(g, &q));
        }
    }
    report
}

/// True iff every color's quotient is loop-free *and* simple.
pub fn verify_dual_systolic(g: &ColoredGraph) -> VerificationReport {
    let report = VerificationReport::new(Property::DualSystolic, None);
    for color in 1..=g.dimension() {
        let q = g.contract_except(color).expect("color is in range");
        if q.has_self_loops() {
            return report.fail(self_loop_witness(g, &q));
        }
        if q.max_multiplicity() >= 2 {
            return report.fail(parallel_pair_witness(g, &q));
        }
    }
    report
}

/// True iff the top-color quotient is loop-free and every component of the
/// graph minus its top color passes: a full pseudo-cube check
/// ([`WeakMode::Literal`]) or this same check recursively
/// ([`WeakMode::Weak`]). Base case d = 1: a valid 1-colored graph is a
/// perfect matching, so it passes.
pub fn verify_weak_pseudo_cube(
    g: &ColoredGraph,
    mode: WeakMode,
) -> Result<VerificationReport, GraphError> {
    let mut report = VerificationReport::new(Property::WeakPseudoCube, Some(mode));
    let mut state = Recursion::new(mode == WeakMode::Literal, false);
    let witness = state.check(g, &identity_map(g), &[], 0)?;
    report.recursion_trace = state.trace;
    Ok(match witness {
        Some(w) => report.fail(w),
        None => report,
    })
}

/// True iff the top-color quotient is simple and every component of the
/// graph minus its top color recursively passes this same check; base case
/// d = 1 as above.
pub fn verify_weakly_dual_systolic(
    g: &ColoredGraph,
) -> Result<VerificationReport, GraphError> {
    let mut report = VerificationReport::new(Property::WeaklyDualSystolic, None);
    let mut state = Recursion::new(false, true);
    let witness = state.check(g, &identity_map(g), &[], 0)?;
    report.recursion_trace = state.trace;
    Ok(match witness {
        Some(w) => report.fail(w),
        None => report,
    })
}

fn identity_map(g: &ColoredGraph) -> Vec<u32> {
    (0..g.num_vertices()).collect()
}

/// Shared descent for the two recursive properties. Recursion depth equals
/// the dimension (each level drops one color), so native recursion is safe
/// for any graph this library can hold.
struct Recursion {
    /// Check components with the strict pseudo-cube verifier instead of
    /// recursing.
    literal_components: bool,
    /// Require the top-color quotient simple, not merely loop-free.
    require_simple: bool,
    trace: Vec<TraceEntry>,
    /// Next component id per depth.
    counters: Vec<u32>,
}

impl Recursion {
    fn new(literal_components: bool, require_simple: bool) -> Self {
        Recursion {
            literal_components,
            require_simple,
            trace: Vec::new(),
            counters: Vec::new(),
        }
    }

    fn next_id(&mut self, depth: u32) -> u32 {
        if self.counters.len() <= depth as usize {
            self.counters.resize(depth as usize + 1, 0);
        }
        let id = self.counters[depth as usize];
        self.counters[depth as usize] += 1;
        id
    }

    /// Check one component; `orig` maps its local ids to input-graph ids and
    /// `path` locates it. Returns the (already translated) witness if the
    /// component or any descendant fails.
    fn check(
        &mut self,
        g: &ColoredGraph,
        orig: &[u32],
        path: &[u32],
        depth: u32,
    ) -> Result<Option<Witness>, GraphError> {
        let id = self.next_id(depth);
        let entry_index = self.trace.len();
        self.trace.push(TraceEntry {
            depth,
            component: id,
            verdict: true,
        });

        let d = g.dimension();
        if d == 1 {
            // A valid 1-colored graph is a perfect matching.
            return Ok(None);
        }

        let keep: Vec<u32> = (1..d).collect();
        let partition = g.components_with_colors(&keep)?;
        let q = g.contract_except_with(d, partition);
        if q.has_self_loops() {
            self.trace[entry_index].verdict = false;
            return Ok(Some(translate(self_loop_witness(g, &q), orig, path)));
        }
        if self.require_simple && q.max_multiplicity() >= 2 {
            self.trace[entry_index].verdict = false;
            return Ok(Some(translate(parallel_pair_witness(g, &q), orig, path)));
        }

        for (ci, members) in q.partition.blocks().iter().enumerate() {
            let (sub, sub_orig) = extract_component(g, members, orig)?;
            let mut child_path = path.to_vec();
            child_path.push(ci as u32);
            let failure = if self.literal_components {
                let child_id = self.next_id(depth + 1);
                let child_report = verify_pseudo_cube(&sub);
                self.trace.push(TraceEntry {
                    depth: depth + 1,
                    component: child_id,
                    verdict: child_report.verdict,
                });
                child_report
                    .witness
                    .map(|w| translate(w, &sub_orig, &child_path))
            } else {
                self.check(&sub, &sub_orig, &child_path, depth + 1)?
            };
            if let Some(w) = failure {
                self.trace[entry_index].verdict = false;
                return Ok(Some(w));
            }
        }
        Ok(None)
    }
}

/// Map a locally-expressed witness to input-graph vertex ids and record the
/// component path. Nested violations are tagged [`WitnessKind::BadComponent`].
fn translate(mut w: Witness, orig: &[u32], path: &[u32]) -> Witness {
    for e in &mut w.edges {
        e.0 = orig[e.0 as usize];
        e.1 = orig[e.1 as usize];
    }
    w.edges.sort_unstable();
    w.component_path = path.to_vec();
    if !path.is_empty() {
        w.kind = WitnessKind::BadComponent;
    }
    w
}

/// Extract one component of `g` minus its top color as a standalone
/// (d-1)-colored graph (colors keep their labels; vertex ids compact by
/// sorted order). Also composes the local-to-input id map.
fn extract_component(
    g: &ColoredGraph,
    members: &[u32],
    orig: &[u32],
) -> Result<(ColoredGraph, Vec<u32>), GraphError> {
    let d_sub = g.dimension() - 1;
    debug_assert!(d_sub >= 1, "base case is handled before extraction");
    let mut slots = vec![u32::MAX; members.len() * d_sub as usize];
    for (local, &v) in members.iter().enumerate() {
        for c in 1..=d_sub {
            let w = g.neighbor(v, c);
            let lw = members.binary_search(&w).map_err(|_| {
                GraphError::ComponentNotRegular(Box::new(GraphError::VertexOutOfRange(w)))
            })?;
            slots[local * d_sub as usize + (c - 1) as usize] = lw as u32;
        }
    }
    let sub = ColoredGraph::from_matching_slots(d_sub, members.len() as u32, slots);
    let sub_orig = members.iter().map(|&m| orig[m as usize]).collect();
    Ok((sub, sub_orig))
}

/// Re-derive a witness's violation from the graph and the witness alone.
///
/// Follows `component_path` down the canonical component decomposition,
/// contracts all but `witness.color` there, and checks that the witness
/// edges exist, land on the claimed quotient node(s), and that the loop
/// count / pair multiplicity matches. Returns true iff everything checks
/// out.
pub fn replay_witness(g: &ColoredGraph, witness: &Witness) -> bool {
    // Walk down to the subgraph containing the violation.
    let mut current = g.clone();
    let mut orig: Vec<u32> = identity_map(g);
    for &ci in &witness.component_path {
        let d = current.dimension();
        if d < 2 {
            return false;
        }
        let keep: Vec<u32> = (1..d).collect();
        let partition = match current.components_with_colors(&keep) {
            Ok(p) => p,
            Err(_) => return false,
        };
        let Some(members) = partition.blocks().get(ci as usize) else {
            return false;
        };
        let Ok((sub, sub_orig)) = extract_component(&current, members, &orig) else {
            return false;
        };
        current = sub;
        orig = sub_orig;
    }

    if witness.color < 1 || witness.color > current.dimension() {
        return false;
    }
    let q = match current.contract_except(witness.color) {
        Ok(q) => q,
        Err(_) => return false,
    };

    // Translate witness edges (input ids) to local ids; `orig` is ascending.
    let mut local_edges = Vec::new();
    for &(u, v, c) in &witness.edges {
        if c != witness.color {
            return false;
        }
        let (Ok(lu), Ok(lv)) = (orig.binary_search(&u), orig.binary_search(&v)) else {
            return false;
        };
        let (lu, lv) = (lu as u32, lv as u32);
        if current.neighbor(lu, c) != lv {
            return false;
        }
        local_edges.push((lu, lv));
    }

    match witness.edges.len() {
        1 => {
            // A self-loop: both endpoints in the claimed block, with the
            // claimed loop count.
            let [node] = witness.component_ids[..] else {
                return false;
            };
            let (lu, lv) = local_edges[0];
            q.partition.block_of(lu) == node
                && q.partition.block_of(lv) == node
                && q.self_loops.get(&node) == Some(&witness.multiplicity)
        }
        2 => {
            // A parallel pair: both edges join the claimed block pair, with
            // the claimed multiplicity.
            let [a, b] = witness.component_ids[..] else {
                return false;
            };
            if local_edges[0] == local_edges[1] {
                return false;
            }
            for &(lu, lv) in &local_edges {
                let (x, y) = (q.partition.block_of(lu), q.partition.block_of(lv));
                if (x.min(y), x.max(y)) != (a.min(b), a.max(b)) || x == y {
                    return false;
                }
            }
            q.parallel_edges.get(&(a.min(b), a.max(b))) == Some(&witness.multiplicity)
        }
        _ => false,
    }
}
