//! The `1/2 + n/(2m)` algorithms.
//!
//! Both start from the tree-bipartite decomposition `H_1, ..., H_t`. Trailing
//! IOC trees are folded into the last component while the union stays free of
//! even cycles. If the graph collapses to a single even-cycle-free piece the
//! spanning-tree cut is optimal. Otherwise `H' = G[H_{t-1} ∪ H_t]` is solved
//! exactly when a search finds a cut missing only one edge per odd cycle
//! (finished by greedy merging the prefix onto it), and when the search fails
//! the `thm1` cut is re-certified against a tighter upper bound.

use std::collections::HashSet;

use serde::Serialize;

use crate::cactus::{constrained_cactus_cut, PartialAssignment};
use crate::component_maxcut::{
    cb_surplus, merge_components, rational, thm1_on, Algorithm, ApproxResult, Rational,
    UpperBoundProof,
};
use crate::decomposition::{
    certificates_of_valid, tree_bipartite_decompose, validate_decomposition, ComponentKind,
    Decomposition,
};
use crate::error::{Error, Result};
use crate::graph::{
    is_even_cycle_free, spanning_tree_cut, two_color, two_color_skipping, CycleStructure, Graph,
    OddCycleWitness, Side, Subgraph, TwoColoring,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum TailKind {
    Tree,
    OddCactus,
    /// The last component is a CB graph; nothing can be merged into it.
    CbGraph,
}

/// Result of folding IOC trees into the last component.
#[derive(Debug, Clone)]
pub struct TailState {
    /// The decomposition the merge ran on, unchanged.
    pub decomposition: Decomposition,
    /// The merged tail is `G[H_{tail_start+1} ∪ ... ∪ H_t]` (0-based index).
    pub tail_start: usize,
    /// Sorted vertices of the merged tail.
    pub tail_vertices: Vec<usize>,
    /// Independent cycles of the merged tail, all odd and edge-disjoint.
    pub tail_cycles: Vec<OddCycleWitness>,
    pub y: usize,
    pub tail_kind: TailKind,
    pub merges: usize,
}

impl TailState {
    /// Number of components after merging.
    pub fn t(&self) -> usize {
        self.tail_start + 1
    }
}

/// Folds `H_{t-1}` into the tail while the union has no even cycle.
pub fn merge_tail(g: &Graph, d: &Decomposition) -> Result<TailState> {
    if let Some(v) = validate_decomposition(g, d).violations.first() {
        return Err(Error::InvalidDecomposition(v.to_string()));
    }
    Ok(merge_tail_on(g, d))
}

fn merge_tail_on(g: &Graph, d: &Decomposition) -> TailState {
    let last = d.last().expect("decomposition of a nonempty graph");
    let mut state = TailState {
        decomposition: d.clone(),
        tail_start: d.len() - 1,
        tail_vertices: last.vertices.clone(),
        tail_cycles: Vec::new(),
        y: 0,
        tail_kind: if last.kind == ComponentKind::CbGraph {
            TailKind::CbGraph
        } else {
            TailKind::Tree
        },
        merges: 0,
    };
    if state.tail_kind == TailKind::CbGraph {
        return state;
    }
    while state.tail_start > 0 {
        let prev = &d.components[state.tail_start - 1];
        // a CB graph carries an even cycle of its own
        if prev.kind != ComponentKind::IocTree {
            break;
        }
        let mut union = state.tail_vertices.clone();
        union.extend_from_slice(&prev.vertices);
        union.sort_unstable();
        let sub = g.induced(&union);
        match is_even_cycle_free(&sub.graph) {
            Ok(CycleStructure::OddCactus(cycles)) => {
                state.tail_cycles = cycles
                    .iter()
                    .map(|c| OddCycleWitness::from_open(sub.globalize(&c.cycle()[..c.length()])))
                    .collect();
                state.y = cycles.len();
                state.tail_kind = TailKind::OddCactus;
                state.tail_vertices = union;
                state.tail_start -= 1;
                state.merges += 1;
            }
            _ => break,
        }
    }
    state
}

/// Effort level for [`auto_approx`] on graphs with `m > 2n`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub enum Effort {
    /// Linear-time `thm1_approx`.
    Fast,
    #[default]
    Best,
}

/// `m <= 2n` runs [`thm3_approx`]; denser graphs run `thm1` or `thm2` by effort.
pub fn auto_approx(g: &Graph, effort: Effort) -> Result<ApproxResult> {
    g.ensure_connected()?;
    if g.m() <= 2 * g.n() {
        return thm3_approx(g);
    }
    match effort {
        Effort::Fast => crate::component_maxcut::thm1_approx(g),
        Effort::Best => thm2_approx(g),
    }
}

/// Ratio at least `1/2 + n/(2m)` in `O(nm)` time.
pub fn thm2_approx(g: &Graph) -> Result<ApproxResult> {
    g.ensure_connected()?;
    let d = tree_bipartite_decompose(g)?;
    let state = merge_tail_on(g, &d);
    if state.tail_start == 0 {
        return exact_even_cycle_free(g, &d, state.tail_cycles);
    }
    let base = retag(thm1_on(g, &d)?, Algorithm::Thm2);
    if state.tail_kind == TailKind::CbGraph {
        // the surplus edges of the CB tail already carry the bound
        return Ok(base);
    }
    let i = state.tail_start - 1;
    match d.components[i].kind {
        ComponentKind::CbGraph => cb_case(g, &d, &state, base, Algorithm::Thm2),
        ComponentKind::IocTree => ioc_case(g, &d, &state, base),
        ComponentKind::Tree => unreachable!("only the last component is a tree"),
    }
}

/// Ratio at least `1/2 + n/(2m)` in linear time when `m <= 2n`.
pub fn thm3_approx(g: &Graph) -> Result<ApproxResult> {
    g.ensure_connected()?;
    if g.m() > 2 * g.n() {
        return Err(Error::TooDense { n: g.n(), m: g.m() });
    }
    let d = tree_bipartite_decompose(g)?;
    if let CycleStructure::OddCactus(cycles) = is_even_cycle_free(g)? {
        return exact_even_cycle_free(g, &d, cycles);
    }
    let base = retag(thm1_on(g, &d)?, Algorithm::Thm3);
    if base.x >= 2 || base.guaranteed_ratio >= target_ratio(g) {
        return Ok(base);
    }
    // at most one IOC tree, so at most one merge
    let state = merge_tail_on(g, &d);
    if state.tail_kind == TailKind::CbGraph {
        return Ok(base);
    }
    if state.tail_start == 0 {
        return exact_even_cycle_free(g, &d, state.tail_cycles);
    }
    let i = state.tail_start - 1;
    match d.components[i].kind {
        ComponentKind::CbGraph => cb_case(g, &d, &state, base, Algorithm::Thm3),
        ComponentKind::IocTree if state.y == 0 => single_test_case(g, &d, &state, base),
        ComponentKind::IocTree => ioc_case(g, &d, &state, retag(base, Algorithm::Thm3)),
        ComponentKind::Tree => unreachable!("only the last component is a tree"),
    }
}

fn target_ratio(g: &Graph) -> Rational {
    if g.m() == 0 {
        return Rational::from_integer(1);
    }
    rational(g.m() + g.n(), 2 * g.m())
}

fn retag(mut r: ApproxResult, algorithm: Algorithm) -> ApproxResult {
    r.algorithm = algorithm;
    r
}

/// Spanning-tree cut of a graph whose cycles are the given edge-disjoint odd
/// cycles; it misses exactly one edge of each.
fn exact_even_cycle_free(
    g: &Graph,
    d: &Decomposition,
    cycles: Vec<OddCycleWitness>,
) -> Result<ApproxResult> {
    let cut = spanning_tree_cut(g)?;
    let upper_bound = g.m() - cycles.len();
    debug_assert_eq!(cut.size(), upper_bound);
    let lower_bound = Rational::from_integer(cut.size() as i64);
    Ok(ApproxResult::assemble(
        cut,
        Algorithm::ExactSpecialCase,
        d.ioc_count(),
        cb_surplus(g, d),
        cycles,
        upper_bound,
        UpperBoundProof::OddCyclePacking,
        lower_bound,
    ))
}

/// Odd cycles of the IOC trees among the first `i` components.
fn prefix_cycles(g: &Graph, d: &Decomposition, i: usize) -> Vec<OddCycleWitness> {
    let iocs_before = d.components[..i]
        .iter()
        .filter(|c| c.kind == ComponentKind::IocTree)
        .count();
    let mut all = certificates_of_valid(g, d);
    all.truncate(iocs_before);
    all
}

/// The odd cycle closed by the root edges of IOC tree `i`.
fn ioc_cycle(g: &Graph, d: &Decomposition, i: usize) -> OddCycleWitness {
    let k = d.components[..i]
        .iter()
        .filter(|c| c.kind == ComponentKind::IocTree)
        .count();
    certificates_of_valid(g, d).swap_remove(k)
}

/// `G[V(H_i)]` plus the edges from `H_i` to `others` and their endpoints,
/// leaving out `skip`.
fn with_cross_edges(
    g: &Graph,
    d: &Decomposition,
    i: usize,
    in_others: &dyn Fn(usize) -> bool,
    skip: &[(usize, usize)],
) -> Result<Subgraph> {
    let owner = d.owner_map(g.n());
    let comp = &d.components[i];
    let mut vertices = comp.vertices.clone();
    let mut edges = Vec::new();
    for &v in &comp.vertices {
        for &w in g.neighbors(v) {
            let e = (v.min(w), v.max(w));
            if skip.contains(&e) {
                continue;
            }
            if owner[w] == i {
                if v < w {
                    edges.push(e);
                }
            } else if in_others(w) {
                edges.push(e);
                vertices.push(w);
            }
        }
    }
    vertices.sort_unstable();
    vertices.dedup();
    g.edge_subgraph(&vertices, &edges)
}

/// Fixes every vertex of `within` that `coloring` covers.
fn constraints_from(within: &Subgraph, colored: &Subgraph, coloring: &[Side]) -> PartialAssignment {
    let mut pa = PartialAssignment::unfixed(within.graph.n());
    for (local, &v) in colored.to_global.iter().enumerate() {
        if let Some(t) = within.local(v) {
            pa.fix(t, coloring[local]);
        }
    }
    pa
}

fn write_sides(into: &mut [Option<Side>], sub: &Subgraph, sides: &[Side]) {
    for (local, &v) in sub.to_global.iter().enumerate() {
        into[v] = Some(sides[local]);
    }
}

/// `H_{t-1}` is a CB graph: its bipartition extended over the cross edges
/// fixes the tail, which then either reaches `m_tail - y` or proves that
/// `H'` cannot lose only `y` edges.
fn cb_case(
    g: &Graph,
    d: &Decomposition,
    state: &TailState,
    base: ApproxResult,
    algorithm: Algorithm,
) -> Result<ApproxResult> {
    let i = state.tail_start - 1;
    let owner = d.owner_map(g.n());
    let in_tail = |v: usize| owner[v] >= state.tail_start;
    let gp = with_cross_edges(g, d, i, &in_tail, &[])?;
    let mut witnesses = prefix_cycles(g, d, i);
    witnesses.extend(state.tail_cycles.iter().cloned());
    if let TwoColoring::Bipartite(coloring) = two_color(&gp.graph) {
        let tail = g.induced(&state.tail_vertices);
        let pa = constraints_from(&tail, &gp, &coloring);
        if let Some(tail_cut) = constrained_cactus_cut(&tail.graph, &pa)? {
            let mut sides = vec![None; g.n()];
            write_sides(&mut sides, &gp, &coloring);
            write_sides(&mut sides, &tail, tail_cut.sides());
            return lemma2_on(g, d, i, sides, state.tail_cycles.clone(), algorithm);
        }
    }
    Ok(lemma3_on(g, base, witnesses, algorithm))
}

/// `H_{t-1}` is an IOC tree with odd cycle `U`: some edge `e` of `U` must be
/// the only uncut edge of `H_{t-1}` plus its cross edges. Every choice is tried.
fn ioc_case(
    g: &Graph,
    d: &Decomposition,
    state: &TailState,
    base: ApproxResult,
) -> Result<ApproxResult> {
    let algorithm = base.algorithm;
    let i = state.tail_start - 1;
    let owner = d.owner_map(g.n());
    let in_tail = |v: usize| owner[v] >= state.tail_start;
    let gp = with_cross_edges(g, d, i, &in_tail, &[])?;
    let u = ioc_cycle(g, d, i);
    let tail = g.induced(&state.tail_vertices);
    let cycle_edges: Vec<_> = u.edges().collect();
    for (a, b) in cycle_edges {
        let (la, lb) = (gp.local(a).unwrap(), gp.local(b).unwrap());
        let skip = gp.graph.edge_id(la, lb).expect("cycle edge lies in G'");
        let TwoColoring::Bipartite(coloring) = two_color_skipping(&gp.graph, Some(skip)) else {
            continue;
        };
        let pa = constraints_from(&tail, &gp, &coloring);
        if let Some(tail_cut) = constrained_cactus_cut(&tail.graph, &pa)? {
            let mut sides = vec![None; g.n()];
            write_sides(&mut sides, &gp, &coloring);
            write_sides(&mut sides, &tail, tail_cut.sides());
            let mut tail_witnesses = state.tail_cycles.clone();
            tail_witnesses.push(u);
            return lemma2_on(g, d, i, sides, tail_witnesses, algorithm);
        }
    }
    let mut witnesses = prefix_cycles(g, d, i);
    witnesses.extend(state.tail_cycles.iter().cloned());
    witnesses.push(u);
    Ok(lemma3_on(g, base, witnesses, algorithm))
}

/// `H_{t-1}` is an IOC tree with root `r` and a tree tail. The tail with its
/// cross edges except the two root edges must be fully cut, which leaves one
/// bipartiteness test; the IOC tree plus `r` is then a single odd cycle with
/// hanging trees.
fn single_test_case(
    g: &Graph,
    d: &Decomposition,
    state: &TailState,
    base: ApproxResult,
) -> Result<ApproxResult> {
    let i = state.tail_start - 1;
    let comp = &d.components[i];
    let [(r, a), (_, b)] = comp.root_edges.expect("IOC tree has root edges");
    let roots = [(r.min(a), r.max(a)), (r.min(b), r.max(b))];
    let owner = d.owner_map(g.n());
    let u = ioc_cycle(g, d, i);
    let witnesses = {
        let mut w = prefix_cycles(g, d, i);
        w.push(u.clone());
        w
    };

    // tail plus cross edges other than the root edges
    let last = state.tail_start;
    let mut vertices = state.tail_vertices.clone();
    let mut edges = Vec::new();
    for &v in &state.tail_vertices {
        for &w in g.neighbors(v) {
            let e = (v.min(w), v.max(w));
            if owner[w] >= last {
                if v < w {
                    edges.push(e);
                }
            } else if owner[w] == i && !roots.contains(&e) {
                edges.push(e);
                vertices.push(w);
            }
        }
    }
    vertices.sort_unstable();
    vertices.dedup();
    let gp = g.edge_subgraph(&vertices, &edges)?;
    let TwoColoring::Bipartite(coloring) = two_color(&gp.graph) else {
        return Ok(lemma3_on(g, base, witnesses, Algorithm::Thm3));
    };

    let mut piece_vertices = comp.vertices.clone();
    piece_vertices.push(r);
    piece_vertices.sort_unstable();
    let mut piece_edges: Vec<(usize, usize)> = comp
        .vertices
        .iter()
        .flat_map(|&v| g.neighbors(v).iter().map(move |&w| (v, w)))
        .filter(|&(v, w)| v < w && owner[w] == i)
        .collect();
    piece_edges.extend_from_slice(&roots);
    let piece = g.edge_subgraph(&piece_vertices, &piece_edges)?;
    let pa = constraints_from(&piece, &gp, &coloring);
    match constrained_cactus_cut(&piece.graph, &pa)? {
        Some(piece_cut) => {
            let mut sides = vec![None; g.n()];
            write_sides(&mut sides, &gp, &coloring);
            write_sides(&mut sides, &piece, piece_cut.sides());
            lemma2_on(g, d, i, sides, vec![u], Algorithm::Thm3)
        }
        None => Ok(lemma3_on(g, base, witnesses, Algorithm::Thm3)),
    }
}

/// Greedy-merges `H_1, ..., H_i` onto a cut of `H' = G[H_{>=i+1}]` that
/// misses exactly one edge of each of `tail_witnesses` and nothing else.
///
/// `tail` must fix exactly the vertices of `H'`; `i` is 0-based, so `i = 0`
/// means `H'` is the whole graph.
pub fn lemma2_finish(
    g: &Graph,
    d: &Decomposition,
    i: usize,
    tail: &PartialAssignment,
    tail_witnesses: &[OddCycleWitness],
) -> Result<ApproxResult> {
    if let Some(v) = validate_decomposition(g, d).violations.first() {
        return Err(Error::InvalidDecomposition(v.to_string()));
    }
    if tail.len() != g.n() {
        return Err(Error::AssignmentLength {
            expected: g.n(),
            got: tail.len(),
        });
    }
    if i >= d.len() {
        return Err(Error::Precondition(format!(
            "index {i} out of {} components",
            d.len()
        )));
    }
    let owner = d.owner_map(g.n());
    if let Some(v) = (0..g.n()).find(|&v| (owner[v] >= i) != tail.get(v).is_some()) {
        return Err(Error::Precondition(format!(
            "tail assignment must fix exactly the vertices of H'; vertex {v} disagrees"
        )));
    }
    lemma2_on(
        g,
        d,
        i,
        tail.values().to_vec(),
        tail_witnesses.to_vec(),
        Algorithm::Thm2,
    )
}

fn lemma2_on(
    g: &Graph,
    d: &Decomposition,
    i: usize,
    mut sides: Vec<Option<Side>>,
    tail_witnesses: Vec<OddCycleWitness>,
    algorithm: Algorithm,
) -> Result<ApproxResult> {
    let owner = d.owner_map(g.n());
    let in_tail = |v: usize| owner[v] >= i;
    let mut m_tail = 0;
    let mut tail_cut = 0;
    for &(u, v) in g.edges() {
        if in_tail(u) && in_tail(v) {
            m_tail += 1;
            if sides[u] != sides[v] {
                tail_cut += 1;
            }
        }
    }
    let mut used = HashSet::new();
    for w in &tail_witnesses {
        w.check(g).map_err(Error::Precondition)?;
        for (a, b) in w.edges() {
            if !(in_tail(a) && in_tail(b)) {
                return Err(Error::Precondition(format!(
                    "witness edge ({a}, {b}) leaves H'"
                )));
            }
            if !used.insert((a, b)) {
                return Err(Error::Precondition(format!(
                    "witnesses share edge ({a}, {b})"
                )));
            }
        }
    }
    let l = tail_witnesses.len();
    if tail_cut + l != m_tail {
        return Err(Error::Precondition(format!(
            "cut of H' has size {tail_cut}, expected |E(H')| - {l} = {}",
            m_tail as i64 - l as i64
        )));
    }

    let stats = merge_components(g, &d.components[..i], 0, &owner, &mut sides)?;
    let sides: Vec<Side> = sides
        .into_iter()
        .map(|s| s.expect("partition covers V"))
        .collect();
    let cut = crate::graph::Cut::new(g, sides);
    let inside = stats.inside + tail_cut;
    let internal = stats.internal_edges + m_tail;
    let lower_bound = rational(2 * inside + (g.m() - internal), 2);
    debug_assert!(Rational::from_integer(cut.size() as i64) >= lower_bound);

    let mut witnesses = prefix_cycles(g, d, i);
    witnesses.extend(tail_witnesses);
    let upper_bound = g.m() - witnesses.len();
    Ok(ApproxResult::assemble(
        cut,
        algorithm,
        d.ioc_count(),
        cb_surplus(g, d),
        witnesses,
        upper_bound,
        UpperBoundProof::OddCyclePacking,
        lower_bound,
    ))
}

/// Bound of the `thm1` cut once `mc(G) <= m - x - 1` is known.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Lemma3Bound {
    pub upper_bound: usize,
    pub lower_bound: Rational,
    pub guaranteed_ratio: Rational,
}

/// `(m + n - x - 1) / (2(m - x - 1))`, or 1 when the bound is zero.
pub fn lemma3_ratio(m: usize, n: usize, x: usize) -> Rational {
    let ub = m.saturating_sub(x + 1);
    if ub == 0 {
        return Rational::from_integer(1);
    }
    rational(m + n - x - 1, 2 * ub)
}

pub fn lemma3_certificate(g: &Graph, x: usize) -> Lemma3Bound {
    let (m, n) = (g.m(), g.n());
    Lemma3Bound {
        upper_bound: m.saturating_sub(x + 1),
        lower_bound: rational((m + n).saturating_sub(x + 1), 2),
        guaranteed_ratio: lemma3_ratio(m, n, x),
    }
}

/// Re-certifies a `thm1` result: the witnesses are edge-disjoint odd cycles
/// and the failed search shows one of them loses a second edge.
fn lemma3_on(
    g: &Graph,
    base: ApproxResult,
    witnesses: Vec<OddCycleWitness>,
    algorithm: Algorithm,
) -> ApproxResult {
    debug_assert!(witnesses.len() >= base.x);
    let upper_bound = g.m() - witnesses.len() - 1;
    ApproxResult::assemble(
        base.cut,
        algorithm,
        base.x,
        base.c,
        witnesses,
        upper_bound,
        UpperBoundProof::PackingAndSearch,
        base.lower_bound,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::component_maxcut::thm1_approx;
    use crate::decomposition::Component;
    use crate::generate::{bowtie, complete, cycle, gnm_connected, path, petersen};
    use crate::oracle::{exact_max_cut, verify_result};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn graph(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::new(n, edges).unwrap()
    }

    fn check(g: &Graph, r: &ApproxResult) {
        let report = verify_result(g, r).unwrap();
        assert!(report.pass, "{:?}", report.failures);
        assert!(r.guaranteed_ratio >= target_ratio(g).min(Rational::from_integer(1)));
    }

    #[test]
    fn merge_examples() {
        let k3 = complete(3);
        let d = tree_bipartite_decompose(&k3).unwrap();
        let s = merge_tail(&k3, &d).unwrap();
        assert_eq!(
            (s.t(), s.y, s.merges, s.tail_kind),
            (1, 1, 1, TailKind::OddCactus)
        );
        assert_eq!(s.tail_vertices, vec![0, 1, 2]);

        let two = graph(6, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 3)]);
        let d = tree_bipartite_decompose(&two).unwrap();
        let s = merge_tail(&two, &d).unwrap();
        assert_eq!((s.t(), s.y), (1, 2));

        let cb_last = graph(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        let d = tree_bipartite_decompose(&cb_last).unwrap();
        let s = merge_tail(&cb_last, &d).unwrap();
        assert_eq!((s.merges, s.tail_kind), (0, TailKind::CbGraph));

        // CB graph ahead of a tree stops the merge
        let d = Decomposition::new(vec![
            Component::new(ComponentKind::CbGraph, vec![0, 1, 2, 3]),
            Component::new(ComponentKind::Tree, vec![4]),
        ]);
        let g = graph(5, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4)]);
        let s = merge_tail(&g, &d).unwrap();
        assert_eq!((s.t(), s.merges), (2, 0));
    }

    #[test]
    fn thm2_examples() {
        let k3 = complete(3);
        let r = thm2_approx(&k3).unwrap();
        assert_eq!(
            (r.cut.size(), r.algorithm),
            (2, Algorithm::ExactSpecialCase)
        );
        check(&k3, &r);

        let p = petersen();
        let r = thm2_approx(&p).unwrap();
        assert!(r.cut.size() >= 10);
        check(&p, &r);

        let c4 = cycle(4);
        assert_eq!(thm2_approx(&c4).unwrap().cut.size(), 4);
        assert!(thm2_approx(&graph(4, &[(0, 1), (2, 3)])).is_err());
    }

    #[test]
    fn thm3_examples() {
        let k4 = complete(4);
        let r = thm3_approx(&k4).unwrap();
        assert_eq!(r.cut.size(), 4);
        check(&k4, &r);

        let p = petersen();
        let r = thm3_approx(&p).unwrap();
        assert!(r.cut.size() >= 10);
        check(&p, &r);

        let c5 = cycle(5);
        assert_eq!(thm3_approx(&c5).unwrap().cut.size(), 4);
        assert!(matches!(
            thm3_approx(&complete(6)),
            Err(Error::TooDense { n: 6, m: 15 })
        ));
    }

    #[test]
    fn even_cycle_free_inputs_are_exact() {
        for g in [bowtie(), complete(3), path(5), cycle(7)] {
            for r in [thm2_approx(&g).unwrap(), thm3_approx(&g).unwrap()] {
                assert_eq!(r.cut.size(), g.n() - 1);
                assert_eq!(r.guaranteed_ratio, Rational::from_integer(1));
            }
        }
    }

    #[test]
    fn auto_dispatch() {
        assert_eq!(
            auto_approx(&petersen(), Effort::Best).unwrap().algorithm,
            Algorithm::Thm3
        );
        let k6 = complete(6);
        assert_eq!(
            auto_approx(&k6, Effort::Fast).unwrap().algorithm,
            Algorithm::Thm1
        );
        assert_eq!(
            auto_approx(&k6, Effort::Best).unwrap().algorithm,
            Algorithm::Thm2
        );
        assert_eq!(Effort::default(), Effort::Best);
    }

    #[test]
    fn lemma3_arithmetic() {
        assert_eq!(lemma3_ratio(6, 4, 1), Rational::from_integer(1));
        assert_eq!(lemma3_ratio(9, 6, 0), rational(14, 16));
        let b = lemma3_certificate(&complete(4), 1);
        assert_eq!(b.upper_bound, 4);
        assert_eq!(b.guaranteed_ratio, Rational::from_integer(1));
    }

    #[test]
    fn lemma2_on_whole_graph_is_exact() {
        let c4 = cycle(4);
        let d = tree_bipartite_decompose(&c4).unwrap();
        let mc = exact_max_cut(&c4).unwrap();
        let pa =
            PartialAssignment::from_slice(&mc.sides().iter().map(|&s| Some(s)).collect::<Vec<_>>());
        let r = lemma2_finish(&c4, &d, 0, &pa, &[]).unwrap();
        assert_eq!(r.cut.size(), 4);
        assert_eq!(r.guaranteed_ratio, Rational::from_integer(1));
    }

    #[test]
    fn lemma2_with_pendant_triangle() {
        // C4 on 0..3 and a triangle 0, 4, 5 sharing vertex 0
        let g = graph(6, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (4, 5), (5, 0)]);
        let d = tree_bipartite_decompose(&g).unwrap();
        assert_eq!(d.components[0].kind, ComponentKind::IocTree);
        let i = 1;
        let owner = d.owner_map(6);
        let mut pa = PartialAssignment::unfixed(6);
        let tail = g.induced(&(0..6).filter(|&v| owner[v] >= i).collect::<Vec<_>>());
        let TwoColoring::Bipartite(col) = two_color(&tail.graph) else {
            panic!()
        };
        for (l, &v) in tail.to_global.iter().enumerate() {
            pa.fix(v, col[l]);
        }
        let r = lemma2_finish(&g, &d, i, &pa, &[]).unwrap();
        assert_eq!(r.cut.size(), 6);
        check(&g, &r);

        // a cut that is not tight is rejected
        pa.fix(tail.to_global[0], col[0].flip());
        assert!(lemma2_finish(&g, &d, i, &pa, &[]).is_err());
    }

    #[test]
    fn drivers_dominate_thm1_bound() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..300 {
            let n = rng.gen_range(4..=12);
            let m = rng.gen_range(n - 1..=(n * (n - 1) / 2).min(30));
            let g = gnm_connected(&mut rng, n, m).unwrap();
            let t1 = thm1_approx(&g).unwrap();
            let r2 = thm2_approx(&g).unwrap();
            assert!(r2.cut.size() >= t1.lower_bound_ceil());
            check(&g, &r2);
            if m <= 2 * n {
                let r3 = thm3_approx(&g).unwrap();
                assert!(r3.cut.size() >= t1.lower_bound_ceil());
                check(&g, &r3);
            }
        }
    }
}
