//! Exact cuts of single components, the reverse-order greedy merge, and the
//! linear-time approximation built on them.

use std::collections::VecDeque;
use std::fmt;

use num_rational::Ratio;
use serde::Serialize;

use crate::decomposition::{
    certificates_with_owner, tree_bipartite_decompose, validate_decomposition, Component,
    ComponentKind, Decomposition,
};
use crate::error::{Error, Result};
use crate::graph::{Cut, Graph, OddCycleWitness, Side};

/// Exact non-negative rational used for every bound and ratio.
pub type Rational = Ratio<i64>;

pub fn rational(num: usize, den: usize) -> Rational {
    Ratio::new(num as i64, den as i64)
}

/// `"p/q"` form used in reports.
pub fn format_ratio(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Assignment of the vertices of one component (or any vertex subset).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalCut {
    pub assignment: Vec<(usize, Side)>,
    /// Bichromatic edges with both endpoints in the subset.
    pub size: usize,
}

/// Maximum cut of a tree, IOC tree or CB graph: the bipartition of its induced
/// subgraph, smallest vertex on side `A`.
pub fn component_max_cut(g: &Graph, comp: &Component) -> Result<LocalCut> {
    if let Some(&v) = comp.vertices.iter().find(|&&v| v >= g.n()) {
        return Err(Error::ComponentMismatch {
            index: usize::MAX,
            detail: format!("vertex {v} is not in the graph"),
        });
    }
    let mut scratch = vec![None; g.n()];
    let mut cut = max_cut_of(g, comp, usize::MAX, |v| comp.contains(v), &mut scratch)?;
    cut.assignment.sort_unstable();
    Ok(cut)
}

/// `scratch` must be all `None` on entry and is left that way.
fn max_cut_of<F>(
    g: &Graph,
    comp: &Component,
    index: usize,
    member: F,
    scratch: &mut [Option<Side>],
) -> Result<LocalCut>
where
    F: Fn(usize) -> bool,
{
    let mismatch = |detail: &str| Error::ComponentMismatch {
        index,
        detail: detail.to_string(),
    };
    let Some(&start) = comp.vertices.first() else {
        return Err(mismatch("component is empty"));
    };
    let mut assignment = Vec::with_capacity(comp.len());
    scratch[start] = Some(Side::A);
    let mut queue = VecDeque::from([start]);
    let mut twice_edges = 0;
    let mut bipartite = true;
    while let Some(v) = queue.pop_front() {
        let sv = scratch[v].expect("queued vertices are colored");
        assignment.push((v, sv));
        for &w in g.neighbors(v) {
            if !member(w) {
                continue;
            }
            twice_edges += 1;
            match scratch[w] {
                None => {
                    scratch[w] = Some(sv.flip());
                    queue.push_back(w);
                }
                Some(sw) if sw == sv => bipartite = false,
                Some(_) => {}
            }
        }
    }
    for &(v, _) in &assignment {
        scratch[v] = None;
    }
    if !bipartite {
        return Err(mismatch("induced subgraph is not bipartite"));
    }
    if assignment.len() != comp.len() {
        return Err(mismatch("induced subgraph is disconnected"));
    }
    let edges = twice_edges / 2;
    let nv = comp.len();
    match comp.kind {
        ComponentKind::Tree | ComponentKind::IocTree if edges != nv - 1 => {
            return Err(mismatch("induced subgraph contains a cycle"))
        }
        ComponentKind::CbGraph if edges < nv => {
            return Err(mismatch("induced subgraph has no cycle"))
        }
        _ => {}
    }
    Ok(LocalCut {
        assignment,
        size: edges,
    })
}

/// One step of the greedy merge.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MergeStep {
    pub component: usize,
    /// Edges from the component to the already assigned vertices.
    pub cross_edges: usize,
    /// Of those, the ones cut by the chosen orientation.
    pub cross_cut: usize,
    pub flipped: bool,
}

#[derive(Debug, Clone, Default)]
pub(crate) struct MergeStats {
    /// Cut edges inside the merged components (sum of their max cuts).
    pub inside: usize,
    /// Edges inside the merged components.
    pub internal_edges: usize,
    pub steps: Vec<MergeStep>,
}

/// Attaches `comps` in reverse order onto the partial assignment `sides`.
/// `owner[v]` must equal `offset + k` for `v` in `comps[k]`.
pub(crate) fn merge_components(
    g: &Graph,
    comps: &[Component],
    offset: usize,
    owner: &[usize],
    sides: &mut [Option<Side>],
) -> Result<MergeStats> {
    let mut stats = MergeStats::default();
    let mut scratch = vec![None; g.n()];
    for (k, comp) in comps.iter().enumerate().rev() {
        let index = offset + k;
        let local = max_cut_of(g, comp, index, |v| owner[v] == index, &mut scratch)?;
        // E(A_i, A) + E(B_i, B) versus E(A_i, B) + E(B_i, A)
        let (mut same, mut diff) = (0, 0);
        for &(v, sv) in &local.assignment {
            for &w in g.neighbors(v) {
                match sides[w] {
                    Some(sw) if sw == sv => same += 1,
                    Some(_) => diff += 1,
                    None => {}
                }
            }
        }
        let flipped = same >= diff;
        for &(v, sv) in &local.assignment {
            sides[v] = Some(if flipped { sv.flip() } else { sv });
        }
        stats.inside += local.size;
        stats.internal_edges += local.size;
        stats.steps.push(MergeStep {
            component: index,
            cross_edges: same + diff,
            cross_cut: same.max(diff),
            flipped,
        });
    }
    Ok(stats)
}

/// Greedy merge over a valid decomposition, starting from the empty cut.
pub fn greedy_merge(g: &Graph, d: &Decomposition) -> Result<Cut> {
    greedy_merge_traced(g, d).map(|(cut, _)| cut)
}

pub fn greedy_merge_traced(g: &Graph, d: &Decomposition) -> Result<(Cut, Vec<MergeStep>)> {
    let report = validate_decomposition(g, d);
    if let Some(v) = report.violations.first() {
        return Err(Error::InvalidDecomposition(v.to_string()));
    }
    let owner = d.owner_map(g.n());
    let mut sides = vec![None; g.n()];
    let stats = merge_components(g, &d.components, 0, &owner, &mut sides)?;
    let sides = sides
        .into_iter()
        .map(|s| s.expect("partition covers V"))
        .collect();
    Ok((Cut::new(g, sides), stats.steps))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Algorithm {
    Thm1,
    Thm2,
    Thm3,
    ExactSpecialCase,
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// What licenses `upper_bound` as a bound on the maximum cut.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum UpperBoundProof {
    /// `m - |witnesses|`: every cut misses an edge of each edge-disjoint odd cycle.
    OddCyclePacking,
    /// `m - |witnesses| - 1`: the packing plus an exhaustive bipartization
    /// search showing the tail cannot reach its packing bound.
    PackingAndSearch,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ApproxResult {
    pub cut: Cut,
    pub algorithm: Algorithm,
    /// IOC trees in the decomposition the greedy merge ran on.
    pub x: usize,
    /// Sum of `|E(H)| - |V(H)|` over CB components.
    pub c: usize,
    pub witnesses: Vec<OddCycleWitness>,
    pub upper_bound: usize,
    pub upper_bound_proof: UpperBoundProof,
    /// Size the construction is guaranteed to reach.
    pub lower_bound: Rational,
    /// `lower_bound / upper_bound` (1 when the graph has no edges).
    pub guaranteed_ratio: Rational,
}

impl ApproxResult {
    #[allow(clippy::too_many_arguments)]
    pub(crate) fn assemble(
        cut: Cut,
        algorithm: Algorithm,
        x: usize,
        c: usize,
        witnesses: Vec<OddCycleWitness>,
        upper_bound: usize,
        upper_bound_proof: UpperBoundProof,
        lower_bound: Rational,
    ) -> ApproxResult {
        let guaranteed_ratio = if upper_bound == 0 {
            Rational::from_integer(1)
        } else {
            lower_bound / Rational::from_integer(upper_bound as i64)
        };
        ApproxResult {
            cut,
            algorithm,
            x,
            c,
            witnesses,
            upper_bound,
            upper_bound_proof,
            lower_bound,
            guaranteed_ratio,
        }
    }

    /// Smallest integer cut size implied by the lower bound.
    pub fn lower_bound_ceil(&self) -> usize {
        self.lower_bound.ceil().to_integer() as usize
    }
}

/// Lower bound of a greedy merge: every cut edge inside components plus half
/// of every edge between them.
pub(crate) fn merge_lower_bound(m: usize, inside: usize, internal_edges: usize) -> Rational {
    rational(2 * inside + (m - internal_edges), 2)
}

pub(crate) fn cb_surplus(g: &Graph, d: &Decomposition) -> usize {
    cb_surplus_with_owner(g, d, &d.owner_map(g.n()))
}

fn cb_surplus_with_owner(g: &Graph, d: &Decomposition, owner: &[usize]) -> usize {
    d.components
        .iter()
        .enumerate()
        .filter(|(_, c)| c.kind == ComponentKind::CbGraph)
        .map(|(i, comp)| {
            let twice: usize = comp
                .vertices
                .iter()
                .map(|&v| g.neighbors(v).iter().filter(|&&w| owner[w] == i).count())
                .sum();
            twice / 2 - comp.len()
        })
        .sum()
}

/// Linear-time approximation with ratio at least `1/2 + (n-1)/(2m)`.
pub fn thm1_approx(g: &Graph) -> Result<ApproxResult> {
    let d = tree_bipartite_decompose(g)?;
    thm1_on(g, &d)
}

pub(crate) fn thm1_on(g: &Graph, d: &Decomposition) -> Result<ApproxResult> {
    let owner = d.owner_map(g.n());
    let mut sides = vec![None; g.n()];
    let stats = merge_components(g, &d.components, 0, &owner, &mut sides)?;
    let sides = sides
        .into_iter()
        .map(|s| s.expect("partition covers V"))
        .collect();
    let cut = Cut::new(g, sides);
    let witnesses = certificates_with_owner(g, d, &owner);
    let x = d.ioc_count();
    let lower_bound = merge_lower_bound(g.m(), stats.inside, stats.internal_edges);
    Ok(ApproxResult::assemble(
        cut,
        Algorithm::Thm1,
        x,
        cb_surplus_with_owner(g, d, &owner),
        witnesses,
        g.m() - x,
        UpperBoundProof::OddCyclePacking,
        lower_bound,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;

    fn graph(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::new(n, edges).unwrap()
    }

    #[test]
    fn component_cut_examples() {
        let path = graph(3, &[(0, 1), (1, 2)]);
        let tree = Component::new(ComponentKind::Tree, vec![0, 1, 2]);
        assert_eq!(component_max_cut(&path, &tree).unwrap().size, 2);

        let c4 = generate::cycle(4);
        let cb = Component::new(ComponentKind::CbGraph, vec![0, 1, 2, 3]);
        assert_eq!(component_max_cut(&c4, &cb).unwrap().size, 4);

        let k3 = generate::complete(3);
        let ioc = Component::ioc(vec![1, 2], 0, 1, 2);
        let cut = component_max_cut(&k3, &ioc).unwrap();
        assert_eq!(cut.size, 1);
        assert_eq!(cut.assignment, vec![(1, Side::A), (2, Side::B)]);
    }

    #[test]
    fn component_cut_rejects_wrong_kind() {
        let k3 = generate::complete(3);
        let as_tree = Component::new(ComponentKind::Tree, vec![0, 1, 2]);
        assert!(component_max_cut(&k3, &as_tree).is_err());
        let c4 = generate::cycle(4);
        let as_tree = Component::new(ComponentKind::Tree, vec![0, 1, 2, 3]);
        assert!(component_max_cut(&c4, &as_tree).is_err());
        let path = generate::path(3);
        let as_cb = Component::new(ComponentKind::CbGraph, vec![0, 1, 2]);
        assert!(component_max_cut(&path, &as_cb).is_err());
    }

    #[test]
    fn merge_examples() {
        let c4 = generate::cycle(4);
        let d = tree_bipartite_decompose(&c4).unwrap();
        assert_eq!(greedy_merge(&c4, &d).unwrap().size(), 4);

        let k4 = generate::complete(4);
        let d = tree_bipartite_decompose(&k4).unwrap();
        let (cut, steps) = greedy_merge_traced(&k4, &d).unwrap();
        assert_eq!(cut.size(), 4);
        // tree {0,1} first with no cross edges, then the IOC tree {2,3} with four
        assert_eq!(steps[0].cross_edges, 0);
        assert_eq!(steps[1].cross_edges, 4);
        assert_eq!(steps[1].cross_cut, 2);
        assert!(steps[1].flipped);

        let k3 = generate::complete(3);
        let d = tree_bipartite_decompose(&k3).unwrap();
        assert_eq!(greedy_merge(&k3, &d).unwrap().size(), 2);
    }

    #[test]
    fn thm1_examples() {
        let k3 = generate::complete(3);
        let r = thm1_approx(&k3).unwrap();
        assert_eq!(r.cut.size(), 2);
        assert_eq!(r.x, 1);
        assert_eq!(r.lower_bound, rational(2, 1));
        assert_eq!(r.upper_bound, 2);
        assert!(r.guaranteed_ratio >= rational(5, 6));

        let c5 = generate::cycle(5);
        let r = thm1_approx(&c5).unwrap();
        assert_eq!((r.cut.size(), r.x), (4, 1));
        assert_eq!(r.lower_bound, rational(4, 1));

        let c4 = generate::cycle(4);
        let r = thm1_approx(&c4).unwrap();
        assert_eq!(r.cut.size(), 4);
        assert_eq!(r.guaranteed_ratio, rational(1, 1));

        let single = graph(1, &[]);
        let r = thm1_approx(&single).unwrap();
        assert_eq!(r.cut.size(), 0);
        assert_eq!(r.guaranteed_ratio, rational(1, 1));
    }

    #[test]
    fn thm1_lower_bound_matches_closed_form() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let g = generate::gnm_connected(&mut rng, 12, 22).unwrap();
            let d = tree_bipartite_decompose(&g).unwrap();
            let r = thm1_approx(&g).unwrap();
            let tail_tree = usize::from(d.last().unwrap().kind == ComponentKind::Tree);
            let expected = rational(g.m() + g.n() + r.c - r.x - tail_tree, 2);
            assert_eq!(r.lower_bound, expected);
            assert!(r.cut.size() >= r.lower_bound_ceil());
        }
    }
}
