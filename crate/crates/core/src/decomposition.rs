//! Tree-bipartite decomposition: an ordered vertex partition into trees that
//! induce an odd cycle with a later root (IOC trees), connected bipartite
//! graphs with a cycle (CB graphs), and a final CB graph or tree.
//!
//! Construction is a single sweep over a DFS tree in descending preorder. At
//! each vertex `r` the surviving subtree below `r` induces a forest, so two
//! questions are local to `r`:
//!
//! * a child subtree `S` plus `r` has an odd cycle iff `r` has two neighbors in
//!   `S` whose depths differ in parity (the tree path between them is odd);
//! * the surviving subtree of `r` has a cycle iff `r` has two or more edges
//!   into one child subtree, since DFS trees have no cross edges.
//!
//! Back-edge endpoints are mapped to their child subtree with a disjoint-set
//! forest that absorbs every surviving subtree into its parent.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{dfs_tree, two_color, DfsTree, Graph, OddCycleWitness};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ComponentKind {
    IocTree,
    CbGraph,
    Tree,
}

impl fmt::Display for ComponentKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ComponentKind::IocTree => "IOC tree",
            ComponentKind::CbGraph => "CB graph",
            ComponentKind::Tree => "tree",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Component {
    pub kind: ComponentKind,
    /// Sorted ascending.
    pub vertices: Vec<usize>,
    /// Roots of an IOC tree (vertices of later components); empty otherwise.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub roots: Vec<usize>,
    /// For IOC trees, `[(r, a), (r, b)]` with `r = roots[0]` and `a, b` in the
    /// component such that the two edges close an odd cycle.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub root_edges: Option<[(usize, usize); 2]>,
}

impl Component {
    pub fn new(kind: ComponentKind, mut vertices: Vec<usize>) -> Component {
        vertices.sort_unstable();
        Component {
            kind,
            vertices,
            roots: Vec::new(),
            root_edges: None,
        }
    }

    pub fn ioc(mut vertices: Vec<usize>, root: usize, a: usize, b: usize) -> Component {
        vertices.sort_unstable();
        Component {
            kind: ComponentKind::IocTree,
            vertices,
            roots: vec![root],
            root_edges: Some([(root, a), (root, b)]),
        }
    }

    pub fn root(&self) -> Option<usize> {
        self.roots.first().copied()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }
}

/// Ordered components `H_1, ..., H_t`.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Decomposition {
    pub components: Vec<Component>,
}

impl Decomposition {
    pub fn new(components: Vec<Component>) -> Decomposition {
        Decomposition { components }
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn last(&self) -> Option<&Component> {
        self.components.last()
    }

    /// Number of IOC trees, `x`.
    pub fn ioc_count(&self) -> usize {
        self.count(ComponentKind::IocTree)
    }

    pub fn count(&self, kind: ComponentKind) -> usize {
        self.components.iter().filter(|c| c.kind == kind).count()
    }

    /// Component index of every vertex; `usize::MAX` where unassigned.
    /// Later components win on overlap.
    pub fn owner_map(&self, n: usize) -> Vec<usize> {
        let mut owner = vec![usize::MAX; n];
        for (i, comp) in self.components.iter().enumerate() {
            for &v in &comp.vertices {
                if v < n {
                    owner[v] = i;
                }
            }
        }
        owner
    }
}

/// Decomposes a connected graph, sweeping a DFS tree rooted at vertex 0.
pub fn tree_bipartite_decompose(g: &Graph) -> Result<Decomposition> {
    decompose_observed(g, |_, _, _| {})
}

/// Sweep with a hook called at each vertex `r` before its children are
/// examined, with the DFS tree and the current removal mask.
pub(crate) fn decompose_observed<F>(g: &Graph, mut observe: F) -> Result<Decomposition>
where
    F: FnMut(usize, &DfsTree, &[bool]),
{
    // the DFS reports disconnected input
    let n = g.n();
    let tree = dfs_tree(g, 0)?;
    let (child_start, child_list) = tree.children_flat();
    let children = |v: usize| &child_list[child_start[v]..child_start[v + 1]];

    let mut removed = vec![false; n];
    // (preorder << 1 | depth parity), or 0 once removed: one lookup per arc
    let mut key: Vec<usize> = (0..n)
        .map(|v| tree.preorder[v] << 1 | tree.depth[v] & 1)
        .collect();
    let mut dsu = DisjointSets::new(n);
    // Subtree root that owns each disjoint-set representative.
    let mut top: Vec<usize> = (0..n).collect();
    let mut counters = vec![ChildCounter::EMPTY; n];
    let mut components = Vec::new();
    let mut stack = Vec::new();

    for &r in tree.order.iter().rev() {
        observe(r, &tree, &removed);
        let pre_r = tree.preorder[r];
        for &w in g.neighbors(r) {
            let k = key[w];
            if k >> 1 <= pre_r {
                continue;
            }
            let c = top[dsu.find(w)];
            let counter = &mut counters[c];
            counter.edges += 1;
            let slot = &mut counter.first_at[k & 1];
            if *slot == usize::MAX {
                *slot = w;
            }
        }

        // (i) child subtrees closing an odd cycle with r
        let mut cyclic_child = false;
        for &c in children(r) {
            if removed[c] {
                continue;
            }
            let ChildCounter {
                edges,
                first_at: [even, odd],
            } = counters[c];
            if even != usize::MAX && odd != usize::MAX {
                let (a, b) = if even < odd { (even, odd) } else { (odd, even) };
                let verts = collect_subtree(c, &children, &mut removed, &mut key, &mut stack);
                components.push(Component::ioc(verts, r, a, b));
            } else if edges >= 2 {
                cyclic_child = true;
            }
        }

        // (ii) surviving subtree of r with a cycle
        if cyclic_child {
            let verts = collect_subtree(r, &children, &mut removed, &mut key, &mut stack);
            components.push(Component::new(ComponentKind::CbGraph, verts));
        } else {
            for &c in children(r) {
                if !removed[c] {
                    dsu.union(r, c);
                }
            }
            let rep = dsu.find(r);
            top[rep] = r;
        }

        for &c in children(r) {
            counters[c] = ChildCounter::EMPTY;
        }
    }

    // (iii) remainder
    let rest: Vec<usize> = (0..n).filter(|&v| !removed[v]).collect();
    if !rest.is_empty() {
        components.push(Component::new(ComponentKind::Tree, rest));
    }
    Ok(Decomposition { components })
}

/// Marks and returns the surviving subtree of `root`.
fn collect_subtree<'a>(
    root: usize,
    children: &impl Fn(usize) -> &'a [usize],
    removed: &mut [bool],
    key: &mut [usize],
    stack: &mut Vec<usize>,
) -> Vec<usize> {
    let mut out = Vec::new();
    stack.clear();
    stack.push(root);
    removed[root] = true;
    key[root] = 0;
    while let Some(v) = stack.pop() {
        out.push(v);
        for &c in children(v) {
            if !removed[c] {
                removed[c] = true;
                key[c] = 0;
                stack.push(c);
            }
        }
    }
    out
}

/// Back edges from the current vertex into one child subtree.
#[derive(Clone, Copy)]
struct ChildCounter {
    edges: usize,
    /// First neighbor seen at even and at odd depth.
    first_at: [usize; 2],
}

impl ChildCounter {
    const EMPTY: ChildCounter = ChildCounter {
        edges: 0,
        first_at: [usize::MAX; 2],
    };
}

struct DisjointSets {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl DisjointSets {
    fn new(n: usize) -> Self {
        DisjointSets {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    fn find(&mut self, v: usize) -> usize {
        let mut root = v;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut cur = v;
        while self.parent[cur] != root {
            let next = self.parent[cur];
            self.parent[cur] = root;
            cur = next;
        }
        root
    }

    fn union(&mut self, a: usize, b: usize) {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Rule {
    /// Vertex sets must partition `0..n`.
    Partition,
    /// Kinds of `H_1..H_{t-1}` and of `H_t`.
    KindOrder,
    /// Induced subgraph must match the component kind.
    Shape,
    /// IOC root and root edges.
    IocRoot,
    /// Every non-final component has an edge to a later one.
    ForwardEdge,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub component: Option<usize>,
    pub rule: Rule,
    pub detail: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.component {
            Some(i) => write!(f, "H_{}: {:?}: {}", i + 1, self.rule, self.detail),
            None => write!(f, "{:?}: {}", self.rule, self.detail),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct ValidationReport {
    pub components: usize,
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    fn push(&mut self, component: Option<usize>, rule: Rule, detail: impl Into<String>) {
        self.violations.push(Violation {
            component,
            rule,
            detail: detail.into(),
        });
    }
}

/// Checks every structural condition of a tree-bipartite decomposition.
pub fn validate_decomposition(g: &Graph, d: &Decomposition) -> ValidationReport {
    let n = g.n();
    let t = d.len();
    let mut report = ValidationReport {
        components: t,
        ..Default::default()
    };
    if t == 0 {
        if n > 0 {
            report.push(None, Rule::Partition, "decomposition has no components");
        }
        return report;
    }

    let mut owner = vec![usize::MAX; n];
    for (i, comp) in d.components.iter().enumerate() {
        if comp.vertices.is_empty() {
            report.push(Some(i), Rule::Partition, "component is empty");
        }
        for &v in &comp.vertices {
            if v >= n {
                report.push(Some(i), Rule::Partition, format!("vertex {v} out of range"));
            } else if owner[v] != usize::MAX {
                report.push(
                    Some(i),
                    Rule::Partition,
                    format!("vertex {v} also belongs to H_{}", owner[v] + 1),
                );
            } else {
                owner[v] = i;
            }
        }
    }
    if let Some(v) = owner.iter().position(|&o| o == usize::MAX) {
        report.push(None, Rule::Partition, format!("vertex {v} is not covered"));
    }

    for (i, comp) in d.components.iter().enumerate() {
        let last = i + 1 == t;
        match (last, comp.kind) {
            (false, ComponentKind::Tree) => report.push(
                Some(i),
                Rule::KindOrder,
                "only the last component may be a plain tree",
            ),
            (true, ComponentKind::IocTree) => report.push(
                Some(i),
                Rule::KindOrder,
                "the last component must be a CB graph or a tree",
            ),
            _ => {}
        }
        let verts: Vec<usize> = comp.vertices.iter().copied().filter(|&v| v < n).collect();
        check_shape(g, i, comp, &verts, &owner, &mut report);
        if !last {
            let forward = verts.iter().any(|&v| {
                g.neighbors(v)
                    .iter()
                    .any(|&w| owner[w] != usize::MAX && owner[w] > i)
            });
            if !forward {
                report.push(Some(i), Rule::ForwardEdge, "no edge to a later component");
            }
        }
    }
    report
}

fn check_shape(
    g: &Graph,
    i: usize,
    comp: &Component,
    verts: &[usize],
    owner: &[usize],
    report: &mut ValidationReport,
) {
    if verts.is_empty() {
        return;
    }
    let sub = g.induced(verts);
    let (nv, ne) = (sub.graph.n(), sub.graph.m());
    let connected = sub.graph.is_connected();
    if !connected {
        report.push(Some(i), Rule::Shape, "induced subgraph is disconnected");
    }
    match comp.kind {
        ComponentKind::Tree | ComponentKind::IocTree => {
            if connected && ne != nv - 1 {
                report.push(Some(i), Rule::Shape, "induced subgraph contains a cycle");
            }
        }
        ComponentKind::CbGraph => {
            if !two_color(&sub.graph).is_bipartite() {
                report.push(Some(i), Rule::Shape, "induced subgraph is not bipartite");
            }
            if ne < nv {
                report.push(Some(i), Rule::Shape, "induced subgraph contains no cycle");
            }
        }
    }

    if comp.kind != ComponentKind::IocTree {
        if !comp.roots.is_empty() || comp.root_edges.is_some() {
            report.push(Some(i), Rule::IocRoot, "only IOC trees carry roots");
        }
        return;
    }
    let Some(r) = comp.root() else {
        report.push(Some(i), Rule::IocRoot, "IOC tree has no root");
        return;
    };
    for &root in &comp.roots {
        if root >= g.n() || owner[root] == usize::MAX || owner[root] <= i {
            report.push(
                Some(i),
                Rule::IocRoot,
                format!("root {root} does not lie in a later component"),
            );
        }
    }
    let Some([(r1, a), (r2, b)]) = comp.root_edges else {
        report.push(Some(i), Rule::IocRoot, "IOC tree has no root edges");
        return;
    };
    if r1 != r || r2 != r || a == b || !comp.contains(a) || !comp.contains(b) {
        report.push(
            Some(i),
            Rule::IocRoot,
            format!("root edges ({r1}, {a}), ({r2}, {b}) do not join root {r} to two component vertices"),
        );
        return;
    }
    if !g.has_edge(r, a) || !g.has_edge(r, b) {
        report.push(Some(i), Rule::IocRoot, "root edges are not graph edges");
        return;
    }
    if !connected || ne != nv - 1 {
        return;
    }
    let (la, lb) = (sub.local(a).unwrap(), sub.local(b).unwrap());
    let path = tree_path(&sub.graph, la, lb).expect("connected");
    if path.len() % 2 == 1 {
        report.push(
            Some(i),
            Rule::IocRoot,
            format!("root edges at {a} and {b} close an even cycle"),
        );
    }
}

/// Vertex path `from .. to` in a connected graph (BFS).
pub(crate) fn tree_path(g: &Graph, from: usize, to: usize) -> Option<Vec<usize>> {
    let mut prev = vec![usize::MAX; g.n()];
    prev[from] = from;
    let mut queue = VecDeque::from([from]);
    while let Some(v) = queue.pop_front() {
        if v == to {
            break;
        }
        for &w in g.neighbors(v) {
            if prev[w] == usize::MAX {
                prev[w] = v;
                queue.push_back(w);
            }
        }
    }
    if prev[to] == usize::MAX {
        return None;
    }
    let mut path = vec![to];
    let mut v = to;
    while v != from {
        v = prev[v];
        path.push(v);
    }
    path.reverse();
    Some(path)
}

/// One odd cycle per IOC tree, closed through its root edges; the cycles are
/// pairwise edge-disjoint and certify `mc(G) <= m - x`.
pub fn odd_cycle_certificates(g: &Graph, d: &Decomposition) -> Result<Vec<OddCycleWitness>> {
    let report = validate_decomposition(g, d);
    if let Some(v) = report.violations.first() {
        return Err(Error::InvalidDecomposition(v.to_string()));
    }
    Ok(certificates_of_valid(g, d))
}

/// [`odd_cycle_certificates`] without re-validation.
pub(crate) fn certificates_of_valid(g: &Graph, d: &Decomposition) -> Vec<OddCycleWitness> {
    certificates_with_owner(g, d, &d.owner_map(g.n()))
}

pub(crate) fn certificates_with_owner(
    g: &Graph,
    d: &Decomposition,
    owner: &[usize],
) -> Vec<OddCycleWitness> {
    let mut prev = vec![usize::MAX; g.n()];
    let mut touched = Vec::new();
    let mut out = Vec::new();
    for (i, comp) in d.components.iter().enumerate() {
        let Some([(r, a), (_, b)]) = comp.root_edges else {
            continue;
        };
        for v in touched.drain(..) {
            prev[v] = usize::MAX;
        }
        prev[a] = a;
        touched.push(a);
        let mut queue = VecDeque::from([a]);
        while let Some(v) = queue.pop_front() {
            if v == b {
                break;
            }
            for &w in g.neighbors(v) {
                if owner[w] == i && prev[w] == usize::MAX {
                    prev[w] = v;
                    touched.push(w);
                    queue.push_back(w);
                }
            }
        }
        let mut path = vec![b];
        let mut v = b;
        while v != a {
            v = prev[v];
            path.push(v);
        }
        path.push(r);
        path.reverse();
        out.push(OddCycleWitness::from_open(path));
    }
    out
}
