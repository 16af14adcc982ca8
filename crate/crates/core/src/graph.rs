//! Simple undirected graphs, cuts, and the traversal primitives the
//! decomposition and the approximation drivers are built from.
//!
//! Adjacency is stored in compressed rows sorted by neighbor index, so every
//! traversal in this crate visits neighbors in ascending order and the
//! results are reproducible.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// One of the two sides of a cut.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Side {
    A,
    B,
}

impl Side {
    pub fn flip(self) -> Side {
        match self {
            Side::A => Side::B,
            Side::B => Side::A,
        }
    }

    /// `A` for even parity, `B` for odd.
    pub fn from_parity(odd: bool) -> Side {
        if odd {
            Side::B
        } else {
            Side::A
        }
    }

    pub fn index(self) -> usize {
        match self {
            Side::A => 0,
            Side::B => 1,
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Side::A => f.write_str("A"),
            Side::B => f.write_str("B"),
        }
    }
}

/// Immutable simple undirected graph on vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    /// Canonical `(u, v)` with `u < v`, in insertion order; the index is the edge id.
    edges: Vec<(usize, usize)>,
    offsets: Vec<usize>,
    targets: Vec<usize>,
    edge_ids: Vec<usize>,
}

impl Graph {
    /// Builds a graph, rejecting self-loops, duplicate edges and out-of-range endpoints.
    pub fn new(n: usize, edge_list: &[(usize, usize)]) -> Result<Graph> {
        let mut edges = Vec::with_capacity(edge_list.len());
        let mut degree = vec![0usize; n];
        for &(u, v) in edge_list {
            if u >= n || v >= n {
                return Err(Error::VertexOutOfRange { u, v, n });
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            degree[u] += 1;
            degree[v] += 1;
            edges.push((u.min(v), u.max(v)));
        }

        let mut offsets = Vec::with_capacity(n + 1);
        offsets.push(0);
        for d in &degree {
            offsets.push(offsets.last().unwrap() + d);
        }
        let mut fill = offsets[..n].to_vec();
        let mut slots = vec![(0usize, 0usize); 2 * edges.len()];
        for (id, &(u, v)) in edges.iter().enumerate() {
            slots[fill[u]] = (v, id);
            fill[u] += 1;
            slots[fill[v]] = (u, id);
            fill[v] += 1;
        }
        for v in 0..n {
            let row = &mut slots[offsets[v]..offsets[v + 1]];
            row.sort_unstable();
            if let Some(w) = row.windows(2).find(|w| w[0].0 == w[1].0) {
                let other = w[0].0;
                return Err(Error::DuplicateEdge(v.min(other), v.max(other)));
            }
        }
        let (targets, edge_ids) = slots.into_iter().unzip();
        Ok(Graph {
            n,
            edges,
            offsets,
            targets,
            edge_ids,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Canonical edge list (`u < v`) indexed by edge id.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, id: usize) -> (usize, usize) {
        self.edges[id]
    }

    /// Neighbors of `v` in ascending order.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.targets[self.offsets[v]..self.offsets[v + 1]]
    }

    /// `(neighbor, edge id)` pairs of `v`, ascending by neighbor.
    pub fn incident(&self, v: usize) -> impl Iterator<Item = (usize, usize)> + '_ {
        let range = self.offsets[v]..self.offsets[v + 1];
        self.targets[range.clone()]
            .iter()
            .copied()
            .zip(self.edge_ids[range].iter().copied())
    }

    /// The `pos`-th `(neighbor, edge id)` pair of `v`.
    pub fn incident_at(&self, v: usize, pos: usize) -> (usize, usize) {
        let k = self.offsets[v] + pos;
        (self.targets[k], self.edge_ids[k])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn edge_id(&self, u: usize, v: usize) -> Option<usize> {
        if u >= self.n || v >= self.n {
            return None;
        }
        let row = self.neighbors(u);
        row.binary_search(&v)
            .ok()
            .map(|pos| self.edge_ids[self.offsets[u] + pos])
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edge_id(u, v).is_some()
    }

    /// Vertex sets of the connected components, each sorted, ordered by smallest vertex.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        let mut queue = VecDeque::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            queue.push_back(s);
            let mut comp = Vec::new();
            while let Some(v) = queue.pop_front() {
                comp.push(v);
                for &w in self.neighbors(v) {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.ensure_connected().is_ok()
    }

    /// `Ok` for connected graphs with at least one vertex.
    pub fn ensure_connected(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &w in self.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        match seen.iter().position(|&s| !s) {
            Some(unreached) => Err(Error::Disconnected { root: 0, unreached }),
            None => Ok(()),
        }
    }

    /// Subgraph induced by `vertices`, relabelled to `0..vertices.len()` in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Subgraph {
        let to_local: HashMap<usize, usize> =
            vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut edges = Vec::new();
        for (i, &v) in vertices.iter().enumerate() {
            for &w in self.neighbors(v) {
                if let Some(&j) = to_local.get(&w) {
                    if i < j {
                        edges.push((i, j));
                    }
                }
            }
        }
        let graph = Graph::new(vertices.len(), &edges).expect("induced subgraph of a simple graph");
        Subgraph {
            graph,
            to_global: vertices.to_vec(),
            to_local,
        }
    }

    /// Subgraph on `vertices` keeping exactly the given global edges.
    pub fn edge_subgraph(&self, vertices: &[usize], edges: &[(usize, usize)]) -> Result<Subgraph> {
        let to_local: HashMap<usize, usize> =
            vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut local = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            if !self.has_edge(u, v) {
                return Err(Error::Precondition(format!("({u}, {v}) is not an edge")));
            }
            match (to_local.get(&u), to_local.get(&v)) {
                (Some(&a), Some(&b)) => local.push((a, b)),
                _ => {
                    return Err(Error::Precondition(format!(
                        "edge ({u}, {v}) leaves the vertex set"
                    )))
                }
            }
        }
        Ok(Subgraph {
            graph: Graph::new(vertices.len(), &local)?,
            to_global: vertices.to_vec(),
            to_local,
        })
    }
}

/// A graph together with the mapping back to the vertex ids of its parent.
#[derive(Debug, Clone)]
pub struct Subgraph {
    pub graph: Graph,
    pub to_global: Vec<usize>,
    pub to_local: HashMap<usize, usize>,
}

impl Subgraph {
    pub fn global(&self, v: usize) -> usize {
        self.to_global[v]
    }

    pub fn local(&self, v: usize) -> Option<usize> {
        self.to_local.get(&v).copied()
    }

    pub fn globalize(&self, cycle: &[usize]) -> Vec<usize> {
        cycle.iter().map(|&v| self.to_global[v]).collect()
    }
}

/// Number of bichromatic edges under `sides`.
pub fn cut_size(g: &Graph, sides: &[Side]) -> usize {
    g.edges()
        .iter()
        .filter(|&&(u, v)| sides[u] != sides[v])
        .count()
}

/// A two-sided partition of all vertices with its size cached.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cut {
    sides: Vec<Side>,
    size: usize,
}

impl Cut {
    pub fn new(g: &Graph, sides: Vec<Side>) -> Cut {
        assert_eq!(sides.len(), g.n(), "cut must assign every vertex");
        let size = cut_size(g, &sides);
        Cut { sides, size }
    }

    /// Trusts `size` without recounting; used to build corrupted fixtures.
    #[cfg(test)]
    pub(crate) fn with_claimed_size(sides: Vec<Side>, size: usize) -> Cut {
        Cut { sides, size }
    }

    /// Every vertex on side `A`.
    pub fn empty(g: &Graph) -> Cut {
        Cut {
            sides: vec![Side::A; g.n()],
            size: 0,
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn side(&self, v: usize) -> Side {
        self.sides[v]
    }

    pub fn sides(&self) -> &[Side] {
        &self.sides
    }

    pub fn into_sides(self) -> Vec<Side> {
        self.sides
    }

    /// Moves `v` to the other side, updating the cached size in `O(deg v)`.
    pub fn flip(&mut self, g: &Graph, v: usize) {
        let mut same = 0;
        for &w in g.neighbors(v) {
            if self.sides[w] == self.sides[v] {
                same += 1;
            }
        }
        let deg = g.degree(v);
        self.size = self.size + same - (deg - same);
        self.sides[v] = self.sides[v].flip();
    }

    /// Recomputes the size from scratch.
    pub fn recount(&self, g: &Graph) -> usize {
        cut_size(g, &self.sides)
    }

    pub fn vertices_on(&self, side: Side) -> Vec<usize> {
        (0..self.sides.len())
            .filter(|&v| self.sides[v] == side)
            .collect()
    }
}

/// Closed odd walk `v0, v1, ..., v0` with distinct inner vertices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct OddCycleWitness {
    cycle: Vec<usize>,
}

impl OddCycleWitness {
    /// Closes the open vertex sequence `vertices` into a cycle. Does not check
    /// adjacency; see [`OddCycleWitness::check`].
    pub fn from_open(vertices: Vec<usize>) -> OddCycleWitness {
        let mut cycle = vertices;
        if let Some(&first) = cycle.first() {
            cycle.push(first);
        }
        OddCycleWitness { cycle }
    }

    /// Closed vertex sequence, first equals last.
    pub fn cycle(&self) -> &[usize] {
        &self.cycle
    }

    pub fn length(&self) -> usize {
        self.cycle.len().saturating_sub(1)
    }

    /// Canonical `(u, v)`, `u < v`, edges along the cycle.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.cycle
            .windows(2)
            .map(|w| (w[0].min(w[1]), w[0].max(w[1])))
    }

    /// Checks closure, odd length, adjacency in `g` and distinct inner vertices.
    pub fn check(&self, g: &Graph) -> std::result::Result<(), String> {
        check_cycle(g, &self.cycle, true)
    }
}

/// Closed walk of even length with distinct inner vertices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct EvenCycleWitness {
    cycle: Vec<usize>,
}

impl EvenCycleWitness {
    pub fn from_open(vertices: Vec<usize>) -> EvenCycleWitness {
        let mut cycle = vertices;
        if let Some(&first) = cycle.first() {
            cycle.push(first);
        }
        EvenCycleWitness { cycle }
    }

    pub fn cycle(&self) -> &[usize] {
        &self.cycle
    }

    pub fn length(&self) -> usize {
        self.cycle.len().saturating_sub(1)
    }

    pub fn check(&self, g: &Graph) -> std::result::Result<(), String> {
        check_cycle(g, &self.cycle, false)
    }
}

fn check_cycle(g: &Graph, cycle: &[usize], odd: bool) -> std::result::Result<(), String> {
    if cycle.len() < 4 {
        return Err(format!("cycle {cycle:?} is too short"));
    }
    if cycle.first() != cycle.last() {
        return Err(format!("cycle {cycle:?} is not closed"));
    }
    let len = cycle.len() - 1;
    if (len % 2 == 1) != odd {
        return Err(format!("cycle {cycle:?} has length {len}"));
    }
    let mut inner = cycle[..len].to_vec();
    inner.sort_unstable();
    if inner.windows(2).any(|w| w[0] == w[1]) {
        return Err(format!("cycle {cycle:?} repeats a vertex"));
    }
    for w in cycle.windows(2) {
        if !g.has_edge(w[0], w[1]) {
            return Err(format!("({}, {}) is not an edge", w[0], w[1]));
        }
    }
    Ok(())
}

/// Depth-first search tree with neighbors explored in ascending order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DfsTree {
    pub root: usize,
    pub parent: Vec<Option<usize>>,
    pub preorder: Vec<usize>,
    /// `order[k]` is the vertex with preorder rank `k`.
    pub order: Vec<usize>,
    pub depth: Vec<usize>,
}

impl DfsTree {
    /// Children of every vertex, ascending.
    pub fn children(&self) -> Vec<Vec<usize>> {
        let mut children = vec![Vec::new(); self.parent.len()];
        for &v in &self.order {
            if let Some(p) = self.parent[v] {
                children[p].push(v);
            }
        }
        children
    }

    /// Children in flat form: those of `v` are `list[offsets[v]..offsets[v + 1]]`, ascending.
    pub fn children_flat(&self) -> (Vec<usize>, Vec<usize>) {
        let n = self.parent.len();
        let mut offsets = vec![0usize; n + 1];
        for p in self.parent.iter().flatten() {
            offsets[p + 1] += 1;
        }
        for v in 0..n {
            offsets[v + 1] += offsets[v];
        }
        let mut next = offsets.clone();
        let mut list = vec![0usize; n.saturating_sub(1)];
        for &v in &self.order {
            if let Some(p) = self.parent[v] {
                list[next[p]] = v;
                next[p] += 1;
            }
        }
        (offsets, list)
    }
}

pub fn dfs_tree(g: &Graph, root: usize) -> Result<DfsTree> {
    let n = g.n();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if root >= n {
        return Err(Error::VertexOutOfRange {
            u: root,
            v: root,
            n,
        });
    }
    const UNSEEN: usize = usize::MAX;
    let mut parent = vec![None; n];
    let mut preorder = vec![UNSEEN; n];
    let mut depth = vec![0; n];
    let mut order = Vec::with_capacity(n);

    // (vertex, next position in its adjacency row)
    let mut stack: Vec<(usize, usize)> = vec![(root, 0)];
    preorder[root] = 0;
    order.push(root);
    while let Some(top) = stack.last_mut() {
        let (v, pos) = *top;
        let row = g.neighbors(v);
        if pos == row.len() {
            stack.pop();
            continue;
        }
        top.1 += 1;
        let w = row[pos];
        if preorder[w] == UNSEEN {
            preorder[w] = order.len();
            order.push(w);
            parent[w] = Some(v);
            depth[w] = depth[v] + 1;
            stack.push((w, 0));
        }
    }
    if let Some(unreached) = preorder.iter().position(|&p| p == UNSEEN) {
        return Err(Error::Disconnected { root, unreached });
    }
    Ok(DfsTree {
        root,
        parent,
        preorder,
        order,
        depth,
    })
}

/// Outcome of a 2-coloring attempt.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TwoColoring {
    Bipartite(Vec<Side>),
    OddCycle(OddCycleWitness),
}

impl TwoColoring {
    pub fn is_bipartite(&self) -> bool {
        matches!(self, TwoColoring::Bipartite(_))
    }
}

/// BFS 2-coloring of every component; the smallest vertex of each component gets `A`.
pub fn two_color(g: &Graph) -> TwoColoring {
    two_color_skipping(g, None)
}

/// Like [`two_color`] but treats edge id `skip` as absent.
pub fn two_color_skipping(g: &Graph, skip: Option<usize>) -> TwoColoring {
    let n = g.n();
    let mut color: Vec<Option<Side>> = vec![None; n];
    let mut parent = vec![usize::MAX; n];
    let mut dist = vec![0usize; n];
    let mut queue = VecDeque::new();
    for s in 0..n {
        if color[s].is_some() {
            continue;
        }
        color[s] = Some(Side::A);
        queue.push_back(s);
        while let Some(v) = queue.pop_front() {
            let cv = color[v].unwrap();
            for (w, id) in g.incident(v) {
                if Some(id) == skip {
                    continue;
                }
                match color[w] {
                    None => {
                        color[w] = Some(cv.flip());
                        parent[w] = v;
                        dist[w] = dist[v] + 1;
                        queue.push_back(w);
                    }
                    Some(cw) if cw == cv => {
                        return TwoColoring::OddCycle(bfs_odd_cycle(&parent, &dist, v, w));
                    }
                    Some(_) => {}
                }
            }
        }
    }
    TwoColoring::Bipartite(color.into_iter().map(Option::unwrap).collect())
}

/// Closes the monochromatic edge `u-w` through the BFS tree.
fn bfs_odd_cycle(parent: &[usize], dist: &[usize], u: usize, w: usize) -> OddCycleWitness {
    let (mut a, mut b) = (u, w);
    let mut left = vec![a];
    let mut right = vec![b];
    while dist[a] > dist[b] {
        a = parent[a];
        left.push(a);
    }
    while dist[b] > dist[a] {
        b = parent[b];
        right.push(b);
    }
    while a != b {
        a = parent[a];
        b = parent[b];
        left.push(a);
        right.push(b);
    }
    right.pop();
    right.reverse();
    left.extend(right);
    OddCycleWitness::from_open(left)
}

/// Cycle structure of a connected graph with respect to even cycles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CycleStructure {
    /// No even cycle; the pairwise edge-disjoint odd cycles (one per non-bridge block).
    OddCactus(Vec<OddCycleWitness>),
    EvenCycle(EvenCycleWitness),
}

/// Blocks are found with a low-link pass; the graph is even-cycle-free iff
/// every block is a single edge or an odd cycle.
pub fn is_even_cycle_free(g: &Graph) -> Result<CycleStructure> {
    g.ensure_connected()?;
    let mut odd = Vec::new();
    for block in biconnected_blocks(g) {
        if block.len() == 1 {
            continue;
        }
        let mut verts: Vec<usize> = block
            .iter()
            .flat_map(|&id| {
                let (u, v) = g.edge(id);
                [u, v]
            })
            .collect();
        verts.sort_unstable();
        verts.dedup();
        let edges: Vec<(usize, usize)> = block.iter().map(|&id| g.edge(id)).collect();
        let sub = g.edge_subgraph(&verts, &edges)?;
        if edges.len() == verts.len() {
            let cycle = sub.globalize(&walk_cycle(&sub.graph));
            if cycle.len() % 2 == 1 {
                odd.push(OddCycleWitness::from_open(cycle));
            } else {
                return Ok(CycleStructure::EvenCycle(EvenCycleWitness::from_open(
                    cycle,
                )));
            }
        } else {
            let cycle = sub.globalize(&even_cycle_in_block(&sub.graph));
            return Ok(CycleStructure::EvenCycle(EvenCycleWitness::from_open(
                cycle,
            )));
        }
    }
    Ok(CycleStructure::OddCactus(odd))
}

/// Edge-id lists of the biconnected blocks (Hopcroft-Tarjan, iterative).
pub fn biconnected_blocks(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    const UNSEEN: usize = usize::MAX;
    let mut disc = vec![UNSEEN; n];
    let mut low = vec![0usize; n];
    let mut edge_stack: Vec<usize> = Vec::new();
    let mut blocks = Vec::new();
    let mut timer = 0;
    for s in 0..n {
        if disc[s] != UNSEEN {
            continue;
        }
        disc[s] = timer;
        low[s] = timer;
        timer += 1;
        // (vertex, edge id to parent, next adjacency position)
        let mut stack: Vec<(usize, usize, usize)> = vec![(s, UNSEEN, 0)];
        while let Some(top) = stack.last_mut() {
            let (v, pe, pos) = *top;
            if pos < g.degree(v) {
                let (w, id) = g.incident_at(v, pos);
                top.2 += 1;
                if id == pe {
                    continue;
                }
                if disc[w] == UNSEEN {
                    edge_stack.push(id);
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    stack.push((w, id, 0));
                } else if disc[w] < disc[v] {
                    edge_stack.push(id);
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&(p, _, _)) = stack.last() {
                    low[p] = low[p].min(low[v]);
                    if low[v] >= disc[p] {
                        let mut block = Vec::new();
                        while let Some(id) = edge_stack.pop() {
                            block.push(id);
                            if id == pe {
                                break;
                            }
                        }
                        blocks.push(block);
                    }
                }
            }
        }
    }
    blocks
}

/// Vertex order around a 2-regular connected graph.
fn walk_cycle(g: &Graph) -> Vec<usize> {
    let mut order = vec![0];
    let mut prev = usize::MAX;
    let mut cur = 0;
    loop {
        let next = g
            .neighbors(cur)
            .iter()
            .copied()
            .find(|&w| w != prev)
            .unwrap();
        if next == 0 {
            break;
        }
        order.push(next);
        prev = cur;
        cur = next;
    }
    order
}

/// Even cycle inside a 2-connected graph that is not a cycle: any cycle plus an
/// ear gives three internally disjoint paths, two of which have even total length.
fn even_cycle_in_block(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let tree = dfs_tree(g, 0).expect("blocks are connected");
    // First back edge closes a cycle along the tree path.
    let (low_end, high_end) = g
        .edges()
        .iter()
        .map(|&(u, v)| {
            if tree.depth[u] < tree.depth[v] {
                (u, v)
            } else {
                (v, u)
            }
        })
        .find(|&(u, v)| tree.parent[v] != Some(u))
        .expect("a block with more edges than vertices has a back edge");
    let mut cycle = vec![high_end];
    let mut v = high_end;
    while v != low_end {
        v = tree.parent[v].unwrap();
        cycle.push(v);
    }
    let k = cycle.len();
    let mut pos = vec![usize::MAX; n];
    for (i, &v) in cycle.iter().enumerate() {
        pos[v] = i;
    }
    let on_cycle = |v: usize| pos[v] != usize::MAX;
    let is_cycle_edge = |a: usize, b: usize| {
        on_cycle(a) && on_cycle(b) && {
            let d = (pos[a] + k - pos[b]) % k;
            d == 1 || d == k - 1
        }
    };
    let (p, q) = g
        .edges()
        .iter()
        .flat_map(|&(u, v)| [(u, v), (v, u)])
        .find(|&(u, v)| on_cycle(u) && !is_cycle_edge(u, v))
        .expect("a block with more edges than vertices has an ear");

    let ear: Vec<usize> = if on_cycle(q) {
        vec![p, q]
    } else {
        let mut prev = vec![usize::MAX; n];
        prev[q] = p;
        let mut queue = VecDeque::from([q]);
        let mut end = usize::MAX;
        'search: while let Some(x) = queue.pop_front() {
            for &y in g.neighbors(x) {
                if y == p || prev[y] != usize::MAX {
                    continue;
                }
                prev[y] = x;
                if on_cycle(y) {
                    end = y;
                    break 'search;
                }
                queue.push_back(y);
            }
        }
        assert_ne!(end, usize::MAX, "2-connected block must contain an ear");
        let mut path = vec![end];
        let mut v = end;
        while v != p {
            v = prev[v];
            path.push(v);
        }
        path.reverse();
        path
    };

    let z = *ear.last().unwrap();
    let (ip, iz) = (pos[p], pos[z]);
    let arc = |from: usize, len: usize| -> Vec<usize> {
        (0..=len).map(|s| cycle[(from + s) % k]).collect()
    };
    let a = (iz + k - ip) % k;
    let b = k - a;
    let c = ear.len() - 1;
    if (a + c).is_multiple_of(2) {
        // p -> z along the cycle, then back along the ear
        let mut res = arc(ip, a);
        res.extend(ear.iter().rev().skip(1).take(c - 1));
        res
    } else if (b + c).is_multiple_of(2) {
        // z -> p along the cycle, then along the ear
        let mut res = arc(iz, b);
        res.extend(ear.iter().skip(1).take(c - 1));
        res
    } else {
        cycle
    }
}

/// Cut given by the depth parity of the DFS tree from vertex 0.
pub fn spanning_tree_cut(g: &Graph) -> Result<Cut> {
    let tree = dfs_tree(g, 0)?;
    let sides = tree
        .depth
        .iter()
        .map(|&d| Side::from_parity(d % 2 == 1))
        .collect();
    Ok(Cut::new(g, sides))
}
