//! Constrained maximum cuts of connected graphs without even cycles.
//!
//! Such a graph with `y` odd cycles has `mc = m - y`, reached exactly when every
//! bridge is cut and every odd cycle loses exactly one edge. Its tree-bipartite
//! decomposition consists of IOC trees, each hanging off a single root by two
//! edges, followed by a tree. Each IOC tree plus its root is a "piece" with
//! exactly one cycle; pieces are solved for both root sides in decomposition
//! order, and roots that only admit one side are fixed for later pieces.

use std::collections::{HashMap, VecDeque};

use crate::decomposition::{tree_bipartite_decompose, Component, ComponentKind};
use crate::error::{Error, Result};
use crate::graph::{is_even_cycle_free, Cut, CycleStructure, Graph, Side};

/// Per-vertex constraint: `Some(side)` fixes the vertex, `None` leaves it free.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialAssignment(Vec<Option<Side>>);

impl PartialAssignment {
    pub fn unfixed(n: usize) -> PartialAssignment {
        PartialAssignment(vec![None; n])
    }

    pub fn from_slice(values: &[Option<Side>]) -> PartialAssignment {
        PartialAssignment(values.to_vec())
    }

    /// `a` on side `A`, `b` on side `B`; later entries win on overlap.
    pub fn with_sets(n: usize, a: &[usize], b: &[usize]) -> PartialAssignment {
        let mut pa = PartialAssignment::unfixed(n);
        for &v in a {
            pa.fix(v, Side::A);
        }
        for &v in b {
            pa.fix(v, Side::B);
        }
        pa
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, v: usize) -> Option<Side> {
        self.0[v]
    }

    pub fn fix(&mut self, v: usize, side: Side) {
        self.0[v] = Some(side);
    }

    pub fn unfix(&mut self, v: usize) {
        self.0[v] = None;
    }

    pub fn fixed(&self) -> impl Iterator<Item = (usize, Side)> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter_map(|(v, s)| s.map(|s| (v, s)))
    }

    pub fn values(&self) -> &[Option<Side>] {
        &self.0
    }

    /// Whether `sides` agrees with every fixed vertex.
    pub fn respected_by(&self, sides: &[Side]) -> bool {
        self.fixed().all(|(v, s)| sides[v] == s)
    }
}

/// Assignment of a piece's non-root vertices with its single uncut cycle edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PieceAssignment {
    pub assignment: Vec<(usize, Side)>,
    pub defect: (usize, usize),
}

/// Cut of size exactly `m - y` extending `pa`, or `None` when none exists.
pub fn constrained_cactus_cut(g: &Graph, pa: &PartialAssignment) -> Result<Option<Cut>> {
    if pa.len() != g.n() {
        return Err(Error::AssignmentLength {
            expected: g.n(),
            got: pa.len(),
        });
    }
    let y = match is_even_cycle_free(g)? {
        CycleStructure::OddCactus(cycles) => cycles.len(),
        CycleStructure::EvenCycle(w) => return Err(Error::HasEvenCycle(w.cycle().to_vec())),
    };
    let d = tree_bipartite_decompose(g)?;
    let (tail, pieces) = d
        .components
        .split_last()
        .expect("connected graph has a component");
    if tail.kind != ComponentKind::Tree || pieces.len() != y {
        return Err(Error::Precondition(
            "even-cycle-free graph must decompose into IOC trees and a tree".into(),
        ));
    }
    let owner = d.owner_map(g.n());

    let mut constraints = pa.clone();
    let mut memo: Vec<[Option<PieceAssignment>; 2]> = Vec::with_capacity(pieces.len());
    for (i, piece) in pieces.iter().enumerate() {
        let root = piece.root().expect("IOC tree has a root");
        let outgoing: usize = piece
            .vertices
            .iter()
            .map(|&v| g.neighbors(v).iter().filter(|&&w| owner[w] > i).count())
            .sum();
        if outgoing != 2 {
            return Err(Error::Precondition(format!(
                "IOC tree H_{} has {outgoing} edges to later components",
                i + 1
            )));
        }
        let member = |v: usize| owner[v] == i;
        let on_a = solve_piece(g, piece, &member, Side::A, &constraints)?;
        let on_b = solve_piece(g, piece, &member, Side::B, &constraints)?;
        match (&on_a, &on_b) {
            (None, None) => return Ok(None),
            (Some(_), None) => constraints.fix(root, Side::A),
            (None, Some(_)) => constraints.fix(root, Side::B),
            (Some(_), Some(_)) => {}
        }
        memo.push([on_a, on_b]);
    }

    let mut sides: Vec<Option<Side>> = vec![None; g.n()];
    let Some(tail_sides) = color_tree_within(g, tail, &owner, d.len() - 1, &constraints) else {
        return Ok(None);
    };
    for (v, s) in tail_sides {
        sides[v] = Some(s);
    }
    for (i, piece) in pieces.iter().enumerate().rev() {
        let root = piece.root().unwrap();
        let root_side = sides[root].expect("roots lie in later components");
        let chosen = memo[i][root_side.index()]
            .as_ref()
            .expect("root side was fixed to a feasible one");
        for &(v, s) in &chosen.assignment {
            sides[v] = Some(s);
        }
    }
    let sides: Vec<Side> = sides.into_iter().map(Option::unwrap).collect();
    let cut = Cut::new(g, sides);
    debug_assert_eq!(cut.size(), g.m() - y);
    debug_assert!(pa.respected_by(cut.sides()));
    Ok(Some(cut))
}

/// Assignment of a piece (IOC tree, its root and the two root edges) with the
/// root on `root_side`, exactly one uncut cycle edge and every other piece edge
/// cut, consistent with `pa`.
pub fn piece_feasible(
    g: &Graph,
    piece: &Component,
    root_side: Side,
    pa: &PartialAssignment,
) -> Result<Option<PieceAssignment>> {
    if pa.len() != g.n() {
        return Err(Error::AssignmentLength {
            expected: g.n(),
            got: pa.len(),
        });
    }
    solve_piece(g, piece, &|v| piece.contains(v), root_side, pa)
}

fn solve_piece(
    g: &Graph,
    piece: &Component,
    member: &dyn Fn(usize) -> bool,
    root_side: Side,
    pa: &PartialAssignment,
) -> Result<Option<PieceAssignment>> {
    let malformed = |msg: String| Error::MalformedPiece(msg);
    if piece.kind != ComponentKind::IocTree {
        return Err(malformed(format!(
            "expected an IOC tree, got a {}",
            piece.kind
        )));
    }
    let Some([(r, a), (r2, b)]) = piece.root_edges else {
        return Err(malformed("IOC tree without root edges".into()));
    };
    if r2 != r || a == b || member(r) || !member(a) || !member(b) {
        return Err(malformed(format!(
            "root edges ({r}, {a}), ({r2}, {b}) are inconsistent"
        )));
    }
    if !g.has_edge(r, a) || !g.has_edge(r, b) {
        return Err(malformed("root edges are not graph edges".into()));
    }

    // BFS over the tree from a: parents, and a check that it is a tree.
    let mut parent: HashMap<usize, usize> = HashMap::with_capacity(piece.len());
    parent.insert(a, a);
    let mut queue = VecDeque::from([a]);
    let mut twice_edges = 0;
    while let Some(v) = queue.pop_front() {
        for &w in g.neighbors(v) {
            if !member(w) {
                continue;
            }
            twice_edges += 1;
            if let std::collections::hash_map::Entry::Vacant(e) = parent.entry(w) {
                e.insert(v);
                queue.push_back(w);
            }
        }
    }
    if parent.len() != piece.len() || twice_edges / 2 != piece.len() - 1 {
        return Err(malformed("IOC tree part is not a tree".into()));
    }

    // cycle = r, a, ..., b
    let mut path = vec![b];
    let mut v = b;
    while v != a {
        v = parent[&v];
        path.push(v);
    }
    path.reverse();
    let mut cycle = Vec::with_capacity(path.len() + 1);
    cycle.push(r);
    cycle.extend(path);
    let len = cycle.len();
    if len % 2 == 0 {
        return Err(malformed(format!(
            "root edges at {a} and {b} close an even cycle"
        )));
    }

    // Required side of each cycle vertex, pulled in from the hanging trees.
    let mut required: Vec<Option<Side>> = vec![None; len];
    let mut require = |idx: usize, side: Side| -> bool {
        match required[idx] {
            Some(s) if s != side => false,
            _ => {
                required[idx] = Some(side);
                true
            }
        }
    };
    if !require(0, root_side) {
        return Ok(None);
    }
    if let Some(s) = pa.get(r) {
        if !require(0, s) {
            return Ok(None);
        }
    }
    // (cycle index, parity of distance from it)
    let mut attach: HashMap<usize, (usize, bool)> = HashMap::with_capacity(piece.len());
    let mut queue = VecDeque::new();
    for (idx, &c) in cycle.iter().enumerate().skip(1) {
        attach.insert(c, (idx, false));
        queue.push_back(c);
    }
    while let Some(v) = queue.pop_front() {
        let (idx, odd) = attach[&v];
        if let Some(s) = pa.get(v) {
            let want = if odd { s.flip() } else { s };
            if !require(idx, want) {
                return Ok(None);
            }
        }
        for &w in g.neighbors(v) {
            if member(w) && !attach.contains_key(&w) {
                attach.insert(w, (idx, !odd));
                queue.push_back(w);
            }
        }
    }

    // With the root on side s0 and the uncut edge at (c_k, c_{k+1}), vertex c_j
    // sits on s0 xor parity(j) for j <= k and on the opposite side after k.
    let forward = |j: usize| {
        if j % 2 == 1 {
            root_side.flip()
        } else {
            root_side
        }
    };
    let mut prefix_ok = vec![false; len];
    let mut ok = true;
    for j in 0..len {
        ok &= required[j].is_none_or(|s| s == forward(j));
        prefix_ok[j] = ok;
    }
    // suffix_ok[k]: every j in k+1..len matches the shifted pattern
    let mut suffix_ok = vec![true; len];
    let mut ok = true;
    for k in (0..len).rev() {
        suffix_ok[k] = ok;
        ok &= required[k].is_none_or(|s| s == forward(k).flip());
    }
    let Some(k) = (0..len).find(|&k| prefix_ok[k] && suffix_ok[k]) else {
        return Ok(None);
    };

    let cycle_side = |j: usize| {
        if j <= k {
            forward(j)
        } else {
            forward(j).flip()
        }
    };
    let mut assignment: Vec<(usize, Side)> = attach
        .iter()
        .map(|(&v, &(idx, odd))| {
            let s = cycle_side(idx);
            (v, if odd { s.flip() } else { s })
        })
        .collect();
    assignment.sort_unstable();
    let defect = (cycle[k], cycle[(k + 1) % len]);
    Ok(Some(PieceAssignment { assignment, defect }))
}

/// Proper 2-coloring of the tree component `index` agreeing with `pa`;
/// unconstrained trees put their smallest vertex on `A`.
fn color_tree_within(
    g: &Graph,
    tree: &Component,
    owner: &[usize],
    index: usize,
    pa: &PartialAssignment,
) -> Option<Vec<(usize, Side)>> {
    let start = tree.vertices[0];
    let mut sides: HashMap<usize, Side> = HashMap::with_capacity(tree.len());
    sides.insert(start, Side::A);
    let mut queue = VecDeque::from([start]);
    while let Some(v) = queue.pop_front() {
        let sv = sides[&v];
        for &w in g.neighbors(v) {
            if owner[w] == index && !sides.contains_key(&w) {
                sides.insert(w, sv.flip());
                queue.push_back(w);
            }
        }
    }
    let mut flip: Option<bool> = None;
    for (&v, &s) in &sides {
        if let Some(want) = pa.get(v) {
            let needs_flip = want != s;
            if flip.is_some_and(|f| f != needs_flip) {
                return None;
            }
            flip = Some(needs_flip);
        }
    }
    let flip = flip.unwrap_or(false);
    let mut out: Vec<(usize, Side)> = sides
        .into_iter()
        .map(|(v, s)| (v, if flip { s.flip() } else { s }))
        .collect();
    out.sort_unstable();
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;
    use crate::graph::cut_size;

    fn graph(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::new(n, edges).unwrap()
    }

    fn bowtie() -> Graph {
        graph(5, &[(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)])
    }

    /// Exhaustive reference for a piece: all assignments of the piece's tree
    /// vertices with the root fixed.
    fn piece_by_enumeration(
        g: &Graph,
        piece: &Component,
        root_side: Side,
        pa: &PartialAssignment,
    ) -> bool {
        let [(r, _), _] = piece.root_edges.unwrap();
        let verts = &piece.vertices;
        let mut piece_edges: Vec<(usize, usize)> = g
            .edges()
            .iter()
            .copied()
            .filter(|&(u, v)| piece.contains(u) && piece.contains(v))
            .collect();
        for &(x, y) in &piece.root_edges.unwrap() {
            piece_edges.push((x, y));
        }
        if pa.get(r).is_some_and(|s| s != root_side) {
            return false;
        }
        (0u32..1 << verts.len()).any(|mask| {
            let side = |v: usize| {
                if v == r {
                    root_side
                } else {
                    let i = verts.binary_search(&v).unwrap();
                    Side::from_parity(mask >> i & 1 == 1)
                }
            };
            let respects = verts
                .iter()
                .all(|&v| pa.get(v).is_none_or(|s| s == side(v)));
            let uncut = piece_edges
                .iter()
                .filter(|&&(u, v)| side(u) == side(v))
                .count();
            respects && uncut == 1
        })
    }

    #[test]
    fn k3_examples() {
        let k3 = generate::complete(3);
        let pa = PartialAssignment::with_sets(3, &[0], &[1]);
        let cut = constrained_cactus_cut(&k3, &pa).unwrap().unwrap();
        assert_eq!(cut.size(), 2);
        assert!(pa.respected_by(cut.sides()));

        let all_a = PartialAssignment::with_sets(3, &[0, 1, 2], &[]);
        assert_eq!(constrained_cactus_cut(&k3, &all_a).unwrap(), None);
    }

    #[test]
    fn bowtie_with_center_fixed() {
        let g = bowtie();
        let pa = PartialAssignment::with_sets(5, &[0], &[]);
        let cut = constrained_cactus_cut(&g, &pa).unwrap().unwrap();
        assert_eq!(cut.size(), 4);
        assert_eq!(cut.side(0), Side::A);
    }

    #[test]
    fn tree_parity_conflict() {
        let path = generate::path(5);
        // 0 and 2 are at even distance, so a full cut puts them together
        let pa = PartialAssignment::with_sets(5, &[0], &[2]);
        assert_eq!(constrained_cactus_cut(&path, &pa).unwrap(), None);
        let pa = PartialAssignment::with_sets(5, &[0], &[3]);
        assert_eq!(
            constrained_cactus_cut(&path, &pa).unwrap().unwrap().size(),
            4
        );
    }

    #[test]
    fn rejects_even_cycles_and_bad_lengths() {
        let c4 = generate::cycle(4);
        assert!(matches!(
            constrained_cactus_cut(&c4, &PartialAssignment::unfixed(4)),
            Err(Error::HasEvenCycle(_))
        ));
        let k3 = generate::complete(3);
        assert!(constrained_cactus_cut(&k3, &PartialAssignment::unfixed(2)).is_err());
        let split = graph(4, &[(0, 1), (2, 3)]);
        assert!(constrained_cactus_cut(&split, &PartialAssignment::unfixed(4)).is_err());
    }

    #[test]
    fn piece_examples() {
        let k3 = generate::complete(3);
        let piece = Component::ioc(vec![1, 2], 0, 1, 2);
        let free = PartialAssignment::unfixed(3);
        assert!(piece_feasible(&k3, &piece, Side::A, &free)
            .unwrap()
            .is_some());

        // both non-root vertices pinned to the root's side: two uncut edges
        for (s1, s2) in [
            (Side::A, Side::A),
            (Side::A, Side::B),
            (Side::B, Side::A),
            (Side::B, Side::B),
        ] {
            let mut pa = PartialAssignment::unfixed(3);
            pa.fix(1, s1);
            pa.fix(2, s2);
            let got = piece_feasible(&k3, &piece, Side::A, &pa).unwrap().is_some();
            assert_eq!(
                got,
                piece_by_enumeration(&k3, &piece, Side::A, &pa),
                "{s1:?} {s2:?}"
            );
        }

        // pendant path 1-3-4 hanging off the triangle; 3 and 4 on the same side
        let g = graph(5, &[(0, 1), (0, 2), (1, 2), (1, 3), (3, 4)]);
        let piece = Component::ioc(vec![1, 2, 3, 4], 0, 1, 2);
        let pa = PartialAssignment::with_sets(5, &[3, 4], &[]);
        assert_eq!(piece_feasible(&g, &piece, Side::A, &pa).unwrap(), None);
        assert_eq!(piece_feasible(&g, &piece, Side::B, &pa).unwrap(), None);
    }

    #[test]
    fn malformed_pieces() {
        let k3 = generate::complete(3);
        let free = PartialAssignment::unfixed(3);
        let tree = Component::new(ComponentKind::Tree, vec![1, 2]);
        assert!(piece_feasible(&k3, &tree, Side::A, &free).is_err());
        let c4 = generate::cycle(4);
        let even = Component::ioc(vec![1, 2, 3], 0, 1, 3);
        assert!(piece_feasible(&c4, &even, Side::A, &PartialAssignment::unfixed(4)).is_err());
    }

    #[test]
    fn piece_matches_enumeration_on_random_pieces() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..300 {
            let g = generate::random_cactus(&mut rng, 9, true).unwrap();
            let d = tree_bipartite_decompose(&g).unwrap();
            for comp in d
                .components
                .iter()
                .filter(|c| c.kind == ComponentKind::IocTree)
            {
                let mut pa = PartialAssignment::unfixed(g.n());
                for v in 0..g.n() {
                    if rng.gen_bool(0.3) {
                        pa.fix(v, Side::from_parity(rng.gen_bool(0.5)));
                    }
                }
                for root_side in [Side::A, Side::B] {
                    let got = piece_feasible(&g, comp, root_side, &pa).unwrap();
                    assert_eq!(
                        got.is_some(),
                        piece_by_enumeration(&g, comp, root_side, &pa)
                    );
                    if let Some(p) = got {
                        let mut sides = vec![Side::A; g.n()];
                        let r = comp.root().unwrap();
                        sides[r] = root_side;
                        for &(v, s) in &p.assignment {
                            sides[v] = s;
                        }
                        assert_eq!(sides[p.defect.0], sides[p.defect.1]);
                    }
                }
            }
        }
    }

    #[test]
    fn unconstrained_always_succeeds() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for _ in 0..200 {
            let g = generate::random_cactus(&mut rng, 25, true).unwrap();
            let cut = constrained_cactus_cut(&g, &PartialAssignment::unfixed(g.n()))
                .unwrap()
                .expect("free instances are feasible");
            assert_eq!(cut.size(), g.n() - 1);
            assert_eq!(cut.size(), cut_size(&g, cut.sides()));
        }
    }
}
