//! Connected instance generators and a few fixed graph families.
//!
//! Every random generator takes the RNG explicitly so callers control seeding.

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, Subgraph};

/// Rejection sampling is only attempted up to this many vertices; larger
/// `gnm_connected` requests plant a random spanning tree instead.
pub const GNM_REJECTION_MAX_N: usize = 2_000;
const GNM_REJECTION_ATTEMPTS: usize = 200;
const REGULAR_ATTEMPTS: usize = 20_000;

/// Generator model with its parameters.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "model", rename_all = "snake_case")]
pub enum Model {
    GnmConnected {
        n: usize,
        m: usize,
    },
    RandomSubcubic {
        n: usize,
    },
    RandomMaxDeg {
        n: usize,
        max_degree: usize,
    },
    RandomCactus {
        n: usize,
        odd_only: bool,
    },
    RandomRegular {
        n: usize,
        d: usize,
        #[serde(default)]
        min_girth: Option<usize>,
    },
}

pub fn generate<R: Rng>(model: &Model, rng: &mut R) -> Result<Graph> {
    match *model {
        Model::GnmConnected { n, m } => gnm_connected(rng, n, m),
        Model::RandomSubcubic { n } => random_subcubic(rng, n),
        Model::RandomMaxDeg { n, max_degree } => random_max_deg(rng, n, max_degree),
        Model::RandomCactus { n, odd_only } => random_cactus(rng, n, odd_only),
        Model::RandomRegular { n, d, min_girth } => random_regular(rng, n, d, min_girth),
    }
}

/// Connected graph with exactly `m` edges. Small instances are drawn
/// uniformly by rejection; large ones (or after repeated rejection) get a
/// uniform random labelled tree plus uniformly chosen extra edges.
pub fn gnm_connected<R: Rng>(rng: &mut R, n: usize, m: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::Generator("n must be positive".into()));
    }
    let max_m = n * (n - 1) / 2;
    if m + 1 < n || m > max_m {
        return Err(Error::Generator(format!(
            "m = {m} outside [{}, {max_m}] for n = {n}",
            n - 1
        )));
    }
    if n <= GNM_REJECTION_MAX_N {
        for _ in 0..GNM_REJECTION_ATTEMPTS {
            let edges = sample_edges(rng, n, m, &HashSet::new());
            let g = Graph::new(n, &edges)?;
            if g.is_connected() {
                return Ok(g);
            }
        }
    }
    let tree = random_tree_edges(rng, n);
    let taken: HashSet<(usize, usize)> = tree.iter().copied().collect();
    let mut edges = tree;
    edges.extend(sample_edges(rng, n, m - (n - 1), &taken));
    Graph::new(n, &edges)
}

/// `count` distinct canonical pairs avoiding `taken`.
fn sample_edges<R: Rng>(
    rng: &mut R,
    n: usize,
    count: usize,
    taken: &HashSet<(usize, usize)>,
) -> Vec<(usize, usize)> {
    let free = n * (n - 1) / 2 - taken.len();
    if count * 2 > free {
        let mut all: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|e| !taken.contains(e))
            .collect();
        let (chosen, _) = all.partial_shuffle(rng, count);
        return chosen.to_vec();
    }
    let mut seen = HashSet::with_capacity(count);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u == v {
            continue;
        }
        let e = (u.min(v), u.max(v));
        if !taken.contains(&e) && seen.insert(e) {
            out.push(e);
        }
    }
    out
}

/// Uniform labelled tree via a random Prüfer sequence.
fn random_tree_edges<R: Rng>(rng: &mut R, n: usize) -> Vec<(usize, usize)> {
    if n < 2 {
        return Vec::new();
    }
    if n == 2 {
        return vec![(0, 1)];
    }
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &v in &seq {
        degree[v] += 1;
    }
    let mut leaves: std::collections::BinaryHeap<std::cmp::Reverse<usize>> = (0..n)
        .filter(|&v| degree[v] == 1)
        .map(std::cmp::Reverse)
        .collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &v in &seq {
        let std::cmp::Reverse(leaf) = leaves.pop().unwrap();
        edges.push((leaf.min(v), leaf.max(v)));
        degree[v] -= 1;
        if degree[v] == 1 {
            leaves.push(std::cmp::Reverse(v));
        }
    }
    let std::cmp::Reverse(a) = leaves.pop().unwrap();
    let std::cmp::Reverse(b) = leaves.pop().unwrap();
    edges.push((a.min(b), a.max(b)));
    edges
}

/// Connected graph with maximum degree at most three.
pub fn random_subcubic<R: Rng>(rng: &mut R, n: usize) -> Result<Graph> {
    random_max_deg(rng, n, 3)
}

/// Connected graph with maximum degree at most `max_degree`: a random
/// degree-bounded tree plus a random number of extra edge attempts.
pub fn random_max_deg<R: Rng>(rng: &mut R, n: usize, max_degree: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::Generator("n must be positive".into()));
    }
    if (max_degree < 2 && n > 2) || (max_degree == 0 && n > 1) {
        return Err(Error::Generator(format!(
            "no connected graph on {n} vertices has maximum degree {max_degree}"
        )));
    }
    let mut degree = vec![0usize; n];
    let mut edges: HashSet<(usize, usize)> = HashSet::with_capacity(n * max_degree / 2);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    // vertices already in the tree with spare degree
    let mut open = vec![order[0]];
    for &v in &order[1..] {
        let k = rng.gen_range(0..open.len());
        let u = open[k];
        edges.insert((u.min(v), u.max(v)));
        degree[u] += 1;
        degree[v] += 1;
        if degree[u] == max_degree {
            open.swap_remove(k);
        }
        if degree[v] < max_degree {
            open.push(v);
        }
    }
    let attempts = rng.gen_range(0..=n * max_degree / 2);
    for _ in 0..attempts {
        if open.len() < 2 {
            break;
        }
        let i = rng.gen_range(0..open.len());
        let j = rng.gen_range(0..open.len());
        let (u, v) = (open[i], open[j]);
        if u == v || !edges.insert((u.min(v), u.max(v))) {
            continue;
        }
        degree[u] += 1;
        degree[v] += 1;
        let (hi, lo) = (i.max(j), i.min(j));
        if degree[open[hi]] == max_degree {
            open.swap_remove(hi);
        }
        if degree[open[lo]] == max_degree {
            open.swap_remove(lo);
        }
    }
    let mut edges: Vec<(usize, usize)> = edges.into_iter().collect();
    edges.sort_unstable();
    Graph::new(n, &edges)
}

/// Random cactus: blocks are bridges or cycles glued at existing vertices.
/// With `odd_only` every cycle is odd, so the graph has no even cycle.
pub fn random_cactus<R: Rng>(rng: &mut R, n: usize, odd_only: bool) -> Result<Graph> {
    if n == 0 {
        return Err(Error::Generator("n must be positive".into()));
    }
    let mut edges = Vec::new();
    let mut next = 1;
    while next < n {
        let remaining = n - next;
        let anchor = rng.gen_range(0..next);
        let cycle_len = if remaining >= 2 && rng.gen_bool(0.6) {
            let max_len = remaining + 1;
            let len = rng.gen_range(3..=max_len.min(9));
            if odd_only && len % 2 == 0 {
                len - 1
            } else {
                len
            }
        } else {
            0
        };
        if cycle_len >= 3 {
            let mut prev = anchor;
            for _ in 0..cycle_len - 1 {
                edges.push((prev, next));
                prev = next;
                next += 1;
            }
            edges.push((prev, anchor));
        } else {
            edges.push((anchor, next));
            next += 1;
        }
    }
    let g = Graph::new(n, &edges)?;
    Ok(relabel(rng, &g))
}

/// Random `d`-regular graph by the pairing model, resampled until simple,
/// connected and (optionally) of girth at least `min_girth`.
pub fn random_regular<R: Rng>(
    rng: &mut R,
    n: usize,
    d: usize,
    min_girth: Option<usize>,
) -> Result<Graph> {
    if n == 0 || d >= n || (n * d) % 2 == 1 || (d == 0 && n > 1) || (d == 1 && n > 2) {
        return Err(Error::Generator(format!(
            "no connected {d}-regular graph on {n} vertices"
        )));
    }
    let mut points: Vec<usize> = (0..n).flat_map(|v| std::iter::repeat_n(v, d)).collect();
    'attempt: for _ in 0..REGULAR_ATTEMPTS {
        points.shuffle(rng);
        let mut seen = HashSet::with_capacity(n * d / 2);
        let mut edges = Vec::with_capacity(n * d / 2);
        for pair in points.chunks(2) {
            let (u, v) = (pair[0], pair[1]);
            if u == v || !seen.insert((u.min(v), u.max(v))) {
                continue 'attempt;
            }
            edges.push((u, v));
        }
        let g = Graph::new(n, &edges)?;
        if !g.is_connected() {
            continue;
        }
        if let Some(floor) = min_girth {
            if girth(&g).is_some_and(|gi| gi < floor) {
                continue;
            }
        }
        return Ok(g);
    }
    Err(Error::Generator(format!(
        "no {d}-regular graph on {n} vertices found in {REGULAR_ATTEMPTS} attempts"
    )))
}

/// Length of a shortest cycle, `None` for forests.
pub fn girth(g: &Graph) -> Option<usize> {
    let n = g.n();
    let mut best: Option<usize> = None;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    for s in 0..n {
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        dist[s] = 0;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for &w in g.neighbors(v) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    parent[w] = v;
                    queue.push_back(w);
                } else if parent[v] != w {
                    let len = dist[v] + dist[w] + 1;
                    best = Some(best.map_or(len, |b| b.min(len)));
                }
            }
        }
    }
    best
}

fn relabel<R: Rng>(rng: &mut R, g: &Graph) -> Graph {
    let mut perm: Vec<usize> = (0..g.n()).collect();
    perm.shuffle(rng);
    let edges: Vec<(usize, usize)> = g.edges().iter().map(|&(u, v)| (perm[u], perm[v])).collect();
    Graph::new(g.n(), &edges).expect("relabelling preserves simplicity")
}

pub fn complete(n: usize) -> Graph {
    let edges: Vec<_> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    Graph::new(n, &edges).unwrap()
}

pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3);
    let edges: Vec<_> = (0..n).map(|v| (v, (v + 1) % n)).collect();
    Graph::new(n, &edges).unwrap()
}

pub fn path(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    Graph::new(n, &edges).unwrap()
}

pub fn star(leaves: usize) -> Graph {
    let edges: Vec<_> = (1..=leaves).map(|v| (0, v)).collect();
    Graph::new(leaves + 1, &edges).unwrap()
}

/// Two triangles sharing vertex 0.
pub fn bowtie() -> Graph {
    Graph::new(5, &[(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)]).unwrap()
}

pub fn petersen() -> Graph {
    let mut edges = Vec::with_capacity(15);
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    Graph::new(10, &edges).unwrap()
}

/// Connected components of `g` as standalone graphs.
pub fn split_components(g: &Graph) -> Vec<Subgraph> {
    g.connected_components()
        .iter()
        .map(|c| g.induced(c))
        .collect()
}
