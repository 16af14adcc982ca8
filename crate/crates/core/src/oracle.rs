//! Brute-force ground truth for small graphs.
//!
//! Side patterns are bitmasks (bit `v` set means vertex `v` on side `B`),
//! walked in Gray-code order so each step flips one vertex and updates the
//! cut size in constant time.

use std::collections::HashSet;

use serde::Serialize;

use crate::cactus::PartialAssignment;
use crate::component_maxcut::{ApproxResult, Rational};
use crate::error::{Error, Result};
use crate::graph::{Cut, Graph, Side};

pub const ORACLE_CAP: usize = 26;

fn check_cap(g: &Graph) -> Result<()> {
    if g.n() > ORACLE_CAP {
        return Err(Error::OracleCap {
            n: g.n(),
            cap: ORACLE_CAP,
        });
    }
    Ok(())
}

fn neighbor_masks(g: &Graph) -> Vec<u32> {
    (0..g.n())
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | (1 << w)))
        .collect()
}

fn cut_of_mask(g: &Graph, mask: u32) -> Cut {
    let sides = (0..g.n())
        .map(|v| Side::from_parity(mask >> v & 1 == 1))
        .collect();
    Cut::new(g, sides)
}

/// Walks every assignment of `free` on top of `base` and returns the best
/// (size, mask), preferring the smallest mask on ties.
fn best_over(g: &Graph, nbr: &[u32], base: u32, free: &[usize]) -> (usize, u32) {
    let mut mask = base;
    let mut size = g
        .edges()
        .iter()
        .filter(|&&(u, v)| (mask >> u ^ mask >> v) & 1 == 1)
        .count();
    let mut best = (size, mask);
    let steps: u64 = 1u64 << free.len();
    for i in 1..steps {
        let v = free[i.trailing_zeros() as usize];
        let bit = 1u32 << v;
        let same_side = if mask & bit == 0 {
            nbr[v] & !mask
        } else {
            nbr[v] & mask
        };
        let same = same_side.count_ones() as usize;
        // same-side neighbours become cut, the others stop being cut
        size = size + same - (nbr[v].count_ones() as usize - same);
        mask ^= bit;
        if size > best.0 || (size == best.0 && mask < best.1) {
            best = (size, mask);
        }
    }
    best
}

/// Optimal cut with vertex 0 on side `A`.
pub fn exact_max_cut(g: &Graph) -> Result<Cut> {
    check_cap(g)?;
    if g.n() == 0 {
        return Ok(Cut::empty(g));
    }
    let nbr = neighbor_masks(g);
    let free: Vec<usize> = (1..g.n()).collect();
    let (_, mask) = best_over(g, &nbr, 0, &free);
    Ok(cut_of_mask(g, mask))
}

/// Best cut extending `pa` if its size reaches `target`.
pub fn constrained_exact(g: &Graph, pa: &PartialAssignment, target: usize) -> Result<Option<Cut>> {
    check_cap(g)?;
    if pa.len() != g.n() {
        return Err(Error::AssignmentLength {
            expected: g.n(),
            got: pa.len(),
        });
    }
    let nbr = neighbor_masks(g);
    let base = pa
        .fixed()
        .filter(|&(_, s)| s == Side::B)
        .fold(0u32, |m, (v, _)| m | (1 << v));
    let mut free: Vec<usize> = (0..g.n()).filter(|&v| pa.get(v).is_none()).collect();
    if free.len() == g.n() && !free.is_empty() {
        // global flip symmetry
        free.remove(0);
    }
    let (size, mask) = best_over(g, &nbr, base, &free);
    Ok((size >= target).then(|| cut_of_mask(g, mask)))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RatioReport {
    pub instance: String,
    pub n: usize,
    pub m: usize,
    pub exact_mc: usize,
    pub cut: usize,
    #[serde(serialize_with = "ser_ratio")]
    pub achieved: Rational,
    #[serde(serialize_with = "ser_ratio")]
    pub certified: Rational,
    /// Reasons the check failed, empty on success.
    pub failures: Vec<String>,
    pub pass: bool,
}

fn ser_ratio<S: serde::Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&crate::component_maxcut::format_ratio(r))
}

impl RatioReport {
    pub fn with_instance(mut self, id: impl Into<String>) -> RatioReport {
        self.instance = id.into();
        self
    }
}

/// Checks an approximation result against the exact optimum and its own
/// certificate.
pub fn verify_result(g: &Graph, r: &ApproxResult) -> Result<RatioReport> {
    let exact_mc = exact_max_cut(g)?.size();
    let cut = r.cut.size();
    let achieved = if exact_mc == 0 {
        Rational::from_integer(1)
    } else {
        Rational::new(cut as i64, exact_mc as i64)
    };
    let mut failures = Vec::new();
    if r.cut.sides().len() != g.n() {
        failures.push(format!(
            "cut assigns {} of {} vertices",
            r.cut.sides().len(),
            g.n()
        ));
    } else if r.cut.recount(g) != cut {
        failures.push(format!(
            "claimed size {cut} but recount gives {}",
            r.cut.recount(g)
        ));
    }
    if cut > exact_mc {
        failures.push(format!("cut {cut} exceeds the optimum {exact_mc}"));
    }
    if achieved < r.guaranteed_ratio {
        failures.push(format!(
            "achieved {achieved} below certified {}",
            r.guaranteed_ratio
        ));
    }
    if Rational::from_integer(cut as i64) < r.lower_bound {
        failures.push(format!("cut {cut} below its lower bound {}", r.lower_bound));
    }
    if exact_mc > r.upper_bound {
        failures.push(format!(
            "optimum {exact_mc} exceeds upper bound {}",
            r.upper_bound
        ));
    }
    let mut used = HashSet::new();
    for (i, w) in r.witnesses.iter().enumerate() {
        if let Err(e) = w.check(g) {
            failures.push(format!("witness {i}: {e}"));
        }
        for e in w.edges() {
            if !used.insert(e) {
                failures.push(format!("witness {i} reuses edge {e:?}"));
            }
        }
    }
    if exact_mc + r.witnesses.len() > g.m() {
        failures.push(format!(
            "optimum {exact_mc} exceeds m - |witnesses| = {}",
            g.m() as i64 - r.witnesses.len() as i64
        ));
    }
    Ok(RatioReport {
        instance: String::new(),
        n: g.n(),
        m: g.m(),
        exact_mc,
        cut,
        achieved,
        certified: r.guaranteed_ratio,
        pass: failures.is_empty(),
        failures,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::component_maxcut::thm1_approx;
    use crate::generate::{bowtie, complete, cycle, gnm_connected, petersen};
    use crate::graph::two_color;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn exact_examples() {
        assert_eq!(exact_max_cut(&complete(3)).unwrap().size(), 2);
        assert_eq!(exact_max_cut(&cycle(5)).unwrap().size(), 4);
        assert_eq!(exact_max_cut(&petersen()).unwrap().size(), 12);
        assert_eq!(exact_max_cut(&complete(4)).unwrap().size(), 4);
        let c = exact_max_cut(&complete(3)).unwrap();
        assert_eq!(c.side(0), Side::A);
        assert!(matches!(
            exact_max_cut(&crate::generate::path(27)),
            Err(Error::OracleCap { n: 27, cap: 26 })
        ));
    }

    #[test]
    fn ties_pick_smallest_pattern() {
        // K3 optima: {1}, {2}, {1,2} on B; smallest mask is vertex 1 alone
        let c = exact_max_cut(&complete(3)).unwrap();
        assert_eq!(c.sides(), &[Side::A, Side::B, Side::A]);
    }

    #[test]
    fn constrained_examples() {
        let k3 = complete(3);
        let pa = PartialAssignment::with_sets(3, &[0], &[1]);
        assert_eq!(constrained_exact(&k3, &pa, 2).unwrap().unwrap().size(), 2);
        let all_a = PartialAssignment::with_sets(3, &[0, 1, 2], &[]);
        assert!(constrained_exact(&k3, &all_a, 2).unwrap().is_none());
        let pa = PartialAssignment::with_sets(5, &[0], &[]);
        let c = constrained_exact(&bowtie(), &pa, 4).unwrap().unwrap();
        assert_eq!(c.side(0), Side::A);
        assert_eq!(c.size(), 4);
    }

    #[test]
    fn oracle_properties() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..100 {
            let g = gnm_connected(&mut rng, 10, 16).unwrap();
            let mc = exact_max_cut(&g).unwrap();
            assert_eq!(mc.size(), mc.recount(&g));
            assert_eq!(mc.size() == g.m(), two_color(&g).is_bipartite());
            let free = PartialAssignment::unfixed(g.n());
            assert!(constrained_exact(&g, &free, mc.size()).unwrap().is_some());
            assert!(constrained_exact(&g, &free, mc.size() + 1)
                .unwrap()
                .is_none());
        }
    }

    #[test]
    fn verify_examples() {
        let k3 = complete(3);
        let report = verify_result(&k3, &thm1_approx(&k3).unwrap()).unwrap();
        assert!(report.pass, "{:?}", report.failures);
        assert_eq!(report.achieved, Rational::from_integer(1));

        let mut r = thm1_approx(&k3).unwrap();
        r.cut = Cut::with_claimed_size(r.cut.sides().to_vec(), 3);
        let report = verify_result(&k3, &r).unwrap();
        assert!(!report.pass);

        let mut r = thm1_approx(&k3).unwrap();
        let w = r.witnesses[0].clone();
        r.witnesses.push(w);
        assert!(!verify_result(&k3, &r).unwrap().pass);
    }
}
