use maxcut_core::generate::{gnm_connected, random_max_deg, random_subcubic};
use maxcut_core::{
    rational, thm2_approx, thm3_approx, verify_result, Algorithm, Rational, UpperBoundProof,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn every_finishing_path_is_sound_and_reached() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut counts = std::collections::BTreeMap::new();
    for k in 0..3000 {
        let n = rng.gen_range(4..=14);
        let g = match k % 3 {
            0 => {
                let m = rng.gen_range(n - 1..=(n * (n - 1) / 2).min(36));
                gnm_connected(&mut rng, n, m).unwrap()
            }
            1 => random_subcubic(&mut rng, n).unwrap(),
            _ => random_max_deg(&mut rng, n, 4).unwrap(),
        };
        let mut rs = vec![("t2", thm2_approx(&g).unwrap())];
        if g.m() <= 2 * g.n() {
            rs.push(("t3", thm3_approx(&g).unwrap()));
        }
        for (name, r) in rs {
            let rep = verify_result(&g, &r).unwrap();
            assert!(rep.pass, "{name} {:?} {:?}", g.edges(), rep.failures);
            let target = rational(g.m() + g.n(), 2 * g.m()).min(Rational::from_integer(1));
            assert!(r.guaranteed_ratio >= target, "{name} {:?}", g.edges());
            let path = match (r.algorithm, r.upper_bound_proof) {
                (Algorithm::ExactSpecialCase, _) => "exact",
                (_, UpperBoundProof::PackingAndSearch) => "lemma3",
                _ if r.witnesses.len() != r.x || r.cut.size() + r.witnesses.len() == g.m() => {
                    "lemma2-or-tight"
                }
                _ => "thm1",
            };
            *counts.entry((name, path)).or_insert(0) += 1;
        }
    }
    for name in ["t2", "t3"] {
        for path in ["exact", "lemma2-or-tight", "lemma3", "thm1"] {
            assert!(
                counts.get(&(name, path)).copied().unwrap_or(0) > 0,
                "{name} never took {path}"
            );
        }
    }
}
