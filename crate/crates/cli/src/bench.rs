//! Seeded benchmark runs written as CSV.

use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use maxcut_core::generate::{generate, Model};
use maxcut_core::{exact_max_cut, format_ratio, Effort, Rational};

use crate::{run_algo, Algo, CliError};

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BenchConfig {
    pub model: Model,
    pub instances: usize,
    pub seed: u64,
    pub algorithms: Vec<Algo>,
    #[serde(default)]
    pub oracle: bool,
    /// CSV destination; standard output when absent.
    #[serde(default)]
    pub output: Option<PathBuf>,
}

impl<'de> Deserialize<'de> for Algo {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Algo, D::Error> {
        let s = String::deserialize(d)?;
        <Algo as clap::ValueEnum>::from_str(&s, true).map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Serialize)]
struct Row {
    instance: usize,
    seed: u64,
    n: usize,
    m: usize,
    algo: Algo,
    cut: usize,
    exact_mc: Option<usize>,
    achieved_ratio: Option<String>,
    certified_ratio: String,
    time_ns: u128,
}

/// Instance `index` is drawn from stream `index` of the generator seeded with `seed`.
pub fn instance_rng(seed: u64, index: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index as u64);
    rng
}

pub fn run_bench<W: Write>(cfg: &BenchConfig, out: W) -> Result<(), CliError> {
    let mut csv = csv::Writer::from_writer(out);
    let mut shortfalls = Vec::new();
    for index in 0..cfg.instances {
        let g = generate(&cfg.model, &mut instance_rng(cfg.seed, index))?;
        let exact = if cfg.oracle {
            Some(exact_max_cut(&g)?.size())
        } else {
            None
        };
        for &algo in &cfg.algorithms {
            let start = Instant::now();
            let r = run_algo(&g, algo, Effort::Best)?;
            let time_ns = start.elapsed().as_nanos();
            let achieved = exact.map(|mc| {
                if mc == 0 {
                    Rational::from_integer(1)
                } else {
                    Rational::new(r.cut.size() as i64, mc as i64)
                }
            });
            if let Some(a) = achieved {
                if a < r.guaranteed_ratio {
                    shortfalls.push(format!(
                        "instance {index} {algo:?}: achieved {a} below certified {}",
                        r.guaranteed_ratio
                    ));
                }
            }
            csv.serialize(Row {
                instance: index,
                seed: cfg.seed,
                n: g.n(),
                m: g.m(),
                algo,
                cut: r.cut.size(),
                exact_mc: exact,
                achieved_ratio: achieved.as_ref().map(format_ratio),
                certified_ratio: format_ratio(&r.guaranteed_ratio),
                time_ns,
            })?;
        }
    }
    csv.flush()?;
    if shortfalls.is_empty() {
        Ok(())
    } else {
        Err(CliError::Config(shortfalls.join("\n")))
    }
}
