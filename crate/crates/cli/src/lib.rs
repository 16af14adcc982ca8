//! The `maxcut` command-line tool.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use maxcut_core::generate::split_components;
use maxcut_core::{
    auto_approx, exact_max_cut, format_ratio, parse_edge_list, thm1_approx, thm2_approx,
    thm3_approx, tree_bipartite_decompose, validate_decomposition, ApproxResult, Decomposition,
    Effort, Graph, Rational, Side,
};

pub mod bench;

#[derive(Debug, Parser)]
#[command(
    name = "maxcut",
    version,
    about = "Combinatorial Max-Cut approximation with certificates"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the tree-bipartite decomposition as JSON.
    Decompose { file: PathBuf },
    /// Approximate the maximum cut and print the result with its certificate.
    Approx {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Algo::Auto)]
        algo: Algo,
        /// Used by `--algo auto` on graphs with m > 2n.
        #[arg(long, value_enum, default_value_t = EffortArg::Best)]
        effort: EffortArg,
    },
    /// Solve exactly by enumeration (at most 26 vertices per component).
    Exact { file: PathBuf },
    /// Check a decomposition; exits with status 1 on any violation.
    Validate {
        file: PathBuf,
        /// JSON decomposition to check instead of a freshly computed one.
        #[arg(long)]
        decomposition: Option<PathBuf>,
    },
    /// Run a benchmark described by a TOML file and write CSV.
    Bench {
        #[arg(long)]
        config: PathBuf,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Algo {
    Thm1,
    Thm2,
    Thm3,
    Auto,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum EffortArg {
    Fast,
    Best,
}

impl From<EffortArg> for Effort {
    fn from(e: EffortArg) -> Effort {
        match e {
            EffortArg::Fast => Effort::Fast,
            EffortArg::Best => Effort::Best,
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Input {
        path: PathBuf,
        source: maxcut_core::Error,
    },
    #[error(transparent)]
    Core(#[from] maxcut_core::Error),
    #[error("{0}")]
    Config(String),
    #[error("invalid decomposition")]
    Invalid,
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Output(#[from] std::io::Error),
}

/// Runs the tool on `args` (including the program name) and returns the exit status.
pub fn run_cli_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match run(cli.command, out) {
        Ok(()) => 0,
        Err(CliError::Invalid) => 1,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

pub fn run_cli() -> i32 {
    run_cli_with(
        std::env::args_os(),
        &mut std::io::stdout(),
        &mut std::io::stderr(),
    )
}

fn run(command: Command, out: &mut dyn Write) -> Result<(), CliError> {
    match command {
        Command::Decompose { file } => {
            let g = read_graph(&file)?;
            let d = tree_bipartite_decompose(&g)?;
            print_json(out, &d)
        }
        Command::Approx { file, algo, effort } => {
            let g = read_graph(&file)?;
            let dto = approx_split(&g, algo, effort.into())?;
            print_json(out, &dto)
        }
        Command::Exact { file } => {
            let g = read_graph(&file)?;
            print_json(out, &exact_split(&g)?)
        }
        Command::Validate {
            file,
            decomposition,
        } => {
            let g = read_graph(&file)?;
            let d = match decomposition {
                Some(path) => {
                    let text = read_text(&path)?;
                    serde_json::from_str::<Decomposition>(&text)
                        .map_err(|e| CliError::Config(format!("{}: {e}", path.display())))?
                }
                None => tree_bipartite_decompose(&g)?,
            };
            let report = validate_decomposition(&g, &d);
            let dto = ValidateDto {
                valid: report.is_valid(),
                components: report.components,
                violations: report.violations.iter().map(|v| v.to_string()).collect(),
            };
            print_json(out, &dto)?;
            if dto.valid {
                Ok(())
            } else {
                Err(CliError::Invalid)
            }
        }
        Command::Bench { config } => {
            let text = read_text(&config)?;
            let cfg: bench::BenchConfig = toml::from_str(&text)
                .map_err(|e| CliError::Config(format!("{}: {e}", config.display())))?;
            match &cfg.output {
                Some(path) => {
                    let file = std::fs::File::create(path).map_err(|source| CliError::Io {
                        path: path.clone(),
                        source,
                    })?;
                    bench::run_bench(&cfg, std::io::BufWriter::new(file))
                }
                None => bench::run_bench(&cfg, out),
            }
        }
    }
}

fn read_text(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn read_graph(path: &Path) -> Result<Graph, CliError> {
    parse_edge_list(&read_text(path)?).map_err(|source| CliError::Input {
        path: path.to_path_buf(),
        source,
    })
}

fn print_json<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<(), CliError> {
    serde_json::to_writer(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

pub fn run_algo(g: &Graph, algo: Algo, effort: Effort) -> maxcut_core::Result<ApproxResult> {
    match algo {
        Algo::Thm1 => thm1_approx(g),
        Algo::Thm2 => thm2_approx(g),
        Algo::Thm3 => thm3_approx(g),
        Algo::Auto => auto_approx(g, effort),
    }
}

fn side_bits(sides: impl Iterator<Item = Side>) -> Vec<u8> {
    sides.map(|s| s.index() as u8).collect()
}

#[derive(Debug, Serialize)]
pub struct ApproxDto {
    pub algorithm: String,
    pub n: usize,
    pub m: usize,
    pub components: usize,
    pub cut_size: usize,
    pub x: usize,
    pub c: usize,
    pub lower_bound: String,
    pub upper_bound: usize,
    pub upper_bound_proof: String,
    pub guaranteed_ratio: String,
    pub witnesses: Vec<Vec<usize>>,
    /// 0 for side A, 1 for side B.
    pub sides: Vec<u8>,
}

/// Solves each connected component separately and recombines.
pub fn approx_split(g: &Graph, algo: Algo, effort: Effort) -> Result<ApproxDto, CliError> {
    let parts = split_components(g);
    let mut sides = vec![Side::A; g.n()];
    let mut dto = ApproxDto {
        algorithm: String::new(),
        n: g.n(),
        m: g.m(),
        components: parts.len(),
        cut_size: 0,
        x: 0,
        c: 0,
        lower_bound: String::new(),
        upper_bound: 0,
        upper_bound_proof: String::new(),
        guaranteed_ratio: String::new(),
        witnesses: Vec::new(),
        sides: Vec::new(),
    };
    let mut lower = Rational::from_integer(0);
    let mut tags: Vec<String> = Vec::new();
    let mut proofs: Vec<String> = Vec::new();
    for part in &parts {
        let r = run_algo(&part.graph, algo, effort)?;
        for (local, &s) in r.cut.sides().iter().enumerate() {
            sides[part.global(local)] = s;
        }
        dto.cut_size += r.cut.size();
        dto.x += r.x;
        dto.c += r.c;
        dto.upper_bound += r.upper_bound;
        lower += r.lower_bound;
        dto.witnesses
            .extend(r.witnesses.iter().map(|w| part.globalize(w.cycle())));
        for (list, item) in [
            (&mut tags, r.algorithm.to_string()),
            (&mut proofs, format!("{:?}", r.upper_bound_proof)),
        ] {
            if !list.contains(&item) {
                list.push(item);
            }
        }
    }
    // bounds add up across components
    let ratio = if dto.upper_bound == 0 {
        Rational::from_integer(1)
    } else {
        lower / Rational::from_integer(dto.upper_bound as i64)
    };
    dto.algorithm = tags.join(",");
    dto.upper_bound_proof = proofs.join(",");
    dto.lower_bound = format_ratio(&lower);
    dto.guaranteed_ratio = format_ratio(&ratio);
    dto.sides = side_bits(sides.into_iter());
    Ok(dto)
}

#[derive(Debug, Serialize)]
pub struct ExactDto {
    pub n: usize,
    pub m: usize,
    pub mc: usize,
    pub sides: Vec<u8>,
}

pub fn exact_split(g: &Graph) -> Result<ExactDto, CliError> {
    let mut sides = vec![Side::A; g.n()];
    let mut mc = 0;
    for part in split_components(g) {
        let cut = exact_max_cut(&part.graph)?;
        mc += cut.size();
        for (local, &s) in cut.sides().iter().enumerate() {
            sides[part.global(local)] = s;
        }
    }
    Ok(ExactDto {
        n: g.n(),
        m: g.m(),
        mc,
        sides: side_bits(sides.into_iter()),
    })
}

#[derive(Debug, Serialize)]
struct ValidateDto {
    valid: bool,
    components: usize,
    violations: Vec<String>,
}
