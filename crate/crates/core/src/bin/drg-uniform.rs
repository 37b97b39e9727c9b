use clap::{Parser, Subcommand};
use drg_uniform::cli::{self, Config};
use drg_uniform::families::FamilySpec;
use drg_uniform::tmodules::Algebra;
use drg_uniform::{Error, Result};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

/// Uniform structures and Terwilliger modules of distance-regular graphs.
#[derive(Parser)]
#[command(name = "drg-uniform", version)]
struct Cli {
    /// JSON config file; command-line flags override its values.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Maximum number of vertices to construct or load.
    #[arg(long, global = true)]
    budget: Option<usize>,
    /// Tolerance for numerically isolated eigenvalues.
    #[arg(long, global = true)]
    tol: Option<f64>,
    /// Write the result here instead of stdout.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a family member, e.g. `family hamming 3 3`, as an edge list.
    Family {
        name: String,
        args: Vec<usize>,
    },
    /// Intersection array, spectrum, Krein and Q-polynomial data.
    Analyze {
        graph: PathBuf,
        #[arg(long, default_value_t = 0)]
        base: usize,
    },
    /// The flattened graph at a base vertex.
    Flatten {
        graph: PathBuf,
        #[arg(long, default_value_t = 0)]
        base: usize,
    },
    /// Decide whether the flattened graph carries a uniform structure.
    CertifyUniform {
        graph: PathBuf,
        #[arg(long, default_value_t = 0, conflicts_with = "all_bases")]
        base: usize,
        #[arg(long)]
        all_bases: bool,
    },
    /// Split the standard module into irreducible modules.
    Decompose {
        graph: PathBuf,
        #[arg(long, default_value_t = 0)]
        base: usize,
        /// `T` or `Tf`.
        #[arg(long, default_value = "T")]
        algebra: Algebra,
        /// Only find modules with endpoint up to this value.
        #[arg(long)]
        max_endpoint: Option<usize>,
    },
    /// Run a named reproduction suite, or `all`.
    VerifyTheorem { suite: String },
}

fn config(cli: &Cli) -> Result<Config> {
    let mut cfg = match &cli.config {
        Some(p) => Config::load(p)?,
        None => Config::default(),
    };
    if let Some(b) = cli.budget {
        cfg.vertex_budget = b;
    }
    if let Some(t) = cli.tol {
        cfg.numeric_tolerance = t;
    }
    cfg.validate()?;
    Ok(cfg)
}

fn emit(cfg: &Config, output: Option<&Path>, text: &str) -> Result<()> {
    match output {
        Some(p) => std::fs::write(cfg.resolve(p), text).map_err(Error::from),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

/// Writes a graph and its JSON sidecar (`<output>.json`), or both to stdout/stderr.
fn emit_graph(cfg: &Config, output: Option<&Path>, edges: &str, sidecar: &str) -> Result<()> {
    match output {
        Some(p) => {
            let p = cfg.resolve(p);
            std::fs::write(&p, edges)?;
            let mut side = p.into_os_string();
            side.push(".json");
            std::fs::write(side, sidecar)?;
        }
        None => {
            print!("{edges}");
            eprint!("{sidecar}");
        }
    }
    Ok(())
}

fn run(cli: &Cli) -> Result<i32> {
    let cfg = config(cli)?;
    let out = cli.output.as_deref();
    match &cli.command {
        Command::Family { name, args } => {
            let spec = FamilySpec::parse(name, args)?;
            let (edges, sidecar) = cli::cmd_family(&spec, &cfg)?;
            emit_graph(&cfg, out, &edges, &cli::to_json(&sidecar, &cfg)?)?;
        }
        Command::Analyze { graph, base } => {
            let g = cli::load_graph(graph, &cfg)?;
            emit(&cfg, out, &cli::to_json(&cli::cmd_analyze(&g, *base, &cfg)?, &cfg)?)?;
        }
        Command::Flatten { graph, base } => {
            let g = cli::load_graph(graph, &cfg)?;
            let (edges, report) = cli::cmd_flatten(&g, *base)?;
            emit_graph(&cfg, out, &edges, &cli::to_json(&report, &cfg)?)?;
        }
        Command::CertifyUniform { graph, base, all_bases } => {
            let g = cli::load_graph(graph, &cfg)?;
            let result = cli::cmd_certify(&g, (!all_bases).then_some(*base), &cfg)?;
            emit(&cfg, out, &cli::to_json(&result, &cfg)?)?;
        }
        Command::Decompose { graph, base, algebra, max_endpoint } => {
            let g = cli::load_graph(graph, &cfg)?;
            let result = cli::cmd_decompose(&g, *base, *algebra, *max_endpoint, &cfg)?;
            emit(&cfg, out, &cli::to_json(&result, &cfg)?)?;
        }
        Command::VerifyTheorem { suite } => {
            let names: Vec<&str> = if suite == "all" { cli::SUITES.to_vec() } else { vec![suite.as_str()] };
            let mut reports = Vec::new();
            for name in names {
                let report = cli::run_suite(name, &cfg)?;
                for c in &report.checks {
                    eprintln!("[{}] {}: {} {}", if c.passed { "pass" } else { "FAIL" }, report.suite, c.name, c.detail);
                }
                reports.push(report);
            }
            #[derive(serde::Serialize)]
            struct Reports {
                passed: bool,
                suites: Vec<cli::SuiteReport>,
            }
            let passed = reports.iter().all(|r| r.passed);
            emit(&cfg, out, &cli::to_json(&Reports { passed, suites: reports }, &cfg)?)?;
            if !passed {
                return Ok(cli::EXIT_MISMATCH);
            }
        }
    }
    Ok(cli::EXIT_OK)
}

fn main() -> ExitCode {
    let parsed = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { cli::EXIT_PARSE as u8 } else { 0 });
        }
    };
    match run(&parsed) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(cli::exit_code(&e) as u8)
        }
    }
}
