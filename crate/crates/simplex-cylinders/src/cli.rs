//! Command-line surface. The binary is a thin shim over [`run`]; all
//! subcommand logic lives here so the pipelines stay scriptable.
//!
//! Exit codes: 0 success, 1 malformed or degenerate input, 2 numerical
//! failure. `--seed` is the only nondeterminism control; identical
//! invocations produce identical reports up to the timing block.

use std::io::Write;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

use crate::enclosing::{oracle_min_enclosing, smallest_enclosing_cylinder_from_points, EncloseConfig, OracleConfig};
use crate::formulation::{bezout_bounds, CircumFormulation};
use crate::geometry::SimplexN;
use crate::io::{
    closed_form_annotation, parse_simplex, BoundsDoc, ConfigEcho, CriticalPointDoc, CylinderDoc,
    EnclosingDoc, OracleDoc, RegularDoc, ReportDoc, SimplexInputDoc, WeissbachDoc,
};
use crate::regular::{enumerate_all_critical, regular_min_radius, stirling_census_check};
use crate::solver::{global_min, solve_all, SolverConfig};
use crate::special_e3::classify;
use crate::weissbach::{enumerate_solutions, lambda2_zero_census, verify_published_tuples};
use crate::{Error, Result};

#[derive(Debug, Parser)]
#[command(
    name = "simplex-cylinders",
    about = "Locally extreme circumscribing cylinders of simplices and smallest enclosing cylinders of tetrahedra",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Args)]
struct OutputArgs {
    /// Write the report here instead of standard output.
    #[arg(long)]
    output: Option<std::path::PathBuf>,
    /// Report format.
    #[arg(long, default_value = "text", value_parser = ["json", "text"])]
    format: String,
}

#[derive(Debug, Clone, Args)]
struct SolverArgs {
    /// RNG seed for the multi-start solver and the oracle.
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Random restarts (default scales with the dimension).
    #[arg(long)]
    restarts: Option<usize>,
    /// Newton tolerance on the unit-scaled Lagrange system.
    #[arg(long)]
    tol: Option<f64>,
}

impl SolverArgs {
    fn config(&self, dim: usize) -> SolverConfig {
        let mut cfg = SolverConfig::for_dim(dim).with_seed(self.seed);
        if let Some(r) = self.restarts {
            cfg = cfg.with_restarts(r);
        }
        if let Some(t) = self.tol {
            cfg.newton_tol = t;
        }
        cfg
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// All locally extreme circumscribing cylinders of a simplex (any n).
    Circumscribe {
        /// JSON simplex document.
        file: std::path::PathBuf,
        #[command(flatten)]
        solver: SolverArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Smallest enclosing cylinder of a tetrahedron.
    Enclose {
        file: std::path::PathBuf,
        /// Oracle direction samples.
        #[arg(long, default_value_t = 200_000)]
        samples: usize,
        #[command(flatten)]
        solver: SolverArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Exact critical-direction census for the regular simplex.
    Regular {
        #[arg(long)]
        dim: usize,
        /// Include the per-multiset census table.
        #[arg(long)]
        census: bool,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Census of the quartic-minimization system, split by the second
    /// multiplier.
    Weissbach {
        #[arg(long)]
        dim: usize,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Direction-sampling oracle for the smallest enclosing cylinder.
    Oracle {
        file: std::path::PathBuf,
        #[arg(long, default_value_t = 200_000)]
        samples: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[command(flatten)]
        out: OutputArgs,
    },
}

/// Parses `argv` and runs one subcommand, mapping errors to exit codes.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let out = output_args(&cli.command).clone();
    match execute(cli.command) {
        Ok(report) => match emit(&report, &out) {
            Ok(()) => 0,
            Err(e) => {
                eprintln!("error: {e}");
                1
            }
        },
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}

fn output_args(cmd: &Command) -> &OutputArgs {
    match cmd {
        Command::Circumscribe { out, .. }
        | Command::Enclose { out, .. }
        | Command::Regular { out, .. }
        | Command::Weissbach { out, .. }
        | Command::Oracle { out, .. } => out,
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Schema(_)
        | Error::Shape(_)
        | Error::Degenerate(_)
        | Error::SingularMatrix { .. }
        | Error::DimensionTooLarge(_)
        | Error::DimensionMismatch { .. }
        | Error::Io(_) => 1,
        Error::NoCriticalPointFound
        | Error::EmptyInput
        | Error::EmptyFamily(_)
        | Error::NotEquifacial(_) => 2,
    }
}

fn emit(report: &ReportDoc, out: &OutputArgs) -> Result<()> {
    let body = match out.format.as_str() {
        "json" => report.to_json(),
        _ => report.to_text(),
    };
    match &out.output {
        Some(path) => {
            let mut file = std::fs::File::create(path)?;
            file.write_all(body.as_bytes())?;
            Ok(())
        }
        None => {
            println!("{body}");
            Ok(())
        }
    }
}

fn load_simplex(path: &std::path::Path) -> Result<(SimplexN, Option<String>)> {
    let bytes = std::fs::read(path)?;
    parse_simplex(&bytes)
}

/// Runs one subcommand and builds its report. Pure with respect to the
/// filesystem apart from reading the input document.
fn execute(command: Command) -> Result<ReportDoc> {
    match command {
        Command::Circumscribe { file, solver, out: _ } => {
            let started = Instant::now();
            let (simplex, label) = load_simplex(&file)?;
            let cfg = solver.config(simplex.dim());
            let mut report = ReportDoc::new("circumscribe");
            report.input = Some(SimplexInputDoc::from_simplex(&simplex, label));
            report.config = ConfigEcho { solver: Some(cfg), oracle: None };
            report.bounds = Some(BoundsDoc::from_bounds(simplex.dim(), &bezout_bounds(simplex.dim())));
            if simplex.dim() == 3 {
                report.classification = Some(classify(&simplex)?);
            }
            let solve_started = Instant::now();
            let form = CircumFormulation::build(&simplex)?;
            let points = solve_all(&form, &cfg)?;
            let solve_ms = solve_started.elapsed().as_secs_f64() * 1e3;
            report.global_min = Some(CylinderDoc::from_cylinder(&global_min(&points)?));
            report.critical_points = Some(points.iter().map(CriticalPointDoc::from_point).collect());
            report.timings.stages_ms.push(("solve".into(), solve_ms));
            report.timings.total_ms = started.elapsed().as_secs_f64() * 1e3;
            Ok(report)
        }
        Command::Enclose { file, samples, solver, out: _ } => {
            let started = Instant::now();
            let (simplex, label) = load_simplex(&file)?;
            if simplex.dim() != 3 {
                return Err(Error::DimensionMismatch { expected: 3, got: simplex.dim() });
            }
            let cfg = EncloseConfig {
                solver: solver.config(3),
                oracle: OracleConfig { samples, refine_iters: 200, rng_seed: solver.seed },
                ..Default::default()
            };
            let mut report = ReportDoc::new("enclose");
            report.input = Some(SimplexInputDoc::from_simplex(&simplex, label));
            report.config = ConfigEcho { solver: Some(cfg.solver), oracle: Some(cfg.oracle) };
            report.classification = Some(classify(&simplex)?);
            report.bounds = Some(BoundsDoc::from_bounds(3, &bezout_bounds(3)));
            let solve_started = Instant::now();
            let form = CircumFormulation::build(&simplex)?;
            let points = solve_all(&form, &cfg.solver)?;
            report.global_min = Some(CylinderDoc::from_cylinder(&global_min(&points)?));
            report.critical_points = Some(points.iter().map(CriticalPointDoc::from_point).collect());
            report
                .timings
                .stages_ms
                .push(("solve".into(), solve_started.elapsed().as_secs_f64() * 1e3));
            let enclose_started = Instant::now();
            let result = smallest_enclosing_cylinder_from_points(&simplex, &cfg, &points)?;
            report.enclosing = Some(EnclosingDoc::from_result(&result));
            report
                .timings
                .stages_ms
                .push(("enclose".into(), enclose_started.elapsed().as_secs_f64() * 1e3));
            report.timings.total_ms = started.elapsed().as_secs_f64() * 1e3;
            Ok(report)
        }
        Command::Regular { dim, census, out: _ } => {
            let started = Instant::now();
            let mut report = ReportDoc::new("regular");
            let (radius, direction) = regular_min_radius(dim)?;
            let full = enumerate_all_critical(dim)?;
            let stirling = (2..=7).contains(&dim).then(|| stirling_census_check(dim)).transpose()?;
            report.bounds = Some(BoundsDoc::from_bounds(dim, &bezout_bounds(dim)));
            report.regular = Some(RegularDoc {
                n: dim,
                min_radius: radius,
                min_radius_closed_form: closed_form_annotation(radius).map(String::from),
                min_direction: direction.iter().copied().collect(),
                census_total: full.total,
                census_real: full.real_total,
                census_complex: full.complex_total,
                stirling,
                empty_block_exceptions: full.empty_block_exceptions.clone(),
                entries: census.then_some(full.entries),
            });
            report.timings.total_ms = started.elapsed().as_secs_f64() * 1e3;
            Ok(report)
        }
        Command::Weissbach { dim, out: _ } => {
            let started = Instant::now();
            let census = enumerate_solutions(dim)?;
            let tuples = matches!(dim, 3 | 4).then(|| verify_published_tuples(dim)).transpose()?;
            let mut report = ReportDoc::new("weissbach");
            report.weissbach = Some(WeissbachDoc {
                n: dim,
                total: census.total,
                lambda2_zero: census.lambda2_zero_count,
                lambda2_nonzero: census.lambda2_nonzero_count,
                lambda2_zero_closed_form: lambda2_zero_census(dim),
                all_real: census.all_real,
                continuum_shapes: census.continuum_shapes.clone(),
                tuple_verification: tuples,
                solutions: census.solutions,
            });
            report.timings.total_ms = started.elapsed().as_secs_f64() * 1e3;
            Ok(report)
        }
        Command::Oracle { file, samples, seed, out: _ } => {
            let started = Instant::now();
            let (simplex, label) = load_simplex(&file)?;
            let cfg = OracleConfig { samples, refine_iters: 200, rng_seed: seed };
            let (radius, direction) = oracle_min_enclosing(simplex.vertices(), &cfg);
            let mut report = ReportDoc::new("oracle");
            report.input = Some(SimplexInputDoc::from_simplex(&simplex, label));
            report.config = ConfigEcho { solver: None, oracle: Some(cfg) };
            report.oracle = Some(OracleDoc {
                radius,
                radius_closed_form: closed_form_annotation(radius).map(String::from),
                direction: direction.iter().copied().collect(),
                samples,
                refine_iters: cfg.refine_iters,
                rng_seed: seed,
            });
            report.timings.total_ms = started.elapsed().as_secs_f64() * 1e3;
            Ok(report)
        }
    }
}
