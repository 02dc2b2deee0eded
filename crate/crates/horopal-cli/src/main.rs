use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use horopal::width::{WidthMethod, SWEEP};
use horopal_cli::error::{CliError, CliResult};
use horopal_cli::experiments::{monotone, nopal, pal, stability, steinhagen};
use horopal_cli::report::{write_file, Report};
use horopal_cli::spec::BodySpec;
use horopal_cli::{cmd_hull, cmd_render, cmd_triangle, cmd_width};

/// Convexity experiments in the hyperbolic plane (Poincaré disk).
#[derive(Parser, Debug)]
#[command(name = "horopal", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args, Debug, Clone)]
struct Common {
    /// Body specification (JSON).
    #[arg(long)]
    input: Option<PathBuf>,
    /// Output file (CSV for experiments, SVG for figures).
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    trials: Option<usize>,
    #[arg(long)]
    tol: Option<f64>,
    /// Sweep size for widths, sample count for quadrature.
    #[arg(long)]
    samples: Option<usize>,
    #[arg(long)]
    grid: Option<usize>,
    #[arg(long)]
    w: Option<f64>,
    /// Comma-separated list of r values.
    #[arg(long, value_delimiter = ',')]
    rs: Option<Vec<f64>>,
    /// Comma-separated list of eps values.
    #[arg(long, value_delimiter = ',')]
    eps: Option<Vec<f64>>,
    /// Generators per random body.
    #[arg(long, default_value_t = 8)]
    points: usize,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Method {
    Refine,
    Oracle,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Experiment {
    /// Columns: r, g, width, inv_r, area, area_bound.
    Nopal,
    /// Columns: trial, width, inradius, inradius_tw, ratio, redraws.
    Steinhagen,
    /// Columns: trial, width, area, area_tw, ratio, hausdorff.
    Pal,
    /// Columns: rho, area_delta, area_delta_mc, mc_error, area_gamma, alpha, delta_minus, delta_plus, gap_over_alpha2, alpha_over_drho.
    Monotone,
    /// Columns: family, eps, param, width, area_excess, delta, delta_over_sqrt_eps, delta_over_eps.
    Stability,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Minimal Lassak width of a body, with its certificate.
    Width {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value_t = Method::Refine)]
        method: Method,
    },
    /// Hull of a body's generators; --out writes an SVG.
    Hull {
        #[command(flatten)]
        common: Common,
    },
    /// The regular horocyclic triangle of width --w (default 1); --out writes an SVG.
    Triangle {
        #[command(flatten)]
        common: Common,
    },
    /// SVG of a body, or of K_0.1 without --input.
    Render {
        #[command(flatten)]
        common: Common,
    },
    /// Run an experiment and write its CSV table.
    Experiment {
        #[arg(value_enum)]
        name: Experiment,
        #[command(flatten)]
        common: Common,
    },
}

fn read_spec(c: &Common) -> CliResult<BodySpec> {
    let path = c.input.as_ref().ok_or_else(|| CliError::Arg("--input is required".into()))?;
    BodySpec::read(path)
}

fn emit(out: &Option<PathBuf>, contents: &str) -> CliResult<()> {
    match out {
        Some(p) => write_file(p, contents),
        None => {
            print!("{contents}");
            Ok(())
        }
    }
}

fn experiment(name: Experiment, c: &Common) -> CliResult<Report> {
    match name {
        Experiment::Nopal => nopal::run(c.rs.as_deref().unwrap_or(&nopal::DEFAULT_RS)),
        Experiment::Steinhagen => steinhagen::run(c.trials.unwrap_or(500), c.points, c.seed, c.tol.unwrap_or(1e-4)),
        Experiment::Pal => pal::run(c.trials.unwrap_or(500), c.points, c.seed, c.tol.unwrap_or(1e-3), c.samples.unwrap_or(400_000)),
        Experiment::Monotone => monotone::run(c.w.unwrap_or(1.0), c.grid.unwrap_or(64), c.samples.unwrap_or(200_000), c.seed),
        Experiment::Stability => stability::run(c.w.unwrap_or(1.0), c.eps.as_deref().unwrap_or(&stability::DEFAULT_EPS)),
    }
}

fn run(cli: Cli) -> CliResult<bool> {
    match cli.command {
        Command::Width { common, method } => {
            let spec = read_spec(&common)?;
            let m = match method {
                Method::Refine => WidthMethod::Refine,
                Method::Oracle => WidthMethod::Oracle,
            };
            let out = cmd_width(&spec, m, common.samples.unwrap_or(SWEEP), common.tol.unwrap_or(1e-6))?;
            emit(&common.out, &out.text)?;
            Ok(out.ok)
        }
        Command::Hull { common } => {
            let (text, scene) = cmd_hull(&read_spec(&common)?)?;
            print!("{text}");
            if let Some(p) = &common.out {
                write_file(p, &scene.to_svg())?;
            }
            Ok(true)
        }
        Command::Triangle { common } => {
            let (text, scene) = cmd_triangle(common.w.unwrap_or(1.0))?;
            print!("{text}");
            if let Some(p) = &common.out {
                write_file(p, &scene.to_svg())?;
            }
            Ok(true)
        }
        Command::Render { common } => {
            let spec = common.input.as_ref().map(|_| read_spec(&common)).transpose()?;
            emit(&common.out, &cmd_render(spec.as_ref())?.to_svg())?;
            Ok(true)
        }
        Command::Experiment { name, common } => {
            let rep = experiment(name, &common)?;
            emit(&common.out, &rep.to_csv())?;
            eprintln!("{}", rep.summary());
            Ok(rep.passed())
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
