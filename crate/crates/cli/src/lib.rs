//! Command-line front end for the `riordan` crate.
//!
//! Series arguments are JSON arrays indexed by degree (`'["1","-1/2"]'` or
//! `'[1,-1]'`) or one of the presets `geometric`, `pascal_g`, `one`,
//! `arithgeo`, `curious_f`, `curious_g`.

pub mod input;
pub mod output;

use clap::{Parser, Subcommand};
use riordan::picard::crossed_column_trace;
use riordan::{
    build_triangle, invert_series, iterate_fixed, reciprocal, verify_lagrange, AffineMap,
    Error as DomainError, Parameter, RiordanMatrix, Series,
};

pub use input::{Preset, Scheme, SeriesSpec};
pub use output::Format;

/// Exit code for malformed arguments (clap uses the same code).
pub const EXIT_USAGE: i32 = 2;
/// Exit code for well-formed input outside an operation's domain.
pub const EXIT_DOMAIN: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "riordan",
    version,
    about = "Exact power series, Riordan arrays and series reversion"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Pretty)]
    pub format: Format,
    /// Number of rows of a triangle.
    #[arg(long, global = true, default_value_t = 10)]
    pub depth: usize,
    /// Highest degree kept in a series result.
    #[arg(long, global = true, default_value_t = 10)]
    pub precision: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the triangle T(f|g).
    Triangle {
        #[arg(long)]
        f: SeriesSpec,
        #[arg(long)]
        g: SeriesSpec,
    },
    /// Compute f/g by crossed Picard iteration.
    Recip {
        #[arg(long)]
        f: SeriesSpec,
        #[arg(long)]
        g: SeriesSpec,
    },
    /// Compositional inverse of omega (order 1).
    Invert {
        #[arg(long)]
        omega: SeriesSpec,
    },
    /// Print the iterates of a fixed-point scheme, one per line.
    Trace {
        /// geometric, arithgeo, curious or column:N
        #[arg(long)]
        scheme: Scheme,
        #[arg(long, default_value_t = 6)]
        steps: usize,
    },
    /// A- and Z-sequences of T(f|g).
    Azseq {
        #[arg(long)]
        f: SeriesSpec,
        #[arg(long)]
        g: SeriesSpec,
    },
    /// Group inverse of T(f|g).
    Inverse {
        #[arg(long)]
        f: SeriesSpec,
        #[arg(long)]
        g: SeriesSpec,
    },
    /// Product T(f1|g1) T(f2|g2).
    Product {
        #[arg(long)]
        f1: SeriesSpec,
        #[arg(long)]
        g1: SeriesSpec,
        #[arg(long)]
        f2: SeriesSpec,
        #[arg(long)]
        g2: SeriesSpec,
    },
    /// Check n[x^n](omega^-1)^k = k[x^(n-k)](x/omega)^n for k <= n <= --precision.
    Lagrange {
        #[arg(long)]
        omega: SeriesSpec,
    },
}

#[derive(Debug, thiserror::Error)]
#[error("{arg}: {source}")]
pub struct CliError {
    pub arg: String,
    #[source]
    pub source: DomainError,
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        EXIT_DOMAIN
    }
}

fn blame(arg: &str) -> impl FnOnce(DomainError) -> CliError + '_ {
    move |source| CliError {
        arg: arg.to_string(),
        source,
    }
}

// Errors from building T(f|g) name the parameter at fault.
fn blame_pair<'a>(f: &'a str, g: &'a str) -> impl FnOnce(DomainError) -> CliError + 'a {
    move |source| {
        let arg = match source {
            DomainError::ZeroConstantTerm(Parameter::F) => f,
            DomainError::ZeroConstantTerm(Parameter::G) => g,
            _ => "--depth",
        };
        CliError {
            arg: arg.to_string(),
            source,
        }
    }
}

fn triangle(
    f: &SeriesSpec,
    g: &SeriesSpec,
    depth: usize,
    names: (&str, &str),
) -> Result<RiordanMatrix, CliError> {
    let p = depth.saturating_sub(1);
    build_triangle(&f.to_series(p), &g.to_series(p), depth).map_err(blame_pair(names.0, names.1))
}

/// Runs a parsed command and returns the rendered output.
pub fn run(cli: &Cli) -> Result<String, CliError> {
    let fmt = cli.format;
    let (depth, precision) = (cli.depth, cli.precision);
    match &cli.command {
        Command::Triangle { f, g } => {
            let t = triangle(f, g, depth, ("--f", "--g"))?;
            Ok(output::render_triangle(&t, fmt))
        }
        Command::Recip { f, g } => {
            let r = reciprocal(&f.to_series(precision), &g.to_series(precision), precision)
                .map_err(blame("--g"))?;
            Ok(output::render_series(&r, fmt))
        }
        Command::Invert { omega } => {
            let inv =
                invert_series(&omega.to_series(precision), precision).map_err(blame("--omega"))?;
            Ok(output::render_series(&inv, fmt))
        }
        Command::Trace { scheme, steps } => {
            let iterates = trace(*scheme, *steps).map_err(blame("--steps"))?;
            Ok(output::render_trace(
                &scheme.to_string(),
                *steps,
                &iterates,
                fmt,
            ))
        }
        Command::Azseq { f, g } => {
            // Z through degree P needs rows 0..P+2
            let t = triangle(f, g, precision + 2, ("--f", "--g"))?;
            let seq = t.a_z_sequences().map_err(blame("--precision"))?;
            let a = seq
                .a_seq
                .truncate(precision)
                .map_err(blame("--precision"))?;
            let z = seq
                .z_seq
                .truncate(precision)
                .map_err(blame("--precision"))?;
            Ok(output::render_sequences(&a, &z, fmt))
        }
        Command::Inverse { f, g } => {
            let t = triangle(f, g, depth, ("--f", "--g"))?;
            Ok(output::render_triangle(
                &t.inverse().map_err(blame("--depth"))?,
                fmt,
            ))
        }
        Command::Product { f1, g1, f2, g2 } => {
            let a = triangle(f1, g1, depth, ("--f1", "--g1"))?;
            let b = triangle(f2, g2, depth, ("--f2", "--g2"))?;
            Ok(output::render_triangle(
                &a.product(&b).map_err(blame("--depth"))?,
                fmt,
            ))
        }
        Command::Lagrange { omega } => {
            let report = verify_lagrange(&omega.to_series(precision), precision)
                .map_err(blame("--omega"))?;
            Ok(output::render_lagrange(&report, fmt))
        }
    }
}

/// Iterates `0..=steps` of the named scheme.
pub fn trace(scheme: Scheme, steps: usize) -> riordan::Result<Vec<Series>> {
    if steps == 0 {
        return Err(DomainError::InvalidArgument("at least one step is needed"));
    }
    let pascal_g = Preset::PascalG.series(steps);
    let one = Series::one(steps);
    let trace = match scheme {
        Scheme::Geometric => {
            // t -> 1 + x t
            let map = AffineMap::new(Series::x(steps), one.clone())?;
            iterate_fixed(&map, &Series::zero(steps), steps)
        }
        Scheme::Curious => {
            // t -> 1 + (2x - x^2) t; iterate m has degree 2m - 2
            let p = 2 * steps;
            let map = AffineMap::new(Series::polynomial([0, 2, -1], p), Series::one(p))?;
            iterate_fixed(&map, &Series::zero(p), steps)
        }
        Scheme::Arithgeo => crossed_column_trace(&one, &pascal_g, 2, steps)?,
        Scheme::Column(n) => crossed_column_trace(&one, &pascal_g, n, steps)?,
    };
    Ok(trace.into_iterates())
}
