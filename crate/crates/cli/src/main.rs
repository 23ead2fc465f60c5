use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use squaremap::{run_grid, run_remap, run_verify, CliError, Rgba};
use squaremap_core::{Direction, MappingId, MappingKind};

/// Disc-to-square image remapping and mapping diagnostics.
#[derive(Debug, Parser)]
#[command(name = "squaremap", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Remap a PNG between its inscribed disc and the full square.
    Remap {
        #[arg(long)]
        mapping: MappingKind,
        #[arg(long)]
        direction: Direction,
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long = "out")]
        output: PathBuf,
        /// Output side length in pixels [default: source max dimension].
        #[arg(long)]
        size: Option<u32>,
        /// Samples per pixel side: 1, 2 or 4.
        #[arg(long, default_value_t = 1)]
        supersample: u32,
        /// Background colour as RRGGBBAA.
        #[arg(long, default_value = "00000000")]
        bg: Rgba,
        /// Squelching parameter, required for squelched-elliptical-grid.
        #[arg(long)]
        q: Option<f64>,
    },
    /// Write the mapped image of a regular grid as CSV.
    Grid {
        #[arg(long)]
        mapping: MappingKind,
        #[arg(long)]
        direction: Direction,
        #[arg(long)]
        n: usize,
        #[arg(long = "out")]
        output: PathBuf,
        #[arg(long)]
        q: Option<f64>,
    },
    /// Measure a mapping's properties on an interior grid.
    Verify {
        #[arg(long)]
        mapping: MappingKind,
        #[arg(long, default_value_t = 201)]
        grid: usize,
        /// Print the report as one JSON line.
        #[arg(long)]
        json: bool,
        #[arg(long)]
        q: Option<f64>,
    },
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Remap {
            mapping,
            direction,
            input,
            output,
            size,
            supersample,
            bg,
            q,
        } => run_remap(
            MappingId::new(mapping, q)?,
            direction,
            &input,
            &output,
            size,
            supersample,
            bg,
        ),
        Command::Grid {
            mapping,
            direction,
            n,
            output,
            q,
        } => run_grid(MappingId::new(mapping, q)?, direction, n, &output),
        Command::Verify {
            mapping,
            grid,
            json,
            q,
        } => {
            let (report, failed) = run_verify(MappingId::new(mapping, q)?, grid)?;
            if json {
                println!("{}", report.to_json());
            } else {
                println!("mapping                    {}", report.mapping);
                println!("grid_n                     {}", report.grid_n);
                println!("max_roundtrip              {:e}", report.max_roundtrip);
                println!("max_angle_dev              {:e}", report.max_angle_dev);
                println!("cr_residual_max            {:e}", report.cr_residual_max);
                println!("area_ratio_min             {}", report.area_ratio_min);
                println!("area_ratio_max             {}", report.area_ratio_max);
                match report.squircularity_residual_max {
                    Some(s) => println!("squircularity_residual_max {s:e}"),
                    None => println!("squircularity_residual_max n/a"),
                }
            }
            if failed.is_empty() {
                Ok(())
            } else {
                Err(CliError::Verification(failed))
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("squaremap: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
