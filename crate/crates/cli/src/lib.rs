//! Image remapping and grid export for the disc-to-square mappings of
//! `squaremap-core`, plus the command implementations behind the
//! `squaremap` binary.

mod error;
pub mod export;
pub mod raster;

use std::path::Path;

pub use error::{CliError, RasterError};
pub use export::export_grid_csv;
pub use raster::{pixel_to_canonical, remap, remap_with_workers, RasterImage, RemapJob, Rgba};

use squaremap_core::analysis::{verify_report, DistortionReport};
use squaremap_core::{Direction, MappingId};

/// Loads `input`, remaps it and writes the PNG result. The output size
/// defaults to the larger source dimension.
pub fn run_remap(
    mapping: MappingId,
    direction: Direction,
    input: &Path,
    output: &Path,
    size: Option<u32>,
    supersample: u32,
    background: Rgba,
) -> Result<(), CliError> {
    let src = RasterImage::load_png(input)?;
    let size = size.unwrap_or(src.width().max(src.height()));
    let job = RemapJob::new(mapping, direction, size, supersample, background)?;
    remap(&src, &job).save_png(output)?;
    Ok(())
}

pub fn run_grid(
    mapping: MappingId,
    direction: Direction,
    n: usize,
    output: &Path,
) -> Result<(), CliError> {
    if n < 2 {
        return Err(CliError::BadArgument(format!("--n must be at least 2, got {n}")));
    }
    let csv = export_grid_csv(&mapping, direction, n);
    std::fs::write(output, csv).map_err(|source| CliError::Write {
        path: output.to_path_buf(),
        source,
    })
}

/// Builds the report together with the thresholds it misses.
pub fn run_verify(
    mapping: MappingId,
    grid: usize,
) -> Result<(DistortionReport, Vec<String>), CliError> {
    let report = verify_report(&mapping, grid)?;
    let failed = report.failed_checks();
    Ok((report, failed))
}
