use std::path::PathBuf;

use squaremap_core::MapError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum RasterError {
    #[error("cannot access {}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error(transparent)]
    Image(#[from] image::ImageError),
    #[error("image has no pixels")]
    EmptyImage,
    #[error("pixel buffer holds {actual} bytes, expected {expected}")]
    PixelLength { expected: usize, actual: usize },
    #[error("supersample factor {0} is not one of 1, 2, 4")]
    InvalidSupersample(u32),
    #[error("`{0}` is not an RRGGBBAA colour")]
    InvalidColor(String),
    #[error("cannot build thread pool: {0}")]
    ThreadPool(String),
}

/// Failures of a command, grouped by exit code.
#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Mapping(#[from] MapError),
    #[error("{0}")]
    BadArgument(String),
    #[error(transparent)]
    Raster(#[from] RasterError),
    #[error("cannot write {}: {source}", path.display())]
    Write {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("verification failed: {}", .0.join("; "))]
    Verification(Vec<String>),
}

impl CliError {
    /// 2 for bad arguments, 3 for I/O, 4 for failed verification.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Mapping(_) | CliError::BadArgument(_) => 2,
            CliError::Raster(
                RasterError::InvalidSupersample(_)
                | RasterError::InvalidColor(_)
                | RasterError::EmptyImage,
            ) => 2,
            CliError::Raster(_) | CliError::Write { .. } => 3,
            CliError::Verification(_) => 4,
        }
    }
}
