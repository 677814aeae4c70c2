//! File formats, reports and the benchmark harness behind the `surgeon` binary.

pub mod bench;
pub mod error;
pub mod formats;

use serde::{Deserialize, Serialize};
use surgeon_core::distance::{Engine, RisOptions};

pub use error::CliError;

pub const VERSION: &str = concat!("surgeon ", env!("CARGO_PKG_VERSION"));

/// Distance engine selectable from the command line and bench files.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum EngineKind {
    #[default]
    Exhaustive,
    Increment,
    Ris,
}

impl EngineKind {
    /// `max_weight` bounds the increment search; `None` means no bound.
    pub fn engine(self, trials: usize, seed: u64, max_weight: Option<usize>) -> Engine {
        match self {
            EngineKind::Exhaustive => Engine::exhaustive(),
            EngineKind::Increment => Engine::WeightIncrement { max_weight: max_weight.unwrap_or(usize::MAX) },
            EngineKind::Ris => Engine::Ris(RisOptions::new(trials, seed)),
        }
    }
}

/// Sizes the global rayon pool from `SURGEON_THREADS`, if set.
pub fn init_threads() -> Result<(), CliError> {
    let Ok(value) = std::env::var("SURGEON_THREADS") else {
        return Ok(());
    };
    let threads: usize = value
        .trim()
        .parse()
        .ok()
        .filter(|&t| t > 0)
        .ok_or_else(|| CliError::Parse(format!("SURGEON_THREADS must be a positive integer, got `{value}`")))?;
    // A pool that already exists keeps its size.
    let _ = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global();
    Ok(())
}
