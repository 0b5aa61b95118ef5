//! Library half of the `curvefree` command-line tool: arrangement files,
//! the analysis pipeline with its verdict, and the inline combinatorics
//! commands.

pub mod analyze;
pub mod arrangement;
pub mod inline;
pub mod normalize;

use thiserror::Error;

pub use analyze::{analyze, render_text, AnalysisReport, AnalyzeOptions, Verdict};
pub use arrangement::ArrangementFile;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CliError {
    #[error("{0}: {1}")]
    Io(String, String),
    #[error("line {line}: {msg}")]
    Format { line: usize, msg: String },
    #[error("{0}")]
    Precondition(String),
    #[error("variant mismatch: {0}")]
    VariantMismatch(String),
    #[error(transparent)]
    Syzygy(#[from] curvefree::syzygy::SyzygyError),
    #[error(transparent)]
    Singlocus(#[from] curvefree::singlocus::SinglocusError),
    #[error(transparent)]
    Combin(#[from] curvefree::combin::CombinError),
}

impl CliError {
    /// 2 for inputs that do not fit the requested variant, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::VariantMismatch(_) => 2,
            _ => 1,
        }
    }
}
