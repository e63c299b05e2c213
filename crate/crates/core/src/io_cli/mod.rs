//! Surface documents, report emission and the command line.

mod cli;
mod document;
pub mod report;

pub use cli::{run, DESK_CAP_VAR, EXIT_INTERNAL, EXIT_INVALID, EXIT_OK};
pub use document::{emit_surface, parse_surface, DocumentError, DocumentErrorKind};
pub use report::Format;
