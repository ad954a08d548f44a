//! File formats, a parallel search driver, and the command-line front end
//! for `bottloc-core`.

pub mod catalog;
pub mod cli;
pub mod format;
pub mod parallel;

pub use format::{parse_profile, serialize_profile, FormatError};
