//! Standard-library companion to `wtoll-core`: graph file formats, JSON
//! rendering, verification suites, and the command-line interface.

pub mod cli;
pub mod formats;
pub mod render;
pub mod suites;
