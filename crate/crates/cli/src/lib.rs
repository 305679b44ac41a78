//! Library surface of the `xlag` CLI: rendering, report assembly and the
//! verification suites. The binary in `main.rs` is a thin flag-parsing layer
//! over these.

pub mod render;
pub mod report;
pub mod suites;
