//! Standard-library companion to `vincular-core`: OEIS b-file reading
//! and writing, enumeration split across threads, and the `vincular`
//! command-line front end.

pub mod bfile;
pub mod cli;
pub mod parallel;

pub use vincular_core;
