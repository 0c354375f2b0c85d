//! Generalized (vincular, "dashed") permutation-pattern matching.
//!
//! The crate covers four things:
//!
//! * [`Permutation`] and [`VincularPattern`] with their text grammars,
//!   and an occurrence engine ([`find_occurrences`], [`contains`]).
//! * Brute-force enumeration of avoider classes ([`enumerate`]).
//! * The four insertion maps that build `Av_n(B)` from `Av_{n-1}(B)`,
//!   their inverses and the double-count reduction ([`construct`]).
//! * The transform that turns any occurrence of a pattern in `B` into
//!   an occurrence of a pattern in `A` ([`witness`]), and the A006012
//!   recurrence in arbitrary precision ([`sequence`]).
//!
//! Here `A = {1-32-4, 1-42-3, 2-31-4, 2-41-3}` and
//! `B = {1-3-2-4, 1-4-2-3, 2-3-1-4, 2-4-1-3}`.
//!
//! Everything is `no_std` with `alloc`. File IO, the CLI and threaded
//! enumeration live in the `vincular` crate.
#![no_std]

extern crate alloc;

pub mod characterize;
pub mod construct;
pub mod enumerate;
mod error;
pub mod matcher;
pub mod pattern;
pub mod perm;
pub mod sequence;
pub mod witness;

pub use error::{
    ConstructError, EnumerateError, ParseError, PositionError, SequenceError, WitnessError,
};
pub use matcher::{contains, find_occurrences, first_occurrence, Occurrence};
pub use pattern::{PatternSet, VincularPattern};
pub use perm::Permutation;
