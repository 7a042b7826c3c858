//! Simple games on the natural numbers under the determining-string
//! representation.
//!
//! Games come in three forms: a verdict table over a finite universe, a
//! finite carrier with a table over carrier subsets, and a pair of string
//! sets `(t0, t1)` whose members decide every coalition extending them. On
//! top of these the crate offers exhaustive property checkers, exact
//! Nakamura numbers, and dominance/core analysis for ordinal preference
//! profiles.

pub mod coalition;
pub mod error;
pub mod games;
pub mod io;
pub mod nakamura;
pub mod properties;
pub mod social_choice;

pub use coalition::{BitString, CardinalityClass, Coalition, FinitePermutation};
pub use error::{Error, Result};
pub use games::{CarrierGame, Game, GroundedGame, PrefixGame, TableGame, Verdict};
