//! Constant-time prefix-suffix queries and bipartite pattern matching.
//!
//! [`PrefSufIndex`] preprocesses a text `T` so that, for any cut `(i, j)`, the
//! occurrences of `T` in `T[0..=i] · T[j..n)` come back in constant time as a
//! single [`Progression`]. [`PatternMatcher`] uses it to find, per edge of a
//! string-labeled bipartite graph, every way a pattern spans the two labels.

pub mod bipartite;
pub mod cli;
pub mod error;
pub mod kmp;
pub mod lce;
pub mod oracle;
pub mod prefsuf;
mod progression;
pub mod selfcheck;
pub mod text;
pub mod workload;

pub use bipartite::{match_all, BipartiteGraph, EdgeMatch, MatchStats, PatternMatcher};
pub use error::{Error, Result};
pub use kmp::{Direction, KmpAutomaton};
pub use lce::LceIndex;
pub use prefsuf::{PrefSufIndex, QueryCase, QueryStats};
pub use progression::Progression;
pub use text::{border_array, period, PeriodInfo, Text};
