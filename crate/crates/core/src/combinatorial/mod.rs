//! Fast synthesis from successor tables: cut-based tables, bounds on each
//! coefficient from pairs of successor intervals, a greedy right-to-left
//! pass and a bounded backtracking variant.

mod backtrack;
mod cut;
mod greedy;
pub mod interval;
mod solve;
mod table;

pub use backtrack::{backtrack_run, backtrack_synthesize, BacktrackConfig, BacktrackRun};
pub use cut::cut;
pub use greedy::{greedy_run, greedy_synthesize, GreedyRun};
pub use interval::{DegreeInterval, ExtInt};
pub use solve::{base_interval, classify, coefficient_bounds, propagate_interval, Choice, Step};
pub use table::{NodeKind, SuccessorNode, SuccessorTable};
