//! Synthesis of linear pseudo-Boolean constraints from positive DNFs.

pub mod analysis;
pub mod cli;
pub mod combinatorial;
pub mod dnf;
pub mod error;
pub mod extremal;
pub mod harness;
pub mod lp;
pub mod lpb;
pub mod oracle;
pub mod point;
pub mod synthesis;

pub use analysis::{op_order, VariableOrder};
pub use combinatorial::{backtrack_synthesize, greedy_synthesize, BacktrackConfig, DegreeInterval};
pub use dnf::{Clause, Dnf};
pub use error::{Error, Result};
pub use lp::{synthesize_lp, Rational};
pub use lpb::Lpb;
pub use oracle::{equivalent, TruthTable};
pub use point::Point;
pub use synthesis::{Outcome, Rejection, SynthesisResult};
