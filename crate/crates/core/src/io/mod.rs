//! File formats and command reports.

mod grp;
mod hyp;
mod report;

pub use grp::{emit_group, parse_group, GRP_HEADER};
pub use hyp::{emit_hyp, parse_hyp, parse_hyp_unchecked, parse_hyp_with_tol, HypFile, HYP_HEADER};
pub use report::{Report, Verdict};

use thiserror::Error;

use crate::constructions::ConstructionError;
use crate::hypergroup::HypergroupError;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ParseError {
    #[error("line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("line {line}: unknown label {label:?}")]
    UnknownLabel { label: String, line: usize },
    #[error("line {line}: bad involution: {message}")]
    BadInvolution { line: usize, message: String },
    #[error("{}row {x} {y} is not stochastic: coefficients sum to {sum}", line.map(|l| format!("line {l}: ")).unwrap_or_default())]
    NonStochasticRow { x: String, y: String, sum: String, line: Option<usize> },
    #[error(transparent)]
    Hypergroup(#[from] HypergroupError),
    #[error(transparent)]
    Group(#[from] ConstructionError),
}

impl ParseError {
    /// `true` when the text is well formed but describes something that is
    /// not a hypergroup (or not a group).
    pub fn is_semantic(&self) -> bool {
        match self {
            ParseError::NonStochasticRow { .. } | ParseError::Hypergroup(_) => true,
            ParseError::Group(e) => matches!(e, ConstructionError::NotAGroup(_) | ConstructionError::Hypergroup(_)),
            _ => false,
        }
    }
}
