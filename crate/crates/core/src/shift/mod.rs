//! One-step shifts of finite type, one-block codes, and eventually
//! periodic points.
//!
//! A [`OneStepSft`] is a finite directed graph read as a vertex shift:
//! the points are the bi-infinite symbol sequences whose consecutive
//! pairs are transitions of the graph.  A [`OneBlockCode`] labels each
//! symbol with a letter and so presents a sofic image.  Points are
//! represented exactly as [`Ray`]s: eventually periodic on both sides,
//! which is enough to realize every periodic point, every bracket of
//! periodic points, and every witness the decision procedures emit.

mod code;
mod ray;
mod sft;

pub use code::{recode_one_block, LetterId, OneBlockCode};
pub use ray::Ray;
pub use sft::{OneStepSft, SymbolId, Word};

use thiserror::Error;

/// Errors raised by the shift-space layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ShiftError {
    /// A symbol name was empty or contained whitespace.
    #[error("system {system}: invalid symbol name {name:?}")]
    BadSymbolName { system: String, name: String },

    /// The same symbol name was declared twice.
    #[error("system {system}: duplicate symbol {name:?}")]
    DuplicateSymbol { system: String, name: String },

    /// A transition or label referenced an undeclared symbol.
    #[error("system {system}: unknown symbol {name:?}")]
    UnknownSymbol { system: String, name: String },

    /// An operation required an essential graph.
    #[error("system {system}: symbol {symbol:?} has no bi-infinite orbit")]
    NotEssential { system: String, symbol: String },

    /// An operation required a nonempty system.
    #[error("system {system} is empty")]
    EmptySystem { system: String },

    /// A cycle of a ray was empty.
    #[error("ray cycle must be nonempty")]
    EmptyCycle,

    /// A ray used a transition the system forbids.
    #[error("system {system}: ray uses forbidden transition {from:?}>{to:?} at index {at}")]
    NotAllowedPoint {
        system: String,
        from: String,
        to: String,
        at: i64,
    },

    /// Bracket inputs disagree at index 0.
    #[error("bracket undefined: symbols at index 0 differ ({left:?} vs {right:?})")]
    BracketUndefined { left: String, right: String },

    /// Two words were compared over different windows.
    #[error("window mismatch: [{left_start}, len {left_len}] vs [{right_start}, len {right_len}]")]
    WindowMismatch {
        left_start: i64,
        left_len: usize,
        right_start: i64,
        right_len: usize,
    },

    /// Two codes had incompatible alphabets.
    #[error("alphabet mismatch between {left} and {right}")]
    AlphabetMismatch { left: String, right: String },

    /// A block map was undefined on an allowed block.
    #[error("block map undefined on allowed block {block:?}")]
    PartialBlockMap { block: String },

    /// A declared letter labels no symbol.
    #[error("code {code}: letter {letter:?} labels no symbol")]
    DeadLetter { code: String, letter: String },

    /// A symbol carries no label.
    #[error("code {code}: symbol {symbol:?} has no label")]
    UnlabeledSymbol { code: String, symbol: String },

    /// A numeric argument was out of range.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// A search exceeded its configured cap.
    #[error("{what} exceeded cap {cap}")]
    CapExceeded { what: String, cap: usize },
}
