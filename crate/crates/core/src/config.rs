//! Numeric tolerances and search caps shared by the whole crate.
//!
//! Every tolerance used by a decision procedure is pinned here so that
//! reports can embed the exact values they were produced with.

/// Absolute tolerance for entropy values (Perron radius bracketing).
pub const ENTROPY_TOL: f64 = 1e-9;

/// Two component entropies within this band are considered tied when
/// selecting a maximal-entropy component.
pub const ENTROPY_TIE_BAND: f64 = 1e-7;

/// Default period bound for periodic-point sweeps.
pub const DEFAULT_PERIOD_CAP: usize = 8;

/// Default word-length bound for commuting-square verification.
pub const DEFAULT_WORD_CAP: usize = 12;

/// Default cap on the number of past-subset states.
pub const DEFAULT_SUBSET_CAP: usize = 4096;

/// Search caps used by cover construction, degree computations, and
/// diagram verification.
///
/// The magic-constant cap defaults to the square of the pair-symbol
/// count of the code under inspection; `magic_cap` overrides it when
/// set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    /// Maximal number of past-subset states before construction aborts.
    pub subset_cap: usize,
    /// Periodic points are enumerated up to this period.
    pub period_cap: usize,
    /// Commuting squares are verified on all words up to this length.
    pub word_cap: usize,
    /// Optional override for the magic-constant search bound.
    pub magic_cap: Option<usize>,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            subset_cap: DEFAULT_SUBSET_CAP,
            period_cap: DEFAULT_PERIOD_CAP,
            word_cap: DEFAULT_WORD_CAP,
            magic_cap: None,
        }
    }
}
