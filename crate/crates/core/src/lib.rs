//! Symbolic dynamics on finite graphs: shifts of finite type, one-block
//! codes onto sofic images, canonical resolving covers, and the degree
//! theory of finite-to-one factor maps.
//!
//! Everything here works at "desk scale": systems are one-step vertex
//! shifts given by explicit transition sets, points are eventually
//! periodic rays, and every decision procedure is an explicit graph
//! search with deterministic iteration order (symbols are ordered
//! lexicographically by name throughout).
//!
//! Module map:
//!
//! * [`shift`] — one-step SFTs, one-block codes, eventually periodic
//!   rays, words, recoding, and language queries.
//! * [`spectral`] — chain components, entropy, periodic points, and
//!   preimage counting.
//! * [`cover`] — the past-subset automaton and the canonical cover of a
//!   labeled graph, with canonical associates of domain points.
//! * [`relations`] — pair relations, unstable prefix languages, forward
//!   closedness, resolving certification, and quotient presentations
//!   (including the Fischer cover as an independent oracle).
//! * [`fiber`] — fiber products, minimal lifts, constant-to-one checks,
//!   and the resolving lift square.
//! * [`degree`] — diamonds, related word families, the magic word
//!   machinery, and degree computations.

pub mod config;
pub mod cover;
pub mod degree;
pub mod fiber;
pub mod fixtures;
pub mod relations;
pub mod shift;
pub mod spectral;

pub use config::Caps;
pub use shift::{OneBlockCode, OneStepSft, Ray, ShiftError};
