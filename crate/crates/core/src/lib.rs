//! Refined Wilf-equivalences of pattern classes under the Comtet statistics
//! `iar` and `comp`.
//!
//! The crate enumerates pattern-avoiding permutations, tabulates joint
//! statistic distributions, implements the bijections that explain the
//! observed symmetries, and checks closed-form generating functions against
//! brute force in exact rational arithmetic.

pub mod bijections;
pub mod engine;
pub mod error;
pub mod genfun;
pub mod gentree;
pub mod invseq;
pub mod json;
pub mod perm;
pub mod poly;
pub mod series;
pub mod stats;
pub mod verify;

pub use error::{Error, Result};
pub use perm::{Permutation, PatternSet};
pub use poly::{MultiPoly, Var};
pub use series::Series;
