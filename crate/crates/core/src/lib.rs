//! Braid group engine for derived braids.
//!
//! Builds left and right derived braids of braids on an even number of
//! strands, the decreasing-product components and their products, and decides
//! braid equality with a Garside left normal form (cross-checked by Dehornoy
//! handle reduction). On top of that sit exhaustive verification of the
//! `Lx = Rx` identity for decreasing products, a bounded search for other
//! solutions, a notation parser and a diagram emitter.

pub mod braid;
pub mod cabling;
pub mod cli;
pub mod decreasing;
pub mod derived;
pub mod error;
pub mod notation;
pub mod par;
pub mod permutation;
pub mod render;
pub mod search;
pub mod verify;
pub mod word_problem;

pub use braid::BraidWord;
pub use cabling::{block_transposition, cable, WidthVector};
pub use decreasing::{component, decreasing_product, enumerate_products, kmax, ProductSpec};
pub use derived::{left_derived, right_derived, satisfies_lr};
pub use error::{BraidError, Result};
pub use notation::{flatten, pack_rows, parse_artin, parse_rows, GeneratorRow, RowBraid};
pub use permutation::Permutation;
pub use word_problem::{equal, handle_reduce, is_trivial, normal_form, GarsideNormalForm, HandleVerdict};
