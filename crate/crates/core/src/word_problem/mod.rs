//! Deciding group equality of braid words.
//!
//! [`normal_form`] is the canonical route; [`handle_reduce`] is an
//! algorithmically independent oracle used to cross-check it.

mod garside;
mod handle;

pub use garside::{finishing_set, normal_form, positive_word, starting_set, GarsideNormalForm};
pub use handle::{handle_reduce, HandleReducer, HandleVerdict, DEFAULT_BUDGET};

use crate::braid::BraidWord;
use crate::error::{BraidError, Result};

/// Cheap necessary conditions for equality: exponent sum and permutation.
pub fn may_be_equal(a: &BraidWord, b: &BraidWord) -> bool {
    a.exponent_sum() == b.exponent_sum() && a.underlying_permutation() == b.underlying_permutation()
}

/// Group equality in `B_n`, decided by comparing normal forms.
pub fn equal(a: &BraidWord, b: &BraidWord) -> Result<bool> {
    if a.strands() != b.strands() {
        return Err(BraidError::StrandMismatch {
            left: a.strands(),
            right: b.strands(),
        });
    }
    if !may_be_equal(a, b) {
        return Ok(false);
    }
    Ok(normal_form(a) == normal_form(b))
}

pub fn is_trivial(a: &BraidWord) -> bool {
    if a.exponent_sum() != 0 || !a.underlying_permutation().is_identity() {
        return false;
    }
    let nf = normal_form(a);
    nf.inf == 0 && nf.factors.is_empty()
}

/// Equality decided by handle reduction of `a · b^{-1}`.
pub fn equal_by_handles(a: &BraidWord, b: &BraidWord) -> Result<bool> {
    let quotient = a.compose(&b.inverse())?;
    Ok(handle_reduce(&quotient)? == HandleVerdict::Trivial)
}
