//! Left and right derived braids.
//!
//! For `x` on `2n` strands, `Lx` lives on `3n` strands: `x` with `n` identity
//! strands on its right, then `x` again acting on the `2n` ribbons formed by
//! pairing the strands of `x` into `n` 2-ribbons next to the `n` spare strands.
//! `Rx` mirrors this with the spare strands on the left.

use crate::braid::BraidWord;
use crate::cabling::{cable, WidthVector};
use crate::error::{BraidError, Result};
use crate::word_problem::equal;

fn half_strands(x: &BraidWord) -> Result<usize> {
    if !x.strands().is_multiple_of(2) {
        return Err(BraidError::OddStrands(x.strands()));
    }
    Ok(x.strands() / 2)
}

pub fn left_derived(x: &BraidWord) -> Result<BraidWord> {
    let n = half_strands(x)?;
    let top = x.embed(3 * n, 0)?;
    let bottom = cable(x, &WidthVector::split(n, 2, 1)?)?;
    top.compose(&bottom)
}

pub fn right_derived(x: &BraidWord) -> Result<BraidWord> {
    let n = half_strands(x)?;
    let top = x.embed(3 * n, n)?;
    let bottom = cable(x, &WidthVector::split(n, 1, 2)?)?;
    top.compose(&bottom)
}

/// Whether `Lx = Rx` holds in `B_{3n}`.
pub fn satisfies_lr(x: &BraidWord) -> Result<bool> {
    equal(&left_derived(x)?, &right_derived(x)?)
}
