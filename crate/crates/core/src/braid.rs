//! Braid words over signed Artin generators.
//!
//! Generator `g > 0` is `σ_g` (strand at position `g` passes over the strand at
//! `g + 1`), `g < 0` is `σ_|g|^{-1}`. Words read top to bottom, so
//! `a.compose(&b)` stacks `a` above `b`. Equality on [`BraidWord`] is literal;
//! group equality lives in [`crate::word_problem`].

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{BraidError, Result};
use crate::permutation::Permutation;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawBraid")]
pub struct BraidWord {
    strands: usize,
    word: Vec<i32>,
}

#[derive(Deserialize)]
struct RawBraid {
    strands: usize,
    word: Vec<i32>,
}

impl TryFrom<RawBraid> for BraidWord {
    type Error = BraidError;

    fn try_from(raw: RawBraid) -> Result<Self> {
        BraidWord::new(raw.strands, raw.word)
    }
}

fn check_generator(g: i32, strands: usize) -> Result<()> {
    let idx = g.unsigned_abs() as usize;
    if g == 0 || idx >= strands {
        return Err(BraidError::GeneratorOutOfRange { generator: g, strands });
    }
    Ok(())
}

impl BraidWord {
    pub fn new(strands: usize, word: Vec<i32>) -> Result<Self> {
        if strands == 0 {
            return Err(BraidError::ZeroStrands);
        }
        for &g in &word {
            check_generator(g, strands)?;
        }
        Ok(Self { strands, word })
    }

    /// The identity braid on `strands` strands.
    ///
    /// # Panics
    /// If `strands` is zero.
    pub fn identity(strands: usize) -> Self {
        assert!(strands > 0, "braid needs at least one strand");
        Self {
            strands,
            word: Vec::new(),
        }
    }

    /// Construction for words already known to be valid.
    pub(crate) fn from_parts_unchecked(strands: usize, word: Vec<i32>) -> Self {
        debug_assert!(word.iter().all(|&g| check_generator(g, strands).is_ok()));
        Self { strands, word }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn word(&self) -> &[i32] {
        &self.word
    }

    pub fn into_word(self) -> Vec<i32> {
        self.word
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn exponent_sum(&self) -> i64 {
        self.word.iter().map(|&g| g.signum() as i64).sum()
    }

    /// True when no inverse generator occurs.
    pub fn is_positive(&self) -> bool {
        self.word.iter().all(|&g| g > 0)
    }

    /// `self` above `other`.
    pub fn compose(&self, other: &BraidWord) -> Result<BraidWord> {
        if self.strands != other.strands {
            return Err(BraidError::StrandMismatch {
                left: self.strands,
                right: other.strands,
            });
        }
        let mut word = Vec::with_capacity(self.len() + other.len());
        word.extend_from_slice(&self.word);
        word.extend_from_slice(&other.word);
        Ok(BraidWord::from_parts_unchecked(self.strands, word))
    }

    /// Stacks a sequence of braids top to bottom. `None` for an empty sequence.
    pub fn compose_all<'a, I>(braids: I) -> Option<Result<BraidWord>>
    where
        I: IntoIterator<Item = &'a BraidWord>,
    {
        let mut iter = braids.into_iter();
        let first = iter.next()?.clone();
        Some(iter.try_fold(first, |acc, b| acc.compose(b)))
    }

    pub fn inverse(&self) -> BraidWord {
        let word = self.word.iter().rev().map(|&g| -g).collect();
        BraidWord::from_parts_unchecked(self.strands, word)
    }

    /// Places `other` to the right of `self`.
    pub fn tensor(&self, other: &BraidWord) -> BraidWord {
        let shift = self.strands as i32;
        let mut word = self.word.clone();
        word.extend(other.word.iter().map(|&g| g + shift * g.signum()));
        BraidWord::from_parts_unchecked(self.strands + other.strands, word)
    }

    /// Image under the inclusion into `target` strands, shifted right by `offset`.
    pub fn embed(&self, target: usize, offset: usize) -> Result<BraidWord> {
        if offset + self.strands > target {
            return Err(BraidError::EmbedTooSmall {
                strands: self.strands,
                offset,
                target,
            });
        }
        let shift = offset as i32;
        let word = self.word.iter().map(|&g| g + shift * g.signum()).collect();
        Ok(BraidWord::from_parts_unchecked(target, word))
    }

    /// Cancels adjacent `g, -g` pairs until none remain.
    pub fn free_reduce(&self) -> BraidWord {
        let mut out: Vec<i32> = Vec::with_capacity(self.len());
        for &g in &self.word {
            if out.last() == Some(&-g) {
                out.pop();
            } else {
                out.push(g);
            }
        }
        BraidWord::from_parts_unchecked(self.strands, out)
    }

    pub fn underlying_permutation(&self) -> Permutation {
        let mut perm = Permutation::identity(self.strands);
        for &g in &self.word {
            perm.swap_positions(g.unsigned_abs() as usize - 1);
        }
        perm
    }

    /// Artin notation: `s1 S2` for `σ1 σ2^{-1}`.
    pub fn to_artin(&self) -> String {
        self.word
            .iter()
            .map(|&g| {
                if g > 0 {
                    format!("s{g}")
                } else {
                    format!("S{}", -g)
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// Canonical JSON: `{"strands":6,"word":[2,4,-1]}`.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("braid serialization cannot fail")
    }

    pub fn from_json(text: &str) -> std::result::Result<BraidWord, serde_json::Error> {
        serde_json::from_str(text)
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}; {})", self.strands, self.to_artin())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(strands: usize, word: &[i32]) -> BraidWord {
        BraidWord::new(strands, word.to_vec()).unwrap()
    }

    #[test]
    fn validates_generators() {
        assert!(BraidWord::new(3, vec![1, -2]).is_ok());
        assert!(BraidWord::new(3, vec![3]).is_err());
        assert!(BraidWord::new(3, vec![0]).is_err());
        assert!(BraidWord::new(0, vec![]).is_err());
        assert!(BraidWord::new(1, vec![]).is_ok());
    }

    #[test]
    fn compose_examples() {
        assert_eq!(b(3, &[1]).compose(&b(3, &[2])).unwrap(), b(3, &[1, 2]));
        assert_eq!(b(2, &[]).compose(&b(2, &[1])).unwrap(), b(2, &[1]));
        assert!(matches!(
            b(6, &[2, 4]).compose(&b(7, &[4])),
            Err(BraidError::StrandMismatch { .. })
        ));
        // (6; s4 s7) is not even constructible
        assert!(BraidWord::new(6, vec![4, 7]).is_err());
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(b(3, &[1, 2]).inverse(), b(3, &[-2, -1]));
        assert_eq!(b(2, &[]).inverse(), b(2, &[]));
        assert_eq!(b(4, &[-3]).inverse(), b(4, &[3]));
    }

    #[test]
    fn tensor_examples() {
        assert_eq!(b(4, &[2]).tensor(&BraidWord::identity(2)), b(6, &[2]));
        assert_eq!(BraidWord::identity(1).tensor(&b(2, &[1])), b(3, &[2]));
        assert_eq!(b(2, &[1]).tensor(&b(2, &[1])), b(4, &[1, 3]));
        assert_eq!(b(2, &[-1]).tensor(&b(2, &[-1])), b(4, &[-1, -3]));
    }

    #[test]
    fn embed_examples() {
        assert_eq!(b(2, &[1]).embed(3, 0).unwrap(), b(3, &[1]));
        assert_eq!(b(6, &[2, 4]).embed(9, 3).unwrap(), b(9, &[5, 7]));
        assert_eq!(b(3, &[-2]).embed(5, 2).unwrap(), b(5, &[-4]));
        assert!(matches!(b(2, &[1]).embed(2, 1), Err(BraidError::EmbedTooSmall { .. })));
    }

    #[test]
    fn free_reduce_examples() {
        assert_eq!(b(3, &[1, -1, 2]).free_reduce(), b(3, &[2]));
        assert_eq!(b(3, &[1, 2]).free_reduce(), b(3, &[1, 2]));
        assert_eq!(b(2, &[1, -1]).free_reduce(), b(2, &[]));
        assert_eq!(b(3, &[1, 2, -2, -1]).free_reduce(), b(3, &[]));
    }

    #[test]
    fn permutation_examples() {
        assert_eq!(b(2, &[1]).underlying_permutation().one_based(), vec![2, 1]);
        // hand-applied: [1,2,3,4] -s2-> 1 at 1, 2 at 3, 3 at 2 ... tracked per strand
        assert_eq!(b(4, &[2, 1, 3, 2]).underlying_permutation().one_based(), vec![3, 4, 1, 2]);
        assert_eq!(b(3, &[1, 2, 1]).underlying_permutation().one_based(), vec![3, 2, 1]);
        assert_eq!(b(3, &[1, 2]).underlying_permutation().one_based(), vec![3, 1, 2]);
    }

    #[test]
    fn json_round_trip_and_validation() {
        let x = b(6, &[2, 4, -1]);
        assert_eq!(x.to_json(), r#"{"strands":6,"word":[2,4,-1]}"#);
        assert_eq!(BraidWord::from_json(&x.to_json()).unwrap(), x);
        assert!(BraidWord::from_json(r#"{"strands":2,"word":[2]}"#).is_err());
    }

    #[test]
    fn display_uses_artin_notation() {
        assert_eq!(b(3, &[1, -2]).to_string(), "(3; s1 S2)");
        assert_eq!(b(3, &[]).to_string(), "(3; )");
    }
}
