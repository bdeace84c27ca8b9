//! Ribbon expansion: replace strand `j` of a braid by a ribbon of `widths[j]`
//! parallel strands.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::braid::BraidWord;
use crate::error::{BraidError, Result};
use crate::permutation::Permutation;

/// Ribbon widths, left to right at the top of a diagram.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct WidthVector(Vec<usize>);

impl WidthVector {
    pub fn new(widths: Vec<usize>) -> Result<Self> {
        if widths.is_empty() {
            return Err(BraidError::InvalidWidths("no ribbons".into()));
        }
        if widths.contains(&0) {
            return Err(BraidError::InvalidWidths(format!("{widths:?} has a zero width")));
        }
        Ok(Self(widths))
    }

    pub fn ones(len: usize) -> Result<Self> {
        Self::new(vec![1; len])
    }

    /// `n` ribbons of width `left` followed by `n` of width `right`.
    pub fn split(n: usize, left: usize, right: usize) -> Result<Self> {
        let mut v = vec![left; n];
        v.extend(std::iter::repeat_n(right, n));
        Self::new(v)
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    /// Widths after the ribbons have been moved by `perm`.
    pub fn permuted(&self, perm: &Permutation) -> WidthVector {
        let mut out = vec![0; self.len()];
        for (i, &w) in self.0.iter().enumerate() {
            out[perm.image()[i]] = w;
        }
        WidthVector(out)
    }

    /// Strand-level permutation obtained by moving each ribbon as a block.
    pub fn refine(&self, perm: &Permutation) -> Permutation {
        let after = self.permuted(perm);
        let mut start_after = vec![0; self.len()];
        let mut acc = 0;
        for (j, w) in after.0.iter().enumerate() {
            start_after[j] = acc;
            acc += w;
        }
        let mut image = Vec::with_capacity(self.total());
        for (i, &w) in self.0.iter().enumerate() {
            let base = start_after[perm.image()[i]];
            image.extend(base..base + w);
        }
        Permutation::from_image(image).expect("block refinement is a bijection")
    }
}

impl TryFrom<Vec<usize>> for WidthVector {
    type Error = BraidError;

    fn try_from(v: Vec<usize>) -> Result<Self> {
        Self::new(v)
    }
}

impl From<WidthVector> for Vec<usize> {
    fn from(w: WidthVector) -> Self {
        w.0
    }
}

impl fmt::Display for WidthVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|w| w.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

fn push_block(word: &mut Vec<i32>, t: usize, p: usize, q: usize, positive: bool) {
    if positive {
        for i in 1..=q {
            let top = t + p + i - 2;
            let bottom = t + i - 1;
            word.extend((bottom..=top).rev().map(|g| g as i32));
        }
    } else {
        // inverse of the positive block with the roles of p and q exchanged
        let start = word.len();
        push_block(word, t, q, p, true);
        word[start..].reverse();
        for g in &mut word[start..] {
            *g = -*g;
        }
    }
}

/// Block `p` strands starting at position `t` (1-based) crossing the `q`
/// strands to their right. Positive: the left block passes over.
pub fn block_transposition(t: usize, p: usize, q: usize, positive: bool, strands: usize) -> Result<BraidWord> {
    if t == 0 || p == 0 || q == 0 || t + p + q - 1 > strands {
        return Err(BraidError::BlockOutOfRange { t, p, q, strands });
    }
    let mut word = Vec::with_capacity(p * q);
    push_block(&mut word, t, p, q, positive);
    Ok(BraidWord::from_parts_unchecked(strands, word))
}

/// Expands `x` with ribbon widths `w`, tracking how crossings permute the ribbons.
pub fn cable(x: &BraidWord, w: &WidthVector) -> Result<BraidWord> {
    if x.strands() != w.len() {
        return Err(BraidError::WidthMismatch {
            widths: w.len(),
            strands: x.strands(),
        });
    }
    let mut widths = w.as_slice().to_vec();
    let mut word = Vec::new();
    for &g in x.word() {
        let i = g.unsigned_abs() as usize - 1;
        let t = 1 + widths[..i].iter().sum::<usize>();
        push_block(&mut word, t, widths[i], widths[i + 1], g > 0);
        widths.swap(i, i + 1);
    }
    Ok(BraidWord::from_parts_unchecked(w.total(), word))
}

/// Crossing count of `cable(x, w)`: the sum of `p·q` over the widths in effect.
pub fn cabled_length(x: &BraidWord, w: &WidthVector) -> usize {
    let mut widths = w.as_slice().to_vec();
    let mut total = 0;
    for &g in x.word() {
        let i = g.unsigned_abs() as usize - 1;
        total += widths[i] * widths[i + 1];
        widths.swap(i, i + 1);
    }
    total
}
