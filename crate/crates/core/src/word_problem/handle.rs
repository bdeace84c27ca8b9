//! Dehornoy handle reduction.
//!
//! A `σ_i`-handle is a subword `σ_i^e v σ_i^{-e}` where `v` has no letter
//! `σ_{i-1}^{±1}` or `σ_i^{±1}`. It is permitted when `v` holds no
//! `σ_{i+1}`-handle, and reduces by dropping the ends and replacing each
//! `σ_{i+1}^d` in `v` by `σ_{i+1}^{-e} σ_i^d σ_{i+1}^e`. Once no handle on the
//! lowest generator `σ_m` remains the word is empty, `σ_m`-positive or
//! `σ_m`-negative, which decides triviality.

use serde::{Deserialize, Serialize};

use crate::braid::BraidWord;
use crate::error::{BraidError, Result};

pub const DEFAULT_BUDGET: u64 = 10_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum HandleVerdict {
    Trivial,
    SigmaPositive,
    SigmaNegative,
}

#[derive(Debug, Clone, Copy)]
pub struct HandleReducer {
    /// Maximum number of handle reductions before giving up.
    pub budget: u64,
}

impl Default for HandleReducer {
    fn default() -> Self {
        Self {
            budget: DEFAULT_BUDGET,
        }
    }
}

/// First pair of consecutive `±index` letters of opposite sign in `word[lo..hi]`.
fn first_handle(word: &[i32], lo: usize, hi: usize, index: u32) -> Option<(usize, usize)> {
    let mut prev: Option<usize> = None;
    for pos in lo..hi {
        let g = word[pos];
        if g.unsigned_abs() != index {
            continue;
        }
        if let Some(p) = prev {
            if word[p].signum() != g.signum() {
                return Some((p, pos));
            }
        }
        prev = Some(pos);
    }
    None
}

fn free_reduce(word: &mut Vec<i32>) {
    let mut out: Vec<i32> = Vec::with_capacity(word.len());
    for &g in word.iter() {
        if out.last() == Some(&-g) {
            out.pop();
        } else {
            out.push(g);
        }
    }
    *word = out;
}

impl HandleReducer {
    pub fn new(budget: u64) -> Self {
        Self { budget }
    }

    /// Reduces the word to handle-free form on its lowest generator and reports
    /// the sign of the result together with the reduced word.
    pub fn reduce_word(&self, a: &BraidWord) -> Result<(HandleVerdict, BraidWord)> {
        let mut word = a.word().to_vec();
        free_reduce(&mut word);
        let mut steps: u64 = 0;
        loop {
            let Some(main) = word.iter().map(|g| g.unsigned_abs()).min() else {
                return Ok((HandleVerdict::Trivial, BraidWord::from_parts_unchecked(a.strands(), word)));
            };
            let Some((mut lo, mut hi)) = first_handle(&word, 0, word.len(), main) else {
                let sign = word.iter().find(|g| g.unsigned_abs() == main).expect("main letter present");
                let verdict = if *sign > 0 {
                    HandleVerdict::SigmaPositive
                } else {
                    HandleVerdict::SigmaNegative
                };
                return Ok((verdict, BraidWord::from_parts_unchecked(a.strands(), word)));
            };
            // Descend through nested handles until one is permitted.
            let mut index = main;
            while let Some((c, d)) = first_handle(&word, lo + 1, hi, index + 1) {
                lo = c;
                hi = d;
                index += 1;
            }
            steps += 1;
            if steps > self.budget {
                return Err(BraidError::BudgetExceeded(self.budget));
            }
            let e = word[lo].signum();
            let next = (index + 1) as i32;
            let low = index as i32;
            let mut interior = Vec::with_capacity(hi - lo);
            for &x in &word[lo + 1..hi] {
                if x.unsigned_abs() == index + 1 {
                    interior.extend_from_slice(&[-e * next, x.signum() * low, e * next]);
                } else {
                    interior.push(x);
                }
            }
            word.splice(lo..=hi, interior);
            free_reduce(&mut word);
        }
    }

    pub fn verdict(&self, a: &BraidWord) -> Result<HandleVerdict> {
        self.reduce_word(a).map(|(v, _)| v)
    }
}

/// Handle reduction with the default step budget.
pub fn handle_reduce(a: &BraidWord) -> Result<HandleVerdict> {
    HandleReducer::default().verdict(a)
}
