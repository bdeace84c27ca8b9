//! Left-weighted Garside normal form over permutation braids.
//!
//! A simple element is stored as its permutation (`s[i]` = final position of
//! the strand starting at `i`, 0-based); the positive permutation braid it
//! names crosses every inverted pair exactly once. The half twist is the
//! reversal.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::braid::BraidWord;
use crate::permutation::Permutation;

type Simple = Vec<usize>;

/// `Δ^inf · factors[0] · factors[1] ⋯`, with every factor a proper simple
/// element (neither identity nor `Δ`) and each consecutive pair left-weighted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GarsideNormalForm {
    pub strands: usize,
    pub inf: i64,
    pub factors: Vec<Permutation>,
}

impl GarsideNormalForm {
    /// Canonical length of the positive part.
    pub fn sup(&self) -> i64 {
        self.inf + self.factors.len() as i64
    }

    /// Rebuilds a braid word: `Δ^inf` followed by one positive word per factor.
    pub fn to_word(&self) -> BraidWord {
        let n = self.strands;
        let delta = positive_word(&Permutation::reversal(n));
        let mut word = Vec::new();
        if self.inf >= 0 {
            for _ in 0..self.inf {
                word.extend_from_slice(&delta);
            }
        } else {
            let inv: Vec<i32> = delta.iter().rev().map(|&g| -g).collect();
            for _ in 0..(-self.inf) {
                word.extend_from_slice(&inv);
            }
        }
        for f in &self.factors {
            word.extend(positive_word(f));
        }
        BraidWord::from_parts_unchecked(n, word)
    }

    /// Checks the structural invariants: proper factors, left-weighted pairs.
    pub fn is_valid(&self) -> bool {
        let n = self.strands;
        let proper = self
            .factors
            .iter()
            .all(|f| f.size() == n && !f.is_identity() && *f != Permutation::reversal(n));
        proper
            && self
                .factors
                .windows(2)
                .all(|w| starting_set(&w[1]).iter().all(|i| finishing_set(&w[0]).contains(i)))
    }
}

impl fmt::Display for GarsideNormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Δ^{}", self.inf)?;
        for p in &self.factors {
            write!(f, " {p}")?;
        }
        Ok(())
    }
}

/// Generators `i` (1-based) with which the simple element can start.
pub fn starting_set(p: &Permutation) -> Vec<usize> {
    let s = p.image();
    (0..s.len().saturating_sub(1))
        .filter(|&i| s[i] > s[i + 1])
        .map(|i| i + 1)
        .collect()
}

/// Generators `i` (1-based) with which the simple element can end.
pub fn finishing_set(p: &Permutation) -> Vec<usize> {
    starting_set(&p.inverse())
}

/// A positive word for the permutation braid of `p`.
pub fn positive_word(p: &Permutation) -> Vec<i32> {
    let mut s = p.image().to_vec();
    let mut word = Vec::with_capacity(p.inversions());
    'outer: loop {
        for i in 0..s.len().saturating_sub(1) {
            if s[i] > s[i + 1] {
                word.push(i as i32 + 1);
                s.swap(i, i + 1);
                continue 'outer;
            }
        }
        break;
    }
    word
}

fn inverse_of(s: &[usize]) -> Simple {
    let mut inv = vec![0; s.len()];
    for (i, &p) in s.iter().enumerate() {
        inv[p] = i;
    }
    inv
}

fn is_identity(s: &[usize]) -> bool {
    s.iter().enumerate().all(|(i, &p)| i == p)
}

fn is_delta(s: &[usize]) -> bool {
    let n = s.len();
    s.iter().enumerate().all(|(i, &p)| p == n - 1 - i)
}

fn swap_value(v: usize, i: usize) -> usize {
    if v == i {
        i + 1
    } else if v == i + 1 {
        i
    } else {
        v
    }
}

/// `Δ s Δ^{-1}`.
fn tau(s: &[usize]) -> Simple {
    let n = s.len();
    (0..n).map(|i| n - 1 - s[n - 1 - i]).collect()
}

/// Makes the pair left-weighted in place. Returns whether anything moved.
fn left_weight(s: &mut Simple, t: &mut Simple) -> bool {
    let n = s.len();
    let mut changed = false;
    let mut s_inv = inverse_of(s);
    loop {
        // i in S(t) but not in F(s)
        let pick = (0..n.saturating_sub(1)).find(|&i| t[i] > t[i + 1] && s_inv[i] < s_inv[i + 1]);
        let Some(i) = pick else { break };
        for v in s.iter_mut() {
            *v = swap_value(*v, i);
        }
        s_inv.swap(i, i + 1);
        t.swap(i, i + 1);
        changed = true;
    }
    changed
}

/// Incremental builder for the normal form of a word read left to right.
pub(crate) struct NormalFormBuilder {
    n: usize,
    inf: i64,
    factors: Vec<Simple>,
}

impl NormalFormBuilder {
    pub(crate) fn new(n: usize) -> Self {
        Self {
            n,
            inf: 0,
            factors: Vec::new(),
        }
    }

    fn push_simple(&mut self, t: Simple) {
        self.factors.push(t);
        let mut j = self.factors.len() - 1;
        while j > 0 {
            let (head, tail) = self.factors.split_at_mut(j);
            if !left_weight(&mut head[j - 1], &mut tail[0]) {
                break;
            }
            j -= 1;
        }
        let leading = self.factors.iter().take_while(|f| is_delta(f)).count();
        if leading > 0 {
            self.factors.drain(..leading);
            self.inf += leading as i64;
        }
        while self.factors.last().is_some_and(|f| is_identity(f)) {
            self.factors.pop();
        }
    }

    pub(crate) fn push_generator(&mut self, g: i32) {
        let i = g.unsigned_abs() as usize - 1;
        let n = self.n;
        if g > 0 {
            let mut t: Simple = (0..n).collect();
            t.swap(i, i + 1);
            self.push_simple(t);
        } else {
            // σ_i^{-1} = Δ^{-1} · (Δ σ_i^{-1}); move Δ^{-1} to the front through τ.
            for f in self.factors.iter_mut() {
                *f = tau(f);
            }
            self.inf -= 1;
            let complement: Simple = (0..n).map(|j| swap_value(n - 1 - j, i)).collect();
            self.push_simple(complement);
        }
    }

    pub(crate) fn finish(self) -> GarsideNormalForm {
        GarsideNormalForm {
            strands: self.n,
            inf: self.inf,
            factors: self
                .factors
                .into_iter()
                .map(|f| Permutation::from_image(f).expect("simple factors are permutations"))
                .collect(),
        }
    }
}

pub fn normal_form(a: &BraidWord) -> GarsideNormalForm {
    let mut builder = NormalFormBuilder::new(a.strands());
    for &g in a.word() {
        builder.push_generator(g);
    }
    builder.finish()
}
