//! Bounded search for braids with `Lx = Rx`.
//!
//! Elements are enumerated breadth first by word length. Each new group
//! element keeps the first word that reached it, which is its
//! lexicographically least shortest word for the generator order
//! `σ1 < σ1^{-1} < σ2 < …` (inverses only when signed).

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::braid::BraidWord;
use crate::derived::satisfies_lr;
use crate::error::{BraidError, Result};
use crate::par;
use crate::word_problem::{normal_form, GarsideNormalForm};

pub const DEFAULT_MAX_ELEMENTS: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchEntry {
    pub word: Vec<i32>,
    pub length: usize,
    pub satisfies: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchReport {
    pub n: usize,
    pub strands: usize,
    pub max_len: usize,
    pub signed: bool,
    pub entries: Vec<SearchEntry>,
    pub distinct: usize,
    pub satisfying: usize,
}

impl SearchReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }

    pub fn entry(&self, word: &[i32]) -> Option<&SearchEntry> {
        self.entries.iter().find(|e| e.word == word)
    }
}

#[derive(Debug, Clone, Copy)]
pub struct SearchConfig {
    pub n: usize,
    pub max_len: usize,
    pub signed: bool,
    /// Cap on distinct elements before the search errors out.
    pub max_elements: usize,
}

impl SearchConfig {
    pub fn new(n: usize, max_len: usize, signed: bool) -> Self {
        Self {
            n,
            max_len,
            signed,
            max_elements: DEFAULT_MAX_ELEMENTS,
        }
    }
}

fn alphabet(strands: usize, signed: bool) -> Vec<i32> {
    (1..strands as i32)
        .flat_map(|g| if signed { vec![g, -g] } else { vec![g] })
        .collect()
}

pub fn search_lr(config: &SearchConfig) -> Result<SearchReport> {
    if config.n == 0 {
        return Err(BraidError::ZeroStrands);
    }
    let strands = 2 * config.n;
    let letters = alphabet(strands, config.signed);
    let identity = BraidWord::identity(strands);

    let mut seen: HashSet<GarsideNormalForm> = HashSet::new();
    seen.insert(normal_form(&identity));
    let mut elements = vec![identity.clone()];
    let mut frontier = vec![identity];

    for _ in 0..config.max_len {
        let candidates: Vec<BraidWord> = frontier
            .iter()
            .flat_map(|rep| {
                letters
                    .iter()
                    .filter(move |&&g| rep.word().last() != Some(&-g))
                    .map(move |&g| {
                        let mut w = rep.word().to_vec();
                        w.push(g);
                        BraidWord::from_parts_unchecked(strands, w)
                    })
            })
            .collect();
        let forms = par::map(&candidates, normal_form);
        let mut next = Vec::new();
        for (word, nf) in candidates.into_iter().zip(forms) {
            if seen.insert(nf) {
                if seen.len() > config.max_elements {
                    return Err(BraidError::SearchCapExceeded(config.max_elements));
                }
                next.push(word);
            }
        }
        if next.is_empty() {
            break;
        }
        elements.extend(next.iter().cloned());
        frontier = next;
    }

    let verdicts = par::map(&elements, satisfies_lr)
        .into_iter()
        .collect::<Result<Vec<_>>>()?;
    let entries: Vec<SearchEntry> = elements
        .into_iter()
        .zip(verdicts)
        .map(|(b, satisfies)| SearchEntry {
            length: b.len(),
            word: b.into_word(),
            satisfies,
        })
        .collect();
    let satisfying = entries.iter().filter(|e| e.satisfies).count();
    Ok(SearchReport {
        n: config.n,
        strands,
        max_len: config.max_len,
        signed: config.signed,
        distinct: entries.len(),
        satisfying,
        entries,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_crossing() {
        let r = search_lr(&SearchConfig::new(1, 1, false)).unwrap();
        assert_eq!(r.distinct, 2);
        assert!(r.entry(&[]).unwrap().satisfies);
        assert!(r.entry(&[1]).unwrap().satisfies);
    }

    #[test]
    fn four_strands_length_one() {
        let r = search_lr(&SearchConfig::new(2, 1, false)).unwrap();
        assert!(r.entry(&[2]).unwrap().satisfies);
        assert!(!r.entry(&[1]).unwrap().satisfies);
        assert!(!r.entry(&[3]).unwrap().satisfies);
    }

    #[test]
    fn non_example_is_found_false() {
        let r = search_lr(&SearchConfig::new(3, 2, false)).unwrap();
        assert!(!r.entry(&[2, 4]).unwrap().satisfies);
        // σ4σ2 is the same element and must not appear separately
        assert!(r.entry(&[4, 2]).is_none());
    }

    #[test]
    fn signed_search_deduplicates() {
        let r = search_lr(&SearchConfig::new(1, 3, true)).unwrap();
        // B_2 is infinite cyclic: lengths 0..=3 give 1 + 2·3 elements
        assert_eq!(r.distinct, 7);
        assert!(r.entries.iter().all(|e| e.satisfies));
    }

    #[test]
    fn ordering_is_by_length_then_word() {
        let r = search_lr(&SearchConfig::new(2, 2, false)).unwrap();
        let lens: Vec<usize> = r.entries.iter().map(|e| e.length).collect();
        assert!(lens.windows(2).all(|w| w[0] <= w[1]));
        // positive words of length 2 on B_4: 9 words, σ1σ3 = σ3σ1 collapses one
        assert_eq!(r.distinct, 1 + 3 + 8);
    }

    #[test]
    fn cap_is_enforced() {
        let mut cfg = SearchConfig::new(2, 3, true);
        cfg.max_elements = 10;
        assert_eq!(search_lr(&cfg), Err(BraidError::SearchCapExceeded(10)));
    }
}
