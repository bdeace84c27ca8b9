use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{BraidError, Result};

/// Strand permutation. `image()[i]` is the final position of the strand that
/// starts at position `i` (both 0-based here, 1-based in JSON and `Display`).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    image: Vec<usize>,
}

impl Permutation {
    pub fn identity(size: usize) -> Self {
        Self {
            image: (0..size).collect(),
        }
    }

    /// The order-reversing permutation, image of the half twist.
    pub fn reversal(size: usize) -> Self {
        Self {
            image: (0..size).rev().collect(),
        }
    }

    /// Builds a permutation from 0-based images.
    pub fn from_image(image: Vec<usize>) -> Result<Self> {
        let n = image.len();
        if n == 0 {
            return Err(BraidError::InvalidPermutation("empty".into()));
        }
        let mut seen = vec![false; n];
        for &p in &image {
            if p >= n || seen[p] {
                return Err(BraidError::InvalidPermutation(format!("{image:?} is not a bijection")));
            }
            seen[p] = true;
        }
        Ok(Self { image })
    }

    /// Builds a permutation from 1-based images.
    pub fn from_one_based(image: &[usize]) -> Result<Self> {
        if image.contains(&0) {
            return Err(BraidError::InvalidPermutation("1-based image contains 0".into()));
        }
        Self::from_image(image.iter().map(|&p| p - 1).collect())
    }

    pub fn size(&self) -> usize {
        self.image.len()
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn one_based(&self) -> Vec<usize> {
        self.image.iter().map(|&p| p + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &p)| i == p)
    }

    /// `self` followed by `other`: the strand at `i` ends at `other[self[i]]`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.size(), other.size(), "permutation sizes differ");
        Permutation {
            image: self.image.iter().map(|&p| other.image[p]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.size()];
        for (i, &p) in self.image.iter().enumerate() {
            inv[p] = i;
        }
        Permutation { image: inv }
    }

    /// Post-composes with the adjacent transposition of positions `pos`, `pos + 1` (0-based).
    pub fn swap_positions(&mut self, pos: usize) {
        for p in self.image.iter_mut() {
            if *p == pos {
                *p = pos + 1;
            } else if *p == pos + 1 {
                *p = pos;
            }
        }
    }

    /// Number of strand pairs whose order is reversed.
    pub fn inversions(&self) -> usize {
        let n = self.size();
        let mut count = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.image[i] > self.image[j] {
                    count += 1;
                }
            }
        }
        count
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.one_based().iter().map(|p| p.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl Serialize for Permutation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.one_based().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = Vec::<usize>::deserialize(d)?;
        Permutation::from_one_based(&raw).map_err(serde::de::Error::custom)
    }
}
