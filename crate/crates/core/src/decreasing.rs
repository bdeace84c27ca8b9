//! Decreasing-product components `b_k ∈ B_{2n}` and their products.
//!
//! `b_k` leaves `k` strands untouched on each side and swaps the two middle
//! blocks of `n - k` strands positively.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::braid::BraidWord;
use crate::cabling::block_transposition;
use crate::error::{BraidError, Result};

/// Largest component index for `B_{2n}`: `n/2` for even `n`, `(n-1)/2` for odd.
pub fn kmax(n: usize) -> usize {
    n / 2
}

pub fn component(n: usize, k: usize) -> Result<BraidWord> {
    if n == 0 || k > kmax(n) {
        return Err(BraidError::ComponentOutOfRange { n, k, max: kmax(n) });
    }
    let middle = n - k;
    block_transposition(1, middle, middle, true, 2 * middle)?.embed(2 * n, k)
}

/// A strictly increasing list of component indices for a fixed `n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ProductSpec {
    n: usize,
    indices: Vec<usize>,
}

impl ProductSpec {
    pub fn new(n: usize, indices: Vec<usize>) -> Result<Self> {
        if n == 0 {
            return Err(BraidError::InvalidProduct("n must be at least 1".into()));
        }
        if indices.is_empty() {
            return Err(BraidError::InvalidProduct("no components".into()));
        }
        if let Some(&k) = indices.iter().find(|&&k| k > kmax(n)) {
            return Err(BraidError::ComponentOutOfRange { n, k, max: kmax(n) });
        }
        if indices.windows(2).any(|w| w[0] >= w[1]) {
            return Err(BraidError::InvalidProduct(format!(
                "indices {indices:?} are not strictly increasing"
            )));
        }
        Ok(Self { n, indices })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }
}

impl fmt::Display for ProductSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.indices.iter().map(|k| format!("b{k}")).collect();
        write!(f, "{} (n={})", parts.join("·"), self.n)
    }
}

pub fn decreasing_product(spec: &ProductSpec) -> Result<BraidWord> {
    let parts = spec
        .indices
        .iter()
        .map(|&k| component(spec.n, k))
        .collect::<Result<Vec<_>>>()?;
    BraidWord::compose_all(&parts).expect("spec is nonempty")
}

/// Every nonempty strictly increasing index list over `0..=kmax(n)`, in
/// lexicographic order.
pub fn enumerate_products(n: usize) -> Vec<ProductSpec> {
    if n == 0 {
        return Vec::new();
    }
    fn extend(n: usize, start: usize, prefix: &mut Vec<usize>, out: &mut Vec<ProductSpec>) {
        for k in start..=kmax(n) {
            prefix.push(k);
            out.push(ProductSpec {
                n,
                indices: prefix.clone(),
            });
            extend(n, k + 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::with_capacity((1 << (kmax(n) + 1)) - 1);
    extend(n, 0, &mut Vec::new(), &mut out);
    out
}
