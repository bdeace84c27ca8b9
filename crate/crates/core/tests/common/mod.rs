#![allow(dead_code)]

use derived_braids::{BraidWord, Permutation};
use rand::Rng;

pub fn b(strands: usize, word: &[i32]) -> BraidWord {
    BraidWord::new(strands, word.to_vec()).unwrap()
}

pub fn random_word<R: Rng>(rng: &mut R, strands: usize, max_len: usize) -> BraidWord {
    let len = rng.gen_range(0..=max_len);
    let word = (0..len)
        .map(|_| {
            let g = rng.gen_range(1..strands as i32);
            if rng.gen_bool(0.5) {
                g
            } else {
                -g
            }
        })
        .collect();
    BraidWord::new(strands, word).unwrap()
}

/// One random group-preserving rewrite: insert a cancelling pair, swap a
/// commuting pair, or apply a braid relation `aba -> bab`.
pub fn rewrite_once<R: Rng>(rng: &mut R, x: &BraidWord) -> BraidWord {
    let n = x.strands();
    let mut w = x.word().to_vec();
    match rng.gen_range(0..3) {
        0 if n >= 2 => {
            let g = rng.gen_range(1..n as i32) * if rng.gen_bool(0.5) { 1 } else { -1 };
            let pos = rng.gen_range(0..=w.len());
            w.splice(pos..pos, [g, -g]);
        }
        1 => {
            let spots: Vec<usize> = (0..w.len().saturating_sub(1))
                .filter(|&i| (w[i].abs() - w[i + 1].abs()).abs() >= 2)
                .collect();
            if !spots.is_empty() {
                let i = spots[rng.gen_range(0..spots.len())];
                w.swap(i, i + 1);
            }
        }
        _ => {
            let spots: Vec<usize> = (0..w.len().saturating_sub(2))
                .filter(|&i| {
                    let (a, c, d) = (w[i], w[i + 1], w[i + 2]);
                    a == d && (a.abs() - c.abs()).abs() == 1 && a.signum() == c.signum()
                })
                .collect();
            if !spots.is_empty() {
                let i = spots[rng.gen_range(0..spots.len())];
                let (a, c) = (w[i], w[i + 1]);
                w[i] = c;
                w[i + 1] = a;
                w[i + 2] = c;
            }
        }
    }
    BraidWord::new(n, w).unwrap()
}

pub fn rewrite<R: Rng>(rng: &mut R, x: &BraidWord, steps: usize) -> BraidWord {
    (0..steps).fold(x.clone(), |acc, _| rewrite_once(rng, &acc))
}

/// Moves each ribbon of `widths` as a block according to `perm`
/// (written from scratch, independent of the library's refinement).
pub fn block_perm(perm: &[usize], widths: &[usize]) -> Vec<usize> {
    let m = widths.len();
    let mut after = vec![0; m];
    for i in 0..m {
        after[perm[i]] = widths[i];
    }
    let mut start = vec![0; m];
    let mut acc = 0;
    for j in 0..m {
        start[j] = acc;
        acc += after[j];
    }
    let mut out = Vec::new();
    for i in 0..m {
        for t in 0..widths[i] {
            out.push(start[perm[i]] + t);
        }
    }
    out
}

fn then(a: &[usize], b: &[usize]) -> Vec<usize> {
    a.iter().map(|&p| b[p]).collect()
}

/// Permutation of `Lx` computed from the permutation of `x` alone.
pub fn left_derived_perm(x: &Permutation) -> Vec<usize> {
    let two_n = x.size();
    let n = two_n / 2;
    let top: Vec<usize> = (0..3 * n).map(|i| if i < two_n { x.image()[i] } else { i }).collect();
    let widths: Vec<usize> = std::iter::repeat_n(2, n).chain(std::iter::repeat_n(1, n)).collect();
    then(&top, &block_perm(x.image(), &widths))
}

/// Permutation of `Rx` computed from the permutation of `x` alone.
pub fn right_derived_perm(x: &Permutation) -> Vec<usize> {
    let two_n = x.size();
    let n = two_n / 2;
    let top: Vec<usize> = (0..3 * n).map(|i| if i < n { i } else { x.image()[i - n] + n }).collect();
    let widths: Vec<usize> = std::iter::repeat_n(1, n).chain(std::iter::repeat_n(2, n)).collect();
    then(&top, &block_perm(x.image(), &widths))
}
