mod common;

use common::{b, left_derived_perm, right_derived_perm, rewrite};
use derived_braids::cabling::cabled_length;
use derived_braids::render::to_tikz;
use derived_braids::word_problem::{equal_by_handles, may_be_equal, HandleVerdict};
use derived_braids::*;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn generator(strands: usize) -> impl Strategy<Value = i32> {
    (1..strands as i32, any::<bool>()).prop_map(|(g, pos)| if pos { g } else { -g })
}

fn braid_on(strands: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    prop::collection::vec(generator(strands), 0..=max_len).prop_map(move |w| BraidWord::new(strands, w).unwrap())
}

fn braid(max_strands: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    (2..=max_strands).prop_flat_map(move |n| braid_on(n, max_len))
}

fn braid_pair(max_strands: usize, max_len: usize) -> impl Strategy<Value = (BraidWord, BraidWord)> {
    (2..=max_strands).prop_flat_map(move |n| (braid_on(n, max_len), braid_on(n, max_len)))
}

fn even_braid(max_half: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    (1..=max_half).prop_flat_map(move |n| braid_on(2 * n, max_len))
}

fn braid_with_widths() -> impl Strategy<Value = (BraidWord, WidthVector)> {
    (2usize..=5)
        .prop_flat_map(|n| (braid_on(n, 10), prop::collection::vec(1usize..=3, n)))
        .prop_map(|(x, w)| (x, WidthVector::new(w).unwrap()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn inverse_cancels_permutation(a in braid(8, 20)) {
        prop_assert!(a.compose(&a.inverse()).unwrap().underlying_permutation().is_identity());
    }

    #[test]
    fn permutation_is_a_homomorphism((a, c) in braid_pair(8, 15)) {
        let ac = a.compose(&c).unwrap();
        prop_assert_eq!(ac.underlying_permutation(), a.underlying_permutation().then(&c.underlying_permutation()));
    }

    #[test]
    fn free_reduce_keeps_permutation_and_shrinks(a in braid(6, 25)) {
        let r = a.free_reduce();
        prop_assert_eq!(r.underlying_permutation(), a.underlying_permutation());
        prop_assert!(r.len() <= a.len());
        prop_assert_eq!(r.exponent_sum(), a.exponent_sum());
        prop_assert!(r.word().windows(2).all(|w| w[0] != -w[1]));
    }

    #[test]
    fn tensor_and_embed_preserve_counts((a, c) in (braid(5, 10), braid(5, 10)), offset in 0usize..4) {
        let t = a.tensor(&c);
        prop_assert_eq!(t.strands(), a.strands() + c.strands());
        prop_assert_eq!(t.exponent_sum(), a.exponent_sum() + c.exponent_sum());
        let e = a.embed(a.strands() + offset + 1, offset).unwrap();
        prop_assert_eq!(e.exponent_sum(), a.exponent_sum());
        prop_assert_eq!(e.len(), a.len());
    }

    #[test]
    fn normal_form_is_valid_and_idempotent(a in braid(7, 20)) {
        let nf = normal_form(&a);
        prop_assert!(nf.is_valid());
        prop_assert_eq!(normal_form(&nf.to_word()), nf.clone());
        prop_assert!(equal(&nf.to_word(), &a).unwrap());
        prop_assert_eq!(handle_reduce(&nf.to_word().compose(&a.inverse()).unwrap()).unwrap(), HandleVerdict::Trivial);
    }

    #[test]
    fn normal_form_survives_rewriting(a in braid(7, 15), seed in any::<u64>(), steps in 1usize..12) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let rewritten = rewrite(&mut rng, &a, steps);
        prop_assert_eq!(normal_form(&rewritten), normal_form(&a));
    }

    #[test]
    fn garside_and_handles_agree((a, c) in braid_pair(6, 12)) {
        prop_assert_eq!(equal(&a, &c).unwrap(), equal_by_handles(&a, &c).unwrap());
    }

    #[test]
    fn garside_and_handles_agree_on_rewrites(a in braid(6, 12), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let c = rewrite(&mut rng, &a, 6);
        prop_assert!(equal(&a, &c).unwrap());
        prop_assert!(equal_by_handles(&a, &c).unwrap());
    }

    #[test]
    fn equality_is_an_equivalence(a in braid_on(4, 8), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let c = rewrite(&mut rng, &a, 5);
        let d = rewrite(&mut rng, &c, 5);
        prop_assert!(equal(&a, &a).unwrap());
        prop_assert_eq!(equal(&a, &c).unwrap(), equal(&c, &a).unwrap());
        prop_assert!(equal(&a, &c).unwrap() && equal(&c, &d).unwrap() && equal(&a, &d).unwrap());
    }

    #[test]
    fn equal_implies_necessary_conditions((a, c) in braid_pair(4, 6)) {
        if equal(&a, &c).unwrap() {
            prop_assert!(may_be_equal(&a, &c));
        }
    }

    #[test]
    fn handle_sign_is_antisymmetric(a in braid(6, 12)) {
        let forward = handle_reduce(&a).unwrap();
        let backward = handle_reduce(&a.inverse()).unwrap();
        let expected = match forward {
            HandleVerdict::Trivial => HandleVerdict::Trivial,
            HandleVerdict::SigmaPositive => HandleVerdict::SigmaNegative,
            HandleVerdict::SigmaNegative => HandleVerdict::SigmaPositive,
        };
        prop_assert_eq!(backward, expected);
        prop_assert_eq!(forward == HandleVerdict::Trivial, is_trivial(&a));
    }

    #[test]
    fn cabling_is_functorial((x, w) in braid_with_widths(), split in 0usize..=10) {
        let cut = split.min(x.len());
        let top = BraidWord::new(x.strands(), x.word()[..cut].to_vec()).unwrap();
        let bottom = BraidWord::new(x.strands(), x.word()[cut..].to_vec()).unwrap();
        let w2 = w.permuted(&top.underlying_permutation());
        let lhs = cable(&x, &w).unwrap();
        let rhs = cable(&top, &w).unwrap().compose(&cable(&bottom, &w2).unwrap()).unwrap();
        prop_assert!(equal(&lhs, &rhs).unwrap());
        let inv = cable(&x.inverse(), &w.permuted(&x.underlying_permutation())).unwrap();
        prop_assert!(equal(&inv, &lhs.inverse()).unwrap());
        prop_assert_eq!(lhs.len(), cabled_length(&x, &w));
        prop_assert_eq!(lhs.underlying_permutation().image().to_vec(), common::block_perm(x.underlying_permutation().image(), w.as_slice()));
    }

    #[test]
    fn cabling_with_ones_is_literal(x in braid(8, 15)) {
        prop_assert_eq!(cable(&x, &WidthVector::ones(x.strands()).unwrap()).unwrap(), x);
    }

    #[test]
    fn artin_round_trip(a in braid(9, 20)) {
        prop_assert_eq!(parse_artin(&a.to_artin(), a.strands()).unwrap(), a);
    }

    #[test]
    fn packed_rows_round_trip(a in braid(7, 20)) {
        let packed = pack_rows(&a);
        prop_assert!(equal(&flatten(&packed), &a).unwrap());
        let reparsed = parse_rows(&packed.to_string(), a.strands()).unwrap();
        prop_assert!(equal(&flatten(&reparsed), &a).unwrap());
        let from_tikz = parse_rows(&to_tikz(&a), a.strands()).unwrap();
        prop_assert!(equal(&flatten(&from_tikz), &a).unwrap());
    }

    #[test]
    fn derived_braids_have_expected_shape(x in even_braid(4, 10)) {
        let lx = left_derived(&x).unwrap();
        let rx = right_derived(&x).unwrap();
        prop_assert_eq!(lx.strands(), 3 * x.strands() / 2);
        prop_assert_eq!(rx.strands(), 3 * x.strands() / 2);
        let p = x.underlying_permutation();
        prop_assert_eq!(lx.underlying_permutation().image().to_vec(), left_derived_perm(&p));
        prop_assert_eq!(rx.underlying_permutation().image().to_vec(), right_derived_perm(&p));
    }

    #[test]
    fn lr_verdict_ignores_spelling(x in even_braid(3, 8), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let y = rewrite(&mut rng, &x, 6);
        prop_assert_eq!(satisfies_lr(&x).unwrap(), satisfies_lr(&y).unwrap());
    }
}

#[test]
fn identity_derives_to_identity() {
    for n in 1..=6 {
        let id = BraidWord::identity(2 * n);
        assert_eq!(left_derived(&id).unwrap(), BraidWord::identity(3 * n));
        assert_eq!(right_derived(&id).unwrap(), BraidWord::identity(3 * n));
        assert!(satisfies_lr(&id).unwrap());
    }
}

#[test]
fn components_satisfy_lr_up_to_eight() {
    for n in 1..=8 {
        for k in 0..=kmax(n) {
            assert!(satisfies_lr(&component(n, k).unwrap()).unwrap(), "n={n} k={k}");
        }
    }
}

#[test]
fn decreasing_products_satisfy_lr_up_to_five() {
    for n in 1..=5 {
        for spec in enumerate_products(n) {
            assert!(satisfies_lr(&decreasing_product(&spec).unwrap()).unwrap(), "{spec}");
        }
    }
}

/// At n = 6 two decreasing products break `Lx = Rx`; their derived
/// permutations already differ, so no choice of spelling can rescue them.
#[test]
fn decreasing_products_at_six_strand_pairs() {
    let mut failing = Vec::new();
    for spec in enumerate_products(6) {
        let x = decreasing_product(&spec).unwrap();
        if !satisfies_lr(&x).unwrap() {
            let p = x.underlying_permutation();
            assert_ne!(left_derived_perm(&p), right_derived_perm(&p));
            failing.push(spec.indices().to_vec());
        }
    }
    assert_eq!(failing, vec![vec![0, 2, 3], vec![2, 3]]);
}

#[test]
fn decreasing_product_lengths() {
    let x = decreasing_product(&ProductSpec::new(4, vec![0, 1, 2]).unwrap()).unwrap();
    assert_eq!(x, b(8, &[]).compose(&x).unwrap());
    assert_eq!(x.len(), 16 + 9 + 4);
}
