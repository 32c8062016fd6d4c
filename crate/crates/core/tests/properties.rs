//! Cross-cutting invariants: demodulation against realization, the bit- and
//! symbol-level fast paths against the generic constraint-graph route, and
//! the codec against exhaustive enumeration.

use std::collections::HashSet;

use proptest::prelude::*;

use lrm_core::scheme12::{self, BinaryWord};
use lrm_core::scheme13::{self, BaseWord13, Symbol13, TernaryWord};
use lrm_core::{
    demodulate, is_realizable, push_to_top, realize, BaseWord, ChargeConfig, LrmParams,
    SearchBudget,
};

/// All length-n symbol-value vectors over 0..base.
fn all_words(base: u8, n: usize) -> impl Iterator<Item = Vec<u8>> {
    (0..(base as u64).pow(n as u32)).map(move |packed| {
        let mut x = packed;
        (0..n)
            .map(|_| {
                let d = (x % base as u64) as u8;
                x /= base as u64;
                d
            })
            .collect()
    })
}

fn base_word_13(params: &LrmParams, vals: &[u8]) -> BaseWord {
    let symbols = vals
        .iter()
        .map(|&v| Symbol13::new(v).unwrap().permutation())
        .collect();
    BaseWord::new(params, symbols).unwrap()
}

/// Demodulating every total charge order yields exactly the realizable words.
#[test]
fn realizable_words_are_the_demodulation_image_t2() {
    for n in 3..=7usize {
        let params = LrmParams::new(1, 2, n).unwrap();
        let mut image: HashSet<BinaryWord> = HashSet::new();
        permute((0..n as i64).collect(), &mut |levels| {
            let cfg = ChargeConfig::new(&params, levels.to_vec()).unwrap();
            let word = demodulate(&params, &cfg).unwrap();
            image.insert(BinaryWord::from_base_word(&word).unwrap());
        });
        for bits in all_words(2, n) {
            let word = BinaryWord::new(bits.iter().map(|&b| b == 1).collect()).unwrap();
            let expected = image.contains(&word);
            assert_eq!(word.is_realizable(), expected, "n={n} word {word}");
            assert_eq!(
                is_realizable(&params, &word.to_base_word()),
                expected,
                "n={n} word {word} (generic)"
            );
        }
        assert_eq!(image.len(), (1usize << n) - 2, "n={n}");
    }
}

/// Same completeness check for windows of three, over the full symbol space.
#[test]
fn realizable_words_are_the_demodulation_image_t3() {
    for n in 3..=7usize {
        let params = LrmParams::new(1, 3, n).unwrap();
        let mut image: HashSet<Vec<u8>> = HashSet::new();
        permute((0..n as i64).collect(), &mut |levels| {
            let cfg = ChargeConfig::new(&params, levels.to_vec()).unwrap();
            let word = demodulate(&params, &cfg).unwrap();
            let vals: Vec<u8> = word
                .symbols()
                .iter()
                .map(|p| Symbol13::from_permutation(p).unwrap().value())
                .collect();
            image.insert(vals);
        });
        let mut realizable = 0u64;
        for vals in all_words(6, n) {
            let word = base_word_13(&params, &vals);
            let expected = image.contains(&vals);
            assert_eq!(is_realizable(&params, &word), expected, "n={n} {vals:?}");
            realizable += u64::from(expected);
        }
        assert_eq!(realizable as usize, image.len(), "n={n}");
    }
}

/// Realization inverts demodulation on every realizable word.
#[test]
fn realize_inverts_demodulate_exhaustively() {
    for n in 3..=7usize {
        let params = LrmParams::new(1, 3, n).unwrap();
        for vals in all_words(6, n) {
            let word = base_word_13(&params, &vals);
            match realize(&params, &word) {
                Ok(cfg) => {
                    assert!(is_realizable(&params, &word));
                    assert_eq!(demodulate(&params, &cfg).unwrap(), word, "n={n} {vals:?}");
                }
                Err(_) => assert!(!is_realizable(&params, &word), "n={n} {vals:?}"),
            }
        }
    }
}

/// The succession rule is exactly overlap consistency once no two windows
/// share more than their adjacent pair (n >= 5).
#[test]
fn succession_equals_overlap_consistency() {
    for n in [5usize, 6] {
        let params = LrmParams::new(1, 3, n).unwrap();
        for vals in all_words(6, n) {
            let generic = base_word_13(&params, &vals).is_overlap_consistent(&params);
            let succession = BaseWord13::from_values(&vals).is_ok();
            assert_eq!(succession, generic, "n={n} {vals:?}");
        }
    }
}

/// Every transition-graph edge is a weight-preserving single push.
#[test]
fn transition_edges_are_weight_preserving_pushes() {
    for n in 4..=9usize {
        for w in 1..n {
            let g = scheme12::build_graph(n, w).unwrap();
            for a in g.vertices() {
                assert_eq!(a.weight(), w);
                for b in g.out_neighbors(&a).unwrap() {
                    assert!(scheme12::is_gray_step(&a, &b), "n={n} w={w} {a}->{b}");
                    assert_eq!(b.weight(), w, "n={n} w={w} {a}->{b}");
                }
            }
        }
    }
}

/// Any weight-preserving push between distinct weight-w words is an edge.
#[test]
fn transition_graph_has_no_missing_edges() {
    let n = 6;
    for w in 1..n {
        let g = scheme12::build_graph(n, w).unwrap();
        let verts: Vec<BinaryWord> = g.vertices().collect();
        for a in &verts {
            for b in &verts {
                let expected = scheme12::is_gray_step(a, b) && b.weight() == w;
                assert_eq!(g.has_edge(a, b), expected, "{a}->{b}");
            }
        }
    }
}

/// Exhaustive reference search: longest simple cycle by brute force over
/// simple paths anchored at each minimum vertex, no symmetry shortcuts.
fn naive_longest_cycle(g: &scheme12::TransitionGraph) -> usize {
    let verts: Vec<BinaryWord> = g.vertices().collect();
    let index: std::collections::HashMap<&BinaryWord, usize> =
        verts.iter().enumerate().map(|(i, v)| (v, i)).collect();
    let adj: Vec<Vec<usize>> = verts
        .iter()
        .map(|v| {
            g.out_neighbors(v)
                .unwrap()
                .iter()
                .map(|u| index[u])
                .collect()
        })
        .collect();

    fn dfs(
        v: usize,
        anchor: usize,
        adj: &[Vec<usize>],
        on_path: &mut Vec<bool>,
        len: usize,
        best: &mut usize,
    ) {
        for &u in &adj[v] {
            if u == anchor && len >= 2 {
                *best = (*best).max(len);
            } else if u > anchor && !on_path[u] {
                on_path[u] = true;
                dfs(u, anchor, adj, on_path, len + 1, best);
                on_path[u] = false;
            }
        }
    }

    let mut best = 0;
    for anchor in 0..verts.len() {
        let mut on_path = vec![false; verts.len()];
        on_path[anchor] = true;
        dfs(anchor, anchor, &adj, &mut on_path, 1, &mut best);
    }
    best
}

/// The production search (with its gap-class symmetry reduction for w = 2)
/// agrees with the plain reference search.
#[test]
fn longest_cycle_matches_naive_search() {
    for (n, w) in [(4, 2), (5, 2), (6, 2), (7, 2), (5, 1), (6, 3), (6, 5), (8, 6)] {
        let g = scheme12::build_graph(n, w).unwrap();
        let found = scheme12::longest_cycle(&g, SearchBudget::default()).unwrap();
        assert_eq!(found.length, naive_longest_cycle(&g), "n={n} w={w}");
    }
}

/// Cycle lengths are multiples of n: each step advances the total of the
/// one-positions by one around the cycle.
#[test]
fn cycle_lengths_are_multiples_of_n() {
    for n in 4..=9usize {
        let g = scheme12::build_graph(n, 2).unwrap();
        let found = scheme12::longest_cycle(&g, SearchBudget::default()).unwrap();
        assert!(found.length > 0);
        assert_eq!(found.length % n, 0, "n={n} length {}", found.length);
        assert!(found.length <= 2 * n, "n={n} length {}", found.length);
    }
}

/// Exhaustive codec coverage: the 3^n - 1 ternary words other than all-ones
/// decode injectively into the succession-valid base-words, missing only the
/// two alternating words (1,4,1,4,...) that exist at even n — exactly the
/// words that would claim the all-ones code, and never realizable anyway.
#[test]
fn codec_is_a_bijection_up_to_the_alternating_words() {
    for n in [5usize, 6] {
        let mut decoded: HashSet<BaseWord13> = HashSet::new();
        for digits in all_words(3, n) {
            let code = TernaryWord::new(digits.clone()).unwrap();
            match scheme13::decode(&code) {
                Ok(word) => {
                    assert_eq!(scheme13::encode(&word).digits(), &digits[..]);
                    assert!(decoded.insert(word), "two codes decode alike: {code}");
                }
                Err(scheme13::IllegalCodeword::AllOnes) => {
                    assert!(digits.iter().all(|&d| d == 1))
                }
                Err(e) => panic!("unexpected decode error for {code}: {e}"),
            }
        }
        assert_eq!(decoded.len() as u64, 3u64.pow(n as u32) - 1, "n={n}");

        let mut missed = Vec::new();
        for vals in all_words(6, n) {
            if let Ok(word) = BaseWord13::from_values(&vals) {
                if !decoded.contains(&word) {
                    missed.push(word);
                }
            }
        }
        if n % 2 == 0 {
            // Only the two alternating words fall outside the image, and
            // both are unrealizable, so every realizable word has a code.
            assert_eq!(missed.len(), 2, "n={n}");
            for word in &missed {
                assert!(!word.is_realizable(), "n={n} missed {word}");
                assert!(word
                    .symbols()
                    .iter()
                    .all(|s| s.value() == 1 || s.value() == 4));
                // Their digit string is the all-ones word.
                assert!(scheme13::encode(word)
                    .digits()
                    .iter()
                    .all(|&d| d == 1));
            }
        } else {
            assert!(missed.is_empty(), "n={n}: {missed:?}");
        }
    }
}

fn permute(mut items: Vec<i64>, visit: &mut impl FnMut(&[i64])) {
    let n = items.len();
    visit(&items);
    let mut c = vec![0usize; n];
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                items.swap(0, i);
            } else {
                items.swap(c[i], i);
            }
            visit(&items);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

proptest! {
    /// What a push does to the base-word depends only on the base-word, not
    /// on which configuration realizes it.
    #[test]
    fn push_effect_is_representation_independent(
        levels in Just((0..8i64).collect::<Vec<i64>>()).prop_shuffle(),
        j in 0usize..8,
        t in 2usize..=3,
    ) {
        let params = LrmParams::new(1, t, 8).unwrap();
        let cfg = ChargeConfig::new(&params, levels.clone()).unwrap();
        // An order-equivalent configuration: same ranking, different levels.
        let stretched: Vec<i64> = levels.iter().map(|&x| 5 * x - 7).collect();
        let cfg2 = ChargeConfig::new(&params, stretched).unwrap();
        // The canonical realization is order-equivalent too.
        let word = demodulate(&params, &cfg).unwrap();
        let cfg3 = realize(&params, &word).unwrap();

        let pushed = demodulate(&params, &push_to_top(&params, &cfg, j).unwrap()).unwrap();
        for other in [cfg2, cfg3] {
            let also = demodulate(&params, &push_to_top(&params, &other, j).unwrap()).unwrap();
            prop_assert_eq!(&pushed, &also);
        }
    }

    /// Pushing through charge space matches the bit-level overwrite rule.
    #[test]
    fn push_commutes_with_bit_overwrite(
        bits in proptest::collection::vec(any::<bool>(), 3..=16),
        j_pick in any::<proptest::sample::Index>(),
    ) {
        prop_assume!(bits.iter().any(|&b| b) && !bits.iter().all(|&b| b));
        let word = BinaryWord::new(bits).unwrap();
        let j = j_pick.index(word.len());
        let params = word.params();
        let cfg = realize(&params, &word.to_base_word()).unwrap();
        let pushed = demodulate(&params, &push_to_top(&params, &cfg, j).unwrap()).unwrap();
        prop_assert_eq!(
            BinaryWord::from_base_word(&pushed).unwrap(),
            word.push_overwrite(j).unwrap()
        );
    }

    /// Decode then encode is the identity on non-all-ones ternary words.
    #[test]
    fn encode_inverts_decode(
        digits in proptest::collection::vec(0u8..3, 3..=14),
    ) {
        prop_assume!(digits.iter().any(|&d| d != 1));
        let code = TernaryWord::new(digits).unwrap();
        let word = scheme13::decode(&code).unwrap();
        prop_assert_eq!(scheme13::encode(&word), code);
    }

    /// Encode then decode is the identity on succession-valid words, except
    /// the alternating 1,4 words whose digit string collapses to all-ones.
    #[test]
    fn decode_inverts_encode(
        seed in proptest::collection::vec(0u8..3, 3..=14),
        first in 0u8..6,
    ) {
        // Drive a succession-valid word off the seed digits, then require
        // the cyclic wrap to hold as well.
        let mut vals = vec![first];
        for (i, &d) in seed.iter().enumerate().skip(1) {
            let prev = Symbol13::new(vals[i - 1]).unwrap();
            vals.push(prev.successors()[d as usize].value());
        }
        let last = Symbol13::new(*vals.last().unwrap()).unwrap();
        prop_assume!(last.admits(Symbol13::new(vals[0]).unwrap()));
        let word = BaseWord13::from_values(&vals).unwrap();
        let code = scheme13::encode(&word);
        if code.digits().iter().all(|&d| d == 1) {
            prop_assert!(vals.iter().all(|&v| v == 1 || v == 4));
            prop_assert!(!word.is_realizable());
        } else {
            prop_assert_eq!(scheme13::decode(&code).unwrap(), word);
        }
    }

    /// The symbol-level realizability fast path agrees with the generic
    /// constraint-graph route on random words.
    #[test]
    fn fast_realizability_matches_generic(
        digits in proptest::collection::vec(0u8..3, 3..=14),
    ) {
        prop_assume!(digits.iter().any(|&d| d != 1));
        let code = TernaryWord::new(digits).unwrap();
        let word = scheme13::decode(&code).unwrap();
        let params = word.params();
        prop_assert_eq!(
            word.is_realizable(),
            is_realizable(&params, &word.to_base_word())
        );
    }

    /// Pushing through charge space matches succession-level expectations:
    /// demodulation of a pushed realization stays succession-valid and
    /// differs from the original in at most the windows that see cell j.
    #[test]
    fn push_touches_only_watching_windows(
        digits in proptest::collection::vec(0u8..3, 4..=12),
        j_pick in any::<proptest::sample::Index>(),
    ) {
        prop_assume!(digits.iter().any(|&d| d != 1));
        let code = TernaryWord::new(digits).unwrap();
        let word = scheme13::decode(&code).unwrap();
        prop_assume!(word.is_realizable());
        let n = word.len();
        let j = j_pick.index(n);
        let params = word.params();
        let cfg = realize(&params, &word.to_base_word()).unwrap();
        let pushed = demodulate(&params, &push_to_top(&params, &cfg, j).unwrap()).unwrap();
        let pushed = BaseWord13::from_base_word(&pushed).unwrap();
        for i in 0..n {
            // Window i sees cells i, i+1, i+2.
            let sees_j = (j + n - i) % n <= 2;
            if !sees_j {
                prop_assert_eq!(pushed.symbols()[i], word.symbols()[i], "window {}", i);
            }
        }
    }
}
