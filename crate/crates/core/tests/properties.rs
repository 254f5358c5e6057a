//! Randomized invariants over trees, words and pairs.

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use parsewords::enumeration::{random_path_tree, random_tree};
use parsewords::grammar::{root_letter_by_parity, words_of, Permutation};
use parsewords::reductions::{
    attach_cherry, duplicate_leaf, find_decompositions, splice_solve, triplicate_leaf, triplication_word_lift,
    unduplicate_leaf,
};
use parsewords::tree::Side;
use parsewords::vector::{evaluate_bracketing, phi_inverse, quaternion_product, SignedVector};
use parsewords::{
    count_parse_words, decode_path, encode_path, parse, parse_words, parse_words_with, PathWord, Strategy, Tree,
    TreePair, Word,
};

fn tree(n: usize, seed: u64) -> Tree {
    random_tree(n, &mut ChaCha8Rng::seed_from_u64(seed))
}

fn pair(n: usize, seed: u64) -> TreePair {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    TreePair::new(random_tree(n, &mut rng), random_tree(n, &mut rng)).unwrap()
}

fn word(letters: Vec<u8>) -> Word {
    Word::new(letters).unwrap()
}

const PERMUTATIONS: [[u8; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];

#[test]
fn one_leaf_doubling_holds_for_raw_words() {
    let p = TreePair::new(Tree::leaf(), Tree::leaf()).unwrap();
    let grown = TreePair::new(Tree::cherry(), Tree::cherry()).unwrap();
    assert_eq!(count_parse_words(&grown), count_parse_words(&p));
    assert_eq!(parse_words(&grown).raw_count(), 2 * parse_words(&p).raw_count());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn path_words_round_trip(sides in prop::collection::vec(any::<bool>(), 0..20)) {
        let p = PathWord::new(sides.iter().map(|&l| if l { Side::Left } else { Side::Right }).collect());
        let t = decode_path(&p);
        prop_assert!(t.is_path_tree());
        prop_assert_eq!(t.leaf_count(), p.len() + 2);
        prop_assert_eq!(encode_path(&t).unwrap(), p);
    }

    #[test]
    fn child_spans_partition_parent(n in 1usize..30, seed: u64) {
        let t = tree(n, seed);
        prop_assert_eq!(t.subtree_span(t.root()).len(), n);
        for v in t.internal_vertices() {
            let (l, r) = t.children(v).unwrap();
            let (s, a, b) = (t.subtree_span(v), t.subtree_span(l), t.subtree_span(r));
            prop_assert_eq!((a.lo(), b.hi()), (s.lo(), s.hi()));
            prop_assert_eq!(a.hi() + 1, b.lo());
        }
    }

    #[test]
    fn literals_round_trip(n in 1usize..40, seed: u64) {
        let t = tree(n, seed);
        prop_assert_eq!(t.to_string().parse::<Tree>().unwrap(), t.clone());
        prop_assert_eq!(t.mirror().mirror(), t);
    }

    #[test]
    fn bottom_pairs_exist(n in 2usize..30, seed: u64) {
        let t = tree(n, seed);
        let pairs = t.bottom_leaf_pairs();
        prop_assert!(!pairs.is_empty());
        if !t.is_path_tree() {
            prop_assert!(pairs.len() >= 2);
        }
    }

    #[test]
    fn parsing_is_closed_under_permutation(n in 1usize..12, seed: u64, pick: prop::sample::Index) {
        let t = tree(n, seed);
        let all: Vec<Word> = words_of(&t).map(|(w, _)| w).collect();
        let w = &all[pick.index(all.len())];
        let lab = parse(&t, w).unwrap().unwrap();
        prop_assert!(lab.is_valid_for(&t));
        prop_assert_eq!(root_letter_by_parity(w), Some(lab.root()));
        for images in PERMUTATIONS {
            let p = Permutation::new(images).unwrap();
            let moved = parse(&t, &w.permuted(p)).unwrap().unwrap();
            prop_assert_eq!(moved.root(), p.apply(lab.root()));
        }
    }

    #[test]
    fn word_and_self_intersection_counts(n in 2usize..11, seed: u64) {
        let t = tree(n, seed);
        prop_assert_eq!(words_of(&t).count() as u64, 3u64 << (n - 1));
        let same = TreePair::new(t.clone(), t).unwrap();
        prop_assert_eq!(count_parse_words(&same), 1u64 << (n - 2));
    }

    #[test]
    fn pair_symmetry_and_orbits(n in 2usize..10, seed: u64) {
        let p = pair(n, seed);
        let s = parse_words(&p);
        prop_assert_eq!(&parse_words(&p.swapped()), &s);
        prop_assert_eq!(s.raw_count(), 6 * s.len() as u64);
        for strategy in [Strategy::RootFixed, Strategy::Pruned] {
            prop_assert_eq!(&parse_words_with(&p, strategy), &s);
        }
    }

    #[test]
    fn reflection_reverses_words(n in 2usize..10, seed: u64) {
        let p = pair(n, seed);
        let m = p.mirrored();
        let s = parse_words(&p);
        prop_assert_eq!(parse_words(&m).len(), s.len());
        for c in s.classes() {
            prop_assert!(m.parses(&c.canonical().reversed()));
        }
    }

    #[test]
    fn growth_laws(n in 2usize..8, seed: u64, site in 1usize..8) {
        let p = pair(n, seed);
        let i = 1 + (site - 1) % n;
        let before = count_parse_words(&p);
        let doubled = TreePair::new(attach_cherry(p.t1(), i).unwrap(), attach_cherry(p.t2(), i).unwrap()).unwrap();
        prop_assert_eq!(count_parse_words(&doubled), 2 * before);
        let kept = TreePair::new(attach_cherry(p.t1(), i).unwrap(), duplicate_leaf(p.t2(), i).unwrap()).unwrap();
        prop_assert_eq!(count_parse_words(&kept), before);
    }

    #[test]
    fn duplication_is_undone(n in 2usize..20, seed: u64, site in 1usize..20) {
        let t = tree(n, seed);
        let i = 1 + (site - 1) % n;
        let d = duplicate_leaf(&t, i).unwrap();
        prop_assert_eq!(unduplicate_leaf(&d, i), Some(t));
    }

    #[test]
    fn triplication_lifts_every_word(n in 2usize..8, seed: u64, site in 1usize..8) {
        let p = pair(n, seed);
        let i = 1 + (site - 1) % n;
        let big = TreePair::new(triplicate_leaf(p.t1(), i).unwrap(), triplicate_leaf(p.t2(), i).unwrap()).unwrap();
        for c in parse_words(&p).classes() {
            prop_assert!(big.parses(&triplication_word_lift(c.canonical(), i).unwrap()));
        }
    }

    #[test]
    fn solver_words_are_verified(n in 1usize..11, seed: u64) {
        let p = pair(n, seed);
        let nonempty = p.search().first().is_some();
        match splice_solve(&p) {
            Some(w) => prop_assert!(p.parses(&w)),
            None => prop_assert!(!nonempty),
        }
        prop_assert!(nonempty);
    }

    #[test]
    fn solver_on_path_pairs(n in 2usize..16, seed: u64) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let p = TreePair::new(random_path_tree(n, &mut rng), random_path_tree(n, &mut rng)).unwrap();
        let w = splice_solve(&p);
        prop_assert!(w.is_some_and(|w| p.parses(&w)));
    }

    #[test]
    fn decompositions_are_symmetric_and_mirror(n in 2usize..14, seed: u64) {
        let p = pair(n, seed);
        let found = find_decompositions(&p);
        prop_assert_eq!(&find_decompositions(&p.swapped()), &found);
        let mut mirrored: Vec<_> = found.iter().map(|s| s.mirror(n)).collect();
        mirrored.sort_by_key(|s| (s.lo(), s.hi()));
        prop_assert_eq!(find_decompositions(&p.mirrored()), mirrored);
    }

    #[test]
    fn nonzero_bracketings_equal_the_quaternion_product(
        n in 1usize..8,
        seed: u64,
        picks in prop::collection::vec(0usize..3, 8),
    ) {
        let t = tree(n, seed);
        let vs: Vec<SignedVector> = picks[..n].iter().map(|&k| SignedVector::UNITS[k]).collect();
        let v = evaluate_bracketing(&t, &vs).unwrap();
        if !v.is_zero() {
            prop_assert_eq!(phi_inverse(quaternion_product(&vs).unwrap()), Some(v));
        }
    }

    #[test]
    fn canonical_words_are_minimal(letters in prop::collection::vec(0u8..3, 1..15)) {
        let w = word(letters);
        let c = parsewords::canonicalize(&w);
        for images in PERMUTATIONS {
            let p = Permutation::new(images).unwrap();
            prop_assert!(c.canonical() <= &w.permuted(p));
            prop_assert_eq!(&parsewords::canonicalize(&w.permuted(p)), &c);
        }
    }
}
