//! Common parse words of tree pairs, and exhaustive and random tree spaces.

use std::collections::BTreeSet;
use std::fmt;

use rand::Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::grammar::{canonicalize, parses, words_of, words_of_root, Word, WordClass};
use crate::search::CommonWordSearch;
use crate::tree::{decode_path, PathWord, Side, Tree};

/// Two trees with the same number of leaves.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct TreePair {
    t1: Tree,
    t2: Tree,
}

impl TreePair {
    pub fn new(t1: Tree, t2: Tree) -> Result<TreePair> {
        if t1.leaf_count() != t2.leaf_count() {
            return Err(Error::LengthMismatch {
                left: t1.leaf_count(),
                right: t2.leaf_count(),
            });
        }
        Ok(TreePair { t1, t2 })
    }

    pub fn t1(&self) -> &Tree {
        &self.t1
    }

    pub fn t2(&self) -> &Tree {
        &self.t2
    }

    pub fn leaf_count(&self) -> usize {
        self.t1.leaf_count()
    }

    pub fn swapped(&self) -> TreePair {
        TreePair {
            t1: self.t2.clone(),
            t2: self.t1.clone(),
        }
    }

    pub fn mirrored(&self) -> TreePair {
        TreePair {
            t1: self.t1.mirror(),
            t2: self.t2.mirror(),
        }
    }

    pub fn search(&self) -> CommonWordSearch<'static> {
        CommonWordSearch::new(&self.t1, &self.t2).expect("pair sizes agree")
    }

    /// Whether both trees parse `w`.
    pub fn parses(&self, w: &Word) -> bool {
        parses(&self.t1, w) && parses(&self.t2, w)
    }
}

impl fmt::Display for TreePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.t1, self.t2)
    }
}

/// The permutation classes of words both trees parse.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ParseWordSet {
    classes: Vec<WordClass>,
    raw_count: u64,
}

impl ParseWordSet {
    /// Builds a set from classes of `n`-letter words, taking every class to
    /// have a full orbit of six words (three when `n = 1`).
    pub fn from_classes(n: usize, classes: impl IntoIterator<Item = WordClass>) -> ParseWordSet {
        let classes: BTreeSet<WordClass> = classes.into_iter().collect();
        let orbit = if n == 1 { 3 } else { 6 };
        ParseWordSet {
            raw_count: orbit * classes.len() as u64,
            classes: classes.into_iter().collect(),
        }
    }

    /// Sorted canonical representatives.
    pub fn classes(&self) -> &[WordClass] {
        &self.classes
    }

    /// Number of words (not classes) before deduplication.
    pub fn raw_count(&self) -> u64 {
        self.raw_count
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn contains(&self, c: &WordClass) -> bool {
        self.classes.binary_search(c).is_ok()
    }
}

impl fmt::Display for ParseWordSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, c) in self.classes.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "}}")
    }
}

/// How [`parse_words_with`] finds the common words.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Strategy {
    /// Every word of `t1`, checked against `t2`.
    #[default]
    Full,
    /// Only the words of `t1` whose root is labeled 0; each class has
    /// exactly two such members.
    RootFixed,
    /// Leaf-by-leaf search over canonical words with early rule checks.
    Pruned,
}

pub fn parse_words(p: &TreePair) -> ParseWordSet {
    parse_words_with(p, Strategy::Full)
}

pub fn parse_words_with(p: &TreePair, strategy: Strategy) -> ParseWordSet {
    let n = p.leaf_count();
    match strategy {
        Strategy::Full => {
            let mut raw = 0u64;
            let mut classes = BTreeSet::new();
            for (w, _) in words_of(p.t1()) {
                if parses(p.t2(), &w) {
                    raw += 1;
                    classes.insert(canonicalize(&w));
                }
            }
            ParseWordSet {
                classes: classes.into_iter().collect(),
                raw_count: raw,
            }
        }
        Strategy::RootFixed => {
            let mut kept = 0u64;
            let mut classes = BTreeSet::new();
            for (w, _) in words_of_root(p.t1(), 0) {
                if parses(p.t2(), &w) {
                    kept += 1;
                    classes.insert(canonicalize(&w));
                }
            }
            ParseWordSet {
                classes: classes.into_iter().collect(),
                raw_count: 3 * kept,
            }
        }
        Strategy::Pruned => ParseWordSet::from_classes(n, p.search().classes()),
    }
}

/// `|parse_words(p)|`, counted without building the set.
pub fn count_parse_words(p: &TreePair) -> u64 {
    p.search().count()
}

/// Catalan number `C(k)`; `C(n - 1)` counts the `n`-leaf trees.
pub fn catalan(k: usize) -> u128 {
    (0..k).fold(1u128, |c, i| c * 2 * (2 * i as u128 + 1) / (i as u128 + 2))
}

/// Every `n`-leaf tree, ordered by left-subtree size, then by left subtree,
/// then by right subtree.
pub fn all_trees(n: usize) -> Box<dyn Iterator<Item = Tree>> {
    match n {
        0 => Box::new(std::iter::empty()),
        1 => Box::new(std::iter::once(Tree::leaf())),
        _ => Box::new((1..n).flat_map(move |left| {
            all_trees(left).flat_map(move |a| all_trees(n - left).map(move |b| Tree::join(&a, &b)))
        })),
    }
}

/// Every `n`-leaf path tree, ordered by path word with `l < r`.
pub fn all_path_trees(n: usize) -> impl Iterator<Item = Tree> {
    let len = n.saturating_sub(2);
    let count: u64 = if n < 2 { 0 } else { 1 << len };
    (0..count).map(move |bits| decode_path(&path_word_from_bits(bits, len)))
}

fn path_word_from_bits(bits: u64, len: usize) -> PathWord {
    PathWord::new(
        (0..len)
            .map(|d| {
                if (bits >> (len - 1 - d)) & 1 == 0 {
                    Side::Left
                } else {
                    Side::Right
                }
            })
            .collect(),
    )
}

/// A uniformly random `n`-leaf tree.
pub fn random_tree<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Tree {
    assert!(n >= 1, "trees have at least one leaf");
    if n == 1 {
        return Tree::leaf();
    }
    let mut r = rng.gen_range(0..catalan(n - 1));
    for left in 1..n {
        let weight = catalan(left - 1) * catalan(n - left - 1);
        if r < weight {
            let a = random_tree(left, rng);
            let b = random_tree(n - left, rng);
            return Tree::join(&a, &b);
        }
        r -= weight;
    }
    unreachable!("weights sum to the Catalan number")
}

/// A uniformly random `n`-leaf path tree.
pub fn random_path_tree<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Tree {
    assert!(n >= 2, "path words need two leaves");
    let len = n - 2;
    decode_path(&PathWord::new(
        (0..len)
            .map(|_| if rng.gen::<bool>() { Side::Right } else { Side::Left })
            .collect(),
    ))
}

/// When some leaf is a bottom leaf of both path trees, the word
/// `0^(k-1) 1 0^(n-k)` that both should parse. The word is built, not
/// checked.
pub fn shared_bottom_witness(p: &TreePair) -> Result<Option<Word>> {
    let n = p.leaf_count();
    if !p.t1().is_path_tree() || !p.t2().is_path_tree() || n < 3 {
        return Err(Error::NotPathTrees);
    }
    let bottoms = |t: &Tree| -> Vec<usize> {
        let i = t.bottom_leaf_pairs()[0];
        vec![i, i + 1]
    };
    let (b1, b2) = (bottoms(p.t1()), bottoms(p.t2()));
    let Some(&shared) = b1.iter().find(|i| b2.contains(i)) else {
        return Ok(None);
    };
    let k = match shared {
        1 => 2,
        i if i == n => n - 1,
        i => i,
    };
    let mut letters = vec![0; n];
    letters[k - 1] = 1;
    Ok(Some(Word::from_letters_unchecked(letters)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tree::Family;

    fn fam(f: Family) -> Tree {
        f.build().unwrap()
    }

    fn pair(a: Family, b: Family) -> TreePair {
        TreePair::new(fam(a), fam(b)).unwrap()
    }

    #[test]
    fn parse_words_examples() {
        let intro = crate::catalog::intro_pair();
        assert_eq!(parse_words(&intro).to_string(), "{0110212}");

        let combs = pair(Family::LeftComb(4), Family::RightComb(4));
        assert_eq!(parse_words(&combs).to_string(), "{0112}");

        for t in all_trees(5) {
            let s = parse_words(&TreePair::new(t.clone(), t).unwrap());
            assert_eq!(s.len(), 8);
            assert_eq!(s.raw_count(), 48);
        }
    }

    #[test]
    fn count_examples() {
        assert_eq!(
            count_parse_words(&pair(Family::LeftCrooked(6), Family::RightCrooked(6))),
            4
        );
        assert_eq!(
            count_parse_words(&pair(Family::LeftComb(7), Family::RightCrooked(7))),
            1
        );
        assert_eq!(count_parse_words(&pair(Family::LeftComb(2), Family::RightComb(2))), 1);
    }

    #[test]
    fn strategies_agree() {
        for n in 1..=5 {
            let trees: Vec<Tree> = all_trees(n).collect();
            for a in &trees {
                for b in &trees {
                    let p = TreePair::new(a.clone(), b.clone()).unwrap();
                    let full = parse_words_with(&p, Strategy::Full);
                    assert_eq!(parse_words_with(&p, Strategy::RootFixed), full, "{p}");
                    assert_eq!(parse_words_with(&p, Strategy::Pruned), full, "{p}");
                    assert_eq!(count_parse_words(&p), full.len() as u64);
                }
            }
        }
    }

    #[test]
    fn tree_spaces() {
        assert_eq!(all_trees(4).count(), 5);
        assert_eq!(all_trees(1).count(), 1);
        assert_eq!(all_path_trees(5).count(), 8);
        assert_eq!(all_path_trees(2).collect::<Vec<_>>(), vec![Tree::cherry()]);
        for n in 1..=9 {
            let trees: BTreeSet<Tree> = all_trees(n).collect();
            assert_eq!(trees.len() as u128, catalan(n - 1));
        }
        for n in 2..=10 {
            let trees: BTreeSet<Tree> = all_path_trees(n).collect();
            assert_eq!(trees.len(), 1 << (n - 2));
            assert!(trees.iter().all(Tree::is_path_tree));
        }
        assert_eq!(all_path_trees(4).next().unwrap(), fam(Family::LeftComb(4)));
    }

    #[test]
    fn shared_bottom_examples() {
        let crooked = pair(Family::LeftCrooked(5), Family::RightCrooked(5));
        assert_eq!(shared_bottom_witness(&crooked).unwrap().unwrap().to_string(), "00100");
        let combs = pair(Family::LeftComb(4), Family::RightComb(4));
        assert_eq!(shared_bottom_witness(&combs).unwrap(), None);
        let small = pair(Family::LeftComb(3), Family::RightComb(3));
        assert_eq!(shared_bottom_witness(&small).unwrap().unwrap().to_string(), "010");
        for p in [&crooked, &small] {
            assert!(p.parses(&shared_bottom_witness(p).unwrap().unwrap()));
        }
        let bushy = TreePair::new("((**)(**))".parse().unwrap(), fam(Family::LeftComb(4))).unwrap();
        assert_eq!(shared_bottom_witness(&bushy), Err(Error::NotPathTrees));
    }

    #[test]
    fn pair_rejects_unequal_sizes() {
        assert_eq!(
            TreePair::new(Tree::leaf(), Tree::cherry()),
            Err(Error::LengthMismatch { left: 1, right: 2 })
        );
    }
}
