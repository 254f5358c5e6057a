//! The grammar with start symbols 0, 1, 2 and rules `0 -> 12 | 21`,
//! `1 -> 02 | 20`, `2 -> 01 | 10`.
//!
//! A rule applies exactly when a vertex's two children carry distinct letters
//! and the vertex carries the remaining one, so a leaf word either forces the
//! whole labeling bottom-up or admits none.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::tree::{Tree, VertexId};

pub type Letter = u8;

/// The letter different from both `a` and `b` (which must differ).
#[inline]
pub fn third(a: Letter, b: Letter) -> Letter {
    3 - a - b
}

/// A word over `{0, 1, 2}`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn new(letters: Vec<Letter>) -> Result<Word> {
        if letters.iter().any(|&l| l > 2) {
            return Err(Error::InvalidWord(letters.iter().map(|l| l.to_string()).collect()));
        }
        Ok(Word(letters))
    }

    pub(crate) fn from_letters_unchecked(letters: Vec<Letter>) -> Word {
        debug_assert!(letters.iter().all(|&l| l < 3));
        Word(letters)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `|w|_letter`.
    pub fn count(&self, letter: Letter) -> usize {
        self.0.iter().filter(|&&l| l == letter).count()
    }

    pub fn permuted(&self, p: Permutation) -> Word {
        Word(self.0.iter().map(|&l| p.apply(l)).collect())
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &l in &self.0 {
            write!(f, "{}", char::from(b'0' + l))?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Word> {
        s.bytes()
            .map(|b| match b {
                b'0'..=b'2' => Ok(b - b'0'),
                _ => Err(Error::InvalidWord(s.to_string())),
            })
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }
}

impl Serialize for Word {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// A permutation of the alphabet, as the images of 0, 1, 2.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Permutation([Letter; 3]);

impl Permutation {
    pub const ALL: [Permutation; 6] = [
        Permutation([0, 1, 2]),
        Permutation([0, 2, 1]),
        Permutation([1, 0, 2]),
        Permutation([1, 2, 0]),
        Permutation([2, 0, 1]),
        Permutation([2, 1, 0]),
    ];

    pub fn new(images: [Letter; 3]) -> Result<Permutation> {
        let mut sorted = images;
        sorted.sort_unstable();
        if sorted != [0, 1, 2] {
            return Err(Error::bad(format!("{images:?} is not a permutation of 0,1,2")));
        }
        Ok(Permutation(images))
    }

    #[inline]
    pub fn apply(&self, l: Letter) -> Letter {
        self.0[l as usize]
    }

    /// The transposition (or identity) sending `from` to `to`.
    pub fn sending(from: Letter, to: Letter) -> Permutation {
        let mut images = [0, 1, 2];
        images.swap(from as usize, to as usize);
        Permutation(images)
    }
}

/// Letters assigned to every vertex of a tree, indexed by [`VertexId`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Labeling(Vec<Letter>);

impl Labeling {
    pub fn label(&self, v: VertexId) -> Letter {
        self.0[v.index()]
    }

    pub fn root(&self) -> Letter {
        self.0[0]
    }

    pub fn labels(&self) -> &[Letter] {
        &self.0
    }

    /// Checks the rule at every internal vertex of `t`.
    pub fn is_valid_for(&self, t: &Tree) -> bool {
        self.0.len() == t.vertex_count()
            && t.internal_vertices().all(|v| {
                let (l, r) = t.children(v).expect("internal vertex");
                let (a, b) = (self.label(l), self.label(r));
                a != b && self.label(v) == third(a, b)
            })
    }

    /// The leaf word read left to right.
    pub fn leaf_word(&self, t: &Tree) -> Word {
        Word(
            (1..=t.leaf_count())
                .map(|i| self.label(t.leaf_vertex(i).expect("leaf in range")))
                .collect(),
        )
    }

    /// Labeled literal: a leaf is its letter, an internal vertex is
    /// `letter(left right)` without separators, e.g. `2(01)`.
    pub fn render(&self, t: &Tree) -> String {
        fn go(l: &Labeling, t: &Tree, v: VertexId, out: &mut String) {
            out.push(char::from(b'0' + l.label(v)));
            if let Some((a, b)) = t.children(v) {
                out.push('(');
                go(l, t, a, out);
                go(l, t, b, out);
                out.push(')');
            }
        }
        let mut out = String::new();
        go(self, t, t.root(), &mut out);
        out
    }
}

/// The unique labeling of `t` with leaf word `w`, if the grammar admits one.
pub fn parse(t: &Tree, w: &Word) -> Result<Option<Labeling>> {
    if w.len() != t.leaf_count() {
        return Err(Error::LengthMismatch {
            left: t.leaf_count(),
            right: w.len(),
        });
    }
    let mut labels = vec![0 as Letter; t.vertex_count()];
    Ok(label_into(t, w, &mut labels).then_some(Labeling(labels)))
}

/// Fills `labels` bottom-up; false on a rule violation.
fn label_into(t: &Tree, w: &Word, labels: &mut [Letter]) -> bool {
    for (i, &l) in w.letters().iter().enumerate() {
        labels[t.leaf_vertex(i + 1).expect("lengths checked").index()] = l;
    }
    // reverse pre-order visits children before parents
    for v in (0..t.vertex_count()).rev() {
        let v = VertexId::from_index(v);
        if let Some((l, r)) = t.children(v) {
            let (a, b) = (labels[l.index()], labels[r.index()]);
            if a == b {
                return false;
            }
            labels[v.index()] = third(a, b);
        }
    }
    true
}

/// `parse(t, w).is_some()` without allocating for trees of up to 64 leaves.
pub fn parses(t: &Tree, w: &Word) -> bool {
    const INLINE: usize = 127;
    if w.len() != t.leaf_count() {
        return false;
    }
    if t.vertex_count() <= INLINE {
        label_into(t, w, &mut [0; INLINE])
    } else {
        label_into(t, w, &mut vec![0; t.vertex_count()])
    }
}

/// The letter `r` with `|w|_r ≡ |w| (mod 2)` while the other two counts have
/// the opposite parity; `None` when no tree can parse `w`.
pub fn root_letter_by_parity(w: &Word) -> Option<Letter> {
    let n = w.len() % 2;
    let parity = [0u8, 1, 2].map(|l| w.count(l) % 2);
    let matching: Vec<Letter> = (0..3).filter(|&l| parity[l as usize] == n).collect();
    match matching[..] {
        [r] => Some(r),
        _ => None,
    }
}

/// Every word `t` parses, with its labeling.
///
/// Words are produced in order of (root letter, rule choices): the root letter
/// runs over 0, 1, 2, and each internal vertex in pre-order picks its children
/// as (smaller, larger) on bit 0 or (larger, smaller) on bit 1, the first
/// internal vertex being the most significant choice.
pub fn words_of(t: &Tree) -> WordsOf<'_> {
    WordsOf::new(t, 0..3)
}

/// The words of `t` whose root label is `root`.
pub fn words_of_root(t: &Tree, root: Letter) -> WordsOf<'_> {
    WordsOf::new(t, root..root + 1)
}

pub struct WordsOf<'a> {
    tree: &'a Tree,
    internal: Vec<(VertexId, VertexId, VertexId)>,
    roots: std::ops::Range<Letter>,
    root: Letter,
    choice: u64,
    choices: u64,
    done: bool,
}

impl<'a> WordsOf<'a> {
    fn new(tree: &'a Tree, roots: std::ops::Range<Letter>) -> Self {
        let internal: Vec<_> = tree
            .internal_vertices()
            .map(|v| {
                let (l, r) = tree.children(v).expect("internal");
                (v, l, r)
            })
            .collect();
        assert!(internal.len() < 64, "trees with more than 64 leaves are out of range");
        let choices = 1u64 << internal.len();
        WordsOf {
            tree,
            internal,
            root: roots.start,
            done: roots.is_empty(),
            roots,
            choice: 0,
            choices,
        }
    }

    /// Total number of words this stream yields.
    pub fn total(&self) -> u64 {
        self.roots.len() as u64 * self.choices
    }
}

impl Iterator for WordsOf<'_> {
    type Item = (Word, Labeling);

    fn next(&mut self) -> Option<Self::Item> {
        if self.done {
            return None;
        }
        let mut labels = vec![0 as Letter; self.tree.vertex_count()];
        labels[0] = self.root;
        let top = self.internal.len();
        for (j, &(v, l, r)) in self.internal.iter().enumerate() {
            let p = labels[v.index()];
            let (lo, hi) = match p {
                0 => (1, 2),
                1 => (0, 2),
                _ => (0, 1),
            };
            let swap = (self.choice >> (top - 1 - j)) & 1 == 1;
            let (a, b) = if swap { (hi, lo) } else { (lo, hi) };
            labels[l.index()] = a;
            labels[r.index()] = b;
        }
        self.choice += 1;
        if self.choice == self.choices {
            self.choice = 0;
            self.root += 1;
            self.done = self.root >= self.roots.end;
        }
        let labeling = Labeling(labels);
        Some((labeling.leaf_word(self.tree), labeling))
    }
}

/// An equivalence class of words under the six alphabet permutations, named
/// by its lexicographically least member.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct WordClass(Word);

impl WordClass {
    pub fn canonical(&self) -> &Word {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for WordClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Relabels letters in order of first appearance, which is the lexicographic
/// minimum over all six permutations.
pub fn canonicalize(w: &Word) -> WordClass {
    WordClass(Word(canonical_letters(w.letters())))
}

pub(crate) fn canonical_letters(letters: &[Letter]) -> Vec<Letter> {
    let mut map = [u8::MAX; 3];
    let mut next = 0;
    letters
        .iter()
        .map(|&l| {
            if map[l as usize] == u8::MAX {
                map[l as usize] = next;
                next += 1;
            }
            map[l as usize]
        })
        .collect()
}

/// Whether some permutation of `w` has the named shape.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ClassFlags {
    /// `00v`: the first two letters agree.
    pub has_00v: bool,
    /// `v00`: the last two letters agree.
    pub has_v00: bool,
    /// `u00v`: some two adjacent letters agree.
    pub has_u00v: bool,
    /// `01v1`: `w1 != w2` and `wn == w2`.
    pub is_01v1: bool,
    /// `01v00`: `w1 != w2` and `w(n-1) == wn == w1`.
    pub is_01v00: bool,
    /// `01v2`: `w1`, `w2`, `wn` pairwise distinct.
    pub is_01v2: bool,
}

/// Permutation-invariant pattern flags. Patterns longer than the word are
/// reported false (`01v1`, `01v2` need 3 letters, `01v00` needs 4).
pub fn class_predicates(c: &WordClass) -> Result<ClassFlags> {
    let w = c.canonical().letters();
    let n = w.len();
    if n < 2 {
        return Err(Error::TooShort { len: n, min: 2 });
    }
    let opens_01 = w[0] != w[1];
    Ok(ClassFlags {
        has_00v: w[0] == w[1],
        has_v00: w[n - 2] == w[n - 1],
        has_u00v: w.windows(2).any(|p| p[0] == p[1]),
        is_01v1: n >= 3 && opens_01 && w[n - 1] == w[1],
        is_01v00: n >= 4 && opens_01 && w[n - 2] == w[n - 1] && w[n - 1] == w[0],
        is_01v2: n >= 3 && opens_01 && w[n - 1] != w[0] && w[n - 1] != w[1],
    })
}
