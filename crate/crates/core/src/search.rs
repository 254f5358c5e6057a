//! Depth-first search for the words two trees both parse.
//!
//! Leaves are assigned left to right. As soon as the last leaf below an
//! internal vertex is fixed, that vertex's label is forced (or the branch
//! dies), in both trees at once. Only words in first-occurrence form are
//! generated, so each permutation class is visited exactly once, in
//! lexicographic order.

use std::borrow::Cow;
use std::ops::ControlFlow;

use crate::error::{Error, Result};
use crate::grammar::{third, Letter, Word, WordClass};
use crate::tree::Tree;

/// Per-tree completion schedule, reusable across every pair the tree is in.
#[derive(Clone, Debug)]
pub struct Schedule {
    /// Arena slot of leaf `i + 1`.
    leaf_slot: Vec<u32>,
    /// `(parent, left, right)` triples that become decidable once leaf
    /// `i + 1` is labeled, children before parents.
    completes: Vec<Vec<(u32, u32, u32)>>,
    slots: usize,
}

impl Schedule {
    pub fn leaf_count(&self) -> usize {
        self.leaf_slot.len()
    }

    pub fn new(t: &Tree) -> Schedule {
        let n = t.leaf_count();
        let mut completes: Vec<Vec<(u32, u32, u32, usize)>> = vec![Vec::new(); n];
        for v in t.internal_vertices() {
            let (l, r) = t.children(v).expect("internal");
            let hi = t.subtree_span(v).hi();
            completes[hi - 1].push((v.index() as u32, l.index() as u32, r.index() as u32, t.level(v)));
        }
        let completes = completes
            .into_iter()
            .map(|mut list| {
                list.sort_by_key(|e| std::cmp::Reverse(e.3));
                list.into_iter().map(|(p, l, r, _)| (p, l, r)).collect()
            })
            .collect();
        Schedule {
            leaf_slot: (1..=n)
                .map(|i| t.leaf_vertex(i).expect("leaf").index() as u32)
                .collect(),
            completes,
            slots: t.vertex_count(),
        }
    }

    /// Labels leaf `i` (0-based) and every vertex it completes; false on a
    /// rule violation.
    #[inline]
    fn place(&self, i: usize, letter: Letter, labels: &mut [Letter]) -> bool {
        labels[self.leaf_slot[i] as usize] = letter;
        for &(p, l, r) in &self.completes[i] {
            let (a, b) = (labels[l as usize], labels[r as usize]);
            if a == b {
                return false;
            }
            labels[p as usize] = third(a, b);
        }
        true
    }
}

/// Enumerates canonical representatives of the classes both trees parse.
pub struct CommonWordSearch<'a> {
    n: usize,
    first: Cow<'a, Schedule>,
    second: Cow<'a, Schedule>,
}

impl CommonWordSearch<'static> {
    pub fn new(t1: &Tree, t2: &Tree) -> Result<CommonWordSearch<'static>> {
        Self::build(Cow::Owned(Schedule::new(t1)), Cow::Owned(Schedule::new(t2)))
    }
}

impl<'a> CommonWordSearch<'a> {
    /// A search over precomputed schedules.
    pub fn with_schedules(s1: &'a Schedule, s2: &'a Schedule) -> Result<CommonWordSearch<'a>> {
        Self::build(Cow::Borrowed(s1), Cow::Borrowed(s2))
    }

    fn build(first: Cow<'a, Schedule>, second: Cow<'a, Schedule>) -> Result<CommonWordSearch<'a>> {
        if first.leaf_count() != second.leaf_count() {
            return Err(Error::LengthMismatch {
                left: first.leaf_count(),
                right: second.leaf_count(),
            });
        }
        Ok(CommonWordSearch {
            n: first.leaf_count(),
            first,
            second,
        })
    }

    /// Calls `visit` with each canonical common word, in lexicographic order,
    /// until it breaks.
    pub fn for_each<B>(&self, mut visit: impl FnMut(&[Letter]) -> ControlFlow<B>) -> ControlFlow<B> {
        let mut la = vec![0; self.first.slots];
        let mut lb = vec![0; self.second.slots];
        let mut word = vec![0; self.n];
        self.descend(0, 0, &mut word, &mut la, &mut lb, &mut visit)
    }

    fn descend<B>(
        &self,
        pos: usize,
        used: Letter,
        word: &mut [Letter],
        la: &mut [Letter],
        lb: &mut [Letter],
        visit: &mut impl FnMut(&[Letter]) -> ControlFlow<B>,
    ) -> ControlFlow<B> {
        if pos == self.n {
            return visit(word);
        }
        // first-occurrence form: the next letter is at most one past the
        // largest used so far
        let top = if pos == 0 { 0 } else { (used + 1).min(2) };
        for letter in 0..=top {
            if self.first.place(pos, letter, la) && self.second.place(pos, letter, lb) {
                word[pos] = letter;
                self.descend(pos + 1, used.max(letter), word, la, lb, visit)?;
            }
        }
        ControlFlow::Continue(())
    }

    pub fn count(&self) -> u64 {
        let mut count = 0u64;
        let _ = self.for_each(|_| {
            count += 1;
            ControlFlow::<()>::Continue(())
        });
        count
    }

    /// The lexicographically first canonical common word.
    pub fn first(&self) -> Option<Word> {
        self.find(|_| true)
    }

    pub fn find(&self, mut pred: impl FnMut(&[Letter]) -> bool) -> Option<Word> {
        match self.for_each(|w| {
            if pred(w) {
                ControlFlow::Break(Word::from_letters_unchecked(w.to_vec()))
            } else {
                ControlFlow::Continue(())
            }
        }) {
            ControlFlow::Break(w) => Some(w),
            ControlFlow::Continue(()) => None,
        }
    }

    pub fn classes(&self) -> Vec<WordClass> {
        let mut out = Vec::new();
        let _ = self.for_each(|w| {
            out.push(crate::grammar::canonicalize(&Word::from_letters_unchecked(w.to_vec())));
            ControlFlow::<()>::Continue(())
        });
        out
    }
}
