//! Slow, direct computations that the fast paths are checked against.

use std::collections::BTreeSet;

use crate::grammar::{parses, words_of, Letter};
use crate::tree::Tree;

/// Every word over `{0, 1, 2}` of length `n`, in lexicographic order.
pub fn all_words(n: usize) -> impl Iterator<Item = Vec<Letter>> {
    let total = 3u64.pow(n as u32);
    (0..total).map(move |mut code| {
        let mut w = vec![0; n];
        for slot in w.iter_mut().rev() {
            *slot = (code % 3) as Letter;
            code /= 3;
        }
        w
    })
}

/// Every word (not class) both trees parse, by filtering the words of `t1`.
pub fn common_words(t1: &Tree, t2: &Tree) -> BTreeSet<Vec<Letter>> {
    words_of(t1)
        .filter(|(w, _)| parses(t2, w))
        .map(|(w, _)| w.into_letters())
        .collect()
}

/// `(|A_m|, |B_m|)` by listing the alternating words `0 v_2 … v_m`.
pub fn alternating_by_listing(m: usize) -> (u64, u64) {
    fn walk(word: &mut Vec<Letter>, m: usize, counts: &mut (u64, u64)) {
        if word.len() == m {
            let last = *word.last().expect("nonempty");
            if last != 0 {
                counts.0 += 1;
            }
            if last != 1 {
                counts.1 += 1;
            }
            return;
        }
        let prev = *word.last().expect("nonempty");
        for next in 0..3 {
            if next != prev {
                word.push(next);
                walk(word, m, counts);
                word.pop();
            }
        }
    }
    let mut counts = (0, 0);
    if m >= 2 {
        walk(&mut vec![0], m, &mut counts);
    }
    counts
}
