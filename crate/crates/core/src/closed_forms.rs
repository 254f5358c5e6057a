//! Closed-form parse word sets and counts for comb, turn and crooked pairs.
//!
//! The `*_literal` functions return theorem instantiations before
//! canonicalization, for comparison with hand-written forms.

use std::collections::HashMap;

use num_rational::Ratio;

use crate::enumeration::ParseWordSet;
use crate::error::{Error, Result};
use crate::grammar::{canonicalize, third, Letter, Word};
use crate::tree::Tree;

/// Largest `m` or `k` accepted by [`a_of`]; keeps every value inside `u64`.
pub const MAX_TURN_PARAM: u32 = 30;

/// The representative of `x` modulo 3 in `0..3`.
pub fn mod3(x: i64) -> Letter {
    x.rem_euclid(3) as Letter
}

/// `w^x`: copies of `w` truncated at `|w|·x` letters.
pub fn truncated_power(w: &[Letter], x: Ratio<i64>) -> Result<Vec<Letter>> {
    let m = w.len() as i64;
    if m == 0 {
        return Err(Error::bad("truncated power of the empty word"));
    }
    if x < Ratio::from_integer(0) {
        return Err(Error::bad(format!("negative exponent {x}")));
    }
    let len = x * m;
    if !len.is_integer() {
        return Err(Error::bad(format!("exponent {x} does not divide length {m}")));
    }
    Ok(w.iter().copied().cycle().take(len.to_integer() as usize).collect())
}

const ZOT: [Letter; 3] = [0, 1, 2];

fn zot(num: i64, den: i64) -> Result<Vec<Letter>> {
    truncated_power(&ZOT, Ratio::new(num, den))
}

fn reversed(mut v: Vec<Letter>) -> Vec<Letter> {
    v.reverse();
    v
}

fn word(letters: Vec<Letter>) -> Word {
    Word::from_letters_unchecked(letters)
}

fn set_of(n: usize, words: Vec<Word>) -> ParseWordSet {
    ParseWordSet::from_classes(n, words.iter().map(canonicalize))
}

fn need(cond: bool, what: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::BadParams(what()))
    }
}

pub fn comb_comb_literal(n: usize) -> Result<Vec<Word>> {
    need(n >= 2, || format!("comb-comb needs n >= 2, got {n}"))?;
    let mut w = vec![0];
    w.extend(std::iter::repeat_n(1, n - 2));
    w.push(if n.is_multiple_of(2) { 2 } else { 0 });
    Ok(vec![word(w)])
}

/// Common classes of `LeftComb(n)` and `RightComb(n)`.
pub fn comb_comb_words(n: usize) -> Result<ParseWordSet> {
    Ok(set_of(n, comb_comb_literal(n)?))
}

pub fn turn_turn_literal(m: usize, n: usize) -> Result<Vec<Word>> {
    need(m >= 1 && n >= 3, || {
        format!("turn-turn needs m >= 1, n >= 3, got m={m}, n={n}")
    })?;
    let build = |a: Letter, b: Letter, c: Letter| {
        let mut w = vec![0, a];
        w.extend(std::iter::repeat_n(1, n - 3));
        w.push(b);
        w.extend(std::iter::repeat_n(c, m));
        word(w)
    };
    Ok(if n % 2 == 1 {
        vec![build(0, 2, 0), build(2, 0, 0)]
    } else {
        vec![build(2, 2, 0), build(0, 0, 0)]
    })
}

/// Common classes of `LeftTurn(m, n)` and `RightTurn(1, m + n - 1)`.
pub fn turn_turn_words(m: usize, n: usize) -> Result<ParseWordSet> {
    Ok(set_of(m + n, turn_turn_literal(m, n)?))
}

pub fn comb_crooked_literal(n: usize) -> Result<Vec<Word>> {
    need(n >= 2, || format!("comb-crooked needs n >= 2, got {n}"))?;
    let k = n as i64;
    let mut w = vec![mod3(1 - k)];
    if n.is_multiple_of(2) {
        w.extend(reversed(zot(k, 6)?));
        w.extend(zot(k - 2, 6)?);
    } else {
        w.extend(reversed(zot(k - 3, 6)?));
        w.extend(zot(k + 1, 6)?);
    }
    Ok(vec![word(w)])
}

/// Common classes of `LeftComb(n)` and `RightCrooked(n)`.
pub fn comb_crooked_words(n: usize) -> Result<ParseWordSet> {
    Ok(set_of(n, comb_crooked_literal(n)?))
}

pub fn comb_crooked2_literal(n: usize) -> Result<Vec<Word>> {
    need(n >= 3, || format!("comb-crooked2 needs n >= 3, got {n}"))?;
    let k = n as i64;
    let mut stem = vec![mod3(2 - k)];
    if n % 2 == 1 {
        stem.extend(reversed(zot(k - 1, 6)?));
        stem.extend(zot(k - 3, 6)?);
    } else {
        stem.extend(reversed(zot(k - 4, 6)?));
        stem.extend(zot(k, 6)?);
    }
    Ok([mod3(2 - k), mod3(-k)]
        .into_iter()
        .map(|last| {
            let mut w = stem.clone();
            w.push(last);
            word(w)
        })
        .collect())
}

/// Common classes of `LeftComb(n)` and `LeftCrooked(n)`.
pub fn comb_crooked2_words(n: usize) -> Result<ParseWordSet> {
    Ok(set_of(n, comb_crooked2_literal(n)?))
}

/// Class count of `LeftCrooked(n)` with `RightCrooked(n)`.
pub fn crooked_crooked_count(n: usize) -> Result<u64> {
    need((2..=64).contains(&n), || {
        format!("crooked-crooked needs 2 <= n <= 64, got {n}")
    })?;
    Ok(1 << (n / 2 - 1))
}

/// Whether `w` is a common parse word of `LeftCrooked(n)` and
/// `RightCrooked(n)`, `n = |w|`.
///
/// Odd `n`: mirrored letters agree and avoid the center letter. Even `n`:
/// the two middle letters differ and the mirrored letters agree and avoid
/// the third letter `b` of that middle pair.
pub fn crooked_crooked_membership(w: &Word) -> bool {
    let l = w.letters();
    let n = l.len();
    if n < 2 {
        return false;
    }
    let half = n / 2;
    let (b, outer) = if n % 2 == 1 {
        (l[half], half)
    } else {
        let (x, y) = (l[half - 1], l[half]);
        if x == y {
            return false;
        }
        (third(x, y), half - 1)
    };
    (0..outer).all(|i| l[i] == l[n - 1 - i] && l[i] != b)
}

/// `2^(l-1)` where `l` is the level of leaf 1: the class count of `t` with
/// `LeftComb(n)`.
pub fn comb_general_count(t: &Tree) -> Result<u64> {
    need(t.leaf_count() >= 2, || "comb-general needs n >= 2".into())?;
    let l = t.leaf_level(1)?;
    Ok(1 << (l - 1))
}

/// Class count of `LeftTurn(m, n)` with `RightTurn(k, m + n - k)`.
pub fn turn_pair_count(m: usize, n: usize, k: usize) -> Result<u64> {
    need(m >= 1 && k >= 1 && n >= 2 && m + n >= k + 2, || {
        format!("turn pair needs m, k >= 1, n >= 2, m + n - k >= 2; got m={m}, n={n}, k={k}")
    })?;
    if n <= k {
        Ok(1)
    } else if n == k + 1 {
        a_of(m as u32, k as u32)
    } else {
        Ok(2 * a_of(m as u32, k as u32)?)
    }
}

/// `a(m, k)`, the class count of `LeftTurn(m, k + 1)` with
/// `RightTurn(k, m + 1)`, from the closed-form bilinear product
/// `u(m)ᵀ M u(k) / 4` with `u(x) = (2/3·2^x, 1, 5/3·(-1)^x)`.
pub fn a_of(m: u32, k: u32) -> Result<u64> {
    need(
        (1..=MAX_TURN_PARAM).contains(&m) && (1..=MAX_TURN_PARAM).contains(&k),
        || format!("a(m, k) needs 1 <= m, k <= {MAX_TURN_PARAM}; got ({m}, {k})"),
    )?;
    type Q = Ratio<i128>;
    let r = |n: i128, d: i128| Q::new(n, d);
    let u = |x: u32| -> [Q; 3] {
        let sign = if x.is_multiple_of(2) { 1 } else { -1 };
        [r(2 << x, 3), r(1, 1), r(5 * sign, 3)]
    };
    let mat = [
        [r(1, 2), r(1, 1), r(1, 1)],
        [r(1, 1), r(1, 1), r(-1, 1)],
        [r(1, 1), r(-1, 1), r(1, 5)],
    ];
    let (um, uk) = (u(m), u(k));
    let mut total = r(0, 1);
    for i in 0..3 {
        for j in 0..3 {
            total += um[i] * mat[i][j] * uk[j];
        }
    }
    total /= r(4, 1);
    assert!(
        total.is_integer() && total >= r(0, 1),
        "a({m}, {k}) = {total} is not a count"
    );
    Ok(total.to_integer() as u64)
}

/// `a(m, k)` computed from the six initial values and the recurrence
/// `a(m+3) = 2a(m+2) + a(m+1) - 2a(m)` in each argument, memoized.
#[derive(Debug, Default)]
pub struct TurnCountTable {
    memo: HashMap<(u32, u32), i128>,
}

impl TurnCountTable {
    pub fn new() -> TurnCountTable {
        let mut memo = HashMap::new();
        for (m, k, a) in [(1, 1, 1), (1, 2, 1), (1, 3, 1), (2, 2, 4), (2, 3, 5), (3, 3, 3)] {
            memo.insert((m, k), a);
            memo.insert((k, m), a);
        }
        TurnCountTable { memo }
    }

    pub fn get(&mut self, m: u32, k: u32) -> Result<u64> {
        need(
            (1..=MAX_TURN_PARAM).contains(&m) && (1..=MAX_TURN_PARAM).contains(&k),
            || format!("a(m, k) needs 1 <= m, k <= {MAX_TURN_PARAM}; got ({m}, {k})"),
        )?;
        Ok(self.value(m, k) as u64)
    }

    fn value(&mut self, m: u32, k: u32) -> i128 {
        if let Some(&a) = self.memo.get(&(m, k)) {
            return a;
        }
        // step down the larger argument; both are >= 1 and one exceeds 3
        let a = if m >= k {
            2 * self.value(m - 1, k) + self.value(m - 2, k) - 2 * self.value(m - 3, k)
        } else {
            2 * self.value(m, k - 1) + self.value(m, k - 2) - 2 * self.value(m, k - 3)
        };
        self.memo.insert((m, k), a);
        a
    }
}

/// `(|A_m|, |B_m|)`: alternating words `0 v_2 … v_m` with `v_2 ≠ 0` and
/// `v_m ≠ 0`, respectively `v_m ≠ 1`.
pub fn alternating_counts(m: u32) -> Result<(u64, u64)> {
    need((2..=62).contains(&m), || {
        format!("alternating counts need 2 <= m <= 62, got {m}")
    })?;
    let p = 1i64 << m;
    let s = if m.is_multiple_of(2) { 1 } else { -1 };
    Ok((((p + 2 * s) / 3) as u64, ((p - s) / 3) as u64))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumeration::{parse_words, TreePair};
    use crate::tree::Family;

    fn pair(a: Family, b: Family) -> TreePair {
        TreePair::new(a.build().unwrap(), b.build().unwrap()).unwrap()
    }

    fn shown(s: &ParseWordSet) -> String {
        s.to_string()
    }

    #[test]
    fn mod3_examples() {
        assert_eq!(mod3(-3), 0);
        assert_eq!(mod3(1 - 7), 0);
        assert_eq!(mod3(2 - 4), 1);
    }

    #[test]
    fn truncation() {
        let lr = [0, 1];
        assert_eq!(
            truncated_power(&lr, Ratio::new(7, 2)).unwrap(),
            vec![0, 1, 0, 1, 0, 1, 0]
        );
        assert_eq!(zot(2, 6).unwrap(), vec![0]);
        assert!(zot(1, 6).is_err());
        assert!(zot(-1, 3).is_err());
    }

    #[test]
    fn comb_comb_examples() {
        assert_eq!(shown(&comb_comb_words(4).unwrap()), "{0112}");
        assert_eq!(shown(&comb_comb_words(5).unwrap()), "{01110}");
        assert_eq!(shown(&comb_comb_words(2).unwrap()), "{01}");
        assert!(comb_comb_words(1).is_err());
    }

    #[test]
    fn turn_turn_examples() {
        assert_eq!(shown(&turn_turn_words(1, 3).unwrap()), "{0010, 0100}");
        let lit: Vec<String> = turn_turn_literal(2, 4).unwrap().iter().map(|w| w.to_string()).collect();
        assert_eq!(lit, ["021200", "001000"]);
        for (m, n) in [(1, 3), (2, 4), (3, 5), (4, 6)] {
            assert_eq!(turn_turn_words(m, n).unwrap().len(), 2);
        }
    }

    #[test]
    fn comb_crooked_examples() {
        assert_eq!(comb_crooked_literal(2).unwrap()[0].to_string(), "20");
        assert_eq!(shown(&comb_crooked_words(2).unwrap()), "{01}");
        assert_eq!(comb_crooked_literal(4).unwrap()[0].to_string(), "0100");
        assert_eq!(comb_crooked_literal(7).unwrap()[0].to_string(), "0100120");
        let lit: Vec<String> = comb_crooked2_literal(4)
            .unwrap()
            .iter()
            .map(|w| w.to_string())
            .collect();
        assert_eq!(lit, ["1011", "1012"]);
        assert_eq!(shown(&comb_crooked2_words(4).unwrap()), "{0100, 0102}");
    }

    #[test]
    fn families_match_enumeration() {
        for n in 2..=10 {
            let got = parse_words(&pair(Family::LeftComb(n), Family::RightComb(n)));
            assert_eq!(got, comb_comb_words(n).unwrap(), "comb-comb {n}");
            let got = parse_words(&pair(Family::LeftComb(n), Family::RightCrooked(n)));
            assert_eq!(got, comb_crooked_words(n).unwrap(), "comb-crooked {n}");
        }
        for n in 3..=10 {
            let got = parse_words(&pair(Family::LeftComb(n), Family::LeftCrooked(n)));
            assert_eq!(got, comb_crooked2_words(n).unwrap(), "comb-crooked2 {n}");
        }
        for m in 1..=4 {
            for n in 3..=8 {
                let p = pair(Family::LeftTurn(m, n), Family::RightTurn(1, m + n - 1));
                assert_eq!(parse_words(&p), turn_turn_words(m, n).unwrap(), "turn-turn {m},{n}");
            }
        }
    }

    #[test]
    fn crooked_examples() {
        assert_eq!(crooked_crooked_count(2).unwrap(), 1);
        assert_eq!(crooked_crooked_count(6).unwrap(), 4);
        assert_eq!(crooked_crooked_count(7).unwrap(), 4);
        let w = |s: &str| s.parse::<Word>().unwrap();
        assert!(crooked_crooked_membership(&w("010")));
        assert!(!crooked_crooked_membership(&w("000")));
        assert!(!crooked_crooked_membership(&w("0110")));
        // "for some b" alone would accept this; b is forced by the middle pair
        assert!(!crooked_crooked_membership(&w("0120")));
        assert!(crooked_crooked_membership(&w("0100")));
    }

    #[test]
    fn comb_general_examples() {
        let c = |f: Family| comb_general_count(&f.build().unwrap()).unwrap();
        assert_eq!(c(Family::RightComb(6)), 1);
        assert_eq!(c(Family::LeftComb(5)), 8);
        assert_eq!(c(Family::LeftCrooked(6)), 2);
    }

    #[test]
    fn turn_counts() {
        assert_eq!(turn_pair_count(3, 3, 3).unwrap(), 1);
        assert_eq!(turn_pair_count(2, 4, 2).unwrap(), 8);
        assert_eq!(turn_pair_count(2, 4, 3).unwrap(), 5);
        assert!(turn_pair_count(1, 2, 3).is_err());
        for (m, k, a) in [(1, 1, 1), (1, 2, 1), (1, 3, 1), (2, 2, 4), (2, 3, 5), (3, 3, 3)] {
            assert_eq!(a_of(m, k).unwrap(), a);
        }
        let mut table = TurnCountTable::new();
        for m in 1..=MAX_TURN_PARAM {
            for k in 1..=MAX_TURN_PARAM {
                assert_eq!(table.get(m, k).unwrap(), a_of(m, k).unwrap(), "a({m}, {k})");
            }
        }
        assert!(a_of(0, 1).is_err());
    }

    #[test]
    fn alternating_examples() {
        assert_eq!(alternating_counts(2).unwrap(), (2, 1));
        assert_eq!(alternating_counts(3).unwrap(), (2, 3));
        assert_eq!(alternating_counts(4).unwrap(), (6, 5));
        assert!(alternating_counts(1).is_err());
    }
}
