//! The registered claims and how each is checked at one size `n`.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::oracles;
use super::report::{params, ClaimKind, Counterexample, Params, Point};
use crate::closed_forms::{
    a_of, alternating_counts, comb_comb_words, comb_crooked2_words, comb_crooked_words, comb_general_count,
    crooked_crooked_count, crooked_crooked_membership, turn_pair_count, turn_turn_words, TurnCountTable,
    MAX_TURN_PARAM,
};
use crate::enumeration::{
    all_path_trees, all_trees, catalan, count_parse_words, parse_words, random_tree, shared_bottom_witness, TreePair,
};
use crate::grammar::{class_predicates, root_letter_by_parity, words_of, ClassFlags, Word, WordClass};
use crate::reductions::{
    attach_cherry, crookedness, duplicate_leaf, splice_solve, triplicate_leaf, triplication_word_lift,
};
use crate::search::{CommonWordSearch, Schedule};
use crate::tree::{Family, Tree};
use crate::vector::{for_each_nonzero_tuple, tau};

/// Binary-tree spaces are swept exhaustively up to this size and sampled
/// above it.
pub const EXHAUSTIVE_BINARY_MAX: usize = 8;

/// Largest turn pair (in leaves) whose class count is brute-forced inside
/// the `recurrence` claim.
const BRUTE_TURN_LEAVES: usize = 13;

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Space {
    Path,
    Binary,
}

/// Settings shared by every point of a campaign.
#[derive(Clone, Copy, Debug)]
pub struct Ctx {
    pub samples: usize,
    pub seed: u64,
}

impl Ctx {
    fn rng(&self, n: usize) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed ^ (n as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15))
    }
}

pub struct Claim {
    pub id: &'static str,
    pub kind: ClaimKind,
    pub statement: &'static str,
    /// What `n` measures.
    pub parameter: &'static str,
    /// The pair space, for claims stated over one.
    pub space: Option<Space>,
    pub min_n: usize,
    pub default_max_n: usize,
    pub sampling: Sampling,
    /// Estimated word checks at size `n` with the given sample count.
    pub(crate) cost: fn(usize, usize) -> u128,
    pub(crate) run: fn(&Ctx, usize) -> Vec<Point>,
}

/// How a claim chooses its cases.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sampling {
    Exhaustive,
    /// Exhaustive up to [`EXHAUSTIVE_BINARY_MAX`], then this many random cases.
    Above(usize),
    /// Always this many random cases.
    Always(usize),
}

impl Claim {
    pub fn default_samples(&self) -> Option<usize> {
        match self.sampling {
            Sampling::Exhaustive => None,
            Sampling::Above(k) | Sampling::Always(k) => Some(k),
        }
    }

    /// Whether size `n` is sampled rather than exhaustive.
    pub fn samples_at(&self, n: usize) -> bool {
        match self.sampling {
            Sampling::Exhaustive => false,
            Sampling::Above(_) => n > EXHAUSTIVE_BINARY_MAX,
            Sampling::Always(_) => true,
        }
    }
}

fn words(n: usize) -> u128 {
    3 << n.saturating_sub(1)
}

fn path_pairs(n: usize) -> u128 {
    1 << (2 * n.saturating_sub(2))
}

fn binary_pairs(n: usize, samples: usize) -> u128 {
    if n <= EXHAUSTIVE_BINARY_MAX {
        catalan(n.saturating_sub(1)).pow(2)
    } else {
        samples as u128
    }
}

fn nn(n: usize) -> Params {
    params(&[("n", n as u64)])
}

fn sampled(n: usize, samples: usize) -> Params {
    params(&[("n", n as u64), ("samples", samples as u64)])
}

fn fam(f: Family) -> Tree {
    f.build().expect("family parameters in range")
}

fn fam_pair(a: Family, b: Family) -> TreePair {
    TreePair::new(fam(a), fam(b)).expect("equal sizes")
}

/// Trees with their search schedules.
struct Indexed {
    trees: Vec<Tree>,
    schedules: Vec<Schedule>,
}

impl Indexed {
    fn new(trees: impl Iterator<Item = Tree>) -> Indexed {
        let trees: Vec<Tree> = trees.collect();
        let schedules = trees.iter().map(Schedule::new).collect();
        Indexed { trees, schedules }
    }

    fn len(&self) -> usize {
        self.trees.len()
    }
}

/// A pair under test, with schedules for fast searching.
struct PairRef<'a> {
    t1: &'a Tree,
    t2: &'a Tree,
    s1: &'a Schedule,
    s2: &'a Schedule,
}

impl<'a> PairRef<'a> {
    fn search(&self) -> CommonWordSearch<'a> {
        CommonWordSearch::with_schedules(self.s1, self.s2).expect("equal sizes")
    }

    fn pair(&self) -> TreePair {
        TreePair::new(self.t1.clone(), self.t2.clone()).expect("equal sizes")
    }

    fn flags(&self) -> Vec<(WordClass, ClassFlags)> {
        self.search()
            .classes()
            .into_iter()
            .map(|c| {
                let f = class_predicates(&c).expect("n >= 2");
                (c, f)
            })
            .collect()
    }
}

enum Outcome {
    Skip,
    Hold,
    Fail(String),
}

fn verdict(ok: bool, detail: impl FnOnce() -> String) -> Outcome {
    if ok {
        Outcome::Hold
    } else {
        Outcome::Fail(detail())
    }
}

type Swept = (u64, Vec<Counterexample>);

fn tally(results: Vec<Swept>) -> Swept {
    results.into_iter().fold((0, Vec::new()), |(c, mut all), (k, bad)| {
        all.extend(bad);
        (c + k, all)
    })
}

/// `check` on every pair of `a × b`, rows in parallel, results in row order.
fn product<F>(a: &Indexed, b: &Indexed, check: F) -> Swept
where
    F: Fn(&PairRef) -> Outcome + Sync,
{
    tally(
        (0..a.len())
            .into_par_iter()
            .map(|i| {
                let mut checked = 0;
                let mut bad = Vec::new();
                for j in 0..b.len() {
                    let p = PairRef {
                        t1: &a.trees[i],
                        t2: &b.trees[j],
                        s1: &a.schedules[i],
                        s2: &b.schedules[j],
                    };
                    match check(&p) {
                        Outcome::Skip => {}
                        Outcome::Hold => checked += 1,
                        Outcome::Fail(detail) => {
                            checked += 1;
                            bad.push(Counterexample::new(format!("{} {}", p.t1, p.t2), detail));
                        }
                    }
                }
                (checked, bad)
            })
            .collect(),
    )
}

/// `check` on each listed pair, in parallel, results in list order.
fn listed<F>(pairs: &[(Tree, Tree)], check: F) -> Swept
where
    F: Fn(&PairRef) -> Outcome + Sync,
{
    tally(
        pairs
            .par_iter()
            .map(|(t1, t2)| {
                let (s1, s2) = (Schedule::new(t1), Schedule::new(t2));
                let p = PairRef {
                    t1,
                    t2,
                    s1: &s1,
                    s2: &s2,
                };
                match check(&p) {
                    Outcome::Skip => (0, vec![]),
                    Outcome::Hold => (1, vec![]),
                    Outcome::Fail(detail) => (1, vec![Counterexample::new(format!("{t1} {t2}"), detail)]),
                }
            })
            .collect(),
    )
}

fn random_pairs(ctx: &Ctx, n: usize) -> Vec<(Tree, Tree)> {
    let mut rng = ctx.rng(n);
    (0..ctx.samples)
        .map(|_| (random_tree(n, &mut rng), random_tree(n, &mut rng)))
        .collect()
}

/// All pairs of `n`-leaf binary trees, or random ones above the exhaustive
/// limit. Returns the point parameters too.
fn binary_sweep<F>(ctx: &Ctx, n: usize, check: F) -> (Params, Swept)
where
    F: Fn(&PairRef) -> Outcome + Sync,
{
    if n <= EXHAUSTIVE_BINARY_MAX {
        let all = Indexed::new(all_trees(n));
        (nn(n), product(&all, &all, check))
    } else {
        (sampled(n, ctx.samples), listed(&random_pairs(ctx, n), check))
    }
}

fn path_sweep<F>(n: usize, check: F) -> Swept
where
    F: Fn(&PairRef) -> Outcome + Sync,
{
    let all = Indexed::new(all_path_trees(n));
    product(&all, &all, check)
}

/// Path pairs with leaf 1 on level 1 of `t1` and leaf `n` on level 1 of `t2`.
fn split_root_sweep<F>(n: usize, check: F) -> Swept
where
    F: Fn(&PairRef) -> Outcome + Sync,
{
    let left = Indexed::new(all_path_trees(n).filter(|t| t.leaf_level(1) == Ok(1)));
    let right = Indexed::new(all_path_trees(n).filter(|t| t.leaf_level(n) == Ok(1)));
    product(&left, &right, check)
}

fn comb_comb(_: &Ctx, n: usize) -> Vec<Point> {
    let p = fam_pair(Family::LeftComb(n), Family::RightComb(n));
    vec![Point::compare(
        nn(n),
        comb_comb_words(n).expect("n >= 2"),
        parse_words(&p),
    )]
}

fn turn_turn(_: &Ctx, total: usize) -> Vec<Point> {
    (1..=total.saturating_sub(3))
        .map(|m| {
            let n = total - m;
            let p = fam_pair(Family::LeftTurn(m, n), Family::RightTurn(1, total - 1));
            Point::compare(
                params(&[("m", m as u64), ("n", n as u64)]),
                turn_turn_words(m, n).expect("m >= 1, n >= 3"),
                parse_words(&p),
            )
        })
        .collect()
}

fn comb_crooked(_: &Ctx, n: usize) -> Vec<Point> {
    let p = fam_pair(Family::LeftComb(n), Family::RightCrooked(n));
    vec![Point::compare(
        nn(n),
        comb_crooked_words(n).expect("n >= 2"),
        parse_words(&p),
    )]
}

fn comb_crooked2(_: &Ctx, n: usize) -> Vec<Point> {
    let p = fam_pair(Family::LeftComb(n), Family::LeftCrooked(n));
    vec![Point::compare(
        nn(n),
        comb_crooked2_words(n).expect("n >= 3"),
        parse_words(&p),
    )]
}

fn crooked_crooked(_: &Ctx, n: usize) -> Vec<Point> {
    let p = fam_pair(Family::LeftCrooked(n), Family::RightCrooked(n));
    vec![Point::compare(
        nn(n),
        crooked_crooked_count(n).expect("n >= 2"),
        count_parse_words(&p),
    )]
}

fn crooked_membership(_: &Ctx, n: usize) -> Vec<Point> {
    let p = fam_pair(Family::LeftCrooked(n), Family::RightCrooked(n));
    let common = oracles::common_words(p.t1(), p.t2());
    let mut members = 0u64;
    let mut bad = Vec::new();
    let mut total = 0u64;
    for w in oracles::all_words(n) {
        total += 1;
        let word = Word::from_letters_unchecked(w);
        let member = crooked_crooked_membership(&word);
        members += member as u64;
        if member != common.contains(word.letters()) {
            bad.push(Counterexample::new(&word, format!("membership says {member}")));
        }
    }
    vec![
        Point::sweep(nn(n), "membership exactly on common parse words", total, bad)
            .with_note(format!("{members} members, {} common words", common.len())),
    ]
}

fn shared_bottom(_: &Ctx, n: usize) -> Vec<Point> {
    let (checked, bad) = path_sweep(n, |p| match shared_bottom_witness(&p.pair()) {
        Ok(Some(w)) => verdict(p.pair().parses(&w), || format!("{w} is not a common parse word")),
        Ok(None) => Outcome::Skip,
        Err(e) => Outcome::Fail(e.to_string()),
    });
    vec![Point::sweep(
        nn(n),
        "witness parses wherever a bottom leaf is shared",
        checked,
        bad,
    )]
}

fn growth_law(ctx: &Ctx, n: usize, duplicate_second: bool) -> Vec<Point> {
    let (checked, bad) = listed(&random_pairs(ctx, n), |p| {
        let before = p.search().count();
        for i in 1..=n {
            let t1 = attach_cherry(p.t1, i).expect("site in range");
            let t2 = if duplicate_second {
                duplicate_leaf(p.t2, i)
            } else {
                attach_cherry(p.t2, i)
            }
            .expect("site in range");
            let after = CommonWordSearch::new(&t1, &t2).expect("equal sizes").count();
            let want = if duplicate_second { before } else { 2 * before };
            if after != want {
                return Outcome::Fail(format!("site {i}: {before} classes grew to {after}, expected {want}"));
            }
        }
        Outcome::Hold
    });
    let expected = if duplicate_second {
        "count preserved at every site"
    } else {
        "count doubled at every site"
    };
    vec![Point::sweep(sampled(n, ctx.samples), expected, checked, bad)]
}

fn bottom_bottom(ctx: &Ctx, n: usize) -> Vec<Point> {
    growth_law(ctx, n, false)
}

fn bottom_comb(ctx: &Ctx, n: usize) -> Vec<Point> {
    growth_law(ctx, n, true)
}

fn comb_general(_: &Ctx, n: usize) -> Vec<Point> {
    let left = Schedule::new(&fam(Family::LeftComb(n)));
    let right = Schedule::new(&fam(Family::RightComb(n)));
    let all = Indexed::new(all_trees(n));
    let results: Vec<Option<Counterexample>> = (0..all.len())
        .into_par_iter()
        .map(|i| {
            let (t, s) = (&all.trees[i], &all.schedules[i]);
            let want_left = comb_general_count(t).expect("n >= 2");
            let got_left = CommonWordSearch::with_schedules(s, &left).expect("sizes").count();
            let want_right = 1u64 << (t.leaf_level(n).expect("leaf n") - 1);
            let got_right = CommonWordSearch::with_schedules(s, &right).expect("sizes").count();
            (got_left != want_left || got_right != want_right).then(|| {
                Counterexample::new(
                    t,
                    format!("left comb {got_left} (want {want_left}), right comb {got_right} (want {want_right})"),
                )
            })
        })
        .collect();
    let bad: Vec<Counterexample> = results.into_iter().flatten().collect();
    vec![Point::sweep(
        nn(n),
        "2^(level of leaf 1 - 1) classes with the left comb",
        all.len() as u64,
        bad,
    )]
}

fn turn_general(_: &Ctx, n: usize) -> Vec<Point> {
    let turns = Indexed::new((1..=n - 2).map(|m| fam(Family::LeftTurn(m, n - m))));
    let all = Indexed::new(all_trees(n));
    let (checked, bad) = product(&turns, &all, |p| {
        verdict(p.search().first().is_some(), || "no common parse word".into())
    });
    vec![Point::sweep(
        nn(n),
        "every left turn tree shares a word with every tree",
        checked,
        bad,
    )]
}

/// `(m, n, k)` with `m + n = total` for which the turn pair is well formed.
fn turn_triples(total: usize) -> impl Iterator<Item = (usize, usize, usize)> {
    (1..total).flat_map(move |m| {
        let n = total - m;
        (1..=total.saturating_sub(2)).filter_map(move |k| (n >= 2).then_some((m, n, k)))
    })
}

fn turn_point(m: usize, n: usize, k: usize, expected: u64) -> Point {
    let p = fam_pair(Family::LeftTurn(m, n), Family::RightTurn(k, m + n - k));
    Point::compare(
        params(&[("k", k as u64), ("m", m as u64), ("n", n as u64)]),
        expected,
        count_parse_words(&p),
    )
}

fn unique_turn(_: &Ctx, total: usize) -> Vec<Point> {
    turn_triples(total)
        .filter(|&(m, n, k)| n >= 2.max((k + 2).saturating_sub(m)) && n <= k)
        .map(|(m, n, k)| turn_point(m, n, k, 1))
        .collect()
}

fn turn_count(_: &Ctx, total: usize) -> Vec<Point> {
    turn_triples(total)
        .map(|(m, n, k)| turn_point(m, n, k, turn_pair_count(m, n, k).expect("well formed")))
        .collect()
}

fn recurrence(_: &Ctx, top: usize) -> Vec<Point> {
    let top = top as u32;
    let mut table = TurnCountTable::new();
    let a = |m: u32, k: u32| a_of(m, k).expect("in range") as i128;
    let initial = [(1, 1, 1), (1, 2, 1), (1, 3, 1), (2, 2, 4), (2, 3, 5), (3, 3, 3)];
    let cells = (1..=top).map(|k| (top, k)).chain((1..top).map(|m| (m, top)));
    cells
        .map(|(m, k)| {
            let value = a(m, k);
            let mut checks: Vec<(bool, String)> = vec![
                (
                    table.get(m, k).expect("in range") as i128 == value,
                    "recurrence table".into(),
                ),
                (a(k, m) == value, "symmetry".into()),
            ];
            if m == 1 || k == 1 {
                checks.push((value == 1, "comb case is 1".into()));
            }
            if let Some(&(_, _, v)) = initial.iter().find(|&&(x, y, _)| (x, y) == (m, k) || (y, x) == (m, k)) {
                checks.push((value == v, format!("initial value {v}")));
            }
            if m + 3 <= MAX_TURN_PARAM {
                let residual = a(m + 3, k) - 2 * a(m + 2, k) - a(m + 1, k) + 2 * value;
                checks.push((residual == 0, format!("recurrence in m residual {residual}")));
            }
            if k + 3 <= MAX_TURN_PARAM {
                let residual = a(m, k + 3) - 2 * a(m, k + 2) - a(m, k + 1) + 2 * value;
                checks.push((residual == 0, format!("recurrence in k residual {residual}")));
            }
            let (mu, ku) = (m as usize, k as usize);
            if mu + ku < BRUTE_TURN_LEAVES {
                let p = fam_pair(Family::LeftTurn(mu, ku + 1), Family::RightTurn(ku, mu + 1));
                let brute = count_parse_words(&p) as i128;
                checks.push((brute == value, format!("brute force {brute}")));
            }
            let checked = checks.len() as u64;
            let bad = checks
                .into_iter()
                .filter(|(ok, _)| !ok)
                .map(|(_, what)| Counterexample::new(format!("a({m}, {k})"), what))
                .collect();
            Point::sweep(
                params(&[("k", k as u64), ("m", m as u64)]),
                format!("a={value}"),
                checked,
                bad,
            )
        })
        .collect()
}

fn alternating(_: &Ctx, m: usize) -> Vec<Point> {
    let (a, b) = alternating_counts(m as u32).expect("m >= 2");
    let (la, lb) = oracles::alternating_by_listing(m);
    vec![Point::compare(
        params(&[("m", m as u64)]),
        format!("({a}, {b})"),
        format!("({la}, {lb})"),
    )]
}

fn triplication(ctx: &Ctx, n: usize) -> Vec<Point> {
    let (checked, bad) = listed(&random_pairs(ctx, n), |p| {
        let classes = p.search().classes();
        for i in 1..=n {
            let big = TreePair::new(
                triplicate_leaf(p.t1, i).expect("site in range"),
                triplicate_leaf(p.t2, i).expect("site in range"),
            )
            .expect("equal sizes");
            for c in &classes {
                let lifted = triplication_word_lift(c.canonical(), i).expect("site in range");
                if !big.parses(&lifted) {
                    return Outcome::Fail(format!("{} lifted at {i} to {lifted} does not parse", c.canonical()));
                }
            }
        }
        Outcome::Hold
    });
    vec![Point::sweep(
        sampled(n, ctx.samples),
        "every lifted word parses the triplicated pair",
        checked,
        bad,
    )]
}

fn no_01v1(_: &Ctx, n: usize) -> Vec<Point> {
    let (checked, bad) = split_root_sweep(n, |p| match p.flags().into_iter().find(|(_, f)| f.is_01v1) {
        Some((c, _)) => Outcome::Fail(format!("class {c} has the form 01v1")),
        None => Outcome::Hold,
    });
    vec![Point::sweep(nn(n), "no class of the form 01v1", checked, bad)]
}

fn restrict_01v2(_: &Ctx, n: usize) -> Vec<Point> {
    let (checked, bad) = split_root_sweep(n, |p| {
        let has = p.flags().iter().any(|(_, f)| f.is_01v2);
        if !has {
            return Outcome::Skip;
        }
        let (l1, l2) = (
            p.t1.leaf_level(2).expect("n >= 3"),
            p.t2.leaf_level(n - 1).expect("n >= 3"),
        );
        verdict(l1 == 2 && l2 == 2, || {
            format!("01v2 class with leaf levels ({l1}, {l2})")
        })
    });
    vec![Point::sweep(
        nn(n),
        "01v2 forces leaf 2 of t1 and leaf n-1 of t2 onto level 2",
        checked,
        bad,
    )]
}

fn vector_bijection(ctx: &Ctx, n: usize) -> Vec<Point> {
    let (params, (checked, bad)) = binary_sweep(ctx, n, |p| {
        let classes = p.search().count();
        let orbit = if n == 1 { 3 } else { 6 };
        let mut tuples = 0u64;
        let mut unparsed = None;
        let pair = p.pair();
        for_each_nonzero_tuple(p.t1, p.t2, |vs| {
            tuples += 1;
            if unparsed.is_none() {
                let w = Word::from_letters_unchecked(vs.iter().map(|&v| tau(v).expect("unit vector")).collect());
                if !pair.parses(&w) {
                    unparsed = Some(w);
                }
            }
        })
        .expect("equal sizes");
        if let Some(w) = unparsed {
            return Outcome::Fail(format!("tuple maps to {w}, not a common parse word"));
        }
        verdict(tuples == orbit * classes, || {
            format!("{tuples} nonzero tuples, {classes} classes")
        })
    });
    vec![Point::sweep(
        params,
        "nonzero tuples = orbit size x classes, each a parse word",
        checked,
        bad,
    )]
}

fn root_parity(ctx: &Ctx, n: usize) -> Vec<Point> {
    let (params, trees): (Params, Vec<Tree>) = if n <= EXHAUSTIVE_BINARY_MAX {
        (nn(n), all_trees(n).collect())
    } else {
        let mut rng = ctx.rng(n);
        (
            sampled(n, ctx.samples),
            (0..ctx.samples).map(|_| random_tree(n, &mut rng)).collect(),
        )
    };
    let (checked, bad) = tally(
        trees
            .par_iter()
            .map(|t| {
                let mut checked = 0;
                let mut bad = Vec::new();
                for (w, lab) in words_of(t) {
                    checked += 1;
                    if root_letter_by_parity(&w) != Some(lab.root()) {
                        bad.push(Counterexample::new(
                            format!("{t} {w}"),
                            format!("root label {}", lab.root()),
                        ));
                    }
                }
                (checked, bad)
            })
            .collect(),
    );
    vec![Point::sweep(params, "parsed root label = parity letter", checked, bad)]
}

fn ambiguity_check(p: &PairRef) -> Outcome {
    if p.search().first().is_none() {
        return Outcome::Fail("no common parse word".into());
    }
    let pair = p.pair();
    match splice_solve(&pair) {
        Some(w) if pair.parses(&w) => Outcome::Hold,
        Some(w) => Outcome::Fail(format!("solver returned {w}, not a common parse word")),
        None => Outcome::Fail("solver found no word".into()),
    }
}

fn total_ambiguity_path(_: &Ctx, n: usize) -> Vec<Point> {
    let (checked, bad) = path_sweep(n, ambiguity_check);
    vec![Point::sweep(
        nn(n),
        "common parse word found, solver word verified",
        checked,
        bad,
    )]
}

fn total_ambiguity_binary(ctx: &Ctx, n: usize) -> Vec<Point> {
    let (params, (checked, bad)) = binary_sweep(ctx, n, ambiguity_check);
    vec![Point::sweep(
        params,
        "common parse word found, solver word verified",
        checked,
        bad,
    )]
}

fn duplication(ctx: &Ctx, n: usize) -> Vec<Point> {
    let (params, (checked, bad)) = binary_sweep(ctx, n, |p| {
        for i in 1..=n {
            let t1 = duplicate_leaf(p.t1, i).expect("n >= 2");
            let t2 = duplicate_leaf(p.t2, i).expect("n >= 2");
            let s = CommonWordSearch::new(&t1, &t2).expect("equal sizes");
            if s.find(|w| w[i - 1] == w[i]).is_none() {
                return Outcome::Fail(format!("site {i}: no common word with equal letters at {i}, {}", i + 1));
            }
        }
        Outcome::Hold
    });
    vec![Point::sweep(
        params,
        "some common word repeats the duplicated letter",
        checked,
        bad,
    )]
}

fn unique_word(_: &Ctx, n: usize) -> Vec<Point> {
    let (checked, bad) = split_root_sweep(n, |p| {
        let flags = p.flags();
        if flags.iter().any(|(_, f)| f.has_00v || f.has_v00) {
            return Outcome::Skip;
        }
        verdict(flags.len() == 1, || format!("{} classes", flags.len()))
    });
    vec![Point::sweep(
        nn(n),
        "no 00v and no v00 word implies one class",
        checked,
        bad,
    )]
}

fn unique_word_literal(_: &Ctx, n: usize) -> Vec<Point> {
    let (checked, bad) = split_root_sweep(n, |p| {
        let classes = p.search().classes();
        let literal = |c: &WordClass| {
            let l = c.canonical().letters();
            l.starts_with(&[0, 0]) || l.ends_with(&[0, 0])
        };
        if classes.iter().any(literal) {
            return Outcome::Skip;
        }
        verdict(classes.len() == 1, || format!("{} classes", classes.len()))
    });
    vec![Point::sweep(
        nn(n),
        "no representative starting or ending 00 implies one class",
        checked,
        bad,
    )]
}

fn mutual_01v00(_: &Ctx, n: usize) -> Vec<Point> {
    let (checked, bad) = split_root_sweep(n, |p| {
        let flags = p.flags();
        if flags.iter().any(|(_, f)| f.has_00v) || !crookedness(&p.pair()).mutually_crooked() {
            return Outcome::Skip;
        }
        verdict(flags.iter().any(|(_, f)| f.is_01v00), || "no 01v00 class".into())
    });
    vec![Point::sweep(
        nn(n),
        "mutually crooked without 00v implies a 01v00 class",
        checked,
        bad,
    )]
}

/// `None` means no bound on `k`; `Some(true)` asks for weak mutual
/// crookedness, `Some(false)` for mutual crookedness.
fn level_tuple_with(n: usize, bound: Option<(bool, usize)>) -> Vec<Point> {
    let (checked, bad) = split_root_sweep(n, |p| {
        if p.flags().iter().any(|(_, f)| f.has_00v) {
            return Outcome::Skip;
        }
        let kmax = match bound {
            None => usize::MAX,
            Some((weak, kmax)) => {
                let report = crookedness(&p.pair());
                let crooked = if weak {
                    report.weakly_mutually_crooked()
                } else {
                    report.mutually_crooked()
                };
                if !crooked {
                    return Outcome::Skip;
                }
                kmax
            }
        };
        let tuple = (
            p.t1.leaf_level(2).expect("n >= 4"),
            p.t2.leaf_level(n - 1).expect("n >= 4"),
        );
        let ok = tuple == (2, 3) || (tuple.1 == 2 && (2..=kmax).contains(&tuple.0));
        verdict(ok, || format!("level tuple {tuple:?}"))
    });
    let expected = match bound {
        None => "tuple is (2,3) or (k,2)".to_string(),
        Some((_, k)) => format!("tuple is (2,3) or (k,2) with k <= {k}"),
    };
    vec![Point::sweep(nn(n), expected, checked, bad)]
}

fn level_tuple(_: &Ctx, n: usize) -> Vec<Point> {
    level_tuple_with(n, None)
}

fn level_tuple_weak(_: &Ctx, n: usize) -> Vec<Point> {
    level_tuple_with(n, Some((true, 4)))
}

fn level_tuple_mutual(_: &Ctx, n: usize) -> Vec<Point> {
    level_tuple_with(n, Some((false, 3)))
}

fn u00v(_: &Ctx, n: usize) -> Vec<Point> {
    let (checked, bad) = path_sweep(n, |p| {
        verdict(
            p.search().find(|w| w.windows(2).any(|d| d[0] == d[1])).is_some(),
            || "no common word with two equal adjacent letters".into(),
        )
    });
    vec![Point::sweep(
        nn(n),
        "some common word has two equal adjacent letters",
        checked,
        bad,
    )]
}

fn u00v_literal(_: &Ctx, n: usize) -> Vec<Point> {
    let (checked, bad) = path_sweep(n, |p| {
        verdict(p.search().find(|w| w.windows(2).any(|d| d == [0, 0])).is_some(), || {
            "no representative contains 00".into()
        })
    });
    vec![Point::sweep(
        nn(n),
        "some class representative contains 00",
        checked,
        bad,
    )]
}

fn cost_single(n: usize, _: usize) -> u128 {
    words(n)
}

fn cost_path(n: usize, _: usize) -> u128 {
    path_pairs(n) * words(n)
}

fn cost_split_root(n: usize, _: usize) -> u128 {
    (path_pairs(n) / 4).max(1) * words(n)
}

fn cost_binary(n: usize, samples: usize) -> u128 {
    binary_pairs(n, samples) * words(n)
}

fn cost_sampled_sites(n: usize, samples: usize) -> u128 {
    samples as u128 * n as u128 * words(n + 2)
}

fn cost_turns(total: usize, _: usize) -> u128 {
    (total * total) as u128 * words(total)
}

fn cost_trees(n: usize, samples: usize) -> u128 {
    let trees = if n <= EXHAUSTIVE_BINARY_MAX {
        catalan(n.saturating_sub(1))
    } else {
        samples as u128
    };
    trees * words(n)
}

fn cost_vector(n: usize, samples: usize) -> u128 {
    binary_pairs(n, samples) * 3u128.pow(n as u32)
}

fn cost_comb_general(n: usize, _: usize) -> u128 {
    2 * catalan(n.saturating_sub(1)) * words(n)
}

fn cost_turn_general(n: usize, _: usize) -> u128 {
    n as u128 * catalan(n.saturating_sub(1)) * words(n)
}

fn cost_duplication(n: usize, samples: usize) -> u128 {
    binary_pairs(n, samples) * n as u128 * words(n + 1)
}

fn cost_membership(n: usize, _: usize) -> u128 {
    3u128.pow(n as u32)
}

macro_rules! claim {
    ($id:expr, $kind:ident, $space:expr, $param:expr, $min:expr, $max:expr, $samples:expr, $cost:expr, $run:expr, $statement:expr) => {
        Claim {
            id: $id,
            kind: ClaimKind::$kind,
            statement: $statement,
            parameter: $param,
            space: $space,
            min_n: $min,
            default_max_n: $max,
            sampling: $samples,
            cost: $cost,
            run: $run,
        }
    };
}

const PATH: Option<Space> = Some(Space::Path);
const BINARY: Option<Space> = Some(Space::Binary);

/// Every registered claim, theorems first.
pub static CLAIMS: &[Claim] = &[
    claim!(
        "comb-comb",
        Theorem,
        None,
        "n",
        2,
        12,
        Sampling::Exhaustive,
        cost_single,
        comb_comb,
        "LeftComb(n) and RightComb(n) share exactly the class 01^(n-2)2 (n even) or 01^(n-2)0 (n odd)"
    ),
    claim!(
        "turn-turn",
        Theorem,
        None,
        "m+n",
        4,
        12,
        Sampling::Exhaustive,
        cost_turns,
        turn_turn,
        "LeftTurn(m,n) and RightTurn(1,m+n-1) share exactly two classes, given by parity of n"
    ),
    claim!(
        "comb-crooked",
        Theorem,
        None,
        "n",
        2,
        12,
        Sampling::Exhaustive,
        cost_single,
        comb_crooked,
        "LeftComb(n) and RightCrooked(n) share exactly one class, a truncated power of 012"
    ),
    claim!(
        "comb-crooked2",
        Theorem,
        None,
        "n",
        3,
        12,
        Sampling::Exhaustive,
        cost_single,
        comb_crooked2,
        "LeftComb(n) and LeftCrooked(n) share exactly two classes differing in the last letter"
    ),
    claim!(
        "crooked-crooked",
        Theorem,
        None,
        "n",
        2,
        12,
        Sampling::Exhaustive,
        cost_single,
        crooked_crooked,
        "LeftCrooked(n) and RightCrooked(n) share 2^(floor(n/2)-1) classes"
    ),
    claim!(
        "crooked-membership",
        Theorem,
        None,
        "n",
        2,
        12,
        Sampling::Exhaustive,
        cost_membership,
        crooked_membership,
        "the mirrored-letter rule picks out exactly the common words of LeftCrooked(n) and RightCrooked(n)"
    ),
    claim!(
        "shared-bottom",
        Theorem,
        PATH,
        "n",
        3,
        12,
        Sampling::Exhaustive,
        cost_path,
        shared_bottom,
        "path trees sharing a bottom leaf both parse 0^(k-1) 1 0^(n-k)"
    ),
    claim!(
        "bottom-bottom",
        Theorem,
        BINARY,
        "residue n",
        3,
        10,
        Sampling::Always(500),
        cost_sampled_sites,
        bottom_bottom,
        "attaching a cherry at the same leaf of both trees doubles the class count"
    ),
    claim!(
        "bottom-comb",
        Theorem,
        BINARY,
        "residue n",
        3,
        10,
        Sampling::Always(500),
        cost_sampled_sites,
        bottom_comb,
        "a cherry at leaf i of one tree and duplication of leaf i in the other keeps the class count"
    ),
    claim!(
        "comb-general",
        Theorem,
        BINARY,
        "n",
        2,
        9,
        Sampling::Exhaustive,
        cost_comb_general,
        comb_general,
        "any tree T shares 2^(l-1) classes with LeftComb(n), l the level of leaf 1 (mirrored for RightComb)"
    ),
    claim!(
        "turn-general",
        Theorem,
        BINARY,
        "n",
        4,
        9,
        Sampling::Exhaustive,
        cost_turn_general,
        turn_general,
        "every left turn tree shares a parse word with every tree of its size"
    ),
    claim!(
        "unique-turn",
        Theorem,
        None,
        "m+n",
        3,
        13,
        Sampling::Exhaustive,
        cost_turns,
        unique_turn,
        "LeftTurn(m,n) and RightTurn(k,m+n-k) share one class when max(2,k-m+2) <= n <= k"
    ),
    claim!(
        "turn-count",
        Theorem,
        None,
        "m+n",
        3,
        13,
        Sampling::Exhaustive,
        cost_turns,
        turn_count,
        "turn pair counts are 1, a(m,k) or 2a(m,k) by the range of n"
    ),
    claim!(
        "recurrence",
        Theorem,
        None,
        "max(m,k)",
        1,
        12,
        Sampling::Exhaustive,
        cost_turns,
        recurrence,
        "a(m,k) meets its initial values, symmetry and a(m+3)-2a(m+2)-a(m+1)+2a(m)=0"
    ),
    claim!(
        "alternating",
        Theorem,
        None,
        "m",
        2,
        16,
        Sampling::Exhaustive,
        cost_single,
        alternating,
        "|A_m| = (2^m+2(-1)^m)/3 and |B_m| = (2^m-(-1)^m)/3"
    ),
    claim!(
        "triplication",
        Theorem,
        BINARY,
        "residue n",
        3,
        8,
        Sampling::Always(500),
        cost_sampled_sites,
        triplication,
        "tripling w_i lifts a common word to the pair triplicated at leaf i"
    ),
    claim!(
        "01v1",
        Theorem,
        PATH,
        "n",
        3,
        10,
        Sampling::Exhaustive,
        cost_split_root,
        no_01v1,
        "with leaf 1 on level 1 of T1 and leaf n on level 1 of T2 no common word has the form 01v1"
    ),
    claim!(
        "01v2",
        Theorem,
        PATH,
        "n",
        3,
        10,
        Sampling::Exhaustive,
        cost_split_root,
        restrict_01v2,
        "in the same setting a 01v2 word puts leaf 2 of T1 and leaf n-1 of T2 on level 2"
    ),
    claim!(
        "vector-bijection",
        Theorem,
        BINARY,
        "n",
        1,
        6,
        Sampling::Above(1000),
        cost_vector,
        vector_bijection,
        "unit-vector tuples nonzero under both bracketings correspond to common parse words"
    ),
    claim!(
        "root-parity",
        Theorem,
        BINARY,
        "n",
        1,
        8,
        Sampling::Above(1000),
        cost_trees,
        root_parity,
        "the root label of a parsed word is the letter whose count has the parity of n"
    ),
    claim!(
        "total-ambiguity",
        Theorem,
        PATH,
        "n",
        2,
        12,
        Sampling::Exhaustive,
        cost_path,
        total_ambiguity_path,
        "every pair of path trees shares a parse word, and the reduction solver finds one"
    ),
    claim!(
        "total-ambiguity-binary",
        Theorem,
        BINARY,
        "n",
        1,
        10,
        Sampling::Above(1000),
        cost_binary,
        total_ambiguity_binary,
        "every pair of binary trees shares a parse word, and the reduction solver finds one"
    ),
    claim!(
        "duplication",
        Conjecture,
        BINARY,
        "residue n",
        2,
        7,
        Sampling::Above(1000),
        cost_duplication,
        duplication,
        "a pair duplicated at leaf i has a common word with w_i = w_(i+1)"
    ),
    claim!(
        "unique-word",
        Conjecture,
        PATH,
        "n",
        4,
        12,
        Sampling::Exhaustive,
        cost_split_root,
        unique_word,
        "split-root path pairs with no 00v or v00 word have a unique class"
    ),
    claim!(
        "unique-word-literal",
        Conjecture,
        PATH,
        "n",
        4,
        12,
        Sampling::Exhaustive,
        cost_split_root,
        unique_word_literal,
        "as unique-word, reading 00v and v00 literally on class representatives"
    ),
    claim!(
        "mutual-01v00",
        Conjecture,
        PATH,
        "n",
        4,
        12,
        Sampling::Exhaustive,
        cost_split_root,
        mutual_01v00,
        "mutually crooked split-root path pairs with no 00v word have a 01v00 word"
    ),
    claim!(
        "level-tuple",
        Conjecture,
        PATH,
        "n",
        4,
        12,
        Sampling::Exhaustive,
        cost_split_root,
        level_tuple,
        "split-root path pairs with no 00v word have level tuple (2,3) or (k,2)"
    ),
    claim!(
        "level-tuple-weak",
        Conjecture,
        PATH,
        "n",
        4,
        12,
        Sampling::Exhaustive,
        cost_split_root,
        level_tuple_weak,
        "as level-tuple for weakly mutually crooked pairs, with k <= 4"
    ),
    claim!(
        "level-tuple-mutual",
        Conjecture,
        PATH,
        "n",
        4,
        12,
        Sampling::Exhaustive,
        cost_split_root,
        level_tuple_mutual,
        "as level-tuple for mutually crooked pairs, with k <= 3"
    ),
    claim!(
        "u00v",
        Conjecture,
        PATH,
        "n",
        4,
        10,
        Sampling::Exhaustive,
        cost_path,
        u00v,
        "every pair of path trees parses a word with two equal adjacent letters"
    ),
    claim!(
        "u00v-literal",
        Conjecture,
        PATH,
        "n",
        4,
        10,
        Sampling::Exhaustive,
        cost_path,
        u00v_literal,
        "as u00v, reading 00 literally on class representatives"
    ),
];
