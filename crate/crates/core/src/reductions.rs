//! Growing and shrinking tree pairs, and a solver that shrinks a pair until
//! brute force is cheap, then rebuilds a common parse word on the way back.

use std::cell::OnceCell;
use std::fmt;

use serde::Serialize;

use crate::enumeration::TreePair;
use crate::error::{Error, Result};
use crate::grammar::{root_letter_by_parity, Letter, Permutation, Word};
use crate::tree::{LeafInterval, Tree, VertexId};

/// Leaf `i` becomes a cherry.
pub fn attach_cherry(t: &Tree, i: usize) -> Result<Tree> {
    let v = t.leaf_vertex(i)?;
    Ok(t.replace_subtree(v, &Tree::cherry()))
}

/// Inverse of [`attach_cherry`]: leaves `i` and `i + 1` must be siblings.
pub fn remove_cherry(t: &Tree, i: usize) -> Option<Tree> {
    if i == 0 || i >= t.leaf_count() {
        return None;
    }
    let v = t.leaf_vertex(i).ok()?;
    let p = t.parent(v)?;
    (t.sibling(v)? == t.leaf_vertex(i + 1).ok()?).then(|| t.replace_subtree(p, &Tree::leaf()))
}

/// Inserts a leaf next to leaf `i` so that leaves `i` and `i + 1` are both
/// left (or both right) leaves on consecutive levels.
pub fn duplicate_leaf(t: &Tree, i: usize) -> Result<Tree> {
    if t.leaf_count() == 1 {
        return Err(Error::RootLeaf);
    }
    let v = t.leaf_vertex(i)?;
    let p = t.parent(v).expect("non-root leaf");
    let s = t.subtree(t.sibling(v).expect("non-root leaf"));
    let leaf = Tree::leaf();
    let grown = if t.is_left_child(v) {
        Tree::join(&leaf, &Tree::join(&leaf, &s))
    } else {
        Tree::join(&Tree::join(&s, &leaf), &leaf)
    };
    Ok(t.replace_subtree(p, &grown))
}

/// Whether `t` has the shape [`duplicate_leaf`] produces at site `i`.
pub fn is_duplicate_site(t: &Tree, i: usize) -> bool {
    duplicate_parts(t, i).is_some()
}

/// The parent to replace, the kept subtree and whether the pair hangs left.
fn duplicate_parts(t: &Tree, i: usize) -> Option<(VertexId, VertexId, bool)> {
    if i == 0 || i >= t.leaf_count() {
        return None;
    }
    let a = t.leaf_vertex(i).ok()?;
    let b = t.leaf_vertex(i + 1).ok()?;
    if t.is_left_child(a) && t.is_left_child(b) && t.parent(b)? == t.sibling(a)? {
        // a, then b as the left child of a's sibling
        let (_, s) = t.children(t.sibling(a)?)?;
        return Some((t.parent(a)?, s, true));
    }
    if !t.is_left_child(a) && !t.is_left_child(b) && t.parent(a)? == t.sibling(b)? {
        let (s, _) = t.children(t.sibling(b)?)?;
        return Some((t.parent(b)?, s, false));
    }
    None
}

/// Inverse of [`duplicate_leaf`] at site `i`, when `t` has the shape it
/// produces there.
pub fn unduplicate_leaf(t: &Tree, i: usize) -> Option<Tree> {
    let (p, s, left) = duplicate_parts(t, i)?;
    let (leaf, kept) = (Tree::leaf(), t.subtree(s));
    let shrunk = if left {
        Tree::join(&leaf, &kept)
    } else {
        Tree::join(&kept, &leaf)
    };
    Some(t.replace_subtree(p, &shrunk))
}

pub fn triplicate_leaf(t: &Tree, i: usize) -> Result<Tree> {
    duplicate_leaf(&duplicate_leaf(t, i)?, i)
}

pub fn untriplicate_leaf(t: &Tree, i: usize) -> Option<Tree> {
    unduplicate_leaf(&unduplicate_leaf(t, i)?, i)
}

/// Sites at which a pair could have been grown by duplication or
/// triplication in both trees.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CrookednessReport {
    pub duplicable_sites: Vec<usize>,
    pub triplicable_sites: Vec<usize>,
}

impl CrookednessReport {
    pub fn mutually_crooked(&self) -> bool {
        self.duplicable_sites.is_empty()
    }

    pub fn weakly_mutually_crooked(&self) -> bool {
        self.triplicable_sites.is_empty()
    }
}

pub fn crookedness(p: &TreePair) -> CrookednessReport {
    let n = p.leaf_count();
    let duplicable_sites: Vec<usize> = (1..n)
        .filter(|&i| is_duplicate_site(p.t1(), i) && is_duplicate_site(p.t2(), i))
        .collect();
    // un-triplicating starts by un-duplicating, so only duplicable sites qualify
    let triplicable_sites = duplicable_sites
        .iter()
        .copied()
        .filter(|&i| {
            let again = |t: &Tree| unduplicate_leaf(t, i).is_some_and(|u| is_duplicate_site(&u, i));
            i + 1 < n && again(p.t1()) && again(p.t2())
        })
        .collect();
    CrookednessReport {
        duplicable_sites,
        triplicable_sites,
    }
}

/// Proper leaf intervals (longer than one leaf) spanned by a subtree in
/// both trees, sorted by `(lo, hi)`.
pub fn find_decompositions(p: &TreePair) -> Vec<LeafInterval> {
    let n = p.leaf_count();
    let mut out: Vec<LeafInterval> = p
        .t1()
        .internal_vertices()
        .map(|v| p.t1().subtree_span(v))
        .filter(|s| s.len() > 1 && s.len() < n && p.t2().vertex_with_span(*s).is_some())
        .collect();
    out.sort_by_key(|s| (s.lo(), s.hi()));
    out
}

/// The intervals of `found` not strictly inside another one.
pub fn maximal_intervals(found: &[LeafInterval]) -> Vec<LeafInterval> {
    found
        .iter()
        .filter(|a| !found.iter().any(|b| b != *a && b.contains(a)))
        .copied()
        .collect()
}

/// `w` with two extra copies of `w_i` after position `i`.
pub fn triplication_word_lift(w: &Word, i: usize) -> Result<Word> {
    if i == 0 || i > w.len() {
        return Err(Error::IndexOutOfRange {
            index: i,
            leaves: w.len(),
        });
    }
    let mut letters = w.letters().to_vec();
    let c = letters[i - 1];
    letters.splice(i..i, [c, c]);
    Ok(Word::from_letters_unchecked(letters))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum StepKind {
    /// A shared subtree interval was cut out and solved separately.
    Decompose,
    UnTriplicate,
    UnDuplicate,
    /// A cherry shared by both trees was removed.
    BottomBottom,
    /// A cherry in one tree faced an uncle-nephew pair in the other.
    BottomComb {
        cherry_in: u8,
    },
    /// Solved by exhaustive search.
    BruteForce,
}

impl fmt::Display for StepKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StepKind::Decompose => write!(f, "decompose"),
            StepKind::UnTriplicate => write!(f, "un-triplicate"),
            StepKind::UnDuplicate => write!(f, "un-duplicate"),
            StepKind::BottomBottom => write!(f, "bottom-bottom"),
            StepKind::BottomComb { cherry_in } => write!(f, "bottom-comb(cherry in t{cherry_in})"),
            StepKind::BruteForce => write!(f, "brute-force"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Site {
    Leaf(usize),
    Interval(LeafInterval),
}

impl fmt::Display for Site {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Site::Leaf(i) => write!(f, "leaf {i}"),
            Site::Interval(s) => write!(f, "{s}"),
        }
    }
}

/// One solver step. `residue` holds the smaller pairs the step reduced to;
/// for [`StepKind::Decompose`] the outer pair comes first.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReductionStep {
    pub depth: usize,
    pub pair: TreePair,
    pub kind: StepKind,
    pub site: Option<Site>,
    pub residue: Vec<TreePair>,
    /// Other maximal intervals a decomposition could have used.
    pub alternatives: Vec<LeafInterval>,
    /// The verified word this step produced.
    pub word: Word,
}

impl ReductionStep {
    /// Rebuilds `pair` from `residue` by the step's growing operation.
    pub fn rebuild(&self) -> Result<TreePair> {
        let both = |f: &dyn Fn(&Tree) -> Result<Tree>| {
            let r = &self.residue[0];
            TreePair::new(f(r.t1())?, f(r.t2())?)
        };
        match (self.kind, self.site) {
            (StepKind::BruteForce, _) => Ok(self.pair.clone()),
            (StepKind::Decompose, Some(Site::Interval(s))) => {
                let (outer, inner) = (&self.residue[0], &self.residue[1]);
                let graft = |o: &Tree, i: &Tree| -> Result<Tree> { Ok(o.replace_subtree(o.leaf_vertex(s.lo())?, i)) };
                TreePair::new(graft(outer.t1(), inner.t1())?, graft(outer.t2(), inner.t2())?)
            }
            (StepKind::UnTriplicate, Some(Site::Leaf(i))) => both(&|t| triplicate_leaf(t, i)),
            (StepKind::UnDuplicate, Some(Site::Leaf(i))) => both(&|t| duplicate_leaf(t, i)),
            (StepKind::BottomBottom, Some(Site::Leaf(i))) => both(&|t| attach_cherry(t, i)),
            (StepKind::BottomComb { cherry_in }, Some(Site::Leaf(i))) => {
                let r = &self.residue[0];
                let (a, b) = if cherry_in == 1 {
                    (attach_cherry(r.t1(), i)?, duplicate_leaf(r.t2(), i)?)
                } else {
                    (duplicate_leaf(r.t1(), i)?, attach_cherry(r.t2(), i)?)
                };
                TreePair::new(a, b)
            }
            _ => Err(Error::bad("step without a site")),
        }
    }
}

impl fmt::Display for ReductionStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{:indent$}n={} {}",
            "",
            self.pair.leaf_count(),
            self.kind,
            indent = 2 * self.depth
        )?;
        if let Some(site) = self.site {
            write!(f, " at {site}")?;
        }
        if !self.alternatives.is_empty() {
            let alts: Vec<String> = self.alternatives.iter().map(|s| s.to_string()).collect();
            write!(f, " (also {})", alts.join(", "))?;
        }
        write!(f, " -> {}", self.word)
    }
}

/// Outcome of [`splice_solve_traced`]. Steps are listed in pre-order: a
/// step precedes the steps that solved its residues.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Solution {
    pub word: Option<Word>,
    pub trace: Vec<ReductionStep>,
}

/// A common parse word of the pair, found by reduction.
pub fn splice_solve(p: &TreePair) -> Option<Word> {
    Solver {
        trace: Vec::new(),
        keep: false,
    }
    .solve(p, 0)
}

pub fn splice_solve_traced(p: &TreePair) -> Solution {
    let mut solver = Solver {
        trace: Vec::new(),
        keep: true,
    };
    let word = solver.solve(p, 0);
    Solution {
        word,
        trace: solver.trace,
    }
}

/// Pairs this small go straight to exhaustive search.
const BASE_LEAVES: usize = 3;

/// A solver step; the crookedness report is computed on first use.
type Attempt = fn(&mut Solver, &TreePair, &OnceCell<CrookednessReport>, usize) -> Option<Word>;

struct Solver {
    trace: Vec<ReductionStep>,
    /// Whether steps are recorded.
    keep: bool,
}

impl Solver {
    fn solve(&mut self, p: &TreePair, depth: usize) -> Option<Word> {
        let n = p.leaf_count();
        if n > BASE_LEAVES {
            let report = OnceCell::new();
            let attempts: [Attempt; 5] = [
                Self::decompose,
                Self::untriplicate,
                Self::unduplicate,
                Self::shared_cherry,
                Self::bottom_comb,
            ];
            for attempt in attempts {
                let mark = self.trace.len();
                if let Some(w) = attempt(self, p, &report, depth) {
                    debug_assert!(p.parses(&w));
                    return Some(w);
                }
                self.trace.truncate(mark);
            }
        }
        let w = p.search().first()?;
        self.record(depth, p, StepKind::BruteForce, None, vec![], vec![], &w);
        Some(w)
    }

    /// Reserves the trace slot for a step before its residues are solved.
    fn open(&mut self) -> usize {
        self.trace.len()
    }

    #[allow(clippy::too_many_arguments)]
    fn record(
        &mut self,
        depth: usize,
        p: &TreePair,
        kind: StepKind,
        site: Option<Site>,
        residue: Vec<TreePair>,
        alternatives: Vec<LeafInterval>,
        word: &Word,
    ) {
        self.close(self.trace.len(), depth, p, kind, site, residue, alternatives, word);
    }

    #[allow(clippy::too_many_arguments)]
    fn close(
        &mut self,
        slot: usize,
        depth: usize,
        p: &TreePair,
        kind: StepKind,
        site: Option<Site>,
        residue: Vec<TreePair>,
        alternatives: Vec<LeafInterval>,
        word: &Word,
    ) {
        if !self.keep {
            return;
        }
        self.trace.insert(
            slot,
            ReductionStep {
                depth,
                pair: p.clone(),
                kind,
                site,
                residue,
                alternatives,
                word: word.clone(),
            },
        );
    }

    fn decompose(&mut self, p: &TreePair, _: &OnceCell<CrookednessReport>, depth: usize) -> Option<Word> {
        let found = find_decompositions(p);
        let maximal = maximal_intervals(&found);
        let &chosen = maximal.iter().min_by_key(|s| (std::cmp::Reverse(s.len()), s.lo()))?;
        let cut = |t: &Tree| {
            let v = t.vertex_with_span(chosen).expect("common interval");
            (t.replace_subtree(v, &Tree::leaf()), t.subtree(v))
        };
        let (o1, i1) = cut(p.t1());
        let (o2, i2) = cut(p.t2());
        let outer = TreePair::new(o1, o2).ok()?;
        let inner = TreePair::new(i1, i2).ok()?;

        let slot = self.open();
        let wo = self.solve(&outer, depth + 1)?;
        let wi = self.solve(&inner, depth + 1)?;
        let target = wo.letters()[chosen.lo() - 1];
        let root = root_letter_by_parity(&wi)?;
        let wi = wi.permuted(Permutation::sending(root, target));
        let mut letters = wo.letters()[..chosen.lo() - 1].to_vec();
        letters.extend_from_slice(wi.letters());
        letters.extend_from_slice(&wo.letters()[chosen.lo()..]);
        let w = verified(p, letters)?;
        let alternatives = maximal.into_iter().filter(|s| *s != chosen).collect();
        self.close(
            slot,
            depth,
            p,
            StepKind::Decompose,
            Some(Site::Interval(chosen)),
            vec![outer, inner],
            alternatives,
            &w,
        );
        Some(w)
    }

    fn untriplicate(&mut self, p: &TreePair, report: &OnceCell<CrookednessReport>, depth: usize) -> Option<Word> {
        let i = *report.get_or_init(|| crookedness(p)).triplicable_sites.first()?;
        let residue = TreePair::new(untriplicate_leaf(p.t1(), i)?, untriplicate_leaf(p.t2(), i)?).ok()?;
        let slot = self.open();
        let w = self.solve(&residue, depth + 1)?;
        let w = verified(p, triplication_word_lift(&w, i).ok()?.into_letters())?;
        self.close(
            slot,
            depth,
            p,
            StepKind::UnTriplicate,
            Some(Site::Leaf(i)),
            vec![residue],
            vec![],
            &w,
        );
        Some(w)
    }

    fn unduplicate(&mut self, p: &TreePair, report: &OnceCell<CrookednessReport>, depth: usize) -> Option<Word> {
        let i = *report.get_or_init(|| crookedness(p)).duplicable_sites.first()?;
        let residue = TreePair::new(unduplicate_leaf(p.t1(), i)?, unduplicate_leaf(p.t2(), i)?).ok()?;
        let slot = self.open();
        let w = self.solve(&residue, depth + 1)?;
        let found = widen(p, &w, i).or_else(|| {
            // the solved residue word may not extend; try its other classes
            let mut hit = None;
            let _ = residue.search().for_each(|r| {
                hit = widen(p, &Word::from_letters_unchecked(r.to_vec()), i);
                if hit.is_some() {
                    std::ops::ControlFlow::Break(())
                } else {
                    std::ops::ControlFlow::Continue(())
                }
            });
            hit
        })?;
        self.close(
            slot,
            depth,
            p,
            StepKind::UnDuplicate,
            Some(Site::Leaf(i)),
            vec![residue],
            vec![],
            &found,
        );
        Some(found)
    }

    fn shared_cherry(&mut self, p: &TreePair, _: &OnceCell<CrookednessReport>, depth: usize) -> Option<Word> {
        let b2 = p.t2().bottom_leaf_pairs();
        let i = p.t1().bottom_leaf_pairs().into_iter().find(|i| b2.contains(i))?;
        let residue = TreePair::new(remove_cherry(p.t1(), i)?, remove_cherry(p.t2(), i)?).ok()?;
        let slot = self.open();
        let w = self.solve(&residue, depth + 1)?;
        let found = widen(p, &w, i)?;
        self.close(
            slot,
            depth,
            p,
            StepKind::BottomBottom,
            Some(Site::Leaf(i)),
            vec![residue],
            vec![],
            &found,
        );
        Some(found)
    }

    fn bottom_comb(&mut self, p: &TreePair, _: &OnceCell<CrookednessReport>, depth: usize) -> Option<Word> {
        let (i, cherry_in, residue) = p
            .t1()
            .bottom_leaf_pairs()
            .into_iter()
            .filter(|&i| is_duplicate_site(p.t2(), i))
            .find_map(|i| {
                Some((
                    i,
                    1,
                    TreePair::new(remove_cherry(p.t1(), i)?, unduplicate_leaf(p.t2(), i)?).ok()?,
                ))
            })
            .or_else(|| {
                p.t2()
                    .bottom_leaf_pairs()
                    .into_iter()
                    .filter(|&i| is_duplicate_site(p.t1(), i))
                    .find_map(|i| {
                        Some((
                            i,
                            2,
                            TreePair::new(unduplicate_leaf(p.t1(), i)?, remove_cherry(p.t2(), i)?).ok()?,
                        ))
                    })
            })?;
        let slot = self.open();
        let w = self.solve(&residue, depth + 1)?;
        let found = widen(p, &w, i)?;
        self.close(
            slot,
            depth,
            p,
            StepKind::BottomComb { cherry_in },
            Some(Site::Leaf(i)),
            vec![residue],
            vec![],
            &found,
        );
        Some(found)
    }
}

/// Replaces letter `i` of `w` by each of the nine two-letter blocks and
/// returns the first result both trees parse.
fn widen(p: &TreePair, w: &Word, i: usize) -> Option<Word> {
    let l = w.letters();
    (0..9u8).find_map(|code| {
        let block: [Letter; 2] = [code / 3, code % 3];
        let mut letters = l[..i - 1].to_vec();
        letters.extend_from_slice(&block);
        letters.extend_from_slice(&l[i..]);
        verified(p, letters)
    })
}

fn verified(p: &TreePair, letters: Vec<Letter>) -> Option<Word> {
    let w = Word::from_letters_unchecked(letters);
    p.parses(&w).then_some(w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::enumeration::{all_path_trees, all_trees, count_parse_words};
    use crate::tree::Family;

    fn fam(f: Family) -> Tree {
        f.build().unwrap()
    }

    fn pair(a: Family, b: Family) -> TreePair {
        TreePair::new(fam(a), fam(b)).unwrap()
    }

    #[test]
    fn cherries() {
        assert_eq!(attach_cherry(&Tree::leaf(), 1).unwrap(), Tree::cherry());
        assert_eq!(attach_cherry(&Tree::cherry(), 1).unwrap(), fam(Family::LeftComb(3)));
        assert_eq!(attach_cherry(&Tree::cherry(), 2).unwrap(), fam(Family::RightComb(3)));
        assert!(attach_cherry(&Tree::cherry(), 3).is_err());
        assert_eq!(remove_cherry(&fam(Family::LeftComb(3)), 1), Some(Tree::cherry()));
        assert_eq!(remove_cherry(&fam(Family::LeftComb(3)), 2), None);
    }

    #[test]
    fn duplication() {
        assert_eq!(duplicate_leaf(&Tree::cherry(), 1).unwrap(), fam(Family::RightComb(3)));
        assert_eq!(duplicate_leaf(&Tree::cherry(), 2).unwrap(), fam(Family::LeftComb(3)));
        assert_eq!(duplicate_leaf(&Tree::leaf(), 1), Err(Error::RootLeaf));
        let t = triplicate_leaf(&Tree::cherry(), 1).unwrap();
        assert_eq!(t, fam(Family::RightComb(4)));
        for n in 2..=7 {
            for t in all_trees(n) {
                for i in 1..=n {
                    let d = duplicate_leaf(&t, i).unwrap();
                    assert_eq!(d.leaf_count(), n + 1);
                    assert_eq!(unduplicate_leaf(&d, i).as_ref(), Some(&t), "{t} at {i}");
                    let v = d.leaf_vertex(i).unwrap();
                    let w = d.leaf_vertex(i + 1).unwrap();
                    assert_eq!(d.is_left_child(v), d.is_left_child(w));
                    assert_eq!(d.level(v).abs_diff(d.level(w)), 1);
                    let tr = triplicate_leaf(&t, i).unwrap();
                    assert_eq!(untriplicate_leaf(&tr, i).as_ref(), Some(&t));
                }
            }
        }
    }

    #[test]
    fn catalog_triplication() {
        let p = catalog::triplicated_pair();
        assert!(crookedness(&p).triplicable_sites.contains(&1));
        let r1 = untriplicate_leaf(p.t1(), 1).unwrap();
        let r2 = untriplicate_leaf(p.t2(), 1).unwrap();
        assert_eq!(Some(r1.clone()), catalog::indexed_tree(5, 1));
        assert_eq!(Some(r2.clone()), catalog::indexed_tree(5, 11));
        let small = TreePair::new(r1, r2).unwrap();
        let w: Word = "01220".parse().unwrap();
        assert!(small.parses(&w));
        let lifted = triplication_word_lift(&w, 1).unwrap();
        assert_eq!(lifted.to_string(), "0001220");
        assert!(p.parses(&lifted));
        assert_eq!(
            triplication_word_lift(&"01".parse().unwrap(), 2).unwrap().to_string(),
            "0111"
        );
        assert!(triplication_word_lift(&w, 6).is_err());
    }

    #[test]
    fn crookedness_examples() {
        assert!(crookedness(&catalog::intro_pair()).mutually_crooked());
        for n in 3..=10 {
            assert!(crookedness(&pair(Family::LeftCrooked(n), Family::RightCrooked(n))).mutually_crooked());
        }
        for n in 5..=9 {
            for t in all_path_trees(n) {
                let p = TreePair::new(fam(Family::LeftComb(n)), t).unwrap();
                assert!(!crookedness(&p).mutually_crooked(), "{p}");
            }
        }
    }

    #[test]
    fn decompositions() {
        for n in 3..=9 {
            assert!(find_decompositions(&pair(Family::LeftComb(n), Family::RightComb(n))).is_empty());
            assert!(find_decompositions(&pair(Family::LeftComb(n), Family::RightCrooked(n))).is_empty());
            let d = find_decompositions(&pair(Family::LeftComb(n), Family::LeftCrooked(n)));
            assert!(d.contains(&LeafInterval::new(1, n - 1).unwrap()), "{n}");
        }
        let shared = catalog::shared_branch_pair();
        let d = find_decompositions(&shared);
        let iv = |a, b| LeafInterval::new(a, b).unwrap();
        assert_eq!(d, vec![iv(2, 5), iv(3, 4), iv(3, 5), iv(6, 8)]);
        assert_eq!(maximal_intervals(&d), vec![iv(2, 5), iv(6, 8)]);
    }

    #[test]
    fn shared_branch_decomposes_into_figure_pairs() {
        let shared = catalog::shared_branch_pair();
        let sol = splice_solve_traced(&shared);
        let w = sol.word.unwrap();
        assert!(shared.parses(&w));
        let top = &sol.trace[0];
        assert_eq!(top.kind, StepKind::Decompose);
        assert_eq!(top.site, Some(Site::Interval(LeafInterval::new(2, 5).unwrap())));
        assert_eq!(top.alternatives, vec![LeafInterval::new(6, 8).unwrap()]);
        let outer = &top.residue[0];
        assert_eq!(Some(outer.t1().clone()), catalog::indexed_tree(5, 1));
        assert_eq!(Some(outer.t2().clone()), catalog::indexed_tree(5, 7));
        assert_eq!(Some(top.residue[1].t1().clone()), catalog::indexed_tree(4, 2));
        // cutting the other maximal interval gives the six-leaf figure pair
        let alt = LeafInterval::new(6, 8).unwrap();
        let cut = |t: &Tree| t.replace_subtree(t.vertex_with_span(alt).unwrap(), &Tree::leaf());
        assert_eq!(Some(cut(shared.t1())), catalog::indexed_tree(6, 11));
        assert_eq!(Some(cut(shared.t2())), catalog::indexed_tree(6, 30));
        assert_eq!(
            Some(shared.t1().subtree(shared.t1().vertex_with_span(alt).unwrap())),
            catalog::indexed_tree(3, 1)
        );
        assert_eq!(
            Some(shared.t2().subtree(shared.t2().vertex_with_span(alt).unwrap())),
            catalog::indexed_tree(3, 2)
        );
    }

    #[test]
    fn solve_examples() {
        let combs = pair(Family::LeftComb(4), Family::RightComb(4));
        assert_eq!(
            crate::grammar::canonicalize(&splice_solve(&combs).unwrap()).to_string(),
            "0112"
        );
        let cherry = TreePair::new(Tree::cherry(), Tree::cherry()).unwrap();
        assert_eq!(
            crate::grammar::canonicalize(&splice_solve(&cherry).unwrap()).to_string(),
            "01"
        );
        let intro = catalog::intro_pair();
        assert_eq!(
            crate::grammar::canonicalize(&splice_solve(&intro).unwrap()).to_string(),
            "0110212"
        );
    }

    #[test]
    fn every_step_rebuilds_its_pair() {
        for n in 2..=7 {
            let trees: Vec<Tree> = all_trees(n).collect();
            for a in &trees {
                for b in &trees {
                    let p = TreePair::new(a.clone(), b.clone()).unwrap();
                    let sol = splice_solve_traced(&p);
                    assert!(p.parses(sol.word.as_ref().unwrap()), "{p}");
                    assert_eq!(sol.trace[0].pair, p);
                    for step in &sol.trace {
                        assert_eq!(step.rebuild().unwrap(), step.pair, "{step}");
                        assert!(step.pair.parses(&step.word));
                    }
                }
            }
        }
    }

    #[test]
    fn growth_laws_small() {
        for n in 2..=6 {
            let trees: Vec<Tree> = all_trees(n).collect();
            for a in &trees {
                for b in &trees {
                    let p = TreePair::new(a.clone(), b.clone()).unwrap();
                    let c = count_parse_words(&p);
                    for i in 1..=n {
                        let bb = TreePair::new(attach_cherry(a, i).unwrap(), attach_cherry(b, i).unwrap()).unwrap();
                        assert_eq!(count_parse_words(&bb), 2 * c);
                        let bc = TreePair::new(attach_cherry(a, i).unwrap(), duplicate_leaf(b, i).unwrap()).unwrap();
                        assert_eq!(count_parse_words(&bc), c);
                    }
                }
            }
        }
    }
}
