//! Rooted ordered binary trees, the path-tree encoding and the named families.
//!
//! A [`Tree`] is stored as a pre-order arena: the root is vertex 0, the left
//! child of an internal vertex `v` is `v + 1`, and every subtree occupies a
//! contiguous slice of the arena. Because the layout is a function of the
//! shape alone, equality, ordering and hashing on the arena are structural.
//!
//! Leaves are indexed `1..=n` from left to right and levels count from 0 at the
//! root.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};

/// A vertex of a [`Tree`], identified by its pre-order position.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexId(u32);

impl VertexId {
    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub(crate) fn from_index(i: usize) -> VertexId {
        VertexId(i as u32)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
enum Node {
    Leaf,
    /// The left child is always the next arena slot.
    Internal {
        right: u32,
    },
}

const NO_PARENT: u32 = u32::MAX;

/// Closed interval `lo..=hi` of 1-based leaf indices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct LeafInterval {
    lo: usize,
    hi: usize,
}

impl LeafInterval {
    pub fn new(lo: usize, hi: usize) -> Result<Self> {
        if lo == 0 || hi < lo {
            return Err(Error::bad(format!("empty or zero-based interval [{lo}..{hi}]")));
        }
        Ok(LeafInterval { lo, hi })
    }

    pub fn lo(&self) -> usize {
        self.lo
    }

    pub fn hi(&self) -> usize {
        self.hi
    }

    pub fn len(&self) -> usize {
        self.hi - self.lo + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, other: &LeafInterval) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    /// The interval occupied by the same leaves after reflecting an `n`-leaf tree.
    pub fn mirror(&self, n: usize) -> LeafInterval {
        LeafInterval {
            lo: n + 1 - self.hi,
            hi: n + 1 - self.lo,
        }
    }
}

impl fmt::Display for LeafInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}..{}]", self.lo, self.hi)
    }
}

/// Rooted ordered binary tree in which every vertex has 0 or 2 children.
#[derive(Clone)]
pub struct Tree {
    nodes: Vec<Node>,
    parent: Vec<u32>,
    level: Vec<u32>,
    span: Vec<LeafInterval>,
    /// Vertex of leaf `i + 1`.
    leaves: Vec<u32>,
}

impl PartialEq for Tree {
    fn eq(&self, other: &Self) -> bool {
        self.nodes == other.nodes
    }
}

impl Eq for Tree {}

impl Hash for Tree {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.nodes.hash(state);
    }
}

impl PartialOrd for Tree {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Tree {
    fn cmp(&self, other: &Self) -> Ordering {
        self.nodes.cmp(&other.nodes)
    }
}

impl fmt::Debug for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tree({self})")
    }
}

impl Tree {
    /// The single-leaf tree.
    pub fn leaf() -> Tree {
        Tree::from_nodes(vec![Node::Leaf])
    }

    /// The 2-leaf tree.
    pub fn cherry() -> Tree {
        Tree::join(&Tree::leaf(), &Tree::leaf())
    }

    /// A new root with `left` and `right` as its subtrees.
    pub fn join(left: &Tree, right: &Tree) -> Tree {
        let mut nodes = Vec::with_capacity(1 + left.nodes.len() + right.nodes.len());
        let right_at = 1 + left.nodes.len() as u32;
        nodes.push(Node::Internal { right: right_at });
        nodes.extend(left.nodes.iter().map(|n| shift(*n, 1)));
        nodes.extend(right.nodes.iter().map(|n| shift(*n, right_at as i64)));
        Tree::from_nodes(nodes)
    }

    fn from_nodes(nodes: Vec<Node>) -> Tree {
        let len = nodes.len();
        let mut parent = vec![NO_PARENT; len];
        let mut level = vec![0u32; len];
        for v in 0..len {
            if let Node::Internal { right } = nodes[v] {
                for c in [v + 1, right as usize] {
                    parent[c] = v as u32;
                    level[c] = level[v] + 1;
                }
            }
        }
        // leaf counts bottom-up; children sit after their parent in the arena
        let mut leaf_count = vec![0usize; len];
        for v in (0..len).rev() {
            leaf_count[v] = match nodes[v] {
                Node::Leaf => 1,
                Node::Internal { right } => leaf_count[v + 1] + leaf_count[right as usize],
            };
        }
        let mut span = Vec::with_capacity(len);
        let mut leaves = Vec::new();
        let mut seen = 0usize;
        for v in 0..len {
            let lo = seen + 1;
            span.push(LeafInterval {
                lo,
                hi: lo + leaf_count[v] - 1,
            });
            if nodes[v] == Node::Leaf {
                leaves.push(v as u32);
                seen += 1;
            }
        }
        Tree {
            nodes,
            parent,
            level,
            span,
            leaves,
        }
    }

    pub fn leaf_count(&self) -> usize {
        self.leaves.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn root(&self) -> VertexId {
        VertexId(0)
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.nodes.len() as u32).map(VertexId)
    }

    /// Internal vertices in pre-order.
    pub fn internal_vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.vertices().filter(|&v| !self.is_leaf(v))
    }

    pub fn is_leaf(&self, v: VertexId) -> bool {
        self.nodes[v.index()] == Node::Leaf
    }

    pub fn children(&self, v: VertexId) -> Option<(VertexId, VertexId)> {
        match self.nodes[v.index()] {
            Node::Leaf => None,
            Node::Internal { right } => Some((VertexId(v.0 + 1), VertexId(right))),
        }
    }

    pub fn parent(&self, v: VertexId) -> Option<VertexId> {
        let p = self.parent[v.index()];
        (p != NO_PARENT).then_some(VertexId(p))
    }

    pub fn is_left_child(&self, v: VertexId) -> bool {
        self.parent(v).is_some_and(|p| p.0 + 1 == v.0)
    }

    pub fn sibling(&self, v: VertexId) -> Option<VertexId> {
        let p = self.parent(v)?;
        let (l, r) = self.children(p)?;
        Some(if l == v { r } else { l })
    }

    pub fn level(&self, v: VertexId) -> usize {
        self.level[v.index()] as usize
    }

    /// Leaf indices below `v`.
    pub fn subtree_span(&self, v: VertexId) -> LeafInterval {
        self.span[v.index()]
    }

    /// Vertex holding leaf `i` (1-based).
    pub fn leaf_vertex(&self, i: usize) -> Result<VertexId> {
        if i == 0 || i > self.leaf_count() {
            return Err(Error::IndexOutOfRange {
                index: i,
                leaves: self.leaf_count(),
            });
        }
        Ok(VertexId(self.leaves[i - 1]))
    }

    pub fn leaf_level(&self, i: usize) -> Result<usize> {
        Ok(self.level(self.leaf_vertex(i)?))
    }

    /// Leaf indices `i` such that leaves `i` and `i + 1` are siblings.
    pub fn bottom_leaf_pairs(&self) -> Vec<usize> {
        (1..self.leaf_count())
            .filter(|&i| self.parent[self.leaves[i - 1] as usize] == self.parent[self.leaves[i] as usize])
            .collect()
    }

    /// The vertex whose subtree spans exactly `interval`, if any.
    pub fn vertex_with_span(&self, interval: LeafInterval) -> Option<VertexId> {
        if interval.hi > self.leaf_count() {
            return None;
        }
        // the candidates are the ancestors of leaf `lo`
        let mut v = VertexId(self.leaves[interval.lo - 1]);
        loop {
            let s = self.span[v.index()];
            if s == interval {
                return Some(v);
            }
            if s.lo != interval.lo || s.hi > interval.hi {
                return None;
            }
            v = self.parent(v)?;
        }
    }

    pub fn is_path_tree(&self) -> bool {
        let depth = self.level.iter().copied().max().unwrap_or(0) as usize;
        let mut per_level = vec![0u8; depth + 1];
        for &l in &self.level {
            per_level[l as usize] += 1;
            if per_level[l as usize] > 2 {
                return false;
            }
        }
        true
    }

    /// Copy of the subtree rooted at `v`.
    pub fn subtree(&self, v: VertexId) -> Tree {
        let start = v.index();
        let size = 2 * self.span[start].len() - 1;
        let nodes = self.nodes[start..start + size]
            .iter()
            .map(|n| shift(*n, -(start as i64)))
            .collect();
        Tree::from_nodes(nodes)
    }

    /// This tree with the subtree at `v` replaced by `replacement`.
    pub fn replace_subtree(&self, v: VertexId, replacement: &Tree) -> Tree {
        let start = v.index();
        let old_size = 2 * self.span[start].len() - 1;
        let end = start + old_size;
        let delta = replacement.nodes.len() as i64 - old_size as i64;
        let mut nodes = Vec::with_capacity((self.nodes.len() as i64 + delta) as usize);
        for n in &self.nodes[..start] {
            nodes.push(match *n {
                Node::Internal { right } if right as usize >= end => shift(*n, delta),
                other => other,
            });
        }
        nodes.extend(replacement.nodes.iter().map(|n| shift(*n, start as i64)));
        nodes.extend(self.nodes[end..].iter().map(|n| shift(*n, delta)));
        Tree::from_nodes(nodes)
    }

    /// Left-right reflection.
    pub fn mirror(&self) -> Tree {
        fn emit(t: &Tree, v: VertexId, out: &mut Vec<Node>) {
            match t.children(v) {
                None => out.push(Node::Leaf),
                Some((l, r)) => {
                    let at = out.len();
                    out.push(Node::Internal { right: 0 });
                    emit(t, r, out);
                    let right = out.len() as u32;
                    out[at] = Node::Internal { right };
                    emit(t, l, out);
                }
            }
        }
        let mut nodes = Vec::with_capacity(self.nodes.len());
        emit(self, self.root(), &mut nodes);
        Tree::from_nodes(nodes)
    }

    /// The literal form `tree := "*" | "(" tree tree ")"`.
    pub fn serialize(&self) -> String {
        let mut out = String::with_capacity(2 * self.nodes.len());
        let mut closers: Vec<u32> = Vec::new();
        for (v, n) in self.nodes.iter().enumerate() {
            match n {
                Node::Leaf => {
                    out.push('*');
                    // close every parenthesis whose right subtree ends here
                    while closers.last().is_some_and(|&end| end as usize == v) {
                        closers.pop();
                        out.push(')');
                    }
                }
                Node::Internal { .. } => {
                    out.push('(');
                    let end = v + 2 * self.span[v].len() - 2;
                    closers.push(end as u32);
                }
            }
        }
        out
    }

    /// Parses a tree literal, or `path:<l/r letters>` for a path tree.
    pub fn deserialize(text: &str) -> Result<Tree> {
        if let Some(rest) = text.strip_prefix("path:") {
            let word = PathWord::parse_at(rest, 5)?;
            return Ok(decode_path(&word));
        }
        let bytes = text.as_bytes();
        let mut nodes: Vec<Node> = Vec::new();
        // (arena index, children completed)
        let mut stack: Vec<(usize, u8)> = Vec::new();
        let mut finished = false;
        for (pos, &b) in bytes.iter().enumerate() {
            if finished {
                return Err(Error::parse(pos, "trailing input after tree"));
            }
            match b {
                b'(' | b'*' => {
                    if stack.last().is_some_and(|&(_, done)| done == 2) {
                        return Err(Error::parse(pos, "expected ')'"));
                    }
                    if b == b'(' {
                        stack.push((nodes.len(), 0));
                        nodes.push(Node::Internal { right: 0 });
                        continue;
                    }
                    nodes.push(Node::Leaf);
                }
                b')' => match stack.pop() {
                    Some((_, 2)) => {}
                    Some(_) => return Err(Error::parse(pos, "expected a subtree before ')'")),
                    None => return Err(Error::parse(pos, "unbalanced ')'")),
                },
                _ => return Err(Error::parse(pos, format!("unexpected character {:?}", char::from(b)))),
            }
            // a subtree just ended
            match stack.last_mut() {
                None => finished = true,
                Some((idx, done)) => {
                    *done += 1;
                    if *done == 1 {
                        nodes[*idx] = Node::Internal {
                            right: nodes.len() as u32,
                        };
                    }
                }
            }
        }
        if !finished {
            return Err(Error::parse(bytes.len(), "unexpected end of input"));
        }
        Ok(Tree::from_nodes(nodes))
    }
}

fn shift(n: Node, by: i64) -> Node {
    match n {
        Node::Leaf => Node::Leaf,
        Node::Internal { right } => Node::Internal {
            right: (right as i64 + by) as u32,
        },
    }
}

impl fmt::Display for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.serialize())
    }
}

impl FromStr for Tree {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Tree::deserialize(s)
    }
}

impl Serialize for Tree {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    fn letter(self) -> char {
        match self {
            Side::Left => 'l',
            Side::Right => 'r',
        }
    }
}

/// Word over `{l, r}`; the letter at position `d` names the child of the
/// level-`d` internal vertex that has children of its own.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PathWord(Vec<Side>);

impl PathWord {
    pub fn new(sides: Vec<Side>) -> Self {
        PathWord(sides)
    }

    pub fn sides(&self) -> &[Side] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Leaf count of the encoded tree.
    pub fn leaf_count(&self) -> usize {
        self.0.len() + 2
    }

    fn parse_at(text: &str, base: usize) -> Result<PathWord> {
        text.bytes()
            .enumerate()
            .map(|(i, b)| match b {
                b'l' => Ok(Side::Left),
                b'r' => Ok(Side::Right),
                _ => Err(Error::parse(
                    base + i,
                    format!("expected 'l' or 'r', found {:?}", char::from(b)),
                )),
            })
            .collect::<Result<_>>()
            .map(PathWord)
    }

    /// `(pattern)^*` truncated to `len` letters.
    pub fn cycle(pattern: &[Side], len: usize) -> PathWord {
        PathWord(pattern.iter().copied().cycle().take(len).collect())
    }
}

impl fmt::Display for PathWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.0 {
            write!(f, "{}", s.letter())?;
        }
        Ok(())
    }
}

impl FromStr for PathWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        PathWord::parse_at(s, 0)
    }
}

/// The unique path tree with descent pattern `p`.
pub fn decode_path(p: &PathWord) -> Tree {
    let leaf = Tree::leaf();
    p.0.iter().rev().fold(Tree::cherry(), |below, side| match side {
        Side::Left => Tree::join(&below, &leaf),
        Side::Right => Tree::join(&leaf, &below),
    })
}

pub fn encode_path(t: &Tree) -> Result<PathWord> {
    if t.leaf_count() < 2 {
        return Err(Error::bad("path words describe trees with at least two leaves"));
    }
    let mut sides = Vec::with_capacity(t.leaf_count() - 2);
    let mut v = t.root();
    while let Some((l, r)) = t.children(v) {
        match (t.is_leaf(l), t.is_leaf(r)) {
            (true, true) => break,
            (false, true) => {
                sides.push(Side::Left);
                v = l;
            }
            (true, false) => {
                sides.push(Side::Right);
                v = r;
            }
            (false, false) => return Err(Error::NotAPathTree),
        }
    }
    Ok(PathWord(sides))
}

/// The parameterized path-tree families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    LeftComb(usize),
    RightComb(usize),
    /// `LeftTurn(m, n)` has `m + n` leaves and descent pattern `l^m r^(n-2)`.
    LeftTurn(usize, usize),
    RightTurn(usize, usize),
    LeftCrooked(usize),
    RightCrooked(usize),
}

impl Family {
    pub fn leaf_count(&self) -> usize {
        match *self {
            Family::LeftComb(n) | Family::RightComb(n) | Family::LeftCrooked(n) | Family::RightCrooked(n) => n,
            Family::LeftTurn(m, n) | Family::RightTurn(m, n) => m + n,
        }
    }

    pub fn path_word(&self) -> Result<PathWord> {
        use Side::{Left as L, Right as R};
        let check_n = |n: usize| {
            if n < 2 {
                Err(Error::bad(format!("{self}: need n >= 2")))
            } else {
                Ok(n - 2)
            }
        };
        Ok(match *self {
            Family::LeftComb(n) => PathWord(vec![L; check_n(n)?]),
            Family::RightComb(n) => PathWord(vec![R; check_n(n)?]),
            Family::LeftCrooked(n) => PathWord::cycle(&[L, R], check_n(n)?),
            Family::RightCrooked(n) => PathWord::cycle(&[R, L], check_n(n)?),
            Family::LeftTurn(m, n) | Family::RightTurn(m, n) => {
                if m < 1 {
                    return Err(Error::bad(format!("{self}: need m >= 1")));
                }
                let tail = check_n(n)?;
                let (head, rest) = match self {
                    Family::LeftTurn(..) => (L, R),
                    _ => (R, L),
                };
                let mut sides = vec![head; m];
                sides.extend(std::iter::repeat_n(rest, tail));
                PathWord(sides)
            }
        })
    }

    pub fn build(&self) -> Result<Tree> {
        Ok(decode_path(&self.path_word()?))
    }
}

pub fn make_family(kind: Family) -> Result<Tree> {
    kind.build()
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Family::LeftComb(n) => write!(f, "left-comb:{n}"),
            Family::RightComb(n) => write!(f, "right-comb:{n}"),
            Family::LeftCrooked(n) => write!(f, "left-crooked:{n}"),
            Family::RightCrooked(n) => write!(f, "right-crooked:{n}"),
            Family::LeftTurn(m, n) => write!(f, "left-turn:{m},{n}"),
            Family::RightTurn(m, n) => write!(f, "right-turn:{m},{n}"),
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    /// `left-comb:5`, `right-turn:2,3`, ...
    fn from_str(s: &str) -> Result<Self> {
        let (name, args) = s
            .split_once(':')
            .ok_or_else(|| Error::bad(format!("expected <family>:<params>, got {s:?}")))?;
        let nums = args
            .split(',')
            .map(|a| a.trim().parse::<usize>().map_err(|e| Error::bad(format!("{a:?}: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        let one = || match nums[..] {
            [n] => Ok(n),
            _ => Err(Error::bad(format!("{name} takes one parameter"))),
        };
        let two = || match nums[..] {
            [m, n] => Ok((m, n)),
            _ => Err(Error::bad(format!("{name} takes two parameters"))),
        };
        Ok(match name {
            "left-comb" => Family::LeftComb(one()?),
            "right-comb" => Family::RightComb(one()?),
            "left-crooked" => Family::LeftCrooked(one()?),
            "right-crooked" => Family::RightCrooked(one()?),
            "left-turn" => {
                let (m, n) = two()?;
                Family::LeftTurn(m, n)
            }
            "right-turn" => {
                let (m, n) = two()?;
                Family::RightTurn(m, n)
            }
            other => return Err(Error::bad(format!("unknown family {other:?}"))),
        })
    }
}
