//! Parse words of binary tree pairs under the three-letter grammar
//! `0 -> 12 | 21`, `1 -> 02 | 20`, `2 -> 01 | 10`.
//!
//! A word is parsed by a tree when its letters, placed on the leaves, force
//! a consistent labeling of every internal vertex: the two children of a
//! vertex carry distinct letters and the vertex carries the third. Every
//! pair of same-size trees is expected to share a parse word; this crate
//! enumerates, counts, reduces and verifies such words.

pub mod catalog;
pub mod closed_forms;
pub mod enumeration;
pub mod error;
pub mod grammar;
pub mod harness;
pub mod reductions;
pub mod search;
pub mod tree;
pub mod vector;

pub use enumeration::{
    all_path_trees, all_trees, count_parse_words, parse_words, parse_words_with, ParseWordSet, Strategy, TreePair,
};
pub use error::{Error, Result};
pub use grammar::{canonicalize, parse, parses, Labeling, Letter, Word, WordClass};
pub use tree::{decode_path, encode_path, make_family, Family, LeafInterval, PathWord, Tree};
