//! Named example pairs used throughout the tests and the CLI.
//!
//! Trees are also addressed by their 1-based position in [`all_trees`]
//! order (`7-64` is the 64th seven-leaf tree); see [`indexed_tree`].
//!
//! [`all_trees`]: crate::enumeration::all_trees

use crate::enumeration::{all_trees, TreePair};
use crate::error::{Error, Result};
use crate::tree::{Family, Tree};

/// The `index`-th (1-based) `n`-leaf tree in enumeration order.
pub fn indexed_tree(n: usize, index: usize) -> Option<Tree> {
    index.checked_sub(1).and_then(|i| all_trees(n).nth(i))
}

/// Reads a tree given as a literal (`(*(**))`), a path word (`path:lr`),
/// a family (`left-comb:5`, `left-turn:2,3`) or an index (`7-64`).
pub fn resolve_tree(text: &str) -> Result<Tree> {
    let text = text.trim();
    if text.starts_with('(') || text == "*" || text.starts_with("path:") {
        return text.parse();
    }
    if text.contains(':') {
        return text.parse::<Family>()?.build();
    }
    let parsed = text
        .split_once('-')
        .and_then(|(n, i)| Some((n.parse::<usize>().ok()?, i.parse::<usize>().ok()?)));
    match parsed {
        Some((n, i)) => indexed_tree(n, i).ok_or_else(|| Error::bad(format!("no tree {n}-{i}"))),
        None => Err(Error::parse(0, format!("not a tree, family or index: {text:?}"))),
    }
}

fn lit(s: &str) -> Tree {
    s.parse().expect("catalog literal")
}

/// Seven-leaf pair whose only common parse word class is `0110212`.
pub fn intro_pair() -> TreePair {
    TreePair::new(lit("(*(*((**)((**)*))))"), lit("(((**)*)((**)(**)))")).expect("equal sizes")
}

/// Eight-leaf pair sharing the branch system `(*((**)*))` on leaves 2..5.
pub fn shared_branch_pair() -> TreePair {
    TreePair::new(lit("(*((*((**)*))(*(**))))"), lit("((*(*((**)*)))((**)*))")).expect("equal sizes")
}

/// Seven-leaf pair with common parse word `0001220`, obtained by triplicating
/// leaf 1 of the five-leaf pair parsing `01220`.
pub fn triplicated_pair() -> TreePair {
    TreePair::new(lit("(*(*(*(*(*(**))))))"), lit("((*(*(*((**)*))))*)")).expect("equal sizes")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn figure_indices_resolve_to_catalog_trees() {
        let intro = intro_pair();
        assert_eq!(indexed_tree(7, 7).as_ref(), Some(intro.t1()));
        assert_eq!(indexed_tree(7, 64).as_ref(), Some(intro.t2()));

        let shared = shared_branch_pair();
        assert_eq!(indexed_tree(8, 69).as_ref(), Some(shared.t1()));
        assert_eq!(indexed_tree(8, 231).as_ref(), Some(shared.t2()));
        assert_eq!(indexed_tree(4, 2), Some(lit("(*((**)*))")));
        assert_eq!(indexed_tree(5, 1), Some(lit("(*(*(*(**))))")));
        assert_eq!(indexed_tree(5, 7), Some(lit("((**)((**)*))")));

        let trip = triplicated_pair();
        assert_eq!(indexed_tree(7, 1).as_ref(), Some(trip.t1()));
        assert_eq!(indexed_tree(7, 92).as_ref(), Some(trip.t2()));
        assert_eq!(indexed_tree(5, 11), Some(lit("((*((**)*))*)")));
        assert_eq!(indexed_tree(3, 1), Some(lit("(*(**))")));
        assert_eq!(indexed_tree(3, 0), None);
    }

    #[test]
    fn resolves_every_argument_form() {
        assert_eq!(resolve_tree("(**)").unwrap(), Tree::cherry());
        assert_eq!(
            resolve_tree("path:lr").unwrap(),
            Family::LeftCrooked(4).build().unwrap()
        );
        assert_eq!(resolve_tree("left-comb:3").unwrap(), lit("((**)*)"));
        assert_eq!(resolve_tree("7-64").unwrap(), intro_pair().t2().clone());
        assert!(resolve_tree("3-9").is_err());
        assert!(resolve_tree("oak").is_err());
    }
}
