//! Isomorphism-free generation of free trees.
//!
//! Trees are produced as level sequences of their canonical rooting (rooted
//! at the center, heaviest-first ordering) by the successor method of
//! Wright, Richmond, Odlyzko and McKay. Each free tree appears once, in a
//! fixed order, in constant amortized time per tree.

use thiserror::Error;

use crate::segments::{segment_count, segment_sequence, SegmentSequence};
use crate::tree::Tree;

/// Largest order [`all_trees`] accepts.
pub const MAX_ORDER: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumError {
    #[error("order {0} outside 1..={MAX_ORDER}")]
    OrderOutOfRange(usize),
    #[error("segment sequence {0} is not realizable")]
    Unrealizable(String),
}

/// Pull-based stream of trees of one order, one per isomorphism class.
pub struct TreeStream {
    order: usize,
    inner: Box<dyn Iterator<Item = Tree> + Send>,
}

impl TreeStream {
    pub fn order(&self) -> usize {
        self.order
    }
}

impl Iterator for TreeStream {
    type Item = Tree;

    fn next(&mut self) -> Option<Tree> {
        self.inner.next()
    }
}

pub fn all_trees(n: usize) -> Result<TreeStream, EnumError> {
    if n == 0 || n > MAX_ORDER {
        return Err(EnumError::OrderOutOfRange(n));
    }
    Ok(TreeStream {
        order: n,
        inner: Box::new(LevelSequences::new(n).map(|l| level_sequence_to_tree(&l))),
    })
}

/// `T_l`: the trees whose segment sequence is `seq`.
pub fn trees_with_segment_sequence(seq: &SegmentSequence) -> Result<TreeStream, EnumError> {
    if !seq.is_realizable() {
        return Err(EnumError::Unrealizable(seq.to_string()));
    }
    let wanted = seq.clone();
    let stream = all_trees(seq.order())?;
    Ok(TreeStream {
        order: stream.order,
        inner: Box::new(stream.filter(move |t| {
            segment_count(t).ok() == Some(wanted.count())
                && segment_sequence(t).ok().as_ref() == Some(&wanted)
        })),
    })
}

/// Trees of order `n` with exactly `m` segments; empty when none exist.
pub fn trees_with_segment_count(n: usize, m: usize) -> Result<TreeStream, EnumError> {
    let stream = all_trees(n)?;
    Ok(TreeStream {
        order: n,
        inner: Box::new(stream.filter(move |t| segment_count(t).ok() == Some(m))),
    })
}

/// Builds the tree of a level sequence: each vertex hangs from the latest
/// earlier vertex one level up.
pub fn level_sequence_to_tree(levels: &[usize]) -> Tree {
    let mut last_at: Vec<usize> = Vec::new();
    let mut parents = Vec::with_capacity(levels.len());
    for (v, &lvl) in levels.iter().enumerate() {
        parents.push(if lvl == 0 { None } else { Some(last_at[lvl - 1]) });
        last_at.truncate(lvl);
        last_at.push(v);
    }
    Tree::from_parents(&parents).expect("level sequence describes a tree")
}

/// Canonical level sequences of all free trees of order `n`.
pub struct LevelSequences {
    n: usize,
    next: Option<Vec<usize>>,
}

impl LevelSequences {
    pub fn new(n: usize) -> Self {
        let start = match n {
            0 => None,
            1 => Some(vec![0]),
            // the path, rooted at its center
            _ => Some((0..=n / 2).chain(1..n.div_ceil(2)).collect()),
        };
        LevelSequences { n, next: start }
    }
}

impl Iterator for LevelSequences {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let candidate = self.next.take()?;
        if self.n <= 2 {
            return Some(candidate);
        }
        let current = next_valid(candidate);
        self.next = next_rooted(&current, None);
        Some(current)
    }
}

/// Successor of a rooted level sequence; `p` overrides the position of the
/// last entry greater than 1.
fn next_rooted(levels: &[usize], p: Option<usize>) -> Option<Vec<usize>> {
    let p = match p {
        Some(p) => p,
        None => {
            let mut p = levels.len() - 1;
            while levels[p] == 1 {
                p -= 1;
            }
            p
        }
    };
    if p == 0 {
        return None;
    }
    let mut q = p - 1;
    while levels[q] != levels[p] - 1 {
        q -= 1;
    }
    let mut out = levels.to_vec();
    for i in p..out.len() {
        out[i] = out[i - p + q];
    }
    Some(out)
}

/// Splits at the second child of the root: the first principal subtree
/// (levels shifted down by one) and the root with everything after it.
fn split(levels: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let second = levels
        .iter()
        .enumerate()
        .filter(|&(_, &l)| l == 1)
        .nth(1)
        .map(|(i, _)| i)
        .unwrap_or(levels.len());
    let left = levels[1..second].iter().map(|l| l - 1).collect();
    let mut rest = vec![0];
    rest.extend_from_slice(&levels[second..]);
    (left, rest)
}

/// Returns `candidate` if it is the canonical rooting of a free tree,
/// otherwise jumps to the next sequence that is.
fn next_valid(candidate: Vec<usize>) -> Vec<usize> {
    let (left, rest) = split(&candidate);
    let left_height = left.iter().copied().max().unwrap_or(0);
    let rest_height = rest.iter().copied().max().unwrap_or(0);
    let mut valid = rest_height >= left_height;
    if valid && rest_height == left_height
        && (left.len() > rest.len() || (left.len() == rest.len() && left > rest)) {
            valid = false;
        }
    if valid {
        return candidate;
    }
    let p = left.len();
    let mut out = next_rooted(&candidate, Some(p)).expect("p > 0");
    if candidate[p] > 2 {
        let (new_left, _) = split(&out);
        let h = new_left.iter().copied().max().unwrap_or(0);
        let len = out.len();
        for (i, lvl) in (1..=h + 1).enumerate() {
            out[len - (h + 1) + i] = lvl;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::canonical_code;
    use std::collections::HashSet;

    // OEIS A000055
    const FREE_TREE_COUNTS: [usize; 16] = [
        1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551, 1301, 3159, 7741, 19320,
    ];

    #[test]
    fn counts_match_known_sequence() {
        for n in 1..=14 {
            assert_eq!(all_trees(n).unwrap().count(), FREE_TREE_COUNTS[n - 1], "n = {n}");
        }
    }

    #[test]
    fn emitted_trees_are_pairwise_non_isomorphic() {
        for n in 1..=12 {
            let mut seen = HashSet::new();
            for t in all_trees(n).unwrap() {
                assert_eq!(t.order(), n);
                assert!(seen.insert(canonical_code(&t)), "duplicate at n = {n}");
            }
        }
    }

    #[test]
    fn order_guard() {
        assert!(matches!(all_trees(0), Err(EnumError::OrderOutOfRange(0))));
        assert!(matches!(all_trees(17), Err(EnumError::OrderOutOfRange(17))));
    }

    #[test]
    fn segment_filters() {
        let s = |v: &[usize]| SegmentSequence::new(v.to_vec()).unwrap();
        assert_eq!(trees_with_segment_sequence(&s(&[1, 1, 1])).unwrap().count(), 1);
        assert_eq!(trees_with_segment_sequence(&s(&[2, 1, 1])).unwrap().count(), 1);
        assert_eq!(trees_with_segment_sequence(&s(&[1, 1, 1, 1, 1])).unwrap().count(), 2);
        assert!(trees_with_segment_sequence(&s(&[3, 1])).is_err());
        assert_eq!(trees_with_segment_count(5, 1).unwrap().count(), 1);
        assert_eq!(trees_with_segment_count(5, 2).unwrap().count(), 0);
        assert_eq!(trees_with_segment_count(6, 3).unwrap().count(), 2);
    }

    #[test]
    fn level_sequence_decoding() {
        let t = level_sequence_to_tree(&[0, 1, 2, 1, 1]);
        assert_eq!(t.degree(0), 3);
        assert_eq!(t.neighbors(1), &[0, 2]);
    }
}
