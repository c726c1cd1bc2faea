//! Segment decomposition and the structural classes built on it.
//!
//! A segment is a maximal path whose interior vertices all have degree 2; its
//! ends are leaves or branch vertices (degree at least 3). The segments of a
//! tree partition its edges.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::tree::Tree;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SegmentError {
    #[error("a single-vertex tree has no segments")]
    EmptyDecomposition,
    #[error("tree is not a quasi-caterpillar")]
    NotQuasiCaterpillar,
    #[error("segment lengths must be positive")]
    ZeroLength,
    #[error("segment sequence is empty")]
    EmptySequence,
    #[error("invalid segment sequence {0:?}")]
    Parse(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Segment {
    /// Ordered path; first and last are the ends.
    pub vertices: Vec<usize>,
}

impl Segment {
    pub fn length(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn ends(&self) -> (usize, usize) {
        (self.vertices[0], *self.vertices.last().expect("nonempty"))
    }

    pub fn interior(&self) -> &[usize] {
        &self.vertices[1..self.vertices.len() - 1]
    }

    /// One end is a leaf. Both ends are leaves only in a path tree.
    pub fn is_pendant(&self, t: &Tree) -> bool {
        let (a, b) = self.ends();
        t.is_leaf(a) || t.is_leaf(b)
    }
}

/// Segment lengths in non-increasing order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct SegmentSequence(Vec<usize>);

impl SegmentSequence {
    /// Sorts `lengths` into non-increasing order.
    pub fn new(mut lengths: Vec<usize>) -> Result<Self, SegmentError> {
        if lengths.is_empty() {
            return Err(SegmentError::EmptySequence);
        }
        if lengths.contains(&0) {
            return Err(SegmentError::ZeroLength);
        }
        lengths.sort_unstable_by(|a, b| b.cmp(a));
        Ok(SegmentSequence(lengths))
    }

    pub fn lengths(&self) -> &[usize] {
        &self.0
    }

    pub fn count(&self) -> usize {
        self.0.len()
    }

    /// Order of every tree with this segment sequence.
    pub fn order(&self) -> usize {
        1 + self.0.iter().sum::<usize>()
    }

    /// No tree has exactly two segments.
    pub fn is_realizable(&self) -> bool {
        self.count() != 2
    }

    /// All realizable sequences of a given order, in descending lexicographic
    /// order of the length vector.
    pub fn all_of_order(n: usize) -> Vec<SegmentSequence> {
        if n < 2 {
            return Vec::new();
        }
        let mut out = Vec::new();
        let mut current = Vec::new();
        partitions(n - 1, n - 1, &mut current, &mut out);
        out.into_iter()
            .map(SegmentSequence)
            .filter(SegmentSequence::is_realizable)
            .collect()
    }
}

fn partitions(remaining: usize, max_part: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if remaining == 0 {
        out.push(current.clone());
        return;
    }
    for part in (1..=max_part.min(remaining)).rev() {
        current.push(part);
        partitions(remaining - part, part, current, out);
        current.pop();
    }
}

impl TryFrom<Vec<usize>> for SegmentSequence {
    type Error = SegmentError;

    fn try_from(v: Vec<usize>) -> Result<Self, Self::Error> {
        SegmentSequence::new(v)
    }
}

impl From<SegmentSequence> for Vec<usize> {
    fn from(s: SegmentSequence) -> Self {
        s.0
    }
}

impl FromStr for SegmentSequence {
    type Err = SegmentError;

    /// Comma separated, e.g. `3,2,2`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let lengths = s
            .split(',')
            .map(|f| f.trim().parse::<usize>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| SegmentError::Parse(s.to_string()))?;
        SegmentSequence::new(lengths)
    }
}

impl fmt::Display for SegmentSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(usize::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

fn is_terminal(t: &Tree, v: usize) -> bool {
    t.degree(v) != 2
}

/// Walks from terminal `start` through `first` until the next terminal.
pub(crate) fn walk_segment(t: &Tree, start: usize, first: usize) -> Segment {
    let mut vertices = vec![start, first];
    let (mut prev, mut cur) = (start, first);
    while !is_terminal(t, cur) {
        let next = t
            .neighbors(cur)
            .iter()
            .copied()
            .find(|&w| w != prev)
            .expect("degree-2 vertex has another neighbor");
        vertices.push(next);
        prev = cur;
        cur = next;
    }
    Segment { vertices }
}

/// Every edge of `t` lies in exactly one returned segment. Segments are
/// oriented from their smaller end id and listed in order of that end.
pub fn segment_decomposition(t: &Tree) -> Result<Vec<Segment>, SegmentError> {
    if t.order() < 2 {
        return Err(SegmentError::EmptyDecomposition);
    }
    let mut segments = Vec::new();
    for a in (0..t.order()).filter(|&v| is_terminal(t, v)) {
        for &w in t.neighbors(a) {
            let seg = walk_segment(t, a, w);
            let (_, b) = seg.ends();
            // every segment is walked once from each end
            if a < b {
                segments.push(seg);
            }
        }
    }
    Ok(segments)
}

/// Segments starting at terminal `v`, each oriented away from `v`.
pub fn segments_at(t: &Tree, v: usize) -> Vec<Segment> {
    debug_assert!(is_terminal(t, v));
    t.neighbors(v).iter().map(|&w| walk_segment(t, v, w)).collect()
}

pub fn segment_sequence(t: &Tree) -> Result<SegmentSequence, SegmentError> {
    let lengths = segment_decomposition(t)?
        .iter()
        .map(Segment::length)
        .collect();
    SegmentSequence::new(lengths)
}

/// Number of segments; cheaper than a full decomposition.
pub fn segment_count(t: &Tree) -> Result<usize, SegmentError> {
    if t.order() < 2 {
        return Err(SegmentError::EmptyDecomposition);
    }
    // each segment has two terminal ends
    let ends: usize = (0..t.order())
        .filter(|&v| is_terminal(t, v))
        .map(|v| t.degree(v))
        .sum();
    Ok(ends / 2)
}

/// At most one branch vertex. Paths count as degenerate starlike trees.
pub fn is_starlike(t: &Tree) -> bool {
    t.branch_vertices().len() <= 1
}

/// True when removing every pendant segment (all of its vertices except the
/// non-leaf end) leaves a path. Paths and starlike trees qualify.
pub fn is_quasi_caterpillar(t: &Tree) -> bool {
    if t.order() <= 2 || t.branch_vertices().is_empty() {
        return true;
    }
    let mut removed = vec![false; t.order()];
    for seg in segment_decomposition(t).expect("order >= 2") {
        let (a, b) = seg.ends();
        let keep = match (t.is_leaf(a), t.is_leaf(b)) {
            (true, false) => b,
            (false, true) => a,
            _ => continue,
        };
        for &v in &seg.vertices {
            if v != keep {
                removed[v] = true;
            }
        }
    }
    // what remains is connected; it is a path iff no vertex keeps 3 neighbors
    (0..t.order()).filter(|&v| !removed[v]).all(|v| {
        t.neighbors(v).iter().filter(|&&w| !removed[w]).count() <= 2
    })
}

/// Caterpillar in the sense used for extremal families: a quasi-caterpillar
/// whose pendant segments all have length 1.
pub fn is_caterpillar(t: &Tree) -> bool {
    if !is_quasi_caterpillar(t) {
        return false;
    }
    if t.order() <= 2 || t.branch_vertices().is_empty() {
        return true;
    }
    crate::backbone::backbone(t)
        .map(|b| b.pendant_segment_lengths.iter().all(|&s| s == 1))
        .unwrap_or(false)
}
