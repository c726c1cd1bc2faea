//! Segment-sequence-preserving tree transformations and a hill climber.
//!
//! * **Switch**: across a segment `w_0 .. w_s` joining two branch vertices,
//!   the components `A` hanging at `w_0` and `B` hanging at `w_s` trade
//!   places. `A` and `B` are sets of whole components (roots given by their
//!   neighbor of `w_0` / `w_s`); both ends must stay branch vertices.
//! * **Slide**: on a path `u_0 .. u_L` made of a bare segment of length `p`,
//!   a block `u_p .. u_{p+q}` with everything hanging from it, and a bare
//!   segment of length `p'`, the block moves so the two bare lengths swap.
//! * **Reattach**: for a segment `u_1 .. u_2` joining two branch vertices,
//!   every component hanging at `u_1` off the segment is moved to `u_2`,
//!   turning the segment into a pendant one.
//!
//! Deltas are always obtained by recomputing `SW_k` on both trees.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::canon::{canonical_code, CanonicalCode};
use crate::count::ExactCount;
use crate::segments::{segments_at, Segment};
use crate::steiner::{sw_k, SteinerError};
use crate::tree::Tree;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MoveError {
    #[error("invalid move descriptor: {0}")]
    InvalidDescriptor(String),
    #[error(transparent)]
    Steiner(#[from] SteinerError),
}

fn invalid<T>(msg: impl Into<String>) -> Result<T, MoveError> {
    Err(MoveError::InvalidDescriptor(msg.into()))
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum MoveDescriptor {
    Switch {
        w0: usize,
        ws: usize,
        /// Neighbors of `w0` whose components move to `ws`.
        a: Vec<usize>,
        /// Neighbors of `ws` whose components move to `w0`.
        b: Vec<usize>,
    },
    Slide {
        start: usize,
        block_start: usize,
        block_end: usize,
        end: usize,
    },
    Reattach {
        from: usize,
        to: usize,
        moved: Vec<usize>,
    },
}

impl MoveDescriptor {
    /// The orientation the enumerator emits: switches and slides describe the
    /// same move read from either end.
    pub fn normalized(self) -> MoveDescriptor {
        match self {
            MoveDescriptor::Switch { w0, ws, mut a, mut b } => {
                a.sort_unstable();
                b.sort_unstable();
                if w0 > ws {
                    MoveDescriptor::Switch { w0: ws, ws: w0, a: b, b: a }
                } else {
                    MoveDescriptor::Switch { w0, ws, a, b }
                }
            }
            MoveDescriptor::Slide { start, block_start, block_end, end } if start > end => {
                MoveDescriptor::Slide {
                    start: end,
                    block_start: block_end,
                    block_end: block_start,
                    end: start,
                }
            }
            MoveDescriptor::Reattach { from, to, mut moved } => {
                moved.sort_unstable();
                MoveDescriptor::Reattach { from, to, moved }
            }
            other => other,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            MoveDescriptor::Switch { .. } => "switch",
            MoveDescriptor::Slide { .. } => "slide",
            MoveDescriptor::Reattach { .. } => "reattach",
        }
    }
}

impl fmt::Display for MoveDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MoveDescriptor::Switch { w0, ws, a, b } => {
                write!(f, "switch {a:?}@{w0} <-> {b:?}@{ws}")
            }
            MoveDescriptor::Slide { start, block_start, block_end, end } => {
                write!(f, "slide [{block_start}..{block_end}] between {start} and {end}")
            }
            MoveDescriptor::Reattach { from, to, moved } => {
                write!(f, "reattach {moved:?} from {from} to {to}")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MoveOutcome {
    pub descriptor: MoveDescriptor,
    pub tree: Tree,
    /// `SW_k(after) - SW_k(before)`.
    pub delta: ExactCount,
}

/// Path from `a` to `b` if it is a segment between two branch vertices.
fn internal_segment(t: &Tree, a: usize, b: usize) -> Option<Vec<usize>> {
    if a == b || !t.is_branch(a) || !t.is_branch(b) {
        return None;
    }
    let path = t.path_between(a, b);
    path[1..path.len() - 1]
        .iter()
        .all(|&v| t.degree(v) == 2)
        .then_some(path)
}

fn check_roots(t: &Tree, at: usize, roots: &[usize], path_neighbor: usize) -> Result<(), MoveError> {
    let set: BTreeSet<usize> = roots.iter().copied().collect();
    if set.len() != roots.len() {
        return invalid("repeated component root");
    }
    for &r in roots {
        if r >= t.order() || !t.has_edge(at, r) {
            return invalid(format!("{r} is not a neighbor of {at}"));
        }
        if r == path_neighbor {
            return invalid(format!("{r} lies on the segment"));
        }
    }
    Ok(())
}

fn in_range(t: &Tree, vs: &[usize]) -> Result<(), MoveError> {
    match vs.iter().find(|&&v| v >= t.order()) {
        Some(v) => invalid(format!("vertex {v} out of range")),
        None => Ok(()),
    }
}

fn rebuild(t: &Tree, remove: &[(usize, usize)], add: &[(usize, usize)]) -> Result<Tree, MoveError> {
    let norm = |(u, v): (usize, usize)| (u.min(v), u.max(v));
    let mut edges: BTreeSet<(usize, usize)> = t.edges().into_iter().collect();
    for &e in remove {
        edges.remove(&norm(e));
    }
    edges.extend(add.iter().map(|&e| norm(e)));
    let edges: Vec<_> = edges.into_iter().collect();
    Tree::from_edges(t.order(), &edges).map_err(|e| MoveError::InvalidDescriptor(e.to_string()))
}

/// Checks a descriptor against `t` and returns the transformed tree.
pub fn transform(t: &Tree, m: &MoveDescriptor) -> Result<Tree, MoveError> {
    match m {
        MoveDescriptor::Switch { w0, ws, a, b } => {
            let (w0, ws) = (*w0, *ws);
            in_range(t, &[w0, ws])?;
            let Some(path) = internal_segment(t, w0, ws) else {
                return invalid("switch ends must be branch vertices joined by a segment");
            };
            check_roots(t, w0, a, path[1])?;
            check_roots(t, ws, b, path[path.len() - 2])?;
            if a.is_empty() && b.is_empty() {
                return invalid("switch moves nothing");
            }
            if t.degree(w0) + b.len() < a.len() + 3 || t.degree(ws) + a.len() < b.len() + 3 {
                return invalid("switch would leave an end with degree below 3");
            }
            let mut remove = Vec::new();
            let mut add = Vec::new();
            for &x in a {
                remove.push((w0, x));
                add.push((ws, x));
            }
            for &y in b {
                remove.push((ws, y));
                add.push((w0, y));
            }
            rebuild(t, &remove, &add)
        }
        MoveDescriptor::Slide { start, block_start, block_end, end } => {
            let (start, bs, be, end) = (*start, *block_start, *block_end, *end);
            in_range(t, &[start, bs, be, end])?;
            if start == end {
                return invalid("slide needs two distinct anchors");
            }
            if t.degree(start) == 2 || t.degree(end) == 2 {
                return invalid("slide anchors must be leaves or branch vertices");
            }
            if !t.is_branch(bs) || !t.is_branch(be) {
                return invalid("slide block must end in branch vertices");
            }
            let path = t.path_between(start, end);
            let (Some(p), Some(pq)) = (
                path.iter().position(|&v| v == bs),
                path.iter().position(|&v| v == be),
            ) else {
                return invalid("block is not on the anchor path");
            };
            let len = path.len() - 1;
            if p == 0 || p > pq || pq >= len {
                return invalid("block must sit strictly inside the anchor path, in order");
            }
            if path[1..p].iter().chain(&path[pq + 1..len]).any(|&v| t.degree(v) != 2) {
                return invalid("the flanking paths must be bare segments");
            }
            let p_prime = len - pq;
            let bare: Vec<usize> = path[1..p].iter().chain(&path[pq + 1..len]).copied().collect();
            let mut remove: Vec<(usize, usize)> = path[..=p].windows(2).map(|w| (w[0], w[1])).collect();
            remove.extend(path[pq..].windows(2).map(|w| (w[0], w[1])));
            let mut first = vec![start];
            first.extend_from_slice(&bare[..p_prime - 1]);
            first.push(bs);
            let mut second = vec![be];
            second.extend_from_slice(&bare[p_prime - 1..]);
            second.push(end);
            let add: Vec<(usize, usize)> = first
                .windows(2)
                .chain(second.windows(2))
                .map(|w| (w[0], w[1]))
                .collect();
            rebuild(t, &remove, &add)
        }
        MoveDescriptor::Reattach { from, to, moved } => {
            let (from, to) = (*from, *to);
            in_range(t, &[from, to])?;
            let Some(path) = internal_segment(t, from, to) else {
                return invalid("reattach ends must be branch vertices joined by a segment");
            };
            let mut expected: Vec<usize> = t
                .neighbors(from)
                .iter()
                .copied()
                .filter(|&x| x != path[1])
                .collect();
            expected.sort_unstable();
            let mut given = moved.clone();
            given.sort_unstable();
            if given != expected {
                return invalid("reattach must move every component at `from` off the segment");
            }
            let remove: Vec<_> = given.iter().map(|&x| (from, x)).collect();
            let add: Vec<_> = given.iter().map(|&x| (to, x)).collect();
            rebuild(t, &remove, &add)
        }
    }
}

fn outcome(t: &Tree, m: &MoveDescriptor, k: usize) -> Result<MoveOutcome, MoveError> {
    let tree = transform(t, m)?;
    let before = sw_k(t, k)?;
    let after = sw_k(&tree, k)?;
    Ok(MoveOutcome {
        descriptor: m.clone(),
        delta: after.checked_sub(before).map_err(SteinerError::from)?,
        tree,
    })
}

fn expect_kind(m: &MoveDescriptor, kind: &str) -> Result<(), MoveError> {
    if m.kind() == kind {
        Ok(())
    } else {
        invalid(format!("expected a {kind} descriptor, got {}", m.kind()))
    }
}

pub fn apply_switch(t: &Tree, m: &MoveDescriptor, k: usize) -> Result<MoveOutcome, MoveError> {
    expect_kind(m, "switch")?;
    outcome(t, m, k)
}

pub fn apply_slide(t: &Tree, m: &MoveDescriptor, k: usize) -> Result<MoveOutcome, MoveError> {
    expect_kind(m, "slide")?;
    outcome(t, m, k)
}

pub fn apply_reattach(t: &Tree, m: &MoveDescriptor, k: usize) -> Result<MoveOutcome, MoveError> {
    expect_kind(m, "reattach")?;
    outcome(t, m, k)
}

fn subsets(items: &[usize]) -> Vec<Vec<usize>> {
    (0u32..1 << items.len())
        .map(|mask| {
            items
                .iter()
                .enumerate()
                .filter(|&(i, _)| mask & (1 << i) != 0)
                .map(|(_, &x)| x)
                .collect()
        })
        .collect()
}

/// Every valid descriptor on `t`, each move listed once.
pub fn descriptors(t: &Tree) -> Vec<MoveDescriptor> {
    let mut out = Vec::new();
    if t.order() < 2 {
        return out;
    }
    let branches = t.branch_vertices();

    // segments joining two branch vertices
    for &a in &branches {
        for seg in segments_at(t, a) {
            let (_, b) = seg.ends();
            if !t.is_branch(b) || a > b {
                continue;
            }
            let off = |v: usize, path_nb: usize| -> Vec<usize> {
                t.neighbors(v).iter().copied().filter(|&x| x != path_nb).collect()
            };
            let at_a = off(a, seg.vertices[1]);
            let at_b = off(b, seg.vertices[seg.vertices.len() - 2]);
            for sa in subsets(&at_a) {
                for sb in subsets(&at_b) {
                    let m = MoveDescriptor::Switch { w0: a, ws: b, a: sa.clone(), b: sb };
                    if transform_is_valid(t, &m) {
                        out.push(m);
                    }
                }
            }
            out.push(MoveDescriptor::Reattach { from: a, to: b, moved: at_a });
            out.push(MoveDescriptor::Reattach { from: b, to: a, moved: at_b });
        }
    }

    for &b1 in &branches {
        for &b2 in &branches {
            let (toward_b2, toward_b1) = if b1 == b2 {
                (None, None)
            } else {
                let p = t.path_between(b1, b2);
                (Some(p[1]), Some(p[p.len() - 2]))
            };
            let legs1: Vec<Segment> = segments_at(t, b1)
                .into_iter()
                .filter(|s| Some(s.vertices[1]) != toward_b2)
                .collect();
            let legs2: Vec<Segment> = segments_at(t, b2)
                .into_iter()
                .filter(|s| Some(s.vertices[1]) != toward_b1)
                .collect();
            for g1 in &legs1 {
                for g2 in &legs2 {
                    if b1 == b2 && g1.vertices[1] == g2.vertices[1] {
                        continue;
                    }
                    let (start, end) = (g1.ends().1, g2.ends().1);
                    if start < end {
                        out.push(MoveDescriptor::Slide {
                            start,
                            block_start: b1,
                            block_end: b2,
                            end,
                        });
                    }
                }
            }
        }
    }
    out
}

fn transform_is_valid(t: &Tree, m: &MoveDescriptor) -> bool {
    transform(t, m).is_ok()
}

/// All valid moves on `t`, applied and scored at `k`.
pub fn neighbors(t: &Tree, k: usize) -> Result<Vec<MoveOutcome>, MoveError> {
    let before = sw_k(t, k)?;
    descriptors(t)
        .into_par_iter()
        .map(|m| {
            let tree = transform(t, &m)?;
            let after = sw_k(&tree, k)?;
            Ok(MoveOutcome {
                descriptor: m,
                delta: after.checked_sub(before).map_err(SteinerError::from)?,
                tree,
            })
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Maximize,
    Minimize,
}

impl FromStr for Direction {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "max" | "maximize" => Ok(Direction::Maximize),
            "min" | "minimize" => Ok(Direction::Minimize),
            other => Err(format!("unknown direction {other:?}; expected max or min")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClimbStep {
    pub descriptor: MoveDescriptor,
    pub delta: ExactCount,
    pub value: ExactCount,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClimbResult {
    pub tree: Tree,
    pub value: ExactCount,
    pub steps: Vec<ClimbStep>,
}

/// Steepest ascent (or descent) over [`neighbors`]. Ties on delta go to the
/// smallest canonical code of the resulting tree.
pub fn hill_climb(t: &Tree, k: usize, direction: Direction) -> Result<ClimbResult, MoveError> {
    let mut current = t.clone();
    let mut value = sw_k(&current, k)?;
    let mut steps = Vec::new();
    loop {
        let best = neighbors(&current, k)?
            .into_iter()
            .filter(|o| match direction {
                Direction::Maximize => o.delta > ExactCount::ZERO,
                Direction::Minimize => o.delta < ExactCount::ZERO,
            })
            .map(|o| {
                let code = canonical_code(&o.tree);
                (o, code)
            })
            .min_by(|(x, cx), (y, cy)| {
                let by_delta = match direction {
                    Direction::Maximize => y.delta.cmp(&x.delta),
                    Direction::Minimize => x.delta.cmp(&y.delta),
                };
                by_delta.then_with(|| cx.cmp(cy))
            });
        let Some((o, _)): Option<(MoveOutcome, CanonicalCode)> = best else {
            break;
        };
        value = value.checked_add(o.delta).map_err(SteinerError::from)?;
        steps.push(ClimbStep {
            descriptor: o.descriptor,
            delta: o.delta,
            value,
        });
        current = o.tree;
    }
    Ok(ClimbResult {
        tree: current,
        value,
        steps,
    })
}
