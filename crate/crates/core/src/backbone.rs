//! Backbones of quasi-caterpillars and the sequence shapes checked on them.
//!
//! The backbone is a longest path containing every branch vertex. It runs
//! between the two extreme branch vertices and is extended at each end by a
//! longest pendant segment there, so it is unique up to ties among equally
//! long end segments. [`all_backbones`] lists every choice in both
//! orientations; [`backbone`] picks the smallest by `(r, s-groups, path)`.

use crate::segments::{is_quasi_caterpillar, segments_at, Segment, SegmentError};
use crate::tree::Tree;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BackboneView {
    /// `v_0 .. v_k` as vertex ids; both ends are leaves.
    pub path: Vec<usize>,
    /// Positions in `path` of the branch vertices (the joints).
    pub branch_indices: Vec<usize>,
    /// `r_1 .. r_k`, lengths of the backbone segments from `v_0` onwards.
    pub backbone_segment_lengths: Vec<usize>,
    /// Pendant segment lengths per joint, in backbone order; each group is
    /// sorted non-increasing.
    pub pendant_groups: Vec<Vec<usize>>,
    /// `s_1 .. s_k'`, the groups flattened.
    pub pendant_segment_lengths: Vec<usize>,
}

impl BackboneView {
    pub fn joints(&self) -> impl Iterator<Item = usize> + '_ {
        self.branch_indices.iter().map(|&i| self.path[i])
    }

    fn key(&self) -> (&[usize], &[Vec<usize>], &[usize]) {
        (
            &self.backbone_segment_lengths,
            &self.pendant_groups,
            &self.path,
        )
    }
}

pub fn backbone(t: &Tree) -> Result<BackboneView, SegmentError> {
    all_backbones(t)?
        .into_iter()
        .min_by(|a, b| a.key().cmp(&b.key()))
        .ok_or(SegmentError::NotQuasiCaterpillar)
}

/// Every valid backbone, in both orientations.
pub fn all_backbones(t: &Tree) -> Result<Vec<BackboneView>, SegmentError> {
    if t.order() < 2 {
        return Err(SegmentError::EmptyDecomposition);
    }
    if !is_quasi_caterpillar(t) {
        return Err(SegmentError::NotQuasiCaterpillar);
    }
    let branches = t.branch_vertices();
    let mut paths: Vec<Vec<usize>> = Vec::new();

    if branches.is_empty() {
        let leaves: Vec<usize> = (0..t.order()).filter(|&v| t.is_leaf(v)).collect();
        paths.push(t.path_between(leaves[0], leaves[1]));
    } else {
        let (e1, e2) = extreme_branches(t, &branches);
        if e1 == e2 {
            // starlike: the two longest legs through the center
            let legs = segments_at(t, e1);
            let best = legs
                .iter()
                .enumerate()
                .flat_map(|(i, a)| legs[i + 1..].iter().map(move |b| a.length() + b.length()))
                .max()
                .expect("a branch vertex has at least three legs");
            for (i, a) in legs.iter().enumerate() {
                for b in &legs[i + 1..] {
                    if a.length() + b.length() == best {
                        let mut path: Vec<usize> = a.vertices.iter().rev().copied().collect();
                        path.extend_from_slice(&b.vertices[1..]);
                        paths.push(path);
                    }
                }
            }
        } else {
            let spine = t.path_between(e1, e2);
            let ends_first = longest_off_spine(t, e1, spine[1]);
            let ends_last = longest_off_spine(t, e2, spine[spine.len() - 2]);
            for a in &ends_first {
                for b in &ends_last {
                    let mut path: Vec<usize> = a.vertices.iter().rev().copied().collect();
                    path.extend_from_slice(&spine[1..]);
                    path.extend_from_slice(&b.vertices[1..]);
                    paths.push(path);
                }
            }
        }
    }

    let mut out = Vec::with_capacity(paths.len() * 2);
    for path in paths {
        let mut rev = path.clone();
        rev.reverse();
        out.push(view_of(t, path));
        out.push(view_of(t, rev));
    }
    out.sort_by(|a, b| a.key().cmp(&b.key()));
    out.dedup();
    Ok(out)
}

fn extreme_branches(t: &Tree, branches: &[usize]) -> (usize, usize) {
    let farthest = |from: usize| {
        let dist = t.distances_from(from);
        *branches
            .iter()
            .max_by_key(|&&b| (dist[b], std::cmp::Reverse(b)))
            .expect("nonempty")
    };
    let e1 = farthest(branches[0]);
    let e2 = farthest(e1);
    (e1.min(e2), e1.max(e2))
}

/// Longest segments at `v` that do not start toward `avoid`.
fn longest_off_spine(t: &Tree, v: usize, avoid: usize) -> Vec<Segment> {
    let candidates: Vec<Segment> = segments_at(t, v)
        .into_iter()
        .filter(|s| s.vertices[1] != avoid)
        .collect();
    let best = candidates.iter().map(Segment::length).max().unwrap_or(0);
    candidates
        .into_iter()
        .filter(|s| s.length() == best)
        .collect()
}

fn view_of(t: &Tree, path: Vec<usize>) -> BackboneView {
    let branch_indices: Vec<usize> = (1..path.len() - 1)
        .filter(|&i| t.is_branch(path[i]))
        .collect();
    let mut stops = vec![0];
    stops.extend(&branch_indices);
    stops.push(path.len() - 1);
    let backbone_segment_lengths = stops.windows(2).map(|w| w[1] - w[0]).collect();

    let pendant_groups: Vec<Vec<usize>> = branch_indices
        .iter()
        .map(|&i| {
            let (prev, next) = (path[i - 1], path[i + 1]);
            let mut lens: Vec<usize> = segments_at(t, path[i])
                .iter()
                .filter(|s| s.vertices[1] != prev && s.vertices[1] != next)
                .map(Segment::length)
                .collect();
            lens.sort_unstable_by(|a, b| b.cmp(a));
            lens
        })
        .collect();
    let pendant_segment_lengths = pendant_groups.iter().flatten().copied().collect();
    BackboneView {
        path,
        branch_indices,
        backbone_segment_lengths,
        pendant_groups,
        pendant_segment_lengths,
    }
}

/// `x_1 <= .. <= x_j >= .. >= x_k` for some `j`.
pub fn is_unimodal(xs: &[usize]) -> bool {
    let mut i = 0;
    while i + 1 < xs.len() && xs[i] <= xs[i + 1] {
        i += 1;
    }
    while i + 1 < xs.len() && xs[i] >= xs[i + 1] {
        i += 1;
    }
    i + 1 >= xs.len()
}

/// `x_1 >= .. >= x_j <= .. <= x_k` for some `j`.
pub fn is_valley(xs: &[usize]) -> bool {
    let mut i = 0;
    while i + 1 < xs.len() && xs[i] >= xs[i + 1] {
        i += 1;
    }
    while i + 1 < xs.len() && xs[i] <= xs[i + 1] {
        i += 1;
    }
    i + 1 >= xs.len()
}

/// Whether the groups, kept in order but each permuted freely, can be laid
/// out as a valley. Pendant segments at one joint have no intrinsic order.
pub fn groups_admit_valley(groups: &[Vec<usize>]) -> bool {
    let groups: Vec<&Vec<usize>> = groups.iter().filter(|g| !g.is_empty()).collect();
    if groups.is_empty() {
        return true;
    }
    let min = |g: &Vec<usize>| *g.iter().min().expect("nonempty");
    let max = |g: &Vec<usize>| *g.iter().max().expect("nonempty");
    // pick the group holding the turning point
    (0..groups.len()).any(|pivot| {
        let before_ok = (0..pivot).all(|i| i + 1 >= pivot || min(groups[i]) >= max(groups[i + 1]));
        let after_ok = (pivot + 1..groups.len())
            .all(|i| i + 1 >= groups.len() || max(groups[i]) <= min(groups[i + 1]));
        if !before_ok || !after_ok {
            return false;
        }
        // the pivot group fits iff none of its elements exceeds both the
        // value just before it and the value just after it
        let left = if pivot > 0 { min(groups[pivot - 1]) } else { usize::MAX };
        let right = if pivot + 1 < groups.len() {
            min(groups[pivot + 1])
        } else {
            usize::MAX
        };
        max(groups[pivot]) <= left.max(right)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{sample_quasi_caterpillar, sample_starlike};

    #[test]
    fn sample_backbone() {
        let t = sample_quasi_caterpillar();
        let b = backbone(&t).unwrap();
        assert_eq!(b.path.len() - 1, 6);
        assert_eq!(b.pendant_segment_lengths.len(), 5);
        assert_eq!(b.backbone_segment_lengths, vec![1, 2, 1, 2]);
        assert_eq!(b.pendant_groups, vec![vec![1], vec![3, 2], vec![1, 1]]);
        for v in t.branch_vertices() {
            assert!(b.path.contains(&v));
        }
        // the end at vertex 1 can use either of two unit segments
        let all = all_backbones(&t).unwrap();
        let distinct_paths: std::collections::BTreeSet<_> = all
            .iter()
            .map(|v| {
                let mut p = v.path.clone();
                if p[0] > *p.last().unwrap() {
                    p.reverse();
                }
                p
            })
            .collect();
        assert_eq!(distinct_paths.len(), 2);
    }

    #[test]
    fn path_backbone_is_whole_path() {
        let b = backbone(&Tree::path(5)).unwrap();
        assert_eq!(b.path, vec![0, 1, 2, 3, 4]);
        assert!(b.pendant_segment_lengths.is_empty());
        assert_eq!(b.backbone_segment_lengths, vec![4]);
    }

    #[test]
    fn starlike_backbone_uses_two_longest_legs() {
        let b = backbone(&sample_starlike()).unwrap();
        let mut r = b.backbone_segment_lengths.clone();
        r.sort_unstable();
        assert_eq!(r, vec![2, 3]);
        assert_eq!(b.pendant_groups.len(), 1);
        assert_eq!(b.pendant_groups[0], vec![2, 2, 1, 1, 1, 1, 1]);
    }

    #[test]
    fn non_quasi_caterpillar_rejected() {
        let t = Tree::from_edges(
            10,
            &[(0, 1), (0, 2), (0, 3), (1, 4), (1, 5), (2, 6), (2, 7), (3, 8), (3, 9)],
        )
        .unwrap();
        assert_eq!(backbone(&t), Err(SegmentError::NotQuasiCaterpillar));
    }

    #[test]
    fn unimodal_shapes() {
        assert!(is_unimodal(&[]));
        assert!(is_unimodal(&[1, 2, 3, 3, 1]));
        assert!(is_unimodal(&[3, 2, 1]));
        assert!(!is_unimodal(&[2, 1, 2]));
        assert!(is_valley(&[2, 1, 2]));
        assert!(!is_valley(&[1, 2, 1]));
    }

    fn permutations(g: &[usize]) -> Vec<Vec<usize>> {
        if g.len() <= 1 {
            return vec![g.to_vec()];
        }
        let mut out = Vec::new();
        for i in 0..g.len() {
            let mut rest = g.to_vec();
            let x = rest.remove(i);
            for mut p in permutations(&rest) {
                p.insert(0, x);
                out.push(p);
            }
        }
        out
    }

    fn valley_by_brute_force(groups: &[Vec<usize>]) -> bool {
        let mut layouts: Vec<Vec<usize>> = vec![Vec::new()];
        for g in groups {
            let mut next = Vec::new();
            for prefix in &layouts {
                for p in permutations(g) {
                    let mut l = prefix.clone();
                    l.extend(p);
                    next.push(l);
                }
            }
            layouts = next;
        }
        layouts.iter().any(|l| is_valley(l))
    }

    #[test]
    fn grouped_valley_matches_brute_force() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..2000 {
            let k = rng.gen_range(0..5);
            let groups: Vec<Vec<usize>> = (0..k)
                .map(|_| {
                    let len = rng.gen_range(1..4);
                    (0..len).map(|_| rng.gen_range(1..5)).collect()
                })
                .collect();
            assert_eq!(
                groups_admit_valley(&groups),
                valley_by_brute_force(&groups),
                "{groups:?}"
            );
        }
    }
}
