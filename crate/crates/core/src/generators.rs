//! Constructors for the extremal trees: starlike and balanced starlike trees,
//! quasi-caterpillars with a prescribed backbone, and the caterpillar
//! families `T_i .. T_iv` for a given order and segment count.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::segments::{segment_count, segment_sequence, SegmentSequence};
use crate::tree::Tree;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenError {
    #[error("unrealizable: {0}")]
    Unrealizable(String),
    #[error("backbone joint {0} has no pendant segment")]
    JointWithoutPendant(usize),
    #[error("pendant index {index} outside 1..={max}")]
    InvalidIndex { index: usize, max: usize },
    #[error("segment lengths must be positive")]
    ZeroLength,
    #[error("family {family} needs {requirement}, got m = {m}")]
    ParityMismatch {
        family: Family,
        m: usize,
        requirement: &'static str,
    },
    #[error("family {family} with m = {m} does not fit in order {n}")]
    InconsistentOrder { family: Family, n: usize, m: usize },
    #[error("constructed tree failed validation: {0}")]
    Validation(String),
}

/// One center with pendant paths of the given lengths; `(l)` is a path.
pub fn starlike(seq: &SegmentSequence) -> Result<Tree, GenError> {
    if !seq.is_realizable() {
        return Err(GenError::Unrealizable(format!(
            "no tree has segment sequence {seq}"
        )));
    }
    let n = seq.order();
    let mut edges = Vec::with_capacity(n - 1);
    let mut next = 1;
    for &len in seq.lengths() {
        let mut prev = 0;
        for _ in 0..len {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
    }
    let t = Tree::from_edges(n, &edges).map_err(|e| GenError::Validation(e.to_string()))?;
    // a single leg is a path whose "center" is a leaf; nothing else to check
    Ok(t)
}

/// Legs of length `floor((n-1)/m)` or `ceil((n-1)/m)`.
pub fn balanced_legs(n: usize, m: usize) -> Result<SegmentSequence, GenError> {
    if n < 2 || m == 0 || m == 2 || m > n - 1 {
        return Err(GenError::Unrealizable(format!(
            "no tree of order {n} has {m} segments"
        )));
    }
    let (q, r) = ((n - 1) / m, (n - 1) % m);
    let legs = (0..m).map(|i| if i < r { q + 1 } else { q }).collect();
    SegmentSequence::new(legs).map_err(|e| GenError::Validation(e.to_string()))
}

pub fn balanced_starlike(n: usize, m: usize) -> Result<Tree, GenError> {
    starlike(&balanced_legs(n, m)?)
}

/// Builds a quasi-caterpillar from backbone segment lengths `r_1..r_k` and
/// pendant segments given as `(joint, length)`, joints numbered `1..k-1`.
/// Vertices `0..=sum(r)` form the backbone in order.
pub fn quasi_caterpillar(backbone: &[usize], pendants: &[(usize, usize)]) -> Result<Tree, GenError> {
    if backbone.is_empty() || backbone.contains(&0) || pendants.iter().any(|&(_, l)| l == 0) {
        return Err(GenError::ZeroLength);
    }
    let joints = backbone.len() - 1;
    let mut has_pendant = vec![false; joints + 1];
    for &(index, _) in pendants {
        if index == 0 || index > joints {
            return Err(GenError::InvalidIndex { index, max: joints });
        }
        has_pendant[index] = true;
    }
    if let Some(j) = (1..=joints).find(|&j| !has_pendant[j]) {
        return Err(GenError::JointWithoutPendant(j));
    }

    let spine: usize = backbone.iter().sum();
    let mut position = vec![0usize; joints + 1];
    for j in 1..=joints {
        position[j] = position[j - 1] + backbone[j - 1];
    }
    let mut edges: Vec<(usize, usize)> = (1..=spine).map(|v| (v - 1, v)).collect();
    let mut next = spine + 1;
    for &(index, len) in pendants {
        let mut prev = position[index];
        for _ in 0..len {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
    }
    let t = Tree::from_edges(next, &edges).map_err(|e| GenError::Validation(e.to_string()))?;

    let mut wanted: Vec<usize> = backbone.to_vec();
    wanted.extend(pendants.iter().map(|&(_, l)| l));
    let wanted = SegmentSequence::new(wanted).map_err(|e| GenError::Validation(e.to_string()))?;
    let got = segment_sequence(&t).map_err(|e| GenError::Validation(e.to_string()))?;
    if got != wanted {
        return Err(GenError::Validation(format!(
            "requested segments {wanted}, built {got}"
        )));
    }
    Ok(t)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    I,
    II,
    III,
    IV,
}

impl Family {
    pub const ALL: [Family; 4] = [Family::I, Family::II, Family::III, Family::IV];
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::I => "i",
            Family::II => "ii",
            Family::III => "iii",
            Family::IV => "iv",
        })
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "i" | "1" => Ok(Family::I),
            "ii" | "2" => Ok(Family::II),
            "iii" | "3" => Ok(Family::III),
            "iv" | "4" => Ok(Family::IV),
            other => Err(format!("unknown family {other:?}; expected i, ii, iii or iv")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaterpillarFamilyParams {
    pub n: usize,
    pub m: usize,
    pub which: Family,
}

/// A constructed family member together with its bookkeeping.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyTree {
    pub tree: Tree,
    pub params: CaterpillarFamilyParams,
    /// Backbone edge count from the closed-form family definition.
    pub nominal_t: usize,
    /// Backbone edge count that yields order `n`; the one used.
    pub t: usize,
    /// Degrees of the internal backbone vertices `v_1 .. v_{t-1}`.
    pub degree_pattern: Vec<usize>,
}

impl FamilyTree {
    pub fn t_adjusted(&self) -> bool {
        self.nominal_t != self.t
    }
}

/// Degrees at the two ends of the internal backbone; everything in between
/// has degree 2.
fn family_blocks(which: Family, m: usize) -> Result<(Vec<usize>, Vec<usize>), GenError> {
    let mismatch = |requirement| GenError::ParityMismatch {
        family: which,
        m,
        requirement,
    };
    let threes = |count: usize| vec![3usize; count];
    Ok(match which {
        Family::I => {
            if m.is_multiple_of(2) || m < 7 {
                return Err(mismatch("m odd and m >= 7"));
            }
            let pre = (m - 7) / 4;
            let suf = (m - 7).div_ceil(4);
            let mut prefix = vec![4];
            prefix.extend(threes(pre));
            let mut suffix = threes(suf);
            suffix.push(4);
            (prefix, suffix)
        }
        Family::II => {
            if m.is_multiple_of(2) {
                return Err(mismatch("m odd"));
            }
            (threes((m - 1) / 4), threes((m - 1).div_ceil(4)))
        }
        Family::III => {
            if !m.is_multiple_of(4) || m < 8 {
                return Err(mismatch("m = 0 mod 4 and m >= 8"));
            }
            let mut prefix = vec![4];
            prefix.extend(threes(m / 4 - 2));
            (prefix, threes(m / 4))
        }
        Family::IV => {
            if m % 4 != 2 || m < 6 {
                return Err(mismatch("m = 2 mod 4 and m >= 6"));
            }
            let mut prefix = vec![4];
            prefix.extend(threes((m - 4) / 4));
            (prefix, threes((m - 4).div_ceil(4)))
        }
    })
}

fn nominal_t(which: Family, n: usize, m: usize) -> usize {
    // parity is checked before this is called, so the halves are exact
    match which {
        Family::I => (2 * n - m - 1) / 2,
        Family::II => (2 * n - m).div_ceil(2),
        Family::III | Family::IV => (2 * n - m) / 2,
    }
}

/// Builds `T_i .. T_iv`. The backbone length is derived from the order
/// accounting `n = (t + 1) + #pendant edges`; the closed-form t is kept
/// in [`FamilyTree::nominal_t`] for comparison.
pub fn family_t(params: CaterpillarFamilyParams) -> Result<FamilyTree, GenError> {
    let CaterpillarFamilyParams { n, m, which } = params;
    let (prefix, suffix) = family_blocks(which, m)?;
    let inconsistent = GenError::InconsistentOrder { family: which, n, m };
    if 2 * n < m + 1 {
        return Err(inconsistent);
    }
    let pendants: usize = prefix.iter().chain(&suffix).map(|d| d - 2).sum();
    let t = n
        .checked_sub(1 + pendants)
        .filter(|&t| t >= 1 && prefix.len() + suffix.len() < t)
        .ok_or(inconsistent)?;

    let twos = t - 1 - prefix.len() - suffix.len();
    let mut degree_pattern = prefix;
    degree_pattern.extend(std::iter::repeat_n(2, twos));
    degree_pattern.extend(suffix);

    let mut edges: Vec<(usize, usize)> = (1..=t).map(|v| (v - 1, v)).collect();
    let mut next = t + 1;
    for (i, &d) in degree_pattern.iter().enumerate() {
        for _ in 2..d {
            edges.push((i + 1, next));
            next += 1;
        }
    }
    let tree = Tree::from_edges(next, &edges).map_err(|e| GenError::Validation(e.to_string()))?;
    let got_m = segment_count(&tree).map_err(|e| GenError::Validation(e.to_string()))?;
    if tree.order() != n || got_m != m {
        return Err(GenError::Validation(format!(
            "family {which} built order {} with {got_m} segments, wanted {n} and {m}",
            tree.order()
        )));
    }
    Ok(FamilyTree {
        tree,
        params,
        nominal_t: nominal_t(which, n, m),
        t,
        degree_pattern,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::backbone::backbone;
    use crate::canon::is_isomorphic;
    use crate::fixtures::{sample_quasi_caterpillar, sample_starlike};
    use crate::segments::is_quasi_caterpillar;

    fn seq(v: &[usize]) -> SegmentSequence {
        SegmentSequence::new(v.to_vec()).unwrap()
    }

    #[test]
    fn starlike_examples() {
        let t = starlike(&seq(&[3, 2, 2, 2, 1, 1, 1, 1, 1])).unwrap();
        assert!(is_isomorphic(&t, &sample_starlike()));
        assert!(is_isomorphic(&starlike(&seq(&[1, 1, 1])).unwrap(), &Tree::star(3)));
        assert!(is_isomorphic(&starlike(&seq(&[4])).unwrap(), &Tree::path(5)));
        assert!(matches!(
            starlike(&seq(&[2, 1])),
            Err(GenError::Unrealizable(_))
        ));
    }

    #[test]
    fn balanced_examples() {
        assert_eq!(balanced_legs(8, 3).unwrap().lengths(), &[3, 2, 2]);
        assert_eq!(balanced_legs(7, 3).unwrap().lengths(), &[2, 2, 2]);
        assert!(is_isomorphic(&balanced_starlike(10, 9).unwrap(), &Tree::star(9)));
        assert!(is_isomorphic(&balanced_starlike(5, 1).unwrap(), &Tree::path(5)));
        assert!(balanced_starlike(6, 2).is_err());
        assert!(balanced_starlike(6, 6).is_err());
        assert!(balanced_starlike(1, 1).is_err());
    }

    #[test]
    fn quasi_caterpillar_reproduces_sample() {
        let t = quasi_caterpillar(&[1, 2, 1, 2], &[(1, 1), (2, 2), (2, 3), (3, 1), (3, 1)]).unwrap();
        assert!(is_isomorphic(&t, &sample_quasi_caterpillar()));
    }

    #[test]
    fn quasi_caterpillar_small_cases() {
        let claw = quasi_caterpillar(&[1, 1], &[(1, 1)]).unwrap();
        assert!(is_isomorphic(&claw, &Tree::star(3)));
        assert_eq!(segment_sequence(&claw).unwrap().lengths(), &[1, 1, 1]);
        assert!(is_isomorphic(&quasi_caterpillar(&[5], &[]).unwrap(), &Tree::path(6)));
    }

    #[test]
    fn quasi_caterpillar_errors() {
        assert_eq!(
            quasi_caterpillar(&[1, 2, 1], &[(1, 1)]),
            Err(GenError::JointWithoutPendant(2))
        );
        assert_eq!(
            quasi_caterpillar(&[1, 2], &[(2, 1)]),
            Err(GenError::InvalidIndex { index: 2, max: 1 })
        );
        assert_eq!(
            quasi_caterpillar(&[1, 2], &[(0, 1)]),
            Err(GenError::InvalidIndex { index: 0, max: 1 })
        );
        assert_eq!(quasi_caterpillar(&[], &[]), Err(GenError::ZeroLength));
        assert_eq!(quasi_caterpillar(&[1, 0], &[(1, 1)]), Err(GenError::ZeroLength));
    }

    #[test]
    fn family_ii_small() {
        let f = family_t(CaterpillarFamilyParams { n: 8, m: 5, which: Family::II }).unwrap();
        assert_eq!(f.tree.order(), 8);
        assert_eq!(segment_count(&f.tree).unwrap(), 5);
        assert_eq!(f.degree_pattern, vec![3, 2, 2, 3]);
        assert_eq!(f.t, 5);
        assert_eq!(f.nominal_t, 6);
        assert!(f.t_adjusted());
        let b = backbone(&f.tree).unwrap();
        assert!(b.pendant_segment_lengths.iter().all(|&s| s == 1));
    }

    #[test]
    fn family_ii_with_one_segment_is_a_path() {
        let f = family_t(CaterpillarFamilyParams { n: 7, m: 1, which: Family::II }).unwrap();
        assert!(is_isomorphic(&f.tree, &Tree::path(7)));
    }

    #[test]
    fn family_iii_n10_m8() {
        let f = family_t(CaterpillarFamilyParams { n: 10, m: 8, which: Family::III }).unwrap();
        assert_eq!(f.degree_pattern, vec![4, 2, 3, 3]);
        assert_eq!(segment_count(&f.tree).unwrap(), 8);
        assert!(is_quasi_caterpillar(&f.tree));
    }

    #[test]
    fn family_parity_and_size_errors() {
        let p = |n, m, which| CaterpillarFamilyParams { n, m, which };
        assert!(matches!(family_t(p(10, 8, Family::II)), Err(GenError::ParityMismatch { .. })));
        assert!(matches!(family_t(p(10, 6, Family::III)), Err(GenError::ParityMismatch { .. })));
        assert!(matches!(family_t(p(10, 8, Family::IV)), Err(GenError::ParityMismatch { .. })));
        assert!(matches!(family_t(p(10, 5, Family::I)), Err(GenError::ParityMismatch { .. })));
        // 9 segments need at least 10 vertices
        assert!(matches!(family_t(p(9, 9, Family::II)), Err(GenError::InconsistentOrder { .. })));
    }

    #[test]
    fn family_from_str() {
        assert_eq!("iii".parse::<Family>().unwrap(), Family::III);
        assert_eq!("IV".parse::<Family>().unwrap(), Family::IV);
        assert!("v".parse::<Family>().is_err());
    }
}
