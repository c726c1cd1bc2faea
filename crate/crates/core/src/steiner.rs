//! Steiner distances, the Wiener index and the Steiner k-Wiener index.
//!
//! `SW_k` is computed from edge contributions: an edge lies in the minimal
//! subtree spanning `S` iff `S` meets both sides of the edge, so an edge
//! splitting the tree into `a` and `n - a` vertices contributes
//! `C(n,k) - C(a,k) - C(n-a,k)`. The subset-sum definition is kept as
//! [`sw_k_bruteforce`] for cross-checking.

use thiserror::Error;

use crate::count::{binomial, try_sum, CountError, ExactCount};
use crate::tree::Tree;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SteinerError {
    #[error("vertex set is empty")]
    EmptySet,
    #[error("vertex {vertex} out of range for order {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("k = {k} out of range 1..={n}")]
    KOutOfRange { k: usize, n: usize },
    #[error("brute force is limited to order {limit}, got {n}")]
    TooLarge { n: usize, limit: usize },
    #[error(transparent)]
    Count(#[from] CountError),
}

/// Largest order accepted by [`sw_k_bruteforce`].
pub const BRUTE_FORCE_LIMIT: usize = 20;

/// Edge count of the minimal subtree containing `set`.
pub fn steiner_distance(t: &Tree, set: &[usize]) -> Result<ExactCount, SteinerError> {
    let n = t.order();
    if set.is_empty() {
        return Err(SteinerError::EmptySet);
    }
    let mut in_set = vec![false; n];
    for &v in set {
        if v >= n {
            return Err(SteinerError::VertexOutOfRange { vertex: v, n });
        }
        in_set[v] = true;
    }
    // prune leaves outside the set until none remain
    let mut degree: Vec<usize> = (0..n).map(|v| t.degree(v)).collect();
    let mut alive = vec![true; n];
    let mut stack: Vec<usize> = (0..n).filter(|&v| degree[v] <= 1 && !in_set[v]).collect();
    let mut remaining = n;
    while let Some(v) = stack.pop() {
        if !alive[v] {
            continue;
        }
        alive[v] = false;
        remaining -= 1;
        for &w in t.neighbors(v) {
            if alive[w] {
                degree[w] -= 1;
                if degree[w] <= 1 && !in_set[w] {
                    stack.push(w);
                }
            }
        }
    }
    Ok(ExactCount::from(remaining - 1))
}

/// Sum of `d(u, v)` over unordered pairs, via `sum_e a_e (n - a_e)`.
pub fn wiener(t: &Tree) -> ExactCount {
    let n = t.order();
    edge_side_sizes(t)
        .into_iter()
        .map(|a| ExactCount::from(a * (n - a)))
        .sum()
}

/// For each edge, the vertex count on its child side under a rooting at 0.
pub fn edge_side_sizes(t: &Tree) -> Vec<usize> {
    let (parent, size) = t.subtree_sizes(0);
    (0..t.order())
        .filter(|&v| parent[v].is_some())
        .map(|v| size[v])
        .collect()
}

fn check_k(t: &Tree, k: usize) -> Result<(), SteinerError> {
    if k == 0 || k > t.order() {
        return Err(SteinerError::KOutOfRange { k, n: t.order() });
    }
    Ok(())
}

/// Literal definition: sum of Steiner distances over all `k`-subsets.
pub fn sw_k_bruteforce(t: &Tree, k: usize) -> Result<ExactCount, SteinerError> {
    let n = t.order();
    check_k(t, k)?;
    if n > BRUTE_FORCE_LIMIT {
        return Err(SteinerError::TooLarge {
            n,
            limit: BRUTE_FORCE_LIMIT,
        });
    }
    let mut total = ExactCount::ZERO;
    let mut subset: Vec<usize> = (0..k).collect();
    loop {
        total = total.checked_add(steiner_distance(t, &subset)?)?;
        // next k-combination in lexicographic order
        let Some(i) = (0..k).rev().find(|&i| subset[i] < n - k + i) else {
            break;
        };
        subset[i] += 1;
        for j in i + 1..k {
            subset[j] = subset[j - 1] + 1;
        }
    }
    Ok(total)
}

fn contribution(n: usize, a: usize, k: usize) -> Result<ExactCount, CountError> {
    binomial(n, k)?
        .checked_sub(binomial(a, k)?)?
        .checked_sub(binomial(n - a, k)?)
}

pub fn sw_k(t: &Tree, k: usize) -> Result<ExactCount, SteinerError> {
    check_k(t, k)?;
    let n = t.order();
    let sizes = edge_side_sizes(t);
    Ok(try_sum(
        sizes
            .iter()
            .map(|&a| contribution(n, a, k))
            .collect::<Result<Vec<_>, _>>()?,
    )?)
}

/// `SW_1 .. SW_n` of one tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SwProfile {
    values: Vec<ExactCount>,
}

impl SwProfile {
    /// `SW_k`; `k` is 1-based.
    pub fn get(&self, k: usize) -> Option<ExactCount> {
        k.checked_sub(1).and_then(|i| self.values.get(i)).copied()
    }

    pub fn values(&self) -> &[ExactCount] {
        &self.values
    }
}

pub fn sw_profile(t: &Tree) -> Result<SwProfile, SteinerError> {
    let n = t.order();
    // edges with equal side sizes contribute equally; count them once
    let mut multiplicity = vec![0usize; n + 1];
    for a in edge_side_sizes(t) {
        multiplicity[a.min(n - a)] += 1;
    }
    let mut values = Vec::with_capacity(n);
    for k in 1..=n {
        let mut total = ExactCount::ZERO;
        for (a, &mult) in multiplicity.iter().enumerate() {
            if mult > 0 {
                let c = contribution(n, a, k)?.checked_mul(ExactCount::from(mult))?;
                total = total.checked_add(c)?;
            }
        }
        values.push(total);
    }
    Ok(SwProfile { values })
}
