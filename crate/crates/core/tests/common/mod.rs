#![allow(dead_code)]

use std::collections::{BTreeSet, VecDeque};

use rayon::prelude::*;
use stwiener::{canonical_code, CanonicalCode, Tree};

/// Labeled tree of a Prüfer sequence over `0..seq.len() + 2`.
pub fn prufer_tree(seq: &[usize]) -> Tree {
    let n = seq.len() + 2;
    let mut degree = vec![1usize; n];
    for &x in seq {
        degree[x] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &x in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
        edges.push((leaf, x));
        degree[leaf] -= 1;
        degree[x] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    Tree::from_edges(n, &edges).unwrap()
}

/// Isomorphism classes of order `n`, found by decoding all `n^(n-2)`
/// labeled trees and deduplicating canonical codes.
pub fn classes_by_prufer(n: usize) -> BTreeSet<CanonicalCode> {
    match n {
        1 => return BTreeSet::from([canonical_code(&Tree::single_vertex())]),
        2 => return BTreeSet::from([canonical_code(&Tree::path(2))]),
        _ => {}
    }
    let len = n - 2;
    let total = n.pow(len as u32);
    (0..total)
        .into_par_iter()
        .fold(BTreeSet::new, |mut acc, mut idx| {
            let mut seq = vec![0; len];
            for slot in seq.iter_mut() {
                *slot = idx % n;
                idx /= n;
            }
            acc.insert(canonical_code(&prufer_tree(&seq)));
            acc
        })
        .reduce(BTreeSet::new, |mut a, b| {
            a.extend(b);
            a
        })
}

/// BFS parent pointers from `root`.
fn parents(t: &Tree, root: usize) -> Vec<Option<usize>> {
    let mut parent = vec![None; t.order()];
    let mut seen = vec![false; t.order()];
    seen[root] = true;
    let mut queue = VecDeque::from([root]);
    while let Some(v) = queue.pop_front() {
        for &w in t.neighbors(v) {
            if !seen[w] {
                seen[w] = true;
                parent[w] = Some(v);
                queue.push_back(w);
            }
        }
    }
    parent
}

/// Edges of the union of the paths from `set[0]` to the other members.
pub fn steiner_by_paths(t: &Tree, set: &[usize]) -> usize {
    let parent = parents(t, set[0]);
    let mut on_tree = vec![false; t.order()];
    on_tree[set[0]] = true;
    let mut edges = 0;
    for &s in &set[1..] {
        let mut v = s;
        while !on_tree[v] {
            on_tree[v] = true;
            edges += 1;
            v = parent[v].unwrap();
        }
    }
    edges
}

/// Sum over all `k`-subsets, enumerated as bitmasks.
pub fn sw_by_subsets(t: &Tree, k: usize) -> i128 {
    let n = t.order();
    (0u32..1 << n)
        .filter(|m| m.count_ones() as usize == k)
        .map(|m| {
            let set: Vec<usize> = (0..n).filter(|&v| m & (1 << v) != 0).collect();
            steiner_by_paths(t, &set) as i128
        })
        .sum()
}

pub fn wiener_by_bfs(t: &Tree) -> i128 {
    let n = t.order();
    let mut total = 0i128;
    for u in 0..n {
        let mut dist = vec![usize::MAX; n];
        dist[u] = 0;
        let mut queue = VecDeque::from([u]);
        while let Some(v) = queue.pop_front() {
            for &w in t.neighbors(v) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        total += dist[u + 1..].iter().map(|&d| d as i128).sum::<i128>();
    }
    total
}

/// A leaf, then branch vertices joined by segments of lengths 1, 2, 1, 2,
/// with pendant segments (1), (2, 3), (1, 1).
pub fn sample_quasi_caterpillar() -> Tree {
    Tree::from_edges(
        15,
        &[
            (0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6),
            (1, 14), (3, 7), (7, 8), (3, 9), (9, 10), (10, 11), (4, 12), (4, 13),
        ],
    )
    .unwrap()
}
