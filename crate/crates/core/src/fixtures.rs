//! Hand-built trees shared by unit tests.

use crate::tree::Tree;

/// Starlike tree with segment sequence (3,2,2,2,1,1,1,1,1); center 0.
pub fn sample_starlike() -> Tree {
    let mut edges: Vec<(usize, usize)> = (1..=9).map(|i| (0, i)).collect();
    edges.extend([(1, 10), (2, 11), (11, 12), (9, 13), (8, 14)]);
    Tree::from_edges(15, &edges).unwrap()
}

/// Quasi-caterpillar with the same sequence: backbone 0..=6, branch vertices
/// 1, 3 and 4.
pub fn sample_quasi_caterpillar() -> Tree {
    let edges = [
        (0, 1),
        (1, 2),
        (2, 3),
        (3, 4),
        (4, 5),
        (5, 6),
        (1, 14),
        (3, 7),
        (7, 8),
        (3, 9),
        (9, 10),
        (10, 11),
        (4, 12),
        (4, 13),
    ];
    Tree::from_edges(15, &edges).unwrap()
}
