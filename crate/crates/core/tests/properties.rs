mod common;

use proptest::prelude::*;
use stwiener::generators::starlike;
use stwiener::moves::{descriptors, transform};
use stwiener::segments::{is_quasi_caterpillar, is_starlike};
use stwiener::{
    canonical_code, is_isomorphic, segment_decomposition, segment_sequence, steiner_distance, sw_k,
    CanonicalCode, SegmentSequence, Tree,
};

use common::{prufer_tree, sw_by_subsets};

fn arb_tree(max_n: usize) -> impl Strategy<Value = Tree> {
    (3..=max_n).prop_flat_map(|n| {
        prop::collection::vec(0..n, n - 2).prop_map(|seq| prufer_tree(&seq))
    })
}

fn relabel(t: &Tree, perm: &[usize]) -> Tree {
    let edges: Vec<_> = t.edges().iter().map(|&(u, v)| (perm[u], perm[v])).collect();
    Tree::from_edges(t.order(), &edges).unwrap()
}

fn arb_relabeled(max_n: usize) -> impl Strategy<Value = (Tree, Tree)> {
    arb_tree(max_n).prop_flat_map(|t| {
        let ids: Vec<usize> = (0..t.order()).collect();
        (Just(t), Just(ids).prop_shuffle()).prop_map(|(t, perm)| {
            let u = relabel(&t, &perm);
            (t, u)
        })
    })
}

fn arb_sequence() -> impl Strategy<Value = SegmentSequence> {
    prop::collection::vec(1usize..6, 1..8)
        .prop_filter("two segments cannot occur", |v| v.len() != 2)
        .prop_map(|v| SegmentSequence::new(v).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn relabeling_changes_nothing((t, u) in arb_relabeled(16)) {
        prop_assert_eq!(canonical_code(&t), canonical_code(&u));
        prop_assert_eq!(segment_sequence(&t).unwrap(), segment_sequence(&u).unwrap());
        for k in 1..=t.order() {
            prop_assert_eq!(sw_k(&t, k).unwrap(), sw_k(&u, k).unwrap());
        }
    }

    #[test]
    fn steiner_distance_is_monotone(t in arb_tree(14), mask in any::<u16>(), extra in any::<u16>()) {
        let n = t.order();
        let small: Vec<usize> = (0..n).filter(|&v| mask & (1 << v) != 0).collect();
        let big: Vec<usize> = (0..n).filter(|&v| (mask | extra) & (1 << v) != 0).collect();
        prop_assume!(!small.is_empty());
        prop_assert!(steiner_distance(&t, &small).unwrap() <= steiner_distance(&t, &big).unwrap());
        prop_assert!(steiner_distance(&t, &big).unwrap().get() < n as i128);
    }

    #[test]
    fn edge_formula_agrees_with_subsets(t in arb_tree(11), k in 1usize..12) {
        prop_assume!(k <= t.order());
        prop_assert_eq!(sw_k(&t, k).unwrap().get(), sw_by_subsets(&t, k));
    }

    #[test]
    fn segments_partition_the_edges(t in arb_tree(16)) {
        let segs = segment_decomposition(&t).unwrap();
        let mut edges: Vec<(usize, usize)> = segs
            .iter()
            .flat_map(|s| s.vertices.windows(2).map(|w| (w[0].min(w[1]), w[0].max(w[1]))))
            .collect();
        edges.sort_unstable();
        prop_assert_eq!(edges, t.edges());
        for s in &segs {
            let (a, b) = s.ends();
            prop_assert!(t.degree(a) != 2 && t.degree(b) != 2);
            prop_assert!(s.interior().iter().all(|&v| t.degree(v) == 2));
        }
    }

    #[test]
    fn starlike_round_trip(seq in arb_sequence()) {
        let t = starlike(&seq).unwrap();
        prop_assert_eq!(t.order(), seq.order());
        prop_assert_eq!(segment_sequence(&t).unwrap(), seq);
        prop_assert!(is_starlike(&t));
        prop_assert!(is_quasi_caterpillar(&t));
    }

    #[test]
    fn canonical_code_round_trip(t in arb_tree(16)) {
        let code = canonical_code(&t);
        let back = CanonicalCode::parse(code.as_str()).unwrap().to_tree();
        prop_assert!(is_isomorphic(&t, &back));
        prop_assert_eq!(canonical_code(&back), code);
    }

    #[test]
    fn moves_keep_the_segment_sequence(t in arb_tree(12)) {
        let seq = segment_sequence(&t).unwrap();
        for m in descriptors(&t) {
            let after = transform(&t, &m).unwrap();
            prop_assert_eq!(segment_sequence(&after).unwrap(), seq.clone());
        }
    }
}
