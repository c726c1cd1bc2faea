use stwiener::enumerate::all_trees;
use stwiener::generators::starlike;
use stwiener::moves::{hill_climb, Direction};
use stwiener::segments::{is_quasi_caterpillar, is_starlike};
use stwiener::verify::Census;
use stwiener::{segment_sequence, sw_k};

#[test]
fn descent_always_reaches_the_starlike_tree() {
    for n in 4..=10 {
        for t in all_trees(n).unwrap() {
            for k in 2..=4 {
                let r = hill_climb(&t, k, Direction::Minimize).unwrap();
                assert!(is_starlike(&r.tree));
                assert_eq!(segment_sequence(&r.tree).unwrap(), segment_sequence(&t).unwrap());
                let target = starlike(&segment_sequence(&t).unwrap()).unwrap();
                assert_eq!(r.value, sw_k(&target, k).unwrap());
            }
        }
    }
}

/// Ascent from the starlike tree stops at a quasi-caterpillar; how often it
/// reaches the exhaustive maximum is measured, not asserted.
#[test]
fn ascent_from_starlike_ends_at_a_quasi_caterpillar() {
    let mut starts = 0;
    let mut optimal = 0;
    for n in 4..=10 {
        let census = Census::build(n).unwrap();
        for (seq, class) in census.by_sequence() {
            for k in 2..=4 {
                let r = hill_climb(&starlike(&seq).unwrap(), k, Direction::Maximize).unwrap();
                assert!(is_quasi_caterpillar(&r.tree), "{seq} k={k}");
                assert!(r.steps.windows(2).all(|w| w[0].value < w[1].value));
                let best = class.iter().map(|e| e.profile.get(k).unwrap()).max().unwrap();
                assert!(r.value <= best);
                starts += 1;
                optimal += usize::from(r.value == best);
            }
        }
    }
    println!("ascent reached the maximum from {optimal} of {starts} starlike starts");
}
