use lonechild::enumerate::TreeEnumerator;
use lonechild::tree::{from_planted, prufer_decode, prufer_encode, to_planted};
use lonechild::{all_trees, Guard, LabeledRootedTree, Vertex};
use proptest::prelude::*;

/// Every sequence of length `len` over `1..=n`, lexicographically.
fn all_sequences(n: usize, len: usize) -> Vec<Vec<Vertex>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (1..=n as u32).map(move |x| {
                    let mut s = prefix.clone();
                    s.push(Vertex(x));
                    s
                })
            })
            .collect();
    }
    out
}

/// All trees on `[n]`, each with every possible root.
fn all_rooted_trees(n: usize) -> Vec<LabeledRootedTree> {
    let labels: Vec<Vertex> = (1..=n as u32).map(Vertex).collect();
    (1..=n as u32)
        .flat_map(|r| TreeEnumerator::on_labels(labels.clone(), Vertex(r)))
        .collect()
}

#[test]
fn prufer_round_trips_exhaustively() {
    for n in 1..=6 {
        let seqs = all_sequences(n, n.saturating_sub(2));
        assert_eq!(seqs.len(), if n >= 2 { n.pow(n as u32 - 2) } else { 1 });
        for seq in &seqs {
            for root in 1..=n as u32 {
                let t = prufer_decode(seq, n, Vertex(root)).unwrap();
                assert_eq!(t.root(), Vertex(root));
                assert_eq!(&prufer_encode(&t).unwrap(), seq);
            }
        }
        for t in all_rooted_trees(n) {
            let seq = prufer_encode(&t).unwrap();
            assert_eq!(prufer_decode(&seq, n, t.root()).unwrap(), t);
        }
    }
}

#[test]
fn enumerator_order_is_lexicographic_prufer() {
    let seqs = all_sequences(5, 3);
    let trees: Vec<_> = all_trees(5, &Guard::default()).unwrap().collect();
    let encoded: Vec<_> = trees.iter().map(|t| prufer_encode(t).unwrap()).collect();
    assert_eq!(encoded, seqs);
}

#[test]
fn child_counts_sum_to_edges() {
    for n in 1..=6 {
        for t in all_rooted_trees(n) {
            let total: usize = t.vertices().map(|v| t.children(v).unwrap().len()).sum();
            assert_eq!(total, t.len() - 1);
        }
    }
}

#[test]
fn lone_child_avoiding_iff_no_lone_child() {
    for n in 1..=6 {
        for t in all_rooted_trees(n) {
            assert_eq!(
                t.is_lone_child_avoiding(),
                t.lone_child_vertices().is_empty()
            );
        }
    }
}

#[test]
fn planted_bijection_exhaustive() {
    for n in 1..=5 {
        for t in all_rooted_trees(n) {
            let p = to_planted(&t).unwrap();
            assert_eq!(p.n(), n);
            assert_eq!(p.tree().children(Vertex(0)).unwrap(), vec![t.root()]);
            assert_eq!(from_planted(&p), t);
            assert_eq!(p.is_series_reduced(), t.is_lone_child_avoiding(), "{t}");
        }
    }
}

#[test]
fn series_reduced_planted_count_matches_rooted_count() {
    // Series-reduced planted trees on {0..n} correspond to lone-child-avoiding
    // trees on [n] with any root.
    for n in 1..=6 {
        let planted = all_rooted_trees(n)
            .iter()
            .filter(|t| to_planted(t).unwrap().is_series_reduced())
            .count();
        assert_eq!(
            num_bigint::BigInt::from(planted),
            lonechild::rooted_count(n).unwrap()
        );
    }
}

fn sequence_strategy() -> impl Strategy<Value = (usize, Vec<u32>, u32)> {
    (3usize..=40).prop_flat_map(|n| {
        (
            Just(n),
            proptest::collection::vec(1..=n as u32, n - 2),
            1..=n as u32,
        )
    })
}

proptest! {
    #[test]
    fn prufer_round_trip_random((n, seq, root) in sequence_strategy()) {
        let seq: Vec<Vertex> = seq.into_iter().map(Vertex).collect();
        let t = prufer_decode(&seq, n, Vertex(root)).unwrap();
        prop_assert_eq!(t.len(), n);
        prop_assert_eq!(prufer_encode(&t).unwrap(), seq);
        let text = t.to_string();
        prop_assert_eq!(text.parse::<LabeledRootedTree>().unwrap(), t.clone());
        prop_assert_eq!(from_planted(&to_planted(&t).unwrap()), t);
    }
}
