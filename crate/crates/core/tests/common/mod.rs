#![allow(dead_code)]

use proptest::prelude::*;
use wpi_core::{Combiner, WeightedGraph};

pub fn arb_graph(max_n: usize, max_w: u64) -> impl Strategy<Value = WeightedGraph> {
    (1..=max_n).prop_flat_map(move |n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(proptest::option::weighted(0.6, 1..=max_w), pairs).prop_map(
            move |slots| {
                let mut edges = Vec::new();
                let mut it = slots.into_iter();
                for i in 1..=n {
                    for j in i + 1..=n {
                        if let Some(w) = it.next().unwrap() {
                            edges.push((i, j, w));
                        }
                    }
                }
                WeightedGraph::from_edges(n, &edges).unwrap()
            },
        )
    })
}

pub fn arb_tree(max_n: usize, max_w: u64) -> impl Strategy<Value = WeightedGraph> {
    (1..=max_n)
        .prop_flat_map(move |n| {
            let parents: Vec<_> = (1..n).map(|i| 0..i).collect();
            (
                Just(n),
                parents,
                proptest::collection::vec(1..=max_w, n - 1),
            )
        })
        .prop_map(|(n, parents, weights)| {
            let edges: Vec<_> = (0..n - 1)
                .map(|i| (parents[i] + 1, i + 2, weights[i]))
                .collect();
            WeightedGraph::from_edges(n, &edges).unwrap()
        })
}

pub fn arb_clique(min_n: usize, max_n: usize, max_w: u64) -> impl Strategy<Value = WeightedGraph> {
    (min_n..=max_n).prop_flat_map(move |n| {
        proptest::collection::vec(1..=max_w, n * (n - 1) / 2).prop_map(move |ws| {
            let mut it = ws.into_iter();
            WeightedGraph::complete(n, |_, _| it.next().unwrap()).unwrap()
        })
    })
}

pub fn arb_combiner() -> impl Strategy<Value = Combiner> {
    proptest::sample::select(Combiner::ALL.to_vec())
}

pub fn example_tree() -> WeightedGraph {
    WeightedGraph::from_edges(6, &[(1, 2, 2), (2, 3, 1), (3, 4, 2), (4, 5, 2), (3, 6, 3)]).unwrap()
}
