mod common;

use std::collections::{BTreeMap, BTreeSet};

use common::{arb_clique, arb_combiner, arb_graph, arb_tree, example_tree};
use proptest::prelude::*;
use wpi_core::{
    build_path_ideal, cover_to_component, enumerate_r_paths, is_cover, is_unmixed, minimal_covers,
    path_monomial, prune_pathless_leaves, reduce_to_minimal, Combiner, WeightedCover,
    WeightedGraph,
};

/// Every one-step weakening (drop a vertex, or raise a weight by one) fails.
fn is_minimal(g: &WeightedGraph, f: Combiner, r: usize, c: &WeightedCover) -> bool {
    c.assignment().iter().all(|(&v, &w)| {
        let mut dropped = c.assignment().clone();
        dropped.remove(&v);
        let mut raised = c.assignment().clone();
        raised.insert(v, w + 1);
        !is_cover(g, f, r, &WeightedCover::new(dropped)).unwrap()
            && !is_cover(g, f, r, &WeightedCover::new(raised)).unwrap()
    })
}

/// Exhaustive search over all assignments whose weights are exponents that
/// actually occur on some path.
fn brute_force_minimal_covers(g: &WeightedGraph, f: Combiner, r: usize) -> Vec<WeightedCover> {
    let mut candidates: BTreeMap<usize, BTreeSet<u64>> = BTreeMap::new();
    for p in enumerate_r_paths(g, r) {
        let m = path_monomial(g, f, &p).unwrap();
        for v in m.support() {
            candidates.entry(v).or_default().insert(m.exponent(v));
        }
    }
    let choices: Vec<(usize, Vec<Option<u64>>)> = candidates
        .into_iter()
        .map(|(v, ws)| {
            (
                v,
                std::iter::once(None)
                    .chain(ws.into_iter().map(Some))
                    .collect(),
            )
        })
        .collect();
    let mut out = Vec::new();
    let mut idx = vec![0usize; choices.len()];
    loop {
        let assignment: BTreeMap<usize, u64> = choices
            .iter()
            .zip(&idx)
            .filter_map(|((v, ws), &k)| ws[k].map(|w| (*v, w)))
            .collect();
        let c = WeightedCover::new(assignment);
        if is_cover(g, f, r, &c).unwrap() && is_minimal(g, f, r, &c) {
            out.push(c);
        }
        let mut pos = 0;
        loop {
            if pos == idx.len() {
                out.sort();
                return out;
            }
            idx[pos] += 1;
            if idx[pos] < choices[pos].1.len() {
                break;
            }
            idx[pos] = 0;
            pos += 1;
        }
    }
}

#[test]
fn example_tree_covers_by_search() {
    let g = example_tree();
    assert_eq!(
        brute_force_minimal_covers(&g, Combiner::Max, 3),
        minimal_covers(&g, Combiner::Max, 3).unwrap()
    );
}

#[test]
fn reduce_from_unit_weights_lands_on_a_minimal_cover() {
    let g = example_tree();
    let all = minimal_covers(&g, Combiner::Max, 3).unwrap();
    let c = reduce_to_minimal(&g, Combiner::Max, 3, &WeightedCover::unit(1..=6)).unwrap();
    assert!(all.contains(&c));
    for m in &all {
        assert_eq!(&reduce_to_minimal(&g, Combiner::Max, 3, m).unwrap(), m);
    }
}

#[test]
fn constant_clique_reduction_keeps_support() {
    let g = WeightedGraph::complete(5, |_, _| 2).unwrap();
    let c = WeightedCover::unit([2, 4, 5]);
    let m = reduce_to_minimal(&g, Combiner::Max, 2, &c).unwrap();
    assert_eq!(m.support().collect::<Vec<_>>(), vec![2, 4, 5]);
    assert!(minimal_covers(&g, Combiner::Max, 2).unwrap().contains(&m));
}

#[test]
fn full_support_cover_can_be_minimal_away_from_max() {
    let g = WeightedGraph::from_edges(4, &[(1, 2, 2), (1, 3, 1), (2, 4, 1), (3, 4, 2)]).unwrap();
    let full = WeightedCover::new((1..=4).map(|v| (v, 2)).collect());
    for f in [Combiner::Min, Combiner::Gcd] {
        assert!(minimal_covers(&g, f, 2).unwrap().contains(&full));
    }
    assert!(minimal_covers(&g, Combiner::Max, 2)
        .unwrap()
        .iter()
        .all(|c| c.size() < 4));
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n);
        out.push(s);
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn minimal_covers_match_exhaustive_search(
        g in arb_graph(5, 3), f in arb_combiner(), r in 1usize..=3
    ) {
        prop_assert_eq!(minimal_covers(&g, f, r).unwrap(), brute_force_minimal_covers(&g, f, r));
    }

    #[test]
    fn emitted_covers_are_minimal_and_bounded(
        g in arb_graph(6, 3), f in arb_combiner(), r in 1usize..=3
    ) {
        let n = g.vertex_count();
        for c in minimal_covers(&g, f, r).unwrap() {
            prop_assert!(is_cover(&g, f, r, &c).unwrap());
            prop_assert!(is_minimal(&g, f, r, &c));
            if f == Combiner::Max {
                prop_assert!(c.size() < n);
            }
        }
    }

    #[test]
    fn cover_iff_generators_in_component(
        g in arb_graph(5, 3), f in arb_combiner(), r in 1usize..=2,
        raw in proptest::collection::btree_map(1usize..=5, 1u64..=4, 0..=3)
    ) {
        let raw: BTreeMap<usize, u64> =
            raw.into_iter().filter(|&(v, _)| v <= g.universe()).collect();
        let c = WeightedCover::new(raw);
        let ideal = build_path_ideal(&g, f, r).unwrap();
        let component = cover_to_component(&c);
        let inside = ideal.generators().iter().all(|m| component.contains_monomial(m));
        prop_assert_eq!(is_cover(&g, f, r, &c).unwrap(), inside);
    }

    #[test]
    fn reduction_lands_below_and_minimal(
        g in arb_graph(6, 3), f in arb_combiner(), r in 1usize..=3
    ) {
        let start = WeightedCover::unit(g.vertices());
        let m = reduce_to_minimal(&g, f, r, &start).unwrap();
        prop_assert!(m.is_below(&start));
        prop_assert!(minimal_covers(&g, f, r).unwrap().contains(&m));
    }

    #[test]
    fn clique_cover_bounds(g in arb_clique(3, 6, 3), f in arb_combiner(), r in 1usize..=3) {
        let n = g.vertex_count();
        prop_assume!(r < n);
        let covers = minimal_covers(&g, f, r).unwrap();
        prop_assert!(covers.iter().all(|c| c.size() >= n - r));
        let supports: BTreeSet<Vec<usize>> =
            covers.iter().map(|c| c.support().collect()).collect();
        for s in subsets(n, n - r) {
            prop_assert!(supports.contains(&s), "missing support {:?}", s);
        }
    }

    #[test]
    fn unmixedness_descends_to_unit_weights(
        g in arb_graph(6, 3), f in arb_combiner(), r in 1usize..=3
    ) {
        if is_unmixed(&g, f, r).unwrap() {
            let edges: Vec<_> = g.edges().map(|(i, j, _)| (i, j, 1)).collect();
            let unit = WeightedGraph::from_edges(g.universe(), &edges).unwrap();
            prop_assert!(is_unmixed(&unit, f, r).unwrap());
        }
    }

    #[test]
    fn pruning_preserves_minimal_covers(
        g in arb_tree(7, 3), f in arb_combiner(), r in 1usize..=4
    ) {
        let (h, _) = prune_pathless_leaves(&g, r);
        prop_assert_eq!(minimal_covers(&g, f, r).unwrap(), minimal_covers(&h, f, r).unwrap());
    }
}
