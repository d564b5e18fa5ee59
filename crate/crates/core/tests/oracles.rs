mod common;

use std::collections::HashSet;

use rayon::prelude::*;
use sumconn::canon::canonical_form;
use sumconn::constructions::GraphClass;
use sumconn::enumerate::{enumerate_class, enumerate_trees, enumerate_unicyclic, DegreeFilter};
use sumconn::graph6::{emit_graph6, parse_graph6};
use sumconn::indices::{index_f64, product_connectivity, sum_connectivity, IndexKind};
use sumconn::{canonical_code, Graph};

#[test]
fn tree_enumeration_matches_labeled_oracle() {
    for n in 1..=8 {
        let fast = enumerate_trees(n, DegreeFilter::any()).unwrap();
        let oracle = common::labeled_tree_classes(n);
        let mine = common::generic_codes(fast.iter().map(|m| &m.graph));
        assert_eq!(
            mine.len(),
            fast.len(),
            "n = {n}: duplicates in the fast generator"
        );
        assert_eq!(mine, oracle, "n = {n}");
    }
}

#[test]
fn unicyclic_enumeration_matches_labeled_oracle() {
    for n in 3..=8 {
        let fast = enumerate_unicyclic(n, DegreeFilter::any()).unwrap();
        let oracle = common::labeled_unicyclic_classes(n);
        let mine = common::generic_codes(fast.iter().map(|m| &m.graph));
        assert_eq!(
            mine.len(),
            fast.len(),
            "n = {n}: duplicates in the fast generator"
        );
        assert_eq!(mine, oracle, "n = {n}");
    }
}

#[test]
fn fast_codes_separate_exactly_like_generic_codes() {
    // the specialized codes must induce the same partition as the search
    for class in [GraphClass::Tree, GraphClass::Unicyclic] {
        let all = enumerate_class(class, 10, DegreeFilter::any()).unwrap();
        let fast: HashSet<_> = all
            .iter()
            .map(|m| canonical_code(&m.graph).unwrap())
            .collect();
        let generic = common::generic_codes(all.iter().map(|m| &m.graph));
        assert_eq!(fast.len(), all.len());
        assert_eq!(generic.len(), all.len());
    }
}

#[test]
fn codes_are_invariant_under_every_relabeling() {
    for n in 3..=7 {
        let perms = common::permutations(n);
        let mut graphs: Vec<Graph> = enumerate_trees(n, DegreeFilter::any())
            .unwrap()
            .into_iter()
            .map(|m| m.graph)
            .collect();
        graphs.extend(
            enumerate_unicyclic(n, DegreeFilter::any())
                .unwrap()
                .into_iter()
                .map(|m| m.graph),
        );
        graphs.par_iter().for_each(|g| {
            let code = canonical_code(g).unwrap();
            for p in &perms {
                let h = g.relabel(p);
                assert_eq!(canonical_code(&h).unwrap(), code, "{}", emit_graph6(g));
            }
        });
    }
}

#[test]
fn canonical_labeling_is_an_isomorphism() {
    for class in [GraphClass::Tree, GraphClass::Unicyclic] {
        for m in enumerate_class(class, 9, DegreeFilter::any()).unwrap() {
            let g = m.graph.relabel(&(0..9).rev().collect::<Vec<_>>());
            let form = canonical_form(&g).unwrap();
            assert_eq!(g.relabel(&form.labeling), m.graph);
        }
    }
}

#[test]
fn graph6_round_trips_every_enumerated_graph() {
    for n in 1..=12 {
        for m in enumerate_trees(n, DegreeFilter::any()).unwrap() {
            let text = emit_graph6(&m.graph);
            assert_eq!(parse_graph6(&text).unwrap(), m.graph);
        }
    }
    for n in 3..=11 {
        for m in enumerate_unicyclic(n, DegreeFilter::any()).unwrap() {
            let text = emit_graph6(&m.graph);
            assert_eq!(parse_graph6(&text).unwrap(), m.graph);
        }
    }
}

#[test]
fn exact_values_agree_with_compensated_float_sums() {
    for class in [GraphClass::Tree, GraphClass::Unicyclic] {
        for m in enumerate_class(class, 10, DegreeFilter::any()).unwrap() {
            let g = &m.graph;
            let chi = sum_connectivity(g).unwrap().to_f64();
            let r = product_connectivity(g).unwrap().to_f64();
            assert!((chi - common::kahan_index(g, false)).abs() < 1e-12);
            assert!((r - common::kahan_index(g, true)).abs() < 1e-12);
            assert!((index_f64(g, IndexKind::SumConnectivity).unwrap() - chi).abs() < 1e-12);
        }
    }
}

#[test]
fn oracle_helpers_sanity() {
    assert_eq!(common::permutations(4).len(), 24);
    assert_eq!(
        common::permutations(4)
            .into_iter()
            .collect::<HashSet<_>>()
            .len(),
        24
    );
    let g = common::prufer_decode(&[3, 3, 3], 5);
    assert_eq!(
        g,
        Graph::from_edges(5, &[(0, 3), (1, 3), (2, 3), (3, 4)]).unwrap()
    );
}
