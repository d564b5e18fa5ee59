//! Slow, independent reference implementations shared by the integration tests.
#![allow(dead_code)]

use std::collections::HashSet;

use rayon::prelude::*;
use sumconn::canon::generic_canonical_form;
use sumconn::{CanonicalCode, Graph};

/// Tree from a Prüfer sequence over `0..n`.
pub fn prufer_decode(seq: &[usize], n: usize) -> Graph {
    let mut degree = vec![1usize; n];
    for &v in seq {
        degree[v] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &v in seq {
        let leaf = (0..n).find(|&u| degree[u] == 1).unwrap();
        edges.push((leaf, v));
        degree[leaf] -= 1;
        degree[v] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&u| degree[u] == 1).collect();
    edges.push((rest[0], rest[1]));
    Graph::from_edges(n, &edges).unwrap()
}

fn generic_code(g: &Graph) -> CanonicalCode {
    generic_canonical_form(g).unwrap().code
}

/// Isomorphism classes of all `n^(n-2)` labeled trees, keyed by the generic
/// search canonicalizer.
pub fn labeled_tree_classes(n: usize) -> HashSet<CanonicalCode> {
    match n {
        0 => return HashSet::new(),
        1 => return [generic_code(&Graph::empty(1))].into_iter().collect(),
        2 => return [generic_code(&Graph::path(2))].into_iter().collect(),
        _ => {}
    }
    let total = n.pow(n as u32 - 2);
    (0..total)
        .into_par_iter()
        .map(|mut idx| {
            let mut seq = vec![0; n - 2];
            for slot in seq.iter_mut() {
                *slot = idx % n;
                idx /= n;
            }
            generic_code(&prufer_decode(&seq, n))
        })
        .collect()
}

/// Isomorphism classes of all labeled connected graphs with `n` vertices and
/// `n` edges, by brute force over edge subsets.
pub fn labeled_unicyclic_classes(n: usize) -> HashSet<CanonicalCode> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let slots = pairs.len();
    if n < 3 {
        return HashSet::new();
    }
    let mut masks = Vec::new();
    // Gosper's hack over `slots`-bit words with `n` bits set
    let mut mask: u64 = (1u64 << n) - 1;
    while mask < (1u64 << slots) {
        masks.push(mask);
        let c = mask & mask.wrapping_neg();
        let r = mask + c;
        mask = (((r ^ mask) >> 2) / c) | r;
    }
    masks
        .into_par_iter()
        .filter_map(|mask| {
            let edges: Vec<(usize, usize)> = (0..slots)
                .filter(|&i| mask >> i & 1 == 1)
                .map(|i| pairs[i])
                .collect();
            let g = Graph::from_edges(n, &edges).unwrap();
            g.is_connected().then(|| generic_code(&g))
        })
        .collect()
}

/// Generic canonical codes of a slice of graphs.
pub fn generic_codes<'a>(graphs: impl IntoIterator<Item = &'a Graph>) -> HashSet<CanonicalCode> {
    graphs.into_iter().map(generic_code).collect()
}

/// `Σ (d_u + d_v)^{-1/2}` (or the product form) with compensated summation.
pub fn kahan_index(g: &Graph, product: bool) -> f64 {
    let (mut sum, mut carry) = (0.0f64, 0.0f64);
    for &(u, v) in g.edges() {
        let (du, dv) = (g.degree(u) as f64, g.degree(v) as f64);
        let term = 1.0 / if product { du * dv } else { du + dv }.sqrt();
        let y = term - carry;
        let t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
    sum
}

/// Every permutation of `0..n`, by Heap's algorithm.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut perm: Vec<usize> = (0..n).collect();
    let mut out = vec![perm.clone()];
    let mut c = vec![0; n];
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            out.push(perm.clone());
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    out
}
