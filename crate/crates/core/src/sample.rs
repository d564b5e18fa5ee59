//! Random connected graphs for property checks.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::graph::Graph;

/// Random tree from a uniformly random parent array: vertex `i > 0` hangs
/// from a uniformly chosen vertex in `0..i`.
pub fn random_tree<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Graph {
    let edges: Vec<(usize, usize)> = (1..n).map(|i| (rng.gen_range(0..i), i)).collect();
    Graph::from_edges(n, &edges).expect("parent arrays give simple graphs")
}

/// Random tree plus up to `chords` extra edges chosen uniformly among the
/// non-edges. One chord gives a unicyclic graph.
pub fn random_connected<R: Rng + ?Sized>(rng: &mut R, n: usize, chords: usize) -> Graph {
    let tree = random_tree(rng, n);
    let mut missing: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| !tree.has_edge(u, v))
        .collect();
    missing.shuffle(rng);
    missing.truncate(chords);
    tree.rewire(&[], &missing)
}
