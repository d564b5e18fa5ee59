//! Isomorph-free generation of trees and unicyclic graphs.
//!
//! Free trees come from the constant-amortized-time level-sequence successor
//! of Wright, Richmond, Odlyzko and McKay: rooted level sequences are walked
//! in reverse lexicographic order and jumps skip every sequence that is not
//! the canonical (center-rooted) representative of its free tree. Unicyclic
//! graphs are every free tree plus one chord, deduplicated by canonical code.
//!
//! Results are relabeled into canonical form and sorted by canonical code.

use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;

use crate::canon::{canonical_form, CanonicalCode};
use crate::constructions::GraphClass;
use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

/// Largest order accepted by [`enumerate_unicyclic`].
pub const MAX_UNICYCLIC_VERTICES: usize = 14;

/// Inclusive bounds on the maximum degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DegreeFilter {
    pub min: usize,
    pub max: usize,
}

impl DegreeFilter {
    pub fn any() -> Self {
        DegreeFilter {
            min: 0,
            max: usize::MAX,
        }
    }

    pub fn exactly(delta: usize) -> Self {
        DegreeFilter {
            min: delta,
            max: delta,
        }
    }

    pub fn at_most(delta: usize) -> Self {
        DegreeFilter { min: 0, max: delta }
    }

    pub fn accepts(&self, delta: usize) -> bool {
        (self.min..=self.max).contains(&delta)
    }
}

impl Default for DegreeFilter {
    fn default() -> Self {
        Self::any()
    }
}

/// One isomorphism class: its canonical code and canonically labeled graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassMember {
    pub code: CanonicalCode,
    pub graph: Graph,
}

impl ClassMember {
    pub fn new(g: &Graph) -> Result<Self> {
        let form = canonical_form(g)?;
        Ok(ClassMember {
            graph: g.relabel(&form.labeling),
            code: form.code,
        })
    }
}

/// Next rooted tree in reverse lexicographic order of level sequences,
/// optionally restarting the search at position `p`.
fn next_rooted(levels: &[usize], p: Option<usize>) -> Option<Vec<usize>> {
    let p = p.unwrap_or_else(|| {
        let mut p = levels.len() - 1;
        while levels[p] == 1 {
            p -= 1;
        }
        p
    });
    if p == 0 {
        return None;
    }
    let mut q = p - 1;
    while levels[q] + 1 != levels[p] {
        q -= 1;
    }
    let mut next = levels.to_vec();
    for i in p..next.len() {
        next[i] = next[i - p + q];
    }
    Some(next)
}

/// Splits a level sequence into the first subtree of the root (levels
/// shifted up by one) and the rest of the tree including the root.
fn split(levels: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let second_child = levels
        .iter()
        .enumerate()
        .filter(|&(_, &l)| l == 1)
        .nth(1)
        .map_or(levels.len(), |(i, _)| i);
    let left = levels[1..second_child].iter().map(|l| l - 1).collect();
    let mut rest = vec![0];
    rest.extend_from_slice(&levels[second_child..]);
    (left, rest)
}

/// Returns `candidate` if it is the canonical representative of a free tree,
/// otherwise jumps to the next sequence that is.
fn next_free(candidate: Vec<usize>) -> Vec<usize> {
    let (left, rest) = split(&candidate);
    let left_height = left.iter().copied().max().unwrap_or(0);
    let rest_height = rest.iter().copied().max().unwrap_or(0);
    let valid = rest_height > left_height
        || (rest_height == left_height
            && (left.len() < rest.len() || (left.len() == rest.len() && left <= rest)));
    if valid {
        return candidate;
    }
    let p = left.len();
    let mut next = next_rooted(&candidate, Some(p)).expect("p >= 1 always has a successor");
    if candidate[p] > 2 {
        let (new_left, _) = split(&next);
        let height = new_left.iter().copied().max().unwrap_or(0);
        let len = next.len();
        for (slot, level) in next[len - height - 1..].iter_mut().zip(1..) {
            *slot = level;
        }
    }
    next
}

/// Level sequences of all free trees on `n >= 1` vertices, one per class.
pub fn free_tree_level_sequences(n: usize) -> Vec<Vec<usize>> {
    assert!(n >= 1);
    if n <= 2 {
        return vec![(0..n).collect()];
    }
    // the path, rooted at its center
    let mut layout: Vec<usize> = (0..=n / 2).chain(1..n.div_ceil(2)).collect();
    let mut out = Vec::new();
    loop {
        layout = next_free(layout);
        out.push(layout.clone());
        match next_rooted(&layout, None) {
            Some(next) => layout = next,
            None => return out,
        }
    }
}

/// Tree whose vertex `i` sits at depth `levels[i]` below the nearest
/// preceding vertex one level up.
pub fn tree_from_levels(levels: &[usize]) -> Graph {
    let mut last_at_depth: Vec<usize> = Vec::new();
    let mut edges = Vec::with_capacity(levels.len().saturating_sub(1));
    for (v, &depth) in levels.iter().enumerate() {
        if depth > 0 {
            edges.push((last_at_depth[depth - 1], v));
        }
        last_at_depth.truncate(depth);
        last_at_depth.push(v);
    }
    Graph::from_edges(levels.len(), &edges).expect("level sequences describe trees")
}

fn sorted_by_code(members: impl IntoIterator<Item = ClassMember>) -> Vec<ClassMember> {
    let mut members: Vec<ClassMember> = members.into_iter().collect();
    members.sort_by(|a, b| a.code.cmp(&b.code));
    members
}

/// Every free tree on `n` vertices whose maximum degree passes `filter`.
pub fn enumerate_trees(n: usize, filter: DegreeFilter) -> Result<Vec<ClassMember>> {
    if n == 0 {
        return Err(Error::TooSmall { n, min: 1 });
    }
    if n > MAX_VERTICES {
        return Err(Error::TooLarge {
            n,
            max: MAX_VERTICES,
        });
    }
    let members = free_tree_level_sequences(n)
        .into_par_iter()
        .map(|levels| tree_from_levels(&levels))
        .filter(|g| filter.accepts(g.max_degree()))
        .map(|g| ClassMember::new(&g).expect("trees are connected"))
        .collect::<Vec<_>>();
    Ok(sorted_by_code(members))
}

/// Every connected unicyclic graph on `n` vertices whose maximum degree
/// passes `filter`.
pub fn enumerate_unicyclic(n: usize, filter: DegreeFilter) -> Result<Vec<ClassMember>> {
    if n < 3 {
        return Err(Error::TooSmall { n, min: 3 });
    }
    if n > MAX_UNICYCLIC_VERTICES {
        return Err(Error::TooLarge {
            n,
            max: MAX_UNICYCLIC_VERTICES,
        });
    }
    let per_tree: Vec<HashMap<CanonicalCode, Graph>> = free_tree_level_sequences(n)
        .into_par_iter()
        .map(|levels| {
            let tree = tree_from_levels(&levels);
            let mut found = HashMap::new();
            for u in 0..n {
                for v in u + 1..n {
                    if tree.has_edge(u, v) {
                        continue;
                    }
                    let g = tree.rewire(&[], &[(u, v)]);
                    if !filter.accepts(g.max_degree()) {
                        continue;
                    }
                    let member = ClassMember::new(&g).expect("tree plus chord is connected");
                    found.entry(member.code).or_insert(member.graph);
                }
            }
            found
        })
        .collect();
    let mut merged = BTreeMap::new();
    for map in per_tree {
        merged.extend(map);
    }
    Ok(merged
        .into_iter()
        .map(|(code, graph)| ClassMember { code, graph })
        .collect())
}

pub fn enumerate_class(
    class: GraphClass,
    n: usize,
    filter: DegreeFilter,
) -> Result<Vec<ClassMember>> {
    match class {
        GraphClass::Tree => enumerate_trees(n, filter),
        GraphClass::Unicyclic => enumerate_unicyclic(n, filter),
    }
}

/// Class sizes keyed by maximum degree.
pub fn class_sizes(class: GraphClass, n: usize) -> Result<BTreeMap<usize, usize>> {
    let mut sizes = BTreeMap::new();
    for member in enumerate_class(class, n, DegreeFilter::any())? {
        *sizes.entry(member.graph.max_degree()).or_insert(0) += 1;
    }
    Ok(sizes)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn level_sequences_small() {
        assert_eq!(free_tree_level_sequences(1), vec![vec![0]]);
        assert_eq!(free_tree_level_sequences(2), vec![vec![0, 1]]);
        assert_eq!(free_tree_level_sequences(4).len(), 2);
        assert_eq!(free_tree_level_sequences(5).len(), 3);
    }

    #[test]
    fn tree_from_levels_builds_parent_links() {
        let g = tree_from_levels(&[0, 1, 2, 1, 2, 2]);
        assert_eq!(g.edges(), &[(0, 1), (0, 3), (1, 2), (3, 4), (3, 5)]);
    }

    #[test]
    fn free_tree_counts() {
        // number of free trees on n vertices, n = 1..=16
        let expected = [
            1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551, 1301, 3159, 7741, 19320,
        ];
        for (n, &count) in (1..=16).zip(expected.iter()) {
            let trees = enumerate_trees(n, DegreeFilter::any()).unwrap();
            assert_eq!(trees.len(), count, "n = {n}");
        }
    }

    #[test]
    fn trees_are_distinct_valid_and_sorted() {
        for n in 1..=13 {
            let trees = enumerate_trees(n, DegreeFilter::any()).unwrap();
            let codes: HashSet<_> = trees.iter().map(|m| m.code.clone()).collect();
            assert_eq!(codes.len(), trees.len());
            assert!(trees.windows(2).all(|w| w[0].code < w[1].code));
            for m in &trees {
                assert!(m.graph.is_tree());
                assert_eq!(m.graph.degrees().iter().sum::<usize>(), 2 * m.graph.m());
            }
        }
    }

    #[test]
    fn degree_filter() {
        let stars = enumerate_trees(5, DegreeFilter::exactly(4)).unwrap();
        assert_eq!(stars.len(), 1);
        assert_eq!(stars[0].graph.max_degree(), 4);
        let chem = enumerate_trees(8, DegreeFilter::at_most(4)).unwrap();
        assert!(chem.iter().all(|m| m.graph.max_degree() <= 4));
        assert_eq!(chem.len(), 18);
    }

    #[test]
    fn unicyclic_counts() {
        // connected unicyclic graphs on n vertices, n = 3..=11
        let expected = [1, 2, 5, 13, 33, 89, 240, 657, 1806];
        for (n, &count) in (3..=11).zip(expected.iter()) {
            let graphs = enumerate_unicyclic(n, DegreeFilter::any()).unwrap();
            assert_eq!(graphs.len(), count, "n = {n}");
            assert!(graphs.iter().all(|m| m.graph.is_unicyclic()));
            assert!(graphs.windows(2).all(|w| w[0].code < w[1].code));
        }
        let g = enumerate_unicyclic(4, DegreeFilter::exactly(3)).unwrap();
        assert_eq!(g.len(), 1);
    }

    #[test]
    fn size_limits() {
        assert!(matches!(
            enumerate_trees(0, DegreeFilter::any()),
            Err(Error::TooSmall { .. })
        ));
        assert!(matches!(
            enumerate_trees(17, DegreeFilter::any()),
            Err(Error::TooLarge { .. })
        ));
        assert!(matches!(
            enumerate_unicyclic(2, DegreeFilter::any()),
            Err(Error::TooSmall { .. })
        ));
        assert!(matches!(
            enumerate_unicyclic(15, DegreeFilter::any()),
            Err(Error::TooLarge { .. })
        ));
    }

    #[test]
    fn class_sizes_sum_to_totals() {
        let sizes = class_sizes(GraphClass::Tree, 7).unwrap();
        assert_eq!(sizes.values().sum::<usize>(), 11);
        assert_eq!(sizes[&6], 1);
        assert_eq!(sizes[&2], 1);
        let sizes = class_sizes(GraphClass::Unicyclic, 5).unwrap();
        assert_eq!(sizes.values().sum::<usize>(), 5);
    }
}
