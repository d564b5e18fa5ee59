//! Immutable simple undirected graphs.
//!
//! Vertices are `0..n`. The edge list is kept normalized (`u < v`, sorted)
//! and every adjacency list is sorted, so two `Graph`s compare equal exactly
//! when they have the same labeled edge set.

use std::collections::{BTreeSet, VecDeque};
use std::fmt::Write as _;

use crate::error::{Error, Result};

/// Largest vertex count handled by canonical labeling, graph6 parsing and
/// enumeration.
pub const MAX_VERTICES: usize = 16;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph from an edge list, rejecting out-of-range endpoints,
    /// self-loops and repeated edges.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for &(u, v) in edges {
            for vertex in [u, v] {
                if vertex >= n {
                    return Err(Error::VertexOutOfRange { vertex, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            let key = (u.min(v), u.max(v));
            if !seen.insert(key) {
                return Err(Error::DuplicateEdge(key.0, key.1));
            }
        }
        Ok(Self::from_edge_set(n, seen))
    }

    fn from_edge_set(n: usize, edges: BTreeSet<(usize, usize)>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph {
            n,
            edges: edges.into_iter().collect(),
            adj,
        }
    }

    pub fn empty(n: usize) -> Self {
        Self::from_edge_set(n, BTreeSet::new())
    }

    /// The path `P_n`.
    pub fn path(n: usize) -> Self {
        Self::from_edge_set(n, (1..n).map(|v| (v - 1, v)).collect())
    }

    /// The cycle `C_n`, `n >= 3`.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::TooSmall { n, min: 3 });
        }
        let mut edges: BTreeSet<_> = (1..n).map(|v| (v - 1, v)).collect();
        edges.insert((0, n - 1));
        Ok(Self::from_edge_set(n, edges))
    }

    /// The star `K_{1,n-1}` centered at vertex 0.
    pub fn star(n: usize) -> Self {
        Self::from_edge_set(n, (1..n).map(|v| (0, v)).collect())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Normalized edges, `u < v`, in lexicographic order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut reached = 1;
        while let Some(v) = queue.pop_front() {
            for &w in &self.adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    reached += 1;
                    queue.push_back(w);
                }
            }
        }
        reached == self.n
    }

    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.m() + 1 == self.n && self.is_connected()
    }

    pub fn is_unicyclic(&self) -> bool {
        self.n >= 3 && self.m() == self.n && self.is_connected()
    }

    /// Vertices of the unique cycle in traversal order, starting at the
    /// smallest label and heading towards its smaller cycle neighbor.
    pub fn unique_cycle(&self) -> Result<Vec<usize>> {
        if !self.is_unicyclic() {
            return Err(Error::NotUnicyclic);
        }
        let on_cycle = self.cycle_mask();
        let start = (0..self.n)
            .find(|&v| on_cycle[v])
            .expect("cycle is nonempty");
        let next = |v: usize, prev: usize| {
            self.adj[v]
                .iter()
                .copied()
                .find(|&w| on_cycle[w] && w != prev)
                .expect("cycle vertices have two cycle neighbors")
        };
        let first = self.adj[start]
            .iter()
            .copied()
            .find(|&w| on_cycle[w])
            .expect("cycle vertices have two cycle neighbors");
        let mut cycle = vec![start, first];
        let (mut prev, mut cur) = (start, first);
        loop {
            let w = next(cur, prev);
            if w == start {
                break;
            }
            cycle.push(w);
            prev = cur;
            cur = w;
        }
        Ok(cycle)
    }

    /// Marks the vertices left after repeatedly stripping degree-1 vertices.
    /// For a unicyclic graph these are exactly the cycle vertices.
    pub(crate) fn cycle_mask(&self) -> Vec<bool> {
        let mut deg = self.degrees();
        let mut alive = vec![true; self.n];
        let mut stack: Vec<usize> = (0..self.n).filter(|&v| deg[v] <= 1).collect();
        while let Some(v) = stack.pop() {
            if !alive[v] {
                continue;
            }
            alive[v] = false;
            for &w in &self.adj[v] {
                if alive[w] {
                    deg[w] -= 1;
                    if deg[w] == 1 {
                        stack.push(w);
                    }
                }
            }
        }
        alive
    }

    /// Returns a copy with edges removed and added. Endpoints are assumed
    /// valid; the caller is responsible for keeping the graph simple.
    pub(crate) fn rewire(&self, remove: &[(usize, usize)], add: &[(usize, usize)]) -> Self {
        let mut edges: BTreeSet<_> = self.edges.iter().copied().collect();
        for &(u, v) in remove {
            let removed = edges.remove(&(u.min(v), u.max(v)));
            debug_assert!(removed, "edge {u}-{v} not present");
        }
        for &(u, v) in add {
            debug_assert!(u != v);
            let inserted = edges.insert((u.min(v), u.max(v)));
            debug_assert!(inserted, "edge {u}-{v} already present");
        }
        Self::from_edge_set(self.n, edges)
    }

    /// Appends `extra` isolated vertices and the given edges.
    pub(crate) fn extend(&self, extra: usize, add: &[(usize, usize)]) -> Self {
        let mut edges: BTreeSet<_> = self.edges.iter().copied().collect();
        edges.extend(add.iter().map(|&(u, v)| (u.min(v), u.max(v))));
        Self::from_edge_set(self.n + extra, edges)
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.n);
        let edges = self
            .edges
            .iter()
            .map(|&(u, v)| {
                let (a, b) = (perm[u], perm[v]);
                (a.min(b), a.max(b))
            })
            .collect();
        Self::from_edge_set(self.n, edges)
    }

    /// Graphviz DOT rendering.
    pub fn to_dot(&self, name: &str) -> String {
        let mut out = format!("graph {name} {{\n");
        for v in 0..self.n {
            if self.adj[v].is_empty() {
                let _ = writeln!(out, "  {v};");
            }
        }
        for &(u, v) in &self.edges {
            let _ = writeln!(out, "  {u} -- {v};");
        }
        out.push_str("}\n");
        out
    }

    /// Parses a whitespace-separated edge list, one `u v` pair per line.
    /// Blank lines and `#` comments are skipped; the vertex count is one more
    /// than the largest label unless `n` is given.
    pub fn parse_edge_list(text: &str, n: Option<usize>) -> Result<Self> {
        let mut edges = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            let bad = |reason: &str| Error::MalformedEdgeList {
                line: idx + 1,
                reason: reason.to_string(),
            };
            if fields.len() != 2 {
                return Err(bad("expected two vertex labels"));
            }
            let u = fields[0]
                .parse::<usize>()
                .map_err(|_| bad("bad vertex label"))?;
            let v = fields[1]
                .parse::<usize>()
                .map_err(|_| bad("bad vertex label"))?;
            edges.push((u, v));
        }
        let n = n.unwrap_or_else(|| edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0));
        Self::from_edges(n, &edges)
    }
}
