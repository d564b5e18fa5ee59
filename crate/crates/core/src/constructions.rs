//! The extremal graphs: `T_{n,Δ}`, `U_{n,Δ}` and the spider families.
//!
//! Labels are deterministic: the center (or the high-degree triangle vertex)
//! is 0, and legs are attached in nondecreasing length order.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::canon::canonical_code;
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GraphClass {
    Tree,
    Unicyclic,
}

impl fmt::Display for GraphClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GraphClass::Tree => "tree",
            GraphClass::Unicyclic => "unicyclic",
        })
    }
}

impl FromStr for GraphClass {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "tree" => Ok(GraphClass::Tree),
            "unicyclic" => Ok(GraphClass::Unicyclic),
            other => Err(format!(
                "unknown class {other:?}; expected tree or unicyclic"
            )),
        }
    }
}

/// A family `T(n, Δ)` or `U(n, Δ)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GraphClassSpec {
    pub n: usize,
    pub delta: usize,
    pub class: GraphClass,
}

impl GraphClassSpec {
    /// Requires `n >= 3` and `2 <= Δ <= n - 1`.
    pub fn new(class: GraphClass, n: usize, delta: usize) -> Result<Self> {
        if n < 3 || delta < 2 || delta > n - 1 {
            return Err(Error::Range(format!(
                "{class} family needs n >= 3 and 2 <= delta <= n - 1, got n = {n}, delta = {delta}"
            )));
        }
        Ok(GraphClassSpec { n, delta, class })
    }

    pub fn branch(&self) -> Branch {
        match self.class {
            GraphClass::Tree => tree_branch(self.n, self.delta),
            GraphClass::Unicyclic => unicyclic_branch(self.n, self.delta),
        }
    }
}

impl fmt::Display for GraphClassSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(n={}, delta={})", self.class, self.n, self.delta)
    }
}

/// Which form the maximum takes for a given `(n, Δ)`.
///
/// `HighDegree`: the max-degree vertex carries pendants and paths of length
/// two (`T_{n,Δ}` / `U_{n,Δ}`). `LowDegree`: every leg has length at least two.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Branch {
    HighDegree,
    LowDegree,
}

/// `HighDegree` iff `Δ >= ⌈n/2⌉`; otherwise `Δ <= ⌊(n-1)/2⌋`.
pub fn tree_branch(n: usize, delta: usize) -> Branch {
    if 2 * delta >= n {
        Branch::HighDegree
    } else {
        Branch::LowDegree
    }
}

/// `HighDegree` iff `Δ >= ⌈(n+2)/2⌉`; otherwise `Δ <= ⌊(n+1)/2⌋`.
pub fn unicyclic_branch(n: usize, delta: usize) -> Branch {
    if 2 * delta >= n + 2 {
        Branch::HighDegree
    } else {
        Branch::LowDegree
    }
}

/// Joins a new path on `r` vertices to `u` through one of its terminal
/// vertices. New vertices are `n..n+r`, numbered outward from `u`.
pub fn attach_path(g: &Graph, u: usize, r: usize) -> Result<Graph> {
    if u >= g.n() {
        return Err(Error::VertexOutOfRange {
            vertex: u,
            n: g.n(),
        });
    }
    if r == 0 {
        return Err(Error::Range(
            "attached path needs at least one vertex".into(),
        ));
    }
    let n = g.n();
    let mut edges = vec![(u, n)];
    edges.extend((n + 1..n + r).map(|v| (v - 1, v)));
    Ok(g.extend(r, &edges))
}

fn attach_legs(mut g: Graph, at: usize, legs: &[usize]) -> Graph {
    for &len in legs {
        g = attach_path(&g, at, len).expect("attachment vertex exists");
    }
    g
}

/// `T_{n,Δ}`: `2Δ+1-n` pendants and `n-Δ-1` paths of length two on vertex 0.
pub fn t_extremal(n: usize, delta: usize) -> Result<Graph> {
    if n < 2 || 2 * delta < n || delta > n - 1 {
        return Err(Error::Range(format!(
            "T_(n,delta) needs ceil(n/2) <= delta <= n - 1, got n = {n}, delta = {delta}"
        )));
    }
    let mut legs = vec![1; 2 * delta + 1 - n];
    legs.extend(std::iter::repeat_n(2, n - delta - 1));
    Ok(attach_legs(Graph::empty(1), 0, &legs))
}

/// `U_{n,Δ}`: triangle `0,1,2` with `2Δ-n-1` pendants and `n-Δ-1` paths of
/// length two on vertex 0.
pub fn u_extremal(n: usize, delta: usize) -> Result<Graph> {
    if 2 * delta < n + 2 || delta + 1 > n {
        return Err(Error::Range(format!(
            "U_(n,delta) needs ceil((n+2)/2) <= delta <= n - 1, got n = {n}, delta = {delta}"
        )));
    }
    let mut legs = vec![1; 2 * delta - n - 1];
    legs.extend(std::iter::repeat_n(2, n - delta - 1));
    Ok(attach_legs(Graph::cycle(3)?, 0, &legs))
}

/// Nondecreasing sequences of `parts` integers, each `>= min`, summing to `total`.
pub fn partitions_with_min(total: usize, parts: usize, min: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, parts: usize, lo: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if parts == 0 {
            if rest == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let mut x = lo;
        while x * parts <= rest {
            cur.push(x);
            go(rest - x, parts - 1, x, cur, out);
            cur.pop();
            x += 1;
        }
    }
    let mut out = Vec::new();
    go(total, parts, min, &mut Vec::new(), &mut out);
    out
}

/// Keeps the first graph of every isomorphism class.
fn dedup_by_code(graphs: Vec<Graph>) -> Vec<Graph> {
    let mut seen = HashSet::new();
    graphs
        .into_iter()
        .filter(|g| {
            seen.insert(canonical_code(g).expect("constructed graphs are small and connected"))
        })
        .collect()
}

/// Trees made of `Δ` legs of length at least two sharing one center.
pub fn spider_family(n: usize, delta: usize) -> Result<Vec<Graph>> {
    if delta < 2 || 2 * delta + 1 > n {
        return Err(Error::Range(format!(
            "spider family needs 2 <= delta <= floor((n-1)/2), got n = {n}, delta = {delta}"
        )));
    }
    let graphs = partitions_with_min(n - 1, delta, 2)
        .into_iter()
        .map(|legs| attach_legs(Graph::empty(1), 0, &legs))
        .collect();
    Ok(dedup_by_code(graphs))
}

/// Unicyclic graphs made of a cycle `C_g` (`g >= 3`, vertices `0..g`) with
/// `Δ-2` legs of length at least two on vertex 0, over every valid `g`.
pub fn cycle_spider_family(n: usize, delta: usize) -> Result<Vec<Graph>> {
    if n < 3 || delta < 2 || 2 * delta > n + 1 {
        return Err(Error::Range(format!(
            "cycle spider family needs n >= 3 and 2 <= delta <= floor((n+1)/2), got n = {n}, delta = {delta}"
        )));
    }
    let legs_count = delta - 2;
    let mut graphs = Vec::new();
    for girth in 3..=n {
        for legs in partitions_with_min(n - girth, legs_count, 2) {
            graphs.push(attach_legs(Graph::cycle(girth)?, 0, &legs));
        }
    }
    Ok(dedup_by_code(graphs))
}

/// The graphs attaining the maximum sum-connectivity index in the family.
pub fn extremal_family(spec: &GraphClassSpec) -> Result<Vec<Graph>> {
    let GraphClassSpec { n, delta, class } = *spec;
    match (class, spec.branch()) {
        (GraphClass::Tree, Branch::HighDegree) => Ok(vec![t_extremal(n, delta)?]),
        (GraphClass::Tree, Branch::LowDegree) => spider_family(n, delta),
        (GraphClass::Unicyclic, Branch::HighDegree) => Ok(vec![u_extremal(n, delta)?]),
        (GraphClass::Unicyclic, Branch::LowDegree) => cycle_spider_family(n, delta),
    }
}
