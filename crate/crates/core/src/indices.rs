//! Sum-connectivity `χ(G) = Σ (d_u + d_v)^{-1/2}` and product-connectivity
//! (Randić) `R(G) = Σ (d_u·d_v)^{-1/2}` indices.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::radical::RadicalValue;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum IndexKind {
    SumConnectivity,
    ProductConnectivity,
}

impl IndexKind {
    fn combine(self, du: usize, dv: usize) -> u64 {
        match self {
            IndexKind::SumConnectivity => (du + dv) as u64,
            IndexKind::ProductConnectivity => (du * dv) as u64,
        }
    }
}

impl fmt::Display for IndexKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            IndexKind::SumConnectivity => "sum",
            IndexKind::ProductConnectivity => "product",
        })
    }
}

impl FromStr for IndexKind {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "sum" | "chi" => Ok(IndexKind::SumConnectivity),
            "product" | "randic" | "R" => Ok(IndexKind::ProductConnectivity),
            other => Err(format!("unknown index {other:?}; expected sum or product")),
        }
    }
}

/// Exact `(d_u + d_v)^{-1/2}` or `(d_u·d_v)^{-1/2}`.
pub fn edge_contribution(du: usize, dv: usize, kind: IndexKind) -> RadicalValue {
    assert!(
        du >= 1 && dv >= 1,
        "degrees of an edge's endpoints are positive"
    );
    RadicalValue::inv_sqrt(kind.combine(du, dv))
}

/// Exact index value. Edges are grouped by their combined degree so each
/// distinct radicand is normalized once.
pub fn index_value(g: &Graph, kind: IndexKind) -> Result<RadicalValue> {
    if g.m() == 0 {
        return Err(Error::Edgeless);
    }
    let mut counts: BTreeMap<u64, u64> = BTreeMap::new();
    for &(u, v) in g.edges() {
        *counts
            .entry(kind.combine(g.degree(u), g.degree(v)))
            .or_default() += 1;
    }
    let mut total = RadicalValue::zero();
    for (k, count) in counts {
        total.add_sqrt_term(BigRational::new(count.into(), k.into()), k);
    }
    Ok(total)
}

pub fn sum_connectivity(g: &Graph) -> Result<RadicalValue> {
    index_value(g, IndexKind::SumConnectivity)
}

pub fn product_connectivity(g: &Graph) -> Result<RadicalValue> {
    index_value(g, IndexKind::ProductConnectivity)
}

/// Double-precision index, summed edge by edge.
pub fn index_f64(g: &Graph, kind: IndexKind) -> Result<f64> {
    if g.m() == 0 {
        return Err(Error::Edgeless);
    }
    Ok(g.edges()
        .iter()
        .map(|&(u, v)| 1.0 / (kind.combine(g.degree(u), g.degree(v)) as f64).sqrt())
        .sum())
}
