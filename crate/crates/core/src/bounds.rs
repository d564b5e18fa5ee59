//! Closed-form maxima of the sum-connectivity index over `T(n, Δ)` and
//! `U(n, Δ)`, evaluated exactly.

use num_rational::BigRational;

use crate::constructions::{
    cycle_spider_family, tree_branch, u_extremal, unicyclic_branch, Branch,
};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::radical::RadicalValue;

/// `coef / √k`
fn over_sqrt(coef: i64, k: usize) -> RadicalValue {
    RadicalValue::inv_sqrt(k as u64).scale(&BigRational::from_integer(coef.into()))
}

fn check_range(n: usize, delta: usize) -> Result<()> {
    if n < 3 || delta < 2 || delta > n - 1 {
        return Err(Error::Range(format!(
            "bound needs n >= 3 and 2 <= delta <= n - 1, got n = {n}, delta = {delta}"
        )));
    }
    Ok(())
}

/// Maximum of `χ` over trees on `n` vertices with maximum degree `Δ`.
pub fn tree_max_bound(n: usize, delta: usize) -> Result<RadicalValue> {
    check_range(n, delta)?;
    let (n, d) = (n as i64, delta as i64);
    Ok(match tree_branch(n as usize, delta) {
        Branch::HighDegree => {
            over_sqrt(2 * d - n + 1, delta + 1)
                + over_sqrt(n - d - 1, delta + 2)
                + over_sqrt(n - d - 1, 3)
        }
        Branch::LowDegree => {
            RadicalValue::ratio(n - 1 - 2 * d, 2) + over_sqrt(d, 3) + over_sqrt(d, delta + 2)
        }
    })
}

/// Maximum of `χ` over unicyclic graphs on `n` vertices with maximum degree `Δ`.
pub fn unicyclic_max_bound(n: usize, delta: usize) -> Result<RadicalValue> {
    check_range(n, delta)?;
    let (n, d) = (n as i64, delta as i64);
    Ok(match unicyclic_branch(n as usize, delta) {
        Branch::HighDegree => {
            over_sqrt(n - d - 1, 3)
                + over_sqrt(n - d + 1, delta + 2)
                + over_sqrt(2 * d - n - 1, delta + 1)
                + RadicalValue::ratio(1, 2)
        }
        Branch::LowDegree => {
            over_sqrt(d - 2, 3) + over_sqrt(d, delta + 2) + RadicalValue::ratio(n - 2 * d + 2, 2)
        }
    })
}

/// `(x-2)/√3 + x/√(x+2) + (n-2x+2)/2` for real `x >= 2`: the low-degree
/// unicyclic bound with the maximum degree relaxed to a real variable.
pub fn spider_bound_curve(n: usize, x: f64) -> Result<f64> {
    if x.is_nan() || x < 2.0 {
        return Err(Error::Range(format!(
            "curve is defined for x >= 2, got {x}"
        )));
    }
    let n = n as f64;
    Ok((x - 2.0) / 3f64.sqrt() + x / (x + 2.0).sqrt() + 0.5 * (n - 2.0 * x + 2.0))
}

/// One rank of a value ranking: the value and every graph attaining it.
#[derive(Clone, Debug)]
pub struct RankedClass {
    pub value: RadicalValue,
    pub graphs: Vec<Graph>,
}

/// The largest and second largest `χ` among unicyclic graphs on `n` vertices.
#[derive(Clone, Debug)]
pub struct TopTwo {
    pub n: usize,
    pub first: RankedClass,
    pub second: RankedClass,
}

pub fn unicyclic_top_two(n: usize) -> Result<TopTwo> {
    if n < 4 {
        return Err(Error::Range(format!("ranking needs n >= 4, got {n}")));
    }
    let first = RankedClass {
        value: RadicalValue::ratio(n as i64, 2),
        graphs: vec![Graph::cycle(n)?],
    };
    let second = if n == 4 {
        RankedClass {
            value: RadicalValue::integer(1) + over_sqrt(2, 5),
            graphs: vec![u_extremal(4, 3)?],
        }
    } else {
        RankedClass {
            value: RadicalValue::ratio(n as i64 - 4, 2) + over_sqrt(1, 3) + over_sqrt(3, 5),
            graphs: cycle_spider_family(n, 3)?,
        }
    };
    Ok(TopTwo { n, first, second })
}
