//! Sum-connectivity and product-connectivity (Randić) indices of trees and
//! unicyclic graphs with a prescribed maximum degree.
//!
//! The crate evaluates both indices exactly as sums of rational multiples of
//! square roots, builds the graphs that maximize the sum-connectivity index
//! in `T(n, Δ)` and `U(n, Δ)`, evaluates the closed-form maxima, and checks
//! all of it against exhaustive isomorph-free enumeration.
//!
//! ```
//! use sumconn::{bounds::tree_max_bound, constructions::t_extremal, indices::sum_connectivity};
//!
//! let tree = t_extremal(7, 4).unwrap();
//! let chi = sum_connectivity(&tree).unwrap();
//! assert_eq!(chi, tree_max_bound(7, 4).unwrap());
//! assert!((chi.to_f64() - 2.8656243).abs() < 1e-7);
//! ```

pub mod bounds;
pub mod canon;
pub mod cli;
pub mod constructions;
pub mod enumerate;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod indices;
pub mod radical;
pub mod sample;
pub mod transforms;
pub mod verify;

pub use canon::{canonical_code, CanonicalCode};
pub use error::{Error, Result};
pub use graph::Graph;
pub use radical::RadicalValue;
