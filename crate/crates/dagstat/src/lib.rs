//! Statistics of minimal DAGs under leaf-centric binary tree sources.
//!
//! A leaf-centric source draws a binary tree with `n` leaves top-down: the
//! root carries weight `n`, a split function `σ` picks `(i, n-i)` for the two
//! children, and the process recurses until weight 1. Compressing a tree by
//! merging equal subtrees gives its minimal DAG; this crate computes and
//! cross-checks everything one needs to study the average minimal-DAG size
//! of such sources at desk scale:
//!
//! - [`tree`]: tree terms, parsing/printing, structural statistics, and
//!   exhaustive enumeration of all trees with `n` leaves (the brute-force
//!   oracle substrate),
//! - [`dag`]: minimal-DAG construction by hash consing and a bit-exact
//!   fixed-width binary encoding,
//! - [`sources`]: the split-function abstraction with the classic built-ins
//!   (binary search tree, binomial, uniform/Catalan, deterministic, custom
//!   tables),
//! - [`sampler`]: seeded, reproducible sampling of trees and of their DAG
//!   sizes, with Monte Carlo summaries,
//! - [`expectation`]: exact dynamic programming for expected cut counts and
//!   enumeration oracles,
//! - [`entropy`]: split entropies, source entropy via the telescoping
//!   identity, and the entropy lower bound,
//! - [`bounds`]: closed-form bound evaluation and empirical class-membership
//!   fitting,
//! - [`detsource`]: deterministic sources, their unique trees, and
//!   leaf-size-set analysis.
//!
//! The companion guide under `book/` walks through the concepts; its code
//! snippets are compiled as doc-tests (see [`guide`]).

pub mod bounds;
pub mod dag;
pub mod detsource;
pub mod entropy;
pub mod expectation;
pub mod guide;
pub(crate) mod numeric;
pub mod sampler;
pub mod sources;
pub mod tree;

pub use dag::{dag_size, minimize, Dag};
pub use sampler::{estimate_dag_size, EstimateReport, RngState};
pub use sources::SplitSource;
pub use tree::Tree;
