//! Exact counting of integer partitions, relatively prime partitions, and
//! partitions relatively prime to a modulus, through finite
//! Mobius-weighted nested sums, together with the independent oracles that
//! verify them.
//!
//! The crate is organized around three routes to the same numbers:
//!
//! - [`formulas`]: the nested-sum evaluation. A variable-depth recursion
//!   fixes one part per level, folds it into a running gcd modulus, and
//!   closes with a two-part divisor-sum term. Seven counting functions
//!   (and their smallest-part refinements) are built on this kernel.
//! - [`oracle`]: a brute-force constrained partition enumerator, the
//!   ground truth at small scale.
//! - [`reference`]: Euler's pentagonal recurrence, the p(n, k) dynamic
//!   program, and Mobius inversion — a second independent oracle and the
//!   benchmark baseline. Also hosts the verification suites.
//!
//! [`arith`] supplies the divisor lists, the Mobius function, and the
//! coprime-interval counter these all share. [`cli`] is the command-line
//! surface (`compute`, `table`, `verify`, `bench`).
//!
//! All counts are exact: arithmetic is overflow-checked ([`Count`]) and
//! there is no floating point outside the asymptotic diagnostic in
//! [`reference`].
//!
//! Start with the runnable examples:
//!
//! ```bash
//! cargo run --example compute_counts
//! cargo run --example query_dispatch
//! cargo run --example phi_interval
//! cargo run --example enumerate_partitions
//! cargo run --example identity_report
//! cargo run --example nested_sum_vs_recurrence
//! ```

pub mod arith;
pub mod cli;
pub mod count;
pub mod formulas;
pub mod oracle;
pub mod reference;

mod error;

pub use count::Count;
pub use error::{Error, Result};
pub use formulas::{CoprimalityClass, Evaluator, PartitionQuery, SmallestPart};
