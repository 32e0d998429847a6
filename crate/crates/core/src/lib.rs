//! Exact algebraic combinatorics for the parastatistics algebra on a
//! `m|n`-dimensional superspace and its q-deformation.
//!
//! - [`exactmath`]: rationals, Laurent polynomials, rational functions, truncated series, exact rank
//! - [`shapes`]: partitions, the `(m, n)`-hook, super semistandard Young tableaux
//! - [`symfunc`]: Schur, skew Schur and hook Schur characters and the two character identities
//! - [`plactic`]: super-Knuth relations, signed insertion and the super-plactic monoid
//! - [`freealg`]: free tensor superalgebra, q-brackets, relation ideal and graded dimensions
//! - [`heckerep`]: Hecke algebra, Eulerian idempotents, R-matrix and Schur–Weyl actions
//! - [`report`] and [`cli`]: verification reports and the `superplactic-kit` command line

pub mod cli;
pub mod error;
pub mod exactmath;
pub mod freealg;
pub mod heckerep;
pub mod plactic;
pub mod report;
pub mod shapes;
pub mod symfunc;

pub use error::{Error, Result};
