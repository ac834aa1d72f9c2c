//! Exact counting and enumeration of the nonnegative integer solutions of
//! `p·x + q·y + l·z = n`.
//!
//! Several independent routes produce the same numbers and are meant to be
//! checked against each other:
//!
//! - [`three_var::count_residue`]: sum over one residue class of slices,
//!   each counted with the four-case table of [`two_var::count_bcs_table`].
//! - [`three_var::count_closed`] / [`three_var::enumerate_closed`]: explicit
//!   per-slice solution families from [`two_var::count_binner`].
//! - [`three_var::enumerate_exhaustive`]: union of two-variable solution lines.
//! - [`genfunc::series_count`] and [`genfunc::brute_force_count`]: oracles.
//!
//! [`reduction`] works through the coordinate faces instead and measures the
//! `s_a - s_b + s_c` representation of interior solutions.

pub mod arith;
pub mod error;
pub mod genfunc;
pub mod reduction;
pub mod three_var;
pub mod two_var;

pub use error::{Error, Result};
pub use three_var::{SolutionTriple, ThreeVarInstance};
pub use two_var::TwoVarEquation;
