//! Exact rational arithmetic, linear algebra and linear feasibility.

mod lp;
mod matrix;
mod rational;

pub use lp::{lp_feasible, maximize, LinearSystem, LpOutcome};
pub use matrix::{kernel_basis, rref, QMatrix, QVector, Rref};
pub use rational::{format_rational, parse_rational, rational_to_f64, Rational};
