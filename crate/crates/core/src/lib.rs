//! Combinatorics and algebra of semi-inverted linear spaces.
//!
//! A linear space `L ⊆ Q^n` is given as the row span of a rational matrix.
//! Inverting the coordinates in a set `I` and taking the Zariski closure
//! produces an affine variety whose ideal is generated by the circuit
//! polynomials of the matroid of `L`. This crate computes:
//!
//! * the matroid (circuits, flats, minors, circuit linear forms) in [`matroid`],
//! * the semi-broken circuit complex and the external activity complex in [`complex`],
//! * circuit polynomials, Buchberger's algorithm and an elimination oracle in [`poly`],
//! * degrees, Hilbert numerators, achievable supports and Gröbner verification in [`invspace`],
//! * the region census and real points of the sign-twisted variety in [`arrangement`].
//!
//! All combinatorial and algebraic decisions are made in exact rational
//! arithmetic ([`exact`]); the only floating point code is the Newton solver
//! that recovers real points.

pub mod arrangement;
pub mod complex;
pub mod elements;
pub mod error;
pub mod exact;
pub mod invspace;
pub mod json;
pub mod matroid;
pub mod poly;

pub use elements::ElemSet;
pub use error::{Error, Result};
pub use exact::{QMatrix, QVector, Rational};
pub use matroid::Matroid;
