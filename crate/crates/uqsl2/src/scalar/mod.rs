//! Exact coefficient arithmetic: Laurent polynomials in `q` over
//! arbitrary-precision integers, the reduced fraction field, and
//! q-combinatorics.
//!
//! All arithmetic is exact; equality is structural on canonical forms.

mod laurent;
mod qcomb;
mod ratio;

pub use laurent::LaurentPoly;
pub use qcomb::{q_binom, q_fact, q_int};
pub use ratio::ScalarQ;
