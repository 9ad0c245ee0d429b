//! Exact symbolic computation in the Drinfeld realization of the quantum
//! affine algebra U_q(sl2-hat).
//!
//! The algebra is generated by loop generators `x_n`, `y_n` (n in Z),
//! imaginary-root generators `h_k` (k nonzero), the group-like `K` and the
//! central `c^{1/2}`, over the field of rational functions in `q`. This crate
//! provides:
//!
//! - [`scalar`]: Laurent polynomials in `q` with arbitrary-precision integer
//!   coefficients, the reduced fraction field, and q-combinatorics
//!   (q-integers, q-factorials, Gaussian binomials).
//! - [`pbw`]: PBW monomials and elements with exact multiplication by normal
//!   ordering under the defining relations; expansion of the group-like
//!   generating-function coefficients `psi_m`, `phi_{-m}` into `h`'s.
//! - [`tensor`]: the two- and three-fold tensor algebras hosting coproduct
//!   values.
//! - [`series`]: truncated formal series in `z` with element- or
//!   tensor-valued coefficients and exact window bookkeeping.
//! - [`morphisms`]: the shift automorphisms `S`, `T`, the antiautomorphisms
//!   `alpha`, `beta`, the seed coproducts, and the recursive coproduct
//!   oracle.
//! - [`coproduct`]: ordered index tuples, the straightening coefficients
//!   `c_{m_n,...,m_1}(q)` (recursive and closed form), closed-form powers of
//!   the degree-zero generating functions, and the closed-form coproduct of
//!   every generator.
//! - [`verify`]: executable-theorem suites comparing closed forms against
//!   independent oracles, with structured pass/fail reports.
//! - [`expr`]: a small expression language for the CLI (parser and
//!   evaluator).
//! - [`render`]: text / LaTeX / JSON rendering.
//!
//! # Example
//!
//! ```
//! use uqsl2::pbw::Element;
//!
//! // y_0 x_1 straightens against the mixed commutation relation:
//! // y_0 x_1 = x_1 y_0 - K c^{1/2} h_1.
//! let p = &Element::y(0) * &Element::x(1);
//! assert_eq!(p.to_string(), "x[1]*y[0] - h[1]*K*c2[1]");
//!
//! // The same value through the expression parser.
//! let q = uqsl2::expr::parse_eval("y[0] * x[1]").unwrap();
//! assert_eq!(p, q);
//! ```

pub mod coproduct;
pub mod expr;
pub mod morphisms;
pub mod pbw;
pub mod render;
pub mod scalar;
pub mod series;
pub mod tensor;
pub mod verify;

pub use pbw::{Element, PbwMonomial};
pub use scalar::{LaurentPoly, ScalarQ};
pub use series::TruncatedSeries;
pub use tensor::{Tensor3Element, TensorElement};
