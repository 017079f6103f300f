//! Exact coefficient arithmetic: rationals, Laurent polynomials in `q`, and
//! unreduced rational functions.

mod json;
mod laurent;
mod rational_fn;

/// Arbitrary-precision rational, always stored in lowest terms with a
/// positive denominator.
pub use num_rational::BigRational;

pub use json::{from_json, rational_fn_from_json, rational_fn_to_json, to_json};
pub(crate) use laurent::{add_exp, mul_exp};
pub use laurent::{lp_add, lp_mul, lp_substitute_power, LaurentPoly};
pub use rational_fn::{rf_eq, RationalFn};
