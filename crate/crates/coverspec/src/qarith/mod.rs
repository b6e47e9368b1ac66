//! Exact arithmetic kernel: arbitrary-precision rationals, univariate
//! polynomials over Q, rational functions with projective fibers,
//! quadratic field elements and cross-ratios, and Y-discriminants of
//! affine equations.
//!
//! All values are immutable after construction and safe to share across
//! threads.

mod bipoly;
mod poly;
mod quadext;
mod ratfunc;
mod ratq;

pub use bipoly::{discriminant_y, BiPoly};
pub use poly::{interpolate, resultant, PolyQ};
pub use quadext::{cross_ratio, cross_ratio_orbit, sqrt_as_quadext, QuadExt, QuadPoint};
pub use ratfunc::{
    fiber_profile, global_ramification_weight, moebius, reduce_ratfunc, FiberEntry, FiberLocus,
    FiberProfile, P1Q, RatFunc,
};
pub use ratq::{
    divisors, factorize, ratq, ratq_ceil, ratq_from_str, ratq_int, ratq_to_string,
    squarefree_part, RatQ,
};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum QarithError {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("rational function is constant")]
    ConstantFunction,
    #[error("polynomial is not monic in Y")]
    NotMonic,
    #[error("two of the four points coincide")]
    DegeneratePoints,
    #[error("division by zero")]
    DivisionByZero,
    #[error("elements of distinct quadratic fields: sqrt({0}) vs sqrt({1})")]
    FieldMismatch(String, String),
    #[error("parse error: {0}")]
    Parse(String),
}
