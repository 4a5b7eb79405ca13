//! Exact arithmetic substrate: rings, polynomials, series, rational functions
//! and fraction-free linear algebra.

mod binom;
mod laurent;
mod linsolve;
mod matrix;
mod poly;
mod ratfunc;
mod ring;
mod series;
mod tagged;

pub use binom::{binom, binom_u};
pub use laurent::LaurentPoly;
pub use linsolve::{solve_linear_exact, LinearSolution};
pub use matrix::ExactMatrix;
pub use poly::{BiPoly, IntPoly, Poly, Pretty};
pub use ratfunc::RatFunc;
pub use ring::{Ring, Signum};
pub use series::TruncSeries;
pub use tagged::{poly_arith, ArithOp, TaggedBiPoly, Var};

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

/// Polynomial over ℤ[t] in an outer series variable, itself the coefficient of
/// a third variable: `Poly<BiPoly>`.
pub type TriPoly = Poly<BiPoly>;

/// Shorthand for `BigInt::from`.
pub fn int(v: i64) -> BigInt {
    BigInt::from(v)
}
