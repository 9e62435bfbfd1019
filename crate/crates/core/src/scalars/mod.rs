//! Exact scalars: rationals, cyclotomic numbers and rational functions in
//! the deformation parameters.

mod cyclotomic;
mod field;
mod param;
mod parse;
mod poly;
mod rational;

pub use cyclotomic::{cyclotomic_polynomial, totient, CycNumber};
pub use field::Field;
pub use param::ParamScalar;
pub use parse::parse_scalar;
pub use poly::{Monomial, Poly, Var};
pub use rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ScalarError {
    #[error("conductor must be positive")]
    ZeroConductor,
    #[error("cannot promote conductor {from} to {to}")]
    Conductor { from: u32, to: u32 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("denominator vanishes under the assignment")]
    Pole,
    #[error("parse error: {0}")]
    Parse(String),
}
