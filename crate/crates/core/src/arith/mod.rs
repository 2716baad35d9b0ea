//! Exact arithmetic: rationals, the real cyclotomic fields Q(2cos(π/m)),
//! Laurent polynomials in `v`, and the τ polynomial family.

mod intpoly;
mod laurent;
mod numfield;
mod rational;

use std::fmt::Debug;

pub use intpoly::{minimal_polynomial, tau_poly, tau_tilde, IntPoly};
pub use laurent::LaurentPoly;
pub use numfield::{sigma, two_cos, FieldCtx, NumberFieldElem};
pub use rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ArithError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("Laurent polynomial is not a unit (only c·v^k with c invertible is)")]
    NonUnitLaurent,
    #[error("elements from different fields: Q(2cos(pi/{0})) and Q(2cos(pi/{1}))")]
    FieldMismatch(u32, u32),
    #[error("cannot parse {0:?}")]
    Parse(String),
    #[error("invalid parameter: {0}")]
    Invalid(String),
}

/// A commutative ring with exact arithmetic.
pub trait Ring: Clone + PartialEq + Debug + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn from_rational(q: &Rational) -> Self;

    fn from_int(n: i64) -> Self {
        Self::from_rational(&Rational::from_int(n))
    }

    fn add_assign(&mut self, o: &Self) {
        *self = self.add(o);
    }

    fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }
}

/// A field: every nonzero element has an inverse.
pub trait Field: Ring {
    fn inv(&self) -> Result<Self, ArithError>;

    fn div(&self, o: &Self) -> Result<Self, ArithError> {
        Ok(self.mul(&o.inv()?))
    }
}
