//! Common surface of the two coefficient domains, `Rat` and `RingElem`, so
//! the parametrization and completion code is written once.

use std::fmt::{Debug, Display};

use super::poly::UniPoly;
use super::ring::{Inversion, RingElem};
use crate::error::{Error, Result};
use crate::numerics::Rat;

pub trait Scalar: Clone + Debug + Display + PartialEq {
    /// A rational constant in the same domain as `self`.
    fn embed(&self, r: &Rat) -> Self;
    fn plus(&self, other: &Self) -> Self;
    fn minus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn negated(&self) -> Self;
    fn is_zero(&self) -> bool;
    /// Multiplicative inverse. A zero divisor in a ring yields `Error::Split`.
    fn inverse(&self) -> Result<Self>;
    /// The value as a rational, when it is one.
    fn as_rat(&self) -> Option<Rat>;
    /// Sign of the value; `None` where order is meaningless (ring elements).
    fn sign(&self) -> Option<i8>;

    fn square(&self) -> Self {
        self.times(self)
    }

    fn scaled(&self, r: &Rat) -> Self {
        self.times(&self.embed(r))
    }

    fn plus_rat(&self, r: &Rat) -> Self {
        self.plus(&self.embed(r))
    }
}

impl Scalar for Rat {
    fn embed(&self, r: &Rat) -> Self {
        r.clone()
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negated(&self) -> Self {
        -self
    }
    fn is_zero(&self) -> bool {
        Rat::is_zero(self)
    }
    fn inverse(&self) -> Result<Self> {
        self.recip()
    }
    fn as_rat(&self) -> Option<Rat> {
        Some(self.clone())
    }
    fn sign(&self) -> Option<i8> {
        Some(self.signum())
    }
}

impl Scalar for RingElem {
    fn embed(&self, r: &Rat) -> Self {
        self.constant(r.clone())
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negated(&self) -> Self {
        -self
    }
    fn is_zero(&self) -> bool {
        RingElem::is_zero(self)
    }
    fn inverse(&self) -> Result<Self> {
        match RingElem::inverse(self)? {
            Inversion::Inverse(inv) => Ok(inv),
            Inversion::Split(ev) => Err(Error::Split(ev)),
        }
    }
    fn as_rat(&self) -> Option<Rat> {
        self.as_rational()
    }
    fn sign(&self) -> Option<i8> {
        None
    }
}

/// Horner evaluation of a rational polynomial at a point of any domain.
pub fn eval_poly<T: Scalar>(p: &UniPoly, x: &T) -> T {
    let mut acc = x.embed(&Rat::zero());
    for c in p.coeffs().iter().rev() {
        acc = acc.times(x).plus_rat(c);
    }
    acc
}
