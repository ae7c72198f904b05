//! Arithmetic in `Q[w]/(m(w))` for a monic square-free modulus.
//!
//! The modulus need not be irreducible. When an inversion meets a zero
//! divisor, the gcd it uncovers splits the modulus and the caller continues
//! in each factor ring (dynamic evaluation).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use super::poly::{poly_gcd, UniPoly};
use crate::error::{Error, Result};
use crate::numerics::Rat;

/// Residue class of a polynomial modulo a shared modulus.
#[derive(Clone, PartialEq, Eq)]
pub struct RingElem {
    residue: UniPoly,
    modulus: Arc<UniPoly>,
}

/// A factorization `modulus = factors[0] * factors[1]` into monic,
/// non-constant, coprime pieces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitEvent {
    pub factors: [UniPoly; 2],
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Inversion {
    Inverse(RingElem),
    Split(SplitEvent),
}

/// Checks the modulus invariants once, so elements can share it freely.
pub fn validate_modulus(modulus: &UniPoly) -> Result<()> {
    match modulus.degree() {
        None | Some(0) => return Err(Error::BadModulus("modulus must have degree at least 1")),
        Some(_) => {}
    }
    if !modulus.is_monic() {
        return Err(Error::BadModulus("modulus must be monic"));
    }
    if !poly_gcd(modulus, &modulus.derivative())?.is_constant() {
        return Err(Error::BadModulus("modulus must be square-free"));
    }
    Ok(())
}

pub fn ring_make(residue: UniPoly, modulus: UniPoly) -> Result<RingElem> {
    validate_modulus(&modulus)?;
    RingElem::new(residue, Arc::new(modulus))
}

fn same_ring(a: &RingElem, b: &RingElem) -> Result<()> {
    if Arc::ptr_eq(&a.modulus, &b.modulus) || a.modulus == b.modulus {
        Ok(())
    } else {
        Err(Error::ModulusMismatch)
    }
}

pub fn ring_add(a: &RingElem, b: &RingElem) -> Result<RingElem> {
    same_ring(a, b)?;
    Ok(a + b)
}

pub fn ring_sub(a: &RingElem, b: &RingElem) -> Result<RingElem> {
    same_ring(a, b)?;
    Ok(a - b)
}

pub fn ring_mul(a: &RingElem, b: &RingElem) -> Result<RingElem> {
    same_ring(a, b)?;
    Ok(a * b)
}

pub fn ring_inv(a: &RingElem) -> Result<Inversion> {
    a.inverse()
}

impl RingElem {
    /// Reduces `residue` modulo an already validated modulus.
    pub fn new(residue: UniPoly, modulus: Arc<UniPoly>) -> Result<Self> {
        let residue = residue.rem(&modulus)?;
        Ok(RingElem { residue, modulus })
    }

    /// The class of `w` itself.
    pub fn generator(modulus: Arc<UniPoly>) -> Result<Self> {
        RingElem::new(UniPoly::x(), modulus)
    }

    pub fn constant(&self, c: Rat) -> Self {
        RingElem { residue: UniPoly::constant(c), modulus: Arc::clone(&self.modulus) }.reduced()
    }

    fn reduced(self) -> Self {
        // Constants only need reducing when the modulus is linear.
        if self.residue.degree() >= self.modulus.degree() {
            let residue = self.residue.rem(&self.modulus).expect("modulus is nonzero");
            RingElem { residue, modulus: self.modulus }
        } else {
            self
        }
    }

    pub fn residue(&self) -> &UniPoly {
        &self.residue
    }

    pub fn modulus(&self) -> &UniPoly {
        &self.modulus
    }

    pub fn shared_modulus(&self) -> &Arc<UniPoly> {
        &self.modulus
    }

    pub fn is_zero(&self) -> bool {
        self.residue.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.residue == UniPoly::one()
    }

    /// The element as a rational when its residue is constant.
    pub fn as_rational(&self) -> Option<Rat> {
        self.residue.is_constant().then(|| self.residue.coeff(0))
    }

    /// Extended Euclid on `(residue, modulus)`.
    pub fn inverse(&self) -> Result<Inversion> {
        if self.is_zero() {
            return Err(Error::ZeroElement);
        }
        // Invariant: r_i = s_i * residue (mod modulus).
        let (mut r0, mut r1) = ((*self.modulus).clone(), self.residue.clone());
        let (mut s0, mut s1) = (UniPoly::zero(), UniPoly::one());
        while !r1.is_zero() {
            let (quot, rem) = r0.div_rem(&r1)?;
            let s2 = &s0 - &(&quot * &s1);
            r0 = std::mem::replace(&mut r1, rem);
            s0 = std::mem::replace(&mut s1, s2);
        }
        // r0 is the gcd up to a constant.
        if r0.is_constant() {
            let inv = s0.scale(&r0.coeff(0).recip()?);
            return Ok(Inversion::Inverse(RingElem::new(inv, Arc::clone(&self.modulus))?));
        }
        let g = r0.monic()?;
        let cofactor = self.modulus.exact_div(&g)?.monic()?;
        Ok(Inversion::Split(SplitEvent { factors: [g, cofactor] }))
    }

    /// Image of this element in the ring modulo a factor of its modulus.
    pub fn project(&self, factor: &Arc<UniPoly>) -> Result<Self> {
        RingElem::new(self.residue.clone(), Arc::clone(factor))
    }

    pub fn pow(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = self.constant(Rat::one());
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }
}

impl fmt::Display for RingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{} mod {}]", self.residue, self.modulus)
    }
}

impl fmt::Debug for RingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

// Operator forms assume both operands share a modulus; mixing rings is a
// programming error. Use `ring_add` and friends for a checked version.
fn assert_same(a: &RingElem, b: &RingElem) {
    assert!(same_ring(a, b).is_ok(), "ring elements with different moduli");
}

impl Add for &RingElem {
    type Output = RingElem;
    fn add(self, rhs: &RingElem) -> RingElem {
        assert_same(self, rhs);
        RingElem { residue: &self.residue + &rhs.residue, modulus: Arc::clone(&self.modulus) }
    }
}

impl Sub for &RingElem {
    type Output = RingElem;
    fn sub(self, rhs: &RingElem) -> RingElem {
        assert_same(self, rhs);
        RingElem { residue: &self.residue - &rhs.residue, modulus: Arc::clone(&self.modulus) }
    }
}

impl Mul for &RingElem {
    type Output = RingElem;
    fn mul(self, rhs: &RingElem) -> RingElem {
        assert_same(self, rhs);
        let product = &self.residue * &rhs.residue;
        let residue = product.rem(&self.modulus).expect("modulus is nonzero");
        RingElem { residue, modulus: Arc::clone(&self.modulus) }
    }
}

impl Neg for &RingElem {
    type Output = RingElem;
    fn neg(self) -> RingElem {
        RingElem { residue: -&self.residue, modulus: Arc::clone(&self.modulus) }
    }
}
