//! Rationality of the roots of a cubic through the resolvent sextic
//! `D (w^2 + 3)^3 + 4 (w - 1)^2 (w + 1)^2`.
//!
//! A cubic with `B0, B1 != 0` (after depression) has three rational roots
//! exactly when the sextic for its `D` has a rational root `w`; each such
//! `w` fixes an ordering of the roots.

use num_bigint::BigUint;

use crate::coeffs::Cubic;
use crate::error::{Error, Result};
use crate::numerics::{q, Rat};
use crate::polyalg::{
    isolate_real_roots, rational_roots, rational_roots_bounded, Scalar, UniPoly, DEFAULT_ROOT_HEIGHT_BOUND,
};

/// `x^3 + b1 x + b0`, the cubic after the shift `x -> x - a2 / (3 a3)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DepressedCubic {
    pub b1: Rat,
    pub b0: Rat,
}

impl DepressedCubic {
    pub fn is_degenerate(&self) -> bool {
        self.b1.is_zero() || self.b0.is_zero()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DParam {
    pub d: Rat,
}

/// Roots of `y^3 + y^2 + D` in the order fixed by a witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedTriple {
    pub y1: Rat,
    pub y2: Rat,
    pub y3: Rat,
}

impl ReducedTriple {
    pub fn is_valid(&self) -> bool {
        let sum = &self.y1 + &self.y2 + &self.y3;
        let e2 = &self.y1 * &self.y2 + &self.y1 * &self.y3 + &self.y2 * &self.y3;
        sum == Rat::from(-1) && e2.is_zero()
    }

    pub fn product(&self) -> Rat {
        &self.y1 * &self.y2 * &self.y3
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalityWitness {
    pub w: Rat,
    pub t: Rat,
    pub z: Rat,
}

impl RationalityWitness {
    pub fn from_w(w: &Rat) -> Self {
        let t = w - Rat::one();
        let den = (&t + Rat::one()).square() + Rat::from(3);
        let z = (t.square() - Rat::from(4)).checked_div(&den).expect("positive");
        RationalityWitness { w: w.clone(), t, z }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VerdictPath {
    /// Rational roots of the resolvent sextic, lifted back.
    Sextic,
    /// `B0 = 0` or `B1 = 0`: the cubic is factored directly.
    Direct,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalityVerdict {
    pub path: VerdictPath,
    /// False only when the sextic has real roots whose rationality the
    /// height bound could not settle.
    pub decided: bool,
    pub has_three_rational_roots: bool,
    /// Rational roots of the cubic with multiplicity, ascending.
    pub roots: Vec<(Rat, usize)>,
    /// Rational roots `w` of the sextic with multiplicity, ascending.
    pub witnesses: Vec<(Rat, usize)>,
    pub d: Option<Rat>,
}

impl RationalityVerdict {
    pub fn roots_expanded(&self) -> Vec<Rat> {
        self.roots.iter().flat_map(|(r, m)| std::iter::repeat_n(r.clone(), *m)).collect()
    }

    pub fn witness_values(&self) -> Vec<Rat> {
        self.witnesses.iter().map(|(w, _)| w.clone()).collect()
    }
}

pub fn depress(c: &Cubic) -> Result<DepressedCubic> {
    if c.a3.is_zero() {
        return Err(Error::LeadingZero);
    }
    let a2_3a3 = c.a2.checked_div(&(Rat::from(3) * &c.a3))?;
    let b1 = c.a1.checked_div(&c.a3)? - &c.a2 * &a2_3a3.checked_div(&c.a3)?;
    let b0 = c.a0.checked_div(&c.a3)? - &c.a1 * &a2_3a3.checked_div(&c.a3)? + Rat::from(2) * a2_3a3.pow(3);
    Ok(DepressedCubic { b1, b0 })
}

/// `D` from the coefficients directly, without depressing first.
pub fn d_from_coefficients(c: &Cubic) -> Result<Rat> {
    let (a3, a2, a1, a0) = (&c.a3, &c.a2, &c.a1, &c.a0);
    let num = Rat::from(9) * a1 * a2 * a3 - Rat::from(27) * a0 * a3.square() - Rat::from(2) * a2.pow(3);
    let den = Rat::from(27) * (a2.square() - Rat::from(3) * a1 * a3).pow(3);
    (-num.square()).checked_div(&den)
}

/// `D = B0^2 / B1^3`, cross-checked against the coefficient formula.
pub fn d_param(c: &Cubic) -> Result<DParam> {
    let dc = depress(c)?;
    if dc.is_degenerate() {
        return Err(Error::DegenerateDepression);
    }
    let d = dc.b0.square().checked_div(&dc.b1.pow(3))?;
    let direct = d_from_coefficients(c)?;
    assert_eq!(d, direct, "the two formulas for D disagree");
    Ok(DParam { d })
}

/// `D (w^2 + 3)^3 + 4 (w - 1)^2 (w + 1)^2`.
pub fn sextic_poly(d: &Rat) -> UniPoly {
    let cube = UniPoly::from_ints(&[3, 0, 1]).pow(3).scale(d);
    let square = UniPoly::from_ints(&[-1, 0, 1]).pow(2).scale(&Rat::from(4));
    &cube + &square
}

/// The `D` for which `w` is a root of the sextic.
pub fn d_from_w(w: &Rat) -> Rat {
    let num = Rat::from(-4) * (w.square() - Rat::one()).square();
    num.checked_div(&(w.square() + Rat::from(3)).pow(3)).expect("w^2 + 3 > 0")
}

pub fn roots_from_w(w: &Rat) -> ReducedTriple {
    let den = w.square() + Rat::from(3);
    let div = |n: Rat| n.checked_div(&den).expect("w^2 + 3 > 0");
    ReducedTriple {
        y1: div(Rat::from(-2) * (w + Rat::one())),
        y2: div(Rat::from(2) * (w - Rat::one())),
        y3: div(Rat::one() - w.square()),
    }
}

/// The `w` whose ordered triple is `t`.
///
/// Solves `y2 ((t+1)^2 + 3) = 2t` for `t` and keeps the solution whose
/// `y1` matches.
pub fn w_from_ordered_roots(t: &ReducedTriple) -> Result<Rat> {
    if !t.is_valid() {
        return Err(Error::NotReducedTriple);
    }
    let y2 = &t.y2;
    if y2.is_zero() {
        return Ok(Rat::one());
    }
    let z2 = Rat::from(-3) * y2.square() - Rat::from(2) * y2 + Rat::one();
    let z = match z2.sqrt_exact() {
        Ok(Some(z)) => z,
        Ok(None) | Err(Error::NegativeInput) => return Err(Error::NoRationalWitness),
        Err(e) => return Err(e),
    };
    let base = Rat::one() - y2;
    for sign in [1, -1] {
        let tt = (&base + Rat::from(sign) * &z).checked_div(y2)?;
        let w = tt + Rat::one();
        if &roots_from_w(&w) == t {
            return Ok(w);
        }
    }
    Err(Error::NoRationalWitness)
}

/// Ordered roots `(x1, x2, x3)` of `c` from a witness `w`, in any scalar
/// domain. Uses the closed forms with denominators `(1 + w)`, `(1 - w)`.
pub fn lift_roots<T: Scalar>(c: &Cubic, w: &T) -> Result<[T; 3]> {
    let dc = depress(c)?;
    if dc.is_degenerate() {
        return Err(Error::DegenerateDepression);
    }
    let (a3, a2, a1, a0) = (&c.a3, &c.a2, &c.a1, &c.a0);
    let k = |n: i64| Rat::from(n);
    let a123 = a1 * a2 * a3;
    let a0_33 = a0 * a3.square();
    let a2_3 = a2.pow(3);
    let s2 = k(2) * &a2_3 - k(9) * &a123 + k(27) * &a0_33;
    let s1 = k(18) * &a123 - k(6) * &a2_3;
    let s0 = k(81) * &a0_33 - k(9) * &a123;
    let base = a3 * (a2.square() - k(3) * a1 * a3);

    let one = w.embed(&Rat::one());
    let one_plus = one.plus(w);
    let one_minus = one.minus(w);
    if one_plus.is_zero() || one_minus.is_zero() {
        return Err(Error::WDegenerate);
    }
    let inv_plus = one_plus.inverse()?;
    let inv_minus = one_minus.inverse()?;
    let w2 = w.square();
    let over = |num: T, inv: &T, scale: Rat| -> Result<T> { Ok(num.times(inv).scaled(&scale.checked_div(&base)?)) };

    let x1 = over(w2.scaled(&s2).plus(&w.scaled(&s1)).plus_rat(&s0), &inv_plus, q(1, 18))?;
    let x2 = over(w2.scaled(&s2).minus(&w.scaled(&s1)).plus_rat(&s0), &inv_minus, q(1, 18))?;
    let t2 = &a2_3 - k(27) * &a0_33;
    let t0 = k(36) * &a123 - k(81) * &a0_33 - k(9) * &a2_3;
    let x3 = over(w2.scaled(&t2).plus_rat(&t0), &inv_plus.times(&inv_minus), q(1, 9))?;
    Ok([x1, x2, x3])
}

/// The same roots through `x = B0 / (B1 y) - A2 / (3 A3)`.
pub fn lift_roots_via_depression(c: &Cubic, w: &Rat) -> Result<[Rat; 3]> {
    let dc = depress(c)?;
    if dc.is_degenerate() {
        return Err(Error::DegenerateDepression);
    }
    let y = roots_from_w(w);
    let shift = c.a2.checked_div(&(Rat::from(3) * &c.a3))?;
    let one = |yi: &Rat| -> Result<Rat> {
        if yi.is_zero() {
            return Err(Error::WDegenerate);
        }
        Ok(dc.b0.checked_div(&(&dc.b1 * yi))? - &shift)
    };
    Ok([one(&y.y1)?, one(&y.y2)?, one(&y.y3)?])
}

/// All three roots by rational-root extraction on the cubic itself, when
/// they are rational. Ascending.
pub fn degenerate_triple(c: &Cubic) -> Result<Option<[Rat; 3]>> {
    if c.a3.is_zero() {
        return Err(Error::LeadingZero);
    }
    let roots = crate::polyalg::rational_roots_expanded(&c.to_poly())?;
    Ok(<[Rat; 3]>::try_from(roots).ok())
}

pub fn analyze_cubic(c: &Cubic) -> Result<RationalityVerdict> {
    analyze_cubic_bounded(c, &BigUint::from(DEFAULT_ROOT_HEIGHT_BOUND))
}

/// `analyze_cubic` with witnesses of height above `bound` left undecided.
pub fn analyze_cubic_bounded(c: &Cubic, bound: &BigUint) -> Result<RationalityVerdict> {
    let dc = depress(c)?;
    if dc.is_degenerate() {
        let roots = rational_roots(&c.to_poly())?;
        let total: usize = roots.iter().map(|(_, m)| m).sum();
        return Ok(RationalityVerdict {
            path: VerdictPath::Direct,
            decided: true,
            has_three_rational_roots: total == 3,
            roots,
            witnesses: Vec::new(),
            d: None,
        });
    }
    let d = d_param(c)?.d;
    let sextic = sextic_poly(&d);
    let search = rational_roots_bounded(&sextic, bound)?;
    let witnesses = search.roots;
    let mut verdict = RationalityVerdict {
        path: VerdictPath::Sextic,
        decided: true,
        has_three_rational_roots: false,
        roots: Vec::new(),
        witnesses,
        d: Some(d),
    };
    if let Some((w, _)) = verdict.witnesses.first() {
        let xs = lift_roots(c, w)?;
        for x in &xs {
            assert!(c.eval(x).is_zero(), "lifted value {x} is not a root");
        }
        let mut sorted = xs.to_vec();
        sorted.sort();
        let mut roots: Vec<(Rat, usize)> = Vec::new();
        for x in sorted {
            match roots.last_mut() {
                Some((r, m)) if *r == x => *m += 1,
                _ => roots.push((x, 1)),
            }
        }
        verdict.roots = roots;
        verdict.has_three_rational_roots = true;
    } else {
        verdict.decided = search.complete || search.undecided.is_empty();
        // The cubic may still have one rational root.
        verdict.roots = rational_roots(&c.to_poly())?;
    }
    Ok(verdict)
}

/// True when the sextic for `d` has no real root at all.
pub fn sextic_has_no_real_roots(d: &Rat) -> Result<bool> {
    Ok(isolate_real_roots(&sextic_poly(d))?.is_empty())
}
