//! Exact rational scalars and the small number-theoretic helpers built on them.
//!
//! [`Rat`] is the only scalar type in the crate. It always sits in lowest
//! terms with a positive denominator, and arithmetic never rounds.

use std::cmp::Ordering;
use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational number in canonical form.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Rat(BigRational);

/// Naive height `max(|p|, q)` of a reduced fraction `p/q`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Height(BigUint);

impl Height {
    pub fn value(&self) -> &BigUint {
        &self.0
    }

    pub fn into_inner(self) -> BigUint {
        self.0
    }
}

impl fmt::Display for Height {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Builds `num/den` in lowest terms.
pub fn rat_make(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<Rat> {
    Rat::new(num, den)
}

/// Non-negative square root when `r` is the square of a rational.
pub fn rat_sqrt_exact(r: &Rat) -> Result<Option<Rat>> {
    r.sqrt_exact()
}

pub fn rat_height(r: &Rat) -> Height {
    r.height()
}

/// The rational of least height strictly inside `(lo, hi)`.
///
/// Walks the continued-fraction expansion shared by both endpoints
/// (a Stern–Brocot descent). The result is unique: it has simultaneously the
/// smallest numerator magnitude and the smallest denominator in the interval.
pub fn best_rational_in_interval(lo: &Rat, hi: &Rat) -> Result<Rat> {
    if lo >= hi {
        return Err(Error::EmptyInterval);
    }
    if lo.is_negative() && hi.is_positive() {
        return Ok(Rat::zero());
    }
    if !hi.is_positive() {
        // (lo, hi) with hi <= 0 mirrors onto (-hi, -lo) with -hi >= 0.
        return Ok(-simplest_nonnegative(-hi, Some(-lo)));
    }
    Ok(simplest_nonnegative(lo.clone(), Some(hi.clone())))
}

/// Simplest rational in the open interval `(lo, hi)` where `lo >= 0` and a
/// missing `hi` stands for +infinity.
fn simplest_nonnegative(mut lo: Rat, mut hi: Option<Rat>) -> Rat {
    let mut terms: Vec<BigInt> = Vec::new();
    loop {
        let floor = lo.floor();
        let next = Rat::from(floor.clone() + 1);
        let fits = hi.as_ref().is_none_or(|h| &next < h);
        if fits {
            terms.push(floor + 1);
            break;
        }
        // Both endpoints share the integer part `floor`; descend one level.
        let base = Rat::from(floor.clone());
        let h = hi.expect("finite upper bound when the next integer does not fit");
        let new_lo = (&h - &base).recip().expect("hi > floor");
        let gap = &lo - &base;
        hi = if gap.is_zero() { None } else { Some(gap.recip().expect("nonzero gap")) };
        lo = new_lo;
        terms.push(floor);
    }
    let mut value = Rat::from(terms.pop().expect("at least one term"));
    while let Some(a) = terms.pop() {
        value = Rat::from(a) + value.recip().expect("continued-fraction tail is positive");
    }
    value
}

impl Rat {
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<Self> {
        let den = den.into();
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Rat(BigRational::new(num.into(), den)))
    }

    pub fn zero() -> Self {
        Rat(BigRational::zero())
    }

    pub fn one() -> Self {
        Rat(BigRational::one())
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Rat(BigRational::from_integer(n.into()))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    /// -1, 0 or 1.
    pub fn signum(&self) -> i8 {
        match self.0.numer().sign() {
            Sign::Minus => -1,
            Sign::NoSign => 0,
            Sign::Plus => 1,
        }
    }

    pub fn abs(&self) -> Self {
        Rat(self.0.abs())
    }

    pub fn floor(&self) -> BigInt {
        self.0.numer().div_floor(self.0.denom())
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rat(self.0.recip()))
    }

    pub fn checked_div(&self, rhs: &Rat) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rat(&self.0 / &rhs.0))
    }

    pub fn pow(&self, exp: u32) -> Self {
        Rat(num_traits::pow(self.0.clone(), exp as usize))
    }

    pub fn square(&self) -> Self {
        self * self
    }

    pub fn height(&self) -> Height {
        let num = self.0.numer().magnitude();
        let den = self.0.denom().magnitude();
        Height(num.max(den).clone())
    }

    pub fn sqrt_exact(&self) -> Result<Option<Rat>> {
        if self.is_negative() {
            return Err(Error::NegativeInput);
        }
        let num = self.0.numer();
        let den = self.0.denom();
        let (rn, rd) = (num.sqrt(), den.sqrt());
        if &(&rn * &rn) == num && &(&rd * &rd) == den {
            Ok(Some(Rat(BigRational::new_raw(rn, rd))))
        } else {
            Ok(None)
        }
    }

    /// Lossy conversion for display and diagnostics only.
    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    pub fn as_big_rational(&self) -> &BigRational {
        &self.0
    }
}

impl From<BigRational> for Rat {
    fn from(r: BigRational) -> Self {
        Rat(r)
    }
}

impl From<BigInt> for Rat {
    fn from(n: BigInt) -> Self {
        Rat::from_integer(n)
    }
}

impl From<i64> for Rat {
    fn from(n: i64) -> Self {
        Rat::from_integer(n)
    }
}

impl From<i32> for Rat {
    fn from(n: i32) -> Self {
        Rat::from_integer(n)
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rat {
    type Err = Error;

    /// Accepts `p` or `p/q`; only `p` may carry a sign.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(s.to_string());
        let parse_int = |t: &str, signed: bool| -> Result<BigInt> {
            let digits = if signed { t.strip_prefix(['-', '+']).unwrap_or(t) } else { t };
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            t.parse::<BigInt>().map_err(|_| bad())
        };
        match s.split_once('/') {
            None => Ok(Rat::from_integer(parse_int(s, true)?)),
            Some((p, q)) => {
                let num = parse_int(p, true)?;
                let den = parse_int(q, false)?;
                if den.is_zero() {
                    return Err(Error::ZeroDenominator);
                }
                Rat::new(num, den)
            }
        }
    }
}

macro_rules! forward_binop {
    ($imp:ident, $method:ident) => {
        impl $imp<&Rat> for &Rat {
            type Output = Rat;
            fn $method(self, rhs: &Rat) -> Rat {
                Rat($imp::$method(&self.0, &rhs.0))
            }
        }
        impl $imp<Rat> for Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                Rat($imp::$method(self.0, rhs.0))
            }
        }
        impl $imp<&Rat> for Rat {
            type Output = Rat;
            fn $method(self, rhs: &Rat) -> Rat {
                Rat($imp::$method(self.0, &rhs.0))
            }
        }
        impl $imp<Rat> for &Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                Rat($imp::$method(&self.0, rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl AddAssign<&Rat> for Rat {
    fn add_assign(&mut self, rhs: &Rat) {
        self.0 += &rhs.0;
    }
}

impl SubAssign<&Rat> for Rat {
    fn sub_assign(&mut self, rhs: &Rat) {
        self.0 -= &rhs.0;
    }
}

impl MulAssign<&Rat> for Rat {
    fn mul_assign(&mut self, rhs: &Rat) {
        self.0 *= &rhs.0;
    }
}

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-self.0)
    }
}

impl Neg for &Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-&self.0)
    }
}

impl Sum for Rat {
    fn sum<I: Iterator<Item = Rat>>(iter: I) -> Rat {
        iter.fold(Rat::zero(), |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a Rat> for Rat {
    fn sum<I: Iterator<Item = &'a Rat>>(iter: I) -> Rat {
        iter.fold(Rat::zero(), |acc, x| acc + x)
    }
}

impl Product for Rat {
    fn product<I: Iterator<Item = Rat>>(iter: I) -> Rat {
        iter.fold(Rat::one(), |acc, x| acc * x)
    }
}

/// Orders by height, then numerator, then denominator.
pub fn height_order(a: &Rat, b: &Rat) -> Ordering {
    a.height().cmp(&b.height()).then_with(|| a.numer().cmp(b.numer())).then_with(|| a.denom().cmp(b.denom()))
}

/// Shorthand for tests and tables: `q(3, 2)` is 3/2. Panics on a zero denominator.
pub fn q(num: i64, den: i64) -> Rat {
    Rat::new(num, den).expect("nonzero denominator")
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn make_reduces_and_normalizes_sign() {
        assert_eq!(rat_make(2, 4).unwrap(), q(1, 2));
        let r = rat_make(-3, -6).unwrap();
        assert_eq!(r, q(1, 2));
        assert!(r.denom().is_positive());
        let z = rat_make(0, 5).unwrap();
        assert_eq!((z.numer().clone(), z.denom().clone()), (BigInt::zero(), BigInt::one()));
        assert!(matches!(rat_make(1, 0), Err(Error::ZeroDenominator)));
    }

    #[test]
    fn sqrt_exact_cases() {
        assert_eq!(rat_sqrt_exact(&q(9, 4)).unwrap(), Some(q(3, 2)));
        assert_eq!(rat_sqrt_exact(&q(7, 4)).unwrap(), None);
        assert_eq!(rat_sqrt_exact(&Rat::zero()).unwrap(), Some(Rat::zero()));
        assert!(matches!(rat_sqrt_exact(&q(-1, 4)), Err(Error::NegativeInput)));
    }

    #[test]
    fn sqrt_exact_matches_integer_oracle_on_small_inputs() {
        // a/b in lowest terms is a rational square iff a and b are integer squares.
        let is_square = |n: i64| (0..=n).any(|k| k * k == n);
        for a in 0..60i64 {
            for b in 1..60i64 {
                if num_integer::gcd(a, b) != 1 {
                    continue;
                }
                let r = q(a, b);
                let got = rat_sqrt_exact(&r).unwrap();
                assert_eq!(got.is_some(), is_square(a) && is_square(b), "{a}/{b}");
                if let Some(s) = got {
                    assert_eq!(s.square(), r);
                }
            }
        }
    }

    #[test]
    fn best_rational_examples() {
        assert_eq!(best_rational_in_interval(&q(149, 100), &q(151, 100)).unwrap(), q(3, 2));
        assert_eq!(best_rational_in_interval(&q(333, 1000), &q(334, 1000)).unwrap(), q(1, 3));
        assert_eq!(best_rational_in_interval(&q(1428, 10000), &q(1429, 10000)).unwrap(), q(1, 7));
        assert_eq!(best_rational_in_interval(&q(-1, 2), &q(1, 3)).unwrap(), Rat::zero());
        assert_eq!(best_rational_in_interval(&q(-151, 100), &q(-149, 100)).unwrap(), q(-3, 2));
        assert_eq!(best_rational_in_interval(&q(0, 1), &q(1, 1)).unwrap(), q(1, 2));
        assert_eq!(best_rational_in_interval(&q(2, 1), &q(13, 5)).unwrap(), q(5, 2));
        assert!(matches!(best_rational_in_interval(&q(1, 2), &q(1, 2)), Err(Error::EmptyInterval)));
    }

    /// All reduced fractions of height <= h, by brute force.
    fn brute_rationals(h: i64) -> Vec<Rat> {
        let mut out = vec![Rat::zero()];
        for den in 1..=h {
            for num in 1..=h {
                if num_integer::gcd(num, den) == 1 {
                    out.push(q(num, den));
                    out.push(q(-num, den));
                }
            }
        }
        out
    }

    #[test]
    fn best_rational_minimal_height_brute_force() {
        let pool = brute_rationals(20);
        let endpoints: Vec<Rat> = brute_rationals(9);
        for lo in &endpoints {
            for hi in &endpoints {
                if lo >= hi {
                    continue;
                }
                let best = best_rational_in_interval(lo, hi).unwrap();
                assert!(lo < &best && &best < hi);
                for r in pool.iter().filter(|r| lo < *r && *r < hi) {
                    assert!(r.height() >= best.height(), "{r} beats {best} in ({lo}, {hi})");
                    // only 0 can tie, with the units
                    if r.height() == best.height() && r != &best {
                        assert!(best.is_zero(), "tie in ({lo}, {hi})");
                    }
                }
            }
        }
    }

    #[test]
    fn height_examples() {
        assert_eq!(rat_height(&q(3, 2)).value(), &BigUint::from(3u32));
        assert_eq!(rat_height(&q(-5, 7)).value(), &BigUint::from(7u32));
        assert_eq!(rat_height(&Rat::zero()).value(), &BigUint::from(1u32));
    }

    #[test]
    fn text_round_trip_and_rejections() {
        assert_eq!("3/2".parse::<Rat>().unwrap(), q(3, 2));
        assert_eq!("-4/27".parse::<Rat>().unwrap(), q(-4, 27));
        assert_eq!("6/4".parse::<Rat>().unwrap(), q(3, 2));
        assert_eq!("7".parse::<Rat>().unwrap(), q(7, 1));
        assert!(matches!("1/0".parse::<Rat>(), Err(Error::ZeroDenominator)));
        for bad in ["", "1/", "/2", "1/-2", "a", "1.5", "--1", "1/2/3"] {
            assert!(bad.parse::<Rat>().is_err(), "{bad}");
        }
        assert_eq!(q(-4, 27).to_string(), "-4/27");
        assert_eq!(q(8, 4).to_string(), "2");
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert!(matches!(q(1, 2).checked_div(&Rat::zero()), Err(Error::DivisionByZero)));
        assert!(matches!(Rat::zero().recip(), Err(Error::DivisionByZero)));
    }

    fn small_int() -> impl Strategy<Value = i64> {
        -1_000_000i64..1_000_000
    }

    fn nonzero_int() -> impl Strategy<Value = i64> {
        small_int().prop_filter("nonzero", |v| *v != 0)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn addition_matches_cross_multiplication(a in small_int(), b in nonzero_int(), c in small_int(), d in nonzero_int()) {
            let lhs = rat_make(a, b).unwrap() + rat_make(c, d).unwrap();
            let rhs = rat_make(BigInt::from(a) * d + BigInt::from(c) * b, BigInt::from(b) * d).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn canonical_form(a in small_int(), b in nonzero_int()) {
            let r = rat_make(a, b).unwrap();
            prop_assert!(r.denom().is_positive());
            prop_assert!(r.numer().gcd(r.denom()).is_one());
            prop_assert_eq!(r.to_string().parse::<Rat>().unwrap(), r);
        }

        #[test]
        fn sqrt_of_square_is_abs(a in small_int(), b in nonzero_int()) {
            let r = rat_make(a, b).unwrap();
            prop_assert_eq!(rat_sqrt_exact(&r.square()).unwrap(), Some(r.abs()));
        }
    }
}
