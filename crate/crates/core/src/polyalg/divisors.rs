//! Rational roots by the rational-root theorem: enumerate `±d/e` with
//! `d | a_0` and `e | a_n`. Only practical for small coefficients, so integer
//! factorization runs under a work budget and gives up with `None`.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};

use super::poly::UniPoly;
use crate::error::{Error, Result};
use crate::numerics::Rat;

const SMALL_PRIMES: [u32; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
const TRIAL_LIMIT: u32 = 10_000;

/// Deterministic for n < 3.3e24; a strong probable-prime test beyond.
pub fn is_probable_prime(n: &BigUint) -> bool {
    let two = BigUint::from(2u32);
    if n < &two {
        return false;
    }
    for p in SMALL_PRIMES {
        let p = BigUint::from(p);
        if n == &p {
            return true;
        }
        if (n % &p).is_zero() {
            return false;
        }
    }
    let n1 = n - 1u32;
    let s = n1.trailing_zeros().unwrap_or(0);
    let d = &n1 >> s;
    'witness: for a in SMALL_PRIMES {
        let mut x = BigUint::from(a).modpow(&d, n);
        if x.is_one() || x == n1 {
            continue;
        }
        for _ in 1..s {
            x = x.modpow(&two, n);
            if x == n1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Brent's variant of Pollard rho. Returns a nontrivial factor of the odd
/// composite `n`, or `None` once `budget` iterations are spent.
fn pollard_brent(n: &BigUint, budget: &mut u64) -> Option<BigUint> {
    for c in 1u32.. {
        let c = BigUint::from(c);
        let f = |x: &BigUint| (x * x + &c) % n;
        let (mut x, mut y, mut g) = (BigUint::from(2u32), BigUint::from(2u32), BigUint::one());
        let mut r = 1u64;
        let mut ys = y.clone();
        let mut acc = BigUint::one();
        while g.is_one() {
            x = y.clone();
            for _ in 0..r {
                y = f(&y);
            }
            let mut k = 0;
            while k < r && g.is_one() {
                ys = y.clone();
                let steps = 128.min(r - k);
                for _ in 0..steps {
                    y = f(&y);
                    let diff = if x > y { &x - &y } else { &y - &x };
                    acc = acc * diff % n;
                }
                g = acc.gcd(n);
                k += steps;
                *budget = budget.checked_sub(steps)?;
            }
            r *= 2;
        }
        if &g == n {
            // backtrack one step at a time
            loop {
                ys = f(&ys);
                let diff = if x > ys { &x - &ys } else { &ys - &x };
                g = diff.gcd(n);
                *budget = budget.checked_sub(1)?;
                if !g.is_one() {
                    break;
                }
            }
        }
        if &g != n {
            return Some(g);
        }
    }
    None
}

/// Prime factorization, or `None` when the budget runs out.
pub fn factor_integer(n: &BigUint, budget: u64) -> Option<BTreeMap<BigUint, u32>> {
    let mut out = BTreeMap::new();
    let mut n = n.clone();
    if n.is_zero() {
        return None;
    }
    let mut p = 2u32;
    while p <= TRIAL_LIMIT && !n.is_one() {
        let bp = BigUint::from(p);
        while (&n % &bp).is_zero() {
            n /= &bp;
            *out.entry(bp.clone()).or_insert(0) += 1;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    let mut budget = budget;
    let mut pending = vec![n];
    while let Some(m) = pending.pop() {
        if m.is_one() {
            continue;
        }
        if is_probable_prime(&m) {
            *out.entry(m).or_insert(0) += 1;
            continue;
        }
        let d = pollard_brent(&m, &mut budget)?;
        pending.push(&m / &d);
        pending.push(d);
    }
    Some(out)
}

fn divisors(factors: &BTreeMap<BigUint, u32>) -> Vec<BigUint> {
    let mut out = vec![BigUint::one()];
    for (p, &e) in factors {
        let mut next = Vec::with_capacity(out.len() * (e as usize + 1));
        for d in &out {
            let mut pk = d.clone();
            next.push(pk.clone());
            for _ in 0..e {
                pk *= p;
                next.push(pk.clone());
            }
        }
        out = next;
    }
    out.sort();
    out
}

/// Rational roots with multiplicity by exhaustive candidate testing.
///
/// Returns `Ok(None)` when factoring the end coefficients exceeds `budget`
/// Pollard iterations, or when the candidate count passes `max_candidates`.
pub fn rational_roots_by_divisors(
    p: &UniPoly,
    budget: u64,
    max_candidates: usize,
) -> Result<Option<Vec<(Rat, usize)>>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut f = p.clone();
    let mut found = Vec::new();
    let mut zero_mult = 0;
    while f.coeff(0).is_zero() && !f.is_constant() {
        f = f.exact_div(&UniPoly::x())?;
        zero_mult += 1;
    }
    if zero_mult > 0 {
        found.push((Rat::zero(), zero_mult));
    }
    if !f.is_constant() {
        let ints = f.primitive_integer_coeffs();
        let a0 = ints[0].magnitude();
        let an = ints.last().expect("nonconstant").magnitude();
        let (Some(fa), Some(fn_)) = (factor_integer(a0, budget), factor_integer(an, budget)) else {
            return Ok(None);
        };
        let (num_divs, den_divs) = (divisors(&fa), divisors(&fn_));
        if num_divs.len().saturating_mul(den_divs.len()) > max_candidates {
            return Ok(None);
        }
        let mut cands: Vec<Rat> = Vec::new();
        for d in &num_divs {
            for e in &den_divs {
                if d.gcd(e).is_one() {
                    let r = Rat::new(BigInt::from(d.clone()), BigInt::from(e.clone()))?;
                    cands.push(-&r);
                    cands.push(r);
                }
            }
        }
        for r in cands {
            let lin = UniPoly::linear_root(&r);
            let mut m = 0;
            while !f.is_constant() && f.eval(&r).is_zero() {
                f = f.exact_div(&lin)?;
                m += 1;
            }
            if m > 0 {
                found.push((r, m));
            }
        }
    }
    found.sort();
    Ok(Some(found))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::q;
    use crate::polyalg::roots::rational_roots;
    use num_traits::ToPrimitive;
    use proptest::prelude::*;

    fn factor_u64(n: u64) -> Option<Vec<(u64, u32)>> {
        let map = factor_integer(&BigUint::from(n), 1_000_000)?;
        Some(map.into_iter().map(|(p, e)| (p.to_u64().expect("fits"), e)).collect())
    }

    #[test]
    fn primality() {
        let primes = [2u64, 3, 97, 7919, 1_000_000_007, 2_305_843_009_213_693_951];
        for p in primes {
            assert!(is_probable_prime(&BigUint::from(p)), "{p}");
        }
        for c in [1u64, 4, 561, 1_000_000_007 * 3, 3_215_031_751] {
            assert!(!is_probable_prime(&BigUint::from(c)), "{c}");
        }
    }

    #[test]
    fn factors_semiprime_beyond_trial_division() {
        let f = factor_u64(1_000_003 * 1_000_033).unwrap();
        assert_eq!(f, vec![(1_000_003, 1), (1_000_033, 1)]);
        assert_eq!(factor_u64(360).unwrap(), vec![(2, 3), (3, 2), (5, 1)]);
    }

    #[test]
    fn budget_exhaustion_gives_up() {
        let n = BigUint::from(1_000_003u64 * 1_000_033);
        assert!(factor_integer(&n, 0).is_none());
    }

    #[test]
    fn resolvent_sextic_roots_by_divisors() {
        let d = q(-400, 9261);
        let sextic = &UniPoly::from_ints(&[3, 0, 1]).pow(3).scale(&d)
            + &UniPoly::from_ints(&[-1, 0, 1]).pow(2).scale(&Rat::from(4));
        let got = rational_roots_by_divisors(&sextic, 100_000, 1_000_000).unwrap().unwrap();
        assert_eq!(got, rational_roots(&sextic).unwrap());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(100))]

        #[test]
        fn agrees_with_isolation_route(
            roots in proptest::collection::vec((-12i64..12, 1i64..6), 0..4),
            tail in proptest::collection::vec(-6i64..6, 1..4),
        ) {
            let mut f = UniPoly::from_ints(&tail);
            prop_assume!(!f.is_zero());
            for (n, d) in &roots {
                f = &f * &UniPoly::linear_root(&q(*n, *d));
            }
            let by_div = rational_roots_by_divisors(&f, 100_000, 1_000_000).unwrap().unwrap();
            prop_assert_eq!(by_div, rational_roots(&f).unwrap());
        }
    }
}
