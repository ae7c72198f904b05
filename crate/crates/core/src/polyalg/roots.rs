//! Real-root isolation by Sturm sequences and exact rational-root recovery.

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;

use super::poly::{square_free_decomposition, square_free_part, UniPoly};
use crate::error::{Error, Result};
use crate::numerics::{best_rational_in_interval, Rat};

/// Default height bound for rational-root reconstruction.
pub const DEFAULT_ROOT_HEIGHT_BOUND: u64 = 1_000_000;

/// Interval holding exactly one distinct real root of some polynomial.
///
/// When `lo == hi` the root is that rational. Otherwise neither endpoint is a
/// root and the root lies strictly between them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsolatingInterval {
    pub lo: Rat,
    pub hi: Rat,
    pub multiplicity: usize,
}

impl IsolatingInterval {
    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    pub fn width(&self) -> Rat {
        &self.hi - &self.lo
    }
}

/// Outcome of a height-bounded rational-root search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalRootSearch {
    /// Rational roots with multiplicity, ascending.
    pub roots: Vec<(Rat, usize)>,
    /// Real roots that did not reconstruct to a rational of height within the
    /// bound. Empty whenever `complete` holds.
    pub undecided: Vec<IsolatingInterval>,
    /// True when the bound covers every possible rational root (rational-root
    /// theorem), so `roots` is the full rational root set.
    pub complete: bool,
}

/// Canonical Sturm sequence `p, p', -rem(p, p'), ...`.
pub fn sturm_sequence(p: &UniPoly) -> Result<Vec<UniPoly>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut seq = vec![p.clone(), p.derivative()];
    loop {
        let n = seq.len();
        if seq[n - 1].is_zero() {
            seq.pop();
            break;
        }
        let r = seq[n - 2].rem(&seq[n - 1])?;
        if r.is_zero() {
            break;
        }
        seq.push(-&r);
    }
    Ok(seq)
}

/// Sign changes of the sequence at `x`, zeros skipped.
pub fn sign_variations(seq: &[UniPoly], x: &Rat) -> usize {
    let mut count = 0;
    let mut last = 0i8;
    for s in seq.iter().map(|f| f.sign_at(x)).filter(|&s| s != 0) {
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

/// Bound strictly exceeding every root's magnitude: `1 + max |a_i / a_n|`.
pub fn cauchy_bound(p: &UniPoly) -> Result<Rat> {
    let lead = p.leading().ok_or(Error::ZeroPolynomial)?;
    let mut m = Rat::zero();
    for c in &p.coeffs()[..p.coeffs().len() - 1] {
        let r = c.checked_div(lead)?.abs();
        if r > m {
            m = r;
        }
    }
    Ok(m + Rat::one())
}

fn midpoint(a: &Rat, b: &Rat) -> Rat {
    (a + b) * crate::numerics::q(1, 2)
}

/// Isolates the real roots of a square-free polynomial, ascending.
///
/// Uses `V(a) - V(b)` = number of roots in `(a, b]`, which holds for a Sturm
/// sequence of a square-free polynomial at every `a < b`.
fn isolate_square_free(s: &UniPoly) -> Result<Vec<(Rat, Rat)>> {
    if s.is_constant() {
        return Ok(Vec::new());
    }
    let seq = sturm_sequence(s)?;
    let bound = cauchy_bound(s)?;
    let var = |x: &Rat| sign_variations(&seq, x);
    let mut out = Vec::new();
    let lo0 = -&bound;
    let mut stack = vec![(var(&lo0), lo0, var(&bound), bound)];
    while let Some((va, a, vb, b)) = stack.pop() {
        let n = va - vb;
        if n == 0 {
            continue;
        }
        if n == 1 {
            out.push(settle(s, &seq, a, va, b)?);
            continue;
        }
        let m = midpoint(&a, &b);
        let vm = var(&m);
        stack.push((va, a, vm, m.clone()));
        stack.push((vm, m, vb, b));
    }
    out.sort_by(|x, y| x.0.cmp(&y.0));
    Ok(out)
}

/// Given exactly one root in `(a, b]`, returns an exact point or an open
/// interval whose endpoints are not roots.
fn settle(s: &UniPoly, seq: &[UniPoly], mut a: Rat, mut va: usize, mut b: Rat) -> Result<(Rat, Rat)> {
    if s.sign_at(&b) == 0 {
        return Ok((b.clone(), b));
    }
    while s.sign_at(&a) == 0 {
        let m = midpoint(&a, &b);
        if s.sign_at(&m) == 0 {
            return Ok((m.clone(), m));
        }
        let vm = sign_variations(seq, &m);
        if va - vm == 1 {
            b = m;
        } else {
            a = m;
            va = vm;
        }
    }
    Ok((a, b))
}

/// Pairwise-disjoint isolating intervals for the distinct real roots of `p`,
/// ascending, each tagged with the root's multiplicity.
pub fn isolate_real_roots(p: &UniPoly) -> Result<Vec<IsolatingInterval>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let s = square_free_part(p)?;
    let parts = square_free_decomposition(p)?;
    let mut out = Vec::new();
    for (lo, hi) in isolate_square_free(&s)? {
        let multiplicity = parts
            .iter()
            .find(|(f, _)| if lo == hi { f.sign_at(&lo) == 0 } else { f.sign_at(&lo) * f.sign_at(&hi) < 0 })
            .map(|(_, m)| *m)
            .expect("every root of the square-free part belongs to one factor");
        out.push(IsolatingInterval { lo, hi, multiplicity });
    }
    // Neighbours may share a bisection point; pull each upper end inward.
    for i in 1..out.len() {
        while out[i - 1].hi == out[i].lo {
            let m = midpoint(&out[i - 1].lo, &out[i - 1].hi);
            let sm = s.sign_at(&m);
            if sm == 0 {
                out[i - 1].lo = m.clone();
                out[i - 1].hi = m;
            } else if sm == s.sign_at(&out[i - 1].lo) {
                out[i - 1].lo = m;
            } else {
                out[i - 1].hi = m;
            }
        }
    }
    Ok(out)
}

/// Bisects an open isolating interval of the square-free `s` until it is
/// narrower than `width` or lands on the root exactly.
pub fn refine(s: &UniPoly, iv: &mut IsolatingInterval, width: &Rat) {
    if iv.is_exact() {
        return;
    }
    let mut sign_lo = s.sign_at(&iv.lo);
    while &iv.width() >= width {
        let m = midpoint(&iv.lo, &iv.hi);
        let sm = s.sign_at(&m);
        if sm == 0 {
            iv.lo = m.clone();
            iv.hi = m;
            return;
        }
        if sm == sign_lo {
            iv.lo = m;
            sign_lo = sm;
        } else {
            iv.hi = m;
        }
    }
}

/// Largest height a rational root of `p` can have: `max(|a_0'|, |a_n|)` for the
/// primitive integer multiple with the zero roots divided out.
pub fn rational_root_height_limit(p: &UniPoly) -> Result<BigUint> {
    let ints = p.primitive_integer_coeffs();
    let first = ints.iter().position(|c| !c.is_zero()).ok_or(Error::ZeroPolynomial)?;
    let lead = ints.last().expect("nonzero").magnitude().clone();
    Ok(ints[first].magnitude().clone().max(lead))
}

/// Rational roots of `p` whose height is at most `bound`, found by Sturm
/// isolation, refinement below width `1/H^2`, and best-rational
/// reconstruction accepted only on exact evaluation.
pub fn rational_roots_bounded(p: &UniPoly, bound: &BigUint) -> Result<RationalRootSearch> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let limit = rational_root_height_limit(p)?;
    let complete = &limit <= bound;
    let h_int = if complete { limit } else { bound.clone() };
    let h = Rat::from(BigInt::from(h_int.clone()));
    // Distinct rationals of height <= h are at least 1/h^2 apart.
    let width = (&h * &h).recip()?;
    let s = square_free_part(p)?;
    let mut roots = Vec::new();
    let mut undecided = Vec::new();
    for mut iv in isolate_real_roots(p)? {
        refine(&s, &mut iv, &width);
        let candidate = if iv.is_exact() {
            Some(iv.lo.clone())
        } else {
            let c = best_rational_in_interval(&iv.lo, &iv.hi)?;
            s.eval(&c).is_zero().then_some(c)
        };
        match candidate.filter(|r| r.height().value() <= &h_int) {
            Some(r) => roots.push((r, iv.multiplicity)),
            None if !complete => undecided.push(iv),
            None => {}
        }
    }
    Ok(RationalRootSearch { roots, undecided, complete })
}

/// The complete multiset of rational roots of `p`, ascending.
pub fn rational_roots(p: &UniPoly) -> Result<Vec<(Rat, usize)>> {
    let limit = rational_root_height_limit(p)?;
    Ok(rational_roots_bounded(p, &limit)?.roots)
}

/// `rational_roots` with the multiplicities expanded, ascending.
pub fn rational_roots_expanded(p: &UniPoly) -> Result<Vec<Rat>> {
    Ok(rational_roots(p)?.into_iter().flat_map(|(r, m)| std::iter::repeat_n(r, m)).collect())
}
