use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::coeffs::{eval_table, ParamPoint};
use crate::error::Result;
use crate::numerics::Rat;
use crate::parametrize::Instance;
use crate::polyalg::{poly_gcd, UniPoly};
use crate::tables::{Term, C1, C2, P1, P2, R};

/// Result of measuring the total degree of an instance's cleared sextic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeProbe {
    pub instance: Instance,
    /// Total degree in `(b, c, w)` of `N (w^2+3)^3 + 4 Den (w-1)^2 (w+1)^2`.
    pub total_degree: usize,
    /// Whether `N` and `Den` were coprime along the line, so the clearing
    /// leaves no common factor behind.
    pub coprime_on_line: bool,
    /// Start point and direction of the line, as `(b, c, w)`.
    pub origin: [Rat; 3],
    pub direction: [Rat; 3],
}

/// Samples beyond the largest degree that can occur.
const SAMPLES: usize = 64;

fn eval(t: &[Term], p: &ParamPoint) -> Rat {
    eval_table(t, p)
}

/// Numerator and denominator of D at `p`, with the numerator carrying the
/// sign: `D = N / Den`.
fn cleared_parts(which: Instance, p: &ParamPoint) -> (Rat, Rat) {
    let r2 = eval(R, p).pow(2);
    match which {
        Instance::First => {
            let n = Rat::from(-2) * eval(P1, p).pow(2);
            let den = Rat::from(27) * eval(C1, p).pow(3) * r2;
            (n, den)
        }
        Instance::Second => {
            let n = Rat::from(-2) * p.b.pow(2) * eval(P2, p).pow(2);
            let den = Rat::from(27) * eval(C2, p).pow(3) * r2;
            (n, den)
        }
    }
}

fn cleared_sextic(which: Instance, b: &Rat, c: &Rat, w: &Rat) -> (Rat, Rat, Rat) {
    let (n, den) = cleared_parts(which, &ParamPoint::new(b.clone(), c.clone()));
    let w2 = w * w;
    let a = (&w2 + Rat::from(3)).pow(3);
    let m = (&w2 - Rat::one()).pow(2);
    let f = &n * a + Rat::from(4) * &den * m;
    (f, n, den)
}

/// Degree of the polynomial through `values[0..]` sampled at `s = 0, 1, ...`,
/// read off the forward differences.
fn degree_by_differences(values: &[Rat]) -> Option<usize> {
    let mut row = values.to_vec();
    let mut last_nonzero = None;
    for k in 0..values.len() {
        if !row[0].is_zero() {
            last_nonzero = Some(k);
        }
        row = row.windows(2).map(|w| &w[1] - &w[0]).collect();
        if row.iter().all(Rat::is_zero) {
            break;
        }
    }
    last_nonzero
}

fn random_rat(rng: &mut ChaCha8Rng) -> Rat {
    loop {
        let n: i64 = rng.gen_range(-9..=9);
        let d: i64 = rng.gen_range(1..=7);
        if n != 0 {
            return Rat::new(n, d).expect("positive denominator");
        }
    }
}

/// Measures the total degree of the cleared sextic for `which` along a
/// random rational line drawn from `seed`.
pub fn degree_probe(which: Instance, seed: u64) -> Result<DegreeProbe> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let origin = [random_rat(&mut rng), random_rat(&mut rng), random_rat(&mut rng)];
    let direction = [random_rat(&mut rng), random_rat(&mut rng), random_rat(&mut rng)];
    let mut fs = Vec::with_capacity(SAMPLES);
    let mut ns = Vec::with_capacity(SAMPLES);
    let mut dens = Vec::with_capacity(SAMPLES);
    for k in 0..SAMPLES {
        let s = Rat::from(k as i64);
        let at = |i: usize| &origin[i] + &direction[i] * &s;
        let (f, n, den) = cleared_sextic(which, &at(0), &at(1), &at(2));
        fs.push((s.clone(), f));
        ns.push((s.clone(), n));
        dens.push((s, den));
    }
    let values: Vec<Rat> = fs.iter().map(|(_, f)| f.clone()).collect();
    let total_degree = degree_by_differences(&values).unwrap_or(0);
    let n_line = UniPoly::interpolate(&ns)?;
    let den_line = UniPoly::interpolate(&dens)?;
    let coprime_on_line = poly_gcd(&n_line, &den_line)?.is_constant();
    Ok(DegreeProbe { instance: which, total_degree, coprime_on_line, origin, direction })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cubic::sextic_poly;
    use crate::numerics::q;
    use crate::parametrize::d_explicit;

    #[test]
    fn differences_find_degree() {
        let p = UniPoly::from_ints(&[3, 0, -1, 0, 2]);
        let vals: Vec<Rat> = (0..20).map(|k| p.eval(&Rat::from(k))).collect();
        assert_eq!(degree_by_differences(&vals), Some(4));
        assert_eq!(degree_by_differences(&vec![Rat::zero(); 5]), None);
    }

    #[test]
    fn cleared_sextic_is_a_multiple_of_the_sextic() {
        let (b, c, w) = (q(2, 1), q(3, 1), q(5, 7));
        let p = ParamPoint::new(b.clone(), c.clone());
        for which in Instance::BOTH {
            let d = d_explicit(which, &p).unwrap();
            let (f, _, den) = cleared_sextic(which, &b, &c, &w);
            assert_eq!(f, den * sextic_poly(&d).eval(&w));
        }
    }

    #[test]
    fn measured_degrees() {
        let first = degree_probe(Instance::First, 1).unwrap();
        let second = degree_probe(Instance::Second, 1).unwrap();
        assert_eq!(first.total_degree, 42);
        assert_eq!(second.total_degree, 40);
        assert!(first.coprime_on_line && second.coprime_on_line);
    }
}
