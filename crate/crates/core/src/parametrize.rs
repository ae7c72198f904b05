//! The two parametrizations: a witness `w` of the sextic for `D1` gives the
//! edges `x`, a witness for `D2` gives the face diagonals `d`, and a linear
//! system recovers the other triple. Everything runs over `Rat` or, for
//! algebraic `w`, over `Q[w]/(m)`.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::coeffs::{cubic_d, cubic_x, eval_coeffs, eval_table, singular_factors, CoeffSet, Cubic, ParamPoint};
use crate::cubic::{d_param, lift_roots, sextic_poly};
use crate::error::{Error, Result};
use crate::numerics::Rat;
use crate::polyalg::{eval_poly, linsolve3, square_free_part, RingElem, Scalar, UniPoly};
use crate::tables;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Instance {
    /// Sextic for `D1`, built from the edge cubic.
    First,
    /// Sextic for `D2`, built from the face-diagonal cubic.
    Second,
}

impl Instance {
    pub const BOTH: [Instance; 2] = [Instance::First, Instance::Second];

    pub fn name(self) -> &'static str {
        match self {
            Instance::First => "first",
            Instance::Second => "second",
        }
    }

    /// The cubic this instance parametrizes.
    pub fn cubic(self, e: &CoeffSet) -> Cubic {
        match self {
            Instance::First => cubic_x(e),
            Instance::Second => cubic_d(e),
        }
    }
}

impl fmt::Display for Instance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Instance {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "first" => Ok(Instance::First),
            "second" => Ok(Instance::Second),
            _ => Err(Error::Parse(s.to_string())),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SexticInstance {
    pub which: Instance,
    pub point: ParamPoint,
    pub d: Rat,
    pub sextic: UniPoly,
}

pub fn sextic_instance(which: Instance, p: &ParamPoint) -> Result<SexticInstance> {
    let d = d_pipeline(which, p)?;
    Ok(SexticInstance { which, point: p.clone(), sextic: sextic_poly(&d), d })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solution<T> {
    pub x: [T; 3],
    pub d: [T; 3],
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport<T> {
    /// Edge cubic at `x1, x2, x3`.
    pub cubic_x: [T; 3],
    /// Face-diagonal cubic at `d1, d2, d3`.
    pub cubic_d: [T; 3],
    /// The three mixed equations, in the order `E21`, `E11`, `E12`.
    pub mixed: [T; 3],
    /// `x1^2 + x2^2 + x3^2 - 1`.
    pub space_diagonal: T,
    /// `d1^2 + d2^2 + d3^2 - 2`.
    pub face_diagonals: T,
    pub all_pass: bool,
    /// All six values strictly positive; `None` outside the rational domain.
    pub positivity: Option<bool>,
}

impl<T: Scalar> VerificationReport<T> {
    pub fn residuals(&self) -> Vec<(&'static str, &T)> {
        let mut out = Vec::with_capacity(11);
        for (name, v) in ["x1", "x2", "x3"].iter().zip(&self.cubic_x) {
            out.push((*name, v));
        }
        for (name, v) in ["d1", "d2", "d3"].iter().zip(&self.cubic_d) {
            out.push((*name, v));
        }
        for (name, v) in ["e21", "e11", "e12"].iter().zip(&self.mixed) {
            out.push((*name, v));
        }
        out.push(("sum_x2", &self.space_diagonal));
        out.push(("sum_d2", &self.face_diagonals));
        out
    }
}

/// `27 R^2`, after checking the point is nonsingular.
fn explicit_common(p: &ParamPoint) -> Result<Rat> {
    let report = singular_factors(p);
    if !report.is_empty() {
        return Err(Error::SingularPoint(report));
    }
    Ok(Rat::from(27) * eval_table(tables::R, p).square())
}

/// `D1 = -2 P1^2 / (27 C1^3 R^2)`.
pub fn d1_explicit(p: &ParamPoint) -> Result<Rat> {
    let r2 = explicit_common(p)?;
    let (p1, c1) = (eval_table(tables::P1, p), eval_table(tables::C1, p));
    if p1.is_zero() || c1.is_zero() {
        return Err(Error::DegenerateDepression);
    }
    (Rat::from(-2) * p1.square()).checked_div(&(c1.pow(3) * r2))
}

/// `D1` with the cube factor in the numerator, `-2 P1^2 C1^3 / (27 R^2)`.
/// Kept for comparison; disagrees with the pipeline.
pub fn d1_explicit_cube_in_numerator(p: &ParamPoint) -> Result<Rat> {
    let r2 = explicit_common(p)?;
    let (p1, c1) = (eval_table(tables::P1, p), eval_table(tables::C1, p));
    (Rat::from(-2) * p1.square() * c1.pow(3)).checked_div(&r2)
}

/// `D2 = -2 b^2 P2^2 / (27 C2^3 R^2)`.
pub fn d2_explicit(p: &ParamPoint) -> Result<Rat> {
    let r2 = explicit_common(p)?;
    let (p2, c2) = (eval_table(tables::P2, p), eval_table(tables::C2, p));
    let num = Rat::from(-2) * p.b.square() * p2.square();
    if num.is_zero() || c2.is_zero() {
        return Err(Error::DegenerateDepression);
    }
    num.checked_div(&(c2.pow(3) * r2))
}

pub fn d_explicit(which: Instance, p: &ParamPoint) -> Result<Rat> {
    match which {
        Instance::First => d1_explicit(p),
        Instance::Second => d2_explicit(p),
    }
}

/// `D` of the instance's cubic through the general cubic formula.
pub fn d_pipeline(which: Instance, p: &ParamPoint) -> Result<Rat> {
    let e = eval_coeffs(p)?;
    Ok(d_param(&which.cubic(&e))?.d)
}

fn parametrize<T: Scalar>(which: Instance, p: &ParamPoint, w: &T) -> Result<[T; 3]> {
    let e = eval_coeffs(p)?;
    let cubic = which.cubic(&e);
    let d = d_param(&cubic)?.d;
    if !eval_poly(&sextic_poly(&d), w).is_zero() {
        return Err(Error::NotAWitness);
    }
    lift_roots(&cubic, w)
}

/// Edges `(x1, x2, x3)` from a witness of the `D1` sextic.
pub fn param_first<T: Scalar>(p: &ParamPoint, w: &T) -> Result<[T; 3]> {
    parametrize(Instance::First, p, w)
}

/// Face diagonals `(d1, d2, d3)` from a witness of the `D2` sextic.
pub fn param_second<T: Scalar>(p: &ParamPoint, w: &T) -> Result<[T; 3]> {
    parametrize(Instance::Second, p, w)
}

pub fn param<T: Scalar>(which: Instance, p: &ParamPoint, w: &T) -> Result<[T; 3]> {
    parametrize(which, p, w)
}

fn solve_completion<T: Scalar>(m: [[T; 3]; 3], rhs: [T; 3]) -> Result<[T; 3]> {
    match linsolve3(&m, &rhs) {
        Err(Error::SingularSystem) => Err(Error::SingularCompletion),
        other => other,
    }
}

/// Face diagonals from edges, through the `E21`, `E11`, `E01` equations.
pub fn complete_first<T: Scalar>(p: &ParamPoint, x: &[T; 3]) -> Result<[T; 3]> {
    let e = eval_coeffs(p)?;
    let [x1, x2, x3] = x;
    let one = x1.embed(&Rat::one());
    let m = [
        [x2.times(x3), x3.times(x1), x1.times(x2)],
        [x2.plus(x3), x1.plus(x3), x1.plus(x2)],
        [one.clone(), one.clone(), one],
    ];
    let rhs = [x1.embed(&e.e21), x1.embed(&e.e11), x1.embed(&e.e01)];
    solve_completion(m, rhs)
}

/// Edges from face diagonals, through the `E10`, `E11`, `E12` equations.
pub fn complete_second<T: Scalar>(p: &ParamPoint, d: &[T; 3]) -> Result<[T; 3]> {
    let e = eval_coeffs(p)?;
    let [d1, d2, d3] = d;
    let one = d1.embed(&Rat::one());
    let m = [
        [one.clone(), one.clone(), one],
        [d2.plus(d3), d1.plus(d3), d1.plus(d2)],
        [d2.times(d3), d3.times(d1), d1.times(d2)],
    ];
    let rhs = [d1.embed(&e.e10), d1.embed(&e.e11), d1.embed(&e.e12)];
    solve_completion(m, rhs)
}

/// The other triple: `d` for `First`, `x` for `Second`.
pub fn complete<T: Scalar>(which: Instance, p: &ParamPoint, v: &[T; 3]) -> Result<[T; 3]> {
    match which {
        Instance::First => complete_first(p, v),
        Instance::Second => complete_second(p, v),
    }
}

/// Assembles a solution from one parametrized triple and its completion.
pub fn solution_from<T: Scalar>(which: Instance, own: [T; 3], other: [T; 3]) -> Solution<T> {
    match which {
        Instance::First => Solution { x: own, d: other },
        Instance::Second => Solution { x: other, d: own },
    }
}

fn cubic_at<T: Scalar>(c: &Cubic, v: &T) -> T {
    eval_poly(&c.to_poly(), v)
}

pub fn verify_solution<T: Scalar>(p: &ParamPoint, s: &Solution<T>) -> Result<VerificationReport<T>> {
    let e = eval_coeffs(p)?;
    let (cx, cd) = (cubic_x(&e), cubic_d(&e));
    let [x1, x2, x3] = &s.x;
    let [d1, d2, d3] = &s.d;
    let sum3 = |a: T, b: T, c: T| a.plus(&b).plus(&c);

    let e21 = sum3(x1.times(x2).times(d3), x2.times(x3).times(d1), x3.times(x1).times(d2));
    let e11 =
        sum3(x1.times(d2).plus(&d1.times(x2)), x2.times(d3).plus(&d2.times(x3)), x3.times(d1).plus(&d3.times(x1)));
    let e12 = sum3(x1.times(d2).times(d3), x2.times(d3).times(d1), x3.times(d1).times(d2));
    let report = VerificationReport {
        cubic_x: [cubic_at(&cx, x1), cubic_at(&cx, x2), cubic_at(&cx, x3)],
        cubic_d: [cubic_at(&cd, d1), cubic_at(&cd, d2), cubic_at(&cd, d3)],
        mixed: [e21.plus_rat(&-&e.e21), e11.plus_rat(&-&e.e11), e12.plus_rat(&-&e.e12)],
        space_diagonal: sum3(x1.square(), x2.square(), x3.square()).plus_rat(&Rat::from(-1)),
        face_diagonals: sum3(d1.square(), d2.square(), d3.square()).plus_rat(&Rat::from(-2)),
        all_pass: false,
        positivity: None,
    };
    let all_pass = report.residuals().iter().all(|(_, v)| v.is_zero());
    let signs: Option<Vec<i8>> = s.x.iter().chain(&s.d).map(|v| v.sign()).collect();
    let positivity = signs.map(|v| v.iter().all(|&sg| sg > 0));
    Ok(VerificationReport { all_pass, positivity, ..report })
}

/// Outcome in one factor ring reached during dynamic evaluation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BranchOutcome {
    Verified(Box<VerificationReport<RingElem>>),
    /// The completion system has zero determinant in this factor ring.
    SingularCompletion,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingBranch {
    pub modulus: UniPoly,
    pub outcome: BranchOutcome,
}

impl RingBranch {
    pub fn passed(&self) -> bool {
        matches!(&self.outcome, BranchOutcome::Verified(r) if r.all_pass)
    }
}

/// Runs parametrization, completion and verification with `w` the class of
/// the variable modulo the square-free part of the instance's sextic,
/// splitting the modulus whenever a zero divisor turns up.
pub fn ring_verify_branches(p: &ParamPoint, which: Instance) -> Result<Vec<RingBranch>> {
    let inst = sextic_instance(which, p)?;
    let mut queue = VecDeque::from([square_free_part(&inst.sextic)?]);
    let mut out = Vec::new();
    while let Some(m) = queue.pop_front() {
        let modulus = Arc::new(m);
        let w = RingElem::generator(Arc::clone(&modulus))?;
        let attempt = param(which, p, &w).and_then(|own| {
            let other = complete(which, p, &own)?;
            verify_solution(p, &solution_from(which, own, other))
        });
        let outcome = match attempt {
            Ok(report) => BranchOutcome::Verified(Box::new(report)),
            Err(Error::Split(ev)) => {
                let [f, g] = ev.factors;
                queue.push_back(f);
                queue.push_back(g);
                continue;
            }
            Err(Error::SingularCompletion) => BranchOutcome::SingularCompletion,
            Err(e) => return Err(e),
        };
        out.push(RingBranch { modulus: (*modulus).clone(), outcome });
    }
    Ok(out)
}

/// True iff every identity reduces to zero in every factor ring.
pub fn ring_verify_identities(p: &ParamPoint, which: Instance) -> Result<bool> {
    Ok(ring_verify_branches(p, which)?.iter().all(RingBranch::passed))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffs::DenominatorFactor;
    use crate::cubic::degenerate_triple;
    use crate::numerics::q;
    use crate::polyalg::{rational_roots, ring_make};
    use proptest::prelude::*;

    fn ip(b: i64, c: i64) -> ParamPoint {
        ParamPoint::new(Rat::from(b), Rat::from(c))
    }

    fn r(n: i64) -> Rat {
        Rat::from(n)
    }

    fn sorted(mut v: Vec<Rat>) -> Vec<Rat> {
        v.sort();
        v
    }

    #[test]
    fn d_values_at_one_one() {
        let p = ip(1, 1);
        assert_eq!(d_pipeline(Instance::First, &p).unwrap(), q(-1922, 35937));
        assert_eq!(d_pipeline(Instance::Second, &p).unwrap(), q(-18050, 328509));
        assert_eq!(d1_explicit(&p).unwrap(), q(-1922, 35937));
        assert_eq!(d2_explicit(&p).unwrap(), q(-18050, 328509));
        assert_eq!(d1_explicit_cube_in_numerator(&p).unwrap(), q(-2558182, 27));
    }

    #[test]
    fn d_values_at_zero_one() {
        let p = ip(0, 1);
        assert_eq!(d_pipeline(Instance::First, &p).unwrap(), q(-4, 27));
        assert_eq!(d1_explicit(&p).unwrap(), q(-4, 27));
        assert!(matches!(d_pipeline(Instance::Second, &p), Err(Error::DegenerateDepression)));
        assert!(matches!(d2_explicit(&p), Err(Error::DegenerateDepression)));
    }

    #[test]
    fn explicit_rejects_singular_points() {
        for f in [d1_explicit, d2_explicit] {
            match f(&ip(1, 2)) {
                Err(Error::SingularPoint(rep)) => assert!(rep.contains(DenominatorFactor::L1)),
                other => panic!("{other:?}"),
            }
        }
    }

    #[test]
    fn param_first_at_zero_one() {
        let p = ip(0, 1);
        assert_eq!(param_first(&p, &r(0)).unwrap(), [r(0), r(0), r(1)]);
        let x = param_first(&p, &r(3)).unwrap();
        assert_eq!(sorted(x.to_vec()), vec![r(0), r(0), r(1)]);
        assert!(matches!(param_first(&p, &r(2)), Err(Error::NotAWitness)));
        assert!(matches!(param_second(&p, &r(0)), Err(Error::DegenerateDepression)));
        let e = eval_coeffs(&p).unwrap();
        assert_eq!(degenerate_triple(&cubic_d(&e)).unwrap(), Some([r(-1), r(0), r(1)]));
    }

    #[test]
    fn non_witness_is_rejected() {
        assert!(matches!(param_second(&ip(1, 1), &r(2)), Err(Error::NotAWitness)));
        assert!(matches!(param_first(&ip(1, 1), &q(1, 3)), Err(Error::NotAWitness)));
    }

    #[test]
    fn completion_at_zero_one() {
        let p = ip(0, 1);
        assert!(matches!(complete_first(&p, &[r(0), r(0), r(1)]), Err(Error::SingularCompletion)));
        let x = complete_second(&p, &[r(0), r(1), r(-1)]).unwrap();
        assert_eq!(x, [r(1), r(0), r(0)]);
        let e = eval_coeffs(&p).unwrap();
        for xi in &x {
            assert!(cubic_x(&e).eval(xi).is_zero());
        }
        assert!(matches!(complete_second(&p, &[r(1), r(1), r(0)]), Err(Error::SingularCompletion)));
    }

    #[test]
    fn verification_at_zero_one() {
        let p = ip(0, 1);
        let s = Solution { x: [r(1), r(0), r(0)], d: [r(0), r(1), r(-1)] };
        let rep = verify_solution(&p, &s).unwrap();
        assert!(rep.all_pass);
        assert_eq!(rep.positivity, Some(false));
        assert_eq!(rep.residuals().len(), 11);

        let bad = Solution { x: [r(1), r(0), q(1, 2)], d: s.d.clone() };
        let rep = verify_solution(&p, &bad).unwrap();
        assert!(!rep.all_pass);
        assert!(!rep.cubic_x[2].is_zero());

        assert!(matches!(verify_solution(&ip(1, 2), &s), Err(Error::SingularPoint(_))));
    }

    #[test]
    fn simultaneous_permutations_preserve_verification() {
        let p = ip(0, 1);
        let x = [r(1), r(0), r(0)];
        let d = [r(0), r(1), r(-1)];
        let perms = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
        for pm in perms {
            let s = Solution { x: pm.map(|i| x[i].clone()), d: pm.map(|i| d[i].clone()) };
            assert!(verify_solution(&p, &s).unwrap().all_pass, "{pm:?}");
        }
    }

    #[test]
    fn ring_domain_symmetric_functions() {
        let p = ip(1, 1);
        let e = eval_coeffs(&p).unwrap();
        for which in Instance::BOTH {
            let inst = sextic_instance(which, &p).unwrap();
            let m = square_free_part(&inst.sextic).unwrap();
            let w = ring_make(UniPoly::x(), m).unwrap();
            let [a, b, c] = param(which, &p, &w).unwrap();
            let e1 = a.plus(&b).plus(&c);
            let e2 = a.times(&b).plus(&b.times(&c)).plus(&c.times(&a));
            let e3 = a.times(&b).times(&c);
            let want = match which {
                Instance::First => [&e.e10, &e.e20, &e.e30],
                Instance::Second => [&e.e01, &e.e02, &e.e03],
            };
            assert_eq!(e1.as_rational().as_ref(), Some(want[0]));
            assert_eq!(e2.as_rational().as_ref(), Some(want[1]));
            assert_eq!(e3.as_rational().as_ref(), Some(want[2]));
        }
    }

    #[test]
    fn ring_completion_at_one_one() {
        let p = ip(1, 1);
        let inst = sextic_instance(Instance::First, &p).unwrap();
        let w = ring_make(UniPoly::x(), square_free_part(&inst.sextic).unwrap()).unwrap();
        let x = param_first(&p, &w).unwrap();
        let d = complete_first(&p, &x).unwrap();
        let sum = d[0].plus(&d[1]).plus(&d[2]);
        assert_eq!(sum.as_rational(), Some(q(-1, 2)));
        let sq = d[0].square().plus(&d[1].square()).plus(&d[2].square());
        assert_eq!(sq.as_rational(), Some(r(2)));
    }

    #[test]
    fn ring_verification_at_one_one() {
        for which in Instance::BOTH {
            let branches = ring_verify_branches(&ip(1, 1), which).unwrap();
            assert!(!branches.is_empty());
            assert!(branches.iter().all(RingBranch::passed), "{which}");
            assert!(ring_verify_identities(&ip(1, 1), which).unwrap());
        }
    }

    #[test]
    fn ring_verification_splits_reducible_modulus() {
        // (0,1) First: square-free part w(w - 3)(w + 3) splits on the way
        let branches = ring_verify_branches(&ip(0, 1), Instance::First).unwrap();
        let degree: usize = branches.iter().map(|b| b.modulus.degree().unwrap()).sum();
        assert_eq!(degree, 3);
        assert!(matches!(ring_verify_identities(&ip(0, 1), Instance::Second), Err(Error::DegenerateDepression)));
    }

    #[test]
    fn rational_witnesses_reproduce_symmetric_functions() {
        let p = ip(0, 1);
        let inst = sextic_instance(Instance::First, &p).unwrap();
        for (w, _) in rational_roots(&inst.sextic).unwrap() {
            let x = param_first(&p, &w).unwrap();
            let e1: Rat = x.iter().sum();
            assert_eq!(e1, r(1));
        }
    }

    fn rat_h(h: i64) -> impl Strategy<Value = Rat> {
        (-h..=h, 1..=h).prop_map(|(n, d)| q(n, d))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(100))]

        #[test]
        fn explicit_matches_pipeline(b in rat_h(30), c in rat_h(30)) {
            let p = ParamPoint::new(b, c);
            prop_assume!(singular_factors(&p).is_empty());
            for which in Instance::BOTH {
                match (d_explicit(which, &p), d_pipeline(which, &p)) {
                    (Ok(a), Ok(b)) => prop_assert_eq!(a, b),
                    (Err(Error::DegenerateDepression), Err(Error::DegenerateDepression)) => {}
                    (a, b) => prop_assert!(false, "{which}: {a:?} vs {b:?}"),
                }
            }
        }
    }
}
