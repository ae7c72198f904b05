//! The nine coefficient functions `E_ij(b, c)`, their denominator factors,
//! and the two cubics whose roots are the edges and the face diagonals.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::numerics::Rat;
use crate::tables::{self, Term};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ParamPoint {
    pub b: Rat,
    pub c: Rat,
}

impl ParamPoint {
    pub fn new(b: Rat, c: Rat) -> Self {
        ParamPoint { b, c }
    }
}

impl fmt::Display for ParamPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.b, self.c)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DenominatorFactor {
    Q,
    L1,
    L2,
    R,
    R21,
}

impl DenominatorFactor {
    pub const ALL: [DenominatorFactor; 5] = [Self::Q, Self::L1, Self::L2, Self::R, Self::R21];

    pub fn name(self) -> &'static str {
        match self {
            Self::Q => "Q",
            Self::L1 => "L1",
            Self::L2 => "L2",
            Self::R => "R",
            Self::R21 => "R21",
        }
    }

    pub fn eval(self, p: &ParamPoint) -> Rat {
        let pw = Powers::new(p);
        match self {
            Self::Q => pw.eval(tables::Q),
            Self::L1 => pw.eval(tables::L1),
            Self::L2 => pw.eval(tables::L2),
            Self::R => pw.eval(tables::R),
            Self::R21 => pw.eval(tables::R) - Rat::from(4) * p.c.pow(3),
        }
    }
}

impl fmt::Display for DenominatorFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SingularityReport {
    pub vanishing: BTreeSet<DenominatorFactor>,
}

impl SingularityReport {
    pub fn is_empty(&self) -> bool {
        self.vanishing.is_empty()
    }

    pub fn contains(&self, f: DenominatorFactor) -> bool {
        self.vanishing.contains(&f)
    }
}

impl fmt::Display for SingularityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<_> = self.vanishing.iter().map(|v| v.name()).collect();
        write!(f, "{{{}}}", names.join(", "))
    }
}

/// Which reading of the E21 formula to evaluate.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum E21Form {
    /// `(b/2)(N - 4c^3) / (R L1^2 L2^2)`; consistent with the other eight.
    #[default]
    Corrected,
    /// `(b/2) N / ((R - 4c^3) L1^2 L2^2)`.
    Printed,
    /// `(b/2) N / (R L1^2 L2^2)`.
    PrintedWithR,
}

impl E21Form {
    fn denominator_factors(self) -> &'static [DenominatorFactor] {
        use DenominatorFactor::*;
        match self {
            E21Form::Printed => &[Q, L1, L2, R, R21],
            _ => &[Q, L1, L2, R],
        }
    }
}

impl FromStr for E21Form {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "corrected" => Ok(E21Form::Corrected),
            "printed" => Ok(E21Form::Printed),
            "printed-with-r" => Ok(E21Form::PrintedWithR),
            _ => Err(Error::Parse(s.to_string())),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoeffSet {
    pub e10: Rat,
    pub e20: Rat,
    pub e30: Rat,
    pub e01: Rat,
    pub e02: Rat,
    pub e03: Rat,
    pub e21: Rat,
    pub e11: Rat,
    pub e12: Rat,
}

impl CoeffSet {
    pub fn zero() -> Self {
        let z = Rat::zero();
        CoeffSet {
            e10: z.clone(),
            e20: z.clone(),
            e30: z.clone(),
            e01: z.clone(),
            e02: z.clone(),
            e03: z.clone(),
            e21: z.clone(),
            e11: z.clone(),
            e12: z,
        }
    }

    /// Name/value pairs in display order.
    pub fn named(&self) -> [(&'static str, &Rat); 9] {
        [
            ("E10", &self.e10),
            ("E20", &self.e20),
            ("E30", &self.e30),
            ("E01", &self.e01),
            ("E02", &self.e02),
            ("E03", &self.e03),
            ("E21", &self.e21),
            ("E11", &self.e11),
            ("E12", &self.e12),
        ]
    }
}

impl fmt::Display for CoeffSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (name, v)) in self.named().iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{name} = {v}")?;
        }
        Ok(())
    }
}

/// `a3 x^3 + a2 x^2 + a1 x + a0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cubic {
    pub a3: Rat,
    pub a2: Rat,
    pub a1: Rat,
    pub a0: Rat,
}

impl Cubic {
    pub fn new(a3: Rat, a2: Rat, a1: Rat, a0: Rat) -> Self {
        Cubic { a3, a2, a1, a0 }
    }

    /// Monic cubic with the given roots.
    pub fn from_roots(r: [&Rat; 3]) -> Self {
        let e1 = r[0] + r[1] + r[2];
        let e2 = r[0] * r[1] + r[1] * r[2] + r[2] * r[0];
        let e3 = r[0] * r[1] * r[2];
        Cubic::new(Rat::one(), -e1, e2, -e3)
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        ((&self.a3 * x + &self.a2) * x + &self.a1) * x + &self.a0
    }

    pub fn scale(&self, k: &Rat) -> Self {
        Cubic::new(&self.a3 * k, &self.a2 * k, &self.a1 * k, &self.a0 * k)
    }

    pub fn to_poly(&self) -> crate::polyalg::UniPoly {
        crate::polyalg::UniPoly::new(vec![self.a0.clone(), self.a1.clone(), self.a2.clone(), self.a3.clone()])
    }
}

impl fmt::Display for Cubic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.to_poly().display_with("x"), f)
    }
}

struct Powers {
    b: Vec<Rat>,
    c: Vec<Rat>,
}

impl Powers {
    const MAX: usize = 10;

    fn new(p: &ParamPoint) -> Self {
        let seq = |x: &Rat| {
            let mut v = Vec::with_capacity(Self::MAX + 1);
            v.push(Rat::one());
            for i in 0..Self::MAX {
                let next = &v[i] * x;
                v.push(next);
            }
            v
        };
        Powers { b: seq(&p.b), c: seq(&p.c) }
    }

    fn eval(&self, terms: &[Term]) -> Rat {
        terms.iter().map(|&(k, i, j)| Rat::from(k) * &self.b[i as usize] * &self.c[j as usize]).sum()
    }
}

/// Evaluates one of the coefficient tables at `(b, c)`.
pub(crate) fn eval_table(terms: &[Term], p: &ParamPoint) -> Rat {
    Powers::new(p).eval(terms)
}

pub fn singular_factors(p: &ParamPoint) -> SingularityReport {
    singular_factors_with(p, E21Form::default())
}

/// Vanishing denominator factors. R21 only counts when the printed E21
/// denominator is in use.
pub fn singular_factors_with(p: &ParamPoint, form: E21Form) -> SingularityReport {
    let vanishing = form.denominator_factors().iter().copied().filter(|f| f.eval(p).is_zero()).collect();
    SingularityReport { vanishing }
}

pub fn eval_coeffs(p: &ParamPoint) -> Result<CoeffSet> {
    eval_coeffs_with(p, E21Form::default())
}

pub fn eval_coeffs_with(p: &ParamPoint, form: E21Form) -> Result<CoeffSet> {
    let report = singular_factors_with(p, form);
    if !report.is_empty() {
        return Err(Error::SingularPoint(report));
    }
    let pw = Powers::new(p);
    let half = Rat::new(1, 2)?;
    let q = pw.eval(tables::Q);
    let l12 = (pw.eval(tables::L1) * pw.eval(tables::L2)).square();
    let r = pw.eval(tables::R);
    let rl = &r * &l12;
    let div = |num: Rat, den: &Rat| num.checked_div(den);

    let e21_core = pw.eval(tables::E21_CORE);
    let c3x4 = Rat::from(4) * &pw.c[3];
    let e21 = match form {
        E21Form::Corrected => div(&half * &p.b * (e21_core - c3x4), &rl)?,
        E21Form::Printed => div(&half * &p.b * e21_core, &((&r - &c3x4) * &l12))?,
        E21Form::PrintedWithR => div(&half * &p.b * e21_core, &rl)?,
    };

    Ok(CoeffSet {
        e10: div(pw.eval(tables::E10_NUM), &q)?,
        e20: div(&half * pw.eval(tables::E20_NUM), &l12)?,
        e30: div(pw.eval(tables::E30_NUM), &rl)?,
        e01: div(pw.eval(tables::E01_NUM), &q)?,
        e02: div(&half * pw.eval(tables::E02_NUM), &l12)?,
        e03: div(&half * pw.eval(tables::E03_NUM), &rl)?,
        e21,
        e11: div(pw.eval(tables::E11_NUM), &q)?,
        e12: div(pw.eval(tables::E12_NUM), &rl)?,
    })
}

/// `x^3 - E10 x^2 + E20 x - E30`.
pub fn cubic_x(e: &CoeffSet) -> Cubic {
    Cubic::new(Rat::one(), -&e.e10, e.e20.clone(), -&e.e30)
}

/// `d^3 - E01 d^2 + E02 d - E03`.
pub fn cubic_d(e: &CoeffSet) -> Cubic {
    Cubic::new(Rat::one(), -&e.e01, e.e02.clone(), -&e.e03)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::q;
    use proptest::prelude::*;
    use DenominatorFactor::*;

    fn pt(b: Rat, c: Rat) -> ParamPoint {
        ParamPoint::new(b, c)
    }

    fn ip(b: i64, c: i64) -> ParamPoint {
        pt(Rat::from(b), Rat::from(c))
    }

    fn set(fs: &[DenominatorFactor]) -> BTreeSet<DenominatorFactor> {
        fs.iter().copied().collect()
    }

    #[test]
    fn q_is_product_of_linear_factors() {
        for (b, c) in [(3, 5), (-2, 7), (0, 0), (1, 2)] {
            let p = ip(b, c);
            assert_eq!(Q.eval(&p), L1.eval(&p) * L2.eval(&p));
        }
    }

    #[test]
    fn singular_examples() {
        assert_eq!(singular_factors(&ip(1, 2)).vanishing, set(&[Q, L1]));
        assert!(singular_factors(&ip(1, 1)).is_empty());
        assert!(singular_factors_with(&ip(1, 1), E21Form::Printed).is_empty());
        assert_eq!(singular_factors(&ip(0, 0)).vanishing, set(&[Q, L2, R]));
        assert_eq!(singular_factors_with(&ip(0, 0), E21Form::Printed).vanishing, set(&[Q, L2, R, R21]));
        let p = ip(1, 1);
        let vals: Vec<Rat> = DenominatorFactor::ALL.iter().map(|f| f.eval(&p)).collect();
        assert_eq!(vals, [2, -1, -2, 1, -3].map(Rat::from));
    }

    #[test]
    fn table_at_one_one() {
        let e = eval_coeffs(&ip(1, 1)).unwrap();
        let expect = [q(1, 2), q(-3, 8), q(0, 1), q(-1, 2), q(-7, 8), q(3, 8), q(3, 8), q(1, 2), q(-1, 1)];
        for ((name, got), want) in e.named().iter().zip(&expect) {
            assert_eq!(*got, want, "{name}");
        }
        assert_eq!(eval_coeffs_with(&ip(1, 1), E21Form::Printed).unwrap().e21, q(-7, 24));
        assert_eq!(eval_coeffs_with(&ip(1, 1), E21Form::PrintedWithR).unwrap().e21, q(7, 8));
    }

    #[test]
    fn table_at_zero_one() {
        let e = eval_coeffs(&ip(0, 1)).unwrap();
        let expect = [1, 0, 0, 0, -1, 0, 0, 0, -1].map(Rat::from);
        for ((name, got), want) in e.named().iter().zip(&expect) {
            assert_eq!(*got, want, "{name}");
        }
    }

    #[test]
    fn singular_point_is_an_error() {
        match eval_coeffs(&ip(1, 2)) {
            Err(Error::SingularPoint(r)) => assert!(r.contains(L1)),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn cubics() {
        let e = eval_coeffs(&ip(1, 1)).unwrap();
        assert_eq!(cubic_x(&e), Cubic::new(Rat::one(), q(-1, 2), q(-3, 8), Rat::zero()));
        assert_eq!(cubic_d(&e), Cubic::new(Rat::one(), q(1, 2), q(-7, 8), q(-3, 8)));
        let z = CoeffSet::zero();
        let x3 = Cubic::new(Rat::one(), Rat::zero(), Rat::zero(), Rat::zero());
        assert_eq!(cubic_x(&z), x3);
        assert_eq!(cubic_d(&z), x3);
        assert_eq!(cubic_x(&e).to_string(), "x^3 - (1/2)*x^2 - (3/8)*x");
    }

    #[test]
    fn root_multisets_at_zero_one() {
        let e = eval_coeffs(&ip(0, 1)).unwrap();
        let cx = cubic_x(&e);
        let cd = cubic_d(&e);
        assert_eq!(cx, Cubic::from_roots([&Rat::zero(), &Rat::zero(), &Rat::one()]));
        assert_eq!(cd, Cubic::from_roots([&Rat::zero(), &Rat::one(), &Rat::from(-1)]));
        for r in [0, 1] {
            assert!(cx.eval(&Rat::from(r)).is_zero());
        }
        for r in [-1, 0, 1] {
            assert!(cd.eval(&Rat::from(r)).is_zero());
        }
    }

    fn rat_h(h: i64) -> impl Strategy<Value = Rat> {
        (-h..=h, 1..=h).prop_map(|(n, d)| q(n, d))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn sum_of_squares_identities(b in rat_h(50), c in rat_h(50)) {
            let p = pt(b, c);
            prop_assume!(singular_factors(&p).is_empty());
            let e = eval_coeffs(&p).unwrap();
            prop_assert_eq!(e.e10.square() - Rat::from(2) * &e.e20, Rat::one());
            prop_assert_eq!(e.e01.square() - Rat::from(2) * &e.e02, Rat::from(2));
            prop_assert_eq!(eval_coeffs(&p).unwrap(), e);
        }
    }
}
