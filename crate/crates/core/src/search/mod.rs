//! Height-bounded scan over rational `(b, c)` for rational witnesses of
//! either sextic, with exact verification of everything it reports.

mod checkpoint;
mod probe;
mod record;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use rayon::prelude::*;

use crate::coeffs::{cubic_d, cubic_x, eval_coeffs, singular_factors, CoeffSet, ParamPoint};
use crate::cubic::{d_param, degenerate_triple, depress, lift_roots, sextic_poly};
use crate::error::{Error, Result};
use crate::numerics::Rat;
use crate::parametrize::{complete, solution_from, verify_solution, Instance, Solution, VerificationReport};
use crate::polyalg::{rational_roots_bounded, DEFAULT_ROOT_HEIGHT_BOUND};

pub use checkpoint::{config_digest, run_search, Checkpoint, RunSummary};
pub use probe::{degree_probe, DegreeProbe};
pub use record::{CellStatus, HitRecord};

/// All reduced `p/q` with `max(|p|, q) <= h`, by height, then numerator,
/// then denominator.
pub fn enumerate_rationals(h: u64) -> Vec<Rat> {
    let h = h as i64;
    let mut out = vec![Rat::zero()];
    for level in 1..=h {
        let mut layer = Vec::new();
        for num in -level..=level {
            for den in 1..=level {
                if num != 0 && num.abs().max(den) == level && num.gcd(&den) == 1 {
                    layer.push((num, den));
                }
            }
        }
        layer.sort();
        out.extend(layer.into_iter().map(|(n, d)| Rat::new(n, d).expect("positive denominator")));
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum InstanceSelection {
    First,
    Second,
    Both,
}

impl InstanceSelection {
    pub fn instances(self) -> &'static [Instance] {
        match self {
            InstanceSelection::First => &[Instance::First],
            InstanceSelection::Second => &[Instance::Second],
            InstanceSelection::Both => &Instance::BOTH,
        }
    }
}

impl fmt::Display for InstanceSelection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            InstanceSelection::First => "first",
            InstanceSelection::Second => "second",
            InstanceSelection::Both => "both",
        })
    }
}

impl FromStr for InstanceSelection {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "first" => Ok(InstanceSelection::First),
            "second" => Ok(InstanceSelection::Second),
            "both" => Ok(InstanceSelection::Both),
            _ => Err(Error::Parse(s.to_string())),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    pub height_b: u64,
    pub height_c: u64,
    pub instance: InstanceSelection,
    pub root_height_bound: u64,
    /// Emit only hits whose six values are all positive.
    pub require_positive: bool,
    pub parallelism: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            height_b: 1,
            height_c: 1,
            instance: InstanceSelection::Both,
            root_height_bound: DEFAULT_ROOT_HEIGHT_BOUND,
            require_positive: false,
            parallelism: 1,
        }
    }
}

impl SearchConfig {
    pub fn validate(&self) -> Result<()> {
        let checks = [
            (self.height_b, "height_b"),
            (self.height_c, "height_c"),
            (self.root_height_bound, "root_height_bound"),
            (self.parallelism as u64, "parallelism"),
        ];
        for (v, name) in checks {
            if v == 0 {
                return Err(Error::ConfigInvalid(format!("{name} must be at least 1")));
            }
        }
        Ok(())
    }
}

/// The cells of a scan in output order: `b` outermost, then `c`, then the
/// instance.
pub struct CellGrid {
    bs: Vec<Rat>,
    cs: Vec<Rat>,
    instances: &'static [Instance],
}

impl CellGrid {
    pub fn new(cfg: &SearchConfig) -> Self {
        CellGrid {
            bs: enumerate_rationals(cfg.height_b),
            cs: enumerate_rationals(cfg.height_c),
            instances: cfg.instance.instances(),
        }
    }

    pub fn len(&self) -> u64 {
        (self.bs.len() * self.cs.len() * self.instances.len()) as u64
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn cell(&self, index: u64) -> (ParamPoint, Instance) {
        let k = index as usize;
        let ni = self.instances.len();
        let nc = self.cs.len();
        let inst = self.instances[k % ni];
        let c = &self.cs[(k / ni) % nc];
        let b = &self.bs[k / (ni * nc)];
        (ParamPoint::new(b.clone(), c.clone()), inst)
    }
}

fn orderings(v: &[Rat; 3]) -> Vec<[Rat; 3]> {
    const PERMS: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    let mut out: Vec<[Rat; 3]> = PERMS.iter().map(|p| p.map(|i| v[i].clone())).collect();
    out.sort();
    out.dedup();
    out
}

type Verified = (Solution<Rat>, VerificationReport<Rat>);

/// First ordering of the instance's roots that completes to a verified
/// solution. When every completion system is singular, pairs the orderings
/// with the other cubic's rational roots instead.
fn resolve(p: &ParamPoint, e: &CoeffSet, which: Instance, own: &[[Rat; 3]]) -> Result<Option<Verified>> {
    for v in own {
        let other = match complete(which, p, v) {
            Ok(o) => o,
            Err(Error::SingularCompletion) => continue,
            Err(err) => return Err(err),
        };
        let s = solution_from(which, v.clone(), other);
        let rep = verify_solution(p, &s)?;
        if rep.all_pass {
            return Ok(Some((s, rep)));
        }
    }
    let other_cubic = match which {
        Instance::First => cubic_d(e),
        Instance::Second => cubic_x(e),
    };
    if let Some(other) = degenerate_triple(&other_cubic)? {
        for v in own {
            for o in orderings(&other) {
                let s = solution_from(which, v.clone(), o);
                let rep = verify_solution(p, &s)?;
                if rep.all_pass {
                    return Ok(Some((s, rep)));
                }
            }
        }
    }
    Ok(None)
}

fn finish(mut rec: HitRecord, found: Option<Verified>) -> HitRecord {
    match found {
        Some((s, rep)) => {
            rec.status = CellStatus::Hit;
            rec.solution = Some(s);
            rec.all_pass = Some(rep.all_pass);
            rec.positivity = rep.positivity;
        }
        None => rec.status = CellStatus::Degenerate,
    }
    rec
}

/// Classifies one `(b, c, instance)` cell.
pub fn scan_cell(p: &ParamPoint, which: Instance, root_height_bound: &BigUint) -> Result<HitRecord> {
    let mut rec = HitRecord::new(p.b.clone(), p.c.clone(), which, CellStatus::Degenerate);
    let report = singular_factors(p);
    if !report.is_empty() {
        rec.status = CellStatus::Singular(report);
        return Ok(rec);
    }
    let e = eval_coeffs(p)?;
    let cubic = which.cubic(&e);
    if depress(&cubic)?.is_degenerate() {
        let own = match degenerate_triple(&cubic)? {
            Some(t) => orderings(&t),
            None => return Ok(rec),
        };
        return Ok(finish(rec, resolve(p, &e, which, &own)?));
    }
    let d = d_param(&cubic)?.d;
    rec.d = Some(d.clone());
    if d.is_positive() {
        rec.status = CellStatus::NoRealRoot;
        return Ok(rec);
    }
    let search = rational_roots_bounded(&sextic_poly(&d), root_height_bound)?;
    if search.roots.is_empty() {
        rec.status = CellStatus::NoRationalRootAtBound;
        return Ok(rec);
    }
    rec.witnesses = search.roots.iter().map(|(w, _)| w.clone()).collect();
    let mut own = Vec::new();
    for w in &rec.witnesses {
        let v = lift_roots(&cubic, w)?;
        if !own.contains(&v) {
            own.push(v);
        }
    }
    let found = resolve(p, &e, which, &own)?;
    Ok(finish(rec, found))
}

/// Whether a record goes to the output under `cfg`.
pub fn emitted(cfg: &SearchConfig, rec: &HitRecord) -> bool {
    !cfg.require_positive || (rec.status == CellStatus::Hit && rec.positivity == Some(true))
}

/// Evaluates cells `range` in parallel, returning records in cell order.
pub fn scan_range(cfg: &SearchConfig, grid: &CellGrid, range: std::ops::Range<u64>) -> Result<Vec<HitRecord>> {
    let bound = BigUint::from(cfg.root_height_bound);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.parallelism)
        .build()
        .map_err(|e| Error::ConfigInvalid(e.to_string()))?;
    pool.install(|| {
        range
            .into_par_iter()
            .map(|k| {
                let (p, which) = grid.cell(k);
                scan_cell(&p, which, &bound)
            })
            .collect()
    })
}

/// All records of a scan, in order, without checkpointing.
pub fn scan(cfg: &SearchConfig) -> Result<Vec<HitRecord>> {
    cfg.validate()?;
    let grid = CellGrid::new(cfg);
    Ok(scan_range(cfg, &grid, 0..grid.len())?.into_iter().filter(|r| emitted(cfg, r)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffs::DenominatorFactor;
    use crate::numerics::q;

    #[test]
    fn enumeration_examples() {
        assert_eq!(enumerate_rationals(1), vec![q(0, 1), q(-1, 1), q(1, 1)]);
        assert_eq!(enumerate_rationals(2), vec![q(0, 1), q(-1, 1), q(1, 1), q(-2, 1), q(-1, 2), q(1, 2), q(2, 1)]);
        assert_eq!(enumerate_rationals(3).len(), 15);
        assert_eq!(enumerate_rationals(4).len(), 23);
    }

    #[test]
    fn enumeration_matches_brute_force() {
        for h in 1..=12u64 {
            let got = enumerate_rationals(h);
            let mut set = std::collections::BTreeSet::new();
            for n in -(h as i64)..=(h as i64) {
                for d in 1..=(h as i64) {
                    set.insert(q(n, d));
                }
            }
            assert_eq!(got.len(), set.len());
            let mut sorted = got.clone();
            sorted.sort();
            sorted.dedup();
            assert_eq!(sorted.len(), got.len());
            assert!(got.windows(2).all(|w| w[0].height() <= w[1].height()));
        }
    }

    #[test]
    fn grid_order() {
        let cfg = SearchConfig { height_b: 1, height_c: 1, ..SearchConfig::default() };
        let grid = CellGrid::new(&cfg);
        assert_eq!(grid.len(), 18);
        let (p, w) = grid.cell(0);
        assert_eq!((p.b, p.c, w), (q(0, 1), q(0, 1), Instance::First));
        let (p, w) = grid.cell(5);
        assert_eq!((p.b, p.c, w), (q(0, 1), q(1, 1), Instance::Second));
        let (p, _) = grid.cell(17);
        assert_eq!((p.b, p.c), (q(1, 1), q(1, 1)));
    }

    #[test]
    fn zero_one_first_is_a_hit() {
        let bound = BigUint::from(DEFAULT_ROOT_HEIGHT_BOUND);
        let p = ParamPoint::new(q(0, 1), q(1, 1));
        let rec = scan_cell(&p, Instance::First, &bound).unwrap();
        assert_eq!(rec.status, CellStatus::Hit);
        assert_eq!(rec.d, Some(q(-4, 27)));
        assert_eq!(rec.witnesses, vec![q(-3, 1), q(0, 1), q(3, 1)]);
        let s = rec.solution.unwrap();
        let mut x = s.x.to_vec();
        x.sort();
        assert_eq!(x, vec![q(0, 1), q(0, 1), q(1, 1)]);
        assert_eq!(rec.positivity, Some(false));

        let rec = scan_cell(&p, Instance::Second, &bound).unwrap();
        assert_eq!(rec.status, CellStatus::Hit);
        assert_eq!(rec.d, None);
    }

    #[test]
    fn singular_and_classified_cells() {
        let bound = BigUint::from(DEFAULT_ROOT_HEIGHT_BOUND);
        let rec = scan_cell(&ParamPoint::new(q(1, 1), q(2, 1)), Instance::First, &bound).unwrap();
        match rec.status {
            CellStatus::Singular(r) => assert!(r.contains(DenominatorFactor::L1)),
            other => panic!("{other:?}"),
        }
        let p = ParamPoint::new(q(1, 1), q(1, 1));
        let rec = scan_cell(&p, Instance::First, &bound).unwrap();
        assert_eq!(rec.d, Some(q(-1922, 35937)));
        assert!(matches!(rec.status, CellStatus::NoRationalRootAtBound | CellStatus::Hit));
    }

    #[test]
    fn invalid_config() {
        let cfg = SearchConfig { height_b: 0, ..SearchConfig::default() };
        assert!(matches!(scan(&cfg), Err(Error::ConfigInvalid(_))));
    }
}
