use std::fmt;
use std::str::FromStr;

use crate::coeffs::{DenominatorFactor, SingularityReport};
use crate::error::{Error, Result};
use crate::numerics::Rat;
use crate::parametrize::{Instance, Solution};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CellStatus {
    /// A rational solution that passes every equation exactly.
    Hit,
    /// `D > 0`: the sextic has no real root.
    NoRealRoot,
    /// No rational witness of height within the bound.
    NoRationalRootAtBound,
    Singular(SingularityReport),
    /// The cubic or its completion degenerates and no exact solution came out.
    Degenerate,
}

impl CellStatus {
    pub fn tag(&self) -> &'static str {
        match self {
            CellStatus::Hit => "Hit",
            CellStatus::NoRealRoot => "NoRealRoot",
            CellStatus::NoRationalRootAtBound => "NoRationalRootAtBound",
            CellStatus::Singular(_) => "Singular",
            CellStatus::Degenerate => "Degenerate",
        }
    }
}

impl fmt::Display for CellStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CellStatus::Singular(rep) => {
                let names: Vec<_> = rep.vanishing.iter().map(|v| v.name()).collect();
                write!(f, "Singular{{{}}}", names.join(","))
            }
            other => f.write_str(other.tag()),
        }
    }
}

impl FromStr for CellStatus {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(s.to_string());
        Ok(match s {
            "Hit" => CellStatus::Hit,
            "NoRealRoot" => CellStatus::NoRealRoot,
            "NoRationalRootAtBound" => CellStatus::NoRationalRootAtBound,
            "Degenerate" => CellStatus::Degenerate,
            _ => {
                let inner = s.strip_prefix("Singular{").and_then(|r| r.strip_suffix('}')).ok_or_else(bad)?;
                let mut rep = SingularityReport::default();
                for name in inner.split(',').filter(|n| !n.is_empty()) {
                    let f = DenominatorFactor::ALL.into_iter().find(|f| f.name() == name).ok_or_else(bad)?;
                    rep.vanishing.insert(f);
                }
                CellStatus::Singular(rep)
            }
        })
    }
}

/// One line of scan output.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HitRecord {
    pub b: Rat,
    pub c: Rat,
    pub instance: Instance,
    pub status: CellStatus,
    pub d: Option<Rat>,
    pub witnesses: Vec<Rat>,
    pub solution: Option<Solution<Rat>>,
    pub all_pass: Option<bool>,
    pub positivity: Option<bool>,
}

impl HitRecord {
    pub fn new(b: Rat, c: Rat, instance: Instance, status: CellStatus) -> Self {
        HitRecord {
            b,
            c,
            instance,
            status,
            d: None,
            witnesses: Vec::new(),
            solution: None,
            all_pass: None,
            positivity: None,
        }
    }
}

fn opt<T: fmt::Display>(v: &Option<T>) -> String {
    v.as_ref().map(|x| x.to_string()).unwrap_or_default()
}

/// Tab-separated: b, c, instance, status, D, witnesses, x1..x3, d1..d3,
/// all_pass, positivity. Absent fields are empty.
impl fmt::Display for HitRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let witnesses: Vec<String> = self.witnesses.iter().map(Rat::to_string).collect();
        let mut fields = vec![
            self.b.to_string(),
            self.c.to_string(),
            self.instance.to_string(),
            self.status.to_string(),
            opt(&self.d),
            witnesses.join(","),
        ];
        match &self.solution {
            Some(s) => fields.extend(s.x.iter().chain(&s.d).map(Rat::to_string)),
            None => fields.extend(std::iter::repeat_n(String::new(), 6)),
        }
        fields.push(opt(&self.all_pass));
        fields.push(opt(&self.positivity));
        f.write_str(&fields.join("\t"))
    }
}

impl FromStr for HitRecord {
    type Err = Error;
    fn from_str(line: &str) -> Result<Self> {
        let fields: Vec<&str> = line.trim_end_matches('\n').split('\t').collect();
        if fields.len() != 14 {
            return Err(Error::Parse(line.to_string()));
        }
        let rat_opt = |s: &str| -> Result<Option<Rat>> {
            if s.is_empty() {
                Ok(None)
            } else {
                s.parse().map(Some)
            }
        };
        let bool_opt = |s: &str| -> Result<Option<bool>> {
            match s {
                "" => Ok(None),
                "true" => Ok(Some(true)),
                "false" => Ok(Some(false)),
                _ => Err(Error::Parse(s.to_string())),
            }
        };
        let witnesses = if fields[5].is_empty() {
            Vec::new()
        } else {
            fields[5].split(',').map(str::parse).collect::<Result<_>>()?
        };
        let values: Vec<Option<Rat>> = fields[6..12].iter().map(|s| rat_opt(s)).collect::<Result<_>>()?;
        let solution = if values.iter().all(Option::is_some) {
            let v: Vec<Rat> = values.into_iter().flatten().collect();
            Some(Solution {
                x: [v[0].clone(), v[1].clone(), v[2].clone()],
                d: [v[3].clone(), v[4].clone(), v[5].clone()],
            })
        } else if values.iter().all(Option::is_none) {
            None
        } else {
            return Err(Error::Parse(line.to_string()));
        };
        Ok(HitRecord {
            b: fields[0].parse()?,
            c: fields[1].parse()?,
            instance: fields[2].parse()?,
            status: fields[3].parse()?,
            d: rat_opt(fields[4])?,
            witnesses,
            solution,
            all_pass: bool_opt(fields[12])?,
            positivity: bool_opt(fields[13])?,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::q;

    #[test]
    fn round_trips() {
        let mut rec = HitRecord::new(q(0, 1), q(1, 1), Instance::First, CellStatus::Hit);
        rec.d = Some(q(-4, 27));
        rec.witnesses = vec![q(-3, 1), q(0, 1), q(3, 1)];
        rec.solution = Some(Solution { x: [q(0, 1), q(0, 1), q(1, 1)], d: [q(-1, 1), q(1, 1), q(0, 1)] });
        rec.all_pass = Some(true);
        rec.positivity = Some(false);
        let line = rec.to_string();
        assert_eq!(line, "0\t1\tfirst\tHit\t-4/27\t-3,0,3\t0\t0\t1\t-1\t1\t0\ttrue\tfalse");
        assert_eq!(line.parse::<HitRecord>().unwrap(), rec);

        let mut rep = SingularityReport::default();
        rep.vanishing.insert(DenominatorFactor::Q);
        rep.vanishing.insert(DenominatorFactor::L1);
        let rec = HitRecord::new(q(1, 1), q(2, 1), Instance::Second, CellStatus::Singular(rep));
        let line = rec.to_string();
        assert_eq!(line, "1\t2\tsecond\tSingular{Q,L1}\t\t\t\t\t\t\t\t\t\t");
        assert_eq!(line.parse::<HitRecord>().unwrap(), rec);
    }

    #[test]
    fn rejects_malformed_lines() {
        assert!("1\t2\tfirst".parse::<HitRecord>().is_err());
        assert!("1\t2\tthird\tHit\t\t\t\t\t\t\t\t\t\t".parse::<HitRecord>().is_err());
        assert!("1\t2\tfirst\tSingular{X}\t\t\t\t\t\t\t\t\t\t".parse::<HitRecord>().is_err());
    }
}
