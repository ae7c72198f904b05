use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use cuboid_core::coeffs::{eval_coeffs_with, singular_factors_with, E21Form, ParamPoint};
use cuboid_core::cubic::{analyze_cubic_bounded, sextic_poly, VerdictPath};
use cuboid_core::parametrize::{
    complete, d_explicit, d_pipeline, param, ring_verify_branches, verify_solution, BranchOutcome, Instance, Solution,
};
use cuboid_core::polyalg::DEFAULT_ROOT_HEIGHT_BOUND;
use cuboid_core::search::{degree_probe, run_search, scan, InstanceSelection, SearchConfig};
use cuboid_core::{Error, Rat};
use num_bigint::BigUint;

const EXIT_CODES: &str = "\
Exit codes:
  0  success
  1  other failure, including a solution that fails verification
  2  usage error or invalid configuration
  3  singular parameter point
  4  degenerate depressed cubic
  5  checkpoint mismatch or corrupt checkpoint
  6  w is not a usable witness (not a sextic root, or w = +-1)
  7  singular completion system";

/// Exact rational tools for the two cubic parametrizations of cuboids with
/// rational edges and diagonals. Rationals are written `p` or `p/q`.
#[derive(Parser, Debug)]
#[command(name = "cuboid", version, after_help = EXIT_CODES)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Point {
    #[arg(allow_hyphen_values = true)]
    b: Rat,
    #[arg(allow_hyphen_values = true)]
    c: Rat,
}

impl Point {
    fn get(&self) -> ParamPoint {
        ParamPoint::new(self.b.clone(), self.c.clone())
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the nine coefficient values at (b, c).
    Coeffs {
        #[command(flatten)]
        at: Point,
        /// Form of E21: corrected, printed, printed-with-r.
        #[arg(long, default_value = "corrected")]
        e21: E21Form,
    },
    /// List the denominator factors vanishing at (b, c).
    Singular {
        #[command(flatten)]
        at: Point,
        #[arg(long, default_value = "corrected")]
        e21: E21Form,
    },
    /// Print D for an instance.
    Dparam {
        which: Instance,
        #[command(flatten)]
        at: Point,
        /// Use the closed form in b and c.
        #[arg(long, conflicts_with = "pipeline")]
        explicit: bool,
        /// Depress the instance's cubic and form D from it (default).
        #[arg(long)]
        pipeline: bool,
    },
    /// Decide whether a3 x^3 + a2 x^2 + a1 x + a0 has three rational roots.
    Roots {
        #[arg(allow_hyphen_values = true)]
        a3: Rat,
        #[arg(allow_hyphen_values = true)]
        a2: Rat,
        #[arg(allow_hyphen_values = true)]
        a1: Rat,
        #[arg(allow_hyphen_values = true)]
        a0: Rat,
        /// Largest height of a rational root searched for.
        #[arg(long, default_value_t = DEFAULT_ROOT_HEIGHT_BOUND)]
        bound: u64,
    },
    /// Print the sextic in w for an instance.
    Sextic {
        which: Instance,
        #[command(flatten)]
        at: Point,
    },
    /// Roots of the instance's cubic from a sextic root w.
    Param {
        which: Instance,
        #[command(flatten)]
        at: Point,
        #[arg(allow_hyphen_values = true)]
        w: Rat,
    },
    /// Solve for the other triple given the instance's own triple.
    Complete {
        which: Instance,
        #[command(flatten)]
        at: Point,
        #[arg(allow_hyphen_values = true, num_args = 3)]
        v: Vec<Rat>,
    },
    /// Check x1 x2 x3 d1 d2 d3 against all nine equations.
    Verify {
        #[command(flatten)]
        at: Point,
        #[arg(allow_hyphen_values = true, num_args = 6, value_names = ["X1", "X2", "X3", "D1", "D2", "D3"])]
        values: Vec<Rat>,
    },
    /// Verify the parametrization symbolically in each factor ring of the sextic.
    RingVerify {
        which: Instance,
        #[command(flatten)]
        at: Point,
    },
    /// Scan (b, c) up to the given heights.
    Search(SearchArgs),
    /// Measure the total degree of the cleared sextics along a random line.
    DegreeProbe {
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

#[derive(Args, Debug)]
struct SearchArgs {
    #[arg(long, default_value_t = 1)]
    height_b: u64,
    #[arg(long, default_value_t = 1)]
    height_c: u64,
    /// first, second or both.
    #[arg(long, default_value = "both")]
    instance: InstanceSelection,
    #[arg(long, default_value_t = DEFAULT_ROOT_HEIGHT_BOUND)]
    root_height_bound: u64,
    /// Emit only hits with all six values positive.
    #[arg(long)]
    require_positive: bool,
    /// Worker threads.
    #[arg(short, long, default_value_t = 1)]
    jobs: usize,
    /// Record file. Without it records go to stdout.
    #[arg(short, long)]
    output: Option<PathBuf>,
    #[arg(long, requires = "output")]
    checkpoint: Option<PathBuf>,
    /// Continue from the checkpoint.
    #[arg(long, requires = "checkpoint")]
    resume: bool,
    /// Stop after this many cells.
    #[arg(long, requires = "output")]
    max_cells: Option<u64>,
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse(_) | Error::ConfigInvalid(_) => 2,
        Error::SingularPoint(_) => 3,
        Error::DegenerateDepression => 4,
        Error::CheckpointMismatch | Error::CheckpointCorrupt(_) => 5,
        Error::NotAWitness | Error::WDegenerate => 6,
        Error::SingularCompletion | Error::SingularSystem => 7,
        _ => 1,
    }
}

fn join(v: &[Rat]) -> String {
    v.iter().map(Rat::to_string).collect::<Vec<_>>().join(" ")
}

fn triple(v: &[Rat]) -> [Rat; 3] {
    [v[0].clone(), v[1].clone(), v[2].clone()]
}

fn run(cmd: Command, out: &mut impl Write) -> cuboid_core::Result<u8> {
    match cmd {
        Command::Coeffs { at, e21 } => {
            writeln!(out, "{}", eval_coeffs_with(&at.get(), e21)?)?;
        }
        Command::Singular { at, e21 } => {
            writeln!(out, "{}", singular_factors_with(&at.get(), e21))?;
        }
        Command::Dparam { which, at, explicit, .. } => {
            let d = if explicit { d_explicit(which, &at.get())? } else { d_pipeline(which, &at.get())? };
            writeln!(out, "{d}")?;
        }
        Command::Roots { a3, a2, a1, a0, bound } => {
            let cubic = cuboid_core::coeffs::Cubic::new(a3, a2, a1, a0);
            let v = analyze_cubic_bounded(&cubic, &BigUint::from(bound))?;
            let path = match v.path {
                VerdictPath::Sextic => "sextic",
                VerdictPath::Direct => "direct",
            };
            writeln!(out, "path={path}")?;
            if let Some(d) = &v.d {
                writeln!(out, "D={d}")?;
            }
            writeln!(out, "witnesses={}", join(&v.witness_values()))?;
            writeln!(out, "roots={}", join(&v.roots_expanded()))?;
            let verdict = match (v.decided, v.has_three_rational_roots) {
                (_, true) => "three rational roots",
                (true, false) => "not three rational roots",
                (false, false) => "undecided at this bound",
            };
            writeln!(out, "{verdict}")?;
        }
        Command::Sextic { which, at } => {
            let d = d_pipeline(which, &at.get())?;
            writeln!(out, "D = {d}")?;
            writeln!(out, "{}", sextic_poly(&d).display_with("w"))?;
        }
        Command::Param { which, at, w } => {
            writeln!(out, "{}", join(&param(which, &at.get(), &w)?))?;
        }
        Command::Complete { which, at, v } => {
            writeln!(out, "{}", join(&complete(which, &at.get(), &triple(&v))?))?;
        }
        Command::Verify { at, values } => {
            let s = Solution { x: triple(&values[..3]), d: triple(&values[3..]) };
            let rep = verify_solution(&at.get(), &s)?;
            for (name, r) in rep.residuals() {
                writeln!(out, "{name}\t{r}")?;
            }
            let pos = rep.positivity.map_or("unknown".to_string(), |p| p.to_string());
            writeln!(out, "all_pass={} positivity={pos}", rep.all_pass)?;
            if !rep.all_pass {
                return Ok(1);
            }
        }
        Command::RingVerify { which, at } => {
            let branches = ring_verify_branches(&at.get(), which)?;
            let mut ok = true;
            for br in &branches {
                let status = match &br.outcome {
                    BranchOutcome::Verified(r) if r.all_pass => "pass",
                    BranchOutcome::Verified(_) => "FAIL",
                    BranchOutcome::SingularCompletion => "singular completion",
                };
                ok &= !matches!(&br.outcome, BranchOutcome::Verified(r) if !r.all_pass);
                writeln!(out, "{}\t{status}", br.modulus.display_with("w"))?;
            }
            writeln!(out, "branches={} all_pass={ok}", branches.len())?;
            if !ok {
                return Ok(1);
            }
        }
        Command::Search(a) => {
            let cfg = SearchConfig {
                height_b: a.height_b,
                height_c: a.height_c,
                instance: a.instance,
                root_height_bound: a.root_height_bound,
                require_positive: a.require_positive,
                parallelism: a.jobs,
            };
            match a.output {
                Some(path) => {
                    let summary = run_search(&cfg, &path, a.checkpoint.as_deref(), a.resume, a.max_cells)?;
                    let cp = &summary.checkpoint;
                    eprintln!("cells {}/{} (this run {})", cp.next_cell, cp.total_cells, summary.processed);
                    for (tag, n) in &cp.counts {
                        eprintln!("{tag}\t{n}");
                    }
                }
                None => {
                    for rec in scan(&cfg)? {
                        writeln!(out, "{rec}")?;
                    }
                }
            }
        }
        Command::DegreeProbe { seed } => {
            for (which, expected) in [(Instance::First, 42), (Instance::Second, 40)] {
                let p = degree_probe(which, seed)?;
                writeln!(
                    out,
                    "{which}\tdegree={}\texpected={expected}\tcoprime_on_line={}",
                    p.total_degree, p.coprime_on_line
                )?;
            }
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match run(cli.command, &mut out) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            let _ = out.flush();
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
