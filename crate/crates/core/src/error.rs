use std::io;

use thiserror::Error;

use crate::coeffs::SingularityReport;
use crate::polyalg::SplitEvent;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("division by zero")]
    DivisionByZero,
    #[error("square root of a negative rational")]
    NegativeInput,
    #[error("empty interval: lower bound is not below upper bound")]
    EmptyInterval,
    #[error("cannot parse rational from {0:?}")]
    Parse(String),

    #[error("gcd of two zero polynomials")]
    BothZero,
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("invalid modulus: {0}")]
    BadModulus(&'static str),
    #[error("ring elements live modulo different polynomials")]
    ModulusMismatch,
    #[error("zero element has no inverse")]
    ZeroElement,
    #[error("linear system is singular")]
    SingularSystem,
    /// A zero divisor was met while inverting modulo a reducible polynomial.
    /// Callers that understand dynamic evaluation retry in each factor ring.
    #[error("modulus splits into factors of degree {} and {}", .0.factors[0].degree().unwrap_or(0), .0.factors[1].degree().unwrap_or(0))]
    Split(SplitEvent),

    #[error("singular parameter point: {0}")]
    SingularPoint(SingularityReport),
    #[error("leading coefficient is zero")]
    LeadingZero,
    #[error("degenerate depressed cubic (B0 = 0 or B1 = 0)")]
    DegenerateDepression,
    #[error("triple does not satisfy y1+y2+y3 = -1 and e2 = 0")]
    NotReducedTriple,
    #[error("no rational witness for the ordered triple")]
    NoRationalWitness,
    #[error("w = 1 or w = -1 makes the root formulas undefined")]
    WDegenerate,
    #[error("w is not a root of the sextic")]
    NotAWitness,
    #[error("completion system has zero determinant")]
    SingularCompletion,

    #[error("invalid search configuration: {0}")]
    ConfigInvalid(String),
    #[error("checkpoint does not match the search configuration")]
    CheckpointMismatch,
    #[error("checkpoint is corrupt: {0}")]
    CheckpointCorrupt(String),
    #[error(transparent)]
    Io(#[from] io::Error),
}
