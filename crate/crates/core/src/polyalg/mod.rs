//! Univariate polynomials over the rationals, root finding, and the
//! quotient rings used to evaluate at algebraic points.

mod divisors;
mod linsolve;
mod poly;
mod ring;
mod roots;
mod scalar;

pub use divisors::{factor_integer, is_probable_prime, rational_roots_by_divisors};
pub use linsolve::linsolve3;
pub use poly::{poly_eval, poly_gcd, square_free_decomposition, square_free_part, UniPoly};
pub use ring::{ring_add, ring_inv, ring_make, ring_mul, ring_sub, validate_modulus, Inversion, RingElem, SplitEvent};
pub use roots::{
    cauchy_bound, isolate_real_roots, rational_root_height_limit, rational_roots, rational_roots_bounded,
    rational_roots_expanded, refine, sign_variations, sturm_sequence, IsolatingInterval, RationalRootSearch,
    DEFAULT_ROOT_HEIGHT_BOUND,
};
pub use scalar::{eval_poly, Scalar};
