//! Exact-arithmetic invariants of smooth hypersurfaces in abelian varieties.
//!
//! The crate is organised bottom-up:
//!
//! * [`eulerian`]: big-integer Eulerian numbers, binomials and factorials.
//! * [`hodge`]: Euler characteristics and Hodge–Tate multiplicities of a
//!   degree-`d` hypersurface in an `n`-dimensional abelian variety.
//! * [`conditions`]: adjoint Hodge numbers for GL/GSp/GO structure groups,
//!   the piecewise-linear `T` function and the numerical conditions built on
//!   them.
//! * [`wedge`]: brute-force solver and classifier for the wedge-power
//!   equation relating binomial products to Eulerian rows.
//! * [`sequences`]: the `a(i)`/`d(i)` sequences, Vieta descent for
//!   `a² − 4ab + b² = a + b`, and intersection-number admissibility.
//! * [`battery`]: declarative Eulerian-number inequalities with exhaustive
//!   finite checks and asymptotic-dominance certificates.
//!
//! All verdicts are computed in exact integer or rational arithmetic.

pub mod battery;
pub mod conditions;
pub mod error;
pub mod eulerian;
pub mod hodge;
pub mod sequences;
pub mod wedge;

pub use error::{Error, Result};

/// Arbitrary-precision signed integer.
pub type ExactInt = num_bigint::BigInt;

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
pub type ExactRational = num_rational::BigRational;
