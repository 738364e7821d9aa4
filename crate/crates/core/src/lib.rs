//! Exact solver for cubic equations `x³ + 3ax = 2b` over the rationals.
//!
//! Cardano's formula writes the real root as a difference of two cube roots,
//! `x = ∛(√D + b) − ∛(√D − b)` with `D = a³ + b²`. Whenever the cubic has a
//! rational root `x`, both cube roots collapse to quadratic surds:
//!
//! ```text
//! ∛(√D + b) = s√D + t,   ∛(√D − b) = s√D − t,   t = x/2,  s = t / (b − 2at)
//! ```
//!
//! This crate finds such roots exactly, builds and verifies the surds, and
//! evaluates everything to a requested number of decimal digits without
//! touching machine floating point. When `D < 0` (three real roots) the same
//! surds are complex and the remaining roots come from the cube roots of unity.
//!
//! The algebraic types ([`QuadExt`], [`DepressedCubic`], [`GeneralCubic`],
//! [`DenestedPair`]) are generic over any [`Scalar`]; the exact algorithms
//! (root search, verification, squarefree display) run over [`Rational`].
//!
//! ```
//! use cubic_surd::{rat, denest, DepressedCubic};
//!
//! let cubic = DepressedCubic::new(rat(4, 3), rat(75, 16));
//! let pair = denest(&cubic, &rat(3, 2)).unwrap();
//! assert_eq!(pair.t, rat(3, 4));
//! assert_eq!(pair.s, rat(12, 43));
//! ```

use std::fmt::Debug;
use std::ops::Neg;

use num_traits::Num;

pub mod cardano;
pub mod cubic;
mod error;
pub mod exact;
pub mod format;
pub mod numeval;
pub mod parse;
pub mod quad;
pub mod solve;

pub use cardano::{
    cardano_numeric, denest, denest_real_general, denest_verify, enumerate_branches, Branches,
    CardanoNumeric, DenestedPair, NumericDenesting, UnitRoot,
};
pub use cubic::{
    deflate, rational_root_search, rational_roots, Classification, Deflation, DepressedCubic,
    GeneralCubic,
};
pub use error::{Error, Result};
pub use exact::{
    cbrt_rational_exact, isqrt_floor, parse_rational, rat, rat_normalize, sqrt_rational_exact,
    squarefree_decompose,
};
pub use format::{format_equation, format_rational, format_surd, OutputFormat};
pub use numeval::{eval_cbrt, eval_quadext, eval_sqrt, residual, ComplexDecimal, Evaluated, FixedDecimal};
pub use parse::{parse_equation, ParsedEquation};
pub use quad::QuadExt;
pub use solve::{solve, CubicInput, ExactValue, Provenance, Root, SolveOptions, SolveResult};

/// Arbitrary-precision signed integer.
pub type Integer = num_bigint::BigInt;
/// Canonical fraction `num/den` with `den > 0` and `gcd(num, den) = 1`.
pub type Rational = num_rational::BigRational;

/// Element `t + s√D` of `Q(√D)`.
pub type QuadSurd = QuadExt<Rational>;
/// Depressed cubic with exact coefficients.
pub type DepressedCubicQ = DepressedCubic<Rational>;
/// General cubic with exact coefficients.
pub type GeneralCubicQ = GeneralCubic<Rational>;
/// Exact denested surd pair.
pub type DenestedPairQ = DenestedPair<Rational>;

/// Field-like scalar the algebraic types are generic over.
///
/// Implemented for `f32`, `f64` and [`Rational`]. Exactness-dependent
/// operations only exist for [`Rational`].
pub trait Scalar: Clone + PartialOrd + Debug + Num + Neg<Output = Self> {
    /// The scalar `n`, built without any lossy conversion.
    fn from_small(n: u32) -> Self {
        let mut acc = Self::zero();
        for _ in 0..n {
            acc = acc + Self::one();
        }
        acc
    }
}

impl<T> Scalar for T where T: Clone + PartialOrd + Debug + Num + Neg<Output = T> {}
