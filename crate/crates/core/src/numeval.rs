//! Base-10 fixed-point evaluation with explicit error bounds.
//!
//! Square and cube roots are computed on scaled integers (`isqrt`/`icbrt`), so
//! every approximation has a provable absolute error. Internal work carries
//! [`GUARD_DIGITS`] extra digits; final results are rounded half away from zero.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

use crate::exact::{icbrt_trunc, isqrt_floor, pow10};
use crate::{DepressedCubic, Error, Integer, QuadSurd, Rational, Result};

pub const GUARD_DIGITS: u32 = 5;

/// `mantissa · 10^(−scale)`.
#[derive(Clone, Debug)]
pub struct FixedDecimal {
    mantissa: Integer,
    scale: u32,
}

/// Divides rounding half away from zero. `den > 0`.
fn div_round(num: &Integer, den: &Integer) -> Integer {
    let (q, r) = num.div_rem(den);
    if (r.abs() * 2u32) >= *den {
        if num.is_negative() {
            q - 1u32
        } else {
            q + 1u32
        }
    } else {
        q
    }
}

impl FixedDecimal {
    pub fn new(mantissa: Integer, scale: u32) -> Self {
        Self { mantissa, scale }
    }

    pub fn zero() -> Self {
        Self::new(Integer::zero(), 0)
    }

    pub fn mantissa(&self) -> &Integer {
        &self.mantissa
    }

    pub fn scale(&self) -> u32 {
        self.scale
    }

    /// Nearest value with `scale` digits, ties away from zero.
    pub fn from_rational(q: &Rational, scale: u32) -> Self {
        Self::new(div_round(&(q.numer() * pow10(scale)), q.denom()), scale)
    }

    /// Truncates toward zero at `scale` digits.
    pub fn from_rational_trunc(q: &Rational, scale: u32) -> Self {
        Self::new((q.numer() * pow10(scale)) / q.denom(), scale)
    }

    pub fn to_rational(&self) -> Rational {
        Rational::new(self.mantissa.clone(), pow10(self.scale))
    }

    /// Re-rounds to `scale` digits (ties away from zero); widening is exact.
    pub fn round(&self, scale: u32) -> Self {
        match scale.cmp(&self.scale) {
            Ordering::Equal => self.clone(),
            Ordering::Greater => Self::new(&self.mantissa * pow10(scale - self.scale), scale),
            Ordering::Less => Self::new(div_round(&self.mantissa, &pow10(self.scale - scale)), scale),
        }
    }

    pub fn abs(&self) -> Self {
        Self::new(self.mantissa.abs(), self.scale)
    }

    pub fn is_zero(&self) -> bool {
        self.mantissa.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.mantissa.is_negative()
    }

    fn aligned(&self, other: &Self) -> (Integer, Integer, u32) {
        let scale = self.scale.max(other.scale);
        (self.round(scale).mantissa, other.round(scale).mantissa, scale)
    }

    pub fn add(&self, other: &Self) -> Self {
        let (x, y, scale) = self.aligned(other);
        Self::new(x + y, scale)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let (x, y, scale) = self.aligned(other);
        Self::new(x - y, scale)
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::new(&self.mantissa * &other.mantissa, self.scale + other.scale)
    }

    pub fn neg(&self) -> Self {
        Self::new(-&self.mantissa, self.scale)
    }

    /// `|self − other| ≤ 10^(−digits)`.
    pub fn within(&self, other: &Self, digits: u32) -> bool {
        let diff = self.sub(other).abs();
        diff.to_rational() <= Rational::new(Integer::one(), pow10(digits))
    }

    /// Decimal text with trailing zeros removed (`0.2500` → `0.25`).
    pub fn to_trimmed_string(&self) -> String {
        let s = self.to_string();
        if s.contains('.') {
            s.trim_end_matches('0').trim_end_matches('.').to_string()
        } else {
            s
        }
    }
}

impl PartialEq for FixedDecimal {
    fn eq(&self, other: &Self) -> bool {
        let (x, y, _) = self.aligned(other);
        x == y
    }
}

impl Eq for FixedDecimal {}

impl PartialOrd for FixedDecimal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for FixedDecimal {
    fn cmp(&self, other: &Self) -> Ordering {
        let (x, y, _) = self.aligned(other);
        x.cmp(&y)
    }
}

/// Always prints exactly `scale` fractional digits, with `.` as separator.
impl fmt::Display for FixedDecimal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = self.mantissa.abs().to_string();
        let sign = if self.mantissa.is_negative() { "-" } else { "" };
        let scale = self.scale as usize;
        if scale == 0 {
            return write!(f, "{sign}{digits}");
        }
        let padded = format!("{digits:0>width$}", width = scale + 1);
        let (int, frac) = padded.split_at(padded.len() - scale);
        write!(f, "{sign}{int}.{frac}")
    }
}

impl FromStr for FixedDecimal {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let bad = || Error::InvalidRational(text.to_string());
        let s = text.trim();
        let (neg, body) = match s.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, s),
        };
        let (int, frac) = body.split_once('.').unwrap_or((body, ""));
        let ok = |t: &str| t.bytes().all(|c| c.is_ascii_digit());
        if int.is_empty() || !ok(int) || !ok(frac) {
            return Err(bad());
        }
        let mantissa: Integer = format!("{int}{frac}").parse().map_err(|_| bad())?;
        let mantissa = if neg { -mantissa } else { mantissa };
        Ok(Self::new(mantissa, frac.len() as u32))
    }
}

/// `re + im·i` in fixed point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexDecimal {
    pub re: FixedDecimal,
    pub im: FixedDecimal,
}

impl ComplexDecimal {
    pub fn new(re: FixedDecimal, im: FixedDecimal) -> Self {
        Self { re, im }
    }

    pub fn real(re: FixedDecimal) -> Self {
        let scale = re.scale();
        Self::new(re, FixedDecimal::new(Integer::zero(), scale))
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    /// Both parts within `10^(−digits)`.
    pub fn within(&self, other: &Self, digits: u32) -> bool {
        self.re.within(&other.re, digits) && self.im.within(&other.im, digits)
    }

    pub fn round(&self, scale: u32) -> Self {
        Self::new(self.re.round(scale), self.im.round(scale))
    }
}

impl fmt::Display for ComplexDecimal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", self.re);
        }
        let sign = if self.im.is_negative() { '-' } else { '+' };
        write!(f, "{} {} {}i", self.re, sign, self.im.abs())
    }
}

/// Result of evaluating a [`QuadSurd`]: real when `D ≥ 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Evaluated {
    Real(FixedDecimal),
    Complex(ComplexDecimal),
}

impl Evaluated {
    pub fn to_complex(&self) -> ComplexDecimal {
        match self {
            Evaluated::Real(x) => ComplexDecimal::real(x.clone()),
            Evaluated::Complex(z) => z.clone(),
        }
    }
}

/// `⌊√q⌋` at `scale` digits; error below `10^(−scale)`.
pub(crate) fn sqrt_trunc(q: &Rational, scale: u32) -> FixedDecimal {
    debug_assert!(!q.is_negative());
    let scaled = (q.numer() * pow10(2 * scale)) / q.denom();
    FixedDecimal::new(isqrt_floor(&scaled).expect("non-negative"), scale)
}

/// `∛q` truncated toward zero at `scale` digits; error below `10^(−scale)`.
pub(crate) fn cbrt_trunc(q: &Rational, scale: u32) -> FixedDecimal {
    let scaled = (q.numer() * pow10(3 * scale)) / q.denom();
    FixedDecimal::new(icbrt_trunc(&scaled), scale)
}

/// `sign(k)·√(k²·q)`, i.e. `k√q` computed under a single root.
pub(crate) fn scaled_sqrt_trunc(k: &Rational, q: &Rational, scale: u32) -> FixedDecimal {
    let r = sqrt_trunc(&(k * k * q), scale);
    if k.is_negative() {
        r.neg()
    } else {
        r
    }
}

/// `√q` to `digits` places, `|result − √q| ≤ 10^(−digits)`.
pub fn eval_sqrt(q: &Rational, digits: u32) -> Result<FixedDecimal> {
    if q.is_negative() {
        return Err(Error::NegativeInput("eval_sqrt"));
    }
    Ok(sqrt_trunc(q, digits + GUARD_DIGITS).round(digits))
}

/// Real (sign-preserving) cube root to `digits` places.
pub fn eval_cbrt(q: &Rational, digits: u32) -> FixedDecimal {
    cbrt_trunc(q, digits + GUARD_DIGITS).round(digits)
}

/// Numeric value of `t + s√D`: real for `D ≥ 0`, `t + (s√|D|)·i` otherwise.
pub fn eval_quadext(x: &QuadSurd, digits: u32) -> Evaluated {
    let work = digits + GUARD_DIGITS;
    let d = x.radicand();
    let surd = scaled_sqrt_trunc(x.s(), &d.abs(), work);
    if d.is_negative() {
        Evaluated::Complex(ComplexDecimal::new(
            FixedDecimal::from_rational(x.t(), digits),
            surd.round(digits),
        ))
    } else {
        let sum = surd.to_rational() + x.t();
        Evaluated::Real(FixedDecimal::from_rational(&sum, digits))
    }
}

/// Exact `x³ + 3ax − 2b` for a rational `x`.
pub(crate) fn residual_exact(d: &DepressedCubic<Rational>, x: &Rational) -> Rational {
    d.eval(x)
}

/// Magnitude of `x³ + 3ax − 2b` at the complex point `x`.
///
/// The polynomial is evaluated exactly on the decimal input; the magnitude is
/// then reported with `3·scale + 6` fractional digits.
pub fn residual(d: &DepressedCubic<Rational>, x: &ComplexDecimal) -> FixedDecimal {
    let scale = 3 * x.re.scale().max(x.im.scale()) + 6;
    let (re, im) = (x.re.to_rational(), x.im.to_rational());
    if im.is_zero() {
        return FixedDecimal::from_rational(&residual_exact(d, &re).abs(), scale);
    }
    // (re + i·im)³ + 3a(re + i·im) − 2b
    let three = Rational::from_integer(3.into());
    let re3 = &re * &re * &re - &three * &re * &im * &im;
    let im3 = &three * &re * &re * &im - &im * &im * &im;
    let out_re = re3 + &three * &d.a * &re - Rational::from_integer(2.into()) * &d.b;
    let out_im = im3 + &three * &d.a * &im;
    let mag2 = &out_re * &out_re + &out_im * &out_im;
    sqrt_trunc(&mag2, scale + GUARD_DIGITS).round(scale)
}
