//! Cardano's formula and the denesting of its cube roots.
//!
//! For `x³ + 3ax = 2b` with a rational root `x`, put `t = x/2` and
//! `s = t/(b − 2at)`. Then
//!
//! ```text
//! w₃ = s√D + t = ∛(√D + b),   w₄ = s√D − t = ∛(√D − b),   x = w₃ − w₄
//! ```
//!
//! because `(s√D ± t)³ = (s³D + 3st²)√D ± (t³ + 3s²tD)` and the pair solves
//! `s³D + 3st² = 1`, `t³ + 3s²tD = b`. A third identity, `s²D − t² = a`,
//! says `w₃·w₄ = a`. All three are checked exactly by [`denest_verify`].
//!
//! With `D < 0` the same surds are complex; the other two roots come from
//! multiplying `w₃`, `w₄` by the cube roots of unity, see [`enumerate_branches`].

use num_traits::{One, Signed, Zero};

use crate::numeval::{cbrt_trunc, scaled_sqrt_trunc, sqrt_trunc, GUARD_DIGITS};
use crate::{
    ComplexDecimal, DepressedCubic, Error, FixedDecimal, QuadExt, QuadSurd, Rational, Result,
    Scalar,
};

/// `(t, s, D)` standing for `w₃ = s√D + t` and `w₄ = s√D − t`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DenestedPair<T> {
    pub t: T,
    pub s: T,
    pub radicand: T,
}

impl<T: Scalar> DenestedPair<T> {
    /// Applies `t = x/2`, `s = t/(b − 2at)` without any checks. Over an
    /// inexact scalar this is the numeric form of the construction.
    pub fn from_root(d: &DepressedCubic<T>, x: &T) -> Self {
        let two = T::from_small(2);
        let t = x.clone() / two.clone();
        let s = t.clone() / (d.b.clone() - two * d.a.clone() * t.clone());
        Self { t, s, radicand: d.discriminant() }
    }

    pub fn w3(&self) -> QuadExt<T> {
        QuadExt::new(self.t.clone(), self.s.clone(), self.radicand.clone())
    }

    pub fn w4(&self) -> QuadExt<T> {
        QuadExt::new(-self.t.clone(), self.s.clone(), self.radicand.clone())
    }

    /// `s³D + 3st²`, which must equal 1.
    pub fn unit_identity(&self) -> T {
        let (t, s, d) = (self.t.clone(), self.s.clone(), self.radicand.clone());
        s.clone() * s.clone() * s.clone() * d + T::from_small(3) * s * t.clone() * t
    }

    /// `t³ + 3s²tD`, which must equal `b`.
    pub fn b_identity(&self) -> T {
        let (t, s, d) = (self.t.clone(), self.s.clone(), self.radicand.clone());
        t.clone() * t.clone() * t.clone() + T::from_small(3) * s.clone() * s * t * d
    }

    /// `s²D − t² = w₃·w₄`, which must equal `a`.
    pub fn a_identity(&self) -> T {
        let (t, s, d) = (self.t.clone(), self.s.clone(), self.radicand.clone());
        s.clone() * s * d - t.clone() * t
    }
}

/// Exact denesting for a rational root `x`.
///
/// `b − 2at` vanishes only when `t = 0` (then `b = 0` and `s = 1/a`) or
/// when `D = 0`, which is rejected.
pub fn denest(d: &DepressedCubic<Rational>, x: &Rational) -> Result<DenestedPair<Rational>> {
    if !d.is_root(x) {
        return Err(Error::NotARoot);
    }
    let radicand = d.discriminant();
    if radicand.is_zero() {
        return Err(Error::RepeatedRoot);
    }
    if x.is_zero() {
        // b = 0 and D = a³ ≠ 0; s³a³ = 1.
        return Ok(DenestedPair { t: Rational::zero(), s: d.a.recip(), radicand });
    }
    Ok(DenestedPair::from_root(d, x))
}

/// True iff `s³D + 3st² = 1`, `t³ + 3s²tD = b` and `s²D − t² = a` hold exactly.
pub fn denest_verify(p: &DenestedPair<Rational>, d: &DepressedCubic<Rational>) -> Result<bool> {
    let expected = d.discriminant();
    if p.radicand != expected {
        return Err(Error::RadicandMismatch {
            left: p.radicand.to_string(),
            right: expected.to_string(),
        });
    }
    Ok(p.unit_identity().is_one() && p.b_identity() == d.b && p.a_identity() == d.a)
}

/// Numeric Cardano values `w₁ = ∛(√D + b)`, `w₂ = ∛(√D − b)`, `x = w₁ − w₂`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CardanoNumeric {
    pub w1: FixedDecimal,
    pub w2: FixedDecimal,
    pub x: FixedDecimal,
    pub digits: u32,
}

/// Cardano at working scale `work`, truncated, each value within `2·10^(−work)`.
///
/// `√D` is taken to `3·work + 3` digits: the cube root is 1/3-Hölder with
/// constant `2^(2/3)`, so that keeps the propagated error below `10^(−work−1)`
/// even when `√D ∓ b` is near zero.
fn cardano_raw(d: &DepressedCubic<Rational>, work: u32) -> (FixedDecimal, FixedDecimal, FixedDecimal) {
    let root_d = sqrt_trunc(&d.discriminant(), 3 * work + 3).to_rational();
    let w1 = cbrt_trunc(&(&root_d + &d.b), work);
    let w2 = cbrt_trunc(&(&root_d - &d.b), work);
    let x = w1.sub(&w2);
    (w1, w2, x)
}

pub(crate) fn cardano_raw_x(d: &DepressedCubic<Rational>, work: u32) -> Rational {
    cardano_raw(d, work).2.to_rational()
}

/// Evaluates Cardano's formula with real cube roots (`∛(−u) = −∛u`).
pub fn cardano_numeric(d: &DepressedCubic<Rational>, digits: u32) -> Result<CardanoNumeric> {
    if d.discriminant().is_negative() {
        return Err(Error::CasusIrreducibilis);
    }
    let (w1, w2, x) = cardano_raw(d, digits + GUARD_DIGITS);
    Ok(CardanoNumeric { w1: w1.round(digits), w2: w2.round(digits), x: x.round(digits), digits })
}

/// The denesting evaluated numerically for an arbitrary (possibly irrational) real root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NumericDenesting {
    pub x: FixedDecimal,
    pub t: FixedDecimal,
    pub s: FixedDecimal,
    pub w3: FixedDecimal,
    pub w4: FixedDecimal,
    pub digits: u32,
}

fn decimal_digits(q: &Rational) -> u32 {
    q.abs().ceil().to_integer().to_string().len() as u32
}

/// `t = x/2`, `s = t/(b − 2at)`, `w₃,₄ = s√D ± t` from the numeric Cardano root.
pub fn denest_real_general(d: &DepressedCubic<Rational>, digits: u32) -> Result<NumericDenesting> {
    let disc = d.discriminant();
    if disc.is_negative() {
        return Err(Error::CasusIrreducibilis);
    }
    let threshold = Rational::new(1.into(), crate::exact::pow10(digits));
    let probe = cardano_raw(d, digits + GUARD_DIGITS + 5).2.to_rational();
    let den = &d.b - &d.a * &probe;
    if den.abs() < threshold {
        return Err(Error::Degenerate);
    }
    // s = t/den amplifies the error in x by about |b|/den²; buy that back.
    let small = decimal_digits(&den.recip());
    let magnitude = decimal_digits(&(d.a.abs() + d.b.abs() + Rational::one()));
    let work = digits + GUARD_DIGITS + 2 * small + 2 * magnitude + 2;

    let x = cardano_raw(d, work).2.to_rational();
    let pair = DenestedPair::from_root(d, &x);
    let surd = scaled_sqrt_trunc(&pair.s, &disc, work).to_rational();
    let round = |q: &Rational| FixedDecimal::from_rational(q, digits);
    Ok(NumericDenesting {
        x: round(&x),
        t: round(&pair.t),
        s: round(&pair.s),
        w3: round(&(&surd + &pair.t)),
        w4: round(&(&surd - &pair.t)),
        digits,
    })
}

/// The non-trivial cube roots of unity `ε₁,₂ = −1/2 ± (1/2)√−3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum UnitRoot {
    Eps1,
    Eps2,
}

impl UnitRoot {
    /// Exact value in `Q(√−3)`.
    pub fn value(self) -> QuadSurd {
        let half = Rational::new(1.into(), 2.into());
        let s = match self {
            UnitRoot::Eps1 => half.clone(),
            UnitRoot::Eps2 => -half.clone(),
        };
        QuadExt::new(-half, s, Rational::from_integer((-3).into()))
    }

    pub fn inverse(self) -> Self {
        match self {
            UnitRoot::Eps1 => UnitRoot::Eps2,
            UnitRoot::Eps2 => UnitRoot::Eps1,
        }
    }
}

/// The three Cardano branches for `D < 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Branches {
    /// `w₃ − w₄`, `ε₁w₃ − ε₂w₄`, `ε₂w₃ − ε₁w₄`.
    pub roots: [ComplexDecimal; 3],
    /// `w₃`, `ε₁w₃`, `ε₂w₃`.
    pub w3: [ComplexDecimal; 3],
    /// `w₄`, `ε₂w₄`, `ε₁w₄`, paired so that each product with `w3[k]` is `a`.
    pub w4: [ComplexDecimal; 3],
    pub digits: u32,
}

type ComplexQ = (Rational, Rational);

fn cmul(x: &ComplexQ, y: &ComplexQ) -> ComplexQ {
    (&x.0 * &y.0 - &x.1 * &y.1, &x.0 * &y.1 + &x.1 * &y.0)
}

fn csub(x: &ComplexQ, y: &ComplexQ) -> ComplexQ {
    (&x.0 - &y.0, &x.1 - &y.1)
}

/// Enumerates the three roots `εᵏw₃ − ε⁻ᵏw₄` of a casus-irreducibilis cubic
/// from a verified denesting. All three must come out real.
pub fn enumerate_branches(
    d: &DepressedCubic<Rational>,
    p: &DenestedPair<Rational>,
    digits: u32,
) -> Result<Branches> {
    if !d.discriminant().is_negative() {
        return Err(Error::NotCasusIrreducibilis);
    }
    if !denest_verify(p, d)? {
        return Err(Error::UnverifiedPair);
    }
    let magnitude = decimal_digits(&(p.t.abs() + p.s.abs() * (p.radicand.abs() + Rational::one())));
    let work = digits + GUARD_DIGITS + magnitude;
    let sigma = scaled_sqrt_trunc(&p.s, &p.radicand.abs(), work).to_rational();
    let half = Rational::new(1.into(), 2.into());
    let h = sqrt_trunc(&Rational::from_integer(3.into()), work).to_rational() * &half;
    let eps1: ComplexQ = (-half.clone(), h.clone());
    let eps2: ComplexQ = (-half, -h);
    let one: ComplexQ = (Rational::one(), Rational::zero());

    let w3: ComplexQ = (p.t.clone(), sigma.clone());
    let w4: ComplexQ = (-p.t.clone(), sigma);
    let pairs = [(&one, &one), (&eps1, &eps2), (&eps2, &eps1)];

    let to_dec = |z: &ComplexQ| {
        ComplexDecimal::new(
            FixedDecimal::from_rational(&z.0, digits),
            FixedDecimal::from_rational(&z.1, digits),
        )
    };
    let mut roots = Vec::with_capacity(3);
    let mut b3 = Vec::with_capacity(3);
    let mut b4 = Vec::with_capacity(3);
    for (e, e_inv) in pairs {
        let u = cmul(e, &w3);
        let v = cmul(e_inv, &w4);
        let root = to_dec(&csub(&u, &v));
        if !root.im.within(&FixedDecimal::zero(), digits.saturating_sub(1)) {
            return Err(Error::InvariantViolation(format!("branch root {root} is not real")));
        }
        roots.push(root);
        b3.push(to_dec(&u));
        b4.push(to_dec(&v));
    }
    let arr = |v: Vec<ComplexDecimal>| -> [ComplexDecimal; 3] { v.try_into().expect("three branches") };
    Ok(Branches { roots: arr(roots), w3: arr(b3), w4: arr(b4), digits })
}
