//! Cubic equations: reduction to `x³ + 3ax = 2b`, classification, rational
//! roots and deflation.

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::exact::isqrt_floor;
use crate::{Error, Integer, QuadExt, QuadSurd, Rational, Result, Scalar};

/// `c3·x³ + c2·x² + c1·x + c0 = 0` with `c3 ≠ 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GeneralCubic<T> {
    pub c3: T,
    pub c2: T,
    pub c1: T,
    pub c0: T,
}

/// `x³ + 3ax = 2b`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DepressedCubic<T> {
    pub a: T,
    pub b: T,
}

/// Root structure, read off the sign of `D = a³ + b²`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Classification {
    /// `D > 0`: one real root and a complex-conjugate pair.
    OneReal,
    /// `D = 0`: a multiple root.
    Repeated,
    /// `D < 0`: three distinct real roots (casus irreducibilis).
    ThreeReal,
}

impl Classification {
    pub fn as_str(self) -> &'static str {
        match self {
            Classification::OneReal => "one-real",
            Classification::Repeated => "repeated",
            Classification::ThreeReal => "three-real",
        }
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl<T: Scalar> GeneralCubic<T> {
    pub fn new(c3: T, c2: T, c1: T, c0: T) -> Result<Self> {
        if c3.is_zero() {
            return Err(Error::NotACubic);
        }
        Ok(Self { c3, c2, c1, c0 })
    }

    pub fn eval(&self, x: &T) -> T {
        ((self.c3.clone() * x.clone() + self.c2.clone()) * x.clone() + self.c1.clone()) * x.clone()
            + self.c0.clone()
    }

    /// Substitutes `x = y + shift` with `shift = −c2/(3c3)`, returning the
    /// depressed cubic in `y` together with `shift`.
    pub fn depress(&self) -> (DepressedCubic<T>, T) {
        let three = T::from_small(3);
        let p2 = self.c2.clone() / self.c3.clone();
        let p1 = self.c1.clone() / self.c3.clone();
        let p0 = self.c0.clone() / self.c3.clone();
        let shift = -(p2.clone() / three.clone());
        // y³ + (p1 − p2²/3)·y + (2p2³/27 − p1p2/3 + p0) = 0
        let linear = p1.clone() - p2.clone() * p2.clone() / three.clone();
        let constant = T::from_small(2) * p2.clone() * p2.clone() * p2.clone() / T::from_small(27)
            - p1 * p2 / three.clone()
            + p0;
        let a = linear / three;
        let b = -constant / T::from_small(2);
        (DepressedCubic { a, b }, shift)
    }
}

impl<T: Scalar> DepressedCubic<T> {
    pub fn new(a: T, b: T) -> Self {
        Self { a, b }
    }

    /// `x³ + 3ax − 2b`
    pub fn eval(&self, x: &T) -> T {
        let three = T::from_small(3);
        x.clone() * x.clone() * x.clone() + three * self.a.clone() * x.clone()
            - T::from_small(2) * self.b.clone()
    }

    pub fn is_root(&self, x: &T) -> bool {
        self.eval(x).is_zero()
    }

    /// `D = a³ + b²`
    pub fn discriminant(&self) -> T {
        self.a.clone() * self.a.clone() * self.a.clone() + self.b.clone() * self.b.clone()
    }

    pub fn classify(&self) -> Classification {
        let d = self.discriminant();
        if d.is_zero() {
            Classification::Repeated
        } else if d > T::zero() {
            Classification::OneReal
        } else {
            Classification::ThreeReal
        }
    }

    /// As a general cubic with leading coefficient 1.
    pub fn to_general(&self) -> GeneralCubic<T> {
        GeneralCubic {
            c3: T::one(),
            c2: T::zero(),
            c1: T::from_small(3) * self.a.clone(),
            c0: -(T::from_small(2) * self.b.clone()),
        }
    }
}

/// Integer roots of the monic cubic `y³ + p·y + q`.
///
/// The cubic is monotone between its critical points `±√(−p/3)`, so each
/// monotone piece of `[−B, B]` (Cauchy bound `B`) is binary searched.
fn monic_integer_roots(p: &Integer, q: &Integer) -> Vec<Integer> {
    let f = |y: &Integer| y * y * y + p * y + q;
    let bound = Integer::one() + p.abs().max(q.abs());
    let mut pieces = Vec::with_capacity(3);
    if p.is_negative() {
        // r = √(−p/3); rf = ⌊r⌋, rc = ⌈r⌉
        let m = -p / 3u32;
        let rf = isqrt_floor(&m).expect("non-negative");
        let rc = if &rf * &rf * 3u32 == -p { rf.clone() } else { &rf + 1u32 };
        pieces.push((-&bound, -&rc));
        pieces.push((-&rf, rf.clone()));
        pieces.push((rc, bound));
    } else {
        pieces.push((-&bound, bound));
    }

    let mut roots: Vec<Integer> = Vec::new();
    for (lo, hi) in pieces {
        if lo > hi {
            continue;
        }
        let increasing = f(&lo) <= f(&hi);
        let (mut lo, mut hi) = (lo, hi);
        while lo <= hi {
            let mid: Integer = (&lo + &hi) >> 1;
            let v = f(&mid);
            if v.is_zero() {
                if !roots.contains(&mid) {
                    roots.push(mid);
                }
                break;
            }
            if v.is_negative() == increasing {
                lo = mid + 1u32;
            } else {
                hi = mid - 1u32;
            }
        }
    }
    roots
}

/// All distinct rational roots in divisor-method order: increasing
/// denominator, then increasing `|num|`, positive before negative.
pub fn rational_roots(d: &DepressedCubic<Rational>) -> Vec<Rational> {
    let three_a = &d.a * Rational::from_integer(3.into());
    let two_b = &d.b * Rational::from_integer(2.into());
    // x = y/L turns x³ + 3ax − 2b into the monic integer cubic y³ + 3aL²·y − 2bL³.
    let l = num_integer::lcm(three_a.denom().clone(), two_b.denom().clone());
    let l2 = &l * &l;
    let p = (three_a * Rational::from_integer(l2.clone())).to_integer();
    let q = -(two_b * Rational::from_integer(&l2 * &l)).to_integer();
    let mut roots: Vec<Rational> = monic_integer_roots(&p, &q)
        .into_iter()
        .map(|y| Rational::new(y, l.clone()))
        .collect();
    roots.sort_by(|x, y| {
        let key = |r: &Rational| (r.denom().clone(), r.numer().abs());
        key(x).cmp(&key(y)).then_with(|| y.cmp(x))
    });
    debug_assert!(roots.iter().all(|r| d.is_root(r)));
    roots
}

/// A rational root of `x³ + 3ax = 2b`, if any: the first of
/// [`rational_roots`].
pub fn rational_root_search(d: &DepressedCubic<Rational>) -> Option<Rational> {
    rational_roots(d).into_iter().next()
}

/// Factorization `x³ + 3ax − 2b = (x − x₀)(x² + x₀x + (x₀² + 3a))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Deflation {
    /// `(x₀, x₀² + 3a)`: linear and constant coefficients of the monic quadratic.
    pub quadratic: (Rational, Rational),
    /// `(−x₀ ± √(−3x₀² − 12a))/2` over radicand `−3x₀² − 12a`, `+` first.
    pub roots: [QuadSurd; 2],
}

impl Deflation {
    pub fn radicand(&self) -> &Rational {
        self.roots[0].radicand()
    }

    /// The quadratic factor evaluated at `x`, in `Q(√radicand)`.
    pub fn eval_quadratic(&self, x: &QuadSurd) -> Result<QuadSurd> {
        let (lin, con) = &self.quadratic;
        let r = x.radicand().clone();
        x.square()
            .checked_add(&x.scale(lin))?
            .checked_add(&QuadExt::from_scalar(con.clone(), r))
    }
}

pub fn deflate(d: &DepressedCubic<Rational>, x0: &Rational) -> Result<Deflation> {
    if !d.is_root(x0) {
        return Err(Error::NotARoot);
    }
    let three = Rational::from_integer(3.into());
    let constant = x0 * x0 + &three * &d.a;
    let radicand = -(&three * x0 * x0) - Rational::from_integer(12.into()) * &d.a;
    let t = -x0 / Rational::from_integer(2.into());
    let half = Rational::new(1.into(), 2.into());
    Ok(Deflation {
        quadratic: (x0.clone(), constant),
        roots: [
            QuadExt::new(t.clone(), half.clone(), radicand.clone()),
            QuadExt::new(t, -half, radicand),
        ],
    })
}
