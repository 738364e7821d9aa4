//! Integer and rational root extraction on top of `num-bigint`/`num-rational`.
//!
//! Nothing here uses floating point.

use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

use crate::{Error, Integer, Rational, Result};

/// Trial-division bound for squarefree extraction.
pub const SQUAREFREE_BOUND: u64 = 1_000_000;

/// Shorthand for building small rationals. Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(num.into(), den.into())
}

/// Builds the canonical fraction `num/den`.
pub fn rat_normalize(num: Integer, den: Integer) -> Result<Rational> {
    if den.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(Rational::new(num, den))
}

pub fn checked_div(x: &Rational, y: &Rational) -> Result<Rational> {
    if y.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(x / y)
}

/// Parses `"p"`, `"-p"`, `"p/q"` or `"-p/q"` (surrounding whitespace allowed).
pub fn parse_rational(text: &str) -> Result<Rational> {
    let bad = || Error::InvalidRational(text.to_string());
    let s = text.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (s, None),
    };
    let digits_ok = |t: &str| !t.is_empty() && t.bytes().all(|c| c.is_ascii_digit());
    let unsigned = num.strip_prefix('-').unwrap_or(num);
    if !digits_ok(unsigned) {
        return Err(bad());
    }
    let num: Integer = num.parse().map_err(|_| bad())?;
    let den: Integer = match den {
        Some(d) if digits_ok(d) => d.parse().map_err(|_| bad())?,
        Some(_) => return Err(bad()),
        None => Integer::one(),
    };
    if den.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(Rational::new(num, den))
}

/// `⌊√n⌋` by Newton iteration from above.
pub fn isqrt_floor(n: &Integer) -> Result<Integer> {
    if n.is_negative() {
        return Err(Error::NegativeInput("isqrt_floor"));
    }
    Ok(isqrt_nonneg(n))
}

fn isqrt_nonneg(n: &Integer) -> Integer {
    if *n < Integer::from(2) {
        return n.clone();
    }
    let mut x = Integer::one() << n.bits().div_ceil(2);
    loop {
        let y = (&x + n / &x) >> 1;
        if y >= x {
            return x;
        }
        x = y;
    }
}

/// `⌊∛n⌋` for `n ≥ 0`, by Newton iteration from above.
pub(crate) fn icbrt_floor(n: &Integer) -> Integer {
    debug_assert!(!n.is_negative());
    if *n < Integer::from(8) {
        return if n.is_zero() { Integer::zero() } else { Integer::one() };
    }
    let mut x = Integer::one() << n.bits().div_ceil(3);
    loop {
        let y = (&x * 2u32 + n / (&x * &x)) / 3u32;
        if y >= x {
            return x;
        }
        x = y;
    }
}

/// Cube root truncated toward zero.
pub(crate) fn icbrt_trunc(n: &Integer) -> Integer {
    let r = icbrt_floor(&n.abs());
    if n.is_negative() {
        -r
    } else {
        r
    }
}

fn exact_isqrt(n: &Integer) -> Option<Integer> {
    let r = isqrt_nonneg(n);
    (&r * &r == *n).then_some(r)
}

/// Rational square root if one exists.
pub fn sqrt_rational_exact(q: &Rational) -> Result<Option<Rational>> {
    if q.is_negative() {
        return Err(Error::NegativeInput("sqrt_rational_exact"));
    }
    Ok(exact_isqrt(q.numer())
        .zip(exact_isqrt(q.denom()))
        .map(|(n, d)| Rational::new(n, d)))
}

/// Rational cube root if one exists, sign preserved.
pub fn cbrt_rational_exact(q: &Rational) -> Option<Rational> {
    let exact = |n: &Integer| {
        let r = icbrt_trunc(n);
        (&r * &r * &r == *n).then_some(r)
    };
    exact(q.numer())
        .zip(exact(q.denom()))
        .map(|(n, d)| Rational::new(n, d))
}

/// Splits a positive integer into `coeff² · radicand`, pulling out square
/// factors found by trial division up to [`SQUAREFREE_BOUND`]. A leftover
/// cofactor above the bound is absorbed only when it is itself a perfect square.
fn split_square(n: &Integer) -> (Integer, Integer) {
    debug_assert!(n.is_positive());
    let mut rest = n.clone();
    let mut coeff = Integer::one();
    let mut radicand = Integer::one();
    let mut p: u64 = 2;
    while p <= SQUAREFREE_BOUND {
        let pb = Integer::from(p);
        if &pb * &pb > rest {
            break;
        }
        let mut odd = false;
        loop {
            let (q, r) = rest.div_rem(&pb);
            if !r.is_zero() {
                break;
            }
            rest = q;
            odd = !odd;
            if !odd {
                coeff *= &pb;
            }
        }
        if odd {
            radicand *= &pb;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if !rest.is_one() {
        match exact_isqrt(&rest) {
            Some(r) => coeff *= r,
            None => radicand *= rest,
        }
    }
    (coeff, radicand)
}

/// Writes `q > 0` as `coeff² · radicand` with `coeff > 0` and an integer radicand.
///
/// `168259/6912` becomes `(43/144, 273)`.
pub fn squarefree_decompose(q: &Rational) -> Result<(Rational, Integer)> {
    if !q.is_positive() {
        return Err(Error::NonPositiveInput("squarefree_decompose"));
    }
    let (cn, rn) = split_square(q.numer());
    let (cd, rd) = split_square(q.denom());
    // n/d = (cn/cd)² · rn/rd = (cn / (cd·rd))² · rn·rd
    let coeff = Rational::new(cn, cd * &rd);
    Ok((coeff, rn * rd))
}

/// Ten to the `k`.
pub(crate) fn pow10(k: u32) -> Integer {
    num_traits::pow(Integer::from(10), k as usize)
}


#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn int(s: &str) -> Integer {
        s.parse().unwrap()
    }

    // Independent oracle: plain bisection on [0, n + 1).
    fn isqrt_bisect(n: &Integer) -> Integer {
        let (mut lo, mut hi) = (Integer::zero(), n + 1u32);
        while &hi - &lo > Integer::one() {
            let mid = (&lo + &hi) >> 1;
            if &mid * &mid <= *n {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        lo
    }

    #[test]
    fn normalize_examples() {
        assert_eq!(rat_normalize(2.into(), 4.into()).unwrap(), rat(1, 2));
        let r = rat_normalize((-3).into(), (-6).into()).unwrap();
        assert_eq!((r.numer().clone(), r.denom().clone()), (1.into(), 2.into()));
        let z = rat_normalize(0.into(), 5.into()).unwrap();
        assert_eq!((z.numer().clone(), z.denom().clone()), (0.into(), 1.into()));
        assert_eq!(rat_normalize(1.into(), 0.into()), Err(Error::DivisionByZero));
        assert_eq!(Error::DivisionByZero.to_string(), "division by zero");
    }

    #[test]
    fn field_ops() {
        assert_eq!(rat(64, 27) + rat(5625, 256), rat(168259, 6912));
        assert_eq!(rat(-1, 27) + rat(9, 256), rat(-13, 6912));
        assert_eq!(rat(1, 2) * rat(1, 2), rat(1, 4));
        assert!(checked_div(&rat(1, 2), &rat(0, 1)).is_err());
        assert!(rat(-1, 3) < rat(1, 4));
    }

    #[test]
    fn parse_rationals() {
        assert_eq!(parse_rational("-1/3").unwrap(), rat(-1, 3));
        assert_eq!(parse_rational(" 75/16 ").unwrap(), rat(75, 16));
        assert_eq!(parse_rational("12").unwrap(), rat(12, 1));
        assert_eq!(parse_rational("4/6").unwrap(), rat(2, 3));
        for bad in ["", "-", "1/", "/2", "1/-2", "a", "1.5", "--1", "+3"] {
            assert!(parse_rational(bad).is_err(), "{bad}");
        }
        assert_eq!(parse_rational("1/0"), Err(Error::DivisionByZero));
    }

    #[test]
    fn isqrt_examples() {
        assert_eq!(isqrt_floor(&int("0")).unwrap(), int("0"));
        assert_eq!(isqrt_floor(&int("273")).unwrap(), int("16"));
        let n = int("273") * pow10(18);
        assert_eq!(isqrt_bisect(&n), int("16522711641"));
        assert_eq!(isqrt_floor(&n).unwrap(), int("16522711641"));
        assert!(isqrt_floor(&int("-1")).is_err());
    }

    #[test]
    fn exact_roots() {
        assert_eq!(sqrt_rational_exact(&rat(9, 4)).unwrap(), Some(rat(3, 2)));
        assert_eq!(sqrt_rational_exact(&rat(16, 1)).unwrap(), Some(rat(4, 1)));
        assert_eq!(sqrt_rational_exact(&rat(273, 1)).unwrap(), None);
        assert!(sqrt_rational_exact(&rat(-1, 1)).is_err());
        assert_eq!(cbrt_rational_exact(&rat(8, 1)), Some(rat(2, 1)));
        assert_eq!(cbrt_rational_exact(&rat(-27, 64)), Some(rat(-3, 4)));
        assert_eq!(cbrt_rational_exact(&rat(2, 1)), None);
        assert_eq!(cbrt_rational_exact(&rat(0, 1)), Some(rat(0, 1)));
    }

    #[test]
    fn squarefree_examples() {
        assert_eq!(squarefree_decompose(&rat(168259, 6912)).unwrap(), (rat(43, 144), int("273")));
        assert_eq!(squarefree_decompose(&rat(39, 20736)).unwrap(), (rat(1, 144), int("39")));
        assert_eq!(squarefree_decompose(&rat(4, 1)).unwrap(), (rat(2, 1), int("1")));
        assert!(squarefree_decompose(&rat(0, 1)).is_err());
        assert!(squarefree_decompose(&rat(-3, 1)).is_err());
    }

    #[test]
    fn squarefree_above_bound() {
        // 1000003 is prime and above the trial-division bound.
        let p = int("1000003");
        let q = Rational::from_integer(&p * &p * 5u32);
        assert_eq!(squarefree_decompose(&q).unwrap(), (Rational::from_integer(p.clone()), int("5")));
        let q = Rational::from_integer(&p * &p * &p * 7u32);
        let (c, r) = squarefree_decompose(&q).unwrap();
        assert_eq!(&c * &c * Rational::from_integer(r), q);
    }

    fn arb_big() -> impl Strategy<Value = Integer> {
        proptest::collection::vec(any::<u32>(), 1..5).prop_map(|limbs| {
            limbs.into_iter().fold(Integer::zero(), |acc, l| (acc << 32) + l) % pow10(40)
        })
    }

    fn arb_pos_rat() -> impl Strategy<Value = Rational> {
        (1i64..1_000_000, 1i64..1_000_000, 1i64..500).prop_map(|(n, d, sq)| rat(n * sq * sq, d))
    }

    proptest! {
        #[test]
        fn isqrt_brackets(n in arb_big()) {
            let r = isqrt_floor(&n).unwrap();
            prop_assert!(&r * &r <= n);
            let r1 = &r + 1u32;
            prop_assert!(&r1 * &r1 > n);
            prop_assert_eq!(r, isqrt_bisect(&n));
        }

        #[test]
        fn icbrt_brackets(n in arb_big(), neg in any::<bool>()) {
            let n = if neg { -n } else { n };
            let r = icbrt_trunc(&n);
            let a = r.abs();
            prop_assert!(&a * &a * &a <= n.abs());
            let a1 = &a + 1u32;
            prop_assert!(&a1 * &a1 * &a1 > n.abs());
        }

        #[test]
        fn normalize_idempotent(n in -10_000i64..10_000, d in 1i64..10_000, m in 1i64..50) {
            let q = rat_normalize((n * m).into(), (d * m).into()).unwrap();
            let again = rat_normalize(q.numer().clone(), q.denom().clone()).unwrap();
            prop_assert_eq!(&q, &again);
            prop_assert!(q.denom().is_positive());
            prop_assert!(q.numer().gcd(q.denom()).is_one());
            let r = rat(n, d);
            prop_assert_eq!(q == r, (n * m) * d == n * (d * m));
            let other = rat(7, 3);
            prop_assert_eq!(q < other, n * 3 < 7 * d);
        }

        #[test]
        fn squarefree_reconstructs(q in arb_pos_rat()) {
            let (c, r) = squarefree_decompose(&q).unwrap();
            prop_assert!(c.is_positive());
            prop_assert!(r.is_positive());
            prop_assert_eq!(&c * &c * Rational::from_integer(r.clone()), q.clone());
            if let Some(root) = sqrt_rational_exact(&q).unwrap() {
                prop_assert_eq!((c, r), (root, Integer::one()));
            }
        }
    }
}
