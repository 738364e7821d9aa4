//! End-to-end solving: depress, classify, search for a rational root, then
//! denest and deflate, falling back to numerics when no rational root exists.

use std::fmt;

use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

use crate::cardano::{cardano_raw_x, NumericDenesting};
use crate::numeval::{sqrt_trunc, GUARD_DIGITS};
use crate::{
    cardano_numeric, cbrt_rational_exact, deflate, denest, denest_real_general, denest_verify,
    enumerate_branches, eval_quadext, rational_root_search, Branches, CardanoNumeric,
    Classification, ComplexDecimal, DenestedPair, DepressedCubic, Error, FixedDecimal,
    GeneralCubic, Integer, QuadSurd, Rational, Result,
};

pub const DEFAULT_DIGITS: u32 = 10;
pub const MAX_DIGITS: u32 = 1000;

/// Either form of input accepted by [`solve`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CubicInput {
    General(GeneralCubic<Rational>),
    Depressed(DepressedCubic<Rational>),
}

impl From<GeneralCubic<Rational>> for CubicInput {
    fn from(g: GeneralCubic<Rational>) -> Self {
        CubicInput::General(g)
    }
}

impl From<DepressedCubic<Rational>> for CubicInput {
    fn from(d: DepressedCubic<Rational>) -> Self {
        CubicInput::Depressed(d)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveOptions {
    pub digits: u32,
    /// Re-check exact identities and residuals before returning.
    pub check_invariants: bool,
}

impl Default for SolveOptions {
    fn default() -> Self {
        Self { digits: DEFAULT_DIGITS, check_invariants: true }
    }
}

impl SolveOptions {
    pub fn with_digits(digits: u32) -> Self {
        Self { digits, ..Self::default() }
    }
}

/// How a root was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Provenance {
    RationalRootSearch,
    DeflateQuadratic,
    RepeatedRoot,
    NumericCardano,
    NumericDeflate,
    NumericBisection,
}

impl Provenance {
    pub fn as_str(self) -> &'static str {
        match self {
            Provenance::RationalRootSearch => "rational-root-search",
            Provenance::DeflateQuadratic => "deflate-quadratic",
            Provenance::RepeatedRoot => "repeated-root",
            Provenance::NumericCardano => "numeric-cardano",
            Provenance::NumericDeflate => "numeric-deflate",
            Provenance::NumericBisection => "numeric-bisection",
        }
    }

    pub fn is_exact(self) -> bool {
        matches!(
            self,
            Provenance::RationalRootSearch | Provenance::DeflateQuadratic | Provenance::RepeatedRoot
        )
    }
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExactValue {
    Rational(Rational),
    Quad(QuadSurd),
}

impl ExactValue {
    fn shifted(self, shift: &Rational) -> Self {
        match self {
            ExactValue::Rational(r) => ExactValue::Rational(r + shift),
            ExactValue::Quad(q) => ExactValue::Quad(q.add_scalar(shift)),
        }
    }

    pub fn eval(&self, digits: u32) -> ComplexDecimal {
        match self {
            ExactValue::Rational(r) => ComplexDecimal::real(FixedDecimal::from_rational(r, digits)),
            ExactValue::Quad(q) => eval_quadext(q, digits).to_complex(),
        }
    }
}

/// One root of the original equation (already shifted back).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Root {
    pub exact: Option<ExactValue>,
    pub numeric: ComplexDecimal,
    pub provenance: Provenance,
}

impl Root {
    fn exact(value: ExactValue, provenance: Provenance, digits: u32) -> Self {
        let numeric = value.eval(digits);
        Self { exact: Some(value), numeric, provenance }
    }

    fn numeric(numeric: ComplexDecimal, provenance: Provenance) -> Self {
        Self { exact: None, numeric, provenance }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveResult {
    pub classification: Classification,
    /// The depressed form `y³ + 3ay = 2b` that was solved.
    pub depressed: DepressedCubic<Rational>,
    /// Roots of the input are `y + shift`.
    pub shift: Rational,
    pub discriminant: Rational,
    /// Exactly three roots, counted with multiplicity.
    pub roots: Vec<Root>,
    /// Exact denesting of the depressed cubic, present iff a rational root exists and `D ≠ 0`.
    pub denesting: Option<DenestedPair<Rational>>,
    /// Numeric denesting when `D > 0` and no rational root exists.
    pub numeric_denesting: Option<NumericDenesting>,
    pub cardano: Option<CardanoNumeric>,
    pub branches: Option<Branches>,
    pub digits: u32,
}

impl SolveResult {
    pub fn has_exact_roots(&self) -> bool {
        self.roots.iter().any(|r| r.exact.is_some())
    }
}

/// Real roots of a casus-irreducibilis cubic by exact bisection on the three
/// monotone pieces separated by the critical points `±√(−a)`.
fn bisect_real_roots(d: &DepressedCubic<Rational>, digits: u32) -> [FixedDecimal; 3] {
    debug_assert!(d.a.is_negative());
    let neg_a = -&d.a;
    let bound = Rational::one() + (Rational::from_integer(3.into()) * d.a.abs()).max(Rational::from_integer(2.into()) * d.b.abs());
    // Critical-point approximation: tighten until the signs separate the roots.
    let mut prec = digits + GUARD_DIGITS;
    let r = loop {
        let r = sqrt_trunc(&neg_a, prec).to_rational();
        if d.eval(&-&r).is_positive() && d.eval(&r).is_negative() {
            break r;
        }
        prec *= 2;
    };
    // Bisect on integer mantissas m/N: clearing denominators turns each
    // evaluation into the sign of L·m³ + A·m·N² − B·N³.
    let scale = digits + GUARD_DIGITS;
    let n = crate::exact::pow10(scale);
    let l = d.a.denom().lcm(d.b.denom());
    let coef_a = (Rational::from_integer(3.into()) * &d.a * Rational::from_integer(l.clone())).to_integer();
    let coef_b = (Rational::from_integer(2.into()) * &d.b * Rational::from_integer(l.clone())).to_integer();
    let (n2, n3) = (&n * &n, &n * &n * &n);
    let sign_at = |m: &Integer| (&l * m * m * m + &coef_a * m * &n2 - &coef_b * &n3).signum();
    let scaled = |q: &Rational| q * Rational::from_integer(n.clone());
    let solve_in = |lo: &Rational, hi: &Rational| {
        let (mut lo, mut hi) = (scaled(lo).floor().to_integer(), scaled(hi).ceil().to_integer());
        let increasing = sign_at(&lo) < sign_at(&hi);
        while &hi - &lo > Integer::one() {
            let mid: Integer = (&lo + &hi) >> 1;
            let v = sign_at(&mid);
            if v.is_zero() {
                return mid;
            }
            if v.is_negative() == increasing {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        lo
    };
    [
        solve_in(&-&bound, &-&r),
        solve_in(&-&r, &r),
        solve_in(&r, &bound),
    ]
    .map(|m| FixedDecimal::new(m, scale).round(digits))
}

type ExactParts = (Vec<Root>, DenestedPair<Rational>, Option<CardanoNumeric>, Option<Branches>);

fn exact_path(
    d: &DepressedCubic<Rational>,
    x0: &Rational,
    shift: &Rational,
    opts: &SolveOptions,
) -> Result<ExactParts> {
    let digits = opts.digits;
    let pair = denest(d, x0)?;
    if opts.check_invariants && !denest_verify(&pair, d)? {
        return Err(Error::InvariantViolation("denesting failed exact verification".into()));
    }
    let def = deflate(d, x0)?;
    let mut roots = vec![Root::exact(
        ExactValue::Rational(x0.clone()).shifted(shift),
        Provenance::RationalRootSearch,
        digits,
    )];
    for q in def.roots {
        let value = match q.as_scalar() {
            Some(r) => ExactValue::Rational(r.clone()),
            None => match crate::sqrt_rational_exact(&q.radicand().abs())? {
                // perfect-square radicand: fold √D into the rational part
                Some(root) if !q.radicand().is_negative() => ExactValue::Rational(q.t() + q.s() * root),
                _ => ExactValue::Quad(q),
            },
        };
        roots.push(Root::exact(value.shifted(shift), Provenance::DeflateQuadratic, digits));
    }
    let (cardano, branches) = if d.discriminant().is_positive() {
        (Some(cardano_numeric(d, digits)?), None)
    } else {
        (None, Some(enumerate_branches(d, &pair, digits)?))
    };
    Ok((roots, pair, cardano, branches))
}

/// Solves a cubic exactly where possible, numerically otherwise.
pub fn solve(input: impl Into<CubicInput>, opts: &SolveOptions) -> Result<SolveResult> {
    let digits = opts.digits;
    if !(1..=MAX_DIGITS).contains(&digits) {
        return Err(Error::DigitsOutOfRange(digits));
    }
    let (d, shift) = match input.into() {
        CubicInput::General(g) => g.depress(),
        CubicInput::Depressed(d) => (d, Rational::zero()),
    };
    let discriminant = d.discriminant();
    let classification = d.classify();
    let mut result = SolveResult {
        classification,
        depressed: d.clone(),
        shift: shift.clone(),
        discriminant: discriminant.clone(),
        roots: Vec::with_capacity(3),
        denesting: None,
        numeric_denesting: None,
        cardano: None,
        branches: None,
        digits,
    };

    if classification == Classification::Repeated {
        // D = 0: simple root 2∛b, double root −∛b.
        match cbrt_rational_exact(&d.b) {
            Some(c) => {
                let simple = ExactValue::Rational(&c * Rational::from_integer(2.into())).shifted(&shift);
                let double = ExactValue::Rational(-c).shifted(&shift);
                result.roots.push(Root::exact(simple, Provenance::RepeatedRoot, digits));
                result.roots.push(Root::exact(double.clone(), Provenance::RepeatedRoot, digits));
                result.roots.push(Root::exact(double, Provenance::RepeatedRoot, digits));
            }
            None => {
                let work = digits + GUARD_DIGITS;
                let c = crate::numeval::cbrt_trunc(&d.b, work).to_rational();
                let simple = FixedDecimal::from_rational(&(&c * Rational::from_integer(2.into()) + &shift), digits);
                let double = FixedDecimal::from_rational(&(&shift - &c), digits);
                result.roots.push(Root::numeric(ComplexDecimal::real(simple), Provenance::NumericCardano));
                for _ in 0..2 {
                    result.roots.push(Root::numeric(ComplexDecimal::real(double.clone()), Provenance::NumericCardano));
                }
            }
        }
        return Ok(result);
    }

    if let Some(x0) = rational_root_search(&d) {
        let (roots, pair, cardano, branches) = exact_path(&d, &x0, &shift, opts)?;
        result.roots = roots;
        result.denesting = Some(pair);
        result.cardano = cardano;
        result.branches = branches;
    } else if classification == Classification::OneReal {
        let cardano = cardano_numeric(&d, digits)?;
        let work = digits + GUARD_DIGITS;
        let x = cardano_raw_x(&d, work);
        // remaining pair: −x/2 ± (√(3x² + 12a)/2)·i
        let three = Rational::from_integer(3.into());
        let re = -&x / Rational::from_integer(2.into()) + &shift;
        let inner = (&three * &x * &x + Rational::from_integer(12.into()) * &d.a).max(Rational::zero());
        let im = sqrt_trunc(&inner, work).to_rational() / Rational::from_integer(2.into());
        let real = FixedDecimal::from_rational(&(&x + &shift), digits);
        let re = FixedDecimal::from_rational(&re, digits);
        let im = FixedDecimal::from_rational(&im, digits);
        result.roots.push(Root::numeric(ComplexDecimal::real(real), Provenance::NumericCardano));
        result.roots.push(Root::numeric(ComplexDecimal::new(re.clone(), im.clone()), Provenance::NumericDeflate));
        result.roots.push(Root::numeric(ComplexDecimal::new(re, im.neg()), Provenance::NumericDeflate));
        result.numeric_denesting = denest_real_general(&d, digits).ok();
        result.cardano = Some(cardano);
    } else {
        for x in bisect_real_roots(&d, digits + GUARD_DIGITS) {
            let shifted = x.to_rational() + &shift;
            let value = FixedDecimal::from_rational(&shifted, digits);
            result.roots.push(Root::numeric(ComplexDecimal::real(value), Provenance::NumericBisection));
        }
    }

    if opts.check_invariants {
        check_roots(&result)?;
    }
    Ok(result)
}

fn check_roots(result: &SolveResult) -> Result<()> {
    if result.roots.len() != 3 {
        return Err(Error::InvariantViolation(format!("{} roots reported", result.roots.len())));
    }
    for root in &result.roots {
        if let Some(exact) = &root.exact {
            if !exact.eval(result.digits + 2).within(&root.numeric, result.digits.saturating_sub(1)) {
                return Err(Error::InvariantViolation(format!(
                    "exact root disagrees with its numeric value {}",
                    root.numeric
                )));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{parse_equation, rat, QuadExt};

    fn fd(s: &str) -> FixedDecimal {
        s.parse().unwrap()
    }

    #[test]
    fn solve_one_real() {
        let g = parse_equation("x^3 + 4x = 75/8").unwrap();
        let r = solve(g, &SolveOptions::default()).unwrap();
        assert_eq!(r.classification, Classification::OneReal);
        assert_eq!(r.roots[0].exact, Some(ExactValue::Rational(rat(3, 2))));
        let p = r.denesting.unwrap();
        assert_eq!((p.t, p.s), (rat(3, 4), rat(12, 43)));
        assert_eq!(
            r.roots[1].exact,
            Some(ExactValue::Quad(QuadExt::new(rat(-3, 4), rat(1, 2), rat(-91, 4))))
        );
        assert_eq!(r.roots[2].provenance, Provenance::DeflateQuadratic);
        assert!(r.roots[1].numeric.within(&ComplexDecimal::new(fd("-0.75"), fd("2.3848480035")), 10));
        assert!(r.cardano.is_some());
    }

    #[test]
    fn solve_casus() {
        let g = parse_equation("x^3 - x = -3/8").unwrap();
        let r = solve(g, &SolveOptions::default()).unwrap();
        assert_eq!(r.classification, Classification::ThreeReal);
        assert_eq!(r.discriminant, rat(-13, 6912));
        assert_eq!(r.roots[0].exact, Some(ExactValue::Rational(rat(1, 2))));
        assert_eq!(
            r.roots[1].exact,
            Some(ExactValue::Quad(QuadExt::new(rat(-1, 4), rat(1, 2), rat(13, 4))))
        );
        assert!(r.roots.iter().all(|x| x.numeric.is_real()));
        let p = r.denesting.unwrap();
        assert_eq!((p.t, p.s), (rat(1, 4), rat(-12, 1)));
        assert!(r.branches.is_some());
    }

    #[test]
    fn solve_irrational() {
        let g = parse_equation("x^3 + 6x = 4").unwrap();
        let r = solve(g, &SolveOptions::default()).unwrap();
        assert!(!r.has_exact_roots());
        assert!(r.denesting.is_none());
        assert_eq!(r.roots[0].numeric.re.to_string(), "0.6258168190");
        let n = r.numeric_denesting.unwrap();
        assert_eq!(n.s.to_string(), "0.4181219592");
        for root in &r.roots {
            assert!(crate::residual(&r.depressed, &root.numeric) <= fd("0.00000001"));
        }
    }

    #[test]
    fn solve_shifted_general() {
        // 2x³ + 6x² − 10 = 0 ⇔ y³ − 3y − 3 = 0 with x = y − 1; no rational root.
        let g = parse_equation("2x^3+6x^2-10=0").unwrap();
        let r = solve(g.clone(), &SolveOptions::with_digits(12)).unwrap();
        assert_eq!(r.shift, rat(-1, 1));
        assert_eq!(r.classification, Classification::OneReal);
        let x = r.roots[0].numeric.re.to_rational();
        assert!(g.eval(&x).abs() < rat(1, 1_000_000_000));

        // (x − 2)(x + 1)(x − 1/2) shifted: 2x³ − 3x² − 3x + 2
        let g = parse_equation("2x^3 - 3x^2 - 3x + 2 = 0").unwrap();
        let r = solve(g.clone(), &SolveOptions::default()).unwrap();
        for root in &r.roots {
            match root.exact.as_ref().unwrap() {
                ExactValue::Rational(q) => assert!(g.eval(q).is_zero()),
                other => panic!("expected rational roots, got {other:?}"),
            }
        }
    }

    #[test]
    fn solve_repeated() {
        let r = solve(DepressedCubic::new(rat(-1, 1), rat(1, 1)), &SolveOptions::default()).unwrap();
        assert_eq!(r.classification, Classification::Repeated);
        let vals: Vec<_> = r.roots.iter().map(|x| x.exact.clone().unwrap()).collect();
        assert_eq!(
            vals,
            [rat(2, 1), rat(-1, 1), rat(-1, 1)].map(ExactValue::Rational).to_vec()
        );
        assert!(r.denesting.is_none());
        let r = solve(DepressedCubic::new(rat(0, 1), rat(0, 1)), &SolveOptions::default()).unwrap();
        assert!(r.roots.iter().all(|x| x.exact == Some(ExactValue::Rational(rat(0, 1)))));
    }

    #[test]
    fn solve_trivial_and_degenerate() {
        let r = solve(DepressedCubic::new(rat(0, 1), rat(4, 1)), &SolveOptions::default()).unwrap();
        assert_eq!(r.roots[0].exact, Some(ExactValue::Rational(rat(2, 1))));
        let r = solve(DepressedCubic::new(rat(4, 1), rat(0, 1)), &SolveOptions::default()).unwrap();
        let p = r.denesting.unwrap();
        assert_eq!((p.t, p.s), (rat(0, 1), rat(1, 4)));
    }

    #[test]
    fn casus_without_rational_root() {
        // x³ − 3x + 1 = 0: a = −1, b = −1/2, roots 2cos(2πk/9 ...) all irrational
        let d = DepressedCubic::new(rat(-1, 1), rat(-1, 2));
        let r = solve(d.clone(), &SolveOptions::with_digits(12)).unwrap();
        assert_eq!(r.classification, Classification::ThreeReal);
        assert!(!r.has_exact_roots());
        for root in &r.roots {
            assert_eq!(root.provenance, Provenance::NumericBisection);
            assert!(crate::residual(&d, &root.numeric) <= fd("0.00000001"));
        }
        assert_eq!(r.roots[1].numeric.re.to_string(), "0.347296355334");
    }

    #[test]
    fn digits_range() {
        let d = DepressedCubic::new(rat(1, 1), rat(1, 1));
        assert_eq!(solve(d.clone(), &SolveOptions::with_digits(0)), Err(Error::DigitsOutOfRange(0)));
        assert!(solve(d, &SolveOptions::with_digits(1001)).is_err());
    }
}
