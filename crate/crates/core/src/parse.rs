//! Polynomial equation parser.
//!
//! ```text
//! equation := poly "=" poly
//! poly     := sign? term (("+" | "-") term)*
//! term     := rational? "*"? var? ("^" digit)?
//! rational := integer ("/" positive-integer)?
//! ```
//!
//! One single-letter variable per equation; whitespace is ignored.

use num_traits::Zero;

use crate::{Error, GeneralCubic, Integer, Rational, Result};

/// Both sides of an equation as coefficient arrays indexed by degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParsedEquation {
    pub lhs: [Rational; 4],
    pub rhs: [Rational; 4],
    pub var: Option<char>,
}

impl ParsedEquation {
    /// Moves everything to the left-hand side.
    pub fn into_cubic(self) -> Result<GeneralCubic<Rational>> {
        let [l0, l1, l2, l3] = self.lhs;
        let [r0, r1, r2, r3] = self.rhs;
        GeneralCubic::new(l3 - r3, l2 - r2, l1 - r1, l0 - r0)
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
    var: Option<char>,
}

fn zeros() -> [Rational; 4] {
    std::array::from_fn(|_| Rational::zero())
}

impl<'a> Parser<'a> {
    fn error<T>(&self, pos: usize, msg: impl Into<String>) -> Result<T> {
        Err(Error::Syntax { pos, msg: msg.into() })
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.src[self.pos..].chars().next() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += c.len_utf8();
        Some(c)
    }

    fn integer(&mut self) -> Option<Integer> {
        self.skip_ws();
        let start = self.pos;
        let len = self.src[start..].bytes().take_while(u8::is_ascii_digit).count();
        if len == 0 {
            return None;
        }
        self.pos += len;
        Some(self.src[start..start + len].parse().expect("ascii digits"))
    }

    fn rational(&mut self) -> Result<Option<Rational>> {
        let Some(num) = self.integer() else { return Ok(None) };
        if self.peek() != Some('/') {
            return Ok(Some(Rational::from_integer(num)));
        }
        self.bump();
        let at = self.pos;
        match self.integer() {
            Some(den) if !den.is_zero() => Ok(Some(Rational::new(num, den))),
            Some(_) => self.error(at, "zero denominator"),
            None => self.error(at, "expected denominator"),
        }
    }

    fn term(&mut self, sign: Rational, acc: &mut [Rational; 4]) -> Result<()> {
        self.skip_ws();
        let start = self.pos;
        let coeff = self.rational()?;
        if coeff.is_some() && self.peek() == Some('*') {
            self.bump();
            if !self.peek().is_some_and(|c| c.is_ascii_alphabetic()) {
                return self.error(self.pos, "expected variable after '*'");
            }
        }
        let mut degree = 0usize;
        if let Some(c) = self.peek().filter(|c| c.is_ascii_alphabetic()) {
            let at = self.pos;
            match self.var {
                None => self.var = Some(c),
                Some(v) if v != c => return Err(Error::UnknownVariable { var: c, expected: v, pos: at }),
                Some(_) => {}
            }
            self.bump();
            degree = 1;
            if self.peek() == Some('^') {
                self.bump();
                let at = self.pos;
                match self.bump() {
                    Some(d @ '0'..='3') => degree = d as usize - '0' as usize,
                    Some(d) if d.is_ascii_digit() => return self.error(at, "degree above 3"),
                    _ => return self.error(at, "expected exponent digit"),
                }
                if self.peek().is_some_and(|c| c.is_ascii_digit()) {
                    return self.error(self.pos, "degree above 3");
                }
            }
        } else if coeff.is_none() {
            return self.error(start, "expected term");
        }
        let coeff = coeff.unwrap_or_else(|| Rational::from_integer(1.into()));
        acc[degree] += sign * coeff;
        Ok(())
    }

    fn poly(&mut self) -> Result<[Rational; 4]> {
        let mut acc = zeros();
        let one = Rational::from_integer(1.into());
        let mut sign = one.clone();
        match self.peek() {
            Some('-') => {
                self.bump();
                sign = -one.clone();
            }
            Some('+') => {
                self.bump();
            }
            _ => {}
        }
        self.term(sign, &mut acc)?;
        loop {
            match self.peek() {
                Some('+') => {
                    self.bump();
                    self.term(one.clone(), &mut acc)?;
                }
                Some('-') => {
                    self.bump();
                    self.term(-one.clone(), &mut acc)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn equation(&mut self) -> Result<ParsedEquation> {
        let lhs = self.poly()?;
        match self.bump() {
            Some('=') => {}
            Some(c) => return self.error(self.pos - c.len_utf8(), format!("unexpected '{c}'")),
            None => return self.error(self.pos, "expected '='"),
        }
        let rhs = self.poly()?;
        if let Some(c) = self.peek() {
            return self.error(self.pos, format!("unexpected '{c}'"));
        }
        Ok(ParsedEquation { lhs, rhs, var: self.var })
    }
}

/// Parses both sides without requiring a cubic.
pub fn parse_sides(input: &str) -> Result<ParsedEquation> {
    Parser { src: input, pos: 0, var: None }.equation()
}

/// Parses `input` into `c3·x³ + c2·x² + c1·x + c0 = 0`.
pub fn parse_equation(input: &str) -> Result<GeneralCubic<Rational>> {
    parse_sides(input)?.into_cubic()
}
