//! Arithmetic in the quadratic extension `Q(√D)`.
//!
//! The radicand is kept raw (e.g. `168259/6912`), never squarefree-reduced;
//! reduction is a display concern. For `D < 0` the element `t + s√D` stands
//! for the complex number `t + s·i√|D|`; the ring operations do not care.

use std::ops::Neg;

use crate::{Error, Result, Scalar};

/// `t + s√D` for a fixed radicand `D`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadExt<T> {
    radicand: T,
    t: T,
    s: T,
}

impl<T: Scalar> QuadExt<T> {
    pub fn new(t: T, s: T, radicand: T) -> Self {
        Self { radicand, t, s }
    }

    /// Embeds `t` as `t + 0·√D`.
    pub fn from_scalar(t: T, radicand: T) -> Self {
        Self::new(t, T::zero(), radicand)
    }

    pub fn zero(radicand: T) -> Self {
        Self::from_scalar(T::zero(), radicand)
    }

    pub fn one(radicand: T) -> Self {
        Self::from_scalar(T::one(), radicand)
    }

    pub fn radicand(&self) -> &T {
        &self.radicand
    }

    /// Rational part.
    pub fn t(&self) -> &T {
        &self.t
    }

    /// Coefficient of `√D`.
    pub fn s(&self) -> &T {
        &self.s
    }

    pub fn is_zero(&self) -> bool {
        self.t.is_zero() && self.s.is_zero()
    }

    /// The scalar value, if the `√D` part vanishes.
    pub fn as_scalar(&self) -> Option<&T> {
        self.s.is_zero().then_some(&self.t)
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.radicand == other.radicand {
            Ok(())
        } else {
            Err(Error::RadicandMismatch {
                left: format!("{:?}", self.radicand),
                right: format!("{:?}", other.radicand),
            })
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(Self::new(
            self.t.clone() + other.t.clone(),
            self.s.clone() + other.s.clone(),
            self.radicand.clone(),
        ))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(Self::new(
            self.t.clone() - other.t.clone(),
            self.s.clone() - other.s.clone(),
            self.radicand.clone(),
        ))
    }

    /// `(t₁ + s₁√D)(t₂ + s₂√D) = (t₁t₂ + s₁s₂D) + (t₁s₂ + s₁t₂)√D`
    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.mul_unchecked(other))
    }

    fn mul_unchecked(&self, other: &Self) -> Self {
        let d = self.radicand.clone();
        let t = self.t.clone() * other.t.clone() + self.s.clone() * other.s.clone() * d.clone();
        let s = self.t.clone() * other.s.clone() + self.s.clone() * other.t.clone();
        Self::new(t, s, d)
    }

    pub fn scale(&self, k: &T) -> Self {
        Self::new(
            self.t.clone() * k.clone(),
            self.s.clone() * k.clone(),
            self.radicand.clone(),
        )
    }

    pub fn square(&self) -> Self {
        self.mul_unchecked(self)
    }

    /// Closed-form cube: `(3s²tD + t³) + (s³D + 3st²)√D`.
    pub fn cube(&self) -> Self {
        let three = T::from_small(3);
        let (t, s, d) = (self.t.clone(), self.s.clone(), self.radicand.clone());
        let s2 = s.clone() * s.clone();
        let t2 = t.clone() * t.clone();
        let rational = three.clone() * s2.clone() * t.clone() * d.clone() + t2.clone() * t.clone();
        let surd = s2 * s.clone() * d.clone() + three * s * t2;
        Self::new(rational, surd, d)
    }

    /// `t + s√D ↦ t − s√D`
    pub fn conj(&self) -> Self {
        Self::new(self.t.clone(), -self.s.clone(), self.radicand.clone())
    }

    /// `N(t + s√D) = t² − s²D`
    pub fn norm(&self) -> T {
        self.t.clone() * self.t.clone() - self.s.clone() * self.s.clone() * self.radicand.clone()
    }

    pub fn add_scalar(&self, k: &T) -> Self {
        Self::new(self.t.clone() + k.clone(), self.s.clone(), self.radicand.clone())
    }
}

impl<T: Scalar> Neg for QuadExt<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.t, -self.s, self.radicand)
    }
}

impl<T: Scalar> Neg for &QuadExt<T> {
    type Output = QuadExt<T>;
    fn neg(self) -> QuadExt<T> {
        -self.clone()
    }
}
