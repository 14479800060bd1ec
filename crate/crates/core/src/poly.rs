//! Sparse Laurent polynomials in `v` and `z` with big-integer coefficients.

use alloc::collections::BTreeMap;
use alloc::string::String;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::BraidError;

/// A HOMFLY-PT polynomial, stored as `(v-exponent, z-exponent) -> coefficient`.
/// Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct HomflyPolynomial {
    terms: BTreeMap<(i32, i32), BigInt>,
}

impl HomflyPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0, 0)
    }

    pub fn monomial(coefficient: i64, v: i32, z: i32) -> Self {
        let mut p = Self::zero();
        p.add_term(v, z, BigInt::from(coefficient));
        p
    }

    /// Builds a polynomial from `(coefficient, v-exponent, z-exponent)` triples.
    pub fn from_terms(terms: &[(i64, i32, i32)]) -> Self {
        let mut p = Self::zero();
        for &(c, v, z) in terms {
            p.add_term(v, z, BigInt::from(c));
        }
        p
    }

    /// `(v⁻¹ − v) z⁻¹`, the factor contributed by each extra split component.
    pub fn delta() -> Self {
        Self::from_terms(&[(1, -1, -1), (-1, 1, -1)])
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    fn add_term(&mut self, v: i32, z: i32, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry((v, z)).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&(v, z));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, v: i32, z: i32) -> BigInt {
        self.terms.get(&(v, z)).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Terms in ascending `(v, z)` order.
    pub fn terms(&self) -> impl Iterator<Item = (i32, i32, &BigInt)> {
        self.terms.iter().map(|(&(v, z), c)| (v, z, c))
    }

    /// Multiplies by `c · v^a · z^b`.
    pub fn shifted(&self, c: i64, a: i32, b: i32) -> Self {
        let c = BigInt::from(c);
        let mut out = Self::zero();
        for (&(v, z), k) in &self.terms {
            out.add_term(v + a, z + b, k * &c);
        }
        out
    }

    pub fn min_v(&self) -> Result<i32, BraidError> {
        self.terms.keys().map(|k| k.0).min().ok_or(BraidError::ZeroPolynomial)
    }

    pub fn max_v(&self) -> Result<i32, BraidError> {
        self.terms.keys().map(|k| k.0).max().ok_or(BraidError::ZeroPolynomial)
    }

    /// Substitutes `v → v⁻¹`, `z → −z`.
    pub fn mirror(&self) -> Self {
        let mut out = Self::zero();
        for (&(v, z), c) in &self.terms {
            let c = if z.rem_euclid(2) == 1 { -c } else { c.clone() };
            out.add_term(-v, z, c);
        }
        out
    }

    pub fn to_text(&self) -> String {
        alloc::format!("{}", self)
    }
}

impl fmt::Display for HomflyPolynomial {
    /// `c*v^a*z^b` terms joined by ` + `, ascending in `(a, b)`; `0` when empty.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (&(v, z), c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{}*v^{}*z^{}", c, v, z)?;
        }
        Ok(())
    }
}

impl Add for &HomflyPolynomial {
    type Output = HomflyPolynomial;
    fn add(self, rhs: &HomflyPolynomial) -> HomflyPolynomial {
        let mut out = self.clone();
        for (&(v, z), c) in &rhs.terms {
            out.add_term(v, z, c.clone());
        }
        out
    }
}

impl Sub for &HomflyPolynomial {
    type Output = HomflyPolynomial;
    fn sub(self, rhs: &HomflyPolynomial) -> HomflyPolynomial {
        self + &(-rhs)
    }
}

impl Neg for &HomflyPolynomial {
    type Output = HomflyPolynomial;
    fn neg(self) -> HomflyPolynomial {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = -&*c;
        }
        out
    }
}

impl Mul for &HomflyPolynomial {
    type Output = HomflyPolynomial;
    fn mul(self, rhs: &HomflyPolynomial) -> HomflyPolynomial {
        let mut out = HomflyPolynomial::zero();
        for (&(v1, z1), c1) in &self.terms {
            for (&(v2, z2), c2) in &rhs.terms {
                out.add_term(v1 + v2, z1 + z2, c1 * c2);
            }
        }
        out
    }
}
