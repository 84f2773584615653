//! Scalar rings.
//!
//! Everything in this crate is generic over a commutative ring with identity,
//! expressed through the `num-traits` vocabulary. The exact instantiation the
//! library is built around is [`Rational`](crate::Rational); `f64`, `i64` and
//! the polynomial rings themselves also qualify.

use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::Rational;

/// A commutative ring with identity.
///
/// Blanket-implemented for every type with the required operators, so
/// `Poly<T>` is itself a `Ring` whenever `T` is, which is how the coefficient
/// tower ℚ ⊂ ℚ[λ] ⊂ ℚ[λ][x] is assembled.
pub trait Ring:
    Clone
    + Debug
    + PartialEq
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    /// Image of an integer under the canonical map ℤ → R.
    fn from_int(n: i64) -> Self {
        let mut acc = Self::zero();
        let mut base = Self::one();
        let mut k = n.unsigned_abs();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc + base.clone();
            }
            base = base.clone() + base;
            k >>= 1;
        }
        if n < 0 {
            -acc
        } else {
            acc
        }
    }

    /// `self^exp` by repeated squaring; `0^0 = 1`.
    fn pow_u32(&self, exp: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base.clone();
            }
            e >>= 1;
            if e > 0 {
                base = base.clone() * base;
            }
        }
        acc
    }
}

impl<T> Ring for T where
    T: Clone
        + Debug
        + PartialEq
        + Zero
        + One
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
        + Neg<Output = T>
{
}

/// Exact rational `num / den`. Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Exact integer as a rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parse `"p"`, `"-p"` or `"p/q"` into a reduced rational.
pub fn parse_rational(text: &str) -> Option<Rational> {
    let text = text.trim();
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let num: BigInt = num.parse().ok()?;
    let den: BigInt = den.parse().ok()?;
    if den.is_zero() {
        return None;
    }
    Some(Rational::new(num, den))
}

/// `"p"` for integers, `"p/q"` otherwise.
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

/// `n!` as an exact rational.
pub fn factorial(n: u32) -> Rational {
    (1..=n as i64).fold(Rational::one(), |acc, k| acc * int(k))
}
