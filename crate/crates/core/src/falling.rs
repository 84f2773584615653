//! Falling factorials, basis conversion and λ-substitution.
//!
//! `(x)_{n,λ} = x (x - λ) ⋯ (x - (n-1)λ)` is built generically for any step;
//! the classical `(x)_n` is the same product with step 1.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::poly::Poly;
use crate::scalar::Ring;
use crate::{LambdaPoly, Rational, XPoly};

/// Which falling-factorial basis a coefficient vector refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FallingBasis {
    /// `(x)_k = x (x - 1) ⋯ (x - k + 1)`
    Classical,
    /// `(x)_{k,λ} = x (x - λ) ⋯ (x - (k - 1)λ)`
    Degenerate,
}

impl FallingBasis {
    /// Step between consecutive roots of the basis polynomials.
    pub fn step(self) -> LambdaPoly {
        match self {
            FallingBasis::Classical => LambdaPoly::one(),
            FallingBasis::Degenerate => lambda(),
        }
    }
}

/// The indeterminate λ.
pub fn lambda() -> LambdaPoly {
    LambdaPoly::var()
}

/// `∏_{i<n} (base - i·step)`; the empty product is 1.
pub fn generalized_falling<T: Ring>(base: &T, n: usize, step: &T) -> T {
    let mut acc = T::one();
    let mut shift = T::zero();
    for _ in 0..n {
        acc = acc * (base.clone() - shift.clone());
        shift = shift + step.clone();
    }
    acc
}

/// `∏_{i<n} (x - i·step)` as a polynomial in x.
pub fn falling_factorial<T: Ring>(n: usize, step: &T) -> Poly<T> {
    generalized_falling(&Poly::var(), n, &Poly::constant(step.clone()))
}

/// `(x)_{n,λ}`.
pub fn ff_degenerate(n: usize) -> XPoly {
    falling_factorial(n, &lambda())
}

/// `(x)_n`.
pub fn ff_classical(n: usize) -> XPoly {
    falling_factorial(n, &LambdaPoly::one())
}

/// `(base)_{n,λ}` evaluated in ℚ[λ].
pub fn gff_scalar(base: &LambdaPoly, n: usize) -> LambdaPoly {
    generalized_falling(base, n, &lambda())
}

/// Newton coefficients of `p` with respect to the nodes `0, step, 2·step, …`,
/// i.e. `c` with `p = Σ c_k ∏_{i<k} (x - i·step)`.
///
/// Computed by repeated synthetic division; the result has `deg(p) + 1`
/// entries (none for the zero polynomial).
pub fn newton_coefficients<T: Ring>(p: &Poly<T>, step: &T) -> Vec<T> {
    let len = p.coeffs().len();
    let mut out = Vec::with_capacity(len);
    let mut rest = p.clone();
    let mut root = T::zero();
    for _ in 0..len {
        let (q, r) = rest.div_linear(&root);
        out.push(r);
        rest = q;
        root = root + step.clone();
    }
    out
}

/// Coefficients of `p` in the chosen falling-factorial basis.
pub fn to_falling_basis(p: &XPoly, basis: FallingBasis) -> Vec<LambdaPoly> {
    newton_coefficients(p, &basis.step())
}

/// Inverse of [`to_falling_basis`].
pub fn from_falling_basis(coeffs: &[LambdaPoly], basis: FallingBasis) -> XPoly {
    let step = basis.step();
    let mut acc = XPoly::zero();
    let mut basis_poly = XPoly::one();
    for (k, c) in coeffs.iter().enumerate() {
        acc += &basis_poly.scale(c);
        let root = XPoly::constant(step.clone() * LambdaPoly::from_int(k as i64));
        basis_poly = &basis_poly * &(XPoly::var() - root);
    }
    acc
}

/// Binomial coefficient `C(n, k)`, zero outside `0 ≤ k ≤ n`.
pub fn binomial(n: u64, k: i64) -> Rational {
    if k < 0 || k as u64 > n {
        return Rational::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    Rational::from_integer(acc)
}

/// Exact substitution of a numeric value for λ.
///
/// Substituting 0 realizes every λ → 0 limit, since all objects involved are
/// polynomial in λ.
pub trait SubstLambda {
    type Output;

    fn subst_lambda(&self, value: &Rational) -> Self::Output;
}

impl SubstLambda for LambdaPoly {
    type Output = Rational;

    fn subst_lambda(&self, value: &Rational) -> Rational {
        self.eval(value)
    }
}

impl SubstLambda for XPoly {
    type Output = XPoly;

    fn subst_lambda(&self, value: &Rational) -> XPoly {
        self.map(|c| LambdaPoly::constant(c.eval(value)))
    }
}

/// Embed an exact rational as a constant of ℚ[λ][x].
pub fn xconst(c: Rational) -> XPoly {
    XPoly::constant(LambdaPoly::constant(c))
}
