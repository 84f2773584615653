//! The differential representation `a ↦ d/dx`, `a⁺ ↦ x` acting on truncated
//! power series in x.
//!
//! A [`TruncatedSeries`] stores coefficients of `x^0..=x^N` together with the
//! largest degree that is still exact. Differentiation pulls unknown
//! coefficients down from beyond the bound, so each `a` costs one degree of
//! validity; multiplication by x only discards what falls past `N`.

use num_traits::{One, Zero};

use crate::falling::lambda;
use crate::poly::Poly;
use crate::scalar::{factorial, Ring};
use crate::special::{bell_degenerate, dowling_r};
use crate::triangles::stirling2_degenerate_row;
use crate::weyl::{degenerate_power, NormalForm};
use crate::{LambdaPoly, Rational, XPoly};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries<T> {
    coeffs: Vec<T>,
    valid_up_to: Option<usize>,
}

impl<T: Ring> TruncatedSeries<T> {
    /// Series with the given coefficients, padded or cut to `degree_bound`,
    /// exact on every stored degree.
    pub fn new(mut coeffs: Vec<T>, degree_bound: usize) -> Self {
        coeffs.resize(degree_bound + 1, T::zero());
        TruncatedSeries {
            coeffs,
            valid_up_to: Some(degree_bound),
        }
    }

    pub fn from_poly(p: &Poly<T>, degree_bound: usize) -> Self {
        Self::new(p.coeffs().to_vec(), degree_bound)
    }

    pub fn degree_bound(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Highest exact degree; `None` when no coefficient is trustworthy.
    pub fn valid_up_to(&self) -> Option<usize> {
        self.valid_up_to
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> T {
        self.coeffs.get(k).cloned().unwrap_or_else(T::zero)
    }

    /// Exact coefficients only.
    pub fn valid_coeffs(&self) -> &[T] {
        match self.valid_up_to {
            Some(v) => &self.coeffs[..=v],
            None => &[],
        }
    }

    fn with_validity(coeffs: Vec<T>, valid: i64) -> Self {
        let bound = coeffs.len() as i64 - 1;
        let valid = valid.min(bound);
        TruncatedSeries {
            coeffs,
            valid_up_to: usize::try_from(valid).ok(),
        }
    }

    fn valid_i64(&self) -> i64 {
        self.valid_up_to.map_or(-1, |v| v as i64)
    }

    pub fn derivative(&self) -> Self {
        let n = self.coeffs.len();
        let coeffs = (0..n)
            .map(|d| {
                if d + 1 < n {
                    self.coeffs[d + 1].clone() * T::from_int(d as i64 + 1)
                } else {
                    T::zero()
                }
            })
            .collect();
        Self::with_validity(coeffs, self.valid_i64() - 1)
    }

    /// Multiply by `x^i`, dropping degrees past the bound.
    pub fn shift(&self, i: usize) -> Self {
        let n = self.coeffs.len();
        let coeffs = (0..n)
            .map(|d| {
                if d >= i {
                    self.coeffs[d - i].clone()
                } else {
                    T::zero()
                }
            })
            .collect();
        Self::with_validity(coeffs, self.valid_i64() + i as i64)
    }

    pub fn scale(&self, c: &T) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|a| a.clone() * c.clone()).collect(),
            valid_up_to: self.valid_up_to,
        }
    }

    /// Sum, valid where both summands are.
    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|d| self.coeff(d) + other.coeff(d)).collect();
        Self::with_validity(coeffs, self.valid_i64().min(other.valid_i64()))
    }

    /// Product with a series; valid where both factors are.
    pub fn mul(&self, other: &Self) -> Self {
        let n = self.coeffs.len().min(other.coeffs.len());
        let coeffs = (0..n)
            .map(|d| {
                (0..=d).fold(T::zero(), |acc, k| {
                    acc + self.coeffs[k].clone() * other.coeffs[d - k].clone()
                })
            })
            .collect();
        Self::with_validity(coeffs, self.valid_i64().min(other.valid_i64()))
    }

    /// Product with an exact polynomial; validity is unchanged.
    pub fn mul_poly(&self, p: &Poly<T>) -> Self {
        let exact = Self::new(p.coeffs().to_vec(), self.degree_bound());
        self.mul(&exact)
    }

    /// Equality on the common valid range. Fails if that range is empty.
    pub fn agrees_with(&self, other: &Self) -> bool {
        match (self.valid_up_to, other.valid_up_to) {
            (Some(a), Some(b)) => {
                let upto = a.min(b);
                (0..=upto).all(|d| self.coeff(d) == other.coeff(d))
            }
            _ => false,
        }
    }
}

/// Apply `Σ c_{ij} x^i (d/dx)^j` to a series.
pub fn apply<T: Ring>(op: &NormalForm<T>, s: &TruncatedSeries<T>) -> TruncatedSeries<T> {
    let bound = s.degree_bound();
    let mut out = TruncatedSeries::new(Vec::new(), bound);
    for (&(i, j), c) in op.terms() {
        let mut term = s.clone();
        for _ in 0..j {
            term = term.derivative();
        }
        out = out.add(&term.shift(i as usize).scale(c));
    }
    if op.is_zero() {
        out.valid_up_to = s.valid_up_to;
    }
    out
}

/// `Σ_{l=0}^{N} x^l / l!`, the image of `e^{a⁺}|0⟩`.
pub fn vacuum_coherent(degree_bound: usize) -> crate::TruncatedSeries {
    exp_series(degree_bound, false)
}

fn exp_series(degree_bound: usize, negate: bool) -> crate::TruncatedSeries {
    let coeffs = (0..=degree_bound)
        .map(|l| {
            let c = factorial(l as u32).recip();
            let c = if negate && l % 2 == 1 { -c } else { c };
            LambdaPoly::constant(c)
        })
        .collect();
    TruncatedSeries::new(coeffs, degree_bound)
}

/// Recover `P` from a series known to equal `P(x) e^x`, on the valid range.
pub fn strip_exponential(s: &crate::TruncatedSeries) -> XPoly {
    let product = s.mul(&exp_series(s.degree_bound(), true));
    XPoly::new(product.valid_coeffs().to_vec())
}

fn rational_op(c: Rational) -> crate::NormalForm {
    NormalForm::scalar(LambdaPoly::constant(c))
}

/// `a^k e^{a⁺}|0⟩ = e^{a⁺}|0⟩` on degrees `≤ N - k`.
pub fn check_theorem22(k: u32, degree_bound: usize) -> bool {
    let vacuum = vacuum_coherent(degree_bound);
    let image = apply(&NormalForm::annihilation_power(k), &vacuum);
    image.valid_up_to() == degree_bound.checked_sub(k as usize) && image.agrees_with(&vacuum)
}

/// `(a⁺a)_{n,λ} e^{a⁺}|0⟩ = φ_{n,λ}(a⁺) e^{a⁺}|0⟩`.
pub fn check_theorem22b(n: usize, degree_bound: usize) -> bool {
    let vacuum = vacuum_coherent(degree_bound);
    let lhs = apply(&degenerate_power(&NormalForm::number(), n), &vacuum);
    let rhs = vacuum.mul_poly(&bell_degenerate(n));
    lhs.agrees_with(&rhs)
}

/// `(m a⁺a + r)_{l,λ} e^{a⁺}|0⟩ = D^{(r)}_{m,λ}(l, m a⁺) e^{a⁺}|0⟩`; `r = None`
/// is the Dowling case `r = 1`.
pub fn check_dowling_fock(m: u32, l: usize, degree_bound: usize, r: Option<&Rational>) -> bool {
    let one = Rational::one();
    let r = r.unwrap_or(&one);
    let m_poly = LambdaPoly::from_int(m as i64);
    let op = &NormalForm::number().scale(&m_poly) + &rational_op(r.clone());
    let vacuum = vacuum_coherent(degree_bound);
    let lhs = apply(&degenerate_power(&op, l), &vacuum);
    let dowling_at_mx = dowling_r(m, r, l).dilate(&m_poly);
    let rhs = vacuum.mul_poly(&dowling_at_mx);
    lhs.agrees_with(&rhs)
}

/// Both sides of the degenerate Bell recurrence obtained by letting the two
/// sides of `(a⁺a)_{m+n,λ} = Σ_j {m brace j}_λ (a⁺)^j (a⁺a + j - mλ)_{n,λ} a^j`
/// act on `e^{a⁺}|0⟩` and stripping the exponential factor.
pub fn spivey_bell_via_operators(n: usize, m: usize) -> (XPoly, XPoly) {
    let bound = n + m + 4;
    let vacuum = vacuum_coherent(bound);
    let number = NormalForm::number();
    let lhs = apply(&degenerate_power(&number, n + m), &vacuum);

    let m_lambda = lambda().scale(&Rational::from_int(m as i64));
    let mut rhs = TruncatedSeries::new(Vec::new(), bound);
    for (j, s) in stirling2_degenerate_row(m).into_iter().enumerate() {
        if s.is_zero() {
            continue;
        }
        let shift = LambdaPoly::from_int(j as i64) - m_lambda.clone();
        let inner = degenerate_power(&(&number + &NormalForm::scalar(shift)), n);
        let j = j as u32;
        let op = NormalForm::creation_power(j)
            .multiply(&inner)
            .multiply(&NormalForm::annihilation_power(j))
            .scale(&s);
        rhs = rhs.add(&apply(&op, &vacuum));
    }
    (strip_exponential(&lhs), strip_exponential(&rhs))
}

impl<T: Ring> Default for TruncatedSeries<T> {
    fn default() -> Self {
        Self::new(vec![T::one()], 0)
    }
}
