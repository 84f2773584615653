//! Text, CSV and JSON renderings of ℚ[λ] and ℚ[λ][x] values.
//!
//! Rationals are always rendered as `"p"` or `"p/q"` strings, never floats.
//! λ is written `L` so text output can be fed back to the expression parser.

use num_traits::{One, Signed, Zero};
use serde_json::Value;

use crate::scalar::format_rational;
use crate::{LambdaPoly, Rational, XPoly};

/// Signed terms `(negative, magnitude-text)` of a polynomial in `var`,
/// lowest power first, with explicit `*` between coefficient and variable.
fn signed_terms(coeffs: &[Rational], var: &str) -> Vec<(bool, String)> {
    coeffs
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| {
            let mag = format_rational(&c.abs());
            let text = match k {
                0 => mag,
                1 => format!("{mag}*{var}"),
                _ => format!("{mag}*{var}^{k}"),
            };
            (c.is_negative(), text)
        })
        .collect()
}

fn join_signed(terms: &[(bool, String)]) -> String {
    let mut out = String::new();
    for (idx, (neg, text)) in terms.iter().enumerate() {
        match (idx, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        out.push_str(text);
    }
    out
}

/// `1 - 3*L + 2*L^2`; the zero polynomial prints as `0`.
pub fn lambda_poly_text(p: &LambdaPoly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    join_signed(&signed_terms(p.coeffs(), "L"))
}

/// How a ℚ[λ] coefficient multiplies a monomial in text output.
pub(crate) enum CoeffText {
    One,
    MinusOne,
    /// A single signed rational, magnitude given.
    Scalar {
        negative: bool,
        magnitude: String,
    },
    /// Anything else, already parenthesized.
    Group(String),
}

pub(crate) fn coeff_text(c: &LambdaPoly) -> CoeffText {
    if c.is_constant() {
        let v = c.coeff(0);
        if v.is_one() {
            return CoeffText::One;
        }
        if v == -Rational::one() {
            return CoeffText::MinusOne;
        }
        return CoeffText::Scalar {
            negative: v.is_negative(),
            magnitude: format_rational(&v.abs()),
        };
    }
    CoeffText::Group(format!("({})", lambda_poly_text(c)))
}

/// Join `(coefficient, monomial)` pairs; an empty monomial string is the
/// unit monomial. Returns `"0"` when there are no terms.
pub(crate) fn render_terms<'a>(
    terms: impl IntoIterator<Item = (&'a LambdaPoly, String)>,
) -> String {
    let mut out = String::new();
    for (idx, (c, mono)) in terms.into_iter().enumerate() {
        let (negative, body) = match (coeff_text(c), mono.is_empty()) {
            (CoeffText::One, true) => (false, "1".to_string()),
            (CoeffText::MinusOne, true) => (true, "1".to_string()),
            (CoeffText::One, false) => (false, mono),
            (CoeffText::MinusOne, false) => (true, mono),
            (
                CoeffText::Scalar {
                    negative,
                    magnitude,
                },
                true,
            ) => (negative, magnitude),
            (
                CoeffText::Scalar {
                    negative,
                    magnitude,
                },
                false,
            ) => (negative, format!("{magnitude} * {mono}")),
            (CoeffText::Group(g), true) => (false, g),
            (CoeffText::Group(g), false) => (false, format!("{g} * {mono}")),
        };
        match (idx, negative) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        out.push_str(&body);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// `x^2 + (1 - 1*L) * x`, highest power first.
pub fn xpoly_text(p: &XPoly) -> String {
    let terms: Vec<_> = p
        .coeffs()
        .iter()
        .enumerate()
        .rev()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| {
            let mono = match k {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{k}"),
            };
            (c, mono)
        })
        .collect();
    render_terms(terms)
}

/// `"c0;c1;…"`; the zero polynomial is `"0"`.
pub fn lambda_poly_csv(p: &LambdaPoly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    p.coeffs()
        .iter()
        .map(format_rational)
        .collect::<Vec<_>>()
        .join(";")
}

/// x-coefficients as [`lambda_poly_csv`] strings joined by `|`.
pub fn xpoly_csv(p: &XPoly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    p.coeffs()
        .iter()
        .map(lambda_poly_csv)
        .collect::<Vec<_>>()
        .join("|")
}

/// Array of λ-coefficient strings, lowest power first.
pub fn lambda_poly_json(p: &LambdaPoly) -> Value {
    Value::Array(
        p.coeffs()
            .iter()
            .map(|c| Value::String(format_rational(c)))
            .collect(),
    )
}

/// Array (by power of x) of [`lambda_poly_json`] arrays.
pub fn xpoly_json(p: &XPoly) -> Value {
    Value::Array(p.coeffs().iter().map(lambda_poly_json).collect())
}
