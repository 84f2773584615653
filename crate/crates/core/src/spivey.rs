//! Exact verification of Spivey-type recurrences for the Bell, Dowling and
//! r-Dowling families.
//!
//! The left side of every certificate is computed from the defining triangle
//! at the top index; the right side is the double sum over lower-index data.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde_json::{json, Map, Value};

use crate::falling::{binomial, gff_scalar, lambda, xconst, SubstLambda};
use crate::format::xpoly_json;
use crate::scalar::{format_rational, Ring};
use crate::special::{bell_degenerate, bell_number, dowling_r};
use crate::triangles::{stirling2_classical, stirling2_degenerate_row, whitney_r_row};
use crate::{LambdaPoly, Rational, XPoly};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Identity {
    SpiveyClassical,
    SpiveyDegBell,
    SpiveyDegDowling,
    SpiveyDegRDowling,
}

impl Identity {
    pub fn name(self) -> &'static str {
        match self {
            Identity::SpiveyClassical => "spivey-classical",
            Identity::SpiveyDegBell => "spivey-deg-bell",
            Identity::SpiveyDegDowling => "spivey-deg-dowling",
            Identity::SpiveyDegRDowling => "spivey-deg-r-dowling",
        }
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Both sides of a λ = 0 specialization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassicalLimit {
    pub lhs: XPoly,
    pub rhs: XPoly,
    pub pass: bool,
}

impl ClassicalLimit {
    pub fn new(lhs: XPoly, rhs: XPoly) -> Self {
        let pass = lhs == rhs;
        ClassicalLimit { lhs, rhs, pass }
    }
}

/// Both sides of one instance of an identity, kept for auditing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationCertificate {
    pub identity: Identity,
    pub parameters: BTreeMap<String, Rational>,
    pub lhs: XPoly,
    pub rhs: XPoly,
    /// `lhs == rhs` in canonical form.
    pub pass: bool,
    pub classical_limit: Option<ClassicalLimit>,
}

impl VerificationCertificate {
    pub fn new(
        identity: Identity,
        parameters: impl IntoIterator<Item = (&'static str, Rational)>,
        lhs: XPoly,
        rhs: XPoly,
    ) -> Self {
        let pass = lhs == rhs;
        VerificationCertificate {
            identity,
            parameters: parameters
                .into_iter()
                .map(|(k, v)| (k.to_string(), v))
                .collect(),
            lhs,
            rhs,
            pass,
            classical_limit: None,
        }
    }

    /// The identity and, when recorded, its classical limit both hold.
    pub fn all_pass(&self) -> bool {
        self.pass && self.classical_limit.as_ref().is_none_or(|c| c.pass)
    }

    /// JSON object with sorted keys and `"p/q"` strings for every rational.
    pub fn to_json(&self) -> Value {
        let params: Map<String, Value> = self
            .parameters
            .iter()
            .map(|(k, v)| (k.clone(), Value::String(format_rational(v))))
            .collect();
        let mut obj = json!({
            "identity": self.identity.name(),
            "params": params,
            "lhs": xpoly_json(&self.lhs),
            "rhs": xpoly_json(&self.rhs),
            "pass": self.pass,
        });
        if let Some(limit) = &self.classical_limit {
            obj["classical_limit"] = json!({
                "lhs": xpoly_json(&limit.lhs),
                "rhs": xpoly_json(&limit.rhs),
                "pass": limit.pass,
            });
        }
        obj
    }
}

fn index(n: usize) -> Rational {
    Rational::from_int(n as i64)
}

/// `φ_{n+m} = Σ_k Σ_j {m brace j} C(n,k) j^{n-k} φ_k` on Bell numbers,
/// with `0^0 = 1`.
pub fn spivey_classical(n: usize, m: usize) -> VerificationCertificate {
    let lhs = bell_number(n + m);
    let mut rhs = Rational::zero();
    for k in 0..=n {
        let bell_k = bell_number(k);
        for j in 0..=m {
            let s = stirling2_classical(m, j);
            if s.is_zero() {
                continue;
            }
            let power = index(j).pow_u32((n - k) as u32);
            rhs += s * binomial(n as u64, k as i64) * power * bell_k.clone();
        }
    }
    VerificationCertificate::new(
        Identity::SpiveyClassical,
        [("n", index(n)), ("m", index(m))],
        xconst(lhs),
        xconst(rhs),
    )
}

/// Degenerate Bell recurrence:
/// `φ_{n+m,λ}(x) = Σ_j Σ_k {m brace j}_λ C(n,k) (j - mλ)_{n-k,λ} x^j φ_{k,λ}(x)`.
pub fn spivey_degenerate_bell(n: usize, m: usize) -> VerificationCertificate {
    let lhs = bell_degenerate(n + m);
    let stirling_m = stirling2_degenerate_row(m);
    let lower: Vec<XPoly> = (0..=n).map(bell_degenerate).collect();
    let m_lambda = lambda().scale(&index(m));
    let mut rhs = XPoly::zero();
    for (j, s) in stirling_m.iter().enumerate() {
        if s.is_zero() {
            continue;
        }
        let base = LambdaPoly::from_int(j as i64) - m_lambda.clone();
        for (k, bell_k) in lower.iter().enumerate() {
            let weight = s.clone() * gff_scalar(&base, n - k).scale(&binomial(n as u64, k as i64));
            rhs += &bell_k.shift(j).scale(&weight);
        }
    }
    VerificationCertificate::new(
        Identity::SpiveyDegBell,
        [("n", index(n)), ("m", index(m))],
        lhs,
        rhs,
    )
}

/// Right side shared by the Dowling and r-Dowling recurrences:
/// `Σ_j Σ_k C(n,k) W(l,j) x^j (mj - lλ)_{n-k,λ} D(k, x)`.
fn dowling_rhs(m: u32, r: &Rational, n: usize, l: usize) -> XPoly {
    let whitney_l = whitney_r_row(m, r, l).unwrap_or_else(|e| panic!("Whitney row: {e}"));
    let lower: Vec<XPoly> = (0..=n).map(|k| dowling_r(m, r, k)).collect();
    let l_lambda = lambda().scale(&index(l));
    let mut rhs = XPoly::zero();
    for (j, w) in whitney_l.iter().enumerate() {
        if w.is_zero() {
            continue;
        }
        let base = LambdaPoly::from_int(m as i64 * j as i64) - l_lambda.clone();
        for (k, d_k) in lower.iter().enumerate() {
            let weight = w.clone() * gff_scalar(&base, n - k).scale(&binomial(n as u64, k as i64));
            rhs += &d_k.shift(j).scale(&weight);
        }
    }
    rhs
}

/// Degenerate Dowling recurrence for `D_{m,λ}(n + l, x)`.
pub fn spivey_degenerate_dowling(m: u32, n: usize, l: usize) -> VerificationCertificate {
    let r = Rational::one();
    VerificationCertificate::new(
        Identity::SpiveyDegDowling,
        [
            ("m", Rational::from_int(m as i64)),
            ("n", index(n)),
            ("l", index(l)),
        ],
        dowling_r(m, &r, n + l),
        dowling_rhs(m, &r, n, l),
    )
}

/// Degenerate r-Dowling recurrence for `D^{(r)}_{m,λ}(l + n, x)`, together
/// with its λ = 0 limit
/// `D^{(r)}_m(l+n, x) = Σ_j Σ_k C(n,k) W^{(r)}_m(l,j) x^j (mj)^{n-k} D^{(r)}_m(k, x)`.
pub fn spivey_degenerate_r_dowling(
    m: u32,
    r: &Rational,
    n: usize,
    l: usize,
) -> VerificationCertificate {
    let lhs = dowling_r(m, r, l + n);
    let rhs = dowling_rhs(m, r, n, l);

    let zero = Rational::zero();
    let whitney_l = whitney_r_row(m, r, l).unwrap_or_else(|e| panic!("Whitney row: {e}"));
    let mut classical_rhs = XPoly::zero();
    for (j, w) in whitney_l.iter().enumerate() {
        let w0 = w.subst_lambda(&zero);
        if w0.is_zero() {
            continue;
        }
        let mj = Rational::from_int(m as i64 * j as i64);
        for k in 0..=n {
            let d0 = dowling_r(m, r, k).subst_lambda(&zero);
            let weight = w0.clone() * binomial(n as u64, k as i64) * mj.pow_u32((n - k) as u32);
            classical_rhs += &d0.shift(j).scale(&LambdaPoly::constant(weight));
        }
    }
    let limit = ClassicalLimit::new(lhs.subst_lambda(&zero), classical_rhs);

    let mut cert = VerificationCertificate::new(
        Identity::SpiveyDegRDowling,
        [
            ("m", Rational::from_int(m as i64)),
            ("r", r.clone()),
            ("n", index(n)),
            ("l", index(l)),
        ],
        lhs,
        rhs,
    );
    cert.classical_limit = Some(limit);
    cert
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, rat};
    use crate::special::dowling;

    #[test]
    fn classical_examples() {
        let c = spivey_classical(1, 1);
        assert!(c.pass);
        assert_eq!(c.lhs, xconst(int(2)));
        for n in 0..6 {
            assert!(spivey_classical(n, 0).pass);
        }
        let c = spivey_classical(2, 2);
        assert!(c.pass);
        assert_eq!(c.lhs, xconst(int(15)));
    }

    #[test]
    fn degenerate_bell_examples() {
        let c = spivey_degenerate_bell(1, 1);
        assert!(c.pass);
        assert_eq!(c.lhs, bell_degenerate(2));
        for n in 0..6 {
            let c = spivey_degenerate_bell(n, 0);
            assert!(c.pass);
            assert_eq!(c.rhs, bell_degenerate(n));
            let c = spivey_degenerate_bell(0, n);
            assert!(c.pass);
            assert_eq!(c.rhs, bell_degenerate(n));
        }
    }

    #[test]
    fn degenerate_dowling_examples() {
        for m in 1..=3 {
            for n in 0..5 {
                let c = spivey_degenerate_dowling(m, n, 0);
                assert!(c.pass);
                assert_eq!(c.rhs, dowling(m, n));
                let c = spivey_degenerate_dowling(m, 0, n);
                assert!(c.pass);
                assert_eq!(c.rhs, dowling(m, n));
            }
        }
        let c = spivey_degenerate_dowling(2, 1, 1);
        assert!(c.pass);
        // x^2 + (4 - λ)x + (1 - λ)
        let expected = XPoly::new(vec![
            LambdaPoly::new(vec![int(1), int(-1)]),
            LambdaPoly::new(vec![int(4), int(-1)]),
            LambdaPoly::one(),
        ]);
        assert_eq!(c.lhs, expected);
    }

    #[test]
    fn r_dowling_examples() {
        for (m, n, l) in [(1, 2, 1), (2, 1, 2), (3, 2, 2)] {
            let r_cert = spivey_degenerate_r_dowling(m, &int(1), n, l);
            let d_cert = spivey_degenerate_dowling(m, n, l);
            assert_eq!(r_cert.lhs, d_cert.lhs);
            assert_eq!(r_cert.rhs, d_cert.rhs);
            assert_eq!(r_cert.pass, d_cert.pass);
        }
        let c = spivey_degenerate_r_dowling(2, &int(3), 0, 3);
        assert!(c.all_pass());
        assert_eq!(c.rhs, dowling_r(2, &int(3), 3));
        assert!(spivey_degenerate_r_dowling(2, &int(3), 1, 1).all_pass());
        assert!(spivey_degenerate_r_dowling(3, &rat(5, 2), 2, 3).all_pass());
    }

    #[test]
    fn perturbed_side_fails() {
        let mut c = spivey_degenerate_bell(2, 2);
        let bumped = &c.rhs + &XPoly::var();
        c = VerificationCertificate::new(c.identity, [], c.lhs, bumped);
        assert!(!c.pass);
        assert!(!c.all_pass());
    }

    #[test]
    fn certificate_json_is_sorted_and_exact() {
        let c = spivey_degenerate_r_dowling(2, &rat(5, 2), 1, 0);
        let text = c.to_json().to_string();
        assert!(text.starts_with(r#"{"classical_limit":"#), "{text}");
        assert!(
            text.contains(r#""params":{"l":"0","m":"2","n":"1","r":"5/2"}"#),
            "{text}"
        );
        assert!(text.contains(r#""identity":"spivey-deg-r-dowling""#));
    }
}
