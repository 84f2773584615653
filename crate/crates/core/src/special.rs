//! Degenerate Bell, Dowling and r-Dowling polynomials.

use std::collections::BTreeMap;
use std::sync::RwLock;

use num_traits::{One, Zero};

use crate::falling::{gff_scalar, SubstLambda};
use crate::scalar::{factorial, Ring};
use crate::triangles::{stirling2_degenerate_row, whitney_r_row};
use crate::{LambdaPoly, Rational, XPoly};

/// Generating polynomial `Σ_k row[k] x^k` of a triangle row.
pub fn row_polynomial(row: Vec<LambdaPoly>) -> XPoly {
    XPoly::new(row)
}

/// `φ_{n,λ}(x) = Σ_k {n brace k}_λ x^k`.
pub fn bell_degenerate(n: usize) -> XPoly {
    row_polynomial(stirling2_degenerate_row(n))
}

/// The classical Bell polynomial `φ_n(x)`, as the λ = 0 specialization.
pub fn bell_classical(n: usize) -> XPoly {
    bell_degenerate(n).subst_lambda(&Rational::zero())
}

/// Bell number `φ_n(1)`.
pub fn bell_number(n: usize) -> Rational {
    bell_classical(n).eval(&LambdaPoly::one()).coeff(0)
}

/// `D^{(r)}_{m,λ}(n, x) = Σ_k W^{(r)}_{m,λ}(n, k) x^k`.
///
/// Panics if `m == 0`.
pub fn dowling_r(m: u32, r: &Rational, n: usize) -> XPoly {
    let row = whitney_r_row(m, r, n).unwrap_or_else(|e| panic!("Whitney row: {e}"));
    row_polynomial(row)
}

/// `D_{m,λ}(n, x)`, the `r = 1` case of [`dowling_r`].
pub fn dowling(m: u32, n: usize) -> XPoly {
    dowling_r(m, &Rational::one(), n)
}

/// `exp(f)` for a truncated series `f` with zero constant term, from
/// `n g_n = Σ_{k=1}^{n} k f_k g_{n-k}`.
pub fn series_exp(f: &[XPoly], order: usize) -> Vec<XPoly> {
    debug_assert!(f.first().is_none_or(Zero::is_zero));
    let mut g = vec![XPoly::one()];
    for n in 1..=order {
        let acc: XPoly = (1..=n)
            .filter_map(|k| {
                let fk = f.get(k)?;
                Some((fk * &g[n - k]).scale(&LambdaPoly::from_int(k as i64)))
            })
            .sum();
        g.push(acc.scale(&LambdaPoly::constant(Rational::from_int(n as i64).recip())));
    }
    g
}

/// `φ_{n,λ}(x)` for `n = 0..=n_max`, read off the generating function
/// `exp(x (e_λ(t) - 1))` with `e_λ(t) = Σ_k (1)_{k,λ} t^k / k!`.
pub fn bell_gf_oracle(n_max: usize) -> Vec<XPoly> {
    let x = XPoly::var();
    let inner: Vec<XPoly> = (0..=n_max)
        .map(|k| {
            if k == 0 {
                return XPoly::zero();
            }
            let c = gff_scalar(&LambdaPoly::one(), k).scale(&factorial(k as u32).recip());
            x.scale(&c)
        })
        .collect();
    series_exp(&inner, n_max)
        .into_iter()
        .enumerate()
        .map(|(n, g)| g.scale(&LambdaPoly::constant(factorial(n as u32))))
        .collect()
}

/// A polynomial family with its parameters.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum PolyKind {
    BellDeg,
    DowlingDeg(u32),
    RDowlingDeg(u32, Rational),
}

impl PolyKind {
    pub fn compute(&self, n: usize) -> XPoly {
        match self {
            PolyKind::BellDeg => bell_degenerate(n),
            PolyKind::DowlingDeg(m) => dowling(*m, n),
            PolyKind::RDowlingDeg(m, r) => dowling_r(*m, r, n),
        }
    }
}

/// Per-family cache of polynomials by index.
#[derive(Debug)]
pub struct PolyFamily {
    kind: PolyKind,
    cache: RwLock<BTreeMap<usize, XPoly>>,
}

impl PolyFamily {
    pub fn new(kind: PolyKind) -> Self {
        PolyFamily {
            kind,
            cache: RwLock::new(BTreeMap::new()),
        }
    }

    pub fn kind(&self) -> &PolyKind {
        &self.kind
    }

    pub fn get(&self, n: usize) -> XPoly {
        if let Some(p) = self.cache.read().expect("poly cache lock").get(&n) {
            return p.clone();
        }
        let p = self.kind.compute(n);
        self.cache
            .write()
            .expect("poly cache lock")
            .entry(n)
            .or_insert(p)
            .clone()
    }
}
