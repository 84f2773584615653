//! Degenerate Stirling, Whitney and r-Whitney number triangles.
//!
//! Each family is defined as the connection coefficients between two
//! polynomial bases; those defining expansions are implemented directly by
//! the free functions here. [`TriangleTable`] grows cached rows with a
//! two-term recurrence and is checked against the definitions in tests.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::falling::{
    ff_classical, ff_degenerate, generalized_falling, lambda, to_falling_basis, FallingBasis,
};
use crate::scalar::Ring;
use crate::{LambdaPoly, Rational, XPoly};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TriangleError {
    #[error("coefficient {k} of row {n} is not divisible by {m}^{k}")]
    InexactDivision { m: u32, n: usize, k: usize },
    #[error("Whitney parameter m must be positive")]
    ZeroM,
}

/// A number-triangle family together with its parameters.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Stirling2Deg,
    Stirling1Deg,
    Stirling2Classical,
    WhitneyDeg(u32),
    RWhitneyDeg(u32, Rational),
}

impl Family {
    /// Weight `w(n, k)` of the row recurrence
    /// `T(n+1, k) = T(n, k-1) + w(n, k) · T(n, k)`.
    fn recurrence_weight(&self, n: usize, k: usize) -> LambdaPoly {
        let n_lambda = lambda().scale(&Rational::from_int(n as i64));
        let k_const = LambdaPoly::from_int(k as i64);
        match self {
            Family::Stirling2Deg => k_const - n_lambda,
            Family::Stirling2Classical => k_const,
            Family::Stirling1Deg => {
                lambda().scale(&Rational::from_int(k as i64)) - LambdaPoly::from_int(n as i64)
            }
            Family::WhitneyDeg(m) => LambdaPoly::from_int(*m as i64 * k as i64 + 1) - n_lambda,
            Family::RWhitneyDeg(m, r) => {
                LambdaPoly::constant(Rational::from_int(*m as i64 * k as i64) + r.clone())
                    - n_lambda
            }
        }
    }

    /// Row `n` straight from the defining basis expansion.
    pub fn defining_row(&self, n: usize) -> Result<Vec<LambdaPoly>, TriangleError> {
        match self {
            Family::Stirling2Deg => Ok(stirling2_degenerate_row(n)),
            Family::Stirling1Deg => Ok(stirling1_degenerate_row(n)),
            Family::Stirling2Classical => Ok(stirling2_classical_row(n)
                .into_iter()
                .map(LambdaPoly::constant)
                .collect()),
            Family::WhitneyDeg(m) => whitney_r_row(*m, &Rational::one(), n),
            Family::RWhitneyDeg(m, r) => whitney_r_row(*m, r, n),
        }
    }
}

fn pad_row(mut row: Vec<LambdaPoly>, n: usize) -> Vec<LambdaPoly> {
    row.resize(n + 1, LambdaPoly::zero());
    row
}

fn entry(row: &[LambdaPoly], k: usize) -> LambdaPoly {
    row.get(k).cloned().unwrap_or_else(LambdaPoly::zero)
}

/// Row `n` of `{n brace k}_λ`, `k = 0..=n`.
pub fn stirling2_degenerate_row(n: usize) -> Vec<LambdaPoly> {
    pad_row(
        to_falling_basis(&ff_degenerate(n), FallingBasis::Classical),
        n,
    )
}

/// Degenerate Stirling number of the second kind: coefficient of `(x)_k` in
/// `(x)_{n,λ}`.
pub fn stirling2_degenerate(n: usize, k: usize) -> LambdaPoly {
    entry(&stirling2_degenerate_row(n), k)
}

/// Row `n` of the classical Stirling numbers of the second kind, from
/// `x^n = Σ S(n,k) (x)_k`.
pub fn stirling2_classical_row(n: usize) -> Vec<Rational> {
    let xn = XPoly::monomial(LambdaPoly::one(), n);
    pad_row(to_falling_basis(&xn, FallingBasis::Classical), n)
        .into_iter()
        .map(|c| c.coeff(0))
        .collect()
}

pub fn stirling2_classical(n: usize, k: usize) -> Rational {
    stirling2_classical_row(n)
        .get(k)
        .cloned()
        .unwrap_or_else(Rational::zero)
}

/// Row `n` of `S_{1,λ}(n, k)`: coefficients of `(x)_n` in the degenerate
/// falling basis.
pub fn stirling1_degenerate_row(n: usize) -> Vec<LambdaPoly> {
    pad_row(
        to_falling_basis(&ff_classical(n), FallingBasis::Degenerate),
        n,
    )
}

pub fn stirling1_degenerate(n: usize, k: usize) -> LambdaPoly {
    entry(&stirling1_degenerate_row(n), k)
}

/// Divide `coeffs[k]` by `m^k`.
///
/// The quotient of a genuine Whitney row lies in ℤ[1/q][λ], where `q` is the
/// denominator of `r`; anything else means the expansion was wrong.
pub fn divide_by_m_powers(
    coeffs: Vec<LambdaPoly>,
    m: u32,
    n: usize,
    r_denominator: &BigInt,
) -> Result<Vec<LambdaPoly>, TriangleError> {
    if m == 0 {
        return Err(TriangleError::ZeroM);
    }
    let allowed = num_traits::pow(r_denominator.clone(), n);
    let m_rat = Rational::from_int(m as i64);
    let mut m_power = Rational::one();
    let mut out = Vec::with_capacity(coeffs.len());
    for (k, c) in coeffs.into_iter().enumerate() {
        let q = c.scale(&m_power.recip());
        if q.coeffs()
            .iter()
            .any(|a| !allowed.is_multiple_of(a.denom()))
        {
            return Err(TriangleError::InexactDivision { m, n, k });
        }
        out.push(q);
        m_power *= m_rat.clone();
    }
    Ok(out)
}

/// Row `n` of `W^{(r)}_{m,λ}(n, k)` from `(mx + r)_{n,λ} = Σ W m^k (x)_k`.
pub fn whitney_r_row(m: u32, r: &Rational, n: usize) -> Result<Vec<LambdaPoly>, TriangleError> {
    if m == 0 {
        return Err(TriangleError::ZeroM);
    }
    let base = XPoly::new(vec![
        LambdaPoly::constant(r.clone()),
        LambdaPoly::from_int(m as i64),
    ]);
    let expanded = generalized_falling(&base, n, &XPoly::constant(lambda()));
    let coeffs = pad_row(to_falling_basis(&expanded, FallingBasis::Classical), n);
    divide_by_m_powers(coeffs, m, n, r.denom())
}

/// Degenerate r-Whitney number `W^{(r)}_{m,λ}(n, k)`.
///
/// Panics if `m == 0` or if the defining expansion is not divisible by `m^k`;
/// the latter cannot happen for a correct expansion.
pub fn whitney_r_degenerate(m: u32, r: &Rational, n: usize, k: usize) -> LambdaPoly {
    let row = whitney_r_row(m, r, n).unwrap_or_else(|e| panic!("Whitney row: {e}"));
    entry(&row, k)
}

/// Degenerate Whitney number `W_{m,λ}(n, k)`, the `r = 1` case.
pub fn whitney_degenerate(m: u32, n: usize, k: usize) -> LambdaPoly {
    whitney_r_degenerate(m, &Rational::one(), n, k)
}

/// `W_{1,λ}(n,k) = {n+1 brace k+1}_λ + nλ {n brace k+1}_λ`
pub fn w1_identity_check(n: usize, k: usize) -> bool {
    let lhs = whitney_degenerate(1, n, k);
    let rhs = stirling2_degenerate(n + 1, k + 1)
        + lambda().scale(&Rational::from_int(n as i64)) * stirling2_degenerate(n, k + 1);
    lhs == rhs
}

/// Row-cached triangle for one family.
///
/// Rows are appended whole under a write lock, so readers see either a
/// complete row or trigger its computation.
#[derive(Debug)]
pub struct TriangleTable {
    family: Family,
    rows: RwLock<Vec<Arc<[LambdaPoly]>>>,
}

impl TriangleTable {
    pub fn new(family: Family) -> Self {
        let first: Arc<[LambdaPoly]> = Arc::from(vec![LambdaPoly::one()]);
        TriangleTable {
            family,
            rows: RwLock::new(vec![first]),
        }
    }

    pub fn family(&self) -> &Family {
        &self.family
    }

    /// Row `n`, entries `k = 0..=n`.
    pub fn row(&self, n: usize) -> Arc<[LambdaPoly]> {
        if let Some(row) = self.rows.read().expect("triangle lock").get(n) {
            return row.clone();
        }
        let mut rows = self.rows.write().expect("triangle lock");
        while rows.len() <= n {
            let prev_n = rows.len() - 1;
            let next = self.next_row(&rows[prev_n], prev_n);
            rows.push(Arc::from(next));
        }
        rows[n].clone()
    }

    pub fn get(&self, n: usize, k: usize) -> LambdaPoly {
        entry(&self.row(n), k)
    }

    fn next_row(&self, prev: &[LambdaPoly], n: usize) -> Vec<LambdaPoly> {
        (0..=n + 1)
            .map(|k| {
                let left = if k > 0 {
                    entry(prev, k - 1)
                } else {
                    LambdaPoly::zero()
                };
                left + self.family.recurrence_weight(n, k) * entry(prev, k)
            })
            .collect()
    }
}

/// Shared tables keyed by family and parameters.
#[derive(Debug, Default)]
pub struct TableCache {
    tables: Mutex<HashMap<Family, Arc<TriangleTable>>>,
}

impl TableCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn table(&self, family: &Family) -> Arc<TriangleTable> {
        self.tables
            .lock()
            .expect("table cache lock")
            .entry(family.clone())
            .or_insert_with(|| Arc::new(TriangleTable::new(family.clone())))
            .clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::falling::SubstLambda;
    use crate::scalar::{int, rat};

    fn lp(cs: &[i64]) -> LambdaPoly {
        LambdaPoly::new(cs.iter().map(|&c| int(c)).collect())
    }

    #[test]
    fn stirling2_degenerate_examples() {
        assert_eq!(stirling2_degenerate(2, 1), lp(&[1, -1]));
        assert_eq!(stirling2_degenerate(3, 1), lp(&[1, -3, 2]));
        for n in 0..8 {
            assert_eq!(stirling2_degenerate(n, n), LambdaPoly::one());
            assert!(stirling2_degenerate(n, n + 1).is_zero());
        }
        assert!(stirling2_degenerate(3, 0).is_zero());
    }

    #[test]
    fn stirling2_classical_examples() {
        assert_eq!(stirling2_classical(3, 2), int(3));
        assert_eq!(stirling2_classical(4, 2), int(7));
        assert_eq!(stirling2_classical(6, 6), int(1));
        assert_eq!(stirling2_classical(0, 0), int(1));
        assert_eq!(stirling2_classical(2, 5), int(0));
    }

    #[test]
    fn stirling1_degenerate_examples() {
        assert_eq!(stirling1_degenerate(2, 1), lp(&[-1, 1]));
        assert!(stirling1_degenerate(1, 0).is_zero());
        for n in 0..8 {
            assert_eq!(stirling1_degenerate(n, n), LambdaPoly::one());
        }
    }

    #[test]
    fn whitney_examples() {
        for m in 1..=4u32 {
            let mi = m as i64;
            assert_eq!(whitney_degenerate(m, 2, 1), lp(&[mi + 2, -1]));
            assert_eq!(whitney_degenerate(m, 2, 0), lp(&[1, -1]));
            for n in 0..6 {
                assert_eq!(whitney_degenerate(m, n, n), LambdaPoly::one());
            }
        }
    }

    #[test]
    fn r_whitney_examples() {
        for m in 1..=3u32 {
            for r in [int(0), int(2), rat(5, 2), rat(1, 3)] {
                assert_eq!(
                    whitney_r_degenerate(m, &r, 1, 0),
                    LambdaPoly::constant(r.clone())
                );
                assert_eq!(whitney_r_degenerate(m, &r, 0, 0), LambdaPoly::one());
            }
            for n in 0..6 {
                for k in 0..=n {
                    assert_eq!(
                        whitney_r_degenerate(m, &int(1), n, k),
                        whitney_degenerate(m, n, k)
                    );
                }
            }
        }
    }

    #[test]
    fn inexact_division_is_reported() {
        let err = divide_by_m_powers(vec![lp(&[1]), lp(&[3])], 2, 1, &BigInt::one());
        assert_eq!(
            err,
            Err(TriangleError::InexactDivision { m: 2, n: 1, k: 1 })
        );
        assert_eq!(whitney_r_row(0, &int(1), 2), Err(TriangleError::ZeroM));
    }

    #[test]
    fn w1_identity_examples() {
        assert!(w1_identity_check(2, 0));
        assert_eq!(whitney_degenerate(1, 2, 0), lp(&[1, -1]));
        assert!(w1_identity_check(0, 0));
        assert!(w1_identity_check(3, 1));
        for n in 0..9 {
            for k in 0..=n {
                assert!(w1_identity_check(n, k), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn recurrence_tables_match_definitions() {
        let families = [
            Family::Stirling2Deg,
            Family::Stirling1Deg,
            Family::Stirling2Classical,
            Family::WhitneyDeg(1),
            Family::WhitneyDeg(3),
            Family::RWhitneyDeg(2, int(0)),
            Family::RWhitneyDeg(3, rat(5, 2)),
        ];
        for family in families {
            let table = TriangleTable::new(family.clone());
            for n in 0..=12 {
                let defined = family.defining_row(n).unwrap();
                assert_eq!(&*table.row(n), defined.as_slice(), "{family:?} n={n}");
            }
        }
    }

    #[test]
    fn table_cache_shares_tables() {
        let cache = TableCache::new();
        let a = cache.table(&Family::WhitneyDeg(2));
        let b = cache.table(&Family::WhitneyDeg(2));
        assert!(Arc::ptr_eq(&a, &b));
        assert_eq!(a.get(2, 0), lp(&[1, -1]));
        assert!(!Arc::ptr_eq(&a, &cache.table(&Family::WhitneyDeg(3))));
    }

    #[test]
    fn table_rows_are_consistent_across_threads() {
        let table = Arc::new(TriangleTable::new(Family::Stirling2Deg));
        let handles: Vec<_> = (0..4)
            .map(|t| {
                let table = table.clone();
                std::thread::spawn(move || table.row(6 + t))
            })
            .collect();
        for (t, h) in handles.into_iter().enumerate() {
            let row = h.join().unwrap();
            assert_eq!(&*row, stirling2_degenerate_row(6 + t).as_slice());
        }
    }

    #[test]
    fn classical_limits() {
        for n in 0..=10 {
            for k in 0..=n {
                assert_eq!(
                    stirling2_degenerate(n, k).subst_lambda(&int(0)),
                    stirling2_classical(n, k)
                );
            }
        }
    }
}
