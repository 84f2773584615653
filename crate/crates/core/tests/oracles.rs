//! Cross-checks of the library against independent brute-force routes.

use num_traits::{One, Zero};
use proptest::prelude::*;

use spivey_core::falling::{generalized_falling, xconst};
use spivey_core::special::{bell_classical, bell_degenerate, bell_gf_oracle, dowling, dowling_r};
use spivey_core::triangles::{
    stirling1_degenerate, stirling2_classical, stirling2_degenerate, whitney_degenerate,
    whitney_r_degenerate,
};
use spivey_core::{
    binomial, ff_degenerate, from_falling_basis, int, lambda, to_falling_basis, FallingBasis,
    LambdaPoly, Poly, Rational, Ring, SubstLambda, XPoly,
};

/// Number of set partitions of `{0..n}` into exactly `k` blocks, by walking
/// restricted growth strings.
fn count_partitions(n: usize, k: usize) -> u64 {
    fn walk(pos: usize, n: usize, blocks: usize, k: usize) -> u64 {
        if pos == n {
            return u64::from(blocks == k);
        }
        let mut total = 0;
        for b in 0..=blocks {
            let next = if b == blocks { blocks + 1 } else { blocks };
            if next <= k {
                total += walk(pos + 1, n, next, k);
            }
        }
        total
    }
    walk(0, n, 0, k)
}

fn bell_by_enumeration(n: usize) -> u64 {
    (0..=n).map(|k| count_partitions(n, k)).sum()
}

/// Classical Stirling numbers of the second kind from the explicit
/// inclusion-exclusion sum `k! S(n,k) = Σ_i (-1)^i C(k,i) (k-i)^n`.
fn stirling2_inclusion_exclusion(n: usize, k: usize) -> Rational {
    let mut acc = Rational::zero();
    for i in 0..=k {
        let sign = if i % 2 == 0 { int(1) } else { int(-1) };
        acc += sign * binomial(k as u64, i as i64) * int((k - i) as i64).pow_u32(n as u32);
    }
    let k_fact = (1..=k as i64).fold(int(1), |a, b| a * int(b));
    acc / k_fact
}

/// Stirling-matrix route for basis conversion: `x^n = Σ_k step^{n-k} S(n,k)
/// ∏_{i<k} (x - i·step)`.
fn falling_basis_by_matrix(p: &XPoly, basis: FallingBasis) -> Vec<LambdaPoly> {
    let step = match basis {
        FallingBasis::Classical => LambdaPoly::one(),
        FallingBasis::Degenerate => lambda(),
    };
    let len = p.coeffs().len();
    let mut out = vec![LambdaPoly::zero(); len];
    for (n, c) in p.coeffs().iter().enumerate() {
        for (k, slot) in out.iter_mut().enumerate().take(n + 1) {
            let s = LambdaPoly::constant(stirling2_inclusion_exclusion(n, k));
            *slot = slot.clone() + c.clone() * s * step.pow_u32((n - k) as u32);
        }
    }
    out
}

#[test]
fn partition_counts_match_stirling_and_bell() {
    let expected_bell = [1u64, 1, 2, 5, 15, 52, 203, 877, 4140, 21147, 115975];
    for (n, &b) in expected_bell.iter().enumerate() {
        assert_eq!(bell_by_enumeration(n), b);
        let at_one = bell_classical(n).eval(&LambdaPoly::one());
        assert_eq!(at_one, LambdaPoly::constant(int(b as i64)), "n={n}");
        for k in 0..=n {
            assert_eq!(
                stirling2_classical(n, k),
                int(count_partitions(n, k) as i64),
                "n={n} k={k}"
            );
        }
    }
}

#[test]
fn bell_at_lambda_zero_is_partition_count() {
    for n in 0..=10 {
        let value = bell_degenerate(n)
            .subst_lambda(&int(0))
            .eval(&LambdaPoly::one());
        assert_eq!(
            value,
            LambdaPoly::constant(int(bell_by_enumeration(n) as i64))
        );
    }
}

#[test]
fn generating_function_route_matches_stirling_route() {
    let series = bell_gf_oracle(12);
    for (n, p) in series.iter().enumerate() {
        assert_eq!(p, &bell_degenerate(n), "n={n}");
    }
}

#[test]
fn inverse_pair_orthogonality() {
    for n in 0..=12 {
        for j in 0..=12 {
            let sum: LambdaPoly = (0..=n.max(j))
                .map(|k| stirling1_degenerate(n, k) * stirling2_degenerate(k, j))
                .sum();
            let delta = if n == j {
                LambdaPoly::one()
            } else {
                LambdaPoly::zero()
            };
            assert_eq!(sum, delta, "n={n} j={j}");
        }
    }
}

#[test]
fn stirling2_recurrence_reproduces_definition() {
    // T(n+1, k) = T(n, k-1) + (k - nλ) T(n, k)
    for n in 0..12usize {
        for k in 0..=n + 1 {
            let left = if k > 0 {
                stirling2_degenerate(n, k - 1)
            } else {
                LambdaPoly::zero()
            };
            let weight = LambdaPoly::from_int(k as i64) - lambda().scale(&int(n as i64));
            assert_eq!(
                stirling2_degenerate(n + 1, k),
                left + weight * stirling2_degenerate(n, k)
            );
        }
    }
}

#[test]
fn classical_whitney_limit() {
    // (mx + 1)^n = Σ W_m(n,k) m^k (x)_k, expanded independently.
    for m in 1..=3u32 {
        let mi = m as i64;
        for n in 0..=8usize {
            let base = XPoly::new(vec![LambdaPoly::one(), LambdaPoly::from_int(mi)]);
            let power = base.pow_u32(n as u32);
            let coeffs = falling_basis_by_matrix(&power, FallingBasis::Classical);
            for (k, c) in coeffs.iter().enumerate().take(n + 1) {
                let classical = c.coeff(0) / int(mi).pow_u32(k as u32);
                let limit = whitney_degenerate(m, n, k).subst_lambda(&int(0));
                assert_eq!(limit, classical, "m={m} n={n} k={k}");
            }
        }
    }
}

#[test]
fn unit_whitney_at_lambda_zero_through_stirling() {
    // W_1(n,k) = S(n+1, k+1) at λ = 0.
    for n in 0..=8 {
        for k in 0..=n {
            let w = whitney_r_degenerate(1, &int(1), n, k).subst_lambda(&int(0));
            assert_eq!(w, stirling2_classical(n + 1, k + 1));
        }
    }
}

#[test]
fn dowling_one_through_w1_identity() {
    for n in 0..=10usize {
        let expected = XPoly::new(
            (0..=n)
                .map(|k| {
                    stirling2_degenerate(n + 1, k + 1)
                        + lambda().scale(&int(n as i64)) * stirling2_degenerate(n, k + 1)
                })
                .collect(),
        );
        assert_eq!(dowling(1, n), expected, "n={n}");
    }
}

#[test]
fn r_dowling_is_monic_of_exact_degree() {
    for m in 1..=3u32 {
        for r in [int(0), int(1), int(2), spivey_core::rat(5, 2)] {
            for n in 0..=8 {
                let p = dowling_r(m, &r, n);
                assert_eq!(p.degree(), Some(n));
                assert_eq!(p.leading_coeff(), LambdaPoly::one());
            }
        }
    }
}

#[test]
fn binomial_falling_factorial_identity() {
    // (x + y)_{n,λ} = Σ_k C(n,k) (x)_{n-k,λ} (y)_{k,λ} in ℚ[λ][x][y].
    type XYPoly = Poly<XPoly>;
    let y = XYPoly::var();
    let x = XYPoly::constant(XPoly::var());
    let step = XYPoly::constant(XPoly::constant(lambda()));
    for n in 0..=10usize {
        let lhs = generalized_falling(&(&x + &y), n, &step);
        let mut rhs = XYPoly::zero();
        for k in 0..=n {
            let x_part = XYPoly::constant(ff_degenerate(n - k));
            let y_part = ff_degenerate(k).map(|c| XPoly::constant(c.clone()));
            let c = XYPoly::constant(xconst(binomial(n as u64, k as i64)));
            rhs = rhs + c * x_part * y_part;
        }
        assert_eq!(lhs, rhs, "n={n}");
    }
}

fn small_xpoly(max_degree: usize) -> impl Strategy<Value = XPoly> {
    let coeff = proptest::collection::vec((-6i64..=6, 1i64..=4), 0..=3).prop_map(|cs| {
        LambdaPoly::new(
            cs.into_iter()
                .map(|(p, q)| spivey_core::rat(p, q))
                .collect(),
        )
    });
    proptest::collection::vec(coeff, 0..=max_degree + 1).prop_map(XPoly::new)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn falling_basis_round_trip(p in small_xpoly(12)) {
        for basis in [FallingBasis::Classical, FallingBasis::Degenerate] {
            let coeffs = to_falling_basis(&p, basis);
            prop_assert_eq!(coeffs.len(), p.coeffs().len());
            prop_assert_eq!(from_falling_basis(&coeffs, basis), p.clone());
        }
    }

    #[test]
    fn synthetic_division_matches_stirling_matrix(p in small_xpoly(8)) {
        for basis in [FallingBasis::Classical, FallingBasis::Degenerate] {
            prop_assert_eq!(to_falling_basis(&p, basis), falling_basis_by_matrix(&p, basis));
        }
    }

    #[test]
    fn ring_axioms(a in small_xpoly(4), b in small_xpoly(4), c in small_xpoly(4)) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &XPoly::one(), a.clone());
    }
}

#[test]
fn degenerate_falling_factorial_at_lambda_zero() {
    for n in 0..=20 {
        assert_eq!(
            ff_degenerate(n).subst_lambda(&int(0)),
            XPoly::monomial(LambdaPoly::one(), n)
        );
    }
}

#[test]
fn inclusion_exclusion_oracle_agrees_with_classical_triangle() {
    for n in 0..=10 {
        for k in 0..=n {
            assert_eq!(
                stirling2_inclusion_exclusion(n, k),
                stirling2_classical(n, k)
            );
        }
    }
}
