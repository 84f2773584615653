//! Normal ordering in the Weyl algebra `a a⁺ - a⁺ a = 1`.
//!
//! Elements are kept in the normal-ordered basis `(a⁺)^i a^j`; coefficients
//! live in any [`Ring`], in practice ℚ[λ]. Scalars and λ never take part in
//! rewriting.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::falling::lambda;
use crate::scalar::Ring;
use crate::triangles::{stirling2_degenerate_row, whitney_r_row};
use crate::{LambdaPoly, Rational};

/// A generator of the algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    /// Annihilation operator `a`.
    A,
    /// Creation operator `a⁺`.
    C,
}

/// A word in `a` and `a⁺`, read left to right.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct OperatorWord(pub Vec<Letter>);

impl OperatorWord {
    pub fn new(letters: Vec<Letter>) -> Self {
        OperatorWord(letters)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    /// Pairs `(p, q)` with `p < q`, an `A` at `p` and a `C` at `q`.
    pub fn inversions(&self) -> usize {
        let mut seen_a = 0;
        let mut count = 0;
        for l in &self.0 {
            match l {
                Letter::A => seen_a += 1,
                Letter::C => count += seen_a,
            }
        }
        count
    }

    pub fn concat(&self, other: &OperatorWord) -> OperatorWord {
        let mut letters = self.0.clone();
        letters.extend_from_slice(&other.0);
        OperatorWord(letters)
    }

    /// The word `(a⁺)^i a^j`.
    pub fn normal_monomial(i: u32, j: u32) -> OperatorWord {
        let mut letters = vec![Letter::C; i as usize];
        letters.extend(std::iter::repeat_n(Letter::A, j as usize));
        OperatorWord(letters)
    }
}

impl fmt::Display for OperatorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<&str> = self
            .0
            .iter()
            .map(|l| match l {
                Letter::A => "a",
                Letter::C => "ad",
            })
            .collect();
        write!(f, "{}", names.join("*"))
    }
}

/// `Σ c_{ij} (a⁺)^i a^j` with no zero coefficients stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NormalForm<T> {
    terms: BTreeMap<(u32, u32), T>,
}

impl<T: Ring> Default for NormalForm<T> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<T: Ring> NormalForm<T> {
    pub fn zero() -> Self {
        NormalForm {
            terms: BTreeMap::new(),
        }
    }

    pub fn identity() -> Self {
        Self::scalar(T::one())
    }

    pub fn scalar(c: T) -> Self {
        Self::monomial(0, 0, c)
    }

    /// `c (a⁺)^i a^j`
    pub fn monomial(i: u32, j: u32, c: T) -> Self {
        let mut nf = Self::zero();
        nf.add_term(i, j, c);
        nf
    }

    /// `a`
    pub fn annihilation() -> Self {
        Self::monomial(0, 1, T::one())
    }

    /// `a⁺`
    pub fn creation() -> Self {
        Self::monomial(1, 0, T::one())
    }

    /// `a⁺ a`
    pub fn number() -> Self {
        Self::monomial(1, 1, T::one())
    }

    /// `(a⁺)^k`
    pub fn creation_power(k: u32) -> Self {
        Self::monomial(k, 0, T::one())
    }

    /// `a^k`
    pub fn annihilation_power(k: u32) -> Self {
        Self::monomial(0, k, T::one())
    }

    pub fn from_terms(terms: impl IntoIterator<Item = ((u32, u32), T)>) -> Self {
        let mut nf = Self::zero();
        for ((i, j), c) in terms {
            nf.add_term(i, j, c);
        }
        nf
    }

    /// Add `c (a⁺)^i a^j` in place.
    pub fn add_term(&mut self, i: u32, j: u32, c: T) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry((i, j)).or_insert_with(T::zero);
        *slot = slot.clone() + c;
        if slot.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    pub fn coeff(&self, i: u32, j: u32) -> T {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(T::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &T)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    /// Largest `i` (creation degree) over all terms.
    pub fn max_creation(&self) -> u32 {
        self.terms.keys().map(|&(i, _)| i).max().unwrap_or(0)
    }

    /// Largest `j` (annihilation degree) over all terms.
    pub fn max_annihilation(&self) -> u32 {
        self.terms.keys().map(|&(_, j)| j).max().unwrap_or(0)
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::from_terms(self.terms.iter().map(|(&k, v)| (k, v.clone() * c.clone())))
    }

    pub fn map_coeffs<U: Ring>(&self, f: impl Fn(&T) -> U) -> NormalForm<U> {
        NormalForm::from_terms(self.terms.iter().map(|(&k, v)| (k, f(v))))
    }

    /// Product using `a^j (a⁺)^i = Σ_s C(j,s) C(i,s) s! (a⁺)^{i-s} a^{j-s}`.
    pub fn multiply(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (&(i1, j1), c1) in &self.terms {
            for (&(i2, j2), c2) in &other.terms {
                let c = c1.clone() * c2.clone();
                for s in 0..=j1.min(i2) {
                    let weight = T::from_int(reorder_weight(j1, i2, s));
                    out.add_term(i1 + i2 - s, j1 + j2 - s, c.clone() * weight);
                }
            }
        }
        out
    }

    /// Product computed by spelling every pair of monomials as a word and
    /// normal-ordering it by rewriting.
    pub fn multiply_by_rewriting(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (&(i1, j1), c1) in &self.terms {
            for (&(i2, j2), c2) in &other.terms {
                let word = OperatorWord::normal_monomial(i1, j1)
                    .concat(&OperatorWord::normal_monomial(i2, j2));
                let c = c1.clone() * c2.clone();
                for (&(i, j), w) in normal_order_word::<T>(&word).terms() {
                    out.add_term(i, j, w.clone() * c.clone());
                }
            }
        }
        out
    }

    /// `A (A - step) (A - 2 step) ⋯ (A - (n-1) step)`, multiplied left to
    /// right.
    pub fn degenerate_power_with_step(&self, n: usize, step: &T) -> Self {
        let mut acc = Self::identity();
        let mut shift = T::zero();
        for _ in 0..n {
            let factor = self - &Self::scalar(shift.clone());
            acc = acc.multiply(&factor);
            shift = shift + step.clone();
        }
        acc
    }

    /// Ordinary power `A^n`.
    pub fn pow(&self, n: usize) -> Self {
        (0..n).fold(Self::identity(), |acc, _| acc.multiply(self))
    }
}

/// `C(j,s) · C(i,s) · s!`
fn reorder_weight(j: u32, i: u32, s: u32) -> i64 {
    let mut w: u128 = 1;
    for t in 0..s {
        w = w * (j - t) as u128 * (i - t) as u128 / (t + 1) as u128;
    }
    i64::try_from(w).expect("reordering coefficient overflows i64")
}

impl<T: Ring> Add for &NormalForm<T> {
    type Output = NormalForm<T>;

    fn add(self, rhs: &NormalForm<T>) -> NormalForm<T> {
        let mut out = self.clone();
        for (&(i, j), c) in &rhs.terms {
            out.add_term(i, j, c.clone());
        }
        out
    }
}

impl<T: Ring> Sub for &NormalForm<T> {
    type Output = NormalForm<T>;

    fn sub(self, rhs: &NormalForm<T>) -> NormalForm<T> {
        let mut out = self.clone();
        for (&(i, j), c) in &rhs.terms {
            out.add_term(i, j, -c.clone());
        }
        out
    }
}

impl<T: Ring> Mul for &NormalForm<T> {
    type Output = NormalForm<T>;

    fn mul(self, rhs: &NormalForm<T>) -> NormalForm<T> {
        self.multiply(rhs)
    }
}

impl<T: Ring> Neg for &NormalForm<T> {
    type Output = NormalForm<T>;

    fn neg(self) -> NormalForm<T> {
        self.map_coeffs(|c| -c.clone())
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl<T: Ring> $trait for NormalForm<T> {
            type Output = NormalForm<T>;

            fn $method(self, rhs: NormalForm<T>) -> NormalForm<T> {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl<T: Ring> Neg for NormalForm<T> {
    type Output = NormalForm<T>;

    fn neg(self) -> NormalForm<T> {
        -&self
    }
}

/// Normal-order a word by repeatedly rewriting the leftmost `a a⁺` as
/// `a⁺ a + 1`. Each rewrite lowers the inversion count, so this terminates.
pub fn normal_order_word<T: Ring>(word: &OperatorWord) -> NormalForm<T> {
    let mut out = NormalForm::zero();
    let mut pending: Vec<(Vec<Letter>, T)> = vec![(word.0.clone(), T::one())];
    while let Some((letters, c)) = pending.pop() {
        let inversion = letters
            .windows(2)
            .position(|w| w[0] == Letter::A && w[1] == Letter::C);
        match inversion {
            None => {
                let i = letters.iter().filter(|&&l| l == Letter::C).count() as u32;
                let j = letters.len() as u32 - i;
                out.add_term(i, j, c);
            }
            Some(p) => {
                let mut swapped = letters.clone();
                swapped.swap(p, p + 1);
                let mut contracted = letters;
                contracted.drain(p..p + 2);
                pending.push((swapped, c.clone()));
                pending.push((contracted, c));
            }
        }
    }
    out
}

pub fn nf_multiply<T: Ring>(p: &NormalForm<T>, q: &NormalForm<T>) -> NormalForm<T> {
    p.multiply(q)
}

/// `[p, q] = pq - qp`
pub fn commutator<T: Ring>(p: &NormalForm<T>, q: &NormalForm<T>) -> NormalForm<T> {
    &p.multiply(q) - &q.multiply(p)
}

/// `(A)_{n,λ} = A (A - λ) ⋯ (A - (n-1)λ)`, multiplied left to right.
pub fn degenerate_power(a: &crate::NormalForm, n: usize) -> crate::NormalForm {
    a.degenerate_power_with_step(n, &lambda())
}

fn lambda_scalar(c: LambdaPoly) -> crate::NormalForm {
    NormalForm::scalar(c)
}

fn rational_scalar(c: Rational) -> crate::NormalForm {
    NormalForm::scalar(LambdaPoly::constant(c))
}

/// `(a⁺ a)_{n,λ} = Σ_k {n brace k}_λ (a⁺)^k a^k`
pub fn check_eq10(n: usize) -> bool {
    let engine = degenerate_power(&NormalForm::number(), n);
    let expected = NormalForm::from_terms(
        stirling2_degenerate_row(n)
            .into_iter()
            .enumerate()
            .map(|(k, s)| ((k as u32, k as u32), s)),
    );
    engine == expected
}

/// `(m a⁺a + r)_{n,λ} = Σ_k W^{(r)}_{m,λ}(n,k) m^k (a⁺)^k a^k`; `r = None`
/// is the Whitney case `r = 1`.
pub fn check_eq34_35(m: u32, n: usize, r: Option<&Rational>) -> bool {
    let one = Rational::one();
    let r = r.unwrap_or(&one);
    let m_rat = Rational::from_int(m as i64);
    let op = &NormalForm::number().scale(&LambdaPoly::constant(m_rat.clone()))
        + &rational_scalar(r.clone());
    let engine = degenerate_power(&op, n);
    let Ok(row) = whitney_r_row(m, r, n) else {
        return false;
    };
    let expected = NormalForm::from_terms(row.into_iter().enumerate().map(|(k, w)| {
        let scale = LambdaPoly::constant(m_rat.pow_u32(k as u32));
        ((k as u32, k as u32), w * scale)
    }));
    engine == expected
}

/// `(a⁺a - mλ)_{n,λ} (a⁺)^k = (a⁺)^k (a⁺a - mλ + k)_{n,λ}` and
/// `m (a⁺a) (a⁺)^k = (a⁺)^k (m a⁺a + mk)`.
pub fn check_theorem23(m: usize, n: usize, k: u32) -> bool {
    let number = NormalForm::number();
    let m_lambda = lambda().scale(&Rational::from_int(m as i64));
    let shifted = &number - &lambda_scalar(m_lambda.clone());
    let lifted = &shifted + &rational_scalar(Rational::from_int(k as i64));
    let ck = NormalForm::creation_power(k);
    let lhs = degenerate_power(&shifted, n).multiply(&ck);
    let rhs = ck.multiply(&degenerate_power(&lifted, n));

    let m_const = LambdaPoly::from_int(m as i64);
    let companion_lhs = number.scale(&m_const).multiply(&ck);
    let companion_rhs = ck.multiply(
        &(&number.scale(&m_const) + &rational_scalar(Rational::from_int(m as i64 * k as i64))),
    );
    lhs == rhs && companion_lhs == companion_rhs
}

/// `(a⁺a)_{m+n,λ} = Σ_j {m brace j}_λ (a⁺)^j (a⁺a + j - mλ)_{n,λ} a^j`
pub fn check_theorem24(n: usize, m: usize) -> bool {
    let number = NormalForm::number();
    let lhs = degenerate_power(&number, m + n);
    let m_lambda = lambda().scale(&Rational::from_int(m as i64));
    let mut rhs = NormalForm::zero();
    for (j, s) in stirling2_degenerate_row(m).into_iter().enumerate() {
        if s.is_zero() {
            continue;
        }
        let shift = LambdaPoly::from_int(j as i64) - m_lambda.clone();
        let inner = degenerate_power(&(&number + &lambda_scalar(shift)), n);
        let j = j as u32;
        let term = NormalForm::creation_power(j)
            .multiply(&inner)
            .multiply(&NormalForm::annihilation_power(j))
            .scale(&s);
        rhs = &rhs + &term;
    }
    lhs == rhs
}
