//! Truncated formal power series and the fixed-point substitution
//! iteration.
//!
//! A `TruncatedSeries<C>` stores the coefficients `a_0 ..= a_N` of a
//! series truncated at order `N` (so `coeffs.len() == N + 1`, always).
//! Storage is dense: zero coefficients keep their slot, which makes
//! coefficientwise comparison between independently computed series
//! trivial.
//!
//! Truncation policy: every binary operation truncates to the minimum
//! of the operand orders. Anything beyond that degree would depend on
//! coefficients an operand never carried, so keeping it would silently
//! produce garbage.
//!
//! The scalar type is chosen statically: `BigRational` for the exact
//! pipeline, `f64` for evaluation experiments. Mixing the two in one
//! operation is a compile error rather than a runtime one.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Scalars a series can carry: exact rationals or floats.
pub trait Coeff:
    Clone
    + PartialEq
    + std::fmt::Debug
    + Zero
    + One
    + std::ops::Sub<Output = Self>
    + std::ops::Neg<Output = Self>
{
    fn from_bigint(n: &BigInt) -> Self;
}

impl Coeff for BigRational {
    fn from_bigint(n: &BigInt) -> Self {
        BigRational::from_integer(n.clone())
    }
}

impl Coeff for f64 {
    fn from_bigint(n: &BigInt) -> Self {
        // Saturates to +-inf once past f64 range (around 10^308).
        n.to_f64().unwrap_or_else(|| {
            if n.is_negative() {
                f64::NEG_INFINITY
            } else {
                f64::INFINITY
            }
        })
    }
}

/// Coefficients `a_0 ..= a_N` of a power series in `w`, truncated at
/// order `N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries<C> {
    coeffs: Vec<C>,
}

impl<C: Coeff> TruncatedSeries<C> {
    /// Wrap a dense coefficient vector; `coeffs[k]` multiplies `w^k`.
    pub fn new(coeffs: Vec<C>) -> Self {
        assert!(!coeffs.is_empty(), "a series carries at least order 0");
        TruncatedSeries { coeffs }
    }

    /// The zero series truncated at `order`.
    pub fn zero(order: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![C::zero(); order + 1],
        }
    }

    /// The constant series `c` truncated at `order`.
    pub fn constant(c: C, order: usize) -> Self {
        let mut coeffs = vec![C::zero(); order + 1];
        coeffs[0] = c;
        TruncatedSeries { coeffs }
    }

    /// Highest retained exponent.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    /// Coefficient of `w^k`; zero beyond the truncation order is the
    /// caller's business, so indexing past it panics.
    pub fn coeff(&self, k: usize) -> &C {
        &self.coeffs[k]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Coefficientwise sum, truncated to the smaller order.
    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().min(other.coeffs.len());
        let coeffs = (0..n)
            .map(|k| self.coeffs[k].clone() + other.coeffs[k].clone())
            .collect();
        TruncatedSeries { coeffs }
    }

    /// Coefficientwise difference, truncated to the smaller order.
    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().min(other.coeffs.len());
        let coeffs = (0..n)
            .map(|k| self.coeffs[k].clone() - other.coeffs[k].clone())
            .collect();
        TruncatedSeries { coeffs }
    }

    /// Cauchy product, truncated to the smaller order:
    /// `c_k = sum_{i+j=k} a_i b_j`.
    pub fn mul(&self, other: &Self) -> Self {
        let n = self.coeffs.len().min(other.coeffs.len());
        let mut coeffs = vec![C::zero(); n];
        for i in 0..n {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..n - i {
                if other.coeffs[j].is_zero() {
                    continue;
                }
                let term = self.coeffs[i].clone() * other.coeffs[j].clone();
                coeffs[i + j] = coeffs[i + j].clone() + term;
            }
        }
        TruncatedSeries { coeffs }
    }

    /// Multiply by `scalar * w^power`, truncating at the original order.
    pub fn shift_scale(&self, power: usize, scalar: C) -> Self {
        let n = self.coeffs.len();
        let mut coeffs = vec![C::zero(); n];
        for k in 0..n.saturating_sub(power) {
            coeffs[k + power] = self.coeffs[k].clone() * scalar.clone();
        }
        TruncatedSeries { coeffs }
    }
}

impl TruncatedSeries<BigRational> {
    /// Lossy conversion of an exact series to floats.
    pub fn to_f64(&self) -> TruncatedSeries<f64> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| c.to_f64().unwrap_or(f64::NAN))
            .collect();
        TruncatedSeries { coeffs }
    }
}

/// Horner evaluation of a float series plus the partial-sum trace
/// `S_0 ..= S_N` (the trace feeds convergence diagnostics).
pub fn evaluate(series: &TruncatedSeries<f64>, w: f64) -> (f64, Vec<f64>) {
    let coeffs = series.coeffs();
    let value = coeffs.iter().rev().fold(0.0, |acc, c| acc * w + c);
    let mut partials = Vec::with_capacity(coeffs.len());
    let mut sum = 0.0;
    let mut pw = 1.0;
    for c in coeffs {
        sum += c * pw;
        partials.push(sum);
        pw *= w;
    }
    (value, partials)
}

/// Solve `u = (A + B u^2) w` degree by degree: iterate the substitution
/// map from `u = 0`, truncating at `order` throughout.
///
/// Each pass determines at least two further orders, so `order / 2 + 1`
/// passes pin down every retained coefficient. One extra certification
/// pass then asserts that the series has genuinely stabilized.
pub fn fixed_point_solve<C: Coeff>(a: C, b: C, order: usize) -> TruncatedSeries<C> {
    let mut u = TruncatedSeries::zero(order);
    for _ in 0..order / 2 + 1 {
        u = substitution_step(&u, &a, &b);
    }
    let certify = substitution_step(&u, &a, &b);
    assert_eq!(certify, u, "fixed-point iteration failed to stabilize");
    u
}

// One application of u -> (A + B u^2) w at fixed truncation order.
fn substitution_step<C: Coeff>(u: &TruncatedSeries<C>, a: &C, b: &C) -> TruncatedSeries<C> {
    let order = u.order();
    let inner = TruncatedSeries::constant(a.clone(), order)
        .add(&u.mul(u).shift_scale(0, b.clone()));
    inner.shift_scale(1, C::one())
}
