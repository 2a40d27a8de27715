//! Series solutions of `u = (A + B u^2) w`.
//!
//! Two independent routes produce the same series:
//!
//! - [`closed_form_series`] writes the coefficients directly as
//!   `c_n A^{n+1} B^n` at degree `2n + 1` (Catalan numbers `c_n`);
//! - [`crate::series::fixed_point_solve`] iterates the substitution map
//!   and never consults a Catalan number.
//!
//! [`verify_equivalence`] compares the two coefficientwise and
//! [`residual`] plugs a candidate series back into the equation. Both
//! are exact when the scalars are exact.

use crate::catalan::catalan_number;
use crate::series::{fixed_point_solve, Coeff, TruncatedSeries};

/// The real constants `(A, B)` of `u = (A + B u^2) w`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QuadraticParams {
    pub a: f64,
    pub b: f64,
}

impl QuadraticParams {
    pub fn new(a: f64, b: f64) -> Self {
        assert!(a.is_finite() && b.is_finite(), "A and B must be finite");
        QuadraticParams { a, b }
    }

    /// `A = 0`: the equation degenerates to `u = B u^2 w`, solved by the
    /// zero series.
    pub fn a_is_zero(&self) -> bool {
        self.a == 0.0
    }

    /// `B = 0`: the equation collapses to the polynomial `u = A w`.
    pub fn b_is_zero(&self) -> bool {
        self.b == 0.0
    }
}

/// The series `sum_n c_n A^{n+1} B^n w^{2n+1}` truncated at `order`.
///
/// Even-degree coefficients are identically zero. When `A = 0` every
/// term vanishes and the zero series comes out, which is also the unique
/// solution with `u -> 0` as `w -> 0`; the formula extends to that case
/// on its own.
pub fn closed_form_series<C: Coeff>(a: C, b: C, order: usize) -> TruncatedSeries<C> {
    let mut coeffs = vec![C::zero(); order + 1];
    // weight = A^{n+1} B^n, updated by one factor of A*B per step.
    let mut weight = a.clone();
    let step = a * b;
    // Odd degrees 1, 3, ..., <= order: ceil(order / 2) of them.
    for n in 0..order.div_ceil(2) {
        coeffs[2 * n + 1] = C::from_bigint(&catalan_number(n)) * weight.clone();
        weight = weight * step.clone();
    }
    TruncatedSeries::new(coeffs)
}

/// Outcome of comparing the closed-form series against the fixed-point
/// iteration at a common order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivalenceReport {
    pub order: usize,
    pub equal: bool,
    /// Lowest degree at which the two routes differ, if any.
    pub first_mismatch_degree: Option<usize>,
}

/// Compare [`closed_form_series`] against the fixed-point oracle,
/// coefficient by coefficient. A mismatch is reported, not raised.
pub fn verify_equivalence<C: Coeff>(a: C, b: C, order: usize) -> EquivalenceReport {
    let direct = closed_form_series(a.clone(), b.clone(), order);
    let iterated = fixed_point_solve(a, b, order);
    let first_mismatch_degree = direct
        .coeffs()
        .iter()
        .zip(iterated.coeffs())
        .position(|(x, y)| x != y);
    EquivalenceReport {
        order,
        equal: first_mismatch_degree.is_none(),
        first_mismatch_degree,
    }
}

/// Plug `series` into the equation: returns `(A + B series^2) w - series`
/// at the series' own order. Identically zero exactly when `series`
/// solves the equation through that order.
pub fn residual<C: Coeff>(series: &TruncatedSeries<C>, a: C, b: C) -> TruncatedSeries<C> {
    let order = series.order();
    let inner = TruncatedSeries::constant(a, order).add(&series.mul(series).shift_scale(0, b));
    inner.shift_scale(1, C::one()).sub(series)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_rational::BigRational;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn int_coeffs(values: &[i64]) -> Vec<BigRational> {
        values.iter().map(|&v| rat(v, 1)).collect()
    }

    #[test]
    fn unit_params_give_catalan_at_odd_degrees() {
        let u = closed_form_series(rat(1, 1), rat(1, 1), 9);
        assert_eq!(u.coeffs(), &int_coeffs(&[0, 1, 0, 1, 0, 2, 0, 5, 0, 14])[..]);
    }

    #[test]
    fn zero_b_collapses_to_linear() {
        let u = closed_form_series(rat(1, 1), rat(0, 1), 5);
        assert_eq!(u.coeffs(), &int_coeffs(&[0, 1, 0, 0, 0, 0])[..]);
    }

    #[test]
    fn zero_a_gives_zero_series() {
        let u = closed_form_series(rat(0, 1), rat(7, 1), 11);
        assert!(u.is_zero());
    }

    #[test]
    fn degree_five_coefficient_matches_hand_computation() {
        // c_2 * A^3 * B^2 = 2 * 8 * 9/4 = 36 for A = 2, B = -3/2.
        let u = closed_form_series(rat(2, 1), rat(-3, 2), 5);
        assert_eq!(u.coeff(5), &rat(36, 1));
        assert_eq!(u, fixed_point_solve(rat(2, 1), rat(-3, 2), 5));
    }

    #[test]
    fn equivalence_unit_params_order_41() {
        let report = verify_equivalence(rat(1, 1), rat(1, 1), 41);
        assert!(report.equal);
        assert_eq!(report.first_mismatch_degree, None);
    }

    #[test]
    fn equivalence_zero_a() {
        assert!(verify_equivalence(rat(0, 1), rat(7, 1), 11).equal);
    }

    #[test]
    fn equivalence_rational_params_order_31() {
        assert!(verify_equivalence(rat(3, 2), rat(-5, 3), 31).equal);
    }

    #[test]
    fn residual_of_zero_series_with_zero_a() {
        let zero = TruncatedSeries::<BigRational>::zero(8);
        assert!(residual(&zero, rat(0, 1), rat(9, 1)).is_zero());
    }

    #[test]
    fn residual_of_solution_vanishes() {
        let u = closed_form_series(rat(1, 1), rat(1, 1), 21);
        assert!(residual(&u, rat(1, 1), rat(1, 1)).is_zero());
    }

    #[test]
    fn corrupted_series_shows_up_at_its_own_degree() {
        let u = closed_form_series(rat(1, 1), rat(1, 1), 9);
        let bump = TruncatedSeries::constant(rat(1, 1), 9).shift_scale(3, rat(1, 1));
        let corrupted = u.add(&bump);
        let r = residual(&corrupted, rat(1, 1), rat(1, 1));
        let first_nonzero = r.coeffs().iter().position(|c| !num_traits::Zero::is_zero(c));
        assert_eq!(first_nonzero, Some(3));
    }

    #[test]
    fn scaling_a_down_b_up_divides_coefficients_by_lambda() {
        // (A, B) -> (A/2, 2B) multiplies each odd-degree coefficient
        // by 1/2.
        let base = closed_form_series(rat(3, 1), rat(-2, 1), 9);
        let scaled = closed_form_series(rat(3, 2), rat(-4, 1), 9);
        for (orig, half) in base.coeffs().iter().zip(scaled.coeffs()) {
            assert_eq!(&(orig * rat(1, 2)), half);
        }
    }
}
