//! Bivariate polynomials P(T, Y), monic in Y, and their discriminant
//! with respect to Y. Used to read rational branch-point candidates off
//! an affine equation.

use num::One;

use super::poly::{interpolate, resultant, PolyQ};
use super::ratq::{ratq_int, RatQ};
use super::QarithError;

/// P(T, Y) = sum_k c_k(T) Y^k, stored lowest Y-degree first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiPoly {
    coeffs_y: Vec<PolyQ>,
}

impl BiPoly {
    pub fn new(mut coeffs_y: Vec<PolyQ>) -> Self {
        while coeffs_y.last().is_some_and(|c| c.is_zero()) {
            coeffs_y.pop();
        }
        BiPoly { coeffs_y }
    }

    pub fn deg_y(&self) -> usize {
        self.coeffs_y.len().saturating_sub(1)
    }

    pub fn deg_t(&self) -> usize {
        self.coeffs_y
            .iter()
            .map(|c| c.deg_or_zero())
            .max()
            .unwrap_or(0)
    }

    pub fn is_monic_in_y(&self) -> bool {
        self.coeffs_y
            .last()
            .is_some_and(|c| *c == PolyQ::one())
    }

    /// d/dY.
    pub fn derivative_y(&self) -> BiPoly {
        if self.coeffs_y.len() <= 1 {
            return BiPoly::new(vec![]);
        }
        BiPoly::new(
            self.coeffs_y[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c.scale(&ratq_int(i as i64 + 1)))
                .collect(),
        )
    }

    /// P(t, Y) as a univariate polynomial in Y.
    pub fn eval_t(&self, t: &RatQ) -> PolyQ {
        PolyQ::new(self.coeffs_y.iter().map(|c| c.eval(t)).collect())
    }

    /// P(T + c, Y).
    pub fn shift_t(&self, c: &RatQ) -> BiPoly {
        let t_plus_c = PolyQ::new(vec![c.clone(), RatQ::one()]);
        BiPoly::new(
            self.coeffs_y
                .iter()
                .map(|p| p.compose(&t_plus_c))
                .collect(),
        )
    }
}

/// Discriminant of P with respect to Y as a polynomial in T, computed as
/// the plain resultant res_Y(P, dP/dY) without the usual sign or
/// leading-coefficient normalization; only its root set is contractual.
///
/// Implementation: both inputs have constant leading Y-coefficients
/// (P is monic), so specializing T commutes with the resultant; the
/// result is recovered by exact interpolation at integer nodes.
pub fn discriminant_y(p: &BiPoly) -> Result<PolyQ, QarithError> {
    if !p.is_monic_in_y() || p.deg_y() < 1 {
        return Err(QarithError::NotMonic);
    }
    let dp = p.derivative_y();
    let n = p.deg_y();
    let dt = p.deg_t();
    // deg_T res <= deg_Y(dp)*deg_T(p) + deg_Y(p)*deg_T(dp)
    let bound = (n - 1) * dt + n * dp.deg_t();
    let mut pts = Vec::with_capacity(bound + 1);
    let mut t = 0i64;
    while pts.len() < bound + 1 {
        let tq = ratq_int(t);
        let f = p.eval_t(&tq);
        let g = dp.eval_t(&tq);
        pts.push((tq, resultant(&f, &g)));
        t = if t > 0 { -t } else { -t + 1 };
    }
    Ok(interpolate(&pts))
}
