//! Exact arithmetic foundation: Laurent polynomials in `A`, rational
//! functions, and truncated `q`-series.
//!
//! All skein values live in `Q(A)` with `q = A^4`. The three types here are
//! immutable values and every operation is a pure function.

mod laurent;
mod rational;
mod series;

pub use laurent::{LaurentPoly, Rat};
pub use rational::RationalFn;
pub use series::QSeries;

pub(crate) use laurent::{rat, rat_frac};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithmeticError {
    #[error("no exact polynomial quotient exists")]
    NotDivisible,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("Laurent polynomial has a negative exponent; normalize first")]
    NegativeExponent,
    #[error("the zero polynomial has no lowest term")]
    ZeroPolynomial,
    #[error("malformed [exponent, numerator, denominator] triple")]
    BadTriple,
}

/// Truncation of the Euler product `(q;q)_inf = prod_{m>=1} (1 - q^m)`.
///
/// `order` is in quarter units. Factors with `m > ceil(order/4) + 1` cannot
/// affect any retained coefficient, so the product stops there.
pub fn euler_inf(order: usize) -> QSeries {
    let m_max = order / 4 + usize::from(order % 4 > 0) + 1;
    let mut out = QSeries::one(order);
    for m in 1..=m_max {
        let mut factor = QSeries::one(order);
        let idx = 4 * m;
        if idx <= order {
            factor = &factor - &monomial_series(idx, order);
        }
        out = &out * &factor;
    }
    out
}

fn monomial_series(idx: usize, order: usize) -> QSeries {
    let mut s = QSeries::zero(order);
    s.add_shifted(&QSeries::one(0), idx, &rat(1));
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn euler_inf_pentagonal_prefix() {
        // Through q^7: 1 - q - q^2 + q^5 + q^7
        let e = euler_inf(28);
        let expect = [1i64, -1, -1, 0, 0, 1, 0, 1];
        for (k, &c) in expect.iter().enumerate() {
            assert_eq!(e.q_coeff(k), rat(c), "coefficient of q^{}", k);
        }
    }

    #[test]
    fn euler_inf_order_zero() {
        assert_eq!(euler_inf(0), QSeries::one(0));
    }

    #[test]
    fn euler_inf_through_q12() {
        // Pentagonal expansion ends -q^12 at this order.
        let e = euler_inf(48);
        let expect = [1i64, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1];
        for (k, &c) in expect.iter().enumerate() {
            assert_eq!(e.q_coeff(k), rat(c), "coefficient of q^{}", k);
        }
    }

    #[test]
    fn euler_inf_matches_literal_partial_product() {
        // Against prod_{m <= order_q} (1 - q^m) multiplied the long way.
        let order = 40;
        let e = euler_inf(order);
        let mut lit = QSeries::one(order);
        for m in 1..=order {
            let mut f = QSeries::one(order);
            if 4 * m <= order {
                f = &f - &monomial_series(4 * m, order);
            }
            lit = &lit * &f;
        }
        assert_eq!(e, lit);
    }
}
