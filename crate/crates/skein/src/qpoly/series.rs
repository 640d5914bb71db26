//! Truncated power series in quarter powers of `q`.
//!
//! Index `e` holds the coefficient of `q^{e/4} = A^e`, so the series ring can
//! carry unnormalized invariants with fractional `q`-powers. Arithmetic on two
//! series truncates to the smaller order. Rendering in the variable `q` is
//! only permitted when every nonzero index is divisible by 4.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{One, Signed, Zero};


use super::laurent::{LaurentPoly, Rat};
use super::rational::RationalFn;
use super::ArithmeticError;

/// Truncated series `sum_{e=0..=order} c_e A^e` with `A = q^{1/4}`.
#[derive(Clone, PartialEq, Eq)]
pub struct QSeries {
    coeffs: Vec<Rat>,
}

impl QSeries {
    /// The zero series truncated at `order` (in quarter units).
    pub fn zero(order: usize) -> Self {
        QSeries {
            coeffs: vec![Rat::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = Rat::one();
        s
    }

    /// Builds from whole-`q`-unit coefficients, spacing them four quarter
    /// indices apart. The resulting order covers the final `q` block fully.
    pub fn from_q_coeffs(coeffs: &[i64]) -> Self {
        let order = coeffs.len() * 4 - 1;
        let mut s = Self::zero(order.max(3));
        for (k, &c) in coeffs.iter().enumerate() {
            s.coeffs[4 * k] = super::laurent::rat(c);
        }
        s
    }

    /// Truncation order in quarter units.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Number of fully known whole-`q` coefficient blocks: block `k` covers
    /// quarter indices `4k..4k+3`.
    pub fn q_blocks(&self) -> usize {
        self.coeffs.len() / 4
    }

    /// Coefficient at quarter index `e`, zero beyond the truncation order.
    pub fn coeff(&self, e: usize) -> Rat {
        self.coeffs.get(e).cloned().unwrap_or_else(Rat::zero)
    }

    /// Coefficient of `q^k`.
    pub fn q_coeff(&self, k: usize) -> Rat {
        self.coeff(4 * k)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn truncate(&self, order: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.truncate(order + 1);
        coeffs.resize(order + 1, Rat::zero());
        QSeries { coeffs }
    }

    /// True when every nonzero index is divisible by 4.
    pub fn is_q_integral(&self) -> bool {
        self.coeffs
            .iter()
            .enumerate()
            .all(|(e, c)| e % 4 == 0 || c.is_zero())
    }

    /// Reindexes a Laurent polynomial with no negative exponents; coefficients
    /// beyond `order` are discarded.
    pub fn from_laurent(p: &LaurentPoly, order: usize) -> Result<Self, ArithmeticError> {
        if p.min_exp().map_or(false, |e| e < 0) {
            return Err(ArithmeticError::NegativeExponent);
        }
        let mut s = Self::zero(order);
        for (&e, c) in p.iter() {
            if (e as usize) <= order {
                s.coeffs[e as usize] = c.clone();
            }
        }
        Ok(s)
    }

    /// Series expansion of `num/den` around `A = 0`, shifted so the lowest
    /// term lands at index 0 and divided by its sign. This is the ambient
    /// normalization under which tails are compared.
    pub fn expand_normalized(f: &RationalFn, order: usize) -> Result<Self, ArithmeticError> {
        if f.is_zero() {
            return Err(ArithmeticError::ZeroPolynomial);
        }
        let nmin = f.num().min_exp().unwrap();
        let dmin = f.den().min_exp().unwrap();
        let n = order + 1;
        let nc: Vec<Rat> = (0..n).map(|k| f.num().coeff(nmin + k as i64)).collect();
        let dc: Vec<Rat> = (0..n).map(|k| f.den().coeff(dmin + k as i64)).collect();
        let mut out = vec![Rat::zero(); n];
        let mut rem = nc;
        for k in 0..n {
            let c = rem[k].clone() / dc[0].clone();
            if !c.is_zero() {
                for j in 0..(n - k) {
                    if !dc[j].is_zero() {
                        rem[k + j] -= c.clone() * dc[j].clone();
                    }
                }
            }
            out[k] = c;
        }
        if out[0].is_negative() {
            for c in out.iter_mut() {
                *c = -c.clone();
            }
        }
        debug_assert!(!out[0].is_zero(), "leading series coefficient vanished");
        Ok(QSeries { coeffs: out })
    }

    /// Multiplicative inverse; requires a unit constant term.
    pub fn inverse(&self) -> Result<Self, ArithmeticError> {
        if self.coeffs[0].is_zero() {
            return Err(ArithmeticError::DivisionByZero);
        }
        let n = self.coeffs.len();
        let mut out = vec![Rat::zero(); n];
        out[0] = Rat::one() / self.coeffs[0].clone();
        for k in 1..n {
            let mut acc = Rat::zero();
            for j in 1..=k {
                if !self.coeffs[j].is_zero() {
                    acc += self.coeffs[j].clone() * out[k - j].clone();
                }
            }
            out[k] = -acc / self.coeffs[0].clone();
        }
        Ok(QSeries { coeffs: out })
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = QSeries::one(self.order());
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    /// Adds `c * A^shift * other` in place, dropping truncated terms.
    pub fn add_shifted(&mut self, other: &QSeries, shift: usize, c: &Rat) {
        for e in 0..other.coeffs.len() {
            let idx = e + shift;
            if idx >= self.coeffs.len() {
                break;
            }
            if !other.coeffs[e].is_zero() {
                self.coeffs[idx] += other.coeffs[e].clone() * c;
            }
        }
    }

    /// Index of the first coefficient where `self` and `s * other` differ, or
    /// `None` if they agree through the common truncation order.
    pub fn first_disagreement_signed(&self, other: &QSeries, sign: i64) -> Option<usize> {
        let n = self.coeffs.len().min(other.coeffs.len());
        let s = super::laurent::rat(sign);
        (0..n).find(|&e| self.coeffs[e] != other.coeffs[e].clone() * s.clone())
    }

    /// First whole-`q` index where the series differ (no sign freedom), or
    /// `None` through the common order. Quarter-index mismatches report the
    /// containing `q` block.
    pub fn first_q_disagreement(&self, other: &QSeries) -> Option<usize> {
        self.first_disagreement_signed(other, 1).map(|e| e / 4)
    }

    /// Renders in `q` when integral, else in quarter powers.
    pub fn render(&self, max_terms: usize) -> String {
        let mut s = String::new();
        let mut printed = 0;
        for (e, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if printed == max_terms {
                s.push_str(" + ...");
                return s;
            }
            let mag = c.abs();
            if s.is_empty() {
                if c.is_negative() {
                    s.push('-');
                }
            } else if c.is_negative() {
                s.push_str(" - ");
            } else {
                s.push_str(" + ");
            }
            let var = if self.is_q_integral() {
                (e / 4, "q")
            } else {
                (e, "A")
            };
            if e == 0 {
                s.push_str(&mag.to_string());
            } else if mag.is_one() {
                s.push_str(&format!("{}^{}", var.1, var.0));
            } else {
                s.push_str(&format!("{}*{}^{}", mag, var.1, var.0));
            }
            printed += 1;
        }
        if s.is_empty() {
            s.push('0');
        }
        s.push_str(&format!(" + O(q^{})", self.order() / 4 + 1));
        s
    }

    pub fn to_q_triples(&self) -> Vec<(usize, String, String)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(e, c)| (e, c.numer().to_string(), c.denom().to_string()))
            .collect()
    }
}

impl fmt::Display for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render(usize::MAX))
    }
}

impl fmt::Debug for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render(24))
    }
}

impl Add for &QSeries {
    type Output = QSeries;
    fn add(self, rhs: &QSeries) -> QSeries {
        let n = self.coeffs.len().min(rhs.coeffs.len());
        QSeries {
            coeffs: (0..n)
                .map(|e| self.coeffs[e].clone() + rhs.coeffs[e].clone())
                .collect(),
        }
    }
}

impl Sub for &QSeries {
    type Output = QSeries;
    fn sub(self, rhs: &QSeries) -> QSeries {
        let n = self.coeffs.len().min(rhs.coeffs.len());
        QSeries {
            coeffs: (0..n)
                .map(|e| self.coeffs[e].clone() - rhs.coeffs[e].clone())
                .collect(),
        }
    }
}

impl Mul for &QSeries {
    type Output = QSeries;
    fn mul(self, rhs: &QSeries) -> QSeries {
        // Truncated Cauchy product at the smaller order.
        let n = self.coeffs.len().min(rhs.coeffs.len());
        let mut out = vec![Rat::zero(); n];
        for i in 0..n {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..(n - i) {
                if !rhs.coeffs[j].is_zero() {
                    out[i + j] += self.coeffs[i].clone() * rhs.coeffs[j].clone();
                }
            }
        }
        QSeries { coeffs: out }
    }
}

impl Neg for &QSeries {
    type Output = QSeries;
    fn neg(self) -> QSeries {
        QSeries {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::super::laurent::rat;
    use super::*;

    #[test]
    fn reindexing_from_laurent() {
        // 1 + A^4 at order 8 -> 1 + q
        let p = LaurentPoly::from_terms(&[(0, 1), (4, 1)]);
        let s = QSeries::from_laurent(&p, 8).unwrap();
        assert_eq!(s.q_coeff(0), rat(1));
        assert_eq!(s.q_coeff(1), rat(1));
        assert_eq!(s.q_coeff(2), rat(0));
        assert!(s.is_q_integral());
    }

    #[test]
    fn half_integer_power_is_representable() {
        let s = QSeries::from_laurent(&LaurentPoly::from_terms(&[(2, 1)]), 4).unwrap();
        assert_eq!(s.coeff(2), rat(1));
        assert!(!s.is_q_integral());
    }

    #[test]
    fn negative_exponent_rejected() {
        let p = LaurentPoly::from_terms(&[(-2, 1)]);
        assert!(matches!(
            QSeries::from_laurent(&p, 8),
            Err(ArithmeticError::NegativeExponent)
        ));
    }

    #[test]
    fn telescoping_product() {
        // (1 - q)(1 + q + q^2 + q^3) = 1 - q^4
        let a = QSeries::from_q_coeffs(&[1, -1, 0, 0, 0]);
        let b = QSeries::from_q_coeffs(&[1, 1, 1, 1, 0]);
        let p = &a * &b;
        assert_eq!(p.q_coeff(0), rat(1));
        for k in 1..4 {
            assert_eq!(p.q_coeff(k), rat(0));
        }
        assert_eq!(p.q_coeff(4), rat(-1));
    }

    #[test]
    fn multiplicative_identity() {
        let s = QSeries::from_q_coeffs(&[3, -2, 5, 0, 1]);
        assert_eq!(&s * &QSeries::one(s.order()), s);
    }

    #[test]
    fn inverse_of_one_minus_q_is_geometric() {
        let s = QSeries::from_q_coeffs(&[1, -1, 0, 0, 0, 0]).inverse().unwrap();
        for k in 0..5 {
            assert_eq!(s.q_coeff(k), rat(1));
        }
    }
}
