//! Quotients of Laurent polynomials in canonical form.
//!
//! Skein coefficients such as `theta(a,b,c)/Delta_a` and closed trivalent-graph
//! evaluations are rational functions of `A` in general, not polynomials.
//! Reduction is lazy: the constructor strips common monomial content, scales
//! the denominator so its lowest term is `+1 * A^0`, and attempts an exact
//! polynomial division in both directions. No polynomial gcd is computed;
//! quantities that are polynomials by construction reduce to denominator 1
//! through the exact-division attempt.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num::{One, Zero};


use super::laurent::{LaurentPoly, Rat};
use super::ArithmeticError;

/// A rational function `num/den` with `den` nonzero.
///
/// Canonical form: `den`'s lowest exponent is 0 and its lowest coefficient is
/// `+1`; a zero numerator forces `den = 1`.
#[derive(Clone)]
pub struct RationalFn {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RationalFn {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self, ArithmeticError> {
        if den.is_zero() {
            return Err(ArithmeticError::DivisionByZero);
        }
        let mut f = RationalFn { num, den };
        f.reduce();
        Ok(f)
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        RationalFn {
            num: p,
            den: LaurentPoly::one(),
        }
    }

    pub fn zero() -> Self {
        Self::from_poly(LaurentPoly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(LaurentPoly::one())
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_poly(LaurentPoly::from_int(n))
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num == self.den
    }

    /// True when the value reduced to an honest Laurent polynomial.
    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// Returns the numerator when the denominator is 1, else `NotDivisible`.
    pub fn into_poly(self) -> Result<LaurentPoly, ArithmeticError> {
        if self.den.is_one() {
            Ok(self.num)
        } else {
            Err(ArithmeticError::NotDivisible)
        }
    }

    /// Canonicalization: monomial-content stripping, denominator scaling, and
    /// an exact-division attempt in each direction.
    fn reduce(&mut self) {
        if self.num.is_zero() {
            self.den = LaurentPoly::one();
            return;
        }
        // Shift the common monomial content onto the numerator so the
        // denominator starts at exponent 0.
        let dmin = self.den.min_exp().unwrap();
        if dmin != 0 {
            self.num = self.num.mul_monomial(-dmin, &Rat::one());
            self.den = self.den.mul_monomial(-dmin, &Rat::one());
        }
        // Scale so the denominator's lowest coefficient is +1.
        let lead = self.den.coeff(0);
        if !lead.is_one() {
            let inv = Rat::one() / lead;
            self.num = self.num.scale(&inv);
            self.den = self.den.scale(&inv);
        }
        if self.den.is_one() {
            return;
        }
        if let Ok(q) = self.num.div_exact(&self.den) {
            self.num = q;
            self.den = LaurentPoly::one();
            return;
        }
        if let Ok(q) = self.den.div_exact(&self.num) {
            // num/den = 1/q; renormalize q's lowest term onto the numerator.
            let qmin = q.min_exp().unwrap();
            let qlead = q.coeff(qmin);
            self.num = LaurentPoly::monomial(-qmin, Rat::one() / qlead);
            self.den = q.mul_monomial(-qmin, &(Rat::one() / q.coeff(qmin)));
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = RationalFn::one();
        for _ in 0..n {
            out = &out * self;
        }
        out
    }

    pub fn recip(&self) -> Result<Self, ArithmeticError> {
        RationalFn::new(self.den.clone(), self.num.clone())
    }

    /// Lowest exponent of the Laurent-series expansion around `A = 0`.
    pub fn series_min_exp(&self) -> Option<i64> {
        Some(self.num.min_exp()? - self.den.min_exp().unwrap_or(0))
    }

    pub fn to_json_parts(&self) -> (Vec<(i64, String, String)>, Vec<(i64, String, String)>) {
        (self.num.to_triples(), self.den.to_triples())
    }
}

impl PartialEq for RationalFn {
    fn eq(&self, other: &Self) -> bool {
        // Cross multiplication; canonical form alone is not a normal form
        // because reduction is lazy.
        &self.num * &other.den == &other.num * &self.den
    }
}

impl Eq for RationalFn {}

impl fmt::Display for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl From<LaurentPoly> for RationalFn {
    fn from(p: LaurentPoly) -> Self {
        Self::from_poly(p)
    }
}

impl Add for &RationalFn {
    type Output = RationalFn;
    fn add(self, rhs: &RationalFn) -> RationalFn {
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        RationalFn::new(num, &self.den * &rhs.den).expect("nonzero denominators")
    }
}

impl Sub for &RationalFn {
    type Output = RationalFn;
    fn sub(self, rhs: &RationalFn) -> RationalFn {
        let num = &(&self.num * &rhs.den) - &(&rhs.num * &self.den);
        RationalFn::new(num, &self.den * &rhs.den).expect("nonzero denominators")
    }
}

impl Mul for &RationalFn {
    type Output = RationalFn;
    fn mul(self, rhs: &RationalFn) -> RationalFn {
        RationalFn::new(&self.num * &rhs.num, &self.den * &rhs.den).expect("nonzero denominators")
    }
}

impl Div for &RationalFn {
    type Output = RationalFn;
    fn div(self, rhs: &RationalFn) -> RationalFn {
        RationalFn::new(&self.num * &rhs.den, &self.den * &rhs.num)
            .expect("division of rational functions by zero")
    }
}

impl Neg for &RationalFn {
    type Output = RationalFn;
    fn neg(self) -> RationalFn {
        RationalFn {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_division_collapses_denominator() {
        // (A^4 - A^-4) / (A^2 - A^-2) -> A^2 + A^-2 over 1
        let f = RationalFn::new(
            LaurentPoly::from_terms(&[(4, 1), (-4, -1)]),
            LaurentPoly::from_terms(&[(2, 1), (-2, -1)]),
        )
        .unwrap();
        assert!(f.is_polynomial());
        assert_eq!(*f.num(), LaurentPoly::from_terms(&[(2, 1), (-2, 1)]));
    }

    #[test]
    fn zero_numerator_canonicalizes() {
        let f = RationalFn::new(
            LaurentPoly::zero(),
            LaurentPoly::from_terms(&[(3, 5), (0, 1)]),
        )
        .unwrap();
        assert!(f.is_zero());
        assert!(f.den().is_one());
    }

    #[test]
    fn self_quotient_is_one() {
        let p = LaurentPoly::from_terms(&[(2, 1), (0, 3), (-1, -4)]);
        let f = RationalFn::new(p.clone(), p).unwrap();
        assert!(f.is_one());
        assert!(f.is_polynomial());
    }

    #[test]
    fn zero_denominator_rejected() {
        assert!(matches!(
            RationalFn::new(LaurentPoly::one(), LaurentPoly::zero()),
            Err(ArithmeticError::DivisionByZero)
        ));
    }

    #[test]
    fn canonical_denominator_shape() {
        // den lowest term becomes +1 at exponent 0
        let f = RationalFn::new(
            LaurentPoly::from_terms(&[(0, 1)]),
            LaurentPoly::from_terms(&[(-2, -2), (2, -2)]),
        )
        .unwrap();
        assert_eq!(f.den().min_exp(), Some(0));
        assert!(f.den().coeff(0).is_one());
    }

    #[test]
    fn cross_multiplied_equality() {
        let a = RationalFn::new(
            LaurentPoly::from_terms(&[(2, 1), (0, 1)]),
            LaurentPoly::from_terms(&[(1, 1)]),
        )
        .unwrap();
        let b = RationalFn::new(
            LaurentPoly::from_terms(&[(3, 2), (1, 2)]),
            LaurentPoly::from_terms(&[(2, 2)]),
        )
        .unwrap();
        assert_eq!(a, b);
    }
}
