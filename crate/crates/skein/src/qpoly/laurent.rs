//! Sparse Laurent polynomials in the skein variable `A` over arbitrary-precision
//! rationals.
//!
//! One exponent unit of `A` is a quarter power of `q` (the change of variable
//! `A = q^{1/4}`), so `q = A^4` and half-integer `q`-powers such as `q^{-n/2}`
//! are ordinary monomials here. Keeping a single integer grading avoids
//! fractional exponents entirely.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num::{BigInt, BigRational, One, Signed, Zero};


use super::ArithmeticError;

/// Shorthand for the arbitrary-precision rational coefficient type.
pub type Rat = BigRational;

pub(crate) fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub(crate) fn rat_frac(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Exact sparse Laurent polynomial in `A`.
///
/// Invariants: no stored coefficient is zero, the zero polynomial is the empty
/// map, and iteration is ordered by ascending exponent.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, Rat>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::monomial(0, rat(1))
    }

    pub fn constant(c: Rat) -> Self {
        Self::monomial(0, c)
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(rat(n))
    }

    /// The monomial `c * A^e`; collapses to zero when `c = 0`.
    pub fn monomial(exp: i64, c: Rat) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        LaurentPoly { terms }
    }

    /// Builds from `(exponent, integer coefficient)` pairs; repeated exponents
    /// accumulate.
    pub fn from_terms(terms: &[(i64, i64)]) -> Self {
        let mut p = LaurentPoly::zero();
        for &(e, c) in terms {
            p.add_term(e, rat(c));
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).map_or(false, |c| c.is_one())
    }

    /// True when the polynomial is a single term `c * A^e`.
    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Lowest exponent with a nonzero coefficient, `None` for the zero polynomial.
    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn coeff(&self, exp: i64) -> Rat {
        self.terms.get(&exp).cloned().unwrap_or_else(Rat::zero)
    }

    /// Ascending iteration over `(exponent, coefficient)`.
    pub fn iter(&self) -> impl Iterator<Item = (&i64, &Rat)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, exp: i64, c: Rat) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp).or_insert_with(Rat::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&exp);
        }
    }

    /// Multiplies by the monomial `c * A^e`.
    pub fn mul_monomial(&self, exp: i64, c: &Rat) -> Self {
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(e, k)| (e + exp, k * c))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Rat) -> Self {
        self.mul_monomial(0, c)
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = LaurentPoly::one();
        for _ in 0..n {
            out = &out * self;
        }
        out
    }

    /// Substitutes `A -> A^{-1}` (negates every exponent). In `q`-units this is
    /// the head/tail swap `q -> q^{-1}`.
    pub fn invert_variable(&self) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    /// Exact division: returns `s` with `s * d = self`.
    ///
    /// Fails with `NotDivisible` when no exact quotient exists and
    /// `DivisionByZero` when `d` is zero.
    pub fn div_exact(&self, d: &LaurentPoly) -> Result<LaurentPoly, ArithmeticError> {
        if d.is_zero() {
            return Err(ArithmeticError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(LaurentPoly::zero());
        }
        let d_min = d.min_exp().unwrap();
        let d_max = d.max_exp().unwrap();
        let d_lead = d.coeff(d_min);
        let top = self.max_exp().unwrap() - d_max;
        let mut rem = self.clone();
        let mut quot = LaurentPoly::zero();
        while !rem.is_zero() {
            let e = rem.min_exp().unwrap() - d_min;
            if e > top {
                return Err(ArithmeticError::NotDivisible);
            }
            let c = rem.coeff(rem.min_exp().unwrap()) / &d_lead;
            quot.add_term(e, c.clone());
            rem -= &d.mul_monomial(e, &c);
        }
        Ok(quot)
    }

    /// Splits into `(sign, exponent, magnitude)` of the lowest-degree term:
    /// `self = sign * A^exponent * p` with `p`'s lowest term having positive
    /// coefficient and exponent zero.
    pub fn signed_lowest_monomial(&self) -> Option<(i64, i64)> {
        let e = self.min_exp()?;
        let sign = if self.coeff(e).is_negative() { -1 } else { 1 };
        Some((sign, e))
    }

    /// True when every nonzero exponent is divisible by 4, i.e. the value lies
    /// in the image of `Z[q^{±1}]` under `q = A^4`.
    pub fn is_q_integral(&self) -> bool {
        self.terms.keys().all(|e| e % 4 == 0)
    }

    /// JSON-facing form: ascending `[exponent, numerator, denominator]` triples
    /// with big integers rendered in decimal.
    pub fn to_triples(&self) -> Vec<(i64, String, String)> {
        self.terms
            .iter()
            .map(|(e, c)| (*e, c.numer().to_string(), c.denom().to_string()))
            .collect()
    }

    pub fn from_triples(triples: &[(i64, String, String)]) -> Result<Self, ArithmeticError> {
        let mut p = LaurentPoly::zero();
        for (e, n, d) in triples {
            let n: BigInt = n.parse().map_err(|_| ArithmeticError::BadTriple)?;
            let d: BigInt = d.parse().map_err(|_| ArithmeticError::BadTriple)?;
            if d.is_zero() {
                return Err(ArithmeticError::BadTriple);
            }
            p.add_term(*e, Rat::new(n, d));
        }
        Ok(p)
    }

    fn fmt_terms(&self, f: &mut fmt::Formatter<'_>, var: &str, unit: i64) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let e = e / unit;
            if e == 0 {
                write!(f, "{}", mag)?;
            } else if mag.is_one() {
                write!(f, "{}^{}", var, e)?;
            } else {
                write!(f, "{}*{}^{}", mag, var, e)?;
            }
        }
        Ok(())
    }

    /// Renders in `q` when every exponent is divisible by 4, else in `A`.
    pub fn render(&self) -> String {
        format!("{}", self)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_q_integral() && !self.is_zero() {
            self.fmt_terms(f, "q", 4)
        } else {
            self.fmt_terms(f, "A", 1)
        }
    }
}

// Debug goes through Display so test failures show readable polynomials.
impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in rhs.terms.iter() {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in rhs.terms.iter() {
            out.add_term(*e, -c.clone());
        }
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        if self.is_zero() || rhs.is_zero() {
            return out;
        }
        // Iterate the smaller operand outermost.
        let (small, big) = if self.num_terms() <= rhs.num_terms() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        for (e1, c1) in small.terms.iter() {
            for (e2, c2) in big.terms.iter() {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in rhs.terms.iter() {
            self.add_term(*e, c.clone());
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in rhs.terms.iter() {
            self.add_term(*e, -c.clone());
        }
    }
}

impl MulAssign<&LaurentPoly> for LaurentPoly {
    fn mul_assign(&mut self, rhs: &LaurentPoly) {
        *self = &*self * rhs;
    }
}
