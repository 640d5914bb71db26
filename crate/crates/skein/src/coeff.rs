//! Closed-form skein coefficients.
//!
//! - [`quantum_int`]: `[n] = (A^{2n} - A^{-2n}) / (A^2 - A^{-2})`
//! - [`delta`]: loop value `Delta_n = (-1)^n [n+1]`
//! - [`theta`]: theta-graph evaluation from quantum factorials
//! - [`theta_poch`]: the same value in `q`-Pochhammer form, `q = A^4`
//! - [`lambda_coef`]: twist eigenvalue on a fusion channel
//! - [`tet`]: tetrahedron-network evaluation
//! - [`sixj`]: recoupling (change-of-basis) coefficient
//! - [`bubble_coef`]: 2-gon collapse coefficient `theta(a,b,c)/Delta_a`
//!
//! Theta and Tet evaluations are rational functions of `A` in general (already
//! `theta(2,2,2) = -([5]+1)/[2]` has no exact polynomial form), so everything
//! here returns [`RationalFn`] and callers divide or multiply as needed.
//!
//! `theta`, `tet`, and `sixj` memoize on their color tuples behind mutexes;
//! the tables can be persisted through [`crate::cache`].

use std::collections::HashMap;
use std::sync::Mutex;

use num::One;
use once_cell::sync::Lazy;
use thiserror::Error;

use crate::qpoly::{rat, LaurentPoly, QSeries, Rat, RationalFn};

/// Edge label of a Jones-Wenzl projector or trivalent-graph edge.
pub type Color = u32;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoeffError {
    #[error("triple ({0},{1},{2}) is not admissible")]
    NotAdmissible(Color, Color, Color),
}

// ---------------------------------------------------------------------------
// Quantum integers and factorials
// ---------------------------------------------------------------------------

/// The quantum integer `[n]`; `[0] = 0`, `[1] = 1`, `[2] = A^2 + A^-2`.
pub fn quantum_int(n: u32) -> LaurentPoly {
    let mut p = LaurentPoly::zero();
    for k in 0..n {
        p.add_term(2 * (n as i64 - 1) - 4 * k as i64, rat(1));
    }
    p
}

static QFACT: Lazy<Mutex<Vec<LaurentPoly>>> = Lazy::new(|| Mutex::new(vec![LaurentPoly::one()]));

/// The quantum factorial `[n]! = [1][2]...[n]`, with `[0]! = 1`.
pub fn quantum_factorial(n: u32) -> LaurentPoly {
    let mut table = QFACT.lock().unwrap();
    while table.len() <= n as usize {
        let next = &table[table.len() - 1] * &quantum_int(table.len() as u32);
        table.push(next);
    }
    table[n as usize].clone()
}

/// Loop value `Delta_n = (-1)^n [n+1]` of a closed `n`-colored circle.
pub fn delta(n: Color) -> LaurentPoly {
    let p = quantum_int(n + 1);
    if n % 2 == 1 {
        -&p
    } else {
        p
    }
}

/// `(q;q)_n = prod_{i=1}^{n} (1 - q^i)` as a Laurent polynomial in `A`
/// (`q = A^4`).
pub fn pochhammer_poly(n: u32) -> LaurentPoly {
    let mut p = LaurentPoly::one();
    for i in 1..=n {
        p *= &LaurentPoly::from_terms(&[(0, 1), (4 * i as i64, -1)]);
    }
    p
}

/// `(q;q)_n` truncated to a `q`-series of the given quarter order.
pub fn pochhammer_series(n: u32, order: usize) -> QSeries {
    QSeries::from_laurent(&pochhammer_poly(n), order).expect("nonnegative exponents")
}

// ---------------------------------------------------------------------------
// Admissibility
// ---------------------------------------------------------------------------

/// A triple supports a trivalent vertex iff its sum is even and it satisfies
/// the triangle inequality.
pub fn admissible(a: Color, b: Color, c: Color) -> bool {
    (a + b + c) % 2 == 0 && a + b >= c && b + c >= a && a + c >= b
}

/// Interior colors `(x, y, z)` of an admissible vertex: the strand counts
/// between each pair of legs, `x = (a+b-c)/2`, `y = (a+c-b)/2`, `z = (b+c-a)/2`.
pub fn interior_colors(a: Color, b: Color, c: Color) -> Result<(u32, u32, u32), CoeffError> {
    if !admissible(a, b, c) {
        return Err(CoeffError::NotAdmissible(a, b, c));
    }
    Ok(((a + b - c) / 2, (a + c - b) / 2, (b + c - a) / 2))
}

// ---------------------------------------------------------------------------
// Theta
// ---------------------------------------------------------------------------

static THETA_MEMO: Lazy<Mutex<HashMap<(Color, Color, Color), RationalFn>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

/// Theta-graph evaluation
/// `theta(a,b,c) = (-1)^{x+y+z} [x+y+z+1]! [x]! [y]! [z]! / ([x+y]! [x+z]! [y+z]!)`.
pub fn theta(a: Color, b: Color, c: Color) -> Result<RationalFn, CoeffError> {
    let (x, y, z) = interior_colors(a, b, c)?;
    let mut key = [a, b, c];
    key.sort_unstable();
    let key = (key[0], key[1], key[2]);
    if let Some(v) = THETA_MEMO.lock().unwrap().get(&key) {
        return Ok(v.clone());
    }
    let mut num = &(&quantum_factorial(x + y + z + 1) * &quantum_factorial(x))
        * &(&quantum_factorial(y) * &quantum_factorial(z));
    if (x + y + z) % 2 == 1 {
        num = -&num;
    }
    let den = &(&quantum_factorial(x + y) * &quantum_factorial(x + z)) * &quantum_factorial(y + z);
    let v = RationalFn::new(num, den).expect("nonzero factorial");
    THETA_MEMO.lock().unwrap().insert(key, v.clone());
    Ok(v)
}

/// The Pochhammer form of theta,
/// `(-1)^{x+y+z} q^{-(x+y+z)/2} (q;q)_x (q;q)_y (q;q)_z (q;q)_{x+y+z+1}
///  / ((1-q)(q;q)_{x+y}(q;q)_{y+z}(q;q)_{x+z})`,
/// with the half-integer `q`-power carried as the `A`-monomial `A^{-2(x+y+z)}`.
pub fn theta_poch(a: Color, b: Color, c: Color) -> Result<RationalFn, CoeffError> {
    let (x, y, z) = interior_colors(a, b, c)?;
    let s = x + y + z;
    let sign = if s % 2 == 1 { rat(-1) } else { rat(1) };
    let mut num = &(&pochhammer_poly(x) * &pochhammer_poly(y))
        * &(&pochhammer_poly(z) * &pochhammer_poly(s + 1));
    num = num.mul_monomial(-2 * s as i64, &sign);
    let den = &(&pochhammer_poly(1) * &pochhammer_poly(x + y))
        * &(&pochhammer_poly(y + z) * &pochhammer_poly(x + z));
    Ok(RationalFn::new(num, den).expect("nonzero Pochhammer product"))
}

// ---------------------------------------------------------------------------
// Twist eigenvalue
// ---------------------------------------------------------------------------

/// Twist eigenvalue `lambda^a_{b,c} = (-1)^{(b+c-a)/2} A^{(b'+c'-a')/2}` with
/// `x' = x(x+2)`: the coefficient picked up when the `(b,c)` legs of a vertex
/// are crossed and resolved onto the `a`-channel. `lambda_coef(0, a, a)` is
/// the full-twist (kink) eigenvalue `(-1)^a A^{a(a+2)}`.
pub fn lambda_coef(a: Color, b: Color, c: Color) -> Result<LaurentPoly, CoeffError> {
    if !admissible(a, b, c) {
        return Err(CoeffError::NotAdmissible(a, b, c));
    }
    let prime = |x: Color| (x as i64) * (x as i64 + 2);
    let exp = (prime(b) + prime(c) - prime(a)) / 2;
    let sign = if ((b + c - a) / 2) % 2 == 1 { -1 } else { 1 };
    Ok(LaurentPoly::monomial(exp, rat(sign)))
}

// ---------------------------------------------------------------------------
// Tetrahedron
// ---------------------------------------------------------------------------

/// Labels of the tetrahedron network in the arrangement `Tet[a d e; f c b]`.
///
/// The four vertex triples are `(a,d,e)`, `(d,b,f)`, `(e,c,f)`, `(a,b,c)` and
/// the three opposite pairs are `(a,f)`, `(d,c)`, `(e,b)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TetLabels {
    /// `[a, d, e, f, c, b]` in the printed arrangement.
    pub labels: [Color; 6],
}

impl TetLabels {
    pub fn new(a: Color, d: Color, e: Color, f: Color, c: Color, b: Color) -> Self {
        TetLabels {
            labels: [a, d, e, f, c, b],
        }
    }

    fn vertex_triples(&self) -> [(Color, Color, Color); 4] {
        let [a, d, e, f, c, b] = self.labels;
        [(a, d, e), (d, b, f), (e, c, f), (a, b, c)]
    }

    /// Checks all four vertex triples; the failing triple is reported.
    pub fn check_admissible(&self) -> Result<(), CoeffError> {
        for (p, q, r) in self.vertex_triples() {
            if !admissible(p, q, r) {
                return Err(CoeffError::NotAdmissible(p, q, r));
            }
        }
        Ok(())
    }

    /// Half the sum of the three edges at each vertex.
    pub fn vertex_half_sums(&self) -> [u32; 4] {
        self.vertex_triples().map(|(p, q, r)| (p + q + r) / 2)
    }

    /// Half the sum of the four edges of each 4-cycle, i.e.
    /// `(total - opposite pair) / 2`.
    pub fn pair_half_sums(&self) -> [u32; 3] {
        let [a, d, e, f, c, b] = self.labels;
        let total = a + d + e + f + c + b;
        [(total - a - f) / 2, (total - d - c) / 2, (total - e - b) / 2]
    }

    /// All 24 symmetric label arrangements: the 6 column permutations of
    /// `[(a,f),(d,c),(e,b)]` composed with the 4 simultaneous top-bottom swaps
    /// of exactly two columns.
    pub fn symmetries(&self) -> Vec<TetLabels> {
        let [a, d, e, f, c, b] = self.labels;
        let cols = [(a, f), (d, c), (e, b)];
        const PERMS: [[usize; 3]; 6] = [
            [0, 1, 2],
            [0, 2, 1],
            [1, 0, 2],
            [1, 2, 0],
            [2, 0, 1],
            [2, 1, 0],
        ];
        const SWAPS: [[bool; 3]; 4] = [
            [false, false, false],
            [true, true, false],
            [true, false, true],
            [false, true, true],
        ];
        let mut out = Vec::with_capacity(24);
        for perm in PERMS {
            for swap in SWAPS {
                let pick = |i: usize| {
                    let (t, bot) = cols[perm[i]];
                    if swap[i] {
                        (bot, t)
                    } else {
                        (t, bot)
                    }
                };
                let (na, nf) = pick(0);
                let (nd, nc) = pick(1);
                let (ne, nb) = pick(2);
                out.push(TetLabels::new(na, nd, ne, nf, nc, nb));
            }
        }
        out
    }

    fn canonical(&self) -> [Color; 6] {
        self.symmetries()
            .into_iter()
            .map(|t| t.labels)
            .min()
            .unwrap()
    }
}

static TET_MEMO: Lazy<Mutex<HashMap<[Color; 6], RationalFn>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

/// Tetrahedron-network evaluation.
///
/// Computed by the standard recoupling-theory formula
/// `Tet = (prod_{i,j} [b_j - a_i]! / prod_edges [e]!) *
///  sum_{s = max a_i}^{min b_j} (-1)^s [s+1]! / (prod_i [s-a_i]! prod_j [b_j-s]!)`
/// with `a_i` the vertex half-sums and `b_j` the 4-cycle half-sums. Reduces to
/// the matching theta when any label is 0 and carries the full tetrahedral
/// symmetry; both facts are exercised against the brute-force oracle in tests.
pub fn tet(labels: &TetLabels) -> Result<RationalFn, CoeffError> {
    labels.check_admissible()?;
    let key = labels.canonical();
    if let Some(v) = TET_MEMO.lock().unwrap().get(&key) {
        return Ok(v.clone());
    }
    let av = labels.vertex_half_sums();
    let bv = labels.pair_half_sums();
    let s_min = *av.iter().max().unwrap();
    let s_max = *bv.iter().min().unwrap();
    debug_assert!(s_min <= s_max, "admissible labels give a nonempty sum");

    let mut interior = LaurentPoly::one();
    for &bj in &bv {
        for &ai in &av {
            interior *= &quantum_factorial(bj - ai);
        }
    }
    let mut edge_fact = LaurentPoly::one();
    for &l in &labels.labels {
        edge_fact *= &quantum_factorial(l);
    }

    let mut total = RationalFn::zero();
    for s in s_min..=s_max {
        let mut num = quantum_factorial(s + 1);
        if s % 2 == 1 {
            num = -&num;
        }
        let mut den = LaurentPoly::one();
        for &ai in &av {
            den *= &quantum_factorial(s - ai);
        }
        for &bj in &bv {
            den *= &quantum_factorial(bj - s);
        }
        total = &total + &RationalFn::new(num, den).expect("nonzero factorial");
    }
    let v = &RationalFn::new(interior, edge_fact).expect("nonzero factorial") * &total;
    TET_MEMO.lock().unwrap().insert(key, v.clone());
    Ok(v)
}

// ---------------------------------------------------------------------------
// Recoupling and bubbles
// ---------------------------------------------------------------------------

static SIXJ_MEMO: Lazy<Mutex<HashMap<[Color; 6], RationalFn>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

/// The 6j recoupling coefficient `{a b i; c d j}` expressing the vertical
/// basis element of channel `j` in the horizontal basis of channel `i`:
///
/// `{a b i; c d j} = Delta_i * Tet[b j a; c i d] / (theta(a,c,i) theta(b,d,i))`
///
/// Inadmissible quadruples give 0 (the corresponding basis element does not
/// exist), never an error.
pub fn sixj(a: Color, b: Color, i: Color, c: Color, d: Color, j: Color) -> RationalFn {
    if !(admissible(a, c, i) && admissible(b, d, i) && admissible(a, b, j) && admissible(c, d, j)) {
        return RationalFn::zero();
    }
    let key = [a, b, i, c, d, j];
    if let Some(v) = SIXJ_MEMO.lock().unwrap().get(&key) {
        return v.clone();
    }
    let t = tet(&TetLabels::new(b, j, a, c, i, d)).expect("vertex triples admissible");
    let num = &RationalFn::from_poly(delta(i)) * &t;
    let den = &theta(a, c, i).unwrap() * &theta(b, d, i).unwrap();
    let v = &num / &den;
    SIXJ_MEMO.lock().unwrap().insert(key, v.clone());
    v
}

/// Bubble collapse coefficient: a 2-gon with edge colors `(b,c)` between legs
/// colored `a` and `d` equals `delta_a^d * theta(a,b,c)/Delta_a` times the
/// single `a`-strand.
pub fn bubble_coef(a: Color, b: Color, c: Color, d: Color) -> RationalFn {
    if a != d || !admissible(a, b, c) {
        return RationalFn::zero();
    }
    let th = theta(a, b, c).expect("admissible");
    &th / &RationalFn::from_poly(delta(a))
}

/// Exact check of the special theta ratio
/// `theta(2n,2n,2i)/theta(n,n,2i) = (-1)^n q^{-n/2} (q;q)_n^2 (q;q)_{2n-i}
///  (q;q)_{2n+i+1} / ((q;q)_{2n}^2 (q;q)_{n-i} (q;q)_{n+i+1})`.
pub fn theta_ratio_check(n: Color, i: Color) -> bool {
    assert!(i <= n, "the ratio is stated for i <= n");
    let lhs = &theta(2 * n, 2 * n, 2 * i).unwrap() / &theta(n, n, 2 * i).unwrap();
    let sign = if n % 2 == 1 { rat(-1) } else { rat(1) };
    let num = &(&pochhammer_poly(n) * &pochhammer_poly(n))
        * &(&pochhammer_poly(2 * n - i) * &pochhammer_poly(2 * n + i + 1));
    let num = num.mul_monomial(-2 * n as i64, &sign);
    let den = &(&pochhammer_poly(2 * n) * &pochhammer_poly(2 * n))
        * &(&pochhammer_poly(n - i) * &pochhammer_poly(n + i + 1));
    let rhs = RationalFn::new(num, den).expect("nonzero Pochhammer product");
    lhs == rhs
}

// ---------------------------------------------------------------------------
// Memo persistence hooks
// ---------------------------------------------------------------------------

pub(crate) type MemoDump = Vec<(Vec<Color>, Vec<(i64, String, String)>, Vec<(i64, String, String)>)>;

pub(crate) fn memo_snapshot() -> (MemoDump, MemoDump, MemoDump) {
    let dump3 = |m: &HashMap<(Color, Color, Color), RationalFn>| {
        let mut v: Vec<_> = m
            .iter()
            .map(|(k, f)| {
                let (n, d) = f.to_json_parts();
                (vec![k.0, k.1, k.2], n, d)
            })
            .collect();
        v.sort();
        v
    };
    let dump6 = |m: &HashMap<[Color; 6], RationalFn>| {
        let mut v: Vec<_> = m
            .iter()
            .map(|(k, f)| {
                let (n, d) = f.to_json_parts();
                (k.to_vec(), n, d)
            })
            .collect();
        v.sort();
        v
    };
    (
        dump3(&THETA_MEMO.lock().unwrap()),
        dump6(&TET_MEMO.lock().unwrap()),
        dump6(&SIXJ_MEMO.lock().unwrap()),
    )
}

pub(crate) fn memo_restore(theta: MemoDump, tet: MemoDump, sixj: MemoDump) -> Result<(), crate::qpoly::ArithmeticError> {
    let parse = |n: &[(i64, String, String)], d: &[(i64, String, String)]| {
        Ok::<_, crate::qpoly::ArithmeticError>(
            RationalFn::new(LaurentPoly::from_triples(n)?, LaurentPoly::from_triples(d)?)
                .map_err(|_| crate::qpoly::ArithmeticError::BadTriple)?,
        )
    };
    for (k, n, d) in &theta {
        if k.len() != 3 {
            return Err(crate::qpoly::ArithmeticError::BadTriple);
        }
        THETA_MEMO
            .lock()
            .unwrap()
            .insert((k[0], k[1], k[2]), parse(n, d)?);
    }
    for (k, n, d) in &tet {
        let key: [Color; 6] = k
            .as_slice()
            .try_into()
            .map_err(|_| crate::qpoly::ArithmeticError::BadTriple)?;
        TET_MEMO.lock().unwrap().insert(key, parse(n, d)?);
    }
    for (k, n, d) in &sixj {
        let key: [Color; 6] = k
            .as_slice()
            .try_into()
            .map_err(|_| crate::qpoly::ArithmeticError::BadTriple)?;
        SIXJ_MEMO.lock().unwrap().insert(key, parse(n, d)?);
    }
    Ok(())
}

pub(crate) fn memo_clear() {
    THETA_MEMO.lock().unwrap().clear();
    TET_MEMO.lock().unwrap().clear();
    SIXJ_MEMO.lock().unwrap().clear();
}

// ---------------------------------------------------------------------------

#[cfg(test)]
mod tests {
    use super::*;

    fn rf(p: LaurentPoly) -> RationalFn {
        RationalFn::from_poly(p)
    }

    #[test]
    fn quantum_int_values() {
        assert!(quantum_int(0).is_zero());
        assert!(quantum_int(1).is_one());
        assert_eq!(quantum_int(2), LaurentPoly::from_terms(&[(2, 1), (-2, 1)]));
        assert_eq!(
            quantum_int(3),
            LaurentPoly::from_terms(&[(4, 1), (0, 1), (-4, 1)])
        );
    }

    #[test]
    fn delta_small_values() {
        assert!(delta(0).is_one());
        assert_eq!(delta(1), LaurentPoly::from_terms(&[(2, -1), (-2, -1)]));
        assert_eq!(delta(2), LaurentPoly::from_terms(&[(4, 1), (0, 1), (-4, 1)]));
    }

    #[test]
    fn delta_sign_relation_up_to_50() {
        for n in 0..=50u32 {
            let expect = if n % 2 == 1 {
                -&quantum_int(n + 1)
            } else {
                quantum_int(n + 1)
            };
            assert_eq!(delta(n), expect);
        }
    }

    #[test]
    fn pochhammer_values() {
        assert!(pochhammer_poly(0).is_one());
        assert_eq!(pochhammer_poly(1), LaurentPoly::from_terms(&[(0, 1), (4, -1)]));
        let p3 = &(&pochhammer_poly(1)
            * &LaurentPoly::from_terms(&[(0, 1), (8, -1)]))
            * &LaurentPoly::from_terms(&[(0, 1), (12, -1)]);
        assert_eq!(pochhammer_poly(3), p3);
    }

    #[test]
    fn admissibility_cases() {
        assert!(admissible(1, 1, 2));
        assert!(!admissible(1, 1, 1));
        assert!(!admissible(1, 2, 5));
    }

    #[test]
    fn theta_degenerate_is_delta() {
        for a in 0..6 {
            assert_eq!(theta(a, a, 0).unwrap(), rf(delta(a)));
        }
    }

    #[test]
    fn theta_112() {
        assert_eq!(theta(1, 1, 2).unwrap(), rf(delta(2)));
    }

    #[test]
    fn theta_222_value() {
        // -[4][3]/[2]^2, a genuine rational function.
        let num = -&(&quantum_int(4) * &quantum_int(3));
        let den = &quantum_int(2) * &quantum_int(2);
        assert_eq!(theta(2, 2, 2).unwrap(), RationalFn::new(num, den).unwrap());
        assert!(!theta(2, 2, 2).unwrap().is_polynomial());
    }

    #[test]
    fn theta_rejects_inadmissible() {
        assert!(matches!(
            theta(1, 1, 1),
            Err(CoeffError::NotAdmissible(1, 1, 1))
        ));
        assert!(theta_poch(1, 1, 1).is_err());
    }

    #[test]
    fn theta_forms_agree_small() {
        for a in 0..=6u32 {
            for b in 0..=6u32 {
                for c in 0..=6u32 {
                    if admissible(a, b, c) {
                        assert_eq!(theta(a, b, c).unwrap(), theta_poch(a, b, c).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn lambda_values() {
        // Channel 0 on a crossed (1,1) pair: the kink eigenvalue -A^3.
        assert_eq!(
            lambda_coef(0, 1, 1).unwrap(),
            LaurentPoly::monomial(3, rat(-1))
        );
        assert_eq!(
            lambda_coef(2, 1, 1).unwrap(),
            LaurentPoly::monomial(-1, rat(1))
        );
        // Full-twist eigenvalue (-1)^a A^{a(a+2)}.
        for a in 0..6u32 {
            let sign = if a % 2 == 1 { -1 } else { 1 };
            assert_eq!(
                lambda_coef(0, a, a).unwrap(),
                LaurentPoly::monomial((a * (a + 2)) as i64, rat(sign))
            );
        }
        // Values used by the ST(k,l) closed formula at n = 1.
        assert_eq!(lambda_coef(0, 2, 2).unwrap(), LaurentPoly::monomial(8, rat(1)));
        assert_eq!(lambda_coef(2, 2, 2).unwrap(), LaurentPoly::monomial(4, rat(-1)));
    }

    #[test]
    fn tet_special_case_2222212() {
        // Tet[2i n n; n 2n 2n] = theta(2n,2n,2i) at n = i = 1.
        let t = tet(&TetLabels::new(2, 1, 1, 1, 2, 2)).unwrap();
        assert_eq!(t, theta(2, 2, 2).unwrap());
    }

    #[test]
    fn tet_paper_identities_up_to_n4() {
        for n in 1..=4u32 {
            for i in 0..=n {
                let lhs = tet(&TetLabels::new(2 * i, n, n, n, 2 * n, 2 * n)).unwrap();
                assert_eq!(lhs, theta(2 * n, 2 * n, 2 * i).unwrap(), "(2222212) n={n} i={i}");
                let rhs = tet(&TetLabels::new(2 * i, 2 * n, 2 * n, n, n, n)).unwrap();
                assert_eq!(lhs, rhs, "(22222) n={n} i={i}");
            }
        }
    }

    #[test]
    fn tet_zero_label_reduces_to_theta() {
        // One label 0 forces two pairs of equal labels and the value theta.
        // Tet[1 0 1; 1 0 1] = theta(1,1,0) = Delta_1.
        let t = tet(&TetLabels::new(1, 0, 1, 1, 0, 1)).unwrap();
        assert_eq!(t, rf(delta(1)));
        // Tet[a 0 a; c c' b]-shape: exhaustive zero-label check lives in the
        // acceptance suite; spot check one more here.
        let t = tet(&TetLabels::new(1, 2, 1, 1, 2, 1)).unwrap();
        assert_eq!(
            t,
            RationalFn::new(&quantum_int(3) * &quantum_int(2), &quantum_int(2) * &quantum_int(2))
                .unwrap()
        );
    }

    #[test]
    fn tet_rejects_inadmissible_vertex() {
        assert!(tet(&TetLabels::new(1, 1, 1, 1, 1, 1)).is_err());
    }

    #[test]
    fn sixj_involution_all_ones() {
        // The 2x2 recoupling matrix for a=b=c=d=1 squares to the identity.
        let chans = [0u32, 2u32];
        let entry = |i: Color, j: Color| sixj(1, 1, i, 1, 1, j);
        for &j in &chans {
            for &l in &chans {
                let mut acc = RationalFn::zero();
                for &i in &chans {
                    acc = &acc + &(&entry(i, j) * &entry(l, i));
                }
                let expect = if j == l {
                    RationalFn::one()
                } else {
                    RationalFn::zero()
                };
                assert_eq!(acc, expect, "involution entry ({l},{j})");
            }
        }
    }

    #[test]
    fn sixj_cup_cap_expansion() {
        // {1 1 0; 1 1 0} = -1/[2] and {1 1 2; 1 1 0} = 1: the vertical
        // channel-0 element (cup-cap) written in the horizontal basis.
        let two = quantum_int(2);
        assert_eq!(
            sixj(1, 1, 0, 1, 1, 0),
            RationalFn::new(LaurentPoly::from_int(-1), two.clone()).unwrap()
        );
        assert_eq!(sixj(1, 1, 2, 1, 1, 0), RationalFn::one());
    }

    #[test]
    fn sixj_inadmissible_is_zero() {
        assert!(sixj(1, 1, 1, 1, 1, 0).is_zero());
        assert!(sixj(1, 2, 0, 1, 1, 1).is_zero());
    }

    #[test]
    fn bubble_values() {
        assert!(bubble_coef(2, 1, 1, 3).is_zero());
        // theta(2,1,1)/Delta_2 = [3]/[3] = 1.
        assert!(bubble_coef(2, 1, 1, 2).is_one());
        let generic = bubble_coef(2, 2, 2, 2);
        assert_eq!(
            generic,
            &theta(2, 2, 2).unwrap() / &rf(delta(2))
        );
    }

    #[test]
    fn theta_ratio_small_cases() {
        assert!(theta_ratio_check(1, 0));
        assert!(theta_ratio_check(1, 1));
        assert!(theta_ratio_check(3, 2));
    }
}
