//! Exact polynomial arithmetic in q and (q, t).
//!
//! `QPoly` is a Laurent polynomial in q (exponents may be negative) with
//! big-integer coefficients; `QTPoly` is a bivariate polynomial in q and t
//! with non-negative exponents.  On top of these live the usual q-analogues:
//!
//! - `q_int(n)`  = [n]_q  = 1 + q + ... + q^{n-1}
//! - `q_fact(n)` = [n]!_q = [1]_q [2]_q ... [n]_q
//! - `q_binom(n, k)` = [n]!_q / ([k]!_q [n-k]!_q), computed by exact division
//! - `pochhammer(a, n)` = (q^a; 1/q)_n = prod_{i=0}^{n-1} (1 - q^{a-i})
//!
//! All division is exact: a non-zero remainder is an error, never a silent
//! truncation.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::ser::{Serialize, SerializeMap, Serializer};
use std::collections::BTreeMap;
use std::fmt;

use crate::error::QAlgebraError;

/// Laurent polynomial in q with exact integer coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct QPoly {
    coeffs: BTreeMap<i64, BigInt>,
}

impl QPoly {
    pub fn zero() -> Self {
        QPoly::default()
    }

    pub fn one() -> Self {
        QPoly::monomial(0, BigInt::one())
    }

    /// The single term `coeff * q^exp`.
    pub fn monomial(exp: i64, coeff: BigInt) -> Self {
        let mut coeffs = BTreeMap::new();
        if !coeff.is_zero() {
            coeffs.insert(exp, coeff);
        }
        QPoly { coeffs }
    }

    pub fn constant(c: i64) -> Self {
        QPoly::monomial(0, BigInt::from(c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.coeffs.get(&exp).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn add_term(&mut self, exp: i64, coeff: &BigInt) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(exp).or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.coeffs.remove(&exp);
        }
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.coeffs.iter().map(|(e, c)| (*e, c))
    }

    pub fn add(&self, other: &QPoly) -> QPoly {
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.add_term(e, c);
        }
        out
    }

    pub fn sub(&self, other: &QPoly) -> QPoly {
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.add_term(e, &(-c));
        }
        out
    }

    pub fn mul(&self, other: &QPoly) -> QPoly {
        let mut out = QPoly::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in other.terms() {
                out.add_term(e1 + e2, &(c1 * c2));
            }
        }
        out
    }

    pub fn neg(&self) -> QPoly {
        let mut out = QPoly::zero();
        for (e, c) in self.terms() {
            out.add_term(e, &(-c));
        }
        out
    }

    pub fn pow(&self, n: u64) -> QPoly {
        let mut out = QPoly::one();
        for _ in 0..n {
            out = out.mul(self);
        }
        out
    }

    /// Multiply by q^w.
    pub fn shifted(&self, w: i64) -> QPoly {
        let mut out = QPoly::zero();
        for (e, c) in self.terms() {
            out.add_term(e + w, c);
        }
        out
    }

    pub fn eval_one(&self) -> BigInt {
        let mut sum = BigInt::zero();
        for (_, c) in self.terms() {
            sum += c;
        }
        sum
    }

    /// Exact division; returns an error if the divisor does not divide self.
    pub fn exact_div(&self, divisor: &QPoly) -> Result<QPoly, QAlgebraError> {
        if divisor.is_zero() {
            return Err(QAlgebraError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(QPoly::zero());
        }
        let dmax = divisor.max_exp().unwrap();
        let dmin = divisor.min_exp().unwrap();
        let dlead = divisor.coeff(dmax);
        // An exact quotient cannot reach below this exponent.
        let qmin_bound = self.min_exp().unwrap() - dmin;
        let mut rem = self.clone();
        let mut quo = QPoly::zero();
        while !rem.is_zero() {
            let rmax = rem.max_exp().unwrap();
            let exp = rmax - dmax;
            if exp < qmin_bound {
                return Err(QAlgebraError::NotDivisible { exponent: rmax });
            }
            let (c, r) = rem.coeff(rmax).div_rem(&dlead);
            if !r.is_zero() {
                return Err(QAlgebraError::NotDivisible { exponent: rmax });
            }
            let term = QPoly::monomial(exp, c);
            rem = rem.sub(&term.mul(divisor));
            quo = quo.add(&term);
        }
        Ok(quo)
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms() {
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = c.abs();
            match e {
                0 => write!(f, "{a}")?,
                1 if a.is_one() => write!(f, "q")?,
                1 => write!(f, "{a}*q")?,
                _ if a.is_one() => write!(f, "q^{e}")?,
                _ => write!(f, "{a}*q^{e}")?,
            }
        }
        Ok(())
    }
}

impl Serialize for QPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.coeffs.len()))?;
        for (e, c) in self.terms() {
            map.serialize_entry(&e.to_string(), &c.to_string())?;
        }
        map.end()
    }
}

/// Bivariate polynomial in q and t with exact integer coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct QTPoly {
    coeffs: BTreeMap<(i64, i64), BigInt>,
}

impl QTPoly {
    pub fn zero() -> Self {
        QTPoly::default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add_term(&mut self, q_exp: i64, t_exp: i64, coeff: &BigInt) {
        if coeff.is_zero() {
            return;
        }
        let entry = self
            .coeffs
            .entry((q_exp, t_exp))
            .or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.coeffs.remove(&(q_exp, t_exp));
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, i64, &BigInt)> {
        self.coeffs.iter().map(|((q, t), c)| (*q, *t, c))
    }

    pub fn add(&self, other: &QTPoly) -> QTPoly {
        let mut out = self.clone();
        for (q, t, c) in other.terms() {
            out.add_term(q, t, c);
        }
        out
    }

    /// Substitute t = 1, collapsing to a polynomial in q.
    pub fn at_t_one(&self) -> QPoly {
        let mut out = QPoly::zero();
        for (q, _, c) in self.terms() {
            out.add_term(q, c);
        }
        out
    }

    /// Substitute q = 1, collapsing to a polynomial in the former t (as q).
    pub fn at_q_one(&self) -> QPoly {
        let mut out = QPoly::zero();
        for (_, t, c) in self.terms() {
            out.add_term(t, c);
        }
        out
    }

    /// Substitute t = 1/q and multiply by q^w: each q^a t^b becomes q^{a-b+w}.
    pub fn specialize_t_inv_q(&self, w: i64) -> QPoly {
        let mut out = QPoly::zero();
        for (q, t, c) in self.terms() {
            out.add_term(q - t + w, c);
        }
        out
    }

    pub fn eval_one(&self) -> BigInt {
        let mut sum = BigInt::zero();
        for (_, _, c) in self.terms() {
            sum += c;
        }
        sum
    }
}

impl fmt::Display for QTPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (q, t, c) in self.terms() {
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = c.abs();
            if q == 0 && t == 0 {
                write!(f, "{a}")?;
                continue;
            }
            if !a.is_one() {
                write!(f, "{a}*")?;
            }
            let mut need_sep = false;
            if q != 0 {
                if q == 1 {
                    write!(f, "q")?;
                } else {
                    write!(f, "q^{q}")?;
                }
                need_sep = true;
            }
            if t != 0 {
                if need_sep {
                    write!(f, "*")?;
                }
                if t == 1 {
                    write!(f, "t")?;
                } else {
                    write!(f, "t^{t}")?;
                }
            }
        }
        Ok(())
    }
}

impl Serialize for QTPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.coeffs.len()))?;
        for (q, t, c) in self.terms() {
            map.serialize_entry(&format!("q^{q} t^{t}"), &c.to_string())?;
        }
        map.end()
    }
}

/// The q-integer [n]_q = 1 + q + ... + q^{n-1}.
pub fn q_int(n: u64) -> QPoly {
    let mut out = QPoly::zero();
    for e in 0..n {
        out.add_term(e as i64, &BigInt::one());
    }
    out
}

/// The q-factorial [n]!_q.
pub fn q_fact(n: u64) -> QPoly {
    let mut out = QPoly::one();
    for k in 1..=n {
        out = out.mul(&q_int(k));
    }
    out
}

/// The q-binomial coefficient [n choose k]_q; zero when k > n.
pub fn q_binom(n: u64, k: u64) -> QPoly {
    if k > n {
        return QPoly::zero();
    }
    q_fact(n)
        .exact_div(&q_fact(k))
        .and_then(|p| p.exact_div(&q_fact(n - k)))
        .expect("q-factorials always divide exactly")
}

/// The descending Pochhammer symbol (q^a; 1/q)_n = prod_{i=0}^{n-1} (1 - q^{a-i}).
pub fn pochhammer(a: i64, n: u64) -> QPoly {
    let mut out = QPoly::one();
    for i in 0..n as i64 {
        let factor = QPoly::one().sub(&QPoly::monomial(a - i, BigInt::one()));
        out = out.mul(&factor);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn q_int_three() {
        assert_eq!(q_int(3).to_string(), "1 + q + q^2");
    }

    #[test]
    fn q_binom_four_two() {
        // [4 choose 2]_q = 1 + q + 2q^2 + q^3 + q^4
        let p = q_binom(4, 2);
        assert_eq!(p.to_string(), "1 + q + 2*q^2 + q^3 + q^4");
        assert_eq!(p.eval_one(), BigInt::from(6));
    }

    #[test]
    fn q_binom_out_of_range_is_zero() {
        assert!(q_binom(3, 5).is_zero());
    }

    #[test]
    fn exact_div_detects_remainder() {
        let num = q_int(3);
        let den = q_int(2);
        assert!(num.exact_div(&den).is_err());
    }

    #[test]
    fn laurent_division() {
        // (q^-1 + 1) * (1 + q) = q^-1 + 2 + q
        let a = QPoly::monomial(-1, BigInt::one()).add(&QPoly::one());
        let b = q_int(2);
        let prod = a.mul(&b);
        assert_eq!(prod.exact_div(&b).unwrap(), a);
    }

    #[test]
    fn pochhammer_small() {
        // (q^1; 1/q)_1 = 1 - q
        let p = pochhammer(1, 1);
        assert_eq!(p.to_string(), "1 - q");
        assert_eq!(p.coeff(0), BigInt::one());
        assert_eq!(p.coeff(1), BigInt::from(-1));
    }

    /// The product-form identity behind the q,1/q specialization:
    /// (q^{n+d}; 1/q)_n / ([d+1]_q (1-q)^n [n-d]!_q [d]!_q)
    ///   = [n choose d]_q [d+n choose n]_q / [d+1]_q.
    #[test]
    fn pochhammer_product_identity() {
        for n in 1u64..=5 {
            for d in 0..=n {
                let lhs_num = pochhammer((n + d) as i64, n);
                let one_minus_q = QPoly::one().sub(&QPoly::monomial(1, BigInt::one()));
                let denom = q_int(d + 1)
                    .mul(&one_minus_q.pow(n))
                    .mul(&q_fact(n - d))
                    .mul(&q_fact(d));
                let lhs = lhs_num.exact_div(&denom).unwrap();
                let rhs = q_binom(n, d)
                    .mul(&q_binom(d + n, n))
                    .exact_div(&q_int(d + 1))
                    .unwrap();
                assert_eq!(lhs, rhs, "n={n} d={d}");
            }
        }
    }

    #[test]
    fn specialize_t_inv_q_shifts() {
        let mut p = QTPoly::zero();
        p.add_term(2, 1, &BigInt::one());
        p.add_term(0, 0, &BigInt::from(3));
        let s = p.specialize_t_inv_q(1);
        assert_eq!(s.coeff(2), BigInt::one());
        assert_eq!(s.coeff(1), BigInt::from(3));
    }

    proptest! {
        #[test]
        fn q_binom_symmetry(n in 0u64..10, k in 0u64..10) {
            prop_assume!(k <= n);
            prop_assert_eq!(q_binom(n, k), q_binom(n, n - k));
        }

        #[test]
        fn q_binom_at_one_is_binomial(n in 0u64..9, k in 0u64..9) {
            prop_assume!(k <= n);
            let expected = num_integer::binomial(
                num_bigint::BigUint::from(n), num_bigint::BigUint::from(k));
            prop_assert_eq!(q_binom(n, k).eval_one(), BigInt::from(expected));
        }

        #[test]
        fn mul_div_roundtrip(a in 1u64..6, b in 1u64..6) {
            let p = q_fact(a);
            let d = q_int(b);
            let prod = p.mul(&d);
            prop_assert_eq!(prod.exact_div(&d).unwrap(), p);
        }
    }
}
