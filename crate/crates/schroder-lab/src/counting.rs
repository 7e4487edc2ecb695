//! Closed-form counts and generating polynomials, all in exact arithmetic.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{CountError, StatError};
use crate::lattice::{enumerate_paths, PathSpec};
use crate::qalgebra::QTPoly;
use crate::stats::{area, dinv, DinvVariant, Interpretation};

/// Binomial coefficient as an exact big integer (zero when k > n).
pub fn binom(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    num_integer::binomial(BigUint::from(n), BigUint::from(k))
}

pub fn factorial(n: u64) -> BigUint {
    let mut out = BigUint::one();
    for k in 2..=n {
        out *= BigUint::from(k);
    }
    out
}

/// Multinomial coefficient total! / (parts[0]! * parts[1]! * ...).
/// The parts must sum to `total`.
pub fn multinomial(total: u64, parts: &[u64]) -> BigUint {
    debug_assert_eq!(parts.iter().sum::<u64>(), total);
    let mut out = factorial(total);
    for &p in parts {
        let (q, r) = out.div_rem(&factorial(p));
        debug_assert!(r.is_zero());
        out = q;
    }
    out
}

/// Number of distinct rearrangements of a sorted slice of symbols.
pub fn rearrangement_count<T: PartialEq>(sorted: &[T]) -> BigUint {
    let mut parts = Vec::new();
    let mut i = 0;
    while i < sorted.len() {
        let mut j = i + 1;
        while j < sorted.len() && sorted[j] == sorted[i] {
            j += 1;
        }
        parts.push((j - i) as u64);
        i = j;
    }
    multinomial(sorted.len() as u64, &parts)
}

/// |Sch_{n,d}^r| = C(n, d) C(dr + n, n) / (dr + 1).
///
/// Panics if the division is not exact: that would mean the closed form
/// itself is violated, which is an internal error.
pub fn count_schroder(n: u64, d: u64, r: u64) -> BigUint {
    let num = binom(n, d) * binom(d * r + n, n);
    let (q, rem) = num.div_rem(&BigUint::from(d * r + 1));
    assert!(
        rem.is_zero(),
        "count_schroder({n},{d},{r}): closed form is not integral"
    );
    q
}

/// The Fuss-Catalan number: |Sch_{n,n}^r| with no diagonal steps.
pub fn count_fuss_catalan(n: u64, r: u64) -> BigUint {
    count_schroder(n, n, r)
}

/// Closed form for the number of r-Schröder parking functions:
/// (n! / d!) C(d(r-1) + n + 1, n - d) (d(r-1) + n + 1)^{d-1}.
///
/// The exponent d - 1 is negative when d = 0, so the product is evaluated
/// with exact rationals and an error is returned if it is not an integer.
pub fn count_parking_closed(n: u64, d: u64, r: u64) -> Result<BigUint, CountError> {
    if d > n {
        return Err(CountError::NonIntegral {
            context: format!("count_parking_closed({n},{d},{r}): d exceeds n"),
        });
    }
    let m = BigInt::from(d * (r - 1) + n + 1);
    let mut value = BigRational::from_integer(BigInt::from(factorial(n)));
    value /= BigRational::from_integer(BigInt::from(factorial(d)));
    value *= BigRational::from_integer(BigInt::from(binom(d * (r - 1) + n + 1, n - d)));
    // m^{d-1}: multiply d - 1 times, or divide once when d = 0.
    if d >= 1 {
        for _ in 0..(d - 1) {
            value *= BigRational::from_integer(m.clone());
        }
    } else {
        value /= BigRational::from_integer(m.clone());
    }
    if !value.is_integer() {
        return Err(CountError::NonIntegral {
            context: format!("count_parking_closed({n},{d},{r}) = {value}"),
        });
    }
    let int = value.to_integer();
    if int.is_negative() {
        return Err(CountError::NonIntegral {
            context: format!("count_parking_closed({n},{d},{r}) is negative"),
        });
    }
    Ok(int.to_biguint().unwrap())
}

/// Generating polynomial sum over the family of q^{area} t^{dinv}.
pub fn gen_poly(
    spec: &PathSpec,
    variant: DinvVariant,
    interpretation: Interpretation,
) -> Result<QTPoly, StatError> {
    let mut out = QTPoly::zero();
    let one = BigInt::one();
    for path in enumerate_paths(spec) {
        let code = path.encode();
        let a = area(&code)?;
        let dv = dinv(&code, variant, interpretation)?;
        out.add_term(a as i64, dv as i64, &one);
    }
    Ok(out)
}

/// Generating polynomial in q alone: sum of q^{area} over the family.
pub fn area_poly(spec: &PathSpec) -> Result<crate::qalgebra::QPoly, StatError> {
    let mut out = crate::qalgebra::QPoly::zero();
    let one = BigInt::one();
    for path in enumerate_paths(spec) {
        out.add_term(area(&path.encode())? as i64, &one);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::PathSpec;

    #[test]
    fn schroder_counts_match_enumeration_anchors() {
        assert_eq!(count_schroder(2, 1, 2), BigUint::from(4u32));
        assert_eq!(count_schroder(2, 2, 1), BigUint::from(2u32));
        assert_eq!(count_schroder(1, 1, 3), BigUint::from(1u32));
        let spec = PathSpec::integer_slope(3, 2, 2).unwrap();
        assert_eq!(
            BigUint::from(enumerate_paths(&spec).count()),
            count_schroder(3, 2, 2)
        );
    }

    #[test]
    fn fuss_catalan_values() {
        // Catalan numbers at r = 1.
        assert_eq!(count_fuss_catalan(3, 1), BigUint::from(5u32));
        assert_eq!(count_fuss_catalan(4, 1), BigUint::from(14u32));
        // (1/(nr+1)) C(nr+n, n) at r = 2, n = 3: C(9,3)/7 = 12.
        assert_eq!(count_fuss_catalan(3, 2), BigUint::from(12u32));
    }

    #[test]
    fn parking_closed_anchors() {
        assert_eq!(count_parking_closed(2, 1, 2).unwrap(), BigUint::from(8u32));
        assert_eq!(count_parking_closed(2, 2, 1).unwrap(), BigUint::from(3u32));
        assert_eq!(count_parking_closed(3, 3, 1).unwrap(), BigUint::from(16u32));
        // d = 0 reduces to n! via the exact rational evaluation.
        assert_eq!(count_parking_closed(3, 0, 2).unwrap(), factorial(3));
        assert_eq!(count_parking_closed(4, 0, 1).unwrap(), factorial(4));
    }

    #[test]
    fn rearrangements() {
        assert_eq!(rearrangement_count(&[0, 0, 1, 2]), BigUint::from(12u32));
        assert_eq!(rearrangement_count(&[1, 1, 1]), BigUint::one());
    }

    #[test]
    fn area_poly_small() {
        let spec = PathSpec::integer_slope(2, 1, 2).unwrap();
        let p = area_poly(&spec).unwrap();
        assert_eq!(p.to_string(), "2 + q + q^2");
    }
}
