//! Arbitrary-precision rational coefficients.
//!
//! `Rational` is the coefficient field for every exact computation in this
//! crate. `num_rational::BigRational` already maintains the invariants we
//! need: the fraction is always reduced and the denominator is positive.

use num_bigint::BigInt;
pub use num_rational::BigRational as Rational;
use num_traits::{One, Signed, Zero};

/// `n/d` as an exact rational. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// The integer `n` as an exact rational.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Exact `n!` as a rational.
pub fn factorial(n: u32) -> Rational {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= BigInt::from(i);
    }
    Rational::from_integer(acc)
}

/// Nearest f64 to an exact rational.
pub fn to_f64(r: &Rational) -> f64 {
    // Scale down large numerator/denominator pairs together so the
    // conversion stays in range even when both exceed f64.
    let n = r.numer();
    let d = r.denom();
    let nb = n.bits() as i64;
    let db = d.bits() as i64;
    let shift = (nb.max(db) - 900).max(0) as u64;
    let (n, d) = if shift > 0 {
        (n >> shift, d >> shift)
    } else {
        (n.clone(), d.clone())
    };
    let nf = bigint_to_f64(&n);
    let df = bigint_to_f64(&d);
    nf / df
}

fn bigint_to_f64(b: &BigInt) -> f64 {
    let mut out = 0.0f64;
    let (sign, digits) = b.to_u64_digits();
    for d in digits.iter().rev() {
        out = out * 1.8446744073709552e19 + *d as f64;
    }
    if sign == num_bigint::Sign::Minus {
        -out
    } else {
        out
    }
}

/// True when the stored fraction is in canonical form.
pub fn is_canonical(r: &Rational) -> bool {
    use num_integer::Integer;
    r.denom().is_positive() && (r.numer().gcd(r.denom()).is_one() || r.numer().is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constructors_are_canonical() {
        assert!(is_canonical(&rat(6, -4)));
        assert_eq!(rat(6, -4), rat(-3, 2));
        assert_eq!(rat(0, 7), rat_int(0));
    }

    #[test]
    fn factorial_values() {
        assert_eq!(factorial(0), rat_int(1));
        assert_eq!(factorial(5), rat_int(120));
        assert_eq!(factorial(12), rat_int(479_001_600));
    }

    #[test]
    fn f64_conversion() {
        assert_eq!(to_f64(&rat(1, 4)), 0.25);
        assert!((to_f64(&rat(1, 3)) - 1.0 / 3.0).abs() < 1e-16);
        let big = factorial(40);
        assert!((to_f64(&big) - 8.159152832478977e47).abs() / 8.159e47 < 1e-12);
    }
}
