//! Polynomials in the symbolic parameter `alpha` over exact rationals.
//!
//! Every coefficient that appears in the polynomial families is a polynomial
//! in the parameter `alpha` with rational coefficients (generalized binomials
//! are expanded into products of linear factors), so `AlphaPoly` is the
//! coefficient ring for the whole symbolic layer.

use crate::rational::{rat_int, to_f64, Rational};
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Dense polynomial in `alpha`, ascending powers, no trailing zero
/// coefficient (the zero polynomial has an empty coefficient list).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct AlphaPoly {
    coeffs: Vec<Rational>,
}

impl AlphaPoly {
    pub fn zero() -> Self {
        AlphaPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        AlphaPoly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        AlphaPoly::from_coeffs(vec![c])
    }

    pub fn from_int(n: i64) -> Self {
        AlphaPoly::constant(rat_int(n))
    }

    /// The generator `alpha` itself.
    pub fn gen() -> Self {
        AlphaPoly::from_coeffs(vec![Rational::zero(), Rational::one()])
    }

    /// `sign*alpha + offset` with `sign` in `{+1, -1}`.
    pub fn linear(sign: i64, offset: i64) -> Self {
        AlphaPoly::from_coeffs(vec![rat_int(offset), rat_int(sign)])
    }

    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        AlphaPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `alpha^i` (zero beyond the stored degree).
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree in `alpha`, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return AlphaPoly::zero();
        }
        AlphaPoly::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Substitute `alpha -> alpha + c`.
    pub fn shift_alpha(&self, c: i64) -> Self {
        // Horner in (alpha + c).
        let shift = AlphaPoly::linear(1, c);
        let mut out = AlphaPoly::zero();
        for a in self.coeffs.iter().rev() {
            out = &(&out * &shift) + &AlphaPoly::constant(a.clone());
        }
        out
    }

    /// Substitute `alpha -> -alpha`.
    pub fn reflect_alpha(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| if i % 2 == 1 { -c.clone() } else { c.clone() })
            .collect();
        AlphaPoly::from_coeffs(coeffs)
    }

    /// Exact evaluation at a rational value of `alpha`.
    pub fn eval_rational(&self, a: &Rational) -> Rational {
        let mut out = Rational::zero();
        for c in self.coeffs.iter().rev() {
            out = out * a + c;
        }
        out
    }

    pub fn eval_f64(&self, a: f64) -> f64 {
        let mut out = 0.0;
        for c in self.coeffs.iter().rev() {
            out = out * a + to_f64(c);
        }
        out
    }

    /// Quotient and remainder over the rational coefficient field.
    pub fn div_rem(&self, d: &AlphaPoly) -> (AlphaPoly, AlphaPoly) {
        assert!(!d.is_zero(), "division by the zero AlphaPoly");
        let dd = d.coeffs.len();
        if self.coeffs.len() < dd {
            return (AlphaPoly::zero(), self.clone());
        }
        let lead = d.coeffs.last().unwrap().clone();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); rem.len() - dd + 1];
        for k in (0..quot.len()).rev() {
            let q = &rem[k + dd - 1] / &lead;
            if !q.is_zero() {
                for (i, dc) in d.coeffs.iter().enumerate() {
                    let t = &q * dc;
                    rem[k + i] = &rem[k + i] - &t;
                }
            }
            quot[k] = q;
        }
        rem.truncate(dd - 1);
        (AlphaPoly::from_coeffs(quot), AlphaPoly::from_coeffs(rem))
    }

    /// Exact division; `None` when the remainder is nonzero.
    pub fn div_exact(&self, d: &AlphaPoly) -> Option<AlphaPoly> {
        let (q, r) = self.div_rem(d);
        r.is_zero().then_some(q)
    }

    /// Monic gcd over the rational field; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &AlphaPoly) -> AlphaPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Scaled so the leading coefficient is 1 (zero stays zero).
    pub fn monic(&self) -> AlphaPoly {
        match self.leading() {
            None => AlphaPoly::zero(),
            Some(l) => self.scale(&l.recip()),
        }
    }

    /// True when the leading rational coefficient is positive.
    pub fn leading_positive(&self) -> bool {
        self.leading().map(|l| l.is_positive()).unwrap_or(false)
    }
}

impl Add for &AlphaPoly {
    type Output = AlphaPoly;
    fn add(self, rhs: &AlphaPoly) -> AlphaPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + rhs.coeff(i));
        }
        AlphaPoly::from_coeffs(out)
    }
}

impl Sub for &AlphaPoly {
    type Output = AlphaPoly;
    fn sub(self, rhs: &AlphaPoly) -> AlphaPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) - rhs.coeff(i));
        }
        AlphaPoly::from_coeffs(out)
    }
}

impl Mul for &AlphaPoly {
    type Output = AlphaPoly;
    fn mul(self, rhs: &AlphaPoly) -> AlphaPoly {
        if self.is_zero() || rhs.is_zero() {
            return AlphaPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        AlphaPoly::from_coeffs(out)
    }
}

impl Neg for &AlphaPoly {
    type Output = AlphaPoly;
    fn neg(self) -> AlphaPoly {
        AlphaPoly::from_coeffs(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

impl fmt::Debug for AlphaPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for AlphaPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
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
            let unit_mag = mag.is_one();
            if i == 0 || !unit_mag {
                write!(f, "{}", mag)?;
            }
            if i > 0 {
                if !unit_mag {
                    write!(f, "*")?;
                }
                write!(f, "a")?;
                if i > 1 {
                    write!(f, "^{}", i)?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn canonical_trailing_zeros_dropped() {
        let p = AlphaPoly::from_coeffs(vec![rat_int(1), rat_int(0), rat_int(0)]);
        assert_eq!(p.degree(), Some(0));
        let z = AlphaPoly::from_coeffs(vec![rat_int(0)]);
        assert!(z.is_zero());
    }

    #[test]
    fn arithmetic() {
        let a = AlphaPoly::gen();
        let one = AlphaPoly::one();
        // (a+1)(a-1) = a^2 - 1
        let prod = &(&a + &one) * &(&a - &one);
        assert_eq!(
            prod,
            AlphaPoly::from_coeffs(vec![rat_int(-1), rat_int(0), rat_int(1)])
        );
    }

    #[test]
    fn shift_and_reflect() {
        let a = AlphaPoly::gen();
        let p = &(&a * &a) + &a; // a^2 + a
        let shifted = p.shift_alpha(1); // (a+1)^2 + (a+1) = a^2 + 3a + 2
        assert_eq!(
            shifted,
            AlphaPoly::from_coeffs(vec![rat_int(2), rat_int(3), rat_int(1)])
        );
        let reflected = p.reflect_alpha(); // a^2 - a
        assert_eq!(
            reflected,
            AlphaPoly::from_coeffs(vec![rat_int(0), rat_int(-1), rat_int(1)])
        );
        assert_eq!(p.reflect_alpha().reflect_alpha(), p);
    }

    #[test]
    fn division_and_gcd() {
        let a = AlphaPoly::gen();
        let one = AlphaPoly::one();
        let p = &(&a + &one) * &(&a - &one);
        let q = p.div_exact(&(&a - &one)).unwrap();
        assert_eq!(q, &a + &one);
        assert!(p.div_exact(&(&a + &AlphaPoly::from_int(2))).is_none());
        let g = (&p * &(&a + &one)).gcd(&(&(&a + &one) * &(&a + &one)));
        assert_eq!(g, &(&a + &one) * &(&a + &one));
    }

    #[test]
    fn eval() {
        let p = AlphaPoly::from_coeffs(vec![rat(1, 2), rat_int(-2), rat_int(1)]);
        assert_eq!(p.eval_rational(&rat(1, 2)), rat(-1, 4));
        assert!((p.eval_f64(0.5) + 0.25).abs() < 1e-15);
    }
}
