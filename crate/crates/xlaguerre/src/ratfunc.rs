//! Reduced ratios of `XPoly`, the coefficient algebra for differential
//! expressions.
//!
//! Reduction removes the polynomial gcd and any common `alpha`-content, then
//! scales so the denominator's leading `alpha`-coefficient has leading
//! rational 1. Whenever the denominator's leading coefficient is a plain
//! rational (every Laguerre denominator in this crate) that makes the
//! denominator monic in `x`.

use crate::error::{Error, Result};
use crate::xpoly::XPoly;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

#[derive(Clone, PartialEq, Eq)]
pub struct RatFunc {
    num: XPoly,
    den: XPoly,
}

impl RatFunc {
    pub fn new(num: XPoly, den: XPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZeroPoly);
        }
        Ok(Self::reduce(num, den))
    }

    pub fn from_poly(p: XPoly) -> Self {
        RatFunc {
            num: p,
            den: XPoly::one(),
        }
    }

    pub fn zero() -> Self {
        RatFunc::from_poly(XPoly::zero())
    }

    pub fn one() -> Self {
        RatFunc::from_poly(XPoly::one())
    }

    pub fn num(&self) -> &XPoly {
        &self.num
    }

    pub fn den(&self) -> &XPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// True when the denominator is a (nonzero) constant.
    pub fn is_polynomial(&self) -> bool {
        self.den.degree() == Some(0)
    }

    /// The numerator divided by the constant denominator, when polynomial.
    pub fn as_poly(&self) -> Option<XPoly> {
        if !self.is_polynomial() {
            return None;
        }
        self.num.divide_exact(&self.den).ok()
    }

    fn reduce(num: XPoly, den: XPoly) -> Self {
        if num.is_zero() {
            return RatFunc::zero();
        }
        if den == XPoly::one() {
            return RatFunc { num, den };
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = if g.degree() == Some(0) {
            (num, den)
        } else {
            (
                num.divide_exact(&g).expect("gcd divides numerator"),
                den.divide_exact(&g).expect("gcd divides denominator"),
            )
        };
        // Common alpha-content of the two sides.
        let c = num.content().gcd(&den.content());
        if c.degree() != Some(0) {
            let cp = XPoly::constant(c);
            num = num.divide_exact(&cp).expect("content divides");
            den = den.divide_exact(&cp).expect("content divides");
        }
        // Deterministic scaling: leading rational of the denominator's
        // leading alpha-coefficient becomes 1.
        let scale = den
            .leading()
            .and_then(|l| l.leading().cloned())
            .expect("nonzero denominator");
        let scale = scale.recip();
        num = num.scale_rational(&scale);
        den = den.scale_rational(&scale);
        RatFunc { num, den }
    }

    /// Derivative in `x` by the quotient rule.
    pub fn diff(&self) -> Self {
        let num = &(&self.num.diff() * &self.den) - &(&self.num * &self.den.diff());
        let den = &self.den * &self.den;
        Self::reduce(num, den)
    }

    pub fn shift_alpha(&self, c: i64) -> Self {
        Self::reduce(self.num.shift_alpha(c), self.den.shift_alpha(c))
    }

    pub fn reflect_alpha(&self) -> Self {
        Self::reduce(self.num.reflect_alpha(), self.den.reflect_alpha())
    }

    /// Structural equality is canonical-form equality; this checks equality
    /// as rational functions by cross-multiplication.
    pub fn equivalent(&self, other: &RatFunc) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }

    pub fn eval_f64(&self, alpha: f64, x: f64) -> f64 {
        let horner = |p: &XPoly| {
            let mut out = 0.0;
            for c in p.coeffs().iter().rev() {
                out = out * x + c.eval_f64(alpha);
            }
            out
        };
        horner(&self.num) / horner(&self.den)
    }
}

impl From<XPoly> for RatFunc {
    fn from(p: XPoly) -> Self {
        RatFunc::from_poly(p)
    }
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        RatFunc::reduce(num, &self.den * &rhs.den)
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        let num = &(&self.num * &rhs.den) - &(&rhs.num * &self.den);
        RatFunc::reduce(num, &self.den * &rhs.den)
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        RatFunc::reduce(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Div for &RatFunc {
    type Output = RatFunc;
    fn div(self, rhs: &RatFunc) -> RatFunc {
        assert!(!rhs.is_zero(), "division by the zero rational function");
        RatFunc::reduce(&self.num * &rhs.den, &self.den * &rhs.num)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == XPoly::one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alpha::AlphaPoly;

    fn a() -> XPoly {
        XPoly::constant(AlphaPoly::gen())
    }

    #[test]
    fn reduce_difference_of_squares() {
        let x = XPoly::x();
        let num = &(&x + &a()) * &(&x - &a());
        let f = RatFunc::new(num, &x - &a()).unwrap();
        assert_eq!(f.num(), &(&x + &a()));
        assert_eq!(f.den(), &XPoly::one());
    }

    #[test]
    fn zero_denominator_rejected() {
        assert!(matches!(
            RatFunc::new(XPoly::one(), XPoly::zero()),
            Err(Error::DivisionByZeroPoly)
        ));
    }

    #[test]
    fn additive_inverse_and_reciprocal() {
        let x = XPoly::x();
        let f = RatFunc::new(XPoly::one(), x.clone()).unwrap();
        assert!((&f - &f).is_zero());
        let g = RatFunc::from_poly(x);
        assert_eq!(&f * &g, RatFunc::one());
    }

    #[test]
    fn derivative_quotient_rule() {
        // d/dx (1/x) = -1/x^2
        let x = XPoly::x();
        let f = RatFunc::new(XPoly::one(), x.clone()).unwrap();
        let d = f.diff();
        assert_eq!(d.num(), &(-&XPoly::one()));
        assert_eq!(d.den(), &(&x * &x));
    }

    #[test]
    fn monic_denominator() {
        let x = XPoly::x();
        // (x) / (2x - 2a) reduces to 1/2 / (x - a) with monic denominator.
        let den = (&x - &a()).scale_rational(&crate::rational::rat_int(2));
        let f = RatFunc::new(x.clone(), den).unwrap();
        assert_eq!(f.den(), &(&x - &a()));
    }
}
