//! Polynomials in `x` whose coefficients are polynomials in `alpha`.
//!
//! This is the ring holding every polynomial family in the crate: classical
//! Laguerre polynomials with shifted parameters and the three exceptional
//! families. Arithmetic is exact.

use crate::alpha::AlphaPoly;
use crate::error::Error;
use crate::rational::{rat_int, Rational};
use num_traits::Zero;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Dense polynomial in `x`, ascending powers, canonical (no trailing zero
/// coefficient).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct XPoly {
    coeffs: Vec<AlphaPoly>,
}

impl XPoly {
    pub fn zero() -> Self {
        XPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        XPoly::constant(AlphaPoly::one())
    }

    pub fn constant(c: AlphaPoly) -> Self {
        XPoly::from_coeffs(vec![c])
    }

    pub fn from_int(n: i64) -> Self {
        XPoly::constant(AlphaPoly::from_int(n))
    }

    /// The variable `x`.
    pub fn x() -> Self {
        XPoly::from_coeffs(vec![AlphaPoly::zero(), AlphaPoly::one()])
    }

    /// `x^n`.
    pub fn x_pow(n: usize) -> Self {
        let mut coeffs = vec![AlphaPoly::zero(); n + 1];
        coeffs[n] = AlphaPoly::one();
        XPoly::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<AlphaPoly>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        XPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[AlphaPoly] {
        &self.coeffs
    }

    /// Coefficient of `x^i`.
    pub fn coeff(&self, i: usize) -> AlphaPoly {
        self.coeffs.get(i).cloned().unwrap_or_else(AlphaPoly::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree in `x`, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&AlphaPoly> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &AlphaPoly) -> Self {
        if c.is_zero() {
            return XPoly::zero();
        }
        XPoly::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn scale_rational(&self, c: &Rational) -> Self {
        self.scale(&AlphaPoly::constant(c.clone()))
    }

    /// Formal derivative in `x`.
    pub fn diff(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return XPoly::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c.scale(&rat_int(i as i64)))
            .collect();
        XPoly::from_coeffs(coeffs)
    }

    /// `p(-x)`.
    pub fn reflect(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
            .collect();
        XPoly::from_coeffs(coeffs)
    }

    /// Antiderivative vanishing at `x = 0`.
    pub fn integrate(&self) -> Self {
        if self.is_zero() {
            return XPoly::zero();
        }
        let mut coeffs = vec![AlphaPoly::zero()];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs.push(c.scale(&Rational::new(1.into(), ((i + 1) as i64).into())));
        }
        XPoly::from_coeffs(coeffs)
    }

    /// Substitute `alpha -> alpha + c` in every coefficient.
    pub fn shift_alpha(&self, c: i64) -> Self {
        XPoly::from_coeffs(self.coeffs.iter().map(|a| a.shift_alpha(c)).collect())
    }

    /// Substitute `alpha -> -alpha` in every coefficient.
    pub fn reflect_alpha(&self) -> Self {
        XPoly::from_coeffs(self.coeffs.iter().map(|a| a.reflect_alpha()).collect())
    }

    /// Exact substitution of a rational value for `alpha`.
    pub fn eval_alpha_rational(&self, a: &Rational) -> Vec<Rational> {
        let mut out: Vec<Rational> = self.coeffs.iter().map(|c| c.eval_rational(a)).collect();
        while out.last().is_some_and(|c| c.is_zero()) {
            out.pop();
        }
        out
    }

    /// Evaluate at a rational point `(alpha, x)`.
    pub fn eval_rational(&self, a: &Rational, x: &Rational) -> Rational {
        let mut out = Rational::zero();
        for c in self.coeffs.iter().rev() {
            out = out * x + c.eval_rational(a);
        }
        out
    }

    /// Exact division in the ring of `x`-polynomials with `alpha`-polynomial
    /// coefficients.
    pub fn divide_exact(&self, den: &XPoly) -> Result<XPoly, Error> {
        if den.is_zero() {
            return Err(Error::DivisionByZeroPoly);
        }
        if self.is_zero() {
            return Ok(XPoly::zero());
        }
        let dd = den.coeffs.len();
        if self.coeffs.len() < dd {
            return Err(Error::NotDivisible);
        }
        let lead = den.coeffs.last().unwrap();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![AlphaPoly::zero(); rem.len() - dd + 1];
        for k in (0..quot.len()).rev() {
            let top = std::mem::take(&mut rem[k + dd - 1]);
            if top.is_zero() {
                continue;
            }
            let q = top.div_exact(lead).ok_or(Error::NotDivisible)?;
            for (i, dc) in den.coeffs.iter().enumerate().take(dd - 1) {
                rem[k + i] = &rem[k + i] - &(&q * dc);
            }
            quot[k] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::NotDivisible);
        }
        Ok(XPoly::from_coeffs(quot))
    }

    /// Content: monic gcd of the coefficients in the `alpha` ring.
    pub fn content(&self) -> AlphaPoly {
        let mut g = AlphaPoly::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.degree() == Some(0) {
                break;
            }
        }
        g
    }

    /// Divides out the content; the zero polynomial stays zero.
    pub fn primitive_part(&self) -> XPoly {
        if self.is_zero() {
            return XPoly::zero();
        }
        let c = self.content();
        XPoly::from_coeffs(
            self.coeffs
                .iter()
                .map(|a| a.div_exact(&c).expect("content divides"))
                .collect(),
        )
    }

    /// Pseudo-remainder of `self` by `den`: `lc(den)^(deg diff + 1) * self mod den`.
    fn pseudo_rem(&self, den: &XPoly) -> XPoly {
        let dd = den.coeffs.len();
        let lead = den.coeffs.last().unwrap();
        let mut rem = self.clone();
        while !rem.is_zero() && rem.coeffs.len() >= dd {
            let k = rem.coeffs.len() - dd;
            let top = rem.coeffs.last().unwrap().clone();
            // lead * rem - top * x^k * den
            let mut new_coeffs: Vec<AlphaPoly> = rem.coeffs.iter().map(|c| c * lead).collect();
            for (i, dc) in den.coeffs.iter().enumerate() {
                new_coeffs[k + i] = &new_coeffs[k + i] - &(&top * dc);
            }
            rem = XPoly::from_coeffs(new_coeffs);
            debug_assert!(rem.coeffs.len() < k + dd);
        }
        rem
    }

    /// Gcd up to a unit of the fraction field Q(alpha), computed with the
    /// primitive pseudo-remainder sequence. The result is primitive with a
    /// positive leading rational.
    pub fn gcd(&self, other: &XPoly) -> XPoly {
        if self.is_zero() {
            return other.normalized_primitive();
        }
        if other.is_zero() {
            return self.normalized_primitive();
        }
        let mut a = self.primitive_part();
        let mut b = other.primitive_part();
        if a.coeffs.len() < b.coeffs.len() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).primitive_part();
            a = b;
            b = r;
        }
        a.normalized_primitive()
    }

    fn normalized_primitive(&self) -> XPoly {
        let p = self.primitive_part();
        match p.leading().and_then(|l| l.leading().cloned()) {
            None => p,
            Some(lc) => p.scale_rational(&lc.recip()),
        }
    }
}

impl Add for &XPoly {
    type Output = XPoly;
    fn add(self, rhs: &XPoly) -> XPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(&self.coeff(i) + &rhs.coeff(i));
        }
        XPoly::from_coeffs(out)
    }
}

impl Sub for &XPoly {
    type Output = XPoly;
    fn sub(self, rhs: &XPoly) -> XPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(&self.coeff(i) - &rhs.coeff(i));
        }
        XPoly::from_coeffs(out)
    }
}

impl Mul for &XPoly {
    type Output = XPoly;
    fn mul(self, rhs: &XPoly) -> XPoly {
        if self.is_zero() || rhs.is_zero() {
            return XPoly::zero();
        }
        let mut out = vec![AlphaPoly::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        XPoly::from_coeffs(out)
    }
}

impl Neg for &XPoly {
    type Output = XPoly;
    fn neg(self) -> XPoly {
        XPoly::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Debug for XPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for XPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if i == 0 {
                write!(f, "({})", c)?;
            } else if c == &AlphaPoly::one() {
                write!(f, "x")?;
            } else {
                write!(f, "({})*x", c)?;
            }
            if i > 1 {
                write!(f, "^{}", i)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn a() -> XPoly {
        XPoly::constant(AlphaPoly::gen())
    }

    #[test]
    fn difference_of_squares() {
        let x = XPoly::x();
        let p = &(&x + &a()) * &(&x - &a());
        let aa = &AlphaPoly::gen() * &AlphaPoly::gen();
        assert_eq!(p, &(&x * &x) - &XPoly::constant(aa));
    }

    #[test]
    fn additive_identity_and_degree() {
        let x = XPoly::x();
        let p = &(&x * &x) + &a();
        assert_eq!(&p + &XPoly::zero(), p);
        assert_eq!((&XPoly::x_pow(2) * &XPoly::x_pow(3)).degree(), Some(5));
    }

    #[test]
    fn diff_and_reflect() {
        // x^2 - 2ax + a(a+1) -> 2x - 2a
        let x = XPoly::x();
        let two_a = XPoly::constant(AlphaPoly::linear(2, 0));
        let c = AlphaPoly::from_coeffs(vec![rat_int(0), rat_int(1), rat_int(1)]);
        let p = &(&(&x * &x) - &(&two_a * &x)) + &XPoly::constant(c);
        assert_eq!(p.diff(), &x.scale_rational(&rat_int(2)) - &two_a);

        // 1 + a - x -> 1 + a + x
        let l1 = XPoly::from_coeffs(vec![AlphaPoly::linear(1, 1), AlphaPoly::from_int(-1)]);
        let r = l1.reflect();
        assert_eq!(r.coeff(1), AlphaPoly::one());
        assert_eq!(r.coeff(0), AlphaPoly::linear(1, 1));
        assert_eq!(r.reflect(), l1);
        assert_eq!(XPoly::x().reflect(), -&XPoly::x());

        // diff(reflect(p)) = -reflect(diff(p))
        assert_eq!(p.reflect().diff(), -&p.diff().reflect());
    }

    #[test]
    fn divide_exact_cases() {
        let x = XPoly::x();
        let num = &(&x + &a()) * &(&x - &a());
        let q = num.divide_exact(&(&x - &a())).unwrap();
        assert_eq!(q, &x + &a());

        let err = (&x * &x).divide_exact(&(&x + &XPoly::one())).unwrap_err();
        assert!(matches!(err, Error::NotDivisible));

        // (2x - 2a)/(x - a) = 2
        let num = (&x - &a()).scale_rational(&rat_int(2));
        assert_eq!(num.divide_exact(&(&x - &a())).unwrap(), XPoly::from_int(2));
    }

    #[test]
    fn gcd_reduces() {
        let x = XPoly::x();
        let f = &(&x + &a()) * &(&x - &a());
        let g = &(&x - &a()) * &(&x - &a());
        let d = f.gcd(&g);
        assert_eq!(d, &x - &a());
    }

    #[test]
    fn integrate_is_inverse_of_diff() {
        let x = XPoly::x();
        let p = &(&(&x * &x) * &x) + &(&a() * &x);
        assert_eq!(p.integrate().diff(), p);
        assert_eq!(
            p.integrate().eval_rational(&rat(1, 2), &rat_int(0)),
            rat_int(0)
        );
    }

    #[test]
    fn substitution() {
        // x^2 - 2ax + a(a+1) at a = -1/2 -> x^2 + x - 1/4
        let x = XPoly::x();
        let two_a = XPoly::constant(AlphaPoly::linear(2, 0));
        let c = AlphaPoly::from_coeffs(vec![rat_int(0), rat_int(1), rat_int(1)]);
        let p = &(&(&x * &x) - &(&two_a * &x)) + &XPoly::constant(c);
        let coeffs = p.eval_alpha_rational(&rat(-1, 2));
        assert_eq!(coeffs, vec![rat(-1, 4), rat_int(1), rat_int(1)]);
    }
}
