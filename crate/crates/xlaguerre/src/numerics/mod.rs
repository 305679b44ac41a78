//! Floating-point layer: numeric polynomial images, root finding, Bessel
//! zeros, quadrature on the half line, norms, Gram matrices, interlacing and
//! root asymptotics.

pub mod asymptotics;
pub mod bessel;
pub mod dd;
pub mod gram;
pub mod interlacing;
pub mod quad;
pub mod roots;

use crate::exceptional::Family;
use crate::rational::{to_f64, Rational};
use crate::xpoly::XPoly;
use dd::Dd;

/// Numeric image of an `XPoly` after substituting a value for `alpha`.
#[derive(Clone, Debug)]
pub struct RealPoly {
    /// Ascending powers of `x`; the leading coefficient is nonzero.
    pub coeffs: Vec<f64>,
    pub source_alpha: f64,
    /// `(family, m, n)` when the polynomial came from a family constructor.
    pub provenance: Option<(Family, u32, u32)>,
}

impl RealPoly {
    pub fn new(coeffs: Vec<f64>) -> Self {
        let mut coeffs = coeffs;
        while coeffs.last().is_some_and(|c| *c == 0.0) {
            coeffs.pop();
        }
        RealPoly {
            coeffs,
            source_alpha: f64::NAN,
            provenance: None,
        }
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, x: f64) -> f64 {
        let mut out = 0.0;
        for c in self.coeffs.iter().rev() {
            out = out * x + c;
        }
        out
    }

    pub fn eval_dd(&self, x: Dd) -> Dd {
        let mut out = Dd::ZERO;
        for c in self.coeffs.iter().rev() {
            out = out.mul(x).add_f64(*c);
        }
        out
    }

    pub fn diff(&self) -> RealPoly {
        if self.coeffs.len() <= 1 {
            return RealPoly::new(vec![]);
        }
        RealPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| i as f64 * c)
                .collect(),
        )
    }
}

/// Substitute a numeric `alpha` into a symbolic polynomial. Each coefficient
/// is evaluated by Horner in `alpha` at double precision.
pub fn substitute_alpha(p: &XPoly, a: f64) -> RealPoly {
    let coeffs = p.coeffs().iter().map(|c| c.eval_f64(a)).collect();
    RealPoly {
        source_alpha: a,
        ..RealPoly::new(coeffs)
    }
}

/// Exact substitution at a rational `alpha`; coefficients stay rational.
pub fn substitute_alpha_exact(p: &XPoly, a: &Rational) -> Vec<Rational> {
    p.eval_alpha_rational(a)
}

/// Exact substitution, then the nearest `f64` of each exact coefficient.
/// This is the preferred bridge for rational `alpha`: the only rounding is
/// the final one per coefficient.
pub fn substitute_alpha_rational(p: &XPoly, a: &Rational) -> RealPoly {
    let coeffs = p.eval_alpha_rational(a).iter().map(to_f64).collect();
    RealPoly {
        source_alpha: to_f64(a),
        ..RealPoly::new(coeffs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exceptional::xlag3;
    use crate::rational::rat;

    #[test]
    fn substitution_appendix_case() {
        // x^2 - 2ax + a(a+1) at a = -1/2 -> x^2 + x - 1/4
        let p = substitute_alpha(&xlag3(1, 2).unwrap(), -0.5);
        assert_eq!(p.coeffs, vec![-0.25, 1.0, 1.0]);
        assert_eq!(p.source_alpha, -0.5);
        let exact = substitute_alpha_exact(&xlag3(1, 2).unwrap(), &rat(-1, 2));
        assert_eq!(exact, vec![rat(-1, 4), rat(1, 1), rat(1, 1)]);
    }

    #[test]
    fn alpha_zero_drops_terms() {
        let p = substitute_alpha(&xlag3(1, 2).unwrap(), 0.0);
        // x^2 at a = 0
        assert_eq!(p.coeffs, vec![0.0, 0.0, 1.0]);
        assert_eq!(p.eval(3.0), 9.0);
    }

    #[test]
    fn constant_polynomial() {
        let p = substitute_alpha(&XPoly::one(), 0.7);
        assert_eq!(p.coeffs, vec![1.0]);
        assert_eq!(p.eval(123.0), 1.0);
    }
}
