//! Classical Laguerre polynomials `L_n` with parameters of the form
//! `±alpha + c`, built by the three-term recurrence, plus the identities the
//! exceptional constructions rely on.

use crate::alpha::AlphaPoly;
use crate::error::{Error, Result};
use crate::gamma::gamma;
use crate::rational::{factorial, Rational};
use crate::xpoly::XPoly;
use std::collections::HashMap;
use std::sync::Mutex;
use std::sync::OnceLock;

/// A Laguerre parameter `sign*alpha + offset` with `sign` in `{+1, -1}`.
///
/// This is exactly the parameter family the polynomial constructions use
/// (`alpha-1`, `alpha+1`, `-alpha`, `-alpha-2`, ...).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct AlphaParam {
    pub sign: i8,
    pub offset: i64,
}

impl AlphaParam {
    /// `alpha + c`.
    pub fn alpha(c: i64) -> Self {
        AlphaParam { sign: 1, offset: c }
    }

    /// `-alpha + c`.
    pub fn neg_alpha(c: i64) -> Self {
        AlphaParam {
            sign: -1,
            offset: c,
        }
    }

    /// The parameter shifted by an integer.
    #[allow(clippy::should_implement_trait)]
    pub fn add(self, c: i64) -> Self {
        AlphaParam {
            sign: self.sign,
            offset: self.offset + c,
        }
    }

    pub fn as_alpha_poly(self) -> AlphaPoly {
        AlphaPoly::linear(self.sign as i64, self.offset)
    }

    /// Numeric value at a given `alpha`.
    pub fn eval(self, alpha: f64) -> f64 {
        self.sign as f64 * alpha + self.offset as f64
    }
}

type LaguerreMemo = Mutex<HashMap<(i64, i8, i64), XPoly>>;

fn memo() -> &'static LaguerreMemo {
    static MEMO: OnceLock<LaguerreMemo> = OnceLock::new();
    MEMO.get_or_init(|| Mutex::new(HashMap::new()))
}

/// `L_n` with the given symbolic parameter. Negative `n` gives the zero
/// polynomial; that convention is what makes the exceptional formulas
/// collapse correctly at their lowest admissible degrees.
pub fn laguerre(n: i64, param: AlphaParam) -> XPoly {
    if n < 0 {
        return XPoly::zero();
    }
    let key = (n, param.sign, param.offset);
    if let Some(hit) = memo().lock().unwrap().get(&key) {
        return hit.clone();
    }
    let ap = param.as_alpha_poly();
    let x = XPoly::x();
    let mut prev = XPoly::one(); // L_0
    let mut curr = &XPoly::constant(&ap + &AlphaPoly::one()) - &x; // L_1
    if n == 0 {
        curr = prev.clone();
    }
    for k in 1..n {
        // (k+1) L_{k+1} = (2k+1+a - x) L_k - (k+a) L_{k-1}
        let b = &XPoly::constant(&ap + &AlphaPoly::from_int(2 * k + 1)) - &x;
        let c = XPoly::constant(&ap + &AlphaPoly::from_int(k));
        let next = (&(&b * &curr) - &(&c * &prev))
            .scale_rational(&Rational::new(1.into(), (k + 1).into()));
        prev = curr;
        curr = next;
    }
    memo().lock().unwrap().insert(key, curr.clone());
    curr
}

/// `L_n(-x)` with the given parameter.
pub fn laguerre_reflected(n: i64, param: AlphaParam) -> XPoly {
    laguerre(n, param).reflect()
}

/// Generalized binomial `binom(top, r) = top (top-1) ... (top-r+1) / r!`
/// expanded as a polynomial in `alpha`.
pub fn gen_binom(top: &AlphaPoly, r: u32) -> AlphaPoly {
    let mut acc = AlphaPoly::one();
    for i in 0..r {
        acc = &acc * &(top - &AlphaPoly::from_int(i as i64));
    }
    acc.scale(&factorial(r).recip())
}

/// `L_n(0) = binom(n + a, n)` as an expanded `alpha`-polynomial.
pub fn laguerre_at_zero(n: u32, param: AlphaParam) -> AlphaPoly {
    gen_binom(
        &(&param.as_alpha_poly() + &AlphaPoly::from_int(n as i64)),
        n,
    )
}

/// Derivative identities: `(L_n^a)' = -L_{n-1}^{a+1}`, its reflected form
/// `(L_n^a(-x))' = L_{n-1}^{a+1}(-x)`, and the second-order identity
/// satisfied by `L_n^{-a-2}(-x)`:
/// `x y'' + (x - a - 1) y' - n y = 0`.
pub fn laguerre_derivative_identity_check(n: u32, param: AlphaParam) -> bool {
    let n = n as i64;
    let l = laguerre(n, param);
    let i1 = l.diff() == -&laguerre(n - 1, param.add(1));
    let i2 = laguerre_reflected(n, param).diff() == laguerre_reflected(n - 1, param.add(1));

    // x R'' + (x - alpha - 1) R' - n R = 0 with R = L_n^{-alpha-2}(-x).
    let r = laguerre_reflected(n, AlphaParam::neg_alpha(-2));
    let x = XPoly::x();
    let lin = &x - &XPoly::constant(AlphaPoly::linear(1, 1));
    let residual = &(&(&x * &r.diff().diff()) + &(&lin * &r.diff()))
        - &r.scale_rational(&crate::rational::rat_int(n));
    let i3 = residual.is_zero();

    i1 && i2 && i3
}

/// Three-point identities:
/// `x (L_n^a)' = -(n+a) L_{n-1}^a + n L_n^a` and
/// `L_n^a = L_n^{a+1} - L_{n-1}^{a+1}`.
pub fn laguerre_three_point_identities(n: u32, param: AlphaParam) -> bool {
    assert!(n >= 1);
    let n = n as i64;
    let l = laguerre(n, param);
    let ap = param.as_alpha_poly();
    let lhs = &XPoly::x() * &l.diff();
    let rhs = &(-&laguerre(n - 1, param).scale(&(&ap + &AlphaPoly::from_int(n))))
        + &l.scale(&AlphaPoly::from_int(n));
    let i1 = lhs == rhs;
    let i2 = l == &laguerre(n, param.add(1)) - &laguerre(n - 1, param.add(1));
    i1 && i2
}

/// Squared weighted L2 norm of the classical `L_n^a`:
/// `Gamma(n + a + 1) / n!`.
pub fn classical_norm(n: u32, a: f64) -> Result<f64> {
    if a <= -1.0 {
        return Err(Error::Domain(format!(
            "classical norm requires a > -1, got {a}"
        )));
    }
    let mut nf = 1.0;
    for i in 2..=n {
        nf *= i as f64;
    }
    Ok(gamma(n as f64 + a + 1.0) / nf)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};

    /// Independent construction by the explicit sum
    /// `L_n^a(x) = sum_j (-1)^j binom(n+a, n-j) x^j / j!`.
    fn laguerre_explicit(n: u32, param: AlphaParam) -> XPoly {
        let ap = param.as_alpha_poly();
        let top = &ap + &AlphaPoly::from_int(n as i64);
        let mut coeffs = Vec::with_capacity(n as usize + 1);
        for j in 0..=n {
            let sign = if j % 2 == 0 { 1 } else { -1 };
            let c = gen_binom(&top, n - j).scale(&(factorial(j).recip() * rat_int(sign)));
            coeffs.push(c);
        }
        XPoly::from_coeffs(coeffs)
    }

    #[test]
    fn base_cases() {
        assert_eq!(laguerre(0, AlphaParam::alpha(0)), XPoly::one());
        assert_eq!(laguerre(-1, AlphaParam::alpha(0)), XPoly::zero());
        // L_1^a = 1 + a - x
        let l1 = laguerre(1, AlphaParam::alpha(0));
        assert_eq!(l1.coeff(0), AlphaPoly::linear(1, 1));
        assert_eq!(l1.coeff(1), AlphaPoly::from_int(-1));
        // cross-check (L_1^a)' = -L_0^{a+1} = -1
        assert_eq!(l1.diff(), XPoly::from_int(-1));
    }

    #[test]
    fn recurrence_matches_explicit_sum() {
        for param in [
            AlphaParam::alpha(0),
            AlphaParam::alpha(-1),
            AlphaParam::alpha(2),
            AlphaParam::neg_alpha(-1),
            AlphaParam::neg_alpha(-2),
        ] {
            for n in 0..=12 {
                assert_eq!(
                    laguerre(n as i64, param),
                    laguerre_explicit(n, param),
                    "n={n} param={param:?}"
                );
            }
        }
    }

    #[test]
    fn value_at_zero_is_binomial() {
        for n in 0..=8u32 {
            let l = laguerre(n as i64, AlphaParam::alpha(0));
            assert_eq!(l.coeff(0), laguerre_at_zero(n, AlphaParam::alpha(0)));
        }
    }

    #[test]
    fn classical_eigen_equation() {
        // -x y'' + (-a - 1 + x) y' = n y for y = L_n^a.
        let x = XPoly::x();
        let a1 = &x - &XPoly::constant(AlphaPoly::linear(1, 1));
        for n in 0..=12i64 {
            let l = laguerre(n, AlphaParam::alpha(0));
            let residual = &(&(-&(&x * &l.diff().diff())) + &(&a1 * &l.diff()))
                - &l.scale_rational(&rat_int(n));
            assert!(residual.is_zero(), "n={n}");
        }
    }

    #[test]
    fn derivative_identities() {
        assert!(laguerre_derivative_identity_check(3, AlphaParam::alpha(0)));
        assert!(laguerre_derivative_identity_check(0, AlphaParam::alpha(0)));
        assert!(laguerre_derivative_identity_check(
            5,
            AlphaParam::neg_alpha(-1)
        ));
    }

    #[test]
    fn three_point_identities() {
        assert!(laguerre_three_point_identities(2, AlphaParam::alpha(0)));
        assert!(laguerre_three_point_identities(1, AlphaParam::alpha(1)));
        // n=1 by hand: x(-1) = -(1+a) L_0 + 1 L_1
        assert!(laguerre_three_point_identities(1, AlphaParam::alpha(0)));
        for n in 1..=9 {
            assert!(laguerre_three_point_identities(
                n,
                AlphaParam::neg_alpha(-2)
            ));
        }
    }

    #[test]
    fn norm_values() {
        assert!((classical_norm(0, 0.0).unwrap() - 1.0).abs() < 1e-13);
        assert!((classical_norm(1, 0.5).unwrap() - 1.329_340_388_179_137).abs() < 1e-12);
        assert!((classical_norm(2, -0.5).unwrap() - 0.664_670_194_089_568_5).abs() < 1e-12);
        assert!(classical_norm(1, -1.0).is_err());
    }

    #[test]
    fn binomial_expansions() {
        // binom(k+a, k-1) = (a+2)(a+3)...(a+k)/(k-1)! for k = 3
        let k = 3i64;
        let top = &AlphaPoly::gen() + &AlphaPoly::from_int(k);
        let b = gen_binom(&top, (k - 1) as u32);
        let expect = (&(&AlphaPoly::gen() + &AlphaPoly::from_int(2))
            * &(&AlphaPoly::gen() + &AlphaPoly::from_int(3)))
            .scale(&rat(1, 2));
        assert_eq!(b, expect);
    }
}
