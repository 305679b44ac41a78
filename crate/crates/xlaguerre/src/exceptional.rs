//! The Type I, II and III exceptional X_m-Laguerre polynomials: every
//! representation, the first-order ladder operators they come from, and the
//! symbolic identity checkers for the structural lemmas.

use crate::alpha::AlphaPoly;
use crate::classical::{gen_binom, laguerre, laguerre_reflected, AlphaParam};
use crate::error::{Error, Result};
use crate::ratfunc::RatFunc;
use crate::rational::rat_int;
use crate::xpoly::XPoly;

/// The three exceptional Laguerre families.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Family {
    TypeI,
    TypeII,
    TypeIII,
}

impl Family {
    pub fn label(self) -> &'static str {
        match self {
            Family::TypeI => "Type I",
            Family::TypeII => "Type II",
            Family::TypeIII => "Type III",
        }
    }

    /// Admissible numeric parameter range for weights, norms and quadrature:
    /// Type I needs `a > 0`, Type II `a > m-1`, Type III `-1 < a < 0`.
    /// The symbolic constructions are formal in `alpha` and do not enforce
    /// this.
    pub fn alpha_admissible(self, m: u32, a: f64) -> bool {
        match self {
            Family::TypeI => a > 0.0,
            Family::TypeII => a > m as f64 - 1.0,
            Family::TypeIII => -1.0 < a && a < 0.0,
        }
    }

    pub fn check_alpha(self, m: u32, a: f64) -> Result<()> {
        if self.alpha_admissible(m, a) {
            Ok(())
        } else {
            Err(Error::Domain(format!(
                "alpha = {a} out of range for {} with m = {m}",
                self.label()
            )))
        }
    }

    /// Degrees the family actually produces: Types I and II skip
    /// `{0, ..., m-1}`, Type III skips `{1, ..., m}`.
    pub fn degree_admissible(self, m: u32, n: u32) -> bool {
        match self {
            Family::TypeI | Family::TypeII => n >= m,
            #[allow(clippy::int_plus_one)] // mirrors the stated degree set {0} u {m+1, ...}
            Family::TypeIII => n == 0 || n >= m + 1,
        }
    }

    /// The admissible degrees in increasing order, `count` of them.
    pub fn degrees(self, m: u32, count: usize) -> Vec<u32> {
        let start = match self {
            Family::TypeI | Family::TypeII => m,
            Family::TypeIII => 0,
        };
        let mut out = Vec::with_capacity(count);
        let mut n = start;
        while out.len() < count {
            if self.degree_admissible(m, n) {
                out.push(n);
            }
            n += 1;
        }
        out
    }

    fn not_admissible(self, m: u32, n: u32) -> Error {
        Error::DegreeNotAdmissible {
            family: self.label(),
            m,
            n,
        }
    }
}

/// Degree-`n` Type I polynomial:
/// `L_m^a(-x) L_{n-m}^{a-1}(x) + L_m^{a-1}(-x) L_{n-m-1}^a(x)`.
pub fn xlag1(m: u32, n: u32) -> Result<XPoly> {
    if m < 1 || !Family::TypeI.degree_admissible(m, n) {
        return Err(Family::TypeI.not_admissible(m, n));
    }
    let (m, n) = (m as i64, n as i64);
    let t1 = &laguerre_reflected(m, AlphaParam::alpha(0)) * &laguerre(n - m, AlphaParam::alpha(-1));
    let t2 =
        &laguerre_reflected(m, AlphaParam::alpha(-1)) * &laguerre(n - m - 1, AlphaParam::alpha(0));
    Ok(&t1 + &t2)
}

/// Degree-`n` Type II polynomial:
/// `x L_m^{-a-1}(x) L_{n-m-1}^{a+2}(x) + (m-a-1) L_m^{-a-2}(x) L_{n-m}^{a+1}(x)`.
/// `m = 0` reproduces the classical family up to the factor `-(n+a+1)`.
pub fn xlag2(m: u32, n: u32) -> Result<XPoly> {
    if !Family::TypeII.degree_admissible(m, n) {
        return Err(Family::TypeII.not_admissible(m, n));
    }
    let (m, n) = (m as i64, n as i64);
    let t1 = &(&XPoly::x() * &laguerre(m, AlphaParam::neg_alpha(-1)))
        * &laguerre(n - m - 1, AlphaParam::alpha(2));
    let factor = AlphaPoly::linear(-1, m - 1);
    let t2 = (&laguerre(m, AlphaParam::neg_alpha(-2)) * &laguerre(n - m, AlphaParam::alpha(1)))
        .scale(&factor);
    Ok(&t1 + &t2)
}

/// Degree-`n` Type III polynomial:
/// `x L_{n-m-2}^{a+2}(x) L_m^{-a-1}(-x) + (m+1) L_{n-m-1}^{a+1}(x) L_{m+1}^{-a-2}(-x)`
/// for `n >= m+1`, and `1` for `n = 0`.
pub fn xlag3(m: u32, n: u32) -> Result<XPoly> {
    if m < 1 || !Family::TypeIII.degree_admissible(m, n) {
        return Err(Family::TypeIII.not_admissible(m, n));
    }
    if n == 0 {
        return Ok(XPoly::one());
    }
    let (m, n) = (m as i64, n as i64);
    let t1 = &(&XPoly::x() * &laguerre(n - m - 2, AlphaParam::alpha(2)))
        * &laguerre_reflected(m, AlphaParam::neg_alpha(-1));
    let t2 = (&laguerre(n - m - 1, AlphaParam::alpha(1))
        * &laguerre_reflected(m + 1, AlphaParam::neg_alpha(-2)))
        .scale_rational(&rat_int(m + 1));
    Ok(&t1 + &t2)
}

/// Alternative Type III representation, `k = n - m`:
/// `(k+a) L_{k-2}^{a+1} L_m^{-a-1}(-x) + (m+1) L_{k-1}^{a+1} L_{m+1}^{-a-1}(-x)
///  - (m+k) L_{k-1}^{a+1} L_m^{-a-1}(-x)`.
pub fn xlag3_alt(m: u32, n: u32) -> Result<XPoly> {
    if m < 1 || n < m + 1 {
        return Err(Family::TypeIII.not_admissible(m, n));
    }
    let (m, n) = (m as i64, n as i64);
    let k = n - m;
    let lm = laguerre_reflected(m, AlphaParam::neg_alpha(-1));
    let lm1 = laguerre_reflected(m + 1, AlphaParam::neg_alpha(-1));
    let lk1 = laguerre(k - 1, AlphaParam::alpha(1));
    let t1 = (&laguerre(k - 2, AlphaParam::alpha(1)) * &lm).scale(&AlphaPoly::linear(1, k));
    let t2 = (&lk1 * &lm1).scale_rational(&rat_int(m + 1));
    let t3 = (&lk1 * &lm).scale_rational(&rat_int(m + k));
    Ok(&(&t1 + &t2) - &t3)
}

/// Integral Type III representation, `k = n - m`:
/// `(m+k) int_0^x L_{k-1}^{a+1}(t) L_m^{-a-1}(-t) dt
///  + (m+1) binom(k+a, k-1) binom(m-a-1, m+1)`.
pub fn xlag3_integral(m: u32, n: u32) -> Result<XPoly> {
    if m < 1 || n < m + 1 {
        return Err(Family::TypeIII.not_admissible(m, n));
    }
    let (mi, ni) = (m as i64, n as i64);
    let k = ni - mi;
    let integrand =
        &laguerre(k - 1, AlphaParam::alpha(1)) * &laguerre_reflected(mi, AlphaParam::neg_alpha(-1));
    let integral = integrand.integrate().scale_rational(&rat_int(mi + k));
    let b1 = gen_binom(&AlphaPoly::linear(1, k), (k - 1) as u32);
    let b2 = gen_binom(&AlphaPoly::linear(-1, mi - 1), m + 1);
    let constant = (&b1 * &b2).scale(&rat_int(mi + 1));
    Ok(&integral + &XPoly::constant(constant))
}

/// Constructor dispatch by family.
pub fn xlag(family: Family, m: u32, n: u32) -> Result<XPoly> {
    match family {
        Family::TypeI => xlag1(m, n),
        Family::TypeII => xlag2(m, n),
        Family::TypeIII => xlag3(m, n),
    }
}

/// Which operator of the ladder pair.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Variant {
    A,
    B,
}

/// A first-order expression `y -> (c1 y' + c0 y) / den`. The A-variants have
/// `den = 1` and map polynomials to polynomials; the B-variants divide by a
/// Laguerre factor.
#[derive(Clone, Debug)]
pub struct FirstOrderOp {
    pub family: Family,
    pub variant: Variant,
    pub m: u32,
    /// The operator is constructed at parameter `alpha + param_shift`.
    pub param_shift: i64,
    c1: XPoly,
    c0: XPoly,
    den: XPoly,
}

impl FirstOrderOp {
    /// Build `A` or `B` for the family at parameter `alpha + shift`.
    pub fn new(family: Family, variant: Variant, m: u32, shift: i64) -> Self {
        let mi = m as i64;
        let (c1, c0, den) = match (family, variant) {
            // A^{I,a}[y]  = L_m^a(-x) y' - L_m^{a+1}(-x) y
            (Family::TypeI, Variant::A) => (
                laguerre_reflected(mi, AlphaParam::alpha(shift)),
                -&laguerre_reflected(mi, AlphaParam::alpha(shift + 1)),
                XPoly::one(),
            ),
            // B^{I,a}[y]  = (x y' + (1+a) y) / L_m^a(-x)
            (Family::TypeI, Variant::B) => (
                XPoly::x(),
                XPoly::constant(AlphaPoly::linear(1, 1 + shift)),
                laguerre_reflected(mi, AlphaParam::alpha(shift)),
            ),
            // A^{II,a}[y] = x L_m^{-a}(x) y' + (a-m) L_m^{-a-1}(x) y
            (Family::TypeII, Variant::A) => (
                &XPoly::x() * &laguerre(mi, AlphaParam::neg_alpha(-shift)),
                laguerre(mi, AlphaParam::neg_alpha(-shift - 1))
                    .scale(&AlphaPoly::linear(1, shift - mi)),
                XPoly::one(),
            ),
            // B^{II,a}[y] = (y' - y) / L_m^{-a}(x)
            (Family::TypeII, Variant::B) => (
                XPoly::one(),
                XPoly::from_int(-1),
                laguerre(mi, AlphaParam::neg_alpha(-shift)),
            ),
            // A^{III,a}[y] = x L_m^{-a}(-x) y' - (m+1) L_{m+1}^{-a-1}(-x) y
            (Family::TypeIII, Variant::A) => (
                &XPoly::x() * &laguerre_reflected(mi, AlphaParam::neg_alpha(-shift)),
                laguerre_reflected(mi + 1, AlphaParam::neg_alpha(-shift - 1))
                    .scale_rational(&rat_int(-(mi + 1))),
                XPoly::one(),
            ),
            // B^{III,a}[y] = y' / L_m^{-a}(-x)
            (Family::TypeIII, Variant::B) => (
                XPoly::one(),
                XPoly::zero(),
                laguerre_reflected(mi, AlphaParam::neg_alpha(-shift)),
            ),
        };
        FirstOrderOp {
            family,
            variant,
            m,
            param_shift: shift,
            c1,
            c0,
            den,
        }
    }

    /// Apply to a polynomial; the result is rational in general.
    pub fn apply(&self, y: &XPoly) -> RatFunc {
        let num = &(&self.c1 * &y.diff()) + &(&self.c0 * y);
        RatFunc::new(num, self.den.clone()).expect("operator denominator is nonzero")
    }

    /// Apply to a rational function (used for operator compositions).
    pub fn apply_ratfunc(&self, y: &RatFunc) -> RatFunc {
        let c1 = RatFunc::from_poly(self.c1.clone());
        let c0 = RatFunc::from_poly(self.c0.clone());
        let den = RatFunc::from_poly(self.den.clone());
        &(&(&c1 * &y.diff()) + &(&c0 * y)) / &den
    }

    /// Apply expecting a polynomial result; `NotDivisible` signals an
    /// identity violation for inputs the lemmas cover.
    pub fn apply_poly(&self, y: &XPoly) -> Result<XPoly> {
        let num = &(&self.c1 * &y.diff()) + &(&self.c0 * y);
        num.divide_exact(&self.den)
    }
}

/// Lemma 2: `d/dx xlag3(m, m+k) = (m+k) L_{k-1}^{a+1}(x) L_m^{-a-1}(-x)`.
pub fn lemma2_check(m: u32, k: u32) -> bool {
    let p = match xlag3(m, m + k) {
        Ok(p) => p,
        Err(_) => return false,
    };
    let rhs = (&laguerre(k as i64 - 1, AlphaParam::alpha(1))
        * &laguerre_reflected(m as i64, AlphaParam::neg_alpha(-1)))
        .scale_rational(&rat_int((m + k) as i64));
    p.diff() == rhs
}

/// Lemma 1: `d/dx xlag3(m, m+k) = L_m^{-a-1}(-x) *
/// (-x L_{k-3}^{a+3} + (a+2-x) L_{k-2}^{a+2} + (m+1) L_{k-1}^{a+1})`.
pub fn lemma1_check(m: u32, k: u32) -> bool {
    let p = match xlag3(m, m + k) {
        Ok(p) => p,
        Err(_) => return false,
    };
    let (mi, ki) = (m as i64, k as i64);
    let bracket = {
        let t1 = -&(&XPoly::x() * &laguerre(ki - 3, AlphaParam::alpha(3)));
        let lin = &XPoly::constant(AlphaPoly::linear(1, 2)) - &XPoly::x();
        let t2 = &lin * &laguerre(ki - 2, AlphaParam::alpha(2));
        let t3 = laguerre(ki - 1, AlphaParam::alpha(1)).scale_rational(&rat_int(mi + 1));
        &(&t1 + &t2) + &t3
    };
    p.diff() == &laguerre_reflected(mi, AlphaParam::neg_alpha(-1)) * &bracket
}

/// `xlag3(m, m+k)(0) < 0` for `-1 < a < 0`.
pub fn negativity_at_zero_check(m: u32, k: u32, a: f64) -> Result<bool> {
    if !(-1.0 < a && a < 0.0) {
        return Err(Error::Domain(format!(
            "negativity check requires -1 < a < 0, got {a}"
        )));
    }
    let p = xlag3(m, m + k)?;
    Ok(p.coeff(0).eval_f64(a) < 0.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn degree_sets() {
        assert!(Family::TypeI.degree_admissible(2, 2));
        assert!(!Family::TypeI.degree_admissible(2, 1));
        assert!(Family::TypeIII.degree_admissible(2, 0));
        assert!(!Family::TypeIII.degree_admissible(2, 2));
        assert!(Family::TypeIII.degree_admissible(2, 3));
        assert_eq!(Family::TypeIII.degrees(2, 4), vec![0, 3, 4, 5]);
        assert_eq!(Family::TypeI.degrees(2, 3), vec![2, 3, 4]);
    }

    #[test]
    fn xlag1_lowest_degree_is_reflected_laguerre() {
        // L_{m,m}^{I,a} = L_m^a(-x); for m=1 that is 1 + a + x.
        let p = xlag1(1, 1).unwrap();
        assert_eq!(p, laguerre_reflected(1, AlphaParam::alpha(0)));
        assert_eq!(p.coeff(0), AlphaPoly::linear(1, 1));
        assert_eq!(p.coeff(1), AlphaPoly::one());
        assert!(matches!(
            xlag1(2, 1),
            Err(Error::DegreeNotAdmissible { .. })
        ));
    }

    #[test]
    fn xlag1_matches_ladder_definition() {
        // xlag1(m, n) = -A^{I,a-1}[L_{n-m}^{a-1}], and the degree is n
        for m in 1..=3u32 {
            for n in m..=m + 4 {
                let a = FirstOrderOp::new(Family::TypeI, Variant::A, m, -1);
                let image = a
                    .apply_poly(&laguerre((n - m) as i64, AlphaParam::alpha(-1)))
                    .unwrap();
                let p = xlag1(m, n).unwrap();
                assert_eq!(p, -&image, "m={m} n={n}");
                assert_eq!(p.degree(), Some(n as usize), "degree m={m} n={n}");
            }
        }
    }

    #[test]
    fn xlag2_m0_is_classical() {
        // xlag2(0, n) = -(n + a + 1) L_n^a for n <= 6.
        for n in 0..=6u32 {
            let p = xlag2(0, n).unwrap();
            let expect = laguerre(n as i64, AlphaParam::alpha(0))
                .scale(&AlphaPoly::linear(-1, -(n as i64 + 1)));
            assert_eq!(p, expect, "n={n}");
        }
    }

    #[test]
    fn xlag2_degree_and_admissibility() {
        for m in 0..=3u32 {
            for n in m..=m + 5 {
                assert_eq!(xlag2(m, n).unwrap().degree(), Some(n as usize));
            }
        }
        assert!(xlag2(2, 1).is_err());
    }

    #[test]
    fn xlag3_appendix_m1_n2() {
        // x^2 - 2 a x + a (a+1)
        let p = xlag3(1, 2).unwrap();
        assert_eq!(p.coeff(2), AlphaPoly::one());
        assert_eq!(p.coeff(1), AlphaPoly::linear(-2, 0));
        assert_eq!(p.coeff(0), &AlphaPoly::gen() * &AlphaPoly::linear(1, 1));
    }

    #[test]
    fn xlag3_appendix_m2_n3() {
        // x^3/2 - 3(a-1)/2 x^2 + 3a(a-1)/2 x - a(a-1)(a+1)/2
        let p = xlag3(2, 3).unwrap();
        assert_eq!(p.coeff(3), AlphaPoly::constant(rat(1, 2)));
        assert_eq!(p.coeff(2), AlphaPoly::linear(-3, 3).scale(&rat(1, 2)));
        let a = AlphaPoly::gen();
        assert_eq!(
            p.coeff(1),
            (&a * &AlphaPoly::linear(1, -1)).scale(&rat(3, 2))
        );
        assert_eq!(
            p.coeff(0),
            (&(&a * &AlphaPoly::linear(1, -1)) * &AlphaPoly::linear(1, 1)).scale(&rat(-1, 2))
        );
    }

    #[test]
    fn xlag3_edges() {
        assert_eq!(xlag3(1, 0).unwrap(), XPoly::one());
        assert!(xlag3(2, 1).is_err());
        assert!(xlag3(2, 2).is_err());
        for m in 1..=3u32 {
            for k in 1..=5u32 {
                assert_eq!(
                    xlag3(m, m + k).unwrap().degree(),
                    Some((m + k) as usize),
                    "degree m={m} k={k}"
                );
            }
        }
    }

    #[test]
    fn representations_agree() {
        for m in 1..=3u32 {
            for k in 1..=6u32 {
                let direct = xlag3(m, m + k).unwrap();
                assert_eq!(direct, xlag3_alt(m, m + k).unwrap(), "alt m={m} k={k}");
                assert_eq!(
                    direct,
                    xlag3_integral(m, m + k).unwrap(),
                    "integral m={m} k={k}"
                );
            }
        }
    }

    #[test]
    fn xlag3_matches_ladder_definition() {
        // xlag3(m, n) = -A^{III,a+1}[L_{n-m-1}^{a+1}]
        for m in 1..=3u32 {
            for n in (m + 1)..=(m + 5) {
                let a = FirstOrderOp::new(Family::TypeIII, Variant::A, m, 1);
                let image = a
                    .apply_poly(&laguerre((n - m - 1) as i64, AlphaParam::alpha(1)))
                    .unwrap();
                assert_eq!(xlag3(m, n).unwrap(), -&image, "m={m} n={n}");
            }
        }
    }

    #[test]
    fn b_operator_ladder_steps() {
        // B^{III,a+1}[xlag3(m, m+k)] = (m+k) L_{k-1}^{a+1}
        for (m, k) in [(1u32, 1u32), (1, 3), (2, 2), (3, 4)] {
            let b = FirstOrderOp::new(Family::TypeIII, Variant::B, m, 1);
            let image = b.apply_poly(&xlag3(m, m + k).unwrap()).unwrap();
            let expect = laguerre(k as i64 - 1, AlphaParam::alpha(1))
                .scale_rational(&rat_int((m + k) as i64));
            assert_eq!(image, expect, "m={m} k={k}");
        }
        // B^{III,a}[1] = 0
        let b = FirstOrderOp::new(Family::TypeIII, Variant::B, 1, 0);
        assert!(b.apply_poly(&XPoly::one()).unwrap().is_zero());
    }

    #[test]
    fn lemma_checks() {
        for m in 1..=3u32 {
            for k in 1..=6u32 {
                assert!(lemma2_check(m, k), "lemma2 m={m} k={k}");
                assert!(lemma1_check(m, k), "lemma1 m={m} k={k}");
            }
        }
    }

    #[test]
    fn negativity_at_zero() {
        assert!(negativity_at_zero_check(1, 1, -0.5).unwrap());
        assert!(negativity_at_zero_check(2, 1, -0.5).unwrap());
        assert!(negativity_at_zero_check(1, 3, -0.25).unwrap());
        assert!(negativity_at_zero_check(1, 1, 0.5).is_err());
        // the m=1, k=1 constant at a = -1/2 is exactly -1/4
        let p = xlag3(1, 2).unwrap();
        assert_eq!(p.coeff(0).eval_rational(&rat(-1, 2)), rat(-1, 4));
    }
}
