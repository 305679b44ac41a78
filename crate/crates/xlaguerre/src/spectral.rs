//! The spectral theorems as executable classification rules, with numeric
//! corroboration: endpoint classes, deficiency indices, boundary-condition
//! functionals, sesquilinear forms, operator spectra, the square-integrability
//! probes for the second solutions, and the completeness (projection
//! residual) probe.
//!
//! The rules encode the theorems; the probes corroborate but never decide.

use crate::alpha::AlphaPoly;
use crate::error::{Error, Result};
use crate::exceptional::{xlag, Family};
use crate::numerics::gram::{inner_product, norm_closed_form};
use crate::numerics::quad::{adaptive_gk, Tolerance};
use crate::numerics::roots::laguerre_value;
use crate::numerics::{substitute_alpha, RealPoly};
use crate::ode::WeightSpec;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum EndpointClass {
    LimitPoint,
    LimitCircle,
}

impl EndpointClass {
    pub fn label(self) -> &'static str {
        match self {
            EndpointClass::LimitPoint => "limit-point",
            EndpointClass::LimitCircle => "limit-circle",
        }
    }
}

/// Deficiency index pair; here always `(0,0)` or `(1,1)`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct DeficiencyIndex(pub u8, pub u8);

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum BoundaryConditionKind {
    /// No boundary condition (deficiency (0,0)).
    None,
    /// `lim_{x->0+} x^{a+1} f'(x) = 0` (the T operators).
    XPowAlphaPlusOneDeriv,
    /// `lim_{x->0+} (x f'(x) + a f(x)) = 0` (the S operator).
    XDerivPlusAlphaF,
}

impl BoundaryConditionKind {
    pub fn text(self) -> &'static str {
        match self {
            BoundaryConditionKind::None => "none",
            BoundaryConditionKind::XPowAlphaPlusOneDeriv => "lim x^(a+1) f'(x) = 0 as x -> 0+",
            BoundaryConditionKind::XDerivPlusAlphaF => "lim (x f'(x) + a f(x)) = 0 as x -> 0+",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Classification {
    pub at_zero: EndpointClass,
    pub at_infinity: EndpointClass,
    pub deficiency: DeficiencyIndex,
}

/// Endpoint classification of the family expression as a pure rule:
///
/// * Type I: limit-circle at 0 iff `0 < a < 1`;
/// * Type II: limit-circle at 0 iff (`m = 0` and `-1 < a < 1`) or
///   (`m = 1` and `0 < a < 1`); limit-point for `m >= 2`;
/// * Type III: always limit-circle at 0 on `-1 < a < 0`.
///
/// Infinity is limit-point in every case, and the deficiency index is
/// `(1,1)` exactly when 0 is limit-circle. `a = 0` is refused (degenerate
/// indicial roots).
pub fn classify(family: Family, m: u32, a: f64) -> Result<Classification> {
    family.check_alpha(m, a)?;
    if a == 0.0 {
        return Err(Error::Domain(
            "alpha = 0 has a degenerate indicial equation; classification refused".into(),
        ));
    }
    let lc_at_zero = match family {
        Family::TypeI => 0.0 < a && a < 1.0,
        Family::TypeII => match m {
            0 => -1.0 < a && a < 1.0,
            1 => 0.0 < a && a < 1.0,
            _ => false,
        },
        Family::TypeIII => true,
    };
    let at_zero = if lc_at_zero {
        EndpointClass::LimitCircle
    } else {
        EndpointClass::LimitPoint
    };
    let deficiency = if lc_at_zero {
        DeficiencyIndex(1, 1)
    } else {
        DeficiencyIndex(0, 0)
    };
    Ok(Classification {
        at_zero,
        at_infinity: EndpointClass::LimitPoint,
        deficiency,
    })
}

/// Frobenius indicial roots at `x = 0`, the same `r (r + a) = 0` for all
/// three families.
#[derive(Clone, Debug, PartialEq)]
pub struct IndicialRoots {
    pub r1: AlphaPoly,
    pub r2: AlphaPoly,
}

pub fn frobenius_indicial() -> IndicialRoots {
    IndicialRoots {
        r1: AlphaPoly::zero(),
        r2: AlphaPoly::linear(-1, 0),
    }
}

impl IndicialRoots {
    /// Numeric root pair; `None` marks the degenerate double root `a = 0`.
    pub fn numeric(&self, a: f64) -> Option<(f64, f64)> {
        if a == 0.0 {
            None
        } else {
            Some((self.r1.eval_f64(a), self.r2.eval_f64(a)))
        }
    }
}

/// Square-integrability of `x^s` near 0 against the family weight.
#[derive(Clone, Copy, Debug)]
pub struct L2Probe {
    /// Local exponent `2s + a` of `x^{2s} W(x)` at 0.
    pub exponent: f64,
    /// Integrable iff `exponent > -1`.
    pub integrable: bool,
    /// Numeric corroboration: the cutoff integrals stabilized (integrable)
    /// or kept growing (divergent) in agreement with the exponent.
    pub numeric_agrees: bool,
}

pub fn l2_membership_probe(family: Family, m: u32, a: f64, s: f64) -> Result<L2Probe> {
    family.check_alpha(m, a)?;
    let exponent = 2.0 * s + a;
    let integrable = exponent > -1.0;
    let weight = WeightSpec::new(family, m);
    let x_star = 1.0;
    let integrand = |x: f64| x.powf(2.0 * s) * weight.eval_unchecked(a, x);
    let mut values = Vec::new();
    for cut in [1e-3, 1e-6, 1e-9] {
        let r = adaptive_gk(&integrand, cut, x_star, Tolerance::abs_rel(1e-12, 1e-10));
        values.push(r.value);
    }
    // Successive cutoff increments scale like cut^{exponent+1}: they shrink
    // for integrable tails and grow for divergent ones. The ratio test reads
    // the local exponent off the data without needing convergence at these
    // cutoffs (exponents near -1 converge far too slowly for that).
    let inc1 = values[1] - values[0];
    let inc2 = values[2] - values[1];
    let numeric_says_integrable =
        inc2.abs() < inc1.abs() * (1.0 - 1e-3) || inc2.abs() < 1e-9 * values[2].abs();
    let numeric_agrees = numeric_says_integrable == integrable;
    Ok(L2Probe {
        exponent,
        integrable,
        numeric_agrees,
    })
}

/// Functions the boundary machinery evaluates near 0.
#[derive(Clone, Debug)]
pub enum BoundaryFn {
    One,
    Poly(RealPoly),
    /// `x^{-a}`.
    PowNegAlpha,
    /// `x^{-a} q(x)`.
    PowNegAlphaTimes(RealPoly),
}

impl BoundaryFn {
    pub fn value(&self, a: f64, x: f64) -> f64 {
        match self {
            BoundaryFn::One => 1.0,
            BoundaryFn::Poly(p) => p.eval(x),
            BoundaryFn::PowNegAlpha => x.powf(-a),
            BoundaryFn::PowNegAlphaTimes(q) => x.powf(-a) * q.eval(x),
        }
    }

    pub fn derivative(&self, a: f64, x: f64) -> f64 {
        match self {
            BoundaryFn::One => 0.0,
            BoundaryFn::Poly(p) => p.diff().eval(x),
            BoundaryFn::PowNegAlpha => -a * x.powf(-a - 1.0),
            BoundaryFn::PowNegAlphaTimes(q) => x.powf(-a) * (q.diff().eval(x) - a * q.eval(x) / x),
        }
    }

    /// `max(|f|, |f'|)` sampled on `[0.1, 1]`, the scale used by the
    /// boundary-functional threshold.
    pub fn scale(&self, a: f64) -> f64 {
        let mut s = 0.0f64;
        let mut x = 0.1;
        while x <= 1.0 {
            s = s
                .max(self.value(a, x).abs())
                .max(self.derivative(a, x).abs());
            x += 0.1;
        }
        s.max(1e-30)
    }
}

/// The boundary bilinear concomitant
/// `[f,g](x) = x^{a+1} e^{-x} / den(x)^2 (f g' - f' g)`.
pub fn sesquilinear_form(
    family: Family,
    m: u32,
    a: f64,
    f: &BoundaryFn,
    g: &BoundaryFn,
    x: f64,
) -> f64 {
    let weight = WeightSpec::new(family, m);
    let den = weight.den_value(a, x);
    let wronskian = f.value(a, x) * g.derivative(a, x) - f.derivative(a, x) * g.value(a, x);
    x.powf(a + 1.0) * (-x).exp() / (den * den) * wronskian
}

#[derive(Clone, Debug)]
pub struct FunctionalReport {
    pub values: Vec<f64>,
    pub limit_estimate: f64,
    pub pass: bool,
}

/// Evaluate a boundary functional on the geometric grid `1e-2 .. 1e-10`,
/// extrapolate the limit (Aitken on the last three points) and compare with
/// `1e-8 * scale(f)`.
pub fn boundary_functional(
    kind: BoundaryConditionKind,
    a: f64,
    f: &BoundaryFn,
) -> Result<FunctionalReport> {
    let functional = |x: f64| -> f64 {
        match kind {
            BoundaryConditionKind::None => 0.0,
            BoundaryConditionKind::XPowAlphaPlusOneDeriv => x.powf(a + 1.0) * f.derivative(a, x),
            BoundaryConditionKind::XDerivPlusAlphaF => x * f.derivative(a, x) + a * f.value(a, x),
        }
    };
    let values: Vec<f64> = (2..=10).map(|k| functional(10f64.powi(-k))).collect();
    let n = values.len();
    let (v0, v1, v2) = (values[n - 3], values[n - 2], values[n - 1]);
    let d1 = v1 - v0;
    let d2 = v2 - v1;
    let limit_estimate = if (d2 - d1).abs() > 1e-300 {
        let aitken = v2 - d2 * d2 / (d2 - d1);
        if aitken.is_finite() {
            aitken
        } else {
            v2
        }
    } else {
        v2
    };
    if !limit_estimate.is_finite() {
        return Err(Error::Convergence(
            "boundary functional did not stabilize".into(),
        ));
    }
    let pass = limit_estimate.abs() <= 1e-8 * f.scale(a);
    Ok(FunctionalReport {
        values,
        limit_estimate,
        pass,
    })
}

/// The four self-adjoint operators whose spectra the theorems give in
/// closed form.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum OperatorTag {
    TI,
    TII,
    TIII,
    SI,
}

impl OperatorTag {
    pub fn label(self) -> &'static str {
        match self {
            OperatorTag::TI => "T_I",
            OperatorTag::TII => "T_II",
            OperatorTag::TIII => "T_III",
            OperatorTag::SI => "S_I",
        }
    }

    pub fn family(self) -> Family {
        match self {
            OperatorTag::TI | OperatorTag::SI => Family::TypeI,
            OperatorTag::TII => Family::TypeII,
            OperatorTag::TIII => Family::TypeIII,
        }
    }
}

#[derive(Clone, Debug)]
pub struct SpectrumEntry {
    /// Degree of the eigenpolynomial (for S_I, of the Type III factor).
    pub degree: u32,
    pub eigenvalue: f64,
}

#[derive(Clone, Debug)]
pub struct SpectrumSpec {
    pub operator: OperatorTag,
    pub m: u32,
    pub alpha: f64,
    pub boundary_condition: BoundaryConditionKind,
    pub entries: Vec<SpectrumEntry>,
    pub description: String,
}

/// Lowest `cutoff` spectrum entries with their eigenfunction degree labels:
/// `T_I`, `T_II`: `n - m` over `n = m, m+1, ...` (the non-negative
/// integers); `T_III`: `n - m + a` over `n in {0, m+1, ...}`;
/// `S_I`: `n - m - a` over the same degree set.
pub fn spectrum(op: OperatorTag, m: u32, a: f64, cutoff: usize) -> Result<SpectrumSpec> {
    if cutoff == 0 {
        return Err(Error::Domain("cutoff must be at least 1".into()));
    }
    let (degrees, eigen): (Vec<u32>, Box<dyn Fn(u32) -> f64>) = match op {
        OperatorTag::TI => {
            Family::TypeI.check_alpha(m, a)?;
            (
                Family::TypeI.degrees(m, cutoff),
                Box::new(move |n| (n - m) as f64),
            )
        }
        OperatorTag::TII => {
            Family::TypeII.check_alpha(m, a)?;
            (
                Family::TypeII.degrees(m, cutoff),
                Box::new(move |n| (n - m) as f64),
            )
        }
        OperatorTag::TIII => {
            Family::TypeIII.check_alpha(m, a)?;
            (
                Family::TypeIII.degrees(m, cutoff),
                Box::new(move |n| n as f64 - m as f64 + a),
            )
        }
        OperatorTag::SI => {
            if !(0.0 < a && a < 1.0) {
                return Err(Error::Domain(format!(
                    "S_I is defined for 0 < a < 1, got {a}"
                )));
            }
            (
                Family::TypeIII.degrees(m, cutoff),
                Box::new(move |n| n as f64 - m as f64 - a),
            )
        }
    };
    let entries: Vec<SpectrumEntry> = degrees
        .iter()
        .map(|&n| SpectrumEntry {
            degree: n,
            eigenvalue: eigen(n),
        })
        .collect();
    let boundary_condition = match op {
        OperatorTag::SI => BoundaryConditionKind::XDerivPlusAlphaF,
        _ => {
            let c = classify(op.family(), m, a)?;
            if c.deficiency == DeficiencyIndex(1, 1) {
                BoundaryConditionKind::XPowAlphaPlusOneDeriv
            } else {
                BoundaryConditionKind::None
            }
        }
    };
    let description = match op {
        OperatorTag::TI | OperatorTag::TII => "n - m over the admissible degrees".to_string(),
        OperatorTag::TIII => "n - m + a over n in {0, m+1, m+2, ...}".to_string(),
        OperatorTag::SI => "n - m - a over n in {0, m+1, m+2, ...}".to_string(),
    };
    Ok(SpectrumSpec {
        operator: op,
        m,
        alpha: a,
        boundary_condition,
        entries,
        description,
    })
}

#[derive(Clone, Debug)]
pub struct GrowthReport {
    pub xs: Vec<f64>,
    /// `|y_2(x)|^2 W(x)` at the sample points.
    pub values: Vec<f64>,
    pub pass: bool,
}

/// Reduction-of-order second solution at the family's zero eigenvalue,
/// evaluated as `|y_2(x)|^2 W(x)` across the samples. The quantity may dip
/// at the low end for steep weights, so the verdict looks at the tail: from
/// the minimum onward the sequence must increase strictly and gain at least
/// `e^{(x_last - x_min)/2}` (the true growth is `e^x` times a power of `x`,
/// so half the exponential rate leaves room for the power-law prefactor at
/// every admissible `alpha`). This corroborates that `y_2` is not
/// square-integrable at infinity.
pub fn second_solution_growth_probe(
    family: Family,
    m: u32,
    a: f64,
    xs: &[f64],
) -> Result<GrowthReport> {
    family.check_alpha(m, a)?;
    if xs.len() < 2 || xs.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::Domain(
            "xs must be at least two increasing points".into(),
        ));
    }
    let weight = WeightSpec::new(family, m);
    // inner integrand of the reduction-of-order formula
    let integrand: Box<dyn Fn(f64) -> f64> = match family {
        Family::TypeI => Box::new(move |t: f64| {
            let num = laguerre_value(m, a - 1.0, -t);
            let den = laguerre_value(m, a, -t);
            t.powf(-a - 1.0) * t.exp() * (num / den).powi(2)
        }),
        Family::TypeII => Box::new(move |t: f64| {
            let num = laguerre_value(m, -a - 1.0, t);
            let den = laguerre_value(m, -a - 2.0, t);
            t.powf(-a - 1.0) * t.exp() * (num / den).powi(2)
        }),
        Family::TypeIII => Box::new(move |t: f64| {
            let num = laguerre_value(m, -a - 1.0, t);
            t.powf(-a - 1.0) * t.exp() * num * num
        }),
    };
    // the polynomial factor multiplying the integral
    let factor: Box<dyn Fn(f64) -> f64> = match family {
        Family::TypeI => Box::new(move |x: f64| laguerre_value(m, a, -x)),
        Family::TypeII => Box::new(move |x: f64| laguerre_value(m, -a - 2.0, x)),
        Family::TypeIII => Box::new(|_| 1.0),
    };
    let mut values = Vec::with_capacity(xs.len());
    let mut lower = 1.0f64;
    let mut integral = 0.0f64;
    for &x in xs {
        if x <= 1.0 {
            return Err(Error::Domain("growth probe samples must exceed 1".into()));
        }
        let piece = adaptive_gk(&integrand, lower, x, Tolerance::abs_rel(1e-8, 1e-8));
        integral += piece.value;
        lower = x;
        let y2 = factor(x) * integral;
        values.push(y2 * y2 * weight.eval_unchecked(a, x));
    }
    let idx_min = values
        .iter()
        .enumerate()
        .min_by(|a, b| a.1.total_cmp(b.1))
        .map(|(i, _)| i)
        .unwrap();
    let tail_increasing =
        idx_min + 1 < values.len() && values[idx_min..].windows(2).all(|v| v[1] > v[0]);
    let span_gain = ((xs[xs.len() - 1] - xs[idx_min]) / 2.0).exp().min(1e290);
    let pass = tail_increasing && values[values.len() - 1] > values[idx_min] * span_gain;
    Ok(GrowthReport {
        xs: xs.to_vec(),
        values,
        pass,
    })
}

/// Complementary probe: `|y_1|^2 W` stays bounded (indeed integrable), with
/// `y_1` the polynomial (or constant) solution at the same eigenvalue.
pub fn first_solution_bounded_probe(family: Family, m: u32, a: f64, xs: &[f64]) -> Result<bool> {
    family.check_alpha(m, a)?;
    let weight = WeightSpec::new(family, m);
    let y1: Box<dyn Fn(f64) -> f64> = match family {
        Family::TypeI => Box::new(move |x: f64| laguerre_value(m, a, -x)),
        Family::TypeII => Box::new(move |x: f64| laguerre_value(m, -a - 2.0, x)),
        Family::TypeIII => Box::new(|_| 1.0),
    };
    let values: Vec<f64> = xs
        .iter()
        .map(|&x| {
            let v = y1(x);
            v * v * weight.eval_unchecked(a, x)
        })
        .collect();
    Ok(values.windows(2).all(|w| w[1] < w[0]))
}

/// Projection residuals of `x^j` onto the first `1..=n_terms` Type III
/// eigenfunctions in the weighted space, starting from the bare norm at
/// zero terms. By orthogonality each added coefficient can only lower the
/// residual; completeness shows as a decay toward zero.
pub fn completeness_residuals(m: u32, a: f64, j: u32, n_terms: usize) -> Result<Vec<f64>> {
    Family::TypeIII.check_alpha(m, a)?;
    let degrees = Family::TypeIII.degrees(m, n_terms);
    let xj = {
        let mut coeffs = vec![0.0; j as usize + 1];
        coeffs[j as usize] = 1.0;
        RealPoly::new(coeffs)
    };
    let tol = Tolerance::abs_rel(1e-12, 1e-11);
    let mut residual = inner_product(Family::TypeIII, m, a, &xj, &xj, tol)?.value;
    let mut out = vec![residual];
    for &n in &degrees {
        let p = substitute_alpha(&xlag(Family::TypeIII, m, n)?, a);
        let norm = norm_closed_form(Family::TypeIII, m, n, a)?;
        let cell_tol = Tolerance::abs_rel(1e-12 * norm.max(1.0), 1e-11);
        let coeff = inner_product(Family::TypeIII, m, a, &xj, &p, cell_tol)?.value;
        residual -= coeff * coeff / norm;
        out.push(residual.max(0.0));
    }
    Ok(out)
}

/// Monotone-decay verdict for a residual sequence: strictly decreasing
/// while above the noise floor, never increasing beyond slack below it.
pub fn residuals_decrease(residuals: &[f64]) -> bool {
    if residuals.is_empty() {
        return false;
    }
    let floor = 1e-10 * residuals[0].max(1e-30);
    residuals.windows(2).all(|w| {
        if w[0] > floor {
            w[1] < w[0] * (1.0 + 1e-12) && (w[1] < w[0] || (w[0] - w[1]).abs() <= 1e-12 * w[0])
        } else {
            w[1] <= w[0] + floor
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classification_rules() {
        // (TypeI, m=2, a=0.5) -> (LC, LP, (1,1))
        let c = classify(Family::TypeI, 2, 0.5).unwrap();
        assert_eq!(c.at_zero, EndpointClass::LimitCircle);
        assert_eq!(c.at_infinity, EndpointClass::LimitPoint);
        assert_eq!(c.deficiency, DeficiencyIndex(1, 1));
        // (TypeII, m=2, a=1.5) -> (LP, LP, (0,0))
        let c = classify(Family::TypeII, 2, 1.5).unwrap();
        assert_eq!(c.at_zero, EndpointClass::LimitPoint);
        assert_eq!(c.deficiency, DeficiencyIndex(0, 0));
        // (TypeIII, m=1, a=-0.5) -> (LC, LP, (1,1))
        let c = classify(Family::TypeIII, 1, -0.5).unwrap();
        assert_eq!(c.at_zero, EndpointClass::LimitCircle);
        assert_eq!(c.deficiency, DeficiencyIndex(1, 1));
        // boundary alpha = 1 is limit-point for Type I
        let c = classify(Family::TypeI, 1, 1.0).unwrap();
        assert_eq!(c.at_zero, EndpointClass::LimitPoint);
        // refusal at alpha = 0 (Type II, m=0 is otherwise admissible)
        assert!(classify(Family::TypeII, 0, 0.0).is_err());
    }

    #[test]
    fn indicial_roots() {
        let r = frobenius_indicial();
        assert!(r.r1.is_zero());
        assert_eq!(r.r2, AlphaPoly::linear(-1, 0));
        assert_eq!(r.numeric(0.5), Some((0.0, -0.5)));
        assert_eq!(r.numeric(0.0), None);
    }

    #[test]
    fn l2_probe_matches_exponent_arithmetic() {
        // (TypeI, m=1, a=0.5, s=-0.5): exponent -0.5 > -1 -> integrable
        let p = l2_membership_probe(Family::TypeI, 1, 0.5, -0.5).unwrap();
        assert!(p.integrable && p.numeric_agrees, "{p:?}");
        // (TypeI, a=1.5, s=-1.5): exponent -1.5 -> divergent
        let p = l2_membership_probe(Family::TypeI, 1, 1.5, -1.5).unwrap();
        assert!(!p.integrable && p.numeric_agrees, "{p:?}");
        // s = 0 always integrable
        let p = l2_membership_probe(Family::TypeI, 1, 2.5, 0.0).unwrap();
        assert!(p.integrable && p.numeric_agrees);
    }

    #[test]
    fn sesquilinear_antisymmetry_and_limit() {
        let f = BoundaryFn::PowNegAlpha;
        let g = BoundaryFn::One;
        let a = 0.5;
        for x in [0.3, 1.0, 2.5] {
            let fg = sesquilinear_form(Family::TypeI, 1, a, &f, &g, x);
            let gf = sesquilinear_form(Family::TypeI, 1, a, &g, &f, x);
            assert!((fg + gf).abs() < 1e-14 * fg.abs().max(1.0));
            let ff = sesquilinear_form(Family::TypeI, 1, a, &f, &f, x);
            assert_eq!(ff, 0.0);
        }
        // [x^{-a}, 1](0) = a e^0 / (L_1^{a-1}(0))^2 = 0.5 / 0.25 = 2
        let near0 = sesquilinear_form(Family::TypeI, 1, a, &f, &g, 1e-9);
        assert!((near0 - 2.0).abs() < 1e-6, "got {near0}");
        // Type III analogue is nonzero as well
        let near0 = sesquilinear_form(Family::TypeIII, 1, -0.5, &f, &g, 1e-9);
        assert!(near0.abs() > 0.1);
    }

    #[test]
    fn boundary_functional_separates() {
        use crate::exceptional::xlag3;
        let a = -0.5;
        // polynomial eigenfunction passes
        let p = substitute_alpha(&xlag3(1, 2).unwrap(), a);
        let rep = boundary_functional(
            BoundaryConditionKind::XPowAlphaPlusOneDeriv,
            a,
            &BoundaryFn::Poly(p),
        )
        .unwrap();
        assert!(rep.pass, "{rep:?}");
        // x^{-a} fails
        let rep = boundary_functional(
            BoundaryConditionKind::XPowAlphaPlusOneDeriv,
            a,
            &BoundaryFn::PowNegAlpha,
        )
        .unwrap();
        assert!(!rep.pass, "{rep:?}");
        // S-operator condition passes on x^{-a} q with q Type III at -a
        let a = 0.5;
        let q = substitute_alpha(&xlag3(1, 2).unwrap().reflect_alpha(), a);
        let rep = boundary_functional(
            BoundaryConditionKind::XDerivPlusAlphaF,
            a,
            &BoundaryFn::PowNegAlphaTimes(q),
        )
        .unwrap();
        assert!(rep.pass, "{rep:?}");
    }

    #[test]
    fn spectra() {
        // (T_III, m=1, a=-1/2, cutoff=4) -> {-1.5, 0.5, 1.5, 2.5}
        let s = spectrum(OperatorTag::TIII, 1, -0.5, 4).unwrap();
        let values: Vec<f64> = s.entries.iter().map(|e| e.eigenvalue).collect();
        assert_eq!(values, vec![-1.5, 0.5, 1.5, 2.5]);
        assert_eq!(s.entries[0].degree, 0);
        assert_eq!(s.entries[1].degree, 2);
        assert_eq!(
            s.boundary_condition,
            BoundaryConditionKind::XPowAlphaPlusOneDeriv
        );
        // (T_I, m=3, a=2, cutoff=3) -> {0, 1, 2} with degrees {3, 4, 5}
        let s = spectrum(OperatorTag::TI, 3, 2.0, 3).unwrap();
        let values: Vec<f64> = s.entries.iter().map(|e| e.eigenvalue).collect();
        assert_eq!(values, vec![0.0, 1.0, 2.0]);
        let degrees: Vec<u32> = s.entries.iter().map(|e| e.degree).collect();
        assert_eq!(degrees, vec![3, 4, 5]);
        assert_eq!(s.boundary_condition, BoundaryConditionKind::None);
        // T_II listing is also the non-negative integers, degrees from m
        let s = spectrum(OperatorTag::TII, 2, 1.5, 5).unwrap();
        for (i, e) in s.entries.iter().enumerate() {
            assert_eq!(e.eigenvalue, i as f64);
            assert_eq!(e.degree, 2 + i as u32);
        }
        // (S_I, m=1, a=0.5, cutoff=3) -> {-1.5, 0.5, 1.5}
        let s = spectrum(OperatorTag::SI, 1, 0.5, 3).unwrap();
        let values: Vec<f64> = s.entries.iter().map(|e| e.eigenvalue).collect();
        assert_eq!(values, vec![-1.5, 0.5, 1.5]);
        assert_eq!(
            s.boundary_condition,
            BoundaryConditionKind::XDerivPlusAlphaF
        );
    }

    #[test]
    fn classify_agrees_with_probe_on_random_samples() {
        // 200 deterministic pseudo-random admissible samples
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut next = move || {
            state = state
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            (state >> 11) as f64 / (1u64 << 53) as f64
        };
        let mut count = 0;
        while count < 200 {
            let (family, m, a) = match (next() * 3.0) as u32 {
                0 => (
                    Family::TypeI,
                    1 + (next() * 3.0) as u32,
                    0.01 + 2.5 * next(),
                ),
                1 => {
                    let m = (next() * 4.0) as u32;
                    (Family::TypeII, m, m as f64 - 1.0 + 0.01 + 2.5 * next())
                }
                _ => (
                    Family::TypeIII,
                    1 + (next() * 3.0) as u32,
                    -0.99 + 0.98 * next(),
                ),
            };
            if a == 0.0 || a == 1.0 {
                continue;
            }
            let c = classify(family, m, a).unwrap();
            let probe = l2_membership_probe(family, m, a, -a).unwrap();
            assert_eq!(
                c.at_zero == EndpointClass::LimitCircle,
                probe.integrable,
                "{family:?} m={m} a={a}"
            );
            count += 1;
        }
    }

    #[test]
    fn growth_probe() {
        let xs = [5.0, 10.0, 20.0, 40.0];
        let rep = second_solution_growth_probe(Family::TypeI, 1, 0.5, &xs).unwrap();
        assert!(rep.pass, "{:?}", rep.values);
        let rep = second_solution_growth_probe(Family::TypeIII, 1, -0.5, &xs).unwrap();
        assert!(rep.pass, "{:?}", rep.values);
        assert!(first_solution_bounded_probe(Family::TypeI, 1, 0.5, &xs).unwrap());
    }

    #[test]
    fn completeness_probe_decays() {
        let r = completeness_residuals(1, -0.5, 2, 8).unwrap();
        assert!(residuals_decrease(&r), "{r:?}");
        // x^0 = p_0 exactly: residual hits zero after one term and stays
        let r = completeness_residuals(1, -0.5, 0, 5).unwrap();
        assert!(r[1] < 1e-10 * r[0].max(1.0), "{r:?}");
        assert!(residuals_decrease(&r), "{r:?}");
    }
}
