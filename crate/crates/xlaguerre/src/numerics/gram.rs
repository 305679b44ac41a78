//! Weighted inner products by quadrature, the closed-form squared norms,
//! and Gram-matrix orthogonality reports.

use super::quad::{integrate_half_line, QuadratureResult, Tolerance};
use super::{substitute_alpha, RealPoly};
use crate::error::{Error, Result};
use crate::exceptional::{xlag, Family};
use crate::gamma::gamma;
use crate::ode::WeightSpec;

/// `int_0^inf f g W dx` for the family weight at numeric `a`.
pub fn inner_product(
    family: Family,
    m: u32,
    a: f64,
    f: &RealPoly,
    g: &RealPoly,
    tol: Tolerance,
) -> Result<QuadratureResult> {
    family.check_alpha(m, a)?;
    let weight = WeightSpec::new(family, m);
    let integrand = move |x: f64| f.eval(x) * g.eval(x) * weight.eval_unchecked(a, x);
    integrate_half_line(&integrand, tol)
}

/// Closed-form squared norms:
/// Type I   `(a + n) Gamma(a + n - m) / (n - m)!`,
/// Type II  `(a + 1 + n - 2m) Gamma(a + 2 + n - m) / (n - m)!`,
/// Type III `n Gamma(n - m + a + 1) / (n - m - 1)!` for `n >= m + 1` and
///          `Gamma(a+1) Gamma(-a) m! / Gamma(m - a)` for `n = 0`.
pub fn norm_closed_form(family: Family, m: u32, n: u32, a: f64) -> Result<f64> {
    family.check_alpha(m, a)?;
    if !family.degree_admissible(m, n) {
        return Err(Error::DegreeNotAdmissible {
            family: family.label(),
            m,
            n,
        });
    }
    let (mf, nf) = (m as f64, n as f64);
    let value = match family {
        Family::TypeI => (a + nf) * gamma(a + nf - mf) / factorial_f64(n - m),
        Family::TypeII => {
            (a + 1.0 + nf - 2.0 * mf) * gamma(a + 2.0 + nf - mf) / factorial_f64(n - m)
        }
        Family::TypeIII => {
            if n == 0 {
                gamma(a + 1.0) * gamma(-a) * factorial_f64(m) / gamma(mf - a)
            } else {
                nf * gamma(nf - mf + a + 1.0) / factorial_f64(n - m - 1)
            }
        }
    };
    Ok(value)
}

fn factorial_f64(n: u32) -> f64 {
    let mut out = 1.0;
    for i in 2..=n {
        out *= i as f64;
    }
    out
}

/// Gram matrix of the family polynomials at the listed degrees, with the
/// diagonal compared against the closed forms and off-diagonal magnitudes
/// normalized by the norms.
#[derive(Clone, Debug)]
pub struct GramReport {
    pub degrees: Vec<u32>,
    pub matrix: Vec<Vec<f64>>,
    /// max over i != j of |G_ij| / sqrt(G_ii G_jj)
    pub max_offdiag_rel: f64,
    /// per-degree |G_ii - closed| / closed
    pub diag_rel_errors: Vec<f64>,
}

pub fn gram_matrix(
    family: Family,
    m: u32,
    a: f64,
    degrees: &[u32],
    tol: Tolerance,
) -> Result<GramReport> {
    family.check_alpha(m, a)?;
    let polys: Vec<RealPoly> = degrees
        .iter()
        .map(|&n| {
            xlag(family, m, n).map(|p| {
                let mut rp = substitute_alpha(&p, a);
                rp.provenance = Some((family, m, n));
                rp
            })
        })
        .collect::<Result<_>>()?;
    let closed: Vec<f64> = degrees
        .iter()
        .map(|&n| norm_closed_form(family, m, n, a))
        .collect::<Result<_>>()?;

    let k = degrees.len();
    let mut matrix = vec![vec![0.0; k]; k];
    for i in 0..k {
        for j in i..k {
            // absolute target scaled by the norms so that near-zero
            // off-diagonal entries are resolved relative to the diagonal
            let scale = (closed[i] * closed[j]).sqrt();
            let cell_tol = Tolerance::abs_rel(tol.abs * scale.max(1.0), tol.rel);
            let r = inner_product(family, m, a, &polys[i], &polys[j], cell_tol)?;
            matrix[i][j] = r.value;
            matrix[j][i] = r.value;
        }
    }
    let mut max_offdiag_rel: f64 = 0.0;
    for i in 0..k {
        for j in 0..k {
            if i != j {
                let rel = matrix[i][j].abs() / (matrix[i][i] * matrix[j][j]).sqrt();
                max_offdiag_rel = max_offdiag_rel.max(rel);
            }
        }
    }
    let diag_rel_errors = (0..k)
        .map(|i| (matrix[i][i] - closed[i]).abs() / closed[i])
        .collect();
    Ok(GramReport {
        degrees: degrees.to_vec(),
        matrix,
        max_offdiag_rel,
        diag_rel_errors,
    })
}
