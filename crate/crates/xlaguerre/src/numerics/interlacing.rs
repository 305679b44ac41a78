//! Root-location verification for the Type III polynomials: exactly `k`
//! positive and `m` negative simple roots, one in each interval cut out by
//! the roots of `L_{k-1}^{a+1}(x)` and of `L_m^{-a-1}(-x)`.

use super::roots::laguerre_roots;
use super::substitute_alpha;
use crate::error::{Error, Result};
use crate::exceptional::xlag3;

#[derive(Clone, Debug)]
pub struct RootReport {
    pub m: u32,
    pub k: u32,
    pub alpha: f64,
    pub positive_roots: Vec<f64>,
    pub negative_roots: Vec<f64>,
    /// Roots of `L_{k-1}^{a+1}(x)`, ascending (positive).
    pub reference_pos: Vec<f64>,
    /// Roots of `L_m^{-a-1}(-x)`, ascending (negative).
    pub reference_neg: Vec<f64>,
    /// One flag per interval: first the `k` positive intervals
    /// `(0, x_1), ..., (x_{k-1}, inf)`, then the `m` negative intervals
    /// `(-inf, z_min), ..., (z_2, z_1)`.
    pub interval_flags: Vec<bool>,
    pub counts_ok: bool,
    pub pass: bool,
}

/// Verify the interlacing pattern at numeric `a` in `(-1, 0)`.
pub fn interlacing_check(m: u32, k: u32, a: f64) -> Result<RootReport> {
    if !(-1.0 < a && a < 0.0) {
        return Err(Error::Domain(format!(
            "interlacing check requires -1 < a < 0, got {a}"
        )));
    }
    if m < 1 || k < 1 {
        return Err(Error::Domain("interlacing check requires m, k >= 1".into()));
    }
    let poly = substitute_alpha(&xlag3(m, m + k)?, a);
    let all = super::roots::all_roots(&poly, 1e-12)?;
    let positive_roots: Vec<f64> = all.real.iter().cloned().filter(|r| *r > 0.0).collect();
    let negative_roots: Vec<f64> = all.real.iter().cloned().filter(|r| *r < 0.0).collect();

    let reference_pos = laguerre_roots(k - 1, a + 1.0)?;
    let reference_neg: Vec<f64> = {
        let mut v: Vec<f64> = laguerre_roots(m, -a - 1.0)?
            .into_iter()
            .map(|r| -r)
            .collect();
        v.sort_by(f64::total_cmp);
        v
    };

    let counts_ok = positive_roots.len() == k as usize
        && negative_roots.len() == m as usize
        && all.complex_pairs.is_empty()
        && all.real.len() == (m + k) as usize;

    let mut interval_flags = Vec::with_capacity((m + k) as usize);
    // positive intervals: (0, x_1), (x_1, x_2), ..., (x_{k-1}, inf)
    for i in 0..k as usize {
        let lo = if i == 0 { 0.0 } else { reference_pos[i - 1] };
        let hi = if i == k as usize - 1 {
            f64::INFINITY
        } else {
            reference_pos[i]
        };
        let count = positive_roots
            .iter()
            .filter(|r| lo < **r && **r < hi)
            .count();
        interval_flags.push(count == 1);
    }
    // negative intervals: (-inf, z_min), (z_min, next), ..., (z_2, z_1)
    for i in 0..m as usize {
        let lo = if i == 0 {
            f64::NEG_INFINITY
        } else {
            reference_neg[i - 1]
        };
        let hi = reference_neg.get(i).copied().unwrap_or(0.0);
        let count = negative_roots
            .iter()
            .filter(|r| lo < **r && **r < hi)
            .count();
        interval_flags.push(count == 1);
    }

    let pass = counts_ok && interval_flags.iter().all(|f| *f);
    Ok(RootReport {
        m,
        k,
        alpha: a,
        positive_roots,
        negative_roots,
        reference_pos,
        reference_neg,
        interval_flags,
        counts_ok,
        pass,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::roots::real_roots as poly_real_roots;

    #[test]
    fn simplest_case_matches_quadratic() {
        let r = interlacing_check(1, 1, -0.5).unwrap();
        assert!(r.pass);
        assert_eq!(r.positive_roots.len(), 1);
        assert_eq!(r.negative_roots.len(), 1);
        assert!((r.positive_roots[0] - 0.20711).abs() < 1e-5);
        assert!((r.negative_roots[0] + 1.20711).abs() < 1e-5);
        // the single reference negative root is a = -1/2 (root of x - a at a=-1/2)
        assert_eq!(r.reference_neg.len(), 1);
        assert!((r.reference_neg[0] + 0.5).abs() < 1e-12);
        assert!(r.negative_roots[0] < r.reference_neg[0]);
    }

    #[test]
    fn moderate_cases_pass() {
        for (m, k, a) in [(1u32, 2u32, -0.25f64), (2, 3, -0.5), (3, 5, -0.75)] {
            let r = interlacing_check(m, k, a).unwrap();
            assert!(r.pass, "m={m} k={k} a={a}: {:?}", r.interval_flags);
        }
    }

    #[test]
    fn critical_points_are_reference_roots() {
        // roots of the derivative coincide with the union of both reference
        // sets (the derivative factorizes through them)
        for (m, k, a) in [(2u32, 3u32, -0.5f64), (1, 4, -0.25)] {
            let p = substitute_alpha(&xlag3(m, m + k).unwrap(), a);
            let dp_roots = poly_real_roots(&p.diff(), 1e-12).unwrap();
            let r = interlacing_check(m, k, a).unwrap();
            let mut expected = r.reference_neg.clone();
            expected.extend_from_slice(&r.reference_pos);
            expected.sort_by(f64::total_cmp);
            assert_eq!(dp_roots.len(), expected.len());
            for (x, y) in dp_roots.iter().zip(expected.iter()) {
                assert!((x - y).abs() < 1e-8 * (1.0 + y.abs()), "{x} vs {y}");
            }
        }
    }

    #[test]
    fn rejects_out_of_range_alpha() {
        assert!(interlacing_check(1, 1, 0.5).is_err());
    }
}
