//! Root asymptotics probes. Large-degree polynomials are never expanded into
//! coefficient vectors; values come from the classical-Laguerre product
//! representations evaluated by recurrence, and roots from bracketed
//! bisection inside the intervals the interlacing theorems provide.

use super::bessel::bessel_zero;
use super::roots::{laguerre_roots, laguerre_value};
use crate::error::{Error, Result};

/// Type III value via
/// `x L_{k-2}^{a+2}(x) L_m^{-a-1}(-x) + (m+1) L_{k-1}^{a+1}(x) L_{m+1}^{-a-2}(-x)`.
pub fn xlag3_value(m: u32, k: u32, a: f64, x: f64) -> f64 {
    let lk2 = if k >= 2 {
        laguerre_value(k - 2, a + 2.0, x)
    } else {
        0.0
    };
    let lk1 = laguerre_value(k - 1, a + 1.0, x);
    x * lk2 * laguerre_value(m, -a - 1.0, -x)
        + (m as f64 + 1.0) * lk1 * laguerre_value(m + 1, -a - 2.0, -x)
}

/// Type I value via
/// `L_m^a(-x) L_k^{a-1}(x) + L_m^{a-1}(-x) L_{k-1}^a(x)` (degree m + k).
pub fn xlag1_value(m: u32, k: u32, a: f64, x: f64) -> f64 {
    let second = if k >= 1 {
        laguerre_value(m, a - 1.0, -x) * laguerre_value(k - 1, a, x)
    } else {
        0.0
    };
    laguerre_value(m, a, -x) * laguerre_value(k, a - 1.0, x) + second
}

fn bisect(f: &dyn Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> Result<f64> {
    let mut flo = f(lo);
    let fhi = f(hi);
    if flo == 0.0 {
        return Ok(lo);
    }
    if fhi == 0.0 {
        return Ok(hi);
    }
    if flo.signum() == fhi.signum() {
        return Err(Error::Convergence(format!(
            "no sign change on [{lo}, {hi}]"
        )));
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let fm = f(mid);
        if fm == 0.0 {
            return Ok(mid);
        }
        if fm.signum() == flo.signum() {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// The `m` negative ("exceptional") roots of `xlag3(m, m+k)` at numeric `a`,
/// ascending, using the interlacing intervals around the roots of
/// `L_m^{-a-1}(-x)`.
pub fn type3_exceptional_roots(m: u32, k: u32, a: f64) -> Result<Vec<f64>> {
    let mut targets: Vec<f64> = laguerre_roots(m, -a - 1.0)?
        .into_iter()
        .map(|r| -r)
        .collect();
    targets.sort_by(f64::total_cmp);
    let f = |x: f64| xlag3_value(m, k, a, x);
    let mut roots = Vec::with_capacity(m as usize);
    for i in 0..m as usize {
        let hi = targets[i];
        let lo = if i == 0 {
            // expand left from the smallest target until the sign flips
            let mut lo = hi - 0.5;
            let mut width = 0.5;
            while f(lo).signum() == f(hi - 1e-12 * hi.abs().max(1.0)).signum() {
                width *= 2.0;
                lo = hi - width;
                if width > 1e6 {
                    return Err(Error::Convergence(
                        "no sign change left of the smallest target root".into(),
                    ));
                }
            }
            lo
        } else {
            targets[i - 1]
        };
        // evaluate strictly inside the interval
        let eps = 1e-12 * (1.0 + hi.abs());
        roots.push(bisect(&f, lo + eps, hi - eps)?);
    }
    Ok(roots)
}

/// First positive root of `xlag3(m, m+k)` at numeric `a`: the polynomial is
/// negative at 0 and positive at the first root of `L_{k-1}^{a+1}`.
pub fn type3_first_positive_root(m: u32, k: u32, a: f64) -> Result<f64> {
    let f = |x: f64| xlag3_value(m, k, a, x);
    let hi = if k >= 2 {
        laguerre_roots(k - 1, a + 1.0)?[0]
    } else {
        // k = 1: single positive root, expand right until the sign flips
        let mut hi = 1.0;
        while f(hi) < 0.0 {
            hi *= 2.0;
            if hi > 1e8 {
                return Err(Error::Convergence("no positive sign change".into()));
            }
        }
        hi
    };
    bisect(&f, 1e-300, hi)
}

/// Row of the Type III probe at one `k`.
#[derive(Clone, Debug)]
pub struct Type3Row {
    pub k: u32,
    /// `|root_i - target_i|` for the `m` exceptional roots, ascending target.
    pub distances: Vec<f64>,
    pub first_positive_root: f64,
}

#[derive(Clone, Debug)]
pub struct Type3Asymptotics {
    pub m: u32,
    pub alpha: f64,
    pub rows: Vec<Type3Row>,
    /// Each distance column strictly decreases along `k_list`.
    pub distances_decreasing: bool,
    /// The first positive root strictly decreases along `k_list`.
    pub first_root_decreasing: bool,
}

pub fn type3_asymptotics(m: u32, a: f64, k_list: &[u32]) -> Result<Type3Asymptotics> {
    if !(-1.0 < a && a < 0.0) {
        return Err(Error::Domain(format!(
            "Type III asymptotics need -1 < a < 0, got {a}"
        )));
    }
    let mut targets: Vec<f64> = laguerre_roots(m, -a - 1.0)?
        .into_iter()
        .map(|r| -r)
        .collect();
    targets.sort_by(f64::total_cmp);
    let mut rows = Vec::with_capacity(k_list.len());
    for &k in k_list {
        let roots = type3_exceptional_roots(m, k, a)?;
        let distances = roots
            .iter()
            .zip(targets.iter())
            .map(|(r, t)| (r - t).abs())
            .collect();
        rows.push(Type3Row {
            k,
            distances,
            first_positive_root: type3_first_positive_root(m, k, a)?,
        });
    }
    let distances_decreasing = (0..m as usize).all(|i| {
        rows.windows(2)
            .all(|w| w[1].distances[i] < w[0].distances[i])
    });
    let first_root_decreasing = rows
        .windows(2)
        .all(|w| w[1].first_positive_root < w[0].first_positive_root);
    Ok(Type3Asymptotics {
        m,
        alpha: a,
        rows,
        distances_decreasing,
        first_root_decreasing,
    })
}

/// First `count` positive roots of the Type I polynomial of degree `m + k`,
/// found by a multiplicative grid scan from below the smallest root of
/// `L_k^a` followed by bisection.
pub fn type1_first_positive_roots(m: u32, k: u32, a: f64, count: usize) -> Result<Vec<f64>> {
    if a <= 0.0 {
        return Err(Error::Domain(format!(
            "Type I asymptotics need a > 0, got {a}"
        )));
    }
    let u = laguerre_roots(k, a)?;
    let f = |x: f64| xlag1_value(m, k, a, x);
    let mut roots = Vec::with_capacity(count);
    let start = u[0] / 128.0;
    let mut x = start;
    let mut fx = f(x);
    let factor = 1.02;
    let limit = u.get(count).copied().unwrap_or(u[u.len() - 1] * 4.0) * 1.5;
    while roots.len() < count && x < limit {
        let nx = x * factor;
        let fnx = f(nx);
        if fx.signum() != fnx.signum() {
            roots.push(bisect(&f, x, nx)?);
        }
        x = nx;
        fx = fnx;
    }
    if roots.len() < count {
        return Err(Error::Convergence(format!(
            "found only {} of {count} positive roots (m={m}, k={k}, a={a})",
            roots.len()
        )));
    }
    Ok(roots)
}

#[derive(Clone, Debug)]
pub struct Type1Row {
    pub k: u32,
    /// `k * x_{k,i}` for i = 1..=3.
    pub scaled_roots: Vec<f64>,
    /// `|k * x_{k,i} - j_{a,i}^2 / 4|`.
    pub deviations: Vec<f64>,
}

#[derive(Clone, Debug)]
pub struct Type1Asymptotics {
    pub m: u32,
    pub alpha: f64,
    /// `j_{a,i}^2 / 4` for i = 1..=3.
    pub limits: Vec<f64>,
    pub rows: Vec<Type1Row>,
    pub deviations_decreasing: bool,
}

pub fn type1_asymptotics(m: u32, a: f64, k_list: &[u32]) -> Result<Type1Asymptotics> {
    let limits: Vec<f64> = (1..=3u32)
        .map(|i| bessel_zero(a, i).map(|j| j * j / 4.0))
        .collect::<Result<_>>()?;
    let mut rows = Vec::with_capacity(k_list.len());
    for &k in k_list {
        let roots = type1_first_positive_roots(m, k, a, 3)?;
        let scaled_roots: Vec<f64> = roots.iter().map(|r| k as f64 * r).collect();
        let deviations = scaled_roots
            .iter()
            .zip(limits.iter())
            .map(|(s, l)| (s - l).abs())
            .collect();
        rows.push(Type1Row {
            k,
            scaled_roots,
            deviations,
        });
    }
    let deviations_decreasing = (0..3).all(|i| {
        rows.windows(2)
            .all(|w| w[1].deviations[i] < w[0].deviations[i])
    });
    Ok(Type1Asymptotics {
        m,
        alpha: a,
        limits,
        rows,
        deviations_decreasing,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product_representation_matches_coefficients() {
        use crate::exceptional::xlag3;
        use crate::numerics::substitute_alpha;
        let (m, k, a) = (2u32, 4u32, -0.5f64);
        let p = substitute_alpha(&xlag3(m, m + k).unwrap(), a);
        for x in [-3.0, -1.0, -0.1, 0.5, 2.0, 7.5] {
            let direct = p.eval(x);
            let via_products = xlag3_value(m, k, a, x);
            assert!(
                (direct - via_products).abs() <= 1e-10 * direct.abs().max(1.0),
                "x={x}: {direct} vs {via_products}"
            );
        }
    }

    #[test]
    fn exceptional_roots_approach_targets() {
        let probe = type3_asymptotics(1, -0.5, &[5, 10, 20, 40]).unwrap();
        assert!(probe.distances_decreasing, "{:?}", probe.rows);
        assert!(probe.first_root_decreasing);
        // the root distances shrink like 1/sqrt(k); the first positive root
        // (the quantity that tends to zero) is already small at k = 40
        let last = probe.rows.last().unwrap();
        assert!(last.distances[0] < 0.12, "{}", last.distances[0]);
        assert!(
            last.first_positive_root < 0.02,
            "{}",
            last.first_positive_root
        );
    }

    #[test]
    fn type1_scaled_roots_approach_bessel_limits() {
        let probe = type1_asymptotics(1, 0.5, &[25, 50, 100]).unwrap();
        // j_{1/2,1} = pi, so the first limit is pi^2/4
        let expect = std::f64::consts::PI.powi(2) / 4.0;
        assert!((probe.limits[0] - expect).abs() < 1e-9);
        let last = probe.rows.last().unwrap();
        assert!(
            (last.scaled_roots[0] - expect).abs() / expect < 0.05,
            "k=100 scaled root {} vs {expect}",
            last.scaled_roots[0]
        );
        assert!(probe.deviations_decreasing);
    }
}
