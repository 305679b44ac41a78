//! Polynomial root finding: balanced companion-matrix eigenvalues polished
//! by Newton in double-double, plus Golub-Welsch (Jacobi matrix) roots for
//! classical Laguerre polynomials.

use super::dd::Dd;
use super::RealPoly;
use crate::error::{Error, Result};
use nalgebra::DMatrix;

/// Parlett-Reinsch balancing with powers of two; improves eigenvalue
/// accuracy for companion matrices with widely ranging coefficients.
fn balance(m: &mut DMatrix<f64>) {
    let n = m.nrows();
    let radix: f64 = 2.0;
    let sqrdx = radix * radix;
    loop {
        let mut done = true;
        for i in 0..n {
            let mut r = 0.0;
            let mut c = 0.0;
            for j in 0..n {
                if j != i {
                    c += m[(j, i)].abs();
                    r += m[(i, j)].abs();
                }
            }
            if c != 0.0 && r != 0.0 {
                let mut g = r / radix;
                let mut f = 1.0;
                let s = c + r;
                let mut c_mut = c;
                while c_mut < g {
                    f *= radix;
                    c_mut *= sqrdx;
                }
                g = r * radix;
                while c_mut > g {
                    f /= radix;
                    c_mut /= sqrdx;
                }
                if (c_mut + r) / f < 0.95 * s {
                    done = false;
                    let ginv = 1.0 / f;
                    for j in 0..n {
                        m[(i, j)] *= ginv;
                    }
                    for j in 0..n {
                        m[(j, i)] *= f;
                    }
                }
            }
        }
        if done {
            break;
        }
    }
}

/// All complex eigenvalues of the balanced companion matrix of `p`.
pub fn companion_eigenvalues(p: &RealPoly) -> Result<Vec<(f64, f64)>> {
    let deg = p
        .degree()
        .ok_or_else(|| Error::Domain("cannot take roots of the zero polynomial".into()))?;
    if deg == 0 {
        return Ok(vec![]);
    }
    let lead = p.coeffs[deg];
    let mut m = DMatrix::<f64>::zeros(deg, deg);
    for i in 0..deg {
        m[(0, i)] = -p.coeffs[deg - 1 - i] / lead;
    }
    for i in 1..deg {
        m[(i, i - 1)] = 1.0;
    }
    balance(&mut m);
    let eig = m.complex_eigenvalues();
    Ok(eig.iter().map(|z| (z.re, z.im)).collect())
}

/// Newton polish in double-double starting from `x0`.
fn polish(p: &RealPoly, dp: &RealPoly, x0: f64) -> f64 {
    let mut x = Dd::from(x0);
    for _ in 0..40 {
        let f = p.eval_dd(x);
        let fp = dp.eval(x.to_f64());
        if fp == 0.0 {
            break;
        }
        let step = f.div_f64(fp);
        let next = x.sub(step);
        if step.abs().to_f64() <= 1e-30 * x.abs().to_f64().max(1e-30) {
            return next.to_f64();
        }
        x = next;
    }
    x.to_f64()
}

/// All real roots, ascending, to roughly `tol` relative accuracy. Complex
/// pairs are reported separately. Roots are assumed simple (the theorems
/// this crate verifies assert simplicity); a separation check guards that
/// assumption.
pub struct RootSet {
    pub real: Vec<f64>,
    pub complex_pairs: Vec<(f64, f64)>,
}

pub fn all_roots(p: &RealPoly, tol: f64) -> Result<RootSet> {
    let eig = companion_eigenvalues(p)?;
    let dp = p.diff();
    let scale = eig
        .iter()
        .map(|(re, im)| re.abs() + im.abs())
        .fold(1.0f64, f64::max);
    let mut real = Vec::new();
    let mut complex_pairs = Vec::new();
    for (re, im) in eig {
        if im.abs() <= 1e-8 * (re.abs() + scale) {
            let r = polish(p, &dp, re);
            real.push(r);
        } else if im > 0.0 {
            complex_pairs.push((re, im));
        }
    }
    real.sort_by(f64::total_cmp);
    // simplicity guard: polished roots must stay separated
    for w in real.windows(2) {
        if (w[1] - w[0]).abs() < 1e2 * tol * (1.0 + w[0].abs().max(w[1].abs())) {
            return Err(Error::Convergence(format!(
                "roots {} and {} closer than the separation threshold",
                w[0], w[1]
            )));
        }
    }
    Ok(RootSet {
        real,
        complex_pairs,
    })
}

/// Real roots only (errors if any residual after polishing is large).
pub fn real_roots(p: &RealPoly, tol: f64) -> Result<Vec<f64>> {
    Ok(all_roots(p, tol)?.real)
}

/// `L_n^a` evaluated by the three-term recurrence at a numeric point.
pub fn laguerre_value(n: u32, a: f64, x: f64) -> f64 {
    if n == 0 {
        return 1.0;
    }
    let mut prev = 1.0f64;
    let mut curr = 1.0 + a - x;
    for k in 1..n {
        let kf = k as f64;
        let next = ((2.0 * kf + 1.0 + a - x) * curr - (kf + a) * prev) / (kf + 1.0);
        prev = curr;
        curr = next;
    }
    curr
}

fn laguerre_value_dd(n: u32, a: f64, x: Dd) -> Dd {
    if n == 0 {
        return Dd::from(1.0);
    }
    let mut prev = Dd::from(1.0);
    let mut curr = x.neg().add_f64(1.0 + a);
    for k in 1..n {
        let kf = k as f64;
        let b = x.neg().add_f64(2.0 * kf + 1.0 + a);
        let next = b.mul(curr).sub(prev.mul_f64(kf + a)).div_f64(kf + 1.0);
        prev = curr;
        curr = next;
    }
    curr
}

/// `(L_n^a)'(x) = (n L_n^a(x) - (n + a) L_{n-1}^a(x)) / x`.
pub fn laguerre_derivative_value(n: u32, a: f64, x: f64) -> f64 {
    if n == 0 {
        return 0.0;
    }
    (n as f64 * laguerre_value(n, a, x) - (n as f64 + a) * laguerre_value(n - 1, a, x)) / x
}

/// The `n` roots of `L_n^a` (a > -1), ascending, via the symmetric
/// tridiagonal Jacobi matrix, polished by double-double Newton.
pub fn laguerre_roots(n: u32, a: f64) -> Result<Vec<f64>> {
    if a <= -1.0 {
        return Err(Error::Domain(format!(
            "laguerre_roots needs a > -1, got {a}"
        )));
    }
    if n == 0 {
        return Ok(vec![]);
    }
    let nu = n as usize;
    let mut m = DMatrix::<f64>::zeros(nu, nu);
    for i in 0..nu {
        m[(i, i)] = 2.0 * i as f64 + a + 1.0;
        if i > 0 {
            let b = (i as f64 * (i as f64 + a)).sqrt();
            m[(i, i - 1)] = b;
            m[(i - 1, i)] = b;
        }
    }
    let eig = m
        .symmetric_eigenvalues()
        .iter()
        .cloned()
        .collect::<Vec<f64>>();
    let mut roots = eig;
    roots.sort_by(f64::total_cmp);
    // polish with the recurrence in double-double
    for r in roots.iter_mut() {
        let mut x = Dd::from(*r);
        for _ in 0..30 {
            let f = laguerre_value_dd(n, a, x);
            let fp = laguerre_derivative_value(n, a, x.to_f64());
            if fp == 0.0 {
                break;
            }
            let step = f.div_f64(fp);
            x = x.sub(step);
            if step.abs().to_f64() < 1e-28 * x.abs().to_f64().max(1e-28) {
                break;
            }
        }
        *r = x.to_f64();
    }
    Ok(roots)
}
