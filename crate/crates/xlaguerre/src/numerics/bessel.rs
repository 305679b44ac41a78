//! Zeros of the Bessel function of the first kind `J_a`, used as the limit
//! targets of the Type I root asymptotics: McMahon's expansion seeds a
//! Newton iteration on `J_a` computed by power series (small argument) or
//! the Hankel asymptotic expansion (large argument), switching at |x| = 12.

use crate::error::{Error, Result};
use crate::gamma::gamma;

const SERIES_HANKEL_SWITCH: f64 = 12.0;

/// `J_a(x)` for `a > -1`, `x > 0`.
pub fn bessel_j(a: f64, x: f64) -> f64 {
    if x <= SERIES_HANKEL_SWITCH {
        bessel_j_series(a, x)
    } else {
        bessel_j_hankel(a, x)
    }
}

fn bessel_j_series(a: f64, x: f64) -> f64 {
    // sum_k (-1)^k (x/2)^{2k+a} / (k! Gamma(a+k+1))
    let half = 0.5 * x;
    let q = half * half;
    let mut term = half.powf(a) / gamma(a + 1.0);
    let mut sum = term;
    let mut comp = 0.0f64; // Kahan compensation
    for k in 1..200 {
        term *= -q / (k as f64 * (a + k as f64));
        let y = term - comp;
        let t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        if term.abs() < 1e-18 * sum.abs().max(1e-300) {
            break;
        }
    }
    sum
}

fn bessel_j_hankel(a: f64, x: f64) -> f64 {
    // J_a(x) ~ sqrt(2/(pi x)) (P cos chi - Q sin chi),
    // chi = x - (a/2 + 1/4) pi, asymptotic series in 1/(8x)^2.
    let mu = 4.0 * a * a;
    let chi = x - (0.5 * a + 0.25) * std::f64::consts::PI;
    let w = 8.0 * x;
    let mut p = 1.0;
    let mut q = (mu - 1.0) / w;
    let mut pterm = 1.0;
    let mut qterm = q;
    for k in 0..20 {
        let k2: i32 = 2 * k;
        let f1 = mu - ((k2 * 2 + 1) as f64).powi(2);
        let f2 = mu - ((k2 * 2 + 3) as f64).powi(2);
        let new_p = -pterm * f1 * f2 / (((k2 + 1) * (k2 + 2)) as f64 * w * w);
        let f3 = mu - ((k2 * 2 + 3) as f64).powi(2);
        let f4 = mu - ((k2 * 2 + 5) as f64).powi(2);
        let new_q = -qterm * f3 * f4 / (((k2 + 2) * (k2 + 3)) as f64 * w * w);
        if new_p.abs() > pterm.abs() || new_q.abs() > qterm.abs() {
            break;
        }
        p += new_p;
        q += new_q;
        pterm = new_p;
        qterm = new_q;
        if new_p.abs() < 1e-17 && new_q.abs() < 1e-17 {
            break;
        }
    }
    (2.0 / (std::f64::consts::PI * x)).sqrt() * (p * chi.cos() - q * chi.sin())
}

/// `J_a'(x) = (a/x) J_a(x) - J_{a+1}(x)`.
pub fn bessel_j_prime(a: f64, x: f64) -> f64 {
    a / x * bessel_j(a, x) - bessel_j(a + 1.0, x)
}

/// McMahon's expansion for the i-th positive zero.
fn mcmahon_guess(a: f64, i: u32) -> f64 {
    let beta = (i as f64 + 0.5 * a - 0.25) * std::f64::consts::PI;
    let mu = 4.0 * a * a;
    let b8 = 8.0 * beta;
    beta - (mu - 1.0) / b8
        - 4.0 * (mu - 1.0) * (7.0 * mu - 31.0) / (3.0 * b8.powi(3))
        - 32.0 * (mu - 1.0) * (83.0 * mu * mu - 982.0 * mu + 3779.0) / (15.0 * b8.powi(5))
}

/// The i-th positive zero `j_{a,i}` to about 1e-10 relative accuracy.
pub fn bessel_zero(a: f64, i: u32) -> Result<f64> {
    if a <= -1.0 {
        return Err(Error::Domain(format!("bessel_zero needs a > -1, got {a}")));
    }
    if i == 0 {
        return Err(Error::Domain("zero index starts at 1".into()));
    }
    let guess = mcmahon_guess(a, i);
    let mut x = guess.max(0.1);
    // Newton with step clamping to half the expected zero spacing
    let clamp = std::f64::consts::PI * 0.5;
    for _ in 0..60 {
        let f = bessel_j(a, x);
        let fp = bessel_j_prime(a, x);
        if fp == 0.0 {
            break;
        }
        let mut step = f / fp;
        if step.abs() > clamp {
            step = clamp * step.signum();
        }
        let next = x - step;
        if next <= 0.0 {
            x *= 0.5;
            continue;
        }
        if (next - x).abs() <= 1e-13 * x.abs() {
            return Ok(next);
        }
        x = next;
    }
    let f = bessel_j(a, x);
    if f.abs() < 1e-8 {
        Ok(x)
    } else {
        Err(Error::Convergence(format!(
            "bessel zero a={a} i={i} stalled at x={x} with J={f}"
        )))
    }
}
