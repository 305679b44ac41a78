//! Rendering of exact polynomials: factored plain text (`a` stands for the
//! symbolic parameter), bit-exact JSON coefficient arrays, and the CSV
//! format with its parser.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};
use xlaguerre::alpha::AlphaPoly;
use xlaguerre::rational::Rational;
use xlaguerre::xpoly::XPoly;

/// One linear factor `s*a + t` (integers, `s > 0`, primitive).
#[derive(Clone, Debug, PartialEq)]
struct LinearFactor {
    s: BigInt,
    t: BigInt,
}

/// `scale * (product of linear factors) * rest` with `rest` a primitive
/// integer polynomial without rational roots (or absent).
struct Factored {
    scale: Rational,
    factors: Vec<LinearFactor>,
    rest: Option<Vec<BigInt>>,
}

fn gcd(a: &BigInt, b: &BigInt) -> BigInt {
    let mut a = a.abs();
    let mut b = b.abs();
    while !b.is_zero() {
        let r = &a % &b;
        a = b;
        b = r;
    }
    a
}

/// Small divisors of `n` (both signs not included; positive divisors).
/// `None` when `n` is too large to factor cheaply.
fn divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let n = n.abs();
    if n > BigInt::from(100_000_000_000_000i64) {
        return None;
    }
    let n_u = u64::try_from(&n).ok()?;
    if n_u == 0 {
        return Some(vec![BigInt::one()]);
    }
    let mut out = Vec::new();
    let mut d = 1u64;
    while d.saturating_mul(d) <= n_u {
        if n_u % d == 0 {
            out.push(BigInt::from(d));
            if d != n_u / d {
                out.push(BigInt::from(n_u / d));
            }
        }
        d += 1;
        if out.len() > 4096 {
            return None;
        }
    }
    Some(out)
}

/// Integer coefficient list (ascending) and the rational scale pulled out.
fn to_primitive_integers(c: &AlphaPoly) -> (Rational, Vec<BigInt>) {
    let mut lcm = BigInt::one();
    for co in c.coeffs() {
        let d = co.denom();
        lcm = &lcm / &gcd(&lcm, d) * d;
    }
    let ints: Vec<BigInt> = c
        .coeffs()
        .iter()
        .map(|co| co.numer() * (&lcm / co.denom()))
        .collect();
    let mut g = BigInt::zero();
    for i in &ints {
        g = gcd(&g, i);
    }
    if g.is_zero() {
        return (Rational::zero(), vec![]);
    }
    let mut sign = BigInt::one();
    if ints.last().map(|l| l.is_negative()).unwrap_or(false) {
        sign = -sign;
    }
    let scale = Rational::new(&g * &sign, lcm);
    let prim: Vec<BigInt> = ints.iter().map(|i| i / (&g * &sign)).collect();
    (scale, prim)
}

/// Divide the integer polynomial by `s*a + t` exactly; `None` when the
/// division leaves a remainder.
fn divide_linear(p: &[BigInt], f: &LinearFactor) -> Option<Vec<BigInt>> {
    if p.len() < 2 {
        return None;
    }
    let mut q = vec![BigInt::zero(); p.len() - 1];
    let mut rem = p.to_vec();
    for i in (0..q.len()).rev() {
        let top = rem[i + 1].clone();
        if (&top % &f.s).is_zero() {
            let qi = &top / &f.s;
            rem[i] = &rem[i] - &qi * &f.t;
            q[i] = qi;
        } else {
            return None;
        }
    }
    if rem[0].is_zero() {
        Some(q)
    } else {
        None
    }
}

fn factor_alpha_poly(c: &AlphaPoly) -> Factored {
    let (scale, mut p) = to_primitive_integers(c);
    if p.is_empty() {
        return Factored {
            scale,
            factors: vec![],
            rest: None,
        };
    }
    let mut factors = Vec::new();
    'outer: while p.len() >= 2 {
        // pull out powers of `a` first
        if p[0].is_zero() {
            factors.push(LinearFactor {
                s: BigInt::one(),
                t: BigInt::zero(),
            });
            p.remove(0);
            continue;
        }
        let (t_divs, s_divs) = match (divisors(&p[0]), divisors(p.last().unwrap())) {
            (Some(t), Some(s)) => (t, s),
            _ => break,
        };
        for s in &s_divs {
            for t in &t_divs {
                if !gcd(s, t).is_one() {
                    continue;
                }
                for signed_t in [t.clone(), -t.clone()] {
                    let f = LinearFactor {
                        s: s.clone(),
                        t: signed_t,
                    };
                    if let Some(q) = divide_linear(&p, &f) {
                        factors.push(f);
                        p = q;
                        continue 'outer;
                    }
                }
            }
        }
        break;
    }
    factors.sort_by_key(|f| (f.s.clone(), f.t.clone()));
    let rest = if p.len() >= 2 {
        Some(p)
    } else {
        // a leftover constant folds into the scale (primitive => it is 1)
        debug_assert!(p.len() == 1 && p[0].is_one());
        None
    };
    Factored {
        scale,
        factors,
        rest,
    }
}

fn rational_str(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn linear_factor_str(f: &LinearFactor) -> String {
    if f.s.is_one() && f.t.is_zero() {
        return "a".to_string();
    }
    let head = if f.s.is_one() {
        "a".to_string()
    } else {
        format!("{}*a", f.s)
    };
    let tail = if f.t.is_zero() {
        String::new()
    } else if f.t.is_positive() {
        format!("+{}", f.t)
    } else {
        format!("-{}", f.t.abs())
    };
    format!("({head}{tail})")
}

fn rest_str(coeffs: &[BigInt]) -> String {
    let mut out = String::new();
    for (i, c) in coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        if !out.is_empty() {
            out.push_str(if c.is_negative() { "-" } else { "+" });
        } else if c.is_negative() {
            out.push('-');
        }
        let mag = c.abs();
        if i == 0 || !mag.is_one() {
            out.push_str(&mag.to_string());
        }
        if i > 0 {
            if !mag.is_one() {
                out.push('*');
            }
            out.push('a');
            if i > 1 {
                out.push_str(&format!("^{i}"));
            }
        }
    }
    format!("({out})")
}

/// Factored plain-text form of one coefficient, without its sign;
/// returns `(is_negative, body)` where `body` omits the `x` power.
fn coefficient_pieces(c: &AlphaPoly) -> (bool, Vec<String>) {
    let f = factor_alpha_poly(c);
    let negative = f.scale.is_negative();
    let scale = f.scale.abs();
    let mut pieces = Vec::new();
    if !scale.is_one() {
        pieces.push(rational_str(&scale));
    }
    // consecutive pure-`a` factors render as a power
    let mut a_power = 0usize;
    for factor in &f.factors {
        if factor.s.is_one() && factor.t.is_zero() {
            a_power += 1;
        } else {
            pieces.push(linear_factor_str(factor));
        }
    }
    if a_power == 1 {
        pieces.insert(if scale.is_one() { 0 } else { 1 }, "a".to_string());
    } else if a_power > 1 {
        pieces.insert(if scale.is_one() { 0 } else { 1 }, format!("a^{a_power}"));
    }
    if let Some(rest) = &f.rest {
        pieces.push(rest_str(rest));
    }
    (negative, pieces)
}

/// Human form of an exact polynomial, descending powers of `x`, with the
/// `alpha` parameter printed as `a`; e.g. `x^2 - 2*a*x + a*(a+1)`.
pub fn xpoly_text(p: &XPoly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, c) in p.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let (neg, mut pieces) = coefficient_pieces(c);
        if i > 0 {
            pieces.push(if i == 1 {
                "x".to_string()
            } else {
                format!("x^{i}")
            });
        }
        if pieces.is_empty() {
            pieces.push("1".to_string());
        }
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        out.push_str(&pieces.join("*"));
    }
    out
}

/// Bit-exact JSON form: array (ascending `x` powers) of arrays (ascending
/// `alpha` powers) of `{num, den}` strings.
pub fn xpoly_json(p: &XPoly) -> Value {
    Value::Array(
        p.coeffs()
            .iter()
            .map(|c| {
                Value::Array(
                    c.coeffs()
                        .iter()
                        .map(|r| {
                            json!({
                                "num": r.numer().to_string(),
                                "den": r.denom().to_string(),
                            })
                        })
                        .collect(),
                )
            })
            .collect(),
    )
}

/// CSV rows `m,n,xpow,coeffs` with `coeffs` the ascending `alpha`
/// coefficients as space-separated `num/den` tokens.
pub fn xpoly_csv_rows(m: u32, n: u32, p: &XPoly) -> Vec<String> {
    p.coeffs()
        .iter()
        .enumerate()
        .map(|(i, c)| {
            let coeffs = if c.is_zero() {
                "0/1".to_string()
            } else {
                c.coeffs()
                    .iter()
                    .map(|r| format!("{}/{}", r.numer(), r.denom()))
                    .collect::<Vec<_>>()
                    .join(" ")
            };
            format!("{m},{n},{i},{coeffs}")
        })
        .collect()
}

/// Parse the CSV rows of one polynomial back (inverse of `xpoly_csv_rows`).
pub fn parse_csv_rows(rows: &[&str]) -> Result<(u32, u32, XPoly), String> {
    let mut m = None;
    let mut n = None;
    let mut coeffs: Vec<(usize, AlphaPoly)> = Vec::new();
    for row in rows {
        let fields: Vec<&str> = row.splitn(4, ',').collect();
        if fields.len() != 4 {
            return Err(format!("bad row: {row}"));
        }
        let rm: u32 = fields[0].parse().map_err(|e| format!("{e}"))?;
        let rn: u32 = fields[1].parse().map_err(|e| format!("{e}"))?;
        let xpow: usize = fields[2].parse().map_err(|e| format!("{e}"))?;
        if *m.get_or_insert(rm) != rm || *n.get_or_insert(rn) != rn {
            return Err("rows mix polynomials".to_string());
        }
        let alpha_coeffs: Vec<Rational> = fields[3]
            .split_whitespace()
            .map(|tok| {
                let (num, den) = tok
                    .split_once('/')
                    .ok_or_else(|| format!("bad rational: {tok}"))?;
                let num: BigInt = num.parse().map_err(|e| format!("{e}"))?;
                let den: BigInt = den.parse().map_err(|e| format!("{e}"))?;
                if den.is_zero() {
                    return Err("zero denominator".to_string());
                }
                Ok(Rational::new(num, den))
            })
            .collect::<Result<_, String>>()?;
        coeffs.push((xpow, AlphaPoly::from_coeffs(alpha_coeffs)));
    }
    coeffs.sort_by_key(|(i, _)| *i);
    let max = coeffs.last().map(|(i, _)| *i).unwrap_or(0);
    let mut dense = vec![AlphaPoly::zero(); max + 1];
    for (i, c) in coeffs {
        dense[i] = c;
    }
    Ok((m.unwrap_or(0), n.unwrap_or(0), XPoly::from_coeffs(dense)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use xlaguerre::exceptional::xlag3;

    #[test]
    fn appendix_text_forms() {
        assert_eq!(xpoly_text(&xlag3(1, 2).unwrap()), "x^2 - 2*a*x + a*(a+1)");
        assert_eq!(xpoly_text(&xlag3(1, 0).unwrap()), "1");
        assert_eq!(
            xpoly_text(&xlag3(1, 3).unwrap()),
            "-x^3 + 3*(a+1)*x^2 - 3*a*(a+2)*x + a*(a+1)*(a+2)"
        );
        // the m=2, n=5 cubic coefficient keeps its irreducible quadratic
        let text = xpoly_text(&xlag3(2, 5).unwrap());
        assert!(text.contains("(a^2+2*a-1)"), "{text}");
    }

    #[test]
    fn csv_round_trip() {
        let p = xlag3(2, 4).unwrap();
        let rows = xpoly_csv_rows(2, 4, &p);
        let refs: Vec<&str> = rows.iter().map(|s| s.as_str()).collect();
        let (m, n, back) = parse_csv_rows(&refs).unwrap();
        assert_eq!((m, n), (2, 4));
        assert_eq!(back, p);
    }

    #[test]
    fn json_is_exact() {
        let p = xlag3(1, 2).unwrap();
        let v = xpoly_json(&p);
        // constant coefficient a(a+1) = 0 + a + a^2
        assert_eq!(v[0][1]["num"], "1");
        assert_eq!(v[0][2]["den"], "1");
        assert_eq!(v[2][0]["num"], "1");
    }
}
