//! Frozen reference tables for the Type III polynomials with m = 1, 2, 3.
//!
//! These are golden values: the exact coefficients, transcribed term by term,
//! that the constructors must reproduce bit-for-bit. Nothing here is computed
//! from the constructors.

use crate::alpha::AlphaPoly;
use crate::rational::rat;
use crate::xpoly::XPoly;

/// `alpha + c`.
fn lin(c: i64) -> AlphaPoly {
    AlphaPoly::linear(1, c)
}

/// `s*alpha + c`.
fn lin2(s: i64, c: i64) -> AlphaPoly {
    AlphaPoly::linear(s, c)
}

/// `(c0 + c1 a + c2 a^2)`.
fn quad(c0: i64, c1: i64, c2: i64) -> AlphaPoly {
    AlphaPoly::from_coeffs(vec![
        crate::rational::rat_int(c0),
        crate::rational::rat_int(c1),
        crate::rational::rat_int(c2),
    ])
}

/// Product of the factors scaled by `num/den`.
fn term(num: i64, den: i64, factors: &[AlphaPoly]) -> AlphaPoly {
    let mut acc = AlphaPoly::constant(rat(num, den));
    for f in factors {
        acc = &acc * f;
    }
    acc
}

fn a() -> AlphaPoly {
    AlphaPoly::gen()
}

/// The golden table: `(m, n, polynomial)` for the fifteen listed cases
/// (m = 1: n in {0,2,3,4,5}; m = 2: n in {0,3,4,5,6}; m = 3: n in {0,4,5,6,7}).
pub fn golden_type3_tables() -> Vec<(u32, u32, XPoly)> {
    let mut out = vec![(1, 0, XPoly::one())];
    // x^2 - 2 a x + a(a+1)
    out.push((
        1,
        2,
        XPoly::from_coeffs(vec![
            term(1, 1, &[a(), lin(1)]),
            lin2(-2, 0),
            AlphaPoly::one(),
        ]),
    ));
    // -x^3 + 3(a+1) x^2 - 3a(a+2) x + a(a+1)(a+2)
    out.push((
        1,
        3,
        XPoly::from_coeffs(vec![
            term(1, 1, &[a(), lin(1), lin(2)]),
            term(-3, 1, &[a(), lin(2)]),
            term(3, 1, &[lin(1)]),
            AlphaPoly::from_int(-1),
        ]),
    ));
    // x^4/2 - 2(a+2) x^3 + (a+3)(3a+2) x^2 - 2a(a+2)(a+3) x
    //   + a(a+1)(a+2)(a+3)/2
    out.push((
        1,
        4,
        XPoly::from_coeffs(vec![
            term(1, 2, &[a(), lin(1), lin(2), lin(3)]),
            term(-2, 1, &[a(), lin(2), lin(3)]),
            term(1, 1, &[lin(3), lin2(3, 2)]),
            term(-2, 1, &[lin(2)]),
            AlphaPoly::constant(rat(1, 2)),
        ]),
    ));
    // -x^5/6 + 5(a+3)/6 x^4 - 5(a+4)(2a+3)/6 x^3 + 5(a+3)(a+4)(2a+1)/6 x^2
    //   - 5a(a+2)(a+3)(a+4)/6 x + a(a+1)(a+2)(a+3)(a+4)/6
    out.push((
        1,
        5,
        XPoly::from_coeffs(vec![
            term(1, 6, &[a(), lin(1), lin(2), lin(3), lin(4)]),
            term(-5, 6, &[a(), lin(2), lin(3), lin(4)]),
            term(5, 6, &[lin(3), lin(4), lin2(2, 1)]),
            term(-5, 6, &[lin(4), lin2(2, 3)]),
            term(5, 6, &[lin(3)]),
            AlphaPoly::constant(rat(-1, 6)),
        ]),
    ));

    out.push((2, 0, XPoly::one()));
    // x^3/2 - 3(a-1)/2 x^2 + 3a(a-1)/2 x - a(a-1)(a+1)/2
    out.push((
        2,
        3,
        XPoly::from_coeffs(vec![
            term(-1, 2, &[a(), lin(-1), lin(1)]),
            term(3, 2, &[a(), lin(-1)]),
            term(-3, 2, &[lin(-1)]),
            AlphaPoly::constant(rat(1, 2)),
        ]),
    ));
    // -x^4/2 + 2a x^3 - (a-1)(3a+4) x^2 + 2a(a-1)(a+2) x
    //   - a(a-1)(a+1)(a+2)/2
    out.push((
        2,
        4,
        XPoly::from_coeffs(vec![
            term(-1, 2, &[a(), lin(-1), lin(1), lin(2)]),
            term(2, 1, &[a(), lin(-1), lin(2)]),
            term(-1, 1, &[lin(-1), lin2(3, 4)]),
            term(2, 1, &[a()]),
            AlphaPoly::constant(rat(-1, 2)),
        ]),
    ));
    // x^5/4 - 5(a+1)/4 x^4 + 5(a^2+2a-1)/2 x^3 - 5(a-1)(a+1)(a+3)/2 x^2
    //   + 5a(a-1)(a+2)(a+3)/4 x - a(a-1)(a+1)(a+2)(a+3)/4
    out.push((
        2,
        5,
        XPoly::from_coeffs(vec![
            term(-1, 4, &[a(), lin(-1), lin(1), lin(2), lin(3)]),
            term(5, 4, &[a(), lin(-1), lin(2), lin(3)]),
            term(-5, 2, &[lin(-1), lin(1), lin(3)]),
            term(5, 2, &[quad(-1, 2, 1)]),
            term(-5, 4, &[lin(1)]),
            AlphaPoly::constant(rat(1, 4)),
        ]),
    ));
    // -x^6/12 + (a+2)/2 x^5 - (5a^2+19a+6)/4 x^4 + (a+2)(a+4)(5a-3)/3 x^3
    //   - (a-1)(a+3)(a+4)(5a+4)/4 x^2 + a(a-1)(a+2)(a+3)(a+4)/2 x
    //   - a(a-1)(a+1)(a+2)(a+3)(a+4)/12
    out.push((
        2,
        6,
        XPoly::from_coeffs(vec![
            term(-1, 12, &[a(), lin(-1), lin(1), lin(2), lin(3), lin(4)]),
            term(1, 2, &[a(), lin(-1), lin(2), lin(3), lin(4)]),
            term(-1, 4, &[lin(-1), lin(3), lin(4), lin2(5, 4)]),
            term(1, 3, &[lin(2), lin(4), lin2(5, -3)]),
            term(-1, 4, &[quad(6, 19, 5)]),
            term(1, 2, &[lin(2)]),
            AlphaPoly::constant(rat(-1, 12)),
        ]),
    ));

    out.push((3, 0, XPoly::one()));
    // x^4/6 - 2(a-2)/3 x^3 + (a-1)(a-2) x^2 - 2a(a-1)(a-2)/3 x
    //   + a(a-2)(a-1)(a+1)/6
    out.push((
        3,
        4,
        XPoly::from_coeffs(vec![
            term(1, 6, &[a(), lin(-2), lin(-1), lin(1)]),
            term(-2, 3, &[a(), lin(-1), lin(-2)]),
            term(1, 1, &[lin(-1), lin(-2)]),
            term(-2, 3, &[lin(-2)]),
            AlphaPoly::constant(rat(1, 6)),
        ]),
    ));
    // -x^5/6 + 5(a-1)/6 x^4 - 5(a-2)(2a+1)/6 x^3 + 5(a-2)(a-1)(2a+3)/6 x^2
    //   - 5a(a-2)(a-1)(a+2)/6 x + a(a-2)(a-1)(a+1)(a+2)/6
    out.push((
        3,
        5,
        XPoly::from_coeffs(vec![
            term(1, 6, &[a(), lin(-2), lin(-1), lin(1), lin(2)]),
            term(-5, 6, &[a(), lin(-2), lin(-1), lin(2)]),
            term(5, 6, &[lin(-2), lin(-1), lin2(2, 3)]),
            term(-5, 6, &[lin(-2), lin2(2, 1)]),
            term(5, 6, &[lin(-1)]),
            AlphaPoly::constant(rat(-1, 6)),
        ]),
    ));
    // x^6/12 - a/2 x^5 + (5a^2+a-12)/4 x^4 - a(a-2)(5a+13)/3 x^3
    //   + (a-2)(a-1)(a+3)(5a+6)/4 x^2 - a(a-2)(a-1)(a+2)(a+3)/2 x
    //   + a(a-2)(a-1)(a+1)(a+2)(a+3)/12
    out.push((
        3,
        6,
        XPoly::from_coeffs(vec![
            term(1, 12, &[a(), lin(-2), lin(-1), lin(1), lin(2), lin(3)]),
            term(-1, 2, &[a(), lin(-2), lin(-1), lin(2), lin(3)]),
            term(1, 4, &[lin(-2), lin(-1), lin(3), lin2(5, 6)]),
            term(-1, 3, &[a(), lin(-2), lin2(5, 13)]),
            term(1, 4, &[quad(-12, 1, 5)]),
            term(-1, 2, &[a()]),
            AlphaPoly::constant(rat(1, 12)),
        ]),
    ));
    // -x^7/36 + 7(a+1)/36 x^6 - 7(a^2+2a-2)/12 x^5 + 35(a+1)(a^2+2a-6)/36 x^4
    //   - 7(a-2)(a+4)(5a^2+10a-3)/36 x^3 + 7(a-2)(a-1)(a+1)(a+3)(a+4)/12 x^2
    //   - 7a(a-2)(a-1)(a+2)(a+3)(a+4)/36 x
    //   + a(a-2)(a-1)(a+1)(a+2)(a+3)(a+4)/36
    out.push((
        3,
        7,
        XPoly::from_coeffs(vec![
            term(
                1,
                36,
                &[a(), lin(-2), lin(-1), lin(1), lin(2), lin(3), lin(4)],
            ),
            term(-7, 36, &[a(), lin(-2), lin(-1), lin(2), lin(3), lin(4)]),
            term(7, 12, &[lin(-2), lin(-1), lin(1), lin(3), lin(4)]),
            term(-7, 36, &[lin(-2), lin(4), quad(-3, 10, 5)]),
            term(35, 36, &[lin(1), quad(-6, 2, 1)]),
            term(-7, 12, &[quad(-2, 2, 1)]),
            term(7, 36, &[lin(1)]),
            AlphaPoly::constant(rat(-1, 36)),
        ]),
    ));

    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_shape() {
        let t = golden_type3_tables();
        assert_eq!(t.len(), 15);
        for (m, n, p) in &t {
            if *n == 0 {
                assert_eq!(p, &XPoly::one());
            } else {
                assert_eq!(p.degree(), Some(*n as usize), "m={m} n={n}");
            }
        }
    }
}
