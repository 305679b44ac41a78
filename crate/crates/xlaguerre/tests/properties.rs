//! Property tests for the exact symbolic layer: canonical-form closure,
//! ring axioms, the reflect involution, and exact-division round trips.

use proptest::prelude::*;
use xlaguerre::alpha::AlphaPoly;
use xlaguerre::rational::{rat, Rational};
use xlaguerre::xpoly::XPoly;

fn arb_rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=8).prop_map(|(n, d)| rat(n, d))
}

fn arb_alpha_poly(max_deg: usize) -> impl Strategy<Value = AlphaPoly> {
    prop::collection::vec(arb_rational(), 0..=max_deg + 1).prop_map(AlphaPoly::from_coeffs)
}

fn arb_xpoly(max_deg: usize) -> impl Strategy<Value = XPoly> {
    prop::collection::vec(arb_alpha_poly(3), 0..=max_deg + 1).prop_map(XPoly::from_coeffs)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn canonical_form_is_idempotent(p in arb_xpoly(8)) {
        let renormalized = XPoly::from_coeffs(p.coeffs().to_vec());
        prop_assert_eq!(&renormalized, &p);
        if let Some(lead) = p.leading() {
            prop_assert!(!lead.is_zero());
        }
    }

    #[test]
    fn ring_axioms(a in arb_xpoly(8), b in arb_xpoly(8), c in arb_xpoly(8)) {
        // associativity of multiplication
        prop_assert_eq!(&(&(&a * &b) * &c), &(&a * &(&b * &c)));
        // distributivity
        prop_assert_eq!(&(&a * &(&b + &c)), &(&(&a * &b) + &(&a * &c)));
        // additive identities
        prop_assert_eq!(&(&a + &XPoly::zero()), &a);
        prop_assert!((&a - &a).is_zero());
        // degree additivity over an integral domain
        if !a.is_zero() && !b.is_zero() {
            prop_assert_eq!(
                (&a * &b).degree(),
                Some(a.degree().unwrap() + b.degree().unwrap())
            );
        }
    }

    #[test]
    fn reflect_is_an_involution(p in arb_xpoly(8)) {
        prop_assert_eq!(&p.reflect().reflect(), &p);
        // diff(reflect(p)) = -reflect(diff(p))
        prop_assert_eq!(&p.reflect().diff(), &(-&p.diff().reflect()));
    }

    #[test]
    fn alpha_reflect_is_an_involution(p in arb_xpoly(6)) {
        prop_assert_eq!(&p.reflect_alpha().reflect_alpha(), &p);
        prop_assert_eq!(&p.shift_alpha(3).shift_alpha(-3), &p);
    }

    #[test]
    fn exact_division_round_trip(p in arb_xpoly(5), q in arb_xpoly(4)) {
        prop_assume!(!q.is_zero());
        let prod = &p * &q;
        let back = prod.divide_exact(&q).unwrap();
        prop_assert_eq!(&back, &p);
    }
}
