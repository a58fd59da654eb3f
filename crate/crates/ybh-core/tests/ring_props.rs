use num_traits::{One, Zero};
use proptest::prelude::*;
use ybh_core::{LaurentPoly, Rational};

fn arb_poly() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-6i64..=6, -9i64..=9, 1i64..=4), 0..6).prop_map(|terms| {
        let mut p = LaurentPoly::zero();
        for (e, num, den) in terms {
            p += &LaurentPoly::monomial(e, Rational::new(num.into(), den.into()));
        }
        p
    })
}

fn arb_nonzero() -> impl Strategy<Value = LaurentPoly> {
    arb_poly().prop_filter("nonzero", |p| !p.is_zero())
}

proptest! {
    #[test]
    fn add_commutes(a in arb_poly(), b in arb_poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
    }

    #[test]
    fn add_associates(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
    }

    #[test]
    fn mul_commutes(a in arb_poly(), b in arb_poly()) {
        prop_assert_eq!(&a * &b, &b * &a);
    }

    #[test]
    fn mul_associates(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn mul_distributes(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }

    #[test]
    fn additive_inverse(a in arb_poly()) {
        prop_assert!((&a + &(-&a)).is_zero());
    }

    #[test]
    fn identities(a in arb_poly()) {
        prop_assert_eq!(&a + &LaurentPoly::zero(), a.clone());
        prop_assert_eq!(&a * &LaurentPoly::one(), a.clone());
        prop_assert!((&a * &LaurentPoly::zero()).is_zero());
    }

    #[test]
    fn no_zero_divisors(a in arb_nonzero(), b in arb_nonzero()) {
        prop_assert!(!(&a * &b).is_zero());
    }

    #[test]
    fn euclid_div_remultiplies(a in arb_poly(), b in arb_nonzero()) {
        let (q, r) = a.euclid_div(&b);
        prop_assert_eq!(&(&q * &b) + &r, a);
        prop_assert!(r.is_zero() || r.euclid_norm() < b.euclid_norm());
    }

    #[test]
    fn gcd_divides_and_is_canonical(a in arb_poly(), b in arb_poly()) {
        prop_assume!(!(a.is_zero() && b.is_zero()));
        let g = a.gcd(&b);
        prop_assert!(g.divides(&a));
        prop_assert!(g.divides(&b));
        prop_assert_eq!(g.canonicalize(), g.clone());
        prop_assert_eq!(a.gcd(&b), b.gcd(&a));
    }

    #[test]
    fn canonicalize_is_associate_fixpoint(a in arb_nonzero()) {
        let c = a.canonicalize();
        prop_assert_eq!(c.canonicalize(), c.clone());
        prop_assert!(c.coeff(0) != Rational::zero());
        prop_assert!(c.leading().unwrap().1.is_one());
        // associate: a = unit * c
        let (q, r) = a.euclid_div(&c);
        prop_assert!(r.is_zero());
        prop_assert!(q.is_unit());
    }

    #[test]
    fn display_parse_roundtrip(a in arb_poly()) {
        let shown = a.to_string();
        let back: LaurentPoly = shown.parse().unwrap();
        prop_assert_eq!(back, a);
    }
}
