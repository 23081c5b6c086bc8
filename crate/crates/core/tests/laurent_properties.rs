use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

use k3refine::laurent::{exact_div, quantum_integer, Rational, TauPolynomial, TauRational};

fn poly() -> impl Strategy<Value = TauPolynomial> {
    prop::collection::vec((-6i64..=6, -9i64..=9, 1i64..=3), 0..6).prop_map(|terms| {
        TauPolynomial::from_terms(
            terms
                .into_iter()
                .map(|(e, n, d)| (e, Rational::new(BigInt::from(n), BigInt::from(d)))),
        )
    })
}

fn nonzero_poly() -> impl Strategy<Value = TauPolynomial> {
    poly().prop_filter("nonzero", |p| !p.is_zero())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn inversion_is_an_involutive_automorphism(a in poly(), b in poly()) {
        prop_assert_eq!(a.invert_variable().invert_variable(), a.clone());
        prop_assert_eq!((&a * &b).invert_variable(), &a.invert_variable() * &b.invert_variable());
        prop_assert_eq!((&a + &b).invert_variable(), &a.invert_variable() + &b.invert_variable());
    }

    #[test]
    fn symmetrization_is_palindromic(a in poly(), b in poly()) {
        let sa = &a + &a.invert_variable();
        let sb = &b + &b.invert_variable();
        prop_assert!(sa.is_palindromic());
        prop_assert!((&sa * &sb).is_palindromic());
    }

    #[test]
    fn evaluation_at_one_is_a_ring_map(a in poly(), b in poly()) {
        prop_assert_eq!((&a + &b).evaluate_at_one(), a.evaluate_at_one() + b.evaluate_at_one());
        prop_assert_eq!((&a * &b).evaluate_at_one(), a.evaluate_at_one() * b.evaluate_at_one());
    }

    #[test]
    fn substitution_is_a_ring_map(a in poly(), b in poly(), k in 1u32..=4) {
        prop_assert_eq!((&a * &b).substitute_power(k), &a.substitute_power(k) * &b.substitute_power(k));
        prop_assert_eq!((&a + &b).substitute_power(k), &a.substitute_power(k) + &b.substitute_power(k));
    }

    #[test]
    fn exact_division_inverts_multiplication(a in nonzero_poly(), b in poly()) {
        prop_assert_eq!(exact_div(&(&a * &b), &a), Some(b));
    }

    #[test]
    fn fractions_are_canonical(a in poly(), b in nonzero_poly(), c in nonzero_poly()) {
        let r = TauRational::new(a.clone(), b.clone()).unwrap();
        prop_assert_eq!(r.recanonicalize(), r.clone());
        prop_assert_eq!(TauRational::new(&a * &c, &b * &c).unwrap(), r.clone());
        let den = r.denominator();
        prop_assert_eq!(den.min_exp(), Some(0));
        prop_assert!(den.terms().next_back().unwrap().1.is_positive());
        prop_assert!(den.terms().all(|(_, x)| x.is_integer()));
        if a.is_zero() {
            prop_assert!(r.is_zero());
        }
    }

    #[test]
    fn fraction_field_cancels(a in nonzero_poly(), b in poly(), c in nonzero_poly()) {
        let fa = TauRational::new(a, c.clone()).unwrap();
        let fb = TauRational::new(b, c).unwrap();
        prop_assert_eq!(&fa * &(&fb / &fa), fb.clone());
        prop_assert_eq!(&(&fa + &fb) - &fb, fa.clone());
        prop_assert!((&fa - &fa).is_zero());
    }

    #[test]
    fn fraction_inversion_commutes_with_arithmetic(a in poly(), b in nonzero_poly(), c in poly(), d in nonzero_poly()) {
        let x = TauRational::new(a, b).unwrap();
        let y = TauRational::new(c, d).unwrap();
        prop_assert_eq!((&x * &y).invert_variable(), &x.invert_variable() * &y.invert_variable());
        prop_assert_eq!(x.invert_variable().invert_variable(), x);
    }
}

#[test]
fn quantum_integer_multiplicativity() {
    for d in 1..=20u32 {
        for chi in 1..=20u32 {
            let lhs = quantum_integer(d * chi);
            let rhs = &quantum_integer(chi).substitute_power(d) * &quantum_integer(d);
            assert_eq!(lhs, rhs, "d = {d}, chi = {chi}");
        }
    }
}

#[test]
fn quantum_integers_are_palindromic_with_value_n() {
    for n in 0..=20u32 {
        let q = quantum_integer(n);
        assert!(q.is_palindromic());
        assert!(q.is_integral());
        assert_eq!(q.evaluate_at_one(), Rational::from_integer(n.into()));
        assert_eq!(q.len(), n as usize);
    }
    assert!(quantum_integer(0).is_zero());
    assert!(Rational::zero().is_zero());
}
