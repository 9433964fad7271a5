use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use schubert_core::poly::{PolyError, PolyT, Polynomial};

fn rational() -> impl Strategy<Value = BigRational> {
    (-6i64..=6, 1i64..=3).prop_map(|(n, d)| BigRational::new(BigInt::from(n), BigInt::from(d)))
}

fn poly(rank: usize) -> impl Strategy<Value = Polynomial> {
    let term = (prop::collection::vec(0u32..=3, rank), rational())
        .prop_filter("total degree at most 6", |(e, _)| e.iter().sum::<u32>() <= 6);
    prop::collection::vec(term, 0..6).prop_map(move |terms| Polynomial::from_terms(rank, terms))
}

fn homogeneous(rank: usize, degree: u32) -> impl Strategy<Value = Polynomial> {
    let exps = prop::collection::vec(0u32..=degree, rank)
        .prop_filter("exact degree", move |e| e.iter().sum::<u32>() == degree);
    prop::collection::vec((exps, rational()), 1..5).prop_map(move |terms| Polynomial::from_terms(rank, terms))
}

fn triple() -> impl Strategy<Value = (Polynomial, Polynomial, Polynomial)> {
    (1usize..=4).prop_flat_map(|r| (poly(r), poly(r), poly(r)))
}

fn poly_t() -> impl Strategy<Value = PolyT> {
    prop::collection::vec(rational(), 0..6).prop_map(PolyT::from_coeffs)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn ring_laws((a, b, c) in triple()) {
        let n = a.nvars();
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &Polynomial::zero(n), a.clone());
        prop_assert_eq!(&a * &Polynomial::one(n), a.clone());
        prop_assert!((&a - &a).is_zero());
        prop_assert!((&a * &Polynomial::zero(n)).is_zero());
        prop_assert_eq!(&a - &b, &a + &(-&b));
    }

    #[test]
    fn specialization_is_a_ring_map((a, b, _c) in triple()) {
        prop_assert_eq!((&a + &b).specialize_to_t(), &a.specialize_to_t() + &b.specialize_to_t());
        prop_assert_eq!((&a * &b).specialize_to_t(), &a.specialize_to_t() * &b.specialize_to_t());
        prop_assert_eq!(Polynomial::one(a.nvars()).specialize_to_t(), PolyT::one());
    }

    #[test]
    fn exact_division_inverts_multiplication((a, b, _c) in triple()) {
        prop_assume!(!b.is_zero());
        let q = (&a * &b).divide_exact(&b).unwrap();
        prop_assert_eq!(q, a);
    }

    #[test]
    fn division_by_zero_is_an_error(a in poly(3)) {
        let by_zero = matches!(a.divide_exact(&Polynomial::zero(3)), Err(PolyError::DivisionByZero));
        prop_assert!(by_zero);
    }

    #[test]
    fn inexact_division_reports_remainder(a in poly(2)) {
        // a * x1 + 1 is never divisible by x1
        let x1 = Polynomial::var(2, 0);
        let f = &(&a * &x1) + &Polynomial::one(2);
        let inexact = matches!(f.divide_exact(&x1), Err(PolyError::NotDivisible { .. }));
        prop_assert!(inexact);
    }

    #[test]
    fn homogeneous_degrees_add(
        (a, b, da, db) in (1usize..=4, 0u32..=3, 0u32..=3)
            .prop_flat_map(|(r, da, db)| (homogeneous(r, da), homogeneous(r, db), Just(da), Just(db)))
    ) {
        prop_assume!(!a.is_zero() && !b.is_zero());
        prop_assert!(a.is_homogeneous_of(da));
        prop_assert_eq!(a.homogeneous_degree(), Some(da));
        prop_assert!((&a * &b).is_homogeneous_of(da + db));
        if da == db {
            prop_assert!((&a + &b).is_homogeneous_of(da));
        } else {
            prop_assert_eq!((&a + &b).homogeneous_degree(), None);
        }
    }

    #[test]
    fn json_round_trip(a in (1usize..=4).prop_flat_map(poly)) {
        let back = Polynomial::from_json(a.nvars(), &a.to_json()).unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn poly_t_ring_laws(a in poly_t(), b in poly_t(), c in poly_t()) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        if !b.is_zero() {
            prop_assert_eq!((&a * &b).divide_exact(&b).unwrap(), a.clone());
        }
        let mut acc = c.clone();
        acc.add_product(&a, &b);
        prop_assert_eq!(acc, &c + &(&a * &b));
    }
}

#[test]
fn rank_mismatch_is_reported() {
    let a = Polynomial::var(2, 0);
    let b = Polynomial::var(3, 0);
    assert!(matches!(a.checked_add(&b), Err(PolyError::RankMismatch(..))));
    assert!(matches!(a.checked_mul(&b), Err(PolyError::RankMismatch(..))));
    assert!(a.divide_exact(&b).is_err());
}
