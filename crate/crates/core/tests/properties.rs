//! Randomized algebraic properties of the arithmetic kernels.

use proptest::prelude::*;

use specht_core::poly::{Monomial, MultiPoly};
use specht_core::linalg::ScalarMatrix;
use specht_core::scalar::Scalar;

fn scalar_strategy(r: u32) -> impl Strategy<Value = Scalar> {
    let phi = specht_core::scalar::euler_phi(r);
    proptest::collection::vec((-6i64..=6, 1i64..=4), phi).prop_map(move |coords| {
        let mut acc = Scalar::zero(r);
        for (k, (p, q)) in coords.into_iter().enumerate() {
            let c = &Scalar::from_ratio(p, q, r) * &Scalar::xi_pow(r, k as i64);
            acc = &acc + &c;
        }
        acc
    })
}

fn poly_strategy(nvars: usize, r: u32) -> impl Strategy<Value = MultiPoly> {
    proptest::collection::vec(
        (proptest::collection::vec(0u32..=3, nvars), -5i64..=5),
        0..=5,
    )
    .prop_map(move |terms| {
        let mut p = MultiPoly::zero(nvars);
        for (exps, c) in terms {
            p = p
                .try_add(&MultiPoly::monomial_term(
                    nvars,
                    Monomial::new(exps),
                    Scalar::from_int(c, r),
                ))
                .unwrap();
        }
        p
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn scalar_field_axioms(a in scalar_strategy(5), b in scalar_strategy(5), c in scalar_strategy(5)) {
        // associativity and commutativity
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        // distributivity
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        // inverses
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn exact_divide_recovers_the_factor(p in poly_strategy(2, 2), q in poly_strategy(2, 2)) {
        prop_assume!(!q.is_zero());
        let prod = p.try_mul(&q).unwrap();
        prop_assert_eq!(prod.exact_divide(&q).unwrap(), p);
    }

    #[test]
    fn derivative_satisfies_leibniz(p in poly_strategy(3, 2), q in poly_strategy(3, 2)) {
        for i in 0..3 {
            let lhs = p.try_mul(&q).unwrap().partial_derivative(i).unwrap();
            let rhs = p
                .partial_derivative(i)
                .unwrap()
                .try_mul(&q)
                .unwrap()
                .try_add(&q.partial_derivative(i).unwrap().try_mul(&p).unwrap())
                .unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn solve_verifies_by_substitution(entries in proptest::collection::vec(-4i64..=4, 9), rhs_raw in proptest::collection::vec(-4i64..=4, 3)) {
        let mut m = ScalarMatrix::zeros(3, 3, 2);
        for i in 0..3 {
            for j in 0..3 {
                m.set(i, j, Scalar::from_int(entries[3 * i + j], 2));
            }
        }
        let rhs: Vec<Scalar> = rhs_raw.into_iter().map(|v| Scalar::from_int(v, 2)).collect();
        if let Ok(x) = m.solve(&rhs) {
            prop_assert_eq!(m.mul_vec(&x), rhs);
        }
        // nullspace vectors annihilate
        for v in m.nullspace() {
            prop_assert!(m.mul_vec(&v).iter().all(|c| c.is_zero()));
        }
    }

    #[test]
    fn monomial_order_is_a_strict_total_order(
        a in proptest::collection::vec(0u32..=4, 3),
        b in proptest::collection::vec(0u32..=4, 3),
        c in proptest::collection::vec(0u32..=4, 3),
    ) {
        use std::cmp::Ordering;
        let (ma, mb, mc) = (Monomial::new(a), Monomial::new(b), Monomial::new(c));
        // antisymmetry
        prop_assert_eq!(ma.cmp(&mb), mb.cmp(&ma).reverse());
        prop_assert_eq!(ma.cmp(&mb) == Ordering::Equal, ma == mb);
        // transitivity
        if ma <= mb && mb <= mc {
            prop_assert!(ma <= mc);
        }
        // multiplicativity: the order survives a common factor
        let (f1, f2) = (ma.mul(&mc), mb.mul(&mc));
        prop_assert_eq!(ma.cmp(&mb), f1.cmp(&f2));
    }
}
