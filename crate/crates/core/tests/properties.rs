use proptest::prelude::*;

use seminormal_core::hecke::{jucys_murphy, HeckeElement};
use seminormal_core::qcoeff::{
    cyclotomic_poly, factor_cyclotomic, quantum_int, reduce_in, CyclotomicField, CyclotomicOutcome, LaurentPoly,
    RationalFunction,
};
use seminormal_core::seminormal::{f_via, general_ft, seminormal_gen_action, Method};
use seminormal_core::specht::{SpechtModule, SpechtVector};
use seminormal_core::tableaux::{partitions_of, standard_tableaux, Permutation, Tableau};

fn laurent() -> impl Strategy<Value = LaurentPoly> {
    (-3i32..=3, prop::collection::vec(-4i64..=4, 1..5)).prop_map(|(low, c)| LaurentPoly::from_i64s(low, &c))
}

fn nonzero_laurent() -> impl Strategy<Value = LaurentPoly> {
    laurent().prop_filter("nonzero", |p| !p.is_zero())
}

fn ratfunc() -> impl Strategy<Value = RationalFunction> {
    (laurent(), nonzero_laurent()).prop_map(|(a, b)| &RationalFunction::from_laurent(a) / &RationalFunction::from_laurent(b))
}

fn nonzero_ratfunc() -> impl Strategy<Value = RationalFunction> {
    ratfunc().prop_filter("nonzero", |f| !f.is_zero())
}

fn permutation(n: usize) -> impl Strategy<Value = Permutation> {
    Just((1..=n).collect::<Vec<usize>>()).prop_shuffle().prop_map(|w| Permutation::from_images(&w).unwrap())
}

fn hecke(n: usize) -> impl Strategy<Value = HeckeElement<LaurentPoly>> {
    prop::collection::vec((permutation(n), laurent()), 1..4).prop_map(move |terms| {
        let mut h = HeckeElement::zero(n);
        for (w, c) in terms {
            h.add_term(w, c);
        }
        h
    })
}

fn standard_tableau(max_n: usize) -> impl Strategy<Value = Tableau> {
    (1..=max_n)
        .prop_flat_map(|n| {
            let shapes = partitions_of(n);
            (0..shapes.len()).prop_map(move |k| shapes[k].clone())
        })
        .prop_flat_map(|shape| {
            let ts = standard_tableaux(&shape);
            (0..ts.len()).prop_map(move |k| ts[k].clone())
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(a in ratfunc(), b in ratfunc(), c in ratfunc()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn inverses(a in nonzero_ratfunc()) {
        prop_assert!((&a * &a.inverse().unwrap()).is_one());
    }

    #[test]
    fn quantum_integers_add(a in -12i64..12, b in -12i64..12) {
        // [a + b] = [a] + q^a [b]
        let rhs = &quantum_int(a) + &quantum_int(b).mul_q_power(a as i32);
        prop_assert_eq!(quantum_int(a + b), rhs);
    }

    #[test]
    fn factorisations_reassemble(ds in prop::collection::vec(1u32..=40, 1..4), k in -3i32..3) {
        let mut p = LaurentPoly::q_power(k);
        for &d in &ds {
            p = &p * &cyclotomic_poly(d);
        }
        match factor_cyclotomic(&p).unwrap() {
            CyclotomicOutcome::Product(f) => prop_assert_eq!(f.reassemble(), p),
            CyclotomicOutcome::NotProductOfCyclotomics(_) => prop_assert!(false, "{p} is a product of cyclotomics"),
        }
    }

    #[test]
    fn reduction_is_multiplicative(a in ratfunc(), b in ratfunc(), e in 2u32..=8) {
        let field = CyclotomicField::new(e).unwrap();
        if let (Ok(x), Ok(y)) = (reduce_in(&field, &a), reduce_in(&field, &b)) {
            prop_assert_eq!(reduce_in(&field, &(&a * &b)).unwrap(), &x * &y);
            prop_assert_eq!(reduce_in(&field, &(&a + &b)).unwrap(), &x + &y);
        }
    }

    #[test]
    fn hecke_is_associative(a in hecke(4), b in hecke(4), c in hecke(4)) {
        let left = a.mul(&b).unwrap().mul(&c).unwrap();
        let right = a.mul(&b.mul(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn jucys_murphy_elements_commute(n in 2usize..=5, i in 1usize..=5, j in 1usize..=5) {
        let (i, j) = (i.min(n), j.min(n));
        let a = jucys_murphy::<LaurentPoly>(i, n);
        let b = jucys_murphy::<LaurentPoly>(j, n);
        prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn constructions_agree(t in standard_tableau(6)) {
        let fast = general_ft(&t).unwrap().f;
        prop_assert_eq!(&fast, &f_via(&t, Method::Stepwise).unwrap());
        prop_assert_eq!(&fast, &f_via(&t, Method::Projector).unwrap());
        prop_assert!(fast.triangularity_defect().is_none());
    }

    #[test]
    fn generators_act_seminormally(t in standard_tableau(6), i in 1usize..6) {
        let n = t.n();
        prop_assume!(i < n);
        let module = SpechtModule::shared(t.shape()).unwrap();
        let f = general_ft(&t).unwrap().f;
        let lhs = module.act_gen(f.vector(), i).unwrap();
        let mut rhs = SpechtVector::zero(t.shape());
        for (s, c) in seminormal_gen_action(&t, i).unwrap() {
            rhs.add_scaled(general_ft(&s).unwrap().f.vector(), &c);
        }
        prop_assert_eq!(lhs, rhs);
    }
}
