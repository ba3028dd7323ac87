use seminormal_core::seminormal::{base_change, f_via_projector, f_via_stepwise, general_ft, Method};
use seminormal_core::tableaux::{partitions_of, standard_tableaux};

#[test]
fn four_constructions_agree_up_to_six() {
    for n in 1..=6 {
        for shape in partitions_of(n) {
            let gs = base_change(&shape, Method::GramSchmidt).unwrap();
            for (k, t) in standard_tableaux(&shape).iter().enumerate() {
                let p = f_via_projector(t).unwrap();
                assert_eq!(p, f_via_stepwise(t).unwrap().f, "stepwise {t}");
                assert_eq!(p, general_ft(t).unwrap().f, "fast {t}");
                assert_eq!(p, gs.f(k), "gram-schmidt {t}");
            }
        }
    }
}

#[test]
fn base_change_is_method_independent_at_seven() {
    for shape in partitions_of(7) {
        let fast = base_change(&shape, Method::Fast).unwrap();
        assert_eq!(fast, base_change(&shape, Method::Stepwise).unwrap(), "{shape}");
        assert_eq!(fast, base_change(&shape, Method::Projector).unwrap(), "{shape}");
        assert_eq!(fast.m, base_change(&shape, Method::GramSchmidt).unwrap().m, "{shape}");
    }
}
