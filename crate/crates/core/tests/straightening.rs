use seminormal_core::hecke::MurphyOracle;
use seminormal_core::specht::{SpechtModule, SpechtVector};
use seminormal_core::qcoeff::LaurentPoly;
use seminormal_core::tableaux::partitions_of;

#[test]
fn generator_matrices_match_the_algebra() {
    for n in 2..=5 {
        let oracle = MurphyOracle::new(n).unwrap();
        for shape in partitions_of(n) {
            let m = SpechtModule::new(&shape).unwrap();
            for t in m.basis() {
                for i in 1..n {
                    let got = m.act_gen(&SpechtVector::<LaurentPoly>::basis(t), i).unwrap();
                    let want = SpechtVector::from_terms(&shape, oracle.specht_action(t, i));
                    assert_eq!(got, want, "shape {shape}, e[{t}] T_{i}");
                }
            }
        }
    }
}

#[test]
fn row_standard_tableaux_straighten_like_the_algebra() {
    use seminormal_core::hecke::murphy_element;
    use seminormal_core::tableaux::{superstandard, Permutation, Tableau};
    for n in 2..=5 {
        let oracle = MurphyOracle::new(n).unwrap();
        for shape in partitions_of(n) {
            let m = SpechtModule::new(&shape).unwrap();
            let top = superstandard(&shape);
            let mut seen = 0;
            for w in Permutation::all(n) {
                let u = top.apply(&w);
                if !u.is_row_standard() {
                    continue;
                }
                seen += 1;
                let got: Vec<(Tableau, LaurentPoly)> = m.straighten_tableau(&u).unwrap().to_vec();
                let want = oracle.reduce_to_specht(&shape, &murphy_element(&top, &u));
                assert_eq!(
                    SpechtVector::from_terms(&shape, got),
                    SpechtVector::from_terms(&shape, want),
                    "straightening {u}"
                );
            }
            assert!(seen >= m.dim());
        }
    }
}
