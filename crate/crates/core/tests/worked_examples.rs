use seminormal_core::hecke::HeckeElement;
use seminormal_core::qcoeff::{quantum_int, RationalFunction};
use seminormal_core::seminormal::*;
use seminormal_core::specht::SpechtVector;
use seminormal_core::tableaux::*;

type H = HeckeElement<RationalFunction>;

fn tab(s: &str) -> Tableau {
    s.parse().unwrap()
}

fn q() -> RationalFunction {
    RationalFunction::q()
}

fn t(i: usize, j: usize, n: usize) -> H {
    H::t_range(i, j, n)
}

#[test]
fn fat_hook_three_two_two() {
    let shape: Partition = "3,2,2".parse().unwrap();
    let inv3 = quantum_int(3).inverse().unwrap();
    let minus_q = &(-q()) * &inv3;
    let expected = SpechtVector::from_terms(
        &shape,
        [
            (tab("1,2,7/3,4/5,6"), RationalFunction::one()),
            (tab("1,2,5/3,4/6,7"), inv3.clone()),
            (tab("1,2,3/4,5/6,7"), minus_q.clone()),
            (tab("1,2,4/3,5/6,7"), minus_q.clone()),
            (tab("1,2,6/3,4/5,7"), inv3.clone()),
            (tab("1,2,3/4,6/5,7"), minus_q.clone()),
            (tab("1,2,4/3,6/5,7"), minus_q),
        ],
    );
    let fh = fat_hook_fn(&shape).unwrap();
    assert_eq!(fh.expansion.f.vector(), &expected);
    assert_eq!(fh.expansion.f.vector().len(), 7);
    assert!(fh.expansion.standard_throughout);
    assert_eq!(fh.r, 3);

    let (general, _) = general_fn(&shape, Node::new(1, 3)).unwrap();
    assert_eq!(general.f, fh.expansion.f);
    assert_eq!(f_via_projector(&tab("1,2,7/3,4/5,6")).unwrap(), fh.expansion.f);

    let cert = certificate_for_node(&shape, Node::new(1, 3)).unwrap();
    assert_eq!(cert.predicted_r, vec![3]);
    assert!(cert.divides && cert.cleared);
}

#[test]
fn four_three_two_two_factors() {
    let shape: Partition = "4,3,2,2".parse().unwrap();
    let n = 11;
    let r2 = H::identity(n).add(&t(4, 6, n)).add(&t(4, 5, n));
    let r3 = H::identity(n).add(&t(7, 8, n));
    let r4 = H::identity(n).add(&t(9, 10, n));
    let f0 = r2.clone();
    let f1 = t(7, 9, n).sub(&r3.scale(&q())).mul(&r4).unwrap();
    let inv = |k| quantum_int(k).inverse().unwrap();
    let p1 = t(4, 7, n).add(&f0.scale(&inv(2)));
    let p2 = t(7, 11, n).add(&f1.scale(&inv(5)));

    let data = james_murphy_factors(&shape, Node::new(1, 4)).unwrap();
    assert_eq!(data.c, vec![4, 7, 11]);
    assert_eq!(data.r, vec![2, 5]);
    assert_eq!(data.f, vec![f0, f1]);
    assert_eq!(data.factors, vec![p1.clone(), p2.clone()]);
    assert_eq!(data.p_n().unwrap(), p1.mul(&p2).unwrap());

    let (fast, _) = general_fn(&shape, Node::new(1, 4)).unwrap();
    assert!(fast.standard_throughout);
    assert_eq!(fast.f, f_via_stepwise(fast.f.tableau()).unwrap().f);
    let cert = certificate_for_node(&shape, Node::new(1, 4)).unwrap();
    assert!(cert.divides && cert.cleared);
}

#[test]
fn three_one_one_factors() {
    let target = tab("1,4,5/2/3");
    let g = general_ft(&target).unwrap();
    let inv = |k| quantum_int(k).inverse().unwrap();
    let p5 = t(3, 5, 5).add(&H::identity(5).scale(&-q()).add(&H::generator(3, 5)).scale(&inv(4)));
    let p4 = t(2, 4, 4).add(&H::identity(4).scale(&-q()).add(&H::generator(2, 4)).scale(&inv(3)));
    let labels: Vec<usize> = g.p.iter().map(|(i, _)| *i).collect();
    assert_eq!(labels, vec![5, 4, 3, 2, 1]);
    assert_eq!(g.p[0].1.as_ref().unwrap().p_n().unwrap(), p5);
    assert_eq!(g.p[1].1.as_ref().unwrap().p_n().unwrap(), p4);
    assert!(g.p[2..].iter().all(|(_, d)| d.is_none()));

    let inv3 = inv(3);
    let minus_q = &(-q()) * &inv3;
    let expected = SpechtVector::from_terms(
        target.shape(),
        [
            (target.clone(), RationalFunction::one()),
            (tab("1,3,5/2/4"), inv3.clone()),
            (tab("1,2,5/3/4"), minus_q.clone()),
            (tab("1,3,4/2/5"), inv3),
            (tab("1,2,4/3/5"), minus_q),
        ],
    );
    assert_eq!(g.f.vector(), &expected);
    assert_eq!(f_via_projector(&target).unwrap(), g.f);

    let cert = certificate_for_tableau(&target).unwrap();
    assert_eq!(cert.lcm, vec![(3, 1)]);
}

#[test]
fn superstandard_is_fixed_by_every_route() {
    for shape in ["5", "3,2", "2,2,1"] {
        let shape: Partition = shape.parse().unwrap();
        let top = superstandard(&shape);
        let e = SpechtVector::basis(&top);
        for m in Method::ALL {
            assert_eq!(f_via(&top, m).unwrap().vector(), &e, "{m}");
        }
        let cert = certificate_for_tableau(&top).unwrap();
        assert!(cert.denominators.is_empty() && cert.lcm.is_empty());
    }
}

#[test]
fn row_step_matches_projector() {
    let tb = tab("1,2,3/4,5");
    let fb = f_via_projector(&tb).unwrap();
    let stepped = row_step(&fb, 3, 5).unwrap();
    assert_eq!(stepped.tableau(), &tab("1,2,5/3,4"));
    assert_eq!(stepped, f_via_projector(&tab("1,2,5/3,4")).unwrap());
    assert_eq!(row_step(&fb, 3, 3).unwrap(), fb);
}

#[test]
fn stepwise_term_counts_on_fat_hooks() {
    for (l2, k2) in [(2usize, 2usize), (2, 3), (3, 2), (3, 3)] {
        let mut parts = vec![l2 + 1];
        parts.extend(std::iter::repeat_n(l2, k2));
        let shape = Partition::new(parts).unwrap();
        let fh = fat_hook_fn(&shape).unwrap();
        let s = f_via_stepwise(fh.expansion.f.tableau()).unwrap();
        assert_eq!(*s.term_count_trace.last().unwrap(), 1u128 << (l2 * k2));
        assert_eq!(s.f, fh.expansion.f);
        let sum: u128 = (1..=k2 as u32).map(|i| (l2 as u128).pow(i)).sum();
        assert_eq!(fh.fast_terms, sum);
    }
}
