use proptest::prelude::*;
use tropconn::{q, tropical_hypersurface, uniform_bergman_fan, PolyhedralComplex, QVector, TropicalPolynomial};

fn shift(n: usize) -> impl Strategy<Value = QVector> {
    prop::collection::vec((-5i64..=5, 1i64..=4), n).prop_map(|xs| QVector(xs.into_iter().map(|(a, b)| q(a, b)).collect()))
}

fn plane_curve() -> impl Strategy<Value = PolyhedralComplex> {
    prop::collection::btree_map((0i64..=2, 0i64..=2), (-4i64..=4, 1i64..=2), 3..=5).prop_map(|terms| {
        let terms = terms.into_iter().map(|((a, b), (n, d))| (vec![a, b], q(n, d))).collect();
        tropical_hypersurface(&TropicalPolynomial::new(2, terms).unwrap()).unwrap()
    })
}

fn fan_codim1_by_meets(c: &PolyhedralComplex) -> bool {
    let m = c.cells().len();
    let d = c.dimension();
    let mut seen = vec![false; m];
    let mut stack = vec![0];
    while let Some(i) = stack.pop() {
        if std::mem::replace(&mut seen[i], true) {
            continue;
        }
        for j in 0..m {
            if !seen[j] && c.cells()[i].intersect(&c.cells()[j]).unwrap().dimension() >= d - 1 {
                stack.push(j);
            }
        }
    }
    m == 0 || seen.into_iter().all(|s| s)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn facet_graph_is_symmetric_with_codim1_witnesses(c in plane_curve()) {
        prop_assume!(c.is_pure() && !c.cells().is_empty());
        let g = c.facet_graph().unwrap();
        let d = c.dimension();
        for (i, j, w) in &g.edges {
            prop_assert!(g.are_adjacent(*i, *j) && g.are_adjacent(*j, *i));
            prop_assert_eq!(w.dimension(), d - 1);
            prop_assert!(c.cells()[*i].contains(w) && c.cells()[*j].contains(w));
        }
        prop_assert_eq!(g.is_connected(), fan_codim1_by_meets(&c));
        if c.is_connected_through_codim1().unwrap() {
            prop_assert!(c.is_connected().unwrap());
        }
    }

    #[test]
    fn translation_keeps_the_facet_graph(v in shift(3)) {
        let delta = uniform_bergman_fan(3, 2).unwrap();
        let moved = delta.translate(&v).unwrap();
        let (g, h) = (delta.facet_graph().unwrap(), moved.facet_graph().unwrap());
        for i in 0..g.nodes {
            prop_assert_eq!(g.neighbors(i), h.neighbors(i));
        }
        prop_assert!(moved.translate(&-&v).unwrap().supports_equal(&delta));
    }

    #[test]
    fn union_and_refinement_are_valid(v in shift(2), w in shift(2)) {
        let delta = uniform_bergman_fan(2, 1).unwrap();
        let a = delta.translate(&v).unwrap();
        let b = delta.translate(&w).unwrap();
        let u = a.union_with_repair(&b).unwrap();
        prop_assert!(u.validate().is_ok());
        prop_assert!(a.support_contained_in(&u) && b.support_contained_in(&u));
        let r = a.common_refinement(&b).unwrap();
        prop_assert!(r.validate().is_ok());
        prop_assert!(r.support_contained_in(&a) && r.support_contained_in(&b));
        prop_assert!(a.common_refinement(&a).unwrap().supports_equal(&a));
    }

    #[test]
    fn product_facet_count_multiplies(c in plane_curve(), n in 1usize..=3) {
        prop_assume!(c.is_pure());
        let fan = uniform_bergman_fan(n, 1).unwrap();
        let p = c.cartesian_product(&fan).unwrap();
        prop_assert_eq!(p.cells().len(), c.cells().len() * fan.cells().len());
        prop_assert!(p.is_pure());
    }
}

#[test]
fn bergman_fans_are_connected_through_codim1() {
    for n in 1..=5 {
        for d in 1..=n {
            let fan = uniform_bergman_fan(n, d).unwrap();
            assert!(fan.is_connected_through_codim1().unwrap(), "n = {n}, d = {d}");
        }
    }
}

#[test]
fn empty_complex_conventions() {
    let e = PolyhedralComplex::empty(3);
    assert!(e.is_connected().unwrap());
    assert!(e.is_pure());
    assert_eq!(e.dimension(), -1);
}
