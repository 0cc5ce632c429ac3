use proptest::prelude::*;
use tropconn::linalg::rank;
use tropconn::polyhedron::is_face;
use tropconn::{
    fm_project, hull_from_generators, lp_optimize, q, uniform_bergman_fan, AffineFunctional, LpResult, Polyhedron,
    QVector, Rational, Sense,
};

fn functional(n: usize) -> impl Strategy<Value = AffineFunctional> {
    prop::collection::vec(-3i64..=3, n + 1).prop_map(|c| {
        let c: Vec<Rational> = c.into_iter().map(Rational::from).collect();
        AffineFunctional::from_coefficients(&c)
    })
}

fn small_polyhedron() -> impl Strategy<Value = Polyhedron> {
    (1usize..=4).prop_flat_map(|n| {
        (prop::collection::vec(functional(n), 0..=1), prop::collection::vec(functional(n), 1..=6))
            .prop_map(move |(eqs, ineqs)| Polyhedron::new(n, eqs, ineqs))
    })
}

fn point(n: usize) -> impl Strategy<Value = QVector> {
    prop::collection::vec((-6i64..=6, 1i64..=3), n).prop_map(|xs| QVector(xs.into_iter().map(|(a, b)| q(a, b)).collect()))
}

fn lift_feasible(p: &Polyhedron, keep: &[usize], y: &[Rational]) -> bool {
    let n = p.ambient_dim();
    let fix: Vec<AffineFunctional> =
        keep.iter().zip(y).map(|(&i, yi)| AffineFunctional::coordinate(n, i, -yi.clone(), false)).collect();
    lp_optimize(&QVector::zeros(n), &p.with_constraints(&fix, &[]), Sense::Minimize).unwrap().is_feasible()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn projection_agrees_with_lift_oracle(
        (p, keep, ys) in small_polyhedron().prop_flat_map(|p| {
            let n = p.ambient_dim();
            let keep = prop::sample::subsequence((0..n).collect::<Vec<_>>(), 1..=n);
            (Just(p), keep).prop_flat_map(|(p, keep)| {
                let k = keep.len();
                (Just(p), Just(keep), prop::collection::vec(point(k), 4))
            })
        })
    ) {
        let proj = fm_project(&p, &keep).unwrap();
        let mut ys = ys;
        if let Ok(x) = p.relative_interior_point() {
            ys.push(keep.iter().map(|&i| x[i].clone()).collect());
        }
        for y in ys {
            prop_assert_eq!(proj.contains_point(&y), lift_feasible(&p, &keep, &y), "y = {}", y);
        }
    }

    #[test]
    fn implicit_equalities_are_the_zero_slack_rows(p in small_polyhedron()) {
        prop_assume!(!p.is_empty());
        let tight = p.implicit_equalities();
        for (i, g) in p.inequalities().iter().enumerate() {
            let v = lp_optimize(&g.normal, &p, Sense::Maximize).unwrap();
            let zero = match v {
                LpResult::Optimal { value, .. } => (value + &g.offset).is_zero(),
                _ => false,
            };
            prop_assert_eq!(tight.contains(&i), zero, "row {}", i);
        }
    }

    #[test]
    fn optimal_points_are_feasible(p in small_polyhedron(), c in point(4)) {
        let n = p.ambient_dim();
        let obj = QVector(c.0[..n].to_vec());
        for sense in [Sense::Minimize, Sense::Maximize] {
            if let LpResult::Optimal { value, point } = lp_optimize(&obj, &p, sense).unwrap() {
                prop_assert!(p.contains_point(&point));
                prop_assert_eq!(obj.dot(&point), value);
            }
        }
    }

    #[test]
    fn hull_dimension_is_rank_of_differences(pts in (1usize..=4).prop_flat_map(|n| prop::collection::vec(point(n), 1..=5))) {
        let n = pts[0].dim();
        let h = hull_from_generators(n, &pts, &[], &[]).unwrap();
        let diffs: Vec<Vec<Rational>> = pts[1..].iter().map(|x| (x - &pts[0]).0).collect();
        prop_assert_eq!(h.dimension(), rank(&diffs) as i64);
        for x in &pts {
            prop_assert!(h.contains_point(x));
        }
    }

    #[test]
    fn canonical_form_is_a_fixed_point(p in small_polyhedron()) {
        let c = p.canonical();
        prop_assert!(c.is_canonical());
        prop_assert!(c.set_eq(&p));
        prop_assert_eq!(c.canonical().key(), c.key());
    }
}

#[test]
fn faces_of_faces_of_cones_are_faces() {
    for n in 2..=4 {
        let delta = uniform_bergman_fan(n, n - 1).unwrap();
        for cone in delta.cells() {
            for f in cone.faces() {
                assert!(is_face(&f, cone).unwrap());
                for g in f.faces() {
                    assert!(is_face(&g, cone).unwrap());
                }
                if is_face(cone, &f).unwrap() {
                    assert!(cone.set_eq(&f));
                }
            }
        }
    }
}
