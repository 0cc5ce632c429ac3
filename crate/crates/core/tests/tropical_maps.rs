use proptest::prelude::*;
use tropconn::maps::is_generic_basis;
use tropconn::{
    change_coordinates, generic_basis, linear_image, lp_optimize, q, root_valuations, tropical_hypersurface,
    uniform_bergman_fan, IntegerMatrix, Polyhedron, QVector, Rational, Sense, TropicalPolynomial, ValuedUnivariate,
};

fn rat(max_den: i64) -> impl Strategy<Value = Rational> {
    (-8i64..=8, 1..=max_den).prop_map(|(a, b)| q(a, b))
}

fn univariate() -> impl Strategy<Value = ValuedUnivariate> {
    prop::collection::btree_map(0u64..=6, rat(4), 2..=5)
        .prop_map(|terms| ValuedUnivariate::new(terms.into_iter().collect()).unwrap())
}

fn unimodular(n: usize) -> impl Strategy<Value = IntegerMatrix> {
    // products of elementary row operations
    prop::collection::vec((0..n, 0..n, -2i64..=2), 0..6).prop_map(move |ops| {
        let mut m = IntegerMatrix::identity(n).entries().to_vec();
        for (i, j, k) in ops {
            if i != j {
                for c in 0..n {
                    m[i][c] += k * m[j][c];
                }
            }
        }
        IntegerMatrix::new(m).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn multiplicities_sum_to_the_exponent_span(f in univariate()) {
        let r = root_valuations(&f).unwrap();
        prop_assert_eq!(r.total_multiplicity(), f.degree_span());
        // each root valuation balances two terms of the tropical polynomial
        for v in r.valuations() {
            let t = f.to_tropical();
            prop_assert!(t.min_attained_twice(&[v]));
        }
    }

    #[test]
    fn min_shift_leaves_the_hypersurface_alone(
        vals in prop::collection::vec(rat(3), 4),
        c in rat(3),
    ) {
        let exps = [vec![0, 0], vec![1, 0], vec![0, 1], vec![1, 1]];
        let f = TropicalPolynomial::new(2, exps.iter().cloned().zip(vals.iter().cloned()).collect()).unwrap();
        let g = TropicalPolynomial::new(2, exps.iter().cloned().zip(vals.iter().map(|v| v + &c)).collect()).unwrap();
        prop_assert!(tropical_hypersurface(&f).unwrap().supports_equal(&tropical_hypersurface(&g).unwrap()));
    }

    #[test]
    fn determinant_is_multiplicative(a in unimodular(3), b in unimodular(3)) {
        let ab = a.mul(&b).unwrap();
        prop_assert_eq!(ab.determinant().unwrap(), a.determinant().unwrap() * b.determinant().unwrap());
        prop_assert!(ab.is_unimodular());
        prop_assert_eq!(a.mul(&a.inverse().unwrap()).unwrap(), IntegerMatrix::identity(3));
    }

    #[test]
    fn coordinate_changes_keep_connectivity(u in unimodular(3), d in 1usize..=2) {
        let fan = uniform_bergman_fan(3, d).unwrap();
        let moved = change_coordinates(&fan, &u).unwrap();
        prop_assert_eq!(moved.is_connected().unwrap(), fan.is_connected().unwrap());
        prop_assert_eq!(
            moved.is_connected_through_codim1().unwrap(),
            fan.is_connected_through_codim1().unwrap()
        );
    }

    #[test]
    fn linear_images_cover_and_are_covered(
        entries in prop::collection::vec(prop::collection::vec(-2i64..=2, 3), 2),
    ) {
        let fan = uniform_bergman_fan(3, 1).unwrap();
        let a = IntegerMatrix::new(entries).unwrap();
        let image = linear_image(&fan, &a).unwrap();
        prop_assert!(image.validate().is_ok());
        for cell in fan.cells() {
            let p = cell.relative_interior_point().unwrap();
            prop_assert!(image.contains_point(&a.apply(&p).unwrap()));
        }
        for cell in image.cells() {
            let y = cell.relative_interior_point().unwrap();
            prop_assert!(fan.cells().iter().any(|c| has_preimage(c, &a, &y)));
        }
    }
}

/// LP feasibility of `{x ∈ c : A x = y}`.
fn has_preimage(c: &Polyhedron, a: &IntegerMatrix, y: &QVector) -> bool {
    let n = c.ambient_dim();
    let eqs: Vec<_> = (0..a.rows())
        .map(|i| {
            let row: QVector = a.row(i).iter().map(|&x| Rational::from(x)).collect();
            tropconn::AffineFunctional::new(row, -y[i].clone())
        })
        .collect();
    lp_optimize(&QVector::zeros(n), &c.with_constraints(&eqs, &[]), Sense::Minimize).unwrap().is_feasible()
}

#[test]
fn generic_bases_pass_the_independent_checker() {
    for n in 2..=4 {
        let fan = uniform_bergman_fan(n, n - 1).unwrap();
        let b = generic_basis(&fan).unwrap();
        assert!(b.is_unimodular());
        assert!(is_generic_basis(&fan, &b), "n = {n}: {b}");
        assert!(!is_generic_basis(&fan, &IntegerMatrix::identity(n)) || n == 1);
    }
}
