use chain_endo::{
    add_via_prefix_mins, compose_via_runs, Endo, ProjectionSpec, SimplexSpec, VertexSet,
};
use proptest::prelude::*;
use proptest::sample::subsequence;

/// A vertex set of a chain of size 1..=9.
fn vertex_set() -> impl Strategy<Value = VertexSet> {
    (1usize..=9)
        .prop_flat_map(|n| (Just(n), subsequence((0..n).collect::<Vec<_>>(), 1..=n)))
        .prop_map(|(n, points)| VertexSet::new(n, points).unwrap())
}

fn member(vs: &VertexSet) -> impl Strategy<Value = Endo> {
    let (n, points) = (vs.n(), vs.points().to_vec());
    proptest::collection::vec(0..points.len(), n).prop_map(move |mut idx| {
        idx.sort_unstable();
        Endo::from_table(n, idx.into_iter().map(|i| points[i]).collect()).unwrap()
    })
}

fn pair() -> impl Strategy<Value = (VertexSet, Endo, Endo)> {
    vertex_set().prop_flat_map(|vs| {
        let (a, b) = (member(&vs), member(&vs));
        (Just(vs), a, b)
    })
}

fn triple() -> impl Strategy<Value = (VertexSet, Endo, Endo, Endo)> {
    vertex_set().prop_flat_map(|vs| {
        let (a, b, c) = (member(&vs), member(&vs), member(&vs));
        (Just(vs), a, b, c)
    })
}

/// A simplex with at least two vertices, a projection range, and a pair.
fn projected_pair() -> impl Strategy<Value = (ProjectionSpec, Endo, Endo)> {
    vertex_set()
        .prop_filter("needs two vertices", |vs| vs.k() >= 2)
        .prop_flat_map(|vs| {
            let k = vs.k();
            let range = (1..k).prop_flat_map(|m| (0..m, Just(m)));
            (Just(vs.clone()), range, member(&vs), member(&vs))
        })
        .prop_map(|(vs, (l, m), a, b)| {
            (
                ProjectionSpec::new(SimplexSpec::new(vs), l, m).unwrap(),
                a,
                b,
            )
        })
}

fn is_monotone(e: &Endo) -> bool {
    e.values().windows(2).all(|w| w[0] <= w[1])
}

proptest! {
    #[test]
    fn runs_round_trip((vs, a, _b) in pair()) {
        let form = a.runs_relative_to(&vs).unwrap();
        prop_assert_eq!(form.multiplicities().iter().sum::<usize>(), vs.n());
        prop_assert_eq!(Endo::from_runs(&form), a);
    }

    #[test]
    fn prefix_min_addition_is_the_join((vs, a, b) in pair()) {
        let sum = add_via_prefix_mins(
            &a.runs_relative_to(&vs).unwrap(),
            &b.runs_relative_to(&vs).unwrap(),
        )
        .unwrap();
        prop_assert_eq!(sum.to_endo(), a.add(&b).unwrap());
    }

    #[test]
    fn block_sum_product_is_composition((vs, a, b) in pair()) {
        let product = compose_via_runs(&a.runs_relative_to(&vs).unwrap(), &b, &vs).unwrap();
        let direct = a.compose(&b).unwrap();
        prop_assert_eq!(product.to_endo(), direct.clone());
        for t in 0..vs.n() {
            prop_assert_eq!(direct.at(t), b.at(a.at(t)));
        }
    }

    #[test]
    fn simplex_is_a_subsemiring((vs, a, b) in pair()) {
        let simplex = SimplexSpec::new(vs);
        for e in [a.add(&b).unwrap(), a.compose(&b).unwrap()] {
            prop_assert!(is_monotone(&e));
            prop_assert!(simplex.contains(&e));
        }
    }

    #[test]
    fn semiring_laws((_vs, x, y, z) in triple()) {
        let add = |p: &Endo, q: &Endo| p.add(q).unwrap();
        let mul = |p: &Endo, q: &Endo| p.compose(q).unwrap();
        prop_assert_eq!(add(&x, &y), add(&y, &x));
        prop_assert_eq!(add(&x, &x), x.clone());
        prop_assert_eq!(add(&add(&x, &y), &z), add(&x, &add(&y, &z)));
        prop_assert_eq!(mul(&mul(&x, &y), &z), mul(&x, &mul(&y, &z)));
        prop_assert_eq!(mul(&add(&x, &y), &z), add(&mul(&x, &z), &mul(&y, &z)));
        prop_assert_eq!(mul(&x, &add(&y, &z)), add(&mul(&x, &y), &mul(&x, &z)));
    }

    #[test]
    fn projection_is_the_clamp((d, a, _b) in projected_pair()) {
        let (lo, hi) = (d.floor(), d.ceiling());
        let expected: Vec<usize> = a.values().iter().map(|&v| v.max(lo).min(hi)).collect();
        let projected = d.project(&a).unwrap();
        prop_assert_eq!(projected.values(), &expected[..]);
        prop_assert_eq!(d.clamp(&a).unwrap(), projected.clone());
        prop_assert!(d.image_simplex().contains(&projected));
    }

    #[test]
    fn projection_is_idempotent((d, a, _b) in projected_pair()) {
        let once = d.project(&a).unwrap();
        prop_assert_eq!(d.project(&once).unwrap(), once);
    }

    #[test]
    fn projection_is_monotone((d, a, b) in projected_pair()) {
        let upper = a.add(&b).unwrap();
        prop_assert!(a.leq(&upper).unwrap());
        prop_assert!(d.project(&a).unwrap().leq(&d.project(&upper).unwrap()).unwrap());
    }

    #[test]
    fn projection_is_additive((d, a, b) in projected_pair()) {
        prop_assert!(d.additivity(&a, &b).unwrap());
    }

    #[test]
    fn leibniz_holds_on_d((d, a, b) in projected_pair()) {
        let both = d.in_d(&a).unwrap() && d.in_d(&b).unwrap();
        if both {
            let out = d.leibniz(&a, &b).unwrap();
            prop_assert!(out.holds, "lhs {} rhs {}", out.lhs, out.rhs);
            // the one-sided bound used when α ∈ S and β ∈ R
            let lower = d.project(&a).unwrap().compose(&b).unwrap();
            prop_assert!(lower.leq(&out.lhs).unwrap());
        }
    }

    #[test]
    fn s_and_r_are_disjoint((d, a, _b) in projected_pair()) {
        let m = d.membership(&a).unwrap();
        prop_assert!(!m.in_both());
    }
}

#[test]
fn composition_is_not_commutative() {
    let a = Endo::from_table(5, vec![0, 0, 2, 2, 4]).unwrap();
    let b = Endo::from_table(5, vec![2, 2, 2, 4, 4]).unwrap();
    assert_eq!(a.compose(&b).unwrap().values(), &[2, 2, 2, 2, 4]);
    assert_eq!(b.compose(&a).unwrap().values(), &[2, 2, 2, 4, 4]);
    assert_ne!(a.compose(&b).unwrap(), b.compose(&a).unwrap());
}
