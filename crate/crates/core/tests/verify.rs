use chain_endo::{
    ideal_check, verify, verify_all, Bounds, Claim, IdealSide, ProjectionSpec, SimplexSpec,
    SubsetSelector, VerifyOptions, VertexFilter, VertexSet,
};

const FAILING: [Claim; 3] = [
    Claim::TopSingleton,
    Claim::TopDisjoint,
    Claim::TopIntersection,
];

#[test]
fn claims_on_small_chains() {
    let bounds = Bounds::up_to(4).with_vertices(VertexFilter::All);
    let reports = verify_all(&bounds, &VerifyOptions::default()).unwrap();
    assert_eq!(reports.len(), Claim::ALL.len());
    for (claim, report) in Claim::ALL.iter().zip(&reports) {
        assert_eq!(report.claim, claim.id());
        assert!(report.searched > 0, "{claim} searched nothing");
        assert_eq!(
            report.holds(),
            !FAILING.contains(claim),
            "{claim}: {report:?}"
        );
        assert_eq!(report.witnesses.len() as u64, report.violations.min(10));
    }
}

#[test]
fn full_chain_set_identities_fail_with_witnesses() {
    let report = verify(
        Claim::TopIntersection,
        &Bounds::exactly(4).with_vertices(VertexFilter::Full),
        &VerifyOptions::default(),
    )
    .unwrap();
    assert!(!report.holds());
    let tables: Vec<&[usize]> = report
        .witnesses
        .iter()
        .map(|w| w.endos["alpha"].values())
        .collect();
    assert!(tables.contains(&&[1usize, 1, 1, 1][..]), "{tables:?}");
    assert!(tables.contains(&&[2usize, 2, 2, 2][..]), "{tables:?}");
}

#[test]
fn singleton_holds_when_the_first_vertex_is_zero() {
    for points in [vec![0, 3], vec![0, 1, 4], vec![0, 2, 3, 5]] {
        let bounds = Bounds::exactly(6).with_vertices(VertexFilter::Exact(points.clone()));
        let report = verify(Claim::TopSingleton, &bounds, &VerifyOptions::default()).unwrap();
        assert!(report.holds(), "{points:?}");
    }
}

#[test]
fn restricted_projection_and_p_filters() {
    let opts = VerifyOptions::default();
    let all = verify(Claim::Leibniz, &Bounds::exactly(5), &opts).unwrap();
    let one = verify(
        Claim::Leibniz,
        &Bounds::exactly(5).with_projection(1, 3),
        &opts,
    )
    .unwrap();
    assert!(one.holds() && one.searched > 0 && one.searched < all.searched);
    let p = verify(Claim::PropSpCount, &Bounds::exactly(7).with_p(4), &opts).unwrap();
    assert_eq!(p.searched, 1);
    assert!(p.holds());
}

#[test]
fn nilpotent_maps_form_a_two_sided_ideal() {
    let report = ideal_check(
        &SubsetSelector::N { n: 5 },
        &SubsetSelector::On { n: 5 },
        IdealSide::TwoSided,
        &VerifyOptions::default(),
    )
    .unwrap();
    assert!(report.holds());
    assert_eq!(report.searched, 2 * 14 * 42);
}

#[test]
fn sub_simplex_absorbs_d_on_the_left_only() {
    let simplex = SimplexSpec::full(5).unwrap();
    let d = ProjectionSpec::new(simplex, 1, 3).unwrap();
    let sub = SubsetSelector::Simplex {
        simplex: SimplexSpec::new(VertexSet::new(5, vec![1, 2, 3]).unwrap()),
    };
    let host = SubsetSelector::D { projection: d };
    let opts = VerifyOptions::default();
    assert!(ideal_check(&sub, &host, IdealSide::Left, &opts)
        .unwrap()
        .holds());
    assert!(!ideal_check(&sub, &host, IdealSide::Right, &opts)
        .unwrap()
        .holds());
}
