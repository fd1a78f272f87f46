use quasitri::algebra::{homology, HomologyProfile};
use quasitri::catalog::{self, seven_vertex_torus, TorusId};
use quasitri::recognition::*;
use quasitri::SimplicialComplex;

fn union(a: TorusId, b: TorusId) -> SimplicialComplex {
    catalog::solid_torus(a)
        .unwrap()
        .complex
        .union(&catalog::solid_torus(b).unwrap().complex)
}

#[test]
fn exactly_three_seven_vertex_solid_tori() {
    let found = enumerate_solid_tori_7(&seven_vertex_torus());
    assert_eq!(found.len(), 3);
    let mut expected: Vec<SimplicialComplex> =
        (1..=3).map(|j| catalog::base_torus(j).unwrap()).collect();
    expected.sort_by(|a, b| a.facets().cmp(b.facets()));
    assert_eq!(found, expected);
    for x in &found {
        assert_eq!(x.num_facets(), 7);
    }
}

#[test]
fn interior_triangles_split_evenly() {
    let t = seven_vertex_torus();
    let found = enumerate_solid_tori_7(&t);
    let mut seen = std::collections::BTreeSet::new();
    for x in &found {
        let interior: Vec<_> = x.faces(2).into_iter().filter(|s| !t.is_facet(s)).collect();
        assert_eq!(interior.len(), 7);
        seen.extend(interior);
    }
    assert_eq!(seen.len(), 21);
}

#[test]
#[ignore = "slow: enumerates every seven-vertex neighborly surface"]
fn seven_vertex_torus_is_unique() {
    let all = enumerate_neighborly_surfaces_7();
    assert_eq!(all.len(), 120);
    let t = seven_vertex_torus();
    for x in &all {
        assert!(x.is_isomorphic(&t).is_some());
    }
}

#[test]
fn sphere_from_two_base_tori_is_certified() {
    let s = union(TorusId::Base(1), TorusId::Base(2));
    assert_eq!(s.num_vertices(), 7);
    assert!(is_closed_3_manifold(&s));
    for v in s.vertices() {
        assert!(is_sphere_2d(&s.vertex_link(&v).unwrap()));
    }
    let c = bistellar_reduce(&s, 1000, 0).unwrap();
    assert!(c.certified());
    assert_eq!(c.replay(&s).unwrap(), c.terminal);
    let again = bistellar_reduce(&s, 1000, 0).unwrap();
    assert_eq!(c, again);
}

#[test]
fn lens_space_never_certified() {
    let l = union(TorusId::Base(2), TorusId::indexed(4, 0));
    assert!(is_closed_3_manifold(&l));
    let c = bistellar_reduce(&l, 3000, 0).unwrap();
    assert!(!c.certified());
    assert_eq!(c.verdict, Verdict::BudgetExhausted);
    assert_eq!(homology(&c.terminal), homology(&l));
    c.replay(&l).unwrap();
}

#[test]
fn catalog_spheres_certify() {
    for (a, b) in [
        (TorusId::Base(1), TorusId::indexed(4, 0)),
        (TorusId::indexed(7, 0), TorusId::Base(1)),
        (TorusId::indexed(4, 0), TorusId::indexed(7, 0)),
    ] {
        let s = union(a, b);
        assert_eq!(homology(&s), HomologyProfile::sphere(3), "{a} {b}");
        let c = bistellar_reduce(&s, DEFAULT_BUDGET, 0).unwrap();
        assert!(c.certified(), "{a} {b}: {} moves", c.moves.len());
        c.replay(&s).unwrap();
    }
}

#[test]
fn has_boundary_is_not_closed() {
    let t1 = catalog::base_torus(1).unwrap();
    assert!(!is_closed_3_manifold(&t1));
    assert!(is_3_manifold(&t1));
    let r = is_closed_manifold(&t1, 3, ReductionOptions::default()).unwrap();
    assert!(!r.passes(false));
}

#[test]
fn ball_boundaries_are_spheres() {
    for f in [4, 7] {
        let b = catalog::ball(f, 0).unwrap();
        assert!(is_3_manifold(&b));
        assert_eq!(homology(&b), HomologyProfile::parse("Z;0;0;0").unwrap());
        assert!(is_sphere_2d(&b.boundary_complex().unwrap()));
    }
    assert_eq!(catalog::ball(7, 0).unwrap().num_vertices(), 19);
}
