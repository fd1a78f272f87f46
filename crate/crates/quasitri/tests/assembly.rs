use std::collections::BTreeSet;
use std::sync::OnceLock;

use quasitri::algebra::{homology, HomologyProfile};
use quasitri::assembly::*;
use quasitri::catalog::{resolve, TorusId};
use quasitri::charfun::Bounds;
use quasitri::recognition::{facet_set, LinkStatus, ReductionOptions};
use quasitri::{Error, Vertex};

fn t(s: &str) -> TorusId {
    s.parse().unwrap()
}

fn ts(s: &[&str]) -> Vec<TorusId> {
    s.iter().map(|x| t(x)).collect()
}

fn reports() -> &'static Vec<CensusReport> {
    static R: OnceLock<Vec<CensusReport>> = OnceLock::new();
    R.get_or_init(|| {
        let all: Vec<_> = census().iter().collect();
        verify_census(&all, ReductionOptions::default())
            .into_iter()
            .map(|r| r.unwrap())
            .collect()
    })
}

#[test]
fn glue_examples() {
    let s = glue_tori(t("T1"), t("T2")).unwrap();
    assert_eq!(s.homology, HomologyProfile::sphere(3));
    assert_eq!(s.identified, "S³");
    let rp = glue_tori(t("T3,0"), t("T4,0")).unwrap();
    assert_eq!(rp.homology.degree(1).to_string(), "Z_2");
    assert!(rp.orientable);
    assert_eq!(rp.identified, "RP³");
    let l5 = glue_tori(t("T4,0"), t("T9,0")).unwrap();
    assert_eq!(l5.homology.degree(1).to_string(), "Z_5");
    assert_eq!(l5.identified, "L(5,·)");
    let ss = glue_tori(t("T7,0"), t("T7,1")).unwrap();
    assert_eq!(ss.homology, HomologyProfile::parse("Z;Z;Z;Z").unwrap());
    assert_eq!(ss.identified, "S²×S¹");
}

#[test]
fn same_torus_twice_overlaps() {
    assert!(matches!(
        glue_tori(t("T4,0"), t("T4,0")),
        Err(Error::ToriOverlap(_))
    ));
    assert!(matches!(
        glue_tori(t("T1"), t("T1")),
        Err(Error::ToriOverlap(_))
    ));
}

#[test]
fn listed_gluings_have_expected_first_homology() {
    let claims = gluing_claims();
    assert_eq!(claims.iter().map(|c| c.families.len()).sum::<usize>(), 39);
    for claim in claims {
        for [a, b] in &claim.families {
            for (x, y) in gluing_instances(*a, *b, 1) {
                let r = glue_tori(x, y).unwrap_or_else(|e| panic!("{x} ∪ {y}: {e}"));
                assert!(r.orientable, "{x} ∪ {y}");
                assert_eq!(r.h1_order(), claim.p, "{x} ∪ {y}");
                assert!(r.consistent(), "{x} ∪ {y}");
                let name = match claim.p {
                    0 => "S²×S¹".to_string(),
                    1 => "S³".to_string(),
                    2 => "RP³".to_string(),
                    p => format!("L({p},·)"),
                };
                assert_eq!(r.identified, name, "{x} ∪ {y}");
            }
        }
    }
}

#[test]
fn census_specs() {
    assert_eq!(
        census_spec("5.1").unwrap().tori,
        ts(&["T1", "T2", "T3", "T2,7"])
    );
    assert_eq!(
        census_spec("6.8").unwrap().tori,
        ts(&["T1", "T2", "T1,7", "T3", "T2,7"])
    );
    assert_eq!(
        census_spec("7.4").unwrap().tori,
        ts(&["T9,0", "T3", "T7,0", "T4,0", "T1", "T3,7"])
    );
    match census_spec("9.9") {
        Err(Error::UnknownKey { available, .. }) => {
            assert!(available.contains("5.1") && available.contains("7.24"))
        }
        other => panic!("{other:?}"),
    }
    assert_eq!(
        census_entry("6.8").unwrap().note.as_deref(),
        Some("vertex minimal")
    );
}

#[test]
fn select_by_pattern() {
    let rect: Vec<usize> = select("5.*").unwrap().iter().map(|e| e.f0).collect();
    assert_eq!(rect, [14, 20, 24, 30, 17]);
    assert_eq!(select("*").unwrap().len(), 43);
    assert_eq!(select("6.8").unwrap().len(), 1);
    assert!(select("9.9").is_err());
}

#[test]
fn stated_vertex_counts() {
    let want: [&[usize]; 3] = [
        &[14, 20, 24, 30, 17],
        &[
            18, 21, 21, 27, 27, 37, 18, 21, 27, 21, 27, 37, 18, 21, 27, 37,
        ],
        &[
            28, 38, 25, 28, 25, 25, 25, 25, 28, 32, 38, 32, 42, 28, 28, 38, 32, 38, 28, 28, 38, 28,
        ],
    ];
    let got: Vec<usize> = census().iter().map(|e| e.f0).collect();
    assert_eq!(got, want.concat());
    for e in census() {
        assert_eq!(e.stated_sum().unwrap(), e.f0, "{}", e.key);
        let x = build_equilibrium(&e.spec().unwrap()).unwrap();
        assert_eq!(x.num_vertices(), e.f0, "{}", e.key);
        let union: BTreeSet<Vertex> = e
            .tori
            .iter()
            .flat_map(|&t| resolve(t).unwrap().complex.vertices())
            .collect();
        assert_eq!(x.num_vertices(), union.len() + e.tori.len());
    }
}

#[test]
fn apex_link_is_union_of_tori() {
    let spec = census_spec("5.1").unwrap();
    let x = build_equilibrium(&spec).unwrap();
    let link = x.vertex_link(&Vertex::name("V2")).unwrap();
    let want = resolve(t("T1"))
        .unwrap()
        .complex
        .union(&resolve(t("T2")).unwrap().complex);
    assert_eq!(facet_set(&link), facet_set(&want));
    assert_eq!(x.euler_characteristic(), 4);
}

#[test]
fn hexagon_second_homology() {
    let x = build_equilibrium(&census_spec("7.7").unwrap()).unwrap();
    assert_eq!(x.num_vertices(), 25);
    assert_eq!(
        homology(&x).degree(2),
        quasitri::algebra::HomologyGroup::free(4)
    );
}

#[test]
fn invalid_specs_rejected() {
    let bad = AssemblySpec::new(ts(&["T1", "T1,7", "T2"])).unwrap();
    assert!(matches!(build_equilibrium(&bad), Err(Error::ApexLink(_))));
    let twice = AssemblySpec::new(ts(&["T1", "T2", "T3", "T2"])).unwrap();
    assert!(matches!(
        build_equilibrium(&twice),
        Err(Error::ToriOverlap(_))
    ));
    assert!(AssemblySpec::new(ts(&["T1", "T2"])).is_err());
}

#[test]
fn rotation_gives_isomorphic_complex() {
    let spec = census_spec("5.1").unwrap();
    let mut rotated = spec.tori.clone();
    rotated.rotate_left(1);
    let x = build_equilibrium(&spec).unwrap();
    let y = build_equilibrium(&AssemblySpec::new(rotated).unwrap()).unwrap();
    assert!(x.is_isomorphic(&y).is_some());
}

#[test]
fn four_manifold_report_shape() {
    let x = build_equilibrium(&census_spec("5.1").unwrap()).unwrap();
    let r = verify_closed_4manifold(&x, ReductionOptions::default()).unwrap();
    let v = serde_json::to_value(&r).unwrap();
    let keys: BTreeSet<&str> = v.as_object().unwrap().keys().map(|k| k.as_str()).collect();
    assert_eq!(
        keys,
        BTreeSet::from(["f_vector", "euler", "homology", "links"])
    );
    assert_eq!(
        v["links"][0]
            .as_object()
            .unwrap()
            .keys()
            .cloned()
            .collect::<BTreeSet<_>>()
            .len(),
        2
    );
    assert!(r.passes(true));
    let t1 = resolve(t("T1")).unwrap().complex.clone();
    assert!(verify_closed_4manifold(&t1, ReductionOptions::default()).is_err());
}

#[test]
fn every_census_complex_is_a_closed_simply_connected_4_manifold() {
    for r in reports() {
        assert!(r.f0_ok(), "{}", r.key);
        assert!(r.homology_ok(), "{}: {}", r.key, r.manifold.homology);
        assert!(
            r.manifold.passes(true),
            "{}: {:?}",
            r.key,
            r.manifold.uncertified()
        );
        assert!(r
            .manifold
            .links
            .iter()
            .all(|l| l.status != LinkStatus::Uncertified));
    }
}

#[test]
fn sectors_match_characteristic_data() {
    let mismatched: Vec<&str> = reports()
        .iter()
        .filter(|r| !r.sectors_ok())
        .map(|r| r.key.as_str())
        .collect();
    assert_eq!(mismatched, ["6.10", "6.11"]);
    let unrealized: Vec<&str> = reports()
        .iter()
        .filter(|r| !r.realizes_data)
        .map(|r| r.key.as_str())
        .collect();
    assert_eq!(unrealized, ["6.10", "6.11"]);
    for r in reports().iter().filter(|r| r.realizes_data) {
        assert!(r.families_match, "{}", r.key);
    }
}

#[test]
fn swapped_pentagon_assignments() {
    let b = Bounds::pentagon();
    assert_eq!(
        realized_data(census_entry("6.10").unwrap(), &b),
        [(2, 0, vec![1, 3])]
    );
    assert_eq!(
        realized_data(census_entry("6.11").unwrap(), &b),
        [(-2, 0, vec![1, -1])]
    );
}
