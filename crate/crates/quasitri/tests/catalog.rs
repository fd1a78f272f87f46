use quasitri::algebra::{homology, killed_class, loop_class, reference_loops, HomologyProfile};
use quasitri::catalog::{self, seven_vertex_torus, TorusId};
use quasitri::complex::digits;
use quasitri::{SimplicialComplex, Vertex};

fn ints(s: &str) -> Vec<Vertex> {
    s.chars()
        .map(|c| Vertex::Int(c.to_digit(10).unwrap() as i64))
        .collect()
}

#[test]
fn seven_vertex_torus_invariants() {
    let t = seven_vertex_torus();
    assert_eq!(t.f_vector().0, vec![7, 21, 14]);
    assert_eq!(homology(&t), HomologyProfile::parse("Z;Z^2;Z").unwrap());
}

#[test]
fn loops_in_reference_basis() {
    let t = seven_vertex_torus();
    let [a, b] = reference_loops();
    let cases = [
        ("01234560", (3, 1)),
        ("05316420", (1, -2)),
        ("03625140", (2, 3)),
        ("012340", (2, 1)),
        ("016420", (1, -1)),
        ("025140", (1, 2)),
        ("0340", (1, 1)),
        ("0160", (1, 0)),
        ("0250", (0, 1)),
    ];
    for (path, want) in cases {
        let got = loop_class(&t, &ints(path), [&a, &b]).unwrap();
        assert!(
            got == want || got == (-want.0, -want.1),
            "{path}: {got:?} vs {want:?}"
        );
    }
}

#[test]
fn base_tori_kill_expected_classes() {
    for j in 1..=3u8 {
        let x = catalog::base_torus(j).unwrap();
        assert_eq!(killed_class(&x).unwrap(), catalog::KILLED[j as usize - 1]);
    }
}

#[test]
fn first_moves_give_nine_vertices() {
    let t = catalog::t10().unwrap();
    assert_eq!(t.num_vertices(), 9);
    assert!(t.contains_face(&digits("012")));
    assert_eq!(t.boundary_complex().unwrap(), seven_vertex_torus());
    assert_eq!(catalog::t10_prime().unwrap().num_vertices(), 10);
}

#[test]
fn family_seven_matches_listing() {
    for n in [0, 3] {
        let q = catalog::solid_torus(TorusId::indexed(7, n)).unwrap();
        assert_eq!(q.complex, catalog::t7_listed(n));
    }
}

#[test]
fn catalog_suite() {
    let solid = HomologyProfile::parse("Z;Z;0;0").unwrap();
    for j in 1..=9u8 {
        for n in 0..=8u32 {
            let e = catalog::solid_torus(TorusId::indexed(j, n)).unwrap();
            let x: &SimplicialComplex = &e.complex;
            assert_eq!(x.num_vertices(), e.id.expected_f0(), "{}", e.id);
            assert_eq!(
                x.boundary_complex().unwrap(),
                seven_vertex_torus(),
                "{}",
                e.id
            );
            assert!(x.is_pure() && x.dim() == 3, "{}", e.id);
            assert_eq!(homology(x), solid, "{}", e.id);
            assert_eq!(killed_class(x).unwrap(), e.killed, "{}", e.id);
        }
    }
}
