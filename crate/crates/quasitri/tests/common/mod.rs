use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Signed;
use proptest::prelude::*;
use proptest::test_runner::TestRunner;
use quasitri::algebra::{
    abelianization, edge_path_presentation, homology, invariant_factors, smith_normal_form,
    IntegerMatrix, SparseMatrix,
};
use quasitri::{Simplex, SimplicialComplex, Vertex};

fn config() -> ProptestConfig {
    ProptestConfig {
        cases: 100,
        rng_seed: prop::test_runner::RngSeed::Fixed(0),
        failure_persistence: None,
        ..ProptestConfig::default()
    }
}

/// Boundary of the `d+1`-simplex on `0..=d+1`, stellarly subdivided at the
/// faces picked by `picks` so the result is a random `d`-sphere.
fn random_sphere(d: usize, picks: &[(usize, usize)]) -> SimplicialComplex {
    let mut x = SimplicialComplex::simplex_boundary(&Simplex::ints(
        &(0..=d as i64 + 1).collect::<Vec<_>>(),
    ));
    for (next, &(dim, idx)) in (d as i64 + 2..).zip(picks) {
        let faces = x.faces((dim % (d + 1)) as isize);
        let alpha = faces[idx % faces.len()].clone();
        x = x.stellar_subdivide(&alpha, Vertex::Int(next)).unwrap();
    }
    x
}

/// Legal bistellar moves `(alpha, beta)`: the link of `alpha` is the
/// boundary of a simplex `beta` that is not a face.
fn legal_moves(x: &SimplicialComplex) -> Vec<(Simplex, Simplex)> {
    let d = x.dim();
    let mut out = Vec::new();
    for k in 0..=d {
        for alpha in x.faces(k) {
            let lk = x.link(&alpha).unwrap();
            let beta = Simplex::new(lk.vertices());
            if beta.dim() == d - k
                && lk == SimplicialComplex::simplex_boundary(&beta)
                && !x.contains_face(&beta)
            {
                out.push((alpha, beta));
            }
        }
    }
    out
}

fn picks() -> impl Strategy<Value = Vec<(usize, usize)>> {
    prop::collection::vec((0usize..4, 0usize..1000), 0..8)
}

pub fn stellar_then_vertex_removal_restores() -> Result<(), String> {
    TestRunner::new(config())
        .run(&(2usize..=3, picks(), 0usize..1000), |(d, p, idx)| {
            let x = random_sphere(d, &p);
            let facet = x.facets()[idx % x.num_facets()].clone();
            let u = Vertex::Int(10_000);
            let y = x.stellar_subdivide(&facet, u.clone()).unwrap();
            prop_assert_eq!(y.num_vertices(), x.num_vertices() + 1);
            prop_assert_eq!(y.euler_characteristic(), x.euler_characteristic());
            let back = y.bistellar_move(&Simplex::new([u]), &facet).unwrap();
            prop_assert_eq!(back, x);
            Ok(())
        })
        .map_err(|e| e.to_string())
}
pub fn bistellar_move_is_reversible() -> Result<(), String> {
    TestRunner::new(config())
        .run(&(2usize..=3, picks(), 0usize..1000), |(d, p, idx)| {
            let x = random_sphere(d, &p);
            let moves = legal_moves(&x);
            prop_assume!(!moves.is_empty());
            let (alpha, beta) = moves[idx % moves.len()].clone();
            let y = x.bistellar_move(&alpha, &beta).unwrap();
            prop_assert_eq!(y.euler_characteristic(), x.euler_characteristic());
            prop_assert_eq!(homology(&y), homology(&x));
            prop_assert_eq!(y.bistellar_move(&beta, &alpha).unwrap(), x);
            Ok(())
        })
        .map_err(|e| e.to_string())
}
pub fn snf_identity() -> Result<(), String> {
    TestRunner::new(config())
        .run(
            &(1usize..=40, 1usize..=40, any::<u64>()),
            |(rows, cols, seed)| {
                let mut s = seed;
                let mut next = || {
                    s = s
                        .wrapping_mul(6364136223846793005)
                        .wrapping_add(1442695040888963407);
                    ((s >> 33) % 19) as i64 - 9
                };
                let entries: Vec<Vec<i64>> = (0..rows)
                    .map(|_| (0..cols).map(|_| next()).collect())
                    .collect();
                let a = IntegerMatrix::from_rows(&entries);
                let snf = smith_normal_form(&a);
                prop_assert!(snf.u.mul(&a).mul(&snf.v) == snf.d);
                prop_assert!(snf.verify(&a));
                let mut sparse = SparseMatrix::new(rows, cols);
                for (i, r) in entries.iter().enumerate() {
                    for (j, &x) in r.iter().enumerate() {
                        sparse.push(i, j, x);
                    }
                }
                let elim = invariant_factors(&sparse);
                prop_assert_eq!(elim.rank, snf.rank);
                let nontrivial: Vec<BigInt> = snf
                    .invariant_factors()
                    .into_iter()
                    .filter(|f| f != &BigInt::from(1))
                    .collect();
                prop_assert_eq!(elim.torsion, nontrivial);
                if rows == cols && snf.rank == rows {
                    let prod: BigInt = snf.invariant_factors().iter().product();
                    prop_assert_eq!(prod, a.determinant().abs());
                }
                Ok(())
            },
        )
        .map_err(|e| e.to_string())
}
pub fn connected_sum_vertex_count() -> Result<(), String> {
    TestRunner::new(config())
        .run(
            &(2usize..=3, picks(), picks(), 0usize..1000, 0usize..1000),
            |(d, p, q, i, j)| {
                let x = random_sphere(d, &p);
                let y = random_sphere(d, &q)
                    .relabel(|v| Vertex::Int(v.as_int().unwrap() + 1000))
                    .unwrap();
                let s1 = x.facets()[i % x.num_facets()].clone();
                let s2 = y.facets()[j % y.num_facets()].clone();
                let psi: BTreeMap<Vertex, Vertex> = s1
                    .vertices()
                    .iter()
                    .cloned()
                    .zip(s2.vertices().iter().cloned())
                    .collect();
                let z = x.connected_sum(&y, &s1, &s2, &psi).unwrap();
                prop_assert_eq!(
                    z.num_vertices(),
                    x.num_vertices() + y.num_vertices() - d - 1
                );
                prop_assert!(z.is_closed_pseudomanifold());
                Ok(())
            },
        )
        .map_err(|e| e.to_string())
}
pub fn abelianized_edge_path_group_is_h1() -> Result<(), String> {
    TestRunner::new(config())
        .run(
            &(prop::collection::vec((0i64..8, 0i64..8, 0i64..8), 1..16),),
            |(tris,)| {
                let facets: Vec<Simplex> = tris
                    .iter()
                    .filter(|(a, b, c)| a != b && b != c && a != c)
                    .map(|&(a, b, c)| Simplex::ints(&[a, b, c]))
                    .collect();
                prop_assume!(!facets.is_empty());
                let x = SimplicialComplex::from_facets(facets);
                prop_assume!(x.is_connected());
                let base = x.vertices()[0].clone();
                let p = edge_path_presentation(&x, &base).unwrap();
                prop_assert_eq!(abelianization(&p.presentation), homology(&x).degree(1));
                Ok(())
            },
        )
        .map_err(|e| e.to_string())
}

pub type Suite = fn() -> Result<(), String>;

/// Every randomized suite by name.
#[allow(dead_code)]
pub const SUITES: [(&str, Suite); 5] = [
    (
        "stellar_then_vertex_removal_restores",
        stellar_then_vertex_removal_restores,
    ),
    ("bistellar_move_is_reversible", bistellar_move_is_reversible),
    ("snf_identity", snf_identity),
    ("connected_sum_vertex_count", connected_sum_vertex_count),
    (
        "abelianized_edge_path_group_is_h1",
        abelianized_edge_path_group_is_h1,
    ),
];
