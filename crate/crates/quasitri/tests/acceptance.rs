use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};

use quasitri::algebra::{homology, killed_class, HomologyGroup, HomologyProfile};
use quasitri::assembly::*;
use quasitri::catalog::{self, seven_vertex_torus, TorusId};
use quasitri::charfun::*;
use quasitri::recognition::{enumerate_solid_tori_7, is_3_manifold, ReductionOptions};

mod common;

type Check = Result<String, String>;
type Criterion = fn() -> Check;

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn vertex_counts() -> Check {
    let stated: [&[usize]; 3] = [
        &[14, 20, 24, 30, 17],
        &[
            18, 21, 21, 27, 27, 37, 18, 21, 27, 21, 27, 37, 18, 21, 27, 37,
        ],
        &[
            28, 38, 25, 28, 25, 25, 25, 25, 28, 32, 38, 32, 42, 28, 28, 38, 32, 38, 28, 28, 38, 28,
        ],
    ];
    let stated = stated.concat();
    let entries = census();
    ensure(
        entries.len() == stated.len(),
        format!("{} census entries", entries.len()),
    )?;
    for (e, &want) in entries.iter().zip(&stated) {
        let x =
            build_equilibrium(&e.spec().map_err(|x| x.to_string())?).map_err(|x| x.to_string())?;
        ensure(
            x.num_vertices() == want,
            format!("{}: f0 = {}, stated {want}", e.key, x.num_vertices()),
        )?;
        ensure(
            e.stated_sum() == Ok(want),
            format!("{}: summands do not add up", e.key),
        )?;
    }
    Ok(format!(
        "{} complexes match their stated vertex counts",
        stated.len()
    ))
}

fn catalog_suite() -> Check {
    let t = seven_vertex_torus();
    let solid = HomologyProfile::parse("Z;Z;0;0").unwrap();
    let mut ids: Vec<TorusId> = (1..=3).map(TorusId::Base).collect();
    for j in 1..=9 {
        ids.extend((0..=8).map(|n| TorusId::indexed(j, n)));
    }
    for &id in &ids {
        let e = catalog::resolve(id).map_err(|x| x.to_string())?;
        let x = &e.complex;
        ensure(
            x.boundary_complex().ok().as_ref() == Some(&t),
            format!("{id}: boundary"),
        )?;
        ensure(
            homology(x) == solid,
            format!("{id}: homology {}", homology(x)),
        )?;
        ensure(is_3_manifold(x), format!("{id}: vertex links"))?;
        ensure(
            x.num_vertices() == id.expected_f0(),
            format!("{id}: f0 = {}", x.num_vertices()),
        )?;
        let k = killed_class(x).map_err(|x| x.to_string())?;
        ensure(
            k == id.killed() && k == e.killed,
            format!("{id}: killed class {k:?}"),
        )?;
    }
    Ok(format!("{} solid tori checked", ids.len()))
}

fn gluing_suite() -> Check {
    let mut glued = 0;
    for claim in gluing_claims() {
        for [a, b] in &claim.families {
            for (x, y) in gluing_instances(*a, *b, 2) {
                let r = glue_tori(x, y).map_err(|e| format!("{x} ∪ {y}: {e}"))?;
                ensure(r.orientable, format!("{x} ∪ {y}: not orientable"))?;
                ensure(
                    r.h1_order() == claim.p,
                    format!("{x} ∪ {y}: |H1| = {}, expected {}", r.h1_order(), claim.p),
                )?;
                glued += 1;
            }
        }
    }
    let opts = ReductionOptions::default();
    let mut swapped = Vec::new();
    for e in census() {
        let r = verify_census_entry(e, opts).map_err(|x| x.to_string())?;
        if r.realizes_data {
            ensure(
                r.sectors_ok(),
                format!("{}: sector lens parameters disagree with the tori", e.key),
            )?;
            continue;
        }
        // The torus list realizes different characteristic data; check the
        // sectors against that data and require it to be another entry's.
        let realized = realized_data(e, &Bounds::default_for(e.polygon));
        let [(k, l, p)] = realized.as_slice() else {
            return Err(format!("{}: tori realize {realized:?}", e.key));
        };
        let w = pentagon_vectors(*k, *l, p[0], p[1]);
        for s in &r.sectors {
            let q = lens_parameters(w[s.i - 1], w[s.j - 1]).map_err(|x| x.to_string())?;
            ensure(
                q.p as u64 == s.h1_order,
                format!("{}: sector ({},{})", e.key, s.i, s.j),
            )?;
        }
        let owner = census()
            .iter()
            .find(|o| o.polygon == e.polygon && o.vectors() == w)
            .ok_or(format!("{}: realized data belongs to no entry", e.key))?;
        if !swapped.contains(&format!("{} and {}", owner.key, e.key)) {
            swapped.push(format!("{} and {}", e.key, owner.key));
        }
    }
    ensure(
        swapped.len() <= 1,
        format!("mismatched entries {swapped:?}"),
    )?;
    Ok(format!(
        "{glued} gluings have the listed |H1|; sector lens spaces agree with the census{}",
        if swapped.is_empty() {
            String::new()
        } else {
            format!(" (torus lists interchanged between {})", swapped.join(", "))
        }
    ))
}

fn census_manifolds() -> Check {
    let all: Vec<&CensusEntry> = census().iter().collect();
    let mut links = 0;
    for r in verify_census(&all, ReductionOptions::default()) {
        let r = r.map_err(|x| x.to_string())?;
        let h = &r.manifold.homology;
        let m = r.m as i64;
        ensure(
            r.manifold.passes(true),
            format!(
                "{}: {} links not certified",
                r.key,
                r.manifold.uncertified().len()
            ),
        )?;
        ensure(
            r.manifold.euler == m,
            format!("{}: euler {}", r.key, r.manifold.euler),
        )?;
        let want = [
            HomologyGroup::free(1),
            HomologyGroup::free(0),
            HomologyGroup::free(r.m - 2),
            HomologyGroup::free(0),
            HomologyGroup::free(1),
        ];
        ensure(
            (0..5).all(|k| h.degree(k) == want[k]),
            format!("{}: {h}", r.key),
        )?;
        links += r.manifold.links.len();
    }
    Ok(format!(
        "{} complexes, {links} vertex links certified",
        all.len()
    ))
}

fn seven_vertex_solid_tori() -> Check {
    let found = enumerate_solid_tori_7(&seven_vertex_torus());
    let want: BTreeSet<_> = (1..=3)
        .map(|j| catalog::base_torus(j).unwrap())
        .map(|x| x.facets().to_vec())
        .collect();
    let got: BTreeSet<_> = found.iter().map(|x| x.facets().to_vec()).collect();
    ensure(
        found.len() == 3 && got == want,
        format!("{} complexes found", found.len()),
    )?;
    Ok("exactly the three seven-vertex solid tori".into())
}

fn enumeration() -> Check {
    let special = [(3, 1), (2, 1), (2, 2), (1, 2), (1, 3)];
    for k in -8..=8i64 {
        for l in -8..=8i64 {
            let stated = k == -1 || k == 0 || l == -1 || l == 0 || special.contains(&(k, l));
            let brute = (-50..=50).any(|a: i64| a * (1 - k * l) == 1 + l);
            ensure(
                brute == stated && pentagon_solvable(k, l) == stated,
                format!("pentagon ({k},{l})"),
            )?;
        }
    }
    let pb = Bounds::pentagon();
    let got: BTreeSet<(i64, i64)> = enumerate_pentagon(&pb).iter().map(|s| (s.k, s.l)).collect();
    let want: BTreeSet<(i64, i64)> =
        pb.k.clone()
            .flat_map(|k| pb.l.clone().map(move |l| (k, l)))
            .filter(|&(k, l)| pentagon_solvable(k, l))
            .collect();
    ensure(got == want, "pentagon enumeration misses solvable pairs")?;

    let hb = Bounds::hexagon();
    let sols = enumerate_hexagon(&hb);
    let mut brute = BTreeSet::new();
    for k in hb.k.clone() {
        for l in hb.l.clone() {
            for a in hb.a.clone() {
                for c in hb.c.clone() {
                    for b in -40..=40 {
                        for d in -40..=40 {
                            let v = hexagon_vectors(k, l, a, b, c, d);
                            if (0..6).all(|i| det(v[i], v[(i + 1) % 6]) == 1) {
                                brute.insert((k, l, vec![a, b, c, d]));
                            }
                        }
                    }
                }
            }
        }
    }
    let got: BTreeSet<_> = sols.iter().map(|s| (s.k, s.l, s.params.clone())).collect();
    ensure(
        got == brute,
        "hexagon enumeration disagrees with brute force",
    )?;
    ensure(
        sols == enumerate_hexagon(&hb),
        "hexagon enumeration is not stable",
    )?;
    let claims = hexagon_claims();
    let diffs = compare_hexagon_claims(&claims, &sols, &hb);
    ensure(
        diffs == compare_hexagon_claims(&claims, &sols, &hb),
        "discrepancy report is not stable",
    )?;
    let reproduced = claims.len()
        - diffs
            .iter()
            .map(|d| (d.k, d.l))
            .collect::<BTreeSet<_>>()
            .len();
    Ok(format!(
        "pentagon set exact; {} hexagon solutions; {reproduced}/{} listed cases reproduced, {} discrepancies reported",
        sols.len(),
        claims.len(),
        diffs.len()
    ))
}

fn properties() -> Check {
    for (name, run) in common::SUITES {
        run().map_err(|e| format!("{name}: {e}"))?;
    }
    Ok(format!(
        "{} randomized suites, 100 cases each",
        common::SUITES.len()
    ))
}

fn main() {
    let criteria: [(&str, Criterion); 7] = [
        ("vertex counts", vertex_counts),
        ("solid torus catalog", catalog_suite),
        ("3-manifold gluings", gluing_suite),
        ("closed 4-manifolds", census_manifolds),
        ("seven-vertex solid tori", seven_vertex_solid_tori),
        ("enumeration", enumeration),
        ("property suites", properties),
    ];
    let mut failed = Vec::new();
    for (i, (name, check)) in criteria.iter().enumerate() {
        let outcome =
            catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(detail) => println!("criterion {} PASS {name}: {detail}", i + 1),
            Err(reason) => {
                println!("criterion {} FAIL {name}: {reason}", i + 1);
                failed.push(i + 1);
            }
        }
    }
    if !failed.is_empty() {
        eprintln!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
}
