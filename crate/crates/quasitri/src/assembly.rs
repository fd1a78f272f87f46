//! Closed 3-manifolds glued from two catalog tori, and equilibrium
//! triangulations built as unions of cones over pairs of tori.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::OnceLock;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::{homology, orientable, HomologyProfile};
use crate::catalog::{resolve, seven_vertex_torus, TorusId};
use crate::charfun::{
    apply, basis_change, det, hexagon_vectors, lens_parameters, pentagon_vectors,
    rectangle_vectors, sign_normalize, torus_family, CharacteristicPair, IVec, LensParams, Polygon,
};
use crate::complex::{FVector, SimplicialComplex};
use crate::error::{Error, Result};
use crate::recognition::{
    bistellar_reduce, is_closed_3_manifold, is_closed_manifold, LinkReport, ReductionOptions,
};
use crate::vertex::Vertex;

/// Result of gluing two solid tori along the seven-vertex torus.
#[derive(Clone, Debug, Serialize)]
pub struct ClosedThreeManifoldReport {
    pub a: TorusId,
    pub b: TorusId,
    #[serde(skip)]
    pub complex: SimplicialComplex,
    pub homology: HomologyProfile,
    pub orientable: bool,
    /// `S³`, `S²×S¹`, `RP³`, `L(p,·)` or `unidentified`.
    pub identified: String,
    /// `|det|` of the two killed classes.
    pub predicted_order: u64,
}

impl ClosedThreeManifoldReport {
    /// Order of `H₁`, `0` when infinite.
    pub fn h1_order(&self) -> u64 {
        h1_order(&self.homology)
    }

    pub fn consistent(&self) -> bool {
        self.h1_order() == self.predicted_order
    }
}

fn h1_order(h: &HomologyProfile) -> u64 {
    h.degree(1)
        .order()
        .map_or(0, |o| u64::try_from(o).unwrap_or(u64::MAX))
}

/// Names a closed orientable 3-manifold as far as `H₁` allows. A trivial
/// `H₁` is called `S³` only with a reduction certificate.
pub fn identify(h: &HomologyProfile, orientable: bool, certified_sphere: bool) -> String {
    if !orientable {
        return "unidentified".into();
    }
    let h1 = h.degree(1);
    match (h1.rank, h1.torsion.len()) {
        (0, 0) if certified_sphere => "S³".into(),
        (0, 0) => "homology S³".into(),
        (1, 0) if h.degree(2).rank == 1 => "S²×S¹".into(),
        (0, 1) if h1.torsion[0] == 2.into() => "RP³".into(),
        (0, 1) => format!("L({},·)", h1.torsion[0]),
        _ => "unidentified".into(),
    }
}

/// Checks that two complexes share exactly the seven-vertex torus.
fn check_overlap(
    a: (&TorusId, &SimplicialComplex),
    b: (&TorusId, &SimplicialComplex),
) -> Result<()> {
    let t = seven_vertex_torus();
    let va: BTreeSet<Vertex> = a.1.vertices().into_iter().collect();
    let common: BTreeSet<Vertex> =
        b.1.vertices()
            .into_iter()
            .filter(|v| va.contains(v))
            .collect();
    let z7: BTreeSet<Vertex> = t.vertices().into_iter().collect();
    if common != z7 || a.1.intersection(b.1) != t {
        return Err(Error::ToriOverlap(format!("{} and {}", a.0, b.0)));
    }
    Ok(())
}

/// The union `a ∪ b` of two catalog tori, verified as a closed 3-manifold.
pub fn glue_tori(a: TorusId, b: TorusId) -> Result<ClosedThreeManifoldReport> {
    let (ea, eb) = (resolve(a)?, resolve(b)?);
    check_overlap((&a, &ea.complex), (&b, &eb.complex))?;
    let complex = ea.complex.union(&eb.complex);
    if !is_closed_3_manifold(&complex) {
        return Err(Error::NotManifold(format!("{a} ∪ {b}")));
    }
    let homology = homology(&complex);
    let orientable = orientable(&complex)?.is_some();
    let certified = homology == HomologyProfile::sphere(3)
        && bistellar_reduce(&complex, ReductionOptions::default().budget, 0)?.certified();
    Ok(ClosedThreeManifoldReport {
        a,
        b,
        identified: identify(&homology, orientable, certified),
        predicted_order: det(ea.killed, eb.killed).unsigned_abs(),
        complex,
        homology,
        orientable,
    })
}

/// Families whose tori glue to a closed 3-manifold with `|H₁| = p`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GluingClaim {
    pub name: String,
    pub p: u64,
    pub families: Vec<[u8; 2]>,
}

#[derive(Deserialize)]
struct GluingFile {
    pair: Vec<GluingClaim>,
}

pub fn gluing_claims() -> Vec<GluingClaim> {
    let f: GluingFile = toml::from_str(include_str!("../../../data/census/gluings.toml"))
        .expect("shipped gluing table parses");
    f.pair
}

fn family_members(j: u8, max_n: u32) -> Vec<TorusId> {
    let base = (j <= 3).then_some(TorusId::Base(j));
    base.into_iter()
        .chain((0..=max_n).map(|n| TorusId::indexed(j, n)))
        .collect()
}

/// Concrete tori of families `a` and `b` with indices up to `max_n`;
/// equal families give pairs with distinct indices.
pub fn gluing_instances(a: u8, b: u8, max_n: u32) -> Vec<(TorusId, TorusId)> {
    let (xs, ys) = (family_members(a, max_n), family_members(b, max_n));
    let mut out = Vec::new();
    for &x in &xs {
        for &y in &ys {
            if a != b || x < y {
                out.push((x, y));
            }
        }
    }
    out
}

/// Tori for the edges of an `m`-gon together with one apex per vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AssemblySpec {
    pub tori: Vec<TorusId>,
    pub apexes: Vec<Vertex>,
}

impl AssemblySpec {
    /// Apexes are named `V1`, ..., `Vm`.
    pub fn new(tori: Vec<TorusId>) -> Result<AssemblySpec> {
        if tori.len() < 3 {
            return Err(Error::Invalid(format!(
                "need at least 3 tori, got {}",
                tori.len()
            )));
        }
        let apexes = (1..=tori.len())
            .map(|i| Vertex::name(&format!("V{i}")))
            .collect();
        Ok(AssemblySpec { tori, apexes })
    }

    pub fn m(&self) -> usize {
        self.tori.len()
    }

    /// Indices `(i−1, i)` of the tori under apex `i`.
    pub fn block(&self, i: usize) -> (usize, usize) {
        ((i + self.m() - 1) % self.m(), i)
    }

    /// Adjacent killed classes must span `Z²` and the tori may only share
    /// the seven-vertex torus.
    pub fn validate(&self) -> Result<Vec<std::sync::Arc<crate::catalog::CatalogEntry>>> {
        let entries = self
            .tori
            .iter()
            .map(|&t| resolve(t))
            .collect::<Result<Vec<_>>>()?;
        for i in 0..self.m() {
            let (p, q) = self.block(i);
            let d = det(entries[p].killed, entries[q].killed);
            if d.abs() != 1 {
                return Err(Error::ApexLink(format!(
                    "{} over {} ∪ {} (det {d})",
                    self.apexes[i], self.tori[p], self.tori[q]
                )));
            }
        }
        for i in 0..self.m() {
            for j in i + 1..self.m() {
                check_overlap(
                    (&self.tori[i], &entries[i].complex),
                    (&self.tori[j], &entries[j].complex),
                )?;
            }
        }
        for v in &self.apexes {
            if let Some(e) = entries.iter().find(|e| e.complex.has_vertex(v)) {
                return Err(Error::VertexExists(format!("{v} in {}", e.id)));
            }
        }
        Ok(entries)
    }
}

/// `X = ⋃ Vᵢ ∗ (Tᵢ₋₁ ∪ Tᵢ)`.
pub fn build_equilibrium(spec: &AssemblySpec) -> Result<SimplicialComplex> {
    let entries = spec.validate()?;
    let mut cones = Vec::with_capacity(spec.m());
    for i in 0..spec.m() {
        let (p, q) = spec.block(i);
        cones.push(
            entries[p]
                .complex
                .union(&entries[q].complex)
                .cone(spec.apexes[i].clone())?,
        );
    }
    let x = SimplicialComplex::union_all(&cones);
    let torus_vertices: BTreeSet<Vertex> =
        entries.iter().flat_map(|e| e.complex.vertices()).collect();
    debug_assert_eq!(x.num_vertices(), torus_vertices.len() + spec.m());
    Ok(x)
}

/// Verification of a closed 4-manifold triangulation.
#[derive(Clone, Debug, Serialize)]
pub struct FourManifoldReport {
    pub f_vector: FVector,
    pub euler: i64,
    pub homology: HomologyProfile,
    pub links: Vec<LinkReport>,
}

impl FourManifoldReport {
    pub fn passes(&self, strict: bool) -> bool {
        crate::recognition::ManifoldReport {
            dim: 4,
            links: self.links.clone(),
        }
        .passes(strict)
    }

    pub fn uncertified(&self) -> Vec<&LinkReport> {
        self.links
            .iter()
            .filter(|l| l.status == crate::recognition::LinkStatus::Uncertified)
            .collect()
    }

    pub fn failed(&self) -> Vec<&LinkReport> {
        self.links
            .iter()
            .filter(|l| matches!(l.status, crate::recognition::LinkStatus::NotSphere(_)))
            .collect()
    }
}

pub fn verify_closed_4manifold(
    x: &SimplicialComplex,
    opts: ReductionOptions,
) -> Result<FourManifoldReport> {
    if x.dim() != 4 || !x.is_pure() || !x.is_closed_pseudomanifold() {
        return Err(Error::NotPseudomanifold);
    }
    let links = is_closed_manifold(x, 4, opts)?.links;
    Ok(FourManifoldReport {
        f_vector: x.f_vector(),
        euler: x.euler_characteristic(),
        homology: homology(x),
        links,
    })
}

/// Polygon parameters of a census entry.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Params {
    pub k: i64,
    pub l: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub a: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub b: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub c: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d: Option<i64>,
}

#[derive(Deserialize)]
struct CensusFile {
    polygon: Polygon,
    entry: Vec<RawEntry>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawEntry {
    key: String,
    params: Params,
    tori: Vec<String>,
    f0: usize,
    f0_sum: String,
    note: Option<String>,
}

/// One published equilibrium triangulation: characteristic data, the torus
/// chosen for each edge and the stated vertex count.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusEntry {
    pub key: String,
    pub polygon: Polygon,
    pub params: Params,
    pub tori: Vec<TorusId>,
    pub f0: usize,
    pub f0_sum: String,
    pub note: Option<String>,
}

impl CensusEntry {
    pub fn vectors(&self) -> Vec<IVec> {
        let p = &self.params;
        let g = |x: Option<i64>| x.unwrap_or(0);
        match self.polygon {
            Polygon::Rectangle => rectangle_vectors(p.k, p.l),
            Polygon::Pentagon => pentagon_vectors(p.k, p.l, g(p.a), g(p.b)),
            Polygon::Hexagon => hexagon_vectors(p.k, p.l, g(p.a), g(p.b), g(p.c), g(p.d)),
        }
    }

    pub fn pair(&self) -> Result<CharacteristicPair> {
        CharacteristicPair::new(self.vectors())
    }

    pub fn spec(&self) -> Result<AssemblySpec> {
        AssemblySpec::new(self.tori.clone())
    }

    /// Value of the stated sum, e.g. `7+3+4`.
    pub fn stated_sum(&self) -> Result<usize> {
        self.f0_sum
            .split('+')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|e| Error::Parse(format!("{}: {e}", self.f0_sum)))
            })
            .sum()
    }
}

const CENSUS_FILES: [&str; 3] = [
    include_str!("../../../data/census/rectangle.toml"),
    include_str!("../../../data/census/pentagon.toml"),
    include_str!("../../../data/census/hexagon.toml"),
];

fn parse_census(text: &str) -> Result<Vec<CensusEntry>> {
    let file: CensusFile = toml::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    file.entry
        .into_iter()
        .map(|r| {
            Ok(CensusEntry {
                tori: r.tori.iter().map(|t| t.parse()).collect::<Result<_>>()?,
                key: r.key,
                polygon: file.polygon,
                params: r.params,
                f0: r.f0,
                f0_sum: r.f0_sum,
                note: r.note,
            })
        })
        .collect()
}

/// All census entries, in key order.
pub fn census() -> &'static [CensusEntry] {
    static CENSUS: OnceLock<Vec<CensusEntry>> = OnceLock::new();
    CENSUS.get_or_init(|| {
        let mut all: Vec<CensusEntry> = CENSUS_FILES
            .iter()
            .flat_map(|t| parse_census(t).expect("shipped census parses"))
            .collect();
        all.sort_by_key(|e| key_order(&e.key));
        all
    })
}

fn key_order(key: &str) -> (u32, u32) {
    let (a, b) = key.split_once('.').unwrap_or((key, "0"));
    (a.parse().unwrap_or(u32::MAX), b.parse().unwrap_or(u32::MAX))
}

pub fn census_keys() -> Vec<&'static str> {
    census().iter().map(|e| e.key.as_str()).collect()
}

fn unknown(key: &str) -> Error {
    Error::UnknownKey {
        key: key.to_string(),
        available: census_keys().join(", "),
    }
}

pub fn census_entry(key: &str) -> Result<&'static CensusEntry> {
    census()
        .iter()
        .find(|e| e.key == key)
        .ok_or_else(|| unknown(key))
}

/// The torus assignment recorded for `key`.
pub fn census_spec(key: &str) -> Result<AssemblySpec> {
    census_entry(key)?.spec()
}

/// Entries whose key matches `pattern`, where `*` matches any run of
/// characters. No match is an error.
pub fn select(pattern: &str) -> Result<Vec<&'static CensusEntry>> {
    let hits: Vec<_> = census()
        .iter()
        .filter(|e| glob_match(pattern, &e.key))
        .collect();
    if hits.is_empty() {
        return Err(unknown(pattern));
    }
    Ok(hits)
}

fn glob_match(pattern: &str, s: &str) -> bool {
    match pattern.split_once('*') {
        None => pattern == s,
        Some((head, tail)) => {
            s.starts_with(head)
                && (0..=s.len() - head.len()).any(|i| glob_match(tail, &s[head.len() + i..]))
        }
    }
}

/// One non-adjacent pair of edges: the lens parameters of the
/// characteristic data against `H₁` of the glued tori.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SectorCheck {
    pub i: usize,
    pub j: usize,
    pub lens: LensParams,
    pub h1_order: u64,
    pub identified: String,
}

impl SectorCheck {
    pub fn consistent(&self) -> bool {
        self.lens.p as u64 == self.h1_order
    }
}

/// Full verification of one census entry.
#[derive(Clone, Debug, Serialize)]
pub struct CensusReport {
    pub key: String,
    pub m: usize,
    pub f0: usize,
    pub expected_f0: usize,
    pub stated_sum: usize,
    pub note: Option<String>,
    pub manifold: FourManifoldReport,
    pub sectors: Vec<SectorCheck>,
    /// The tori kill the characteristic vectors after a change of basis.
    pub realizes_data: bool,
    /// Catalog families of the transformed vectors agree with the tori.
    pub families_match: bool,
}

impl CensusReport {
    pub fn f0_ok(&self) -> bool {
        self.f0 == self.expected_f0 && self.stated_sum == self.expected_f0
    }

    /// `χ = m`, `H = (Z, 0, Z^{m−2}, 0, Z)`.
    pub fn homology_ok(&self) -> bool {
        let want =
            HomologyProfile::parse(&format!("Z;0;Z^{};0;Z", self.m - 2)).expect("valid profile");
        self.manifold.euler == self.m as i64 && self.manifold.homology == want
    }

    pub fn sectors_ok(&self) -> bool {
        self.sectors.iter().all(SectorCheck::consistent)
    }

    /// Everything topological about the complex itself.
    pub fn manifold_ok(&self, strict: bool) -> bool {
        self.f0_ok() && self.homology_ok() && self.manifold.passes(strict)
    }

    pub fn passes(&self, strict: bool) -> bool {
        self.manifold_ok(strict) && self.sectors_ok() && self.realizes_data && self.families_match
    }
}

/// Builds and verifies a census entry.
pub fn verify_census_entry(e: &CensusEntry, opts: ReductionOptions) -> Result<CensusReport> {
    let spec = e.spec()?;
    let x = build_equilibrium(&spec)?;
    let manifold = verify_closed_4manifold(&x, opts)?;
    let xi = e.vectors();
    let m = spec.m();
    let mut sectors = Vec::new();
    for i in 0..m {
        for j in i + 2..m {
            if i == 0 && j == m - 1 {
                continue;
            }
            let glued = glue_tori(spec.tori[i], spec.tori[j])?;
            sectors.push(SectorCheck {
                i: i + 1,
                j: j + 1,
                lens: lens_parameters(xi[i], xi[j])?,
                h1_order: glued.h1_order(),
                identified: glued.identified,
            });
        }
    }
    let killed: Vec<IVec> = spec.tori.iter().map(|t| t.killed()).collect();
    let change = basis_change(&xi, &killed);
    let families_match = match change {
        Some(a) => xi
            .iter()
            .zip(&spec.tori)
            .all(|(&v, t)| torus_family(sign_normalize(apply(&a, v))).ok() == Some(t.family())),
        None => false,
    };
    Ok(CensusReport {
        key: e.key.clone(),
        m,
        f0: x.num_vertices(),
        expected_f0: e.f0,
        stated_sum: e.stated_sum()?,
        note: e.note.clone(),
        manifold,
        sectors,
        realizes_data: change.is_some(),
        families_match,
    })
}

/// Verifies entries in parallel; output follows input order.
pub fn verify_census(
    entries: &[&CensusEntry],
    opts: ReductionOptions,
) -> Vec<Result<CensusReport>> {
    entries
        .par_iter()
        .map(|e| verify_census_entry(e, opts))
        .collect()
}

/// Pentagon or hexagon parameters, among the solutions of the polygon's
/// constraint system within `bounds`, whose characteristic vectors the
/// entry's tori kill after a change of basis.
pub fn realized_data(
    e: &CensusEntry,
    bounds: &crate::charfun::Bounds,
) -> Vec<(i64, i64, Vec<i64>)> {
    let killed: Vec<IVec> = e.tori.iter().map(|t| t.killed()).collect();
    crate::charfun::enumerate(e.polygon, bounds)
        .into_iter()
        .filter(|s| basis_change(&s.pair.vectors, &killed).is_some())
        .map(|s| (s.k, s.l, s.params))
        .collect()
}

/// Vertices of `x` grouped by the part of the assembly they come from.
pub fn vertex_origin(spec: &AssemblySpec) -> Result<BTreeMap<Vertex, String>> {
    let mut out = BTreeMap::new();
    for t in &spec.tori {
        for v in resolve(*t)?.complex.vertices() {
            let tag = if v.as_int().is_some_and(|i| (0..7).contains(&i)) {
                "Z7".to_string()
            } else {
                t.to_string()
            };
            out.insert(v, tag);
        }
    }
    for v in &spec.apexes {
        out.insert(v.clone(), "apex".into());
    }
    Ok(out)
}
