//! Sphere and ball recognition in low dimensions, bistellar reduction of
//! 3-spheres, closed-manifold checks and the exhaustive search for
//! seven-vertex solid tori.

use std::collections::{BTreeSet, HashMap, HashSet};

use itertools::Itertools;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::{homology, HomologyProfile};
use crate::complex::{Simplex, SimplicialComplex};
use crate::error::{Error, Result};
use crate::vertex::Vertex;

pub const DEFAULT_BUDGET: u64 = 100_000;
const STAGNATION: u64 = 50;

fn is_pure_dim(x: &SimplicialComplex, d: isize) -> bool {
    x.dim() == d && x.is_pure()
}

fn degrees(x: &SimplicialComplex) -> HashMap<Vertex, usize> {
    let mut deg = HashMap::new();
    for e in x.facets() {
        for v in e.vertices() {
            *deg.entry(v.clone()).or_insert(0) += 1;
        }
    }
    deg
}

/// Two points.
pub fn is_sphere_0d(x: &SimplicialComplex) -> bool {
    is_pure_dim(x, 0) && x.num_facets() == 2
}

/// A single cycle.
pub fn is_sphere_1d(x: &SimplicialComplex) -> bool {
    is_pure_dim(x, 1)
        && x.num_facets() >= 3
        && degrees(x).values().all(|&d| d == 2)
        && x.is_connected()
}

/// A single path.
pub fn is_ball_1d(x: &SimplicialComplex) -> bool {
    if !is_pure_dim(x, 1) || !x.is_connected() {
        return false;
    }
    let deg = degrees(x);
    deg.values().all(|&d| d <= 2) && deg.values().filter(|&&d| d == 1).count() == 2
}

fn ridge_counts(x: &SimplicialComplex) -> HashMap<Simplex, usize> {
    let mut m = HashMap::new();
    for f in x.facets() {
        for r in f.boundary() {
            *m.entry(r).or_insert(0) += 1;
        }
    }
    m
}

/// Exact 2-sphere test: connected, closed, cyclic vertex links, `χ = 2`.
pub fn is_sphere_2d(x: &SimplicialComplex) -> bool {
    is_pure_dim(x, 2)
        && x.is_connected()
        && ridge_counts(x).values().all(|&c| c == 2)
        && x.vertices()
            .iter()
            .all(|v| x.vertex_link(v).map(|l| is_sphere_1d(&l)).unwrap_or(false))
        && x.euler_characteristic() == 2
}

/// Exact 2-ball test: connected, vertex links cycles or paths, `χ = 1`.
pub fn is_ball_2d(x: &SimplicialComplex) -> bool {
    is_pure_dim(x, 2)
        && x.is_connected()
        && ridge_counts(x).values().all(|&c| c <= 2)
        && ridge_counts(x).values().any(|&c| c == 1)
        && x.vertices().iter().all(|v| {
            x.vertex_link(v)
                .map(|l| is_sphere_1d(&l) || is_ball_1d(&l))
                .unwrap_or(false)
        })
        && x.euler_characteristic() == 1
}

/// Sphere test that is exact up to dimension 2.
fn is_low_sphere(x: &SimplicialComplex) -> Option<bool> {
    match x.dim() {
        0 => Some(is_sphere_0d(x)),
        1 => Some(is_sphere_1d(x)),
        2 => Some(is_sphere_2d(x)),
        _ => None,
    }
}

/// Every vertex link of a pure 3-complex is a 2-sphere.
pub fn is_closed_3_manifold(x: &SimplicialComplex) -> bool {
    is_pure_dim(x, 3)
        && x.vertices()
            .par_iter()
            .all(|v| x.vertex_link(v).map(|l| is_sphere_2d(&l)).unwrap_or(false))
}

/// Every vertex link of a pure 3-complex is a 2-sphere or a 2-ball.
pub fn is_3_manifold(x: &SimplicialComplex) -> bool {
    is_pure_dim(x, 3)
        && x.vertices().par_iter().all(|v| {
            x.vertex_link(v)
                .map(|l| is_sphere_2d(&l) || is_ball_2d(&l))
                .unwrap_or(false)
        })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    CertifiedSphere,
    BudgetExhausted,
}

/// A move sequence taking a 3-manifold to its terminal state.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReductionCertificate {
    /// `(alpha, beta)` pairs as accepted by [`SimplicialComplex::bistellar_move`].
    pub moves: Vec<(Simplex, Simplex)>,
    pub terminal: SimplicialComplex,
    pub verdict: Verdict,
    pub seed: u64,
}

impl ReductionCertificate {
    pub fn certified(&self) -> bool {
        self.verdict == Verdict::CertifiedSphere
    }

    /// Replays the moves and checks the terminal complex.
    pub fn replay(&self, x: &SimplicialComplex) -> Result<SimplicialComplex> {
        let mut cur = x.clone();
        for (a, b) in &self.moves {
            cur = cur.bistellar_move(a, b)?;
        }
        if cur != self.terminal {
            return Err(Error::Invalid(
                "replay does not reach the recorded terminal complex".into(),
            ));
        }
        if self.certified() && !is_simplex_boundary(&cur, 4) {
            return Err(Error::Invalid(
                "terminal complex is not the boundary of a 4-simplex".into(),
            ));
        }
        Ok(cur)
    }
}

fn is_simplex_boundary(x: &SimplicialComplex, n: usize) -> bool {
    x.num_vertices() == n + 1 && x.num_facets() == n + 1 && x.facets().iter().all(|f| f.len() == n)
}

/// Reduction engine over bitmask facets.
struct Engine {
    verts: Vec<Vertex>,
    facets: Vec<u128>,
    index: HashSet<u128>,
}

#[derive(Clone)]
struct Bits(u128);

impl Iterator for Bits {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }
}

fn bits(m: u128) -> Bits {
    Bits(m)
}

impl Engine {
    fn new(x: &SimplicialComplex) -> Result<Engine> {
        let verts = x.vertices();
        if verts.len() > 128 {
            return Err(Error::TooLarge(verts.len()));
        }
        let pos: HashMap<&Vertex, usize> = verts.iter().enumerate().map(|(i, v)| (v, i)).collect();
        let facets: Vec<u128> = x
            .facets()
            .iter()
            .map(|f| f.vertices().iter().fold(0u128, |m, v| m | 1 << pos[v]))
            .collect();
        let index = facets.iter().copied().collect();
        Ok(Engine {
            verts,
            facets,
            index,
        })
    }

    fn simplex(&self, m: u128) -> Simplex {
        Simplex::new(bits(m).map(|i| self.verts[i].clone()))
    }

    fn complex(&self) -> SimplicialComplex {
        SimplicialComplex::from_facets(self.facets.iter().map(|&m| self.simplex(m)))
    }

    fn live_vertices(&self) -> u128 {
        self.facets.iter().fold(0, |a, &f| a | f)
    }

    fn has_face(&self, s: u128) -> bool {
        self.facets.iter().any(|&f| f & s == s)
    }

    /// Applies `alpha ↦ beta`; the caller has checked the preconditions.
    fn apply(&mut self, alpha: u128, beta: u128) {
        let old: HashSet<u128> = bits(beta).map(|b| alpha | (beta & !(1 << b))).collect();
        self.facets.retain(|f| !old.contains(f));
        for f in &old {
            self.index.remove(f);
        }
        for a in bits(alpha) {
            let f = (alpha & !(1 << a)) | beta;
            self.facets.push(f);
            self.index.insert(f);
        }
    }

    /// Vertices of degree 4 whose link spans no facet.
    fn vertex_removals(&self) -> Vec<(u128, u128)> {
        let mut deg: HashMap<usize, (usize, u128)> = HashMap::new();
        for &f in &self.facets {
            for v in bits(f) {
                let e = deg.entry(v).or_insert((0, 0));
                e.0 += 1;
                e.1 |= f;
            }
        }
        let mut out: Vec<(u128, u128)> = deg
            .into_iter()
            .filter(|&(v, (d, span))| {
                d == 4
                    && (span & !(1 << v)).count_ones() == 4
                    && !self.index.contains(&(span & !(1 << v)))
            })
            .map(|(v, (_, span))| (1u128 << v, span & !(1 << v)))
            .collect();
        out.sort_unstable();
        out
    }

    /// Edges of degree 3 whose link triangle is not a face.
    fn edge_removals(&self) -> Vec<(u128, u128)> {
        let mut deg: HashMap<u128, (usize, u128)> = HashMap::new();
        for &f in &self.facets {
            for (a, b) in bits(f).tuple_combinations() {
                let e = deg.entry(1 << a | 1 << b).or_insert((0, 0));
                e.0 += 1;
                e.1 |= f;
            }
        }
        let mut out: Vec<(u128, u128)> = deg
            .into_iter()
            .filter(|&(e, (d, span))| {
                d == 3 && (span & !e).count_ones() == 3 && !self.has_face(span & !e)
            })
            .map(|(e, (_, span))| (e, span & !e))
            .collect();
        out.sort_unstable();
        out
    }

    /// Interior triangles whose two opposite vertices span no edge.
    fn triangle_flips(&self) -> Vec<(u128, u128)> {
        let mut by_tri: HashMap<u128, Vec<u128>> = HashMap::new();
        for &f in &self.facets {
            for v in bits(f) {
                by_tri.entry(f & !(1 << v)).or_default().push(f);
            }
        }
        let mut out: Vec<(u128, u128)> = by_tri
            .into_iter()
            .filter(|(_, fs)| fs.len() == 2)
            .map(|(t, fs)| (t, (fs[0] | fs[1]) & !t))
            .filter(|&(_, e)| !self.has_face(e))
            .collect();
        out.sort_unstable();
        out
    }
}

/// Greedy bistellar reduction towards the boundary of the 4-simplex,
/// preferring vertex removals, then edge removals, with random triangle
/// flips to escape local minima.
pub fn bistellar_reduce(
    x: &SimplicialComplex,
    budget: u64,
    seed: u64,
) -> Result<ReductionCertificate> {
    if !is_closed_3_manifold(x) {
        return Err(Error::NotManifold(
            "some vertex link is not a 2-sphere".into(),
        ));
    }
    let mut eng = Engine::new(x)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut moves = Vec::new();
    let mut best = (eng.live_vertices().count_ones(), eng.facets.len());
    let mut stagnant = 0u64;
    let mut heat = 0u32;
    let record = |eng: &mut Engine, a: u128, b: u128, moves: &mut Vec<(Simplex, Simplex)>| {
        moves.push((eng.simplex(a), eng.simplex(b)));
        eng.apply(a, b);
    };
    while (moves.len() as u64) < budget {
        if eng.live_vertices().count_ones() == 5 && eng.facets.len() == 5 {
            break;
        }
        let removals = eng.vertex_removals();
        if let Some(&(a, b)) = removals.choose(&mut rng) {
            record(&mut eng, a, b, &mut moves);
        } else if heat > 0 {
            let flips = eng.triangle_flips();
            let Some(&(a, b)) = flips.choose(&mut rng) else {
                break;
            };
            record(&mut eng, a, b, &mut moves);
            heat -= 1;
        } else {
            let edges = eng.edge_removals();
            match edges.choose(&mut rng) {
                Some(&(a, b)) if stagnant < STAGNATION => record(&mut eng, a, b, &mut moves),
                _ => {
                    heat = rng.gen_range(1..=4);
                    stagnant = 0;
                    continue;
                }
            }
        }
        let now = (eng.live_vertices().count_ones(), eng.facets.len());
        if now < best {
            best = now;
            stagnant = 0;
        } else {
            stagnant += 1;
        }
    }
    let terminal = eng.complex();
    let verdict = if is_simplex_boundary(&terminal, 4) {
        Verdict::CertifiedSphere
    } else {
        Verdict::BudgetExhausted
    };
    Ok(ReductionCertificate {
        moves,
        terminal,
        verdict,
        seed,
    })
}

/// Status of one vertex link.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "status", content = "detail")]
pub enum LinkStatus {
    /// Exact recognition in dimension at most 2.
    Sphere,
    /// Homology sphere reduced to the boundary of a simplex.
    Certified,
    /// Homology sphere, reduction budget exhausted.
    Uncertified,
    NotSphere(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LinkReport {
    pub vertex: Vertex,
    #[serde(flatten)]
    pub status: LinkStatus,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ManifoldReport {
    pub dim: usize,
    pub links: Vec<LinkReport>,
}

impl ManifoldReport {
    /// No link is known to fail; uncertified links fail only when `strict`.
    pub fn passes(&self, strict: bool) -> bool {
        self.links.iter().all(|l| match l.status {
            LinkStatus::Sphere | LinkStatus::Certified => true,
            LinkStatus::Uncertified => !strict,
            LinkStatus::NotSphere(_) => false,
        })
    }

    pub fn uncertified(&self) -> usize {
        self.links
            .iter()
            .filter(|l| l.status == LinkStatus::Uncertified)
            .count()
    }
}

/// Reduction parameters for 3-sphere links.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ReductionOptions {
    pub budget: u64,
    pub seed: u64,
}

impl Default for ReductionOptions {
    fn default() -> Self {
        ReductionOptions {
            budget: DEFAULT_BUDGET,
            seed: 0,
        }
    }
}

fn sphere_link_status(link: &SimplicialComplex, opts: ReductionOptions) -> LinkStatus {
    if let Some(ok) = is_low_sphere(link) {
        return if ok {
            LinkStatus::Sphere
        } else {
            LinkStatus::NotSphere("link is not a sphere".into())
        };
    }
    if link.dim() != 3 {
        return LinkStatus::NotSphere(format!("link has dimension {}", link.dim()));
    }
    if !is_closed_3_manifold(link) {
        return LinkStatus::NotSphere("link is not a closed 3-manifold".into());
    }
    let h = homology(link);
    if h != HomologyProfile::sphere(3) {
        return LinkStatus::NotSphere(format!("link homology {h}"));
    }
    match bistellar_reduce(link, opts.budget, opts.seed) {
        Ok(c) if c.certified() => LinkStatus::Certified,
        Ok(_) => LinkStatus::Uncertified,
        Err(e) => LinkStatus::NotSphere(e.to_string()),
    }
}

/// Checks that every vertex link of a pure `d`-complex (`d ≤ 4`) is a
/// `(d−1)`-sphere.
pub fn is_closed_manifold(
    x: &SimplicialComplex,
    d: usize,
    opts: ReductionOptions,
) -> Result<ManifoldReport> {
    if !(1..=4).contains(&d) {
        return Err(Error::DimensionMismatch(d as isize, 4));
    }
    if !x.is_pure() || x.dim() != d as isize {
        return Err(Error::NotPseudomanifold);
    }
    let links = x
        .vertices()
        .into_par_iter()
        .map(|v| {
            let link = x.vertex_link(&v).expect("vertex of the complex");
            LinkReport {
                status: sphere_link_status(&link, opts),
                vertex: v,
            }
        })
        .collect();
    Ok(ManifoldReport { dim: d, links })
}

/// All pure 3-complexes on the vertices of the seven-vertex torus `t` whose
/// boundary is `t`, whose links are spheres or balls and whose homology is
/// that of a circle.
pub fn enumerate_solid_tori_7(t: &SimplicialComplex) -> Vec<SimplicialComplex> {
    let verts = t.vertices();
    let triangles: Vec<Simplex> = verts
        .iter()
        .cloned()
        .combinations(3)
        .map(Simplex::new)
        .collect();
    let tets: Vec<Simplex> = verts
        .iter()
        .cloned()
        .combinations(4)
        .map(Simplex::new)
        .collect();
    let tri_id: HashMap<&Simplex, usize> =
        triangles.iter().enumerate().map(|(i, s)| (s, i)).collect();
    let tet_tris: Vec<[usize; 4]> = tets
        .iter()
        .map(|s| {
            let b: Vec<usize> = s.boundary().iter().map(|r| tri_id[r]).collect();
            [b[0], b[1], b[2], b[3]]
        })
        .collect();
    let boundary: Vec<bool> = triangles.iter().map(|s| t.is_facet(s)).collect();
    let mut containing: Vec<Vec<usize>> = vec![Vec::new(); triangles.len()];
    for (i, ts) in tet_tris.iter().enumerate() {
        for &r in ts {
            containing[r].push(i);
        }
    }
    let search = CoverSearch {
        cells: &tet_tris,
        containing: &containing,
        exact_one: &boundary,
    };
    let mut out: Vec<SimplicialComplex> = search
        .run()
        .into_iter()
        .map(|chosen| SimplicialComplex::from_facets(chosen.into_iter().map(|i| tets[i].clone())))
        .filter(|x| x.boundary_complex().map(|b| &b == t).unwrap_or(false))
        .filter(is_3_manifold)
        .filter(|x| homology(x) == HomologyProfile::parse("Z;Z;0;0").expect("profile"))
        .collect();
    out.sort_by(|a, b| a.facets().cmp(b.facets()));
    out
}

/// All 2-manifolds on seven vertices with fourteen triangles in which every
/// pair of vertices spans an edge.
pub fn enumerate_neighborly_surfaces_7() -> Vec<SimplicialComplex> {
    let verts: Vec<Vertex> = (0..7).map(Vertex::Int).collect();
    let edges: Vec<Simplex> = verts
        .iter()
        .cloned()
        .combinations(2)
        .map(Simplex::new)
        .collect();
    let tris: Vec<Simplex> = verts
        .iter()
        .cloned()
        .combinations(3)
        .map(Simplex::new)
        .collect();
    let edge_id: HashMap<&Simplex, usize> = edges.iter().enumerate().map(|(i, s)| (s, i)).collect();
    let tri_edges: Vec<[usize; 3]> = tris
        .iter()
        .map(|s| {
            let b: Vec<usize> = s.boundary().iter().map(|r| edge_id[r]).collect();
            [b[0], b[1], b[2]]
        })
        .collect();
    let mut containing: Vec<Vec<usize>> = vec![Vec::new(); edges.len()];
    for (i, es) in tri_edges.iter().enumerate() {
        for &e in es {
            containing[e].push(i);
        }
    }
    let exact_two = vec![false; edges.len()];
    let search = CoverSearch {
        cells: &tri_edges,
        containing: &containing,
        exact_one: &exact_two,
    };
    search
        .run_exact_two()
        .into_iter()
        .map(|chosen| SimplicialComplex::from_facets(chosen.into_iter().map(|i| tris[i].clone())))
        .filter(|x| {
            x.vertices()
                .iter()
                .all(|v| x.vertex_link(v).map(|l| is_sphere_1d(&l)).unwrap_or(false))
        })
        .collect()
}

/// Depth-first search for cell sets covering each face either exactly once
/// (`exact_one`) or zero or two times.
struct CoverSearch<'a, const N: usize> {
    cells: &'a [[usize; N]],
    containing: &'a [Vec<usize>],
    exact_one: &'a [bool],
}

impl<const N: usize> CoverSearch<'_, N> {
    fn run(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut count = vec![0u8; self.containing.len()];
        let mut used = vec![false; self.cells.len()];
        self.dfs(&mut count, &mut used, &mut Vec::new(), false, &mut out);
        out
    }

    /// Every face covered exactly twice.
    fn run_exact_two(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut count = vec![0u8; self.containing.len()];
        let mut used = vec![false; self.cells.len()];
        self.dfs(&mut count, &mut used, &mut Vec::new(), true, &mut out);
        out.sort();
        out.dedup();
        out
    }

    fn target(&self, face: usize, all_two: bool) -> (u8, u8) {
        if all_two {
            (2, 2)
        } else if self.exact_one[face] {
            (1, 1)
        } else {
            (0, 2)
        }
    }

    fn dfs(
        &self,
        count: &mut [u8],
        used: &mut [bool],
        chosen: &mut Vec<usize>,
        all_two: bool,
        out: &mut Vec<Vec<usize>>,
    ) {
        let deficient = (0..count.len()).find(|&f| {
            let (lo, hi) = self.target(f, all_two);
            count[f] < lo || (count[f] == 1 && hi == 2 && lo == 0)
        });
        let Some(face) = deficient else {
            let mut c = chosen.clone();
            c.sort_unstable();
            out.push(c);
            return;
        };
        for &cell in &self.containing[face] {
            if used[cell] {
                continue;
            }
            let fits = self.cells[cell]
                .iter()
                .all(|&g| count[g] < self.target(g, all_two).1);
            if !fits {
                continue;
            }
            used[cell] = true;
            chosen.push(cell);
            for &g in &self.cells[cell] {
                count[g] += 1;
            }
            self.dfs(count, used, chosen, all_two, out);
            for &g in &self.cells[cell] {
                count[g] -= 1;
            }
            chosen.pop();
            used[cell] = false;
        }
    }
}

/// Vertex sets of the facets, for quick comparisons in tests and reports.
pub fn facet_set(x: &SimplicialComplex) -> BTreeSet<Simplex> {
    x.facets().iter().cloned().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::digits;

    #[test]
    fn tetrahedron_boundary_is_sphere() {
        assert!(is_sphere_2d(&SimplicialComplex::simplex_boundary(&digits(
            "0123"
        ))));
    }

    #[test]
    fn torus_is_not_sphere() {
        assert!(!is_sphere_2d(&crate::catalog::seven_vertex_torus()));
    }

    #[test]
    fn triangle_is_ball() {
        let d = SimplicialComplex::from_facets(["012", "023"].map(digits));
        assert!(is_ball_2d(&d));
        assert!(!is_sphere_2d(&d));
    }

    #[test]
    fn simplex_boundary_certified_without_moves() {
        let s = SimplicialComplex::simplex_boundary(&digits("01234"));
        let c = bistellar_reduce(&s, 10, 0).unwrap();
        assert!(c.certified());
        assert!(c.moves.is_empty());
    }

    #[test]
    fn wedge_of_tetrahedra_fails() {
        let w = SimplicialComplex::from_facets(["0123", "0456"].map(digits));
        let r = is_closed_manifold(&w, 3, ReductionOptions::default()).unwrap();
        assert!(!r.passes(false));
    }
}
