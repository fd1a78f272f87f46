//! Characteristic functions on polygons, fan completeness, lens-space
//! parameters of sectors and the Diophantine enumerations over the
//! rectangle, pentagon and hexagon.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::RangeInclusive;

use num_integer::Integer;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::catalog::{TorusId, KILLED};
use crate::error::{Error, Result};

pub type IVec = (i64, i64);

pub fn det(u: IVec, v: IVec) -> i64 {
    u.0 * v.1 - u.1 * v.0
}

/// `v` or `-v`, whichever has its first nonzero coordinate positive.
pub fn sign_normalize(v: IVec) -> IVec {
    if v.0 < 0 || (v.0 == 0 && v.1 < 0) {
        (-v.0, -v.1)
    } else {
        v
    }
}

pub fn is_primitive(v: IVec) -> bool {
    v.0.gcd(&v.1) == 1
}

/// Vectors `ξ(E_1), ..., ξ(E_m)` on the edges of an `m`-gon in cyclic order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CharacteristicPair {
    pub vectors: Vec<IVec>,
}

impl CharacteristicPair {
    pub fn new(vectors: Vec<IVec>) -> Result<CharacteristicPair> {
        if vectors.len() < 3 {
            return Err(Error::Characteristic(format!(
                "need at least 3 edges, got {}",
                vectors.len()
            )));
        }
        if vectors.contains(&(0, 0)) {
            return Err(Error::Characteristic("zero vector".into()));
        }
        Ok(CharacteristicPair { vectors })
    }

    pub fn m(&self) -> usize {
        self.vectors.len()
    }

    fn adjacent(&self) -> impl Iterator<Item = (IVec, IVec)> + '_ {
        let m = self.m();
        (0..m).map(move |i| (self.vectors[i], self.vectors[(i + 1) % m]))
    }

    /// Adjacent vectors form a basis of `Z²`.
    pub fn validate(&self) -> bool {
        self.adjacent().all(|(u, v)| det(u, v).abs() == 1)
    }

    /// The cones on adjacent pairs form a complete fan: consecutive
    /// determinants share one sign and the vectors wind once around the origin.
    pub fn is_complete(&self) -> bool {
        if !self.validate() {
            return false;
        }
        let signs: BTreeSet<i64> = self.adjacent().map(|(u, v)| det(u, v)).collect();
        match signs.into_iter().collect::<Vec<_>>()[..] {
            [1] => winding(&self.vectors) == 1,
            [-1] => winding(&self.vectors.iter().rev().copied().collect::<Vec<_>>()) == 1,
            _ => false,
        }
    }
}

/// Turns around the origin of a cycle whose steps all rotate
/// counterclockwise by less than a half turn.
fn winding(w: &[IVec]) -> usize {
    let upper = |v: IVec| v.1 > 0 || (v.1 == 0 && v.0 > 0);
    (0..w.len())
        .filter(|&i| !upper(w[i]) && upper(w[(i + 1) % w.len()]))
        .count()
}

impl fmt::Display for CharacteristicPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .vectors
            .iter()
            .map(|(a, b)| format!("({a},{b})"))
            .collect();
        f.write_str(&parts.join(" "))
    }
}

/// Parameters of the lens space `L(p, q)`, normalized to `p ≥ 0` and
/// `0 ≤ q < p` (or `|q|` when `p = 0`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LensParams {
    pub p: i64,
    pub q: i64,
}

impl LensParams {
    pub fn new(p: i64, q: i64) -> LensParams {
        let (p, q) = if p < 0 { (-p, -q) } else { (p, q) };
        let q = if p == 0 { q.abs() } else { q.rem_euclid(p) };
        LensParams { p, q }
    }

    /// `L(p, q) ≅ L(p, r)` iff `r ≡ ±q^{±1} (mod p)`.
    pub fn homeomorphic(&self, other: &LensParams) -> bool {
        if self.p != other.p {
            return false;
        }
        if self.p <= 1 {
            return self.p == 1 || self.q == other.q;
        }
        let p = self.p;
        let inv = |x: i64| (1..p).find(|y| (x * y).rem_euclid(p) == 1);
        let r = other.q;
        [Some(self.q), inv(self.q)]
            .into_iter()
            .flatten()
            .any(|q| (r - q).rem_euclid(p) == 0 || (r + q).rem_euclid(p) == 0)
    }
}

impl fmt::Display for LensParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "L({},{})", self.p, self.q)
    }
}

/// `(r, s)` with `det((r, s), v) = 1`.
pub fn complement(v: IVec) -> Result<IVec> {
    let e = v.0.extended_gcd(&v.1);
    if e.gcd != 1 {
        return Err(Error::NotPrimitive(v.0, v.1));
    }
    // x·v0 + y·v1 = 1 and det((r,s), v) = r·v1 − s·v0
    Ok((e.y, -e.x))
}

/// Lens parameters of the sector between edges with vectors `xi` and `xj`.
pub fn lens_parameters(xi: IVec, xj: IVec) -> Result<LensParams> {
    let rs = complement(xi)?;
    Ok(lens_parameters_with(xi, xj, rs))
}

/// Same, with an explicit `(r, s)` satisfying `det((r, s), xi) = 1`.
pub fn lens_parameters_with(xi: IVec, xj: IVec, rs: IVec) -> LensParams {
    debug_assert_eq!(det(rs, xi), 1);
    LensParams::new(det(xj, xi), det(rs, xj))
}

/// The catalog family whose killed class is `±v`.
pub fn torus_family(v: IVec) -> Result<u8> {
    let n = sign_normalize(v);
    KILLED
        .iter()
        .position(|&k| k == n)
        .map(|i| i as u8 + 1)
        .ok_or(Error::NoCatalogTorus(v.0, v.1))
}

/// Hands out catalog tori so that no two share anything beyond the
/// seven-vertex torus: base tori first for families 1 to 3 followed by
/// indices 7, 8, ..., and indices 0, 1, ... for the others.
#[derive(Clone, Debug, Default)]
pub struct TorusAllocator {
    used: [u32; 9],
}

impl TorusAllocator {
    pub fn new() -> TorusAllocator {
        TorusAllocator::default()
    }

    pub fn next(&mut self, family: u8) -> TorusId {
        let k = self.used[family as usize - 1];
        self.used[family as usize - 1] += 1;
        match family {
            1..=3 if k == 0 => TorusId::Base(family),
            1..=3 => TorusId::indexed(family, 6 + k),
            _ => TorusId::indexed(family, k),
        }
    }
}

/// `torus_for_vector` applied along a polygon with a fresh allocator.
pub fn torus_for_vector(v: IVec, alloc: &mut TorusAllocator) -> Result<TorusId> {
    Ok(alloc.next(torus_family(v)?))
}

pub type Mat2 = [[i64; 2]; 2];

pub fn apply(a: &Mat2, v: IVec) -> IVec {
    (a[0][0] * v.0 + a[0][1] * v.1, a[1][0] * v.0 + a[1][1] * v.1)
}

/// A matrix in `GL(2, Z)` sending every `xs[i]` to `±ys[i]`.
pub fn basis_change(xs: &[IVec], ys: &[IVec]) -> Option<Mat2> {
    if xs.len() != ys.len() || xs.len() < 2 {
        return None;
    }
    let (x1, x2) = (xs[0], xs[1]);
    let d = det(x1, x2);
    if d.abs() != 1 {
        return None;
    }
    // inverse of the matrix with columns x1, x2
    let inv = [[x2.1 * d, -x2.0 * d], [-x1.1 * d, x1.0 * d]];
    for (s1, s2) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
        let (y1, y2) = ((s1 * ys[0].0, s1 * ys[0].1), (s2 * ys[1].0, s2 * ys[1].1));
        let cols = [[y1.0, y2.0], [y1.1, y2.1]];
        let a = [
            [
                cols[0][0] * inv[0][0] + cols[0][1] * inv[1][0],
                cols[0][0] * inv[0][1] + cols[0][1] * inv[1][1],
            ],
            [
                cols[1][0] * inv[0][0] + cols[1][1] * inv[1][0],
                cols[1][0] * inv[0][1] + cols[1][1] * inv[1][1],
            ],
        ];
        if (a[0][0] * a[1][1] - a[0][1] * a[1][0]).abs() != 1 {
            continue;
        }
        if xs
            .iter()
            .zip(ys)
            .all(|(&x, &y)| sign_normalize(apply(&a, x)) == sign_normalize(y))
        {
            return Some(a);
        }
    }
    None
}

/// Which polygon an enumeration runs over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Polygon {
    Rectangle,
    Pentagon,
    Hexagon,
}

impl std::str::FromStr for Polygon {
    type Err = Error;

    fn from_str(s: &str) -> Result<Polygon> {
        match s {
            "rectangle" | "4" => Ok(Polygon::Rectangle),
            "pentagon" | "5" => Ok(Polygon::Pentagon),
            "hexagon" | "6" => Ok(Polygon::Hexagon),
            _ => Err(Error::Parse(format!("unknown polygon {s:?}"))),
        }
    }
}

/// One integer solution of a polygon's constraint system.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Solution {
    pub k: i64,
    pub l: i64,
    /// `[]`, `[a, b]` or `[a, b, c, d]`.
    pub params: Vec<i64>,
    pub pair: CharacteristicPair,
    pub complete: bool,
}

impl Solution {
    fn new(k: i64, l: i64, params: Vec<i64>, vectors: Vec<IVec>) -> Solution {
        let pair = CharacteristicPair { vectors };
        Solution {
            k,
            l,
            complete: pair.is_complete(),
            params,
            pair,
        }
    }
}

/// Search window; defaults follow the ranges used for each polygon.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bounds {
    pub k: RangeInclusive<i64>,
    pub l: RangeInclusive<i64>,
    pub a: RangeInclusive<i64>,
    pub c: RangeInclusive<i64>,
}

impl Bounds {
    pub fn rectangle() -> Bounds {
        Bounds {
            k: -4..=4,
            l: -4..=4,
            a: 0..=0,
            c: 0..=0,
        }
    }

    pub fn pentagon() -> Bounds {
        Bounds {
            k: -3..=3,
            l: -3..=3,
            a: -4..=4,
            c: 0..=0,
        }
    }

    pub fn hexagon() -> Bounds {
        Bounds {
            k: -3..=3,
            l: -1..=1,
            a: -3..=3,
            c: -3..=3,
        }
    }

    pub fn default_for(p: Polygon) -> Bounds {
        match p {
            Polygon::Rectangle => Bounds::rectangle(),
            Polygon::Pentagon => Bounds::pentagon(),
            Polygon::Hexagon => Bounds::hexagon(),
        }
    }

    fn grid(&self) -> Vec<(i64, i64)> {
        self.k
            .clone()
            .flat_map(|k| self.l.clone().map(move |l| (k, l)))
            .collect()
    }
}

pub fn rectangle_vectors(k: i64, l: i64) -> Vec<IVec> {
    vec![(-1, 0), (l, 1), (1, k), (0, -1)]
}

pub fn pentagon_vectors(k: i64, l: i64, a: i64, b: i64) -> Vec<IVec> {
    vec![(-1, 0), (0, -1), (1, k), (a, b), (l, 1)]
}

pub fn hexagon_vectors(k: i64, l: i64, a: i64, b: i64, c: i64, d: i64) -> Vec<IVec> {
    vec![(-1, 0), (0, -1), (1, k), (a, b), (c, d), (l, 1)]
}

/// `(k, ℓ)` with `kℓ − 1 = ±1`.
pub fn enumerate_rectangle(bounds: &Bounds) -> Vec<Solution> {
    bounds
        .grid()
        .into_iter()
        .filter(|&(k, l)| k * l == 0 || k * l == 2)
        .map(|(k, l)| Solution::new(k, l, Vec::new(), rectangle_vectors(k, l)))
        .collect()
}

/// Whether `a − bℓ = 1`, `b − ak = 1` has an integer solution.
pub fn pentagon_solvable(k: i64, l: i64) -> bool {
    // a(1 − kℓ) = 1 + ℓ
    let (den, num) = (1 - k * l, 1 + l);
    if den == 0 {
        num == 0
    } else {
        num % den == 0
    }
}

/// Solutions of `a − bℓ = 1`, `b − ak = 1` with `a` in bounds.
pub fn enumerate_pentagon(bounds: &Bounds) -> Vec<Solution> {
    let mut out: Vec<Solution> = bounds
        .grid()
        .into_par_iter()
        .flat_map_iter(|(k, l)| {
            bounds
                .a
                .clone()
                .filter(move |&a| a * (1 - k * l) == 1 + l)
                .map(move |a| {
                    let b = 1 + a * k;
                    Solution::new(k, l, vec![a, b], pentagon_vectors(k, l, a, b))
                })
        })
        .collect();
    out.sort_by_key(|s| (s.k, s.l, s.params.clone()));
    out
}

/// Solutions of `b − ak = 1`, `ad − bc = 1`, `c − dℓ = 1` with `a, c` in
/// bounds.
pub fn enumerate_hexagon(bounds: &Bounds) -> Vec<Solution> {
    let mut out: Vec<Solution> = bounds
        .grid()
        .into_par_iter()
        .flat_map_iter(|(k, l)| {
            let mut v = Vec::new();
            for a in bounds.a.clone() {
                let b = 1 + a * k;
                for c in bounds.c.clone() {
                    let d = if l == 0 {
                        if c != 1 || a == 0 || (1 + b) % a != 0 {
                            continue;
                        }
                        (1 + b) / a
                    } else {
                        if (c - 1) % l != 0 {
                            continue;
                        }
                        (c - 1) / l
                    };
                    if a * d - b * c == 1 {
                        v.push(Solution::new(
                            k,
                            l,
                            vec![a, b, c, d],
                            hexagon_vectors(k, l, a, b, c, d),
                        ));
                    }
                }
            }
            v
        })
        .collect();
    out.sort_by_key(|s| (s.k, s.l, s.params.clone()));
    out
}

pub fn enumerate(polygon: Polygon, bounds: &Bounds) -> Vec<Solution> {
    match polygon {
        Polygon::Rectangle => enumerate_rectangle(bounds),
        Polygon::Pentagon => enumerate_pentagon(bounds),
        Polygon::Hexagon => enumerate_hexagon(bounds),
    }
}

/// One listed case of the hexagon enumeration: the full solution set and
/// the complete ones, where stated.
#[derive(Clone, Debug, Deserialize)]
pub struct HexagonClaim {
    pub k: i64,
    pub l: i64,
    #[serde(default)]
    pub all: Option<Vec<[i64; 4]>>,
    #[serde(default)]
    pub complete: Option<Vec<[i64; 4]>>,
}

#[derive(Deserialize)]
struct ClaimFile {
    case: Vec<HexagonClaim>,
}

/// The published case list for `−3 ≤ k ≤ 3`, `−1 ≤ ℓ ≤ 1`, `−3 ≤ a, c ≤ 3`.
pub fn hexagon_claims() -> Vec<HexagonClaim> {
    let f: ClaimFile = toml::from_str(include_str!("../../../data/census/hexagon_cases.toml"))
        .expect("hexagon_cases.toml");
    f.case
}

/// A listed case that the enumeration does not reproduce.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Discrepancy {
    pub k: i64,
    pub l: i64,
    pub kind: String,
    pub params: [i64; 4],
}

impl fmt::Display for Discrepancy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.params;
        write!(
            f,
            "(k,l)=({},{}) {}: (a,b,c,d)=({a},{b},{c},{d})",
            self.k, self.l, self.kind
        )
    }
}

/// Compares the published cases against the enumeration.
pub fn compare_hexagon_claims(
    claims: &[HexagonClaim],
    solutions: &[Solution],
    bounds: &Bounds,
) -> Vec<Discrepancy> {
    let mut out = Vec::new();
    for claim in claims {
        let here: Vec<&Solution> = solutions
            .iter()
            .filter(|s| s.k == claim.k && s.l == claim.l)
            .collect();
        let all: BTreeSet<[i64; 4]> = here.iter().map(|s| quad(&s.params)).collect();
        let complete: BTreeSet<[i64; 4]> = here
            .iter()
            .filter(|s| s.complete)
            .map(|s| quad(&s.params))
            .collect();
        let mut diff = |kind: &str, p: [i64; 4]| {
            out.push(Discrepancy {
                k: claim.k,
                l: claim.l,
                kind: kind.into(),
                params: p,
            })
        };
        let in_bounds = |p: &[i64; 4]| bounds.a.contains(&p[0]) && bounds.c.contains(&p[2]);
        for (listed, computed, tag) in [
            (&claim.all, &all, "solution"),
            (&claim.complete, &complete, "complete"),
        ] {
            let Some(listed) = listed else { continue };
            let listed: BTreeSet<[i64; 4]> = listed.iter().copied().collect();
            for p in listed.difference(computed) {
                let kind = if !in_bounds(p) {
                    format!("listed {tag} outside bounds")
                } else if tag == "complete" && all.contains(p) {
                    "listed complete but incomplete".to_string()
                } else {
                    format!("listed {tag} not reproduced")
                };
                diff(&kind, *p);
            }
            for p in computed.difference(&listed) {
                diff(&format!("{tag} missing from list"), *p);
            }
        }
    }
    out.sort();
    out
}

fn quad(p: &[i64]) -> [i64; 4] {
    [p[0], p[1], p[2], p[3]]
}
