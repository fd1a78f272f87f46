//! The seven-vertex torus and the catalog of solid tori bounded by it.
//!
//! Vertex labels: `0..6` for the torus itself, `u{j}_{n}`, `v{j}_{n}`,
//! `w{j}_{n}` for the interior vertices of family `j`, `q{n}_{i}`, `r{n}_{i}`,
//! `s{n}_{i}` for families 4 to 6 and `a{n}_{i}`, `b{n}_{i}`, `c{n}_{i}` for
//! families 7 to 9. Primed copies carry a trailing `'`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use serde::{Deserialize, Serialize};

use crate::complex::{digits, Simplex, SimplicialComplex};
use crate::error::{Error, Result};
use crate::vertex::Vertex;

/// Killed classes of families 1 to 9 in the basis `α1 = [0160]`, `α2 = [0250]`.
pub const KILLED: [(i64, i64); 9] = [
    (1, 0),
    (0, 1),
    (1, 1),
    (3, 1),
    (1, -2),
    (2, 3),
    (2, 1),
    (1, -1),
    (1, 2),
];

/// Name of a catalog solid torus.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TorusId {
    /// One of the three seven-vertex solid tori `T1`, `T2`, `T3`.
    Base(u8),
    /// `T_{family,n}`.
    Indexed { family: u8, n: u32 },
}

impl Serialize for TorusId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for TorusId {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl TorusId {
    pub fn family(&self) -> u8 {
        match *self {
            TorusId::Base(j) => j,
            TorusId::Indexed { family, .. } => family,
        }
    }

    pub fn indexed(family: u8, n: u32) -> TorusId {
        TorusId::Indexed { family, n }
    }

    pub fn killed(&self) -> (i64, i64) {
        KILLED[self.family() as usize - 1]
    }

    /// Vertex count by the family rule.
    pub fn expected_f0(&self) -> usize {
        match *self {
            TorusId::Base(_) => 7,
            TorusId::Indexed { family: 1..=3, n } if n <= 6 => 9,
            TorusId::Indexed { family: 1..=3, .. } => 10,
            TorusId::Indexed { family: 4..=6, .. } => 17,
            TorusId::Indexed { .. } => 13,
        }
    }

    fn validate(&self) -> Result<()> {
        match *self {
            TorusId::Base(1..=3) | TorusId::Indexed { family: 1..=9, .. } => Ok(()),
            _ => Err(Error::UnknownTorus(self.to_string())),
        }
    }
}

impl fmt::Display for TorusId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TorusId::Base(j) => write!(f, "T{j}"),
            TorusId::Indexed { family, n } => write!(f, "T{family},{n}"),
        }
    }
}

impl FromStr for TorusId {
    type Err = Error;

    /// Accepts `T1`, `T4,0`, `T4_0` and `4,0`.
    fn from_str(s: &str) -> Result<TorusId> {
        let bad = || Error::UnknownTorus(s.to_string());
        let body = s.trim().trim_start_matches(['T', 't']);
        let id = match body.split_once([',', '_']) {
            None => TorusId::Base(body.parse().map_err(|_| bad())?),
            Some((j, n)) => TorusId::Indexed {
                family: j.trim().parse().map_err(|_| bad())?,
                n: n.trim().parse().map_err(|_| bad())?,
            },
        };
        id.validate().map_err(|_| bad())?;
        Ok(id)
    }
}

/// A resolved catalog torus.
#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub id: TorusId,
    pub complex: SimplicialComplex,
    pub killed: (i64, i64),
    pub f0: usize,
}

/// The seven-vertex torus: `{i, i+1, i+3}` and `{i, i+2, i+3}` over Z7.
pub fn seven_vertex_torus() -> SimplicialComplex {
    SimplicialComplex::from_facets(
        [
            "013", "124", "235", "346", "045", "156", "026", "023", "134", "245", "356", "046",
            "015", "126",
        ]
        .map(digits),
    )
}

/// The three seven-vertex solid tori bounded by the seven-vertex torus.
pub fn base_torus(j: u8) -> Result<SimplicialComplex> {
    let f: [&str; 7] = match j {
        1 => ["0123", "1234", "2345", "3456", "0456", "0156", "0126"],
        2 => ["0246", "1246", "1346", "1356", "0135", "0235", "0245"],
        3 => ["0145", "1245", "1256", "2356", "0236", "0346", "0134"],
        _ => return Err(Error::UnknownTorus(format!("T{j}"))),
    };
    Ok(SimplicialComplex::from_facets(f.map(digits)))
}

fn z(i: i64) -> Vertex {
    Vertex::Int(i.rem_euclid(7))
}

fn named(prefix: &str, a: impl fmt::Display, b: impl fmt::Display) -> Vertex {
    Vertex::name(&format!("{prefix}{a}_{b}"))
}

/// `u_{j,n}`, `v_{j,n}` or `w_{j,n}`.
pub fn family_vertex(kind: char, j: u8, n: u32) -> Vertex {
    named(&kind.to_string(), j, n)
}

/// `q_{n,i}`, `r_{n,i}`, `s_{n,i}`, `a_{n,i}`, `b_{n,i}` or `c_{n,i}`.
pub fn interior_vertex(kind: char, n: u32, i: i64) -> Vertex {
    named(&kind.to_string(), n, i)
}

fn primed(v: &Vertex) -> Vertex {
    Vertex::name(&format!("{v}'"))
}

/// Structured reading of a catalog label.
#[derive(Clone, Debug, PartialEq, Eq)]
enum Label {
    Z7(i64),
    Family { kind: char, j: u8, n: u32 },
    Interior { kind: char, n: u32, i: u32 },
    Other,
}

fn parse_label(v: &Vertex) -> Label {
    match v {
        Vertex::Int(i) if (0..7).contains(i) => Label::Z7(*i),
        Vertex::Int(_) => Label::Other,
        Vertex::Name(s) => {
            let mut chars = s.chars();
            let Some(kind) = chars.next() else {
                return Label::Other;
            };
            let rest = chars.as_str();
            let Some((a, b)) = rest.split_once('_') else {
                return Label::Other;
            };
            let (Ok(a), Ok(b)) = (a.parse::<u32>(), b.parse::<u32>()) else {
                return Label::Other;
            };
            match kind {
                'u' | 'v' | 'w' if (1..=9).contains(&a) => Label::Family {
                    kind,
                    j: a as u8,
                    n: b,
                },
                'q' | 'r' | 's' | 'a' | 'b' | 'c' => Label::Interior { kind, n: a, i: b },
                _ => Label::Other,
            }
        }
    }
}

/// `f^k`: shifts Z7 by `k` and the index `n` of every indexed label by `k`.
pub fn map_f(k: u32) -> impl Fn(&Vertex) -> Vertex {
    move |v| match parse_label(v) {
        Label::Z7(i) => z(i + k as i64),
        Label::Family { kind, j, n } => family_vertex(kind, j, n + k),
        Label::Interior { kind, n, i } => named(&kind.to_string(), n + k, i),
        Label::Other => v.clone(),
    }
}

/// `g`: doubles on Z7, cycles families `1→2→3→1`, `4→5→6→4`, `7→8→9→7`,
/// `q→r→s→q`, `a→b→c→a`, and doubles indices.
pub fn map_g(v: &Vertex) -> Vertex {
    match parse_label(v) {
        Label::Z7(i) => z(2 * i),
        Label::Family { kind, j, n } => {
            let next = (j - 1) / 3 * 3 + (j % 3) + 1;
            family_vertex(kind, next, 2 * n)
        }
        Label::Interior { kind, n, i } => {
            let next = match kind {
                'q' => 'r',
                'r' => 's',
                's' => 'q',
                'a' => 'b',
                'b' => 'c',
                _ => 'a',
            };
            named(&next.to_string(), 2 * n, i)
        }
        Label::Other => v.clone(),
    }
}

/// The catalog vertex universe with indices `n <= window`.
pub fn universe(window: u32) -> Vec<Vertex> {
    let mut out: Vec<Vertex> = (0..7).map(Vertex::Int).collect();
    for n in 0..=window {
        for j in 1..=9 {
            for kind in ['u', 'v', 'w'] {
                out.push(family_vertex(kind, j, n));
            }
        }
        for kind in ['q', 'r', 's'] {
            out.extend((0..7).map(|i| interior_vertex(kind, n, i)));
        }
        for kind in ['a', 'b', 'c'] {
            out.extend((1..=3).map(|i| interior_vertex(kind, n, i)));
        }
    }
    out
}

fn sx(vs: &[&Vertex]) -> Simplex {
    Simplex::new(vs.iter().map(|v| (*v).clone()))
}

/// `T_{1,0}` by the six moves applied to `T1`.
pub fn t10() -> Result<SimplicialComplex> {
    let u = family_vertex('u', 1, 0);
    let v = family_vertex('v', 1, 0);
    let x = base_torus(1)?;
    let x = x.stellar_subdivide(&digits("123"), u.clone())?;
    let x = x.bistellar_move(&digits("234"), &sx(&[&z(5), &u]))?;
    let x = x.stellar_subdivide(&digits("056"), v.clone())?;
    let x = x.bistellar_move(&digits("456"), &sx(&[&z(3), &v]))?;
    let x = x.bistellar_move(&digits("016"), &sx(&[&z(2), &v]))?;
    x.bistellar_move(&digits("345"), &sx(&[&u, &v]))
}

/// `T'_{1,0}`: `T_{1,0}` with `w_{1,0}` starred into the interior face `012`.
pub fn t10_prime() -> Result<SimplicialComplex> {
    t10()?.stellar_subdivide(&digits("012"), family_vertex('w', 1, 0))
}

/// The balls `B_{4,n}` and `B_{7,n}`.
pub fn ball(family: u8, n: u32) -> Result<SimplicialComplex> {
    match family {
        4 => Ok(ball4(n)),
        7 => Ok(ball7(n)),
        _ => Err(Error::UnknownTorus(format!("B{family},{n}"))),
    }
}

fn ball4(n: u32) -> SimplicialComplex {
    let (u, v, w) = (
        family_vertex('u', 4, n),
        family_vertex('v', 4, n),
        family_vertex('w', 4, n),
    );
    let u1 = primed(&u);
    let p = |i: i64| z(i);
    let p1 = |i: i64| primed(&z(i));
    let q = |i: i64| interior_vertex('q', n, i.rem_euclid(7));
    let mut f = Vec::new();
    for i in 0..7 {
        f.push(sx(&[&w, &u1, &p1(i), &p1(i + 1)]));
        f.push(sx(&[&w, &p1(i), &p1(i + 1), &q(i + 2)]));
        f.push(sx(&[&w, &p1(i - 1), &q(i), &q(i + 1)]));
        f.push(sx(&[&v, &w, &q(i), &q(i + 1)]));
        f.push(sx(&[&v, &q(i), &p(i + 1), &p(i + 2)]));
        f.push(sx(&[&v, &q(i), &q(i + 1), &p(i + 2)]));
        f.push(sx(&[&u, &v, &p(i), &p(i + 1)]));
        f.push(sx(&[&p1(i - 1), &q(i), &q(i + 1), &p(i + 2)]));
        f.push(sx(&[&p1(i - 2), &p1(i - 1), &q(i), &p(i + 1)]));
        f.push(sx(&[&p1(i - 1), &q(i), &p(i + 1), &p(i + 2)]));
    }
    SimplicialComplex::from_facets(f)
}

fn ball7(n: u32) -> SimplicialComplex {
    let (u, v, w) = (
        family_vertex('u', 7, n),
        family_vertex('v', 7, n),
        family_vertex('w', 7, n),
    );
    let u1 = primed(&u);
    let e: Vec<Vertex> = (0..7).map(Vertex::Int).collect();
    let e1: Vec<Vertex> = (0..5).map(|i| primed(&e[i])).collect();
    let a: Vec<Vertex> = (1..=3).map(|i| interior_vertex('a', n, i)).collect();
    let (a1, a2, a3) = (&a[0], &a[1], &a[2]);
    let mut f = Vec::new();
    for (i, j) in [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)] {
        f.push(sx(&[&w, &u1, &e1[i], &e1[j]]));
        f.push(sx(&[&u, &v, &e[i], &e[j]]));
    }
    let rest: [[&Vertex; 4]; 33] = [
        [&w, &e1[0], &e1[1], a2],
        [&w, &e1[1], &e1[2], a3],
        [&w, &e1[2], &e1[3], &e[5]],
        [&w, &e1[3], &e1[4], &e[6]],
        [&w, &e1[0], &e1[4], &e[6]],
        [&w, &e1[0], a1, a2],
        [&w, &e1[1], a2, a3],
        [&w, &e1[2], a3, &e[5]],
        [&w, &e1[3], &e[5], &e[6]],
        [&w, &e1[0], &e[6], a1],
        [&v, &w, a1, a2],
        [&v, &w, a2, a3],
        [&v, &w, a3, &e[5]],
        [&v, &w, &e[5], &e[6]],
        [&v, &w, &e[6], a1],
        [&v, a1, &e[2], &e[3]],
        [&v, a2, &e[3], &e[4]],
        [&v, &e[0], &e[4], &e[5]],
        [&v, &e[0], &e[1], &e[5]],
        [&v, &e[1], &e[2], &e[6]],
        [&v, a1, a2, &e[3]],
        [&v, a2, a3, &e[4]],
        [&v, a3, &e[4], &e[5]],
        [&v, &e[1], &e[5], &e[6]],
        [&v, a1, &e[2], &e[6]],
        [&e1[0], a1, a2, &e[3]],
        [&e1[1], a2, a3, &e[4]],
        [&e1[0], a1, &e[2], &e[3]],
        [&e1[0], a1, &e[2], &e[6]],
        [&e1[0], &e1[1], a2, &e[3]],
        [&e1[1], a2, &e[3], &e[4]],
        [&e1[1], &e1[2], a3, &e[4]],
        [&e1[2], a3, &e[4], &e[5]],
    ];
    f.extend(rest.iter().map(|s| sx(s)));
    SimplicialComplex::from_facets(f)
}

/// The identification turning `B_{4,n}` or `B_{7,n}` into a solid torus.
pub fn ball_identification(family: u8, n: u32) -> BTreeMap<Vertex, Vertex> {
    let u = family_vertex('u', family, n);
    let k = if family == 4 { 7 } else { 5 };
    let mut m: BTreeMap<Vertex, Vertex> = (0..k)
        .map(|i| (primed(&Vertex::Int(i)), Vertex::Int(i)))
        .collect();
    m.insert(primed(&u), u);
    m
}

/// `T_{7,n}` as printed after the quotient, used as a cross-check.
pub fn t7_listed(n: u32) -> SimplicialComplex {
    let names: HashMap<char, Vertex> = [
        ('u', family_vertex('u', 7, n)),
        ('v', family_vertex('v', 7, n)),
        ('w', family_vertex('w', 7, n)),
        ('a', interior_vertex('a', n, 1)),
        ('b', interior_vertex('a', n, 2)),
        ('c', interior_vertex('a', n, 3)),
    ]
    .into_iter()
    .collect();
    let words = [
        "uw01", "uw12", "uw23", "uw34", "uw04", "wb01", "wc12", "w235", "w346", "w046", "wab0",
        "wbc1", "wc25", "w356", "wa06", "vwab", "vwbc", "vwc5", "vw56", "vwa6", "va23", "vb34",
        "v045", "v015", "v126", "vab3", "vbc4", "vc45", "v156", "va26", "uv01", "uv12", "uv23",
        "uv34", "uv04", "ab03", "bc14", "a023", "a026", "b013", "b134", "c124", "c245",
    ];
    SimplicialComplex::from_facets(words.iter().map(|w| {
        Simplex::new(w.chars().map(|c| match c.to_digit(10) {
            Some(d) => Vertex::Int(d as i64),
            None => names[&c].clone(),
        }))
    }))
}

fn build(id: TorusId) -> Result<SimplicialComplex> {
    id.validate()?;
    match id {
        TorusId::Base(j) => base_torus(j),
        TorusId::Indexed { family, n } => match family {
            1..=3 => {
                let mut x = if n <= 6 { t10()? } else { t10_prime()? };
                for _ in 1..family {
                    x = x.relabel(map_g)?;
                }
                x.relabel(map_f(n))
            }
            4 | 7 => {
                let q = ball(family, n)?.quotient(&ball_identification(family, n));
                if !q.collapsed.is_empty() {
                    return Err(Error::Invalid(format!(
                        "quotient of B{family},{n} collapses {:?}",
                        q.collapsed[0]
                    )));
                }
                Ok(q.complex)
            }
            _ => {
                let root = if family <= 6 { 4 } else { 7 };
                let mut x = resolve(TorusId::indexed(root, 0))?.complex.clone();
                for _ in root..family {
                    x = x.relabel(map_g)?;
                }
                x.relabel(map_f(n))
            }
        },
    }
}

type Cache = Mutex<HashMap<TorusId, Arc<CatalogEntry>>>;

fn cache() -> &'static Cache {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Resolves a catalog id, building and caching it on first use.
pub fn resolve(id: TorusId) -> Result<Arc<CatalogEntry>> {
    if let Some(e) = cache().lock().expect("catalog cache poisoned").get(&id) {
        return Ok(e.clone());
    }
    let complex = build(id)?;
    let entry = Arc::new(CatalogEntry {
        id,
        f0: complex.num_vertices(),
        killed: id.killed(),
        complex,
    });
    cache()
        .lock()
        .expect("catalog cache poisoned")
        .entry(id)
        .or_insert_with(|| entry.clone());
    Ok(entry)
}

/// Owned copy of a catalog entry.
pub fn solid_torus(id: TorusId) -> Result<CatalogEntry> {
    resolve(id).map(|e| (*e).clone())
}
