use std::collections::{HashMap, VecDeque};
use std::fmt;

use num_bigint::BigInt;
use serde::{Serialize, Serializer};

use super::sparse::{invariant_factors, SparseMatrix};
use crate::complex::{Simplex, SimplicialComplex};
use crate::error::{Error, Result};

/// One homology group: `Z^rank ⊕ Z_t1 ⊕ ... ⊕ Z_tk` with `t1 | t2 | ...`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomologyGroup {
    pub rank: usize,
    #[serde(serialize_with = "ser_big")]
    pub torsion: Vec<BigInt>,
}

fn ser_big<S: Serializer>(v: &[BigInt], s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for x in v {
        match i64::try_from(x) {
            Ok(i) => seq.serialize_element(&i)?,
            Err(_) => seq.serialize_element(&x.to_string())?,
        }
    }
    seq.end()
}

impl HomologyGroup {
    pub fn free(rank: usize) -> HomologyGroup {
        HomologyGroup {
            rank,
            torsion: Vec::new(),
        }
    }

    pub fn cyclic(order: u64) -> HomologyGroup {
        match order {
            0 => HomologyGroup::free(1),
            1 => HomologyGroup::free(0),
            n => HomologyGroup {
                rank: 0,
                torsion: vec![BigInt::from(n)],
            },
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }

    /// Group order, `None` when infinite.
    pub fn order(&self) -> Option<BigInt> {
        if self.rank > 0 {
            None
        } else {
            Some(self.torsion.iter().product())
        }
    }
}

impl fmt::Display for HomologyGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|t| format!("Z_{t}")));
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join("+"))
        }
    }
}

/// Unreduced integral homology in degrees `0..=dim`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct HomologyProfile(pub Vec<HomologyGroup>);

impl HomologyProfile {
    pub fn degree(&self, k: usize) -> HomologyGroup {
        self.0
            .get(k)
            .cloned()
            .unwrap_or_else(|| HomologyGroup::free(0))
    }

    pub fn betti(&self) -> Vec<usize> {
        self.0.iter().map(|g| g.rank).collect()
    }

    /// Profile of a homology `d`-sphere.
    pub fn sphere(d: usize) -> HomologyProfile {
        let mut g = vec![HomologyGroup::free(0); d + 1];
        g[0] = HomologyGroup::free(1);
        g[d] = HomologyGroup::free(1);
        if d == 0 {
            g[0] = HomologyGroup::free(2);
        }
        HomologyProfile(g)
    }

    /// Parses a spec like `"Z;Z^2;0"`: `Z`, `Z^k`, `Z_n`, `0`, joined by `+`.
    pub fn parse(s: &str) -> Result<HomologyProfile> {
        s.split(';')
            .map(|g| parse_group(g.trim()))
            .collect::<Result<Vec<_>>>()
            .map(HomologyProfile)
    }
}

fn parse_group(s: &str) -> Result<HomologyGroup> {
    let mut g = HomologyGroup::free(0);
    if s == "0" {
        return Ok(g);
    }
    for part in s.split('+') {
        let part = part.trim();
        if part == "Z" {
            g.rank += 1;
        } else if let Some(r) = part.strip_prefix("Z^") {
            g.rank += r
                .parse::<usize>()
                .map_err(|e| Error::Parse(e.to_string()))?;
        } else if let Some(t) = part.strip_prefix("Z_") {
            g.torsion.push(
                t.parse::<BigInt>()
                    .map_err(|e| Error::Parse(e.to_string()))?,
            );
        } else {
            return Err(Error::Parse(format!("bad homology group {part:?}")));
        }
    }
    g.torsion.sort();
    Ok(g)
}

impl fmt::Display for HomologyProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .map(|(k, g)| format!("H{k}={g}"))
            .collect();
        f.write_str(&parts.join(" "))
    }
}

/// Faces of every dimension indexed by position, vertices replaced by
/// their rank in the vertex order.
pub(crate) struct FaceIndex {
    pub faces: Vec<Vec<Vec<u32>>>,
    pub lookup: Vec<HashMap<Vec<u32>, usize>>,
}

impl FaceIndex {
    pub fn new(x: &SimplicialComplex) -> FaceIndex {
        let faces: Vec<Vec<Vec<u32>>> = {
            let verts = x.vertices();
            let pos: HashMap<_, u32> = verts
                .iter()
                .enumerate()
                .map(|(i, v)| (v.clone(), i as u32))
                .collect();
            x.all_faces()
                .into_iter()
                .map(|fs| {
                    fs.iter()
                        .map(|s| s.vertices().iter().map(|v| pos[v]).collect::<Vec<u32>>())
                        .collect::<Vec<_>>()
                })
                .collect()
        };
        let lookup = faces
            .iter()
            .map(|fs| fs.iter().enumerate().map(|(i, f)| (f.clone(), i)).collect())
            .collect();
        FaceIndex { faces, lookup }
    }

    /// Boundary map from `k`-faces to `(k-1)`-faces; columns are `k`-faces.
    pub fn boundary(&self, k: usize) -> SparseMatrix {
        let mut m = SparseMatrix::new(self.faces[k - 1].len(), self.faces[k].len());
        for (j, f) in self.faces[k].iter().enumerate() {
            for i in 0..f.len() {
                let mut g = f.clone();
                g.remove(i);
                let row = self.lookup[k - 1][&g];
                m.push(row, j, if i % 2 == 0 { 1 } else { -1 });
            }
        }
        m
    }
}

/// Unreduced integral homology via Smith normal forms of boundary maps.
pub fn homology(x: &SimplicialComplex) -> HomologyProfile {
    if x.dim() < 0 {
        return HomologyProfile(Vec::new());
    }
    let idx = FaceIndex::new(x);
    let d = idx.faces.len() - 1;
    let elim: Vec<_> = (1..=d)
        .map(|k| invariant_factors(&idx.boundary(k)))
        .collect();
    let rank = |k: usize| if k == 0 || k > d { 0 } else { elim[k - 1].rank };
    HomologyProfile(
        (0..=d)
            .map(|k| HomologyGroup {
                rank: idx.faces[k].len() - rank(k) - rank(k + 1),
                torsion: if k < d {
                    elim[k].torsion.clone()
                } else {
                    Vec::new()
                },
            })
            .collect(),
    )
}

/// A coherent orientation: each facet with its sign relative to the
/// sorted vertex order.
pub type Orientation = Vec<(Simplex, i8)>;

/// Orients a connected closed pseudomanifold by breadth-first propagation
/// from the least facet. `Ok(None)` means non-orientable.
pub fn orientable(x: &SimplicialComplex) -> Result<Option<Orientation>> {
    if !x.is_closed_pseudomanifold() {
        return Err(Error::NotClosed);
    }
    if !x.is_connected() {
        return Err(Error::Disconnected);
    }
    let facets = x.facets();
    let mut by_ridge: HashMap<Simplex, Vec<(usize, usize)>> = HashMap::new();
    for (fi, f) in facets.iter().enumerate() {
        for (pos, v) in f.vertices().iter().enumerate() {
            by_ridge.entry(f.without(v)).or_default().push((fi, pos));
        }
    }
    let mut sign = vec![0i8; facets.len()];
    let mut queue = VecDeque::new();
    while let Some(start) = sign.iter().position(|&s| s == 0) {
        sign[start] = 1;
        queue.push_back(start);
        while let Some(fi) = queue.pop_front() {
            let f = &facets[fi];
            for (pos, v) in f.vertices().iter().enumerate() {
                let ridge = f.without(v);
                let induced = sign[fi] * parity(pos);
                for &(gi, gpos) in &by_ridge[&ridge] {
                    if gi == fi {
                        continue;
                    }
                    let want = -induced * parity(gpos);
                    if sign[gi] == 0 {
                        sign[gi] = want;
                        queue.push_back(gi);
                    } else if sign[gi] != want {
                        return Ok(None);
                    }
                }
            }
        }
    }
    Ok(Some(facets.iter().cloned().zip(sign).collect()))
}

fn parity(pos: usize) -> i8 {
    if pos.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::digits;

    #[test]
    fn sphere_profiles() {
        let s = SimplicialComplex::simplex_boundary(&digits("01234"));
        assert_eq!(homology(&s), HomologyProfile::sphere(3));
        assert_eq!(homology(&s).to_string(), "H0=Z H1=0 H2=0 H3=Z");
    }

    #[test]
    fn components_in_degree_zero() {
        let c = SimplicialComplex::from_facets(["01", "23", "4"].map(digits));
        assert_eq!(homology(&c).degree(0).rank, 3);
    }

    #[test]
    fn parse_profile() {
        let p = HomologyProfile::parse("Z;Z^2;Z_3+Z_3;0").unwrap();
        assert_eq!(p.to_string(), "H0=Z H1=Z^2 H2=Z_3+Z_3 H3=0");
    }
}
