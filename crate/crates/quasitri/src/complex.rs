//! Finite abstract simplicial complexes stored by their facets.
//!
//! A [`SimplicialComplex`] is a normalized list of inclusion-maximal simplices
//! sorted by the vertex order. All operations return new values.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};
use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::vertex::Vertex;

/// A simplex: a sorted set of distinct vertices.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Simplex(Vec<Vertex>);

impl Simplex {
    pub fn new<I: IntoIterator<Item = Vertex>>(vertices: I) -> Simplex {
        let mut v: Vec<Vertex> = vertices.into_iter().collect();
        v.sort();
        v.dedup();
        Simplex(v)
    }

    pub fn empty() -> Simplex {
        Simplex(Vec::new())
    }

    /// Simplex on integer labels.
    pub fn ints(labels: &[i64]) -> Simplex {
        Simplex::new(labels.iter().map(|&i| Vertex::Int(i)))
    }

    /// Parses whitespace separated labels, e.g. `"0 1 u1_0"`.
    pub fn parse(s: &str) -> Result<Simplex> {
        s.split_whitespace()
            .map(|t| t.parse::<Vertex>())
            .collect::<Result<Vec<_>>>()
            .map(Simplex::new)
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.0
    }

    pub fn into_vertices(self) -> Vec<Vertex> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn dim(&self) -> isize {
        self.0.len() as isize - 1
    }

    pub fn contains(&self, v: &Vertex) -> bool {
        self.0.binary_search(v).is_ok()
    }

    pub fn is_subset(&self, other: &Simplex) -> bool {
        if self.len() > other.len() {
            return false;
        }
        let mut it = other.0.iter();
        'outer: for v in &self.0 {
            for w in it.by_ref() {
                if w == v {
                    continue 'outer;
                }
                if w > v {
                    return false;
                }
            }
            return false;
        }
        true
    }

    pub fn is_disjoint(&self, other: &Simplex) -> bool {
        !self.0.iter().any(|v| other.contains(v))
    }

    pub fn union(&self, other: &Simplex) -> Simplex {
        Simplex::new(self.0.iter().chain(other.0.iter()).cloned())
    }

    pub fn difference(&self, other: &Simplex) -> Simplex {
        Simplex(
            self.0
                .iter()
                .filter(|v| !other.contains(v))
                .cloned()
                .collect(),
        )
    }

    pub fn intersection(&self, other: &Simplex) -> Simplex {
        Simplex(
            self.0
                .iter()
                .filter(|v| other.contains(v))
                .cloned()
                .collect(),
        )
    }

    pub fn with(&self, v: Vertex) -> Simplex {
        Simplex::new(self.0.iter().cloned().chain(std::iter::once(v)))
    }

    pub fn without(&self, v: &Vertex) -> Simplex {
        Simplex(self.0.iter().filter(|w| *w != v).cloned().collect())
    }

    /// All subsets with `k` vertices, in lexicographic order.
    pub fn subsets(&self, k: usize) -> impl Iterator<Item = Simplex> + '_ {
        self.0.iter().cloned().combinations(k).map(Simplex)
    }

    /// Codimension-one faces.
    pub fn boundary(&self) -> Vec<Simplex> {
        self.0.iter().map(|v| self.without(v)).collect()
    }
}

impl FromIterator<Vertex> for Simplex {
    fn from_iter<T: IntoIterator<Item = Vertex>>(iter: T) -> Self {
        Simplex::new(iter)
    }
}

impl From<Vec<Vertex>> for Simplex {
    fn from(v: Vec<Vertex>) -> Self {
        Simplex::new(v)
    }
}

impl fmt::Display for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0.iter().join(" "))
    }
}

impl fmt::Debug for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.0.iter().join(" "))
    }
}

/// Face counts `(f_0, ..., f_d)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FVector(pub Vec<u64>);

impl FVector {
    pub fn euler(&self) -> i64 {
        self.0
            .iter()
            .enumerate()
            .map(|(k, &c)| if k % 2 == 0 { c as i64 } else { -(c as i64) })
            .sum()
    }

    pub fn get(&self, k: usize) -> u64 {
        self.0.get(k).copied().unwrap_or(0)
    }
}

impl fmt::Display for FVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.0.iter().join(", "))
    }
}

/// Result of [`SimplicialComplex::quotient`].
#[derive(Clone, Debug)]
pub struct Quotient {
    pub complex: SimplicialComplex,
    /// Faces whose image lost vertices, paired with that image.
    pub collapsed: Vec<(Simplex, Simplex)>,
}

/// A finite simplicial complex.
///
/// The void complex has no faces at all; `{∅}` has exactly the empty face.
/// Both have dimension −1.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct SimplicialComplex {
    facets: Vec<Simplex>,
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.facets.iter()).finish()
    }
}

impl SimplicialComplex {
    /// Builds a complex from any family of simplices, keeping only the
    /// inclusion-maximal ones.
    pub fn from_facets<I, S>(facets: I) -> SimplicialComplex
    where
        I: IntoIterator<Item = S>,
        S: Into<Simplex>,
    {
        let mut all: Vec<Simplex> = facets.into_iter().map(Into::into).collect();
        all.sort();
        all.dedup();
        let sizes: BTreeSet<usize> = all.iter().map(Simplex::len).collect();
        if sizes.len() > 1 {
            let mut by_size: Vec<&Simplex> = all.iter().collect();
            by_size.sort_by_key(|s| std::cmp::Reverse(s.len()));
            let mut keep: Vec<Simplex> = Vec::new();
            let mut vertex_index: HashMap<Vertex, Vec<usize>> = HashMap::new();
            for s in by_size {
                let covered = match s.vertices().first() {
                    None => !keep.is_empty(),
                    Some(v0) => vertex_index
                        .get(v0)
                        .map(|ids| {
                            ids.iter()
                                .any(|&i| keep[i].len() > s.len() && s.is_subset(&keep[i]))
                        })
                        .unwrap_or(false),
                };
                if !covered {
                    for v in s.vertices() {
                        vertex_index.entry(v.clone()).or_default().push(keep.len());
                    }
                    keep.push(s.clone());
                }
            }
            keep.sort();
            all = keep;
        }
        SimplicialComplex { facets: all }
    }

    /// Parses facets written as whitespace separated labels.
    pub fn parse_facets(lines: &[&str]) -> Result<SimplicialComplex> {
        let f = lines
            .iter()
            .map(|l| Simplex::parse(l))
            .collect::<Result<Vec<_>>>()?;
        Ok(SimplicialComplex::from_facets(f))
    }

    /// The complex with no faces.
    pub fn void() -> SimplicialComplex {
        SimplicialComplex { facets: Vec::new() }
    }

    /// The complex `{∅}`.
    pub fn empty_face() -> SimplicialComplex {
        SimplicialComplex {
            facets: vec![Simplex::empty()],
        }
    }

    /// The closure of one simplex.
    pub fn simplex(s: Simplex) -> SimplicialComplex {
        SimplicialComplex { facets: vec![s] }
    }

    /// The boundary of the simplex `s`.
    pub fn simplex_boundary(s: &Simplex) -> SimplicialComplex {
        if s.is_empty() {
            return SimplicialComplex::void();
        }
        SimplicialComplex::from_facets(s.boundary())
    }

    pub fn facets(&self) -> &[Simplex] {
        &self.facets
    }

    pub fn num_facets(&self) -> usize {
        self.facets.len()
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn dim(&self) -> isize {
        self.facets.iter().map(Simplex::dim).max().unwrap_or(-1)
    }

    pub fn vertices(&self) -> Vec<Vertex> {
        let set: BTreeSet<&Vertex> = self.facets.iter().flat_map(|f| f.vertices()).collect();
        set.into_iter().cloned().collect()
    }

    pub fn num_vertices(&self) -> usize {
        let set: HashSet<&Vertex> = self.facets.iter().flat_map(|f| f.vertices()).collect();
        set.len()
    }

    pub fn has_vertex(&self, v: &Vertex) -> bool {
        self.facets.iter().any(|f| f.contains(v))
    }

    pub fn contains_face(&self, s: &Simplex) -> bool {
        self.facets.iter().any(|f| s.is_subset(f))
    }

    pub fn is_facet(&self, s: &Simplex) -> bool {
        self.facets.binary_search(s).is_ok()
    }

    /// All faces with `k + 1` vertices, sorted. `k = -1` gives `{∅}` for a
    /// non-void complex.
    pub fn faces(&self, k: isize) -> Vec<Simplex> {
        if k < -1 || self.is_void() || k > self.dim() {
            return Vec::new();
        }
        let size = (k + 1) as usize;
        let set: BTreeSet<Simplex> = self
            .facets
            .iter()
            .filter(|f| f.len() >= size)
            .flat_map(|f| f.subsets(size))
            .collect();
        set.into_iter().collect()
    }

    /// Every nonempty face, grouped by dimension.
    pub fn all_faces(&self) -> Vec<Vec<Simplex>> {
        (0..=self.dim()).map(|k| self.faces(k)).collect()
    }

    pub fn f_vector(&self) -> FVector {
        let d = self.dim();
        let mut counts = Vec::new();
        for k in 0..=d {
            let size = (k + 1) as usize;
            let set: HashSet<Simplex> = self
                .facets
                .iter()
                .filter(|f| f.len() >= size)
                .flat_map(|f| f.subsets(size))
                .collect();
            counts.push(set.len() as u64);
        }
        FVector(counts)
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.f_vector().euler()
    }

    /// The link of a face.
    pub fn link(&self, s: &Simplex) -> Result<SimplicialComplex> {
        let f: Vec<Simplex> = self
            .facets
            .iter()
            .filter(|f| s.is_subset(f))
            .map(|f| f.difference(s))
            .collect();
        if f.is_empty() {
            return Err(Error::NotAFace(s.to_string()));
        }
        Ok(SimplicialComplex::from_facets(f))
    }

    pub fn vertex_link(&self, v: &Vertex) -> Result<SimplicialComplex> {
        self.link(&Simplex::new([v.clone()]))
    }

    /// The closed star: all facets containing `s`, with their faces.
    pub fn star(&self, s: &Simplex) -> Result<SimplicialComplex> {
        let f: Vec<Simplex> = self
            .facets
            .iter()
            .filter(|f| s.is_subset(f))
            .cloned()
            .collect();
        if f.is_empty() {
            return Err(Error::NotAFace(s.to_string()));
        }
        Ok(SimplicialComplex { facets: f })
    }

    /// Faces not containing `s`. Deleting `∅` leaves the void complex.
    pub fn deletion(&self, s: &Simplex) -> SimplicialComplex {
        let mut out = Vec::new();
        for f in &self.facets {
            if s.is_subset(f) {
                out.extend(s.vertices().iter().map(|v| f.without(v)));
            } else {
                out.push(f.clone());
            }
        }
        SimplicialComplex::from_facets(out)
    }

    pub fn join(&self, other: &SimplicialComplex) -> Result<SimplicialComplex> {
        let va: HashSet<Vertex> = self.vertices().into_iter().collect();
        if let Some(v) = other.vertices().into_iter().find(|v| va.contains(v)) {
            return Err(Error::Overlap(format!("join: shared vertex {v}")));
        }
        let mut out = Vec::with_capacity(self.facets.len() * other.facets.len());
        for a in &self.facets {
            for b in &other.facets {
                out.push(a.union(b));
            }
        }
        Ok(SimplicialComplex::from_facets(out))
    }

    pub fn cone(&self, apex: Vertex) -> Result<SimplicialComplex> {
        self.join(&SimplicialComplex::simplex(Simplex::new([apex])))
    }

    pub fn union(&self, other: &SimplicialComplex) -> SimplicialComplex {
        SimplicialComplex::from_facets(self.facets.iter().chain(other.facets.iter()).cloned())
    }

    pub fn union_all<'a, I: IntoIterator<Item = &'a SimplicialComplex>>(
        parts: I,
    ) -> SimplicialComplex {
        SimplicialComplex::from_facets(parts.into_iter().flat_map(|c| c.facets.iter().cloned()))
    }

    /// The complex of faces common to both, computed from face sets.
    pub fn intersection(&self, other: &SimplicialComplex) -> SimplicialComplex {
        let mut out = Vec::new();
        for a in &self.facets {
            for b in &other.facets {
                let c = a.intersection(b);
                if !c.is_empty() || (a.is_empty() && b.is_empty()) {
                    out.push(c);
                }
            }
        }
        if out.is_empty() && !self.is_void() && !other.is_void() {
            return SimplicialComplex::empty_face();
        }
        SimplicialComplex::from_facets(out)
    }

    pub fn is_pure(&self) -> bool {
        self.facets.iter().map(Simplex::len).all_equal()
    }

    fn ridge_counts(&self) -> HashMap<Simplex, usize> {
        let mut counts: HashMap<Simplex, usize> = HashMap::new();
        for f in &self.facets {
            for r in f.boundary() {
                *counts.entry(r).or_insert(0) += 1;
            }
        }
        counts
    }

    /// Pure, and every ridge lies in at most two facets.
    pub fn is_weak_pseudomanifold(&self) -> bool {
        self.is_pure() && self.ridge_counts().values().all(|&c| c <= 2)
    }

    /// Pure, and every ridge lies in exactly two facets.
    pub fn is_closed_pseudomanifold(&self) -> bool {
        self.is_pure() && !self.is_void() && self.ridge_counts().values().all(|&c| c == 2)
    }

    /// Ridges lying in exactly one facet.
    pub fn boundary_complex(&self) -> Result<SimplicialComplex> {
        if !self.is_weak_pseudomanifold() {
            return Err(Error::NotPseudomanifold);
        }
        let ridges: Vec<Simplex> = self
            .ridge_counts()
            .into_iter()
            .filter(|(_, c)| *c == 1)
            .map(|(r, _)| r)
            .collect();
        Ok(SimplicialComplex::from_facets(ridges))
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Vertex sets of the connected components, sorted.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let verts = self.vertices();
        let idx: HashMap<&Vertex, usize> = verts.iter().enumerate().map(|(i, v)| (v, i)).collect();
        let mut parent: Vec<usize> = (0..verts.len()).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut y = x;
            while p[y] != r {
                let n = p[y];
                p[y] = r;
                y = n;
            }
            r
        }
        for f in &self.facets {
            if let Some(first) = f.vertices().first() {
                let a = find(&mut parent, idx[first]);
                for v in &f.vertices()[1..] {
                    let b = find(&mut parent, idx[v]);
                    parent[b] = a;
                }
            }
        }
        let mut groups: BTreeMap<usize, Vec<Vertex>> = BTreeMap::new();
        for (i, v) in verts.iter().enumerate() {
            let r = find(&mut parent, i);
            groups.entry(r).or_default().push(v.clone());
        }
        let mut out: Vec<Vec<Vertex>> = groups.into_values().collect();
        out.sort();
        out
    }

    /// All faces of `self` whose vertices lie in `w`.
    pub fn induced_subcomplex(&self, w: &[Vertex]) -> SimplicialComplex {
        if self.is_void() {
            return SimplicialComplex::void();
        }
        let w = Simplex::new(w.iter().cloned());
        SimplicialComplex::from_facets(self.facets.iter().map(|f| f.intersection(&w)))
    }

    /// True when every face of `self` spanned by vertices of `z` is a face of `z`.
    pub fn is_induced(&self, z: &SimplicialComplex) -> bool {
        self.induced_subcomplex(&z.vertices()) == *z
    }

    /// Stellar subdivision: star a new vertex `u` into the face `alpha`.
    pub fn stellar_subdivide(&self, alpha: &Simplex, u: Vertex) -> Result<SimplicialComplex> {
        if alpha.is_empty() || !self.contains_face(alpha) {
            return Err(Error::NotAFace(alpha.to_string()));
        }
        if self.has_vertex(&u) {
            return Err(Error::VertexExists(u.to_string()));
        }
        let mut out = Vec::with_capacity(self.facets.len() + alpha.len());
        for f in &self.facets {
            if alpha.is_subset(f) {
                for a in alpha.vertices() {
                    out.push(f.without(a).with(u.clone()));
                }
            } else {
                out.push(f.clone());
            }
        }
        Ok(SimplicialComplex::from_facets(out))
    }

    /// The bistellar move `alpha ↦ beta`.
    ///
    /// Requires `dim alpha + dim beta = dim self` and that the subcomplex
    /// induced on `alpha ∪ beta` is `closure(alpha) * ∂beta`.
    pub fn bistellar_move(&self, alpha: &Simplex, beta: &Simplex) -> Result<SimplicialComplex> {
        if alpha.is_empty() || beta.is_empty() {
            return Err(Error::Move("alpha and beta must be nonempty".into()));
        }
        if !alpha.is_disjoint(beta) {
            return Err(Error::Move(format!("{alpha:?} and {beta:?} intersect")));
        }
        let d = self.dim();
        if alpha.dim() + beta.dim() != d {
            return Err(Error::Move(format!("dim {alpha:?} + dim {beta:?} != {d}")));
        }
        let expected: Vec<Simplex> = beta
            .vertices()
            .iter()
            .map(|b| alpha.union(&beta.without(b)))
            .collect();
        let induced = self.induced_subcomplex(&alpha.union(beta).into_vertices());
        if induced != SimplicialComplex::from_facets(expected.clone()) {
            return Err(Error::Move(format!(
                "induced subcomplex on {:?} is not closure({alpha:?}) * boundary({beta:?})",
                alpha.union(beta)
            )));
        }
        if let Some(f) = expected.iter().find(|f| !self.is_facet(f)) {
            return Err(Error::Move(format!("{f:?} is not a facet")));
        }
        let removed: HashSet<&Simplex> = expected.iter().collect();
        let mut out: Vec<Simplex> = self
            .facets
            .iter()
            .filter(|f| !removed.contains(f))
            .cloned()
            .collect();
        for a in alpha.vertices() {
            out.push(alpha.without(a).union(beta));
        }
        Ok(SimplicialComplex::from_facets(out))
    }

    /// Identifies vertices. `classes` maps each vertex to its class label;
    /// unmapped vertices are their own class. Faces whose image is smaller
    /// than the face are reported.
    pub fn quotient(&self, classes: &BTreeMap<Vertex, Vertex>) -> Quotient {
        let image = |v: &Vertex| classes.get(v).cloned().unwrap_or_else(|| v.clone());
        let mut collapsed = Vec::new();
        let mut seen = HashSet::new();
        for f in &self.facets {
            for k in 2..=f.len() {
                for s in f.subsets(k) {
                    let img = Simplex::new(s.vertices().iter().map(image));
                    if img.len() < s.len() && seen.insert(s.clone()) {
                        collapsed.push((s, img));
                    }
                }
            }
        }
        collapsed.sort();
        let complex = SimplicialComplex::from_facets(
            self.facets
                .iter()
                .map(|f| Simplex::new(f.vertices().iter().map(image))),
        );
        Quotient { complex, collapsed }
    }

    /// Applies an injective vertex map.
    pub fn relabel<F: Fn(&Vertex) -> Vertex>(&self, phi: F) -> Result<SimplicialComplex> {
        let verts = self.vertices();
        let mut images: HashMap<Vertex, Vertex> = HashMap::with_capacity(verts.len());
        let mut used: HashSet<Vertex> = HashSet::with_capacity(verts.len());
        for v in &verts {
            let w = phi(v);
            if !used.insert(w.clone()) {
                return Err(Error::NotInjective(format!(
                    "{v} and another vertex both map to {w}"
                )));
            }
            images.insert(v.clone(), w);
        }
        Ok(SimplicialComplex::from_facets(self.facets.iter().map(
            |f| Simplex::new(f.vertices().iter().map(|v| images[v].clone())),
        )))
    }

    /// Relabels with a finite map; vertices outside the map are fixed.
    pub fn relabel_map(&self, map: &BTreeMap<Vertex, Vertex>) -> Result<SimplicialComplex> {
        self.relabel(|v| map.get(v).cloned().unwrap_or_else(|| v.clone()))
    }

    /// Elementary connected sum: remove `s1` from `self` and `s2` from
    /// `other` and glue along `psi: s1 → s2`.
    pub fn connected_sum(
        &self,
        other: &SimplicialComplex,
        s1: &Simplex,
        s2: &Simplex,
        psi: &BTreeMap<Vertex, Vertex>,
    ) -> Result<SimplicialComplex> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch(self.dim(), other.dim()));
        }
        if !self.is_pure() || !other.is_pure() {
            return Err(Error::Invalid("connected sum needs pure complexes".into()));
        }
        let va: HashSet<Vertex> = self.vertices().into_iter().collect();
        if let Some(v) = other.vertices().into_iter().find(|v| va.contains(v)) {
            return Err(Error::Overlap(format!("connected sum: shared vertex {v}")));
        }
        if !self.is_facet(s1) || !other.is_facet(s2) {
            return Err(Error::NotAFace("connected sum needs facets".into()));
        }
        let image: BTreeSet<&Vertex> = s1.vertices().iter().filter_map(|v| psi.get(v)).collect();
        if psi.len() != s1.len()
            || s1.vertices().iter().any(|v| !psi.contains_key(v))
            || image.len() != s2.len()
            || image.iter().any(|v| !s2.contains(v))
        {
            return Err(Error::NotInjective(
                "psi is not a bijection between the facets".into(),
            ));
        }
        let back: HashMap<&Vertex, &Vertex> = psi.iter().map(|(a, b)| (b, a)).collect();
        let mut out: Vec<Simplex> = self.facets.iter().filter(|f| *f != s1).cloned().collect();
        out.extend(other.facets.iter().filter(|f| *f != s2).map(|f| {
            Simplex::new(f.vertices().iter().map(|v| {
                back.get(v)
                    .map(|w| (*w).clone())
                    .unwrap_or_else(|| v.clone())
            }))
        }));
        Ok(SimplicialComplex::from_facets(out))
    }

    /// A vertex bijection onto `other` carrying facets to facets, if any.
    pub fn is_isomorphic(&self, other: &SimplicialComplex) -> Option<BTreeMap<Vertex, Vertex>> {
        crate::iso::find_isomorphism(self, other)
    }
}

/// Parses compact facet notation where every character is one integer
/// label, e.g. `"0123"`.
pub fn digits(s: &str) -> Simplex {
    Simplex::new(
        s.chars()
            .map(|c| Vertex::Int(c.to_digit(10).expect("digit label") as i64)),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cx(items: &[&str]) -> SimplicialComplex {
        SimplicialComplex::from_facets(items.iter().map(|s| digits(s)))
    }

    #[test]
    fn subsumption_is_normalized() {
        let c = cx(&["012", "01"]);
        assert_eq!(c.facets(), &[digits("012")]);
        assert_eq!(SimplicialComplex::void().dim(), -1);
        assert_ne!(SimplicialComplex::void(), SimplicialComplex::empty_face());
    }

    #[test]
    fn link_of_empty_face_is_whole() {
        let c = cx(&["012", "123"]);
        assert_eq!(c.link(&Simplex::empty()).unwrap(), c);
        assert!(c.link(&digits("03")).is_err());
    }

    #[test]
    fn tetrahedron_boundary_link() {
        let s = SimplicialComplex::simplex_boundary(&digits("0123"));
        assert_eq!(
            s.vertex_link(&Vertex::Int(0)).unwrap(),
            SimplicialComplex::simplex_boundary(&digits("123"))
        );
        assert_eq!(s.euler_characteristic(), 2);
    }

    #[test]
    fn joins() {
        let a = cx(&["01"]);
        let b = cx(&["23"]);
        assert_eq!(a.join(&b).unwrap(), cx(&["0123"]));
        assert_eq!(a.join(&SimplicialComplex::empty_face()).unwrap(), a);
        assert!(a.join(&a).is_err());
    }

    #[test]
    fn weak_pseudomanifold() {
        let c = cx(&["012", "013", "014"]);
        assert!(!c.is_weak_pseudomanifold());
        assert!(c.boundary_complex().is_err());
    }

    #[test]
    fn induced() {
        let c = cx(&["012", "123"]);
        assert_eq!(c.induced_subcomplex(&[]), SimplicialComplex::empty_face());
        assert_eq!(c.induced_subcomplex(&c.vertices()), c);
        assert_eq!(
            c.induced_subcomplex(&[Vertex::Int(0), Vertex::Int(3)]),
            cx(&["0", "3"])
        );
    }

    #[test]
    fn star_facet_of_tetrahedron_boundary() {
        let s = SimplicialComplex::simplex_boundary(&digits("0123"));
        let t = s.stellar_subdivide(&digits("012"), Vertex::Int(9)).unwrap();
        assert_eq!(t.f_vector(), FVector(vec![5, 9, 6]));
        assert!(s.stellar_subdivide(&digits("012"), Vertex::Int(1)).is_err());
    }

    #[test]
    fn zero_move_on_four_simplex_boundary() {
        let s = SimplicialComplex::simplex_boundary(&digits("01234"));
        let t = s.bistellar_move(&digits("0123"), &digits("5")).unwrap();
        assert_eq!(t.num_vertices(), 6);
        assert_eq!(t.bistellar_move(&digits("5"), &digits("0123")).unwrap(), s);
    }

    #[test]
    fn quotient_reports_collapse() {
        let c = cx(&["012"]);
        let mut m = BTreeMap::new();
        m.insert(Vertex::Int(2), Vertex::Int(0));
        let q = c.quotient(&m);
        assert_eq!(q.complex, cx(&["01"]));
        assert!(!q.collapsed.is_empty());
        assert!(c.quotient(&BTreeMap::new()).collapsed.is_empty());
    }

    #[test]
    fn relabel_rejects_non_injective() {
        let c = cx(&["012"]);
        assert!(c.relabel(|_| Vertex::Int(0)).is_err());
    }
}
