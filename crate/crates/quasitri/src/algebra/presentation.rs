use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::homology::HomologyGroup;
use super::matrix::IntegerMatrix;
use super::snf::{smith_normal_form, SnfDecomposition};
use super::sparse::{invariant_factors, SparseMatrix};
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::vertex::Vertex;

/// A finitely presented group. Relators are words of `(generator, ±1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupPresentation {
    pub generators: Vec<String>,
    pub relators: Vec<Vec<(usize, i32)>>,
}

impl fmt::Display for GroupPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rel: Vec<String> = self
            .relators
            .iter()
            .map(|w| {
                if w.is_empty() {
                    return "1".to_string();
                }
                w.iter()
                    .map(|&(g, e)| {
                        if e == 1 {
                            self.generators[g].clone()
                        } else {
                            format!("{}^{e}", self.generators[g])
                        }
                    })
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect();
        write!(f, "< {} | {} >", self.generators.join(", "), rel.join(", "))
    }
}

/// The edge-path group of a complex: generators are edges outside a
/// breadth-first spanning tree, one relator per triangle.
#[derive(Clone, Debug)]
pub struct EdgePathPresentation {
    pub base: Vertex,
    pub presentation: GroupPresentation,
    edge_gen: HashMap<(Vertex, Vertex), usize>,
    tree: HashMap<(Vertex, Vertex), ()>,
}

impl EdgePathPresentation {
    /// Generator word of the oriented edge `a → b`; tree edges are trivial.
    fn edge_word(&self, a: &Vertex, b: &Vertex) -> Result<Option<(usize, i32)>> {
        let (key, sign) = if a < b {
            ((a.clone(), b.clone()), 1)
        } else {
            ((b.clone(), a.clone()), -1)
        };
        if let Some(&g) = self.edge_gen.get(&key) {
            Ok(Some((g, sign)))
        } else if self.tree.contains_key(&key) {
            Ok(None)
        } else {
            Err(Error::NotALoop(format!("{a}{b} is not an edge")))
        }
    }

    /// Abelianized class of a closed edge path as an integer vector over
    /// the generators.
    pub fn loop_vector(&self, path: &[Vertex]) -> Result<Vec<i64>> {
        if path.len() < 2 || path.first() != path.last() {
            return Err(Error::NotALoop(format!("{path:?} is not closed")));
        }
        let mut v = vec![0i64; self.presentation.generators.len()];
        for w in path.windows(2) {
            if w[0] == w[1] {
                continue;
            }
            if let Some((g, s)) = self.edge_word(&w[0], &w[1])? {
                v[g] += s as i64;
            }
        }
        Ok(v)
    }
}

pub fn edge_path_presentation(
    x: &SimplicialComplex,
    base: &Vertex,
) -> Result<EdgePathPresentation> {
    if !x.has_vertex(base) {
        return Err(Error::NotAFace(base.to_string()));
    }
    if !x.is_connected() {
        return Err(Error::Disconnected);
    }
    let edges = x.faces(1);
    let mut adj: BTreeMap<Vertex, Vec<Vertex>> = BTreeMap::new();
    for e in &edges {
        let (a, b) = (&e.vertices()[0], &e.vertices()[1]);
        adj.entry(a.clone()).or_default().push(b.clone());
        adj.entry(b.clone()).or_default().push(a.clone());
    }
    let mut tree = HashMap::new();
    let mut seen: HashMap<Vertex, ()> = HashMap::from([(base.clone(), ())]);
    let mut queue = VecDeque::from([base.clone()]);
    while let Some(v) = queue.pop_front() {
        let mut nbrs = adj.get(&v).cloned().unwrap_or_default();
        nbrs.sort();
        for w in nbrs {
            if seen.insert(w.clone(), ()).is_none() {
                let key = if v < w {
                    (v.clone(), w.clone())
                } else {
                    (w.clone(), v.clone())
                };
                tree.insert(key, ());
                queue.push_back(w);
            }
        }
    }
    let mut generators = Vec::new();
    let mut edge_gen = HashMap::new();
    for e in &edges {
        let key = (e.vertices()[0].clone(), e.vertices()[1].clone());
        if !tree.contains_key(&key) {
            edge_gen.insert(key.clone(), generators.len());
            generators.push(format!("e{}_{}", key.0, key.1));
        }
    }
    let mut epp = EdgePathPresentation {
        base: base.clone(),
        presentation: GroupPresentation {
            generators,
            relators: Vec::new(),
        },
        edge_gen,
        tree,
    };
    let mut relators = Vec::new();
    for t in x.faces(2) {
        let [a, b, c] = [&t.vertices()[0], &t.vertices()[1], &t.vertices()[2]];
        let word: Vec<(usize, i32)> = [(a, b), (b, c), (c, a)]
            .iter()
            .filter_map(|(p, q)| epp.edge_word(p, q).expect("triangle edges exist"))
            .collect();
        relators.push(word);
    }
    epp.presentation.relators = relators;
    Ok(epp)
}

fn relator_matrix(p: &GroupPresentation) -> SparseMatrix {
    let mut m = SparseMatrix::new(p.relators.len(), p.generators.len());
    for (i, w) in p.relators.iter().enumerate() {
        for &(g, e) in w {
            m.push(i, g, e as i64);
        }
    }
    m
}

/// The abelianization `Z^n / (relators)`.
pub fn abelianization(p: &GroupPresentation) -> HomologyGroup {
    let e = invariant_factors(&relator_matrix(p));
    HomologyGroup {
        rank: p.generators.len() - e.rank,
        torsion: e.torsion,
    }
}

/// Coordinates in the abelianization, as produced by a Smith normal form of
/// the relator matrix.
struct AbelianCoordinates {
    snf: SnfDecomposition,
    gens: usize,
}

impl AbelianCoordinates {
    fn new(p: &GroupPresentation) -> AbelianCoordinates {
        let rows: Vec<Vec<i64>> = p
            .relators
            .iter()
            .map(|w| {
                let mut r = vec![0i64; p.generators.len()];
                for &(g, e) in w {
                    r[g] += e as i64;
                }
                r
            })
            .collect();
        let a = if rows.is_empty() {
            IntegerMatrix::zeros(0, p.generators.len())
        } else {
            IntegerMatrix::from_rows(&rows)
        };
        AbelianCoordinates {
            snf: smith_normal_form(&a),
            gens: p.generators.len(),
        }
    }

    fn torsion(&self) -> Vec<BigInt> {
        self.snf
            .invariant_factors()
            .into_iter()
            .filter(|d| !d.is_one())
            .collect()
    }

    fn free_rank(&self) -> usize {
        self.gens - self.snf.rank
    }

    /// Coordinates of `x` in the free part.
    fn free_part(&self, x: &[i64]) -> Vec<BigInt> {
        let v = &self.snf.v;
        (self.snf.rank..self.gens)
            .map(|j| {
                (0..self.gens)
                    .map(|i| BigInt::from(x[i]) * v.get(i, j))
                    .sum()
            })
            .collect()
    }
}

/// H₁ coordinates of `path` with respect to two loops that freely generate
/// `H₁(x) ≅ Z²`.
pub fn loop_class(
    x: &SimplicialComplex,
    path: &[Vertex],
    basis: [&[Vertex]; 2],
) -> Result<(i64, i64)> {
    let base = path
        .first()
        .ok_or_else(|| Error::NotALoop("empty path".into()))?;
    let epp = edge_path_presentation(x, base)?;
    let coords = AbelianCoordinates::new(&epp.presentation);
    if !coords.torsion().is_empty() || coords.free_rank() != 2 {
        return Err(Error::BadBasis(
            "first homology is not free of rank 2".into(),
        ));
    }
    let b0 = coords.free_part(&epp.loop_vector(basis[0])?);
    let b1 = coords.free_part(&epp.loop_vector(basis[1])?);
    let det = &b0[0] * &b1[1] - &b0[1] * &b1[0];
    if !det.abs().is_one() {
        return Err(Error::BadBasis(format!(
            "basis loops span a sublattice of index {}",
            det.abs()
        )));
    }
    let l = coords.free_part(&epp.loop_vector(path)?);
    let c0 = (&l[0] * &b1[1] - &l[1] * &b1[0]) * &det;
    let c1 = (&b0[0] * &l[1] - &b0[1] * &l[0]) * &det;
    Ok((to_i64(&c0)?, to_i64(&c1)?))
}

fn to_i64(x: &BigInt) -> Result<i64> {
    x.to_i64()
        .ok_or_else(|| Error::Invalid(format!("{x} does not fit in 64 bits")))
}

/// The loops `0160` and `0250` of the seven-vertex torus.
pub fn reference_loops() -> [Vec<Vertex>; 2] {
    [ints(&[0, 1, 6, 0]), ints(&[0, 2, 5, 0])]
}

fn ints(v: &[i64]) -> Vec<Vertex> {
    v.iter().map(|&i| Vertex::Int(i)).collect()
}

/// Primitive generator of `ker(H₁(𝒯) → H₁(torus))` in the basis of
/// [`reference_loops`], first nonzero coordinate positive.
pub fn killed_class(torus: &SimplicialComplex) -> Result<(i64, i64)> {
    let boundary = torus
        .boundary_complex()
        .map_err(|e| Error::NotSolidTorus(e.to_string()))?;
    if boundary != crate::catalog::seven_vertex_torus() {
        return Err(Error::NotSolidTorus(
            "boundary differs from the seven-vertex torus".into(),
        ));
    }
    let epp = edge_path_presentation(torus, &Vertex::Int(0))?;
    let coords = AbelianCoordinates::new(&epp.presentation);
    if !coords.torsion().is_empty() || coords.free_rank() != 1 {
        return Err(Error::NotSolidTorus("first homology is not Z".into()));
    }
    let [l1, l2] = reference_loops();
    let a = coords.free_part(&epp.loop_vector(&l1)?).remove(0);
    let b = coords.free_part(&epp.loop_vector(&l2)?).remove(0);
    if a.is_zero() && b.is_zero() {
        return Err(Error::NotSolidTorus("kernel has rank 2".into()));
    }
    let g = a.gcd(&b);
    let (mut k0, mut k1) = (to_i64(&(&b / &g))?, to_i64(&(-&a / &g))?);
    if k0 < 0 || (k0 == 0 && k1 < 0) {
        k0 = -k0;
        k1 = -k1;
    }
    Ok((k0, k1))
}
