//! Isomorphism search by backtracking over vertex assignments, pruned by
//! vertex degree, link f-vectors and the edge graph.

use std::collections::{BTreeMap, HashSet};

use crate::complex::{Simplex, SimplicialComplex};
use crate::vertex::Vertex;

struct Indexed {
    verts: Vec<Vertex>,
    facets: Vec<Vec<usize>>,
    adj: Vec<Vec<bool>>,
    inv: Vec<(usize, Vec<u64>)>,
    incident: Vec<Vec<usize>>,
}

fn index(c: &SimplicialComplex) -> Indexed {
    let verts = c.vertices();
    let pos: BTreeMap<&Vertex, usize> = verts.iter().enumerate().map(|(i, v)| (v, i)).collect();
    let facets: Vec<Vec<usize>> = c
        .facets()
        .iter()
        .map(|f| f.vertices().iter().map(|v| pos[v]).collect())
        .collect();
    let n = verts.len();
    let mut adj = vec![vec![false; n]; n];
    let mut incident = vec![Vec::new(); n];
    for (fi, f) in facets.iter().enumerate() {
        for &a in f {
            incident[a].push(fi);
            for &b in f {
                if a != b {
                    adj[a][b] = true;
                }
            }
        }
    }
    let inv = verts
        .iter()
        .enumerate()
        .map(|(i, v)| {
            let link = c
                .link(&Simplex::new([v.clone()]))
                .map(|l| l.f_vector().0)
                .unwrap_or_default();
            (incident[i].len(), link)
        })
        .collect();
    Indexed {
        verts,
        facets,
        adj,
        inv,
        incident,
    }
}

/// Returns a vertex bijection `x ↦ y` carrying the facets of `x` onto the
/// facets of `y`, or `None`.
pub fn find_isomorphism(
    x: &SimplicialComplex,
    y: &SimplicialComplex,
) -> Option<BTreeMap<Vertex, Vertex>> {
    if x.num_facets() != y.num_facets() || x.f_vector() != y.f_vector() {
        return None;
    }
    let a = index(x);
    let b = index(y);
    let mut ia: Vec<_> = a.inv.clone();
    let mut ib: Vec<_> = b.inv.clone();
    ia.sort();
    ib.sort();
    if ia != ib {
        return None;
    }
    let yfacets: HashSet<Vec<usize>> = b
        .facets
        .iter()
        .map(|f| {
            let mut f = f.clone();
            f.sort();
            f
        })
        .collect();

    let n = a.verts.len();
    let order = search_order(&a);
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if backtrack(0, &order, &a, &b, &yfacets, &mut map, &mut used) {
        Some(
            (0..n)
                .map(|i| (a.verts[i].clone(), b.verts[map[i]].clone()))
                .collect(),
        )
    } else {
        None
    }
}

fn search_order(a: &Indexed) -> Vec<usize> {
    let n = a.verts.len();
    let mut order = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    while order.len() < n {
        let start = (0..n)
            .filter(|&i| !placed[i])
            .max_by_key(|&i| (a.inv[i].0, std::cmp::Reverse(i)))
            .expect("unplaced vertex");
        placed[start] = true;
        order.push(start);
        let mut k = order.len() - 1;
        while k < order.len() {
            let mut next: Vec<usize> = (0..n)
                .filter(|&j| !placed[j] && a.adj[order[k]][j])
                .collect();
            next.sort_by_key(|&j| std::cmp::Reverse(a.inv[j].0));
            for j in next {
                placed[j] = true;
                order.push(j);
            }
            k += 1;
        }
    }
    order
}

fn backtrack(
    depth: usize,
    order: &[usize],
    a: &Indexed,
    b: &Indexed,
    yfacets: &HashSet<Vec<usize>>,
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    if depth == order.len() {
        return true;
    }
    let x = order[depth];
    for y in 0..b.verts.len() {
        if used[y] || a.inv[x] != b.inv[y] {
            continue;
        }
        let consistent = order[..depth]
            .iter()
            .all(|&p| a.adj[x][p] == b.adj[y][map[p]]);
        if !consistent {
            continue;
        }
        map[x] = y;
        used[y] = true;
        let facets_ok = a.incident[x].iter().all(|&fi| {
            let f = &a.facets[fi];
            if f.iter().any(|&v| map[v] == usize::MAX) {
                return true;
            }
            let mut img: Vec<usize> = f.iter().map(|&v| map[v]).collect();
            img.sort();
            yfacets.contains(&img)
        });
        if facets_ok && backtrack(depth + 1, order, a, b, yfacets, map, used) {
            return true;
        }
        map[x] = usize::MAX;
        used[y] = false;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::digits;

    #[test]
    fn relabelled_cycle_is_isomorphic() {
        let c = SimplicialComplex::from_facets(["01", "12", "23", "30"].map(digits));
        let d = c
            .relabel(|v| Vertex::Int(v.as_int().unwrap() * 10))
            .unwrap();
        let m = c.is_isomorphic(&d).unwrap();
        assert_eq!(c.relabel_map(&m).unwrap(), d);
    }

    #[test]
    fn different_complexes() {
        let c = SimplicialComplex::from_facets(["01", "12", "23", "30"].map(digits));
        let d = SimplicialComplex::from_facets(["01", "12", "20", "34"].map(digits));
        assert!(c.is_isomorphic(&d).is_none());
    }
}
