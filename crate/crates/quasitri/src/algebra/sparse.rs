//! Invariant factors of large sparse integer matrices.
//!
//! Unit pivots are eliminated in place with checked `i64` arithmetic; each
//! one contributes an invariant factor 1 and removes its row and column.
//! Whatever survives is handed to the dense Smith normal form. If an entry
//! overflows, the whole matrix falls back to the dense routine.

use std::collections::{HashMap, HashSet};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::matrix::IntegerMatrix;
use super::snf::smith_normal_form;

/// A sparse matrix given by its nonzero entries.
#[derive(Clone, Debug, Default)]
pub struct SparseMatrix {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<(usize, usize, i64)>,
}

impl SparseMatrix {
    pub fn new(rows: usize, cols: usize) -> SparseMatrix {
        SparseMatrix {
            rows,
            cols,
            entries: Vec::new(),
        }
    }

    pub fn push(&mut self, i: usize, j: usize, x: i64) {
        if x != 0 {
            self.entries.push((i, j, x));
        }
    }

    pub fn to_dense(&self) -> IntegerMatrix {
        let mut m = IntegerMatrix::zeros(self.rows, self.cols);
        for &(i, j, x) in &self.entries {
            let cur = m.get(i, j).clone();
            m.set(i, j, cur + BigInt::from(x));
        }
        m
    }
}

/// Rank and the invariant factors greater than one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Elimination {
    pub rank: usize,
    pub torsion: Vec<BigInt>,
}

pub fn invariant_factors(m: &SparseMatrix) -> Elimination {
    match eliminate(m) {
        Some(e) => e,
        None => dense(&m.to_dense()),
    }
}

fn dense(a: &IntegerMatrix) -> Elimination {
    let s = smith_normal_form(a);
    let torsion = s
        .invariant_factors()
        .into_iter()
        .filter(|x| !x.is_one())
        .collect();
    Elimination {
        rank: s.rank,
        torsion,
    }
}

fn eliminate(m: &SparseMatrix) -> Option<Elimination> {
    let mut rows: Vec<HashMap<usize, i64>> = vec![HashMap::new(); m.rows];
    let mut cols: Vec<HashSet<usize>> = vec![HashSet::new(); m.cols];
    for &(i, j, x) in &m.entries {
        let e = rows[i].entry(j).or_insert(0);
        *e = e.checked_add(x)?;
        if *e == 0 {
            rows[i].remove(&j);
            cols[j].remove(&i);
        } else {
            cols[j].insert(i);
        }
    }
    let mut units = 0usize;
    let mut pending: Vec<usize> = (0..m.cols).collect();
    pending.sort_by_key(|&j| (cols[j].len(), j));
    loop {
        let mut progressed = false;
        let mut deferred = Vec::new();
        for &c in &pending {
            if cols[c].is_empty() {
                continue;
            }
            let pivot = cols[c]
                .iter()
                .copied()
                .filter(|&r| rows[r][&c].abs() == 1)
                .min_by_key(|&r| (rows[r].len(), r));
            let Some(r) = pivot else {
                deferred.push(c);
                continue;
            };
            let p = rows[r][&c];
            let prow: Vec<(usize, i64)> = rows[r].iter().map(|(&j, &x)| (j, x)).collect();
            let mut others: Vec<usize> = cols[c].iter().copied().filter(|&r2| r2 != r).collect();
            others.sort_unstable();
            for r2 in others {
                let factor = rows[r2][&c].checked_mul(p)?;
                for &(j, x) in &prow {
                    let delta = factor.checked_mul(x)?;
                    let e = rows[r2].entry(j).or_insert(0);
                    *e = e.checked_sub(delta)?;
                    if *e == 0 {
                        rows[r2].remove(&j);
                        cols[j].remove(&r2);
                    } else {
                        cols[j].insert(r2);
                    }
                }
            }
            for &(j, _) in &prow {
                cols[j].remove(&r);
            }
            rows[r].clear();
            units += 1;
            progressed = true;
        }
        pending = deferred;
        if !progressed || pending.is_empty() {
            break;
        }
    }
    let live_rows: Vec<usize> = (0..m.rows).filter(|&i| !rows[i].is_empty()).collect();
    let live_cols: Vec<usize> = (0..m.cols).filter(|&j| !cols[j].is_empty()).collect();
    if live_rows.is_empty() {
        return Some(Elimination {
            rank: units,
            torsion: Vec::new(),
        });
    }
    let col_pos: HashMap<usize, usize> =
        live_cols.iter().enumerate().map(|(k, &j)| (j, k)).collect();
    let mut rest = IntegerMatrix::zeros(live_rows.len(), live_cols.len());
    for (k, &i) in live_rows.iter().enumerate() {
        for (&j, &x) in &rows[i] {
            rest.set(k, col_pos[&j], BigInt::from(x));
        }
    }
    let tail = dense(&rest);
    debug_assert!(tail.torsion.iter().all(|t| !t.is_zero()));
    Some(Elimination {
        rank: units + tail.rank,
        torsion: tail.torsion,
    })
}
