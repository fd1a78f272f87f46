use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::IntegerMatrix;

/// `U · A · V = D` with `U`, `V` unimodular and `D` in Smith normal form.
#[derive(Clone, Debug)]
pub struct SnfDecomposition {
    pub d: IntegerMatrix,
    pub u: IntegerMatrix,
    pub v: IntegerMatrix,
    pub rank: usize,
}

impl SnfDecomposition {
    /// The nonzero diagonal entries `d_1 | d_2 | ... | d_r`.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        (0..self.rank).map(|i| self.d.get(i, i).clone()).collect()
    }

    /// Checks `U·A·V = D`, the divisibility chain and `det U, det V = ±1`.
    pub fn verify(&self, a: &IntegerMatrix) -> bool {
        if self.u.mul(a).mul(&self.v) != self.d || !self.d.is_diagonal() {
            return false;
        }
        let f = self.invariant_factors();
        if f.iter().any(|x| !x.is_positive()) || f.windows(2).any(|w| !(&w[1] % &w[0]).is_zero()) {
            return false;
        }
        let k = self.d.rows().min(self.d.cols());
        if (self.rank..k).any(|i| !self.d.get(i, i).is_zero()) {
            return false;
        }
        self.u.determinant().abs().is_one() && self.v.determinant().abs().is_one()
    }
}

/// Smith normal form with transforms, by Euclidean row and column
/// reduction around the smallest available pivot.
pub fn smith_normal_form(a: &IntegerMatrix) -> SnfDecomposition {
    let (m, n) = (a.rows(), a.cols());
    let mut d = a.clone();
    let mut u = IntegerMatrix::identity(m);
    let mut v = IntegerMatrix::identity(n);
    let mut t = 0;
    while t < m.min(n) {
        let Some((pi, pj)) = min_entry(&d, t, t..m, t..n) else {
            break;
        };
        move_pivot(&mut d, &mut u, &mut v, t, pi, pj);
        loop {
            let mut dirty = false;
            for i in t + 1..m {
                if !d.get(i, t).is_zero() {
                    let q = -d.get(i, t).div_floor(d.get(t, t));
                    d.add_row(i, t, &q);
                    u.add_row(i, t, &q);
                    dirty |= !d.get(i, t).is_zero();
                }
            }
            for j in t + 1..n {
                if !d.get(t, j).is_zero() {
                    let q = -d.get(t, j).div_floor(d.get(t, t));
                    d.add_col(j, t, &q);
                    v.add_col(j, t, &q);
                    dirty |= !d.get(t, j).is_zero();
                }
            }
            if dirty {
                let (pi, pj) = min_cross(&d, t);
                move_pivot(&mut d, &mut u, &mut v, t, pi, pj);
                continue;
            }
            let bad =
                (t + 1..m).find(|&i| (t + 1..n).any(|j| !(d.get(i, j) % d.get(t, t)).is_zero()));
            match bad {
                Some(i) => {
                    let one = BigInt::one();
                    d.add_row(t, i, &one);
                    u.add_row(t, i, &one);
                }
                None => break,
            }
        }
        if d.get(t, t).is_negative() {
            d.negate_row(t);
            u.negate_row(t);
        }
        t += 1;
    }
    SnfDecomposition { d, u, v, rank: t }
}

fn min_entry(
    d: &IntegerMatrix,
    _t: usize,
    rows: std::ops::Range<usize>,
    cols: std::ops::Range<usize>,
) -> Option<(usize, usize)> {
    let mut best: Option<(BigInt, usize, usize)> = None;
    for i in rows {
        for j in cols.clone() {
            let x = d.get(i, j);
            if x.is_zero() {
                continue;
            }
            let a = x.abs();
            if best.as_ref().is_none_or(|(b, _, _)| a < *b) {
                let done = a.is_one();
                best = Some((a, i, j));
                if done {
                    return best.map(|(_, i, j)| (i, j));
                }
            }
        }
    }
    best.map(|(_, i, j)| (i, j))
}

/// Smallest nonzero entry in row `t` or column `t`.
fn min_cross(d: &IntegerMatrix, t: usize) -> (usize, usize) {
    let mut best = (d.abs_at(t, t), t, t);
    for i in t + 1..d.rows() {
        let a = d.abs_at(i, t);
        if !a.is_zero() && (best.0.is_zero() || a < best.0) {
            best = (a, i, t);
        }
    }
    for j in t + 1..d.cols() {
        let a = d.abs_at(t, j);
        if !a.is_zero() && (best.0.is_zero() || a < best.0) {
            best = (a, t, j);
        }
    }
    (best.1, best.2)
}

fn move_pivot(
    d: &mut IntegerMatrix,
    u: &mut IntegerMatrix,
    v: &mut IntegerMatrix,
    t: usize,
    i: usize,
    j: usize,
) {
    d.swap_rows(t, i);
    u.swap_rows(t, i);
    d.swap_cols(t, j);
    v.swap_cols(t, j);
}
