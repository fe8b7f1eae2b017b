use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::matrix::IntMatrix;

/// `U · M · V = D` with `U`, `V` unimodular and `D` diagonal, `d_1 | d_2 | …`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnfResult {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
}

impl SnfResult {
    /// Diagonal entries of `D` (including zeros), length `min(rows, cols)`.
    pub fn divisors(&self) -> Vec<BigInt> {
        (0..self.d.rows().min(self.d.cols())).map(|i| self.d.get(i, i).clone()).collect()
    }
}

struct Work {
    a: Vec<Vec<BigInt>>,
    u: Vec<Vec<BigInt>>,
    v: Vec<Vec<BigInt>>,
}

impl Work {
    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap(i, j);
        self.u.swap(i, j);
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        for row in self.a.iter_mut().chain(self.v.iter_mut()) {
            row.swap(i, j);
        }
    }

    /// row_dst += k · row_src
    fn add_row(&mut self, dst: usize, src: usize, k: &BigInt) {
        for m in [&mut self.a, &mut self.u] {
            let s = m[src].clone();
            for (x, y) in m[dst].iter_mut().zip(&s) {
                *x += k * y;
            }
        }
    }

    /// col_dst += k · col_src
    fn add_col(&mut self, dst: usize, src: usize, k: &BigInt) {
        for m in [&mut self.a, &mut self.v] {
            for row in m.iter_mut() {
                let y = row[src].clone();
                row[dst] += k * y;
            }
        }
    }
}

fn to_rows(m: &IntMatrix) -> Vec<Vec<BigInt>> {
    (0..m.rows()).map(|i| m.row(i).to_vec()).collect()
}

fn from_rows(rows: Vec<Vec<BigInt>>, r: usize, c: usize) -> IntMatrix {
    if r == 0 || c == 0 {
        return IntMatrix::zeros(r, c);
    }
    IntMatrix::from_rows(rows).expect("rectangular")
}

/// Smith normal form by elementary row and column operations, pivoting on the
/// entry of least absolute value.
pub fn smith_normal_form(m: &IntMatrix) -> SnfResult {
    let (r, c) = (m.rows(), m.cols());
    let mut w = Work {
        a: to_rows(m),
        u: to_rows(&IntMatrix::identity(r)),
        v: to_rows(&IntMatrix::identity(c)),
    };
    for t in 0..r.min(c) {
        loop {
            let pivot = (t..r)
                .flat_map(|i| (t..c).map(move |j| (i, j)))
                .filter(|&(i, j)| !w.a[i][j].is_zero())
                .min_by(|&(i1, j1), &(i2, j2)| w.a[i1][j1].abs().cmp(&w.a[i2][j2].abs()));
            let Some((pi, pj)) = pivot else {
                // Remaining block is zero.
                return finish(w, r, c);
            };
            w.swap_rows(t, pi);
            w.swap_cols(t, pj);

            let mut clean = true;
            for i in t + 1..r {
                if !w.a[i][t].is_zero() {
                    let q = w.a[i][t].div_floor(&w.a[t][t]);
                    w.add_row(i, t, &-q);
                    clean &= w.a[i][t].is_zero();
                }
            }
            for j in t + 1..c {
                if !w.a[t][j].is_zero() {
                    let q = w.a[t][j].div_floor(&w.a[t][t]);
                    w.add_col(j, t, &-q);
                    clean &= w.a[t][j].is_zero();
                }
            }
            if !clean {
                continue;
            }
            let bad = (t + 1..r).find(|&i| {
                (t + 1..c).any(|j| !w.a[i][j].is_multiple_of(&w.a[t][t]))
            });
            match bad {
                Some(i) => w.add_row(t, i, &BigInt::from(1)),
                None => break,
            }
        }
        if w.a[t][t].is_negative() {
            for m in [&mut w.a, &mut w.u] {
                for x in m[t].iter_mut() {
                    *x = -&*x;
                }
            }
        }
    }
    finish(w, r, c)
}

fn finish(mut w: Work, r: usize, c: usize) -> SnfResult {
    for t in 0..r.min(c) {
        if w.a[t][t].is_negative() {
            for m in [&mut w.a, &mut w.u] {
                for x in m[t].iter_mut() {
                    *x = -&*x;
                }
            }
        }
    }
    SnfResult {
        u: from_rows(w.u, r, r),
        d: from_rows(w.a, r, c),
        v: from_rows(w.v, c, c),
    }
}
