//! Smith normal form over the integers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::Serialize;

use super::matrix::{serialize_bigints, ExactMatrix};

/// `diag(d_1, ..., d_r, 0, ..., 0)` with `d_i | d_{i+1}`, optionally with
/// unimodular `left`, `right` such that `left * original * right` is the
/// diagonal matrix.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SmithForm {
    #[serde(serialize_with = "serialize_bigints")]
    pub diagonal: Vec<BigInt>,
    pub rank: usize,
    #[serde(skip)]
    pub left: Option<ExactMatrix>,
    #[serde(skip)]
    pub right: Option<ExactMatrix>,
}

impl SmithForm {
    pub fn diagonal_matrix(&self, rows: usize, cols: usize) -> ExactMatrix {
        let mut d = ExactMatrix::zeros(rows, cols);
        for (i, v) in self.diagonal.iter().enumerate() {
            d[(i, i)] = v.clone();
        }
        d
    }

    /// Nonzero entries first, each dividing the next, all nonnegative.
    pub fn has_divisibility_chain(&self) -> bool {
        let nonzero = self.diagonal.iter().take_while(|d| !d.is_zero()).count();
        nonzero == self.rank
            && self.diagonal[nonzero..].iter().all(Zero::is_zero)
            && self.diagonal.iter().all(|d| !d.is_negative())
            && self.diagonal[..nonzero]
                .windows(2)
                .all(|w| w[1].is_multiple_of(&w[0]))
    }

    /// Checks the certificates against `original`, if they were requested.
    pub fn certificates_hold(&self, original: &ExactMatrix) -> Option<bool> {
        let (left, right) = (self.left.as_ref()?, self.right.as_ref()?);
        let product = &(left * original) * right;
        let unit = |m: &ExactMatrix| m.determinant().abs() == BigInt::from(1);
        Some(
            product == self.diagonal_matrix(original.rows(), original.cols())
                && unit(left)
                && unit(right),
        )
    }
}

struct Reducer {
    a: ExactMatrix,
    left: Option<ExactMatrix>,
    right: Option<ExactMatrix>,
}

impl Reducer {
    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap_rows(i, j);
        if let Some(p) = &mut self.left {
            p.swap_rows(i, j);
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        self.a.swap_cols(i, j);
        if let Some(q) = &mut self.right {
            q.swap_cols(i, j);
        }
    }

    fn add_row(&mut self, target: usize, source: usize, factor: &BigInt) {
        self.a.add_row_multiple(target, source, factor);
        if let Some(p) = &mut self.left {
            p.add_row_multiple(target, source, factor);
        }
    }

    fn add_col(&mut self, target: usize, source: usize, factor: &BigInt) {
        self.a.add_col_multiple(target, source, factor);
        if let Some(q) = &mut self.right {
            q.add_col_multiple(target, source, factor);
        }
    }

    fn negate_row(&mut self, i: usize) {
        self.a.negate_row(i);
        if let Some(p) = &mut self.left {
            p.negate_row(i);
        }
    }

    /// Nonzero entry of least absolute value in the trailing block from `t`.
    fn smallest_entry(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for i in t..self.a.rows() {
            for j in t..self.a.cols() {
                let v = &self.a[(i, j)];
                if v.is_zero() {
                    continue;
                }
                if best.is_none_or(|(bi, bj)| v.abs() < self.a[(bi, bj)].abs()) {
                    best = Some((i, j));
                }
            }
        }
        best
    }

    /// Clears row and column `t` as far as division allows; returns whether
    /// a nonzero remainder was left behind.
    fn eliminate(&mut self, t: usize) -> bool {
        let pivot = self.a[(t, t)].clone();
        let mut leftover = false;
        for i in t + 1..self.a.rows() {
            if self.a[(i, t)].is_zero() {
                continue;
            }
            let (q, r) = self.a[(i, t)].div_rem(&pivot);
            self.add_row(i, t, &-q);
            leftover |= !r.is_zero();
        }
        for j in t + 1..self.a.cols() {
            if self.a[(t, j)].is_zero() {
                continue;
            }
            let (q, r) = self.a[(t, j)].div_rem(&pivot);
            self.add_col(j, t, &-q);
            leftover |= !r.is_zero();
        }
        leftover
    }

    fn first_non_multiple(&self, t: usize) -> Option<usize> {
        let pivot = &self.a[(t, t)];
        (t + 1..self.a.rows())
            .find(|&i| (t + 1..self.a.cols()).any(|j| !self.a[(i, j)].is_multiple_of(pivot)))
    }
}

/// Classic reduction, always pivoting on the nonzero entry of least absolute
/// value in the remaining block.
pub fn smith_normal_form(matrix: &ExactMatrix, with_certificates: bool) -> SmithForm {
    let (rows, cols) = (matrix.rows(), matrix.cols());
    let mut r = Reducer {
        a: matrix.clone(),
        left: with_certificates.then(|| ExactMatrix::identity(rows)),
        right: with_certificates.then(|| ExactMatrix::identity(cols)),
    };
    let mut t = 0;
    while t < rows.min(cols) {
        let Some((pi, pj)) = r.smallest_entry(t) else {
            break;
        };
        r.swap_rows(t, pi);
        r.swap_cols(t, pj);
        if r.eliminate(t) {
            continue;
        }
        if let Some(i) = r.first_non_multiple(t) {
            r.add_row(t, i, &BigInt::from(1));
            continue;
        }
        if r.a[(t, t)].is_negative() {
            r.negate_row(t);
        }
        t += 1;
    }
    let diagonal = (0..rows.min(cols)).map(|i| r.a[(i, i)].clone()).collect();
    SmithForm {
        diagonal,
        rank: t,
        left: r.left,
        right: r.right,
    }
}
