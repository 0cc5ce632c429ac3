//! Dense exact linear algebra over [`Rational`].

use crate::rational::{QVector, Rational};

/// Row-reduces `rows` in place to reduced row echelon form over the first
/// `ncols` columns and returns the pivot column of each nonzero row.
/// Zero rows are dropped.
pub fn rref(rows: &mut Vec<Vec<Rational>>, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        if inv != Rational::ONE {
            for x in rows[r].iter_mut() {
                if !x.is_zero() {
                    *x *= &inv;
                }
            }
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

pub fn rank(rows: &[Vec<Rational>]) -> usize {
    let Some(first) = rows.first() else { return 0 };
    let n = first.len();
    let mut m = rows.to_vec();
    rref(&mut m, n).len()
}

/// Basis of `{x : row·x = 0 for every row}` in ℚⁿ.
pub fn nullspace(rows: &[Vec<Rational>], n: usize) -> Vec<QVector> {
    let mut m = rows.to_vec();
    let pivots = rref(&mut m, n);
    let mut is_pivot = vec![false; n];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let mut basis = Vec::new();
    for free in (0..n).filter(|&c| !is_pivot[c]) {
        let mut v = QVector::zeros(n);
        v[free] = Rational::ONE;
        for (row, &p) in m.iter().zip(&pivots) {
            v[p] = -&row[free];
        }
        basis.push(v);
    }
    basis
}

/// Solves `a_i·x + b_i = 0` for all rows `(a_i, b_i)`. Returns a particular
/// solution and a basis of the solution directions, or `None` if inconsistent.
pub fn solve_affine(normals: &[Vec<Rational>], offsets: &[Rational], n: usize) -> Option<(QVector, Vec<QVector>)> {
    let mut m: Vec<Vec<Rational>> = normals
        .iter()
        .zip(offsets)
        .map(|(a, b)| {
            let mut row = a.clone();
            row.push(-b);
            row
        })
        .collect();
    let pivots = rref(&mut m, n + 1);
    if pivots.last() == Some(&n) {
        return None;
    }
    let mut x = QVector::zeros(n);
    for (row, &p) in m.iter().zip(&pivots) {
        x[p] = row[n].clone();
    }
    let dirs = nullspace(&m.iter().map(|r| r[..n].to_vec()).collect::<Vec<_>>(), n);
    Some((x, dirs))
}

pub fn determinant(mut m: Vec<Vec<Rational>>) -> Rational {
    let n = m.len();
    let mut det = Rational::ONE;
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !m[i][c].is_zero()) else {
            return Rational::ZERO;
        };
        if p != c {
            m.swap(p, c);
            det = -det;
        }
        det *= &m[c][c];
        for i in c + 1..n {
            if m[i][c].is_zero() {
                continue;
            }
            let f = &m[i][c] / &m[c][c];
            for j in c..n {
                let t = &f * &m[c][j];
                m[i][j] -= t;
            }
        }
    }
    det
}

/// Inverse of a square matrix, or `None` if singular.
pub fn inverse(m: &[Vec<Rational>]) -> Option<Vec<Vec<Rational>>> {
    let n = m.len();
    let mut aug: Vec<Vec<Rational>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Rational::ONE } else { Rational::ZERO }));
            r
        })
        .collect();
    let pivots = rref(&mut aug, n);
    if pivots.len() < n || pivots.iter().enumerate().any(|(i, &p)| p != i) {
        return None;
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}
