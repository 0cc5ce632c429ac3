//! Integer-linear images of complexes and the generic basis construction.

use std::fmt;

use crate::complex::{union_many, PolyhedralComplex};
use crate::error::{check_dim, Error, Result};
use crate::fm::fm_project;
use crate::functional::AffineFunctional;
use crate::linalg::{determinant, nullspace, rank};
use crate::polyhedron::Polyhedron;
use crate::rational::{QVector, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Vec<i64>>,
}

impl IntegerMatrix {
    pub fn new(entries: Vec<Vec<i64>>) -> Result<Self> {
        let rows = entries.len();
        let cols = entries.first().map_or(0, |r| r.len());
        if entries.iter().any(|r| r.len() != cols) {
            return Err(Error::InvalidInput("ragged matrix rows".into()));
        }
        Ok(IntegerMatrix { rows, cols, entries })
    }

    pub fn with_shape(rows: usize, cols: usize, entries: Vec<Vec<i64>>) -> Result<Self> {
        let m = Self::new(entries)?;
        if m.rows != rows || (rows > 0 && m.cols != cols) {
            return Err(Error::InvalidInput(format!(
                "matrix declared {rows}x{cols} but entries are {}x{}",
                m.rows, m.cols
            )));
        }
        Ok(IntegerMatrix { rows, cols, entries: m.entries })
    }

    pub fn identity(n: usize) -> Self {
        let entries = (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect();
        IntegerMatrix { rows: n, cols: n, entries }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[Vec<i64>] {
        &self.entries
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.entries[i]
    }

    fn to_rational(&self) -> Vec<Vec<Rational>> {
        self.entries.iter().map(|r| r.iter().map(|&x| Rational::from(x)).collect()).collect()
    }

    pub fn determinant(&self) -> Result<Rational> {
        if self.rows != self.cols {
            return Err(Error::InvalidInput("determinant of a non-square matrix".into()));
        }
        Ok(determinant(self.to_rational()))
    }

    pub fn is_unimodular(&self) -> bool {
        self.determinant().is_ok_and(|d| d.abs() == Rational::ONE)
    }

    /// Integer inverse of a unimodular matrix.
    pub fn inverse(&self) -> Result<IntegerMatrix> {
        if !self.is_unimodular() {
            return Err(Error::NotUnimodular(format!("{self}")));
        }
        let inv = crate::linalg::inverse(&self.to_rational()).expect("unimodular is invertible");
        let entries = inv
            .iter()
            .map(|r| {
                r.iter()
                    .map(|x| i64::try_from(x.numer()).expect("entries of a unimodular inverse are small integers"))
                    .collect()
            })
            .collect();
        Ok(IntegerMatrix { rows: self.rows, cols: self.cols, entries })
    }

    pub fn mul(&self, other: &IntegerMatrix) -> Result<IntegerMatrix> {
        check_dim(self.cols, other.rows)?;
        let entries = (0..self.rows)
            .map(|i| (0..other.cols).map(|j| (0..self.cols).map(|k| self.entries[i][k] * other.entries[k][j]).sum()).collect())
            .collect();
        Ok(IntegerMatrix { rows: self.rows, cols: other.cols, entries })
    }

    pub fn apply(&self, x: &[Rational]) -> Result<QVector> {
        check_dim(self.cols, x.len())?;
        Ok(self
            .entries
            .iter()
            .map(|r| r.iter().zip(x).filter(|(a, _)| **a != 0).map(|(&a, xi)| Rational::from(a) * xi).sum())
            .collect())
    }
}

impl fmt::Display for IntegerMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> =
            self.entries.iter().map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")).collect();
        write!(f, "[{}]", rows.join("; "))
    }
}

/// `{A x : x ∈ P}` via projection of the graph `{(y, x) : y = A x, x ∈ P}`.
fn image_cell(p: &Polyhedron, a: &IntegerMatrix) -> Result<Polyhedron> {
    let (m, n) = (a.rows, a.cols);
    let total = m + n;
    let mut eqs: Vec<AffineFunctional> = p.equalities().iter().map(|h| h.embed(total, m)).collect();
    let ineqs: Vec<AffineFunctional> = p.inequalities().iter().map(|h| h.embed(total, m)).collect();
    for i in 0..m {
        let mut normal = QVector::zeros(total);
        normal[i] = Rational::ONE;
        for j in 0..n {
            normal[m + j] = Rational::from(-a.entries[i][j]);
        }
        eqs.push(AffineFunctional::new(normal, Rational::ZERO));
    }
    let graph = Polyhedron::try_new(total, eqs, ineqs)?;
    fm_project(&graph, &(0..m).collect::<Vec<_>>())
}

/// Image of a complex under `x ↦ A x`; overlapping cell images are repaired
/// into a valid complex.
pub fn linear_image(c: &PolyhedralComplex, a: &IntegerMatrix) -> Result<PolyhedralComplex> {
    check_dim(a.cols, c.ambient_dim())?;
    let images = c.cells().iter().map(|p| image_cell(p, a)).collect::<Result<Vec<_>>>()?;
    union_many(a.rows, images)
}

/// Image under a unimodular `U`: `P ↦ {y : U⁻¹ y ∈ P}`. Cell order is kept.
pub fn change_coordinates(c: &PolyhedralComplex, u: &IntegerMatrix) -> Result<PolyhedralComplex> {
    let n = c.ambient_dim();
    if u.rows != n || u.cols != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: u.rows.max(u.cols),
        });
    }
    let inv = u.inverse()?;
    // h(x) = a·x + b becomes a·(U⁻¹y) + b, with normal (U⁻¹)ᵀ a
    let pull = |h: &AffineFunctional| {
        let normal: QVector = (0..n)
            .map(|j| (0..n).filter(|&i| inv.entries[i][j] != 0).map(|i| Rational::from(inv.entries[i][j]) * &h.normal[i]).sum())
            .collect();
        AffineFunctional::new(normal, h.offset.clone())
    };
    let cells: Vec<Polyhedron> = c
        .cells()
        .iter()
        .map(|p| {
            Polyhedron::new(n, p.equalities().iter().map(pull).collect(), p.inequalities().iter().map(pull).collect())
                .canonical()
        })
        .collect();
    let out = PolyhedralComplex::from_parts(n, cells, false);
    if !c.is_validated() {
        return Ok(out);
    }
    out.validated()
        .map_err(|e| Error::Contract(format!("coordinate change broke the complex: {e}")))
}

/// [`change_coordinates`] without re-validation; a bijective linear map
/// carries a valid complex to a valid complex.
pub(crate) fn change_coordinates_unchecked(c: &PolyhedralComplex, u: &IntegerMatrix) -> Result<PolyhedralComplex> {
    let moved = change_coordinates(&PolyhedralComplex::from_parts(c.ambient_dim(), c.cells().to_vec(), false), u)?;
    Ok(PolyhedralComplex::from_parts(moved.ambient_dim(), moved.cells().to_vec(), c.is_validated()))
}

/// True iff `u` is orthogonal to every vector of `dirs`.
fn perpendicular(u: &[i64], dirs: &[QVector]) -> bool {
    dirs.iter().all(|d| {
        u.iter().zip(d.iter()).filter(|(a, _)| **a != 0).map(|(&a, x)| Rational::from(a) * x).sum::<Rational>().is_zero()
    })
}

fn avoids_all(u: &[i64], spaces: &[Vec<QVector>]) -> bool {
    spaces.iter().all(|dirs| !perpendicular(u, dirs))
}

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Vectors of max-norm exactly `k` in lexicographic order, primitive only.
fn shell(n: usize, k: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let mut cur = vec![-k; n];
    loop {
        if cur.iter().any(|x| x.abs() == k) && cur.iter().fold(0, |g, &x| gcd(g, x)) == 1 {
            out.push(cur.clone());
        }
        let mut i = n;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] < k {
                cur[i] += 1;
                break;
            }
            cur[i] = -k;
        }
    }
}

/// A unimodular matrix whose first row is the primitive vector `f`.
fn complete_to_basis(f: &[i64]) -> Vec<Vec<i64>> {
    let n = f.len();
    let mut v = f.to_vec();
    // v = f·E and m = E⁻¹, so f = v·m throughout
    let mut m: Vec<Vec<i64>> = IntegerMatrix::identity(n).entries;
    loop {
        let p = (0..n).filter(|&i| v[i] != 0).min_by_key(|&i| v[i].abs()).expect("primitive vector is nonzero");
        let mut done = true;
        for j in 0..n {
            if j == p || v[j] == 0 {
                continue;
            }
            let c = v[j] / v[p];
            v[j] -= c * v[p];
            let (row_j, row_p) = (m[j].clone(), &mut m[p]);
            for (x, y) in row_p.iter_mut().zip(&row_j) {
                *x += c * y;
            }
            if v[j] != 0 {
                done = false;
            }
        }
        if done {
            if v[p] < 0 {
                v[p] = -v[p];
                m[p].iter_mut().for_each(|x| *x = -*x);
            }
            m.swap(0, p);
            debug_assert_eq!(m[0], f);
            return m;
        }
    }
}

/// The integers `0, 1, −1, 2, −2, …` up to `|a| ≤ bound`.
fn search_order(bound: i64) -> impl Iterator<Item = i64> {
    std::iter::once(0).chain((1..=bound).flat_map(|a| [a, -a]))
}

/// A unimodular basis (as matrix rows `f₁, …, fₙ`) such that no `fᵢ` and
/// no `f_j − f_i` is orthogonal to the direction space of any
/// positive-dimensional face of `c`.
pub fn generic_basis(c: &PolyhedralComplex) -> Result<IntegerMatrix> {
    if !c.is_validated() {
        return Err(Error::NotValidated);
    }
    let n = c.ambient_dim();
    let faces = c.faces();
    let spaces: Vec<Vec<QVector>> =
        faces.iter().filter(|f| f.dimension() > 0).map(|f| f.direction_space()).collect();
    if spaces.is_empty() || n == 0 {
        return Ok(IntegerMatrix::identity(n));
    }
    let bound = 1000 * faces.len() as i64;

    let f1 = (1..=bound)
        .flat_map(|k| shell(n, k))
        .find(|u| avoids_all(u, &spaces))
        .ok_or_else(|| Error::SearchExhausted("no primitive first basis vector found".into()))?;
    let g = complete_to_basis(&f1);
    let mut basis = vec![f1.clone()];
    for gj in g.iter().skip(1) {
        let found = search_order(bound).find_map(|a| {
            let fj: Vec<i64> = gj.iter().zip(&f1).map(|(x, y)| x + a * y).collect();
            let ok = avoids_all(&fj, &spaces)
                && basis.iter().all(|fi| {
                    let diff: Vec<i64> = fj.iter().zip(fi).map(|(x, y)| x - y).collect();
                    avoids_all(&diff, &spaces)
                });
            ok.then_some(fj)
        });
        match found {
            Some(fj) => basis.push(fj),
            None => return Err(Error::SearchExhausted(format!("no shift within |a| <= {bound} for basis vector {}", basis.len() + 1))),
        }
    }
    let m = IntegerMatrix::new(basis)?;
    if !m.is_unimodular() {
        return Err(Error::Contract("generic basis is not unimodular".into()));
    }
    Ok(m)
}

/// Independent check of the generic-basis conditions for `m` against `c`.
pub fn is_generic_basis(c: &PolyhedralComplex, m: &IntegerMatrix) -> bool {
    if !m.is_unimodular() || m.rows != c.ambient_dim() {
        return false;
    }
    let spaces: Vec<Vec<QVector>> =
        c.faces().iter().filter(|f| f.dimension() > 0).map(|f| f.direction_space()).collect();
    let mut tests: Vec<Vec<i64>> = m.entries.clone();
    for j in 0..m.rows {
        for i in 0..j {
            tests.push(m.entries[j].iter().zip(&m.entries[i]).map(|(x, y)| x - y).collect());
        }
    }
    // u ⟂ D(F) iff u lies in the orthogonal complement, i.e. adding u to a
    // basis of D(F)^⊥ does not raise the rank
    let complements: Vec<Vec<Vec<Rational>>> = spaces
        .iter()
        .map(|dirs| {
            let rows: Vec<Vec<Rational>> = dirs.iter().map(|d| d.0.clone()).collect();
            nullspace(&rows, m.rows).into_iter().map(|v| v.0).collect()
        })
        .collect();
    tests.iter().all(|u| {
        let u: Vec<Rational> = u.iter().map(|&x| Rational::from(x)).collect();
        complements.iter().all(|perp| {
            let mut rows = perp.clone();
            rows.push(u.clone());
            rank(&rows) > perp.len()
        })
    })
}
