//! Polyhedra in H-representation.
//!
//! A [`Polyhedron`] is a list of affine equations (`= 0`) and inequalities
//! (`≥ 0`) in ℚⁿ. Everything derived from the constraints (emptiness,
//! implicit equalities, affine hull, a relative-interior point, the
//! canonical form) is computed on first use and cached. The caches are
//! `OnceLock`s, so values stay immutable from the outside and can be shared
//! across threads.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use crate::error::{check_dim, Error, Result};
use crate::functional::AffineFunctional;
use crate::linalg::{rref, solve_affine};
use crate::lp::{optimize, LpResult, Sense};
use crate::rational::{QVector, Rational};

#[derive(Clone, Debug)]
struct Analysis {
    empty: bool,
    implicit: Vec<usize>,
    relint: Option<QVector>,
    /// Point and direction basis of the affine hull.
    hull: Option<(QVector, Vec<QVector>)>,
}

/// Sort key identifying a polyhedron's point set. Equal keys iff equal sets.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonKey {
    pub eqs: Vec<Vec<Rational>>,
    pub ineqs: Vec<Vec<Rational>>,
}

#[derive(Clone)]
pub struct Polyhedron {
    n: usize,
    eqs: Vec<AffineFunctional>,
    ineqs: Vec<AffineFunctional>,
    is_canonical: bool,
    analysis: OnceLock<Analysis>,
    canonical: OnceLock<(Vec<AffineFunctional>, Vec<AffineFunctional>)>,
}

impl Polyhedron {
    /// Panics if some functional has the wrong length; see [`Polyhedron::try_new`].
    pub fn new(n: usize, eqs: Vec<AffineFunctional>, ineqs: Vec<AffineFunctional>) -> Self {
        Self::try_new(n, eqs, ineqs).expect("constraint length must match the ambient dimension")
    }

    pub fn try_new(n: usize, eqs: Vec<AffineFunctional>, ineqs: Vec<AffineFunctional>) -> Result<Self> {
        for f in eqs.iter().chain(&ineqs) {
            check_dim(n, f.dim())?;
        }
        Ok(Polyhedron {
            n,
            eqs,
            ineqs,
            is_canonical: false,
            analysis: OnceLock::new(),
            canonical: OnceLock::new(),
        })
    }

    pub fn universe(n: usize) -> Self {
        Self::new(n, vec![], vec![])
    }

    pub fn empty(n: usize) -> Self {
        Self::new(n, vec![], vec![AffineFunctional::new(QVector::zeros(n), -Rational::ONE)])
    }

    pub fn point(p: &QVector) -> Self {
        let n = p.dim();
        let eqs = (0..n).map(|i| AffineFunctional::coordinate(n, i, -&p[i], false)).collect();
        Self::new(n, eqs, vec![])
    }

    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    pub fn equalities(&self) -> &[AffineFunctional] {
        &self.eqs
    }

    pub fn inequalities(&self) -> &[AffineFunctional] {
        &self.ineqs
    }

    fn analysis(&self) -> &Analysis {
        self.analysis.get_or_init(|| analyze(self.n, &self.eqs, &self.ineqs))
    }

    pub fn is_empty(&self) -> bool {
        self.analysis().empty
    }

    /// Indices of inequalities that hold with equality on all of the
    /// polyhedron. For the empty polyhedron every index is returned.
    pub fn implicit_equalities(&self) -> Vec<usize> {
        self.analysis().implicit.clone()
    }

    /// `-1` for the empty set, otherwise the dimension of the affine hull.
    pub fn dimension(&self) -> i64 {
        match &self.analysis().hull {
            None => -1,
            Some((_, dirs)) => dirs.len() as i64,
        }
    }

    /// A point satisfying every non-implicit inequality strictly.
    pub fn relative_interior_point(&self) -> Result<QVector> {
        self.analysis().relint.clone().ok_or(Error::EmptyPolyhedron)
    }

    /// A point of the affine hull and a basis of its direction space.
    pub fn affine_hull(&self) -> Option<(QVector, Vec<QVector>)> {
        self.analysis().hull.clone()
    }

    /// Basis of the linear space parallel to the affine hull (empty for the empty set).
    pub fn direction_space(&self) -> Vec<QVector> {
        self.analysis().hull.as_ref().map(|(_, d)| d.clone()).unwrap_or_default()
    }

    /// Explicit and implicit equalities together.
    pub fn all_equalities(&self) -> Vec<AffineFunctional> {
        let mut eqs = self.eqs.clone();
        for &i in &self.analysis().implicit {
            eqs.push(self.ineqs[i].clone());
        }
        eqs
    }

    /// Inequalities that are not implicit equalities.
    pub fn strict_inequalities(&self) -> Vec<AffineFunctional> {
        let implicit = &self.analysis().implicit;
        self.ineqs
            .iter()
            .enumerate()
            .filter(|(i, _)| !implicit.contains(i))
            .map(|(_, h)| h.clone())
            .collect()
    }

    pub fn contains_point(&self, x: &[Rational]) -> bool {
        assert_eq!(x.len(), self.n);
        self.eqs.iter().all(|e| e.eval(x).is_zero()) && self.ineqs.iter().all(|h| !h.eval(x).is_negative())
    }

    /// True if `x` lies in the relative interior.
    pub fn contains_point_relint(&self, x: &[Rational]) -> bool {
        if !self.contains_point(x) {
            return false;
        }
        let implicit = &self.analysis().implicit;
        self.ineqs
            .iter()
            .enumerate()
            .all(|(i, h)| implicit.contains(&i) || h.eval(x).is_positive())
    }

    /// Minimum of `f` over the polyhedron (`None` when unbounded below or empty).
    pub fn minimize(&self, f: &AffineFunctional) -> Option<Rational> {
        match optimize(self.n, &self.eqs, &self.ineqs, &f.normal, Sense::Minimize) {
            LpResult::Optimal { value, .. } => Some(value + &f.offset),
            _ => None,
        }
    }

    /// True iff `other ⊆ self`.
    pub fn contains(&self, other: &Polyhedron) -> bool {
        assert_eq!(self.n, other.n);
        if other.is_empty() {
            return true;
        }
        if self.is_empty() {
            return false;
        }
        let (p0, dirs) = other.affine_hull().expect("nonempty");
        for e in &self.eqs {
            if !e.eval(&p0).is_zero() || dirs.iter().any(|d| !e.normal.dot(d).is_zero()) {
                return false;
            }
        }
        let relint = other.relative_interior_point().expect("nonempty");
        for h in &self.ineqs {
            if h.eval(&relint).is_negative() {
                return false;
            }
        }
        if dirs.is_empty() {
            return true;
        }
        let other_ineqs: Vec<AffineFunctional> = other.ineqs.iter().map(|h| h.canonical_inequality()).collect();
        for h in &self.ineqs {
            if dirs.iter().all(|d| h.normal.dot(d).is_zero()) {
                // constant on the hull, already checked at the relint point
                continue;
            }
            if other_ineqs.contains(&h.canonical_inequality()) {
                continue;
            }
            match other.minimize(h) {
                Some(v) if !v.is_negative() => {}
                _ => return false,
            }
        }
        true
    }

    pub fn intersect(&self, other: &Polyhedron) -> Result<Polyhedron> {
        check_dim(self.n, other.n)?;
        let mut eqs = self.eqs.clone();
        eqs.extend(other.eqs.iter().cloned());
        let mut ineqs = self.ineqs.clone();
        ineqs.extend(other.ineqs.iter().cloned());
        Polyhedron::try_new(self.n, eqs, ineqs)
    }

    pub fn with_constraints(&self, eqs: &[AffineFunctional], ineqs: &[AffineFunctional]) -> Polyhedron {
        let mut e = self.eqs.clone();
        e.extend(eqs.iter().cloned());
        let mut i = self.ineqs.clone();
        i.extend(ineqs.iter().cloned());
        Polyhedron::new(self.n, e, i)
    }

    /// The smallest face containing `x` (which must lie in the polyhedron):
    /// every inequality tight at `x` is promoted to an equality.
    pub fn face_containing(&self, x: &[Rational]) -> Polyhedron {
        let mut eqs = self.eqs.clone();
        let mut ineqs = Vec::new();
        for h in &self.ineqs {
            if h.eval(x).is_zero() {
                eqs.push(h.clone());
            } else {
                ineqs.push(h.clone());
            }
        }
        Polyhedron::new(self.n, eqs, ineqs)
    }

    /// True iff `face` is a face of `self` (the empty set and `self` included).
    pub fn has_face(&self, face: &Polyhedron) -> bool {
        assert_eq!(self.n, face.n);
        if face.is_empty() {
            return true;
        }
        self.contains(face) && self.has_face_of_subset(face)
    }

    /// Face test for a `face` already known to be a subset of `self`.
    pub(crate) fn has_face_of_subset(&self, face: &Polyhedron) -> bool {
        if face.is_empty() {
            return true;
        }
        let p = face.relative_interior_point().expect("nonempty");
        let minimal = self.face_containing(&p);
        minimal.dimension() == face.dimension() && face.contains(&minimal)
    }

    /// The polyhedron moved by `v`. Canonical inputs give canonical outputs:
    /// translation keeps the facet structure, only rescaling and reordering
    /// are needed.
    pub fn translate(&self, v: &[Rational]) -> Polyhedron {
        assert_eq!(v.len(), self.n);
        let mut eqs: Vec<AffineFunctional> = self.eqs.iter().map(|e| e.translated(v)).collect();
        let mut ineqs: Vec<AffineFunctional> = self.ineqs.iter().map(|h| h.translated(v)).collect();
        if !self.is_canonical || self.is_empty() {
            return Polyhedron::new(self.n, eqs, ineqs);
        }
        for e in eqs.iter_mut() {
            *e = e.canonical_hyperplane();
        }
        for h in ineqs.iter_mut() {
            *h = h.canonical_inequality();
        }
        eqs.sort();
        ineqs.sort();
        let mut p = Polyhedron::new(self.n, eqs, ineqs);
        p.is_canonical = true;
        p
    }

    /// `self × other` in ℚ^(n1 + n2).
    pub fn product(&self, other: &Polyhedron) -> Polyhedron {
        let total = self.n + other.n;
        let eqs = self
            .eqs
            .iter()
            .map(|e| e.embed(total, 0))
            .chain(other.eqs.iter().map(|e| e.embed(total, self.n)))
            .collect();
        let ineqs = self
            .ineqs
            .iter()
            .map(|h| h.embed(total, 0))
            .chain(other.ineqs.iter().map(|h| h.embed(total, self.n)))
            .collect();
        Polyhedron::new(total, eqs, ineqs)
    }

    fn canonical_parts(&self) -> &(Vec<AffineFunctional>, Vec<AffineFunctional>) {
        self.canonical.get_or_init(|| canonicalize(self))
    }

    /// Canonical H-representation: reduced row echelon equations with
    /// primitive integer rows, and the facet inequalities reduced modulo the
    /// equations, primitive, irredundant and sorted.
    pub fn canonical(&self) -> Polyhedron {
        if self.is_canonical {
            return self.clone();
        }
        let (eqs, ineqs) = self.canonical_parts().clone();
        let p = Polyhedron {
            n: self.n,
            eqs,
            ineqs,
            is_canonical: true,
            analysis: OnceLock::new(),
            canonical: OnceLock::new(),
        };
        let a = self.analysis();
        let _ = p.analysis.set(Analysis {
            empty: a.empty,
            implicit: if a.empty { (0..p.ineqs.len()).collect() } else { vec![] },
            relint: a.relint.clone(),
            hull: a.hull.clone(),
        });
        p
    }

    pub fn is_canonical(&self) -> bool {
        self.is_canonical
    }

    pub fn key(&self) -> CanonKey {
        let (eqs, ineqs) = if self.is_canonical {
            (&self.eqs, &self.ineqs)
        } else {
            let parts = self.canonical_parts();
            (&parts.0, &parts.1)
        };
        CanonKey {
            eqs: eqs.iter().map(|e| e.coefficients()).collect(),
            ineqs: ineqs.iter().map(|h| h.coefficients()).collect(),
        }
    }

    /// Same point set.
    pub fn set_eq(&self, other: &Polyhedron) -> bool {
        self.n == other.n && self.key() == other.key()
    }

    /// Facets (faces of dimension one less), from the canonical form.
    pub fn facets(&self) -> Vec<Polyhedron> {
        let c = self.canonical();
        if c.is_empty() {
            return vec![];
        }
        (0..c.ineqs.len())
            .map(|i| {
                let mut eqs = c.eqs.clone();
                eqs.push(c.ineqs[i].clone());
                let ineqs = c.ineqs.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, h)| h.clone()).collect();
                Polyhedron::new(self.n, eqs, ineqs).canonical()
            })
            .collect()
    }

    /// All nonempty faces, including the polyhedron itself, sorted by key.
    pub fn faces(&self) -> Vec<Polyhedron> {
        let c = self.canonical();
        if c.is_empty() {
            return vec![];
        }
        let mut seen: BTreeMap<CanonKey, Polyhedron> = BTreeMap::new();
        let mut stack = vec![c.clone()];
        seen.insert(c.key(), c);
        while let Some(f) = stack.pop() {
            for g in f.facets() {
                let k = g.key();
                if !seen.contains_key(&k) {
                    seen.insert(k, g.clone());
                    stack.push(g);
                }
            }
        }
        seen.into_values().collect()
    }
}

impl PartialEq for Polyhedron {
    /// Point-set equality.
    fn eq(&self, other: &Self) -> bool {
        self.set_eq(other)
    }
}

impl fmt::Debug for Polyhedron {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Polyhedron")
            .field("ambient_dim", &self.n)
            .field("eq", &self.eqs)
            .field("ineq", &self.ineqs)
            .finish()
    }
}

/// `dimension` as a free function, mirroring the operation list.
pub fn dimension(p: &Polyhedron) -> i64 {
    p.dimension()
}

pub fn intersect(p: &Polyhedron, q: &Polyhedron) -> Result<Polyhedron> {
    p.intersect(q)
}

pub fn is_face(face: &Polyhedron, p: &Polyhedron) -> Result<bool> {
    check_dim(p.ambient_dim(), face.ambient_dim())?;
    Ok(p.has_face(face))
}

pub fn implicit_equalities(p: &Polyhedron) -> Vec<usize> {
    p.implicit_equalities()
}

pub fn relative_interior_point(p: &Polyhedron) -> Result<QVector> {
    p.relative_interior_point()
}

fn lifted(h: &AffineFunctional, total: usize) -> AffineFunctional {
    h.embed(total, 0)
}

fn analyze(n: usize, eqs: &[AffineFunctional], ineqs: &[AffineFunctional]) -> Analysis {
    let empty = || Analysis {
        empty: true,
        implicit: (0..ineqs.len()).collect(),
        relint: None,
        hull: None,
    };
    let normals: Vec<Vec<Rational>> = eqs.iter().map(|e| e.normal.0.clone()).collect();
    let offsets: Vec<Rational> = eqs.iter().map(|e| e.offset.clone()).collect();
    let Some((x0, dirs)) = solve_affine(&normals, &offsets, n) else {
        return empty();
    };
    if ineqs.is_empty() {
        return Analysis {
            empty: false,
            implicit: vec![],
            relint: Some(x0.clone()),
            hull: Some((x0, dirs)),
        };
    }

    // max t  s.t.  h_i(x) − t ≥ 0,  1 − t ≥ 0
    let total = n + 1;
    let t = |h: &AffineFunctional| {
        let mut g = lifted(h, total);
        g.normal[n] = -Rational::ONE;
        g
    };
    let eqs_t: Vec<AffineFunctional> = eqs.iter().map(|e| lifted(e, total)).collect();
    let mut rows: Vec<AffineFunctional> = ineqs.iter().map(t).collect();
    rows.push(AffineFunctional::coordinate(total, n, Rational::ONE, true));
    let obj = QVector::unit(total, n);
    let (tval, xstar) = match optimize(total, &eqs_t, &rows, &obj, Sense::Maximize) {
        LpResult::Optimal { value, point } => (value, QVector(point.0[..n].to_vec())),
        _ => unreachable!("bounded by t ≤ 1 and feasible once the equations are"),
    };
    if tval.is_negative() {
        return empty();
    }
    if tval.is_positive() {
        return Analysis {
            empty: false,
            implicit: vec![],
            relint: Some(xstar),
            hull: Some((x0, dirs)),
        };
    }

    // Some inequality is an implicit equality. Peel off provably loose ones.
    let mut unknown: Vec<usize> = (0..ineqs.len()).filter(|&i| ineqs[i].eval(&xstar).is_zero()).collect();
    let mut loose: Vec<usize> = (0..ineqs.len()).filter(|&i| ineqs[i].eval(&xstar).is_positive()).collect();
    loop {
        if unknown.is_empty() {
            break;
        }
        // variables (x, s_u): max Σ s_u  s.t.  h_u(x) − s_u ≥ 0, 0 ≤ s_u ≤ 1, h_j(x) ≥ 0
        let m = unknown.len();
        let total = n + m;
        let eqs_s: Vec<AffineFunctional> = eqs.iter().map(|e| lifted(e, total)).collect();
        let mut rows: Vec<AffineFunctional> = Vec::new();
        for (k, &u) in unknown.iter().enumerate() {
            let mut g = lifted(&ineqs[u], total);
            g.normal[n + k] = -Rational::ONE;
            rows.push(g);
            rows.push(AffineFunctional::coordinate(total, n + k, Rational::ZERO, false));
            rows.push(AffineFunctional::coordinate(total, n + k, Rational::ONE, true));
        }
        for &j in &loose {
            rows.push(lifted(&ineqs[j], total));
        }
        let mut obj = QVector::zeros(total);
        for k in 0..m {
            obj[n + k] = Rational::ONE;
        }
        let point = match optimize(total, &eqs_s, &rows, &obj, Sense::Maximize) {
            LpResult::Optimal { value, point } if value.is_positive() => QVector(point.0[..n].to_vec()),
            LpResult::Optimal { .. } => break,
            _ => unreachable!("nonempty and bounded"),
        };
        let (now_loose, still): (Vec<usize>, Vec<usize>) =
            unknown.iter().partition(|&&u| ineqs[u].eval(&point).is_positive());
        debug_assert!(!now_loose.is_empty());
        loose.extend(now_loose);
        unknown = still;
    }
    let implicit = unknown;
    let mut all_eqs: Vec<AffineFunctional> = eqs.to_vec();
    all_eqs.extend(implicit.iter().map(|&i| ineqs[i].clone()));
    let normals: Vec<Vec<Rational>> = all_eqs.iter().map(|e| e.normal.0.clone()).collect();
    let offsets: Vec<Rational> = all_eqs.iter().map(|e| e.offset.clone()).collect();
    let (h0, hdirs) = solve_affine(&normals, &offsets, n).expect("feasible");

    let relint = if loose.is_empty() {
        h0.clone()
    } else {
        let total = n + 1;
        let eqs_t: Vec<AffineFunctional> = all_eqs.iter().map(|e| lifted(e, total)).collect();
        let mut rows: Vec<AffineFunctional> = loose.iter().map(|&j| t(&ineqs[j])).collect();
        rows.push(AffineFunctional::coordinate(total, n, Rational::ONE, true));
        match optimize(total, &eqs_t, &rows, &QVector::unit(total, n), Sense::Maximize) {
            LpResult::Optimal { value, point } => {
                debug_assert!(value.is_positive());
                QVector(point.0[..n].to_vec())
            }
            _ => unreachable!("nonempty and bounded"),
        }
    };
    Analysis {
        empty: false,
        implicit,
        relint: Some(relint),
        hull: Some((h0, hdirs)),
    }
}

fn canonicalize(p: &Polyhedron) -> (Vec<AffineFunctional>, Vec<AffineFunctional>) {
    let n = p.n;
    if p.is_empty() {
        return (vec![], vec![AffineFunctional::new(QVector::zeros(n), -Rational::ONE)]);
    }
    // Equations in RREF over [x1..xn | c].
    let mut rows: Vec<Vec<Rational>> = p
        .all_equalities()
        .iter()
        .map(|e| {
            let mut r = e.normal.0.clone();
            r.push(e.offset.clone());
            r
        })
        .collect();
    let pivots = rref(&mut rows, n + 1);
    let eqs: Vec<AffineFunctional> = rows
        .iter()
        .map(|r| {
            let mut coeffs = vec![r[n].clone()];
            coeffs.extend(r[..n].iter().cloned());
            AffineFunctional::from_coefficients(&coeffs).canonical_hyperplane()
        })
        .collect();

    let mut ineqs: Vec<AffineFunctional> = Vec::new();
    for h in p.strict_inequalities() {
        let mut coeffs = h.normal.0.clone();
        coeffs.push(h.offset.clone());
        for (row, &pc) in rows.iter().zip(&pivots) {
            if coeffs[pc].is_zero() {
                continue;
            }
            let f = coeffs[pc].clone();
            for (c, r) in coeffs.iter_mut().zip(row) {
                if !r.is_zero() {
                    *c -= &f * r;
                }
            }
        }
        let g = AffineFunctional::new(QVector(coeffs[..n].to_vec()), coeffs[n].clone()).canonical_inequality();
        if g.is_constant() {
            continue;
        }
        if !ineqs.contains(&g) {
            ineqs.push(g);
        }
    }
    ineqs.sort();

    // Drop redundant inequalities one at a time.
    let mut i = 0;
    while i < ineqs.len() {
        let others: Vec<AffineFunctional> =
            ineqs.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, h)| h.clone()).collect();
        let redundant = match optimize(n, &eqs, &others, &ineqs[i].normal, Sense::Minimize) {
            LpResult::Optimal { value, .. } => !(value + &ineqs[i].offset).is_negative(),
            _ => false,
        };
        if redundant {
            ineqs.remove(i);
        } else {
            i += 1;
        }
    }
    let mut eqs = eqs;
    eqs.sort();
    (eqs, ineqs)
}
