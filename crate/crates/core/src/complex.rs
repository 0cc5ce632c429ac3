//! Polyhedral complexes stored by their maximal cells.
//!
//! Faces and the facet graph are computed on first use and cached.
//! Constructors canonicalize every cell, drop empty and non-maximal cells and
//! sort the rest by canonical key, so two complexes built from the same cells
//! in any order are identical. A complex is only *validated* once every
//! pairwise intersection of cells has been checked to be a face of both.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::sync::OnceLock;

use crate::error::{check_dim, Error, Result};
use crate::functional::AffineFunctional;
use crate::polyhedron::{CanonKey, Polyhedron};
use crate::rational::{QVector, Rational};

/// Outcome of [`PolyhedralComplex::validate`].
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ValidationReport {
    /// Cell pairs whose intersection is not a face of both.
    pub violations: Vec<(usize, usize)>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

#[derive(Clone, Debug)]
pub struct PolyhedralComplex {
    n: usize,
    cells: Vec<Polyhedron>,
    validated: bool,
    faces: OnceLock<Vec<Polyhedron>>,
    graph: OnceLock<FacetGraph>,
}

/// Adjacency of facets across shared codimension-1 faces.
#[derive(Clone, Debug)]
pub struct FacetGraph {
    pub nodes: usize,
    /// `(i, j, witness)` with `i < j`; `witness` is the shared face.
    pub edges: Vec<(usize, usize, Polyhedron)>,
    adjacency: Vec<Vec<usize>>,
}

impl FacetGraph {
    fn new(nodes: usize, edges: Vec<(usize, usize, Polyhedron)>) -> Self {
        let mut adjacency = vec![Vec::new(); nodes];
        for (i, j, _) in &edges {
            adjacency[*i].push(*j);
            adjacency[*j].push(*i);
        }
        for a in adjacency.iter_mut() {
            a.sort_unstable();
        }
        FacetGraph { nodes, edges, adjacency }
    }

    pub fn neighbors(&self, i: usize) -> &[usize] {
        &self.adjacency[i]
    }

    pub fn are_adjacent(&self, i: usize, j: usize) -> bool {
        self.adjacency[i].binary_search(&j).is_ok()
    }

    /// Component label of every node (labels are the smallest node index).
    pub fn components(&self) -> Vec<usize> {
        components(self.nodes, self.edges.iter().map(|(i, j, _)| (*i, *j)))
    }

    pub fn is_connected(&self) -> bool {
        self.components().iter().all(|&c| c == 0)
    }
}

pub(crate) fn components(nodes: usize, edges: impl Iterator<Item = (usize, usize)>) -> Vec<usize> {
    let mut parent: Vec<usize> = (0..nodes).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while parent[r] != r {
            r = parent[r];
        }
        let mut y = x;
        while parent[y] != r {
            let next = parent[y];
            parent[y] = r;
            y = next;
        }
        r
    }
    for (a, b) in edges {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            parent[hi] = lo;
        }
    }
    (0..nodes).map(|x| find(&mut parent, x)).collect()
}

/// Canonicalizes, drops empties and duplicates, keeps maximal cells, sorts.
fn normalize_cells(cells: Vec<Polyhedron>) -> Vec<Polyhedron> {
    let mut by_key: BTreeMap<CanonKey, Polyhedron> = BTreeMap::new();
    for c in cells {
        let c = c.canonical();
        if c.is_empty() {
            continue;
        }
        by_key.entry(c.key()).or_insert(c);
    }
    let cells: Vec<Polyhedron> = by_key.into_values().collect();
    let dims: Vec<i64> = cells.iter().map(|c| c.dimension()).collect();
    let points: Vec<QVector> = cells.iter().map(|c| c.relative_interior_point().expect("nonempty")).collect();
    let mut keep = vec![true; cells.len()];
    for i in 0..cells.len() {
        for j in 0..cells.len() {
            if i == j || !keep[j] || dims[i] > dims[j] {
                continue;
            }
            // distinct canonical cells of equal dimension can still nest
            if cells[j].contains_point(&points[i]) && cells[j].contains(&cells[i]) {
                keep[i] = false;
                break;
            }
        }
    }
    cells.into_iter().zip(keep).filter(|(_, k)| *k).map(|(c, _)| c).collect()
}

impl PolyhedralComplex {
    /// Collects `cells` into an (unvalidated) complex in ℚⁿ.
    pub fn new(n: usize, cells: Vec<Polyhedron>) -> Result<Self> {
        for c in &cells {
            check_dim(n, c.ambient_dim())?;
        }
        Ok(Self::from_parts(n, normalize_cells(cells), false))
    }

    /// Convenience: [`PolyhedralComplex::new`] followed by [`PolyhedralComplex::validated`].
    pub fn from_cells(n: usize, cells: Vec<Polyhedron>) -> Result<Self> {
        Self::new(n, cells)?.validated()
    }

    pub fn empty(n: usize) -> Self {
        Self::from_parts(n, vec![], true)
    }

    pub(crate) fn from_parts(n: usize, cells: Vec<Polyhedron>, validated: bool) -> Self {
        PolyhedralComplex {
            n,
            cells,
            validated,
            faces: OnceLock::new(),
            graph: OnceLock::new(),
        }
    }

    /// Runs [`PolyhedralComplex::validate`] and marks the complex validated,
    /// or reports the offending pairs.
    pub fn validated(mut self) -> Result<Self> {
        if self.validated {
            return Ok(self);
        }
        let report = self.validate();
        if report.is_ok() {
            self.validated = true;
            Ok(self)
        } else {
            Err(Error::InvalidComplex(report.violations))
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    pub fn cells(&self) -> &[Polyhedron] {
        &self.cells
    }

    pub fn is_validated(&self) -> bool {
        self.validated
    }

    /// Largest cell dimension, `-1` for the empty complex.
    pub fn dimension(&self) -> i64 {
        self.cells.iter().map(|c| c.dimension()).max().unwrap_or(-1)
    }

    pub fn is_pure(&self) -> bool {
        let d = self.dimension();
        self.cells.iter().all(|c| c.dimension() == d)
    }

    pub fn contains_point(&self, x: &[Rational]) -> bool {
        self.cells.iter().any(|c| c.contains_point(x))
    }

    /// Checks the common-face axiom on every pair of cells.
    pub fn validate(&self) -> ValidationReport {
        let mut violations = Vec::new();
        for i in 0..self.cells.len() {
            for j in i + 1..self.cells.len() {
                let (p, q) = (&self.cells[i], &self.cells[j]);
                let meet = p.intersect(q).expect("same ambient dimension");
                if meet.is_empty() {
                    continue;
                }
                if !p.has_face_of_subset(&meet) || !q.has_face_of_subset(&meet) {
                    violations.push((i, j));
                }
            }
        }
        ValidationReport { violations }
    }

    fn require_validated(&self) -> Result<()> {
        if self.validated {
            Ok(())
        } else {
            Err(Error::NotValidated)
        }
    }

    fn require_pure(&self) -> Result<()> {
        self.require_validated()?;
        if self.is_pure() {
            Ok(())
        } else {
            Err(Error::NotPure)
        }
    }

    /// In a valid complex two facets meet in dimension `d − 1` exactly when
    /// they share a facet, so edges are found by matching canonical facets.
    pub fn facet_graph(&self) -> Result<FacetGraph> {
        self.require_validated()?;
        self.require_pure()?;
        Ok(self.graph.get_or_init(|| FacetGraph::new(self.cells.len(), self.shared_facet_edges())).clone())
    }

    fn shared_facet_edges(&self) -> Vec<(usize, usize, Polyhedron)> {
        let mut owners: BTreeMap<CanonKey, (Polyhedron, Vec<usize>)> = BTreeMap::new();
        for (i, c) in self.cells.iter().enumerate() {
            for f in c.facets() {
                owners.entry(f.key()).or_insert_with(|| (f, Vec::new())).1.push(i);
            }
        }
        let mut edges = Vec::new();
        for (face, cells) in owners.into_values() {
            for (a, &i) in cells.iter().enumerate() {
                for &j in &cells[a + 1..] {
                    edges.push((i, j, face.clone()));
                }
            }
        }
        edges.sort_by(|x, y| (x.0, x.1).cmp(&(y.0, y.1)));
        edges.dedup_by(|x, y| (x.0, x.1) == (y.0, y.1));
        edges
    }

    /// Connectedness of the support. Cells are convex, so this is the
    /// connectedness of the graph joining cells that meet.
    pub fn is_connected(&self) -> Result<bool> {
        self.require_validated()?;
        let labels = components(self.cells.len(), self.meeting_pairs().into_iter());
        Ok(labels.iter().all(|&c| c == 0))
    }

    fn meeting_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.cells.len() {
            for j in i + 1..self.cells.len() {
                if !self.cells[i].intersect(&self.cells[j]).expect("same dim").is_empty() {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Number of connected pieces left after deleting `removed` from the
    /// support, counted on cells: two cells stay linked when their
    /// intersection is not contained in any polyhedron of `removed`.
    pub fn components_avoiding(&self, removed: &[Polyhedron]) -> Result<usize> {
        self.require_validated()?;
        let mut edges = Vec::new();
        for (i, j) in self.meeting_pairs() {
            let meet = self.cells[i].intersect(&self.cells[j])?;
            if !removed.iter().any(|r| r.contains(&meet)) {
                edges.push((i, j));
            }
        }
        let labels = components(self.cells.len(), edges.into_iter());
        Ok(labels.iter().collect::<BTreeSet<_>>().len())
    }

    pub fn is_connected_through_codim1(&self) -> Result<bool> {
        self.require_pure()?;
        Ok(self.facet_graph()?.is_connected())
    }

    /// Every nonempty face of every cell, deduplicated and sorted by key.
    pub fn faces(&self) -> Vec<Polyhedron> {
        self.faces
            .get_or_init(|| {
                let mut seen: BTreeMap<CanonKey, Polyhedron> = BTreeMap::new();
                for c in &self.cells {
                    for f in c.faces() {
                        seen.entry(f.key()).or_insert(f);
                    }
                }
                seen.into_values().collect()
            })
            .clone()
    }

    /// 0-dimensional faces as points.
    pub fn vertices(&self) -> Vec<QVector> {
        self.faces()
            .into_iter()
            .filter(|f| f.dimension() == 0)
            .map(|f| f.relative_interior_point().expect("nonempty"))
            .collect()
    }

    /// Cells are the maximal pairwise intersections; the support is the
    /// intersection of the supports.
    pub fn common_refinement(&self, other: &PolyhedralComplex) -> Result<PolyhedralComplex> {
        check_dim(self.n, other.n)?;
        self.require_validated()?;
        other.require_validated()?;
        let mut refined = self.refine_unchecked(other);
        refined.validated = false;
        refined
            .validated()
            .map_err(|e| Error::Contract(format!("common refinement failed validation: {e}")))
    }

    /// Common refinement of two valid complexes, trusted to be valid.
    pub(crate) fn refine_unchecked(&self, other: &PolyhedralComplex) -> PolyhedralComplex {
        let mut cells = Vec::new();
        for p in &self.cells {
            for q in &other.cells {
                let meet = p.intersect(q).expect("same dimension");
                if !meet.is_empty() {
                    cells.push(meet);
                }
            }
        }
        PolyhedralComplex::from_parts(self.n, normalize_cells(cells), true)
    }

    /// A valid complex whose support is the union of both supports.
    pub fn union_with_repair(&self, other: &PolyhedralComplex) -> Result<PolyhedralComplex> {
        check_dim(self.n, other.n)?;
        self.require_validated()?;
        other.require_validated()?;
        union_many(self.n, [self, other].into_iter().flat_map(|c| c.cells.iter().cloned()).collect())
    }

    pub fn cartesian_product(&self, other: &PolyhedralComplex) -> Result<PolyhedralComplex> {
        self.require_validated()?;
        other.require_validated()?;
        let mut cells = Vec::with_capacity(self.cells.len() * other.cells.len());
        for p in &self.cells {
            for q in &other.cells {
                cells.push(p.product(q));
            }
        }
        PolyhedralComplex::new(self.n + other.n, cells)?
            .validated()
            .map_err(|e| Error::Contract(format!("product failed validation: {e}")))
    }

    /// Every cell moved by `v`; cell order is preserved.
    pub fn translate(&self, v: &QVector) -> Result<PolyhedralComplex> {
        check_dim(self.n, v.dim())?;
        Ok(PolyhedralComplex::from_parts(
            self.n,
            self.cells.iter().map(|c| c.translate(v)).collect(),
            self.validated,
        ))
    }

    /// Point-set equality of the supports.
    pub fn supports_equal(&self, other: &PolyhedralComplex) -> bool {
        self.n == other.n && support_covered(&self.cells, &other.cells) && support_covered(&other.cells, &self.cells)
    }

    /// True iff the support of `self` is contained in the support of `other`.
    pub fn support_contained_in(&self, other: &PolyhedralComplex) -> bool {
        self.n == other.n && support_covered(&self.cells, &other.cells)
    }
}

/// Free-function forms of the complex operations.
pub fn validate(c: &PolyhedralComplex) -> ValidationReport {
    c.validate()
}

pub fn facet_graph(c: &PolyhedralComplex) -> Result<FacetGraph> {
    c.facet_graph()
}

pub fn is_connected(c: &PolyhedralComplex) -> Result<bool> {
    c.is_connected()
}

pub fn is_connected_through_codim1(c: &PolyhedralComplex) -> Result<bool> {
    c.is_connected_through_codim1()
}

pub fn common_refinement(a: &PolyhedralComplex, b: &PolyhedralComplex) -> Result<PolyhedralComplex> {
    a.common_refinement(b)
}

pub fn union_with_repair(a: &PolyhedralComplex, b: &PolyhedralComplex) -> Result<PolyhedralComplex> {
    a.union_with_repair(b)
}

pub fn cartesian_product(a: &PolyhedralComplex, b: &PolyhedralComplex) -> Result<PolyhedralComplex> {
    a.cartesian_product(b)
}

pub fn translate(c: &PolyhedralComplex, v: &QVector) -> Result<PolyhedralComplex> {
    c.translate(v)
}

pub fn supports_equal(a: &PolyhedralComplex, b: &PolyhedralComplex) -> bool {
    a.supports_equal(b)
}

/// True iff every cell of `cells` is covered by the union of `cover`.
fn support_covered(cells: &[Polyhedron], cover: &[Polyhedron]) -> bool {
    cells.iter().all(|p| cell_covered(p, cover))
}

/// `p ⊆ ∪ cover`. The uncovered part of `p` is relatively open in `p`, so it
/// is nonempty iff some full-dimensional (relative to `p`) piece survives
/// subtracting every cover cell.
fn cell_covered(p: &Polyhedron, cover: &[Polyhedron]) -> bool {
    let d = p.dimension();
    if d < 0 {
        return true;
    }
    let mut pieces = vec![p.clone()];
    for q in cover {
        let mut next = Vec::new();
        for piece in pieces {
            let meet = piece.intersect(q).expect("same dimension");
            if meet.dimension() < d {
                next.push(piece);
                continue;
            }
            // aff(piece) ⊆ aff(q): only q's inequalities cut the piece
            let qc = q.canonical();
            let mut kept: Vec<AffineFunctional> = Vec::new();
            for h in qc.inequalities() {
                let outside = piece.with_constraints(&[], &kept).with_constraints(&[], &[h.negated()]);
                if outside.dimension() == d {
                    next.push(outside);
                }
                kept.push(h.clone());
            }
        }
        pieces = next;
        if pieces.is_empty() {
            return true;
        }
    }
    pieces.is_empty()
}

/// Hyperplanes supporting a cell: its affine hull equations and facet hyperplanes.
fn supporting_hyperplanes(p: &Polyhedron) -> Vec<AffineFunctional> {
    let c = p.canonical();
    c.equalities()
        .iter()
        .chain(c.inequalities())
        .map(|h| h.canonical_hyperplane())
        .collect()
}

/// Splits every cell by every hyperplane of `cuts`, keeping pieces of full
/// (relative) dimension.
fn refine_by_hyperplanes(cells: &[Polyhedron], cuts: &[AffineFunctional]) -> Vec<Polyhedron> {
    let mut out = Vec::new();
    for cell in cells {
        let d = cell.dimension();
        let mut pieces = vec![cell.clone()];
        for h in cuts {
            let mut next = Vec::with_capacity(pieces.len());
            for piece in pieces {
                let plus = piece.with_constraints(&[], std::slice::from_ref(h));
                let minus = piece.with_constraints(&[], &[h.negated()]);
                if plus.dimension() == d && minus.dimension() == d {
                    next.push(plus);
                    next.push(minus);
                } else {
                    next.push(piece);
                }
            }
            pieces = next;
        }
        out.extend(pieces);
    }
    out
}

const REPAIR_ROUNDS: usize = 2;

/// Union of cells drawn from valid complexes, subdivided until the result is
/// a valid complex. Every cell is cut by the supporting hyperplanes of the
/// cells involved in a non-facial intersection.
pub(crate) fn union_many(n: usize, cells: Vec<Polyhedron>) -> Result<PolyhedralComplex> {
    let mut current = PolyhedralComplex::new(n, cells)?;
    for _ in 0..REPAIR_ROUNDS {
        let report = current.validate();
        if report.is_ok() {
            current.validated = true;
            return Ok(current);
        }
        let mut cuts: BTreeSet<AffineFunctional> = BTreeSet::new();
        for (i, j) in &report.violations {
            cuts.extend(supporting_hyperplanes(&current.cells[*i]));
            cuts.extend(supporting_hyperplanes(&current.cells[*j]));
        }
        let cuts: Vec<AffineFunctional> = cuts.into_iter().collect();
        current = PolyhedralComplex::new(n, refine_by_hyperplanes(&current.cells, &cuts))?;
    }
    if current.validate().is_ok() {
        current.validated = true;
        return Ok(current);
    }
    Err(Error::RepairFailed(REPAIR_ROUNDS))
}

/// Breadth-first shortest path in a facet graph.
pub(crate) fn bfs_path(graph: &FacetGraph, from: usize, to: usize) -> Option<Vec<usize>> {
    let mut prev = vec![usize::MAX; graph.nodes];
    let mut queue = VecDeque::from([from]);
    prev[from] = from;
    while let Some(x) = queue.pop_front() {
        if x == to {
            let mut path = vec![to];
            let mut y = to;
            while y != from {
                y = prev[y];
                path.push(y);
            }
            path.reverse();
            return Some(path);
        }
        for &y in graph.neighbors(x) {
            if prev[y] == usize::MAX {
                prev[y] = x;
                queue.push_back(y);
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fm::hull_from_generators;
    use crate::rational::q;

    fn seg(a: (i64, i64), b: (i64, i64)) -> Polyhedron {
        hull_from_generators(2, &[QVector::from_ints(&[a.0, a.1]), QVector::from_ints(&[b.0, b.1])], &[], &[]).unwrap()
    }

    fn pt1(x: i64) -> Polyhedron {
        Polyhedron::point(&QVector::from_ints(&[x]))
    }

    fn square(x0: i64, y0: i64, side: i64) -> Polyhedron {
        let v = |x: i64, y: i64| QVector::from_ints(&[x, y]);
        hull_from_generators(
            2,
            &[v(x0, y0), v(x0 + side, y0), v(x0, y0 + side), v(x0 + side, y0 + side)],
            &[],
            &[],
        )
        .unwrap()
    }

    #[test]
    fn overlapping_squares_violate() {
        let c = PolyhedralComplex::new(2, vec![square(0, 0, 2), square(1, 1, 2)]).unwrap();
        assert_eq!(c.validate().violations, vec![(0, 1)]);
        assert!(c.clone().validated().is_err());
    }

    #[test]
    fn two_points_disconnected() {
        let c = PolyhedralComplex::from_cells(1, vec![pt1(0), pt1(1)]).unwrap();
        let g = c.facet_graph().unwrap();
        assert_eq!(g.nodes, 2);
        assert!(g.edges.is_empty());
        assert!(!c.is_connected().unwrap());
        assert!(!c.is_connected_through_codim1().unwrap());
    }

    #[test]
    fn empty_and_single_cell_conventions() {
        let e = PolyhedralComplex::empty(3);
        assert!(e.is_connected().unwrap());
        assert!(e.is_pure());
        assert_eq!(e.dimension(), -1);
        assert!(e.is_connected_through_codim1().unwrap());
        let one = PolyhedralComplex::from_cells(2, vec![square(0, 0, 1)]).unwrap();
        assert_eq!(one.facet_graph().unwrap().edges.len(), 0);
        assert!(one.is_connected_through_codim1().unwrap());
    }

    #[test]
    fn unvalidated_and_non_pure_are_refused() {
        let c = PolyhedralComplex::new(2, vec![square(0, 0, 1)]).unwrap();
        assert!(matches!(c.is_connected(), Err(Error::NotValidated)));
        let mixed = PolyhedralComplex::from_cells(2, vec![square(0, 0, 1), seg((5, 5), (6, 6))]).unwrap();
        assert!(!mixed.is_pure());
        assert!(matches!(mixed.is_connected_through_codim1(), Err(Error::NotPure)));
        assert!(!mixed.is_connected().unwrap());
    }

    #[test]
    fn crossing_segments_refine_to_point() {
        let a = PolyhedralComplex::from_cells(2, vec![seg((0, 0), (2, 2))]).unwrap();
        let b = PolyhedralComplex::from_cells(2, vec![seg((0, 2), (2, 0))]).unwrap();
        let r = a.common_refinement(&b).unwrap();
        assert_eq!(r.cells().len(), 1);
        assert!(r.cells()[0].set_eq(&Polyhedron::point(&QVector::from_ints(&[1, 1]))));
        let u = a.union_with_repair(&b).unwrap();
        assert_eq!(u.cells().len(), 4);
        assert!(u.is_connected().unwrap());
        assert!(u.is_connected_through_codim1().unwrap());
        assert!(u.supports_equal(&PolyhedralComplex::new(2, vec![seg((0, 0), (2, 2)), seg((0, 2), (2, 0))]).unwrap()));
    }

    #[test]
    fn overlapping_intervals_union() {
        let seg1 = |a: i64, b: i64| {
            hull_from_generators(1, &[QVector::from_ints(&[a]), QVector::from_ints(&[b])], &[], &[]).unwrap()
        };
        let a = PolyhedralComplex::from_cells(1, vec![seg1(0, 2)]).unwrap();
        let b = PolyhedralComplex::from_cells(1, vec![seg1(1, 3)]).unwrap();
        let u = a.union_with_repair(&b).unwrap();
        assert_eq!(u.cells().len(), 3);
        assert!(u.is_connected_through_codim1().unwrap());
        let two = PolyhedralComplex::from_cells(1, vec![pt1(0)])
            .unwrap()
            .union_with_repair(&PolyhedralComplex::from_cells(1, vec![pt1(1)]).unwrap())
            .unwrap();
        assert_eq!(two.cells().len(), 2);
    }

    #[test]
    fn coverage_detects_gaps() {
        let big = PolyhedralComplex::new(2, vec![square(0, 0, 2)]).unwrap();
        let quarters = PolyhedralComplex::new(2, vec![square(0, 0, 1), square(1, 0, 1), square(0, 1, 1), square(1, 1, 1)])
            .unwrap();
        assert!(big.supports_equal(&quarters));
        let three = PolyhedralComplex::new(2, vec![square(0, 0, 1), square(1, 0, 1), square(0, 1, 1)]).unwrap();
        assert!(!big.supports_equal(&three));
        assert!(three.support_contained_in(&big));
    }

    #[test]
    fn translate_round_trip() {
        let c = PolyhedralComplex::from_cells(2, vec![square(0, 0, 1), square(1, 0, 1)]).unwrap();
        let v = QVector(vec![q(1, 3), q(-2, 1)]);
        let t = c.translate(&v).unwrap();
        let back = t.translate(&-&v).unwrap();
        for (a, b) in back.cells().iter().zip(c.cells()) {
            assert!(a.set_eq(b));
            assert_eq!(a.key(), b.key());
        }
        assert_eq!(t.facet_graph().unwrap().edges.len(), 1);
        assert!(c.translate(&QVector::zeros(3)).is_err());
    }

    #[test]
    fn product_of_point_sets() {
        let a = PolyhedralComplex::from_cells(1, vec![pt1(0), pt1(1)]).unwrap();
        let b = PolyhedralComplex::from_cells(1, vec![pt1(2)]).unwrap();
        let p = a.cartesian_product(&b).unwrap();
        assert_eq!(p.ambient_dim(), 2);
        assert_eq!(p.cells().len(), 2);
        let pp = b.cartesian_product(&b).unwrap();
        assert!(pp.cells()[0].set_eq(&Polyhedron::point(&QVector::from_ints(&[2, 2]))));
    }
}
