//! Slicing a pure complex by a generic tropical hyperplane and lifting facet
//! walks from the slice back to the complex.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::complex::{bfs_path, FacetGraph, PolyhedralComplex};
use crate::error::{check_dim, Error, Result};
use crate::maps::{change_coordinates_unchecked, generic_basis};
use crate::polyhedron::Polyhedron;
use crate::rational::{QVector, Rational};
use crate::tropical::{in_tropical_hyperplane, tropical_hyperplane};

/// Default bound on denominators of sampled translates.
pub const DEFAULT_MAX_DENOMINATOR: i64 = 12;
const TRANSLATE_RETRIES: usize = 64;
const SLICE_RETRIES: usize = 16;

/// Cell pairs meeting in the wrong dimension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropernessReport {
    pub proper: bool,
    /// `dim C + dim D − n`.
    pub expected_dim: i64,
    /// `(i, j, dim(C_i ∩ D_j))` for every improper pair.
    pub violations: Vec<(usize, usize, i64)>,
}

/// A sequence of facet indices whose consecutive entries are equal or adjacent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FacetWalk {
    pub steps: Vec<usize>,
}

impl FacetWalk {
    pub fn new(steps: Vec<usize>) -> Self {
        FacetWalk { steps }
    }

    pub fn start(&self) -> usize {
        self.steps[0]
    }

    pub fn end(&self) -> usize {
        *self.steps.last().unwrap()
    }

    /// Number of moves.
    pub fn len(&self) -> usize {
        self.steps.len().saturating_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn is_valid_in(&self, g: &FacetGraph) -> bool {
        !self.steps.is_empty()
            && self.steps.iter().all(|&s| s < g.nodes)
            && self.steps.windows(2).all(|w| w[0] == w[1] || g.are_adjacent(w[0], w[1]))
    }

    /// Removes repeated consecutive entries.
    pub fn collapsed(&self) -> FacetWalk {
        let mut steps = self.steps.clone();
        steps.dedup();
        FacetWalk { steps }
    }

    /// Removes cycles: whenever a facet reappears, the detour is cut.
    pub fn without_loops(&self) -> FacetWalk {
        let mut steps: Vec<usize> = Vec::new();
        for &s in &self.steps {
            if let Some(pos) = steps.iter().position(|&x| x == s) {
                steps.truncate(pos + 1);
            } else {
                steps.push(s);
            }
        }
        FacetWalk { steps }
    }
}

impl fmt::Display for FacetWalk {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.steps.iter().map(|s| s.to_string()).collect();
        write!(f, "{}", parts.join(" -> "))
    }
}

/// Result of slicing `C` by `Δ − v`.
#[derive(Clone, Debug)]
pub struct SliceCertificate {
    pub v: QVector,
    pub intersection: PolyhedralComplex,
    /// `assignment[g]` is the unique facet of `C` containing facet `g` of the intersection.
    pub assignment: Vec<usize>,
    pub proper: bool,
}

fn require_pure(c: &PolyhedralComplex) -> Result<()> {
    if !c.is_validated() {
        return Err(Error::NotValidated);
    }
    if !c.is_pure() {
        return Err(Error::NotPure);
    }
    Ok(())
}

fn check_facet(c: &PolyhedralComplex, i: usize) -> Result<()> {
    if i >= c.cells().len() {
        return Err(Error::FacetIndex {
            index: i,
            count: c.cells().len(),
        });
    }
    Ok(())
}

/// Every pair of intersecting maximal cells must meet in dimension
/// `dim C + dim D − n`.
pub fn properness_check(c: &PolyhedralComplex, d: &PolyhedralComplex) -> Result<PropernessReport> {
    check_dim(c.ambient_dim(), d.ambient_dim())?;
    require_pure(c)?;
    require_pure(d)?;
    let expected_dim = c.dimension() + d.dimension() - c.ambient_dim() as i64;
    let mut violations = Vec::new();
    for (i, p) in c.cells().iter().enumerate() {
        for (j, q) in d.cells().iter().enumerate() {
            let meet = p.intersect(q)?;
            let dim = meet.dimension();
            if dim >= 0 && dim != expected_dim {
                violations.push((i, j, dim));
            }
        }
    }
    Ok(PropernessReport {
        proper: violations.is_empty(),
        expected_dim,
        violations,
    })
}

/// Properness against every face of `c`, not just its facets.
fn faces_meet_properly(faces: &[Polyhedron], d: &PolyhedralComplex) -> bool {
    let n = d.ambient_dim() as i64;
    let dd = d.dimension();
    faces.iter().all(|f| {
        let want = f.dimension() + dd - n;
        d.cells().iter().all(|q| {
            let dim = f.intersect(q).expect("same dimension").dimension();
            dim < 0 || dim == want
        })
    })
}

/// A random point of the relative interior of `p` with small denominators.
fn random_relint_point(p: &Polyhedron, rng: &mut ChaCha8Rng, max_den: i64) -> Result<QVector> {
    let center = p.relative_interior_point()?;
    let dirs = p.direction_space();
    if dirs.is_empty() {
        return Ok(center);
    }
    for _ in 0..32 {
        let mut x = center.clone();
        for d in &dirs {
            let t = Rational::new(rng.random_range(-max_den..=max_den), max_den);
            x = &x + &d.scale(&t);
        }
        if p.contains_point_relint(&x) {
            return Ok(x);
        }
    }
    Ok(center)
}

fn meets_relint(h: &PolyhedralComplex, f: &Polyhedron) -> bool {
    h.cells().iter().any(|q| {
        let meet = q.intersect(f).expect("same dimension");
        match meet.relative_interior_point() {
            Ok(x) => f.contains_point_relint(&x),
            Err(_) => false,
        }
    })
}

/// Checks the three requirements on a slicing translate independently of how
/// it was found.
pub fn verify_slicing_translate(c: &PolyhedralComplex, f: usize, f2: usize, v: &QVector) -> Result<bool> {
    require_pure(c)?;
    check_facet(c, f)?;
    check_facet(c, f2)?;
    check_dim(c.ambient_dim(), v.dim())?;
    Ok(verify_with_faces(c, &c.faces(), f, f2, v))
}

fn verify_with_faces(c: &PolyhedralComplex, faces: &[Polyhedron], f: usize, f2: usize, v: &QVector) -> bool {
    let h = match tropical_hyperplane(v) {
        Ok(h) => h,
        Err(_) => return false,
    };
    let vertex_free = faces
        .iter()
        .filter(|x| x.dimension() == 0)
        .all(|x| !in_tropical_hyperplane(v, &x.relative_interior_point().expect("nonempty")));
    vertex_free
        && meets_relint(&h, &c.cells()[f])
        && meets_relint(&h, &c.cells()[f2])
        && faces_meet_properly(faces, &h)
}

/// A translate `v` with denominators at most `max_denominator` such that
/// `Δ − v` meets facets `f` and `f2` in their relative interiors, contains no
/// vertex of `c` and meets every face of `c` properly.
pub fn choose_slicing_translate(
    c: &PolyhedralComplex,
    f: usize,
    f2: usize,
    max_denominator: i64,
    seed: u64,
) -> Result<QVector> {
    require_pure(c)?;
    check_facet(c, f)?;
    check_facet(c, f2)?;
    if max_denominator < 1 {
        return Err(Error::InvalidInput("max denominator must be positive".into()));
    }
    let n = c.ambient_dim();
    if n == 0 {
        return Err(Error::InvalidInput("no tropical hyperplane in ℝ⁰".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let faces = c.faces();
    for _ in 0..TRANSLATE_RETRIES {
        let p = random_relint_point(&c.cells()[f], &mut rng, max_denominator)?;
        // v ∈ Δ − p  ⟺  p ∈ Δ − v
        let through_p = tropical_hyperplane(&p)?;
        let candidates = if f == f2 {
            through_p
        } else {
            let p2 = random_relint_point(&c.cells()[f2], &mut rng, max_denominator)?;
            through_p.refine_unchecked(&tropical_hyperplane(&p2)?)
        };
        if candidates.cells().is_empty() {
            continue;
        }
        let cell = &candidates.cells()[rng.random_range(0..candidates.cells().len())];
        let v: QVector = random_relint_point(cell, &mut rng, max_denominator)?
            .iter()
            .map(|x| x.round_to_denominator(max_denominator))
            .collect();
        if verify_with_faces(c, &faces, f, f2, &v) {
            return Ok(v);
        }
    }
    Err(Error::SearchExhausted(format!(
        "no generic translate after {TRANSLATE_RETRIES} draws; coordinates may be non-generic, \
         try change_coordinates with generic_basis first"
    )))
}

/// Intersects `c` with `Δ − v` and assigns each facet of the intersection to
/// the unique facet of `c` containing it.
pub fn slice(c: &PolyhedralComplex, v: &QVector) -> Result<SliceCertificate> {
    slice_impl(c, v, true)
}

fn slice_impl(c: &PolyhedralComplex, v: &QVector, validate: bool) -> Result<SliceCertificate> {
    check_dim(c.ambient_dim(), v.dim())?;
    require_pure(c)?;
    let h = tropical_hyperplane(v)?;
    let report = properness_check(c, &h)?;
    if !report.proper {
        return Err(Error::ImproperIntersection(report.violations.len()));
    }
    let intersection = if validate { c.common_refinement(&h)? } else { c.refine_unchecked(&h) };
    let mut assignment = Vec::with_capacity(intersection.cells().len());
    for g in intersection.cells() {
        let x = g.relative_interior_point()?;
        let owners: Vec<usize> =
            (0..c.cells().len()).filter(|&i| c.cells()[i].contains_point(&x) && c.cells()[i].contains(g)).collect();
        match owners[..] {
            [i] => assignment.push(i),
            _ => return Err(Error::ImproperIntersection(owners.len())),
        }
    }
    Ok(SliceCertificate {
        v: v.clone(),
        intersection,
        assignment,
        proper: true,
    })
}

fn lift_with_graphs(
    cert: &SliceCertificate,
    walk: &FacetWalk,
    slice_graph: &FacetGraph,
    graph: &FacetGraph,
) -> Result<FacetWalk> {
    if !walk.is_valid_in(slice_graph) {
        return Err(Error::InvalidInput(format!("walk {walk} is not valid in the intersection")));
    }
    let lifted: Vec<usize> = walk
        .steps
        .iter()
        .map(|&g| {
            cert.assignment.get(g).copied().ok_or_else(|| Error::Contract(format!("certificate has no assignment for facet {g}")))
        })
        .collect::<Result<_>>()?;
    let out = FacetWalk::new(lifted).collapsed();
    if !out.is_valid_in(graph) {
        return Err(Error::Contract(format!("lifted walk {out} has a non-adjacent step")));
    }
    Ok(out)
}

/// Maps a walk in the intersection to a walk in `c` through the assignment.
pub fn lift_walk(c: &PolyhedralComplex, cert: &SliceCertificate, walk: &FacetWalk) -> Result<FacetWalk> {
    lift_with_graphs(cert, walk, &cert.intersection.facet_graph()?, &c.facet_graph()?)
}

/// Shortest walk in the facet graph, or `None` if `f2` is unreachable.
pub fn walk_bfs(c: &PolyhedralComplex, f: usize, f2: usize) -> Result<Option<FacetWalk>> {
    check_facet(c, f)?;
    check_facet(c, f2)?;
    let g = c.facet_graph()?;
    Ok(bfs_path(&g, f, f2).map(FacetWalk::new))
}

/// Builds a walk from `f` to `f2` by repeatedly slicing with generic
/// tropical hyperplanes down to dimension 1, where the facet graph is searched
/// directly, then lifting the walk back up.
pub fn theorem_walk(c: &PolyhedralComplex, f: usize, f2: usize, depth_budget: usize, seed: u64) -> Result<FacetWalk> {
    require_pure(c)?;
    check_facet(c, f)?;
    check_facet(c, f2)?;
    let graph = c.facet_graph()?;
    if !graph.is_connected() {
        return Err(Error::NotConnectedThroughCodim1);
    }
    let walk = walk_rec(c, &graph, f, f2, depth_budget, seed)?.without_loops();
    if walk.start() != f || walk.end() != f2 || !walk.is_valid_in(&graph) {
        return Err(Error::Contract(format!("theorem walk {walk} failed verification")));
    }
    Ok(walk)
}

fn walk_rec(c: &PolyhedralComplex, graph: &FacetGraph, f: usize, f2: usize, depth: usize, seed: u64) -> Result<FacetWalk> {
    if f == f2 {
        return Ok(FacetWalk::new(vec![f]));
    }
    if c.dimension() <= 1 {
        return bfs_path(graph, f, f2).map(FacetWalk::new).ok_or(Error::NotConnectedThroughCodim1);
    }
    if depth == 0 {
        return Err(Error::DepthExhausted(c.dimension() as usize));
    }
    let d = c.dimension();
    // generic coordinates; cell order (hence facet indices) is preserved
    let c = &change_coordinates_unchecked(c, &generic_basis(c)?)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..SLICE_RETRIES {
        let draw: u64 = rng.random();
        let v = choose_slicing_translate(c, f, f2, DEFAULT_MAX_DENOMINATOR, draw)?;
        let cert = match slice_impl(c, &v, false) {
            Ok(cert) => cert,
            Err(Error::ImproperIntersection(_)) => continue,
            Err(e) => return Err(e),
        };
        let k = &cert.intersection;
        if k.cells().is_empty() || !k.is_pure() || k.dimension() != d - 1 {
            continue;
        }
        let slice_graph = k.facet_graph()?;
        if !slice_graph.is_connected() {
            continue;
        }
        let pick = |target: usize| {
            (0..k.cells().len())
                .find(|&g| cert.assignment[g] == target && c.cells()[target].contains_point_relint(&k.cells()[g].relative_interior_point().expect("nonempty")))
                .or_else(|| (0..k.cells().len()).find(|&g| cert.assignment[g] == target))
        };
        let (Some(g), Some(g2)) = (pick(f), pick(f2)) else {
            continue;
        };
        let inner = walk_rec(k, &slice_graph, g, g2, depth - 1, rng.random())?;
        return lift_with_graphs(&cert, &inner, &slice_graph, graph);
    }
    Err(Error::DisconnectedSlice(SLICE_RETRIES))
}
