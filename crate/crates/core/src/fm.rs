//! Coordinate projection by Fourier–Motzkin elimination, and conversion
//! from generators to inequalities built on top of it.

use crate::error::{check_dim, Error, Result};
use crate::functional::AffineFunctional;
use crate::lp::{optimize, LpResult, Sense};
use crate::polyhedron::Polyhedron;
use crate::rational::{QVector, Rational};

/// Constraint row over the current variables; the last entry is the constant.
type Row = Vec<Rational>;

fn to_row(f: &AffineFunctional, order: &[usize]) -> Row {
    let mut r: Row = order.iter().map(|&i| f.normal[i].clone()).collect();
    r.push(f.offset.clone());
    r
}

fn to_functional(r: &Row) -> AffineFunctional {
    let k = r.len() - 1;
    AffineFunctional::new(QVector(r[..k].to_vec()), r[k].clone())
}

fn normalize(r: &Row) -> Row {
    let mut f = to_functional(r).canonical_inequality();
    let mut out = std::mem::take(&mut f.normal.0);
    out.push(f.offset);
    out
}

/// Removes duplicates, trivial rows and LP-redundant rows. Returns `None`
/// when a row `c ≥ 0` with negative constant shows infeasibility.
fn prune(eqs: &[Row], ineqs: Vec<Row>) -> Option<Vec<Row>> {
    let mut rows: Vec<Row> = Vec::new();
    for r in ineqs {
        let k = r.len() - 1;
        if r[..k].iter().all(|x| x.is_zero()) {
            if r[k].is_negative() {
                return None;
            }
            continue;
        }
        let r = normalize(&r);
        if !rows.contains(&r) {
            rows.push(r);
        }
    }
    rows.sort();
    let Some(first) = rows.first() else {
        return Some(rows);
    };
    let k = first.len() - 1;
    let eqf: Vec<AffineFunctional> = eqs.iter().map(to_functional).collect();
    let mut fs: Vec<AffineFunctional> = rows.iter().map(to_functional).collect();
    let mut i = 0;
    while i < fs.len() {
        let others: Vec<AffineFunctional> =
            fs.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, h)| h.clone()).collect();
        match optimize(k, &eqf, &others, &fs[i].normal, Sense::Minimize) {
            LpResult::Infeasible => return None,
            LpResult::Optimal { ref value, .. } if !(value + &fs[i].offset).is_negative() => {
                fs.remove(i);
                rows.remove(i);
            }
            _ => i += 1,
        }
    }
    Some(rows)
}

/// Exact projection of `p` onto the coordinates `keep`, in that order.
pub fn fm_project(p: &Polyhedron, keep: &[usize]) -> Result<Polyhedron> {
    let n = p.ambient_dim();
    let k = keep.len();
    let mut seen = vec![false; n];
    for &i in keep {
        if i >= n || seen[i] {
            return Err(Error::InvalidInput(format!("bad projection index {i}")));
        }
        seen[i] = true;
    }
    if p.is_empty() {
        return Ok(Polyhedron::empty(k));
    }
    let mut order: Vec<usize> = keep.to_vec();
    order.extend((0..n).filter(|&i| !seen[i]));

    let mut eqs: Vec<Row> = p.all_equalities().iter().map(|e| to_row(e, &order)).collect();
    let mut ineqs: Vec<Row> = p.strict_inequalities().iter().map(|h| to_row(h, &order)).collect();

    for var in (k..n).rev() {
        if let Some(pos) = eqs.iter().position(|e| !e[var].is_zero()) {
            let e = eqs.swap_remove(pos);
            let substitute = |r: &mut Row| {
                if r[var].is_zero() {
                    return;
                }
                let f = &r[var] / &e[var];
                for (x, y) in r.iter_mut().zip(&e) {
                    if !y.is_zero() {
                        *x -= &f * y;
                    }
                }
            };
            eqs.iter_mut().for_each(substitute);
            ineqs.iter_mut().for_each(substitute);
        } else {
            let (mut pos, mut neg, mut zero) = (Vec::new(), Vec::new(), Vec::new());
            for r in ineqs {
                match r[var].signum() {
                    1 => pos.push(r),
                    -1 => neg.push(r),
                    _ => zero.push(r),
                }
            }
            for a in &pos {
                for b in &neg {
                    // a[var] > 0 > b[var]: (−b[var])·a + a[var]·b cancels var
                    let (ca, cb) = (-&b[var], a[var].clone());
                    let r: Row = a.iter().zip(b).map(|(x, y)| &ca * x + &cb * y).collect();
                    zero.push(r);
                }
            }
            ineqs = zero;
        }
        for r in eqs.iter_mut().chain(ineqs.iter_mut()) {
            debug_assert!(r[var].is_zero());
            r.remove(var);
        }
        eqs.retain(|e| !e.iter().all(|x| x.is_zero()));
        if eqs.iter().any(|e| e[..e.len() - 1].iter().all(|x| x.is_zero())) {
            return Ok(Polyhedron::empty(k));
        }
        ineqs = match prune(&eqs, ineqs) {
            Some(rows) => rows,
            None => return Ok(Polyhedron::empty(k)),
        };
    }
    Polyhedron::try_new(
        k,
        eqs.iter().map(to_functional).collect(),
        ineqs.iter().map(to_functional).collect(),
    )
}

/// H-representation of `conv(vertices) + cone(rays) + span(lineality)`.
///
/// With no vertices but some rays or lineality, the origin is the vertex.
/// With no generators at all the result is empty.
pub fn hull_from_generators(
    n: usize,
    vertices: &[QVector],
    rays: &[QVector],
    lineality: &[QVector],
) -> Result<Polyhedron> {
    for g in vertices.iter().chain(rays).chain(lineality) {
        check_dim(n, g.dim())?;
    }
    if vertices.is_empty() && rays.is_empty() && lineality.is_empty() {
        return Ok(Polyhedron::empty(n));
    }
    let origin = [QVector::zeros(n)];
    let vertices = if vertices.is_empty() { &origin[..] } else { vertices };
    let (nv, nr, nl) = (vertices.len(), rays.len(), lineality.len());
    let total = n + nv + nr + nl;
    let mut eqs = Vec::with_capacity(n + 1);
    for i in 0..n {
        // x_i − Σ λ v_i − Σ μ r_i − Σ ν l_i = 0
        let mut normal = QVector::zeros(total);
        normal[i] = Rational::ONE;
        for (j, g) in vertices.iter().chain(rays).chain(lineality).enumerate() {
            normal[n + j] = -&g[i];
        }
        eqs.push(AffineFunctional::new(normal, Rational::ZERO));
    }
    let mut sum = QVector::zeros(total);
    for j in 0..nv {
        sum[n + j] = Rational::ONE;
    }
    eqs.push(AffineFunctional::new(sum, -Rational::ONE));
    let ineqs = (0..nv + nr).map(|j| AffineFunctional::coordinate(total, n + j, Rational::ZERO, false)).collect();
    let lifted = Polyhedron::try_new(total, eqs, ineqs)?;
    let keep: Vec<usize> = (0..n).collect();
    Ok(fm_project(&lifted, &keep)?.canonical())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rank;
    use crate::rational::q;

    fn f(c: &[i64]) -> AffineFunctional {
        AffineFunctional::from_coefficients(&c.iter().map(|&x| q(x, 1)).collect::<Vec<_>>())
    }

    #[test]
    fn square_projects_to_segment() {
        let sq = Polyhedron::new(2, vec![], vec![f(&[0, 1, 0]), f(&[1, -1, 0]), f(&[0, 0, 1]), f(&[1, 0, -1])]);
        let seg = fm_project(&sq, &[0]).unwrap();
        assert!(seg.set_eq(&Polyhedron::new(1, vec![], vec![f(&[0, 1]), f(&[1, -1])])));
    }

    #[test]
    fn diagonal_projects_to_line() {
        let diag = Polyhedron::new(2, vec![f(&[0, 1, -1])], vec![]);
        assert!(fm_project(&diag, &[0]).unwrap().set_eq(&Polyhedron::universe(1)));
    }

    #[test]
    fn lifted_cone_projects_to_quadrant() {
        let cone = hull_from_generators(3, &[], &[QVector::from_ints(&[1, 0, 1]), QVector::from_ints(&[0, 1, 0])], &[])
            .unwrap();
        let proj = fm_project(&cone, &[0, 1]).unwrap();
        let quadrant = Polyhedron::new(2, vec![], vec![f(&[0, 1, 0]), f(&[0, 0, 1])]);
        assert!(proj.set_eq(&quadrant));
        // sampled points have lifts exactly when they lie in the quadrant
        for (x, y) in [(1, 2), (0, 3), (-1, 0), (2, -1)] {
            let p = QVector::from_ints(&[x, y]);
            let lift = cone.with_constraints(&[f(&[-x, 1, 0, 0]), f(&[-y, 0, 1, 0])], &[]);
            assert_eq!(!lift.is_empty(), proj.contains_point(&p));
        }
    }

    #[test]
    fn generators_examples() {
        let seg = hull_from_generators(1, &[QVector::from_ints(&[0]), QVector::from_ints(&[1])], &[], &[]).unwrap();
        assert!(seg.set_eq(&Polyhedron::new(1, vec![], vec![f(&[0, 1]), f(&[1, -1])])));
        let quad = hull_from_generators(2, &[], &[QVector::from_ints(&[1, 0]), QVector::from_ints(&[0, 1])], &[]).unwrap();
        assert_eq!(quad.inequalities().len(), 2);
        let c34 = hull_from_generators(4, &[], &[QVector::from_ints(&[0, 0, 1, 0]), QVector::from_ints(&[0, 0, 0, 1])], &[])
            .unwrap();
        assert_eq!(c34.dimension(), 2);
        assert!(c34.contains_point(&QVector::from_ints(&[0, 0, 1, 2])));
        assert!(hull_from_generators(2, &[], &[], &[]).unwrap().is_empty());
    }

    #[test]
    fn hull_dimension_matches_generator_rank() {
        let gens = [QVector::from_ints(&[1, 2, 0]), QVector::from_ints(&[2, 4, 0]), QVector::from_ints(&[0, 1, 1])];
        let p = hull_from_generators(3, &gens, &[], &[]).unwrap();
        let diffs: Vec<Vec<Rational>> = gens[1..].iter().map(|g| (g - &gens[0]).0).collect();
        assert_eq!(p.dimension(), rank(&diffs) as i64);
    }
}
