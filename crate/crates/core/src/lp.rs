//! Exact two-phase simplex method with Bland's anti-cycling rule.
//!
//! Problems are stated over free variables `x ∈ ℚⁿ` with affine equations
//! `a·x + b = 0` and inequalities `a·x + b ≥ 0`. Equations are eliminated up
//! front by parametrizing their solution set; the remaining free parameters
//! are split into positive and negative parts to reach standard form.

use crate::error::{check_dim, Result};
use crate::functional::AffineFunctional;
use crate::linalg::solve_affine;
use crate::polyhedron::Polyhedron;
use crate::rational::{QVector, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sense {
    Minimize,
    Maximize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LpResult {
    Infeasible,
    /// The objective grows without bound along `ray` from some feasible point.
    Unbounded { ray: QVector },
    Optimal { value: Rational, point: QVector },
}

impl LpResult {
    pub fn is_feasible(&self) -> bool {
        !matches!(self, LpResult::Infeasible)
    }

    pub fn optimal_value(&self) -> Option<&Rational> {
        match self {
            LpResult::Optimal { value, .. } => Some(value),
            _ => None,
        }
    }
}

/// Optimizes `objective·x` over `p`.
pub fn lp_optimize(objective: &QVector, p: &Polyhedron, sense: Sense) -> Result<LpResult> {
    check_dim(p.ambient_dim(), objective.dim())?;
    Ok(optimize(p.ambient_dim(), p.equalities(), p.inequalities(), objective, sense))
}

/// Raw entry point used throughout the crate.
pub(crate) fn optimize(
    n: usize,
    eqs: &[AffineFunctional],
    ineqs: &[AffineFunctional],
    objective: &QVector,
    sense: Sense,
) -> LpResult {
    let c = match sense {
        Sense::Maximize => objective.clone(),
        Sense::Minimize => -objective,
    };
    match maximize(n, eqs, ineqs, &c) {
        LpResult::Optimal { value, point } => LpResult::Optimal {
            value: if sense == Sense::Minimize { -value } else { value },
            point,
        },
        other => other,
    }
}

fn maximize(n: usize, eqs: &[AffineFunctional], ineqs: &[AffineFunctional], c: &QVector) -> LpResult {
    let normals: Vec<Vec<Rational>> = eqs.iter().map(|e| e.normal.0.clone()).collect();
    let offsets: Vec<Rational> = eqs.iter().map(|e| e.offset.clone()).collect();
    let Some((x0, dirs)) = solve_affine(&normals, &offsets, n) else {
        return LpResult::Infeasible;
    };
    let k = dirs.len();

    // Reduced problem: max c'·z  s.t.  a'·z + b' ≥ 0.
    let mut rows: Vec<(Vec<Rational>, Rational)> = Vec::new();
    for h in ineqs {
        let a: Vec<Rational> = dirs.iter().map(|d| h.normal.dot(d)).collect();
        let b = h.eval(&x0);
        if a.iter().all(|x| x.is_zero()) {
            if b.is_negative() {
                return LpResult::Infeasible;
            }
            continue;
        }
        rows.push((a, b));
    }
    let cz: Vec<Rational> = dirs.iter().map(|d| c.dot(d)).collect();
    let lift = |z: &[Rational]| -> QVector {
        let mut x = x0.clone();
        for (zi, d) in z.iter().zip(&dirs) {
            if zi.is_zero() {
                continue;
            }
            for (xj, dj) in x.iter_mut().zip(d.iter()) {
                if !dj.is_zero() {
                    *xj += zi * dj;
                }
            }
        }
        x
    };
    let lift_dir = |z: &[Rational]| -> QVector {
        let mut x = QVector::zeros(n);
        for (zi, d) in z.iter().zip(&dirs) {
            for (xj, dj) in x.iter_mut().zip(d.iter()) {
                *xj += zi * dj;
            }
        }
        x
    };

    if k == 0 {
        let value = c.dot(&x0);
        return LpResult::Optimal { value, point: x0 };
    }

    match Simplex::new(k, &rows).solve(&cz) {
        Outcome::Infeasible => LpResult::Infeasible,
        Outcome::Unbounded(zray) => LpResult::Unbounded { ray: lift_dir(&zray) },
        Outcome::Optimal(z) => {
            let point = lift(&z);
            let value = c.dot(&point);
            LpResult::Optimal { value, point }
        }
    }
}

enum Outcome {
    Infeasible,
    Unbounded(Vec<Rational>),
    Optimal(Vec<Rational>),
}

/// Dense tableau over standard-form variables
/// `[z⁺ (k) | z⁻ (k) | slack (m) | artificial (…)]`.
struct Simplex {
    k: usize,
    ncols: usize,
    first_artificial: usize,
    rows: Vec<Vec<Rational>>,
    basis: Vec<usize>,
}

impl Simplex {
    fn new(k: usize, constraints: &[(Vec<Rational>, Rational)]) -> Self {
        let m = constraints.len();
        let needs_art: Vec<bool> = constraints.iter().map(|(_, b)| b.is_negative()).collect();
        let n_art = needs_art.iter().filter(|&&x| x).count();
        let first_artificial = 2 * k + m;
        let ncols = first_artificial + n_art;
        let mut rows = Vec::with_capacity(m);
        let mut basis = Vec::with_capacity(m);
        let mut art = first_artificial;
        for (i, (a, b)) in constraints.iter().enumerate() {
            // a·z⁺ − a·z⁻ − s = −b
            let mut row = vec![Rational::ZERO; ncols + 1];
            if needs_art[i] {
                for (j, aj) in a.iter().enumerate() {
                    row[j] = aj.clone();
                    row[k + j] = -aj;
                }
                row[2 * k + i] = -Rational::ONE;
                row[ncols] = -b;
                row[art] = Rational::ONE;
                basis.push(art);
                art += 1;
            } else {
                for (j, aj) in a.iter().enumerate() {
                    row[j] = -aj;
                    row[k + j] = aj.clone();
                }
                row[2 * k + i] = Rational::ONE;
                row[ncols] = b.clone();
                basis.push(2 * k + i);
            }
            rows.push(row);
        }
        Simplex {
            k,
            ncols,
            first_artificial,
            rows,
            basis,
        }
    }

    fn reduced_costs(&self, cost: &[Rational]) -> Vec<Rational> {
        let mut r: Vec<Rational> = cost.to_vec();
        r.push(Rational::ZERO);
        for (row, &b) in self.rows.iter().zip(&self.basis) {
            let cb = &cost[b];
            if cb.is_zero() {
                continue;
            }
            for (rj, aj) in r.iter_mut().zip(row) {
                if !aj.is_zero() {
                    *rj -= cb * aj;
                }
            }
        }
        r
    }

    fn pivot(&mut self, r: usize, c: usize, cost_row: &mut [Rational]) {
        let inv = self.rows[r][c].recip();
        if inv != Rational::ONE {
            for x in self.rows[r].iter_mut() {
                if !x.is_zero() {
                    *x *= &inv;
                }
            }
        }
        let pivot_row = std::mem::take(&mut self.rows[r]);
        let nz: Vec<usize> = (0..pivot_row.len()).filter(|&j| !pivot_row[j].is_zero()).collect();
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for &j in &nz {
                row[j] -= &f * &pivot_row[j];
            }
        }
        if !cost_row[c].is_zero() {
            let f = cost_row[c].clone();
            for &j in &nz {
                cost_row[j] -= &f * &pivot_row[j];
            }
        }
        self.rows[r] = pivot_row;
        self.basis[r] = c;
    }

    /// Runs Bland's rule on the given reduced-cost row. Columns at or beyond
    /// `allowed` never enter. Returns the unbounded column, if any.
    fn run(&mut self, cost_row: &mut [Rational], allowed: usize) -> Option<usize> {
        loop {
            let Some(enter) = (0..allowed).find(|&j| cost_row[j].is_positive()) else {
                return None;
            };
            let mut leave: Option<(usize, Rational)> = None;
            for (i, row) in self.rows.iter().enumerate() {
                if !row[enter].is_positive() {
                    continue;
                }
                let ratio = &row[self.ncols] / &row[enter];
                let better = match &leave {
                    None => true,
                    Some((li, lr)) => ratio < *lr || (ratio == *lr && self.basis[i] < self.basis[*li]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
            match leave {
                None => return Some(enter),
                Some((r, _)) => self.pivot(r, enter, cost_row),
            }
        }
    }

    fn solution(&self) -> Vec<Rational> {
        let mut y = vec![Rational::ZERO; self.ncols];
        for (row, &b) in self.rows.iter().zip(&self.basis) {
            y[b] = row[self.ncols].clone();
        }
        y
    }

    fn to_z(&self, y: &[Rational]) -> Vec<Rational> {
        (0..self.k).map(|j| &y[j] - &y[self.k + j]).collect()
    }

    fn solve(mut self, cz: &[Rational]) -> Outcome {
        if self.first_artificial < self.ncols {
            let mut cost = vec![Rational::ZERO; self.ncols];
            for c in cost.iter_mut().skip(self.first_artificial) {
                *c = -Rational::ONE;
            }
            let mut r = self.reduced_costs(&cost);
            // Phase I is bounded above by zero.
            self.run(&mut r, self.ncols);
            let value = -&r[self.ncols];
            if value.is_negative() {
                return Outcome::Infeasible;
            }
            // Drive remaining (zero-valued) artificials out of the basis.
            let mut i = 0;
            while i < self.rows.len() {
                if self.basis[i] >= self.first_artificial {
                    match (0..self.first_artificial).find(|&j| !self.rows[i][j].is_zero()) {
                        Some(j) => {
                            let mut dummy = vec![Rational::ZERO; self.ncols + 1];
                            self.pivot(i, j, &mut dummy);
                        }
                        None => {
                            self.rows.remove(i);
                            self.basis.remove(i);
                            continue;
                        }
                    }
                }
                i += 1;
            }
        }
        let mut cost = vec![Rational::ZERO; self.ncols];
        for j in 0..self.k {
            cost[j] = cz[j].clone();
            cost[self.k + j] = -&cz[j];
        }
        let mut r = self.reduced_costs(&cost);
        match self.run(&mut r, self.first_artificial) {
            Some(enter) => {
                let mut d = vec![Rational::ZERO; self.ncols];
                d[enter] = Rational::ONE;
                for (row, &b) in self.rows.iter().zip(&self.basis) {
                    d[b] = -&row[enter];
                }
                Outcome::Unbounded(self.to_z(&d))
            }
            None => Outcome::Optimal(self.to_z(&self.solution())),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    fn ineq(coeffs: &[Rational]) -> AffineFunctional {
        AffineFunctional::from_coefficients(coeffs)
    }

    fn r(x: i64) -> Rational {
        q(x, 1)
    }

    #[test]
    fn box_endpoint() {
        let p = Polyhedron::new(1, vec![], vec![ineq(&[r(0), r(1)]), ineq(&[r(1), r(-1)])]);
        let res = lp_optimize(&QVector::from_ints(&[1]), &p, Sense::Maximize).unwrap();
        assert_eq!(res, LpResult::Optimal { value: r(1), point: QVector::from_ints(&[1]) });
        let res = lp_optimize(&QVector::from_ints(&[1]), &p, Sense::Minimize).unwrap();
        assert_eq!(res.optimal_value(), Some(&r(0)));
    }

    #[test]
    fn ray_is_unbounded() {
        let p = Polyhedron::new(1, vec![], vec![ineq(&[r(0), r(1)])]);
        match lp_optimize(&QVector::from_ints(&[1]), &p, Sense::Maximize).unwrap() {
            LpResult::Unbounded { ray } => assert!(ray[0].is_positive()),
            other => panic!("expected unbounded, got {other:?}"),
        }
    }

    #[test]
    fn infeasible_and_equalities() {
        let p = Polyhedron::new(1, vec![], vec![ineq(&[r(-1), r(1)]), ineq(&[r(0), r(-1)])]);
        assert_eq!(lp_optimize(&QVector::from_ints(&[1]), &p, Sense::Maximize).unwrap(), LpResult::Infeasible);
        // x + y = 1, x ≥ 0, y ≥ 0: max x is 1 at (1, 0)
        let p = Polyhedron::new(
            2,
            vec![ineq(&[r(-1), r(1), r(1)])],
            vec![ineq(&[r(0), r(1), r(0)]), ineq(&[r(0), r(0), r(1)])],
        );
        let res = lp_optimize(&QVector::from_ints(&[1, 0]), &p, Sense::Maximize).unwrap();
        assert_eq!(res, LpResult::Optimal { value: r(1), point: QVector::from_ints(&[1, 0]) });
    }

    #[test]
    fn dimension_mismatch_is_rejected() {
        let p = Polyhedron::universe(2);
        assert!(lp_optimize(&QVector::from_ints(&[1]), &p, Sense::Maximize).is_err());
    }

    #[test]
    fn degenerate_cycling_example_terminates() {
        // Beale's classic cycling example, as max −(−3/4 x4 + 20 x5 − 1/2 x6 + 6 x7).
        let n = 4;
        let c = QVector(vec![q(3, 4), q(-20, 1), q(1, 2), q(-6, 1)]);
        let mut ineqs = vec![
            ineq(&[r(0), q(-1, 4), r(8), r(1), r(-9)]),
            ineq(&[r(0), q(-1, 2), r(12), q(1, 2), r(-3)]),
            ineq(&[r(1), r(0), r(0), r(-1), r(0)]),
        ];
        for i in 0..n {
            ineqs.push(AffineFunctional::coordinate(n, i, Rational::ZERO, false));
        }
        let res = optimize(n, &[], &ineqs, &c, Sense::Maximize);
        assert_eq!(res.optimal_value(), Some(&q(5, 4)));
    }
}
