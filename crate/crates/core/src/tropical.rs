//! Newton polygons, tropical hypersurfaces and uniform Bergman fans.
//!
//! Min convention: a tropical polynomial evaluates `min(val_k + a_k·w)`.

use std::fmt;

use crate::complex::PolyhedralComplex;
use crate::error::{Error, Result};
use crate::fm::hull_from_generators;
use crate::functional::AffineFunctional;
use crate::polyhedron::Polyhedron;
use crate::rational::{QVector, Rational};

/// Univariate polynomial known only through its coefficient valuations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValuedUnivariate {
    terms: Vec<(u64, Rational)>,
}

impl ValuedUnivariate {
    /// Terms are `(exponent, valuation)`; order does not matter.
    pub fn new(mut terms: Vec<(u64, Rational)>) -> Result<Self> {
        if terms.is_empty() {
            return Err(Error::InvalidInput("polynomial has no terms".into()));
        }
        terms.sort_by_key(|t| t.0);
        if terms.windows(2).any(|w| w[0].0 == w[1].0) {
            return Err(Error::InvalidInput("duplicate exponent".into()));
        }
        Ok(ValuedUnivariate { terms })
    }

    pub fn terms(&self) -> &[(u64, Rational)] {
        &self.terms
    }

    pub fn degree_span(&self) -> u64 {
        self.terms.last().unwrap().0 - self.terms[0].0
    }

    /// The one-variable tropical polynomial with the same terms.
    pub fn to_tropical(&self) -> TropicalPolynomial {
        TropicalPolynomial {
            n: 1,
            terms: self.terms.iter().map(|(e, v)| (vec![*e as i64], v.clone())).collect(),
        }
    }
}

/// Root valuations with multiplicities, sorted by valuation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootValuationMultiset {
    pub pairs: Vec<(Rational, u64)>,
}

impl RootValuationMultiset {
    pub fn total_multiplicity(&self) -> u64 {
        self.pairs.iter().map(|p| p.1).sum()
    }

    pub fn valuations(&self) -> Vec<Rational> {
        self.pairs.iter().map(|p| p.0.clone()).collect()
    }

    /// The 0-dimensional complex in ℝ¹ with one point per distinct valuation.
    pub fn to_complex(&self) -> PolyhedralComplex {
        let cells = self.pairs.iter().map(|(v, _)| Polyhedron::point(&QVector(vec![v.clone()]))).collect();
        PolyhedralComplex::new(1, cells)
            .and_then(|c| c.validated())
            .expect("distinct points form a complex")
    }
}

impl fmt::Display for RootValuationMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (v, m)) in self.pairs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}:{m}")?;
        }
        write!(f, "}}")
    }
}

/// Lower Newton polygon edges: each edge of slope `s` and width `ℓ` gives
/// root valuation `−s` with multiplicity `ℓ`.
pub fn root_valuations(f: &ValuedUnivariate) -> Result<RootValuationMultiset> {
    if f.degree_span() == 0 {
        return Err(Error::InvalidInput("constant polynomial has no roots in the torus".into()));
    }
    let pts: Vec<(Rational, Rational)> =
        f.terms.iter().map(|(e, v)| (Rational::from(*e as i64), v.clone())).collect();
    let mut hull: Vec<usize> = Vec::new();
    for i in 0..pts.len() {
        while hull.len() >= 2 {
            let (a, b) = (&pts[hull[hull.len() - 2]], &pts[hull[hull.len() - 1]]);
            let c = &pts[i];
            // drop b unless it lies strictly below segment a–c
            let cross = (&b.0 - &a.0) * (&c.1 - &a.1) - (&b.1 - &a.1) * (&c.0 - &a.0);
            if cross.is_positive() {
                break;
            }
            hull.pop();
        }
        hull.push(i);
    }
    let mut pairs: Vec<(Rational, u64)> = Vec::new();
    for w in hull.windows(2) {
        let (a, b) = (&pts[w[0]], &pts[w[1]]);
        let slope = (&b.1 - &a.1) / (&b.0 - &a.0);
        let width = f.terms[w[1]].0 - f.terms[w[0]].0;
        pairs.push((-slope, width));
    }
    pairs.sort();
    Ok(RootValuationMultiset { pairs })
}

/// Multivariate tropical polynomial `min_k (val_k + a_k·w)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TropicalPolynomial {
    n: usize,
    terms: Vec<(Vec<i64>, Rational)>,
}

impl TropicalPolynomial {
    pub fn new(n: usize, terms: Vec<(Vec<i64>, Rational)>) -> Result<Self> {
        for (e, _) in &terms {
            if e.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: e.len(),
                });
            }
        }
        for i in 0..terms.len() {
            if terms[i + 1..].iter().any(|t| t.0 == terms[i].0) {
                return Err(Error::InvalidInput(format!("duplicate exponent {:?}", terms[i].0)));
            }
        }
        Ok(TropicalPolynomial { n, terms })
    }

    /// `1 + a₁x₁ + ⋯ + aₙxₙ` with `val(aᵢ) = vᵢ`.
    pub fn linear(v: &QVector) -> Self {
        let n = v.dim();
        let mut terms = vec![(vec![0; n], Rational::ZERO)];
        for i in 0..n {
            let mut e = vec![0; n];
            e[i] = 1;
            terms.push((e, v[i].clone()));
        }
        TropicalPolynomial { n, terms }
    }

    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &[(Vec<i64>, Rational)] {
        &self.terms
    }

    fn term_value(&self, k: usize, w: &[Rational]) -> Rational {
        let (e, v) = &self.terms[k];
        let mut s = v.clone();
        for (a, x) in e.iter().zip(w) {
            if *a != 0 {
                s += Rational::from(*a) * x;
            }
        }
        s
    }

    pub fn evaluate(&self, w: &[Rational]) -> Rational {
        (0..self.terms.len()).map(|k| self.term_value(k, w)).min().expect("at least one term")
    }

    /// True iff the minimum is attained by at least two terms at `w`.
    pub fn min_attained_twice(&self, w: &[Rational]) -> bool {
        let vals: Vec<Rational> = (0..self.terms.len()).map(|k| self.term_value(k, w)).collect();
        let m = vals.iter().min().expect("at least one term");
        vals.iter().filter(|x| *x == m).count() >= 2
    }

    /// `term_k − term_i` as an affine functional in `w`.
    fn difference(&self, k: usize, i: usize) -> AffineFunctional {
        let normal = QVector(
            self.terms[k].0.iter().zip(&self.terms[i].0).map(|(a, b)| Rational::from(a - b)).collect(),
        );
        AffineFunctional::new(normal, &self.terms[k].1 - &self.terms[i].1)
    }
}

/// The corner locus of `f` as a validated complex. Each term pair `i < j`
/// contributes the region where those two terms tie and are minimal.
pub fn tropical_hypersurface(f: &TropicalPolynomial) -> Result<PolyhedralComplex> {
    let m = f.terms.len();
    if m < 2 {
        return Err(Error::InvalidInput("tropical hypersurface needs at least two terms".into()));
    }
    let mut cells = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            let ineqs: Vec<AffineFunctional> = (0..m).filter(|&k| k != i).map(|k| f.difference(k, i)).collect();
            let cell = Polyhedron::new(f.n, vec![f.difference(j, i)], ineqs);
            if !cell.is_empty() {
                cells.push(cell);
            }
        }
    }
    PolyhedralComplex::new(f.n, cells)?
        .validated()
        .map_err(|e| Error::Contract(format!("hypersurface cells do not form a complex: {e}")))
}

/// Generators `e₁, …, eₙ, −(e₁ + ⋯ + eₙ)`.
fn fan_rays(n: usize) -> Vec<QVector> {
    let mut rays: Vec<QVector> = (0..n).map(|i| QVector::unit(n, i)).collect();
    rays.push(QVector(vec![-Rational::ONE; n]));
    rays
}

fn subsets(m: usize, d: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, m: usize, d: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == d {
            out.push(cur.clone());
            return;
        }
        for i in start..m {
            cur.push(i);
            go(i + 1, m, d, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, m, d, &mut Vec::new(), &mut out);
    out
}

/// The pure `d`-dimensional fan in ℝⁿ whose maximal cones are spanned by any
/// `d` of `e₁, …, eₙ, −Σeᵢ`.
pub fn uniform_bergman_fan(n: usize, d: usize) -> Result<PolyhedralComplex> {
    if d < 1 || d > n {
        return Err(Error::InvalidInput(format!("need 1 <= d <= n, got n = {n}, d = {d}")));
    }
    let rays = fan_rays(n);
    let mut cells = Vec::new();
    for s in subsets(n + 1, d) {
        let gens: Vec<QVector> = s.iter().map(|&i| rays[i].clone()).collect();
        cells.push(hull_from_generators(n, &[], &gens, &[])?);
    }
    PolyhedralComplex::new(n, cells)?
        .validated()
        .map_err(|e| Error::Contract(format!("Bergman fan failed validation: {e}")))
}

/// `Δ − v`: the tropical hyperplane of `1 + Σ aᵢxᵢ` with `val(aᵢ) = vᵢ`.
/// In ℝ¹ this is the single point `−v`.
pub fn tropical_hyperplane(v: &QVector) -> Result<PolyhedralComplex> {
    let n = v.dim();
    if n == 0 {
        return Err(Error::InvalidInput("tropical hyperplane needs n >= 1".into()));
    }
    if n == 1 {
        let p = Polyhedron::point(&-v);
        return PolyhedralComplex::new(1, vec![p])?.validated();
    }
    uniform_bergman_fan(n, n - 1)?.translate(&-v)
}

/// Membership in `Δ − v` by direct evaluation of `min(0, wᵢ + vᵢ)`.
pub fn in_tropical_hyperplane(v: &[Rational], w: &[Rational]) -> bool {
    let mut vals = vec![Rational::ZERO];
    vals.extend(w.iter().zip(v).map(|(a, b)| a + b));
    let m = vals.iter().min().unwrap().clone();
    vals.iter().filter(|x| **x == m).count() >= 2
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    fn uni(terms: &[(u64, Rational)]) -> ValuedUnivariate {
        ValuedUnivariate::new(terms.to_vec()).unwrap()
    }

    #[test]
    fn newton_examples() {
        let f = uni(&[(0, q(1, 1)), (1, q(0, 1)), (2, q(0, 1))]);
        let r = root_valuations(&f).unwrap();
        assert_eq!(r.pairs, vec![(q(0, 1), 1), (q(1, 1), 1)]);
        assert_eq!(r.to_string(), "{0:1, 1:1}");
        let g = uni(&[(0, q(3, 1)), (1, q(2, 1)), (2, q(0, 1))]);
        assert_eq!(root_valuations(&g).unwrap().pairs, vec![(q(3, 2), 2)]);
        let h = uni(&[(0, q(0, 1)), (2, q(0, 1)), (5, q(0, 1))]);
        assert_eq!(root_valuations(&h).unwrap().pairs, vec![(q(0, 1), 5)]);
        assert!(root_valuations(&uni(&[(3, q(1, 1))])).is_err());
    }

    #[test]
    fn one_variable_hypersurfaces() {
        let lin = TropicalPolynomial::new(1, vec![(vec![0], q(0, 1)), (vec![1], q(0, 1))]).unwrap();
        let h = tropical_hypersurface(&lin).unwrap();
        assert_eq!(h.cells().len(), 1);
        assert!(h.cells()[0].set_eq(&Polyhedron::point(&QVector::from_ints(&[0]))));
        // 1 + x + x² with valuations (0, 0, 1)
        let quad = uni(&[(0, q(0, 1)), (1, q(0, 1)), (2, q(1, 1))]);
        let h = tropical_hypersurface(&quad.to_tropical()).unwrap();
        assert!(h.supports_equal(&root_valuations(&quad).unwrap().to_complex()));
        assert_eq!(root_valuations(&quad).unwrap().valuations(), vec![q(-1, 1), q(0, 1)]);
        // t + x + x²
        let shifted = uni(&[(0, q(1, 1)), (1, q(0, 1)), (2, q(0, 1))]);
        let h = tropical_hypersurface(&shifted.to_tropical()).unwrap();
        let pts = PolyhedralComplex::new(
            1,
            vec![Polyhedron::point(&QVector::from_ints(&[0])), Polyhedron::point(&QVector::from_ints(&[1]))],
        )
        .unwrap();
        assert!(h.supports_equal(&pts));
        assert!(!h.is_connected().unwrap());
    }

    #[test]
    fn single_term_is_rejected() {
        let one = TropicalPolynomial::new(2, vec![(vec![1, 0], q(0, 1))]).unwrap();
        assert!(tropical_hypersurface(&one).is_err());
        assert!(TropicalPolynomial::new(1, vec![(vec![1], q(0, 1)), (vec![1], q(2, 1))]).is_err());
    }

    #[test]
    fn bergman_fan_counts() {
        assert_eq!(uniform_bergman_fan(4, 2).unwrap().cells().len(), 10);
        assert_eq!(uniform_bergman_fan(3, 2).unwrap().cells().len(), 6);
        let line = uniform_bergman_fan(1, 1).unwrap();
        assert_eq!(line.cells().len(), 2);
        assert!(uniform_bergman_fan(3, 0).is_err());
        assert!(uniform_bergman_fan(3, 4).is_err());
    }

    #[test]
    fn hyperplane_matches_linear_hypersurface() {
        let v = QVector::from_ints(&[1, 0, -2]);
        let h = tropical_hypersurface(&TropicalPolynomial::linear(&v)).unwrap();
        let d = tropical_hyperplane(&v).unwrap();
        assert!(h.supports_equal(&d));
        for a in -3..=3 {
            for b in -3..=3 {
                for c in -3..=3 {
                    let w = [q(a, 1), q(b, 2), q(c, 1)];
                    assert_eq!(d.contains_point(&w), in_tropical_hyperplane(&v, &w));
                }
            }
        }
    }

    #[test]
    fn one_dimensional_hyperplane_is_point() {
        let h = tropical_hyperplane(&QVector(vec![q(1, 2)])).unwrap();
        assert!(h.cells()[0].set_eq(&Polyhedron::point(&QVector(vec![q(-1, 2)]))));
    }
}
