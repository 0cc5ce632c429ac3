use std::fmt;

use crate::rational::{primitive_integer, QVector, Rational};

/// The affine map `x ↦ normal·x + offset`.
///
/// Used both as an inequality (`≥ 0`) and as an equation (`= 0`), depending
/// on which list of a [`crate::Polyhedron`] it sits in.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffineFunctional {
    pub normal: QVector,
    pub offset: Rational,
}

impl AffineFunctional {
    pub fn new(normal: QVector, offset: Rational) -> Self {
        AffineFunctional { normal, offset }
    }

    /// Builds from a coefficient row `[c0, c1, …, cn]` meaning `c0 + Σ ci·xi`.
    pub fn from_coefficients(coeffs: &[Rational]) -> Self {
        assert!(!coeffs.is_empty());
        AffineFunctional {
            normal: QVector(coeffs[1..].to_vec()),
            offset: coeffs[0].clone(),
        }
    }

    /// `[offset, normal…]`, the layout used by the document format.
    pub fn coefficients(&self) -> Vec<Rational> {
        let mut v = Vec::with_capacity(self.normal.dim() + 1);
        v.push(self.offset.clone());
        v.extend(self.normal.iter().cloned());
        v
    }

    /// `x_i + c` (or `−x_i + c` when `negate`).
    pub fn coordinate(n: usize, i: usize, offset: Rational, negate: bool) -> Self {
        let mut normal = QVector::zeros(n);
        normal[i] = if negate { -Rational::ONE } else { Rational::ONE };
        AffineFunctional { normal, offset }
    }

    pub fn dim(&self) -> usize {
        self.normal.dim()
    }

    pub fn eval(&self, x: &[Rational]) -> Rational {
        self.normal.dot(x) + &self.offset
    }

    pub fn is_constant(&self) -> bool {
        self.normal.is_zero()
    }

    pub fn negated(&self) -> Self {
        AffineFunctional {
            normal: -&self.normal,
            offset: -&self.offset,
        }
    }

    /// Scaled by a positive factor to coprime integer coefficients. Preserves
    /// the half-space `≥ 0`.
    pub fn canonical_inequality(&self) -> Self {
        Self::from_coefficients(&primitive_integer(&self.coefficients()))
    }

    /// Primitive integer form whose first nonzero normal entry is positive.
    /// Two functionals define the same hyperplane iff these agree.
    pub fn canonical_hyperplane(&self) -> Self {
        let c = self.canonical_inequality();
        match c.normal.iter().find(|x| !x.is_zero()) {
            Some(lead) if lead.is_negative() => c.negated(),
            _ => c,
        }
    }

    /// The functional `x ↦ self(x − v)`, i.e. the same hyperplane moved by `v`.
    pub fn translated(&self, v: &[Rational]) -> Self {
        AffineFunctional {
            normal: self.normal.clone(),
            offset: &self.offset - self.normal.dot(v),
        }
    }

    /// Embeds into a larger space: coordinate `i` goes to `offset + i`.
    pub fn embed(&self, total: usize, at: usize) -> Self {
        let mut normal = QVector::zeros(total);
        for (i, x) in self.normal.iter().enumerate() {
            normal[at + i] = x.clone();
        }
        AffineFunctional {
            normal,
            offset: self.offset.clone(),
        }
    }
}

impl fmt::Debug for AffineFunctional {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.coefficients())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    #[test]
    fn canonical_forms_are_idempotent() {
        let h = AffineFunctional::new(QVector(vec![q(-2, 3), q(4, 3)]), q(1, 3));
        let c = h.canonical_hyperplane();
        assert_eq!(c.coefficients(), vec![q(-1, 1), q(2, 1), q(-4, 1)]);
        assert_eq!(c.canonical_hyperplane(), c);
        let i = h.canonical_inequality();
        assert_eq!(i.coefficients(), vec![q(1, 1), q(-2, 1), q(4, 1)]);
        assert_eq!(i.canonical_inequality(), i);
    }

    #[test]
    fn translation_moves_zero_set() {
        let h = AffineFunctional::coordinate(2, 0, Rational::ZERO, false);
        let t = h.translated(&[q(3, 1), q(0, 1)]);
        assert!(t.eval(&[q(3, 1), q(7, 1)]).is_zero());
    }
}
