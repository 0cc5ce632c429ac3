//! The two worked examples as reusable pipelines.
//!
//! `ex13`: the roots of `x² + x + p` over a field with `val(p) = 1` have
//! valuations 0 and 1, so the tropicalization is two points.
//!
//! `ex14`: `Δ × {0, 1}` pushed through the exponent matrix of
//! `(x₁x₅, x₂x₅², x₃x₅³, x₄x₅⁴)` gives `Δ ∪ (Δ + (1,2,3,4))`, which is
//! connected but not connected through codimension 1.

use std::fmt;

use crate::complex::PolyhedralComplex;
use crate::error::Result;
use crate::maps::{linear_image, IntegerMatrix};
use crate::polyhedron::Polyhedron;
use crate::rational::{QVector, Rational};
use crate::tropical::{root_valuations, uniform_bergman_fan, RootValuationMultiset, ValuedUnivariate};

#[derive(Clone, Debug)]
pub struct Ex13 {
    pub valuations: RootValuationMultiset,
    pub complex: PolyhedralComplex,
    pub connected: bool,
}

impl fmt::Display for Ex13 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "root valuations: {}", self.valuations)?;
        writeln!(f, "connected: {}", self.connected)?;
        write!(f, "{}", if self.connected { "connected" } else { "disconnected" })
    }
}

/// `x² + x + c` with `val(c) = 1`.
pub fn quadratic_with_constant_valuation_one() -> ValuedUnivariate {
    ValuedUnivariate::new(vec![(0, Rational::ONE), (1, Rational::ZERO), (2, Rational::ZERO)]).expect("valid terms")
}

pub fn ex13() -> Result<Ex13> {
    let valuations = root_valuations(&quadratic_with_constant_valuation_one())?;
    let complex = valuations.to_complex();
    let connected = complex.is_connected()?;
    Ok(Ex13 {
        valuations,
        complex,
        connected,
    })
}

/// Exponent matrix of `(x₁x₅, x₂x₅², x₃x₅³, x₄x₅⁴)`.
pub fn ex14_matrix() -> IntegerMatrix {
    IntegerMatrix::new(vec![
        vec![1, 0, 0, 0, 1],
        vec![0, 1, 0, 0, 2],
        vec![0, 0, 1, 0, 3],
        vec![0, 0, 0, 1, 4],
    ])
    .expect("rectangular")
}

#[derive(Clone, Debug)]
pub struct Ex14 {
    pub delta: PolyhedralComplex,
    pub shifted: PolyhedralComplex,
    pub trop_y: PolyhedralComplex,
    pub trop_z: PolyhedralComplex,
    /// `union_with_repair(Δ, Δ + (1,2,3,4))`.
    pub reference: PolyhedralComplex,
    pub image_matches_union: bool,
    pub connected: bool,
    pub connected_through_codim1: bool,
    pub sheets_codim1: (bool, bool),
    pub intersection: PolyhedralComplex,
    pub intersection_point: Option<QVector>,
    /// Whether the intersection point is a vertex of `trop_z`.
    pub point_is_vertex: bool,
    /// Components of the cell-intersection graph after removing the point.
    pub components_without_point: usize,
}

impl fmt::Display for Ex14 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let point = self.intersection_point.as_ref().map_or("none".to_string(), |p| p.to_string());
        writeln!(f, "delta facets: {}", self.delta.cells().len())?;
        writeln!(f, "image cells: {}", self.trop_z.cells().len())?;
        writeln!(f, "image support equals delta union shifted delta: {}", self.image_matches_union)?;
        write!(
            f,
            "connected: {}, connected-through-codim-1: {}, intersection point: {}",
            self.connected, self.connected_through_codim1, point
        )
    }
}

pub fn ex14() -> Result<Ex14> {
    let delta = uniform_bergman_fan(4, 2)?;
    let shift = QVector::from_ints(&[1, 2, 3, 4]);
    let shifted = delta.translate(&shift)?;
    let roots = root_valuations(&quadratic_with_constant_valuation_one())?;
    let trop_y = delta.cartesian_product(&roots.to_complex())?;
    let trop_z = linear_image(&trop_y, &ex14_matrix())?;
    let reference = delta.union_with_repair(&shifted)?;
    let image_matches_union = trop_z.supports_equal(&reference);
    let intersection = delta.common_refinement(&shifted)?;
    let intersection_point = match intersection.cells() {
        [p] if p.dimension() == 0 => Some(p.relative_interior_point()?),
        _ => None,
    };
    let (point_is_vertex, components_without_point) = match &intersection_point {
        Some(p) => (
            trop_z.vertices().contains(p),
            trop_z.components_avoiding(&[Polyhedron::point(p)])?,
        ),
        None => (false, 0),
    };
    Ok(Ex14 {
        connected: trop_z.is_connected()?,
        connected_through_codim1: trop_z.is_connected_through_codim1()?,
        sheets_codim1: (delta.is_connected_through_codim1()?, shifted.is_connected_through_codim1()?),
        delta,
        shifted,
        trop_y,
        trop_z,
        reference,
        image_matches_union,
        intersection,
        intersection_point,
        point_is_vertex,
        components_without_point,
    })
}
