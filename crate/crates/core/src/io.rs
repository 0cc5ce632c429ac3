//! JSON documents for complexes, tropical polynomials and integer matrices.
//!
//! Rationals are written as strings (`"3"`, `"-1/2"`) and read from either
//! strings or JSON integers.

use std::fmt;
use std::str::FromStr;

use serde::de::{self, Deserializer, Visitor};
use serde::{Deserialize, Serialize, Serializer};

use crate::complex::PolyhedralComplex;
use crate::error::{Error, Result};
use crate::fm::hull_from_generators;
use crate::functional::AffineFunctional;
use crate::maps::IntegerMatrix;
use crate::pipeline::SliceCertificate;
use crate::polyhedron::Polyhedron;
use crate::rational::{QVector, Rational};
use crate::tropical::{TropicalPolynomial, ValuedUnivariate};

pub const FORMAT_VERSION: &str = "1";

/// A rational as it appears in documents.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Num(pub Rational);

impl Serialize for Num {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.0.to_string())
    }
}

impl<'de> Deserialize<'de> for Num {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        struct NumVisitor;
        impl Visitor<'_> for NumVisitor {
            type Value = Num;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("an integer or a string \"p\" or \"p/q\"")
            }
            fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<Num, E> {
                Ok(Num(Rational::from(v)))
            }
            fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<Num, E> {
                i64::try_from(v).map(|v| Num(Rational::from(v))).map_err(|_| E::custom("integer too large, use a string"))
            }
            fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<Num, E> {
                Rational::from_str(v.trim()).map(Num).map_err(|e| E::custom(format!("{e}: {v:?}")))
            }
        }
        d.deserialize_any(NumVisitor)
    }
}

fn nums(xs: &[Rational]) -> Vec<Num> {
    xs.iter().cloned().map(Num).collect()
}

fn vector(xs: &[Num]) -> QVector {
    xs.iter().map(|x| x.0.clone()).collect()
}

#[derive(Clone, Debug, Default, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct CellRecord {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub eq: Option<Vec<Vec<Num>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ineq: Option<Vec<Vec<Num>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vertices: Option<Vec<Vec<Num>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rays: Option<Vec<Vec<Num>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lineality: Option<Vec<Vec<Num>>>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct ComplexDocument {
    pub format_version: String,
    pub ambient_dim: usize,
    pub cells: Vec<CellRecord>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct TermRecord {
    pub exponent: Vec<i64>,
    pub valuation: Num,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct PolynomialDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub format_version: Option<String>,
    pub ambient_dim: usize,
    pub terms: Vec<TermRecord>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct UnivariateTerm {
    pub exponent: u64,
    pub valuation: Num,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct UnivariateDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub format_version: Option<String>,
    pub terms: Vec<UnivariateTerm>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct MatrixDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub format_version: Option<String>,
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<i64>>,
}

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct SliceDocument {
    pub v: Vec<Num>,
    pub proper: bool,
    pub intersection: ComplexDocument,
    pub assignment: Vec<usize>,
}

fn parse_json<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    let de = &mut serde_json::Deserializer::from_str(text);
    serde_path_to_error::deserialize(de).map_err(|e| {
        let path = e.path().to_string();
        let inner = e.into_inner();
        Error::Parse {
            path,
            message: format!("{inner}"),
        }
    })
}

fn field_error(path: String, message: impl Into<String>) -> Error {
    Error::Parse {
        path,
        message: message.into(),
    }
}

fn functionals(rows: &[Vec<Num>], n: usize, path: &str) -> Result<Vec<AffineFunctional>> {
    rows.iter()
        .enumerate()
        .map(|(k, r)| {
            if r.len() != n + 1 {
                return Err(field_error(format!("{path}[{k}]"), format!("expected {} coefficients, found {}", n + 1, r.len())));
            }
            Ok(AffineFunctional::from_coefficients(&r.iter().map(|x| x.0.clone()).collect::<Vec<_>>()))
        })
        .collect()
}

fn points(rows: &[Vec<Num>], n: usize, path: &str) -> Result<Vec<QVector>> {
    rows.iter()
        .enumerate()
        .map(|(k, r)| {
            if r.len() != n {
                return Err(field_error(format!("{path}[{k}]"), format!("expected {n} coordinates, found {}", r.len())));
            }
            Ok(vector(r))
        })
        .collect()
}

fn cell_from_record(rec: &CellRecord, n: usize, at: usize) -> Result<Polyhedron> {
    let path = format!("cells[{at}]");
    let has_h = rec.eq.is_some() || rec.ineq.is_some();
    let has_v = rec.vertices.is_some() || rec.rays.is_some() || rec.lineality.is_some();
    let h = if has_h {
        let eqs = functionals(rec.eq.as_deref().unwrap_or(&[]), n, &format!("{path}.eq"))?;
        let ineqs = functionals(rec.ineq.as_deref().unwrap_or(&[]), n, &format!("{path}.ineq"))?;
        Some(Polyhedron::new(n, eqs, ineqs))
    } else {
        None
    };
    let v = if has_v {
        let verts = points(rec.vertices.as_deref().unwrap_or(&[]), n, &format!("{path}.vertices"))?;
        let rays = points(rec.rays.as_deref().unwrap_or(&[]), n, &format!("{path}.rays"))?;
        let lin = points(rec.lineality.as_deref().unwrap_or(&[]), n, &format!("{path}.lineality"))?;
        Some(hull_from_generators(n, &verts, &rays, &lin)?)
    } else {
        None
    };
    match (h, v) {
        (Some(h), Some(v)) if !h.set_eq(&v) => Err(field_error(path, "inequality and generator forms disagree")),
        (Some(h), _) => Ok(h),
        (None, Some(v)) => Ok(v),
        (None, None) => Err(field_error(path, "cell has neither eq/ineq nor vertices/rays/lineality")),
    }
}

/// Reads a complex document. The result is not validated.
pub fn parse_complex(text: &str) -> Result<PolyhedralComplex> {
    let doc: ComplexDocument = parse_json(text)?;
    complex_from_document(&doc)
}

pub fn complex_from_document(doc: &ComplexDocument) -> Result<PolyhedralComplex> {
    if doc.format_version != FORMAT_VERSION {
        return Err(field_error(
            "format_version".into(),
            format!("unsupported version {:?}, expected {FORMAT_VERSION:?}", doc.format_version),
        ));
    }
    let n = doc.ambient_dim;
    let cells = doc.cells.iter().enumerate().map(|(i, r)| cell_from_record(r, n, i)).collect::<Result<Vec<_>>>()?;
    PolyhedralComplex::new(n, cells)
}

fn record_of(p: &Polyhedron) -> CellRecord {
    let c = p.canonical();
    let rows = |fs: &[AffineFunctional]| fs.iter().map(|f| nums(&f.coefficients())).collect::<Vec<_>>();
    CellRecord {
        eq: (!c.equalities().is_empty()).then(|| rows(c.equalities())),
        ineq: Some(rows(c.inequalities())),
        ..CellRecord::default()
    }
}

/// Canonical H-form of every cell, cells sorted by canonical key.
pub fn complex_document(c: &PolyhedralComplex) -> ComplexDocument {
    let mut cells: Vec<Polyhedron> = c.cells().iter().map(|p| p.canonical()).collect();
    cells.sort_by_key(|p| p.key());
    ComplexDocument {
        format_version: FORMAT_VERSION.into(),
        ambient_dim: c.ambient_dim(),
        cells: cells.iter().map(record_of).collect(),
    }
}

pub fn serialize_complex(c: &PolyhedralComplex) -> String {
    to_json(&complex_document(c))
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("documents serialize");
    s.push('\n');
    s
}

pub fn parse_polynomial(text: &str) -> Result<TropicalPolynomial> {
    let doc: PolynomialDocument = parse_json(text)?;
    TropicalPolynomial::new(doc.ambient_dim, doc.terms.into_iter().map(|t| (t.exponent, t.valuation.0)).collect())
}

pub fn polynomial_document(f: &TropicalPolynomial) -> PolynomialDocument {
    PolynomialDocument {
        format_version: None,
        ambient_dim: f.ambient_dim(),
        terms: f
            .terms()
            .iter()
            .map(|(e, v)| TermRecord {
                exponent: e.clone(),
                valuation: Num(v.clone()),
            })
            .collect(),
    }
}

pub fn parse_univariate(text: &str) -> Result<ValuedUnivariate> {
    let doc: UnivariateDocument = parse_json(text)?;
    ValuedUnivariate::new(doc.terms.into_iter().map(|t| (t.exponent, t.valuation.0)).collect())
}

pub fn parse_matrix(text: &str) -> Result<IntegerMatrix> {
    let doc: MatrixDocument = parse_json(text)?;
    IntegerMatrix::with_shape(doc.rows, doc.cols, doc.entries)
}

pub fn matrix_document(m: &IntegerMatrix) -> MatrixDocument {
    MatrixDocument {
        format_version: None,
        rows: m.rows(),
        cols: m.cols(),
        entries: m.entries().to_vec(),
    }
}

pub fn slice_document(cert: &SliceCertificate) -> SliceDocument {
    SliceDocument {
        v: nums(&cert.v),
        proper: cert.proper,
        intersection: ComplexDocument {
            format_version: FORMAT_VERSION.into(),
            ambient_dim: cert.intersection.ambient_dim(),
            cells: cert.intersection.cells().iter().map(record_of).collect(),
        },
        assignment: cert.assignment.clone(),
    }
}

/// Parses a comma-separated list of rationals such as `1,-1/2,3`.
pub fn parse_vector(text: &str) -> Result<QVector> {
    text.split(',')
        .filter(|s| !s.trim().is_empty())
        .map(|s| Rational::from_str(s.trim()).map_err(|e| Error::InvalidInput(format!("{e}: {s:?}"))))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tropical::uniform_bergman_fan;

    #[test]
    fn vertex_cell() {
        let c = parse_complex(r#"{"format_version": "1", "ambient_dim": 1, "cells": [{"vertices": [[0], [1]]}]}"#).unwrap();
        let seg = Polyhedron::new(
            1,
            vec![],
            vec![AffineFunctional::from_coefficients(&[Rational::ZERO, Rational::ONE]), AffineFunctional::from_coefficients(&[Rational::ONE, -Rational::ONE])],
        );
        assert!(c.cells()[0].set_eq(&seg));
    }

    #[test]
    fn delta_by_rays() {
        let vs = [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1], [-1, -1, -1, -1]];
        let mut cells = Vec::new();
        for i in 0..5 {
            for j in i + 1..5 {
                cells.push(format!("{{\"rays\": [{:?}, {:?}]}}", vs[i], vs[j]));
            }
        }
        let text = format!(r#"{{"format_version": "1", "ambient_dim": 4, "cells": [{}]}}"#, cells.join(","));
        let c = parse_complex(&text).unwrap().validated().unwrap();
        assert_eq!(c.cells().len(), 10);
        assert!(c.supports_equal(&uniform_bergman_fan(4, 2).unwrap()));
    }

    #[test]
    fn bad_inputs() {
        let err = parse_complex(r#"{"format_version": "1", "ambient_dim": 1, "cells": [{"vertices": [["1/0"]]}]}"#).unwrap_err();
        assert!(matches!(&err, Error::Parse { path, .. } if path.contains("cells[0].vertices")));
        assert!(parse_complex(r#"{"format_version": "1", "ambient_dim": 1, "cells": [], "extra": 1}"#).is_err());
        assert!(parse_complex(r#"{"ambient_dim": 1, "cells": []}"#).is_err());
        assert!(parse_complex(r#"{"format_version": "1", "ambient_dim": 2, "cells": [{"vertices": [[0]]}]}"#).is_err());
        let inconsistent = r#"{"format_version": "1", "ambient_dim": 1, "cells": [{"vertices": [[0], [1]], "ineq": [["0", "1"]]}]}"#;
        assert!(parse_complex(inconsistent).is_err());
        let consistent = r#"{"format_version": "1", "ambient_dim": 1, "cells": [{"rays": [[1]], "ineq": [["0", "1"]]}]}"#;
        assert!(parse_complex(consistent).is_ok());
    }

    #[test]
    fn round_trip_is_fixed_point() {
        let d = uniform_bergman_fan(3, 2).unwrap().translate(&QVector::from_ints(&[3, -1, 2])).unwrap();
        let s = serialize_complex(&d);
        let back = parse_complex(&s).unwrap();
        assert!(back.supports_equal(&d));
        assert_eq!(serialize_complex(&back), s);
    }

    #[test]
    fn other_documents() {
        let f = parse_polynomial(r#"{"ambient_dim": 1, "terms": [{"exponent": [0], "valuation": "1/2"}, {"exponent": [1], "valuation": 0}]}"#)
            .unwrap();
        assert_eq!(f.terms().len(), 2);
        let m = parse_matrix(r#"{"rows": 1, "cols": 2, "entries": [[1, 2]]}"#).unwrap();
        assert_eq!(m.cols(), 2);
        assert!(parse_matrix(r#"{"rows": 2, "cols": 2, "entries": [[1, 2]]}"#).is_err());
        let u = parse_univariate(r#"{"terms": [{"exponent": 0, "valuation": "1"}, {"exponent": 2, "valuation": "0"}]}"#).unwrap();
        assert_eq!(u.degree_span(), 2);
        assert_eq!(parse_vector("1, -1/2,3").unwrap(), QVector(vec![Rational::ONE, Rational::new(-1, 2), Rational::from(3)]));
    }
}
