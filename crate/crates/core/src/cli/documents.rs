//! JSON documents read and written by the command line tool.
//!
//! A vector is `{"dim": n, "entries": [[re, im], ...]}`. An event is either
//! `{"frame": [vector, ...]}` (the projection onto their span) or
//! `{"matrix": [[[re, im], ...], ...]}` (checked for `E = E^2 = E*`). An
//! empty frame needs an explicit `"dim"`.

use std::fs;
use std::path::Path;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::CliError;
use crate::error::GeometryError;
use crate::hilbert::{event_from_frame, Event, HilbertVector, UnitVector};
use crate::projective::ProjectivePoint;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VectorDocument {
    pub dim: usize,
    pub entries: Vec<[f64; 2]>,
}

impl VectorDocument {
    pub fn to_vector(&self) -> Result<HilbertVector, CliError> {
        if self.entries.len() != self.dim {
            return Err(CliError::Parse(format!(
                "vector declares dim {} but has {} entries",
                self.dim,
                self.entries.len()
            )));
        }
        HilbertVector::new(
            self.entries
                .iter()
                .map(|&[re, im]| Complex64::new(re, im))
                .collect(),
        )
        .map_err(CliError::from)
    }

    /// The canonical representative of `x`. Negative zeros are written as `0.0`.
    pub fn from_point(x: &ProjectivePoint) -> Self {
        Self {
            dim: x.dim(),
            entries: x
                .rep()
                .entries()
                .iter()
                .map(|z| [z.re + 0.0, z.im + 0.0])
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EventDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dim: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub frame: Option<Vec<VectorDocument>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matrix: Option<Vec<Vec<[f64; 2]>>>,
}

impl EventDocument {
    pub fn to_event(&self) -> Result<Event, CliError> {
        let event = match (&self.frame, &self.matrix) {
            (Some(frame), None) => {
                let dim = match (self.dim, frame.first()) {
                    (Some(d), _) => d,
                    (None, Some(v)) => v.dim,
                    (None, None) => {
                        return Err(CliError::Parse(
                            "an empty frame needs an explicit \"dim\"".into(),
                        ))
                    }
                };
                let columns = frame
                    .iter()
                    .map(|v| {
                        let v = v.to_vector()?;
                        UnitVector::new(v)
                            .map_err(|_| CliError::Geometry(GeometryError::RankDeficientFrame))
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                event_from_frame(dim, &columns)?
            }
            (None, Some(rows)) => Event::from_rows(
                rows.iter()
                    .map(|row| row.iter().map(|&[re, im]| Complex64::new(re, im)).collect())
                    .collect(),
            )?,
            _ => {
                return Err(CliError::Parse(
                    "an event needs exactly one of \"frame\" or \"matrix\"".into(),
                ))
            }
        };
        if let Some(d) = self.dim {
            GeometryError::check_dims(d, event.dim())?;
        }
        Ok(event)
    }
}

/// Either kind of input document.
#[derive(Debug, Clone)]
pub enum Document {
    Vector(VectorDocument),
    Event(EventDocument),
}

fn read(path: &Path) -> Result<serde_json::Value, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))
}

fn decode<T: for<'de> Deserialize<'de>>(
    path: &Path,
    value: serde_json::Value,
) -> Result<T, CliError> {
    serde_json::from_value(value).map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))
}

pub fn read_document(path: &Path) -> Result<Document, CliError> {
    let value = read(path)?;
    if value.get("entries").is_some() {
        decode(path, value).map(Document::Vector)
    } else {
        decode(path, value).map(Document::Event)
    }
}

pub fn read_vector(path: &Path) -> Result<HilbertVector, CliError> {
    let doc: VectorDocument = decode(path, read(path)?)?;
    doc.to_vector()
}

pub fn read_event(path: &Path) -> Result<Event, CliError> {
    let doc: EventDocument = decode(path, read(path)?)?;
    doc.to_event()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::projective::pi3_project;
    use proptest::prelude::*;

    #[test]
    fn event_document_forms() {
        let frame: EventDocument =
            serde_json::from_str(r#"{"frame": [{"dim": 2, "entries": [[1.0, 0.0], [0.0, 0.0]]}]}"#)
                .unwrap();
        assert_eq!(frame.to_event().unwrap(), Event::diagonal(&[true, false]));

        let matrix: EventDocument = serde_json::from_str(
            r#"{"matrix": [[[0.0, 0.0], [0.0, 0.0]], [[0.0, 0.0], [1.0, 0.0]]]}"#,
        )
        .unwrap();
        assert_eq!(matrix.to_event().unwrap().rank(), 1);

        let both: EventDocument = serde_json::from_str(
            r#"{"frame": [], "matrix": [[[1.0, 0.0], [0.0, 0.0]], [[0.0, 0.0], [1.0, 0.0]]]}"#,
        )
        .unwrap();
        assert!(matches!(both.to_event(), Err(CliError::Parse(_))));

        let empty: EventDocument = serde_json::from_str(r#"{"dim": 3, "frame": []}"#).unwrap();
        assert_eq!(empty.to_event().unwrap(), Event::zero(3).unwrap());
        let no_dim: EventDocument = serde_json::from_str(r#"{"frame": []}"#).unwrap();
        assert!(matches!(no_dim.to_event(), Err(CliError::Parse(_))));
    }

    #[test]
    fn invalid_matrix_is_an_event_error() {
        let doc: EventDocument = serde_json::from_str(
            r#"{"matrix": [[[1.0, 0.0], [1.0, 0.0]], [[0.0, 0.0], [0.0, 0.0]]]}"#,
        )
        .unwrap();
        assert_eq!(doc.to_event().unwrap_err().exit_code(), 4);
    }

    #[test]
    fn vector_length_must_match_dim() {
        let doc = VectorDocument {
            dim: 3,
            entries: vec![[1.0, 0.0], [0.0, 0.0]],
        };
        assert!(matches!(doc.to_vector(), Err(CliError::Parse(_))));
    }

    #[test]
    fn canonical_output_has_no_negative_zero() {
        let x = pi3_project(&HilbertVector::from_real(&[0.0, -2.0]).unwrap()).unwrap();
        let json = serde_json::to_string(&VectorDocument::from_point(&x)).unwrap();
        assert_eq!(json, r#"{"dim":2,"entries":[[0.0,0.0],[1.0,0.0]]}"#);
    }

    fn entries(dim: usize) -> impl Strategy<Value = Vec<[f64; 2]>> {
        prop::collection::vec(prop::array::uniform2(-10.0f64..10.0), dim)
    }

    proptest! {
        #[test]
        fn emitted_points_reparse_to_the_same_point(dim in 2usize..6, raw in entries(6)) {
            let raw = &raw[..dim];
            let v = HilbertVector::new(raw.iter().map(|&[r, i]| Complex64::new(r, i)).collect()).unwrap();
            prop_assume!(v.norm() > 1e-6);
            let x = pi3_project(&v).unwrap();
            let text = serde_json::to_string(&VectorDocument::from_point(&x)).unwrap();
            let back: VectorDocument = serde_json::from_str(&text).unwrap();
            let y = pi3_project(&back.to_vector().unwrap()).unwrap();
            prop_assert!(x.approx_eq(&y, 1e-12));
        }
    }
}
