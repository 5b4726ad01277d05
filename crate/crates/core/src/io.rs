//! JSON interchange for sequences and grids.
//!
//! ```json
//! {"version": "0.1.0", "family": "fib", "scale": [1.0, 0.0],
//!  "elements": [[1.0, 0.0], [2.0, 0.0], ...]}
//! ```
//!
//! Grids add a `"shape"` array and list elements in row-major order. On
//! input an element may also be a bare number, meaning a real value.
//! Numbers are written in shortest round-trip form, so writing and reading
//! back is lossless.

use serde::{Deserialize, Serialize};

use crate::scalar::Scalar;
use crate::{Error, FamilyId, Grid, Result, Sequence};

/// Version stamp written into every document.
pub const FORMAT_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
#[serde(untagged)]
enum WireScalar {
    Pair([f64; 2]),
    Real(f64),
}

impl From<WireScalar> for Scalar {
    fn from(w: WireScalar) -> Scalar {
        match w {
            WireScalar::Pair([re, im]) => Scalar::new(re, im),
            WireScalar::Real(re) => Scalar::new(re, 0.0),
        }
    }
}

fn wire(z: Scalar) -> WireScalar {
    WireScalar::Pair([z.re, z.im])
}

#[derive(Debug, Serialize, Deserialize)]
struct Wire {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    version: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    family: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    scale: Option<WireScalar>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    shape: Option<Vec<usize>>,
    elements: Vec<WireScalar>,
}

/// A parsed interchange document.
#[derive(Debug, Clone, PartialEq)]
pub enum Document {
    Sequence(Sequence),
    Grid(Grid),
}

impl Document {
    /// The document as a grid; sequences become rank-1 grids.
    pub fn into_grid(self) -> Grid {
        match self {
            Document::Sequence(s) => Grid::from(&s),
            Document::Grid(g) => g,
        }
    }

    /// The document as a sequence; grids are accepted only when rank 1.
    pub fn into_sequence(self) -> Result<Sequence> {
        match self {
            Document::Sequence(s) => Ok(s),
            Document::Grid(g) if g.rank() == 1 => {
                Sequence::new(g.data().to_vec(), FamilyId::Custom, Scalar::new(1.0, 0.0))
            }
            Document::Grid(g) => Err(Error::Shape(format!(
                "expected a sequence, got a grid of shape {:?}",
                g.shape()
            ))),
        }
    }
}

fn to_string(w: &Wire) -> String {
    serde_json::to_string(w).expect("plain numeric document serialises")
}

pub fn sequence_to_json(seq: &Sequence) -> String {
    to_string(&Wire {
        version: Some(FORMAT_VERSION.into()),
        family: Some(seq.family().to_string()),
        scale: Some(wire(seq.scale())),
        shape: None,
        elements: seq.iter().map(|&z| wire(z)).collect(),
    })
}

pub fn grid_to_json(grid: &Grid) -> String {
    to_string(&Wire {
        version: Some(FORMAT_VERSION.into()),
        family: None,
        scale: None,
        shape: Some(grid.shape().to_vec()),
        elements: grid.data().iter().map(|&z| wire(z)).collect(),
    })
}

pub fn parse_document(text: &str) -> Result<Document> {
    let w: Wire = serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))?;
    let elements: Vec<Scalar> = w.elements.into_iter().map(Scalar::from).collect();
    if let Some(shape) = w.shape {
        return Grid::new(shape, elements).map(Document::Grid);
    }
    let family = match w.family {
        Some(name) => name
            .parse()
            .map_err(|_| Error::Format(format!("unknown family `{name}`")))?,
        None => FamilyId::Custom,
    };
    let scale = w.scale.map_or(Scalar::new(1.0, 0.0), Scalar::from);
    Sequence::new(elements, family, scale).map(Document::Sequence)
}

pub fn parse_sequence(text: &str) -> Result<Sequence> {
    parse_document(text)?.into_sequence()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::gen_h9a;

    #[test]
    fn sequence_round_trip() {
        let h = gen_h9a(Scalar::new(0.3, -1.7)).unwrap();
        let back = parse_sequence(&sequence_to_json(&h)).unwrap();
        assert_eq!(back, h);
    }

    #[test]
    fn grid_round_trip() {
        let g = Grid::from_reals(&[2, 3], &[0.1, 0.2, 1.0 / 3.0, -4.0, 5e-300, 6.0]).unwrap();
        assert_eq!(
            parse_document(&grid_to_json(&g)).unwrap(),
            Document::Grid(g)
        );
    }

    #[test]
    fn bare_numbers_accepted() {
        let s = parse_sequence(r#"{"elements": [1, -2, [0, 1]]}"#).unwrap();
        assert_eq!(
            s.elements(),
            &[Scalar::new(1.0, 0.0), Scalar::new(-2.0, 0.0), Scalar::i()]
        );
        assert_eq!(s.family(), &FamilyId::Custom);
    }

    #[test]
    fn malformed() {
        assert!(matches!(parse_document("{"), Err(Error::Format(_))));
        assert!(matches!(
            parse_document(r#"{"elements": []}"#),
            Err(Error::Argument(_))
        ));
        assert!(matches!(
            parse_document(r#"{"shape": [2, 2], "elements": [1]}"#),
            Err(Error::Shape(_))
        ));
        assert!(matches!(
            parse_document(r#"{"family": "nope", "elements": [1]}"#),
            Err(Error::Format(_))
        ));
    }
}
