use std::ops::Index;

use crate::families::FamilyId;
use crate::scalar::{self, Scalar};
use crate::{Error, Result};

/// Provenance carried alongside a sequence's elements.
#[derive(Debug, Clone, PartialEq)]
pub struct SequenceMeta {
    pub family: FamilyId,
    pub scale: Scalar,
}

/// A finite, non-empty 1D list of finite complex elements.
#[derive(Debug, Clone, PartialEq)]
pub struct Sequence {
    elements: Vec<Scalar>,
    meta: SequenceMeta,
}

impl Sequence {
    pub fn new(elements: Vec<Scalar>, family: FamilyId, scale: Scalar) -> Result<Self> {
        if elements.is_empty() {
            return Err(Error::Argument(
                "sequence must have at least one element".into(),
            ));
        }
        if let Some(i) = elements.iter().position(|z| !scalar::is_finite(*z)) {
            return Err(Error::Domain(format!(
                "{family} produced a non-finite element at index {i}"
            )));
        }
        Ok(Sequence {
            elements,
            meta: SequenceMeta { family, scale },
        })
    }

    /// A user-supplied real sequence.
    pub fn from_reals(values: &[f64]) -> Result<Self> {
        Self::new(
            values.iter().map(|&v| scalar::real(v)).collect(),
            FamilyId::Custom,
            scalar::real(1.0),
        )
    }

    /// A user-supplied integer sequence.
    pub fn from_ints(values: &[i64]) -> Result<Self> {
        Self::new(
            values.iter().map(|&v| scalar::real(v as f64)).collect(),
            FamilyId::Custom,
            scalar::real(1.0),
        )
    }

    pub fn elements(&self) -> &[Scalar] {
        &self.elements
    }

    pub fn into_elements(self) -> Vec<Scalar> {
        self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    /// Always false; kept for API symmetry with `len`.
    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn meta(&self) -> &SequenceMeta {
        &self.meta
    }

    pub fn family(&self) -> &FamilyId {
        &self.meta.family
    }

    pub fn scale(&self) -> Scalar {
        self.meta.scale
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Scalar> {
        self.elements.iter()
    }

    pub fn with_family(mut self, family: FamilyId) -> Self {
        self.meta.family = family;
        self
    }

    /// Σ|h_i|², the zero-lag value of the conjugating autocorrelation.
    pub fn energy(&self) -> f64 {
        self.elements.iter().map(|z| z.norm_sqr()).sum()
    }

    pub fn max_abs(&self) -> f64 {
        self.elements.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn is_real(&self, tol: f64) -> bool {
        self.elements.iter().all(|z| scalar::is_real(*z, tol))
    }

    /// Real parts, if every element is real within `tol`.
    pub fn to_reals(&self, tol: f64) -> Option<Vec<f64>> {
        self.is_real(tol)
            .then(|| self.elements.iter().map(|z| z.re).collect())
    }

    /// Integer values, if every element is a real integer within `tol`.
    pub fn to_integers(&self, tol: f64) -> Option<Vec<i64>> {
        self.elements
            .iter()
            .map(|z| {
                let r = z.re.round();
                (scalar::is_real(*z, tol) && (z.re - r).abs() <= tol && r.abs() < 9.0e15)
                    .then_some(r as i64)
            })
            .collect()
    }

    pub fn reversed(&self) -> Sequence {
        let mut elements = self.elements.clone();
        elements.reverse();
        Sequence {
            elements,
            meta: self.meta.clone(),
        }
    }

    pub fn conj(&self) -> Sequence {
        Sequence {
            elements: self.elements.iter().map(|z| z.conj()).collect(),
            meta: self.meta.clone(),
        }
    }

    /// Elementwise comparison with [`scalar::approx_eq`].
    pub fn approx_eq(&self, other: &Sequence, tol: f64) -> bool {
        self.len() == other.len()
            && self
                .iter()
                .zip(other.iter())
                .all(|(a, b)| scalar::approx_eq(*a, *b, tol))
    }
}

impl Index<usize> for Sequence {
    type Output = Scalar;

    fn index(&self, i: usize) -> &Scalar {
        &self.elements[i]
    }
}

impl<'a> IntoIterator for &'a Sequence {
    type Item = &'a Scalar;
    type IntoIter = std::slice::Iter<'a, Scalar>;

    fn into_iter(self) -> Self::IntoIter {
        self.elements.iter()
    }
}
