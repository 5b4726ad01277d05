use serde::Serialize;

use crate::scalar::{real, Scalar};
use crate::{Error, Grid, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MaskKind {
    /// `(H + κ, κ − H)`.
    Pedestal,
    /// Positive and negative parts.
    SplitSign,
    /// Sign splits of the real and imaginary parts.
    SplitComplex,
}

/// Non-negative real masks whose signed combination recovers a source array.
#[derive(Debug, Clone, PartialEq)]
pub struct MaskSet {
    pub kind: MaskKind,
    pub masks: Vec<Grid>,
    /// Pedestal offset; zero for the split kinds.
    pub kappa: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DoseReport {
    pub total_dose: f64,
    pub per_mask: Vec<f64>,
}

fn require_real(h: &Grid, op: &str) -> Result<()> {
    if !h.is_real(0.0) {
        return Err(Error::Argument(format!(
            "{op} needs a real array; use split_complex for complex input"
        )));
    }
    Ok(())
}

fn positive_part(h: &Grid, sign: f64) -> Grid {
    h.map(|z| real((sign * z.re).max(0.0)))
}

/// `M₁ = max(h, 0)`, `M₂ = max(−h, 0)`.
pub fn split_signs(h: &Grid) -> Result<MaskSet> {
    require_real(h, "split_signs")?;
    Ok(MaskSet {
        kind: MaskKind::SplitSign,
        masks: vec![positive_part(h, 1.0), positive_part(h, -1.0)],
        kappa: 0.0,
    })
}

/// Smallest offset making both pedestal masks non-negative.
pub fn minimal_pedestal(h: &Grid) -> f64 {
    h.max_re().max(-h.min_re()).max(0.0)
}

pub fn pedestal_masks(h: &Grid, kappa: f64) -> Result<MaskSet> {
    require_real(h, "pedestal_masks")?;
    let (lo, hi) = (h.min_re(), h.max_re());
    if kappa.is_nan() || kappa < 0.0 {
        return Err(Error::Argument(format!(
            "kappa = {kappa} must be non-negative"
        )));
    }
    if kappa < -lo {
        return Err(Error::Argument(format!(
            "kappa = {kappa} is below -min(h) = {}; mask h + kappa would be negative",
            -lo
        )));
    }
    if kappa < hi {
        return Err(Error::Argument(format!(
            "kappa = {kappa} is below max(h) = {hi}; mask kappa - h would be negative"
        )));
    }
    Ok(MaskSet {
        kind: MaskKind::Pedestal,
        masks: vec![h.map(|z| real(z.re + kappa)), h.map(|z| real(kappa - z.re))],
        kappa,
    })
}

/// Four masks `(M₁Re, M₂Re, M₁Im, M₂Im)` with
/// `h = M₁Re − M₂Re + i(M₁Im − M₂Im)`.
pub fn split_complex(h: &Grid) -> MaskSet {
    let re = h.map(|z| real(z.re));
    let im = h.map(|z| real(z.im));
    MaskSet {
        kind: MaskKind::SplitComplex,
        masks: vec![
            positive_part(&re, 1.0),
            positive_part(&re, -1.0),
            positive_part(&im, 1.0),
            positive_part(&im, -1.0),
        ],
        kappa: 0.0,
    }
}

/// Signed combination of per-mask grids, one per mask of `kind`.
///
/// Pedestal pairs differ by `2H`, so their difference is halved.
pub(crate) fn combine(kind: MaskKind, parts: &[Grid]) -> Result<Grid> {
    let diff = |a: &Grid, b: &Grid| a.zip_with(b, |x, y| x - y);
    match kind {
        MaskKind::SplitSign => diff(&parts[0], &parts[1]),
        MaskKind::Pedestal => Ok(diff(&parts[0], &parts[1])?.map(|z| z * 0.5)),
        MaskKind::SplitComplex => {
            let re = diff(&parts[0], &parts[1])?;
            let im = diff(&parts[2], &parts[3])?;
            re.zip_with(&im, |a, b| a + Scalar::i() * b)
        }
    }
}

/// Recover the source array from its masks.
pub fn recombine(m: &MaskSet) -> Result<Grid> {
    combine(m.kind, &m.masks)
}

/// Sum of every mask entry over every exposure.
pub fn dose(m: &MaskSet) -> DoseReport {
    let per_mask: Vec<f64> = m.masks.iter().map(|g| g.sum().re).collect();
    DoseReport {
        total_dose: per_mask.iter().sum(),
        per_mask,
    }
}
