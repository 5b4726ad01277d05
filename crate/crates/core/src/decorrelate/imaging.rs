use serde::Serialize;

use super::masks::{combine, MaskSet};
use crate::analysis::{is_canonical_nd, is_dual_canonical_nd};
use crate::{Error, Grid, Result};

/// Tolerance of the canonical check made before reconstructing.
const RECONSTRUCT_TOL: f64 = 1e-6;

fn align(object: &Grid, h: &Grid) -> Result<Grid> {
    if h.rank() < object.rank() {
        h.promote(object.rank())
    } else {
        Ok(h.clone())
    }
}

/// Simulated measurement `S = O * h`: full linear convolution, output extent
/// `|O| + |h| − 1` on every axis. A lower-rank `h` acts along the trailing
/// axes.
pub fn blur(object: &Grid, h: &Grid) -> Result<Grid> {
    object.convolve(&align(object, h)?)
}

/// One exposure per mask, recombined as the masks were split.
pub fn measure(object: &Grid, m: &MaskSet) -> Result<Grid> {
    let parts = m
        .masks
        .iter()
        .map(|mask| blur(object, mask))
        .collect::<Result<Vec<_>>>()?;
    combine(m.kind, &parts)
}

#[derive(Debug, Clone, PartialEq)]
pub struct Reconstruction {
    pub object: Grid,
    /// The normalising peak `Σ c(h_i)·h_i`.
    pub peak: crate::Scalar,
    /// Set when `h` fails the canonical test the reconstruction relies on.
    pub warning: Option<String>,
}

/// Estimate the object from a measurement by correlating with `h` and
/// dividing by the peak.
///
/// With `dual = false` the correlation conjugates `h`; with `dual = true` it
/// does not, which is the partner of a dual-canonical `h`. The estimate
/// differs from the object only by the end-lag terms of the autocorrelation.
pub fn reconstruct(measurement: &Grid, h: &Grid, dual: bool) -> Result<Reconstruction> {
    let h = align(measurement, h)?;
    if h.rank() != measurement.rank() {
        return Err(Error::Shape(format!(
            "kernel rank {} exceeds measurement rank {}",
            h.rank(),
            measurement.rank()
        )));
    }
    let object_shape: Vec<usize> = measurement
        .shape()
        .iter()
        .zip(h.shape())
        .map(|(&s, &k)| {
            s.checked_sub(k)
                .map(|d| d + 1)
                .ok_or_else(|| Error::Shape(format!("kernel extent {k} exceeds measurement {s}")))
        })
        .collect::<Result<_>>()?;

    let peak: crate::Scalar = h
        .data()
        .iter()
        .map(|&z| if dual { z * z } else { z.conj() * z })
        .sum();
    if peak.norm() == 0.0 {
        return Err(Error::Argument("kernel has zero correlation peak".into()));
    }
    let report = if dual {
        is_dual_canonical_nd(&h, RECONSTRUCT_TOL)?
    } else {
        is_canonical_nd(&h, RECONSTRUCT_TOL)?
    };
    let warning = (!report.is_canonical).then(|| {
        format!(
            "kernel is not {}canonical: residual {:.3e} at lag {:?}",
            if dual { "dual-" } else { "" },
            report.worst_residual,
            report.worst_lag.unwrap_or_default()
        )
    });

    let full = h.correlate(measurement, !dual)?;
    let mut data = Vec::with_capacity(object_shape.iter().product());
    let count: usize = object_shape.iter().product();
    for flat in 0..count {
        let idx = crate::grid::unravel(flat, &object_shape);
        let at: Vec<usize> = idx
            .iter()
            .zip(h.shape())
            .map(|(&i, &k)| i + k - 1)
            .collect();
        data.push(full.get(&at).expect("lag within correlation extent") / peak);
    }
    Ok(Reconstruction {
        object: Grid::new(object_shape, data)?,
        peak,
        warning,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ReconError {
    pub max_abs: f64,
    /// `‖estimate − object‖₂ / ‖object‖₂`.
    pub rel_l2: f64,
}

pub fn recon_error(object: &Grid, estimate: &Grid) -> Result<ReconError> {
    if object.shape() != estimate.shape() {
        return Err(Error::Shape(format!(
            "{:?} vs {:?}",
            object.shape(),
            estimate.shape()
        )));
    }
    let diff = estimate.zip_with(object, |a, b| a - b)?;
    let norm = |g: &Grid| g.data().iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    let (d, o) = (norm(&diff), norm(object));
    let rel_l2 = if o > 0.0 {
        d / o
    } else if d == 0.0 {
        0.0
    } else {
        f64::INFINITY
    };
    Ok(ReconError {
        max_abs: diff.max_abs(),
        rel_l2,
    })
}
