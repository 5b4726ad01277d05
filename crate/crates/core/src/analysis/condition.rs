use super::correlation::{
    autocorr, dual_autocorr, nd_autocorr, nd_dual_autocorr, periodic_autocorr,
};
use crate::{Error, Grid, Result, Sequence};

/// Outcome of a canonical or perfect condition test.
///
/// Residuals are compared against `tolerance · scale`, where `scale` is the
/// energy `Σ|h_i|²`. For the conjugating autocorrelation this is exactly the
/// peak `P`; for the conjugate-free form it bounds every lag, and stays
/// meaningful when the dual peak itself vanishes.
#[derive(Debug, Clone, PartialEq)]
pub struct CanonicalReport {
    pub is_canonical: bool,
    pub tolerance: f64,
    pub scale: f64,
    /// Lag (one entry per axis) of the worst residual, if any lag was tested.
    pub worst_lag: Option<Vec<isize>>,
    pub worst_residual: f64,
}

fn check_tol(tol: f64) -> Result<()> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::Argument(format!(
            "tolerance must be positive, got {tol}"
        )));
    }
    Ok(())
}

fn report(
    residuals: impl Iterator<Item = (Vec<isize>, f64)>,
    scale: f64,
    tol: f64,
) -> CanonicalReport {
    let mut worst: Option<(Vec<isize>, f64)> = None;
    for (lag, r) in residuals {
        if worst.as_ref().is_none_or(|(_, w)| r > *w) {
            worst = Some((lag, r));
        }
    }
    let worst_residual = worst.as_ref().map_or(0.0, |(_, w)| *w);
    CanonicalReport {
        is_canonical: worst_residual <= tol * scale,
        tolerance: tol,
        scale,
        worst_lag: worst.map(|(lag, _)| lag),
        worst_residual,
    }
}

fn canonical_1d(f: &Sequence, tol: f64, dual: bool) -> Result<CanonicalReport> {
    check_tol(tol)?;
    let profile = if dual { dual_autocorr(f) } else { autocorr(f) };
    let n = f.len() as isize;
    let residuals = profile
        .lags()
        .filter(|&(k, _)| k != 0 && k.abs() != n - 1)
        .map(|(k, z)| (vec![k], z.norm()));
    Ok(report(residuals, f.energy(), tol))
}

/// Every aperiodic lag except `0` and `±(N−1)` must be `≤ tol · P`.
pub fn is_canonical(f: &Sequence, tol: f64) -> Result<CanonicalReport> {
    canonical_1d(f, tol, false)
}

/// The canonical test applied to the conjugate-free autocorrelation.
pub fn is_dual_canonical(f: &Sequence, tol: f64) -> Result<CanonicalReport> {
    canonical_1d(f, tol, true)
}

fn canonical_nd(g: &Grid, tol: f64, dual: bool) -> Result<CanonicalReport> {
    check_tol(tol)?;
    let ac = if dual {
        nd_dual_autocorr(g)
    } else {
        nd_autocorr(g)
    };
    let scale: f64 = g.data().iter().map(|z| z.norm_sqr()).sum();
    let residuals = ac.data().iter().enumerate().filter_map(|(flat, z)| {
        let lag: Vec<isize> = ac
            .unravel(flat)
            .iter()
            .zip(g.shape())
            .map(|(&i, &n)| i as isize - (n as isize - 1))
            .collect();
        // Permitted support: every axis at lag 0 or at its extreme.
        let permitted = lag
            .iter()
            .zip(g.shape())
            .all(|(&k, &n)| k == 0 || k.abs() == n as isize - 1);
        (!permitted).then(|| (lag, z.norm()))
    });
    Ok(report(residuals, scale, tol))
}

/// n-dimensional canonical test: the autocorrelation may be non-zero only
/// where every axis sits at lag 0 or at its extreme lag, the support of an
/// outer product of 1D canonical sequences.
pub fn is_canonical_nd(g: &Grid, tol: f64) -> Result<CanonicalReport> {
    canonical_nd(g, tol, false)
}

pub fn is_dual_canonical_nd(g: &Grid, tol: f64) -> Result<CanonicalReport> {
    canonical_nd(g, tol, true)
}

/// Every non-zero cyclic shift must be `≤ tol · P`.
pub fn perfect_report(f: &Sequence, tol: f64) -> Result<CanonicalReport> {
    check_tol(tol)?;
    let profile = periodic_autocorr(f)?;
    let residuals = profile
        .lags()
        .filter(|&(k, _)| k != 0)
        .map(|(k, z)| (vec![k], z.norm()));
    Ok(report(residuals, f.energy(), tol))
}

pub fn is_perfect(f: &Sequence, tol: f64) -> Result<bool> {
    Ok(perfect_report(f, tol)?.is_canonical)
}
