//! Correlation engines, canonical/perfect condition checks and quality
//! metrics.

mod condition;
mod correlation;
mod metrics;

pub use condition::{
    is_canonical, is_canonical_nd, is_dual_canonical, is_dual_canonical_nd, is_perfect,
    perfect_report, CanonicalReport,
};
pub use correlation::{
    autocorr, dual_autocorr, nd_autocorr, nd_dual_autocorr, periodic_autocorr, xcorr,
    CorrelationProfile, ProfileKind,
};
pub use metrics::{
    dual_cross_spectrum, merit_factor, merit_factor_exact, peak_sidelobe_ratio, spectral_flatness,
};
