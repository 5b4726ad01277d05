//! Two-mask measurement protocol: signed and complex arrays as sets of
//! non-negative masks, dose accounting, blur simulation and
//! reconstruction by cross-correlation.

mod imaging;
mod masks;

pub use imaging::{blur, measure, recon_error, reconstruct, ReconError, Reconstruction};
pub use masks::{
    dose, minimal_pedestal, pedestal_masks, recombine, split_complex, split_signs, DoseReport,
    MaskKind, MaskSet,
};
