//! Scalable Huffman sequences.
//!
//! A canonical Huffman sequence has an aperiodic autocorrelation that vanishes
//! at every shift except zero and the two extreme shifts. This crate builds the
//! known scalable families (Fibonacci-polynomial, closed-form radical,
//! arbitrary-length and tangent families, their perfect periodic variants and
//! the cosine family), checks their correlation properties, composes them into
//! longer and multi-dimensional arrays, and simulates the two-mask
//! de-correlation imaging protocol with dose accounting.
//!
//! ```
//! use huffseq::{analysis, families};
//!
//! let h7 = families::gen_fibonacci(7, 1.0.into()).unwrap();
//! assert_eq!(h7.to_integers(1e-12).unwrap(), vec![1, 2, 2, 0, -2, 2, -1]);
//!
//! let report = analysis::is_canonical(&h7, 1e-9).unwrap();
//! assert!(report.is_canonical);
//! ```
//!
//! The accompanying guide in `book/` walks through each family; its code
//! listings are compiled as doc-tests of this crate.

pub mod algebra;
pub mod analysis;
pub mod decorrelate;
pub mod dft;
mod error;
pub mod families;
pub mod fibonacci;
mod grid;
pub mod io;
pub mod scalar;
mod sequence;

pub use error::{Error, Result};
pub use families::FamilyId;
pub use grid::Grid;
pub use scalar::Scalar;
pub use sequence::{Sequence, SequenceMeta};

/// Default relative tolerance for floating-point equality.
pub const DEFAULT_TOL: f64 = 1e-9;

// The guide's listings run as doc-tests so the book cannot drift from the API.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/sequences.md")]
    mod sequences {}
    #[doc = include_str!("../../../book/src/families.md")]
    mod families {}
    #[doc = include_str!("../../../book/src/correlation.md")]
    mod correlation {}
    #[doc = include_str!("../../../book/src/perfect.md")]
    mod perfect {}
    #[doc = include_str!("../../../book/src/complex.md")]
    mod complex {}
    #[doc = include_str!("../../../book/src/composition.md")]
    mod composition {}
    #[doc = include_str!("../../../book/src/decorrelation.md")]
    mod decorrelation {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
