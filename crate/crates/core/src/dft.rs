//! Discrete Fourier transform of zero-padded sequences.
//!
//! Convention: `X_k = Σ_n x_n · e^{−2πi·kn/L}` with no normalization, where
//! `L` is the padded length. Applying it twice gives `L · x_{(−n) mod L}`.
//! Flatness metrics only look at magnitudes, so the convention does not
//! affect them.

use rustfft::FftPlanner;

use crate::scalar::Scalar;
use crate::{Error, Result, Sequence};

pub fn dft_slice(values: &[Scalar], padded_length: usize) -> Result<Vec<Scalar>> {
    if padded_length < values.len() || padded_length == 0 {
        return Err(Error::Argument(format!(
            "padded length {padded_length} shorter than input length {}",
            values.len()
        )));
    }
    let mut buffer = values.to_vec();
    buffer.resize(padded_length, Scalar::new(0.0, 0.0));
    FftPlanner::new()
        .plan_fft_forward(padded_length)
        .process(&mut buffer);
    Ok(buffer)
}

pub fn dft(f: &Sequence, padded_length: usize) -> Result<Vec<Scalar>> {
    dft_slice(f.elements(), padded_length)
}
