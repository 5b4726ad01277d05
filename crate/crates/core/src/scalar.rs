//! Complex scalars and tolerance-aware comparison.

use num_complex::Complex64;

use crate::{Error, Result};

/// Every sequence element and scale parameter is a complex double.
pub type Scalar = Complex64;

/// Purely real scalar.
pub fn real(re: f64) -> Scalar {
    Scalar::new(re, 0.0)
}

/// Unit-modulus scalar `e^{iθ}`.
pub fn cis(theta: f64) -> Scalar {
    Scalar::from_polar(1.0, theta)
}

/// Relative comparison: `|a − b| ≤ tol · max(1, |a|, |b|)`.
///
/// Symmetric in `a` and `b`, and reflexive for finite values.
pub fn approx_eq(a: Scalar, b: Scalar, tol: f64) -> bool {
    let scale = 1f64.max(a.norm()).max(b.norm());
    (a - b).norm() <= tol * scale
}

pub fn is_finite(z: Scalar) -> bool {
    z.re.is_finite() && z.im.is_finite()
}

/// True when the imaginary part is negligible relative to `tol`.
pub fn is_real(z: Scalar, tol: f64) -> bool {
    z.im.abs() <= tol * 1f64.max(z.re.abs())
}

/// True when both components are within `tol` of integers.
pub fn is_gaussian_integer(z: Scalar, tol: f64) -> bool {
    (z.re - z.re.round()).abs() <= tol && (z.im - z.im.round()).abs() <= tol
}

/// Parses `re` or `re,im`.
pub fn parse_scalar(text: &str) -> Result<Scalar> {
    let parse = |part: &str| {
        part.trim()
            .parse::<f64>()
            .map_err(|_| Error::Argument(format!("cannot parse `{part}` as a number")))
    };
    let mut parts = text.split(',');
    let re = parse(parts.next().unwrap_or(""))?;
    let im = match parts.next() {
        Some(p) => parse(p)?,
        None => 0.0,
    };
    if parts.next().is_some() {
        return Err(Error::Argument(format!(
            "expected `re` or `re,im`, got `{text}`"
        )));
    }
    let z = Scalar::new(re, im);
    if !is_finite(z) {
        return Err(Error::Argument(format!("scalar `{text}` is not finite")));
    }
    Ok(z)
}
