//! Fixed-length families whose elements are closed-form radical expressions
//! in the scale `s`. Square roots use the principal branch, so complex `s`
//! gives the dual-canonical extension.
//!
//! Three printed forms needed correcting before they satisfy the canonical
//! condition; each correction below is the unique completion found by solving
//! the correlation equations numerically and is regression-tested:
//!
//! * `h9a` elements 4 and 6 are `−1 ∓ s·√(8+s²)/2`, and the centre is
//!   `−s²·√(8+s²)/4`.
//! * `h13a` element 9 is `−(3+s²)(√(4+s²) − s)/2`.
//! * `he6` element 3 is `s(s + √(4+s²))/2`; the lag-3 equation fixes it
//!   linearly given the other five elements.

use std::f64::consts::SQRT_2;

use crate::scalar::{self, Scalar};
use crate::{Error, FamilyId, Result, Sequence};

use super::require_nonzero;

fn c(v: f64) -> Scalar {
    scalar::real(v)
}

fn scaled(s: Scalar, inner: Vec<Scalar>, family: FamilyId) -> Result<Sequence> {
    Sequence::new(inner.into_iter().map(|z| s * z).collect(), family, s)
}

/// Length-9 family with opposite-signed ends `[1, s, …, s, −1]`.
pub fn gen_h9a(s: Scalar) -> Result<Sequence> {
    require_nonzero("h9a", s)?;
    let r = (s * s + 8.0).sqrt();
    let inner = vec![
        s.inv(),
        c(1.0),
        (s - r) / 2.0,
        -1.0 - s * r / 2.0,
        -s * s * r / 4.0,
        -1.0 + s * r / 2.0,
        (-s - r) / 2.0,
        c(1.0),
        -s.inv(),
    ];
    scaled(s, inner, FamilyId::H9a)
}

/// Length-9 family with matched ends `[1, s, …, −s, 1]`.
pub fn gen_h9b(s: Scalar) -> Result<Sequence> {
    require_nonzero("h9b", s)?;
    let s2 = s * s;
    let inner = vec![
        s.inv(),
        c(1.0),
        s / 2.0,
        (4.0 + 2.0 * s2 - SQRT_2 * (4.0 + s2)) / 4.0,
        s * (8.0 + 3.0 * s2 - 2.0 * SQRT_2 * (4.0 + s2)) / 8.0,
        (-4.0 - 2.0 * s2 + SQRT_2 * (4.0 + s2)) / 4.0,
        s / 2.0,
        c(-1.0),
        s.inv(),
    ];
    scaled(s, inner, FamilyId::H9b)
}

/// Length-13 family with opposite-signed ends.
pub fn gen_h13a(s: Scalar) -> Result<Sequence> {
    require_nonzero("h13a", s)?;
    let s2 = s * s;
    let q = (s2 + 4.0).sqrt();
    let inner = vec![
        s.inv(),
        c(1.0),
        (s + q) / 2.0,
        (-4.0 - s2 + s * q) / 2.0,
        -(3.0 + s2) * (s + q) / 2.0,
        (2.0 + s2 - s * q * (5.0 + 2.0 * s2)) / 2.0,
        -q * (1.0 + 3.0 * s2 + s2 * s2),
        (2.0 + s2 + s * q * (5.0 + 2.0 * s2)) / 2.0,
        -(3.0 + s2) * (q - s) / 2.0,
        (-4.0 - s2 - s * q) / 2.0,
        (-s + q) / 2.0,
        c(1.0),
        -s.inv(),
    ];
    scaled(s, inner, FamilyId::H13a)
}

/// Length-13 polynomial family with matched `+1` ends.
pub fn gen_h13b(s: Scalar) -> Result<Sequence> {
    let s2 = s * s;
    let s4 = s2 * s2;
    let d = s * (8.0 + 3.0 * s2) / 16.0;
    let e = s2 * (8.0 + s2) / 16.0;
    let f = s * (-64.0 + 8.0 * s2 + s4) / 64.0;
    let g = s2 * (-448.0 - 16.0 * s2 + s4) / 512.0;
    let elements = vec![
        c(1.0),
        s,
        s2 / 2.0,
        d,
        e,
        f,
        g,
        -f,
        e,
        -d,
        s2 / 2.0,
        -s,
        c(1.0),
    ];
    Sequence::new(elements, FamilyId::H13b, s)
}

/// `T(s)` of the length-17 family; errors on a negative real radicand.
fn h17_t(s: Scalar) -> Result<Scalar> {
    let s2 = s * s;
    let (s4, s6, s8) = (s2 * s2, s2 * s2 * s2, s2 * s2 * s2 * s2);
    let radicand = 512.0 * s2 + 480.0 * s4 + 160.0 * s6 + 17.0 * s8
        - (256.0 * s2 + 320.0 * s4 + 112.0 * s6 + 12.0 * s8) * SQRT_2;
    if s.im == 0.0 && radicand.re < 0.0 {
        return Err(Error::Domain(format!(
            "h17: radicand of T(s) is negative ({}) at s = {}",
            radicand.re, s.re
        )));
    }
    Ok(radicand.sqrt() / 8.0)
}

/// Scalable length-17 family
/// `[a, b, c, d, e, f, g, h, i, j, k, l, m, d, −c, b, −a]`.
///
/// The radicand of `T(s)` is `s²` times a polynomial in `s²` with positive
/// coefficients, so every real `s` is admissible.
pub fn gen_h17(s: Scalar) -> Result<Sequence> {
    let t = h17_t(s)?;
    let s2 = s * s;
    let s3 = s2 * s;
    let s4 = s2 * s2;
    // recurring sub-expressions
    let u = -s - s3 / 2.0 + (s + s3 / 4.0) * SQRT_2;
    let v = -s2 - 3.0 / 8.0 * s4 + (s2 + s4 / 4.0) * SQRT_2;
    let a = c(1.0);
    let b = s;
    let cc = s2 / 2.0;
    let d = s * (4.0 + 2.0 * s2 - SQRT_2 * (4.0 + s2)) / 4.0;
    let e = -v - t;
    let f = u - s * t;
    let g = s2 / 2.0 - s2 / 2.0 * t;
    let h = -s + u * t;
    let i = v * t;
    let j = -s - u * t;
    let k = -s2 / 2.0 - s2 / 2.0 * t;
    let l = u + s * t;
    let m = v - t;
    let elements = vec![a, b, cc, d, e, f, g, h, i, j, k, l, m, d, -cc, b, -a];
    Sequence::new(elements, FamilyId::H17, s)
}

/// The constant length-17 sequence with matched `+1` ends and peak
/// correlation ≈ 22.29.
pub fn gen_h17_matched() -> Sequence {
    let r2 = SQRT_2;
    let w1 = (2.0 - r2).sqrt();
    let w2 = (34.0 - 7.0 * r2).sqrt();
    let w3 = (2.0 * (10.0 + r2)).sqrt();
    let w4 = (1460.0 + 782.0 * r2).sqrt();
    let w5 = (394.0 + 223.0 * r2).sqrt();
    let half = [
        0.5,
        1.0,
        1.0,
        -1.0 + 2.0 * r2 - 2.0 * w1,
        -3.0 + 4.0 * r2 - 4.0 * w1,
        1.0 + 6.0 * r2 - 2.0 * w2,
        25.0 - 4.0 * r2 - 4.0 * w3,
        79.0 + 16.0 * r2 - 2.0 * w4,
        145.0 + 48.0 * r2 - 8.0 * w5,
        -79.0 - 16.0 * r2 + 2.0 * w4,
        25.0 - 4.0 * r2 - 4.0 * w3,
        -1.0 - 6.0 * r2 + 2.0 * w2,
        -3.0 + 4.0 * r2 - 4.0 * w1,
        1.0 - 2.0 * r2 + 2.0 * w1,
        1.0,
        -1.0,
        0.5,
    ];
    let elements = half.iter().map(|&v| c(2.0 * v)).collect();
    Sequence::new(elements, FamilyId::H17Matched, c(1.0)).expect("finite constants")
}

/// Length-11 twin of the Fibonacci sequence; integer-valued at s = 1, 4, 11.
pub fn gen_h11(s: Scalar) -> Result<Sequence> {
    require_nonzero("h11", s)?;
    let s2 = s * s;
    let s3 = s2 * s;
    let w = (s2 + 4.0).sqrt() * 5f64.sqrt();
    let inner = vec![
        s.inv(),
        c(1.0),
        (s + w) / 2.0,
        (2.0 + s2 + s * w) / 2.0,
        3.5 * s + s3 - w / 2.0,
        1.0 + 4.0 * s2 + s2 * s2,
        (-7.0 * s - 2.0 * s3 - w) / 2.0,
        (2.0 + s2 - s * w) / 2.0,
        (-s + w) / 2.0,
        c(1.0),
        -s.inv(),
    ];
    scaled(s, inner, FamilyId::H11)
}

/// Even length 4: `[1, s, s(s+√(4+s²))/2, −(s+√(4+s²))/2]`.
pub fn gen_he4(s: Scalar) -> Result<Sequence> {
    require_nonzero("he4", s)?;
    let q = (s * s + 4.0).sqrt();
    let elements = vec![c(1.0), s, s * (s + q) / 2.0, -(s + q) / 2.0];
    Sequence::new(elements, FamilyId::He4, s)
}

/// Even length 6, built from the helper terms `X`, `Y`, `W`, `Z`.
pub fn gen_he6(s: Scalar) -> Result<Sequence> {
    require_nonzero("he6", s)?;
    let s2 = s * s;
    let s3 = s2 * s;
    let q = (s2 + 4.0).sqrt();
    let x = (4.0 + s2) * (2.0 + s * (3.0 + s2) * (q + s * (3.0 + s * (s + q))));
    if s.im == 0.0 && x.re < 0.0 {
        return Err(Error::Domain(format!(
            "he6: X(s) = {} is negative at s = {}",
            x.re, s.re
        )));
    }
    let y = 12.0 * s2 + 7.0 * s2 * s2 + s3 * s3 + 4.0 * s * (1.0 + s2) * q + s3 * (1.0 + s2) * q;
    let w = (1.0 + s2) * q;
    let z = -y + SQRT_2 * (2.0 + s2) * x.sqrt();
    if z.norm() < 1e-12 {
        return Err(Error::Domain(format!("he6: Z(s) vanishes at s = {s}")));
    }
    let elements = vec![
        c(1.0),
        s,
        s * (s + q) / 2.0,
        s * (z - 4.0) / 4.0,
        s * (3.0 * s + s3 + w) / 2.0,
        (-3.0 * s - s3 - w) / 2.0,
    ];
    Sequence::new(elements, FamilyId::He6, s)
}
