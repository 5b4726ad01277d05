//! Families defined for (nearly) every length.

use crate::scalar::{self, Scalar};
use crate::{Error, FamilyId, Result, Sequence};

fn check_arb_scale(family: &str, s: Scalar) -> Result<()> {
    if s.norm() == 0.0 || s == scalar::real(1.0) {
        return Err(Error::Argument(format!("{family} requires s ∉ {{0, 1}}")));
    }
    Ok(())
}

/// `(−1)^k`
fn alternate(k: usize) -> f64 {
    if k.is_multiple_of(2) {
        1.0
    } else {
        -1.0
    }
}

/// Interior element `h_n = (−1)^n · √s^{−(n−1)}` (1-based `n`).
fn arb_interior(root: Scalar, n: usize) -> Scalar {
    root.powi(-(n as i32 - 1)) * alternate(n)
}

/// Arbitrary-length canonical family: `h_1 = 1/(s−1)`,
/// `h_n = (−1)^n s^{−(n−1)/2}` for `1 < n < N`, and
/// `h_N = (−1)^N s^{(3−N)/2}/(s−1)`.
///
/// As `s → 1` the interior alternates between ±1 while the end pair diverges.
pub fn gen_h_arb(n: usize, s: Scalar) -> Result<Sequence> {
    if n < 3 {
        return Err(Error::Argument(format!("harb requires N ≥ 3, got {n}")));
    }
    check_arb_scale("harb", s)?;
    let root = s.sqrt();
    let denom = s - 1.0;
    let mut elements = Vec::with_capacity(n);
    elements.push(denom.inv());
    elements.extend((2..n).map(|k| arb_interior(root, k)));
    elements.push(root.powi(3 - n as i32) * alternate(n) / denom);
    Sequence::new(elements, FamilyId::HArb, s)
}

/// Perfect periodic array of length `N − 1`: the ends of `harb(N, s)` are
/// folded into a single leading element `h_1 + h_N`, followed by the
/// interior `h_2 … h_{N−1}`.
pub fn gen_perfect_arb(n: usize, s: Scalar) -> Result<Sequence> {
    if n < 4 {
        return Err(Error::Argument(format!(
            "perfect-arb requires N ≥ 4, got {n}"
        )));
    }
    check_arb_scale("perfect-arb", s)?;
    let root = s.sqrt();
    let mut elements = Vec::with_capacity(n - 1);
    elements.push((1.0 + root.powi(3 - n as i32) * alternate(n)) / (s - 1.0));
    elements.extend((2..n).map(|k| arb_interior(root, k)));
    Sequence::new(elements, FamilyId::PerfectArb, s)
}

/// Tangent family of odd length `N = 2K + 3`:
/// `[s, (s²−1)s^{0} … (s²−1)s^{K−1}, s^{−K} − s^{K}, (s²−1)s^{−K−1} … (s²−1)s^{−2}, −1/s]`.
pub fn gen_h_tan(n: usize, s: Scalar) -> Result<Sequence> {
    if n < 5 || n.is_multiple_of(2) {
        return Err(Error::Argument(format!("htan requires odd N ≥ 5, got {n}")));
    }
    if s.norm() == 0.0 || s == scalar::real(1.0) || s == scalar::real(-1.0) {
        return Err(Error::Argument("htan requires s ∉ {0, 1, −1}".into()));
    }
    let k = ((n - 3) / 2) as i32;
    let lift = s * s - 1.0;
    let mut elements = Vec::with_capacity(n);
    elements.push(s);
    elements.extend((1..=k).map(|j| lift * s.powi(j - 1)));
    elements.push(s.powi(-k) - s.powi(k));
    elements.extend((1..=k).rev().map(|j| lift * s.powi(-j - 1)));
    elements.push(-s.inv());
    Sequence::new(elements, FamilyId::HTan, s)
}
