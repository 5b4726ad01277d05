//! Families built directly from Fibonacci polynomials.
//!
//! With `M = (N − 3)/2` the canonical sequence is
//! `2s·[(2s)⁻¹, F_1 … F_M, F_{M+1}/2 − F_M/s, F_{−M} … F_{−1}, −(2s)⁻¹]`.
//! Elements are formed after distributing the `2s` factor, so integer `s`
//! yields exact integers in floating point as well.

use crate::fibonacci::{fib_poly, fib_poly_exact};
use crate::scalar::{self, Scalar};
use crate::{Error, FamilyId, Result, Sequence};

use super::require_nonzero;

fn half_length(n: usize, residue: usize, family: &str) -> Result<i64> {
    let min = if residue == 3 { 7 } else { 5 };
    if n < min || n % 4 != residue {
        return Err(Error::Argument(format!(
            "{family} requires N ≡ {residue} (mod 4) and N ≥ {min}, got {n}"
        )));
    }
    Ok(((n - 3) / 2) as i64)
}

/// `2s·F_M(s)` style helpers shared by the variants below.
struct Terms {
    s: Scalar,
    m: i64,
}

impl Terms {
    fn scaled(&self, k: i64) -> Result<Scalar> {
        Ok(self.s * 2.0 * fib_poly(k, self.s)?)
    }

    /// `2s·(F_{M+1}/2 − F_M/s) = s·F_{M+1} − 2F_M`
    fn middle(&self) -> Result<Scalar> {
        Ok(self.s * fib_poly(self.m + 1, self.s)? - fib_poly(self.m, self.s)? * 2.0)
    }
}

/// Canonical Fibonacci-polynomial sequence of length `N ≡ 3 (mod 4)`.
///
/// For integer `s` the elements are taken from the exact integer path.
pub fn gen_fibonacci(n: usize, s: Scalar) -> Result<Sequence> {
    let m = half_length(n, 3, "fib")?;
    require_nonzero("fib", s)?;
    if s.im == 0.0 && s.re.fract() == 0.0 && s.re.abs() < 1e15 {
        if let Ok(exact) = gen_fibonacci_exact(n, s.re as i64) {
            let elements = exact.iter().map(|&v| scalar::real(v as f64)).collect();
            return Sequence::new(elements, FamilyId::Fib, s);
        }
    }
    let t = Terms { s, m };
    let mut elements = Vec::with_capacity(n);
    elements.push(scalar::real(1.0));
    for k in 1..=m {
        elements.push(t.scaled(k)?);
    }
    elements.push(t.middle()?);
    for k in (1..=m).rev() {
        elements.push(t.scaled(-k)?);
    }
    elements.push(scalar::real(-1.0));
    Sequence::new(elements, FamilyId::Fib, s)
}

/// Exact integer elements of [`gen_fibonacci`] for integer `s`.
pub fn gen_fibonacci_exact(n: usize, s: i64) -> Result<Vec<i128>> {
    let m = half_length(n, 3, "fib")?;
    if s == 0 {
        return Err(Error::Argument("fib requires s ≠ 0".into()));
    }
    let overflow = || Error::Range(format!("fib({n}, {s}) overflows 128-bit integers"));
    let scaled = |k: i64| -> Result<i128> {
        fib_poly_exact(k, s)?
            .checked_mul(2 * s as i128)
            .ok_or_else(overflow)
    };
    let mut out = Vec::with_capacity(n);
    out.push(1);
    for k in 1..=m {
        out.push(scaled(k)?);
    }
    let lead = (s as i128).checked_mul(fib_poly_exact(m + 1, s)?);
    let twice = fib_poly_exact(m, s)?.checked_mul(2);
    let middle = lead
        .zip(twice)
        .and_then(|(a, b)| a.checked_sub(b))
        .ok_or_else(overflow)?;
    out.push(middle);
    for k in (1..=m).rev() {
        out.push(scaled(-k)?);
    }
    out.push(-1);
    Ok(out)
}

/// Cosine family of length `N ≡ 1 (mod 4)`: half the signs of the Fibonacci
/// construction flipped so both ends are `+1`.
///
/// `2s·[(2s)⁻¹, F_1 … F_M, F_{M+1}/2 − F_M/s, −F_{−M} … −F_{−1}, (2s)⁻¹]`.
pub fn gen_h_plus(n: usize, s: Scalar) -> Result<Sequence> {
    let m = half_length(n, 1, "hplus")?;
    require_nonzero("hplus", s)?;
    let t = Terms { s, m };
    let mut elements = Vec::with_capacity(n);
    elements.push(scalar::real(1.0));
    for k in 1..=m {
        elements.push(t.scaled(k)?);
    }
    elements.push(t.middle()?);
    for k in (1..=m).rev() {
        elements.push(-t.scaled(-k)?);
    }
    elements.push(scalar::real(1.0));
    Sequence::new(elements, FamilyId::HPlus, s)
}

/// Perfect periodic array of length `N − 1`:
/// `2s·[X(s), F_{−M} … F_M]` with `X(s) = F_{M+1}/2 − F_M/s`.
pub fn gen_perfect_fib(n: usize, s: Scalar) -> Result<Sequence> {
    let m = half_length(n, 3, "perfect-fib")?;
    require_nonzero("perfect-fib", s)?;
    let t = Terms { s, m };
    let mut elements = Vec::with_capacity(n - 1);
    elements.push(t.middle()?);
    for k in -m..=m {
        elements.push(t.scaled(k)?);
    }
    Sequence::new(elements, FamilyId::PerfectFib, s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::real;

    fn ints(seq: &Sequence) -> Vec<i64> {
        seq.to_integers(1e-12).expect("integer sequence")
    }

    #[test]
    fn printed_fibonacci_examples() {
        assert_eq!(
            ints(&gen_fibonacci(7, real(1.0)).unwrap()),
            vec![1, 2, 2, 0, -2, 2, -1]
        );
        assert_eq!(
            ints(&gen_fibonacci(11, real(1.0)).unwrap()),
            vec![1, 2, 2, 4, 6, -1, -6, 4, -2, 2, -1]
        );
    }

    #[test]
    fn length_19_extremes() {
        let h = ints(&gen_fibonacci(19, real(1.0)).unwrap());
        assert_eq!(*h.iter().min().unwrap(), -42);
        assert_eq!(h.iter().map(|v| v.abs()).sum::<i64>(), 226);
    }

    #[test]
    fn float_path_agrees_with_exact_path() {
        for s in [0.5, -1.5, 2.25] {
            let exact_like = gen_fibonacci(15, real(s)).unwrap();
            assert_eq!(exact_like.len(), 15);
            assert_eq!(exact_like[0], real(1.0));
        }
        let via_int = gen_fibonacci(15, real(3.0)).unwrap();
        let exact = gen_fibonacci_exact(15, 3).unwrap();
        for (a, b) in via_int.iter().zip(&exact) {
            assert_eq!(a.re, *b as f64);
        }
    }

    #[test]
    fn rejects_bad_arguments() {
        assert!(matches!(
            gen_fibonacci(9, real(1.0)),
            Err(Error::Argument(_))
        ));
        assert!(matches!(
            gen_fibonacci(3, real(1.0)),
            Err(Error::Argument(_))
        ));
        assert!(matches!(
            gen_fibonacci(7, real(0.0)),
            Err(Error::Argument(_))
        ));
        assert!(matches!(gen_h_plus(7, real(1.0)), Err(Error::Argument(_))));
        assert!(matches!(
            gen_perfect_fib(9, real(1.0)),
            Err(Error::Argument(_))
        ));
    }

    #[test]
    fn h_plus_printed_example() {
        assert_eq!(
            ints(&gen_h_plus(9, real(1.0)).unwrap()),
            vec![1, 2, 2, 4, -1, -4, 2, -2, 1]
        );
    }

    #[test]
    fn perfect_fib_formula_value() {
        let p = gen_perfect_fib(11, real(1.0)).unwrap();
        assert_eq!(ints(&p), vec![-1, -6, 4, -2, 2, 0, 2, 2, 4, 6]);
        // centre element 2s·F_0
        assert_eq!(p[1 + 4], real(0.0));
    }
}
