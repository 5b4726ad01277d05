//! Fibonacci polynomials `F_n(s)`.
//!
//! `F_0 = 0`, `F_1 = 1`, `F_{n+1} = s·F_n + F_{n−1}`, extended to negative
//! indices by `F_{−n} = (−1)^{n+1} F_n`. At `s = 1` these are the Fibonacci
//! numbers.

use crate::scalar::Scalar;
use crate::{Error, Result};

/// Largest supported `|n|`.
pub const INDEX_LIMIT: i64 = 64;

fn check_index(n: i64) -> Result<()> {
    if n.abs() > INDEX_LIMIT {
        return Err(Error::Range(format!(
            "Fibonacci index {n} exceeds |n| <= {INDEX_LIMIT}"
        )));
    }
    Ok(())
}

fn negative_index_sign(n: u32) -> i32 {
    // (−1)^{n+1}
    if n % 2 == 1 {
        1
    } else {
        -1
    }
}

/// Evaluates `F_n(s)` in complex floating point.
pub fn fib_poly(n: i64, s: Scalar) -> Result<Scalar> {
    check_index(n)?;
    let m = n.unsigned_abs() as u32;
    let (mut prev, mut cur) = (Scalar::new(0.0, 0.0), Scalar::new(1.0, 0.0));
    if m == 0 {
        return Ok(prev);
    }
    for _ in 1..m {
        let next = s * cur + prev;
        prev = cur;
        cur = next;
    }
    Ok(if n < 0 {
        cur * f64::from(negative_index_sign(m))
    } else {
        cur
    })
}

/// Evaluates `F_n(s)` exactly for integer `s`, failing on overflow.
pub fn fib_poly_exact(n: i64, s: i64) -> Result<i128> {
    check_index(n)?;
    let m = n.unsigned_abs() as u32;
    if m == 0 {
        return Ok(0);
    }
    let overflow = || Error::Range(format!("F_{n}({s}) overflows 128-bit integers"));
    let (mut prev, mut cur) = (0i128, 1i128);
    for _ in 1..m {
        let next = (s as i128)
            .checked_mul(cur)
            .and_then(|v| v.checked_add(prev))
            .ok_or_else(overflow)?;
        prev = cur;
        cur = next;
    }
    Ok(if n < 0 {
        cur * negative_index_sign(m) as i128
    } else {
        cur
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::real;
    use proptest::prelude::*;

    #[test]
    fn base_cases_and_examples() {
        assert_eq!(fib_poly(0, real(3.7)).unwrap(), real(0.0));
        assert_eq!(fib_poly(1, real(3.7)).unwrap(), real(1.0));
        assert_eq!(fib_poly(2, real(3.7)).unwrap(), real(3.7));
        assert_eq!(fib_poly(5, real(1.0)).unwrap(), real(5.0));
        assert_eq!(fib_poly(-4, real(1.0)).unwrap(), real(-3.0));
        assert_eq!(fib_poly_exact(-4, 1).unwrap(), -3);
        assert_eq!(fib_poly_exact(10, 1).unwrap(), 55);
        // F_4(s) = s^3 + 2s
        assert_eq!(fib_poly_exact(4, 3).unwrap(), 27 + 6);
    }

    #[test]
    fn index_guard() {
        assert!(matches!(fib_poly(65, real(1.0)), Err(Error::Range(_))));
        assert!(matches!(fib_poly_exact(-65, 1), Err(Error::Range(_))));
        assert!(fib_poly_exact(64, 1).is_ok());
        assert!(matches!(
            fib_poly_exact(64, 1_000_000),
            Err(Error::Range(_))
        ));
    }

    proptest! {
        #[test]
        fn recursion_holds_for_all_indices(n in -60i64..60, s in -3i64..=3) {
            let a = fib_poly_exact(n + 1, s).unwrap();
            let b = fib_poly_exact(n, s).unwrap();
            let c = fib_poly_exact(n - 1, s).unwrap();
            prop_assert_eq!(a, s as i128 * b + c);
        }

        #[test]
        fn float_path_matches_exact_path(n in -40i64..40, s in -2i64..=2) {
            let exact = fib_poly_exact(n, s).unwrap() as f64;
            let float = fib_poly(n, real(s as f64)).unwrap();
            prop_assert_eq!(float.re, exact);
            prop_assert_eq!(float.im, 0.0);
        }
    }
}
