//! Printed sequences kept verbatim: quasi-Huffman examples, Barker variants,
//! the long 4-bit quasi-Huffman, and two complex instances of a family whose
//! general construction lives elsewhere.

use crate::scalar::Scalar;
use crate::{Error, FamilyId, Result, Sequence};

pub struct FixtureInfo {
    pub name: &'static str,
    pub description: &'static str,
}

const H86: [i64; 86] = [
    -1, 0, 1, 0, -1, 0, 2, -1, -1, -2, 1, -2, 1, 2, 4, -2, -1, -2, -1, -5, 2, 4, 6, -5, 1, 0, -3,
    -5, 4, 2, 6, -3, -1, 5, -4, 1, 3, -4, 2, 5, -5, 6, 6, 4, -3, 0, 2, -2, 3, 1, 0, 4, 4, 1, 5, 3,
    6, -3, -2, -3, -2, 2, -6, -2, -6, 2, 2, 1, 0, -4, 3, 1, 3, 0, -2, 1, 0, 3, -1, 0, -1, 0, 1, -1,
    1, -1,
];

const H35_KRON: [i64; 35] = [
    1, 2, 2, 0, -2, 2, -1, 2, 4, 4, 0, -4, 4, -2, 2, 4, 4, 0, -4, 4, -2, -2, -4, -4, 0, 4, -4, 2,
    1, 2, 2, 0, -2, 2, -1,
];

const INTEGER_FIXTURES: &[(&str, &str, &[i64])] = &[
    ("quasi9", "length-9 quasi-Huffman, off-peak correlations ≤ 1", &[1, 1, -1, -3, -1, 1, -2, 1, -1]),
    ("b13", "classic binary Barker-13", &[1, 1, 1, 1, 1, -1, -1, 1, 1, -1, 1, -1, 1]),
    (
        "b13_printed",
        "Barker-13 as printed alongside the centre-term variant (not itself a Barker sequence)",
        &[1, 1, 1, 1, 1, -1, -1, 1, 1, -1, -1, 1, -1],
    ),
    ("b13var", "Barker-13 with its centre term changed from −1 to −2", &[1, 1, 1, 1, 1, -1, -2, 1, 1, -1, 1, -1, 1]),
    (
        "ternary_barker17",
        "ternary Barker sequence, merit factor 50/7",
        &[1, 1, 1, 0, -1, 0, 0, 0, 1, -1, 0, 1, -1, 0, 0, 1, -1],
    ),
    (
        "h17l_rounded",
        "elementwise rounding of the matched-end length-17 sequence",
        &[1, 2, 2, 1, -1, -1, 0, 1, 0, -1, 0, 1, -1, -1, 2, -2, 1],
    ),
    ("h5", "canonical length-5 sequence at unit scale", &[1, 2, 2, -2, 1]),
    ("h7", "Fibonacci canonical sequence, N = 7, s = 1", &[1, 2, 2, 0, -2, 2, -1]),
    ("hf11", "Fibonacci canonical sequence, N = 11, s = 1", &[1, 2, 2, 4, 6, -1, -6, 4, -2, 2, -1]),
    ("h11", "length-11 Fibonacci twin at s = 1", &[1, 1, 3, 4, 2, 6, -7, -1, 2, 1, -1]),
    ("h9plus", "cosine family, N = 9, s = 1", &[1, 2, 2, 4, -1, -4, 2, -2, 1]),
    ("h35_kron", "Kronecker product of h5 and h7", &H35_KRON),
    ("h86", "4-bit quasi-Huffman of length 86", &H86),
    ("quasi6", "even-length quasi-Huffman", &[1, 2, 1, -2, 1, -1]),
    ("quasi8a", "even-length quasi-Huffman", &[1, 3, 4, 0, -3, 3, -2, 1]),
    ("quasi8b", "even-length quasi-Huffman with asymmetric end magnitudes", &[1, -1, 0, 3, -6, 5, 5, 4]),
    (
        "hp10_half_printed",
        "half of the perfect Fibonacci array N = 11, s = 1, as printed (leading 0; fails the perfect test)",
        &[0, -3, 2, -1, 1, 0, 1, 1, 2, 3],
    ),
];

const COMPLEX_FIXTURES: &[(&str, &str)] = &[
    ("hint7_i", "integer-family H_int^7 at s = i, halved"),
    (
        "hint7_unit",
        "integer-family H_int^7 at s = e^{5πi/6}, all unit modulus",
    ),
    ("htan7_3", "tangent family, N = 7, s = 3, as printed"),
    (
        "h17l",
        "matched-end length-17 sequence (same as the h17l generator)",
    ),
];

/// Every registered fixture, in registry order.
pub fn fixture_catalogue() -> Vec<FixtureInfo> {
    INTEGER_FIXTURES
        .iter()
        .map(|(name, description, _)| FixtureInfo { name, description })
        .chain(
            COMPLEX_FIXTURES
                .iter()
                .map(|(name, description)| FixtureInfo { name, description }),
        )
        .collect()
}

pub fn fixture_names() -> Vec<&'static str> {
    fixture_catalogue().into_iter().map(|f| f.name).collect()
}

/// Looks up a printed sequence by name.
pub fn fixture(name: &str) -> Result<Sequence> {
    let family = FamilyId::Fixture(name.to_string());
    let one = Scalar::new(1.0, 0.0);
    if let Some((_, _, values)) = INTEGER_FIXTURES.iter().find(|(n, _, _)| *n == name) {
        return Ok(Sequence::from_ints(values)?.with_family(family));
    }
    let c = Scalar::new;
    let r3 = 3f64.sqrt();
    let elements = match name {
        "hint7_i" => vec![
            c(0.0, 0.5),
            c(-1.0, 0.0),
            c(0.0, -1.0),
            c(1.0, 0.0),
            c(0.0, 1.0),
            c(-1.0, 0.0),
            c(0.0, -0.5),
        ],
        "hint7_unit" => [
            c(-r3, 1.0),
            c(-1.0, -r3),
            c(r3, 1.0),
            c(-2.0, 0.0),
            c(r3, -1.0),
            c(-1.0, r3),
            c(-r3, -1.0),
        ]
        .iter()
        .map(|z| z / 2.0)
        .collect(),
        "htan7_3" => [
            3.0,
            8.0,
            24.0,
            -80.0 / 9.0,
            8.0 / 27.0,
            8.0 / 9.0,
            -1.0 / 3.0,
        ]
        .iter()
        .map(|&v| c(v, 0.0))
        .collect(),
        "h17l" => return Ok(super::gen_h17_matched().with_family(family)),
        _ => return Err(Error::UnknownFixture(name.to_string())),
    };
    Sequence::new(elements, family, one)
}
