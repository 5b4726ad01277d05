//! Generators for every scalable Huffman family, plus a registry of printed
//! sequences that have no generating formula here.
//!
//! | id | length | notes |
//! |----|--------|-------|
//! | `fib` | `N ≡ 3 (mod 4)`, `N ≥ 7` | Fibonacci-polynomial canonical family |
//! | `h9a`, `h9b` | 9 | closed-form radicals |
//! | `h13a`, `h13b` | 13 | closed-form radicals |
//! | `h17` | 17 | scalable, via the radical `T(s)` |
//! | `h17l` | 17 | constant, matched `+1` ends |
//! | `h11` | 11 | Fibonacci twin with identical metrics |
//! | `he4`, `he6` | 4, 6 | even lengths |
//! | `harb` | any `N ≥ 3` | arbitrary length, `s ∉ {0, 1}` |
//! | `htan` | odd `N ≥ 5` | tangent family |
//! | `hplus` | `N ≡ 1 (mod 4)` | cosine family, five non-zero correlation terms |
//! | `perfect-fib` | `N − 1` | perfect periodic Fibonacci array |
//! | `perfect-arb` | `N − 1` | perfect periodic arbitrary-length array |

mod arbitrary;
mod fibonacci;
pub mod fixtures;
mod radical;

use std::fmt;
use std::str::FromStr;

pub use arbitrary::{gen_h_arb, gen_h_tan, gen_perfect_arb};
pub use fibonacci::{gen_fibonacci, gen_fibonacci_exact, gen_h_plus, gen_perfect_fib};
pub use fixtures::fixture;
pub use radical::{
    gen_h11, gen_h13a, gen_h13b, gen_h17, gen_h17_matched, gen_h9a, gen_h9b, gen_he4, gen_he6,
};

use crate::scalar::Scalar;
use crate::{Error, Result, Sequence};

/// Identifies the construction a sequence came from.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FamilyId {
    Fib,
    H9a,
    H9b,
    H13a,
    H13b,
    H17,
    H17Matched,
    H11,
    He4,
    He6,
    HArb,
    HTan,
    HPlus,
    PerfectFib,
    PerfectArb,
    Fixture(String),
    Kron,
    Outer,
    Quantized,
    /// Result of offsetting or rescaling another sequence.
    Derived,
    /// Loaded from user input.
    Custom,
}

const GENERATED: [(FamilyId, &str); 15] = [
    (FamilyId::Fib, "fib"),
    (FamilyId::H9a, "h9a"),
    (FamilyId::H9b, "h9b"),
    (FamilyId::H13a, "h13a"),
    (FamilyId::H13b, "h13b"),
    (FamilyId::H17, "h17"),
    (FamilyId::H17Matched, "h17l"),
    (FamilyId::H11, "h11"),
    (FamilyId::He4, "he4"),
    (FamilyId::He6, "he6"),
    (FamilyId::HArb, "harb"),
    (FamilyId::HTan, "htan"),
    (FamilyId::HPlus, "hplus"),
    (FamilyId::PerfectFib, "perfect-fib"),
    (FamilyId::PerfectArb, "perfect-arb"),
];

impl FamilyId {
    /// Every family with a generator, in catalogue order.
    pub fn generated() -> impl Iterator<Item = FamilyId> {
        GENERATED.iter().map(|(id, _)| id.clone())
    }

    /// The fixed length of single-length families.
    pub fn fixed_length(&self) -> Option<usize> {
        match self {
            FamilyId::H9a | FamilyId::H9b => Some(9),
            FamilyId::H13a | FamilyId::H13b => Some(13),
            FamilyId::H17 | FamilyId::H17Matched => Some(17),
            FamilyId::H11 => Some(11),
            FamilyId::He4 => Some(4),
            FamilyId::He6 => Some(6),
            _ => None,
        }
    }

    /// Human-readable admissible lengths.
    pub fn length_rule(&self) -> &'static str {
        match self {
            FamilyId::Fib => "N ≡ 3 (mod 4), N ≥ 7",
            FamilyId::HArb => "N ≥ 3",
            FamilyId::HTan => "odd N ≥ 5",
            FamilyId::HPlus => "N ≡ 1 (mod 4), N ≥ 5",
            FamilyId::PerfectFib => "N ≡ 3 (mod 4), N ≥ 7 (output length N − 1)",
            FamilyId::PerfectArb => "N ≥ 4 (output length N − 1)",
            FamilyId::H9a | FamilyId::H9b => "9",
            FamilyId::H13a | FamilyId::H13b => "13",
            FamilyId::H17 | FamilyId::H17Matched => "17",
            FamilyId::H11 => "11",
            FamilyId::He4 => "4",
            FamilyId::He6 => "6",
            _ => "fixed by input",
        }
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some((_, name)) = GENERATED.iter().find(|(id, _)| id == self) {
            return f.write_str(name);
        }
        match self {
            FamilyId::Fixture(name) => write!(f, "fixture:{name}"),
            FamilyId::Kron => f.write_str("kron"),
            FamilyId::Outer => f.write_str("outer"),
            FamilyId::Quantized => f.write_str("quantized"),
            FamilyId::Derived => f.write_str("derived"),
            _ => f.write_str("custom"),
        }
    }
}

impl FromStr for FamilyId {
    type Err = Error;

    fn from_str(text: &str) -> Result<FamilyId> {
        let text = text.trim();
        if let Some((id, _)) = GENERATED.iter().find(|(_, name)| *name == text) {
            return Ok(id.clone());
        }
        if let Some(name) = text.strip_prefix("fixture:") {
            return Ok(FamilyId::Fixture(name.to_string()));
        }
        match text {
            "kron" => Ok(FamilyId::Kron),
            "outer" => Ok(FamilyId::Outer),
            "quantized" => Ok(FamilyId::Quantized),
            "derived" => Ok(FamilyId::Derived),
            "custom" => Ok(FamilyId::Custom),
            // accepted aliases
            "h17_matched" | "h17-matched" => Ok(FamilyId::H17Matched),
            "perfect_fib" => Ok(FamilyId::PerfectFib),
            "perfect_arb" => Ok(FamilyId::PerfectArb),
            "h_arb" => Ok(FamilyId::HArb),
            "h_tan" => Ok(FamilyId::HTan),
            "h_plus" => Ok(FamilyId::HPlus),
            _ => Err(Error::Argument(format!("unknown family `{text}`"))),
        }
    }
}

/// A fully parameterized request for one sequence.
#[derive(Debug, Clone, PartialEq)]
pub struct FamilySpec {
    pub family: FamilyId,
    /// Required for variable-length families; must agree with the fixed
    /// length otherwise.
    pub length: Option<usize>,
    pub s: Scalar,
}

impl FamilySpec {
    pub fn new(family: FamilyId, length: Option<usize>, s: Scalar) -> Self {
        FamilySpec { family, length, s }
    }
}

/// Builds the sequence described by `spec`.
pub fn generate(spec: &FamilySpec) -> Result<Sequence> {
    let s = spec.s;
    if let Some(fixed) = spec.family.fixed_length() {
        if let Some(n) = spec.length {
            if n != fixed {
                return Err(Error::Argument(format!(
                    "{} has fixed length {fixed}, got N = {n}",
                    spec.family
                )));
            }
        }
    }
    let need_length = || {
        spec.length
            .ok_or_else(|| Error::Argument(format!("{} requires a length N", spec.family)))
    };
    match &spec.family {
        FamilyId::Fib => gen_fibonacci(need_length()?, s),
        FamilyId::H9a => gen_h9a(s),
        FamilyId::H9b => gen_h9b(s),
        FamilyId::H13a => gen_h13a(s),
        FamilyId::H13b => gen_h13b(s),
        FamilyId::H17 => gen_h17(s),
        FamilyId::H17Matched => Ok(gen_h17_matched()),
        FamilyId::H11 => gen_h11(s),
        FamilyId::He4 => gen_he4(s),
        FamilyId::He6 => gen_he6(s),
        FamilyId::HArb => gen_h_arb(need_length()?, s),
        FamilyId::HTan => gen_h_tan(need_length()?, s),
        FamilyId::HPlus => gen_h_plus(need_length()?, s),
        FamilyId::PerfectFib => gen_perfect_fib(need_length()?, s),
        FamilyId::PerfectArb => gen_perfect_arb(need_length()?, s),
        FamilyId::Fixture(name) => fixture(name),
        other => Err(Error::Argument(format!("{other} is not a generator"))),
    }
}

pub(crate) fn require_nonzero(family: &str, s: Scalar) -> Result<()> {
    if s.norm() == 0.0 {
        return Err(Error::Argument(format!("{family} requires s ≠ 0")));
    }
    Ok(())
}
