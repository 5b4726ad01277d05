//! Sequence algebra: Kronecker and outer products, offsets, scaling and
//! integer quantization.

use crate::scalar::{self, Scalar};
use crate::{Error, FamilyId, Grid, Result, Sequence};

/// Kronecker product: block `i` of the result is `f_i · g`.
pub fn kron(f: &Sequence, g: &Sequence) -> Sequence {
    let elements = f
        .iter()
        .flat_map(|&a| g.iter().map(move |&b| a * b))
        .collect();
    Sequence::new(elements, FamilyId::Kron, f.scale()).expect("product of finite sequences")
}

/// Outer product: the result's shape is `[|f|, g.shape...]` with element
/// `(i, idx) = f_i · g_idx`.
pub fn outer(f: &Sequence, g: &Grid) -> Grid {
    let mut shape = vec![f.len()];
    shape.extend_from_slice(g.shape());
    let data = f
        .iter()
        .flat_map(|&a| g.data().iter().map(move |&b| a * b))
        .collect();
    Grid::new(shape, data).expect("product of finite arrays")
}

/// `f ⊗ f ⊗ … ⊗ f` as a `dim`-dimensional grid.
pub fn outer_power(f: &Sequence, dim: usize) -> Result<Grid> {
    if dim == 0 {
        return Err(Error::Argument("dimension must be at least 1".into()));
    }
    let mut grid = Grid::from(f);
    for _ in 1..dim {
        grid = outer(f, &grid);
    }
    Ok(grid)
}

pub fn offset(f: &Sequence, c: Scalar) -> Sequence {
    let elements = f.iter().map(|&z| z + c).collect();
    Sequence::new(elements, FamilyId::Derived, f.scale()).expect("finite offset")
}

pub fn scale(f: &Sequence, c: Scalar) -> Sequence {
    let elements = f.iter().map(|&z| z * c).collect();
    Sequence::new(elements, FamilyId::Derived, f.scale()).expect("finite scaling")
}

/// Rounds every element to the nearest integer, ties away from zero.
pub fn quantize_round(f: &Sequence) -> Result<Sequence> {
    if !f.is_real(crate::DEFAULT_TOL) {
        return Err(Error::Argument("cannot round a complex sequence".into()));
    }
    let elements = f.iter().map(|z| scalar::real(z.re.round())).collect();
    Sequence::new(elements, FamilyId::Quantized, f.scale())
}
