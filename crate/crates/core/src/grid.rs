use crate::scalar::{self, Scalar};
use crate::{Error, Result, Sequence};

/// Dense n-dimensional array stored in row-major order.
#[derive(Debug, Clone, PartialEq)]
pub struct Grid {
    shape: Vec<usize>,
    data: Vec<Scalar>,
}

impl Grid {
    pub fn new(shape: Vec<usize>, data: Vec<Scalar>) -> Result<Self> {
        if shape.is_empty() || shape.contains(&0) {
            return Err(Error::Shape(format!(
                "shape {shape:?} must be non-empty and positive"
            )));
        }
        let count: usize = shape.iter().product();
        if count != data.len() {
            return Err(Error::Shape(format!(
                "shape {shape:?} needs {count} elements, got {}",
                data.len()
            )));
        }
        if data.iter().any(|z| !scalar::is_finite(*z)) {
            return Err(Error::Domain("grid contains a non-finite element".into()));
        }
        Ok(Grid { shape, data })
    }

    pub fn zeros(shape: &[usize]) -> Result<Self> {
        let count = shape.iter().product();
        Grid::new(shape.to_vec(), vec![Scalar::new(0.0, 0.0); count])
    }

    pub fn from_reals(shape: &[usize], values: &[f64]) -> Result<Self> {
        Grid::new(
            shape.to_vec(),
            values.iter().map(|&v| scalar::real(v)).collect(),
        )
    }

    pub fn shape(&self) -> &[usize] {
        &self.shape
    }

    pub fn rank(&self) -> usize {
        self.shape.len()
    }

    pub fn len(&self) -> usize {
        self.data.len()
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    pub fn data(&self) -> &[Scalar] {
        &self.data
    }

    pub fn get(&self, index: &[usize]) -> Option<Scalar> {
        self.offset_of(index).map(|o| self.data[o])
    }

    fn offset_of(&self, index: &[usize]) -> Option<usize> {
        if index.len() != self.rank() {
            return None;
        }
        let mut offset = 0;
        for (&i, &n) in index.iter().zip(&self.shape) {
            if i >= n {
                return None;
            }
            offset = offset * n + i;
        }
        Some(offset)
    }

    /// Multi-index of a flat row-major offset.
    pub fn unravel(&self, flat: usize) -> Vec<usize> {
        unravel(flat, &self.shape)
    }

    /// Same data with `rank − self.rank()` unit axes prepended.
    pub fn promote(&self, rank: usize) -> Result<Grid> {
        if rank < self.rank() {
            return Err(Error::Shape(format!(
                "cannot promote rank-{} grid to rank {rank}",
                self.rank()
            )));
        }
        let mut shape = vec![1; rank - self.rank()];
        shape.extend_from_slice(&self.shape);
        Ok(Grid {
            shape,
            data: self.data.clone(),
        })
    }

    pub fn map(&self, f: impl Fn(Scalar) -> Scalar) -> Grid {
        Grid {
            shape: self.shape.clone(),
            data: self.data.iter().map(|&z| f(z)).collect(),
        }
    }

    /// Elementwise combination of two grids of identical shape.
    pub fn zip_with(&self, other: &Grid, f: impl Fn(Scalar, Scalar) -> Scalar) -> Result<Grid> {
        if self.shape != other.shape {
            return Err(Error::Shape(format!(
                "{:?} vs {:?}",
                self.shape, other.shape
            )));
        }
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| f(a, b))
            .collect();
        Ok(Grid {
            shape: self.shape.clone(),
            data,
        })
    }

    pub fn is_real(&self, tol: f64) -> bool {
        self.data.iter().all(|z| scalar::is_real(*z, tol))
    }

    pub fn min_re(&self) -> f64 {
        self.data.iter().map(|z| z.re).fold(f64::INFINITY, f64::min)
    }

    pub fn max_re(&self) -> f64 {
        self.data
            .iter()
            .map(|z| z.re)
            .fold(f64::NEG_INFINITY, f64::max)
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn sum(&self) -> Scalar {
        self.data.iter().sum()
    }

    pub fn count_nonzero(&self, tol: f64) -> usize {
        self.data.iter().filter(|z| z.norm() > tol).count()
    }

    /// Full linear (aperiodic) convolution; output extent `a + b − 1` per axis.
    pub fn convolve(&self, kernel: &Grid) -> Result<Grid> {
        self.combine(kernel, false, Combine::Convolve)
    }

    /// Full aperiodic cross-correlation `Σ_i c(self_i) · other_{i+lag}`.
    ///
    /// Output index `o` along each axis holds lag `o − (self_extent − 1)`, so
    /// the zero lag sits at `self_extent − 1`. `c` conjugates iff `conjugate`.
    pub fn correlate(&self, other: &Grid, conjugate: bool) -> Result<Grid> {
        self.combine(other, conjugate, Combine::Correlate)
    }

    fn combine(&self, other: &Grid, conjugate: bool, mode: Combine) -> Result<Grid> {
        if self.rank() != other.rank() {
            return Err(Error::Shape(format!(
                "rank {} vs rank {}",
                self.rank(),
                other.rank()
            )));
        }
        let out_shape: Vec<usize> = self
            .shape
            .iter()
            .zip(&other.shape)
            .map(|(a, b)| a + b - 1)
            .collect();
        let mut out = Grid::zeros(&out_shape)?;
        let rank = self.rank();
        let mut target = vec![0usize; rank];
        for (fi, &fv) in self.data.iter().enumerate() {
            if fv == Scalar::new(0.0, 0.0) {
                continue;
            }
            let fidx = self.unravel(fi);
            let fv = if conjugate { fv.conj() } else { fv };
            for (gi, &gv) in other.data.iter().enumerate() {
                let gidx = unravel(gi, &other.shape);
                for a in 0..rank {
                    target[a] = match mode {
                        Combine::Convolve => fidx[a] + gidx[a],
                        // lag = g − f, stored at lag + (f_extent − 1)
                        Combine::Correlate => gidx[a] + self.shape[a] - 1 - fidx[a],
                    };
                }
                let o = out.offset_of(&target).expect("index within output extent");
                out.data[o] += fv * gv;
            }
        }
        Ok(out)
    }

    /// Elementwise comparison with [`scalar::approx_eq`].
    pub fn approx_eq(&self, other: &Grid, tol: f64) -> bool {
        self.shape == other.shape
            && self
                .data
                .iter()
                .zip(&other.data)
                .all(|(a, b)| scalar::approx_eq(*a, *b, tol))
    }
}

#[derive(Clone, Copy)]
enum Combine {
    Convolve,
    Correlate,
}

pub(crate) fn unravel(mut flat: usize, shape: &[usize]) -> Vec<usize> {
    let mut idx = vec![0; shape.len()];
    for a in (0..shape.len()).rev() {
        idx[a] = flat % shape[a];
        flat /= shape[a];
    }
    idx
}

impl From<&Sequence> for Grid {
    fn from(seq: &Sequence) -> Grid {
        Grid {
            shape: vec![seq.len()],
            data: seq.elements().to_vec(),
        }
    }
}
