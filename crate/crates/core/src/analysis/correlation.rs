use crate::scalar::Scalar;
use crate::{Error, Grid, Result, Sequence};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProfileKind {
    Aperiodic,
    Periodic,
    /// Conjugate-free aperiodic correlation.
    DualAperiodic,
}

/// A full correlation vector with its summary values.
///
/// Aperiodic profiles hold lags `−(|f|−1) ..= |g|−1` in order, so the zero
/// lag sits at index `|f| − 1`. Periodic profiles hold cyclic shifts
/// `0 .. N`.
#[derive(Debug, Clone, PartialEq)]
pub struct CorrelationProfile {
    pub values: Vec<Scalar>,
    pub kind: ProfileKind,
    /// Value at zero lag.
    pub peak: Scalar,
    /// Values at the most negative and most positive lag (aperiodic only).
    pub end_values: Option<(Scalar, Scalar)>,
    /// Largest magnitude over lags other than zero and the two extremes
    /// (for periodic profiles: over every non-zero shift).
    pub max_interior_offpeak: f64,
    zero_index: usize,
}

impl CorrelationProfile {
    fn aperiodic(values: Vec<Scalar>, zero_index: usize, kind: ProfileKind) -> Self {
        let last = values.len() - 1;
        let max_interior_offpeak = values
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != zero_index && i != 0 && i != last)
            .map(|(_, z)| z.norm())
            .fold(0.0, f64::max);
        CorrelationProfile {
            peak: values[zero_index],
            end_values: Some((values[0], values[last])),
            max_interior_offpeak,
            values,
            kind,
            zero_index,
        }
    }

    /// Value at signed lag `k`, if it lies within the profile.
    pub fn at_lag(&self, k: isize) -> Option<Scalar> {
        match self.kind {
            ProfileKind::Periodic => {
                let n = self.values.len() as isize;
                Some(self.values[k.rem_euclid(n) as usize])
            }
            _ => {
                let i = self.zero_index as isize + k;
                (0..self.values.len() as isize)
                    .contains(&i)
                    .then(|| self.values[i as usize])
            }
        }
    }

    /// `(lag, value)` pairs over the whole profile.
    pub fn lags(&self) -> impl Iterator<Item = (isize, Scalar)> + '_ {
        let zero = self.zero_index as isize;
        self.values
            .iter()
            .enumerate()
            .map(move |(i, &z)| (i as isize - zero, z))
    }

    pub fn zero_index(&self) -> usize {
        self.zero_index
    }

    /// Largest magnitude over every non-zero lag, ends included.
    pub fn max_offpeak(&self) -> f64 {
        self.values
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != self.zero_index)
            .map(|(_, z)| z.norm())
            .fold(0.0, f64::max)
    }
}

/// Aperiodic cross-correlation `r_k = Σ_i c(f_i)·g_{i+k}` over every lag
/// where the sequences overlap; `c` conjugates iff `conjugate`.
pub fn xcorr(f: &Sequence, g: &Sequence, conjugate: bool) -> CorrelationProfile {
    let (nf, ng) = (f.len(), g.len());
    let mut values = vec![Scalar::new(0.0, 0.0); nf + ng - 1];
    for (i, &a) in f.iter().enumerate() {
        let a = if conjugate { a.conj() } else { a };
        for (j, &b) in g.iter().enumerate() {
            // lag j − i stored at j − i + nf − 1
            values[j + nf - 1 - i] += a * b;
        }
    }
    let kind = if conjugate {
        ProfileKind::Aperiodic
    } else {
        ProfileKind::DualAperiodic
    };
    CorrelationProfile::aperiodic(values, nf - 1, kind)
}

pub fn autocorr(f: &Sequence) -> CorrelationProfile {
    xcorr(f, f, true)
}

/// Autocorrelation without conjugation, `f̄ ⋆ f` in the conjugating sense.
pub fn dual_autocorr(f: &Sequence) -> CorrelationProfile {
    xcorr(f, f, false)
}

/// Cyclic autocorrelation `r_k = Σ_i conj(f_i)·f_{(i+k) mod N}`.
pub fn periodic_autocorr(f: &Sequence) -> Result<CorrelationProfile> {
    let n = f.len();
    if n < 2 {
        return Err(Error::Argument(
            "periodic autocorrelation needs at least 2 elements".into(),
        ));
    }
    let h = f.elements();
    let values: Vec<Scalar> = (0..n)
        .map(|k| (0..n).map(|i| h[i].conj() * h[(i + k) % n]).sum())
        .collect();
    let max_interior_offpeak = values[1..].iter().map(|z| z.norm()).fold(0.0, f64::max);
    Ok(CorrelationProfile {
        peak: values[0],
        end_values: None,
        max_interior_offpeak,
        values,
        kind: ProfileKind::Periodic,
        zero_index: 0,
    })
}

/// Full aperiodic n-dimensional autocorrelation; zero lag at the centre.
pub fn nd_autocorr(g: &Grid) -> Grid {
    g.correlate(g, true)
        .expect("a grid always matches its own rank")
}

pub fn nd_dual_autocorr(g: &Grid) -> Grid {
    g.correlate(g, false)
        .expect("a grid always matches its own rank")
}
