use num_rational::Ratio;

use super::correlation::{autocorr, dual_autocorr};
use crate::dft::{dft, dft_slice};
use crate::scalar::Scalar;
use crate::{Error, Result, Sequence};

fn check_nondegenerate(f: &Sequence) -> Result<()> {
    if f.len() < 2 {
        return Err(Error::Argument("length-1 sequences are degenerate".into()));
    }
    if f.energy() == 0.0 {
        return Err(Error::Argument("all-zero sequence".into()));
    }
    Ok(())
}

/// Golay merit factor `E² / (2·Σ_{k>0} |r_k|²)` with `E = Σ|f_i|²`.
///
/// Returns `+∞` when every off-peak lag vanishes.
pub fn merit_factor(f: &Sequence) -> Result<f64> {
    check_nondegenerate(f)?;
    let profile = autocorr(f);
    let energy = profile.peak.re;
    let sidelobes: f64 = profile
        .lags()
        .filter(|&(k, _)| k > 0)
        .map(|(_, z)| z.norm_sqr())
        .sum();
    if sidelobes == 0.0 {
        return Ok(f64::INFINITY);
    }
    Ok(energy * energy / (2.0 * sidelobes))
}

/// Exact merit factor of an integer sequence.
pub fn merit_factor_exact(values: &[i64]) -> Result<Ratio<i128>> {
    if values.len() < 2 {
        return Err(Error::Argument("length-1 sequences are degenerate".into()));
    }
    let v: Vec<i128> = values.iter().map(|&x| x as i128).collect();
    let energy: i128 = v.iter().map(|x| x * x).sum();
    if energy == 0 {
        return Err(Error::Argument("all-zero sequence".into()));
    }
    let sidelobes: i128 = (1..v.len())
        .map(|k| {
            let r: i128 = (0..v.len() - k).map(|i| v[i] * v[i + k]).sum();
            r * r
        })
        .sum();
    if sidelobes == 0 {
        return Err(Error::Argument(
            "no off-peak correlation: merit factor is infinite".into(),
        ));
    }
    Ok(Ratio::new(energy * energy, 2 * sidelobes))
}

/// Peak over the largest off-peak magnitude.
pub fn peak_sidelobe_ratio(f: &Sequence) -> Result<f64> {
    check_nondegenerate(f)?;
    let profile = autocorr(f);
    Ok(profile.peak.norm() / profile.max_offpeak())
}

/// `min / max` of `|DFT|` on the `(2N−1)`-padded spectrum; 1 is perfectly flat.
pub fn spectral_flatness(f: &Sequence) -> Result<f64> {
    let spectrum = dft(f, 2 * f.len() - 1)?;
    let mags = spectrum.iter().map(|z| z.norm());
    let (lo, hi) = mags.fold((f64::INFINITY, 0.0f64), |(lo, hi), m| {
        (lo.min(m), hi.max(m))
    });
    if hi == 0.0 {
        return Err(Error::Argument("all-zero sequence".into()));
    }
    Ok(lo / hi)
}

/// `DFT(f) · DFT(reverse f)` on the `(2N−1)`-padded grid: the spectrum of the
/// conjugate-free autocorrelation.
pub fn dual_cross_spectrum(f: &Sequence) -> Result<Vec<Scalar>> {
    let len = 2 * f.len() - 1;
    let a = dft(f, len)?;
    let b = dft(&f.reversed(), len)?;
    Ok(a.iter().zip(&b).map(|(x, y)| x * y).collect())
}

/// Spectrum of the conjugate-free autocorrelation laid out from lag −(N−1).
#[allow(dead_code)]
pub(crate) fn dual_profile_spectrum(f: &Sequence) -> Result<Vec<Scalar>> {
    let profile = dual_autocorr(f);
    dft_slice(&profile.values, profile.values.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::approx_eq;

    fn ints(v: &[i64]) -> Sequence {
        Sequence::from_ints(v).unwrap()
    }

    #[test]
    fn barker_thirteen() {
        let b13 = [1, 1, 1, 1, 1, -1, -1, 1, 1, -1, 1, -1, 1];
        assert_eq!(merit_factor_exact(&b13).unwrap(), Ratio::new(169, 12));
        assert!((merit_factor(&ints(&b13)).unwrap() - 169.0 / 12.0).abs() < 1e-12);
        assert_eq!(peak_sidelobe_ratio(&ints(&b13)).unwrap(), 13.0);
    }

    #[test]
    fn degenerate_inputs() {
        assert!(merit_factor(&ints(&[3])).is_err());
        assert!(merit_factor(&ints(&[0, 0])).is_err());
        assert!(merit_factor_exact(&[0, 0, 0]).is_err());
        assert!(spectral_flatness(&ints(&[0, 0])).is_err());
    }

    #[test]
    fn delta_is_flat() {
        assert_eq!(
            spectral_flatness(&ints(&[1, 0, 0, 0, 0, 0, 0, 0])).unwrap(),
            1.0
        );
    }

    #[test]
    fn cross_spectrum_is_spectrum_of_dual_profile() {
        let f = Sequence::new(
            vec![
                Scalar::new(1.0, 0.5),
                Scalar::new(-2.0, 1.0),
                Scalar::new(0.0, 3.0),
            ],
            crate::FamilyId::Custom,
            Scalar::new(1.0, 0.0),
        )
        .unwrap();
        let x = dual_cross_spectrum(&f).unwrap();
        let y = dual_profile_spectrum(&f).unwrap();
        for (a, b) in x.iter().zip(&y) {
            assert!(approx_eq(*a, *b, 1e-12));
        }
    }
}
