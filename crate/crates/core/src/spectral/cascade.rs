use crate::error::{Error, Result};
use crate::filters::FilterPair;
use crate::scalar::{idx, Real};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WaveformKind {
    Scaling,
    Wavelet,
}

/// Waveform approximation on the dyadic grid `t = n / 2^iterations`.
#[derive(Clone, Debug, PartialEq)]
pub struct CascadeWaveform<T> {
    pub kind: WaveformKind,
    pub iterations: usize,
    pub samples: Vec<T>,
}

impl<T: Real> CascadeWaveform<T> {
    pub fn time(&self, n: usize) -> T {
        idx::<T>(n) / idx(1usize << self.iterations)
    }
}

/// `x ∗ (↑stride taps)`.
fn convolve_strided<T: Real>(x: &[T], taps: &[T], stride: usize) -> Vec<T> {
    let len = x.len() + stride * (taps.len() - 1);
    let mut out = vec![T::zero(); len];
    for (i, &a) in x.iter().enumerate() {
        for (k, &t) in taps.iter().enumerate() {
            out[i + stride * k] += a * t;
        }
    }
    out
}

/// Cascade approximation on the grid `t = n / 2^i`:
/// `φ_i = φ_{i−1} ∗ (↑2^{i−1} √2·h)` from `φ_0 = [1]`, and
/// `ψ_i = φ_{i−1} ∗ (↑2^{i−1} √2·g)`, since `ψ(t) = Σ √2 g_k φ(2t − k)`.
/// Output length is `(2^i − 1)·ν + 1`.
pub fn cascade<T: Real>(
    pair: &FilterPair<T>,
    kind: WaveformKind,
    iterations: usize,
) -> Result<CascadeWaveform<T>> {
    if !(1..=12).contains(&iterations) {
        return Err(Error::CascadeIterations(iterations));
    }
    let lo: Vec<T> = pair.scaling().iter().map(|&h| h * T::SQRT_2()).collect();
    let hi: Vec<T> = pair.wavelet().iter().map(|&g| g * T::SQRT_2()).collect();
    let last = match kind {
        WaveformKind::Scaling => &lo,
        WaveformKind::Wavelet => &hi,
    };
    let mut phi = vec![T::one()];
    for j in 0..iterations - 1 {
        phi = convolve_strided(&phi, &lo, 1 << j);
    }
    let samples = convolve_strided(&phi, last, 1 << (iterations - 1));
    Ok(CascadeWaveform {
        kind,
        iterations,
        samples,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::filters::GegenbauerParams;

    #[test]
    fn haar_is_a_box() {
        let w = cascade(&FilterPair::<f64>::haar(), WaveformKind::Scaling, 4).unwrap();
        assert_eq!(w.samples.len(), 16);
        assert!(w.samples.iter().all(|&s| (s - 1.0).abs() < 1e-12));
        let psi = cascade(&FilterPair::<f64>::haar(), WaveformKind::Wavelet, 4).unwrap();
        let (left, right) = psi.samples.split_at(8);
        assert!(left.iter().all(|&s| (s - 1.0).abs() < 1e-12));
        assert!(right.iter().all(|&s| (s + 1.0).abs() < 1e-12));
    }

    #[test]
    fn length_formula() {
        let p = FilterPair::gegenbauer(GegenbauerParams::new(3, 12.0).unwrap()).unwrap();
        for i in 1..=6 {
            for kind in [WaveformKind::Scaling, WaveformKind::Wavelet] {
                let w = cascade(&p, kind, i).unwrap();
                assert_eq!(w.samples.len(), ((1 << i) - 1) * 3 + 1);
            }
        }
        assert_eq!(
            cascade(&p, WaveformKind::Scaling, 4).unwrap().samples.len(),
            46
        );
    }

    #[test]
    fn iteration_bounds() {
        let p = FilterPair::<f64>::daub4();
        assert!(matches!(
            cascade(&p, WaveformKind::Scaling, 0),
            Err(Error::CascadeIterations(0))
        ));
        assert!(matches!(
            cascade(&p, WaveformKind::Scaling, 13),
            Err(Error::CascadeIterations(13))
        ));
    }
}
