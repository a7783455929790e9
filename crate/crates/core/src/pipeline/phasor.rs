//! One-cycle sliding DFT of the fundamental.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::scalar::{idx, lit, Real};

/// Peak-scaled fundamental phasor of every full window, advancing one sample
/// at a time. Entry `n` covers samples `n .. n + window_length`.
#[derive(Clone, Debug, PartialEq)]
pub struct PhasorSeries<T> {
    pub window_length: usize,
    pub phasors: Vec<Complex<T>>,
}

impl<T: Real> PhasorSeries<T> {
    pub fn len(&self) -> usize {
        self.phasors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.phasors.is_empty()
    }

    pub fn window_index(&self) -> std::ops::Range<usize> {
        0..self.phasors.len()
    }
}

/// `P = (2/W) Σ_{n=0}^{W−1} x[n₀+n] e^{−j2π(n₀+n)/W}`.
///
/// The exponent uses the absolute sample index, so a stationary cosine
/// `A cos(2πn/W + φ)` gives `P = A e^{jφ}` in every window.
pub fn sliding_phasor<T: Real>(x: &[T], window_length: usize) -> Result<PhasorSeries<T>> {
    if window_length == 0 || window_length > x.len() {
        return Err(Error::WindowTooLong {
            window: window_length,
            len: x.len(),
        });
    }
    let w = window_length;
    let twiddle: Vec<Complex<T>> = (0..w)
        .map(|k| {
            let theta = -T::TAU() * idx(k) / idx(w);
            Complex::new(theta.cos(), theta.sin())
        })
        .collect();
    let scale = lit::<T>(2.0) / idx(w);
    let phasors = (0..=x.len() - w)
        .map(|n0| {
            let acc = (0..w).fold(Complex::new(T::zero(), T::zero()), |acc, n| {
                acc + twiddle[(n0 + n) % w] * x[n0 + n]
            });
            acc * scale
        })
        .collect();
    Ok(PhasorSeries {
        window_length: w,
        phasors,
    })
}
