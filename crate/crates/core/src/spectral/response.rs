use num_complex::Complex;

use crate::error::{Error, Result};
use crate::scalar::{idx, lit, to_f64, Real};

pub const MIN_GRID: usize = 64;

/// Sampled frequency response on a uniform grid over `[0, π]`.
///
/// Taps are in the √2 convention, so responses are reported divided by √2:
/// a scaling filter has unit gain at DC and a wavelet filter unit gain at π.
#[derive(Clone, Debug)]
pub struct FrequencyResponse<T> {
    taps: Vec<T>,
    pub omega: Vec<T>,
    pub values: Vec<Complex<T>>,
    pub magnitude: Vec<T>,
    pub phase: Vec<T>,
    pub phase_unwrapped: Vec<T>,
    pub group_delay: Vec<T>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BandSide {
    Lowpass,
    Highpass,
}

impl BandSide {
    fn name(self) -> &'static str {
        match self {
            BandSide::Lowpass => "lowpass",
            BandSide::Highpass => "highpass",
        }
    }
}

/// Evaluates `(1/√2) Σ_k h_k e^{−jωk}`.
pub fn transfer<T: Real>(taps: &[T], omega: T) -> Complex<T> {
    let mut acc = Complex::new(T::zero(), T::zero());
    for (k, &h) in taps.iter().enumerate() {
        let theta = -omega * idx(k);
        acc += Complex::new(theta.cos(), theta.sin()) * h;
    }
    acc * T::FRAC_1_SQRT_2()
}

/// Samples the response of `taps` on `grid_size` points spanning `[0, π]`.
pub fn dtft<T: Real>(taps: &[T], grid_size: usize) -> Result<FrequencyResponse<T>> {
    if taps.is_empty() {
        return Err(Error::EmptyFilter);
    }
    if grid_size < MIN_GRID {
        return Err(Error::GridTooSmall(grid_size));
    }
    let step = T::PI() / idx(grid_size - 1);
    let omega: Vec<T> = (0..grid_size).map(|i| step * idx(i)).collect();
    let values: Vec<Complex<T>> = omega.iter().map(|&w| transfer(taps, w)).collect();
    let magnitude = values.iter().map(|v| v.norm()).collect();
    let phase: Vec<T> = values.iter().map(|v| v.arg()).collect();
    let phase_unwrapped = unwrap(&phase);
    let group_delay = group_delay(&phase, step);
    Ok(FrequencyResponse {
        taps: taps.to_vec(),
        omega,
        values,
        magnitude,
        phase,
        phase_unwrapped,
        group_delay,
    })
}

fn unwrap<T: Real>(phase: &[T]) -> Vec<T> {
    let tau = T::TAU();
    let mut out = Vec::with_capacity(phase.len());
    let mut offset = T::zero();
    for (i, &p) in phase.iter().enumerate() {
        if i > 0 {
            let d = p - phase[i - 1];
            if d > T::PI() {
                offset -= tau;
            } else if d < -T::PI() {
                offset += tau;
            }
        }
        out.push(p + offset);
    }
    out
}

/// Reduces a phase difference into (−π/2, π/2]. Sign flips of a real-valued
/// amplitude (π jumps at unit-circle nulls) drop out of the derivative.
fn wrap_half<T: Real>(d: T) -> T {
    let pi = T::PI();
    let half = T::FRAC_PI_2();
    let mut d = d % pi;
    if d > half {
        d -= pi;
    } else if d <= -half {
        d += pi;
    }
    d
}

fn group_delay<T: Real>(phase: &[T], step: T) -> Vec<T> {
    let n = phase.len();
    (0..n)
        .map(|i| {
            let (lo, hi) = (i.saturating_sub(1), (i + 1).min(n - 1));
            let span = step * idx(hi - lo);
            -wrap_half(phase[hi] - phase[lo]) / span
        })
        .collect()
}

impl<T: Real> FrequencyResponse<T> {
    pub fn taps(&self) -> &[T] {
        &self.taps
    }

    pub fn len(&self) -> usize {
        self.omega.len()
    }

    pub fn is_empty(&self) -> bool {
        self.omega.is_empty()
    }

    /// Exact response at an arbitrary frequency.
    pub fn eval(&self, omega: T) -> Complex<T> {
        transfer(&self.taps, omega)
    }

    /// Frequency in Hz of grid point `i` for the given sample rate.
    pub fn hz(&self, i: usize, sample_rate: T) -> T {
        self.omega[i] * sample_rate / T::TAU()
    }

    /// `omega,magnitude,phase,group_delay` rows with a header line.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("omega,magnitude,phase,group_delay\n");
        for i in 0..self.len() {
            out.push_str(&format!(
                "{},{},{},{}\n",
                to_f64(self.omega[i]),
                to_f64(self.magnitude[i]),
                to_f64(self.phase_unwrapped[i]),
                to_f64(self.group_delay[i])
            ));
        }
        out
    }
}

/// First −3 dB crossing measured from the band edge, in Hz.
///
/// The reference level is the magnitude at DC (lowpass) or at π (highpass).
/// The grid brackets the first crossing, then bisection on the exact response
/// narrows it to 0.01 Hz.
pub fn cutoff_minus3db<T: Real>(
    response: &FrequencyResponse<T>,
    sample_rate: T,
    side: BandSide,
) -> Result<T> {
    if !(sample_rate > T::zero()) {
        return Err(Error::SampleRate(to_f64(sample_rate)));
    }
    let n = response.len();
    let reference = match side {
        BandSide::Lowpass => response.eval(T::zero()).norm(),
        BandSide::Highpass => response.eval(T::PI()).norm(),
    };
    let level = reference * T::FRAC_1_SQRT_2();
    let order: Box<dyn Iterator<Item = usize>> = match side {
        BandSide::Lowpass => Box::new(0..n),
        BandSide::Highpass => Box::new((0..n).rev()),
    };
    let mut prev: Option<usize> = None;
    let mut bracket = None;
    for i in order {
        if response.magnitude[i] < level {
            bracket = prev.map(|p| (response.omega[p], response.omega[i]));
            break;
        }
        prev = Some(i);
    }
    let (mut inside, mut outside) = bracket.ok_or(Error::NoCrossing(side.name()))?;
    let to_hz = sample_rate / T::TAU();
    let tol = lit::<T>(0.01);
    while (outside - inside).abs() * to_hz > tol {
        let mid = (inside + outside) / lit(2.0);
        if response.eval(mid).norm() >= level {
            inside = mid;
        } else {
            outside = mid;
        }
    }
    Ok((inside + outside) / lit(2.0) * to_hz)
}
