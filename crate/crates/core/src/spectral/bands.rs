use serde::Serialize;

use super::response::{cutoff_minus3db, dtft, BandSide};
use crate::error::{Error, Result};
use crate::filters::FilterPair;
use crate::scalar::{to_f64, Real};

const MAX_BAND_LEVEL: usize = 30;
const BAND_GRID: usize = 4096;

/// Frequency band of the approximation and detail at one decomposition level.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct BandLevel {
    pub level: usize,
    pub scaling_hz: [f64; 2],
    pub wavelet_hz: [f64; 2],
}

/// Per-level band edges for one filter pair at a given sample rate.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BandTable {
    pub filter: String,
    pub sample_rate: f64,
    pub levels: Vec<BandLevel>,
}

impl BandTable {
    /// Samples per fundamental cycle carried by level `j` approximations.
    pub fn samples_per_cycle(&self, level: usize, fundamental: f64) -> f64 {
        self.sample_rate / fundamental / 2f64.powi(level as i32)
    }

    pub fn level(&self, j: usize) -> Option<&BandLevel> {
        self.levels.iter().find(|l| l.level == j)
    }
}

fn check_args<T: Real>(sample_rate: T, max_level: usize) -> Result<()> {
    if !(sample_rate > T::zero()) {
        return Err(Error::SampleRate(to_f64(sample_rate)));
    }
    if max_level == 0 || max_level > MAX_BAND_LEVEL {
        return Err(Error::BandLevel(max_level));
    }
    Ok(())
}

/// Band edges for `pair`: level-1 −3 dB edges, halved at every further level.
pub fn band_table<T: Real>(
    pair: &FilterPair<T>,
    sample_rate: T,
    max_level: usize,
) -> Result<BandTable> {
    check_args(sample_rate, max_level)?;
    let low = cutoff_minus3db(
        &dtft(pair.scaling(), BAND_GRID)?,
        sample_rate,
        BandSide::Lowpass,
    )?;
    let high = cutoff_minus3db(
        &dtft(pair.wavelet(), BAND_GRID)?,
        sample_rate,
        BandSide::Highpass,
    )?;
    let fs = to_f64(sample_rate);
    let (low, high) = (to_f64(low), to_f64(high));
    let levels = (1..=max_level)
        .map(|j| {
            let div = 2f64.powi(j as i32 - 1);
            BandLevel {
                level: j,
                scaling_hz: [0.0, low / div],
                wavelet_hz: [high / div, fs / (2.0 * div)],
            }
        })
        .collect();
    Ok(BandTable {
        filter: pair.label(),
        sample_rate: fs,
        levels,
    })
}

/// Ideal half-band split used as the orthogonal reference: at level `j` the
/// approximation holds `[0, f_s/2^{j+1}]` and the detail `[f_s/2^{j+1}, f_s/2^j]`.
pub fn ideal_band_table<T: Real>(sample_rate: T, max_level: usize) -> Result<BandTable> {
    check_args(sample_rate, max_level)?;
    let fs = to_f64(sample_rate);
    let levels = (1..=max_level)
        .map(|j| {
            let edge = fs / 2f64.powi(j as i32 + 1);
            BandLevel {
                level: j,
                scaling_hz: [0.0, edge],
                wavelet_hz: [edge, 2.0 * edge],
            }
        })
        .collect();
    Ok(BandTable {
        filter: "ideal".into(),
        sample_rate: fs,
        levels,
    })
}
