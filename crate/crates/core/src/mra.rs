//! Decimating analysis filter bank.
//!
//! One level computes `a[n] = Σ_k h_k x[2n−k]` and `d[n] = Σ_k g_k x[2n−k]`
//! for `n = 0..⌈N/2⌉`. Samples before the start of the record come from
//! half-sample symmetric extension (`x[−1] = x[0]`, `x[−2] = x[1]`, …).
//! No gain renormalization is applied between levels.

use crate::error::{Error, Result};
use crate::filters::FilterPair;
use crate::scalar::{idx, Real};

/// Per-level approximations and details of a multi-level decomposition.
///
/// Index `j − 1` holds level `j`.
#[derive(Clone, Debug, PartialEq)]
pub struct MraDecomposition<T> {
    pub sample_rate: T,
    pub source_length: usize,
    pub approximations: Vec<Vec<T>>,
    pub details: Vec<Vec<T>>,
    /// Cumulative filter delay at each level in input samples, for the
    /// constant-group-delay families.
    pub delays: Vec<Option<T>>,
}

impl<T: Real> MraDecomposition<T> {
    pub fn levels(&self) -> usize {
        self.approximations.len()
    }

    pub fn approximation(&self, level: usize) -> &[T] {
        &self.approximations[level - 1]
    }

    pub fn detail(&self, level: usize) -> &[T] {
        &self.details[level - 1]
    }

    /// `f_s / 2^j`.
    pub fn effective_rate(&self, level: usize) -> T {
        self.sample_rate / idx(1usize << level)
    }
}

/// Half-sample symmetric reflection of index `i` into `0..n`.
#[inline]
pub(crate) fn reflect(i: isize, n: usize) -> usize {
    let period = 2 * n as isize;
    let m = i.rem_euclid(period) as usize;
    if m < n {
        m
    } else {
        2 * n - 1 - m
    }
}

fn filter_decimate<T: Real>(x: &[T], taps: &[T]) -> Vec<T> {
    let n = x.len();
    (0..n.div_ceil(2))
        .map(|out| {
            let newest = 2 * out as isize;
            taps.iter().enumerate().fold(T::zero(), |acc, (k, &c)| {
                let i = newest - k as isize;
                let s = if i >= 0 {
                    x[i as usize]
                } else {
                    x[reflect(i, n)]
                };
                acc + c * s
            })
        })
        .collect()
}

fn split<T: Real>(x: &[T], pair: &FilterPair<T>) -> (Vec<T>, Vec<T>) {
    (
        filter_decimate(x, pair.scaling()),
        filter_decimate(x, pair.wavelet()),
    )
}

/// One analysis stage: `(approximation, detail)`, each `⌈len/2⌉` long.
pub fn analyze_one_level<T: Real>(x: &[T], pair: &FilterPair<T>) -> Result<(Vec<T>, Vec<T>)> {
    if x.len() < pair.len() {
        return Err(Error::InputTooShort {
            len: x.len(),
            min: pair.len(),
        });
    }
    Ok(split(x, pair))
}

/// Iterates the analysis stage `levels` times on successive approximations.
pub fn decompose<T: Real>(
    x: &[T],
    pair: &FilterPair<T>,
    levels: usize,
    sample_rate: T,
) -> Result<MraDecomposition<T>> {
    if levels == 0 {
        return Err(Error::ZeroLevels(levels));
    }
    let needed = 1usize.checked_shl(levels as u32).unwrap_or(usize::MAX);
    if levels >= usize::BITS as usize || x.len() < needed {
        return Err(Error::LevelsTooDeep {
            levels,
            len: x.len(),
            needed,
        });
    }
    let mut approximations = Vec::with_capacity(levels);
    let mut details = Vec::with_capacity(levels);
    let mut delays = Vec::with_capacity(levels);
    let mut current = x.to_vec();
    for j in 1..=levels {
        let (a, d) = split(&current, pair);
        details.push(d);
        delays.push(
            pair.group_delay()
                .map(|gd| gd * (idx::<T>(1usize << j) - T::one())),
        );
        current = a.clone();
        approximations.push(a);
    }
    Ok(MraDecomposition {
        sample_rate,
        source_length: x.len(),
        approximations,
        details,
        delays,
    })
}
