//! Frequency-domain characterization of filter pairs: sampled responses,
//! −3 dB band edges, per-level band tables, transfer-function zeros and
//! cascade-algorithm waveforms.

mod bands;
mod cascade;
mod response;
mod roots;

pub use bands::{band_table, ideal_band_table, BandLevel, BandTable};
pub use cascade::{cascade, CascadeWaveform, WaveformKind};
pub use response::{cutoff_minus3db, dtft, transfer, BandSide, FrequencyResponse, MIN_GRID};
pub use roots::{zeros_on_unit_circle, Zero, RESIDUAL_TOLERANCE};
