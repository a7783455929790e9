//! Gegenbauer nonorthogonal filter banks and a single-ended transmission
//! line fault locator built on them.
//!
//! The numeric core (filters, spectral analysis, decomposition, modal
//! transform, detection, phasors) is generic over [`Real`]; aliases for
//! `f64` and `f32` are provided below.
//!
//! ```
//! use gegmra::{FilterPair64, GegenbauerParams};
//!
//! let pair = FilterPair64::gegenbauer(GegenbauerParams::new(3, 12.0).unwrap()).unwrap();
//! let sum: f64 = pair.scaling().iter().sum();
//! assert!((sum - std::f64::consts::SQRT_2).abs() < 1e-12);
//! ```

// `!(x > 0)` is used deliberately so NaN fails validation.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod error;
pub mod filters;
pub mod mra;
pub mod pipeline;
pub mod powersys;
pub mod scalar;
pub mod special;
pub mod spectral;

pub use error::{Error, RecordError, Result};
pub use filters::{
    daub4_coeffs, gegenbauer_scaling_coeffs, wavelet_from_scaling, FilterExport, FilterFamily,
    FilterPair, FilterSpec, GegenbauerParams, DEFAULT_ALPHA_LIMIT,
};
pub use mra::{analyze_one_level, decompose, MraDecomposition};
pub use pipeline::{
    analyze_record, calibrate_thresholds, detect, locate, location_error, run_sweep,
    select_fault_phases, sliding_phasor, CaseAnalysis, DetectionResult, DetectionSignal,
    LocationReport, PhasorSeries, PipelineConfig, SweepReport,
};
pub use powersys::{
    clarke, generate_fault_record, paper_catalog, read_record, write_record, FaultScenario,
    FaultType, GeneratorSettings, LineModel, ModalRecord, ThreePhaseRecord,
};
pub use scalar::Real;
pub use special::{eval_gegenbauer, ln_gamma, PolynomialValue};
pub use spectral::{
    band_table, cascade, cutoff_minus3db, dtft, ideal_band_table, zeros_on_unit_circle, BandSide,
    BandTable, CascadeWaveform, FrequencyResponse, WaveformKind,
};

pub type FilterPair64 = FilterPair<f64>;
pub type FilterPair32 = FilterPair<f32>;
pub type GegenbauerParams64 = GegenbauerParams<f64>;
pub type GegenbauerParams32 = GegenbauerParams<f32>;
pub type FrequencyResponse64 = FrequencyResponse<f64>;
pub type FrequencyResponse32 = FrequencyResponse<f32>;
pub type MraDecomposition64 = MraDecomposition<f64>;
pub type MraDecomposition32 = MraDecomposition<f32>;
pub type ThreePhaseRecord64 = ThreePhaseRecord<f64>;
pub type ThreePhaseRecord32 = ThreePhaseRecord<f32>;
pub type ModalRecord64 = ModalRecord<f64>;
pub type ModalRecord32 = ModalRecord<f32>;
pub type PhasorSeries64 = PhasorSeries<f64>;
pub type PhasorSeries32 = PhasorSeries<f32>;
