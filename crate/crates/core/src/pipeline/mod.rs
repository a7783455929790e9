//! Fault detection, classification, phasor estimation and location.
//!
//! Detection runs on first-level details of the modal voltages; location on
//! the fundamental phasors of deeper approximations of the phase quantities.
//! Both filter gains and constant group delays act equally on voltages and
//! currents, so they cancel in the loop impedance.

pub mod detect;
pub mod locate;
pub mod phasor;
pub mod sweep;

pub use detect::{
    calibrate_thresholds, detect, incremental_energy, select_fault_phases, DetectionResult,
    ModalDetails, Mode, Thresholds,
};
pub use locate::{locate, location_error, LocateSettings, LocationReport, LoopKind};
pub use phasor::{sliding_phasor, PhasorSeries};
pub use sweep::{
    analyze_record, detect_record, run_sweep, CaseAnalysis, ClassSummary, DetectionSignal,
    PipelineConfig, ScenarioOutcome, SweepReport,
};
