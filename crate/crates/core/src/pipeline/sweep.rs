//! End-to-end analysis of one record and parallel sweeps over a catalog.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::detect::{
    calibrate_thresholds, detect, select_fault_phases, DetectionResult, ModalDetails,
};
use super::locate::{locate, LocateSettings, LocationReport};
use super::phasor::sliding_phasor;
use crate::error::{Error, Result};
use crate::filters::FilterPair;
use crate::mra::{analyze_one_level, decompose};
use crate::powersys::{
    clarke, generate_fault_record, FaultClass, FaultScenario, FaultType, GeneratorSettings,
    LineModel, ThreePhaseRecord,
};
use crate::scalar::{lit, to_f64, Real};

/// Signal compared against the detection thresholds.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DetectionSignal {
    /// Cycle-over-cycle change of the level-1 detail.
    #[default]
    Superimposed,
    /// The level-1 detail itself.
    Raw,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct PipelineConfig {
    pub detection_signal: DetectionSignal,
    pub location_levels: usize,
    pub threshold_multiplier: f64,
    pub prefault_cycles: usize,
    /// Phase-selection cut as a fraction of the largest incremental energy.
    pub phase_energy_ratio: f64,
    pub rated_current_a: f64,
    pub report_cycle: usize,
    pub line: LineModel,
    pub generator: GeneratorSettings,
}

impl Default for PipelineConfig {
    fn default() -> Self {
        Self {
            detection_signal: DetectionSignal::default(),
            location_levels: 3,
            threshold_multiplier: 5.0,
            prefault_cycles: 2,
            phase_energy_ratio: 0.1,
            rated_current_a: 2000.0,
            report_cycle: 6,
            line: LineModel::default(),
            generator: GeneratorSettings::default(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CaseAnalysis {
    pub record_id: String,
    pub detection: DetectionResult,
    /// Type used for loop selection: supplied by the caller or classified.
    pub fault_type: FaultType,
    pub location: LocationReport,
}

/// Threshold calibration and detection on first-level modal voltage details.
pub fn detect_record<T: Real>(
    record: &ThreePhaseRecord<T>,
    pair: &FilterPair<T>,
    config: &PipelineConfig,
) -> Result<(DetectionResult, ModalDetails<T>)> {
    let spc = to_f64(record.samples_per_cycle()).round() as usize;
    let modal = clarke(record);
    let mut details = ModalDetails::from_signals(modal.voltages(), pair, spc)?;
    if config.detection_signal == DetectionSignal::Superimposed {
        details = details.superimposed(config.prefault_cycles);
    }
    let thresholds = calibrate_thresholds(
        &details,
        config.prefault_cycles,
        lit(config.threshold_multiplier),
    )?;
    Ok((detect(&details, &thresholds), details))
}

/// Detect, classify (unless `known_type` is given), decompose to the
/// location level, and locate.
pub fn analyze_record<T: Real>(
    record: &ThreePhaseRecord<T>,
    pair: &FilterPair<T>,
    config: &PipelineConfig,
    truth_km: Option<f64>,
    known_type: Option<FaultType>,
) -> Result<CaseAnalysis> {
    let (detection, details) = detect_record(record, pair, config)?;
    if !detection.detected {
        return Err(Error::NotDetected);
    }
    let fault_type = match known_type {
        Some(ft) => ft,
        None => {
            let mut phase_details: [Vec<T>; 3] = Default::default();
            for (d, x) in phase_details.iter_mut().zip(record.currents()) {
                *d = analyze_one_level(x, pair)?.1;
            }
            select_fault_phases(
                &detection,
                phase_details.each_ref().map(|v| v.as_slice()),
                details.samples_per_cycle,
                config.phase_energy_ratio,
            )?
        }
    };
    let levels = config.location_levels;
    let spc = to_f64(record.samples_per_cycle()).round() as usize;
    let window = spc >> levels;
    let fs = record.sample_rate;
    let approx = |x: &[T]| -> Result<_> {
        let m = decompose(x, pair, levels, fs)?;
        sliding_phasor(m.approximation(levels), window)
    };
    let [va, vb, vc] = record.voltages().map(approx);
    let [ia, ib, ic] = record.currents().map(approx);
    let (va, vb, vc, ia, ib, ic) = (va?, vb?, vc?, ia?, ib?, ic?);
    let settings = LocateSettings {
        fundamental: to_f64(record.fundamental),
        rated_current_a: config.rated_current_a,
        report_cycle: config.report_cycle,
    };
    let location = locate(
        [&va, &vb, &vc],
        [&ia, &ib, &ic],
        fault_type,
        &config.line,
        truth_km,
        &settings,
    )?;
    Ok(CaseAnalysis {
        record_id: record.meta.clone(),
        detection,
        fault_type,
        location,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ScenarioOutcome {
    pub id: String,
    pub fault_type: FaultType,
    pub class: FaultClass,
    pub location_fraction: f64,
    pub inception_cycles: f64,
    pub truth_km: f64,
    /// True inception at the level-1 rate.
    pub true_inception_index: usize,
    pub analysis: Option<CaseAnalysis>,
    pub failure: Option<String>,
}

impl ScenarioOutcome {
    pub fn detected(&self) -> bool {
        self.analysis.is_some()
    }

    /// Detected no more than one cycle after the true inception.
    pub fn detected_in_time(&self, level1_samples_per_cycle: usize) -> bool {
        self.analysis
            .as_ref()
            .and_then(|a| a.detection.inception_index)
            .is_some_and(|n| n.abs_diff(self.true_inception_index) <= level1_samples_per_cycle)
    }

    pub fn ground_correct(&self) -> Option<bool> {
        self.analysis
            .as_ref()
            .map(|a| a.detection.ground_involved == self.fault_type.ground())
    }

    pub fn sixth_window_error(&self) -> Option<f64> {
        self.analysis.as_ref()?.location.sixth_window_error
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ClassSummary {
    pub class: FaultClass,
    pub cases: usize,
    pub detected: usize,
    pub detected_in_time: usize,
    pub ground_correct: usize,
    pub type_correct: usize,
    pub max_abs_error: Option<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SweepReport {
    pub filter: String,
    pub outcomes: Vec<ScenarioOutcome>,
    pub summary: Vec<ClassSummary>,
}

impl SweepReport {
    pub fn outcome(&self, id: &str) -> Option<&ScenarioOutcome> {
        self.outcomes.iter().find(|o| o.id == id)
    }
}

fn run_one<T: Real>(
    s: &FaultScenario,
    pair: &FilterPair<T>,
    config: &PipelineConfig,
) -> ScenarioOutcome {
    let truth_km = s.location_fraction * config.line.length_km;
    let g = &config.generator;
    let first = (s.inception_cycles * g.sample_rate / g.fundamental - 1e-9)
        .ceil()
        .max(0.0) as usize;
    let result = generate_fault_record(s, &config.line, g)
        .and_then(|r| analyze_record(&r.cast::<T>(), pair, config, Some(truth_km), None));
    let (analysis, failure) = match result {
        Ok(a) => (Some(a), None),
        Err(e) => (None, Some(e.to_string())),
    };
    ScenarioOutcome {
        id: s.id.clone(),
        fault_type: s.fault_type,
        class: s.fault_type.class(),
        location_fraction: s.location_fraction,
        inception_cycles: s.inception_cycles,
        truth_km,
        true_inception_index: first.div_ceil(2),
        analysis,
        failure,
    }
}

fn summarize(outcomes: &[ScenarioOutcome], level1_spc: usize) -> Vec<ClassSummary> {
    let mut groups: BTreeMap<FaultClass, Vec<&ScenarioOutcome>> = BTreeMap::new();
    for o in outcomes {
        groups.entry(o.class).or_default().push(o);
    }
    groups
        .into_iter()
        .map(|(class, os)| ClassSummary {
            class,
            cases: os.len(),
            detected: os.iter().filter(|o| o.detected()).count(),
            detected_in_time: os.iter().filter(|o| o.detected_in_time(level1_spc)).count(),
            ground_correct: os
                .iter()
                .filter(|o| o.ground_correct() == Some(true))
                .count(),
            type_correct: os
                .iter()
                .filter(|o| {
                    o.analysis
                        .as_ref()
                        .is_some_and(|a| a.fault_type == o.fault_type)
                })
                .count(),
            max_abs_error: os
                .iter()
                .filter_map(|o| o.sixth_window_error())
                .map(f64::abs)
                .fold(None, |m: Option<f64>, e| Some(m.map_or(e, |m| m.max(e)))),
        })
        .collect()
}

/// Generates and analyzes every scenario in parallel. Per-scenario failures
/// are recorded in the outcome; output order follows the catalog.
pub fn run_sweep<T: Real>(
    catalog: &[FaultScenario],
    pair: &FilterPair<T>,
    config: &PipelineConfig,
) -> Result<SweepReport> {
    if catalog.is_empty() {
        return Err(Error::EmptyCatalog);
    }
    let outcomes: Vec<ScenarioOutcome> = catalog
        .par_iter()
        .map(|s| run_one(s, pair, config))
        .collect();
    let g = &config.generator;
    let level1_spc = (g.sample_rate / g.fundamental / 2.0).round() as usize;
    Ok(SweepReport {
        filter: pair.label(),
        summary: summarize(&outcomes, level1_spc),
        outcomes,
    })
}
