//! Fault detection on first-level modal details and faulted-phase selection.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::filters::FilterPair;
use crate::mra::analyze_one_level;
use crate::powersys::FaultType;
use crate::scalar::{lit, to_f64, Real};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Alpha,
    Beta,
    Zero,
}

pub const MODES: [Mode; 3] = [Mode::Alpha, Mode::Beta, Mode::Zero];

/// Level-1 details of the three modal components of one quantity.
#[derive(Clone, Debug, PartialEq)]
pub struct ModalDetails<T> {
    /// `[α, β, 0]`.
    pub components: [Vec<T>; 3],
    /// Fundamental cycle length at the level-1 rate.
    pub samples_per_cycle: usize,
    /// Leading samples influenced by the boundary extension.
    pub edge_guard: usize,
    /// Magnitude the numerical threshold floor is scaled by; defaults to the
    /// largest pre-fault detail when absent.
    pub floor_reference: Option<T>,
}

impl<T: Real> ModalDetails<T> {
    /// One analysis stage applied to each modal signal.
    pub fn from_signals(
        signals: [&[T]; 3],
        pair: &FilterPair<T>,
        input_samples_per_cycle: usize,
    ) -> Result<Self> {
        let mut components: [Vec<T>; 3] = Default::default();
        for (c, x) in components.iter_mut().zip(signals) {
            *c = analyze_one_level(x, pair)?.1;
        }
        Ok(Self {
            components,
            samples_per_cycle: input_samples_per_cycle / 2,
            edge_guard: pair.len(),
            floor_reference: None,
        })
    }

    /// Cycle-over-cycle change `d[n] − d[n − cycle]` of every component.
    ///
    /// Steady-state fundamental leakage cancels, so only the superimposed
    /// (fault-induced) part of the detail remains. The first cycle is zero
    /// and the edge guard grows by one cycle. The floor keeps the scale of the
    /// raw detail over the first `reference_cycles` cycles past the guard.
    pub fn superimposed(&self, reference_cycles: usize) -> Self {
        let spc = self.samples_per_cycle;
        let end = (self.edge_guard + reference_cycles * spc).min(self.len());
        let reference = self
            .components
            .iter()
            .flat_map(|c| c[self.edge_guard.min(end)..end].iter())
            .fold(T::zero(), |m, &x| m.max(x.abs()));
        let components = self.components.each_ref().map(|c| {
            (0..c.len())
                .map(|n| {
                    if n >= spc {
                        c[n] - c[n - spc]
                    } else {
                        T::zero()
                    }
                })
                .collect()
        });
        Self {
            components,
            samples_per_cycle: spc,
            edge_guard: self.edge_guard + spc,
            floor_reference: Some(reference),
        }
    }

    pub fn len(&self) -> usize {
        self.components[0].len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Per-component detection thresholds.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Thresholds<T> {
    pub values: [T; 3],
    /// Components whose calibrated value fell below the numerical floor.
    pub floored: [bool; 3],
}

/// `threshold_c = multiplier × max |d_c|` over `prefault_cycles` cycles
/// following the edge guard.
///
/// A component that is numerically silent before the fault (the zero mode
/// of a balanced system) would otherwise get a zero threshold; such values
/// are raised to `max(√ε·scale, ε)`, where `scale` is the details' floor
/// reference or else the largest pre-fault detail of any component.
pub fn calibrate_thresholds<T: Real>(
    details: &ModalDetails<T>,
    prefault_cycles: usize,
    multiplier: T,
) -> Result<Thresholds<T>> {
    let spc = details.samples_per_cycle;
    let start = details.edge_guard;
    let end = start + prefault_cycles * spc;
    if prefault_cycles == 0 || spc == 0 || end > details.len() {
        return Err(Error::CalibrationWindow {
            available: details
                .len()
                .saturating_sub(start)
                .min(prefault_cycles * spc),
            needed: spc.max(1),
        });
    }
    let peaks = details
        .components
        .each_ref()
        .map(|c| c[start..end].iter().fold(T::zero(), |m, &x| m.max(x.abs())));
    let scale = details
        .floor_reference
        .unwrap_or_else(|| peaks.iter().fold(T::zero(), |m, &p| m.max(p)));
    let floor = (T::epsilon().sqrt() * scale).max(T::epsilon());
    let mut values = [T::zero(); 3];
    let mut floored = [false; 3];
    for k in 0..3 {
        let t = peaks[k] * multiplier;
        if t < floor {
            values[k] = floor;
            floored[k] = true;
        } else {
            values[k] = t;
        }
    }
    Ok(Thresholds { values, floored })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DetectionResult {
    pub detected: bool,
    /// First level-1 sample at which an aerial mode exceeds its threshold.
    pub inception_index: Option<usize>,
    pub ground_involved: bool,
    /// Components that exceed their thresholds within one cycle of inception.
    pub triggering_components: Vec<Mode>,
    pub threshold_used: [f64; 3],
}

/// Scans the α and β details for the first threshold crossing; the zero
/// mode crossing within the following cycle flags ground involvement.
pub fn detect<T: Real>(details: &ModalDetails<T>, thresholds: &Thresholds<T>) -> DetectionResult {
    let thr = thresholds.values;
    let [a, b, z] = &details.components;
    let first =
        (details.edge_guard..details.len()).find(|&n| a[n].abs() > thr[0] || b[n].abs() > thr[1]);
    let threshold_used = thr.map(to_f64);
    let Some(n0) = first else {
        return DetectionResult {
            detected: false,
            inception_index: None,
            ground_involved: false,
            triggering_components: Vec::new(),
            threshold_used,
        };
    };
    let end = (n0 + details.samples_per_cycle).min(details.len());
    let exceeds = |c: &[T], t: T| c[n0..end].iter().any(|x| x.abs() > t);
    let triggering: Vec<Mode> = MODES
        .into_iter()
        .zip([a, b, z])
        .zip(thr)
        .filter(|((_, c), t)| exceeds(c, *t))
        .map(|((m, _), _)| m)
        .collect();
    DetectionResult {
        detected: true,
        inception_index: Some(n0),
        ground_involved: triggering.contains(&Mode::Zero),
        triggering_components: triggering,
        threshold_used,
    }
}

/// Energy of the cycle-over-cycle change of each phase detail during the
/// cycle after `inception` (level-1 indices). Differencing against the
/// previous cycle cancels the steady-state fundamental leakage.
pub fn incremental_energy<T: Real>(
    phase_details: [&[T]; 3],
    inception: usize,
    samples_per_cycle: usize,
) -> [T; 3] {
    phase_details.map(|d| {
        let end = (inception + samples_per_cycle).min(d.len());
        (inception..end).fold(T::zero(), |acc, n| {
            let delta = if n >= samples_per_cycle {
                d[n] - d[n - samples_per_cycle]
            } else {
                d[n]
            };
            acc + delta * delta
        })
    })
}

/// Faulted phases are those whose incremental detail energy reaches
/// `ratio` times the largest one; ground involvement comes from detection.
pub fn select_fault_phases<T: Real>(
    detection: &DetectionResult,
    phase_details: [&[T]; 3],
    samples_per_cycle: usize,
    ratio: f64,
) -> Result<FaultType> {
    let n0 = detection.inception_index.ok_or(Error::NotDetected)?;
    let energy = incremental_energy(phase_details, n0, samples_per_cycle);
    let peak = energy.iter().fold(T::zero(), |m, &e| m.max(e));
    if !(peak > T::zero()) {
        return Err(Error::NoFaultedPhase);
    }
    let cut = peak * lit(ratio);
    let phases = energy.map(|e| e >= cut);
    FaultType::from_phases(phases, detection.ground_involved).ok_or(Error::NoFaultedPhase)
}
