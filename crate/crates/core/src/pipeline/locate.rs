//! One-terminal apparent-impedance fault location.

use num_complex::Complex64;
use serde::Serialize;

use super::phasor::PhasorSeries;
use crate::error::Result;
use crate::powersys::{FaultType, LineModel};
use crate::scalar::{to_f64, Real};

/// Loop whose apparent impedance is measured.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum LoopKind {
    /// `V_p / (I_p + k₀·3I₀)`.
    PhaseGround(usize),
    /// `(V_p − V_q) / (I_p − I_q)`.
    PhasePhase(usize, usize),
}

impl LoopKind {
    pub fn for_fault(fault_type: FaultType) -> LoopKind {
        let ph = fault_type.phases();
        let faulted: Vec<usize> = (0..3).filter(|&k| ph[k]).collect();
        match faulted.as_slice() {
            [p] => LoopKind::PhaseGround(*p),
            [p, q, ..] => LoopKind::PhasePhase(*p, *q),
            [] => unreachable!("every fault type involves a phase"),
        }
    }

    pub fn label(self) -> String {
        const N: [char; 3] = ['a', 'b', 'c'];
        match self {
            LoopKind::PhaseGround(p) => format!("{}-g", N[p]),
            LoopKind::PhasePhase(p, q) => format!("{}{}", N[p], N[q]),
        }
    }

    /// Loop voltage and current from phase phasors.
    pub fn quantities(
        self,
        v: [Complex64; 3],
        i: [Complex64; 3],
        k0: Complex64,
    ) -> (Complex64, Complex64) {
        match self {
            LoopKind::PhaseGround(p) => {
                let i0x3 = i[0] + i[1] + i[2];
                (v[p], i[p] + k0 * i0x3)
            }
            LoopKind::PhasePhase(p, q) => (v[p] - v[q], i[p] - i[q]),
        }
    }
}

/// `(D_F − D_FL) / D_LT`.
pub fn location_error(estimate_km: f64, truth_km: f64, line_length_km: f64) -> f64 {
    (estimate_km - truth_km) / line_length_km
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct LocateSettings {
    pub fundamental: f64,
    /// Windows whose loop current is below `1e-6 × rated_current_a` are
    /// reported as indeterminate.
    pub rated_current_a: f64,
    /// Cycle whose closing window is reported; its start is
    /// `(report_cycle − 1) · window_length`.
    pub report_cycle: usize,
}

impl Default for LocateSettings {
    fn default() -> Self {
        Self {
            fundamental: 60.0,
            rated_current_a: 2000.0,
            report_cycle: 6,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LocationReport {
    pub fault_type_used: FaultType,
    pub loop_kind: String,
    pub line_length_km: f64,
    pub truth_km: Option<f64>,
    pub window_length: usize,
    /// Per window start; `None` where the loop current is indeterminate.
    pub distance_km: Vec<Option<f64>>,
    pub error: Vec<Option<f64>>,
    pub sixth_window: usize,
    pub sixth_window_km: Option<f64>,
    pub sixth_window_error: Option<f64>,
    /// `(window start, D_F)` at every cycle boundary.
    pub per_cycle_km: Vec<(usize, Option<f64>)>,
}

impl LocationReport {
    /// `window,D_F_km,error` rows; indeterminate cells are left empty.
    pub fn to_csv(&self) -> String {
        let cell = |x: Option<f64>| x.map(|v| v.to_string()).unwrap_or_default();
        let mut out = String::from("window,D_F_km,error\n");
        for (n, (d, e)) in self.distance_km.iter().zip(&self.error).enumerate() {
            out.push_str(&format!("{},{},{}\n", n, cell(*d), cell(*e)));
        }
        out
    }
}

/// Distance estimate `Im(Z_loop) / x₁` for every window of the phasor
/// series, plus the error against `truth_km` when it is known.
pub fn locate<T: Real>(
    voltages: [&PhasorSeries<T>; 3],
    currents: [&PhasorSeries<T>; 3],
    fault_type: FaultType,
    line: &LineModel,
    truth_km: Option<f64>,
    settings: &LocateSettings,
) -> Result<LocationReport> {
    line.validate()?;
    let kind = LoopKind::for_fault(fault_type);
    let k0 = line.k0(settings.fundamental);
    let x1 = line.x1(settings.fundamental);
    let floor = 1e-6 * settings.rated_current_a;
    let windows = voltages
        .iter()
        .chain(&currents)
        .map(|s| s.len())
        .min()
        .unwrap_or(0);
    let c64 = |z: num_complex::Complex<T>| Complex64::new(to_f64(z.re), to_f64(z.im));
    let distance_km: Vec<Option<f64>> = (0..windows)
        .map(|n| {
            let v = voltages.map(|s| c64(s.phasors[n]));
            let i = currents.map(|s| c64(s.phasors[n]));
            let (vl, il) = kind.quantities(v, i, k0);
            (il.norm() >= floor).then(|| (vl / il).im / x1)
        })
        .collect();
    let error: Vec<Option<f64>> = distance_km
        .iter()
        .map(|d| Some(location_error((*d)?, truth_km?, line.length_km)))
        .collect();
    let w = voltages[0].window_length;
    let sixth = settings.report_cycle.saturating_sub(1) * w;
    let per_cycle_km = (0..windows)
        .step_by(w.max(1))
        .map(|n| (n, distance_km[n]))
        .collect();
    Ok(LocationReport {
        fault_type_used: fault_type,
        loop_kind: kind.label(),
        line_length_km: line.length_km,
        truth_km,
        window_length: w,
        sixth_window: sixth,
        sixth_window_km: distance_km.get(sixth).copied().flatten(),
        sixth_window_error: error.get(sixth).copied().flatten(),
        distance_km,
        error,
        per_cycle_km,
    })
}
