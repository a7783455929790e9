//! Phasor-domain synthesis of terminal-A fault records.
//!
//! Two Thévenin sources feed a transposed line modelled by its lumped series
//! sequence impedances (shunt capacitance neglected). Before the fault the
//! network carries balanced load flow; afterwards the sequence networks are
//! connected at the fault point for the given fault type. Each current gets
//! an exponentially decaying offset that makes it continuous at inception,
//! with the time constant of the terminal-A fault loop.

use std::f64::consts::TAU;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::line::LineModel;
use super::record::ThreePhaseRecord;
use super::scenario::{FaultScenario, FaultType};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct GeneratorSettings {
    pub sample_rate: f64,
    pub fundamental: f64,
    pub duration_cycles: f64,
}

impl Default for GeneratorSettings {
    fn default() -> Self {
        Self {
            sample_rate: 7680.0,
            fundamental: 60.0,
            duration_cycles: 8.0,
        }
    }
}

impl GeneratorSettings {
    pub fn samples(&self) -> usize {
        (self.duration_cycles * self.sample_rate / self.fundamental).round() as usize
    }
}

/// Steady-state phase phasors (peak values, phase order a, b, c) at terminal A
/// before and after the fault, rotated so the pre-fault phase-a voltage has
/// zero angle.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FaultPhasors {
    pub prefault_v: [Complex64; 3],
    pub prefault_i: [Complex64; 3],
    pub postfault_v: [Complex64; 3],
    pub postfault_i: [Complex64; 3],
    /// Decay constant of the current offset, seconds.
    pub tau_s: f64,
}

fn a_op() -> Complex64 {
    Complex64::from_polar(1.0, TAU / 3.0)
}

/// `[x0, x1, x2]` sequence components to phases `[a, b, c]`.
fn to_phases(seq: [Complex64; 3]) -> [Complex64; 3] {
    let a = a_op();
    let a2 = a * a;
    [
        seq[0] + seq[1] + seq[2],
        seq[0] + a2 * seq[1] + a * seq[2],
        seq[0] + a * seq[1] + a2 * seq[2],
    ]
}

fn finite(z: Complex64) -> bool {
    z.re.is_finite() && z.im.is_finite()
}

pub fn solve_fault_phasors(
    scenario: &FaultScenario,
    line: &LineModel,
    fundamental: f64,
) -> Result<FaultPhasors> {
    scenario.validate()?;
    line.validate()?;
    let singular = || Error::SingularNetwork(scenario.id.clone());
    let src = &scenario.sources;
    let m = scenario.location_fraction;
    let peak = |kv: f64, deg: f64| {
        Complex64::from_polar(kv * 1e3 * (2.0f64 / 3.0).sqrt(), deg.to_radians())
    };
    let e1 = peak(src.e1_kv, src.e1_deg);
    let e2 = peak(src.e2_kv, src.e2_deg);
    let z1l = line.z1_per_km(fundamental) * line.length_km;
    let z0l = line.z0_per_km(fundamental) * line.length_km;

    let loop_total = src.ze1 + z1l + src.ze2;
    if loop_total.norm() == 0.0 {
        return Err(singular());
    }
    let i_pre = (e1 - e2) / loop_total;
    let va_pre = e1 - src.ze1 * i_pre;
    let vf_pre = va_pre - z1l * m * i_pre;

    let za = [src.ze1_zero + z0l * m, src.ze1 + z1l * m, src.ze1 + z1l * m];
    let zb = [
        src.ze2_zero + z0l * (1.0 - m),
        src.ze2 + z1l * (1.0 - m),
        src.ze2 + z1l * (1.0 - m),
    ];
    let mut zth = [Complex64::default(); 3];
    for s in 0..3 {
        let sum = za[s] + zb[s];
        if sum.norm() == 0.0 {
            return Err(singular());
        }
        zth[s] = za[s] * zb[s] / sum;
    }

    // Work in the frame where the fault is symmetric about phase a'.
    let r = scenario.fault_type.reference_phase();
    let rot = a_op().powi(-(r as i32));
    let v = vf_pre * rot;
    let rf = Complex64::from(scenario.fault_resistance);
    let [z0, z1, z2] = zth;
    use FaultType::*;
    // fault currents [I0, I1, I2] drawn from the network
    let i_f: [Complex64; 3] = match scenario.fault_type {
        Ag | Bg | Cg => {
            let i = v / (z0 + z1 + z2 + rf * 3.0);
            [i, i, i]
        }
        AB | AC | BC => {
            let i1 = v / (z1 + z2 + rf);
            [Complex64::default(), i1, -i1]
        }
        ABg | ACg | BCg => {
            let zg = z0 + rf * 3.0;
            let par = z2 + zg;
            let i1 = v / (z1 + z2 * zg / par);
            [-i1 * z2 / par, i1, -i1 * zg / par]
        }
        ABC => [Complex64::default(), v / (z1 + rf), Complex64::default()],
    };
    let ze = [src.ze1_zero, src.ze1, src.ze1];
    let mut ia_seq = [Complex64::default(), i_pre * rot, Complex64::default()];
    let mut va_seq = [Complex64::default(), va_pre * rot, Complex64::default()];
    for s in 0..3 {
        let d = i_f[s] * zb[s] / (za[s] + zb[s]);
        ia_seq[s] += d;
        va_seq[s] -= ze[s] * d;
    }
    let (vp, ip) = (to_phases(va_seq), to_phases(ia_seq));
    if !vp.iter().chain(&ip).all(|&z| finite(z)) {
        return Err(singular());
    }
    let mut post_v = [Complex64::default(); 3];
    let mut post_i = [Complex64::default(); 3];
    for k in 0..3 {
        post_v[(k + r) % 3] = vp[k];
        post_i[(k + r) % 3] = ip[k];
    }
    let pre_v = to_phases([Complex64::default(), va_pre, Complex64::default()]);
    let pre_i = to_phases([Complex64::default(), i_pre, Complex64::default()]);

    let align = Complex64::from_polar(1.0, -pre_v[0].arg());
    let turn = |x: [Complex64; 3]| x.map(|z| z * align);

    let loop_z = if scenario.fault_type.ground() {
        (za[1] * 2.0 + za[0]) / 3.0
    } else {
        za[1]
    };
    let omega = TAU * fundamental;
    let tau_s = if loop_z.re > 0.0 {
        loop_z.im / (omega * loop_z.re)
    } else {
        f64::INFINITY
    };
    Ok(FaultPhasors {
        prefault_v: turn(pre_v),
        prefault_i: turn(pre_i),
        postfault_v: turn(post_v),
        postfault_i: turn(post_i),
        tau_s,
    })
}

fn sample(p: Complex64, omega_t: f64) -> f64 {
    (p * Complex64::from_polar(1.0, omega_t)).re
}

/// Samples the pre-fault and post-fault solutions into a terminal-A record.
/// An inception past the end of the record yields a fault-free record.
pub fn generate_fault_record(
    scenario: &FaultScenario,
    line: &LineModel,
    settings: &GeneratorSettings,
) -> Result<ThreePhaseRecord<f64>> {
    if !(settings.sample_rate > 0.0) {
        return Err(Error::SampleRate(settings.sample_rate));
    }
    if !(settings.fundamental > 0.0) {
        return Err(Error::SampleRate(settings.fundamental));
    }
    let ph = solve_fault_phasors(scenario, line, settings.fundamental)?;
    let n = settings.samples();
    let omega = TAU * settings.fundamental;
    let tf = scenario.inception_cycles / settings.fundamental;
    // first sample at or after the inception instant
    let n_fault = (tf * settings.sample_rate - 1e-9).ceil().max(0.0) as usize;
    let offset: [f64; 3] = std::array::from_fn(|k| {
        sample(ph.prefault_i[k], omega * tf) - sample(ph.postfault_i[k], omega * tf)
    });
    let mut v: [Vec<f64>; 3] = Default::default();
    let mut i: [Vec<f64>; 3] = Default::default();
    for s in 0..n {
        let t = s as f64 / settings.sample_rate;
        let wt = omega * t;
        for k in 0..3 {
            if s < n_fault {
                v[k].push(sample(ph.prefault_v[k], wt));
                i[k].push(sample(ph.prefault_i[k], wt));
            } else {
                let decay = (-(t - tf) / ph.tau_s).exp();
                v[k].push(sample(ph.postfault_v[k], wt));
                i[k].push(sample(ph.postfault_i[k], wt) + offset[k] * decay);
            }
        }
    }
    ThreePhaseRecord::new(
        settings.sample_rate,
        settings.fundamental,
        v,
        i,
        scenario.id.clone(),
    )
}
