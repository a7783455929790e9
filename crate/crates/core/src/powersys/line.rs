//! Transposed transmission line described by sequence parameters per km.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Sequence R/L/C per km: Ω/km, H/km, F/km.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct LineModel {
    pub length_km: f64,
    pub r1: f64,
    pub l1: f64,
    pub c1: f64,
    pub r0: f64,
    pub l0: f64,
    pub c0: f64,
    pub nominal_kv: f64,
}

impl Default for LineModel {
    /// 500 kV, 205.6 km line.
    fn default() -> Self {
        Self {
            length_km: 205.6,
            r1: 0.0246,
            l1: 0.8539e-3,
            c1: 13.66e-9,
            r0: 0.3818,
            l0: 3.732e-3,
            c0: 8.61e-9,
            nominal_kv: 500.0,
        }
    }
}

impl LineModel {
    pub fn validate(&self) -> Result<()> {
        let fields = [
            ("length_km", self.length_km),
            ("r1", self.r1),
            ("l1", self.l1),
            ("c1", self.c1),
            ("r0", self.r0),
            ("l0", self.l0),
            ("c0", self.c0),
            ("nominal_kv", self.nominal_kv),
        ];
        for (name, v) in fields {
            if !(v > 0.0 && v.is_finite()) {
                return Err(Error::InvalidLine(format!(
                    "{name} must be positive, got {v}"
                )));
            }
        }
        Ok(())
    }

    /// Positive-sequence series impedance per km at `f` Hz.
    pub fn z1_per_km(&self, f: f64) -> Complex64 {
        Complex64::new(self.r1, std::f64::consts::TAU * f * self.l1)
    }

    pub fn z0_per_km(&self, f: f64) -> Complex64 {
        Complex64::new(self.r0, std::f64::consts::TAU * f * self.l0)
    }

    /// Positive-sequence reactance per km, Ω/km.
    pub fn x1(&self, f: f64) -> f64 {
        self.z1_per_km(f).im
    }

    /// Residual compensation factor `k₀ = (Z₀ − Z₁) / (3 Z₁)`.
    pub fn k0(&self, f: f64) -> Complex64 {
        let z1 = self.z1_per_km(f);
        (self.z0_per_km(f) - z1) / (3.0 * z1)
    }
}
