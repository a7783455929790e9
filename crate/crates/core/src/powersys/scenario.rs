//! Fault types, scenarios and the 90-case reference catalog.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FaultType {
    Ag,
    Bg,
    Cg,
    AB,
    AC,
    BC,
    ABg,
    ACg,
    BCg,
    ABC,
}

/// Grouping used when summarizing location errors.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FaultClass {
    PhaseGround,
    PhasePhase,
    PhasePhaseGround,
    ThreePhase,
}

impl FaultClass {
    pub fn name(self) -> &'static str {
        match self {
            FaultClass::PhaseGround => "phase_ground",
            FaultClass::PhasePhase => "phase_phase",
            FaultClass::PhasePhaseGround => "phase_phase_ground",
            FaultClass::ThreePhase => "three_phase",
        }
    }
}

impl FaultType {
    pub const ALL: [FaultType; 10] = [
        FaultType::Ag,
        FaultType::Bg,
        FaultType::Cg,
        FaultType::AB,
        FaultType::AC,
        FaultType::BC,
        FaultType::ABg,
        FaultType::ACg,
        FaultType::BCg,
        FaultType::ABC,
    ];

    /// Faulted phases as `[a, b, c]` flags.
    pub fn phases(self) -> [bool; 3] {
        use FaultType::*;
        match self {
            Ag => [true, false, false],
            Bg => [false, true, false],
            Cg => [false, false, true],
            AB | ABg => [true, true, false],
            AC | ACg => [true, false, true],
            BC | BCg => [false, true, true],
            ABC => [true, true, true],
        }
    }

    pub fn ground(self) -> bool {
        use FaultType::*;
        matches!(self, Ag | Bg | Cg | ABg | ACg | BCg)
    }

    pub fn class(self) -> FaultClass {
        use FaultType::*;
        match self {
            Ag | Bg | Cg => FaultClass::PhaseGround,
            AB | AC | BC => FaultClass::PhasePhase,
            ABg | ACg | BCg => FaultClass::PhasePhaseGround,
            ABC => FaultClass::ThreePhase,
        }
    }

    /// Rebuilds a type from faulted-phase flags and ground involvement.
    /// Three-phase faults are reported as `ABC` regardless of ground.
    pub fn from_phases(phases: [bool; 3], ground: bool) -> Option<FaultType> {
        use FaultType::*;
        Some(match (phases, ground) {
            ([true, true, true], _) => ABC,
            ([true, false, false], _) => Ag,
            ([false, true, false], _) => Bg,
            ([false, false, true], _) => Cg,
            ([true, true, false], false) => AB,
            ([true, false, true], false) => AC,
            ([false, true, true], false) => BC,
            ([true, true, false], true) => ABg,
            ([true, false, true], true) => ACg,
            ([false, true, true], true) => BCg,
            _ => return None,
        })
    }

    /// Phase about which the fault is symmetric: the faulted phase of a
    /// single-phase fault, the healthy phase of a two-phase fault, `a` for ABC.
    pub fn reference_phase(self) -> usize {
        use FaultType::*;
        match self {
            Ag | BC | BCg | ABC => 0,
            Bg | AC | ACg => 1,
            Cg | AB | ABg => 2,
        }
    }

    /// Compact label used in scenario ids (`Ag`, `AB`, `ABg`, `ABC`).
    pub fn code(self) -> &'static str {
        use FaultType::*;
        match self {
            Ag => "Ag",
            Bg => "Bg",
            Cg => "Cg",
            AB => "AB",
            AC => "AC",
            BC => "BC",
            ABg => "ABg",
            ACg => "ACg",
            BCg => "BCg",
            ABC => "ABC",
        }
    }
}

impl fmt::Display for FaultType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use FaultType::*;
        f.write_str(match self {
            Ag => "A-g",
            Bg => "B-g",
            Cg => "C-g",
            AB => "AB",
            AC => "AC",
            BC => "BC",
            ABg => "AB-g",
            ACg => "AC-g",
            BCg => "BC-g",
            ABC => "ABC",
        })
    }
}

impl FromStr for FaultType {
    type Err = Error;

    /// Accepts `A-g`, `Ag`, `ab-g`, `ABG`, `abc`, ….
    fn from_str(s: &str) -> Result<Self> {
        let norm: String = s
            .chars()
            .filter(|c| !matches!(c, '-' | '_' | ' '))
            .map(|c| c.to_ascii_uppercase())
            .collect();
        let (body, ground) = match norm.strip_suffix('G') {
            Some(b) => (b, true),
            None => (norm.as_str(), false),
        };
        let mut phases = [false; 3];
        for c in body.chars() {
            let k = match c {
                'A' => 0,
                'B' => 1,
                'C' => 2,
                _ => return Err(Error::FaultType(s.to_string())),
            };
            if phases[k] {
                return Err(Error::FaultType(s.to_string()));
            }
            phases[k] = true;
        }
        let count = phases.iter().filter(|&&p| p).count();
        // single-phase faults need ground; ABC-g folds into ABC
        if count == 0 || (count == 1 && !ground) {
            return Err(Error::FaultType(s.to_string()));
        }
        FaultType::from_phases(phases, ground).ok_or_else(|| Error::FaultType(s.to_string()))
    }
}

impl Serialize for FaultType {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for FaultType {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Thévenin equivalents behind both line terminals.
///
/// EMFs are line-to-line RMS in kV; angles in degrees. These defaults are
/// illustrative values, not measured system data.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct SourceParams {
    pub ze1: Complex64,
    pub ze1_zero: Complex64,
    pub ze2: Complex64,
    pub ze2_zero: Complex64,
    pub e1_kv: f64,
    pub e1_deg: f64,
    pub e2_kv: f64,
    pub e2_deg: f64,
}

impl Default for SourceParams {
    fn default() -> Self {
        let ze = Complex64::new(1.0, 10.0);
        Self {
            ze1: ze,
            ze1_zero: 3.0 * ze,
            ze2: ze,
            ze2_zero: 3.0 * ze,
            e1_kv: 500.0,
            e1_deg: 0.0,
            e2_kv: 500.0,
            e2_deg: -10.0,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FaultScenario {
    pub id: String,
    pub fault_type: FaultType,
    /// Distance from terminal A as a fraction of line length.
    pub location_fraction: f64,
    /// Fault instant in fundamental cycles after the record start.
    pub inception_cycles: f64,
    #[serde(default)]
    pub fault_resistance: f64,
    #[serde(default)]
    pub sources: SourceParams,
}

impl FaultScenario {
    pub fn new(fault_type: FaultType, location_fraction: f64, inception_cycles: f64) -> Self {
        let pct = (location_fraction * 100.0).round() as i64;
        Self {
            id: format!("{}{}@{}", fault_type.code(), pct, inception_cycles),
            fault_type,
            location_fraction,
            inception_cycles,
            fault_resistance: 0.0,
            sources: SourceParams::default(),
        }
    }

    pub fn with_id(mut self, id: impl Into<String>) -> Self {
        self.id = id.into();
        self
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |reason: String| {
            Err(Error::InvalidScenario {
                id: self.id.clone(),
                reason,
            })
        };
        if !(self.location_fraction > 0.0 && self.location_fraction < 1.0) {
            return bad(format!(
                "location fraction {} outside (0, 1)",
                self.location_fraction
            ));
        }
        if !(self.inception_cycles >= 0.0) || !self.inception_cycles.is_finite() {
            return bad(format!(
                "inception {} cycles is not a valid instant",
                self.inception_cycles
            ));
        }
        if !(self.fault_resistance >= 0.0) || !self.fault_resistance.is_finite() {
            return bad(format!(
                "fault resistance {} must be ≥ 0",
                self.fault_resistance
            ));
        }
        Ok(())
    }
}

/// `<code><pct>_<position>`, e.g. `Ag25_1`.
pub fn scenario_id(fault_type: FaultType, location_fraction: f64, position: usize) -> String {
    format!(
        "{}{}_{}",
        fault_type.code(),
        (location_fraction * 100.0).round() as i64,
        position
    )
}

pub const PAPER_LOCATIONS: [f64; 3] = [0.25, 0.50, 0.75];
/// Phase-A voltage peak, ⅛ cycle later, and the following zero crossing.
pub const PAPER_INCEPTIONS: [f64; 3] = [4.0, 4.125, 4.25];

/// The 90 bolted faults: every type at 25/50/75 % and at each inception
/// instant, ordered by location, then type, then inception.
pub fn paper_catalog() -> Vec<FaultScenario> {
    let mut out = Vec::with_capacity(90);
    for &m in &PAPER_LOCATIONS {
        for ft in FaultType::ALL {
            for (k, &tf) in PAPER_INCEPTIONS.iter().enumerate() {
                out.push(FaultScenario::new(ft, m, tf).with_id(scenario_id(ft, m, k + 1)));
            }
        }
    }
    out
}
