//! Power-system front end: modal transform, line and fault models, the
//! synthetic record generator, and record file I/O.

pub mod clarke;
pub mod generator;
pub mod line;
pub mod record;
pub mod scenario;

pub use clarke::{clarke, clarke_sample, clarke_series, ModalRecord};
pub use generator::{generate_fault_record, solve_fault_phasors, FaultPhasors, GeneratorSettings};
pub use line::LineModel;
pub use record::{read_record, write_record, ThreePhaseRecord};
pub use scenario::{
    paper_catalog, scenario_id, FaultClass, FaultScenario, FaultType, SourceParams,
};
