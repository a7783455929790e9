use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("nu must be odd, got {0}")]
    EvenOrder(usize),
    #[error("alpha must be > 0, got {0}")]
    NonPositiveAlpha(f64),
    #[error("alpha must be > -1/2 for polynomial evaluation, got {0}")]
    AlphaBelowDomain(f64),
    #[error("alpha {alpha} exceeds the supported limit {limit}")]
    AlphaOutOfRange { alpha: f64, limit: f64 },
    #[error("polynomial argument z = {0} lies outside [-1, 1]")]
    ArgumentOutOfDomain(f64),
    #[error("filter length must be even (nu odd), got {0} taps")]
    OddFilterLength(usize),
    #[error("filter has no coefficients")]
    EmptyFilter,
    #[error("frequency grid of {0} points is below the minimum of 64")]
    GridTooSmall(usize),
    #[error("magnitude never crosses 1/sqrt(2) on the {0} side")]
    NoCrossing(&'static str),
    #[error("root finder failed: residual {residual:e} exceeds {tolerance:e}")]
    RootResidual { residual: f64, tolerance: f64 },
    #[error("transfer polynomial has degree 0")]
    ConstantPolynomial,
    #[error("cascade iterations must lie in 1..=12, got {0}")]
    CascadeIterations(usize),
    #[error("input of {len} samples is shorter than the {min}-tap filter")]
    InputTooShort { len: usize, min: usize },
    #[error("{levels} decomposition levels need at least {needed} samples, got {len}")]
    LevelsTooDeep {
        levels: usize,
        len: usize,
        needed: usize,
    },
    #[error("decomposition level must be at least 1, got {0}")]
    ZeroLevels(usize),
    #[error("band table level {0} outside 1..=30")]
    BandLevel(usize),
    #[error("sample rate must be positive, got {0}")]
    SampleRate(f64),
    #[error("invalid scenario {id}: {reason}")]
    InvalidScenario { id: String, reason: String },
    #[error("invalid line model: {0}")]
    InvalidLine(String),
    #[error("fault network for scenario {0} is singular")]
    SingularNetwork(String),
    #[error("channel lengths differ: {0:?}")]
    ChannelLengths([usize; 6]),
    #[error("pre-fault window of {available} samples is shorter than one cycle ({needed})")]
    CalibrationWindow { available: usize, needed: usize },
    #[error("no faulted phase identified")]
    NoFaultedPhase,
    #[error("fault was not detected")]
    NotDetected,
    #[error("phasor window of {window} samples exceeds the {len}-sample input")]
    WindowTooLong { window: usize, len: usize },
    #[error("scenario catalog is empty")]
    EmptyCatalog,
    #[error("invalid filter spec {spec:?}: {reason}")]
    FilterSpec { spec: String, reason: String },
    #[error("unknown fault type {0:?}")]
    FaultType(String),
    #[error(transparent)]
    Record(#[from] RecordError),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// Failures while reading a waveform record.
#[derive(Debug, Error)]
pub enum RecordError {
    #[error("expected header t_s,va,vb,vc,ia,ib,ic, found {0:?}")]
    Header(String),
    #[error("line {line}: malformed row ({reason})")]
    MalformedRow { line: usize, reason: String },
    #[error("line {line}: time step {found:e} s differs from {expected:e} s")]
    NonUniformStep {
        line: usize,
        expected: f64,
        found: f64,
    },
    #[error("line {line}: time column not increasing")]
    NonMonotone { line: usize },
    #[error("record has {samples} samples, at least {min} (2 cycles) required")]
    TooShort { samples: usize, min: usize },
    #[error(transparent)]
    Csv(#[from] csv::Error),
}
