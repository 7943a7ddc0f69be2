use thiserror::Error;

/// Errors raised by the state engine and the quantum protocol operations.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum QuantumError {
    #[error("register of {requested} qubits exceeds the {max}-qubit capacity")]
    CapacityExceeded { requested: usize, max: usize },

    #[error("bad target qubits: {0}")]
    BadTargets(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("probability must lie in [0, 1], got {0}")]
    BadProbability(f64),

    #[error("state lies outside the code space (residual weight {0:.3e})")]
    OutsideCodeSpace(f64),

    #[error("post-selection state is orthogonal to the evolved input")]
    OrthogonalPostSelection,

    #[error("statistical verification needs at least {min} trials, got {got}")]
    TooFewTrials { got: u32, min: u32 },

    #[error("shared pair infidelity {infidelity:.3e} exceeds budget {budget:.3e}")]
    PairTooNoisy { infidelity: f64, budget: f64 },

    #[error("operation not allowed in session phase {0}")]
    WrongPhase(&'static str),

    #[error("classical message does not belong to this session")]
    SessionMismatch,

    #[error("not a physical state: {0}")]
    NotPhysical(String),
}

/// Errors raised by minting, wallets and the classical side of the money layer.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MoneyError {
    #[error("unknown denomination {0}: codebook covers powers of ten from 1 to 1000000")]
    UnknownDenomination(u64),

    #[error("serial {0} already present in this wallet")]
    DuplicateSerial(String),

    #[error("authentication tag does not match note metadata")]
    BadTag,

    #[error("note is not live")]
    DeadNote,

    #[error("unknown serial {0}")]
    UnknownSerial(String),

    #[error("durations must be positive")]
    NonPositiveDuration,

    #[error("stored state too degraded for coherent transfer (purity {0:.6})")]
    StateDegraded(f64),
}
