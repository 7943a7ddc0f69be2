//! Exact simulation of a quantum-money system at desk scale.
//!
//! The engine half of this crate ([`state`], [`gates`], [`density`],
//! [`channel`], [`dfs`]) is a dense state-vector / density-matrix simulator
//! for registers of up to eight qubits, with noise channels in Kraus form and
//! a decoherence-free-subspace code for two-qubit banknote storage.
//!
//! The protocol half ([`mint`], [`wallet`], [`verify`], [`teleport`]) builds
//! the banknote lifecycle on top of it: serial-numbered notes with
//! authenticated classical metadata, wallets with a coherence clock and
//! classical token counters, non-destructive and entanglement-based
//! verification including CHSH tests, and the full teleportation protocol as
//! a message-driven state machine.
//!
//! All randomness flows through [`rng::SeededRng`]; given the same seed every
//! operation sequence reproduces bit-identical results.

pub mod channel;
pub mod density;
pub mod dfs;
pub mod error;
pub mod gates;
pub mod mint;
pub mod rng;
pub mod state;
pub mod teleport;
pub mod verify;
pub mod wallet;

pub use channel::Channel;
pub use density::DensityMatrix;
pub use dfs::LogicalQubit;
pub use error::{MoneyError, QuantumError};
pub use gates::Gate;
pub use mint::{Banknote, MintAuthority, NoteStatus, Serial};
pub use rng::SeededRng;
pub use state::{BellKind, PureState, MAX_QUBITS, NORM_TOL, PHASE_TOL};
pub use teleport::{ClassicalMessage, SessionPhase, TeleportSession};
pub use verify::{Observable, VerifyMode, VerifyResult, Verdict};
pub use wallet::{ClassicalToken, Feasibility, Wallet};
