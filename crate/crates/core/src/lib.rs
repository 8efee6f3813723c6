//! Numerical toolkit for a two-qutrit unitary Yang-Baxter system.
//!
//! The crate builds a 9×9 Hermitian matrix `M` obeying Hecke relations,
//! Yang-Baxterizes it into a unitary, spectral-parameter dependent `R̆`,
//! and checks everything that follows from it:
//!
//! * [`tensor`]: dense complex matrices, Kronecker products, a Hermitian
//!   eigensolver, matrix exponential, partial transpose and trace norm.
//! * [`algebra`]: Gell-Mann matrices, SU(3) structure constants, the three
//!   SU(3) and SU(2) realizations on `C³⊗C³`, the Hecke matrix `M`, and
//!   Hecke/braid residuals.
//! * [`yangbaxter`]: `R̆(θ, φ₁, φ₂)`, Yang-Baxter residuals, the entangled
//!   states `R̆|mn⟩` and their negativity.
//! * [`dynamics`]: the Hamiltonian `H = iħ (∂R̆/∂t) R̆†`, its subsystem
//!   blocks, closed-form spectra and eigenstates, and the orthogonal
//!   block-diagonalization.
//! * [`geometric`]: Berry phases (numeric overlap product and closed form),
//!   the Bloch-sphere angles and spin coherent states.
//! * [`verify`]: the aggregated check suite used by the command-line tool.
//!
//! Internal matrix ordering is lexicographic Kronecker order with qutrit
//! labels ordered `1, 0, −1`; see [`algebra::QutritBasisMap`] for the
//! conversion to the display order `|11⟩,|10⟩,|01⟩,|1−1⟩,…`.

pub mod algebra;
pub mod dynamics;
pub mod geometric;
pub mod report;
pub mod tensor;
pub mod verify;
pub mod yangbaxter;

pub use num_complex::Complex64;
pub use tensor::{ComplexMatrix, EigenSystem};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("matrix is not Hermitian: residual {residual:e} exceeds tolerance {tol:e}")]
    NotHermitian { residual: f64, tol: f64 },
    #[error("bad shape: expected {expected}, found {found}")]
    BadShape { expected: String, found: String },
    #[error("subsystem index {0} out of range 1..=3")]
    BadSubsystem(usize),
    #[error("qutrit label {0} is not one of 1, 0, -1")]
    BadLabel(i32),
    #[error("state is not normalized: norm {norm}")]
    NotNormalized { norm: f64 },
    #[error("degenerate spectrum: |sin θ| = {sin_theta:e} is below threshold")]
    DegenerateSpectrum { sin_theta: f64 },
    #[error("block leakage: off-block norm {norm:e} exceeds tolerance")]
    BlockLeakage { norm: f64 },
    #[error("zero frequency: {0}")]
    ZeroFrequency(&'static str),
    #[error("Berry phase did not converge: step-doubling estimate {estimate:e} at N = {steps}")]
    NotConverged { estimate: f64, steps: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;
