//! Dephasing of two-qubit Ramsey probes coupled to spatially correlated
//! two-mode Gaussian environments, and the frequency-estimation precision
//! that follows from it.
//!
//! The crate is organised bottom-up:
//!
//! - [`env`]: symmetric two-mode Gaussian environments in standard form,
//!   their covariance matrices and Wigner characteristic functions.
//! - [`spectrum`]: Ohmic, discrete-mode and tabulated spectral densities.
//! - [`quadrature`]: adaptive Gauss–Kronrod integration used for continuum
//!   limits of the mode sums.
//! - [`decay`]: the decay factor `γ(t)` for every supported dynamics variant.
//! - [`estimation`]: transition probabilities, Fisher information,
//!   Cramér–Rao uncertainty and optimal interrogation times.
//! - [`scaling`]: sweeps over the probe count, log-log power-law fits and
//!   regime classification.
//!
//! Units: `ħ = 2` for quadratures (vacuum variance 1) and `ω_c⁻¹` for time.

pub mod decay;
pub mod env;
pub mod error;
pub mod estimation;
pub mod quadrature;
pub mod scaling;
pub mod spectrum;

pub use decay::{DecayCurve, DecayModel, DynamicsKind};
pub use env::{CovarianceMatrix, EnvCorrelation, Physicality, Violation};
pub use error::{Error, Result};
pub use estimation::{EstimationResult, OptimumKind, ProbeEnsemble, ProbeState, Strategy};
pub use scaling::{PowerLawFit, Regime, RegimeLabel, ScalingRow, ScalingTable};
pub use spectrum::{Mode, SpectralModel};
