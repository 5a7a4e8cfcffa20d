//! Ramsey frequency estimation under dephasing.
//!
//! A probe accumulates the relative phase `ε̄ = ν̄ − (ν_L1 − ν_L2)` with fixed
//! laser frequencies, so `∂ε̄/∂ν̄ = 1`. The measured quantity is the
//! probability `p` of finding the probe back in its initial superposition:
//!
//! ```text
//! p = (1 + e^{Mγ(t)} cos(M ε̄ t)) / 2
//! ```
//!
//! with `M = 1` for a single probe of a product ensemble and `M = N` for the
//! parity readout of an `N`-probe GHZ state. The Fisher information is
//! `F = |∂p/∂ν̄|²/(p(1 − p))` and the Cramér–Rao uncertainty for a budget
//! `T` split into shots of length `t` is `(δν̄)² = 1/((T/t)·F_total)`.

use std::f64::consts::PI;
use std::fmt;

use num_complex::Complex64;

use crate::decay::DecayModel;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Strategy {
    UncorrelatedProduct,
    MaximallyEntangled,
}

/// `N` probes sharing a total interrogation budget `T`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProbeEnsemble {
    n: u64,
    total_time: f64,
    strategy: Strategy,
    k: u32,
}

impl ProbeEnsemble {
    pub fn new(n: u64, total_time: f64, strategy: Strategy) -> Result<Self> {
        if n == 0 {
            return Err(Error::domain("probe count must be at least 1"));
        }
        if !(total_time.is_finite() && total_time > 0.0) {
            return Err(Error::domain(format!("total time must be positive, got {total_time}")));
        }
        Ok(Self { n, total_time, strategy, k: 1 })
    }

    /// Select the odd phase branch `k` used by [`optimal_phase`].
    pub fn with_branch(mut self, k: u32) -> Result<Self> {
        if k.is_multiple_of(2) {
            return Err(Error::domain(format!("phase branch k must be odd, got {k}")));
        }
        self.k = k;
        Ok(self)
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn total_time(&self) -> f64 {
        self.total_time
    }

    pub fn strategy(&self) -> Strategy {
        self.strategy
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// Phase and decay multiplier `M` of the readout signal.
    pub fn multiplier(&self) -> f64 {
        match self.strategy {
            Strategy::UncorrelatedProduct => 1.0,
            Strategy::MaximallyEntangled => self.n as f64,
        }
    }
}

/// Reduced two-level state of one probe in the `{|01⟩, |10⟩}` basis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProbeState {
    pub populations: [f64; 2],
    /// `⟨0|ρ|1⟩ = e^{iε̄t + γ}/2`.
    pub coherence: Complex64,
}

impl ProbeState {
    pub fn trace(&self) -> f64 {
        self.populations[0] + self.populations[1]
    }

    /// Row-major density matrix.
    pub fn density_matrix(&self) -> [[Complex64; 2]; 2] {
        [
            [Complex64::new(self.populations[0], 0.0), self.coherence],
            [self.coherence.conj(), Complex64::new(self.populations[1], 0.0)],
        ]
    }
}

fn check_gamma(gamma: f64) -> Result<()> {
    if gamma.is_nan() || gamma > 0.0 {
        return Err(Error::domain(format!("decay factor must be <= 0, got {gamma}")));
    }
    Ok(())
}

fn check_time(t: f64) -> Result<()> {
    if !t.is_finite() || t < 0.0 {
        return Err(Error::domain(format!("time must be finite and non-negative, got {t}")));
    }
    Ok(())
}

pub fn probe_state(eps_bar: f64, t: f64, gamma: f64) -> Result<ProbeState> {
    check_time(t)?;
    check_gamma(gamma)?;
    let coherence = Complex64::from_polar(0.5 * gamma.exp(), eps_bar * t);
    Ok(ProbeState { populations: [0.5, 0.5], coherence })
}

pub fn transition_probability(eps_bar: f64, t: f64, gamma: f64, ensemble: &ProbeEnsemble) -> Result<f64> {
    check_time(t)?;
    check_gamma(gamma)?;
    let m = ensemble.multiplier();
    Ok(0.5 * (1.0 + (m * gamma).exp() * (m * eps_bar * t).cos()))
}

/// Fisher information of one readout: a single probe for the product
/// strategy, the whole GHZ state for the entangled one.
pub fn fisher_information(eps_bar: f64, t: f64, gamma: f64, ensemble: &ProbeEnsemble) -> Result<f64> {
    check_time(t)?;
    check_gamma(gamma)?;
    let m = ensemble.multiplier();
    let decay2 = (2.0 * m * gamma).exp();
    let phase = m * eps_bar * t;
    let denom = 1.0 - decay2 * phase.cos().powi(2);
    if denom <= 0.0 {
        return Err(Error::Singular { p: transition_probability(eps_bar, t, gamma, ensemble)? });
    }
    Ok(m * m * t * t * decay2 * phase.sin().powi(2) / denom)
}

/// Cramér–Rao bound `(δν̄)²` for shots of length `t` within the budget.
pub fn uncertainty_squared(eps_bar: f64, t: f64, gamma: f64, ensemble: &ProbeEnsemble) -> Result<f64> {
    if !(t.is_finite() && t > 0.0) {
        return Err(Error::domain(format!("interrogation time must be positive, got {t}")));
    }
    if t > ensemble.total_time() {
        return Err(Error::Budget { t, budget: ensemble.total_time() });
    }
    let per_readout = fisher_information(eps_bar, t, gamma, ensemble)?;
    let total = match ensemble.strategy() {
        Strategy::UncorrelatedProduct => ensemble.n() as f64 * per_readout,
        Strategy::MaximallyEntangled => per_readout,
    };
    if total <= 0.0 {
        return Err(Error::Singular { p: transition_probability(eps_bar, t, gamma, ensemble)? });
    }
    Ok(1.0 / ((ensemble.total_time() / t) * total))
}

/// Phase rate putting the accumulated phase `Mε̄t` on the odd multiple
/// `kπ/2`.
pub fn optimal_phase(t_opt: f64, ensemble: &ProbeEnsemble) -> Result<f64> {
    if !(t_opt.is_finite() && t_opt > 0.0) {
        return Err(Error::domain(format!("optimal time must be positive, got {t_opt}")));
    }
    if ensemble.k().is_multiple_of(2) {
        return Err(Error::domain(format!("phase branch k must be odd, got {}", ensemble.k())));
    }
    Ok(ensemble.k() as f64 * PI / (2.0 * ensemble.multiplier() * t_opt))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OptimumKind {
    /// Interior root of `1 + 2Mtγ′(t) = 0`.
    Interior,
    /// `γ ≡ 0`: no root, the whole budget goes into one shot.
    DecoherenceFree,
}

impl fmt::Display for OptimumKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OptimumKind::Interior => f.write_str("interior optimum"),
            OptimumKind::DecoherenceFree => f.write_str("decoherence-free"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OptimalTime {
    pub t: f64,
    pub kind: OptimumKind,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EstimationResult {
    pub t_opt: f64,
    pub eps_bar: f64,
    /// Minimised `√((δν̄)²)`.
    pub delta_nu: f64,
    pub fisher: f64,
    pub gamma_at_opt: f64,
    pub regime_note: OptimumKind,
}

const BRACKET_START: f64 = 1e-12;
const DFS_TOL: f64 = 1e-12;

/// Optimal shot length: the positive root of `1 + 2Mt·γ′(t) = 0`.
///
/// The upper bracket end starts at 1 and doubles up to the budget `T`; the
/// root is then refined by bisection to machine precision. When no sign
/// change exists and `γ` vanishes on the searched range, the budget itself
/// is returned as a decoherence-free optimum.
pub fn optimal_time(decay: &DecayModel, ensemble: &ProbeEnsemble) -> Result<OptimalTime> {
    let m = ensemble.multiplier();
    let t_cap = ensemble.total_time();
    let condition = |t: f64| -> Result<f64> { Ok(1.0 + 2.0 * m * t * decay.gamma_derivative(t)?) };

    let mut lo = BRACKET_START.min(t_cap);
    let f_lo = condition(lo)?;
    if f_lo <= 0.0 {
        return Err(Error::Solver(format!("optimality condition already non-positive ({f_lo:.3e}) at t = {lo:.3e}")));
    }
    let mut hi = 1.0_f64.min(t_cap);
    let mut f_hi = condition(hi)?;
    while f_hi > 0.0 && hi < t_cap {
        lo = hi;
        hi = (2.0 * hi).min(t_cap);
        f_hi = condition(hi)?;
    }
    if f_hi > 0.0 {
        let probes = 256;
        let mut max_gamma = 0.0_f64;
        for i in 1..=probes {
            let t = t_cap * i as f64 / probes as f64;
            max_gamma = max_gamma.max(decay.gamma(t)?.abs());
        }
        if max_gamma <= DFS_TOL {
            return Ok(OptimalTime { t: t_cap, kind: OptimumKind::DecoherenceFree });
        }
        return Err(Error::Solver(format!(
            "no sign change of 1 + 2Mt*gamma'(t) on [{BRACKET_START:e}, {t_cap}]: \
             f({t_cap}) = {f_hi:.6e}, max |gamma| = {max_gamma:.3e}"
        )));
    }

    for _ in 0..400 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if condition(mid)? > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let t = 0.5 * (lo + hi);
    if let Some(limit) = decay.validity_limit() {
        if t > limit {
            log::warn!("optimal time {t} lies beyond the short-time validity limit {limit}");
        }
    }
    Ok(OptimalTime { t, kind: OptimumKind::Interior })
}

/// Optimal time, phase and the resulting minimal uncertainty.
pub fn min_uncertainty(decay: &DecayModel, ensemble: &ProbeEnsemble) -> Result<EstimationResult> {
    let opt = optimal_time(decay, ensemble)?;
    let t = opt.t;
    let eps_bar = optimal_phase(t, ensemble)?;
    let gamma = decay.gamma(t)?;
    let fisher = fisher_information(eps_bar, t, gamma, ensemble)?;
    let var = uncertainty_squared(eps_bar, t, gamma, ensemble)?;
    Ok(EstimationResult { t_opt: t, eps_bar, delta_nu: var.sqrt(), fisher, gamma_at_opt: gamma, regime_note: opt.kind })
}
