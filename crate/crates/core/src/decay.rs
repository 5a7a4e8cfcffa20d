//! The dephasing decay factor `γ(t)`.
//!
//! Each subenvironment mode `l` is displaced by `β_l`, which depends on the
//! dynamics:
//!
//! - full interaction picture: `β_l = g_l(1 − e^{iω_l t})/ω_l`
//! - no free evolution of the bath: `β_l = −i t g_l`
//!
//! For a symmetric standard-form environment the per-mode contribution is
//!
//! ```text
//! −8a(|β⁽¹⁾|² + |β⁽²⁾|²) − 4c₊(1−θ)(β⁽¹⁾β⁽²⁾ + β⁽¹⁾*β⁽²⁾*)
//!                       + 4c₊(1+θ)(β⁽¹⁾β⁽²⁾* + β⁽¹⁾*β⁽²⁾)
//! ```
//!
//! which is exactly [`BRACKET_PER_LOG_CHI`] times the log characteristic
//! function at displacements `(−2β⁽¹⁾, 2β⁽²⁾)`.
//!
//! The Ohmic closed form
//! `γ = −8(a − θc₊) ln(1 + ω_c²t²) + 2c₊(1 − θ) ln(1 + 4ω_c²t²)`
//! is the reference normalisation for every continuum quantity. Mode sums
//! and quadratures of the bracket are scaled by [`CONTINUUM_CALIBRATION`]
//! so that a continuum of modes reproduces it.

use num_complex::Complex64;

use crate::env::{log_characteristic_unchecked, EnvCorrelation};
use crate::error::{Error, Result};
use crate::quadrature::{self, Options};
use crate::spectrum::{Mode, SpectralModel};

/// Ratio of the per-mode bracket to `ln χ(−2β, 2β)`; exact for every
/// environment and `β`.
pub const BRACKET_PER_LOG_CHI: f64 = 4.0;

/// Factor mapping the continuum limit of the summed bracket onto the Ohmic
/// closed form. Integrating the bracket against `J(ω) = ω e^{−ω/ω_c}` gives
/// `−16(a − θc₊) ln(1 + ω_c²t²) + 4c₊(1 − θ) ln(1 + 4ω_c²t²)`, twice the
/// closed form, so κ = ½.
pub const CONTINUUM_CALIBRATION: f64 = 0.5;

/// Relative step for central finite differences of `γ`.
const FD_REL_STEP: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DynamicsKind {
    FullInteractionPicture,
    NoFreeEvolution,
    ShortTimeExpansion,
    LocalQuadratic,
}

fn check_time(t: f64) -> Result<()> {
    if !t.is_finite() || t < 0.0 {
        return Err(Error::domain(format!("time must be finite and non-negative, got {t}")));
    }
    Ok(())
}

fn check_cutoff(omega_c: f64) -> Result<()> {
    if !omega_c.is_finite() || omega_c <= 0.0 {
        return Err(Error::domain(format!("cutoff frequency must be positive, got {omega_c}")));
    }
    Ok(())
}

/// Mode displacement `β` for real coupling `g`, frequency `omega` and time `t`.
pub fn beta_coefficient(g: f64, omega: f64, t: f64, kind: DynamicsKind) -> Result<Complex64> {
    check_time(t)?;
    match kind {
        DynamicsKind::FullInteractionPicture => {
            if !(omega.is_finite() && omega > 0.0) {
                return Err(Error::domain(format!(
                    "mode frequency must be positive under the full dynamics, got {omega}"
                )));
            }
            // 1 − e^{iωt} = 2 sin²(ωt/2) − i sin(ωt)
            let half = 0.5 * omega * t;
            Ok(Complex64::new(2.0 * g * half.sin().powi(2) / omega, -g * (omega * t).sin() / omega))
        }
        DynamicsKind::NoFreeEvolution => Ok(Complex64::new(0.0, -t * g)),
        other => Err(Error::domain(format!("{other:?} has no mode-level displacement"))),
    }
}

/// Per-mode bracket for displacements `β⁽¹⁾`, `β⁽²⁾` of the two
/// subenvironments.
pub fn mode_bracket(env: &EnvCorrelation, beta1: Complex64, beta2: Complex64) -> f64 {
    let (a, cp, th) = (env.a(), env.c_plus(), env.theta());
    let same = beta1 * beta2 + beta1.conj() * beta2.conj();
    let cross = beta1 * beta2.conj() + beta1.conj() * beta2;
    -8.0 * a * (beta1.norm_sqr() + beta2.norm_sqr()) - 4.0 * cp * (1.0 - th) * same.re
        + 4.0 * cp * (1.0 + th) * cross.re
}

fn discrete_modes(spectrum: &SpectralModel) -> Result<&[Mode]> {
    match spectrum {
        SpectralModel::DiscreteModes(m) if !m.is_empty() => Ok(m),
        SpectralModel::DiscreteModes(_) => Err(Error::domain("discrete mode list is empty")),
        _ => Err(Error::domain("a discrete mode list is required")),
    }
}

/// Uncalibrated sum of the per-mode bracket over a discrete mode list, with
/// both subenvironments sharing the same modes.
pub fn gamma_discrete(env: &EnvCorrelation, spectrum: &SpectralModel, t: f64, kind: DynamicsKind) -> Result<f64> {
    check_time(t)?;
    let modes = discrete_modes(spectrum)?;
    modes.iter().try_fold(0.0, |acc, m| {
        let beta = beta_coefficient(m.g, m.omega, t, kind)?;
        Ok(acc + mode_bracket(env, beta, beta))
    })
}

/// Ohmic continuum decay factor in closed form.
pub fn gamma_ohmic_closed(env: &EnvCorrelation, omega_c: f64, t: f64) -> Result<f64> {
    check_time(t)?;
    check_cutoff(omega_c)?;
    let x = (omega_c * t).powi(2);
    let (a, cp, th) = (env.a(), env.c_plus(), env.theta());
    Ok(-8.0 * (a - th * cp) * x.ln_1p() + 2.0 * cp * (1.0 - th) * (4.0 * x).ln_1p())
}

fn gamma_ohmic_closed_derivative(env: &EnvCorrelation, omega_c: f64, t: f64) -> f64 {
    let w2 = omega_c * omega_c;
    let x = w2 * t * t;
    let (a, cp, th) = (env.a(), env.c_plus(), env.theta());
    -16.0 * (a - th * cp) * w2 * t / (1.0 + x) + 16.0 * cp * (1.0 - th) * w2 * t / (1.0 + 4.0 * x)
}

/// Fourth-order short-time expansion of the Ohmic closed form:
/// `−8a(1 − c₊/a)ω_c²t² + 4a(1 − (4 − 3θ)c₊/a)ω_c⁴t⁴`.
pub fn gamma_short_time(env: &EnvCorrelation, omega_c: f64, t: f64) -> Result<f64> {
    let (quad, quart) = short_time_terms(env, omega_c, t)?;
    Ok(quad + quart)
}

/// Quadratic and quartic parts of [`gamma_short_time`], separately.
pub fn short_time_terms(env: &EnvCorrelation, omega_c: f64, t: f64) -> Result<(f64, f64)> {
    check_time(t)?;
    check_cutoff(omega_c)?;
    let x = (omega_c * t).powi(2);
    let (a, cp, th) = (env.a(), env.c_plus(), env.theta());
    Ok((-8.0 * (a - cp) * x, 4.0 * (a - (4.0 - 3.0 * th) * cp) * x * x))
}

/// Uncorrelated short-time limit `−8a ω_c² t²`.
pub fn gamma_local(a: f64, omega_c: f64, t: f64) -> Result<f64> {
    check_time(t)?;
    check_cutoff(omega_c)?;
    Ok(-8.0 * a * (omega_c * t).powi(2))
}

/// Ohmic decay factor when the free evolution of the bath is neglected:
/// `−8a(1 − c₊/a) ω_c² t²`, identically zero for `c₊ = a`.
pub fn gamma_no_free_evolution(env: &EnvCorrelation, omega_c: f64, t: f64) -> Result<f64> {
    check_time(t)?;
    check_cutoff(omega_c)?;
    Ok(-8.0 * (env.a() - env.c_plus()) * (omega_c * t).powi(2))
}

fn quadrature_options() -> Options {
    Options { panel_tol: 1e-10, ..Options::default() }
}

/// Upper integration limit for Ohmic integrands.
fn ohmic_window(omega_c: f64, t: f64) -> f64 {
    if t > 0.0 {
        (50.0 * omega_c).max(50.0 / t)
    } else {
        50.0 * omega_c
    }
}

/// `∫₀^∞ e^{−ω/ω_c} (2 − 2cos ωt)/ω dω` by adaptive quadrature. Its exact
/// value is `ln(1 + ω_c²t²)`.
pub fn ohmic_dephasing_integral(omega_c: f64, t: f64) -> Result<f64> {
    check_time(t)?;
    check_cutoff(omega_c)?;
    if t == 0.0 {
        return Ok(0.0);
    }
    let integrand = |w: f64| {
        if w <= 0.0 {
            return 0.0;
        }
        4.0 * (0.5 * w * t).sin().powi(2) * (-w / omega_c).exp() / w
    };
    Ok(quadrature::integrate(integrand, 0.0, ohmic_window(omega_c, t), quadrature_options())?.value)
}

/// Calibrated continuum decay factor: the bracket integrated against a
/// continuous spectral density, times [`CONTINUUM_CALIBRATION`].
pub fn gamma_quadrature(env: &EnvCorrelation, spectrum: &SpectralModel, t: f64, kind: DynamicsKind) -> Result<f64> {
    check_time(t)?;
    if !matches!(kind, DynamicsKind::FullInteractionPicture | DynamicsKind::NoFreeEvolution) {
        return Err(Error::domain(format!("{kind:?} has no continuum integrand")));
    }
    if t == 0.0 {
        return Ok(0.0);
    }
    let integrand = |w: f64| {
        if w <= 0.0 {
            return 0.0;
        }
        let j = spectrum.density(w).unwrap_or(0.0);
        if j == 0.0 {
            return 0.0;
        }
        let beta = beta_coefficient(1.0, w, t, kind).unwrap_or_default();
        j * mode_bracket(env, beta, beta)
    };
    let opts = quadrature_options();
    let integral = match spectrum {
        SpectralModel::Ohmic { omega_c } => {
            quadrature::integrate(integrand, 0.0, ohmic_window(*omega_c, t), opts)?.value
        }
        SpectralModel::Tabulated { omega, .. } => {
            let mut total = 0.0;
            for w in omega.windows(2) {
                total += quadrature::integrate(integrand, w[0], w[1], opts)?.value;
            }
            total
        }
        SpectralModel::DiscreteModes(_) => return Err(Error::domain("quadrature needs a continuous spectral density")),
    };
    Ok(CONTINUUM_CALIBRATION * integral)
}

/// Decay exponent `γ_{n₁n₂n₁′n₂′}` for qubit basis indices in `{0, 1}`,
/// from the characteristic function at `(2(n₁ − n₁′)β, 2(n₂ − n₂′)β)` and
/// scaled like [`gamma_discrete`].
#[allow(clippy::too_many_arguments)]
pub fn gamma_general(
    n1: u8,
    n2: u8,
    n1p: u8,
    n2p: u8,
    env: &EnvCorrelation,
    spectrum: &SpectralModel,
    t: f64,
    kind: DynamicsKind,
) -> Result<f64> {
    if [n1, n2, n1p, n2p].iter().any(|n| *n > 1) {
        return Err(Error::domain(format!("basis indices must be 0 or 1, got ({n1}, {n2}, {n1p}, {n2p})")));
    }
    check_time(t)?;
    let modes = discrete_modes(spectrum)?;
    let cov = env.standard_form_matrix();
    let d1 = 2.0 * (n1 as f64 - n1p as f64);
    let d2 = 2.0 * (n2 as f64 - n2p as f64);
    modes.iter().try_fold(0.0, |acc, m| {
        let beta = beta_coefficient(m.g, m.omega, t, kind)?;
        Ok(acc + BRACKET_PER_LOG_CHI * log_characteristic_unchecked(&cov, beta * d1, beta * d2))
    })
}

/// All sixteen `γ_{n₁n₂n₁′n₂′}`, rows indexed by `2n₁ + n₂` and columns by
/// `2n₁′ + n₂′`.
pub fn gamma_matrix(
    env: &EnvCorrelation,
    spectrum: &SpectralModel,
    t: f64,
    kind: DynamicsKind,
) -> Result<[[f64; 4]; 4]> {
    let mut out = [[0.0; 4]; 4];
    for (row, out_row) in out.iter_mut().enumerate() {
        for (col, cell) in out_row.iter_mut().enumerate() {
            let (n1, n2) = ((row >> 1) as u8, (row & 1) as u8);
            let (n1p, n2p) = ((col >> 1) as u8, (col & 1) as u8);
            *cell = gamma_general(n1, n2, n1p, n2p, env, spectrum, t, kind)?;
        }
    }
    Ok(out)
}

/// Uniform grid of `steps` points on `[0, t_max]`.
pub fn time_grid(t_max: f64, steps: usize) -> Result<Vec<f64>> {
    if !(t_max.is_finite() && t_max > 0.0) {
        return Err(Error::domain(format!("t_max must be positive, got {t_max}")));
    }
    match steps {
        0 => Err(Error::domain("time grid needs at least one point")),
        1 => Ok(vec![0.0]),
        _ => Ok((0..steps).map(|i| t_max * i as f64 / (steps - 1) as f64).collect()),
    }
}

/// A decay-factor evaluator: dynamics variant plus environment and spectrum.
#[derive(Debug, Clone, PartialEq)]
pub struct DecayModel {
    kind: DynamicsKind,
    env: EnvCorrelation,
    spectrum: SpectralModel,
}

impl DecayModel {
    pub fn new(kind: DynamicsKind, env: EnvCorrelation, spectrum: SpectralModel) -> Result<Self> {
        match kind {
            DynamicsKind::ShortTimeExpansion | DynamicsKind::LocalQuadratic if spectrum.omega_c().is_none() => {
                return Err(Error::domain(format!("{kind:?} is only defined for an Ohmic spectrum")));
            }
            DynamicsKind::LocalQuadratic if env.c_plus() != 0.0 => {
                return Err(Error::domain("the local quadratic limit describes uncorrelated environments (c+ = 0)"));
            }
            _ => {}
        }
        Ok(Self { kind, env, spectrum })
    }

    pub fn ohmic(kind: DynamicsKind, env: EnvCorrelation, omega_c: f64) -> Result<Self> {
        Self::new(kind, env, SpectralModel::ohmic(omega_c)?)
    }

    /// Local quadratic model for an uncorrelated environment with variance `a`.
    pub fn local(a: f64, omega_c: f64) -> Result<Self> {
        Self::ohmic(DynamicsKind::LocalQuadratic, EnvCorrelation::uncorrelated(a)?, omega_c)
    }

    pub fn kind(&self) -> DynamicsKind {
        self.kind
    }

    pub fn env(&self) -> &EnvCorrelation {
        &self.env
    }

    pub fn spectrum(&self) -> &SpectralModel {
        &self.spectrum
    }

    /// Times beyond which the short-time expansion is not trusted.
    pub fn validity_limit(&self) -> Option<f64> {
        match (self.kind, self.spectrum.omega_c()) {
            (DynamicsKind::ShortTimeExpansion, Some(wc)) => Some(1.0 / wc),
            _ => None,
        }
    }

    pub fn gamma(&self, t: f64) -> Result<f64> {
        use DynamicsKind::*;
        match (self.kind, &self.spectrum) {
            (FullInteractionPicture, SpectralModel::Ohmic { omega_c }) => gamma_ohmic_closed(&self.env, *omega_c, t),
            (NoFreeEvolution, SpectralModel::Ohmic { omega_c }) => gamma_no_free_evolution(&self.env, *omega_c, t),
            (FullInteractionPicture | NoFreeEvolution, SpectralModel::DiscreteModes(_)) => {
                Ok(CONTINUUM_CALIBRATION * gamma_discrete(&self.env, &self.spectrum, t, self.kind)?)
            }
            (FullInteractionPicture | NoFreeEvolution, SpectralModel::Tabulated { .. }) => {
                gamma_quadrature(&self.env, &self.spectrum, t, self.kind)
            }
            (ShortTimeExpansion, SpectralModel::Ohmic { omega_c }) => gamma_short_time(&self.env, *omega_c, t),
            (LocalQuadratic, SpectralModel::Ohmic { omega_c }) => gamma_local(self.env.a(), *omega_c, t),
            (kind, _) => Err(Error::domain(format!("{kind:?} needs an Ohmic spectrum"))),
        }
    }

    /// `∂γ/∂t`: analytic for the Ohmic closed forms, central differences
    /// with step `10⁻⁶ t` otherwise.
    pub fn gamma_derivative(&self, t: f64) -> Result<f64> {
        check_time(t)?;
        use DynamicsKind::*;
        let (env, kind) = (&self.env, self.kind);
        if let Some(wc) = self.spectrum.omega_c() {
            let w2 = wc * wc;
            let (a, cp, th) = (env.a(), env.c_plus(), env.theta());
            return Ok(match kind {
                FullInteractionPicture => gamma_ohmic_closed_derivative(env, wc, t),
                NoFreeEvolution => -16.0 * (a - cp) * w2 * t,
                ShortTimeExpansion => {
                    -16.0 * (a - cp) * w2 * t + 16.0 * (a - (4.0 - 3.0 * th) * cp) * w2 * w2 * t.powi(3)
                }
                LocalQuadratic => -16.0 * a * w2 * t,
            });
        }
        if t == 0.0 {
            // β is O(t) for both mode-level dynamics, so γ is O(t²).
            return Ok(0.0);
        }
        let h = FD_REL_STEP * t;
        Ok((self.gamma(t + h)? - self.gamma(t - h)?) / (2.0 * h))
    }

    pub fn curve(&self, times: &[f64]) -> Result<DecayCurve> {
        if let (Some(limit), Some(t_last)) = (self.validity_limit(), times.iter().copied().reduce(f64::max)) {
            if t_last > limit {
                log::warn!("short-time expansion evaluated up to t = {t_last}, beyond its validity limit {limit}");
            }
        }
        let gamma = times.iter().map(|&t| self.gamma(t)).collect::<Result<Vec<_>>>()?;
        let coherence = gamma.iter().map(|g| g.exp()).collect();
        Ok(DecayCurve { times: times.to_vec(), gamma, coherence })
    }
}

/// Sampled `γ(t)` together with the coherence factor `e^{γ(t)}`.
#[derive(Debug, Clone, PartialEq)]
pub struct DecayCurve {
    pub times: Vec<f64>,
    pub gamma: Vec<f64>,
    pub coherence: Vec<f64>,
}
