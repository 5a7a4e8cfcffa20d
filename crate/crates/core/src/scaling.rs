//! Precision scaling with the probe count.

use std::fmt;

use crate::decay::{time_grid, DecayModel};
use crate::error::{Error, Result};
use crate::estimation::{min_uncertainty, ProbeEnsemble, Strategy};

/// Default half-width of a regime band around its nominal exponent.
pub const DEFAULT_BAND: f64 = 0.03;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScalingRow {
    pub n: u64,
    pub t_opt: f64,
    pub delta_nu: f64,
    pub gamma_at_opt: f64,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct ScalingTable {
    pub rows: Vec<ScalingRow>,
}

impl ScalingTable {
    pub fn from_rows(rows: Vec<ScalingRow>) -> Result<Self> {
        if rows.windows(2).any(|w| w[1].n <= w[0].n) {
            return Err(Error::domain("scaling table rows must have strictly increasing N"));
        }
        if rows.iter().any(|r| !(r.delta_nu > 0.0 && r.delta_nu.is_finite())) {
            return Err(Error::domain("scaling table uncertainties must be positive"));
        }
        Ok(Self { rows })
    }

    /// Build a table from `(N, δν̄)` pairs only.
    pub fn from_pairs(pairs: &[(u64, f64)]) -> Result<Self> {
        Self::from_rows(
            pairs
                .iter()
                .map(|&(n, delta_nu)| ScalingRow { n, t_opt: f64::NAN, delta_nu, gamma_at_opt: f64::NAN })
                .collect(),
        )
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }
}

/// Integer probe counts log-spaced between `n_min` and `n_max` (inclusive),
/// `per_decade` points per factor of ten, duplicates after rounding removed.
pub fn log_spaced_n(n_min: u64, n_max: u64, per_decade: u32) -> Result<Vec<u64>> {
    if n_min == 0 || n_max <= n_min || per_decade == 0 {
        return Err(Error::domain(format!(
            "need 1 <= n_min < n_max and per_decade > 0, got ({n_min}, {n_max}, {per_decade})"
        )));
    }
    let (lo, hi) = ((n_min as f64).log10(), (n_max as f64).log10());
    let steps = ((hi - lo) * per_decade as f64).round().max(1.0) as usize;
    let mut out: Vec<u64> =
        (0..=steps).map(|i| 10f64.powf(lo + (hi - lo) * i as f64 / steps as f64).round() as u64).collect();
    out[0] = n_min;
    out[steps] = n_max;
    out.dedup();
    Ok(out)
}

/// Minimised uncertainty for each probe count.
pub fn sweep_uncertainty(
    decay: &DecayModel,
    strategy: Strategy,
    n_values: &[u64],
    total_time: f64,
    k: u32,
) -> Result<ScalingTable> {
    if n_values.len() < 2 {
        return Err(Error::domain("a sweep needs at least two probe counts"));
    }
    if n_values.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::domain("probe counts must be strictly increasing"));
    }
    let rows = n_values
        .iter()
        .map(|&n| {
            let row = ProbeEnsemble::new(n, total_time, strategy)
                .and_then(|e| e.with_branch(k))
                .and_then(|e| min_uncertainty(decay, &e))
                .map_err(|source| Error::Sweep { n, source: Box::new(source) })?;
            Ok(ScalingRow { n, t_opt: row.t_opt, delta_nu: row.delta_nu, gamma_at_opt: row.gamma_at_opt })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ScalingTable { rows })
}

/// Least-squares line `ln δν̄ = intercept + slope·ln N`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PowerLawFit {
    pub slope: f64,
    pub intercept: f64,
    /// RMS residual in log space.
    pub residual_rms: f64,
}

pub fn fit_power_law(x: &[f64], y: &[f64]) -> Result<PowerLawFit> {
    if x.len() != y.len() || x.len() < 2 {
        return Err(Error::domain("power-law fit needs at least two paired points"));
    }
    if x.iter().chain(y).any(|v| !(*v > 0.0 && v.is_finite())) {
        return Err(Error::domain("power-law fit needs positive finite values"));
    }
    let lx: Vec<f64> = x.iter().map(|v| v.ln()).collect();
    let ly: Vec<f64> = y.iter().map(|v| v.ln()).collect();
    let n = lx.len() as f64;
    let mx = lx.iter().sum::<f64>() / n;
    let my = ly.iter().sum::<f64>() / n;
    let sxx: f64 = lx.iter().map(|v| (v - mx).powi(2)).sum();
    if sxx == 0.0 {
        return Err(Error::domain("power-law fit needs at least two distinct abscissae"));
    }
    let sxy: f64 = lx.iter().zip(&ly).map(|(a, b)| (a - mx) * (b - my)).sum();
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let ss: f64 = lx.iter().zip(&ly).map(|(a, b)| (b - intercept - slope * a).powi(2)).sum();
    Ok(PowerLawFit { slope, intercept, residual_rms: (ss / n).sqrt() })
}

pub fn fit_scaling_exponent(table: &ScalingTable) -> Result<PowerLawFit> {
    let x: Vec<f64> = table.rows.iter().map(|r| r.n as f64).collect();
    let y: Vec<f64> = table.rows.iter().map(|r| r.delta_nu).collect();
    fit_power_law(&x, &y)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Regime {
    StandardQuantumLimit,
    Zeno,
    SuperZeno,
    Heisenberg,
    Unclassified,
}

impl Regime {
    pub const CLASSIFIED: [Regime; 4] =
        [Regime::StandardQuantumLimit, Regime::Zeno, Regime::SuperZeno, Regime::Heisenberg];

    pub fn nominal_exponent(&self) -> Option<f64> {
        match self {
            Regime::StandardQuantumLimit => Some(-0.5),
            Regime::Zeno => Some(-0.75),
            Regime::SuperZeno => Some(-0.875),
            Regime::Heisenberg => Some(-1.0),
            Regime::Unclassified => None,
        }
    }
}

impl fmt::Display for Regime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Regime::StandardQuantumLimit => "standard quantum limit (N^-1/2)",
            Regime::Zeno => "Zeno (N^-3/4)",
            Regime::SuperZeno => "super-Zeno (N^-7/8)",
            Regime::Heisenberg => "Heisenberg (N^-1)",
            Regime::Unclassified => "unclassified",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RegimeLabel {
    pub regime: Regime,
    pub fitted_slope: f64,
    pub band: f64,
}

/// Nearest nominal exponent within `band` of `slope`.
pub fn classify_regime(slope: f64, band: f64) -> RegimeLabel {
    let regime = Regime::CLASSIFIED
        .iter()
        .filter_map(|r| r.nominal_exponent().map(|e| (*r, (slope - e).abs())))
        .filter(|(_, d)| *d <= band)
        .min_by(|a, b| a.1.total_cmp(&b.1))
        .map_or(Regime::Unclassified, |(r, _)| r);
    RegimeLabel { regime, fitted_slope: slope, band }
}

/// `true` iff `max |γ(t)| ≤ tol` over the grid.
pub fn dfs_check(decay: &DecayModel, t_grid: &[f64], tol: f64) -> Result<bool> {
    if t_grid.is_empty() {
        return Err(Error::domain("decoherence-free check needs a non-empty grid"));
    }
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::domain("decoherence-free tolerance must be positive"));
    }
    for &t in t_grid {
        if decay.gamma(t)?.abs() > tol {
            return Ok(false);
        }
    }
    Ok(true)
}

/// [`dfs_check`] on the default 300-point grid over `[0, 3ω_c⁻¹]`.
pub fn dfs_check_default(decay: &DecayModel, tol: f64) -> Result<bool> {
    let wc = decay.spectrum().omega_c().unwrap_or(1.0);
    dfs_check(decay, &time_grid(3.0 / wc, 300)?, tol)
}
