//! Spectral densities of the bosonic subenvironments.
//!
//! Both subenvironments share one spectrum, so a single model serves both
//! qubits and `β⁽¹⁾_l = β⁽²⁾_l` mode by mode.

use crate::error::{Error, Result};

/// One discrete bath mode with real coupling `g` and frequency `omega`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Mode {
    pub g: f64,
    pub omega: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub enum SpectralModel {
    /// `J(ω) = ω·exp(−ω/ω_c)`.
    Ohmic {
        omega_c: f64,
    },
    DiscreteModes(Vec<Mode>),
    /// Samples `(ω_i, J_i)` on a strictly increasing grid, linearly
    /// interpolated and zero outside the grid.
    Tabulated {
        omega: Vec<f64>,
        density: Vec<f64>,
    },
}

impl SpectralModel {
    pub fn ohmic(omega_c: f64) -> Result<Self> {
        if !(omega_c.is_finite() && omega_c > 0.0) {
            return Err(Error::domain(format!("cutoff frequency must be positive, got {omega_c}")));
        }
        Ok(SpectralModel::Ohmic { omega_c })
    }

    pub fn discrete(modes: Vec<Mode>) -> Result<Self> {
        if modes.is_empty() {
            return Err(Error::domain("discrete mode list is empty"));
        }
        for (i, m) in modes.iter().enumerate() {
            if !(m.g.is_finite() && m.omega.is_finite()) {
                return Err(Error::domain(format!("mode {i} is not finite")));
            }
            if m.g < 0.0 {
                return Err(Error::domain(format!("mode {i} has negative coupling {}", m.g)));
            }
            if m.omega <= 0.0 {
                return Err(Error::domain(format!("mode {i} has non-positive frequency {}", m.omega)));
            }
        }
        Ok(SpectralModel::DiscreteModes(modes))
    }

    pub fn tabulated(omega: Vec<f64>, density: Vec<f64>) -> Result<Self> {
        if omega.len() != density.len() {
            return Err(Error::domain(format!(
                "tabulated spectrum has {} frequencies but {} density values",
                omega.len(),
                density.len()
            )));
        }
        if omega.len() < 2 {
            return Err(Error::domain("tabulated spectrum needs at least two samples"));
        }
        if omega.iter().chain(density.iter()).any(|x| !x.is_finite()) {
            return Err(Error::domain("tabulated spectrum contains non-finite values"));
        }
        if omega[0] < 0.0 {
            return Err(Error::domain("tabulated frequencies must be non-negative"));
        }
        if omega.windows(2).any(|w| w[1] <= w[0]) {
            return Err(Error::domain("tabulated frequencies must be strictly increasing"));
        }
        if let Some(j) = density.iter().find(|j| **j < 0.0) {
            return Err(Error::domain(format!("tabulated density is negative ({j})")));
        }
        Ok(SpectralModel::Tabulated { omega, density })
    }

    /// Spectral density at `omega`. Discrete spectra have no density and
    /// return `None`.
    pub fn density(&self, omega: f64) -> Option<f64> {
        match self {
            SpectralModel::Ohmic { omega_c } => Some(if omega <= 0.0 { 0.0 } else { omega * (-omega / omega_c).exp() }),
            SpectralModel::DiscreteModes(_) => None,
            SpectralModel::Tabulated { omega: grid, density } => {
                if omega < grid[0] || omega > grid[grid.len() - 1] {
                    return Some(0.0);
                }
                let i = grid.partition_point(|w| *w <= omega).clamp(1, grid.len() - 1);
                let (w0, w1) = (grid[i - 1], grid[i]);
                let s = (omega - w0) / (w1 - w0);
                Some(density[i - 1] + s * (density[i] - density[i - 1]))
            }
        }
    }

    pub fn omega_c(&self) -> Option<f64> {
        match self {
            SpectralModel::Ohmic { omega_c } => Some(*omega_c),
            _ => None,
        }
    }

    /// Discretize a continuous density with the midpoint rule on `n` bins
    /// over `[0, omega_max]`: `g_l² = J(ω_l)·Δω`.
    pub fn discretize(&self, omega_max: f64, n: usize) -> Result<SpectralModel> {
        if matches!(self, SpectralModel::DiscreteModes(_)) {
            return Err(Error::domain("spectrum is already discrete"));
        }
        if n == 0 || omega_max.is_nan() || omega_max <= 0.0 {
            return Err(Error::domain("discretization needs n > 0 and omega_max > 0"));
        }
        let dw = omega_max / n as f64;
        let modes = (0..n)
            .map(|l| {
                let omega = (l as f64 + 0.5) * dw;
                let j = self.density(omega).unwrap_or(0.0);
                Mode { g: (j * dw).sqrt(), omega }
            })
            .collect();
        SpectralModel::discrete(modes)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ohmic_density() {
        let s = SpectralModel::ohmic(2.0).unwrap();
        assert_eq!(s.density(0.0), Some(0.0));
        assert!((s.density(2.0).unwrap() - 2.0 * (-1f64).exp()).abs() < 1e-15);
        assert!(SpectralModel::ohmic(0.0).is_err());
        assert!(SpectralModel::ohmic(-1.0).is_err());
    }

    #[test]
    fn discrete_validation() {
        assert!(SpectralModel::discrete(vec![]).is_err());
        assert!(SpectralModel::discrete(vec![Mode { g: 1.0, omega: 0.0 }]).is_err());
        assert!(SpectralModel::discrete(vec![Mode { g: -1.0, omega: 1.0 }]).is_err());
        assert!(SpectralModel::discrete(vec![Mode { g: 1.0, omega: 1.0 }]).is_ok());
    }

    #[test]
    fn tabulated_interpolation() {
        let s = SpectralModel::tabulated(vec![0.0, 1.0, 3.0], vec![0.0, 2.0, 0.0]).unwrap();
        assert_eq!(s.density(0.5), Some(1.0));
        assert_eq!(s.density(1.0), Some(2.0));
        assert_eq!(s.density(2.0), Some(1.0));
        assert_eq!(s.density(3.0), Some(0.0));
        assert_eq!(s.density(4.0), Some(0.0));
        assert!(SpectralModel::tabulated(vec![0.0, 1.0], vec![0.0, -1.0]).is_err());
        assert!(SpectralModel::tabulated(vec![1.0, 1.0], vec![0.0, 1.0]).is_err());
        assert!(SpectralModel::tabulated(vec![0.0], vec![0.0]).is_err());
        assert!(SpectralModel::tabulated(vec![0.0, 1.0], vec![0.0]).is_err());
    }
}
