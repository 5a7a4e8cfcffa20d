//! Browser bindings: coherence curves, short-time components and scaling
//! sweeps for the static demo page in `www/`.

use corrdeph::decay::{short_time_terms, time_grid};
use corrdeph::scaling::{classify_regime, fit_scaling_exponent, log_spaced_n, sweep_uncertainty, DEFAULT_BAND};
use corrdeph::{DecayModel, DynamicsKind, EnvCorrelation, Strategy};
use wasm_bindgen::prelude::*;

fn dynamics(name: &str) -> Result<DynamicsKind, String> {
    match name {
        "full" => Ok(DynamicsKind::FullInteractionPicture),
        "nofree" => Ok(DynamicsKind::NoFreeEvolution),
        "shorttime" => Ok(DynamicsKind::ShortTimeExpansion),
        "local" => Ok(DynamicsKind::LocalQuadratic),
        other => Err(format!("unknown dynamics `{other}`")),
    }
}

fn strategy(name: &str) -> Result<Strategy, String> {
    match name {
        "product" => Ok(Strategy::UncorrelatedProduct),
        "entangled" => Ok(Strategy::MaximallyEntangled),
        other => Err(format!("unknown strategy `{other}`")),
    }
}

fn ohmic_model(kind: &str, a: f64, c_plus: f64, theta: f64, omega_c: f64) -> Result<DecayModel, String> {
    let env = EnvCorrelation::new(a, c_plus, theta).map_err(|e| e.to_string())?;
    DecayModel::ohmic(dynamics(kind)?, env, omega_c).map_err(|e| e.to_string())
}

#[wasm_bindgen]
#[derive(Debug, Clone)]
pub struct Curve {
    times: Vec<f64>,
    values: Vec<f64>,
}

#[wasm_bindgen]
impl Curve {
    #[wasm_bindgen(getter)]
    pub fn times(&self) -> Vec<f64> {
        self.times.clone()
    }

    #[wasm_bindgen(getter)]
    pub fn values(&self) -> Vec<f64> {
        self.values.clone()
    }
}

#[wasm_bindgen]
#[derive(Debug, Clone)]
pub struct ShortTime {
    times: Vec<f64>,
    full: Vec<f64>,
    quad: Vec<f64>,
    quart: Vec<f64>,
}

#[wasm_bindgen]
impl ShortTime {
    #[wasm_bindgen(getter)]
    pub fn times(&self) -> Vec<f64> {
        self.times.clone()
    }

    #[wasm_bindgen(getter)]
    pub fn full(&self) -> Vec<f64> {
        self.full.clone()
    }

    #[wasm_bindgen(getter)]
    pub fn quad(&self) -> Vec<f64> {
        self.quad.clone()
    }

    #[wasm_bindgen(getter)]
    pub fn quart(&self) -> Vec<f64> {
        self.quart.clone()
    }
}

#[wasm_bindgen]
#[derive(Debug, Clone)]
pub struct Sweep {
    n: Vec<f64>,
    delta_nu: Vec<f64>,
    slope: f64,
    regime: String,
}

#[wasm_bindgen]
impl Sweep {
    #[wasm_bindgen(getter)]
    pub fn n(&self) -> Vec<f64> {
        self.n.clone()
    }

    #[wasm_bindgen(getter, js_name = deltaNu)]
    pub fn delta_nu(&self) -> Vec<f64> {
        self.delta_nu.clone()
    }

    #[wasm_bindgen(getter)]
    pub fn slope(&self) -> f64 {
        self.slope
    }

    #[wasm_bindgen(getter)]
    pub fn regime(&self) -> String {
        self.regime.clone()
    }
}

pub fn curve(
    kind: &str,
    a: f64,
    c_plus: f64,
    theta: f64,
    omega_c: f64,
    t_max: f64,
    steps: usize,
) -> Result<Curve, String> {
    let model = ohmic_model(kind, a, c_plus, theta, omega_c)?;
    let times = time_grid(t_max, steps).map_err(|e| e.to_string())?;
    let c = model.curve(&times).map_err(|e| e.to_string())?;
    Ok(Curve { times: c.times, values: c.coherence })
}

pub fn short_time(
    a: f64,
    c_plus: f64,
    theta: f64,
    omega_c: f64,
    n: u32,
    t_max: f64,
    steps: usize,
) -> Result<ShortTime, String> {
    let env = EnvCorrelation::new(a, c_plus, theta).map_err(|e| e.to_string())?;
    if t_max.is_nan() || omega_c.is_nan() || t_max * omega_c > 1.0 {
        return Err(format!("short-time grid needs omega_c * t_max <= 1, got {}", t_max * omega_c));
    }
    let times = time_grid(t_max, steps).map_err(|e| e.to_string())?;
    let scale = 2.0 * n as f64;
    let mut out = ShortTime { times: times.clone(), full: vec![], quad: vec![], quart: vec![] };
    for t in times {
        let (q, r) = short_time_terms(&env, omega_c, t).map_err(|e| e.to_string())?;
        out.full.push((scale * (q + r)).exp());
        out.quad.push((scale * q).exp());
        out.quart.push((scale * r).exp());
    }
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
pub fn sweep(
    kind: &str,
    readout: &str,
    a: f64,
    c_plus: f64,
    theta: f64,
    n_min: u32,
    n_max: u32,
    per_decade: u32,
    budget: f64,
) -> Result<Sweep, String> {
    let model = ohmic_model(kind, a, c_plus, theta, 1.0)?;
    let ns = log_spaced_n(n_min as u64, n_max as u64, per_decade).map_err(|e| e.to_string())?;
    let table = sweep_uncertainty(&model, strategy(readout)?, &ns, budget, 1).map_err(|e| e.to_string())?;
    let fit = fit_scaling_exponent(&table).map_err(|e| e.to_string())?;
    Ok(Sweep {
        n: table.rows.iter().map(|r| r.n as f64).collect(),
        delta_nu: table.rows.iter().map(|r| r.delta_nu).collect(),
        slope: fit.slope,
        regime: classify_regime(fit.slope, DEFAULT_BAND).regime.to_string(),
    })
}

#[wasm_bindgen(js_name = coherenceCurve)]
pub fn coherence_curve(
    kind: &str,
    a: f64,
    c_plus: f64,
    theta: f64,
    omega_c: f64,
    t_max: f64,
    steps: usize,
) -> Result<Curve, JsError> {
    curve(kind, a, c_plus, theta, omega_c, t_max, steps).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = shortTimeComponents)]
pub fn short_time_components(
    a: f64,
    c_plus: f64,
    theta: f64,
    omega_c: f64,
    n: u32,
    t_max: f64,
    steps: usize,
) -> Result<ShortTime, JsError> {
    short_time(a, c_plus, theta, omega_c, n, t_max, steps).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = scalingSweep)]
#[allow(clippy::too_many_arguments)]
pub fn scaling_sweep(
    kind: &str,
    readout: &str,
    a: f64,
    c_plus: f64,
    theta: f64,
    n_min: u32,
    n_max: u32,
    per_decade: u32,
    budget: f64,
) -> Result<Sweep, JsError> {
    sweep(kind, readout, a, c_plus, theta, n_min, n_max, per_decade, budget).map_err(|e| JsError::new(&e))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn curve_starts_coherent() {
        let c = curve("full", 2.0, 1.0, -1.0, 1.0, 3.0, 50).unwrap();
        assert_eq!(c.times.len(), 50);
        assert_eq!(c.values[0], 1.0);
        assert!(c.values.windows(2).all(|w| w[1] <= w[0]));
    }

    #[test]
    fn short_time_factorises() {
        let s = short_time(10.0, 9.95, -1.0, 1.0, 10, 0.3, 40).unwrap();
        for i in 0..40 {
            assert!((s.full[i] - s.quad[i] * s.quart[i]).abs() <= 1e-12);
        }
        assert!(short_time(1.0, 0.0, 0.0, 1.0, 1, 2.0, 10).is_err());
    }

    #[test]
    fn sweep_reports_regime() {
        let s = sweep("full", "entangled", 1.0, 0.0, 0.0, 100, 1_000_000, 25, 10.0).unwrap();
        assert!((s.slope + 0.75).abs() < 0.02);
        assert_eq!(s.regime, "Zeno (N^-3/4)");
        assert!(curve("warp", 1.0, 0.0, 0.0, 1.0, 1.0, 10).is_err());
        assert!(sweep("full", "mixed", 1.0, 0.0, 0.0, 10, 100, 5, 10.0).is_err());
    }
}
