//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

use std::f64::consts::PI;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use corrdeph::decay::{
    self, gamma_ohmic_closed, gamma_quadrature, gamma_short_time, ohmic_dephasing_integral, time_grid,
};
use corrdeph::estimation::{optimal_time, transition_probability, uncertainty_squared};
use corrdeph::scaling::{dfs_check, fit_power_law, fit_scaling_exponent, log_spaced_n, sweep_uncertainty};
use corrdeph::{DecayModel, DynamicsKind, EnvCorrelation, ProbeEnsemble, SpectralModel, Strategy};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const TOTAL_TIME: f64 = 10.0;
const SWEEP_RUNTIME_LIMIT: Duration = Duration::from_secs(10);

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn full_ohmic(a: f64, c_plus: f64, theta: f64) -> DecayModel {
    let env = EnvCorrelation::new(a, c_plus, theta).unwrap();
    DecayModel::ohmic(DynamicsKind::FullInteractionPicture, env, 1.0).unwrap()
}

fn sweep_slope(model: &DecayModel, strategy: Strategy) -> Result<f64, String> {
    let ns = log_spaced_n(100, 1_000_000, 25).map_err(|e| e.to_string())?;
    let table = sweep_uncertainty(model, strategy, &ns, TOTAL_TIME, 1).map_err(|e| e.to_string())?;
    Ok(fit_scaling_exponent(&table).map_err(|e| e.to_string())?.slope)
}

fn check_slope(model: &DecayModel, strategy: Strategy, nominal: f64, tol: f64) -> Outcome {
    let start = Instant::now();
    let slope = sweep_slope(model, strategy)?;
    let elapsed = start.elapsed();
    let msg = format!("slope {slope:.6} (target {nominal} ± {tol:e}), {:.3} s", elapsed.as_secs_f64());
    if (slope - nominal).abs() <= tol && elapsed < SWEEP_RUNTIME_LIMIT {
        Ok(msg)
    } else {
        Err(msg)
    }
}

fn zeno_scaling() -> Outcome {
    check_slope(&full_ohmic(1.0, 0.0, 0.0), Strategy::MaximallyEntangled, -0.75, 0.02)
}

fn super_zeno_scaling() -> Outcome {
    check_slope(&full_ohmic(10.0, 10.0, -1.0), Strategy::MaximallyEntangled, -0.875, 0.02)
}

fn standard_quantum_limit() -> Outcome {
    let models = [
        ("uncorrelated closed form", full_ohmic(1.0, 0.0, 0.0)),
        ("EPR-boundary closed form", full_ohmic(10.0, 10.0, -1.0)),
        ("near-boundary environment", full_ohmic(10.0, 9.95, -1.0)),
        ("local quadratic", DecayModel::local(3.0, 1.0).unwrap()),
        (
            "no free evolution",
            DecayModel::ohmic(DynamicsKind::NoFreeEvolution, EnvCorrelation::new(4.0, 2.0, 0.3).unwrap(), 1.0).unwrap(),
        ),
    ];
    let mut worst = 0.0_f64;
    let mut report = Vec::new();
    for (name, m) in &models {
        let slope = sweep_slope(m, Strategy::UncorrelatedProduct)?;
        worst = worst.max((slope + 0.5).abs());
        report.push(format!("{name}: {slope:.9}"));
    }
    let msg = format!("max |slope + 0.5| = {worst:.2e} [{}]", report.join("; "));
    if worst <= 1e-6 {
        Ok(msg)
    } else {
        Err(msg)
    }
}

fn heisenberg_dfs() -> Outcome {
    let grid = time_grid(3.0, 300).unwrap();
    let cases = [
        ("theta=1, c+=a, closed form", full_ohmic(10.0, 10.0, 1.0)),
        (
            "c+=a, no free evolution",
            DecayModel::ohmic(DynamicsKind::NoFreeEvolution, EnvCorrelation::new(10.0, 10.0, -1.0).unwrap(), 1.0)
                .unwrap(),
        ),
    ];
    let mut ok = true;
    let mut report = Vec::new();
    for (name, m) in &cases {
        let max_gamma = grid.iter().map(|&t| m.gamma(t).unwrap().abs()).fold(0.0, f64::max);
        let dfs = dfs_check(m, &grid, 1e-12).map_err(|e| e.to_string())?;
        let slope = sweep_slope(m, Strategy::MaximallyEntangled)?;
        ok &= dfs && max_gamma <= 1e-12 && (slope + 1.0).abs() <= 1e-6;
        report.push(format!("{name}: max|gamma| = {max_gamma:.1e}, slope {slope:.9}"));
    }
    let msg = report.join("; ");
    if ok {
        Ok(msg)
    } else {
        Err(msg)
    }
}

fn local_optimum_cross_check() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    let mut worst = 0.0_f64;
    for _ in 0..20 {
        let n = 10f64.powf(rng.random_range(0.0..6.0)).round() as u64;
        let a = rng.random_range(1.0..100.0);
        let m = DecayModel::local(a, 1.0).unwrap();
        let ens = ProbeEnsemble::new(n, TOTAL_TIME, Strategy::MaximallyEntangled).unwrap();
        let t = optimal_time(&m, &ens).map_err(|e| e.to_string())?.t;
        let analytic = 1.0 / (32.0 * n as f64 * a).sqrt();
        worst = worst.max(((t - analytic) / analytic).abs());
    }
    let msg = format!("max relative deviation {worst:.2e} over 20 draws (tol 1e-8)");
    if worst <= 1e-8 {
        Ok(msg)
    } else {
        Err(msg)
    }
}

fn random_physical_env(rng: &mut ChaCha8Rng) -> EnvCorrelation {
    loop {
        let a = rng.random_range(1.0..20.0);
        let c = rng.random_range(0.0..a);
        let theta = rng.random_range(-1.0..1.0);
        let env = EnvCorrelation::new(a, c, theta).unwrap();
        if env.physicality().is_valid() {
            return env;
        }
    }
}

fn taylor_consistency() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(15);
    let times = [1e-2, 5e-3, 2.5e-3];
    let mut orders = Vec::new();
    for _ in 0..10 {
        let env = random_physical_env(&mut rng);
        let residuals: Vec<f64> = times
            .iter()
            .map(|&t| (gamma_ohmic_closed(&env, 1.0, t).unwrap() - gamma_short_time(&env, 1.0, t).unwrap()).abs())
            .collect();
        let order = fit_power_law(&times, &residuals).map_err(|e| e.to_string())?.slope;
        orders.push(order);
    }
    let worst = orders.iter().map(|o| (o - 6.0).abs()).fold(0.0, f64::max);
    let msg = format!(
        "orders [{}], max |order - 6| = {worst:.3}",
        orders.iter().map(|o| format!("{o:.3}")).collect::<Vec<_>>().join(", ")
    );
    if worst <= 0.5 {
        Ok(msg)
    } else {
        Err(msg)
    }
}

fn quadrature_oracle() -> Outcome {
    let mut worst_integral = 0.0_f64;
    for t in [0.1, 1.0, 2.0] {
        let q = ohmic_dephasing_integral(1.0, t).map_err(|e| e.to_string())?;
        worst_integral = worst_integral.max((q - (t * t).ln_1p()).abs());
    }
    let spectrum = SpectralModel::ohmic(1.0).unwrap();
    let envs = [
        EnvCorrelation::new(3f64.cosh(), 3f64.sinh(), -1.0).unwrap(),
        EnvCorrelation::new(3f64.cosh(), 0.0, 0.0).unwrap(),
    ];
    let mut worst_gamma = 0.0_f64;
    for env in &envs {
        for t in [0.1, 0.5, 1.0, 2.0] {
            let q =
                gamma_quadrature(env, &spectrum, t, DynamicsKind::FullInteractionPicture).map_err(|e| e.to_string())?;
            let c = gamma_ohmic_closed(env, 1.0, t).unwrap();
            worst_gamma = worst_gamma.max((q - c).abs());
        }
    }
    let msg = format!(
        "integral error {worst_integral:.2e}, calibrated gamma error {worst_gamma:.2e} \
         (kappa = {}, tol 1e-8)",
        decay::CONTINUUM_CALIBRATION
    );
    if worst_integral <= 1e-8 && worst_gamma <= 1e-8 {
        Ok(msg)
    } else {
        Err(msg)
    }
}

fn fig3_behaviour() -> Outcome {
    let a = 3f64.cosh();
    let corr = full_ohmic(a, 3f64.sinh(), -1.0);
    let unc = full_ohmic(a, 0.0, 0.0);
    let grid = time_grid(3.0, 300).unwrap();
    let cc = corr.curve(&grid).unwrap();
    let cu = unc.curve(&grid).unwrap();

    let slower_early =
        grid.iter().zip(cc.coherence.iter().zip(&cu.coherence)).filter(|(t, _)| **t <= 1.0).all(|(_, (c, u))| c >= u);
    let diff: Vec<f64> = cc.coherence.iter().zip(&cu.coherence).map(|(c, u)| c - u).collect();
    let crossing = grid.windows(2).zip(diff.windows(2)).find(|(_, d)| d[0] > 0.0 && d[1] < 0.0).map(|(t, _)| t[1]);
    let crossing_ok = crossing.is_some_and(|t| t > 1.0 && t < 3.0);

    let at = |m: &DecayModel| m.gamma(0.1).unwrap().exp();
    let (c01, u01) = (at(&corr), at(&unc));
    let values_ok = (c01 - 0.973).abs() <= 1e-3 && (u01 - 0.449).abs() <= 1e-3;

    let msg = format!(
        "correlated >= uncorrelated for t <= 1: {slower_early}; crossing near t = {}; \
         coherence(0.1) = {c01:.5} vs {u01:.5}",
        crossing.map_or("none".to_string(), |t| format!("{t:.4}"))
    );
    if slower_early && crossing_ok && values_ok {
        Ok(msg)
    } else {
        Err(msg)
    }
}

/// Closed form for an arbitrary phase:
/// `(δν̄)² = (1 − e^{2Mγ}cos²)/(K T t e^{2Mγ} sin²)` with `K = N` for the
/// product strategy and `K = N²` for GHZ probes.
fn closed_form_uncertainty(n: u64, strategy: Strategy, eps_bar: f64, t: f64, gamma: f64) -> f64 {
    let (m, k) = match strategy {
        Strategy::UncorrelatedProduct => (1.0, n as f64),
        Strategy::MaximallyEntangled => (n as f64, (n * n) as f64),
    };
    let e2 = (2.0 * m * gamma).exp();
    let phase = m * eps_bar * t;
    (1.0 - e2 * phase.cos().powi(2)) / (k * TOTAL_TIME * t * e2 * phase.sin().powi(2))
}

fn cramer_rao_chain() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut worst = 0.0_f64;
    for _ in 0..1000 {
        let n: u64 = rng.random_range(1..=20);
        let gamma = -rng.random_range(0.0..=3.0);
        let t = rng.random_range(0.05..TOTAL_TIME);
        for strategy in [Strategy::UncorrelatedProduct, Strategy::MaximallyEntangled] {
            let ens = ProbeEnsemble::new(n, TOTAL_TIME, strategy).unwrap();
            let m = ens.multiplier();
            // Total accumulated phase M·ε̄·t uniform in (0, π).
            let phase = rng.random_range(1e-3..PI - 1e-3);
            let eps_bar = phase / (m * t);

            let p = transition_probability(eps_bar, t, gamma, &ens).unwrap();
            let dp = -0.5 * m * t * (m * gamma).exp() * (m * eps_bar * t).sin();
            let fisher = dp * dp / (p * (1.0 - p));
            let total = match strategy {
                Strategy::UncorrelatedProduct => n as f64 * fisher,
                Strategy::MaximallyEntangled => fisher,
            };
            let chain = 1.0 / ((TOTAL_TIME / t) * total);

            let closed = closed_form_uncertainty(n, strategy, eps_bar, t, gamma);
            let library = uncertainty_squared(eps_bar, t, gamma, &ens).unwrap();
            worst = worst.max(((chain - closed) / closed).abs()).max(((library - closed) / closed).abs());
        }
    }
    let msg = format!("max relative deviation {worst:.2e} over 1000 draws x 2 strategies (tol 1e-12)");
    if worst <= 1e-12 {
        Ok(msg)
    } else {
        Err(msg)
    }
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("Zeno scaling N^-3/4", zeno_scaling),
        ("super-Zeno scaling N^-7/8", super_zeno_scaling),
        ("standard quantum limit N^-1/2", standard_quantum_limit),
        ("Heisenberg scaling in decoherence-free configurations", heisenberg_dfs),
        ("local quadratic optimum vs 1/sqrt(32 N a)", local_optimum_cross_check),
        ("short-time expansion residual order", taylor_consistency),
        ("quadrature oracle and calibration", quadrature_oracle),
        ("correlated vs uncorrelated coherence", fig3_behaviour),
        ("Cramer-Rao chain identity", cramer_rao_chain),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        match run() {
            Ok(msg) => println!("PASS  {name}: {msg}"),
            Err(msg) => {
                failed += 1;
                println!("FAIL  {name}: {msg}");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
