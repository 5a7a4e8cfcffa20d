use std::path::{Path, PathBuf};

use corrdeph::decay::{short_time_terms, time_grid};
use corrdeph::env::make_tmsv;
use corrdeph::estimation::min_uncertainty;
use corrdeph::scaling::{classify_regime, fit_scaling_exponent, log_spaced_n, sweep_uncertainty, DEFAULT_BAND};
use corrdeph::{DecayModel, DynamicsKind, EnvCorrelation, Mode, ProbeEnsemble, SpectralModel, Strategy};

use crate::args::{Command, Dynamics, Model, Params, Readout};
use crate::config::FileConfig;
use crate::error::{CliError, Result};
use crate::output::{fmt_f64, Table};

const DEFAULT_STEPS: usize = 300;
const DEFAULT_T_MAX: f64 = 3.0;
const DEFAULT_BUDGET: f64 = 10.0;
const DEFAULT_N_MIN: u64 = 100;
const DEFAULT_N_MAX: u64 = 1_000_000;
const DEFAULT_PER_DECADE: u32 = 25;

/// Fully resolved run settings.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub env: EnvCorrelation,
    pub spectrum: SpectralModel,
    pub dynamics: DynamicsKind,
    pub dynamics_explicit: bool,
    pub strategy: Strategy,
    pub n: u64,
    pub n_min: u64,
    pub n_max: u64,
    pub n_per_decade: u32,
    pub big_t: f64,
    pub t_max: Option<f64>,
    pub steps: usize,
    pub k: u32,
    pub out: Option<PathBuf>,
}

/// What a command produced: CSV text and an optional human summary.
#[derive(Debug, Default)]
pub struct Report {
    pub csv: Option<String>,
    pub summary: Option<String>,
}

impl RunConfig {
    pub fn resolve(flags: &Params, file: &FileConfig) -> Result<Self> {
        macro_rules! pick {
            ($field:ident, $key:literal) => {
                match flags.$field.clone() {
                    Some(v) => Some(v),
                    None => file.parsed($key)?,
                }
            };
            (choice $field:ident, $key:literal) => {
                match flags.$field {
                    Some(v) => Some(v),
                    None => file.choice($key)?,
                }
            };
        }

        let a: Option<f64> = pick!(a, "a");
        let cplus: Option<f64> = pick!(cplus, "cplus");
        let theta: Option<f64> = pick!(theta, "theta");
        let tmsv_r: Option<f64> = pick!(tmsv_r, "tmsv-r");
        let env = match tmsv_r {
            Some(r) => {
                if a.is_some() || cplus.is_some() || theta.is_some() {
                    return Err(CliError::config("--tmsv-r cannot be combined with --a, --cplus or --theta"));
                }
                make_tmsv(r)?
            }
            None => EnvCorrelation::new(a.unwrap_or(1.0), cplus.unwrap_or(0.0), theta.unwrap_or(0.0))?,
        };

        let model: Option<Model> = pick!(choice model, "model");
        let omega_c: Option<f64> = pick!(omega_c, "omega-c");
        let spectrum_file: Option<PathBuf> = pick!(spectrum_file, "spectrum-file");
        let spectrum = resolve_spectrum(model.unwrap_or(Model::Ohmic), omega_c, spectrum_file.as_deref())?;

        let dynamics_choice: Option<Dynamics> = pick!(choice dynamics, "dynamics");
        let dynamics = match dynamics_choice.unwrap_or(Dynamics::Full) {
            Dynamics::Full => DynamicsKind::FullInteractionPicture,
            Dynamics::Nofree => DynamicsKind::NoFreeEvolution,
            Dynamics::Shorttime => DynamicsKind::ShortTimeExpansion,
            Dynamics::Local => DynamicsKind::LocalQuadratic,
        };
        let readout: Option<Readout> = pick!(choice strategy, "strategy");
        let strategy = match readout.unwrap_or(Readout::Entangled) {
            Readout::Product => Strategy::UncorrelatedProduct,
            Readout::Entangled => Strategy::MaximallyEntangled,
        };

        let steps = pick!(steps, "steps").unwrap_or(DEFAULT_STEPS);
        if steps < 2 {
            return Err(CliError::config(format!("--steps must be at least 2, got {steps}")));
        }

        Ok(Self {
            env,
            spectrum,
            dynamics,
            dynamics_explicit: dynamics_choice.is_some(),
            strategy,
            n: pick!(n, "n").unwrap_or(1),
            n_min: pick!(n_min, "n-min").unwrap_or(DEFAULT_N_MIN),
            n_max: pick!(n_max, "n-max").unwrap_or(DEFAULT_N_MAX),
            n_per_decade: pick!(n_per_decade, "n-per-decade").unwrap_or(DEFAULT_PER_DECADE),
            big_t: pick!(big_t, "big-t").unwrap_or(DEFAULT_BUDGET),
            t_max: pick!(t_max, "t-max"),
            steps,
            k: pick!(k, "k").unwrap_or(1),
            out: pick!(out, "out"),
        })
    }

    fn model(&self) -> Result<DecayModel> {
        Ok(DecayModel::new(self.dynamics, self.env, self.spectrum.clone())?)
    }

    fn ensemble(&self, n: u64) -> Result<ProbeEnsemble> {
        Ok(ProbeEnsemble::new(n, self.big_t, self.strategy)?.with_branch(self.k)?)
    }
}

fn resolve_spectrum(model: Model, omega_c: Option<f64>, file: Option<&Path>) -> Result<SpectralModel> {
    match (model, file) {
        (Model::Ohmic, None) => Ok(SpectralModel::ohmic(omega_c.unwrap_or(1.0))?),
        (Model::Ohmic, Some(_)) => Err(CliError::config("--spectrum-file requires --model modes or tabulated")),
        (_, None) => Err(CliError::config("--model modes and tabulated require --spectrum-file")),
        (_, Some(_)) if omega_c.is_some() => Err(CliError::config("--omega-c applies only to the ohmic model")),
        (Model::Modes, Some(path)) => {
            let modes = read_pairs(path, ["g", "omega"])?.into_iter().map(|(g, omega)| Mode { g, omega }).collect();
            Ok(SpectralModel::discrete(modes)?)
        }
        (Model::Tabulated, Some(path)) => {
            let (omega, density) = read_pairs(path, ["omega", "j"])?.into_iter().unzip();
            Ok(SpectralModel::tabulated(omega, density)?)
        }
    }
}

fn read_pairs(path: &Path, columns: [&str; 2]) -> Result<Vec<(f64, f64)>> {
    let name = path.display();
    let mut reader = csv::ReaderBuilder::new()
        .comment(Some(b'#'))
        .trim(csv::Trim::All)
        .from_path(path)
        .map_err(|e| CliError::Io(format!("cannot read spectrum file {name}: {e}")))?;
    let header = reader.headers().map_err(|e| CliError::config(format!("{name}: {e}")))?.clone();
    let found: Vec<String> = header.iter().map(str::to_ascii_lowercase).collect();
    if found != columns {
        return Err(CliError::config(format!(
            "{name}: expected header `{}`, found `{}`",
            columns.join(","),
            found.join(",")
        )));
    }
    let mut out = Vec::new();
    for record in reader.records() {
        let record = record.map_err(|e| CliError::config(format!("{name}: {e}")))?;
        let line = record.position().map_or(0, |p| p.line());
        let cell = |i: usize| -> Result<f64> {
            record[i].parse().map_err(|e| {
                CliError::config(format!("{name}:{line}: invalid `{}` value `{}`: {e}", columns[i], &record[i]))
            })
        };
        out.push((cell(0)?, cell(1)?));
    }
    Ok(out)
}

pub fn execute(command: Command, cfg: &RunConfig) -> Result<Report> {
    match command {
        Command::Gamma => gamma(cfg),
        Command::Fig2 => fig2(cfg),
        Command::Optimal => optimal(cfg),
        Command::Sweep => sweep(cfg),
    }
}

fn gamma(cfg: &RunConfig) -> Result<Report> {
    let model = cfg.model()?;
    let grid = time_grid(cfg.t_max.unwrap_or(DEFAULT_T_MAX), cfg.steps)?;
    let curve = model.curve(&grid)?;
    let mut table = Table::new("t,gamma,coherence");
    for ((t, g), c) in curve.times.iter().zip(&curve.gamma).zip(&curve.coherence) {
        table.push([fmt_f64(*t), fmt_f64(*g), fmt_f64(*c)]);
    }
    Ok(Report { csv: Some(table.render()), summary: None })
}

fn fig2(cfg: &RunConfig) -> Result<Report> {
    if cfg.dynamics_explicit && cfg.dynamics != DynamicsKind::ShortTimeExpansion {
        return Err(CliError::config("fig2 always uses the short-time expansion; drop --dynamics or pass shorttime"));
    }
    let SpectralModel::Ohmic { omega_c } = cfg.spectrum else {
        return Err(CliError::config("fig2 requires the ohmic model"));
    };
    let limit = 1.0 / omega_c;
    let t_max = cfg.t_max.unwrap_or(limit);
    if t_max > limit {
        return Err(corrdeph::Error::Domain(format!(
            "fig2 grid must satisfy omega_c * t <= 1, got t_max = {t_max} with omega_c = {omega_c}"
        ))
        .into());
    }
    let grid = time_grid(t_max, cfg.steps)?;
    let scale = 2.0 * cfg.n as f64;
    let mut table = Table::new("t,full,quad_component,quart_component");
    for t in grid {
        let (quad, quart) = short_time_terms(&cfg.env, omega_c, t)?;
        table.push([
            fmt_f64(t),
            fmt_f64((scale * (quad + quart)).exp()),
            fmt_f64((scale * quad).exp()),
            fmt_f64((scale * quart).exp()),
        ]);
    }
    Ok(Report { csv: Some(table.render()), summary: None })
}

fn optimal(cfg: &RunConfig) -> Result<Report> {
    let model = cfg.model()?;
    let res = min_uncertainty(&model, &cfg.ensemble(cfg.n)?)?;
    let summary = format!(
        "N = {}\nt_opt = {}\neps_bar = {}\ndelta_nu = {}\nfisher = {}\ngamma_at_opt = {}\nregime = {}\n",
        cfg.n, res.t_opt, res.eps_bar, res.delta_nu, res.fisher, res.gamma_at_opt, res.regime_note
    );
    let mut table = Table::new("N,t_opt,eps_bar,delta_nu,fisher,gamma_at_opt,regime");
    table.push([
        cfg.n.to_string(),
        fmt_f64(res.t_opt),
        fmt_f64(res.eps_bar),
        fmt_f64(res.delta_nu),
        fmt_f64(res.fisher),
        fmt_f64(res.gamma_at_opt),
        res.regime_note.to_string(),
    ]);
    Ok(Report { csv: cfg.out.as_ref().map(|_| table.render()), summary: Some(summary) })
}

fn sweep(cfg: &RunConfig) -> Result<Report> {
    let model = cfg.model()?;
    let ns = log_spaced_n(cfg.n_min, cfg.n_max, cfg.n_per_decade)?;
    let table = sweep_uncertainty(&model, cfg.strategy, &ns, cfg.big_t, cfg.k)?;
    let mut csv = Table::new("N,t_opt,delta_nu,gamma_at_opt");
    for row in &table.rows {
        csv.push([row.n.to_string(), fmt_f64(row.t_opt), fmt_f64(row.delta_nu), fmt_f64(row.gamma_at_opt)]);
    }
    let fit = fit_scaling_exponent(&table)?;
    let label = classify_regime(fit.slope, DEFAULT_BAND);
    let summary = format!(
        "points = {}\nslope = {}\nintercept = {}\nresidual_rms = {}\nregime = {}\n",
        table.len(),
        fit.slope,
        fit.intercept,
        fit.residual_rms,
        label.regime
    );
    Ok(Report { csv: Some(csv.render()), summary: Some(summary) })
}
