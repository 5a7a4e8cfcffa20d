use std::path::Path;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_corrdeph")).args(args).output().expect("binary runs")
}

fn ok(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?} failed: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn table(csv: &str) -> (Vec<String>, Vec<Vec<f64>>) {
    let mut lines = csv.lines();
    let header = lines.next().unwrap().split(',').map(str::to_string).collect();
    let rows = lines.map(|l| l.split(',').map(|c| c.parse().unwrap()).collect()).collect();
    (header, rows)
}

fn summary_value(text: &str, key: &str) -> String {
    text.lines()
        .find_map(|l| l.strip_prefix(&format!("{key} = ")))
        .unwrap_or_else(|| panic!("no `{key}` in {text}"))
        .to_string()
}

#[test]
fn vacuum_curve_starts_at_unit_coherence() {
    let csv = ok(&["gamma", "--a", "1", "--cplus", "0"]);
    let (header, rows) = table(&csv);
    assert_eq!(header, ["t", "gamma", "coherence"]);
    assert_eq!(rows.len(), 300);
    assert_eq!(rows[0], [0.0, 0.0, 1.0]);
    assert!(rows.iter().all(|r| r[1] <= 0.0));
    assert!((rows[299][0] - 3.0).abs() < 1e-15);
    assert!(csv.starts_with("t,gamma,coherence\n0.0000000000000000e0,0.0000000000000000e0,1.0000000000000000e0\n"));
}

#[test]
fn output_is_deterministic_lf_and_round_trips() {
    let args = ["gamma", "--a", "3.5", "--cplus", "2", "--theta", "-0.3", "--steps", "57"];
    let first = ok(&args);
    assert_eq!(first, ok(&args));
    assert!(!first.contains('\r'));
    for cell in first.lines().skip(1).flat_map(|l| l.split(',')) {
        let mantissa = cell.trim_start_matches('-').split('e').next().unwrap();
        assert_eq!(mantissa.replace('.', "").len(), 17, "{cell}");
        let v: f64 = cell.parse().unwrap();
        assert_eq!(format!("{:.16e}", v + 0.0), cell);
    }
}

#[test]
fn anti_correlated_bath_preserves_coherence_early() {
    let a = 3f64.cosh().to_string();
    let c = 3f64.sinh().to_string();
    let (_, unc) = table(&ok(&["gamma", "--a", &a, "--cplus", "0"]));
    let (_, corr) = table(&ok(&["gamma", "--a", &a, "--cplus", &c, "--theta", "-1"]));
    for (u, k) in unc.iter().zip(&corr) {
        if u[0] <= 1.0 {
            assert!(k[2] >= u[2], "t = {}", u[0]);
        }
    }
    let tmsv = ok(&["gamma", "--tmsv-r", "1.5"]);
    let (_, rows) = table(&tmsv);
    for (x, y) in rows.iter().zip(&corr) {
        assert!((x[2] - y[2]).abs() <= 1e-12 * y[2].max(1e-300));
    }
}

#[test]
fn decoherence_free_curve_is_flat() {
    let (_, rows) = table(&ok(&["gamma", "--a", "10", "--cplus", "10", "--theta", "1"]));
    assert!(rows.iter().all(|r| r[2] == 1.0));
}

#[test]
fn fig2_components_multiply() {
    let csv = ok(&["fig2", "--n", "10", "--a", "10", "--cplus", "9.95", "--theta", "-1", "--t-max", "0.3"]);
    let (header, rows) = table(&csv);
    assert_eq!(header, ["t", "full", "quad_component", "quart_component"]);
    for r in &rows {
        assert!((r[1] - r[2] * r[3]).abs() <= 1e-12 * r[1].max(1e-300));
    }
    let (_, boundary) = table(&ok(&["fig2", "--a", "4", "--cplus", "4", "--theta", "-1"]));
    assert!(boundary.iter().all(|r| r[2] == 1.0));
}

#[test]
fn fig2_rejects_grid_past_short_time_limit() {
    let out = run(&["fig2", "--omega-c", "2", "--t-max", "0.6"]);
    assert_eq!(out.status.code(), Some(4));
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("error[domain]:"));
}

#[test]
fn optimal_reports_local_limit() {
    let text = ok(&["optimal", "--dynamics", "local", "--n", "100", "--a", "1"]);
    let t: f64 = summary_value(&text, "t_opt").parse().unwrap();
    assert!((t - 1.0 / 3200f64.sqrt()).abs() < 1e-12);
    assert_eq!(summary_value(&text, "regime"), "interior optimum");
}

#[test]
fn optimal_falls_back_to_budget_when_decoherence_free() {
    let text = ok(&["optimal", "--a", "2", "--cplus", "2", "--theta", "1", "--big-t", "7", "--n", "5"]);
    assert_eq!(summary_value(&text, "regime"), "decoherence-free");
    assert_eq!(summary_value(&text, "t_opt"), "7");
}

#[test]
fn strategy_changes_optimal_root() {
    let base = ["optimal", "--a", "2", "--n", "50"];
    let product = ok(&[&base[..], &["--strategy", "product"]].concat());
    let entangled = ok(&[&base[..], &["--strategy", "entangled"]].concat());
    let tp: f64 = summary_value(&product, "t_opt").parse().unwrap();
    let te: f64 = summary_value(&entangled, "t_opt").parse().unwrap();
    assert!(te < tp);
}

#[test]
fn optimal_writes_csv_when_asked() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("opt.csv");
    ok(&["optimal", "--dynamics", "local", "--n", "100", "--out", path.to_str().unwrap()]);
    let csv = std::fs::read_to_string(&path).unwrap();
    assert!(csv.starts_with("N,t_opt,eps_bar,delta_nu,fisher,gamma_at_opt,regime\n100,"));
}

fn sweep_slope(extra: &[&str], dir: &Path) -> f64 {
    let path = dir.join("sweep.csv");
    let args = [&["sweep", "--out", path.to_str().unwrap()][..], extra].concat();
    let text = ok(&args);
    let csv = std::fs::read_to_string(&path).unwrap();
    assert!(csv.starts_with("N,t_opt,delta_nu,gamma_at_opt\n100,"));
    assert_eq!(csv.lines().count(), 102);
    summary_value(&text, "slope").parse().unwrap()
}

#[test]
fn sweep_slopes_match_regimes() {
    let dir = tempfile::tempdir().unwrap();
    let zeno = sweep_slope(&["--a", "1"], dir.path());
    assert!((zeno + 0.75).abs() < 0.02, "{zeno}");
    let super_zeno = sweep_slope(&["--a", "10", "--cplus", "10", "--theta", "-1"], dir.path());
    assert!((super_zeno + 0.875).abs() < 0.02, "{super_zeno}");
    let dfs = sweep_slope(&["--a", "10", "--cplus", "10", "--theta", "1"], dir.path());
    assert!((dfs + 1.0).abs() < 1e-9, "{dfs}");
    let sql = sweep_slope(&["--a", "1", "--strategy", "product"], dir.path());
    assert!((sql + 0.5).abs() < 1e-9, "{sql}");
    let leftovers: Vec<_> = std::fs::read_dir(dir.path()).unwrap().collect();
    assert_eq!(leftovers.len(), 1);
}

#[test]
fn config_file_supplies_defaults_and_flags_win() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.cfg");
    std::fs::write(&cfg, "# local limit\ndynamics = local\na = 1\nn = 100\n").unwrap();
    let text = ok(&["optimal", "--config", cfg.to_str().unwrap()]);
    let t: f64 = summary_value(&text, "t_opt").parse().unwrap();
    assert!((t - 1.0 / 3200f64.sqrt()).abs() < 1e-12);
    let text = ok(&["optimal", "--config", cfg.to_str().unwrap(), "--n", "400"]);
    let t: f64 = summary_value(&text, "t_opt").parse().unwrap();
    assert!((t - 1.0 / 12800f64.sqrt()).abs() < 1e-12);
}

#[test]
fn config_error_names_line_and_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("bad.cfg");
    std::fs::write(&cfg, "a = 1\nsteps = lots\n").unwrap();
    let out = run(&["gamma", "--config", cfg.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.starts_with("error[config]:") && err.contains("bad.cfg:2"), "{err}");
}

#[test]
fn error_categories_and_codes() {
    let cases: [(&[&str], i32, &str); 4] = [
        (&["gamma", "--nonsense"], 2, "config"),
        (&["gamma", "--tmsv-r", "1", "--a", "2"], 2, "config"),
        (&["gamma", "--a", "0.5"], 4, "domain"),
        (&["gamma", "--out", "/nonexistent-dir/x.csv"], 3, "io"),
    ];
    for (args, code, category) in cases {
        let out = run(args);
        assert_eq!(out.status.code(), Some(code), "{args:?}");
        let err = String::from_utf8_lossy(&out.stderr);
        assert!(err.starts_with(&format!("error[{category}]:")), "{args:?}: {err}");
    }
}

#[test]
fn numerical_failure_is_reported() {
    // Root beyond the budget with a nonzero decay exponent.
    let out = run(&["optimal", "--dynamics", "local", "--omega-c", "0.001", "--big-t", "0.5", "--strategy", "product"]);
    assert_eq!(out.status.code(), Some(5));
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("error[numerical]:"));
}

#[test]
fn discrete_and_tabulated_spectra() {
    let dir = tempfile::tempdir().unwrap();
    let modes = dir.path().join("modes.csv");
    std::fs::write(&modes, "g,omega\n0.5,1.0\n0.25,2.0\n").unwrap();
    let (_, rows) =
        table(&ok(&["gamma", "--model", "modes", "--spectrum-file", modes.to_str().unwrap(), "--steps", "11"]));
    assert_eq!(rows.len(), 11);
    assert!(rows.iter().all(|r| r[1] <= 0.0 && r[2] <= 1.0));

    let tab = dir.path().join("tab.csv");
    let mut text = String::from("omega,j\n");
    for i in 0..=4000 {
        let w = i as f64 * 0.01;
        text.push_str(&format!("{w},{}\n", w * (-w).exp()));
    }
    std::fs::write(&tab, text).unwrap();
    let (_, tabulated) = table(&ok(&[
        "gamma",
        "--model",
        "tabulated",
        "--spectrum-file",
        tab.to_str().unwrap(),
        "--steps",
        "5",
        "--t-max",
        "2",
    ]));
    let (_, ohmic) = table(&ok(&["gamma", "--steps", "5", "--t-max", "2"]));
    for (x, y) in tabulated.iter().zip(&ohmic) {
        assert!((x[1] - y[1]).abs() < 1e-3, "{} vs {}", x[1], y[1]);
    }

    let out = run(&["gamma", "--model", "modes"]);
    assert_eq!(out.status.code(), Some(2));
}
