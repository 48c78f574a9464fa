#![allow(clippy::needless_range_loop)]

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use wha_lab::builders::{self, check_cap, FiniteGroup, FiniteGroupoid, GroupoidJson};
use wha_lab::config::{Output, DEFAULT_SEED};
use wha_lab::modalg::fixtures::{self, Fixture};
use wha_lab::modalg::{
    comodule_to_module, jacobson_radical, k0_module, orbit_theorem_check, verify_comodule_algebra,
    verify_module_algebra, verify_radical_stability, AlgebraFile,
};
use wha_lab::numerics::Tolerances;
use wha_lab::repcat::RepData;
use wha_lab::report::{check_all, check_all_unchecked, dims_report, fusion_report};
use wha_lab::theorems::class_equation;
use wha_lab::{Config, WeakHopfAlgebra, WhaError};

#[derive(Parser)]
#[command(name = "wha", version, about = "Weak Hopf algebra laboratory")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct Global {
    /// Write output to PATH instead of stdout.
    #[arg(short = 'o', long = "out", global = true, value_name = "PATH")]
    out: Option<PathBuf>,
    /// Emit JSON.
    #[arg(long, global = true)]
    json: bool,
    /// RNG seed (decimal or 0x-prefixed hex).
    #[arg(long, global = true, env = "WHA_SEED", value_parser = parse_seed)]
    seed: Option<u64>,
    /// Eigenvalue clustering tolerance.
    #[arg(long = "tol-eig", global = true)]
    tol_eig: Option<f64>,
    /// Integer rounding tolerance.
    #[arg(long = "tol-int", global = true)]
    tol_int: Option<f64>,
    /// Maximum algebra dimension.
    #[arg(long = "dim-cap", global = true)]
    dim_cap: Option<usize>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Build an algebra (or a module/comodule algebra fixture) and write it as JSON.
    Build {
        #[command(subcommand)]
        kind: BuildKind,
    },
    /// Print invariants: `report [fusion|dims|full] FILE`.
    Report {
        #[arg(num_args = 1..=2, value_name = "[KIND] FILE")]
        args: Vec<String>,
    },
    /// Run every verifier; exit 0 iff all pass.
    CheckAll { file: PathBuf },
    /// Class equation table.
    ClassEquation { file: PathBuf },
    /// Module or comodule algebra verifiers.
    Modalg {
        algebra: PathBuf,
        module: PathBuf,
        #[arg(long, value_enum)]
        mode: Mode,
    },
}

#[derive(Subcommand)]
enum BuildKind {
    /// Pair groupoid algebra on n objects.
    Pair { n: usize },
    /// Group algebra of Z<n> or S<n>.
    Group { name: String },
    /// Connected groupoid on n objects with vertex group G, or a groupoid read from JSON.
    Groupoid {
        n: Option<usize>,
        group: Option<String>,
        #[arg(long, value_name = "PATH", conflicts_with_all = ["n", "group"])]
        from: Option<PathBuf>,
    },
    /// Dual of an algebra file.
    Dual { file: PathBuf },
    /// Direct sum of two algebra files.
    DirectSum { first: PathBuf, second: PathBuf },
    /// Named example, e.g. `ds(grp(Z2),fun(Z3))`.
    Named { spec: String },
    /// Module/comodule algebra fixture; `--algebra-out` also writes the acting algebra.
    Fixture {
        name: String,
        #[arg(long, value_name = "PATH")]
        algebra_out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Module,
    Comodule,
}

fn parse_seed(s: &str) -> Result<u64, String> {
    let t = s.trim();
    let r = match t.strip_prefix("0x").or_else(|| t.strip_prefix("0X")) {
        Some(h) => u64::from_str_radix(h, 16),
        None => t.parse(),
    };
    r.map_err(|e| format!("invalid seed {s:?}: {e}"))
}

fn config(g: &Global) -> wha_lab::Result<Config> {
    let d = Tolerances::default();
    let tolerances = Tolerances {
        eig_cluster: g.tol_eig.unwrap_or(d.eig_cluster),
        int_round: g.tol_int.unwrap_or(d.int_round),
        zero: d.zero,
    };
    let cfg = Config {
        tolerances,
        seed: g.seed.unwrap_or(DEFAULT_SEED),
        dim_cap: g.dim_cap.unwrap_or(builders::DEFAULT_DIM_CAP),
        output: if g.json { Output::Json } else { Output::Text },
    };
    cfg.validate()?;
    Ok(cfg)
}

struct Outcome {
    text: String,
    json: Value,
    ok: bool,
}

fn emit(g: &Global, cfg: &Config, o: &Outcome) -> wha_lab::Result<()> {
    let body = match cfg.output {
        Output::Json => serde_json::to_string_pretty(&o.json).expect("serializable"),
        Output::Text => o.text.trim_end().to_string(),
    };
    match &g.out {
        Some(p) => builders::write(p, &body),
        None => {
            let mut out = std::io::stdout().lock();
            match writeln!(out, "{body}") {
                Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(WhaError::Io(e.to_string())),
                _ => Ok(()),
            }
        }
    }
}

fn load(path: &PathBuf, cfg: &Config) -> wha_lab::Result<WeakHopfAlgebra> {
    builders::load(path, cfg.dim_cap)
}

fn text_of(v: &Value) -> String {
    match v {
        Value::Object(m) => m.iter().map(|(k, x)| format!("{k}: {x}\n")).collect(),
        other => format!("{other}\n"),
    }
}

fn algebra_outcome(a: &WeakHopfAlgebra) -> Outcome {
    let json: Value = serde_json::from_str(&a.to_json()).expect("valid JSON");
    Outcome { text: a.to_json(), json, ok: true }
}

fn build(kind: &BuildKind, cfg: &Config) -> wha_lab::Result<Outcome> {
    let a = match kind {
        BuildKind::Pair { n } => {
            builders::groupoid_algebra(&FiniteGroupoid::pair_groupoid(*n)?, &format!("pair({n})"), cfg.dim_cap)?
        }
        BuildKind::Group { name } => {
            let grp = FiniteGroup::by_name(name)?;
            builders::groupoid_algebra(&FiniteGroupoid::from_group(&grp)?, &format!("grp({})", grp.name), cfg.dim_cap)?
        }
        BuildKind::Groupoid { n, group, from } => match (n, group, from) {
            (Some(n), Some(gname), None) => {
                let grp = FiniteGroup::by_name(gname)?;
                let gd = FiniteGroupoid::connected_groupoid(*n, &grp)?;
                builders::groupoid_algebra(&gd, &format!("gpd({n},{})", grp.name), cfg.dim_cap)?
            }
            (None, None, Some(p)) => {
                let text = builders::read(p)?;
                let gj: GroupoidJson = serde_json::from_str(&text).map_err(|e| WhaError::Parse {
                    location: format!("line {} column {}", e.line(), e.column()),
                    message: e.to_string(),
                })?;
                builders::groupoid_algebra(&gj.to_groupoid()?, "groupoid", cfg.dim_cap)?
            }
            _ => return Err(WhaError::InvalidParams("groupoid needs `N GROUP` or `--from PATH`".into())),
        },
        BuildKind::Dual { file } => {
            let a = load(file, cfg)?;
            let label = format!("dual({})", a.label());
            a.dual().with_label(label)
        }
        BuildKind::DirectSum { first, second } => load(first, cfg)?.direct_sum(&load(second, cfg)?),
        BuildKind::Named { spec } => {
            let a = builders::by_name(spec)?;
            check_cap(a.dim(), cfg.dim_cap)?;
            a
        }
        BuildKind::Fixture { name, algebra_out } => {
            let (a, file) = match fixtures::by_name(name)? {
                Fixture::Module(a, m) => (a, AlgebraFile::from_module(&m)),
                Fixture::Comodule(a, m) => (a, AlgebraFile::from_comodule(&m)),
            };
            if let Some(p) = algebra_out {
                builders::save(&a, p)?;
            }
            let json: Value = serde_json::from_str(&file.to_json()).expect("valid JSON");
            return Ok(Outcome { text: file.to_json(), json, ok: true });
        }
    };
    Ok(algebra_outcome(&a))
}

fn report(args: &[String], cfg: &Config) -> wha_lab::Result<Outcome> {
    let (kind, file) = match args {
        [f] => ("full", f.as_str()),
        [k, f] => (k.as_str(), f.as_str()),
        _ => unreachable!("clap enforces 1..=2 arguments"),
    };
    let a = load(&PathBuf::from(file), cfg)?;
    let json = match kind {
        "dims" => dims_report(&a, cfg)?,
        "fusion" => fusion_report(&a, cfg)?,
        "full" => full_report(&a, cfg)?,
        other => {
            return Err(WhaError::InvalidParams(format!(
                "unknown report kind {other:?}; expected fusion, dims or full"
            )))
        }
    };
    Ok(Outcome { text: text_of(&json), json, ok: true })
}

fn full_report(a: &WeakHopfAlgebra, cfg: &Config) -> wha_lab::Result<Value> {
    let conn = a.connectivity();
    let mut v = json!({
        "algebra": a.label(),
        "dim": a.dim(),
        "d": a.d(),
        "connectivity": conn,
        "trace_S2": wha_lab::numerics::format_q(&a.trace_s2()),
        "hopf": a.is_hopf(),
    });
    if conn.connected {
        v["dims"] = dims_report(a, cfg)?;
        v["fusion"] = fusion_report(a, cfg)?["fusion"].clone();
    }
    Ok(v)
}

fn check_all_cmd(file: &PathBuf, cfg: &Config) -> wha_lab::Result<Outcome> {
    let start = std::time::Instant::now();
    let r = match load(file, cfg) {
        Ok(a) => check_all(&a, cfg)?,
        Err(WhaError::AxiomViolation(_) | WhaError::NoAntipode | WhaError::AntipodeNotUnique(_)) => {
            let (core, s) = builders::load_unchecked(file, cfg.dim_cap)?;
            check_all_unchecked(core, s, cfg.seed)
        }
        Err(e) => return Err(e),
    };
    let mut text = r.to_text();
    if let Some(f) = r.first_failure() {
        text += &format!("first failure: {}\n", f.name);
    }
    // timing stays out of the JSON report so it remains byte-stable
    text += &format!("elapsed: {:.3} s\n", start.elapsed().as_secs_f64());
    Ok(Outcome { text, json: serde_json::to_value(&r).expect("serializable"), ok: r.passed() })
}

fn class_equation_cmd(file: &PathBuf, cfg: &Config) -> wha_lab::Result<Outcome> {
    let a = load(file, cfg)?;
    let rep = RepData::new(&a, cfg.tol(), cfg.seed)?;
    let r = class_equation(&a, &rep, cfg.tol(), cfg.seed)?;
    let json = serde_json::to_value(&r).expect("serializable");
    let mut text = format!(
        "dim A = {}\n{:<4}{:<24}{:<24}verdict   idempotent\n",
        wha_lab::repcat::clean(r.dim_a),
        "i",
        "n_i",
        "dimA/n_i"
    );
    for (i, (t, tj)) in r.terms.iter().zip(json["terms"].as_array().expect("terms")).enumerate() {
        let verdict = match t.integrality {
            wha_lab::theorems::Integrality::Integer(k) => format!("integer {k}"),
            wha_lab::theorems::Integrality::UnverifiedAlgebraicInteger(_) => "unverified".into(),
        };
        text += &format!(
            "{:<4}{:<24}{:<24}{verdict:<10}{}\n",
            i + 1,
            tj["n"].to_string(),
            tj["ratio"].to_string(),
            tj["idempotent"]
        );
    }
    text += &format!("sum holds: {}\nseed independent: {}\n", r.sum_holds, r.seed_independent);
    Ok(Outcome { text, json, ok: r.passed() })
}

fn modalg_cmd(alg: &PathBuf, module: &PathBuf, mode: Mode, cfg: &Config) -> wha_lab::Result<Outcome> {
    let a = load(alg, cfg)?;
    let file = AlgebraFile::parse(&builders::read(module)?)?;
    check_cap(file.dim, cfg.dim_cap)?;
    let json = match mode {
        Mode::Module => {
            let m = file.module_algebra(a.dim())?;
            let axioms = verify_module_algebra(&a, &m);
            let radical = jacobson_radical(&m.alg);
            let mut v = json!({
                "module": m.label,
                "axioms": axioms,
                "radical_dim": radical.len(),
            });
            let ok = if axioms.passed() {
                let st = verify_radical_stability(&a, &m, cfg.tol(), cfg.seed)?;
                v["radical_stability"] = serde_json::to_value(&st).expect("serializable");
                st.passed()
            } else {
                false
            };
            v["passed"] = ok.into();
            v
        }
        Mode::Comodule => {
            let m = file.comodule_algebra(a.dim())?;
            let axioms = verify_comodule_algebra(&a, &m);
            let right = verify_module_algebra(a.dual_ref(), &comodule_to_module(&m));
            let mut v = json!({ "comodule": m.label, "axioms": axioms, "dual_action": right });
            let ok = if axioms.passed() && right.passed() {
                let rep = RepData::new(&a, cfg.tol(), cfg.seed)?;
                let k0 = k0_module(&a, &rep, &m, cfg.tol(), cfg.seed)?;
                let orbit = orbit_theorem_check(&rep, &k0, cfg.tol());
                v["k0"] = serde_json::to_value(&k0).expect("serializable");
                v["orbit"] = serde_json::to_value(&orbit).expect("serializable");
                k0.passed() && orbit.passed()
            } else {
                false
            };
            v["passed"] = ok.into();
            v
        }
    };
    let ok = json["passed"].as_bool().unwrap_or(false);
    Ok(Outcome { text: text_of(&json), json, ok })
}

fn run(cli: &Cli) -> wha_lab::Result<bool> {
    let cfg = config(&cli.global)?;
    let outcome = match &cli.cmd {
        Cmd::Build { kind } => build(kind, &cfg)?,
        Cmd::Report { args } => report(args, &cfg)?,
        Cmd::CheckAll { file } => check_all_cmd(file, &cfg)?,
        Cmd::ClassEquation { file } => class_equation_cmd(file, &cfg)?,
        Cmd::Modalg { algebra, module, mode } => modalg_cmd(algebra, module, *mode, &cfg)?,
    };
    // build output is always JSON
    let cfg = if matches!(cli.cmd, Cmd::Build { .. }) { Config { output: Output::Text, ..cfg } } else { cfg };
    emit(&cli.global, &cfg, &outcome)?;
    Ok(outcome.ok)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
