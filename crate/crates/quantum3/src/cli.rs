//! The `quantum3` command line: validation, invariant computation, Pachner
//! fuzzing, builtin emission, and machine-readable JSON output.

use std::collections::BTreeSet;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand};
use serde_json::json;

use crate::builtins;
use crate::category::validate::{
    check_hexagon, check_orthonormality, check_pentagon, check_ribbon, spherical_sanity,
    validate_fusion_ring,
};
use crate::category::modular::{delta_pm, is_modular, s_matrix, s_matrix_sanity};
use crate::config::RunConfig;
use crate::diagram::evaluate_kirby;
use crate::io;
use crate::scalar::{Scalar, Tolerance};
use crate::state_sum::{build_network, contract_network, elimination_order, tv_enumerate, Strategy};
use crate::surgery::{linking_matrix, signature_counts, tau, wrt_with_bracket};
use crate::triangulation::builders;
use crate::triangulation::pachner::{fuzz_walk, Move};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Parser, Debug)]
#[command(name = "quantum3", about = "Quantum 3-manifold invariants from fusion category data", disable_help_subcommand = true)]
pub struct Cli {
    /// Relative tolerance for scalar comparisons
    #[arg(long, global = true, default_value_t = 1e-9)]
    pub tol: f64,
    /// Seed for randomized subcommands
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Worker threads for label sums (results are identical to serial runs)
    #[arg(long, global = true, default_value_t = 1)]
    pub workers: usize,
    /// Emit a single JSON object instead of text
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Validate a category data file (axioms, pentagon, orthonormality, hexagons)
    Validate { file: PathBuf },
    /// Emit a builtin category data set
    Builtin {
        /// one of: vec_z2, vec_z3, fibonacci, ising
        name: String,
        /// output path for the category file
        #[arg(long)]
        emit: Option<PathBuf>,
    },
    /// Triangulation utilities
    Tri {
        #[command(subcommand)]
        command: TriCommand,
    },
    /// State-sum invariant of a triangulation
    Tv {
        category: PathBuf,
        triangulation: PathBuf,
        #[arg(long, default_value = "contract")]
        method: String,
        #[arg(long, default_value = "min-fill")]
        strategy: String,
        #[arg(long, default_value_t = 10_000_000)]
        cap_states: u64,
        #[arg(long, default_value_t = 10_000_000)]
        cap_width: u64,
    },
    /// Evaluate a colored framed link diagram
    Eval {
        category: PathBuf,
        diagram: PathBuf,
        /// comma-separated component ids to color with the Kirby color
        #[arg(long)]
        omega: Option<String>,
    },
    /// Surgery invariant of a presentation
    Wrt {
        category: PathBuf,
        presentation: PathBuf,
        /// also print the TQFT normalization τ
        #[arg(long)]
        tau: bool,
        /// square root of the global dimension as `re,im` (defaults to the principal root)
        #[arg(long)]
        sqrt_dim: Option<String>,
    },
    /// Random Pachner moves preserving validity (and the invariant, when a category is given)
    PachnerFuzz {
        triangulation: PathBuf,
        #[arg(long, default_value_t = 20)]
        moves: usize,
        /// also check invariance of the state sum over this category file
        #[arg(long)]
        category: Option<PathBuf>,
        #[arg(long, default_value_t = 24)]
        max_tets: usize,
    },
    /// Verlinde dimension of the genus-g block space
    Verlinde {
        category: PathBuf,
        #[arg(long)]
        genus: u32,
    },
}

#[derive(Subcommand, Debug)]
pub enum TriCommand {
    /// Validate a triangulation file
    Validate { file: PathBuf },
    /// Class counts and Euler characteristic
    Info { file: PathBuf },
    /// Emit a builtin triangulation: s3, s1xs2, or `lens:<p>`
    Emit { name: String, out: PathBuf },
}

/// Outcome of one dispatch: exit code plus the full report text.
pub struct Report {
    pub exit_code: i32,
    pub output: String,
}

/// Entry point used by the binary and by tests: parses `argv`, runs the
/// subcommand, and renders text or JSON.
pub fn dispatch<I, T>(argv: I) -> Report
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            return Report { exit_code: 2, output: e.to_string() };
        }
    };
    let config = RunConfig {
        tolerance: Tolerance::new(cli.tol),
        seed: cli.seed,
        workers: cli.workers.max(1),
        json: cli.json,
        ..RunConfig::default()
    };
    let started = Instant::now();
    match run(cli.command, &config) {
        Ok((mut value, text)) => {
            if config.json {
                value["schema_version"] = json!(SCHEMA_VERSION);
                value["wall_time_ms"] = json!(started.elapsed().as_millis() as u64);
                Report { exit_code: 0, output: serde_json::to_string_pretty(&value).unwrap() }
            } else {
                Report { exit_code: 0, output: text }
            }
        }
        Err(e) => Report { exit_code: e.exit_code, output: e.message },
    }
}

struct CommandError {
    exit_code: i32,
    message: String,
}

fn usage_err(message: impl Into<String>) -> CommandError {
    CommandError { exit_code: 2, message: message.into() }
}

fn validation_err(message: impl Into<String>) -> CommandError {
    CommandError { exit_code: 1, message: message.into() }
}

impl From<io::FileError> for CommandError {
    fn from(e: io::FileError) -> Self {
        // unreadable or malformed files are usage errors; well-formed files
        // describing invalid data are validation failures
        match e {
            io::FileError::Read { .. } | io::FileError::Parse { .. } | io::FileError::Schema { .. } => {
                usage_err(e.to_string())
            }
            _ => validation_err(e.to_string()),
        }
    }
}

fn fmt_scalar(v: Scalar) -> String {
    format!("{:+.12e} {:+.12e}i", v.re, v.im)
}

fn parse_strategy(s: &str) -> Result<Strategy, CommandError> {
    match s {
        "min-fill" => Ok(Strategy::MinFill),
        "min-degree" => Ok(Strategy::MinDegree),
        other => Err(usage_err(format!("unknown strategy {other:?} (use min-fill or min-degree)"))),
    }
}

fn run(cmd: Command, config: &RunConfig) -> Result<(serde_json::Value, String), CommandError> {
    let tol = &config.tolerance;
    match cmd {
        Command::Validate { file } => {
            let loaded = io::load_category(&file)?;
            let mut lines = Vec::new();
            let mut failures = Vec::new();
            let data = loaded.spherical();
            let ring_report = validate_fusion_ring(&data.ring);
            for v in &ring_report {
                failures.push(format!("fusion ring: {v}"));
            }
            for issue in spherical_sanity(data, tol) {
                failures.push(format!("spherical data: {issue}"));
            }
            let mut residuals = serde_json::Map::new();
            let check = |name: &str,
                             res: Result<f64, crate::category::CategoryError>,
                             lines: &mut Vec<String>,
                             failures: &mut Vec<String>|
             -> Option<f64> {
                match res {
                    Ok(r) => {
                        lines.push(format!("{name} residual: {r:.3e}"));
                        if r > tol.eps {
                            failures.push(format!("{name} residual {r:.3e} exceeds tolerance {:.1e}", tol.eps));
                        }
                        Some(r)
                    }
                    Err(e) => {
                        failures.push(format!("{name}: {e}"));
                        None
                    }
                }
            };
            if let Some(r) = check("pentagon", check_pentagon(data), &mut lines, &mut failures) {
                residuals.insert("pentagon".into(), json!(r));
            }
            if let Some(r) = check("orthonormality", check_orthonormality(data), &mut lines, &mut failures) {
                residuals.insert("orthonormality".into(), json!(r));
            }
            let mut modular_flag = None;
            if let Some(m) = loaded.modular() {
                if let Some(r) = check("hexagon", check_hexagon(m), &mut lines, &mut failures) {
                    residuals.insert("hexagon".into(), json!(r));
                }
                if let Some(r) = check("ribbon", check_ribbon(m), &mut lines, &mut failures) {
                    residuals.insert("ribbon".into(), json!(r));
                }
                match s_matrix(m) {
                    Ok(s) => {
                        let sres = s_matrix_sanity(m, &s);
                        residuals.insert("s_matrix".into(), json!(sres));
                        lines.push(format!("s-matrix sanity residual: {sres:.3e}"));
                        if sres > tol.eps {
                            failures.push(format!("s-matrix sanity residual {sres:.3e} exceeds tolerance"));
                        }
                        let md = is_modular(m, tol).map_err(|e| validation_err(e.to_string()))?;
                        modular_flag = Some(md);
                        lines.push(format!("modular: {md}"));
                        if md {
                            let (dp, dm) = delta_pm(m);
                            let res = (dp * dm - m.base.global_dim()).norm();
                            residuals.insert("delta_product".into(), json!(res));
                            lines.push(format!("delta+ * delta- residual: {res:.3e}"));
                            if res > tol.eps {
                                failures.push(format!("delta product residual {res:.3e} exceeds tolerance"));
                            }
                        }
                    }
                    Err(e) => failures.push(format!("s-matrix: {e}")),
                }
            }
            let ok = failures.is_empty();
            let mut text = lines.join("\n");
            if !ok {
                text.push_str("\nFAILURES:\n");
                text.push_str(&failures.join("\n"));
            } else {
                text.push_str("\nvalid");
            }
            let value = json!({
                "command": "validate",
                "valid": ok,
                "failures": failures,
                "residuals": residuals,
                "modular": modular_flag,
                "global_dim": [loaded.spherical().global_dim().re, loaded.spherical().global_dim().im],
            });
            if ok {
                Ok((value, text))
            } else {
                Err(validation_err(if config.json {
                    let mut v = value;
                    v["schema_version"] = json!(SCHEMA_VERSION);
                    serde_json::to_string_pretty(&v).unwrap()
                } else {
                    text
                }))
            }
        }
        Command::Builtin { name, emit } => {
            let b = builtins::by_name(&name)
                .ok_or_else(|| usage_err(format!("unknown builtin {name:?}; available: {:?}", builtins::BUILTIN_NAMES)))?;
            let file = match &b {
                builtins::BuiltinData::Spherical(s) => io::CategoryFile::from_spherical(s),
                builtins::BuiltinData::Modular(m) => io::CategoryFile::from_modular(m),
            };
            let mut text = format!(
                "builtin {name}: rank {}, global dim {}",
                b.spherical().rank(),
                fmt_scalar(b.spherical().global_dim())
            );
            if let Some(path) = &emit {
                io::save_category(path, &file)?;
                text.push_str(&format!("\nwrote {}", path.display()));
            }
            let value = json!({
                "command": "builtin",
                "name": name,
                "rank": b.spherical().rank(),
                "emitted": emit.map(|p| p.display().to_string()),
            });
            Ok((value, text))
        }
        Command::Tri { command } => run_tri(command, config),
        Command::Tv { category, triangulation, method, strategy, cap_states, cap_width } => {
            let cat = io::load_category(&category)?;
            let tri = io::load_triangulation(&triangulation)?;
            let data = cat.spherical();
            let started = Instant::now();
            let (value, method_used, width, states) = match method.as_str() {
                "enumerate" => {
                    let (v, n) = tv_enumerate(data, &tri, cap_states)
                        .map_err(|e| validation_err(e.to_string()))?;
                    (v, "enumerate", None, Some(n))
                }
                "contract" => {
                    let strat = parse_strategy(&strategy)?;
                    let net = build_network(data, &tri).map_err(|e| validation_err(e.to_string()))?;
                    let order = plan_order(&net, &strat, &strategy)?;
                    let r = contract_network(&net, &order, cap_width)
                        .map_err(|e| validation_err(e.to_string()))?;
                    (r.value, "contract", Some(r.width), None)
                }
                other => return Err(usage_err(format!("unknown method {other:?}"))),
            };
            let ms = started.elapsed().as_millis() as u64;
            let text = format!(
                "tv = {}  (method {method_used}{}{})",
                fmt_scalar(value),
                width.map(|w| format!(", width {w}")).unwrap_or_default(),
                states.map(|s| format!(", states {s}")).unwrap_or_default(),
            );
            let jd = json!({
                "command": "tv",
                "value": [value.re, value.im],
                "method": method_used,
                "width": width,
                "states": states,
                "compute_ms": ms,
            });
            Ok((jd, text))
        }
        Command::Eval { category, diagram, omega } => {
            let cat = io::load_category(&category)?;
            let m = cat
                .modular()
                .ok_or_else(|| usage_err("diagram evaluation needs braided data (rsym/twist)"))?;
            let d = io::load_diagram(&diagram)?;
            let omega_set: BTreeSet<u32> = match omega {
                None => BTreeSet::new(),
                Some(s) => s
                    .split(',')
                    .filter(|t| !t.is_empty())
                    .map(|t| t.trim().parse::<u32>().map_err(|_| usage_err(format!("bad component id {t:?}"))))
                    .collect::<Result<_, _>>()?,
            };
            let v = evaluate_kirby(m, &d, &omega_set, config.workers)
                .map_err(|e| validation_err(e.to_string()))?;
            let text = format!("bracket = {}", fmt_scalar(v));
            let jd = json!({
                "command": "eval",
                "value": [v.re, v.im],
                "omega": omega_set.iter().collect::<Vec<_>>(),
            });
            Ok((jd, text))
        }
        Command::Wrt { category, presentation, tau: want_tau, sqrt_dim } => {
            let cat = io::load_category(&category)?;
            let m = cat
                .modular()
                .ok_or_else(|| usage_err("surgery invariants need modular data (rsym/twist)"))?;
            let p = io::load_presentation(&presentation)?;
            let lk = linking_matrix(&p).map_err(|e| validation_err(e.to_string()))?;
            let (ep, em, nullity) = signature_counts(&lk);
            if !crate::category::modular::is_modular(m, tol).map_err(|e| validation_err(e.to_string()))? {
                return Err(validation_err("category is not modular (S-matrix not invertible)"));
            }
            let (bracket, w) = wrt_with_bracket(m, &p, config.workers)
                .map_err(|e| validation_err(e.to_string()))?;
            let mut text = format!(
                "wrt = {}  (bracket {}, e+ {ep}, e- {em}, nullity {nullity})",
                fmt_scalar(w),
                fmt_scalar(bracket)
            );
            let mut tau_value = None;
            if want_tau {
                let root = match sqrt_dim {
                    Some(s) => parse_scalar(&s)?,
                    None => m.base.global_dim().sqrt(),
                };
                let t = tau(m, root, &p, tol, config.workers)
                    .map_err(|e| validation_err(e.to_string()))?;
                text.push_str(&format!("\ntau = {}", fmt_scalar(t)));
                tau_value = Some(t);
            }
            let jd = json!({
                "command": "wrt",
                "value": [w.re, w.im],
                "bracket": [bracket.re, bracket.im],
                "e_plus": ep,
                "e_minus": em,
                "nullity": nullity,
                "linking_matrix": lk.entries,
                "tau": tau_value.map(|t| vec![t.re, t.im]),
            });
            Ok((jd, text))
        }
        Command::PachnerFuzz { triangulation, moves, category, max_tets } => {
            let tri = io::load_triangulation(&triangulation)?;
            let cat = category.map(|p| io::load_category(&p)).transpose()?;
            let walk = fuzz_walk(&tri, moves, config.seed, max_tets);
            let mut max_dev = 0f64;
            let mut base = None;
            if let Some(cat) = &cat {
                let data = cat.spherical();
                let r0 = crate::state_sum::tv_contract(data, &tri, &config.strategy, config.cap_entries)
                    .map_err(|e| validation_err(e.to_string()))?;
                base = Some(r0.value);
                for (_, t) in &walk {
                    let r = crate::state_sum::tv_contract(data, t, &config.strategy, config.cap_entries)
                        .map_err(|e| validation_err(e.to_string()))?;
                    max_dev = max_dev.max((r.value - r0.value).norm());
                }
            }
            let moves_applied: Vec<String> = walk
                .iter()
                .map(|(m, _)| match m {
                    Move::Expand23(t) => format!("2-3@{t}"),
                    Move::Expand14(t) => format!("1-4@{t}"),
                    Move::Shrink32(e) => format!("3-2@{e}"),
                    Move::Shrink41(v) => format!("4-1@{v}"),
                })
                .collect();
            let final_tets = walk.last().map(|(_, t)| t.n_tets()).unwrap_or(tri.n_tets());
            let mut text = format!(
                "applied {} moves (seed {}), final size {} tets",
                walk.len(),
                config.seed,
                final_tets
            );
            if cat.is_some() {
                text.push_str(&format!("\nmax invariant deviation: {max_dev:.3e}"));
                if max_dev > 1e-8 {
                    return Err(validation_err(format!("invariant drifted by {max_dev:.3e}")));
                }
            }
            let jd = json!({
                "command": "pachner-fuzz",
                "moves": moves_applied,
                "final_tets": final_tets,
                "max_deviation": if cat.is_some() { Some(max_dev) } else { None },
                "base_value": base.map(|v| vec![v.re, v.im]),
            });
            Ok((jd, text))
        }
        Command::Verlinde { category, genus } => {
            let cat = io::load_category(&category)?;
            let m = cat
                .modular()
                .ok_or_else(|| usage_err("the Verlinde formula needs modular data"))?;
            let v = crate::surgery::verlinde_dim(m, genus);
            let text = format!("verlinde dim (genus {genus}) = {}", fmt_scalar(v));
            let jd = json!({
                "command": "verlinde",
                "genus": genus,
                "value": [v.re, v.im],
            });
            Ok((jd, text))
        }
    }
}

fn run_tri(cmd: TriCommand, _config: &RunConfig) -> Result<(serde_json::Value, String), CommandError> {
    match cmd {
        TriCommand::Validate { file } => {
            let tri = io::load_triangulation(&file)?;
            let text = format!(
                "valid: {} vertices, {} edges, {} triangles, {} tetrahedra",
                tri.n_vertices(),
                tri.n_edge_classes(),
                tri.n_triangle_classes(),
                tri.n_tets()
            );
            let jd = json!({
                "command": "tri validate",
                "valid": true,
                "vertices": tri.n_vertices(),
                "edges": tri.n_edge_classes(),
                "triangles": tri.n_triangle_classes(),
                "tetrahedra": tri.n_tets(),
            });
            Ok((jd, text))
        }
        TriCommand::Info { file } => {
            let tri = io::load_triangulation(&file)?;
            let text = format!(
                "vertices {}\nedges {}\ntriangles {}\ntetrahedra {}\neuler {}",
                tri.n_vertices(),
                tri.n_edge_classes(),
                tri.n_triangle_classes(),
                tri.n_tets(),
                tri.euler_characteristic()
            );
            let jd = json!({
                "command": "tri info",
                "vertices": tri.n_vertices(),
                "edges": tri.n_edge_classes(),
                "triangles": tri.n_triangle_classes(),
                "tetrahedra": tri.n_tets(),
                "euler": tri.euler_characteristic(),
            });
            Ok((jd, text))
        }
        TriCommand::Emit { name, out } => {
            let tri = if name == "s3" {
                builders::sphere_s3()
            } else if name == "s1xs2" {
                builders::s1_x_s2()
            } else if let Some(p) = name.strip_prefix("lens:") {
                let p: usize = p
                    .parse()
                    .map_err(|_| usage_err(format!("bad lens parameter in {name:?}")))?;
                if p < 2 {
                    return Err(usage_err("lens parameter must be at least 2"));
                }
                builders::lens(p)
            } else {
                return Err(usage_err(format!(
                    "unknown triangulation {name:?}; available: s3, s1xs2, lens:<p>"
                )));
            };
            io::save_triangulation(&out, &tri)?;
            let text = format!("wrote {} ({} tetrahedra)", out.display(), tri.n_tets());
            let jd = json!({
                "command": "tri emit",
                "name": name,
                "out": out.display().to_string(),
                "tetrahedra": tri.n_tets(),
            });
            Ok((jd, text))
        }
    }
}

/// Elimination-order planning with optional memoization under
/// `QUANTUM3_CACHE_DIR` (keyed by factor scopes and strategy).
fn plan_order(
    net: &crate::state_sum::EdgeTensorNetwork,
    strat: &Strategy,
    strategy_name: &str,
) -> Result<Vec<usize>, CommandError> {
    let cache_dir = std::env::var_os("QUANTUM3_CACHE_DIR");
    let key = cache_dir.as_ref().map(|dir| {
        let mut desc = format!("v{SCHEMA_VERSION}:{strategy_name}:{}:{}", net.rank, net.n_vars);
        let mut scopes: Vec<Vec<usize>> = net.factors.iter().map(|f| f.vars.clone()).collect();
        scopes.sort();
        for s in &scopes {
            desc.push(';');
            for v in s {
                desc.push_str(&format!("{v},"));
            }
        }
        let mut h: u64 = 0xcbf29ce484222325;
        for b in desc.as_bytes() {
            h ^= *b as u64;
            h = h.wrapping_mul(0x100000001b3);
        }
        (PathBuf::from(dir).join(format!("plan-{h:016x}.json")), desc)
    });
    if let Some((path, _)) = &key {
        if let Ok(text) = std::fs::read_to_string(path) {
            if let Ok(order) = serde_json::from_str::<Vec<usize>>(&text) {
                if elimination_order(net, &Strategy::Given(order.clone())).is_ok() {
                    return Ok(order);
                }
            }
        }
    }
    let (order, _) = elimination_order(net, strat).map_err(|e| validation_err(e.to_string()))?;
    if let Some((path, _)) = &key {
        if let Some(parent) = path.parent() {
            let _ = std::fs::create_dir_all(parent);
        }
        let _ = std::fs::write(path, serde_json::to_string(&order).unwrap());
    }
    Ok(order)
}

fn parse_scalar(s: &str) -> Result<Scalar, CommandError> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 2 {
        return Err(usage_err(format!("expected re,im but got {s:?}")));
    }
    let re: f64 = parts[0].trim().parse().map_err(|_| usage_err("bad real part"))?;
    let im: f64 = parts[1].trim().parse().map_err(|_| usage_err("bad imaginary part"))?;
    Ok(Scalar::new(re, im))
}

/// Helper for `Path`-less callers in tests.
pub fn dispatch_str(args: &[&str]) -> Report {
    dispatch(args.iter().map(|s| s.to_string()))
}

#[allow(unused)]
fn _path_check(_: &Path) {}
