//! Command-line front door for the workbench: query the order embedding,
//! sample the loop family, project words, run verification suites, compute
//! homology, and demo the chain representation of currents.
//!
//! Exit codes: 0 all checks pass, 1 a verification failed, 2 usage error.

use clap::{Parser, Subcommand};
use earring_core::chains::homology::{complex_from_top_simplices, homology};
use earring_core::config::WorkbenchConfig;
use earring_core::currents::current::{hawaiian_current_from_json, hawaiian_current_to_json};
use earring_core::currents::{current_to_chain1, MetricGraph};
use earring_core::earring::{project_word, sigma, sigma1_blocks, EarringPoint};
use earring_core::freegroup::{abelianize, commutator_power, single_commutator, Word};
use earring_core::rational::{format_rational, parse_rational, Rational};
use earring_core::seqorder::{density_report, enumerate_b_capped, tau, tau_oracle, Seq};
use earring_core::suites::run_suite;
use num_traits::ToPrimitive;
use serde_json::{json, Value};
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;

#[derive(Parser)]
#[command(
    name = "earringlab",
    version,
    about = "Exact verification workbench for loop calculus on the Hawaiian Earring"
)]
struct Cli {
    /// JSON config file (depths, sample counts, caps)
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Override the covering-interval depth
    #[arg(long, global = true)]
    depth: Option<u32>,
    /// Override the sample count
    #[arg(long, global = true)]
    samples: Option<u32>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate tau on a sequence literal ("1,2,3") and bracket it with the series oracle
    Tau {
        seq: String,
        #[arg(long)]
        json: bool,
    },
    /// List B_n in increasing order
    EnumB {
        n: u32,
        #[arg(long)]
        json: bool,
    },
    /// Distance profile of the covering intervals on a uniform grid
    Density {
        #[arg(long, default_value_t = 200)]
        grid: u32,
        #[arg(long)]
        csv: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Sample sigma_n at equispaced times; export CSV or SVG
    Sigma {
        n: u32,
        #[arg(long)]
        csv: Option<PathBuf>,
        #[arg(long)]
        svg: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Project sigma_1 onto the k-th tracked circle pair and analyze the word
    Word {
        k: u32,
        #[arg(long)]
        json: bool,
    },
    /// Run a verification suite: seqorder, earring, freegroup, chains, currents, all
    Suite {
        name: String,
        #[arg(long)]
        json: bool,
        /// Add a synthetic failing check (harness contract testing)
        #[arg(long, hide = true)]
        inject_failure: Option<String>,
    },
    /// Integral homology of a complex given as {"top_simplices": [[v,...],...]}
    Homology {
        path: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Chain representation of a current from JSON, with certificates
    CurrentDemo {
        path: PathBuf,
        /// Piece diameter budget, e.g. 1/4
        #[arg(long)]
        epsilon: String,
        #[arg(long)]
        json: bool,
    },
}

const EXIT_CHECK_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;

fn usage_error(message: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {message}");
    ExitCode::from(EXIT_USAGE)
}

fn io_error(message: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {message}");
    ExitCode::from(EXIT_CHECK_FAILED)
}

fn load_config(cli: &Cli) -> Result<WorkbenchConfig, String> {
    let mut cfg = match &cli.config {
        None => WorkbenchConfig::default(),
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| format!("cannot read config {}: {e}", path.display()))?;
            WorkbenchConfig::from_json(&text).map_err(|e| format!("bad config: {e}"))?
        }
    };
    if let Some(depth) = cli.depth {
        if depth == 0 {
            return Err("depth must be >= 1".into());
        }
        cfg.depth = depth;
    }
    if let Some(samples) = cli.samples {
        cfg.samples = samples;
    }
    Ok(cfg)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cfg = match load_config(&cli) {
        Ok(cfg) => cfg,
        Err(e) => return usage_error(e),
    };
    match &cli.command {
        Command::Tau { seq, json } => cmd_tau(&cfg, seq, *json),
        Command::EnumB { n, json } => cmd_enum_b(&cfg, *n, *json),
        Command::Density { grid, csv, json } => cmd_density(&cfg, *grid, csv.as_deref(), *json),
        Command::Sigma { n, csv, svg, json } => {
            cmd_sigma(&cfg, *n, csv.as_deref(), svg.as_deref(), *json)
        }
        Command::Word { k, json } => cmd_word(*k, *json),
        Command::Suite {
            name,
            json,
            inject_failure,
        } => cmd_suite(&cfg, name, *json, inject_failure.as_deref()),
        Command::Homology { path, json } => cmd_homology(path, *json),
        Command::CurrentDemo {
            path,
            epsilon,
            json,
        } => cmd_current_demo(&cfg, path, epsilon, *json),
    }
}

fn cmd_tau(cfg: &WorkbenchConfig, literal: &str, as_json: bool) -> ExitCode {
    let seq = match Seq::from_str(literal) {
        Ok(s) => s,
        Err(e) => return usage_error(e),
    };
    let value = match tau(&seq) {
        Ok(v) => v,
        Err(e) => return usage_error(e),
    };
    let (lo, hi) = tau_oracle(&seq, cfg.oracle_depth.max(seq.len() as u32))
        .expect("depth covers the sequence");
    let contained = lo <= value && value <= hi;
    if as_json {
        println!(
            "{}",
            json!({
                "seq": seq.to_string(),
                "tau": format_rational(&value),
                "oracle_lo": format_rational(&lo),
                "oracle_hi": format_rational(&hi),
                "contained": contained,
            })
        );
    } else {
        println!(
            "tau({seq}) = {} in [{}, {}] {}",
            format_rational(&value),
            format_rational(&lo),
            format_rational(&hi),
            if contained { "OK" } else { "FAIL" }
        );
    }
    if contained {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_CHECK_FAILED)
    }
}

fn cmd_enum_b(cfg: &WorkbenchConfig, n: u32, as_json: bool) -> ExitCode {
    match enumerate_b_capped(n, cfg.enum_max) {
        Ok(list) => {
            if as_json {
                let items: Vec<String> = list.iter().map(|s| s.to_string()).collect();
                println!("{}", json!({ "n": n, "count": list.len(), "elements": items }));
            } else {
                for s in &list {
                    println!("{s}");
                }
                eprintln!("{} elements", list.len());
            }
            ExitCode::SUCCESS
        }
        Err(e) => usage_error(e),
    }
}

fn cmd_density(
    cfg: &WorkbenchConfig,
    grid: u32,
    csv: Option<&Path>,
    as_json: bool,
) -> ExitCode {
    if grid < 2 {
        return usage_error("grid must be >= 2");
    }
    let report = match density_report(cfg.depth, grid) {
        Ok(r) => r,
        Err(e) => return usage_error(e),
    };
    if let Some(path) = csv {
        let mut text = String::from("grid_point,distance\n");
        for (x, d) in &report.rows {
            let _ = writeln!(text, "{},{}", format_rational(x), format_rational(d));
        }
        if let Err(e) = std::fs::write(path, text) {
            return io_error(format!("cannot write {}: {e}", path.display()));
        }
    }
    if as_json {
        println!(
            "{}",
            json!({
                "depth": report.depth,
                "grid": report.grid,
                "max_gap": format_rational(&report.max_gap),
            })
        );
    } else {
        println!(
            "depth {} grid {}: max distance to the interval family = {}",
            report.depth,
            report.grid,
            format_rational(&report.max_gap)
        );
    }
    ExitCode::SUCCESS
}

fn cmd_sigma(
    cfg: &WorkbenchConfig,
    n: u32,
    csv: Option<&Path>,
    svg: Option<&Path>,
    as_json: bool,
) -> ExitCode {
    if n == 0 {
        return usage_error("n must be >= 1");
    }
    if cfg.samples < 2 {
        return usage_error("need at least 2 samples");
    }
    let span = if n == 1 {
        Rational::from_integer(1.into())
    } else {
        match earring_core::seqorder::lambda(n) {
            Ok(l) => Rational::from_integer(2.into()) * l,
            Err(e) => return usage_error(e),
        }
    };
    let mut rows = Vec::with_capacity(cfg.samples as usize);
    for j in 0..cfg.samples {
        let t = &span * Rational::new((j as i64).into(), (cfg.samples as i64 - 1).into());
        match sigma(n, &t, cfg.depth) {
            Ok((point, bound)) => rows.push((t, point, bound)),
            Err(e) => return usage_error(e),
        }
    }
    if let Some(path) = csv {
        let mut text = String::from("t,circle,turn,error_bound\n");
        for (t, point, bound) in &rows {
            let (circle, turn) = match point {
                EarringPoint::Origin => (0u64, Rational::from_integer(0.into())),
                EarringPoint::Circle { circle, turn } => (*circle, turn.clone()),
            };
            let _ = writeln!(
                text,
                "{},{},{},{}",
                format_rational(t),
                circle,
                format_rational(&turn),
                format_rational(bound)
            );
        }
        if let Err(e) = std::fs::write(path, text) {
            return io_error(format!("cannot write {}: {e}", path.display()));
        }
    }
    if let Some(path) = svg {
        let mut points = String::new();
        for (_, point, _) in &rows {
            let (x, y) = point.chord_coords();
            let _ = write!(points, "{:.4},{:.4} ", x * 280.0 + 20.0, 300.0 - y * 280.0);
        }
        let svg_text = format!(
            "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"600\" height=\"600\" viewBox=\"0 0 600 600\">\n\
             <polyline fill=\"none\" stroke=\"black\" stroke-width=\"0.5\" points=\"{points}\"/>\n</svg>\n"
        );
        if let Err(e) = std::fs::write(path, svg_text) {
            return io_error(format!("cannot write {}: {e}", path.display()));
        }
    }
    let resolved = rows.iter().filter(|(_, _, b)| b == &Rational::from_integer(0.into())).count();
    let max_bound = rows
        .iter()
        .map(|(_, _, b)| b.clone())
        .max()
        .unwrap_or_else(|| Rational::from_integer(0.into()));
    if as_json {
        println!(
            "{}",
            json!({
                "n": n,
                "samples": cfg.samples,
                "depth": cfg.depth,
                "resolved": resolved,
                "max_error_bound": format_rational(&max_bound),
            })
        );
    } else {
        println!(
            "sigma_{n}: {} samples at depth {}, {} resolved exactly, max error bound {}",
            cfg.samples,
            cfg.depth,
            resolved,
            format_rational(&max_bound)
        );
    }
    ExitCode::SUCCESS
}

fn cmd_word(k: u32, as_json: bool) -> ExitCode {
    if k == 0 || k > 3 {
        return usage_error("k must be between 1 and 3 (word length k!*4 guard)");
    }
    let blocks = match sigma1_blocks(3) {
        Ok(b) => b,
        Err(e) => return usage_error(e),
    };
    let projected = match project_word(&blocks, k) {
        Ok(w) => w,
        Err(e) => return usage_error(e),
    };
    let a = Word::generator(1);
    let b = Word::generator(2);
    let k_factorial = earring_core::rational::factorial(k).to_u32().unwrap();
    let expected = commutator_power(&a, &b, k_factorial);
    let equals = projected == expected;
    let image = abelianize(&projected, 2).expect("two generators");
    let commutator_verdict = if k <= 2 {
        Some(single_commutator(&projected).is_some())
    } else {
        None
    };
    let mut pass = equals && image.is_zero();
    // [a,b]^{k!} is a single commutator only in the k! = 1 case
    if let Some(found) = commutator_verdict {
        pass &= found == (k_factorial <= 1);
    }
    if as_json {
        println!(
            "{}",
            json!({
                "k": k,
                "word": projected.to_string(),
                "equals_commutator_power": equals,
                "power": k_factorial,
                "abelianization": image.sums,
                "is_single_commutator": commutator_verdict,
                "pass": pass,
            })
        );
    } else {
        let mut line = format!(
            "{}; equals [a,b]^{}: {}; abelianization ({})",
            projected,
            k_factorial,
            if equals { "yes" } else { "NO" },
            image
                .sums
                .iter()
                .map(|s| s.to_string())
                .collect::<Vec<_>>()
                .join(",")
        );
        if let Some(found) = commutator_verdict {
            let _ = write!(line, "; is_single_commutator: {found}");
        }
        println!("{line}");
    }
    if pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_CHECK_FAILED)
    }
}

fn cmd_suite(
    cfg: &WorkbenchConfig,
    name: &str,
    as_json: bool,
    inject: Option<&str>,
) -> ExitCode {
    let Some(mut reports) = run_suite(name, cfg) else {
        return usage_error(format!(
            "unknown suite `{name}`; expected seqorder, earring, freegroup, chains, currents, or all"
        ));
    };
    if let Some(id) = inject {
        if let Some(first) = reports.first_mut() {
            first.inject_failure(id);
        }
    }
    let all_pass = reports.iter().all(|r| r.pass);
    if as_json {
        let values: Vec<Value> = reports.iter().map(|r| r.to_json()).collect();
        println!("{}", json!({ "pass": all_pass, "suites": values }));
    } else {
        for report in &reports {
            println!(
                "suite {} — {}",
                report.suite,
                if report.pass { "pass" } else { "FAIL" }
            );
            for check in &report.checks {
                println!(
                    "  [{}] {} ({}) — {}",
                    if check.pass { "ok" } else { "FAIL" },
                    check.id,
                    check.params,
                    check.detail
                );
            }
        }
        println!("overall: {}", if all_pass { "pass" } else { "FAIL" });
    }
    if all_pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_CHECK_FAILED)
    }
}

fn cmd_homology(path: &Path, as_json: bool) -> ExitCode {
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => return usage_error(format!("cannot read {}: {e}", path.display())),
    };
    let value: Value = match serde_json::from_str(&text) {
        Ok(v) => v,
        Err(e) => return usage_error(format!("bad JSON: {e}")),
    };
    let Some(top) = value.get("top_simplices").and_then(Value::as_array) else {
        return usage_error("expected {\"top_simplices\": [[v, ...], ...]}");
    };
    let mut cells = Vec::new();
    for cell in top {
        let Some(indices) = cell.as_array() else {
            return usage_error("cells must be arrays of vertex indices");
        };
        let mut parsed = Vec::new();
        for v in indices {
            match v.as_u64() {
                Some(i) => parsed.push(i as usize),
                None => return usage_error("vertex indices must be non-negative integers"),
            }
        }
        if parsed.is_empty() {
            return usage_error("cells must be non-empty");
        }
        cells.push(parsed);
    }
    let complex = complex_from_top_simplices(&cells);
    let groups = match homology(&complex) {
        Ok(g) => g,
        Err(e) => return usage_error(e),
    };
    if as_json {
        let out: Vec<Value> = groups
            .iter()
            .enumerate()
            .map(|(k, g)| {
                json!({
                    "degree": k,
                    "betti": g.betti,
                    "torsion": g.torsion.iter().map(|d| d.to_string()).collect::<Vec<_>>(),
                })
            })
            .collect();
        println!("{}", json!({ "homology": out }));
    } else {
        for (k, g) in groups.iter().enumerate() {
            let mut parts = Vec::new();
            if g.betti > 0 {
                parts.push(if g.betti == 1 {
                    "Z".to_string()
                } else {
                    format!("Z^{}", g.betti)
                });
            }
            for d in &g.torsion {
                parts.push(format!("Z/{d}"));
            }
            if parts.is_empty() {
                parts.push("0".to_string());
            }
            println!("H_{k} = {}", parts.join(" + "));
        }
    }
    ExitCode::SUCCESS
}

fn cmd_current_demo(
    cfg: &WorkbenchConfig,
    path: &Path,
    epsilon: &str,
    as_json: bool,
) -> ExitCode {
    let epsilon = match parse_rational(epsilon) {
        Ok(e) => e,
        Err(e) => return usage_error(e),
    };
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => return usage_error(format!("cannot read {}: {e}", path.display())),
    };
    let value: Value = match serde_json::from_str(&text) {
        Ok(v) => v,
        Err(e) => return usage_error(format!("bad JSON: {e}")),
    };
    let circles = value
        .get("circles")
        .and_then(Value::as_u64)
        .unwrap_or(cfg.max_circle_index as u64) as u32;
    let graph = MetricGraph::hawaiian_model(circles.max(1));
    let current = match hawaiian_current_from_json(&graph, &value) {
        Ok(c) => c,
        Err(e) => return usage_error(e),
    };
    let (chain, certs) = match current_to_chain1(&graph, &current, &epsilon) {
        Ok(r) => r,
        Err(e) => return io_error(format!("representation failed: {e}")),
    };
    let round_trip = chain.to_current(&graph) == current;
    let pass = certs.all_pass() && round_trip;
    if as_json {
        println!(
            "{}",
            json!({
                "input": hawaiian_current_to_json(&current),
                "epsilon": format_rational(&epsilon),
                "pieces": chain.term_count(),
                "round_trip": round_trip,
                "certificates": certs.to_json(),
                "pass": pass,
            })
        );
    } else {
        println!(
            "represented by {} chain pieces; round trip {}; certificates {}",
            chain.term_count(),
            if round_trip { "exact" } else { "FAILED" },
            if certs.all_pass() { "pass" } else { "FAIL" }
        );
        if let Some(worst) = certs
            .pieces
            .iter()
            .map(|p| p.diameter_bound.clone())
            .max()
        {
            println!(
                "  {} ball fillings, worst diameter bound {} (< epsilon {}: {})",
                certs.pieces.len(),
                format_rational(&worst),
                format_rational(&epsilon),
                worst < epsilon
            );
        }
        println!(
            "  {} slice events, all dual identities {}",
            certs.slices.len(),
            if certs.slices.iter().all(|s| s.dual_identity) {
                "verified"
            } else {
                "FAILED"
            }
        );
    }
    if pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_CHECK_FAILED)
    }
}
