//! Python bindings for the workbench: the order embedding, loop sampling,
//! word calculus, homology, suites, and the current-representation demo.
//!
//! Rationals cross the boundary as `"p/q"` strings in lowest terms; points
//! of the bouquet as `(circle, turn)` pairs with circle 0 for the origin.

use earring_core::chains::homology::{complex_from_top_simplices, homology};
use earring_core::config::WorkbenchConfig;
use earring_core::currents::current::hawaiian_current_from_json;
use earring_core::currents::{current_to_chain1, MetricGraph};
use earring_core::earring::{self, EarringPoint};
use earring_core::freegroup::{self, Word};
use earring_core::rational::{format_rational, parse_rational};
use earring_core::seqorder::{self, LocateResult, Seq};
use earring_core::suites;
use num_traits::ToPrimitive;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

fn value_error(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// `λ(n) = 1/(2^n n!)` as a rational string.
#[pyfunction]
fn lambda_weight(n: u32) -> PyResult<String> {
    seqorder::lambda(n)
        .map(|r| format_rational(&r))
        .map_err(value_error)
}

/// `τ(s)` for a bounded sequence given by its entries.
#[pyfunction]
fn tau(entries: Vec<u32>) -> PyResult<String> {
    let seq = Seq::new(entries).map_err(value_error)?;
    seqorder::tau(&seq)
        .map(|r| format_rational(&r))
        .map_err(value_error)
}

/// Series-oracle bracket `(lo, hi)` with tail bound `2^-depth`.
#[pyfunction]
fn tau_oracle(entries: Vec<u32>, depth: u32) -> PyResult<(String, String)> {
    let seq = Seq::new(entries).map_err(value_error)?;
    seqorder::tau_oracle(&seq, depth)
        .map(|(lo, hi)| (format_rational(&lo), format_rational(&hi)))
        .map_err(value_error)
}

/// All of `B_n` in increasing order, as entry lists.
#[pyfunction]
fn enumerate_b(n: u32) -> PyResult<Vec<Vec<u32>>> {
    seqorder::enumerate_b(n)
        .map(|list| list.iter().map(|s| s.entries().to_vec()).collect())
        .map_err(value_error)
}

/// Locates `x` against the covering intervals: either
/// `("interval", entries, offset)` or `("gap", depth, bound)`.
#[pyfunction]
fn locate(py: Python<'_>, x: &str, depth: u32) -> PyResult<Py<PyAny>> {
    let value = parse_rational(x).map_err(value_error)?;
    match seqorder::locate(&value, depth).map_err(value_error)? {
        LocateResult::Interval { seq, offset } => Ok((
            "interval",
            seq.entries().to_vec(),
            format_rational(&offset),
        )
            .into_pyobject(py)?
            .into_any()
            .unbind()),
        LocateResult::Gap { depth, bound } => Ok(("gap", depth, format_rational(&bound))
            .into_pyobject(py)?
            .into_any()
            .unbind()),
    }
}

/// Maximum distance from a uniform grid to the covering intervals.
#[pyfunction]
fn density_max_gap(depth: u32, grid: u32) -> PyResult<String> {
    seqorder::density_report(depth, grid)
        .map(|r| format_rational(&r.max_gap))
        .map_err(value_error)
}

/// The pinned circle index `n_k`.
#[pyfunction]
fn choose_circle(k: u32) -> u64 {
    earring::choose_n(k)
}

/// Evaluates `σₙ(t)`: returns `((circle, turn), error_bound)`; circle 0
/// denotes the origin.
#[pyfunction]
fn sigma(n: u32, t: &str, depth: u32) -> PyResult<((u64, String), String)> {
    let time = parse_rational(t).map_err(value_error)?;
    let (point, bound) = earring::sigma(n, &time, depth).map_err(value_error)?;
    let encoded = match point {
        EarringPoint::Origin => (0u64, "0".to_string()),
        EarringPoint::Circle { circle, turn } => (circle, format_rational(&turn)),
    };
    Ok((encoded, format_rational(&bound)))
}

/// Length-metric distance between two bouquet points as an exact
/// π-coefficient string (circle 0 = origin).
#[pyfunction]
fn distance_pi_coefficient(p: (u64, String), q: (u64, String)) -> PyResult<String> {
    let decode = |(circle, turn): (u64, String)| -> PyResult<EarringPoint> {
        if circle == 0 {
            Ok(EarringPoint::Origin)
        } else {
            let t = parse_rational(&turn).map_err(value_error)?;
            Ok(EarringPoint::on_circle(circle, &t))
        }
    };
    let a = decode(p)?;
    let b = decode(q)?;
    Ok(format_rational(&earring::distance_pi_coeff(&a, &b)))
}

/// Samples both sides of the recursion identity; true when every sample
/// agrees within its certified bounds.
#[pyfunction]
fn verify_recursion(n: u32, samples: u32, depth: u32) -> PyResult<bool> {
    earring::verify_recursion(n, samples, depth, 4)
        .map(|r| r.pass)
        .map_err(value_error)
}

/// Projects the symbolic σ₁ assembly onto the k-th circle pair.
#[pyfunction]
fn project_sigma_word(k: u32, cutoff: u32) -> PyResult<String> {
    let blocks = earring::sigma1_blocks(cutoff).map_err(value_error)?;
    earring::project_word(&blocks, k)
        .map(|w| w.to_string())
        .map_err(value_error)
}

/// Free reduction of a word literal over a-z/A-Z.
#[pyfunction]
fn reduce_word(text: &str) -> PyResult<String> {
    text.parse::<Word>()
        .map(|w| w.to_string())
        .map_err(value_error)
}

/// Reduced form of `[x, y]^n`.
#[pyfunction]
fn commutator_power(x: &str, y: &str, n: u32) -> PyResult<String> {
    let wx: Word = x.parse().map_err(value_error)?;
    let wy: Word = y.parse().map_err(value_error)?;
    Ok(freegroup::commutator_power(&wx, &wy, n).to_string())
}

/// Exponent-sum vector of a word in the given rank.
#[pyfunction]
fn abelianize(text: &str, rank: u32) -> PyResult<Vec<i64>> {
    let w: Word = text.parse().map_err(value_error)?;
    freegroup::abelianize(&w, rank)
        .map(|img| img.sums)
        .map_err(value_error)
}

/// Single-commutator search: `(x, y)` with `[x, y]` equal to the word, or
/// `None`.
#[pyfunction]
fn single_commutator(text: &str) -> PyResult<Option<(String, String)>> {
    let w: Word = text.parse().map_err(value_error)?;
    Ok(freegroup::single_commutator(&w).map(|wit| (wit.x.to_string(), wit.y.to_string())))
}

/// Integral homology of the complex spanned by the given top cells:
/// a list of `(betti, torsion)` pairs by degree.
#[pyfunction]
fn homology_from_top(top: Vec<Vec<usize>>) -> PyResult<Vec<(usize, Vec<u64>)>> {
    let complex = complex_from_top_simplices(&top);
    homology(&complex)
        .map(|groups| {
            groups
                .iter()
                .map(|g| {
                    (
                        g.betti,
                        g.torsion
                            .iter()
                            .map(|d| d.to_u64().unwrap_or(0))
                            .collect(),
                    )
                })
                .collect()
        })
        .map_err(value_error)
}

/// Runs a named verification suite and returns the JSON report.
#[pyfunction]
fn run_suite(name: &str) -> PyResult<String> {
    let cfg = WorkbenchConfig::default();
    let reports = suites::run_suite(name, &cfg)
        .ok_or_else(|| value_error(format!("unknown suite `{name}`")))?;
    let values: Vec<serde_json::Value> = reports.iter().map(|r| r.to_json()).collect();
    let pass = reports.iter().all(|r| r.pass);
    Ok(serde_json::json!({ "pass": pass, "suites": values }).to_string())
}

/// Chain representation of a bouquet current (JSON serialization) with
/// certificates; returns the certificate JSON.
#[pyfunction]
fn represent_current(json_text: &str, epsilon: &str) -> PyResult<String> {
    let value: serde_json::Value = serde_json::from_str(json_text).map_err(value_error)?;
    let circles = value.get("circles").and_then(|v| v.as_u64()).unwrap_or(8) as u32;
    let graph = MetricGraph::hawaiian_model(circles.max(1));
    let current = hawaiian_current_from_json(&graph, &value).map_err(value_error)?;
    let eps = parse_rational(epsilon).map_err(value_error)?;
    let (chain, certs) = current_to_chain1(&graph, &current, &eps).map_err(value_error)?;
    let round_trip = chain.to_current(&graph) == current;
    let mut report = certs.to_json();
    report["round_trip"] = serde_json::Value::Bool(round_trip);
    report["pieces_in_chain"] = serde_json::Value::from(chain.term_count());
    Ok(report.to_string())
}

#[pymodule]
fn earringlab_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(lambda_weight, m)?)?;
    m.add_function(wrap_pyfunction!(tau, m)?)?;
    m.add_function(wrap_pyfunction!(tau_oracle, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_b, m)?)?;
    m.add_function(wrap_pyfunction!(locate, m)?)?;
    m.add_function(wrap_pyfunction!(density_max_gap, m)?)?;
    m.add_function(wrap_pyfunction!(choose_circle, m)?)?;
    m.add_function(wrap_pyfunction!(sigma, m)?)?;
    m.add_function(wrap_pyfunction!(distance_pi_coefficient, m)?)?;
    m.add_function(wrap_pyfunction!(verify_recursion, m)?)?;
    m.add_function(wrap_pyfunction!(project_sigma_word, m)?)?;
    m.add_function(wrap_pyfunction!(reduce_word, m)?)?;
    m.add_function(wrap_pyfunction!(commutator_power, m)?)?;
    m.add_function(wrap_pyfunction!(abelianize, m)?)?;
    m.add_function(wrap_pyfunction!(single_commutator, m)?)?;
    m.add_function(wrap_pyfunction!(homology_from_top, m)?)?;
    m.add_function(wrap_pyfunction!(run_suite, m)?)?;
    m.add_function(wrap_pyfunction!(represent_current, m)?)?;
    Ok(())
}
