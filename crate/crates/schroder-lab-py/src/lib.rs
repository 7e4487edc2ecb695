//! Python bindings: thin wrappers over the schroder-lab library exposing the
//! path families, counts, statistics, parking functions and the recursive
//! formulas.  Counts come back as Python integers of arbitrary size.

use num_bigint::BigUint;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use schroder_lab::counting;
use schroder_lab::lattice::{enumerate_paths, PathSpec, Rat, SlopeMode};
use schroder_lab::parking;
use schroder_lab::recursions::{
    BetaIndexMode, Evaluator, PschBoundaryMode, SplitIndexMode, VariantConfig,
};
use schroder_lab::stats::{self, DinvVariant, Interpretation};
use schroder_lab::verifier::{self, Status, VerifyLimits};

fn parse_mode(mode: &str) -> PyResult<SlopeMode> {
    match mode {
        "integer-slope" => Ok(SlopeMode::IntegerSlope),
        "unit-fraction" => Ok(SlopeMode::UnitFraction),
        other => Err(PyValueError::new_err(format!(
            "unknown mode {other:?}; use \"integer-slope\" or \"unit-fraction\""
        ))),
    }
}

fn build_spec(mode: &str, n: u64, d: u64, r: u64, h: Option<u64>) -> PyResult<PathSpec> {
    let spec = PathSpec::new(parse_mode(mode)?, n, d, r)
        .map_err(|e| PyValueError::new_err(e.to_string()))?;
    match h {
        Some(h) => spec
            .with_constraint(h)
            .map_err(|e| PyValueError::new_err(e.to_string())),
        None => Ok(spec),
    }
}

fn parse_variant(variant: &str) -> PyResult<DinvVariant> {
    match variant {
        "schroder-r1" => Ok(DinvVariant::SchroderR1),
        "haiman" => Ok(DinvVariant::Haiman),
        "proposed-d1" => Ok(DinvVariant::ProposedD1),
        other => Err(PyValueError::new_err(format!("unknown dinv variant {other:?}"))),
    }
}

fn parse_interpretation(interpretation: &str) -> PyResult<Interpretation> {
    match interpretation {
        "left-area" => Ok(Interpretation::LeftArea),
        "line-area" => Ok(Interpretation::LineArea),
        other => Err(PyValueError::new_err(format!(
            "unknown interpretation {other:?}"
        ))),
    }
}

fn parse_config(beta: &str, boundary: &str, split: &str) -> PyResult<VariantConfig> {
    let beta_index_mode = match beta {
        "literal" => BetaIndexMode::LiteralBetaI,
        "partial-sum" => BetaIndexMode::PartialSumBeta,
        other => return Err(PyValueError::new_err(format!("unknown beta mode {other:?}"))),
    };
    let psch_degenerate_mode = match boundary {
        "literal" => PschBoundaryMode::LiteralFormula,
        "region-fallback" => PschBoundaryMode::RegionFallback,
        other => {
            return Err(PyValueError::new_err(format!(
                "unknown boundary mode {other:?}"
            )))
        }
    };
    let split_index_mode = match split {
        "literal" => SplitIndexMode::LiteralShift,
        "repaired" => SplitIndexMode::Repaired,
        other => return Err(PyValueError::new_err(format!("unknown split mode {other:?}"))),
    };
    Ok(VariantConfig {
        beta_index_mode,
        psch_degenerate_mode,
        split_index_mode,
    })
}

/// Number of integer-slope paths with n strips, d down steps and slope r.
#[pyfunction]
fn count_schroder(n: u64, d: u64, r: u64) -> BigUint {
    counting::count_schroder(n, d, r)
}

/// Fuss-Catalan specialization d = n.
#[pyfunction]
fn count_fuss_catalan(n: u64, r: u64) -> BigUint {
    counting::count_fuss_catalan(n, r)
}

/// Closed-form parking-function count of the integer-slope family.
#[pyfunction]
fn count_parking_closed(n: u64, d: u64, r: u64) -> PyResult<BigUint> {
    counting::count_parking_closed(n, d, r).map_err(|e| PyValueError::new_err(e.to_string()))
}

/// Parking-function count by enumeration (any mode, optional constraint).
#[pyfunction]
#[pyo3(signature = (mode, n, d, r, h=None))]
fn brute_count_parking(mode: &str, n: u64, d: u64, r: u64, h: Option<u64>) -> PyResult<BigUint> {
    let spec = build_spec(mode, n, d, r, h)?;
    Ok(parking::brute_count_parking(&spec))
}

/// All paths of a family as (steps, [(value, barred), ...]) pairs.
#[pyfunction]
#[pyo3(signature = (mode, n, d, r, h=None))]
fn paths(
    mode: &str,
    n: u64,
    d: u64,
    r: u64,
    h: Option<u64>,
) -> PyResult<Vec<(String, Vec<(u64, bool)>)>> {
    let spec = build_spec(mode, n, d, r, h)?;
    Ok(enumerate_paths(&spec)
        .map(|p| (p.steps_string(), p.encode().pairs()))
        .collect())
}

/// Per-path (steps, area, dinv) records of an integer-slope family.
#[pyfunction]
#[pyo3(signature = (n, d, r, variant, interpretation="line-area"))]
fn path_stats(
    n: u64,
    d: u64,
    r: u64,
    variant: &str,
    interpretation: &str,
) -> PyResult<Vec<(String, u64, u64)>> {
    let spec = build_spec("integer-slope", n, d, r, None)?;
    let variant = parse_variant(variant)?;
    let interp = parse_interpretation(interpretation)?;
    enumerate_paths(&spec)
        .map(|p| {
            let code = p.encode();
            let a = stats::area(&code).map_err(|e| PyValueError::new_err(e.to_string()))?;
            let dv =
                stats::dinv(&code, variant, interp).map_err(|e| PyValueError::new_err(e.to_string()))?;
            Ok((p.steps_string(), a, dv))
        })
        .collect()
}

/// Factor a sequence of (value, barred) symbols as a parking function;
/// returns the path word and the 1-indexed permutation, or None.
#[pyfunction]
#[pyo3(signature = (seq, mode, n, d, r, h=None))]
fn factor_parking(
    seq: Vec<(u64, bool)>,
    mode: &str,
    n: u64,
    d: u64,
    r: u64,
    h: Option<u64>,
) -> PyResult<Option<(String, Vec<usize>)>> {
    let spec = build_spec(mode, n, d, r, h)?;
    Ok(parking::is_parking(&seq, &spec).map(|f| (f.path.steps_string(), f.sigma)))
}

/// Pentagon recursion for unit-fraction slants; p is a rational p_num/p_den.
#[pyfunction]
#[pyo3(signature = (a, b, p_num, p_den, r, q))]
fn formula_g(a: i64, b: i64, p_num: i64, p_den: i64, r: i64, q: i64) -> PyResult<BigUint> {
    if p_den == 0 {
        return Err(PyValueError::new_err("p_den must be non-zero"));
    }
    Evaluator::new()
        .g(a, b, Rat::new(p_num, p_den), r, q)
        .map_err(|e| PyValueError::new_err(e.to_string()))
}

/// Parking count of the unit-fraction family via the composition formula.
#[pyfunction]
#[pyo3(signature = (n, d, r, beta="partial-sum", boundary="region-fallback", split="repaired"))]
fn formula_psch(
    n: u64,
    d: u64,
    r: u64,
    beta: &str,
    boundary: &str,
    split: &str,
) -> PyResult<BigUint> {
    let cfg = parse_config(beta, boundary, split)?;
    Evaluator::new()
        .psch(n, d, r, &cfg)
        .map_err(|e| PyValueError::new_err(e.to_string()))
}

/// Constrained parking count of the unit-fraction family.
#[pyfunction]
#[pyo3(signature = (n, d, r, h, beta="partial-sum", boundary="region-fallback", split="repaired"))]
fn formula_chsch(
    n: u64,
    d: u64,
    r: u64,
    h: u64,
    beta: &str,
    boundary: &str,
    split: &str,
) -> PyResult<BigUint> {
    let cfg = parse_config(beta, boundary, split)?;
    Evaluator::new()
        .chsch(n, d, r, h, &cfg)
        .map_err(|e| PyValueError::new_err(e.to_string()))
}

/// Run the full verifier; returns (status counts, sound) where sound means
/// no proved statement failed.
#[pyfunction]
#[pyo3(signature = (max_n=3, max_r=2))]
fn verify_all(max_n: u64, max_r: u64) -> (std::collections::BTreeMap<String, u64>, bool) {
    let limits = VerifyLimits {
        max_n,
        max_r,
        region_max: 3,
    };
    let reports = verifier::run_all(&limits);
    let mut counts = std::collections::BTreeMap::new();
    for r in &reports {
        let label = match r.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::MismatchReported => "MISMATCH-REPORTED",
            Status::Skipped => "SKIPPED",
        };
        *counts.entry(label.to_string()).or_insert(0) += 1;
    }
    let sound = verifier::all_sound(&reports);
    (counts, sound)
}

#[pymodule]
fn schroder_lab_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(count_schroder, m)?)?;
    m.add_function(wrap_pyfunction!(count_fuss_catalan, m)?)?;
    m.add_function(wrap_pyfunction!(count_parking_closed, m)?)?;
    m.add_function(wrap_pyfunction!(brute_count_parking, m)?)?;
    m.add_function(wrap_pyfunction!(paths, m)?)?;
    m.add_function(wrap_pyfunction!(path_stats, m)?)?;
    m.add_function(wrap_pyfunction!(factor_parking, m)?)?;
    m.add_function(wrap_pyfunction!(formula_g, m)?)?;
    m.add_function(wrap_pyfunction!(formula_psch, m)?)?;
    m.add_function(wrap_pyfunction!(formula_chsch, m)?)?;
    m.add_function(wrap_pyfunction!(verify_all, m)?)?;
    Ok(())
}
