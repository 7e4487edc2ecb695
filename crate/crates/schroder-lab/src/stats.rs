//! Path statistics: area per line, total area, and the three dinv variants.
//!
//! Every dinv below is a sum over pairs of code lines i < j and is computed
//! from a vector v of one value per line.  Two readings of that vector are
//! supported, chosen by `Interpretation`:
//!
//! - `LeftArea`: v_i is the code entry itself (cells left of the path);
//! - `LineArea`: v_i is the per-line area r(i-1) - a_i (cells between the
//!   path and the boundary line).
//!
//! The verifier reports which interpretation satisfies each identity.

use serde::{Deserialize, Serialize};

use crate::error::StatError;
use crate::lattice::{AreaCode, SlopeMode};

/// Which per-line vector a dinv statistic reads.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Interpretation {
    LeftArea,
    LineArea,
}

impl Interpretation {
    pub const BOTH: [Interpretation; 2] = [Interpretation::LeftArea, Interpretation::LineArea];

    pub fn label(&self) -> &'static str {
        match self {
            Interpretation::LeftArea => "left-area",
            Interpretation::LineArea => "line-area",
        }
    }
}

/// The three pair statistics: the r = 1 Schröder dinv,
/// the Haiman dinv for d = n, and the proposed dinv for d = 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DinvVariant {
    SchroderR1,
    Haiman,
    ProposedD1,
}

impl DinvVariant {
    pub fn label(&self) -> &'static str {
        match self {
            DinvVariant::SchroderR1 => "schroder-r1",
            DinvVariant::Haiman => "haiman",
            DinvVariant::ProposedD1 => "proposed-d1",
        }
    }
}

/// Per-line area r(i-1) - a_i; integer-slope families only.
pub fn area_lines(code: &AreaCode) -> Result<Vec<u64>, StatError> {
    if code.spec.mode != SlopeMode::IntegerSlope {
        return Err(StatError::AreaNeedsIntegerSlope);
    }
    let r = code.spec.r as i64;
    Ok(code
        .entries
        .iter()
        .enumerate()
        .map(|(idx, e)| (r * idx as i64 - e.value as i64) as u64)
        .collect())
}

/// Total area of a path.
pub fn area(code: &AreaCode) -> Result<u64, StatError> {
    Ok(area_lines(code)?.iter().sum())
}

/// The per-line value vector under the chosen interpretation.
pub fn line_values(code: &AreaCode, interpretation: Interpretation) -> Result<Vec<i64>, StatError> {
    match interpretation {
        Interpretation::LeftArea => Ok(code.entries.iter().map(|e| e.value as i64).collect()),
        Interpretation::LineArea => Ok(area_lines(code)?.iter().map(|&a| a as i64).collect()),
    }
}

/// Schröder dinv for r = 1 (definition 8): pairs i < j with either
/// line i unbarred and v_i = v_j, or line j unbarred and v_i = v_j + 1.
pub fn dinv_schroder_r1(
    code: &AreaCode,
    interpretation: Interpretation,
) -> Result<u64, StatError> {
    if code.spec.r != 1 {
        return Err(StatError::NeedsUnitR(code.spec.r));
    }
    let v = line_values(code, interpretation)?;
    let mut count = 0u64;
    for i in 0..v.len() {
        for j in (i + 1)..v.len() {
            let first = !code.entries[i].bar && v[i] == v[j];
            let second = !code.entries[j].bar && v[i] == v[j] + 1;
            if first || second {
                count += 1;
            }
        }
    }
    Ok(count)
}

/// Haiman dinv for d = n (definition 9): each pair i < j with
/// delta = v_i - v_j contributes r - delta + 1 when 1 <= delta <= r,
/// r + delta when 1 - r <= delta <= 0, and nothing otherwise.
pub fn dinv_haiman(code: &AreaCode, interpretation: Interpretation) -> Result<u64, StatError> {
    let spec = &code.spec;
    if spec.d != spec.n {
        return Err(StatError::NeedsFullDown {
            d: spec.d,
            n: spec.n,
        });
    }
    let r = spec.r as i64;
    let v = line_values(code, interpretation)?;
    let mut total = 0u64;
    for i in 0..v.len() {
        for j in (i + 1)..v.len() {
            let delta = v[i] - v[j];
            if (1..=r).contains(&delta) {
                total += (r - delta + 1) as u64;
            } else if ((1 - r)..=0).contains(&delta) {
                total += (r + delta) as u64;
            }
        }
    }
    Ok(total)
}

/// Proposed dinv for d = 1: pairs i < j with line i unbarred, line j barred,
/// and v_i = v_j.
pub fn dinv_proposed_d1(
    code: &AreaCode,
    interpretation: Interpretation,
) -> Result<u64, StatError> {
    if code.spec.d != 1 {
        return Err(StatError::NeedsSingleDown(code.spec.d));
    }
    let v = line_values(code, interpretation)?;
    let mut count = 0u64;
    for i in 0..v.len() {
        for j in (i + 1)..v.len() {
            if !code.entries[i].bar && code.entries[j].bar && v[i] == v[j] {
                count += 1;
            }
        }
    }
    Ok(count)
}

/// Dispatch over the three variants.
pub fn dinv(
    code: &AreaCode,
    variant: DinvVariant,
    interpretation: Interpretation,
) -> Result<u64, StatError> {
    match variant {
        DinvVariant::SchroderR1 => dinv_schroder_r1(code, interpretation),
        DinvVariant::Haiman => dinv_haiman(code, interpretation),
        DinvVariant::ProposedD1 => dinv_proposed_d1(code, interpretation),
    }
}

/// One row of `stats` output.
#[derive(Debug, Clone, Serialize)]
pub struct StatRecord {
    pub steps: String,
    pub code: String,
    pub area: u64,
    pub dinv: u64,
    pub variant: DinvVariant,
    pub interpretation: Interpretation,
}
