//! Curve-counting lower bounds for a smooth length `ℓ` flop.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::length::Length;

/// Gopakumar–Vafa lower bounds `(n_1, …, n_ℓ)` per length.
const GV_LOWER_BOUNDS: [&[u32]; 6] = [
    &[1],
    &[4, 1],
    &[5, 3, 1],
    &[6, 4, 2, 1],
    &[7, 6, 4, 2, 1],
    &[6, 6, 4, 3, 2, 1],
];

/// Published lower bounds on `dim A_con`; must agree with `Σ i²·n_i`.
const DIM_LOWER_BOUNDS: [u32; 6] = [1, 8, 26, 56, 124, 200];

/// GV invariants of known flops in the lengths where the bound is open.
const KNOWN_EXAMPLES: [(u32, &[u32]); 3] = [(3, &[6, 3, 1]), (4, &[6, 5, 2, 1]), (5, &[8, 6, 4, 2, 1])];

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "status", content = "example")]
pub enum Realization {
    KnownRealized,
    OpenWithExample(Vec<u32>),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct GvRow {
    pub length: Length,
    pub gv_lower_bounds: Vec<u32>,
    pub dim_bound: u32,
    pub realized: Realization,
}

/// `Σ i²·n_i`.
pub fn dim_from_gv(bounds: &[u32]) -> u32 {
    bounds
        .iter()
        .zip(1u32..)
        .map(|(n, i)| i * i * n)
        .sum()
}

pub fn gv_row(length: Length) -> GvRow {
    let idx = length.get() as usize - 1;
    let bounds = GV_LOWER_BOUNDS[idx].to_vec();
    let dim_bound = dim_from_gv(&bounds);
    assert_eq!(
        dim_bound, DIM_LOWER_BOUNDS[idx],
        "Σ i²n_i disagrees with the tabulated dimension bound"
    );
    GvRow {
        length,
        gv_lower_bounds: bounds,
        dim_bound,
        realized: realized_status(length),
    }
}

pub fn gv_table() -> Vec<GvRow> {
    Length::all().map(gv_row).collect()
}

pub fn realized_status(length: Length) -> Realization {
    KNOWN_EXAMPLES
        .iter()
        .find(|(l, _)| *l == length.get())
        .map_or(Realization::KnownRealized, |(_, ex)| {
            Realization::OpenWithExample(ex.to_vec())
        })
}

pub const DEFORMATION_CONDITIONS: [&str; 3] = [
    "strictly noncommutative deformations of O_aC exist",
    "2a <= ell",
    "higher multiples of aC exist",
];

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeformationReport {
    pub holds: bool,
    pub conditions: Vec<(String, bool)>,
}

/// The three equivalent conditions on `O_aC`, all decided by `2a ≤ ℓ`.
pub fn deformation_equivalents(length: Length, a: u32) -> Result<DeformationReport> {
    if a < 1 || a > length.get() {
        return Err(Error::Precondition(format!(
            "thickening a = {a} must lie in 1..={length}"
        )));
    }
    let holds = 2 * a <= length.get();
    Ok(DeformationReport {
        holds,
        conditions: DEFORMATION_CONDITIONS
            .iter()
            .map(|c| (c.to_string(), holds))
            .collect(),
    })
}
