//! The quotient of the complexified 1D arrangement by its translation
//! action: a sphere with `N` punctures on the equator and one at each pole.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::length::Length;
use crate::rootsys::{catalogue, highest_root_labels, DynkinDiagram, Vertex};
use crate::walk::{period_1d, Period};

pub const NORTH: &str = "north";
pub const SOUTH: &str = "south";

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PuncturedSphere {
    #[serde(rename = "N")]
    pub n: usize,
    #[serde(rename = "punctures")]
    pub puncture_count: usize,
    #[serde(rename = "equatorLabels")]
    pub equator_labels: Vec<u32>,
    /// `[north, south]`; the north pole carries generator `a`, the south `c`.
    pub poles: [String; 2],
}

impl PuncturedSphere {
    pub fn from_period(period: Period) -> Self {
        PuncturedSphere {
            n: period.n,
            puncture_count: period.n + 2,
            equator_labels: period.equator_labels,
            poles: [NORTH.to_string(), SOUTH.to_string()],
        }
    }
}

pub fn punctured_sphere(diagram: &DynkinDiagram, vertex: Vertex) -> Result<PuncturedSphere> {
    period_1d(diagram, vertex).map(PuncturedSphere::from_period)
}

pub fn euler_characteristic(sphere: &PuncturedSphere) -> i64 {
    2 - sphere.puncture_count as i64
}

/// The smallest-rank diagram with a vertex labelled `ell`, and the first such
/// vertex. Ties in rank go to the earlier type in A, D, E order.
pub fn ambient_for_label(ell: i64) -> Result<(DynkinDiagram, Vertex)> {
    let length = Length::new(ell).map_err(|_| Error::NoVertexWithLabel(ell))?;
    let mut diagrams = catalogue(8, 8);
    diagrams.sort_by_key(|d| (d.rank(), d.diagram_type()));
    diagrams
        .into_iter()
        .find_map(|d| {
            let v = highest_root_labels(&d)
                .into_iter()
                .find(|&(_, l)| l == length.get())?
                .0;
            Some((d, v))
        })
        .ok_or(Error::NoVertexWithLabel(ell))
}

pub fn sphere_for_length(length: Length) -> Result<PuncturedSphere> {
    let (d, v) = ambient_for_label(i64::from(length))?;
    punctured_sphere(&d, v)
}
