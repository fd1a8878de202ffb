pub mod cycle;
pub mod equipped;
pub mod four_colour;
pub mod validate;

pub use cycle::{CycleKind, Dart, OrientedCycle};
pub use equipped::{EqEdge, EqVertex, EquippedGraph, VertexKind, Weight};
pub use four_colour::{nominal_index, Colour, Edge, FourColourGraph};
pub use validate::{validate_equipped, validate_four_colour, ValidationReport, Violation, ViolationCode};

use crate::error::{Error, Result};

/// Corner between the edges of nominal index `low_index` and
/// `low_index + 1` at `vertex`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Corner {
    pub vertex: usize,
    pub low_index: u32,
}

impl Corner {
    pub fn new(vertex: usize, low_index: u32) -> Self {
        Corner { vertex, low_index }
    }
}

pub(crate) fn require_admissible(g: &FourColourGraph) -> Result<four_colour::NominalTable> {
    let report = validate_four_colour(g);
    if !report.is_empty() {
        return Err(Error::NotAdmissible(report));
    }
    Ok(four_colour::NominalTable::build(g).expect("admissible graphs are well-formed"))
}

pub(crate) fn require_well_formed(g: &FourColourGraph) -> Result<four_colour::NominalTable> {
    let report = validate::local_report(g);
    match four_colour::NominalTable::build(g) {
        Some(t) if report.is_empty() => Ok(t),
        _ => Err(Error::NotWellFormed(report)),
    }
}

pub(crate) fn require_admissible_equipped(u: &EquippedGraph) -> Result<()> {
    let report = validate_equipped(u);
    if report.is_empty() {
        Ok(())
    } else {
        Err(Error::NotAdmissible(report))
    }
}
