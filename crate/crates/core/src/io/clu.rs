//! Pajek `.clu` partitions: `*Vertices n` followed by one value per vertex.

use std::io::Write;

use crate::decompose::CoreAssignment;
use crate::error::Result;

/// Writes core numbers as a Pajek partition, line `i + 1` holding the core
/// number of vertex `i`.
pub fn write_clu<W: Write>(assignment: &CoreAssignment, mut out: W) -> Result<()> {
    writeln!(out, "*Vertices {}", assignment.len())?;
    for core in assignment.as_slice() {
        writeln!(out, "{core}")?;
    }
    out.flush()?;
    Ok(())
}
