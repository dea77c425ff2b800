//! Machine-readable report records and writers.
//!
//! Relation reports are CSV rows with a fixed header (plus a JSON mirror);
//! every row carries its own lhs/rhs/tolerance so the satisfied flag is
//! recomputable from the row alone. Numbers are printed with 12 significant
//! digits so reports diff cleanly under tolerance.

use crate::error::Result;
use crate::relations::ScalingRow;
use serde::Serialize;
use std::io::Write;
use std::path::Path;

/// Fixed column order of relation-report CSV files.
pub const RELATION_HEADER: [&str; 15] = [
    "scenario_id",
    "relation",
    "n_particles",
    "g",
    "hbar",
    "epsilon",
    "eta",
    "sigma_a",
    "sigma_b",
    "lhs",
    "rhs",
    "margin",
    "satisfied",
    "entropy",
    "tolerance",
];

/// Fixed column order of scaling-report CSV files.
pub const SCALING_HEADER: [&str; 24] = [
    "n",
    "g",
    "hbar",
    "sigma_q",
    "sigma_p",
    "epsilon",
    "eta",
    "sigma_q1",
    "sigma_p1",
    "eps1",
    "eta1",
    "sigma_q1_factored",
    "sigma_p1_factored",
    "eps1_factored",
    "eta1_factored",
    "commutator_mag",
    "ozawa_pp_lhs",
    "ozawa_pp_bound",
    "ozawa_pp_satisfied",
    "fujikawa_pp_lhs",
    "fujikawa_pp_bound",
    "fujikawa_pp_satisfied",
    "entropy",
    "interior_ok",
];

/// One relation check result, self-contained for re-verification.
#[derive(Clone, Debug, Serialize)]
pub struct ReportRecord {
    pub scenario_id: String,
    pub relation: String,
    pub n_particles: usize,
    pub g: f64,
    pub hbar: f64,
    pub epsilon: f64,
    pub eta: f64,
    pub sigma_a: f64,
    pub sigma_b: f64,
    pub lhs: f64,
    pub rhs: f64,
    pub margin: f64,
    pub satisfied: bool,
    pub entropy: f64,
    pub tolerance: f64,
}

impl ReportRecord {
    /// The satisfied flag recomputed from the row's own numeric columns.
    pub fn recomputed_satisfied(&self) -> bool {
        self.lhs - self.rhs >= -self.tolerance
    }
}

/// Output encoding for reports.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReportFormat {
    Csv,
    Json,
}

/// 12-significant-digit scientific formatting; `-0` is normalized to `0`.
pub fn fmt_sig(x: f64) -> String {
    let x = if x == 0.0 { 0.0 } else { x };
    format!("{x:.11e}")
}

fn csv_writer(path: &Path) -> Result<csv::Writer<std::fs::File>> {
    let file = std::fs::File::create(path)?;
    Ok(csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(file))
}

/// Writes relation records in the fixed column order.
pub fn write_relation_records(
    path: &Path,
    records: &[ReportRecord],
    format: ReportFormat,
) -> Result<()> {
    match format {
        ReportFormat::Csv => {
            let mut w = csv_writer(path)?;
            w.write_record(RELATION_HEADER)?;
            for r in records {
                w.write_record([
                    r.scenario_id.as_str(),
                    r.relation.as_str(),
                    &r.n_particles.to_string(),
                    &fmt_sig(r.g),
                    &fmt_sig(r.hbar),
                    &fmt_sig(r.epsilon),
                    &fmt_sig(r.eta),
                    &fmt_sig(r.sigma_a),
                    &fmt_sig(r.sigma_b),
                    &fmt_sig(r.lhs),
                    &fmt_sig(r.rhs),
                    &fmt_sig(r.margin),
                    if r.satisfied { "true" } else { "false" },
                    &fmt_sig(r.entropy),
                    &fmt_sig(r.tolerance),
                ])?;
            }
            w.flush()?;
        }
        ReportFormat::Json => write_json(path, records)?,
    }
    Ok(())
}

/// Writes scaling rows in the fixed column order.
pub fn write_scaling_rows(
    path: &Path,
    rows: &[ScalingRow],
    format: ReportFormat,
) -> Result<()> {
    match format {
        ReportFormat::Csv => {
            let mut w = csv_writer(path)?;
            w.write_record(SCALING_HEADER)?;
            for r in rows {
                w.write_record([
                    r.n.to_string(),
                    fmt_sig(r.g),
                    fmt_sig(r.hbar),
                    fmt_sig(r.sigma_q),
                    fmt_sig(r.sigma_p),
                    fmt_sig(r.epsilon),
                    fmt_sig(r.eta),
                    fmt_sig(r.sigma_q1),
                    fmt_sig(r.sigma_p1),
                    fmt_sig(r.eps1),
                    fmt_sig(r.eta1),
                    fmt_sig(r.sigma_q1_factored),
                    fmt_sig(r.sigma_p1_factored),
                    fmt_sig(r.eps1_factored),
                    fmt_sig(r.eta1_factored),
                    fmt_sig(r.commutator_mag),
                    fmt_sig(r.ozawa_pp_lhs),
                    fmt_sig(r.ozawa_pp_bound),
                    (if r.ozawa_pp_satisfied { "true" } else { "false" }).to_string(),
                    fmt_sig(r.fujikawa_pp_lhs),
                    fmt_sig(r.fujikawa_pp_bound),
                    (if r.fujikawa_pp_satisfied { "true" } else { "false" }).to_string(),
                    fmt_sig(r.entropy),
                    (if r.interior_ok { "true" } else { "false" }).to_string(),
                ])?;
            }
            w.flush()?;
        }
        ReportFormat::Json => write_json(path, rows)?,
    }
    Ok(())
}

fn write_json<T: Serialize>(path: &Path, rows: &[T]) -> Result<()> {
    let mut file = std::fs::File::create(path)?;
    serde_json::to_writer_pretty(&mut file, rows)?;
    file.write_all(b"\n")?;
    Ok(())
}
