//! Rendering invariants and reports as text, JSON or CSV.

use std::io::Write;

use anyhow::Result;
use clap::ValueEnum;
use longknot::invariants::{InvariantBundle, VerificationReport};
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

/// One line of the batch CSV.
#[derive(Debug, Clone, Serialize)]
pub struct Row {
    pub id: String,
    pub n: usize,
    pub l: usize,
    pub sign: i8,
    pub beta: String,
    pub delta: String,
    pub theorem_ok: bool,
    pub proposition_ok: bool,
    #[serde(rename = "detW")]
    pub det_w: i64,
}

impl Row {
    pub fn new(id: &str, b: &InvariantBundle, r: &VerificationReport) -> Self {
        Self {
            id: id.to_owned(),
            n: b.n,
            l: r.l,
            sign: r.sign,
            beta: b.beta.to_string(),
            delta: b.delta.to_string(),
            theorem_ok: r.theorem_holds,
            proposition_ok: r.proposition_holds,
            det_w: r.det_w,
        }
    }
}

#[derive(Serialize)]
struct ComputeJson<'a> {
    id: &'a str,
    #[serde(flatten)]
    bundle: &'a InvariantBundle,
    beta_text: String,
    delta_text: String,
    delta_normalized: String,
}

fn normalized(p: &longknot::Laurent) -> String {
    p.normalize().map_or_else(|_| "0".into(), |q| q.to_string())
}

pub fn compute_text(out: &mut impl Write, id: &str, b: &InvariantBundle) -> Result<()> {
    writeln!(out, "{id}: {} crossings, l = {}", b.n, b.l)?;
    let int_blocks = [("T", &b.t), ("Sigma", &b.sigma), ("D", &b.d), ("S", &b.s)];
    for (name, m) in int_blocks {
        writeln!(out, "\n{name} =\n{m}")?;
    }
    writeln!(out, "\nX^-S =\n{}", b.x_neg_s)?;
    writeln!(out, "\nX^-(1+S)/2 =\n{}", b.x_neg_half)?;
    writeln!(out, "\nA =\n{}", b.a)?;
    writeln!(out, "\nW =\n{}", b.w)?;
    writeln!(out, "\nbeta  = {}", b.beta)?;
    writeln!(out, "delta = {}", b.delta)?;
    writeln!(out, "delta (normalized) = {}", normalized(&b.delta))?;
    Ok(())
}

pub fn compute_json(out: &mut impl Write, id: &str, b: &InvariantBundle) -> Result<()> {
    let doc = ComputeJson {
        id,
        bundle: b,
        beta_text: b.beta.to_string(),
        delta_text: b.delta.to_string(),
        delta_normalized: normalized(&b.delta),
    };
    serde_json::to_writer_pretty(&mut *out, &doc)?;
    writeln!(out)?;
    Ok(())
}

pub fn csv_rows(out: &mut impl Write, rows: &[Row]) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for r in rows {
        w.serialize(r)?;
    }
    w.flush()?;
    Ok(())
}

pub fn report_json(out: &mut impl Write, r: &VerificationReport) -> Result<()> {
    serde_json::to_writer_pretty(&mut *out, r)?;
    writeln!(out)?;
    Ok(())
}

pub fn row_text(out: &mut impl Write, row: &Row, ok: bool) -> Result<()> {
    writeln!(
        out,
        "{}  n={}  l={}  sign={:+}  detW={:+}  {}",
        row.id,
        row.n,
        row.l,
        row.sign,
        row.det_w,
        if ok { "ok" } else { "FAILED" }
    )?;
    Ok(())
}
