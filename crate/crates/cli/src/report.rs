use std::io::Write;

use anchored_core::{Cell, CellId};
use serde::Serialize;
use serde_json::{json, Value};

use crate::args::Format;

#[derive(Debug, Serialize)]
pub struct Verdict {
    pub check: String,
    pub pass: bool,
}

/// Everything a command produces, before serialization.
#[derive(Debug)]
pub struct RunReport {
    pub command: &'static str,
    pub params: Value,
    pub result: Value,
    pub verdicts: Vec<Verdict>,
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
}

impl RunReport {
    pub fn new(command: &'static str, params: Value, header: Vec<&'static str>) -> Self {
        RunReport { command, params, result: Value::Null, verdicts: Vec::new(), header, rows: Vec::new() }
    }

    pub fn check(&mut self, check: impl Into<String>, pass: bool) {
        self.verdicts.push(Verdict { check: check.into(), pass });
    }

    pub fn passed(&self) -> bool {
        self.verdicts.iter().all(|v| v.pass)
    }

    pub fn emit(&self, format: Format, out: &mut dyn Write) -> anyhow::Result<()> {
        match format {
            Format::Json => {
                let doc = json!({
                    "command": self.command,
                    "params": self.params,
                    "result": self.result,
                    "verdicts": self.verdicts,
                });
                serde_json::to_writer_pretty(&mut *out, &doc)?;
                writeln!(out)?;
            }
            Format::Csv => {
                let mut writer = csv::Writer::from_writer(out);
                writer.write_record(&self.header)?;
                for row in &self.rows {
                    writer.write_record(row)?;
                }
                writer.flush()?;
            }
        }
        Ok(())
    }
}

pub fn cell_json<C: Cell>(cell: &C) -> Value {
    let blocks: Vec<Vec<usize>> = cell.blocks().iter().map(|b| b.to_vec()).collect();
    json!({
        "id": cell.encode(),
        "dim": cell.dim(),
        "text": cell.to_string(),
        "blocks": blocks,
    })
}

pub fn cell_row<C: Cell>(cell: &C) -> Vec<String> {
    vec![cell.encode().to_string(), cell.dim().to_string(), cell.to_string()]
}

pub fn join_ids(ids: &[CellId]) -> String {
    ids.iter().map(ToString::to_string).collect::<Vec<_>>().join(";")
}
