use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::InstanceRecord;
use crate::error::{invalid, Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub osculation_type: Vec<usize>,
    /// `num_real -> number of transversal instances`.
    pub counts: BTreeMap<usize, u64>,
    pub total: u64,
}

/// Instances per osculation type (rows) and number of real solutions (columns).
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct FrequencyTable {
    pub problem: Option<String>,
    pub num_complex: Option<usize>,
    /// Descending osculation type.
    pub rows: Vec<TableRow>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableFormat {
    Text,
    Csv,
    Json,
}

impl FromStr for TableFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "text" => Ok(Self::Text),
            "csv" => Ok(Self::Csv),
            "json" => Ok(Self::Json),
            _ => Err(Error::Parse(format!("unknown table format {s:?}; expected text, csv or json"))),
        }
    }
}

/// Tallies the transversal records. All records must share one problem.
pub fn tabulate(records: &[InstanceRecord]) -> Result<FrequencyTable> {
    let Some(first) = records.first() else {
        return Ok(FrequencyTable::default());
    };
    let mut rows: BTreeMap<Vec<usize>, BTreeMap<usize, u64>> = BTreeMap::new();
    let mut num_complex = None;
    for r in records {
        if r.problem != first.problem {
            return invalid(format!("records mix problems {:?} and {:?}", first.problem, r.problem));
        }
        if !r.transversal {
            continue;
        }
        match num_complex {
            None => num_complex = Some(r.num_complex),
            Some(c) if c != r.num_complex => {
                return invalid(format!("transversal records disagree on num_complex: {c} vs {}", r.num_complex))
            }
            _ => {}
        }
        *rows.entry(r.osculation_type.clone()).or_default().entry(r.num_real).or_default() += 1;
    }
    let rows = rows
        .into_iter()
        .rev()
        .map(|(osculation_type, counts)| TableRow { total: counts.values().sum(), osculation_type, counts })
        .collect();
    Ok(FrequencyTable { problem: Some(first.problem.clone()), num_complex, rows })
}

fn type_text(t: &[usize]) -> String {
    t.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
}

fn parse_type(s: &str) -> Result<Vec<usize>> {
    s.split_whitespace()
        .map(|x| x.parse().map_err(|_| Error::Parse(format!("bad osculation type {s:?}"))))
        .collect()
}

const CSV_HEADER: [&str; 5] = ["problem", "num_complex", "osculation_type", "num_real", "count"];

impl FrequencyTable {
    /// Columns shown in the text layout: every count with the parity of
    /// `num_complex`, or the observed ones when that is unknown.
    pub fn columns(&self) -> Vec<usize> {
        match self.num_complex {
            Some(c) => (c % 2..=c).step_by(2).collect(),
            None => {
                let mut v: Vec<usize> = self.rows.iter().flat_map(|r| r.counts.keys().copied()).collect();
                v.sort();
                v.dedup();
                v
            }
        }
    }

    pub fn render(&self, format: TableFormat) -> Result<String> {
        match format {
            TableFormat::Text => Ok(self.to_text()),
            TableFormat::Csv => self.to_csv(),
            TableFormat::Json => Ok(serde_json::to_string_pretty(self)? + "\n"),
        }
    }

    /// Types down the left, real-solution counts across, totals on the right.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        if let Some(p) = &self.problem {
            let _ = write!(out, "{p}");
            if let Some(c) = self.num_complex {
                let _ = write!(out, " = {c}");
            }
            out.push('\n');
        }
        if self.rows.is_empty() {
            out.push_str("(no transversal records)\n");
            return out;
        }
        let cols = self.columns();
        let tw = self.rows.iter().map(|r| type_text(&r.osculation_type).len()).max().unwrap_or(0).max(4);
        let cell = |v: u64| if v == 0 { String::new() } else { v.to_string() };
        let widths: Vec<usize> = cols
            .iter()
            .map(|c| {
                let data = self.rows.iter().map(|r| cell(r.counts.get(c).copied().unwrap_or(0)).len()).max().unwrap_or(0);
                data.max(c.to_string().len())
            })
            .collect();
        let total_w = self.rows.iter().map(|r| r.total.to_string().len()).max().unwrap_or(0).max(5);
        let _ = write!(out, "{:>tw$} |", "type");
        for (c, w) in cols.iter().zip(&widths) {
            let _ = write!(out, " {c:>w$}");
        }
        let _ = writeln!(out, " | {:>total_w$}", "total");
        let rule = tw + 2 + widths.iter().map(|w| w + 1).sum::<usize>() + 3 + total_w;
        let _ = writeln!(out, "{}", "-".repeat(rule));
        for r in &self.rows {
            let _ = write!(out, "{:>tw$} |", type_text(&r.osculation_type));
            for (c, w) in cols.iter().zip(&widths) {
                let _ = write!(out, " {:>w$}", cell(r.counts.get(c).copied().unwrap_or(0)));
            }
            let _ = writeln!(out, " | {:>total_w$}", r.total);
        }
        out
    }

    /// Long format, one nonzero cell per line.
    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let csv_err = |e: csv::Error| Error::Parse(e.to_string());
        w.write_record(CSV_HEADER).map_err(csv_err)?;
        let problem = self.problem.clone().unwrap_or_default();
        let nc = self.num_complex.map(|c| c.to_string()).unwrap_or_default();
        for r in &self.rows {
            for (real, count) in &r.counts {
                w.write_record([problem.clone(), nc.clone(), type_text(&r.osculation_type), real.to_string(), count.to_string()])
                    .map_err(csv_err)?;
            }
        }
        let bytes = w.into_inner().map_err(|e| Error::Parse(e.to_string()))?;
        String::from_utf8(bytes).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn from_csv(text: &str) -> Result<Self> {
        let mut rd = csv::Reader::from_reader(text.as_bytes());
        let csv_err = |e: csv::Error| Error::Parse(e.to_string());
        let header = rd.headers().map_err(csv_err)?.clone();
        if header.iter().ne(CSV_HEADER) {
            return Err(Error::Parse(format!("unexpected csv header {header:?}")));
        }
        let mut table = FrequencyTable::default();
        let mut rows: BTreeMap<Vec<usize>, BTreeMap<usize, u64>> = BTreeMap::new();
        for rec in rd.records() {
            let rec = rec.map_err(csv_err)?;
            let num = |i: usize| -> Result<u64> {
                rec[i].parse().map_err(|_| Error::Parse(format!("bad number {:?} in csv", &rec[i])))
            };
            table.problem = Some(rec[0].to_string());
            if !rec[1].is_empty() {
                table.num_complex = Some(num(1)? as usize);
            }
            *rows.entry(parse_type(&rec[2])?).or_default().entry(num(3)? as usize).or_default() += num(4)?;
        }
        table.rows = rows
            .into_iter()
            .rev()
            .map(|(osculation_type, counts)| TableRow { total: counts.values().sum(), osculation_type, counts })
            .collect();
        Ok(table)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn row(&self, osc_type: &[usize]) -> Option<&TableRow> {
        self.rows.iter().find(|r| r.osculation_type == osc_type)
    }
}
