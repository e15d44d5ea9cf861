//! Flat CSV files, one per figure.
//!
//! Columns: `family`, the parameters, `negativity`, `three_tangle`, `d_crit`,
//! `limiting_cut`, extra numeric columns, then `check_*` columns holding
//! `pass`/`fail`. Absent values are empty cells.

use std::fs::File;
use std::path::Path;

use super::{Family, SweepRecord};
use crate::error::{Error, Result};

const FIXED: [&str; 4] = ["negativity", "three_tangle", "d_crit", "limiting_cut"];

/// Integers print as such; everything else with 12 significant digits.
pub fn format_number(v: f64) -> String {
    if v.fract() == 0.0 && v.abs() < 1e15 {
        format!("{}", v as i64)
    } else {
        format!("{v:.11e}")
    }
}

fn union_names<'a, T: 'a>(lists: impl Iterator<Item = &'a Vec<(String, T)>>) -> Vec<String> {
    let mut names: Vec<String> = Vec::new();
    for list in lists {
        for (name, _) in list {
            if !names.contains(name) {
                names.push(name.clone());
            }
        }
    }
    names
}

pub fn emit_csv(records: &[SweepRecord], path: &Path) -> Result<()> {
    let params = union_names(records.iter().map(|r| &r.params));
    let extras = union_names(records.iter().map(|r| &r.extras));
    let checks = union_names(records.iter().map(|r| &r.checks));

    let mut writer = csv::Writer::from_writer(File::create(path)?);
    let header: Vec<&str> = std::iter::once("family")
        .chain(params.iter().map(String::as_str))
        .chain(FIXED)
        .chain(extras.iter().map(String::as_str))
        .chain(checks.iter().map(String::as_str))
        .collect();
    writer.write_record(&header)?;

    let num = |v: Option<f64>| v.map(format_number).unwrap_or_default();
    for rec in records {
        let mut row: Vec<String> = vec![rec.family.to_string()];
        row.extend(params.iter().map(|p| num(rec.param(p))));
        row.push(format_number(rec.negativity));
        row.push(num(rec.three_tangle));
        row.push(format_number(rec.d_crit));
        row.push(rec.limiting_cut.clone());
        row.extend(extras.iter().map(|e| num(rec.extra(e))));
        row.extend(checks.iter().map(|c| match rec.check(c) {
            Some(true) => "pass".to_string(),
            Some(false) => "fail".to_string(),
            None => String::new(),
        }));
        writer.write_record(&row)?;
    }
    writer.flush()?;
    Ok(())
}

fn parse_num(cell: &str, column: &str) -> Result<Option<f64>> {
    if cell.is_empty() {
        return Ok(None);
    }
    cell.parse()
        .map(Some)
        .map_err(|_| Error::Parse(format!("column {column}: {cell:?} is not a number")))
}

/// Reads a file written by [`emit_csv`].
pub fn read_csv(path: &Path) -> Result<Vec<SweepRecord>> {
    let mut reader = csv::Reader::from_reader(File::open(path)?);
    let header: Vec<String> = reader.headers()?.iter().map(str::to_string).collect();
    if header.first().map(String::as_str) != Some("family") {
        return Err(Error::Parse("first column must be `family`".into()));
    }
    let position = |name: &str| {
        header
            .iter()
            .position(|h| h == name)
            .ok_or_else(|| Error::Parse(format!("missing column {name}")))
    };
    let neg = position("negativity")?;
    let tangle = position("three_tangle")?;
    let dcrit = position("d_crit")?;
    let cut = position("limiting_cut")?;
    if (tangle, dcrit, cut) != (neg + 1, neg + 2, neg + 3) {
        return Err(Error::Parse("fixed columns out of order".into()));
    }

    let mut out = Vec::new();
    for row in reader.records() {
        let row = row?;
        let cell = |i: usize| row.get(i).unwrap_or("");
        let mut rec = SweepRecord {
            family: cell(0).parse::<Family>()?,
            params: Vec::new(),
            negativity: parse_num(cell(neg), "negativity")?
                .ok_or_else(|| Error::Parse("empty negativity".into()))?,
            three_tangle: parse_num(cell(tangle), "three_tangle")?,
            d_crit: parse_num(cell(dcrit), "d_crit")?
                .ok_or_else(|| Error::Parse("empty d_crit".into()))?,
            limiting_cut: cell(cut).to_string(),
            extras: Vec::new(),
            checks: Vec::new(),
        };
        for (i, name) in header.iter().enumerate().take(neg).skip(1) {
            if let Some(v) = parse_num(cell(i), name)? {
                rec.params.push((name.clone(), v));
            }
        }
        for (i, name) in header.iter().enumerate().skip(cut + 1) {
            if name.starts_with("check_") {
                match cell(i) {
                    "" => {}
                    "pass" => rec.checks.push((name.clone(), true)),
                    "fail" => rec.checks.push((name.clone(), false)),
                    other => return Err(Error::Parse(format!("column {name}: {other:?}"))),
                }
            } else if let Some(v) = parse_num(cell(i), name)? {
                rec.extras.push((name.clone(), v));
            }
        }
        out.push(rec);
    }
    Ok(out)
}
