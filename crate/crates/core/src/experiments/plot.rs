//! Standalone matplotlib scripts that redraw a figure from its CSV file.
//! The scripts only read and display columns; all numbers come from the CSV.

use std::fs;
use std::path::Path;

use super::{FigureId, SweepRecord};
use crate::error::Result;

const PRELUDE: &str = r#"import csv
import os

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

HERE = os.path.dirname(os.path.abspath(__file__))


def load(name):
    with open(os.path.join(HERE, name), newline="") as f:
        return list(csv.DictReader(f))


def col(rows, name):
    return [float(r[name]) for r in rows]


def select(rows, key, value):
    return [r for r in rows if r[key] != "" and abs(float(r[key]) - value) < 1e-9]


def by(rows, key):
    return sorted(rows, key=lambda r: float(r[key]))

"#;

fn distinct(records: &[SweepRecord], name: &str) -> Vec<f64> {
    let mut out: Vec<f64> = Vec::new();
    for v in records.iter().filter_map(|r| r.param(name)) {
        if !out.iter().any(|u| (u - v).abs() < 1e-9) {
            out.push(v);
        }
    }
    out
}

fn py_list(values: &[f64]) -> String {
    let items: Vec<String> = values.iter().map(|v| format!("{v:.12}")).collect();
    format!("[{}]", items.join(", "))
}

/// Writes a plotting script for `figure` to `path`. The script expects the
/// figure's CSV (see [`FigureId::csv_file_name`]) in its own directory and
/// saves a PNG next to it.
pub fn emit_plot_script(records: &[SweepRecord], figure: FigureId, path: &Path) -> Result<()> {
    let csv_name = figure.csv_file_name();
    let png_name = format!("{}.png", figure.stem());
    let mut s = String::from("#!/usr/bin/env python3\n");
    s.push_str(&format!("\"\"\"Redraws {csv_name} (generated by entrob).\"\"\"\n"));
    s.push_str(PRELUDE);
    s.push_str(&format!("rows = load({csv_name:?})\n\n"));

    match figure {
        FigureId::Fig1 => s.push_str(
            r#"rows = by(rows, "negativity")
fig, ax = plt.subplots(figsize=(5, 4))
ax.plot(col(rows, "negativity"), col(rows, "law_prediction"), "r-", label=r"$1 - 1/\sqrt{1+2N}$")
ax.plot(col(rows, "negativity"), col(rows, "d_crit"), "ko", ms=3, label="PPT threshold")
ax.set_xlabel("negativity N")
ax.set_ylabel(r"robustness $d_{crit}$")
ax.legend()
"#,
        ),
        FigureId::Fig2 => s.push_str(
            r#"lam = by([r for r in rows if r["family"] == "ghz_like"], "negativity")
omg = by([r for r in rows if r["family"] == "w_like"], "negativity")
pts = [r for r in rows if r["family"] == "symmetric_sample"]
fig, ax = plt.subplots(figsize=(5, 4))
ax.plot(col(pts, "negativity"), col(pts, "d_crit"), "k.", ms=2, label="symmetric samples")
ax.plot(col(lam, "negativity"), col(lam, "d_crit"), "r-", label="GHZ-like")
ax.plot(col(omg, "negativity"), col(omg, "d_crit"), "m--", label="W-like")
ax.set_xlabel("negativity N")
ax.set_ylabel(r"robustness $d_{crit}$")
ax.legend()
"#,
        ),
        FigureId::Fig3 => {
            s.push_str(&format!("GAMMAS = {}\n", py_list(&distinct(records, "gamma"))));
            s.push_str(
                r#"fig, ax = plt.subplots(figsize=(6, 4.5))
for g in GAMMAS:
    sub = by(select(rows, "gamma", g), "a")
    ax.plot(col(sub, "a"), col(sub, "d_crit"), label=r"$\gamma$ = %.3g" % g)
ax.set_xlabel("a")
ax.set_ylabel(r"robustness $d_{crit}$")
ax.legend(fontsize=8)
left = fig.add_axes([0.2, 0.6, 0.2, 0.2])
sub = by(select(rows, "gamma", GAMMAS[0]), "a")
left.plot(col(sub, "a"), col(sub, "negativity"), "k-")
left.set_title("negativity", fontsize=7)
right = fig.add_axes([0.62, 0.22, 0.2, 0.2])
for g in GAMMAS:
    sub = by(select(rows, "gamma", g), "a")
    right.plot(col(sub, "a"), col(sub, "three_tangle"))
right.set_title("three-tangle", fontsize=7)
"#,
            );
        }
        FigureId::Fig4 => {
            s.push_str(&format!("A_LIST = {}\n", py_list(&distinct(records, "a"))));
            s.push_str(
                r#"fig, (top, bottom) = plt.subplots(2, 1, figsize=(5, 7), sharex=True)
for a in A_LIST:
    sub = by(select(rows, "a", a), "gamma")
    top.plot(col(sub, "gamma"), col(sub, "d_crit"), "o-", ms=3, label="a = %.2g" % a)
    bottom.plot(col(sub, "gamma"), col(sub, "three_tangle"), "o-", ms=3, label="a = %.2g" % a)
top.set_ylabel(r"(a) robustness $d_{crit}$")
bottom.set_ylabel(r"(b) three-tangle $\tau$")
bottom.set_xlabel(r"$\gamma = \varphi / (2\pi/3)$")
top.legend(fontsize=8)
"#,
            );
        }
        FigureId::NQubit(n) => {
            s.push_str(&format!("A_LIST = {}\n", py_list(&distinct(records, "a"))));
            s.push_str(&format!(
                r#"fig, ax = plt.subplots(figsize=(5, 4))
for a in A_LIST:
    sub = by(select(rows, "a", a), "phi")
    ax.plot(col(sub, "phi"), col(sub, "d_crit"), "o-", ms=3, label="a = %.3g" % a)
ax.set_xlabel(r"$\varphi$ (period $2\pi/{n}$)")
ax.set_ylabel(r"robustness $d_{{crit}}$, n = {n}")
ax.legend(fontsize=7)
"#
            ));
        }
    }
    s.push_str(&format!(
        "\nfig.savefig(os.path.join(HERE, {png_name:?}), dpi=150, bbox_inches=\"tight\")\n"
    ));
    fs::write(path, s)?;
    Ok(())
}
