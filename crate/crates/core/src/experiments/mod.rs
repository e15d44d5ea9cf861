//! Figure sweeps: parameter grids, per-record consistency checks, CSV output
//! and plotting scripts.

mod figures;
mod io;
mod plot;

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::robustness::SolverConfig;

pub use figures::{
    ghz_like_for_negativity, run_fig1_two_qubit, run_fig2_symmetric, run_fig3_z_vs_a,
    run_fig4_z_vs_phi, run_figure, run_nqubit_period, w_like_for_negativity,
};
pub use io::{emit_csv, format_number, read_csv};
pub use plot::emit_plot_script;

/// Default `fig3` phases as fractions γ of the period 2π/3, top curve first.
pub const DEFAULT_GAMMAS: [f64; 5] = [0.5, 1.0 / 3.0, 0.2, 0.1, 0.0];

/// Period of the three-qubit robustness and three-tangle in φ.
pub const PERIOD_3: f64 = 2.0 * std::f64::consts::PI / 3.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    TwoQubitPure,
    GhzLike,
    WLike,
    SymmetricSample,
    ZSuperposition,
}

impl Family {
    pub fn as_str(&self) -> &'static str {
        match self {
            Family::TwoQubitPure => "two_qubit_pure",
            Family::GhzLike => "ghz_like",
            Family::WLike => "w_like",
            Family::SymmetricSample => "symmetric_sample",
            Family::ZSuperposition => "z_superposition",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        [
            Family::TwoQubitPure,
            Family::GhzLike,
            Family::WLike,
            Family::SymmetricSample,
            Family::ZSuperposition,
        ]
        .into_iter()
        .find(|f| f.as_str() == s)
        .ok_or_else(|| Error::Parse(format!("unknown family {s:?}")))
    }
}

/// One evaluated grid point.
///
/// `params`, `extras` and `checks` keep insertion order, which becomes the
/// CSV column order. Check names carry the `check_` prefix.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepRecord {
    pub family: Family,
    pub params: Vec<(String, f64)>,
    pub negativity: f64,
    pub three_tangle: Option<f64>,
    pub d_crit: f64,
    pub limiting_cut: String,
    pub extras: Vec<(String, f64)>,
    pub checks: Vec<(String, bool)>,
}

impl SweepRecord {
    pub fn param(&self, name: &str) -> Option<f64> {
        lookup(&self.params, name)
    }

    pub fn extra(&self, name: &str) -> Option<f64> {
        lookup(&self.extras, name)
    }

    pub fn check(&self, name: &str) -> Option<bool> {
        lookup(&self.checks, name)
    }

    pub fn failed_checks(&self) -> impl Iterator<Item = &str> {
        self.checks.iter().filter(|(_, ok)| !ok).map(|(n, _)| n.as_str())
    }

    fn set_check(&mut self, name: &str, ok: bool) {
        match self.checks.iter_mut().find(|(n, _)| n == name) {
            Some(slot) => slot.1 = ok,
            None => self.checks.push((name.to_string(), ok)),
        }
    }

    fn set_extra(&mut self, name: &str, value: f64) {
        match self.extras.iter_mut().find(|(n, _)| n == name) {
            Some(slot) => slot.1 = value,
            None => self.extras.push((name.to_string(), value)),
        }
    }
}

fn lookup<T: Copy>(pairs: &[(String, T)], name: &str) -> Option<T> {
    pairs.iter().find(|(n, _)| n == name).map(|(_, v)| *v)
}

/// Names of every failing check across `records`, with the record index.
pub fn failed_checks(records: &[SweepRecord]) -> Vec<(usize, String)> {
    records
        .iter()
        .enumerate()
        .flat_map(|(i, r)| r.failed_checks().map(move |c| (i, c.to_string())))
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FigureId {
    Fig1,
    Fig2,
    Fig3,
    Fig4,
    NQubit(usize),
}

impl FigureId {
    pub fn stem(&self) -> String {
        match self {
            FigureId::Fig1 => "fig1".into(),
            FigureId::Fig2 => "fig2".into(),
            FigureId::Fig3 => "fig3".into(),
            FigureId::Fig4 => "fig4".into(),
            FigureId::NQubit(n) => format!("nqubit{n}"),
        }
    }

    pub fn csv_file_name(&self) -> String {
        format!("{}.csv", self.stem())
    }

    pub fn plot_file_name(&self) -> String {
        format!("{}.py", self.stem())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentConfig {
    /// Points of `p ∈ [0, 1]` for the two-qubit sweep.
    pub p_points: usize,
    /// Points of `a` (GHZ-like) and `b` (W-like) in `[0, 1]`.
    pub family_points: usize,
    /// Points of `a ∈ [0, 1]` for the robustness-versus-`a` curves.
    pub a_points: usize,
    /// Phases of the robustness-versus-`a` curves, top curve first.
    pub phi_list: Vec<f64>,
    /// Points of `φ ∈ [0, 2π/3]` for the robustness-versus-`φ` curves.
    pub phi_points: usize,
    /// GHZ weights of the robustness-versus-`φ` curves.
    pub a_list: Vec<f64>,
    /// Side of the `(a, φ)` grid for four and five qubits.
    pub nqubit_grid: usize,
    /// Haar-random symmetric states in the scatter.
    pub sample_count: usize,
    pub seed: u64,
    pub solver: SolverConfig,
    /// Directory receiving CSV files and plot scripts.
    pub output_path: PathBuf,
    /// Abort the four/five-qubit sweep when its projected runtime exceeds this.
    pub runtime_budget_secs: f64,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        Self {
            p_points: 41,
            family_points: 41,
            a_points: 41,
            phi_list: DEFAULT_GAMMAS.iter().map(|g| g * PERIOD_3).collect(),
            phi_points: 25,
            a_list: vec![0.2, 0.4, 0.6],
            nqubit_grid: 9,
            sample_count: 1000,
            seed: 2010,
            solver: SolverConfig::default(),
            output_path: PathBuf::from("results"),
            runtime_budget_secs: 600.0,
        }
    }
}

impl ExperimentConfig {
    pub fn validate(&self) -> Result<()> {
        self.solver.validate()?;
        for (name, value) in [
            ("p_points", self.p_points),
            ("family_points", self.family_points),
            ("a_points", self.a_points),
            ("phi_points", self.phi_points),
            ("nqubit_grid", self.nqubit_grid),
        ] {
            if value < 2 {
                return Err(Error::InvalidConfig(format!(
                    "{name} must be at least 2, got {value}"
                )));
            }
        }
        if self.sample_count < 1 {
            return Err(Error::InvalidConfig("sample_count must be at least 1".into()));
        }
        if self.phi_list.is_empty() || self.phi_list.iter().any(|p| !p.is_finite()) {
            return Err(Error::InvalidConfig("phi_list needs finite phases".into()));
        }
        if self.a_list.is_empty() || self.a_list.iter().any(|a| !(0.0..=1.0).contains(a)) {
            return Err(Error::InvalidConfig("a_list entries must lie in [0, 1]".into()));
        }
        if !(self.runtime_budget_secs > 0.0) {
            return Err(Error::InvalidConfig("runtime budget must be positive".into()));
        }
        Ok(())
    }
}

/// `n` evenly spaced points from `lo` to `hi` inclusive.
pub fn linspace(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    match n {
        0 => vec![],
        1 => vec![lo],
        _ => (0..n)
            .map(|k| {
                if k == n - 1 {
                    hi
                } else {
                    lo + (hi - lo) * k as f64 / (n - 1) as f64
                }
            })
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn linspace_includes_endpoints() {
        let g = linspace(0.0, 1.0, 41);
        assert_eq!(g.len(), 41);
        assert_eq!(g[0], 0.0);
        assert_eq!(g[40], 1.0);
        assert!((g[16] - 0.4).abs() < 1e-15);
        assert_eq!(linspace(0.3, 1.0, 1), vec![0.3]);
    }

    #[test]
    fn family_names_round_trip() {
        for f in [Family::TwoQubitPure, Family::GhzLike, Family::WLike, Family::SymmetricSample, Family::ZSuperposition] {
            assert_eq!(f.as_str().parse::<Family>().unwrap(), f);
        }
        assert!("ghz".parse::<Family>().is_err());
    }

    #[test]
    fn config_validation() {
        assert!(ExperimentConfig::default().validate().is_ok());
        let bad = [
            ExperimentConfig { p_points: 1, ..Default::default() },
            ExperimentConfig { sample_count: 0, ..Default::default() },
            ExperimentConfig { a_list: vec![1.5], ..Default::default() },
            ExperimentConfig { phi_list: vec![], ..Default::default() },
            ExperimentConfig { runtime_budget_secs: 0.0, ..Default::default() },
        ];
        for cfg in bad {
            assert!(matches!(cfg.validate(), Err(Error::InvalidConfig(_))));
        }
    }

    #[test]
    fn default_phases_follow_gamma_list() {
        let cfg = ExperimentConfig::default();
        assert!((cfg.phi_list[0] - std::f64::consts::PI / 3.0).abs() < 1e-15);
        assert_eq!(cfg.phi_list[4], 0.0);
    }
}
