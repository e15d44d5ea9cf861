//! Critical depolarization `d_crit`: the smallest `d` at which
//! `C_d^{⊗n}(|ψ⟩⟨ψ|)` has a positive partial transpose across every
//! bipartition.
//!
//! PPT is only a sufficient test for entanglement on more than two qubits, so
//! `d_crit` is the point where entanglement stops being PPT-detectable. It is
//! a lower bound on the depolarization needed to reach a separable state.

use crate::channels::{depolarize_all, DepolarizingStrength};
use crate::error::{Error, Result};
use crate::linalg::{
    has_eigenvalue_below, min_eigenvalue, partial_transpose, Bipartition, ComplexMatrix,
    QubitRegisterShape,
};
use crate::states::{density, StateVector};

/// Step of the dense scan used when the prescan sees a non-monotone indicator.
pub const FINE_SCAN_STEP: f64 = 1e-4;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolverConfig {
    /// Final bracket width on `d`.
    pub bisection_tol: f64,
    /// A cut is NPT when its smallest partial-transpose eigenvalue is below this.
    pub ppt_threshold: f64,
    /// Evenly spaced `d` values in `[0, 1]` checked before bisecting.
    pub prescan_points: usize,
}

impl Default for SolverConfig {
    fn default() -> Self {
        Self {
            bisection_tol: 1e-6,
            ppt_threshold: -1e-9,
            prescan_points: 21,
        }
    }
}

impl SolverConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.bisection_tol > 0.0 && self.bisection_tol < 1.0) {
            return Err(Error::InvalidConfig(format!(
                "bisection_tol must lie in (0, 1), got {}",
                self.bisection_tol
            )));
        }
        if !(self.ppt_threshold < 0.0) {
            return Err(Error::InvalidConfig(format!(
                "ppt_threshold must be negative, got {}",
                self.ppt_threshold
            )));
        }
        if self.prescan_points < 2 {
            return Err(Error::InvalidConfig(format!(
                "prescan_points must be at least 2, got {}",
                self.prescan_points
            )));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RobustnessResult {
    pub d_crit: f64,
    /// Last cut to lose NPT; `None` when the input is PPT on every cut at `d = 0`.
    pub limiting_cut: Option<Bipartition>,
    /// Bisection steps taken.
    pub iterations: usize,
    /// Smallest partial-transpose eigenvalue of the limiting cut at `d_crit`.
    pub residual_min_eig: f64,
    /// Set when the prescan found a non-monotone indicator and the dense scan
    /// was used to bracket the crossing.
    pub fine_scan: bool,
}

/// Most negative partial transpose among all cuts.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NptWitness {
    pub cut: Bipartition,
    pub min_eigenvalue: f64,
}

pub fn is_npt(
    rho: &ComplexMatrix,
    shape: &QubitRegisterShape,
    cut: &Bipartition,
    cfg: &SolverConfig,
) -> Result<bool> {
    let pt = partial_transpose(rho, shape, cut)?;
    has_eigenvalue_below(&pt, cfg.ppt_threshold)
}

/// Checks every inequivalent cut; returns the one with the most negative
/// partial-transpose eigenvalue if any is NPT.
pub fn is_npt_any_cut(
    rho: &ComplexMatrix,
    shape: &QubitRegisterShape,
    cfg: &SolverConfig,
) -> Result<Option<NptWitness>> {
    let mut best: Option<NptWitness> = None;
    for cut in Bipartition::all_inequivalent(shape.n_qubits()) {
        let min = min_eigenvalue(&partial_transpose(rho, shape, &cut)?)?;
        if min < cfg.ppt_threshold && best.map_or(true, |b| min < b.min_eigenvalue) {
            best = Some(NptWitness {
                cut,
                min_eigenvalue: min,
            });
        }
    }
    Ok(best)
}

/// Smallest eigenvalue of `(C_d^{⊗n}(ρ))^{T_cut}`.
pub fn min_pt_eigenvalue_at(
    rho: &ComplexMatrix,
    shape: &QubitRegisterShape,
    cut: &Bipartition,
    d: f64,
) -> Result<f64> {
    let noisy = depolarize_all(rho, shape, DepolarizingStrength::new(d)?)?;
    min_eigenvalue(&partial_transpose(&noisy, shape, cut)?)
}

struct Problem<'a> {
    rho: ComplexMatrix,
    shape: QubitRegisterShape,
    cfg: &'a SolverConfig,
}

impl Problem<'_> {
    fn noisy(&self, d: f64) -> Result<ComplexMatrix> {
        depolarize_all(&self.rho, &self.shape, DepolarizingStrength::new(d.clamp(0.0, 1.0))?)
    }

    fn npt(&self, noisy: &ComplexMatrix, cut: &Bipartition) -> Result<bool> {
        is_npt(noisy, &self.shape, cut, self.cfg)
    }

    /// Index of the last NPT grid point for `cut`, by dense scan.
    fn fine_scan(&self, cut: &Bipartition) -> Result<Option<f64>> {
        let steps = (1.0 / FINE_SCAN_STEP).round() as usize;
        let mut last = None;
        for k in 0..=steps {
            let d = k as f64 / steps as f64;
            if self.npt(&self.noisy(d)?, cut)? {
                last = Some(d);
            }
        }
        Ok(last)
    }
}

pub fn d_crit(psi: &StateVector, cfg: &SolverConfig) -> Result<RobustnessResult> {
    cfg.validate()?;
    if psi.n_qubits() < 2 {
        return Err(Error::WrongQubitCount {
            expected: 2,
            actual: psi.n_qubits(),
        });
    }
    let problem = Problem {
        rho: density(psi),
        shape: psi.shape(),
        cfg,
    };
    let cuts = Bipartition::all_inequivalent(psi.n_qubits());

    // Prescan: NPT pattern of every cut on an even grid.
    let points = cfg.prescan_points;
    let grid: Vec<f64> = (0..points).map(|k| k as f64 / (points - 1) as f64).collect();
    let mut patterns = vec![Vec::with_capacity(points); cuts.len()];
    for &d in &grid {
        let noisy = problem.noisy(d)?;
        for (cut, pattern) in cuts.iter().zip(patterns.iter_mut()) {
            pattern.push(problem.npt(&noisy, cut)?);
        }
    }

    // Lower end of the crossing bracket for each cut still NPT somewhere.
    let mut fine_scan = false;
    let mut lower_ends: Vec<(f64, f64, Bipartition)> = Vec::new();
    for (cut, pattern) in cuts.iter().zip(&patterns) {
        let last_npt = pattern.iter().rposition(|&b| b);
        let monotone = match last_npt {
            Some(k) => pattern[..=k].iter().all(|&b| b),
            None => true,
        };
        if monotone {
            if let Some(k) = last_npt {
                lower_ends.push((grid[k], grid[(k + 1).min(points - 1)], *cut));
            }
        } else {
            fine_scan = true;
            if let Some(d) = problem.fine_scan(cut)? {
                lower_ends.push((d, (d + FINE_SCAN_STEP).min(1.0), *cut));
            }
        }
    }

    let Some(max_lo) = lower_ends.iter().map(|e| e.0).reduce(f64::max) else {
        // Already PPT everywhere: report the tightest cut at d = 0.
        let residual = cuts
            .iter()
            .map(|c| min_eigenvalue(&partial_transpose(&problem.rho, &problem.shape, c)?))
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .fold(f64::INFINITY, f64::min);
        return Ok(RobustnessResult {
            d_crit: 0.0,
            limiting_cut: None,
            iterations: 0,
            residual_min_eig: residual,
            fine_scan,
        });
    };

    // Joint bisection over the cuts whose bracket starts at the latest point;
    // every other cut is already PPT beyond it.
    let candidates: Vec<Bipartition> = lower_ends
        .iter()
        .filter(|e| e.0 == max_lo)
        .map(|e| e.2)
        .collect();
    let hi0 = lower_ends
        .iter()
        .filter(|e| e.0 == max_lo)
        .map(|e| e.1)
        .fold(max_lo, f64::max);
    let (mut lo, mut hi) = (max_lo, hi0);
    let mut limiting = candidates[0];
    let mut iterations = 0;
    while hi - lo > cfg.bisection_tol {
        let mid = 0.5 * (lo + hi);
        let noisy = problem.noisy(mid)?;
        let mut hit = None;
        // Try the most recent NPT cut first.
        for cut in std::iter::once(&limiting).chain(candidates.iter().filter(|c| **c != limiting)) {
            if problem.npt(&noisy, cut)? {
                hit = Some(*cut);
                break;
            }
        }
        match hit {
            Some(cut) => {
                limiting = cut;
                lo = mid;
            }
            None => hi = mid,
        }
        iterations += 1;
    }

    // Interpolate the zero of the limiting cut's smallest eigenvalue inside
    // the final bracket.
    let f_lo = min_pt_eigenvalue_at(&problem.rho, &problem.shape, &limiting, lo)?;
    let f_hi = min_pt_eigenvalue_at(&problem.rho, &problem.shape, &limiting, hi)?;
    let d = if f_lo < f_hi {
        (lo + (hi - lo) * f_lo / (f_lo - f_hi)).clamp(lo, hi)
    } else {
        hi
    };
    let residual_min_eig = min_pt_eigenvalue_at(&problem.rho, &problem.shape, &limiting, d)?;

    Ok(RobustnessResult {
        d_crit: d,
        limiting_cut: Some(limiting),
        iterations,
        residual_min_eig,
        fine_scan,
    })
}
