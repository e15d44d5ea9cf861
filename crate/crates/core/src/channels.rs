//! Partially depolarizing noise applied independently to each qubit.
//!
//! On one qubit the channel maps `|i⟩⟨j| → (1−d)|i⟩⟨j| + d·δᵢⱼ·½·1`, i.e.
//! populations relax as `Pₖ → (1+s)/2·Pₖ + (1−s)/2·P₍ₖ⊕₁₎` and coherences
//! `σ±` shrink by `s = 1 − d`. On a register this is the affine map
//! `ρ ↦ (1−d)ρ + d·(Trₖ ρ) ⊗ ½1` with the identity re-inserted at slot `k`.
//!
//! A Kraus sum needs four operators here (`√(1−3d/4)·1` and `√(d/4)` times
//! each Pauli); the affine form is used directly and the Kraus form is kept
//! as a test oracle.

use crate::error::{check_unit_interval, Error, Result};
use crate::linalg::{ComplexMatrix, QubitRegisterShape};

/// Depolarization probability `d ∈ [0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct DepolarizingStrength {
    d: f64,
}

impl DepolarizingStrength {
    pub fn new(d: f64) -> Result<Self> {
        check_unit_interval("d", d)?;
        Ok(Self { d })
    }

    #[inline]
    pub fn d(&self) -> f64 {
        self.d
    }

    /// Coherence survival factor `s = 1 − d`.
    #[inline]
    pub fn s(&self) -> f64 {
        1.0 - self.d
    }
}

/// Applies `C_d` to `qubit` only.
pub fn depolarize_qubit(
    rho: &ComplexMatrix,
    shape: &QubitRegisterShape,
    qubit: usize,
    strength: DepolarizingStrength,
) -> Result<ComplexMatrix> {
    if rho.dim() != shape.dim() {
        return Err(Error::DimensionMismatch {
            expected: shape.dim(),
            actual: rho.dim(),
        });
    }
    if qubit >= shape.n_qubits() {
        return Err(Error::OutOfRange {
            name: "qubit",
            value: qubit as f64,
            range: "[0, n)",
        });
    }
    let d = strength.d();
    if d == 0.0 {
        return Ok(rho.clone());
    }
    let keep = strength.s();
    let half_d = 0.5 * d;
    let bit = shape.bit(qubit);
    Ok(ComplexMatrix::from_fn(shape.dim(), |i, j| {
        let mut out = rho[(i, j)] * keep;
        if (i ^ j) & bit == 0 {
            let (i0, j0) = (i & !bit, j & !bit);
            out += (rho[(i0, j0)] + rho[(i0 | bit, j0 | bit)]) * half_d;
        }
        out
    }))
}

/// `C_d^{⊗n}`: the same channel on every qubit.
pub fn depolarize_all(
    rho: &ComplexMatrix,
    shape: &QubitRegisterShape,
    strength: DepolarizingStrength,
) -> Result<ComplexMatrix> {
    let mut out = rho.clone();
    for q in 0..shape.n_qubits() {
        out = depolarize_qubit(&out, shape, q, strength)?;
    }
    Ok(out)
}
