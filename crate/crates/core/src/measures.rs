//! Entanglement quantifiers and closed-form laws.
//!
//! Negativity uses the doubled convention `N = ‖ρ^{T_B}‖₁ − 1 = 2·Σ|λ⁻|`,
//! which gives `N = 1` for GHZ and Bell states and `N = 2√2/3` for W across
//! a one-qubit cut.

use num_complex::Complex64;

use crate::error::{check_unit_interval, Error, Result};
use crate::linalg::{
    hermitian_eigen, hermitian_eigenvalues, partial_transpose, Bipartition, ComplexMatrix,
    QubitRegisterShape,
};
use crate::states::StateVector;

/// Eigenvalues in `[−NEGATIVE_FLOOR, 0)` count as zero.
pub const NEGATIVE_FLOOR: f64 = 1e-10;

/// `8√6/9`, the weight of the GHZ–W cross term in the three-tangle.
pub fn tangle_cross_coefficient() -> f64 {
    8.0 * 6f64.sqrt() / 9.0
}

pub fn negativity(rho: &ComplexMatrix, shape: &QubitRegisterShape, cut: &Bipartition) -> Result<f64> {
    let pt = partial_transpose(rho, shape, cut)?;
    let eig = hermitian_eigenvalues(&pt)?;
    Ok(2.0 * eig.iter().filter(|&&l| l < -NEGATIVE_FLOOR).map(|l| -l).sum::<f64>())
}

/// Negativity across the `{last qubit} | rest` cut, the cut reported for
/// permutation-symmetric states.
pub fn negativity_last_qubit(psi: &StateVector) -> Result<f64> {
    let shape = psi.shape();
    let n = shape.n_qubits();
    let cut = Bipartition::single(n, n - 1)?;
    negativity(&crate::states::density(psi), &shape, &cut)
}

/// Negativity of `√a|GHZ⟩ − e^{iφ}√(1−a)|W⟩`: `√(5a² − 4a + 8)/3`, for any φ.
pub fn negativity_z_closed(a: f64) -> Result<f64> {
    check_unit_interval("a", a)?;
    Ok((5.0 * a * a - 4.0 * a + 8.0).sqrt() / 3.0)
}

/// Two-qubit pure-state robustness law `R = 1 − 1/√(1 + 2N)`.
pub fn two_qubit_robustness_closed(negativity: f64) -> Result<f64> {
    check_unit_interval("N", negativity)?;
    Ok(1.0 - (1.0 + 2.0 * negativity).sqrt().recip())
}

/// Wootters concurrence of a two-qubit density matrix.
///
/// The λᵢ are the eigenvalues of `√(√ρ ρ̃ √ρ)` with `ρ̃ = (Y⊗Y) ρ* (Y⊗Y)`,
/// which coincide with the square roots of the spectrum of `ρρ̃`.
pub fn concurrence_2q(rho: &ComplexMatrix) -> Result<f64> {
    if rho.dim() != 4 {
        return Err(Error::DimensionMismatch {
            expected: 4,
            actual: rho.dim(),
        });
    }
    let sqrt_rho = hermitian_eigen(rho)?.reconstruct_with(|x| x.max(0.0).sqrt());
    // Y⊗Y is real with entries ∓1 on the anti-diagonal.
    let yy = ComplexMatrix::from_real_rows(&[
        &[0.0, 0.0, 0.0, -1.0],
        &[0.0, 0.0, 1.0, 0.0],
        &[0.0, 1.0, 0.0, 0.0],
        &[-1.0, 0.0, 0.0, 0.0],
    ])?;
    let flipped = &(&yy * &rho.conj()) * &yy;
    let m = &(&sqrt_rho * &flipped) * &sqrt_rho;
    let mut lambdas: Vec<f64> = hermitian_eigenvalues(&m.symmetrized())?
        .into_iter()
        .map(|mu| mu.max(0.0).sqrt())
        .collect();
    lambdas.sort_by(|a, b| b.total_cmp(a));
    Ok((lambdas[0] - lambdas[1] - lambdas[2] - lambdas[3]).max(0.0))
}

/// Three-tangle of a pure three-qubit state, `τ = 4|d₁ − 2d₂ + 4d₃|`
/// (Cayley hyperdeterminant of the amplitude tensor).
pub fn three_tangle_pure(psi: &StateVector) -> Result<f64> {
    if psi.n_qubits() != 3 {
        return Err(Error::WrongQubitCount {
            expected: 3,
            actual: psi.n_qubits(),
        });
    }
    let a = |i: usize| -> Complex64 { psi.amplitudes()[i] };
    let (a000, a001, a010, a011) = (a(0), a(1), a(2), a(3));
    let (a100, a101, a110, a111) = (a(4), a(5), a(6), a(7));

    let d1 = a000 * a000 * a111 * a111
        + a001 * a001 * a110 * a110
        + a010 * a010 * a101 * a101
        + a100 * a100 * a011 * a011;
    let d2 = a000 * a111 * a011 * a100
        + a000 * a111 * a101 * a010
        + a000 * a111 * a110 * a001
        + a011 * a100 * a101 * a010
        + a011 * a100 * a110 * a001
        + a101 * a010 * a110 * a001;
    let d3 = a000 * a110 * a101 * a011 + a111 * a001 * a010 * a100;
    Ok(4.0 * (d1 - 2.0 * d2 + 4.0 * d3).norm())
}

/// `τ = |a² − (8√6/9)·√(a(1−a)³)·e^{3iφ}|` on the GHZ–W superposition family.
pub fn three_tangle_z_closed(a: f64, phi: f64) -> Result<f64> {
    check_unit_interval("a", a)?;
    let cross = tangle_cross_coefficient() * (a * (1.0 - a).powi(3)).sqrt();
    Ok((Complex64::new(a * a, 0.0) - Complex64::from_polar(cross, 3.0 * phi)).norm())
}
