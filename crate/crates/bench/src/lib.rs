//! Fixtures shared by the benchmarks.

use entrob::states::{density, seeded_rng};
use entrob::{ComplexMatrix, StateVector};
use num_complex::Complex64;
use rand_distr::{Distribution, StandardNormal};

/// Random pure state on `n` qubits, deterministic in `seed`.
pub fn random_state(n: usize, seed: u64) -> StateVector {
    let mut rng = seeded_rng(seed, 0);
    let amps: Vec<Complex64> = (0..1usize << n)
        .map(|_| Complex64::new(StandardNormal.sample(&mut rng), StandardNormal.sample(&mut rng)))
        .collect();
    StateVector::normalized(amps).expect("nonzero vector")
}

/// Density matrix of a random pure state; a dense Hermitian test matrix.
pub fn random_density(n: usize, seed: u64) -> ComplexMatrix {
    density(&random_state(n, seed))
}
