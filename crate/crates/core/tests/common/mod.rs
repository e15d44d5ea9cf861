#![allow(dead_code)]

use entrob::linalg::ComplexMatrix;
use entrob::StateVector;
use num_complex::Complex64;
use rand::Rng;
use rand_distr::StandardNormal;

pub fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// Pure state with independent complex Gaussian amplitudes.
pub fn random_state<R: Rng>(rng: &mut R, n_qubits: usize) -> StateVector {
    let amps = (0..1usize << n_qubits)
        .map(|_| c(rng.sample(StandardNormal), rng.sample(StandardNormal)))
        .collect();
    StateVector::normalized(amps).unwrap()
}

/// Random 2×2 unitary from Euler angles and a global phase.
pub fn random_unitary<R: Rng>(rng: &mut R) -> [[Complex64; 2]; 2] {
    let theta: f64 = rng.random_range(0.0..std::f64::consts::PI);
    let (alpha, beta, delta): (f64, f64, f64) = (
        rng.random_range(0.0..6.3),
        rng.random_range(0.0..6.3),
        rng.random_range(0.0..6.3),
    );
    let (ct, st) = ((theta / 2.0).cos(), (theta / 2.0).sin());
    let e = |x: f64| Complex64::from_polar(1.0, x);
    [
        [e(delta) * e(alpha) * ct, -e(delta) * e(beta) * st],
        [e(delta) * e(-beta) * st, e(delta) * e(-alpha) * ct],
    ]
}

pub fn pauli_x() -> ComplexMatrix {
    ComplexMatrix::new(2, vec![c(0., 0.), c(1., 0.), c(1., 0.), c(0., 0.)]).unwrap()
}

pub fn pauli_y() -> ComplexMatrix {
    ComplexMatrix::new(2, vec![c(0., 0.), c(0., -1.), c(0., 1.), c(0., 0.)]).unwrap()
}

pub fn pauli_z() -> ComplexMatrix {
    ComplexMatrix::new(2, vec![c(1., 0.), c(0., 0.), c(0., 0.), c(-1., 0.)]).unwrap()
}

/// `K` embedded at `qubit` of an `n`-qubit register (qubit 0 leftmost).
pub fn embed(k: &ComplexMatrix, qubit: usize, n: usize) -> ComplexMatrix {
    let mut out = ComplexMatrix::identity(1);
    for q in 0..n {
        let factor = if q == qubit { k.clone() } else { ComplexMatrix::identity(2) };
        out = entrob::linalg::kron(&out, &factor);
    }
    out
}

/// Depolarizing channel on one qubit in four-operator Kraus form:
/// `{√(1−3d/4)·1, √(d/4)·X, √(d/4)·Y, √(d/4)·Z}`.
pub fn kraus_depolarize(rho: &ComplexMatrix, qubit: usize, n: usize, d: f64) -> ComplexMatrix {
    let ops = [
        (ComplexMatrix::identity(2), (1.0 - 0.75 * d).sqrt()),
        (pauli_x(), (d / 4.0).sqrt()),
        (pauli_y(), (d / 4.0).sqrt()),
        (pauli_z(), (d / 4.0).sqrt()),
    ];
    let mut out = ComplexMatrix::zeros(rho.dim());
    for (op, w) in ops {
        let k = embed(&op.scale(w), qubit, n);
        out = &out + &(&(&k * rho) * &k.dagger());
    }
    out
}

/// Wootters concurrence of an X-shaped two-qubit state (nonzero entries only
/// on the diagonal and anti-diagonal):
/// `C = 2·max(0, |ρ₀₃| − √(ρ₁₁ρ₂₂), |ρ₁₂| − √(ρ₀₀ρ₃₃))`.
pub fn x_state_concurrence(rho: &ComplexMatrix) -> f64 {
    let p = |i: usize| rho[(i, i)].re;
    let outer = rho[(0, 3)].norm() - (p(1) * p(2)).sqrt();
    let inner = rho[(1, 2)].norm() - (p(0) * p(3)).sqrt();
    2.0 * outer.max(inner).max(0.0)
}

/// Kolmogorov–Smirnov distance between two samples.
pub fn ks_distance(mut a: Vec<f64>, mut b: Vec<f64>) -> f64 {
    a.sort_by(f64::total_cmp);
    b.sort_by(f64::total_cmp);
    let (mut i, mut j, mut best) = (0usize, 0usize, 0.0f64);
    while i < a.len() && j < b.len() {
        let x = a[i].min(b[j]);
        while i < a.len() && a[i] <= x {
            i += 1;
        }
        while j < b.len() && b[j] <= x {
            j += 1;
        }
        best = best.max((i as f64 / a.len() as f64 - j as f64 / b.len() as f64).abs());
    }
    best
}
