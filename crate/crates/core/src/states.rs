//! Pure-state families: GHZ, W, the GHZ-like and W-like one-parameter
//! families, general permutation-symmetric three-qubit states, and the
//! GHZ–W superposition `√a|GHZ⟩ − e^{iφ}√(1−a)|W⟩`.

use std::f64::consts::TAU;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;
use rand_distr::StandardNormal;

use crate::error::{check_unit_interval, Error, Result};
use crate::linalg::{ComplexMatrix, QubitRegisterShape};

/// Tolerance on `Σ|amplitude|² − 1` accepted by the checked constructors.
pub const NORM_TOL: f64 = 1e-10;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);

/// A normalized pure state of `n` qubits in the computational basis.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    shape: QubitRegisterShape,
    amplitudes: Vec<Complex64>,
}

impl StateVector {
    /// Wraps amplitudes that are already normalized.
    pub fn new(amplitudes: Vec<Complex64>) -> Result<Self> {
        let shape = QubitRegisterShape::for_dim(amplitudes.len())?;
        let norm_sqr: f64 = amplitudes.iter().map(|z| z.norm_sqr()).sum();
        if !((norm_sqr - 1.0).abs() <= NORM_TOL) {
            return Err(Error::NotNormalized { norm_sqr });
        }
        Ok(Self { shape, amplitudes })
    }

    /// Rescales arbitrary nonzero amplitudes to unit norm.
    pub fn normalized(mut amplitudes: Vec<Complex64>) -> Result<Self> {
        let norm_sqr: f64 = amplitudes.iter().map(|z| z.norm_sqr()).sum();
        if !(norm_sqr > 0.0 && norm_sqr.is_finite()) {
            return Err(Error::NotNormalized { norm_sqr });
        }
        let inv = norm_sqr.sqrt().recip();
        amplitudes.iter_mut().for_each(|z| *z *= inv);
        Self::new(amplitudes)
    }

    /// Computational basis state `|index⟩`.
    pub fn basis(n_qubits: usize, index: usize) -> Result<Self> {
        let shape = QubitRegisterShape::new(n_qubits)?;
        if index >= shape.dim() {
            return Err(Error::OutOfRange {
                name: "basis index",
                value: index as f64,
                range: "[0, 2^n)",
            });
        }
        let mut amplitudes = vec![ZERO; shape.dim()];
        amplitudes[index] = Complex64::new(1.0, 0.0);
        Ok(Self { shape, amplitudes })
    }

    pub fn n_qubits(&self) -> usize {
        self.shape.n_qubits()
    }

    pub fn shape(&self) -> QubitRegisterShape {
        self.shape
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amplitudes.iter().map(|z| z.norm_sqr()).sum()
    }

    /// Relabels qubits so that qubit `q` of `self` becomes qubit `perm[q]`.
    pub fn permute_qubits(&self, perm: &[usize]) -> Result<Self> {
        let n = self.n_qubits();
        let mut seen = vec![false; n];
        if perm.len() != n || perm.iter().any(|&p| p >= n || std::mem::replace(&mut seen[p], true)) {
            return Err(Error::InvalidConfig(format!(
                "{perm:?} is not a permutation of {n} qubits"
            )));
        }
        let mut out = vec![ZERO; self.amplitudes.len()];
        for (index, &amp) in self.amplitudes.iter().enumerate() {
            let mut target = 0;
            for (q, &p) in perm.iter().enumerate() {
                if index & self.shape.bit(q) != 0 {
                    target |= self.shape.bit(p);
                }
            }
            out[target] = amp;
        }
        Ok(Self {
            shape: self.shape,
            amplitudes: out,
        })
    }

    /// Applies a 2×2 unitary to one qubit.
    pub fn apply_single_qubit(&self, qubit: usize, u: &[[Complex64; 2]; 2]) -> Result<Self> {
        if qubit >= self.n_qubits() {
            return Err(Error::OutOfRange {
                name: "qubit",
                value: qubit as f64,
                range: "[0, n)",
            });
        }
        let bit = self.shape.bit(qubit);
        let mut out = self.amplitudes.clone();
        for i in (0..out.len()).filter(|i| i & bit == 0) {
            let (a0, a1) = (self.amplitudes[i], self.amplitudes[i | bit]);
            out[i] = u[0][0] * a0 + u[0][1] * a1;
            out[i | bit] = u[1][0] * a0 + u[1][1] * a1;
        }
        Ok(Self {
            shape: self.shape,
            amplitudes: out,
        })
    }
}

/// Amplitudes `(c₁, c₂, c₃, c₄)` on the Dicke basis of three qubits:
/// `|000⟩`, `(|001⟩+|010⟩+|100⟩)/√3`, `(|011⟩+|101⟩+|110⟩)/√3`, `|111⟩`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SymmetricCoefficients {
    c: [Complex64; 4],
}

impl SymmetricCoefficients {
    pub fn new(c1: Complex64, c2: Complex64, c3: Complex64, c4: Complex64) -> Result<Self> {
        let c = [c1, c2, c3, c4];
        let norm_sqr: f64 = c.iter().map(|z| z.norm_sqr()).sum();
        if !((norm_sqr - 1.0).abs() <= NORM_TOL) {
            return Err(Error::NotNormalized { norm_sqr });
        }
        Ok(Self { c })
    }

    pub fn as_array(&self) -> [Complex64; 4] {
        self.c
    }

    /// Multiplies every coefficient by `e^{iθ}`.
    pub fn with_global_phase(&self, theta: f64) -> Self {
        let ph = Complex64::from_polar(1.0, theta);
        Self {
            c: self.c.map(|z| z * ph),
        }
    }
}

fn check_family_size(n: usize, min: usize) -> Result<()> {
    if (min..=5).contains(&n) {
        Ok(())
    } else {
        Err(Error::OutOfRange {
            name: "n",
            value: n as f64,
            range: if min == 2 { "[2, 5]" } else { "[3, 5]" },
        })
    }
}

fn real(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

/// `(|0…0⟩ + |1…1⟩)/√2` on `n ∈ [2, 5]` qubits.
pub fn ghz(n: usize) -> Result<StateVector> {
    check_family_size(n, 2)?;
    let dim = 1 << n;
    let mut amplitudes = vec![ZERO; dim];
    amplitudes[0] = real(std::f64::consts::FRAC_1_SQRT_2);
    amplitudes[dim - 1] = real(std::f64::consts::FRAC_1_SQRT_2);
    StateVector::new(amplitudes)
}

/// Uniform superposition of the `n` single-excitation basis states.
pub fn w(n: usize) -> Result<StateVector> {
    check_family_size(n, 2)?;
    let amp = real((n as f64).sqrt().recip());
    let amplitudes = (0..1usize << n)
        .map(|i| if i.count_ones() == 1 { amp } else { ZERO })
        .collect();
    StateVector::new(amplitudes)
}

/// `√p|00⟩ + √(1−p)|11⟩`, a two-qubit pure state in Schmidt form.
pub fn two_qubit_schmidt(p: f64) -> Result<StateVector> {
    check_unit_interval("p", p)?;
    StateVector::new(vec![real(p.sqrt()), ZERO, ZERO, real((1.0 - p).sqrt())])
}

/// GHZ-like state `√a|000⟩ + √(1−a)|111⟩`.
pub fn ghz_like(a: f64) -> Result<StateVector> {
    check_unit_interval("a", a)?;
    let mut amplitudes = vec![ZERO; 8];
    amplitudes[0] = real(a.sqrt());
    amplitudes[7] = real((1.0 - a).sqrt());
    StateVector::new(amplitudes)
}

/// W-like state `√b|000⟩ + √((1−b)/3)(|001⟩+|010⟩+|100⟩)`.
pub fn w_like(b: f64) -> Result<StateVector> {
    check_unit_interval("b", b)?;
    let amp = real(((1.0 - b) / 3.0).sqrt());
    let mut amplitudes = vec![ZERO; 8];
    amplitudes[0] = real(b.sqrt());
    for i in [1, 2, 4] {
        amplitudes[i] = amp;
    }
    StateVector::new(amplitudes)
}

/// General permutation-symmetric three-qubit state.
pub fn symmetric3(c: &SymmetricCoefficients) -> StateVector {
    let inv_sqrt3 = 3f64.sqrt().recip();
    let [c1, c2, c3, c4] = c.c;
    let amplitudes = (0..8usize)
        .map(|i| match i.count_ones() {
            0 => c1,
            1 => c2 * inv_sqrt3,
            2 => c3 * inv_sqrt3,
            _ => c4,
        })
        .collect();
    StateVector::new(amplitudes).expect("coefficients are normalized on construction")
}

/// `√a|GHZ⟩ₙ − e^{iφ}√(1−a)|W⟩ₙ` for `n ∈ [3, 5]`.
///
/// The two components have disjoint support, so the result is normalized for
/// every `a ∈ [0, 1]`.
pub fn ghz_w_superposition(n: usize, a: f64, phi: f64) -> Result<StateVector> {
    check_family_size(n, 3)?;
    check_unit_interval("a", a)?;
    if !phi.is_finite() {
        return Err(Error::OutOfRange {
            name: "phi",
            value: phi,
            range: "finite reals",
        });
    }
    let phi = phi.rem_euclid(TAU);
    let ghz_amp = real((a / 2.0).sqrt());
    let w_amp = -Complex64::from_polar(((1.0 - a) / n as f64).sqrt(), phi);
    let dim = 1usize << n;
    let amplitudes = (0..dim)
        .map(|i| {
            if i == 0 || i == dim - 1 {
                ghz_amp
            } else if i.count_ones() == 1 {
                w_amp
            } else {
                ZERO
            }
        })
        .collect();
    StateVector::new(amplitudes)
}

/// Haar-random point of the symmetric subspace: four independent standard
/// complex Gaussians, normalized. Uses complex (not real) coefficients.
pub fn haar_symmetric_coefficients<R: Rng + ?Sized>(rng: &mut R) -> SymmetricCoefficients {
    loop {
        let raw: [Complex64; 4] = std::array::from_fn(|_| {
            Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
        });
        let norm = raw.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if norm > 1e-12 {
            let [c1, c2, c3, c4] = raw.map(|z| z / norm);
            return SymmetricCoefficients::new(c1, c2, c3, c4)
                .expect("normalized Gaussian draw");
        }
    }
}

pub fn haar_symmetric3<R: Rng + ?Sized>(rng: &mut R) -> StateVector {
    symmetric3(&haar_symmetric_coefficients(rng))
}

/// Deterministic generator for `(seed, stream)`; distinct streams never overlap.
pub fn seeded_rng(seed: u64, stream: u64) -> ChaCha20Rng {
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// `|ψ⟩⟨ψ|`.
pub fn density(psi: &StateVector) -> ComplexMatrix {
    ComplexMatrix::outer(psi.amplitudes(), psi.amplitudes()).expect("same length")
}
