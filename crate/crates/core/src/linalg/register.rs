//! Multi-qubit tensor structure.
//!
//! Qubit 0 is the leftmost tensor factor, i.e. the most significant bit of a
//! basis index: `|b₀b₁…b₍ₙ₋₁₎⟩ ↔ Σ bₖ·2^(n−1−k)`.

use std::fmt;

use num_complex::Complex64;

use super::matrix::ComplexMatrix;
use crate::error::{Error, Result};

/// Largest register the dense routines accept. Nothing else assumes a bound.
pub const MAX_QUBITS: usize = 12;

/// A register of `n_qubits` two-level systems.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct QubitRegisterShape {
    n_qubits: usize,
}

impl QubitRegisterShape {
    pub fn new(n_qubits: usize) -> Result<Self> {
        if n_qubits == 0 || n_qubits > MAX_QUBITS {
            return Err(Error::OutOfRange {
                name: "n_qubits",
                value: n_qubits as f64,
                range: "[1, 12]",
            });
        }
        Ok(Self { n_qubits })
    }

    /// Infers the register from a matrix whose dimension is a power of two.
    pub fn for_dim(dim: usize) -> Result<Self> {
        if dim < 2 || !dim.is_power_of_two() {
            return Err(Error::DimensionMismatch {
                expected: dim.next_power_of_two().max(2),
                actual: dim,
            });
        }
        Self::new(dim.trailing_zeros() as usize)
    }

    #[inline]
    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn local_dims(&self) -> Vec<usize> {
        vec![2; self.n_qubits]
    }

    #[inline]
    pub fn dim(&self) -> usize {
        1 << self.n_qubits
    }

    /// Basis-index bit that encodes `qubit`.
    #[inline]
    pub fn bit(&self, qubit: usize) -> usize {
        debug_assert!(qubit < self.n_qubits);
        1 << (self.n_qubits - 1 - qubit)
    }

    pub(crate) fn check_matrix(&self, m: &ComplexMatrix) -> Result<()> {
        if m.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                actual: m.dim(),
            });
        }
        Ok(())
    }
}

/// A nonempty proper subset of the qubits of a register.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Bipartition {
    n_qubits: usize,
    /// Bit `q` set ⇔ qubit `q` is in the subset.
    members: u32,
}

impl Bipartition {
    pub fn new(n_qubits: usize, qubits: &[usize]) -> Result<Self> {
        let mut members = 0u32;
        for &q in qubits {
            if q >= n_qubits {
                return Err(Error::InvalidCut(format!(
                    "qubit {q} out of range for {n_qubits} qubits"
                )));
            }
            members |= 1 << q;
        }
        Self::from_members(n_qubits, members)
    }

    fn from_members(n_qubits: usize, members: u32) -> Result<Self> {
        if n_qubits == 0 || n_qubits > MAX_QUBITS {
            return Err(Error::InvalidCut(format!("{n_qubits}-qubit register")));
        }
        let full = (1u32 << n_qubits) - 1;
        if members == 0 {
            return Err(Error::InvalidCut("empty subset".into()));
        }
        if members == full {
            return Err(Error::InvalidCut(
                "subset covers the whole register; use a full transpose instead".into(),
            ));
        }
        Ok(Self { n_qubits, members })
    }

    pub fn single(n_qubits: usize, qubit: usize) -> Result<Self> {
        Self::new(n_qubits, &[qubit])
    }

    /// Every cut up to swapping the two sides: the `2^(n−1) − 1` subsets that
    /// exclude qubit 0, ordered by size and then lexicographically.
    pub fn all_inequivalent(n_qubits: usize) -> Vec<Self> {
        if n_qubits < 2 {
            return Vec::new();
        }
        let full = (1u32 << n_qubits) - 1;
        let mut cuts: Vec<Self> = (1..full)
            .filter(|m| m & 1 == 0)
            .map(|members| Self { n_qubits, members })
            .collect();
        cuts.sort_by_key(|c| (c.members.count_ones(), c.qubits()));
        cuts
    }

    #[inline]
    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn contains(&self, qubit: usize) -> bool {
        qubit < self.n_qubits && self.members & (1 << qubit) != 0
    }

    pub fn len(&self) -> usize {
        self.members.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn qubits(&self) -> Vec<usize> {
        (0..self.n_qubits).filter(|&q| self.contains(q)).collect()
    }

    pub fn complement(&self) -> Self {
        let full = (1u32 << self.n_qubits) - 1;
        Self {
            n_qubits: self.n_qubits,
            members: full & !self.members,
        }
    }

    /// The same cut with qubits relabelled `q → perm[q]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Self> {
        let mapped: Vec<usize> = self.qubits().iter().map(|&q| perm[q]).collect();
        Self::new(self.n_qubits, &mapped)
    }

    /// Basis-index bits touched by this subset.
    pub(crate) fn basis_mask(&self) -> usize {
        let shape = QubitRegisterShape {
            n_qubits: self.n_qubits,
        };
        self.qubits().into_iter().map(|q| shape.bit(q)).sum()
    }

    fn check_shape(&self, shape: &QubitRegisterShape) -> Result<()> {
        if self.n_qubits != shape.n_qubits() {
            return Err(Error::InvalidCut(format!(
                "cut defined on {} qubits, register has {}",
                self.n_qubits,
                shape.n_qubits()
            )));
        }
        Ok(())
    }
}

impl fmt::Display for Bipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.qubits().iter().map(|q| q.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// `ρ^{T_S}`: transposes the tensor indices of the qubits in `subset`.
pub fn partial_transpose(
    rho: &ComplexMatrix,
    shape: &QubitRegisterShape,
    subset: &Bipartition,
) -> Result<ComplexMatrix> {
    shape.check_matrix(rho)?;
    subset.check_shape(shape)?;
    let mask = subset.basis_mask();
    Ok(ComplexMatrix::from_fn(shape.dim(), |i, j| {
        let src_row = (i & !mask) | (j & mask);
        let src_col = (j & !mask) | (i & mask);
        rho[(src_row, src_col)]
    }))
}

/// Reduced state on the qubits outside `traced_out`, kept in register order.
pub fn partial_trace(
    rho: &ComplexMatrix,
    shape: &QubitRegisterShape,
    traced_out: &Bipartition,
) -> Result<ComplexMatrix> {
    shape.check_matrix(rho)?;
    traced_out.check_shape(shape)?;
    let kept_bits: Vec<usize> = traced_out
        .complement()
        .qubits()
        .into_iter()
        .map(|q| shape.bit(q))
        .collect();
    let traced_bits: Vec<usize> = traced_out
        .qubits()
        .into_iter()
        .map(|q| shape.bit(q))
        .collect();

    let kept_dim = 1 << kept_bits.len();
    let traced_dim = 1 << traced_bits.len();
    let kept_index: Vec<usize> = (0..kept_dim).map(|k| scatter(k, &kept_bits)).collect();
    let traced_index: Vec<usize> = (0..traced_dim).map(|t| scatter(t, &traced_bits)).collect();

    Ok(ComplexMatrix::from_fn(kept_dim, |r, c| {
        traced_index
            .iter()
            .map(|&t| rho[(kept_index[r] | t, kept_index[c] | t)])
            .sum::<Complex64>()
    }))
}

/// Spreads the bits of `value` (most significant first) onto `positions`.
fn scatter(value: usize, positions: &[usize]) -> usize {
    let len = positions.len();
    positions
        .iter()
        .enumerate()
        .filter(|(k, _)| value & (1 << (len - 1 - k)) != 0)
        .map(|(_, &p)| p)
        .sum()
}
