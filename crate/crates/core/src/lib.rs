//! Entanglement measures and robustness of few-qubit pure states under
//! independent per-qubit depolarizing noise.
//!
//! Qubit 0 is the leftmost tensor factor (most significant bit of a basis
//! index) throughout.

pub mod channels;
mod error;
pub mod experiments;
pub mod linalg;
pub mod measures;
pub mod robustness;
pub mod states;

pub use channels::{depolarize_all, depolarize_qubit, DepolarizingStrength};
pub use error::{Error, Result};
pub use linalg::{Bipartition, ComplexMatrix, QubitRegisterShape};
pub use measures::{
    concurrence_2q, negativity, negativity_z_closed, three_tangle_pure, three_tangle_z_closed,
    two_qubit_robustness_closed,
};
pub use robustness::{d_crit, RobustnessResult, SolverConfig};
pub use states::{StateVector, SymmetricCoefficients};
