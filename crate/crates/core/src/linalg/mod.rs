//! Dense complex linear algebra on small qubit registers.

mod eigen;
mod matrix;
mod register;

pub use eigen::{
    has_eigenvalue_below, hermitian_eigen, hermitian_eigenvalues, min_eigenvalue,
    HermitianEigen, HERMITIAN_TOL,
};
pub use matrix::{kron, ComplexMatrix};
pub use register::{partial_trace, partial_transpose, Bipartition, QubitRegisterShape, MAX_QUBITS};
