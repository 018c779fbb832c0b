//! Inputs shared by the benchmarks.

use ado_core::{LieAlgebra, Matrix};

/// Heisenberg algebra plus a 3-dimensional center: the nilpotent part reached
/// when saturating the upper-triangular 3x3 matrices.
pub fn heisenberg_plus_abelian() -> LieAlgebra {
    LieAlgebra::from_terms("heisenberg+ab3", &["x", "y", "z", "a", "b", "c"], &[(0, 1, 2, 1)]).expect("valid algebra")
}

/// An upper-triangular 6x6 integer matrix with repeated diagonal entries, so
/// it has a nontrivial nilpotent part.
pub fn jordan_mix() -> Matrix {
    Matrix::from_ints(&[
        &[2, 1, 0, 3, 0, 1],
        &[0, 2, 1, 0, 0, 0],
        &[0, 0, 2, 0, 1, 0],
        &[0, 0, 0, -1, 1, 0],
        &[0, 0, 0, 0, -1, 5],
        &[0, 0, 0, 0, 0, 3],
    ])
}
