//! Fixed Pauli convention.
//!
//! Basis order is {|0>, |1>} with |0> the energy ground state, so
//! sigma_z = diag(+1, -1), sigma_minus maps |1> to |0> and annihilates |0>,
//! and sigma_plus is its adjoint. Multi-qubit basis indices put qubit 0 in
//! the most significant position: |q0 q1> maps to index 2*q0 + q1.

use num_complex::Complex64;

use crate::matrix::ComplexMatrix;

pub fn identity2() -> ComplexMatrix {
    ComplexMatrix::identity(2)
}

pub fn sigma_x() -> ComplexMatrix {
    ComplexMatrix::from_real(2, 2, &[0.0, 1.0, 1.0, 0.0])
}

pub fn sigma_y() -> ComplexMatrix {
    ComplexMatrix::from_vec(
        2,
        2,
        vec![
            Complex64::new(0.0, 0.0),
            Complex64::new(0.0, -1.0),
            Complex64::new(0.0, 1.0),
            Complex64::new(0.0, 0.0),
        ],
    )
}

pub fn sigma_z() -> ComplexMatrix {
    ComplexMatrix::from_real(2, 2, &[1.0, 0.0, 0.0, -1.0])
}

/// Lowering operator |0><1|.
pub fn sigma_minus() -> ComplexMatrix {
    ComplexMatrix::from_real(2, 2, &[0.0, 1.0, 0.0, 0.0])
}

/// Raising operator |1><0|.
pub fn sigma_plus() -> ComplexMatrix {
    ComplexMatrix::from_real(2, 2, &[0.0, 0.0, 1.0, 0.0])
}

/// Pauli operator along a named axis.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axis {
    X,
    Y,
    Z,
}

pub fn sigma(axis: Axis) -> ComplexMatrix {
    match axis {
        Axis::X => sigma_x(),
        Axis::Y => sigma_y(),
        Axis::Z => sigma_z(),
    }
}

/// Computational basis column vector |k> of dimension `dim`.
pub fn basis_ket(dim: usize, k: usize) -> ComplexMatrix {
    assert!(k < dim);
    let mut v = ComplexMatrix::zeros(dim, 1);
    v.set(k, 0, Complex64::new(1.0, 0.0));
    v
}
