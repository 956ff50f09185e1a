//! Validated density matrices and state-level operations: partial trace,
//! partial transpose, trace distance and purity.

use num_complex::Complex64;

use crate::error::{QrError, Result};
use crate::matrix::{eigh, ComplexMatrix};

/// Validation thresholds. States produced by healthy numerics sit well
/// below these; a breach signals an upstream failure rather than noise.
const TRACE_TOL: f64 = 1e-8;
const HERMITICITY_TOL: f64 = 1e-8;
const EIGENVALUE_TOL: f64 = 1e-8;

/// Hermitian, unit-trace, positive-semidefinite matrix together with the
/// dimensions of its tensor factors.
#[derive(Debug, Clone)]
pub struct DensityMatrix {
    matrix: ComplexMatrix,
    dims: Vec<usize>,
}

impl DensityMatrix {
    /// Validate a raw matrix as a density matrix over subsystems `dims`.
    ///
    /// Asymmetric parts within tolerance are removed by Hermitian
    /// symmetrization; larger defects, trace deviation or negative
    /// eigenvalues are reported as distinct errors.
    pub fn new(matrix: ComplexMatrix, dims: &[usize]) -> Result<Self> {
        if !matrix.is_square() {
            return Err(QrError::NotSquare {
                rows: matrix.rows(),
                cols: matrix.cols(),
            });
        }
        let dim = matrix.dim();
        if dims.is_empty() || dims.iter().product::<usize>() != dim {
            return Err(QrError::BadSubsystemDims {
                dims: dims.to_vec(),
                dim,
            });
        }
        if !matrix.all_finite() {
            return Err(QrError::NonFinite);
        }
        let asymmetry = matrix.hermiticity_defect();
        if asymmetry > HERMITICITY_TOL {
            return Err(QrError::NotHermitian { asymmetry });
        }
        let matrix = matrix.hermitize();
        let trace = matrix.trace();
        let deviation = (trace - Complex64::new(1.0, 0.0)).norm();
        if deviation > TRACE_TOL {
            return Err(QrError::TraceDeviation { deviation });
        }
        let min_eig = eigh(&matrix).values[0];
        if min_eig < -EIGENVALUE_TOL {
            return Err(QrError::NegativeEigenvalue { value: min_eig });
        }
        Ok(Self {
            matrix,
            dims: dims.to_vec(),
        })
    }

    /// Pure state |psi><psi| from a column vector (normalized internally).
    pub fn pure(psi: &ComplexMatrix, dims: &[usize]) -> Result<Self> {
        assert_eq!(psi.cols(), 1, "pure() takes a column vector");
        let norm_sqr: f64 = psi.as_slice().iter().map(|z| z.norm_sqr()).sum();
        assert!(norm_sqr > 0.0, "zero state vector");
        let proj = psi.mul(&psi.adjoint()).scale_re(1.0 / norm_sqr);
        Self::new(proj, dims)
    }

    /// Computational basis state |k><k| over the given subsystem dims.
    pub fn basis(dims: &[usize], k: usize) -> Self {
        let dim: usize = dims.iter().product();
        let mut m = ComplexMatrix::zeros(dim, dim);
        m.set(k, k, Complex64::new(1.0, 0.0));
        Self::new(m, dims).expect("basis projector is a valid state")
    }

    /// Maximally mixed state I/d.
    pub fn maximally_mixed(dims: &[usize]) -> Self {
        let dim: usize = dims.iter().product();
        let m = ComplexMatrix::identity(dim).scale_re(1.0 / dim as f64);
        Self::new(m, dims).expect("I/d is a valid state")
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }

    /// Reinterpret the tensor-factor structure without touching the data.
    pub fn with_dims(&self, dims: &[usize]) -> Result<Self> {
        Self::new(self.matrix.clone(), dims)
    }

    /// Tr(rho^2).
    pub fn purity(&self) -> f64 {
        self.matrix.mul(&self.matrix).trace().re
    }

    /// Tensor product of two states.
    pub fn tensor(&self, other: &Self) -> Self {
        let m = crate::matrix::tensor(&self.matrix, &other.matrix);
        let mut dims = self.dims.clone();
        dims.extend_from_slice(&other.dims);
        Self::new(m, &dims).expect("tensor of states is a state")
    }
}

/// Validate a raw matrix as a density matrix; see [`DensityMatrix::new`].
pub fn validate_density(matrix: ComplexMatrix, dims: &[usize]) -> Result<DensityMatrix> {
    DensityMatrix::new(matrix, dims)
}

/// Partial trace over all subsystems not listed in `keep`.
///
/// `keep` lists subsystem indices in their original order; the reduced
/// state inherits those dimensions.
pub fn partial_trace(rho: &DensityMatrix, keep: &[usize]) -> Result<DensityMatrix> {
    let reduced = partial_trace_raw(rho.matrix(), rho.dims(), keep)?;
    let kept_dims: Vec<usize> = keep.iter().map(|&s| rho.dims()[s]).collect();
    DensityMatrix::new(reduced, &kept_dims)
}

/// Partial trace on a raw matrix; also used on non-Hermitian inputs when
/// extracting channels from circuit fragments.
pub fn partial_trace_raw(
    mat: &ComplexMatrix,
    dims: &[usize],
    keep: &[usize],
) -> Result<ComplexMatrix> {
    let n = dims.len();
    let valid =
        !keep.is_empty() && keep.iter().all(|&s| s < n) && keep.windows(2).all(|w| w[0] < w[1]);
    if !valid {
        return Err(QrError::InvalidSubsystem {
            selection: keep.to_vec(),
            count: n,
        });
    }
    let traced: Vec<usize> = (0..n).filter(|s| !keep.contains(s)).collect();
    let keep_dim: usize = keep.iter().map(|&s| dims[s]).product();
    let trace_dim: usize = traced.iter().map(|&s| dims[s]).product();

    // Strides of each subsystem in the flat index.
    let mut strides = vec![1usize; n];
    for s in (0..n - 1).rev() {
        strides[s] = strides[s + 1] * dims[s + 1];
    }
    let offset = |subsys: &[usize], multi: usize| -> usize {
        let mut rem = multi;
        let mut off = 0;
        for &s in subsys.iter().rev() {
            off += (rem % dims[s]) * strides[s];
            rem /= dims[s];
        }
        off
    };

    let mut out = ComplexMatrix::zeros(keep_dim, keep_dim);
    for i in 0..keep_dim {
        let i_off = offset(keep, i);
        for j in 0..keep_dim {
            let j_off = offset(keep, j);
            let mut acc = Complex64::new(0.0, 0.0);
            for t in 0..trace_dim {
                let t_off = offset(&traced, t);
                acc += mat.get(i_off + t_off, j_off + t_off);
            }
            out.set(i, j, acc);
        }
    }
    Ok(out)
}

/// Transpose the indices of one subsystem of a bipartite state.
///
/// Returns a raw matrix: the result is Hermitian with unit trace but may
/// have negative eigenvalues, which is exactly what entanglement
/// detection inspects.
pub fn partial_transpose(rho: &DensityMatrix, subsystem: usize) -> Result<ComplexMatrix> {
    let dims = rho.dims();
    if dims.len() != 2 || subsystem > 1 {
        return Err(QrError::InvalidSubsystem {
            selection: vec![subsystem],
            count: dims.len(),
        });
    }
    Ok(partial_transpose_raw(
        rho.matrix(),
        (dims[0], dims[1]),
        subsystem,
    ))
}

/// Partial transpose on a raw bipartite matrix.
pub fn partial_transpose_raw(
    m: &ComplexMatrix,
    dims: (usize, usize),
    subsystem: usize,
) -> ComplexMatrix {
    let (da, db) = dims;
    assert_eq!(m.dim(), da * db);
    assert!(subsystem < 2);
    ComplexMatrix::from_fn(da * db, da * db, |row, col| {
        let (a, b) = (row / db, row % db);
        let (ap, bp) = (col / db, col % db);
        if subsystem == 0 {
            m.get(ap * db + b, a * db + bp)
        } else {
            m.get(a * db + bp, ap * db + b)
        }
    })
}

/// Trace distance (1/2) sum |eigenvalues of a - b|.
pub fn trace_distance(a: &DensityMatrix, b: &DensityMatrix) -> Result<f64> {
    if a.dim() != b.dim() {
        return Err(QrError::DimensionMismatch {
            expected: a.dim(),
            found: b.dim(),
        });
    }
    let diff = a.matrix().sub(b.matrix());
    let spectrum = eigh(&diff).values;
    Ok(0.5 * spectrum.iter().map(|v| v.abs()).sum::<f64>())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::{tensor, ONE, ZERO};
    use crate::pauli;

    fn bell_phi_plus() -> DensityMatrix {
        let psi = ComplexMatrix::col_vector(&[
            Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0),
            ZERO,
            ZERO,
            Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0),
        ]);
        DensityMatrix::pure(&psi, &[2, 2]).unwrap()
    }

    #[test]
    fn validate_accepts_maximally_mixed() {
        let m = ComplexMatrix::identity(2).scale_re(0.5);
        assert!(DensityMatrix::new(m, &[2]).is_ok());
    }

    #[test]
    fn validate_rejects_bad_trace() {
        let m = ComplexMatrix::identity(2).scale_re(2.0);
        assert!(matches!(
            DensityMatrix::new(m, &[2]),
            Err(QrError::TraceDeviation { .. })
        ));
    }

    #[test]
    fn validate_rejects_non_hermitian() {
        assert!(matches!(
            DensityMatrix::new(pauli::sigma_plus(), &[2]),
            Err(QrError::NotHermitian { .. })
        ));
    }

    #[test]
    fn validate_rejects_negative_eigenvalue() {
        let m = ComplexMatrix::from_real(2, 2, &[1.5, 0.0, 0.0, -0.5]);
        assert!(matches!(
            DensityMatrix::new(m, &[2]),
            Err(QrError::NegativeEigenvalue { .. })
        ));
    }

    #[test]
    fn validate_rejects_bad_dims() {
        let m = ComplexMatrix::identity(4).scale_re(0.25);
        assert!(matches!(
            DensityMatrix::new(m, &[3]),
            Err(QrError::BadSubsystemDims { .. })
        ));
    }

    #[test]
    fn partial_trace_of_product_state() {
        let mut rng = crate::random::rng(41);
        let rho_a = crate::random::density(&mut rng, &[2]);
        let rho_b = crate::random::density(&mut rng, &[2]);
        let joint = rho_a.tensor(&rho_b);
        let back = partial_trace(&joint, &[0]).unwrap();
        assert!(back.matrix().max_abs_diff(rho_a.matrix()) < 1e-12);
        let back_b = partial_trace(&joint, &[1]).unwrap();
        assert!(back_b.matrix().max_abs_diff(rho_b.matrix()) < 1e-12);
    }

    #[test]
    fn partial_trace_of_bell_state_is_mixed() {
        let reduced = partial_trace(&bell_phi_plus(), &[0]).unwrap();
        let expect = ComplexMatrix::identity(2).scale_re(0.5);
        assert!(reduced.matrix().max_abs_diff(&expect) < 1e-14);
    }

    #[test]
    fn partial_trace_preserves_trace_and_positivity() {
        let mut rng = crate::random::rng(43);
        for _ in 0..1000 {
            let rho = crate::random::density(&mut rng, &[2, 2]);
            let reduced = partial_trace(&rho, &[1]).unwrap();
            assert!((reduced.matrix().trace().re - 1.0).abs() < 1e-12);
            assert!(eigh(reduced.matrix()).values[0] > -1e-12);
        }
    }

    #[test]
    fn partial_trace_rejects_bad_selection() {
        let rho = DensityMatrix::maximally_mixed(&[2, 2]);
        assert!(partial_trace(&rho, &[]).is_err());
        assert!(partial_trace(&rho, &[2]).is_err());
    }

    #[test]
    fn partial_transpose_is_involution() {
        let mut rng = crate::random::rng(47);
        for _ in 0..50 {
            let rho = crate::random::density(&mut rng, &[2, 2]);
            for subsystem in 0..2 {
                let once = partial_transpose(&rho, subsystem).unwrap();
                let twice = partial_transpose_raw(&once, (2, 2), subsystem);
                assert!(twice.max_abs_diff(rho.matrix()) < 1e-14);
            }
        }
    }

    #[test]
    fn partial_transpose_of_product_state_is_positive() {
        let mut rng = crate::random::rng(53);
        for _ in 0..100 {
            let rho = crate::random::density(&mut rng, &[2])
                .tensor(&crate::random::density(&mut rng, &[2]));
            let pt = partial_transpose(&rho, 1).unwrap();
            assert!(eigh(&pt).values[0] > -1e-12);
        }
    }

    #[test]
    fn partial_transpose_of_bell_state() {
        let pt = partial_transpose(&bell_phi_plus(), 0).unwrap();
        let eigs = eigh(&pt).values;
        assert!((eigs[0] + 0.5).abs() < 1e-14);
        for e in &eigs[1..] {
            assert!((e - 0.5).abs() < 1e-14);
        }
    }

    #[test]
    fn partial_transpose_requires_bipartition() {
        let rho = DensityMatrix::maximally_mixed(&[2, 2, 2]);
        assert!(partial_transpose(&rho, 0).is_err());
    }

    #[test]
    fn trace_distance_basics() {
        let mut rng = crate::random::rng(59);
        let rho = crate::random::density(&mut rng, &[2, 2]);
        assert!(trace_distance(&rho, &rho).unwrap() < 1e-15);

        let zero = DensityMatrix::basis(&[2], 0);
        let one = DensityMatrix::basis(&[2], 1);
        assert!((trace_distance(&zero, &one).unwrap() - 1.0).abs() < 1e-14);

        let mixed = DensityMatrix::maximally_mixed(&[2]);
        assert!((trace_distance(&zero, &mixed).unwrap() - 0.5).abs() < 1e-14);
    }

    #[test]
    fn trace_distance_dimension_mismatch() {
        let a = DensityMatrix::maximally_mixed(&[2]);
        let b = DensityMatrix::maximally_mixed(&[2, 2]);
        assert!(trace_distance(&a, &b).is_err());
    }

    #[test]
    fn tensor_product_matches_kron() {
        let mut rng = crate::random::rng(61);
        let a = crate::random::density(&mut rng, &[2]);
        let b = crate::random::density(&mut rng, &[2]);
        let ab = a.tensor(&b);
        assert!(ab
            .matrix()
            .max_abs_diff(&tensor(a.matrix(), b.matrix()))
            .eq(&0.0));
        assert_eq!(ab.dims(), &[2, 2]);
        assert_eq!(
            ab.matrix().get(0, 0),
            a.matrix().get(0, 0) * b.matrix().get(0, 0)
        );
        let _ = ONE;
    }
}
