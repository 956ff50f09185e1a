//! Lindblad dynamics in superoperator form.
//!
//! A set of dissipator terms (jump operator + rate) is compiled into a
//! d^2 x d^2 Liouvillian acting on row-major vectorized density matrices:
//!
//!   L = sum_k r_k [ c_k (x) c_k* - 1/2 (c_k† c_k (x) I) - 1/2 (I (x) (c_k† c_k)^T) ]
//!
//! States evolve as rho(t) = unvec(exp(L t) vec(rho)). The stationary
//! state is obtained from the null space of L rather than by long-time
//! integration.

use num_complex::Complex64;

use crate::error::{QrError, Result};
use crate::matrix::{eigh, lu_solve, matexp, tensor, ComplexMatrix};
use crate::state::DensityMatrix;

/// One dissipator channel: jump operator on the full system plus a
/// nonnegative rate in units of inverse time.
#[derive(Debug, Clone)]
pub struct DissipatorTerm {
    pub jump: ComplexMatrix,
    pub rate: f64,
}

impl DissipatorTerm {
    pub fn new(jump: ComplexMatrix, rate: f64) -> Result<Self> {
        if !(rate.is_finite() && rate >= 0.0) {
            return Err(QrError::ParameterOutOfRange {
                name: "rate",
                value: rate,
            });
        }
        if !jump.is_square() {
            return Err(QrError::NotSquare {
                rows: jump.rows(),
                cols: jump.cols(),
            });
        }
        if !jump.all_finite() {
            return Err(QrError::NonFinite);
        }
        Ok(Self { jump, rate })
    }
}

/// Generator of a Lindblad semigroup as a dense superoperator.
#[derive(Debug, Clone)]
pub struct Liouvillian {
    dims: Vec<usize>,
    matrix: ComplexMatrix,
}

impl Liouvillian {
    /// System dimension d (the superoperator is d^2 x d^2).
    pub fn dim(&self) -> usize {
        self.dims.iter().product()
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    /// Apply the generator to a raw density-matrix-shaped operator.
    pub fn apply_to(&self, op: &ComplexMatrix) -> ComplexMatrix {
        let v = self.matrix.apply(&op.vectorize());
        ComplexMatrix::unvectorize(&v, self.dim())
    }
}

/// Assemble the Liouvillian for a list of dissipator terms over
/// subsystems `dims`.
pub fn build_liouvillian(terms: &[DissipatorTerm], dims: &[usize]) -> Result<Liouvillian> {
    let dim: usize = dims.iter().product();
    let identity = ComplexMatrix::identity(dim);
    let mut matrix = ComplexMatrix::zeros(dim * dim, dim * dim);
    for term in terms {
        if term.jump.dim() != dim {
            return Err(QrError::DimensionMismatch {
                expected: dim,
                found: term.jump.dim(),
            });
        }
        let c = &term.jump;
        let cdc = c.adjoint().mul(c);
        let part = tensor(c, &c.conj())
            .sub(&tensor(&cdc, &identity).scale_re(0.5))
            .sub(&tensor(&identity, &cdc.transpose()).scale_re(0.5));
        matrix = matrix.add(&part.scale_re(term.rate));
    }
    Ok(Liouvillian {
        dims: dims.to_vec(),
        matrix,
    })
}

/// Propagate a state for time `t >= 0`.
pub fn evolve(rho0: &DensityMatrix, liouvillian: &Liouvillian, t: f64) -> Result<DensityMatrix> {
    if rho0.dim() != liouvillian.dim() {
        return Err(QrError::DimensionMismatch {
            expected: liouvillian.dim(),
            found: rho0.dim(),
        });
    }
    if !(t.is_finite() && t >= 0.0) {
        return Err(QrError::ParameterOutOfRange {
            name: "t",
            value: t,
        });
    }
    let propagator = matexp(&liouvillian.matrix().scale_re(t))?;
    let v = propagator.apply(&rho0.matrix().vectorize());
    let out = ComplexMatrix::unvectorize(&v, rho0.dim());
    DensityMatrix::new(out, rho0.dims())
}

/// Residual tolerance for an accepted stationary state.
const STEADY_RESIDUAL_TOL: f64 = 1e-10;

/// Stationary state from the null space of the Liouvillian.
///
/// The null direction is located through the smallest eigenpair of L†L
/// and sharpened by shifted inverse iteration; a degenerate stationary
/// subspace is reported instead of being silently resolved.
pub fn steady_state(liouvillian: &Liouvillian) -> Result<DensityMatrix> {
    let l = liouvillian.matrix();
    let n = l.dim();
    let dim = liouvillian.dim();

    // Work on the norm-scaled generator so the null-direction analysis
    // is insensitive to the overall rate scale.
    let scale = l.frobenius_norm().max(1.0);
    let gram = {
        let normalized = l.scale_re(1.0 / scale);
        normalized.adjoint().mul(&normalized)
    };
    let decomposition = eigh(&gram);
    let near_null = decomposition
        .values
        .iter()
        .filter(|&&v| v.abs() <= 1e-12)
        .count();
    if near_null == 0 {
        return Err(QrError::SteadyStateResidual {
            residual: decomposition.values[0].abs().sqrt() * scale,
        });
    }
    if near_null > 1 {
        return Err(QrError::DegenerateSteadyState { count: near_null });
    }

    let mut v: Vec<Complex64> = (0..n).map(|i| decomposition.vectors.get(i, 0)).collect();
    // Inverse iteration against a slightly shifted generator polishes the
    // null vector to machine precision.
    let shift = Complex64::new(1e-12 * scale, 0.0);
    let shifted = {
        let mut m = l.clone();
        for k in 0..n {
            m.set(k, k, m.get(k, k) - shift);
        }
        m
    };
    for _ in 0..3 {
        let w = lu_solve(&shifted, &v)?;
        let norm: f64 = w.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        v = w.into_iter().map(|z| z / norm).collect();
    }

    let residual: f64 = l.apply(&v).iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    if residual > STEADY_RESIDUAL_TOL * scale {
        return Err(QrError::SteadyStateResidual { residual });
    }

    let raw = ComplexMatrix::unvectorize(&v, dim);
    let trace = raw.trace();
    if trace.norm() < 1e-8 {
        return Err(QrError::TraceDeviation {
            deviation: trace.norm(),
        });
    }
    let normalized = raw.scale(Complex64::new(1.0, 0.0) / trace).hermitize();
    DensityMatrix::new(normalized, liouvillian.dims())
}
