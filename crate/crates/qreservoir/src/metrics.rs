//! Entanglement metrics and the temperature-coupling sweep.
//!
//! Negativity is the absolute sum of negative partial-transpose
//! eigenvalues; nonzero exactly when a two-qubit state is entangled.
//! The collective-spin witness sums the variances of J_x, J_y, J_z with
//! J_a = (1/2) sum_i sigma_a^(i); separable n-qubit states satisfy
//! W >= n/2, so W < n/2 certifies entanglement.

use crate::error::{QrError, Result};
use crate::matrix::{eigh, embed_op, ComplexMatrix};
use crate::pauli::{self, Axis};
use crate::reservoir::{dressed_populations, gibbs_dressed, ReservoirSpec};
use crate::state::{partial_transpose, DensityMatrix};

/// Negativity of a two-qubit state.
pub fn negativity(rho: &DensityMatrix) -> Result<f64> {
    if rho.dims() != [2, 2] {
        return Err(QrError::BadSubsystemDims {
            dims: rho.dims().to_vec(),
            dim: rho.dim(),
        });
    }
    let pt = partial_transpose(rho, 0)?;
    let negative_sum: f64 = eigh(&pt)
        .values
        .iter()
        .filter(|&&v| v < 0.0)
        .map(|v| -v)
        .sum();
    // An empty sum is IEEE -0.0; report a plain zero.
    Ok(negative_sum + 0.0)
}

/// Collective-spin variance witness W = sum_a Var(J_a) for an n-qubit
/// state. The caller compares the value against the separable threshold
/// n/2.
pub fn witness_w(rho: &DensityMatrix, n: usize) -> Result<f64> {
    if rho.dims().len() != n || rho.dims().iter().any(|&d| d != 2) {
        return Err(QrError::BadSubsystemDims {
            dims: rho.dims().to_vec(),
            dim: rho.dim(),
        });
    }
    let mut total = 0.0;
    for axis in [Axis::X, Axis::Y, Axis::Z] {
        let mut collective = ComplexMatrix::zeros(1 << n, 1 << n);
        for site in 0..n {
            collective = collective.add(&embed_op(&pauli::sigma(axis), site, n)?);
        }
        let j = collective.scale_re(0.5);
        let mean = j.mul(rho.matrix()).trace().re;
        let second = j.mul(&j).mul(rho.matrix()).trace().re;
        total += second - mean * mean;
    }
    Ok(total)
}

/// Separable-state witness threshold for `n` qubits.
pub fn witness_threshold(n: usize) -> f64 {
    n as f64 / 2.0
}

/// Rectangular inclusive (T, g) grid with uniform spacing.
#[derive(Debug, Clone, Copy)]
pub struct SweepGrid {
    pub t_min: f64,
    pub t_max: f64,
    pub g_min: f64,
    pub g_max: f64,
    pub n_t: usize,
    pub n_g: usize,
}

impl SweepGrid {
    pub fn new(
        t_min: f64,
        t_max: f64,
        n_t: usize,
        g_min: f64,
        g_max: f64,
        n_g: usize,
    ) -> Result<Self> {
        let ordered = t_min <= t_max && g_min <= g_max;
        let finite = [t_min, t_max, g_min, g_max].iter().all(|v| v.is_finite());
        let signs = t_min >= 0.0 && g_min >= 0.0;
        if !(ordered && finite && signs) {
            return Err(QrError::ParameterOutOfRange {
                name: "grid bounds",
                value: t_min,
            });
        }
        if n_t == 0 || n_g == 0 {
            return Err(QrError::ParameterOutOfRange {
                name: "grid count",
                value: 0.0,
            });
        }
        Ok(Self {
            t_min,
            t_max,
            g_min,
            g_max,
            n_t,
            n_g,
        })
    }

    pub fn temperature(&self, i: usize) -> f64 {
        axis_value(self.t_min, self.t_max, self.n_t, i)
    }

    pub fn coupling(&self, j: usize) -> f64 {
        axis_value(self.g_min, self.g_max, self.n_g, j)
    }
}

fn axis_value(min: f64, max: f64, count: usize, index: usize) -> f64 {
    if count == 1 {
        min
    } else {
        min + (max - min) * index as f64 / (count - 1) as f64
    }
}

/// One phase-diagram record.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub temperature: f64,
    pub g: f64,
    pub populations: [f64; 4],
    pub negativity: f64,
    pub witness: f64,
    pub witness_violated: bool,
}

/// Evaluate the thermal phase diagram over a grid, one row per point in
/// row-major order (temperature outer, coupling inner).
pub fn sweep_phase_diagram(grid: &SweepGrid, base: &ReservoirSpec) -> Result<Vec<SweepRow>> {
    let mut rows = Vec::with_capacity(grid.n_t * grid.n_g);
    for i in 0..grid.n_t {
        let temperature = grid.temperature(i);
        for j in 0..grid.n_g {
            let g = grid.coupling(j);
            let spec = ReservoirSpec::new(base.omega0, g, base.gamma, temperature)?;
            let rho = gibbs_dressed(&spec);
            let populations = dressed_populations(&rho);
            let neg = negativity(&rho)?;
            let wit = witness_w(&rho, 2)?;
            rows.push(SweepRow {
                temperature,
                g,
                populations,
                negativity: neg,
                witness: wit,
                witness_violated: wit < witness_threshold(2),
            });
        }
    }
    Ok(rows)
}
