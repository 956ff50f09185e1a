//! Kraus channels, Choi matrices and the finite-temperature damping
//! channel.
//!
//! Channel equality is always decided on Choi matrices; Kraus lists are
//! only one representative of a map.

use num_complex::Complex64;

use crate::error::{QrError, Result};
use crate::lindblad::Liouvillian;
use crate::matrix::{eigh, matexp, ComplexMatrix};
use crate::pauli;
use crate::state::DensityMatrix;

const COMPLETENESS_TOL: f64 = 1e-12;
const CHOI_POSITIVITY_TOL: f64 = 1e-10;

/// Completely positive trace-preserving map as a list of Kraus operators.
#[derive(Debug, Clone)]
pub struct QuantumChannel {
    kraus: Vec<ComplexMatrix>,
}

impl QuantumChannel {
    /// Validate completeness (sum M†M = I) and complete positivity.
    pub fn new(kraus: Vec<ComplexMatrix>) -> Result<Self> {
        if kraus.is_empty() {
            return Err(QrError::EmptyKrausList);
        }
        let d_in = kraus[0].cols();
        let d_out = kraus[0].rows();
        for m in &kraus {
            if m.cols() != d_in || m.rows() != d_out {
                return Err(QrError::DimensionMismatch {
                    expected: d_in,
                    found: m.cols(),
                });
            }
            if !m.all_finite() {
                return Err(QrError::NonFinite);
            }
        }
        let mut sum = ComplexMatrix::zeros(d_in, d_in);
        for m in &kraus {
            sum = sum.add(&m.adjoint().mul(m));
        }
        let deviation = sum.max_abs_diff(&ComplexMatrix::identity(d_in));
        if deviation > COMPLETENESS_TOL {
            return Err(QrError::KrausIncomplete { deviation });
        }
        let channel = Self { kraus };
        let min_eig = eigh(&channel.choi()).values[0];
        if min_eig < -CHOI_POSITIVITY_TOL {
            return Err(QrError::NotCompletelyPositive {
                min_eigenvalue: min_eig,
            });
        }
        Ok(channel)
    }

    /// The identity channel on dimension `d`.
    pub fn identity(d: usize) -> Self {
        Self {
            kraus: vec![ComplexMatrix::identity(d)],
        }
    }

    pub fn kraus(&self) -> &[ComplexMatrix] {
        &self.kraus
    }

    pub fn input_dim(&self) -> usize {
        self.kraus[0].cols()
    }

    pub fn output_dim(&self) -> usize {
        self.kraus[0].rows()
    }

    /// Apply the map to a raw operator.
    pub fn apply_raw(&self, op: &ComplexMatrix) -> ComplexMatrix {
        let mut out = ComplexMatrix::zeros(self.output_dim(), self.output_dim());
        for m in &self.kraus {
            out = out.add(&m.mul(op).mul(&m.adjoint()));
        }
        out
    }

    /// Choi matrix sum_{kl} |k><l| (x) E(|k><l|); trace d for a
    /// trace-preserving map, positive semidefinite for a CP map.
    pub fn choi(&self) -> ComplexMatrix {
        let d_in = self.input_dim();
        let d_out = self.output_dim();
        let n = d_in * d_out;
        let mut choi = ComplexMatrix::zeros(n, n);
        for m in &self.kraus {
            // |v> with v[(k, i)] = M[i, k] satisfies C = sum |v><v|.
            let mut v = vec![Complex64::new(0.0, 0.0); n];
            for k in 0..d_in {
                for i in 0..d_out {
                    v[k * d_out + i] = m.get(i, k);
                }
            }
            for a in 0..n {
                for b in 0..n {
                    let add = v[a] * v[b].conj();
                    choi.set(a, b, choi.get(a, b) + add);
                }
            }
        }
        choi
    }
}

/// Apply a channel to a state.
pub fn apply_channel(channel: &QuantumChannel, rho: &DensityMatrix) -> Result<DensityMatrix> {
    if channel.input_dim() != rho.dim() {
        return Err(QrError::DimensionMismatch {
            expected: channel.input_dim(),
            found: rho.dim(),
        });
    }
    let out = channel.apply_raw(rho.matrix());
    if channel.output_dim() == rho.dim() {
        DensityMatrix::new(out, rho.dims())
    } else {
        DensityMatrix::new(out, &[channel.output_dim()])
    }
}

/// Choi matrix of a channel; see [`QuantumChannel::choi`].
pub fn choi_matrix(channel: &QuantumChannel) -> ComplexMatrix {
    channel.choi()
}

/// Choi matrix of an arbitrary linear map given as a closure on raw
/// operators. Used to fingerprint maps extracted from circuit fragments.
pub fn choi_of_map(d_in: usize, map: impl Fn(&ComplexMatrix) -> ComplexMatrix) -> ComplexMatrix {
    let probe = map(&ComplexMatrix::zeros(d_in, d_in));
    let d_out = probe.rows();
    let n = d_in * d_out;
    let mut choi = ComplexMatrix::zeros(n, n);
    for k in 0..d_in {
        for l in 0..d_in {
            let mut unit = ComplexMatrix::zeros(d_in, d_in);
            unit.set(k, l, Complex64::new(1.0, 0.0));
            let image = map(&unit);
            for i in 0..d_out {
                for j in 0..d_out {
                    choi.set(k * d_out + i, l * d_out + j, image.get(i, j));
                }
            }
        }
    }
    choi
}

/// Frobenius distance between the Choi matrices of two channels; zero
/// exactly when the channels are the same map.
pub fn channel_distance(a: &QuantumChannel, b: &QuantumChannel) -> Result<f64> {
    if a.input_dim() != b.input_dim() || a.output_dim() != b.output_dim() {
        return Err(QrError::DimensionMismatch {
            expected: a.input_dim(),
            found: b.input_dim(),
        });
    }
    Ok(a.choi().sub(&b.choi()).frobenius_norm())
}

/// Ground-state weight and damping fraction of the thermal damping
/// channel.
#[derive(Debug, Clone, Copy)]
pub struct ThermalChannelParams {
    pub p: f64,
    pub lam: f64,
}

impl ThermalChannelParams {
    pub fn new(p: f64, lam: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&p) || !p.is_finite() {
            return Err(QrError::ParameterOutOfRange {
                name: "p",
                value: p,
            });
        }
        if !(0.0..=1.0).contains(&lam) || !lam.is_finite() {
            return Err(QrError::ParameterOutOfRange {
                name: "lam",
                value: lam,
            });
        }
        Ok(Self { p, lam })
    }
}

/// Generalized amplitude damping channel.
///
/// Four Kraus operators: no-jump evolution in the ground and excited
/// sectors plus a decay jump (weight p) and an excitation jump
/// (weight 1 - p). lam = 0 is the identity, lam = 1 maps every input to
/// diag(p, 1 - p).
pub fn gad_kraus(params: ThermalChannelParams) -> Result<QuantumChannel> {
    let ThermalChannelParams { p, lam } = params;
    let sp = p.sqrt();
    let sq = (1.0 - p).sqrt();
    let sl = lam.sqrt();
    let sml = (1.0 - lam).sqrt();
    let m1 = ComplexMatrix::from_real(2, 2, &[1.0, 0.0, 0.0, sml]).scale_re(sp);
    let m2 = pauli::sigma_minus().scale_re(sp * sl);
    let m3 = ComplexMatrix::from_real(2, 2, &[sml, 0.0, 0.0, 1.0]).scale_re(sq);
    let m4 = pauli::sigma_plus().scale_re(sq * sl);
    QuantumChannel::new(vec![m1, m2, m3, m4])
}

/// Kraus decomposition from the eigendecomposition of a Choi matrix.
///
/// Negative eigenvalues above -1e-10 are treated as numerical noise and
/// clipped; anything lower reports a non-CP map.
pub fn channel_from_choi(choi: &ComplexMatrix, d_in: usize) -> Result<QuantumChannel> {
    let n = choi.dim();
    let d_out = n / d_in;
    let decomposition = eigh(choi);
    let min_eig = decomposition.values[0];
    if min_eig < -CHOI_POSITIVITY_TOL {
        return Err(QrError::NotCompletelyPositive {
            min_eigenvalue: min_eig,
        });
    }
    let mut kraus = Vec::new();
    for (idx, &value) in decomposition.values.iter().enumerate() {
        if value <= 1e-15 {
            continue;
        }
        let scale = value.sqrt();
        let mut m = ComplexMatrix::zeros(d_out, d_in);
        for k in 0..d_in {
            for i in 0..d_out {
                m.set(i, k, decomposition.vectors.get(k * d_out + i, idx) * scale);
            }
        }
        kraus.push(m);
    }
    QuantumChannel::new(kraus)
}

/// The channel exp(L t) as a Kraus decomposition.
pub fn lindblad_to_channel(liouvillian: &Liouvillian, t: f64) -> Result<QuantumChannel> {
    if !(t.is_finite() && t >= 0.0) {
        return Err(QrError::ParameterOutOfRange {
            name: "t",
            value: t,
        });
    }
    let d = liouvillian.dim();
    let propagator = matexp(&liouvillian.matrix().scale_re(t))?;
    let choi = choi_of_map(d, |op| {
        let v = propagator.apply(&op.vectorize());
        ComplexMatrix::unvectorize(&v, d)
    });
    channel_from_choi(&choi, d)
}
