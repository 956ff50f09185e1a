//! Engineered two-qubit thermal reservoirs.
//!
//! A structureless thermal bath drives each qubit through local lowering
//! and raising jumps. Conjugating those jumps by an entangling basis
//! change produces a reservoir that thermalizes the dressed basis
//!
//!   |0~> = |00>,
//!   |1~> = (|01> - |10>)/sqrt(2)   at energy  omega0 - g,
//!   |2~> = (|01> + |10>)/sqrt(2)   at energy  omega0 + g,
//!   |3~> = |11>                    at energy  2 omega0,
//!
//! so the stationary state is a Gibbs mixture over two effective
//! two-level modes with frequencies omega0 -+ g. For g < omega0 the
//! ground state is separable and entanglement grows with temperature;
//! for g > omega0 the ground state is the entangled |1~> itself.

use num_complex::Complex64;

use crate::error::{QrError, Result};
use crate::lindblad::{build_liouvillian, DissipatorTerm, Liouvillian};
use crate::matrix::{tensor, ComplexMatrix};
use crate::pauli;
use crate::state::DensityMatrix;

/// Reservoir parameters in units with hbar = k_B = 1.
///
/// `omega0` is the bare qubit frequency and the overall energy scale,
/// `g` the dressing coupling, `gamma` the bath coupling rate and
/// `temperature` the bath temperature.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReservoirSpec {
    pub omega0: f64,
    pub g: f64,
    pub gamma: f64,
    pub temperature: f64,
}

/// The two effective reservoir modes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    /// Frequency omega0 - g; excited state |1~>.
    One,
    /// Frequency omega0 + g; excited state |2~>.
    Two,
}

impl Mode {
    pub const BOTH: [Mode; 2] = [Mode::One, Mode::Two];
}

/// Thermal quantities of one dressed mode.
///
/// `ground_weight` is the stationary ground-state probability p of the
/// mode, `rate_down`/`rate_up` the Lindblad rates of its lowering and
/// raising jumps, and `nbar` the mean bath occupation at the mode
/// frequency. `rate_down + rate_up = gamma * |2 nbar + 1|` is the total
/// relaxation rate.
#[derive(Debug, Clone, Copy)]
pub struct ThermalRates {
    pub nbar: f64,
    pub ground_weight: f64,
    pub rate_down: f64,
    pub rate_up: f64,
}

impl ThermalRates {
    pub fn relaxation_rate(&self) -> f64 {
        self.rate_down + self.rate_up
    }

    /// Damping fraction lambda(t) = 1 - exp(-(rate_down + rate_up) t).
    pub fn damping_fraction(&self, t: f64) -> f64 {
        1.0 - (-self.relaxation_rate() * t).exp()
    }
}

/// Boltzmann exponents beyond this are saturated to the exact limit.
const EXPONENT_CLAMP: f64 = 700.0;

impl ReservoirSpec {
    pub fn new(omega0: f64, g: f64, gamma: f64, temperature: f64) -> Result<Self> {
        let check = |name: &'static str, value: f64, ok: bool| {
            if ok && value.is_finite() {
                Ok(())
            } else {
                Err(QrError::ParameterOutOfRange { name, value })
            }
        };
        check("omega0", omega0, omega0 > 0.0)?;
        check("g", g, g >= 0.0)?;
        check("gamma", gamma, gamma > 0.0)?;
        if temperature.is_nan() || temperature < 0.0 {
            return Err(QrError::ParameterOutOfRange {
                name: "temperature",
                value: temperature,
            });
        }
        Ok(Self {
            omega0,
            g,
            gamma,
            temperature,
        })
    }

    /// Frequency of a dressed mode: omega0 -+ g.
    pub fn frequency(&self, mode: Mode) -> f64 {
        match mode {
            Mode::One => self.omega0 - self.g,
            Mode::Two => self.omega0 + self.g,
        }
    }

    /// Thermal occupation, ground weight and jump rates of one mode.
    ///
    /// The ground weight follows the closed form
    /// p = (exp(-omega/T) + 1)^(-1), which stays meaningful for negative
    /// mode frequencies (g > omega0, population inversion), and the total
    /// relaxation rate uses |coth(omega/2T)| so both rates stay
    /// nonnegative. At T = 0 the exact limits are taken.
    pub fn thermal_pair(&self, mode: Mode) -> ThermalRates {
        let omega = self.frequency(mode);
        let (nbar, p, coth_abs) = if self.temperature == 0.0 {
            if omega > 0.0 {
                (0.0, 1.0, 1.0)
            } else if omega < 0.0 {
                (-1.0, 0.0, 1.0)
            } else {
                (0.0, 0.5, 1.0)
            }
        } else if self.temperature.is_infinite() {
            (f64::INFINITY, 0.5, f64::INFINITY)
        } else {
            let x = omega / self.temperature;
            if x > EXPONENT_CLAMP {
                (0.0, 1.0, 1.0)
            } else if x < -EXPONENT_CLAMP {
                (-1.0, 0.0, 1.0)
            } else if x == 0.0 {
                (f64::INFINITY, 0.5, f64::INFINITY)
            } else {
                let nbar = 1.0 / (x.exp() - 1.0);
                let p = 1.0 / (1.0 + (-x).exp());
                (nbar, p, (1.0 / (0.5 * x).tanh()).abs())
            }
        };
        ThermalRates {
            nbar,
            ground_weight: p,
            rate_down: self.gamma * p * coth_abs,
            rate_up: self.gamma * (1.0 - p) * coth_abs,
        }
    }
}

/// The dressed eigenbasis and its energies.
#[derive(Debug, Clone)]
pub struct DressedBasis {
    /// Columns are |0~>, |1~>, |2~>, |3~> in the product basis.
    pub vectors: ComplexMatrix,
    pub energies: [f64; 4],
}

impl DressedBasis {
    /// Column vector of dressed state `k`.
    pub fn ket(&self, k: usize) -> ComplexMatrix {
        ComplexMatrix::from_fn(4, 1, |i, _| self.vectors.get(i, k))
    }
}

/// Dressed basis for the given frequencies.
pub fn dressed_basis(omega0: f64, g: f64) -> DressedBasis {
    let s = std::f64::consts::FRAC_1_SQRT_2;
    let vectors = ComplexMatrix::from_real(
        4,
        4,
        &[
            1.0, 0.0, 0.0, 0.0, //
            0.0, s, s, 0.0, //
            0.0, -s, s, 0.0, //
            0.0, 0.0, 0.0, 1.0,
        ],
    );
    DressedBasis {
        vectors,
        energies: [0.0, omega0 - g, omega0 + g, 2.0 * omega0],
    }
}

/// Transformed jump operators of the engineered reservoir.
///
/// Each acts as the lowering operator of exactly one dressed mode:
/// E1 lowers |1~> -> |0~> and |3~> -> |2~>, E2 the mode-two partners.
/// Both annihilate |0~>.
pub fn dressed_jump_ops() -> (ComplexMatrix, ComplexMatrix) {
    let s = std::f64::consts::FRAC_1_SQRT_2;
    let e1 = tensor(&pauli::identity2(), &pauli::sigma_minus())
        .sub(&tensor(&pauli::sigma_minus(), &pauli::sigma_z()))
        .scale_re(s);
    let e2 = tensor(&pauli::sigma_minus(), &pauli::identity2())
        .add(&tensor(&pauli::sigma_z(), &pauli::sigma_minus()))
        .scale_re(s);
    (e1, e2)
}

/// Liouvillian of the engineered finite-temperature reservoir.
///
/// Four dissipator terms: the lowering jump of each dressed mode at its
/// downward rate and the matching raising jump at its upward rate, with
/// mode frequencies omega0 -+ g assigned to the modes E1 and E2 lower.
pub fn engineered_liouvillian(spec: &ReservoirSpec) -> Result<Liouvillian> {
    let (e1, e2) = dressed_jump_ops();
    let mut terms = Vec::with_capacity(4);
    for (jump, mode) in [(e1, Mode::One), (e2, Mode::Two)] {
        let rates = spec.thermal_pair(mode);
        if !rates.rate_down.is_finite() || !rates.rate_up.is_finite() {
            return Err(QrError::ParameterOutOfRange {
                name: "mode frequency (divergent thermal rate)",
                value: spec.frequency(mode),
            });
        }
        terms.push(DissipatorTerm::new(jump.adjoint(), rates.rate_up)?);
        terms.push(DissipatorTerm::new(jump, rates.rate_down)?);
    }
    build_liouvillian(&terms, &[2, 2])
}

/// Gibbs state of the engineered reservoir in the dressed basis:
/// independent thermal weights for the two dressed modes.
pub fn gibbs_dressed(spec: &ReservoirSpec) -> DensityMatrix {
    let p1 = spec.thermal_pair(Mode::One).ground_weight;
    let p2 = spec.thermal_pair(Mode::Two).ground_weight;
    let weights = [
        p1 * p2,
        (1.0 - p1) * p2,
        p1 * (1.0 - p2),
        (1.0 - p1) * (1.0 - p2),
    ];
    gibbs_from_weights(&weights)
}

/// State diagonal in the dressed basis with the given weights.
pub fn gibbs_from_weights(weights: &[f64; 4]) -> DensityMatrix {
    let basis = dressed_basis(1.0, 0.0);
    let diag = ComplexMatrix::diag(
        &weights
            .iter()
            .map(|&q| Complex64::new(q, 0.0))
            .collect::<Vec<_>>(),
    );
    let m = diag.conjugate_by(&basis.vectors);
    DensityMatrix::new(m, &[2, 2]).expect("dressed Gibbs state is a valid state")
}

/// Populations of a two-qubit state in the dressed basis.
pub fn dressed_populations(rho: &DensityMatrix) -> [f64; 4] {
    let basis = dressed_basis(1.0, 0.0);
    let in_dressed = rho.matrix().conjugate_by(&basis.vectors.adjoint());
    [
        in_dressed.get(0, 0).re,
        in_dressed.get(1, 1).re,
        in_dressed.get(2, 2).re,
        in_dressed.get(3, 3).re,
    ]
}

/// Largest off-diagonal modulus of a state expressed in the dressed basis.
pub fn dressed_offdiagonal_max(rho: &DensityMatrix) -> f64 {
    let basis = dressed_basis(1.0, 0.0);
    let in_dressed = rho.matrix().conjugate_by(&basis.vectors.adjoint());
    let mut worst: f64 = 0.0;
    for i in 0..4 {
        for j in 0..4 {
            if i != j {
                worst = worst.max(in_dressed.get(i, j).norm());
            }
        }
    }
    worst
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lindblad::steady_state;
    use crate::matrix::eigh;
    use crate::state::trace_distance;

    fn spec(g: f64, t: f64) -> ReservoirSpec {
        ReservoirSpec::new(1.0, g, 1.0, t).unwrap()
    }

    #[test]
    fn thermal_pair_closed_form_values() {
        // omega = 1, T = 1: nbar = 1/(e-1), p = 1/(1+1/e), 2nbar+1 = coth(1/2).
        let rates = spec(0.0, 1.0).thermal_pair(Mode::One);
        assert!((rates.nbar - 0.5819767068693265).abs() < 1e-14);
        assert!((rates.ground_weight - 0.7310585786300049).abs() < 1e-14);
        let total = rates.relaxation_rate();
        assert!((total - 2.163953413738653).abs() < 1e-12);
        assert!((rates.rate_down - (rates.nbar + 1.0)).abs() < 1e-12);
        assert!((rates.rate_up - rates.nbar).abs() < 1e-12);
    }

    #[test]
    fn thermal_pair_limits() {
        // Very large T: p -> 1/2.
        let hot = spec(0.5, 1e12).thermal_pair(Mode::One);
        assert!((hot.ground_weight - 0.5).abs() < 1e-12);
        let infinite = ReservoirSpec::new(1.0, 0.5, 1.0, f64::INFINITY)
            .unwrap()
            .thermal_pair(Mode::Two);
        assert!((infinite.ground_weight - 0.5).abs() < 1e-15);

        // T = 0 with positive frequency: pure decay.
        let cold = spec(0.5, 0.0).thermal_pair(Mode::One);
        assert_eq!(cold.ground_weight, 1.0);
        assert_eq!(cold.rate_up, 0.0);
        assert_eq!(cold.rate_down, 1.0);
        assert_eq!(cold.nbar, 0.0);

        // T = 0 with negative frequency: pure pumping.
        let inverted = spec(1.5, 0.0).thermal_pair(Mode::One);
        assert_eq!(inverted.ground_weight, 0.0);
        assert_eq!(inverted.rate_down, 0.0);
        assert_eq!(inverted.rate_up, 1.0);

        // Deep exponent clamp instead of overflow.
        let clamped = spec(0.5, 1e-6).thermal_pair(Mode::Two);
        assert_eq!(clamped.ground_weight, 1.0);
    }

    #[test]
    fn negative_frequency_keeps_rates_positive() {
        let rates = spec(1.5, 1.0).thermal_pair(Mode::One);
        assert!(rates.ground_weight < 0.5);
        assert!(rates.rate_down > 0.0 && rates.rate_up > 0.0);
        assert!(rates.rate_up > rates.rate_down);
        let lambda = rates.damping_fraction(3.0);
        assert!((0.0..1.0).contains(&lambda));
    }

    #[test]
    fn ground_weight_stays_inside_unit_interval_at_finite_temperature() {
        // Exponents must stay small enough that 1 - p is representable.
        for g in [0.0, 0.5, 1.0, 1.7] {
            for t in [0.1, 0.3, 1.0, 50.0] {
                for mode in Mode::BOTH {
                    let p = spec(g, t).thermal_pair(mode).ground_weight;
                    assert!(p > 0.0 && p < 1.0, "p = {p} at g={g} T={t}");
                }
            }
        }
        // In the deep-exponent regime the exact limits take over.
        assert_eq!(spec(0.5, 1e-3).thermal_pair(Mode::Two).ground_weight, 1.0);
        assert_eq!(spec(1.8, 1e-3).thermal_pair(Mode::One).ground_weight, 0.0);
    }

    #[test]
    fn damping_fraction_grows_from_zero_to_one() {
        let rates = spec(0.5, 0.8).thermal_pair(Mode::Two);
        assert_eq!(rates.damping_fraction(0.0), 0.0);
        let mut previous = 0.0;
        for k in 1..20 {
            let lambda = rates.damping_fraction(k as f64 * 0.3);
            assert!(lambda > previous && lambda < 1.0 + 1e-15);
            previous = lambda;
        }
        assert!((rates.damping_fraction(1e4) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn engineered_evolution_preserves_state_structure() {
        let mut rng = crate::random::rng(73);
        let l = engineered_liouvillian(&spec(0.9, 0.6)).unwrap();
        let rho = crate::random::density(&mut rng, &[2, 2]);
        for t in [0.1, 0.5, 1.0, 5.0] {
            let out = crate::lindblad::evolve(&rho, &l, t).unwrap();
            assert!((out.matrix().trace().re - 1.0).abs() < 1e-12);
            assert!(out.matrix().hermiticity_defect() < 1e-12);
            assert!(eigh(out.matrix()).values[0] > -1e-10);
        }
    }

    #[test]
    fn dressed_basis_is_orthonormal_with_listed_energies() {
        let basis = dressed_basis(1.0, 0.5);
        let gram = basis.vectors.adjoint().mul(&basis.vectors);
        assert!(gram.max_abs_diff(&ComplexMatrix::identity(4)) < 1e-14);
        assert_eq!(basis.energies, [0.0, 0.5, 1.5, 2.0]);
    }

    #[test]
    fn jump_ops_lower_exactly_one_mode() {
        let (e1, e2) = dressed_jump_ops();
        let basis = dressed_basis(1.0, 0.5);
        let ket = |k: usize| basis.ket(k);

        for e in [&e1, &e2] {
            assert!(e.mul(&ket(0)).max_abs() < 1e-15);
            assert!(e.mul(e).max_abs() < 1e-15, "jump operators are nilpotent");
        }
        // E1: |1~> -> |0~>, |3~> -> |2~>, annihilates |2~>.
        assert!(e1.mul(&ket(1)).max_abs_diff(&ket(0)) < 1e-15);
        assert!(e1.mul(&ket(3)).max_abs_diff(&ket(2)) < 1e-15);
        assert!(e1.mul(&ket(2)).max_abs() < 1e-15);
        // E2: |2~> -> |0~>, |3~> -> |1~>, annihilates |1~>.
        assert!(e2.mul(&ket(2)).max_abs_diff(&ket(0)) < 1e-15);
        assert!(e2.mul(&ket(3)).max_abs_diff(&ket(1)) < 1e-15);
        assert!(e2.mul(&ket(1)).max_abs() < 1e-15);
    }

    #[test]
    fn gibbs_dressed_limits() {
        let cold = gibbs_dressed(&spec(0.5, 1e-9));
        let ground = DensityMatrix::basis(&[2, 2], 0);
        assert!(trace_distance(&cold, &ground).unwrap() < 1e-12);

        let hot = gibbs_dressed(&spec(0.5, 1e9));
        assert!(trace_distance(&hot, &DensityMatrix::maximally_mixed(&[2, 2])).unwrap() < 1e-9);
    }

    #[test]
    fn gibbs_dressed_closed_form_populations() {
        let rho = gibbs_dressed(&spec(0.5, 1.0));
        let q = dressed_populations(&rho);
        let expect = [0.5089, 0.3087, 0.1136, 0.0689];
        for (got, want) in q.iter().zip(expect) {
            assert!((got - want).abs() < 5e-5, "{got} vs {want}");
        }
        assert!((q.iter().sum::<f64>() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn engineered_steady_state_is_cold_ground_state() {
        let l = engineered_liouvillian(&spec(0.5, 0.0)).unwrap();
        let steady = steady_state(&l).unwrap();
        let ground = DensityMatrix::basis(&[2, 2], 0);
        assert!(trace_distance(&steady, &ground).unwrap() < 1e-10);
    }

    #[test]
    fn engineered_steady_state_is_maximally_mixed_when_hot() {
        let l = engineered_liouvillian(&spec(0.5, 1e6)).unwrap();
        let steady = steady_state(&l).unwrap();
        let mixed = DensityMatrix::maximally_mixed(&[2, 2]);
        assert!(trace_distance(&steady, &mixed).unwrap() < 1e-5);
    }

    #[test]
    fn engineered_steady_state_matches_gibbs_and_is_dressed_diagonal() {
        for (g, t) in [(0.3, 0.4), (0.5, 1.0), (0.9, 0.3), (1.5, 0.7), (2.0, 2.0)] {
            let sp = spec(g, t);
            let l = engineered_liouvillian(&sp).unwrap();
            let steady = steady_state(&l).unwrap();
            assert!(trace_distance(&steady, &gibbs_dressed(&sp)).unwrap() < 1e-10);
            assert!(dressed_offdiagonal_max(&steady) < 1e-10);
        }
    }

    #[test]
    fn engineered_liouvillian_rejects_divergent_mode() {
        // g = omega0 puts mode one at zero frequency; at T > 0 its total
        // relaxation rate diverges.
        assert!(matches!(
            engineered_liouvillian(&spec(1.0, 1.0)),
            Err(QrError::ParameterOutOfRange { .. })
        ));
    }

    #[test]
    fn unitary_conjugation_covariance_of_steady_state() {
        // Building the generator from conjugated jumps conjugates the
        // stationary state.
        let sp = spec(0.6, 0.8);
        let mut rng = crate::random::rng(71);
        let u = crate::random::unitary(&mut rng, 4);
        let (e1, e2) = dressed_jump_ops();
        let mut plain = Vec::new();
        let mut conjugated = Vec::new();
        for (e, mode) in [(e1, Mode::One), (e2, Mode::Two)] {
            let r = sp.thermal_pair(mode);
            plain.push(DissipatorTerm::new(e.adjoint(), r.rate_up).unwrap());
            conjugated.push(DissipatorTerm::new(e.adjoint().conjugate_by(&u), r.rate_up).unwrap());
            plain.push(DissipatorTerm::new(e.clone(), r.rate_down).unwrap());
            conjugated.push(DissipatorTerm::new(e.conjugate_by(&u), r.rate_down).unwrap());
        }
        let steady_plain = steady_state(&build_liouvillian(&plain, &[2, 2]).unwrap()).unwrap();
        let steady_conj = steady_state(&build_liouvillian(&conjugated, &[2, 2]).unwrap()).unwrap();
        let expect = steady_plain.matrix().conjugate_by(&u);
        assert!(steady_conj.matrix().max_abs_diff(&expect) < 1e-10);
    }

    #[test]
    fn spectrum_of_gibbs_state_is_the_weight_list() {
        let sp = spec(0.9, 0.3);
        let rho = gibbs_dressed(&sp);
        let mut weights = dressed_populations(&rho).to_vec();
        weights.sort_by(|a, b| a.partial_cmp(b).unwrap());
        let eigs = eigh(rho.matrix()).values;
        for (e, w) in eigs.iter().zip(&weights) {
            assert!((e - w).abs() < 1e-12);
        }
    }
}
