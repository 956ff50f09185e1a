//! Runtime verification suite.
//!
//! Re-derives the central equivalences of the simulator from scratch
//! (channel/Lindblad/circuit agreement, protocol-versus-generator
//! evolution, stationary states against the closed-form Gibbs weights)
//! and reports the worst deviation per check. The CLI `verify` command
//! runs this so the claims can be reproduced from a release binary.

use rand::Rng;

use crate::channel::{channel_distance, gad_kraus, lindblad_to_channel, ThermalChannelParams};
use crate::error::Result;
use crate::lindblad::{build_liouvillian, evolve, steady_state, DissipatorTerm};
use crate::matrix::eigh;
use crate::pauli;
use crate::protocol::{run_protocol, stage_channel, ProtocolConfig};
use crate::reservoir::{
    dressed_offdiagonal_max, engineered_liouvillian, gibbs_dressed, Mode, ReservoirSpec,
};
use crate::state::trace_distance;

/// Outcome of one verification check.
#[derive(Debug, Clone)]
pub struct CheckReport {
    pub name: &'static str,
    pub max_deviation: f64,
    pub tolerance: f64,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.max_deviation <= self.tolerance
    }
}

fn tol(default: f64, tol_override: Option<f64>) -> f64 {
    tol_override.unwrap_or(default)
}

/// Triangle equality between the damping channel, the exponentiated
/// thermal generator and the circuit-extracted stage channel.
pub fn check_channel_triangle(tol_override: Option<f64>) -> Result<CheckReport> {
    let mut worst: f64 = 0.0;
    for temperature in [0.0, 0.5, 1.0, 2.0] {
        let spec = ReservoirSpec::new(1.0, 0.0, 1.0, temperature)?;
        let rates = spec.thermal_pair(Mode::One);
        let liouvillian = build_liouvillian(
            &[
                DissipatorTerm::new(pauli::sigma_minus(), rates.rate_down)?,
                DissipatorTerm::new(pauli::sigma_plus(), rates.rate_up)?,
            ],
            &[2],
        )?;
        for t in [0.2, 1.0, 5.0] {
            let params = ThermalChannelParams::new(rates.ground_weight, rates.damping_fraction(t))?;
            let analytic = gad_kraus(params)?;
            let exponentiated = lindblad_to_channel(&liouvillian, t)?;
            let circuit = stage_channel(params.p, params.lam)?;
            worst = worst
                .max(channel_distance(&analytic, &exponentiated)?)
                .max(channel_distance(&analytic, &circuit)?)
                .max(channel_distance(&exponentiated, &circuit)?);
        }
    }
    Ok(CheckReport {
        name: "channel triangle (damping / generator / circuit)",
        max_deviation: worst,
        tolerance: tol(1e-10, tol_override),
    })
}

/// Protocol output against Lindblad evolution over a parameter grid with
/// random initial states.
pub fn check_protocol_vs_lindblad(tol_override: Option<f64>) -> Result<CheckReport> {
    let mut rng = crate::random::rng(0x7e501);
    let mut worst: f64 = 0.0;
    for &t in &[0.1, 0.5, 1.0, 2.0, 5.0] {
        for &temperature in &[0.0, 0.5, 1.0, 2.0] {
            for &g in &[0.3, 0.9, 1.5] {
                let spec = ReservoirSpec::new(1.0, g, 1.0, temperature)?;
                let liouvillian = engineered_liouvillian(&spec)?;
                let cfg = ProtocolConfig::new(spec, t)?;
                for _ in 0..5 {
                    let rho = crate::random::density(&mut rng, &[2, 2]);
                    let via_protocol = run_protocol(&rho, &cfg)?;
                    let via_lindblad = evolve(&rho, &liouvillian, t)?;
                    worst = worst.max(trace_distance(&via_protocol, &via_lindblad)?);
                }
            }
        }
    }
    Ok(CheckReport {
        name: "protocol vs engineered Lindblad evolution",
        max_deviation: worst,
        tolerance: tol(1e-8, tol_override),
    })
}

/// Stationary state of the engineered generator against the dressed
/// Gibbs closed form, including dressed-basis diagonality.
pub fn check_steady_state_vs_gibbs(tol_override: Option<f64>) -> Result<CheckReport> {
    let mut worst: f64 = 0.0;
    for i in 0..5 {
        let temperature = [0.0, 0.5, 1.0, 1.5, 2.0][i];
        for j in 0..5 {
            let g = [0.2, 0.5, 0.8, 1.2, 1.6][j];
            let spec = ReservoirSpec::new(1.0, g, 1.0, temperature)?;
            let steady = steady_state(&engineered_liouvillian(&spec)?)?;
            worst = worst
                .max(trace_distance(&steady, &gibbs_dressed(&spec))?)
                .max(dressed_offdiagonal_max(&steady));
        }
    }
    Ok(CheckReport {
        name: "steady state vs dressed Gibbs (5x5 grid)",
        max_deviation: worst,
        tolerance: tol(1e-10, tol_override),
    })
}

/// Order independence of the two reservoir stages.
pub fn check_stage_commutation(tol_override: Option<f64>) -> Result<CheckReport> {
    use crate::matrix::ComplexMatrix;
    use crate::protocol::{basis_change_unitary, mode_site_wiring};

    let mut rng = crate::random::rng(0x57a9e);
    let spec = ReservoirSpec::new(1.0, 0.7, 1.0, 1.1)?;
    let cfg = ProtocolConfig::new(spec, 0.8)?;
    let v = basis_change_unitary();
    let wiring = mode_site_wiring()?;
    let mut worst: f64 = 0.0;
    for _ in 0..10 {
        let rho = crate::random::density(&mut rng, &[2, 2]);
        let staged = |order: [usize; 2]| -> Result<ComplexMatrix> {
            let mut inner = rho.matrix().conjugate_by(&v.matrix);
            for slot in order {
                let mode = Mode::BOTH[slot];
                let p = cfg.ground_weight(mode);
                let lam = cfg.damping_fraction(mode);
                let ancilla = ComplexMatrix::from_real(2, 2, &[p, 0.0, 0.0, 1.0 - p]);
                inner =
                    crate::protocol::reservoir_stage_raw(&inner, 2, wiring[slot], &ancilla, lam)?;
            }
            Ok(inner.conjugate_by(&v.matrix.adjoint()))
        };
        worst = worst.max(staged([0, 1])?.max_abs_diff(&staged([1, 0])?));
    }
    Ok(CheckReport {
        name: "reservoir stage order independence",
        max_deviation: worst,
        tolerance: tol(1e-12, tol_override),
    })
}

/// CPTP sanity over random channel parameters and evolutions: Kraus
/// completeness plus trace and Hermiticity preservation (first report)
/// and positivity floors of Choi matrices and evolved states (second).
pub fn check_cptp_suite(tol_override: Option<f64>) -> Result<[CheckReport; 2]> {
    let mut rng = crate::random::rng(0xc97b);
    let spec = ReservoirSpec::new(1.0, 0.5, 1.0, 1.0)?;
    let liouvillian = engineered_liouvillian(&spec)?;
    let identity = crate::matrix::ComplexMatrix::identity(2);
    let mut worst_preservation: f64 = 0.0;
    let mut worst_negativity: f64 = 0.0;
    for _ in 0..1000 {
        let p: f64 = rng.gen_range(0.0..=1.0);
        let lam: f64 = rng.gen_range(0.0..=1.0);
        let channel = gad_kraus(ThermalChannelParams::new(p, lam)?)?;
        let mut completeness = crate::matrix::ComplexMatrix::zeros(2, 2);
        for m in channel.kraus() {
            completeness = completeness.add(&m.adjoint().mul(m));
        }
        worst_preservation = worst_preservation.max(completeness.max_abs_diff(&identity));
        worst_negativity = worst_negativity.max((-eigh(&channel.choi()).values[0]).max(0.0));

        let rho = crate::random::density(&mut rng, &[2, 2]);
        let t: f64 = rng.gen_range(0.0..2.0);
        let evolved = evolve(&rho, &liouvillian, t)?;
        worst_preservation = worst_preservation
            .max((evolved.matrix().trace().re - 1.0).abs())
            .max(evolved.matrix().hermiticity_defect());
        worst_negativity = worst_negativity.max((-eigh(evolved.matrix()).values[0]).max(0.0));
    }
    Ok([
        CheckReport {
            name: "CPTP completeness and preservation (1000 draws)",
            max_deviation: worst_preservation,
            tolerance: tol(1e-12, tol_override),
        },
        CheckReport {
            name: "CPTP positivity floor (1000 draws)",
            max_deviation: worst_negativity,
            tolerance: tol(1e-10, tol_override),
        },
    ])
}

/// Run every check.
pub fn run_all(tol_override: Option<f64>) -> Result<Vec<CheckReport>> {
    let mut reports = vec![
        check_channel_triangle(tol_override)?,
        check_protocol_vs_lindblad(tol_override)?,
        check_steady_state_vs_gibbs(tol_override)?,
        check_stage_commutation(tol_override)?,
    ];
    reports.extend(check_cptp_suite(tol_override)?);
    Ok(reports)
}
