//! Simulation and verification toolkit for finite-temperature engineered
//! reservoirs on two-qubit systems.
//!
//! The crate builds the Lindblad generator of an engineered thermal
//! reservoir whose jump operators act on entangled dressed modes, solves
//! for time evolution and stationary states, provides the matching
//! Kraus-channel picture of thermal damping, emulates the gate-level
//! ancilla protocol that realizes the same dynamics, and maps thermal
//! entanglement (negativity and a collective-spin variance witness)
//! across temperature and coupling.
//!
//! ```
//! use qreservoir::{
//!     engineered_liouvillian, evolve, gibbs_dressed, negativity, run_protocol,
//!     steady_state, trace_distance, DensityMatrix, ProtocolConfig, ReservoirSpec,
//! };
//!
//! // A warm reservoir just below the coupling transition.
//! let spec = ReservoirSpec::new(1.0, 0.9, 1.0, 0.3)?;
//!
//! // Its stationary state is the dressed-basis Gibbs state and is entangled.
//! let steady = steady_state(&engineered_liouvillian(&spec)?)?;
//! assert!(trace_distance(&steady, &gibbs_dressed(&spec))? < 1e-10);
//! assert!(negativity(&steady)? > 0.06);
//!
//! // One gate-level protocol cycle reproduces the Lindblad evolution.
//! let rho0 = DensityMatrix::basis(&[2, 2], 0);
//! let cycle = run_protocol(&rho0, &ProtocolConfig::new(spec, 1.5)?)?;
//! let reference = evolve(&rho0, &engineered_liouvillian(&spec)?, 1.5)?;
//! assert!(trace_distance(&cycle, &reference)? < 1e-10);
//! # Ok::<(), qreservoir::QrError>(())
//! ```

pub mod channel;
pub mod cli;
pub mod error;
pub mod lindblad;
pub mod matrix;
pub mod metrics;
pub mod pauli;
pub mod protocol;
pub mod random;
pub mod reservoir;
pub mod state;
pub mod verify;

pub use channel::{
    apply_channel, channel_distance, choi_matrix, gad_kraus, lindblad_to_channel, QuantumChannel,
    ThermalChannelParams,
};
pub use error::{QrError, Result};
pub use lindblad::{build_liouvillian, evolve, steady_state, DissipatorTerm, Liouvillian};
pub use matrix::{embed_op, matexp, tensor, ComplexMatrix};
pub use metrics::{negativity, sweep_phase_diagram, witness_w, SweepGrid, SweepRow};
pub use protocol::{
    ancilla_reset_trace, basis_change_unitary, partial_swap, reservoir_stage, run_protocol,
    sm_gate, GateUnitary, ProtocolConfig,
};
pub use reservoir::{
    dressed_basis, dressed_jump_ops, dressed_populations, engineered_liouvillian, gibbs_dressed,
    DressedBasis, Mode, ReservoirSpec,
};
pub use state::{
    partial_trace, partial_transpose, trace_distance, validate_density, DensityMatrix,
};

#[cfg(test)]
mod thread_safety {
    use super::*;

    fn assert_shareable<T: Send + Sync>() {}

    #[test]
    fn core_types_are_send_and_sync() {
        assert_shareable::<ComplexMatrix>();
        assert_shareable::<DensityMatrix>();
        assert_shareable::<Liouvillian>();
        assert_shareable::<QuantumChannel>();
        assert_shareable::<ReservoirSpec>();
        assert_shareable::<GateUnitary>();
        assert_shareable::<SweepRow>();
    }

    #[test]
    fn concurrent_evaluation_matches_sequential() {
        let grid = SweepGrid::new(0.0, 2.0, 4, 0.0, 2.0, 4).unwrap();
        let base = ReservoirSpec::new(1.0, 0.0, 1.0, 0.0).unwrap();
        let sequential = sweep_phase_diagram(&grid, &base).unwrap();
        let handles: Vec<_> = (0..4)
            .map(|_| {
                std::thread::spawn(move || {
                    let grid = SweepGrid::new(0.0, 2.0, 4, 0.0, 2.0, 4).unwrap();
                    let base = ReservoirSpec::new(1.0, 0.0, 1.0, 0.0).unwrap();
                    sweep_phase_diagram(&grid, &base).unwrap()
                })
            })
            .collect();
        for handle in handles {
            let rows = handle.join().unwrap();
            assert_eq!(rows.len(), sequential.len());
            for (a, b) in rows.iter().zip(&sequential) {
                assert_eq!(a.negativity, b.negativity);
                assert_eq!(a.witness, b.witness);
            }
        }
    }
}
