//! C ABI for the qreservoir simulator.
//!
//! The surface is handle based: `qr_reservoir_new` allocates an opaque
//! reservoir description, the query functions write plain doubles into
//! caller-provided buffers, and every call reports a [`QrStatus`].
//! Pointers returned by constructors must be released with the matching
//! `_free` function; all other pointers are borrowed for the call.
//!
//! The generated header lives at `include/qreservoir.h`.

use std::ffi::{c_char, c_double, c_int, CStr};

use qreservoir::lindblad::{evolve, steady_state};
use qreservoir::metrics::{negativity, sweep_phase_diagram, witness_w, SweepGrid};
use qreservoir::protocol::{run_protocol, ProtocolConfig};
use qreservoir::reservoir::{
    dressed_populations, engineered_liouvillian, gibbs_dressed, ReservoirSpec,
};
use qreservoir::state::{trace_distance, DensityMatrix};

/// Status codes returned by every FFI call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QrStatus {
    /// Success.
    Ok = 0,
    /// A pointer argument was null.
    NullPointer = 1,
    /// A numeric argument was out of range.
    InvalidArgument = 2,
    /// An internal computation failed validation.
    NumericalFailure = 3,
    /// Filesystem output failed.
    IoError = 4,
}

/// Opaque reservoir description (omega0, g, Gamma, T).
pub struct QrReservoir {
    spec: ReservoirSpec,
}

fn catch(status: &mut QrStatus, op: impl FnOnce() -> Result<(), QrStatus>) -> QrStatus {
    match op() {
        Ok(()) => QrStatus::Ok,
        Err(e) => {
            *status = e;
            e
        }
    }
}

/// Library version as a static C string.
#[no_mangle]
pub extern "C" fn qr_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

/// Allocate a reservoir handle. Returns null when the parameters are out
/// of range. Free with [`qr_reservoir_free`].
#[no_mangle]
pub extern "C" fn qr_reservoir_new(
    omega0: c_double,
    g: c_double,
    gamma: c_double,
    temperature: c_double,
) -> *mut QrReservoir {
    match ReservoirSpec::new(omega0, g, gamma, temperature) {
        Ok(spec) => Box::into_raw(Box::new(QrReservoir { spec })),
        Err(_) => std::ptr::null_mut(),
    }
}

/// Release a reservoir handle.
///
/// # Safety
/// `reservoir` must come from [`qr_reservoir_new`] and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn qr_reservoir_free(reservoir: *mut QrReservoir) {
    if !reservoir.is_null() {
        drop(Box::from_raw(reservoir));
    }
}

unsafe fn spec_of<'a>(reservoir: *const QrReservoir) -> Option<&'a ReservoirSpec> {
    reservoir.as_ref().map(|r| &r.spec)
}

unsafe fn write_populations(rho: &DensityMatrix, out: *mut c_double) {
    let q = dressed_populations(rho);
    std::ptr::copy_nonoverlapping(q.as_ptr(), out, 4);
}

/// Dressed-basis populations of the closed-form Gibbs state, written to
/// `out_q[0..4]`.
///
/// # Safety
/// `out_q` must point to at least four writable doubles.
#[no_mangle]
pub unsafe extern "C" fn qr_gibbs_populations(
    reservoir: *const QrReservoir,
    out_q: *mut c_double,
) -> QrStatus {
    let mut status = QrStatus::Ok;
    catch(&mut status, || {
        let spec = spec_of(reservoir).ok_or(QrStatus::NullPointer)?;
        if out_q.is_null() {
            return Err(QrStatus::NullPointer);
        }
        write_populations(&gibbs_dressed(spec), out_q);
        Ok(())
    })
}

/// Dressed-basis populations of the stationary state solved from the
/// engineered Liouvillian, written to `out_q[0..4]`.
///
/// # Safety
/// `out_q` must point to at least four writable doubles.
#[no_mangle]
pub unsafe extern "C" fn qr_steady_populations(
    reservoir: *const QrReservoir,
    out_q: *mut c_double,
) -> QrStatus {
    let mut status = QrStatus::Ok;
    catch(&mut status, || {
        let spec = spec_of(reservoir).ok_or(QrStatus::NullPointer)?;
        if out_q.is_null() {
            return Err(QrStatus::NullPointer);
        }
        let liouvillian = engineered_liouvillian(spec).map_err(|_| QrStatus::InvalidArgument)?;
        let steady = steady_state(&liouvillian).map_err(|_| QrStatus::NumericalFailure)?;
        write_populations(&steady, out_q);
        Ok(())
    })
}

/// Negativity of the stationary Gibbs state.
///
/// # Safety
/// `out` must point to a writable double.
#[no_mangle]
pub unsafe extern "C" fn qr_gibbs_negativity(
    reservoir: *const QrReservoir,
    out: *mut c_double,
) -> QrStatus {
    let mut status = QrStatus::Ok;
    catch(&mut status, || {
        let spec = spec_of(reservoir).ok_or(QrStatus::NullPointer)?;
        if out.is_null() {
            return Err(QrStatus::NullPointer);
        }
        let value = negativity(&gibbs_dressed(spec)).map_err(|_| QrStatus::NumericalFailure)?;
        *out = value;
        Ok(())
    })
}

/// Collective-spin variance witness of the stationary Gibbs state
/// (separable threshold is 1 for two qubits).
///
/// # Safety
/// `out` must point to a writable double.
#[no_mangle]
pub unsafe extern "C" fn qr_gibbs_witness(
    reservoir: *const QrReservoir,
    out: *mut c_double,
) -> QrStatus {
    let mut status = QrStatus::Ok;
    catch(&mut status, || {
        let spec = spec_of(reservoir).ok_or(QrStatus::NullPointer)?;
        if out.is_null() {
            return Err(QrStatus::NullPointer);
        }
        let value = witness_w(&gibbs_dressed(spec), 2).map_err(|_| QrStatus::NumericalFailure)?;
        *out = value;
        Ok(())
    })
}

/// Trace distance between one protocol cycle of duration `t` starting
/// from |00><00| and the matching Lindblad evolution.
///
/// # Safety
/// `out` must point to a writable double.
#[no_mangle]
pub unsafe extern "C" fn qr_protocol_deviation(
    reservoir: *const QrReservoir,
    t: c_double,
    out: *mut c_double,
) -> QrStatus {
    let mut status = QrStatus::Ok;
    catch(&mut status, || {
        let spec = spec_of(reservoir).ok_or(QrStatus::NullPointer)?;
        if out.is_null() {
            return Err(QrStatus::NullPointer);
        }
        let cfg = ProtocolConfig::new(*spec, t).map_err(|_| QrStatus::InvalidArgument)?;
        let liouvillian = engineered_liouvillian(spec).map_err(|_| QrStatus::InvalidArgument)?;
        let rho0 = DensityMatrix::basis(&[2, 2], 0);
        let via_protocol = run_protocol(&rho0, &cfg).map_err(|_| QrStatus::NumericalFailure)?;
        let via_lindblad =
            evolve(&rho0, &liouvillian, t).map_err(|_| QrStatus::NumericalFailure)?;
        *out =
            trace_distance(&via_protocol, &via_lindblad).map_err(|_| QrStatus::NumericalFailure)?;
        Ok(())
    })
}

/// Run a phase-diagram sweep and write the CSV to `path` (UTF-8,
/// NUL-terminated). Grid axes are inclusive with `n_t`/`n_g` points.
///
/// # Safety
/// `path` must be a valid NUL-terminated string pointer.
#[no_mangle]
pub unsafe extern "C" fn qr_sweep_to_csv(
    omega0: c_double,
    gamma: c_double,
    t_min: c_double,
    t_max: c_double,
    n_t: c_int,
    g_min: c_double,
    g_max: c_double,
    n_g: c_int,
    path: *const c_char,
) -> QrStatus {
    let mut status = QrStatus::Ok;
    catch(&mut status, || {
        if path.is_null() {
            return Err(QrStatus::NullPointer);
        }
        let path = CStr::from_ptr(path)
            .to_str()
            .map_err(|_| QrStatus::InvalidArgument)?;
        if n_t <= 0 || n_g <= 0 {
            return Err(QrStatus::InvalidArgument);
        }
        let base =
            ReservoirSpec::new(omega0, 0.0, gamma, 0.0).map_err(|_| QrStatus::InvalidArgument)?;
        let grid = SweepGrid::new(t_min, t_max, n_t as usize, g_min, g_max, n_g as usize)
            .map_err(|_| QrStatus::InvalidArgument)?;
        let rows = sweep_phase_diagram(&grid, &base).map_err(|_| QrStatus::NumericalFailure)?;
        qreservoir::cli::write_csv(&rows, &std::path::PathBuf::from(path))
            .map_err(|_| QrStatus::IoError)?;
        Ok(())
    })
}
