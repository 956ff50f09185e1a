//! Exercises the C ABI exactly as an external binding would: through the
//! exported symbols and raw pointers only.

use qreservoir_ffi::{
    qr_gibbs_negativity, qr_gibbs_populations, qr_gibbs_witness, qr_protocol_deviation,
    qr_reservoir_free, qr_reservoir_new, qr_sweep_to_csv, qr_version, QrStatus,
};

#[test]
fn full_surface_round_trip() {
    let version = unsafe { std::ffi::CStr::from_ptr(qr_version()) };
    assert!(!version.to_str().unwrap().is_empty());

    let handle = qr_reservoir_new(1.0, 0.5, 1.0, 1.0);
    assert!(!handle.is_null());

    let mut q = [0.0_f64; 4];
    let mut neg = -1.0_f64;
    let mut wit = -1.0_f64;
    let mut dev = -1.0_f64;
    unsafe {
        assert_eq!(qr_gibbs_populations(handle, q.as_mut_ptr()), QrStatus::Ok);
        assert_eq!(qr_gibbs_negativity(handle, &mut neg), QrStatus::Ok);
        assert_eq!(qr_gibbs_witness(handle, &mut wit), QrStatus::Ok);
        assert_eq!(qr_protocol_deviation(handle, 1.0, &mut dev), QrStatus::Ok);
        qr_reservoir_free(handle);
    }
    assert!((q.iter().sum::<f64>() - 1.0).abs() < 1e-12);
    assert_eq!(neg, 0.0);
    assert!(wit > 1.0);
    assert!(dev < 1e-8);
}

#[test]
fn sweep_csv_through_the_abi_is_deterministic() {
    let dir = std::env::temp_dir().join("qreservoir-ffi-abi-test");
    std::fs::create_dir_all(&dir).unwrap();
    let read_once = |name: &str| {
        let path = dir.join(name);
        let c_path = std::ffi::CString::new(path.display().to_string()).unwrap();
        let status =
            unsafe { qr_sweep_to_csv(1.0, 1.0, 0.0, 2.0, 4, 0.0, 2.0, 4, c_path.as_ptr()) };
        assert_eq!(status, QrStatus::Ok);
        let bytes = std::fs::read(&path).unwrap();
        std::fs::remove_file(&path).ok();
        bytes
    };
    assert_eq!(read_once("a.csv"), read_once("b.csv"));
}

#[test]
fn error_codes_surface_invalid_input() {
    assert!(qr_reservoir_new(1.0, -0.5, 1.0, 1.0).is_null());
    let status = unsafe { qr_sweep_to_csv(1.0, 1.0, 2.0, 0.0, 4, 0.0, 2.0, 4, std::ptr::null()) };
    assert_eq!(status, QrStatus::NullPointer);
}
