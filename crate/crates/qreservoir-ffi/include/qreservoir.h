#ifndef QRESERVOIR_H
#define QRESERVOIR_H

/* Generated by cbindgen; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes returned by every FFI call.
 */
typedef enum QrStatus {
  /**
   * Success.
   */
  QrStatus_Ok = 0,
  /**
   * A pointer argument was null.
   */
  QrStatus_NullPointer = 1,
  /**
   * A numeric argument was out of range.
   */
  QrStatus_InvalidArgument = 2,
  /**
   * An internal computation failed validation.
   */
  QrStatus_NumericalFailure = 3,
  /**
   * Filesystem output failed.
   */
  QrStatus_IoError = 4,
} QrStatus;

/**
 * Opaque reservoir description (omega0, g, Gamma, T).
 */
typedef struct QrReservoir QrReservoir;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Library version as a static C string.
 */
const char *qr_version(void);

/**
 * Allocate a reservoir handle. Returns null when the parameters are out
 * of range. Free with [`qr_reservoir_free`].
 */
struct QrReservoir *qr_reservoir_new(double omega0, double g, double gamma, double temperature);

/**
 * Release a reservoir handle.
 *
 * # Safety
 * `reservoir` must come from [`qr_reservoir_new`] and not be freed twice.
 */
void qr_reservoir_free(struct QrReservoir *reservoir);

/**
 * Dressed-basis populations of the closed-form Gibbs state, written to
 * `out_q[0..4]`.
 *
 * # Safety
 * `out_q` must point to at least four writable doubles.
 */
enum QrStatus qr_gibbs_populations(const struct QrReservoir *reservoir, double *out_q);

/**
 * Dressed-basis populations of the stationary state solved from the
 * engineered Liouvillian, written to `out_q[0..4]`.
 *
 * # Safety
 * `out_q` must point to at least four writable doubles.
 */
enum QrStatus qr_steady_populations(const struct QrReservoir *reservoir, double *out_q);

/**
 * Negativity of the stationary Gibbs state.
 *
 * # Safety
 * `out` must point to a writable double.
 */
enum QrStatus qr_gibbs_negativity(const struct QrReservoir *reservoir, double *out);

/**
 * Collective-spin variance witness of the stationary Gibbs state
 * (separable threshold is 1 for two qubits).
 *
 * # Safety
 * `out` must point to a writable double.
 */
enum QrStatus qr_gibbs_witness(const struct QrReservoir *reservoir, double *out);

/**
 * Trace distance between one protocol cycle of duration `t` starting
 * from |00><00| and the matching Lindblad evolution.
 *
 * # Safety
 * `out` must point to a writable double.
 */
enum QrStatus qr_protocol_deviation(const struct QrReservoir *reservoir, double t, double *out);

/**
 * Run a phase-diagram sweep and write the CSV to `path` (UTF-8,
 * NUL-terminated). Grid axes are inclusive with `n_t`/`n_g` points.
 *
 * # Safety
 * `path` must be a valid NUL-terminated string pointer.
 */
enum QrStatus qr_sweep_to_csv(double omega0,
                              double gamma,
                              double t_min,
                              double t_max,
                              int n_t,
                              double g_min,
                              double g_max,
                              int n_g,
                              const char *path);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* QRESERVOIR_H */
