#ifndef HOPFCYC_H
#define HOPFCYC_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum HopfcycStatus {
  HOPFCYC_STATUS_OK = 0,
  /**
   * A verification ran and at least one check failed.
   */
  HOPFCYC_STATUS_CHECK_FAILED = 1,
  /**
   * Unknown instance, field, pair or flag, or bounds out of range.
   */
  HOPFCYC_STATUS_CONFIG_ERROR = 2,
  /**
   * The computation itself failed, e.g. a truncation was exceeded.
   */
  HOPFCYC_STATUS_COMPUTE_ERROR = 3,
  HOPFCYC_STATUS_NULL_POINTER = 4,
  HOPFCYC_STATUS_INVALID_UTF8 = 5,
  HOPFCYC_STATUS_BUFFER_TOO_SMALL = 6,
  HOPFCYC_STATUS_PANIC = 7,
} HopfcycStatus;

/**
 * A built Hopf algebra instance.
 */
typedef struct HopfcycInstance HopfcycInstance;

/**
 * A finished command-line run: JSON report and exit code.
 */
typedef struct HopfcycReport HopfcycReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Library version as a static NUL-terminated string.
 */
const char *hopfcyc_version(void);

/**
 * Copies the last error message of this thread into `buf` (NUL-terminated,
 * truncated to `len`). Returns the length the full message needs including
 * the NUL.
 *
 * # Safety
 * `buf` must be null or valid for `len` bytes.
 */
size_t hopfcyc_last_error(char *buf, size_t len);

/**
 * Builds an instance by name (`group:Z3`, `tensor:2`, `uqsl2`, ...). `field`
 * may be null for the instance's default field.
 *
 * # Safety
 * `name` and a non-null `field` must be NUL-terminated strings; `out` must be
 * valid for a write.
 */
enum HopfcycStatus hopfcyc_instance_new(const char *name,
                                        const char *field,
                                        struct HopfcycInstance **out);

/**
 * Releases an instance. Null is ignored.
 *
 * # Safety
 * `inst` must come from [`hopfcyc_instance_new`] and not be used afterwards.
 */
void hopfcyc_instance_free(struct HopfcycInstance *inst);

/**
 * Runs the cyclic identity checks on the module of `inst` with the modular
 * pair `pair` (`"<character>,<sigma>"`, null for `(epsilon,1)`) at levels
 * `0..=n_max` on words of degree `<= degree`. With `unchecked` the pair is
 * not validated first. Writes the number of failing checks to `failed`.
 *
 * # Safety
 * `inst` must be a live handle, `pair` null or a NUL-terminated string and
 * `failed` null or valid for a write.
 */
enum HopfcycStatus hopfcyc_verify_cyclic_axioms(const struct HopfcycInstance *inst,
                                                const char *pair,
                                                bool unchecked,
                                                uint32_t n_max,
                                                uint32_t degree,
                                                size_t *failed);

/**
 * Hochschild homology dimensions for `n = 0..=n_max` of the module of `inst`
 * with `pair`, summed over weights `<= weight_cap` for graded instances.
 * `dims` must hold `n_max + 1` entries.
 *
 * # Safety
 * `inst` must be a live handle, `pair` null or a NUL-terminated string and
 * `dims` valid for `len` writes.
 */
enum HopfcycStatus hopfcyc_hochschild_dims(const struct HopfcycInstance *inst,
                                           const char *pair,
                                           uint32_t n_max,
                                           uint32_t weight_cap,
                                           size_t *dims,
                                           size_t len);

/**
 * Cyclic homology dimensions, otherwise as [`hopfcyc_hochschild_dims`].
 *
 * # Safety
 * As for [`hopfcyc_hochschild_dims`].
 */
enum HopfcycStatus hopfcyc_cyclic_dims(const struct HopfcycInstance *inst,
                                       const char *pair,
                                       uint32_t n_max,
                                       uint32_t weight_cap,
                                       size_t *dims,
                                       size_t len);

/**
 * Runs one command-line invocation, e.g. `{"cyclic", "--instance",
 * "group:Z3"}` (without the program name), and returns its report. The
 * `--output` and `--csv` flags are ignored. The status mirrors the exit
 * code: `Ok`, `CheckFailed` or `ConfigError`.
 *
 * # Safety
 * `argv` must point to `argc` NUL-terminated strings and `out` must be valid
 * for a write.
 */
enum HopfcycStatus hopfcyc_run(const char *const *argv, size_t argc, struct HopfcycReport **out);

/**
 * The JSON text of a report, valid until the report is freed.
 *
 * # Safety
 * `report` must be a live handle or null.
 */
const char *hopfcyc_report_json(const struct HopfcycReport *report);

/**
 * The exit code the command-line tool would return, or -1 for null.
 *
 * # Safety
 * `report` must be a live handle or null.
 */
int32_t hopfcyc_report_exit_code(const struct HopfcycReport *report);

/**
 * Releases a report. Null is ignored.
 *
 * # Safety
 * `report` must come from [`hopfcyc_run`] and not be used afterwards.
 */
void hopfcyc_report_free(struct HopfcycReport *report);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* HOPFCYC_H */
