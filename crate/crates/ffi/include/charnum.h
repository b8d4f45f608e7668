#ifndef CHARNUM_H
#define CHARNUM_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum CharnumStatus {
  CHARNUM_STATUS_OK = 0,
  CHARNUM_STATUS_NULL_ARGUMENT = 1,
  CHARNUM_STATUS_INVALID_ARGUMENT = 2,
  CHARNUM_STATUS_INVALID_KEY = 3,
  CHARNUM_STATUS_CYCLE = 4,
  CHARNUM_STATUS_DEGREE_GUARD = 5,
  CHARNUM_STATUS_NOT_COMPUTABLE = 6,
  CHARNUM_STATUS_CACHE = 7,
  CHARNUM_STATUS_PANIC = 8,
} CharnumStatus;

typedef enum CharnumFamily {
  CHARNUM_FAMILY_N = 0,
  CHARNUM_FAMILY_C = 1,
  CHARNUM_FAMILY_E = 2,
} CharnumFamily;

typedef enum CharnumFormat {
  CHARNUM_FORMAT_MARKDOWN = 0,
  CHARNUM_FORMAT_CSV = 1,
  CHARNUM_FORMAT_JSON = 2,
} CharnumFormat;

/**
 * Opaque engine handle: a memo store plus its degree limits.
 */
typedef struct CharnumEngine CharnumEngine;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Creates an engine. Returns null when a limit is out of range.
 */
struct CharnumEngine *charnum_engine_new(int32_t max_degree, int32_t max_cusp_degree);

/**
 * Releases an engine. Null is ignored.
 *
 * # Safety
 * `engine` must come from [`charnum_engine_new`] and not be used again.
 */
void charnum_engine_free(struct CharnumEngine *engine);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not be used again.
 */
void charnum_string_free(char *s);

/**
 * Message for the last failed call on this thread, or null. The pointer
 * stays valid until the next call into the library on this thread.
 */
const char *charnum_last_error(void);

/**
 * Computes one value and writes it as `num` or `num/den` to `*out`.
 * `class` is the basis index 0..=5 (`1, h, h2, hv, hv2, h2hv`) or -1 for
 * none.
 *
 * # Safety
 * `engine` must be a live handle and `out` a writable pointer.
 */
enum CharnumStatus charnum_compute(struct CharnumEngine *engine,
                                   enum CharnumFamily family,
                                   int32_t class_,
                                   int32_t d,
                                   int32_t a,
                                   int32_t b,
                                   int32_t c,
                                   char **out);

/**
 * Number of rational plane curves of degree `d` through `3d - 1` points,
 * by the classical recursion.
 *
 * # Safety
 * `out` must be a writable pointer.
 */
enum CharnumStatus charnum_kontsevich(int32_t d, char **out);

/**
 * Renders a full table.
 *
 * # Safety
 * `engine` must be a live handle and `out` a writable pointer.
 */
enum CharnumStatus charnum_render_table(struct CharnumEngine *engine,
                                        enum CharnumFamily family,
                                        int32_t class_,
                                        int32_t d,
                                        enum CharnumFormat format,
                                        char **out);

/**
 * Writes every stored value, zeros included, as a JSON-lines cache file.
 *
 * # Safety
 * `engine` must be a live handle and `path` a nul-terminated string.
 */
enum CharnumStatus charnum_cache_export(const struct CharnumEngine *engine, const char *path);

/**
 * Replaces the engine's store with the contents of a cache file. The
 * store is left untouched when the file is rejected.
 *
 * # Safety
 * `engine` must be a live handle and `path` a nul-terminated string.
 */
enum CharnumStatus charnum_cache_import(struct CharnumEngine *engine, const char *path);

/**
 * Number of values held by the engine's store.
 *
 * # Safety
 * `engine` must be a live handle or null.
 */
size_t charnum_engine_len(const struct CharnumEngine *engine);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CHARNUM_H */
