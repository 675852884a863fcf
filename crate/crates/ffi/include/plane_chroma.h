/* C ABI for the plane-chroma library. */

#ifndef PLANE_CHROMA_H
#define PLANE_CHROMA_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes returned by every FFI entry point.
 */
typedef enum PcStatus {
  PC_OK = 0,
  /**
   * A pointer argument was null or a value argument was out of range.
   */
  PC_INVALID_ARGUMENT = 1,
  /**
   * Input was not valid JSON or did not match the expected schema.
   */
  PC_BAD_JSON = 2,
  /**
   * A search completed without finding a witness (advisory, not proof).
   */
  PC_SEARCH_EXHAUSTED = 3,
  /**
   * A panic or other internal failure.
   */
  PC_INTERNAL = 4,
  /**
   * The requested catalog entry does not exist.
   */
  PC_UNKNOWN_NAME = 5,
} PcStatus;

/**
 * Opaque graph handle.
 */
typedef struct PcGraph PcGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Releases a string returned by this library.
 *
 * # Safety
 * `s` must be null or a pointer previously returned by this library.
 */
void pc_string_free(char *s);

/**
 * Parses a simple graph from JSON into an opaque handle.
 *
 * # Safety
 * `json` must be a valid NUL-terminated string; `out` must be a valid
 * pointer.
 */
enum PcStatus pc_graph_from_json(const char *json, struct PcGraph **out);

/**
 * Releases a graph handle.
 *
 * # Safety
 * `g` must be null or a handle from `pc_graph_from_json`, not yet freed.
 */
void pc_graph_free(struct PcGraph *g);

/**
 * Number of vertices.
 *
 * # Safety
 * `g` and `out` must be valid pointers.
 */
enum PcStatus pc_graph_order(const struct PcGraph *g, uintptr_t *out);

/**
 * Chromatic number by exhaustive search (small graphs).
 *
 * # Safety
 * `g` and `out` must be valid pointers.
 */
enum PcStatus pc_graph_chromatic_number(const struct PcGraph *g, uint32_t *out);

/**
 * Newline-separated catalog entry names.
 *
 * # Safety
 * `out` must be a valid pointer; free the result with `pc_string_free`.
 */
enum PcStatus pc_catalog_names(char **out);

/**
 * Full catalog entry (graph, embedding, d, notes) as JSON.
 *
 * # Safety
 * `name` must be a valid NUL-terminated string and `out_json` a valid
 * pointer; free the result with `pc_string_free`.
 */
enum PcStatus pc_catalog_entry_json(const char *name, char **out_json);

/**
 * Verifies an embedding against a simple graph; emits the report as JSON.
 *
 * # Safety
 * String arguments must be valid NUL-terminated strings and `out_report`
 * a valid pointer; free the result with `pc_string_free`.
 */
enum PcStatus pc_verify_json(const char *graph_json, const char *embedding_json, char **out_report);

/**
 * Searches for a unit-distance embedding; emits it as JSON on success.
 * Returns `PC_SEARCH_EXHAUSTED` when no embedding is found.
 *
 * # Safety
 * `graph_json` must be a valid NUL-terminated string and `out_embedding`
 * a valid pointer; free the result with `pc_string_free`.
 */
enum PcStatus pc_realize_json(const char *graph_json, uint64_t seed, char **out_embedding);

/**
 * The assembled p_d bound table as CSV (optionally with the fixed-point
 * propagation piece).
 *
 * # Safety
 * `out_csv` must be a valid pointer; free the result with
 * `pc_string_free`.
 */
enum PcStatus pc_bounds_table_csv(bool propagate, char **out_csv);

/**
 * Tightest known bounds on p_d at a single distance, as JSON:
 * `{"lower": {"num", "den"} | null, "upper": {"num", "den"} | null}`.
 *
 * # Safety
 * `out_json` must be a valid pointer; free the result with
 * `pc_string_free`.
 */
enum PcStatus pc_bounds_at(double d, char **out_json);

/**
 * Sample-tests the hexagonal 7-coloring; writes the number of sampled
 * unit-distance same-color pairs (0 means the test passed).
 *
 * # Safety
 * `out_violations` must be a valid pointer.
 */
enum PcStatus pc_hex_verify(double side, uint64_t samples, uint64_t seed, uint64_t *out_violations);

/**
 * Minimum monochromatic pairs among n points under 4 colors.
 */
uint64_t pc_f_min_mono_pairs(uint64_t n);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* PLANE_CHROMA_H */
