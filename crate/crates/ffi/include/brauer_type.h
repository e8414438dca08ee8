#ifndef BRAUER_TYPE_H
#define BRAUER_TYPE_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum BtStatus {
  BT_STATUS_OK = 0,
  BT_STATUS_NULL_POINTER = 1,
  BT_STATUS_INVALID_UTF8 = 2,
  BT_STATUS_BAD_GROUP = 3,
  BT_STATUS_UNSUPPORTED = 4,
  BT_STATUS_INVALID_ARGUMENT = 5,
  BT_STATUS_PANIC = 6,
} BtStatus;

/**
 * A Brauer-type algebra over Z/p with mu = 1 and tau specialized.
 */
typedef struct BtAlgebra BtAlgebra;

/**
 * A finite reflection group.
 */
typedef struct BtGroup BtGroup;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or NULL. Valid until the
 * next failing call on the same thread.
 */
const char *bt_last_error(void);

/**
 * Parse a group spec such as "dihedral:5", "h3", "a:4" or "g:2,1,3".
 *
 * # Safety
 * `spec` must be a NUL-terminated string and `out` a valid pointer.
 */
enum BtStatus bt_group_parse(const char *spec, struct BtGroup **out);

/**
 * # Safety
 * `g` must come from `bt_group_parse` and not be freed twice.
 */
void bt_group_free(struct BtGroup *g);

/**
 * # Safety
 * Pointers must be valid.
 */
enum BtStatus bt_group_order(const struct BtGroup *g, size_t *out);

/**
 * # Safety
 * Pointers must be valid.
 */
enum BtStatus bt_group_rank(const struct BtGroup *g, size_t *out);

/**
 * # Safety
 * Pointers must be valid.
 */
enum BtStatus bt_group_hyperplanes(const struct BtGroup *g, size_t *out);

/**
 * Build the algebra of `g` over Z/`prime` with every mu = 1 and every tau
 * equal to `tau`. `prime` must be an odd prime below 2^62.
 *
 * # Safety
 * `g` must be a live group handle and `out` a valid pointer.
 */
enum BtStatus bt_algebra_new(const struct BtGroup *g,
                             uint64_t tau,
                             uint64_t prime,
                             struct BtAlgebra **out);

/**
 * # Safety
 * `a` must come from `bt_algebra_new` and not be freed twice.
 */
void bt_algebra_free(struct BtAlgebra *a);

/**
 * # Safety
 * Pointers must be valid.
 */
enum BtStatus bt_algebra_dim(const struct BtAlgebra *a, size_t *out);

/**
 * Whether every defining relation holds on the full basis.
 *
 * # Safety
 * Pointers must be valid.
 */
enum BtStatus bt_algebra_relations_hold(const struct BtAlgebra *a, bool *out);

/**
 * Whether the star map is an involutive anti-automorphism of the table.
 *
 * # Safety
 * Pointers must be valid.
 */
enum BtStatus bt_algebra_star_holds(const struct BtAlgebra *a, bool *out);

/**
 * Run the command-line tool in-process. `argv` excludes the program name.
 * On return `*out_json` holds the report (free it with `bt_string_free`)
 * and `*exit_code` the code the binary would exit with.
 *
 * # Safety
 * `argv` must point to `argc` NUL-terminated strings; outputs must be valid.
 */
enum BtStatus bt_cli_run(const char *const *argv, size_t argc, char **out_json, int32_t *exit_code);

/**
 * # Safety
 * `s` must come from this library and not be freed twice.
 */
void bt_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* BRAUER_TYPE_H */
