#ifndef ETALE_H
#define ETALE_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum EtaleStatus {
  ETALE_STATUS_OK = 0,
  ETALE_STATUS_CHECK_FAILED = 1,
  ETALE_STATUS_INPUT_ERROR = 2,
  ETALE_STATUS_BOUND_EXCEEDED = 3,
  ETALE_STATUS_NULL_POINTER = 4,
  ETALE_STATUS_INVALID_UTF8 = 5,
  ETALE_STATUS_PANIC = 6,
} EtaleStatus;

/**
 * A parsed, range-checked document.
 */
typedef struct EtaleDocument EtaleDocument;

/**
 * Size bounds; pass `NULL` wherever a `const EtaleLimits *` is accepted to
 * use the defaults.
 */
typedef struct EtaleLimits {
  size_t max_arrows;
  size_t max_elements;
  size_t hom_arrows;
  size_t hom_elements;
  size_t hom_size;
} EtaleLimits;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Default size bounds.
 */
struct EtaleLimits etale_limits_default(void);

/**
 * Message for the last failed call on this thread, or an empty string. The
 * pointer stays valid until the next call on the same thread.
 */
const char *etale_last_error(void);

/**
 * Parses a NUL-terminated JSON document into `*out`.
 *
 * # Safety
 * `text` must be NULL or a valid NUL-terminated string; `out` must be NULL or
 * writable.
 */
enum EtaleStatus etale_document_parse(const char *text, struct EtaleDocument **out);

/**
 * # Safety
 * `doc` must be NULL or a handle from this library that has not been freed.
 */
void etale_document_free(struct EtaleDocument *doc);

/**
 * # Safety
 * `s` must be NULL or a string returned by this library that has not been freed.
 */
void etale_string_free(char *s);

/**
 * Canonical JSON text of a document.
 *
 * # Safety
 * `doc` must be a live handle; `out` must be writable.
 */
enum EtaleStatus etale_document_to_json(const struct EtaleDocument *doc, char **out);

/**
 * Layered axiom checks. Writes a JSON report to `*report`; returns `Ok` when
 * every check passes and `CheckFailed` otherwise.
 *
 * # Safety
 * `doc` must be a live handle; `report` must be writable.
 */
enum EtaleStatus etale_validate(const struct EtaleDocument *doc, char **report);

/**
 * The quantal frame of opens of a category document, as a new handle.
 *
 * # Safety
 * `doc` must be a live handle; `limits` may be NULL; `out` must be writable.
 */
enum EtaleStatus etale_omega(const struct EtaleDocument *doc,
                             const struct EtaleLimits *limits,
                             struct EtaleDocument **out);

/**
 * The category of completely prime filters of a frame or quantal frame
 * document, as a new handle.
 *
 * # Safety
 * `doc` must be a live handle; `limits` may be NULL; `out` must be writable.
 */
enum EtaleStatus etale_cpoints(const struct EtaleDocument *doc,
                               const struct EtaleLimits *limits,
                               struct EtaleDocument **out);

/**
 * Round-trip isomorphism checks for a category, frame or quantal frame.
 *
 * # Safety
 * `doc` must be a live handle; `limits` may be NULL; `report` must be writable.
 */
enum EtaleStatus etale_roundtrip(const struct EtaleDocument *doc,
                                 const struct EtaleLimits *limits,
                                 char **report);

/**
 * Translation between complete restriction monoids and quantal frames and back.
 *
 * # Safety
 * `doc` must be a live handle; `limits` may be NULL; `report` must be writable.
 */
enum EtaleStatus etale_crm(const struct EtaleDocument *doc,
                           const struct EtaleLimits *limits,
                           char **report);

/**
 * Hom-set enumeration for a category against a quantal frame or a complete
 * restriction monoid.
 *
 * # Safety
 * `category` and `other` must be live handles; `limits` may be NULL;
 * `report` must be writable.
 */
enum EtaleStatus etale_adjoint(const struct EtaleDocument *category,
                               const struct EtaleDocument *other,
                               const struct EtaleLimits *limits,
                               char **report);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* ETALE_H */
