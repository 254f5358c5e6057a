/* Generated by cbindgen. Do not edit. */

#ifndef PARSEWORDS_H
#define PARSEWORDS_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result code of every fallible call.
 */
typedef enum PwStatus {
  PW_STATUS_OK = 0,
  PW_STATUS_NULL_ARGUMENT = 1,
  PW_STATUS_INVALID_UTF8 = 2,
  PW_STATUS_PARSE_ERROR = 3,
  PW_STATUS_INVALID_WORD = 4,
  PW_STATUS_LENGTH_MISMATCH = 5,
  PW_STATUS_BAD_PARAMS = 6,
  PW_STATUS_NOT_FOUND = 7,
  PW_STATUS_INDEX_OUT_OF_RANGE = 8,
  PW_STATUS_PANIC = 9,
  PW_STATUS_OTHER = 10,
} PwStatus;

/**
 * A binary tree.
 */
typedef struct PwTree PwTree;

/**
 * An ordered list of canonical parse words.
 */
typedef struct PwWords PwWords;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or an empty string.
 * The pointer stays valid until the next call on the same thread.
 */
const char *pw_last_error(void);

/**
 * Builds a tree from a literal such as `((**)*)`, a path word `path:lrl`,
 * a family `left-comb:5` or an index `7-64`.
 *
 * # Safety
 * `text_in` must be a NUL-terminated string and `tree_out` a valid pointer.
 */
enum PwStatus pw_tree_parse(const char *text_in, struct PwTree **tree_out);

/**
 * Releases a tree. Null is ignored.
 *
 * # Safety
 * `t` must come from [`pw_tree_parse`] and not be used afterwards.
 */
void pw_tree_free(struct PwTree *t);

/**
 * # Safety
 * `t` must be a live tree handle and `count_out` a valid pointer.
 */
enum PwStatus pw_tree_leaf_count(const struct PwTree *t, size_t *count_out);

/**
 * Writes the literal form of the tree. Free the string with [`pw_string_free`].
 *
 * # Safety
 * `t` must be a live tree handle and `text_out` a valid pointer.
 */
enum PwStatus pw_tree_to_string(const struct PwTree *t, char **text_out);

/**
 * Releases a string returned by the library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not be used afterwards.
 */
void pw_string_free(char *s);

/**
 * Parses `word` with the tree and writes the labeled tree, e.g. `2(01)`.
 * Returns `NotFound` when the word is not parsed.
 *
 * # Safety
 * `t` must be a live tree handle, `word` a NUL-terminated string and
 * `labeling_out` a valid pointer.
 */
enum PwStatus pw_parse(const struct PwTree *t, const char *word, char **labeling_out);

/**
 * Number of parse-word classes shared by two trees of the same size.
 *
 * # Safety
 * `t1` and `t2` must be live tree handles and `count_out` a valid pointer.
 */
enum PwStatus pw_count_parse_words(const struct PwTree *t1,
                                   const struct PwTree *t2,
                                   uint64_t *count_out);

/**
 * Canonical parse words shared by two trees, in increasing order.
 *
 * # Safety
 * `t1` and `t2` must be live tree handles and `words_out` a valid pointer.
 */
enum PwStatus pw_parse_words(const struct PwTree *t1,
                             const struct PwTree *t2,
                             struct PwWords **words_out);

/**
 * Number of words in the list; zero for null.
 *
 * # Safety
 * `words` must be null or a live list handle.
 */
size_t pw_words_len(const struct PwWords *words);

/**
 * Word at `index`, borrowed from the list; null when out of range.
 *
 * # Safety
 * `words` must be null or a live list handle.
 */
const char *pw_words_get(const struct PwWords *words, size_t index);

/**
 * Releases a word list. Null is ignored.
 *
 * # Safety
 * `words` must come from [`pw_parse_words`] and not be used afterwards.
 */
void pw_words_free(struct PwWords *words);

/**
 * One common parse word found by the reduction solver. Returns `NotFound`
 * when the solver gives up.
 *
 * # Safety
 * `t1` and `t2` must be live tree handles and `word_out` a valid pointer.
 */
enum PwStatus pw_splice_solve(const struct PwTree *t1, const struct PwTree *t2, char **word_out);

/**
 * `a(m, k)`, the class count of `LeftTurn(m, k + 1)` with `RightTurn(k, m + 1)`.
 *
 * # Safety
 * `count_out` must be a valid pointer.
 */
enum PwStatus pw_a_of(uint32_t m, uint32_t k, uint64_t *count_out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* PARSEWORDS_H */
