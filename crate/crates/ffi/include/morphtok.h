/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#ifndef MORPHTOK_H
#define MORPHTOK_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Result codes. Each core error class has its own code.
typedef enum MtStatus {
  MT_STATUS_OK = 0,
  MT_STATUS_NULL_ARGUMENT,
  MT_STATUS_INVALID_UTF8,
  MT_STATUS_IO,
  MT_STATUS_INVALID_MODE,
  MT_STATUS_INVALID_CONFIG,
  MT_STATUS_MODE_INPUT_MISMATCH,
  MT_STATUS_MALFORMED_LINE,
  MT_STATUS_UNKNOWN_TAG,
  MT_STATUS_DUPLICATE_ENTRY,
  MT_STATUS_EMPTY_ENTRY,
  MT_STATUS_MISSING_SPECIALS,
  MT_STATUS_DANGLING_CONTINUATION,
  MT_STATUS_EMPTY_INPUT,
  MT_STATUS_EMPTY_CORPUS,
  MT_STATUS_INVALID_ENCODING,
  MT_STATUS_NOT_HANGUL_SYLLABLE,
  MT_STATUS_INCOMPLETE_BLOCK,
  MT_STATUS_INVALID_JAMO,
  // The token is not in the vocabulary.
  MT_STATUS_NOT_FOUND,
  // A bug inside the library; the handle should not be reused.
  MT_STATUS_PANIC,
} MtStatus;

// Opaque tokenizer handle.
typedef struct MtTokenizer MtTokenizer;

// Corpus-level rates in percent. `wser` is always present here because a
// handle carries its vocabulary.
typedef struct MtMetrics {
  double oov_rate;
  double wsr;
  double wser;
  double wsr_sentence_mean;
  double wsr_sentence_std;
  uint64_t token_count;
  uint64_t sentence_count;
} MtMetrics;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Builds a tokenizer from a vocabulary file and a mode name (`wp`, `wp-sd`,
// `morwp`, `morwp-sd`, `morwp-md`).
//
// `input_format` is `raw`, `tagged` or `demo`; NULL picks `tagged` for the
// morpheme modes and `raw` otherwise. `class_table_path` may be NULL.
//
// # Safety
// String arguments must be NULL or valid NUL-terminated strings, and `out`
// must point to writable storage for one pointer.
enum MtStatus mt_tokenizer_new(const char *vocab_path,
                               const char *mode,
                               const char *input_format,
                               const char *class_table_path,
                               struct MtTokenizer **out);

// Releases a handle. NULL is ignored.
//
// # Safety
// `tokenizer` must come from `mt_tokenizer_new` and not be freed twice.
void mt_tokenizer_free(struct MtTokenizer *tokenizer);

// Tokenizes `text` (raw lines or analyzer output, per the handle's input
// format). `*out` receives one line per sentence with space-separated
// tokens, the same bytes the command-line `tokenize` writes.
//
// # Safety
// `tokenizer` must be a live handle, `text` a NUL-terminated string, and
// `out` writable.
enum MtStatus mt_tokenize(const struct MtTokenizer *tokenizer, const char *text, char **out);

// Rebuilds text from one line of space-separated tokens.
//
// # Safety
// Same contract as `mt_tokenize`.
enum MtStatus mt_detokenize(const struct MtTokenizer *tokenizer, const char *tokens, char **out);

// Tokenizes `text` and reports OOV rate, WSR and WSER.
//
// # Safety
// Same contract as `mt_tokenize`; `out` must point to an `MtMetrics`.
enum MtStatus mt_metrics(const struct MtTokenizer *tokenizer,
                         const char *text,
                         struct MtMetrics *out);

// Looks up the id of one vocabulary entry.
//
// # Safety
// `tokenizer` must be a live handle, `token` a NUL-terminated string and
// `out` writable.
enum MtStatus mt_token_id(const struct MtTokenizer *tokenizer, const char *token, uint32_t *out);

// Number of vocabulary entries, specials included. 0 for NULL.
//
// # Safety
// `tokenizer` must be NULL or a live handle.
size_t mt_vocab_size(const struct MtTokenizer *tokenizer);

// Releases a string returned by this library. NULL is ignored.
//
// # Safety
// `s` must come from this library and not be freed twice.
void mt_string_free(char *s);

// Message for the last failed call on this thread, empty after a success.
// The pointer stays valid until the next call on the same thread.
const char *mt_last_error_message(void);

// Static name of a status code, e.g. `ModeInputMismatch`.
const char *mt_status_name(enum MtStatus status);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* MORPHTOK_H */
