// Licensed under the Apache License 2.0 (see LICENSE file).

/*
 * C interface to the finite-state parser.
 *
 * Handles are opaque. Functions return an fslat_status; on failure the
 * message is available from fslat_last_error() on the same thread until
 * the next call. Strings returned through char** are malloc'd and released
 * with fslat_free. Reading counts can exceed 64 bits and are returned as
 * decimal strings.
 *
 * An engine may be shared by several threads only if they do not parse
 * at the same time.
 */

#ifndef FSLAT_FSLAT_H
#define FSLAT_FSLAT_H

#include <stddef.h>

#if defined(_WIN32)
#define FSLAT_API __declspec(dllexport)
#else
#define FSLAT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fslat_status {
  FSLAT_OK = 0,
  FSLAT_ERR_ARGUMENT = 1,     /* null pointer, out-of-range option */
  FSLAT_ERR_IO = 2,           /* file missing or unreadable */
  FSLAT_ERR_LEXICON = 3,      /* malformed lexicon */
  FSLAT_ERR_MAP = 4,          /* malformed syntactic map */
  FSLAT_ERR_GRAMMAR = 5,      /* grammar syntax or compile error */
  FSLAT_ERR_UNKNOWN_WORD = 6, /* closed unknown-word policy */
  FSLAT_ERR_PRECONDITION = 7,
  FSLAT_ERR_INTERNAL = 8
} fslat_status;

typedef enum fslat_order { FSLAT_ORDER_AS_WRITTEN = 0, FSLAT_ORDER_SELECTIVE = 1 } fslat_order;

typedef enum fslat_unknown { FSLAT_UNKNOWN_OPEN = 0, FSLAT_UNKNOWN_CLOSED = 1 } fslat_unknown;

typedef enum fslat_format { FSLAT_FORMAT_TABLE = 0, FSLAT_FORMAT_RECORDS = 1 } fslat_format;

typedef enum fslat_count {
  FSLAT_COUNT_MORPHOLOGICAL = 0, /* lexical readings only */
  FSLAT_COUNT_BOUNDARIES = 1,    /* times the boundary choices */
  FSLAT_COUNT_FUNCTIONS = 2,     /* the full initial lattice */
  FSLAT_COUNT_FINAL = 3          /* after the grammar */
} fslat_count;

typedef struct fslat_engine fslat_engine;
typedef struct fslat_result fslat_result;
typedef struct fslat_tokens fslat_tokens;
typedef struct fslat_grammar_report fslat_grammar_report;

typedef struct fslat_parse_options {
  size_t limit;       /* readings decoded for rendering */
  fslat_order order;
} fslat_parse_options;

FSLAT_API const char* fslat_version(void);
FSLAT_API const char* fslat_last_error(void);
FSLAT_API void fslat_free(void* p);
FSLAT_API fslat_parse_options fslat_default_parse_options(void);

/* Resources */
FSLAT_API fslat_status fslat_engine_create(const char* lexicon_text, const char* map_text, const char* grammar_text,
                                           fslat_engine** out);
FSLAT_API fslat_status fslat_engine_load(const char* lexicon_path, const char* map_path, const char* grammar_path,
                                         fslat_engine** out);
FSLAT_API void fslat_engine_free(fslat_engine* engine);
FSLAT_API fslat_status fslat_engine_set_unknown(fslat_engine* engine, fslat_unknown policy);
FSLAT_API size_t fslat_engine_rule_count(const fslat_engine* engine);

/* Tokens */
FSLAT_API fslat_status fslat_tokenize(const char* text, fslat_tokens** out);
FSLAT_API size_t fslat_tokens_size(const fslat_tokens* tokens);
FSLAT_API const char* fslat_tokens_get(const fslat_tokens* tokens, size_t i);
FSLAT_API void fslat_tokens_free(fslat_tokens* tokens);
/* Non-zero for "." "?" and "!" */
FSLAT_API int fslat_is_sentence_end(const char* token);

/* Parsing. The tokens form one sentence. */
FSLAT_API fslat_status fslat_parse(fslat_engine* engine, const char* const* tokens, size_t n,
                                   const fslat_parse_options* options, fslat_result** out);
FSLAT_API void fslat_result_free(fslat_result* result);
/* Non-zero when the grammar rejected every reading. */
FSLAT_API int fslat_result_empty(const fslat_result* result);
FSLAT_API fslat_status fslat_result_count(const fslat_result* result, fslat_count which, char** out);
/* Number of decoded readings, at most the limit. */
FSLAT_API size_t fslat_result_readings(const fslat_result* result);
/* `sentence` numbers the records; ignored for tables. */
FSLAT_API fslat_status fslat_result_render(const fslat_result* result, fslat_format format, size_t sentence,
                                           char** out);
FSLAT_API fslat_status fslat_result_trace(const fslat_result* result, fslat_format format, size_t sentence,
                                          char** out);
/* Rule names blamed for an empty parse, one per line. */
FSLAT_API fslat_status fslat_result_diagnosis(const fslat_result* result, char** out);

/* Header lines for the records formats, newline included. */
FSLAT_API const char* fslat_records_header(void);
FSLAT_API const char* fslat_trace_records_header(void);

/* Grammar checking, independent of any lexicon. */
FSLAT_API fslat_status fslat_check_grammar(const char* grammar_text, fslat_grammar_report** out);
FSLAT_API fslat_status fslat_check_grammar_file(const char* path, fslat_grammar_report** out);
FSLAT_API size_t fslat_report_rules(const fslat_grammar_report* report);
FSLAT_API const char* fslat_report_name(const fslat_grammar_report* report, size_t i);
FSLAT_API size_t fslat_report_states(const fslat_grammar_report* report, size_t i);
FSLAT_API int fslat_report_vacuous(const fslat_grammar_report* report, size_t i);
FSLAT_API int fslat_report_unsatisfiable(const fslat_grammar_report* report, size_t i);
FSLAT_API void fslat_report_free(fslat_grammar_report* report);

#ifdef __cplusplus
}
#endif

#endif
