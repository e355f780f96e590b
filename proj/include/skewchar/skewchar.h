/*
 * skewchar C interface.
 *
 * Every object is an opaque handle released with its *_free function.
 * Functions returning skc_status leave their out-parameters untouched on
 * failure; skc_last_error() then describes the failure for the calling
 * thread. Strings returned through char** are released with
 * skc_string_free().
 *
 * Status values coincide with the exit codes of the skewchar CLI.
 */
#ifndef SKEWCHAR_H
#define SKEWCHAR_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define SKC_API __declspec(dllexport)
#else
#define SKC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum skc_status {
    SKC_OK = 0,
    SKC_ERR_USAGE = 1,        /* malformed text, null handle, bad argument */
    SKC_ERR_PRECONDITION = 2, /* domain precondition violated */
    SKC_UNEQUAL = 3,          /* eqcheck: characters differ */
    SKC_STRUCTURAL_FAIL = 4,  /* eqcheck: a necessary condition fails */
    SKC_ERR_MISMATCH = 5,     /* verification against the LR oracle failed */
    SKC_ERR_TOO_LARGE = 6,    /* multiplicity overflow or instance too large */
    SKC_ERR_INTERNAL = 7
} skc_status;

typedef struct skc_partition skc_partition;
typedef struct skc_skew skc_skew;
typedef struct skc_charsum skc_charsum;
typedef struct skc_report skc_report;

SKC_API const char* skc_version(void);
SKC_API const char* skc_last_error(void);
SKC_API void skc_string_free(char* s);

/* Partitions. Text grammar: "10^2,8^4,5^2", "()" or "" for empty. */
SKC_API skc_status skc_partition_parse(const char* text, skc_partition** out);
SKC_API skc_status skc_partition_new(const int* parts, size_t n, skc_partition** out);
SKC_API void skc_partition_free(skc_partition* p);
SKC_API size_t skc_partition_length(const skc_partition* p);
SKC_API int skc_partition_part(const skc_partition* p, size_t i); /* 0-based, 0 past the end */
SKC_API int skc_partition_weight(const skc_partition* p);
SKC_API int skc_partition_durfee(const skc_partition* p);
SKC_API skc_status skc_partition_format(const skc_partition* p, char** out);

/* Skew diagrams. Text grammar: "<outer>/<inner>" or "<outer>". */
SKC_API skc_status skc_skew_parse(const char* text, skc_skew** out);
SKC_API skc_status skc_skew_new(const skc_partition* outer, const skc_partition* inner, skc_skew** out);
SKC_API void skc_skew_free(skc_skew* a);
SKC_API int skc_skew_size(const skc_skew* a);
SKC_API skc_status skc_skew_outer(const skc_skew* a, skc_partition** out);
SKC_API skc_status skc_skew_inner(const skc_skew* a, skc_partition** out);
SKC_API skc_status skc_skew_format(const skc_skew* a, char** out);
/* Removes the first t northwest ribbons; the result is normalized. */
SKC_API skc_status skc_skew_strip(const skc_skew* a, int t, skc_skew** out);
/* labels == 0: '#' per box; otherwise northwest ribbon labels. */
SKC_API skc_status skc_skew_render(const skc_skew* a, int labels, char** out);

/* Character sums: terms in lexicographically descending order. */
SKC_API skc_status skc_decompose(const skc_skew* a, skc_charsum** out);
SKC_API skc_status skc_product(const skc_partition* alpha, const skc_partition* beta, skc_charsum** out);
SKC_API skc_status skc_schubert(const skc_partition* alpha, const skc_partition* beta, int k, int l,
                                skc_charsum** out);
SKC_API skc_status skc_lr_coefficient(const skc_partition* lambda, const skc_partition* mu,
                                      const skc_partition* nu, uint64_t* out);
SKC_API void skc_charsum_free(skc_charsum* s);
SKC_API int skc_charsum_weight(const skc_charsum* s);
SKC_API size_t skc_charsum_size(const skc_charsum* s);
SKC_API skc_status skc_charsum_term(const skc_charsum* s, size_t i, skc_partition** nu, uint64_t* mult);
SKC_API skc_status skc_charsum_json(const skc_charsum* s, char** out);
SKC_API skc_status skc_charsum_text(const skc_charsum* s, char** out);
/* Recomputes the sum by an independent route; SKC_ERR_MISMATCH on disagreement. */
SKC_API skc_status skc_charsum_verify(const skc_charsum* s);

/* Reports. Each report remembers its inputs so it can verify itself. */
SKC_API skc_status skc_ribbons(const skc_skew* a, skc_report** out);
SKC_API skc_status skc_maxhook(const skc_skew* a, skc_report** out);
SKC_API skc_status skc_durfee_product(const skc_partition* alpha, const skc_partition* beta, int exhaustive,
                                      skc_report** out);
SKC_API skc_status skc_durfee_special(const skc_skew* a, int exhaustive, skc_report** out);
SKC_API skc_status skc_eqcheck(const skc_skew* a, const skc_skew* b, int full, skc_report** out);
SKC_API void skc_report_free(skc_report* r);
SKC_API skc_status skc_report_json(const skc_report* r, char** out);
SKC_API skc_status skc_report_text(const skc_report* r, char** out);
/* Cross-checks the report against full LR decompositions (exponential). */
SKC_API skc_status skc_report_verify(const skc_report* r);
/* SKC_OK, or for eqcheck reports SKC_STRUCTURAL_FAIL / SKC_UNEQUAL. */
SKC_API skc_status skc_report_outcome(const skc_report* r);
/* pi_nw for ribbon reports, hl for maxhook reports. */
SKC_API skc_status skc_report_hook_lengths(const skc_report* r, skc_partition** out);
/* Maxhook and Durfee reports. */
SKC_API size_t skc_report_witness_count(const skc_report* r);
SKC_API skc_status skc_report_witness(const skc_report* r, size_t i, skc_partition** nu, uint64_t* mult);
/* Durfee reports: maximal Durfee size; maxhook reports: minimal Durfee size. */
SKC_API skc_status skc_report_durfee(const skc_report* r, int* out);

/* Checks the complementation identity for mu in lambda in (k^l). */
SKC_API skc_status skc_verify_complementation(const skc_partition* mu, const skc_partition* lambda, int k, int l,
                                              int* holds);

#ifdef __cplusplus
}
#endif

#endif /* SKEWCHAR_H */
