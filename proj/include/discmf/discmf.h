#ifndef DISCMF_H
#define DISCMF_H

/*
 * C interface to the discriminant matrix-factorization library.
 *
 * Every function that can fail returns a discmf_status; a human-readable
 * message for the most recent failure on the calling thread is available via
 * discmf_last_error().  Strings handed out by the library are heap-allocated
 * and must be released with discmf_string_free(); reports with
 * discmf_report_free().
 */

#ifdef __cplusplus
extern "C" {
#endif

typedef enum discmf_status {
  DISCMF_OK = 0,
  DISCMF_ERR_USAGE = 1,        /* bad arguments or an inadmissible (m, p) */
  DISCMF_ERR_UNCLASSIFIED = 2, /* a summand matched no canonical form */
  DISCMF_ERR_INTERNAL = 3      /* invariant violated; please report */
} discmf_status;

typedef struct discmf_report discmf_report;

/* Run the full decomposition pipeline for G(m,p,2).  On success *out owns
 * the result.  with_timing != 0 records wall-clock stage timings in the
 * report (output is otherwise deterministic). */
discmf_status discmf_decompose(unsigned m, unsigned p, int with_timing,
                               discmf_report** out);

/* Render a report; format is "text" or "json".  *out receives a
 * NUL-terminated string owned by the caller. */
discmf_status discmf_report_render(const discmf_report* report,
                                   const char* format, char** out);

/* *out = 1 when the computed multiset of summands equals the predicted one,
 * else 0. */
discmf_status discmf_report_theorem_match(const discmf_report* report,
                                          int* out);

void discmf_report_free(discmf_report* report);
void discmf_string_free(char* s);

/* Decompose every admissible pair with m <= m_max (p_filter = 0 keeps all p,
 * otherwise only that p).  *table receives one line per pair plus a summary
 * line; *all_match is 1 iff every pair matched its prediction.  jobs > 1
 * distributes pairs over that many threads; the table is identical to the
 * serial one. */
discmf_status discmf_verify_range(unsigned m_max, unsigned p_filter,
                                  unsigned jobs, int with_timing, char** table,
                                  int* all_match);

/* Tableaux, word indices and polynomials for one shape; shape uses the same
 * grammar as the command line: "2@i", "11@i" or "1@i,1@j". */
discmf_status discmf_specht_listing(unsigned m, unsigned p, const char* shape,
                                    char** out);

/* Static description of a status code. */
const char* discmf_strerror(discmf_status status);

/* Message from the most recent failing call on this thread ("" if none).
 * Valid until the next library call on the same thread. */
const char* discmf_last_error(void);

/* Largest accepted m (DISCMF_MAX_M environment override, default 24). */
unsigned discmf_max_m(void);

#ifdef __cplusplus
}
#endif

#endif /* DISCMF_H */
