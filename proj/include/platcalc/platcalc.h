/* C interface to the plat calculus engine.
 *
 * Every object returned through an out parameter is owned by the caller:
 * plats and traces are released with their _free function, strings with
 * platcalc_string_free. Functions returning platcalc_status set the
 * thread-local message readable through platcalc_last_error on failure.
 */
#ifndef PLATCALC_H
#define PLATCALC_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum platcalc_status {
  PLATCALC_OK = 0,
  PLATCALC_ERR_PARSE = 1,
  PLATCALC_ERR_DOMAIN = 2,
  PLATCALC_ERR_BUDGET = 3
} platcalc_status;

typedef struct platcalc_plat platcalc_plat;
typedef struct platcalc_trace platcalc_trace;
typedef struct platcalc_tiling platcalc_tiling;

/* Message for the most recent failure on the calling thread, or an empty
 * string when nothing failed yet. The pointer stays valid until the next
 * failing call on the same thread. */
const char* platcalc_last_error(void);

/* Releases any string returned by this library. Accepts NULL. */
void platcalc_string_free(char* s);

/* ---- plats ---- */

platcalc_status platcalc_plat_parse(const char* text, platcalc_plat** out);
platcalc_status platcalc_plat_from_word(int strands, const int* letters,
                                        size_t letter_count,
                                        platcalc_plat** out);
void platcalc_plat_free(platcalc_plat* p);
char* platcalc_plat_format(const platcalc_plat* p);
int platcalc_plat_strands(const platcalc_plat* p);
int platcalc_plat_bridge_index(const platcalc_plat* p);
int platcalc_plat_crossings(const platcalc_plat* p);
int platcalc_plat_components(const platcalc_plat* p);

/* Writes the text form of the bracket-derived invariant to *out.
 * Returns PLATCALC_ERR_BUDGET when the plat has more crossings than
 * budget allows. budget <= 0 picks the default. */
platcalc_status platcalc_plat_oracle(const platcalc_plat* p, int budget,
                                     char** out);

/* 1 when the invariant matches the unknot, 0 when it does not, -1 when the
 * budget was exceeded. budget <= 0 picks the default. */
int platcalc_plat_unknot_evidence(const platcalc_plat* p, int budget);

/* Applies one move expression, for example "flip(split=0,k=1,dir=in)"
 * or "dc(side=top,gen=1,inv=0)", then runs the cancellation pass. */
platcalc_status platcalc_plat_apply(const platcalc_plat* p, const char* move,
                                    platcalc_plat** out);

/* Applies `moves` random complexity-raising moves. */
platcalc_status platcalc_plat_scramble(const platcalc_plat* p,
                                       unsigned long long seed, int moves,
                                       platcalc_plat** out);

typedef struct platcalc_search_config {
  int beam_width;              /* <= 0 picks the default (24) */
  int node_budget;             /* <= 0 picks the default (200000) */
  int crossing_cap;            /* <= 0 means unlimited */
  unsigned long long seed;     /* 0 keeps the search deterministic */
} platcalc_search_config;

/* Searches for a simplification to the standard plat. Succeeds with a
 * trace even when the budget ran out: check
 * platcalc_trace_reached_standard for the outcome. config may be NULL for
 * all defaults. */
platcalc_status platcalc_plat_simplify(const platcalc_plat* p,
                                       const platcalc_search_config* config,
                                       platcalc_trace** out);

/* Renders the plat; format is "ascii" or "svg". */
platcalc_status platcalc_plat_render(const platcalc_plat* p,
                                     const char* format, char** out);

/* ---- traces ---- */

platcalc_status platcalc_trace_parse(const char* text, platcalc_trace** out);
void platcalc_trace_free(platcalc_trace* t);
char* platcalc_trace_format(const platcalc_trace* t);
int platcalc_trace_reached_standard(const platcalc_trace* t);
size_t platcalc_trace_step_count(const platcalc_trace* t);
platcalc_status platcalc_trace_step_plat(const platcalc_trace* t,
                                         size_t index, platcalc_plat** out);

/* Move text of the step, or NULL for the starting step. */
char* platcalc_trace_step_move(const platcalc_trace* t, size_t index);

/* Replays and checks the trace. Writes an empty string when it certifies,
 * otherwise one violation per line. crossing_cap <= 0 means no cap;
 * oracle_budget <= 0 picks the default. */
platcalc_status platcalc_trace_certify(const platcalc_trace* t,
                                       int crossing_cap, int oracle_budget,
                                       char** out);

/* ---- tilings ---- */

platcalc_status platcalc_tiling_parse(const char* text, platcalc_tiling** out);
void platcalc_tiling_free(platcalc_tiling* t);
char* platcalc_tiling_format(const platcalc_tiling* t);
int platcalc_tiling_valid(const platcalc_tiling* t);

/* Multi-line report: validity (with violations), tile census, Euler
 * characteristic, the counting identity, complexity, and the first
 * reducible vertex if one exists. */
char* platcalc_tiling_report(const platcalc_tiling* t);

#ifdef __cplusplus
}
#endif

#endif /* PLATCALC_H */
