/* ws1s.h -- C interface of the WS1S decision library
 *
 * All objects are opaque handles created and destroyed by the library.
 * Functions return WS1S_OK on success; on failure they return an error
 * status and, when an `error` out-parameter is given, a message that the
 * caller releases with ws1s_string_free().
 */

#ifndef WS1S_H
#define WS1S_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
    WS1S_OK = 0,
    WS1S_ERR_USAGE = 2,     /* bad arguments, unparsable or non-ground input */
    WS1S_ERR_RESOURCE = 3,  /* a resource cap was hit outside a decision run */
    WS1S_ERR_INTERNAL = 5,
} ws1s_status;

#define WS1S_TASK_VALIDITY 0
#define WS1S_TASK_SATISFIABILITY 1

#define WS1S_MODE_CLASSICAL 0
#define WS1S_MODE_ANTICHAIN 1
#define WS1S_MODE_BOTH 2

typedef struct ws1s_formula ws1s_formula;
typedef struct ws1s_report ws1s_report;

typedef struct {
    int task;                 /* WS1S_TASK_* */
    int mode;                 /* WS1S_MODE_* */
    long long state_budget;   /* <= 0 selects the default (10^6) */
    long long term_budget;    /* <= 0 selects the default (10^6) */
    int trace;                /* nonzero: include fixpoint traces in the report */
    const char* formula_id;   /* optional label, may be NULL */
} ws1s_options;

/* Fills in the defaults: validity, both modes, default budgets, no trace. */
void ws1s_options_init(ws1s_options* options);

/* Parses a formula in the concrete grammar (ex2/all2, sub, sing, X = {0},
 * X = Y + 1, ~ & |, "#" comments). */
ws1s_status ws1s_parse(const char* text, ws1s_formula** out, char** error);

/* Builds a formula-family instance, e.g. family "chain" with parameters n, k. */
ws1s_status ws1s_family_formula(const char* family, int n, int k, ws1s_formula** out,
                                char** error);

/* Pretty-printed formula text; release with ws1s_string_free. */
char* ws1s_formula_render(const ws1s_formula* formula);

void ws1s_formula_free(ws1s_formula* formula);

/* Decides the formula.  Resource-cap hits during a decision are reported
 * inside the run report (exit code 3), not as a status. */
ws1s_status ws1s_decide(const ws1s_formula* formula, const ws1s_options* options,
                        ws1s_report** out, char** error);

/* JSON document of the run report; owned by the report handle. */
const char* ws1s_report_json(const ws1s_report* report);

/* 0 valid/satisfiable, 1 invalid/unsatisfiable, 3 resource cap,
 * 4 mode disagreement. */
int ws1s_report_exit_code(const ws1s_report* report);

void ws1s_report_free(ws1s_report* report);

/* Runs a corpus sweep comparing the two modes.  The specification is a JSON
 * object; recognized keys:
 *   exhaustive (bool), max_connectives, sample_c2, sample_c3, seed,
 *   family_grid (bool), family, n_min, n_max, k_min, k_max,
 *   task ("validity"/"satisfiability"), state_budget, term_budget,
 *   include_reports (bool).
 * The aggregate report is returned as JSON in *out_json (caller frees). */
ws1s_status ws1s_corpus_run(const char* spec_json, char** out_json, char** error);

void ws1s_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif
