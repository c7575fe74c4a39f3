/* C boundary of the glider-representation kernel.
 *
 * Conventions:
 *   - every fallible call returns a gr_status; GR_OK means success;
 *   - on failure gr_last_error() holds a message for the calling thread
 *     until the next failing call;
 *   - objects come back through out-parameters as opaque handles with
 *     matching *_free functions; strings come back malloc'd and are
 *     released with gr_string_free;
 *   - out-parameters are untouched on failure.
 *
 * Text formats:
 *   - group JSON: {"name", "order", "table": order rows of order ids,
 *     "elements": names}, id 0 the identity;
 *   - chain spec: registry shorthand ("q8j"), generator lists ("4; 1",
 *     levels joined by ';', each level the closure of the listed ids,
 *     trivial/full endpoints implied), or a JSON array of id levels;
 *   - ambient spec: comma list of character-table irreducible indices,
 *     each optionally ":multiplicity" ("4" or "0:1,1:2");
 *   - generator spec: comma list of exact scalars, rationals ("1", "-1/2")
 *     or cyclotomics in CycNumber text form ("z^2 (N=8)");
 *   - square spec: the two upper levels as generator id lists joined by
 *     '|' ("4|1" over the quaternions);
 *   - block spec: "component:index" picking a base-level constituent of
 *     one ambient irreducible ("4:0");
 *   - product glider JSON (gr_product_triple_json):
 *     {"cells": [[g_irrep, h_irrep(, mult)], ...], "gen": [scalars...],
 *      "p_chain": spec, "q_chain": spec} with the chains optional
 *     (first maximal chain of each factor when absent).
 */
#ifndef GLIDERREP_C_H
#define GLIDERREP_C_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define GR_API __declspec(dllexport)
#else
#define GR_API __attribute__((visibility("default")))
#endif

typedef enum gr_status {
  GR_OK = 0,
  GR_ERROR_DOMAIN = 1,      /* valid request, impossible on this input */
  GR_ERROR_USAGE = 2,       /* malformed request */
  GR_ERROR_UNSUPPORTED = 3, /* outside the implemented scope */
  GR_ERROR_INTERNAL = 4
} gr_status;

typedef struct gr_group gr_group;
typedef struct gr_chain gr_chain;

/* Message of the last failing call on this thread; never NULL. */
GR_API const char* gr_last_error(void);
GR_API void gr_string_free(char* s);

/* ---- groups ------------------------------------------------------------ */

/* Registry names: "C12", "D8", "Q16", "Dic12", "SD16", "M27", "He3",
 * "C4sC4", "A4", "V4" and direct products joined with 'x' ("Q8xC3"). */
GR_API gr_status gr_group_named(const char* name, gr_group** out);
GR_API gr_status gr_group_from_json(const char* json, gr_group** out);
GR_API gr_status gr_group_to_json(const gr_group* g, char** out);
GR_API long gr_group_order(const gr_group* g);
GR_API const char* gr_group_name(const gr_group* g);
GR_API void gr_group_free(gr_group* g);
/* JSON array of the registry names with order <= max_order. */
GR_API gr_status gr_group_catalog(long max_order, char** out);

/* Exact character table as CSV (labels, degrees, class values). */
GR_API gr_status gr_character_table_csv(const gr_group* g, char** out);

/* ---- chains ------------------------------------------------------------ */

/* `g` may be NULL when the spec is a registry shorthand. */
GR_API gr_status gr_chain_parse(const gr_group* g, const char* spec,
                                gr_chain** out);
GR_API gr_status gr_chain_to_json(const gr_chain* c, char** out);
GR_API long gr_chain_length(const gr_chain* c);
GR_API void gr_chain_free(gr_chain* c);

/* ---- diagrams and glider tables ----------------------------------------- */

GR_API gr_status gr_hasse_dot(const gr_chain* c, char** out);
/* Nodes, edges, labels and component ids as JSON. */
GR_API gr_status gr_hasse_json(const gr_chain* c, char** out);

/* Generalized character tables of the enumerated gliders as CSV;
 * dim_filter is a comma list ("1,1,2") or NULL/"" for no filter. */
GR_API gr_status gr_glider_table_csv(const gr_chain* c, const char* dim_filter,
                                     char** out);

/* Builds one glider and reports dimension vector, essential length,
 * irreducibility (direct and anti-diagonal) and the trace table as JSON. */
GR_API gr_status gr_glider_build_json(const gr_chain* c,
                                      const char* ambient_spec,
                                      const char* gen_spec, char** out);

/* Compares the enumerated glider character data of two chains; JSON with
 * "distinguishable", "detail", "witness", "witness_order". */
GR_API gr_status gr_distinguish(const gr_chain* a, const gr_chain* b,
                                char** out);

/* ---- chain squares ------------------------------------------------------ */

/* Five inertia subgroups and the landing-spot tag of one building block. */
GR_API gr_status gr_pentad_json(const gr_group* g, const char* square_spec,
                                const char* block_spec, char** out);
/* Landing-spot laws over all blocks of the square; JSON report. */
GR_API gr_status gr_square_verify_json(const gr_group* g,
                                       const char* square_spec, char** out);

/* ---- coprime products ---------------------------------------------------- */

/* Triple counts and split verdict of a product glider; `product` must name
 * a direct product ("C2xC3"). */
GR_API gr_status gr_product_triple_json(const char* product,
                                        const char* glider_json, char** out);
/* Decomposability-counting suite over one coprime factor pair. */
GR_API gr_status gr_product_suite_json(const char* p_name, const char* q_name,
                                       char** out);

/* ---- verification suites ------------------------------------------------- */

GR_API gr_status gr_suite_names(char** out);
/* Runs a named suite; the report is JSON {"suite", "instances_checked",
 * "violations", "notes"} plus "runtime_ms" when with_timing != 0. */
GR_API gr_status gr_run_suite(const char* suite, long max_order,
                              unsigned long seed, int with_timing, char** out);

#ifdef __cplusplus
}
#endif

#endif /* GLIDERREP_C_H */
