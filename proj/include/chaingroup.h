/*
 * chaingroup: exact piecewise-linear homeomorphisms of the line, chain-group
 * certificates, constructive procedures and orbit machinery.
 *
 * All functions return cg_status; on failure cg_last_error() describes the
 * problem for the calling thread. Out-parameters are only written on
 * CG_OK. Strings returned through char** are malloc'd; release them with
 * cg_string_free. Handles are opaque; release them with their _free
 * function.
 *
 * Rationals cross this interface as strings "p" or "p/q" in lowest terms.
 * Maps, systems and words use the JSON wire formats documented in the
 * project README.
 */

#ifndef CHAINGROUP_H
#define CHAINGROUP_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cg_status {
  CG_OK = 0,
  CG_ERROR_PARSE = 1,     /* malformed input text */
  CG_ERROR_INVALID = 2,   /* precondition violated */
  CG_ERROR_NOT_FOUND = 3, /* bounded search exhausted */
  CG_ERROR_LIMIT = 4,     /* advisory denominator limit hit */
  CG_ERROR_IO = 5,
  CG_ERROR_INTERNAL = 6,
} cg_status;

typedef struct cg_plmap cg_plmap;
typedef struct cg_system cg_system;

/* last error message for the calling thread; valid until the next call */
const char* cg_last_error(void);
void cg_string_free(char* s);

const char* cg_version(void);

/* advisory bound on denominator bits; 0 disables it */
cg_status cg_set_denominator_limit_bits(unsigned long bits);

/* ---- maps ---- */
cg_status cg_plmap_from_json(const char* json, cg_plmap** out);
cg_status cg_plmap_to_json(const cg_plmap* map, char** out);
void cg_plmap_free(cg_plmap* map);

cg_status cg_plmap_identity(cg_plmap** out);
/* the standard pair: unit translation and the doubling map */
cg_status cg_standard_generators(cg_plmap** a_out, cg_plmap** b_out);

cg_status cg_plmap_evaluate(const cg_plmap* map, const char* x, char** y_out);
cg_status cg_plmap_compose(const cg_plmap* f, const cg_plmap* g, cg_plmap** out);
cg_status cg_plmap_invert(const cg_plmap* f, cg_plmap** out);
cg_status cg_plmap_power(const cg_plmap* f, long n, cg_plmap** out);
/* JSON array of [lo, hi] endpoint strings ("-inf"/"inf" allowed) */
cg_status cg_plmap_support_json(const cg_plmap* f, char** out);
cg_status cg_plmap_moves_right(const cg_plmap* f, int* out);
cg_status cg_plmap_germs_json(const cg_plmap* f, char** out);
cg_status cg_plmap_class_a_json(const cg_plmap* f, char** report_out);

/* ---- generator systems ---- */
cg_status cg_system_from_json(const char* json, cg_system** out);
cg_status cg_system_to_json(const cg_system* sys, char** out);
void cg_system_free(cg_system* sys);
cg_status cg_system_size(const cg_system* sys, size_t* out);

/* classification, pairwise certificates, the n-generator criterion, germs */
cg_status cg_system_verify_json(const cg_system* sys, char** report_out);
/* target is "chain" or "higman_thompson"; powered_out may be NULL */
cg_status cg_system_stabilize_json(const cg_system* sys, const char* target, int max_n,
                                   char** report_out, cg_system** powered_out);
cg_status cg_system_extend_json(const cg_system* sys, int max_m, char** report_out,
                                cg_system** extended_out);
/* builds the (n+2)-chain containing the given boundedly supported maps */
cg_status cg_embed_json(const cg_plmap* const* gens, size_t count, char** report_out,
                        cg_system** system_out);

/* ---- blow-up ---- */
cg_status cg_blowup_claims_json(const char* marked_point, int depth, char** report_out);

/* ---- orbits and witnesses ---- */
cg_status cg_orbit_csv(const cg_system* sys, const char* point, long budget, char** csv_out);
cg_status cg_orbit_gap_json(const cg_system* sys, const char* point, long budget,
                            const char* window_lo, const char* window_hi, char** report_out);
/* set_json: [[lo,hi],...] closed intervals; into_json: [lo,hi] open */
cg_status cg_witness_cotrans_json(const cg_system* sys, const char* set_json,
                                  const char* into_json, int depth, char** report_out);
cg_status cg_witness_higman_json(const cg_system* sys, const char* r_word, const char* s_word,
                                 const char* t_word, int depth, char** report_out);
cg_status cg_witness_agree_json(const cg_system* sys, const char* g_word, const char* set_json,
                                int depth, char** report_out);

/* ---- relators ---- */
/* family: "F" | "Fn" (uses n and bound) | "lamplighter" (uses n as the
 * translation step and bound as kmax) */
cg_status cg_relators_json(const char* family, int n, int bound, char** words_out);
cg_status cg_check_relators_json(const char* relators_json, const cg_system* assignment,
                                 char** report_out);

/* ---- figures ---- */
cg_status cg_plot_svg(const char* input_json, int include_graphs, char** svg_out);

#ifdef __cplusplus
}
#endif

#endif /* CHAINGROUP_H */
