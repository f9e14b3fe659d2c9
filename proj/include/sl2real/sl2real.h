/* C interface to the sl2real library: equivariant real structures on
 * almost homogeneous SL2(C)-threefolds, over exact cyclotomic arithmetic.
 *
 * Conventions:
 *   - every function returns an slr_status; results come back through
 *     out-parameters;
 *   - all returned strings are heap-allocated by the library and must be
 *     released with slr_string_free;
 *   - on failure, slr_last_error() returns a thread-local description of
 *     what went wrong;
 *   - handles are opaque and freed with their slr_*_free function.
 *
 * Structured results are JSON strings with stable schemas and sorted
 * keys; set SL2_JSON_PRETTY=1 in the environment for indented output.
 */
#ifndef SL2REAL_H
#define SL2REAL_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum slr_status {
  SLR_OK = 0,
  SLR_ERR_NULL_ARG = 1,   /* a required pointer argument was NULL */
  SLR_ERR_BAD_LABEL = 2,  /* not one of An (n>=1), Dn (n>=4), E6, E7, E8 */
  SLR_ERR_BAD_SIGMA = 3,  /* not "split" or "compact" */
  SLR_ERR_BAD_MATRIX = 4, /* unparsable twist token or matrix JSON */
  SLR_ERR_PARSE = 5,      /* malformed JSON input */
  SLR_ERR_DOMAIN = 6,     /* valid syntax, out-of-domain value */
  SLR_ERR_INTERNAL = 7
} slr_status;

/* An enumerated finite subgroup of SL2(C) together with its normalizer
 * quotient and colored equipment. */
typedef struct slr_group slr_group;
/* A candidate equivariant embedding (a set of orbit records). */
typedef struct slr_embedding slr_embedding;

void slr_string_free(char* s);
const char* slr_status_name(slr_status st);
/* Thread-local message describing the most recent failure. */
const char* slr_last_error(void);

/* ---- groups and equipment ---- */

slr_status slr_group_create(const char* label, slr_group** out);
void slr_group_free(slr_group* g);
slr_status slr_group_order(const slr_group* g, int* out);
/* {"label", "order", "generators", "normalizer": {"kind", "quotient_order"}} */
slr_status slr_group_info_json(const slr_group* g, char** json_out);
/* {"label", "generic": {"size", "b"}, "special": [{"rep", "size", "b"}]} */
slr_status slr_diagram_json(const slr_group* g, char** json_out);
slr_status slr_diagram_ascii(const slr_group* g, char** text_out);

/* ---- real structures on G/H ---- */

/* sigma is "split" or "compact"; twist is a named token ("I2", "-I2",
 * "e", "f", "d", "omegaN", products like "e*omega12") or a 2x2 matrix in
 * JSON. */
slr_status slr_h1_json(const slr_group* g, const char* sigma, char** json_out);
slr_status slr_structure_check_json(const slr_group* g, const char* sigma,
                                    const char* twist, char** json_out);

/* ---- embeddings and descent ---- */

slr_status slr_embedding_parse(const char* json, slr_embedding** out);
void slr_embedding_free(slr_embedding* e);
slr_status slr_embedding_group_label(const slr_embedding* e, char** label_out);
/* validity report plus completeness/quasiprojectivity flags */
slr_status slr_embedding_check_json(const slr_embedding* e, char** json_out);
/* verdict for extending the structure to the embedding: outcome is
 * not_preserved, extends_not_effective, or extends_effective */
slr_status slr_extend_json(const slr_embedding* e, const char* sigma,
                           const char* twist, char** json_out);

/* ---- table reproduction ---- */

/* which is "h1", "extensions", "structures" or "all"; *all_match is set
 * to 1 iff every row of every requested table matches. */
slr_status slr_reproduce_json(const char* which, int* all_match,
                              char** json_out);

#ifdef __cplusplus
}
#endif

#endif /* SL2REAL_H */
