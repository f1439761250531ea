#ifndef QCLC_H
#define QCLC_H

#include <stddef.h>
#include <stdint.h>

#if defined(QCLC_BUILDING)
#define QCLC_API __attribute__((visibility("default")))
#else
#define QCLC_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  QCLC_OK = 0,
  QCLC_ERR_DOMAIN = 1,    /* invalid input: malformed file, violated precondition */
  QCLC_ERR_ARGUMENT = 2,  /* null handle or out-of-range argument */
  QCLC_ERR_INTERNAL = 3   /* an internal consistency check failed */
} qclc_status;

typedef struct qclc_matrix qclc_matrix;
typedef struct qclc_circuit qclc_circuit;
/* A Tanner graph, optionally with a bit-check symmetry witness. */
typedef struct qclc_graph qclc_graph;

/* Message of the last failed call on this thread; "" after a success. */
QCLC_API const char* qclc_last_error(void);
/* Strings returned through char** are owned by the caller. */
QCLC_API void qclc_string_free(char* s);

/* ---- matrices: "<rows> <cols>" then 0/1 rows; .alist paths use alist */
QCLC_API qclc_status qclc_matrix_new(size_t rows, size_t cols, qclc_matrix** out);
QCLC_API qclc_status qclc_matrix_parse(const char* text, qclc_matrix** out);
QCLC_API qclc_status qclc_matrix_load(const char* path, qclc_matrix** out);
QCLC_API qclc_status qclc_matrix_save(const qclc_matrix* m, const char* path);
QCLC_API qclc_status qclc_matrix_text(const qclc_matrix* m, char** out);
QCLC_API size_t qclc_matrix_rows(const qclc_matrix* m);
QCLC_API size_t qclc_matrix_cols(const qclc_matrix* m);
QCLC_API int qclc_matrix_get(const qclc_matrix* m, size_t r, size_t c);
QCLC_API qclc_status qclc_matrix_set(qclc_matrix* m, size_t r, size_t c, int v);
QCLC_API void qclc_matrix_free(qclc_matrix* m);

/* ---- circuits */
QCLC_API qclc_status qclc_circuit_parse(const char* text, qclc_circuit** out);
QCLC_API qclc_status qclc_circuit_load(const char* path, qclc_circuit** out);
QCLC_API qclc_status qclc_circuit_text(const qclc_circuit* c, char** out);
QCLC_API int qclc_circuit_qubits(const qclc_circuit* c);
QCLC_API int qclc_circuit_depth(const qclc_circuit* c);
QCLC_API void qclc_circuit_free(qclc_circuit* c);

/* ---- Tanner graphs; files are <prefix>.A, <prefix>.labels, <prefix>.D */
QCLC_API qclc_status qclc_graph_build_plain(const qclc_circuit* c, qclc_graph** out);
/* `splits` (optional) receives the number of bit splits applied. */
QCLC_API qclc_status qclc_graph_symmetrize(const qclc_circuit* c, qclc_graph** out, int* splits);
/* A check matrix with generic labels; `dual` (optional) is a bits × checks D. */
QCLC_API qclc_status qclc_graph_from_matrix(const qclc_matrix* a, const qclc_matrix* dual, qclc_graph** out);
QCLC_API qclc_status qclc_graph_load(const char* prefix, qclc_graph** out);
QCLC_API qclc_status qclc_graph_save(const qclc_graph* g, const char* prefix);
QCLC_API size_t qclc_graph_bits(const qclc_graph* g);
QCLC_API size_t qclc_graph_checks(const qclc_graph* g);
QCLC_API size_t qclc_graph_max_degree(const qclc_graph* g);
QCLC_API int qclc_graph_has_witness(const qclc_graph* g);
QCLC_API qclc_status qclc_graph_matrix(const qclc_graph* g, qclc_matrix** out);
QCLC_API qclc_status qclc_graph_dot(const qclc_graph* g, char** out);
QCLC_API void qclc_graph_free(qclc_graph* g);

/* ---- codewords */
/* One line per kernel-basis codeword (class, σ_in, σ_out, relevant
   measurements) followed by the dimensions of the codeword subspaces. */
QCLC_API qclc_status qclc_classify(const qclc_graph* g, char** report);
/* s_in / s_out: comma-separated Pauli strings over the graph's qubits,
   "" for the trivial group. */
QCLC_API qclc_status qclc_ec_matrices(const qclc_graph* g, const char* s_in, const char* s_out, qclc_matrix** b,
                                      qclc_matrix** l);

/* ---- distances */
typedef struct {
  int found;        /* exact value with a witness */
  int lower_bound;  /* cap reached: value is max_weight + 1 */
  size_t value;
  size_t max_weight;
  uint64_t enumerated;
} qclc_distance_info;

/* `witness` (optional) receives the witness as a 0/1 string when found;
   `reduced` merges identical columns first. */
QCLC_API qclc_status qclc_circuit_distance(const qclc_matrix* b, const qclc_matrix* l, size_t max_weight,
                                           unsigned jobs, int reduced, qclc_distance_info* info, char** witness);
QCLC_API qclc_status qclc_css_distance(const qclc_matrix* gx, const qclc_matrix* gz, size_t max_weight,
                                       unsigned jobs, qclc_distance_info* d_x, qclc_distance_info* d_z);
/* "3", ">= 7" or "inf" */
QCLC_API qclc_status qclc_distance_text(const qclc_distance_info* info, char** out);

/* ---- codeword equations */
typedef struct {
  size_t codewords;
  size_t runs;
  size_t failures;
} qclc_verify_summary;
QCLC_API qclc_status qclc_verify(const qclc_circuit* c, uint64_t seed, int states, int random_errors,
                                 int max_error_weight, qclc_verify_summary* summary, char** report);

/* ---- symmetric splitting; plan text as in `pair <bit> <check> : ...` lines,
   NULL for the degree-reducing plan.  With max_weight > 0 the distance bound
   is checked and described in `report` (optional); *bound_ok receives the
   verdict (1 when not checked). */
QCLC_API qclc_status qclc_split(const qclc_graph* g, const char* plan, size_t max_weight, unsigned jobs,
                                qclc_graph** out, char** plan_used, char** report, int* bound_ok);

/* ---- synthesis; partition text as in `path`/`tau` lines, NULL for the
   greedy partition (or the trivial one when `trivial` is set). */
QCLC_API qclc_status qclc_synthesize(const qclc_graph* g, const char* partition, int trivial, qclc_circuit** out,
                                     char** partition_used, char** schedule);
/* Round-trip check (code isomorphism, boundary Paulis, gate count, distance
   bound at max_weight); *ok receives the verdict. */
QCLC_API qclc_status qclc_roundtrip(const qclc_graph* g, const char* partition, int trivial, size_t max_weight,
                                    unsigned jobs, int* ok, char** report);

/* ---- CSS transversal circuits; layer is "rep:<m>" or "cnot" */
QCLC_API qclc_status qclc_css_gen(const qclc_matrix* gx, const qclc_matrix* gz, const char* layer, qclc_graph** graph,
                                  qclc_matrix** b, qclc_matrix** l);

#ifdef __cplusplus
}
#endif

#endif
