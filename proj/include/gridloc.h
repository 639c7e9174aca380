#ifndef GRIDLOC_H
#define GRIDLOC_H

/*
 * gridloc - exact grid drawings of graphs: locatability, column
 * embeddings, mixed colorings and proper planar drawings.
 *
 * Every operation takes and returns JSON documents (unbounded integers as
 * decimal strings) through an opaque result handle. Results own their
 * memory; release them with gridloc_result_free. The library keeps no
 * global state, so concurrent calls from different threads are safe.
 */

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gridloc_status {
  GRIDLOC_OK = 0,           /* computed; output() holds the document  */
  GRIDLOC_NONE = 1,         /* decision is "false" / object does not exist */
  GRIDLOC_ERR_INPUT = 2,    /* malformed or out-of-contract input */
  GRIDLOC_ERR_BUDGET = 3,   /* exact search exceeded its budget */
  GRIDLOC_ERR_INTERNAL = 4  /* failed self-certification */
} gridloc_status;

typedef struct gridloc_result gridloc_result;

gridloc_status gridloc_result_status(const gridloc_result* r);
/* JSON or SVG text; NULL when the call produced no document. */
const char* gridloc_result_output(const gridloc_result* r);
/* Human-readable error; NULL unless status is an error. */
const char* gridloc_result_error(const gridloc_result* r);
void gridloc_result_free(gridloc_result* r);

const char* gridloc_version(void);

/* ---- verification ------------------------------------------------- */

/* check is one of "valid", "planar", "proper". Output:
 * {"check": ..., "result": true|false, "gp": "<decimal>"} */
gridloc_result* gridloc_verify(const char* drawing_json, const char* check);

/* Output: {"gp": "<decimal>"} (0 for edgeless graphs). */
gridloc_result* gridloc_gp(const char* drawing_json);

/* Output: {"columns": [{"rank": [...], "vertices": [...]}, ...]} */
gridloc_result* gridloc_column_ranks(const char* drawing_json);

/* Exhaustive minimum gp over valid drawings in [0,box]^2 (n <= 5,
 * box <= 4). Output: {"min_gp": <int>} or status NONE when no valid
 * drawing fits the box. */
gridloc_result* gridloc_min_gp_bruteforce(const char* graph_json, long box);

/* ---- locatability -------------------------------------------------- */

/* Drawing with gp <= q in Z^d from a proper coloring with at most q^d
 * colors; when coloring_json is NULL an exact q^d-coloring is searched
 * first (status NONE when the graph is not q^d-colorable). */
gridloc_result* gridloc_locate(const char* graph_json,
                               const char* coloring_json, long q, long d);

gridloc_result* gridloc_modular_coloring(const char* drawing_json, long q);

/* Column family of size s in dimension d. fixup_primes_json is a JSON
 * array of primes >= s, or NULL to compute exactly the needed set. */
gridloc_result* gridloc_columns_family(long s, long d,
                                       const char* fixup_primes_json);

/* ---- column embeddings --------------------------------------------- */

gridloc_result* gridloc_embed_columns(const char* graph_json,
                                      const char* partition_json);
gridloc_result* gridloc_locate_columns(const char* graph_json,
                                       const char* partition_json, long d);
gridloc_result* gridloc_partition_from_located(const char* drawing_json,
                                               long d, long l);
gridloc_result* gridloc_transfer_to_plane(const char* drawing_json);

/* ---- mixed colorings ------------------------------------------------ */

/* Exact (a,b)-coloring; status NONE carries a certified "not colorable". */
gridloc_result* gridloc_mixed_color(const char* graph_json, long normal_colors,
                                    long path_colors);

/* Independent brute-force oracle for the same decision. */
gridloc_result* gridloc_mixed_color_oracle(const char* graph_json,
                                           long normal_colors,
                                           long path_colors);

gridloc_result* gridloc_reduce_cliques(const char* graph_json,
                                       long normal_colors, long path_colors);

/* variant: "one-in-three" or "nae"; NULL picks the DIMACS header comment. */
gridloc_result* gridloc_formula_graph(const char* dimacs_text,
                                      const char* variant);

/* Exact chromatic number with witness:
 * {"chi": <int>, "coloring": {...}} */
gridloc_result* gridloc_chromatic(const char* graph_json);

/* ---- proper planar drawings ----------------------------------------- */

/* Proper (valid + planar + gp = 2) drawing of a planar graph. With
 * with_report != 0 the output carries a "report" object (width, height,
 * prime count, modulus). */
gridloc_result* gridloc_proper(const char* graph_json, int with_report);

/* ---- rendering ------------------------------------------------------ */

gridloc_result* gridloc_render_svg(const char* drawing_json);

#ifdef __cplusplus
}
#endif

#endif /* GRIDLOC_H */
