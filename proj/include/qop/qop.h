/* C interface to the quasi-ordinary Poincare series engine. */
#ifndef QOP_QOP_H
#define QOP_QOP_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined(QOP_BUILDING)
#define QOP_API __attribute__((visibility("default")))
#else
#define QOP_API
#endif

typedef struct qop_germ qop_germ;

typedef enum {
  QOP_OK = 0,
  QOP_ERR_PARSE = 1,      /* unreadable file or malformed JSON */
  QOP_ERR_VALIDATION = 2, /* exponents or arguments rejected */
  QOP_ERR_HYPOTHESIS = 3, /* closed form needs a_i(1) >= 1 */
  QOP_ERR_BUDGET = 4,     /* oracle run refused or over budget */
  QOP_ERR_MATH = 5,       /* arithmetic domain error */
  QOP_ERR_INTERNAL = 6,
  QOP_ERR_ARGUMENT = 7    /* null pointer or bad enum */
} qop_status;

typedef enum { QOP_GEOM = 0, QOP_ARIT = 1 } qop_kind;

/* Message for the last failing call on this thread; never NULL. */
QOP_API const char* qop_last_error(void);
QOP_API const char* qop_status_name(int status);

/* Strings returned through char** out-parameters are owned by the caller. */
QOP_API void qop_string_free(char* s);

QOP_API int qop_germ_load_file(const char* path, qop_germ** out);
QOP_API int qop_germ_parse(const char* json_text, qop_germ** out);
/* Exponents as fraction strings, row-major g x m, user variable order. */
QOP_API int qop_germ_from_exponents(const char* const* entries, int g, int m, qop_germ** out);
QOP_API void qop_germ_free(qop_germ* g);

QOP_API int qop_germ_dims(const qop_germ* g, int* m, int* levels, long* n);
QOP_API int qop_germ_has_polynomial(const qop_germ* g);

/* JSON object with the derived invariants and a Hermite basis of Ker M. */
QOP_API int qop_germ_info(const qop_germ* g, char** json_out);

/* JSON array of coefficient renderings for orders 0..order. */
QOP_API int qop_series(const qop_germ* g, int kind, long order, int jobs, char** json_out);

/* JSON object: rendering, denominator factors, candidate and genuine poles. */
QOP_API int qop_closed_form(const qop_germ* g, int kind, char** json_out);

/* Rendering of a coefficient evaluated at L = x (x given as "p/q"). */
QOP_API int qop_series_eval(const qop_germ* g, int kind, long order, const char* x, char** out);

/* Cross-route checks; *passed receives 1 or 0. */
QOP_API int qop_verify(const qop_germ* g, long order, int jobs, char** json_out, int* passed);

/* Finite-field comparison. budget <= 0 keeps the default node budget and
 * envelope; a positive budget sets the node limit and lifts the envelope.
 * depth <= 0 picks the largest depth the envelope allows. */
QOP_API int qop_ffcheck(const qop_germ* g, long q, long pmax, long depth, long budget, int jobs,
                        char** json_out, int* passed);

#ifdef __cplusplus
}
#endif

#endif /* QOP_QOP_H */
