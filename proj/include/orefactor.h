/*
 * Copyright (c) 2026 The orefactor authors.
 * SPDX-License-Identifier: Apache-2.0
 *
 * C interface of liborefactor: exact factorization of linear differential
 * operators with rational function coefficients over small finite fields.
 *
 * All objects are opaque handles; every fallible call returns an orf_status
 * and the last error message is available from orf_last_error(). Strings
 * returned through char** are heap-allocated; release them with
 * orf_string_free().
 */

#ifndef OREFACTOR_H
#define OREFACTOR_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum orf_status {
    ORF_OK = 0,
    ORF_ERR_ARGUMENT = 1,    /* bad handle, mismatched fields, bad parameters */
    ORF_ERR_SYNTAX = 2,      /* unparseable expression */
    ORF_ERR_MATH = 3,        /* division by zero, inexact division, ... */
    ORF_ERR_UNSUPPORTED = 4, /* central field out of the supported scope */
    ORF_ERR_INTERNAL = 5,
} orf_status;

typedef struct orf_field orf_field;
typedef struct orf_op orf_op;
typedef struct orf_ratfun orf_ratfun;
typedef struct orf_factorization orf_factorization;
typedef struct orf_matrix orf_matrix;
typedef struct orf_central_factors orf_central_factors;

const char* orf_last_error(void);
void orf_string_free(char* s);

/* ------------------------------------------------------------------ */
/* fields                                                              */

/* F_{p^k}, p prime <= 13, with the lexicographically smallest modulus */
orf_status orf_field_new(unsigned p, unsigned k, uint64_t seed, orf_field** out);
void orf_field_free(orf_field* f);
orf_status orf_field_spec(const orf_field* f, char** out); /* "GF(p^k)" */
/* the defining modulus of F_{p^k}, printed as a polynomial in z */
orf_status orf_field_modulus(const orf_field* f, char** out);
unsigned orf_field_p(const orf_field* f);
unsigned orf_field_k(const orf_field* f);

/* ------------------------------------------------------------------ */
/* operators and rational functions                                    */

orf_status orf_op_parse(const orf_field* f, const char* text, orf_op** out);
void orf_op_free(orf_op* op);
orf_status orf_op_to_string(const orf_op* op, char** out);
int orf_op_order(const orf_op* op); /* -1 for the zero operator */
int orf_op_equal(const orf_op* a, const orf_op* b);
orf_status orf_op_add(const orf_op* a, const orf_op* b, orf_op** out);
orf_status orf_op_mul(const orf_op* a, const orf_op* b, orf_op** out);
orf_status orf_op_gcrd(const orf_op* a, const orf_op* b, orf_op** out);
orf_status orf_op_lclm(const orf_op* a, const orf_op* b, orf_op** out);
orf_status orf_op_mul_ratfun(const orf_ratfun* u, const orf_op* a, orf_op** out);
/* coefficient of D^i as a rational function (zero when i > order) */
orf_status orf_op_coeff(const orf_op* op, unsigned i, orf_ratfun** out);

orf_status orf_ratfun_parse(const orf_field* f, const char* text, orf_ratfun** out);
void orf_ratfun_free(orf_ratfun* r);
orf_status orf_ratfun_to_string(const orf_ratfun* r, char** out);
/* dense coefficients as packed base-field integers (sum c_i p^i) */
int orf_ratfun_num_degree(const orf_ratfun* r); /* -1 for zero */
int orf_ratfun_den_degree(const orf_ratfun* r);
uint64_t orf_ratfun_num_coeff(const orf_ratfun* r, unsigned i);
uint64_t orf_ratfun_den_coeff(const orf_ratfun* r, unsigned i);

/* ------------------------------------------------------------------ */
/* p-curvature and its characteristic polynomial                       */

orf_status orf_pcurvature(const orf_op* op, orf_matrix** out);
void orf_matrix_free(orf_matrix* m);
int orf_matrix_size(const orf_matrix* m);
const char* orf_matrix_entry(const orf_matrix* m, int row, int col);

/* characteristic polynomial of the p-curvature, printed in t and Y */
orf_status orf_charpoly(const orf_op* op, char** out);

/* its irreducible factorization over F_q(t) */
orf_status orf_charfactor(const orf_op* op, orf_central_factors** out);
void orf_central_factors_free(orf_central_factors* cf);
size_t orf_central_factors_count(const orf_central_factors* cf);
const char* orf_central_factors_poly(const orf_central_factors* cf, size_t i);
int orf_central_factors_multiplicity(const orf_central_factors* cf, size_t i);

/* ------------------------------------------------------------------ */
/* factorization                                                       */

/*
 * Complete factorization into certified irreducible right factors, listed
 * in product order: unit * factor[0] * ... * factor[n-1] = op. When a
 * central factor falls outside the supported scope the call returns
 * ORF_ERR_UNSUPPORTED and *out still carries the coarse partial chain
 * (orf_factorization_complete() == 0).
 */
orf_status orf_factor(const orf_op* op, unsigned threads, orf_factorization** out);
void orf_factorization_free(orf_factorization* f);
size_t orf_factorization_size(const orf_factorization* f);
orf_status orf_factorization_factor(const orf_factorization* f, size_t i, orf_op** out);
const char* orf_factorization_certificate(const orf_factorization* f, size_t i);
orf_status orf_factorization_unit(const orf_factorization* f, orf_ratfun** out);
int orf_factorization_complete(const orf_factorization* f);

orf_status orf_is_irreducible(const orf_op* op, int* irreducible, char** certificate,
                              orf_op** witness /* set when reducible, else NULL */);

/* ------------------------------------------------------------------ */
/* p-Riccati equation f^(p-1) + f^p = y                                */

orf_status orf_riccati(const orf_field* f, const char* y_text, int* solvable,
                       orf_ratfun** solution /* NULL when unsolvable */,
                       char** bound /* the pole bound divisor, printed */);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* OREFACTOR_H */
