// Copyright (c) 2026 The orefactor authors.
// SPDX-License-Identifier: Apache-2.0
//
// Exercises the shared-library surface the way an external client would:
// only orefactor.h, opaque handles and status codes.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>

#include "orefactor.h"

namespace {

std::string take(char* s) {
    std::string out = s ? s : "";
    orf_string_free(s);
    return out;
}

struct Field {
    orf_field* f = nullptr;
    Field(unsigned p, unsigned k, uint64_t seed = 0) {
        REQUIRE(orf_field_new(p, k, seed, &f) == ORF_OK);
    }
    ~Field() { orf_field_free(f); }
};

struct Op {
    orf_op* op = nullptr;
    Op() = default;
    Op(const Field& f, const char* text) {
        REQUIRE(orf_op_parse(f.f, text, &op) == ORF_OK);
    }
    Op(const Op&) = delete;
    ~Op() { orf_op_free(op); }
};

}  // namespace

TEST_CASE("field lifecycle and errors") {
    Field f(5, 1);
    CHECK(orf_field_p(f.f) == 5);
    CHECK(orf_field_k(f.f) == 1);
    char* spec = nullptr;
    CHECK(orf_field_spec(f.f, &spec) == ORF_OK);
    CHECK(take(spec) == "GF(5)");
    char* mod = nullptr;
    CHECK(orf_field_modulus(f.f, &mod) == ORF_OK);
    CHECK(take(mod) == "z");

    Field f4(2, 2);
    CHECK(orf_field_modulus(f4.f, &mod) == ORF_OK);
    CHECK(take(mod) == "z^2 + z + 1");

    orf_field* bad = nullptr;
    CHECK(orf_field_new(4, 1, 0, &bad) == ORF_ERR_ARGUMENT);
    CHECK(std::string(orf_last_error()).find("prime") != std::string::npos);
    CHECK(orf_field_new(17, 1, 0, &bad) == ORF_ERR_ARGUMENT);
}

TEST_CASE("operator parse, print, arithmetic") {
    Field f(5, 1);
    Op a(f, "D^2 - D");
    CHECK(orf_op_order(a.op) == 2);
    char* s = nullptr;
    CHECK(orf_op_to_string(a.op, &s) == ORF_OK);
    CHECK(take(s) == "D^2 + 4*D");

    Op d(f, "D");
    Op dm1(f, "D - 1");
    orf_op* g = nullptr;
    CHECK(orf_op_gcrd(a.op, d.op, &g) == ORF_OK);
    CHECK(orf_op_order(g) == 1);
    orf_op_free(g);

    orf_op* m = nullptr;
    CHECK(orf_op_lclm(d.op, dm1.op, &m) == ORF_OK);
    CHECK(orf_op_equal(m, a.op) == 1);
    orf_op_free(m);

    orf_op* s2 = nullptr;
    CHECK(orf_op_add(a.op, d.op, &s2) == ORF_OK);
    char* s2text = nullptr;
    CHECK(orf_op_to_string(s2, &s2text) == ORF_OK);
    CHECK(take(s2text) == "D^2");
    orf_op_free(s2);

    orf_op* bad = nullptr;
    CHECK(orf_op_parse(f.f, "D +", &bad) == ORF_ERR_SYNTAX);

    // mismatched fields are rejected
    Field f2(3, 1);
    Op b(f2, "D");
    orf_op* c = nullptr;
    CHECK(orf_op_mul(a.op, b.op, &c) == ORF_ERR_ARGUMENT);
}

TEST_CASE("rational functions and coefficients") {
    Field f(5, 1);
    orf_ratfun* r = nullptr;
    CHECK(orf_ratfun_parse(f.f, "(x+1)/x^2", &r) == ORF_OK);
    CHECK(orf_ratfun_num_degree(r) == 1);
    CHECK(orf_ratfun_den_degree(r) == 2);
    CHECK(orf_ratfun_num_coeff(r, 0) == 1);
    CHECK(orf_ratfun_num_coeff(r, 1) == 1);
    CHECK(orf_ratfun_den_coeff(r, 2) == 1);
    char* s = nullptr;
    CHECK(orf_ratfun_to_string(r, &s) == ORF_OK);
    CHECK(take(s) == "(x + 1)/x^2");
    orf_ratfun_free(r);

    Op a(f, "x*D + 3");
    orf_ratfun* c1 = nullptr;
    CHECK(orf_op_coeff(a.op, 1, &c1) == ORF_OK);
    CHECK(orf_ratfun_num_coeff(c1, 1) == 1);
    orf_ratfun_free(c1);
}

TEST_CASE("p-curvature, charpoly, charfactor") {
    Field f(3, 1);
    Op a(f, "D^2 - D");
    orf_matrix* m = nullptr;
    CHECK(orf_pcurvature(a.op, &m) == ORF_OK);
    CHECK(orf_matrix_size(m) == 2);
    CHECK(std::string(orf_matrix_entry(m, 0, 0)) == "0");
    orf_matrix_free(m);

    char* chi = nullptr;
    CHECK(orf_charpoly(a.op, &chi) == ORF_OK);
    CHECK(take(chi) == "Y^2 + 2*Y");

    orf_central_factors* cf = nullptr;
    CHECK(orf_charfactor(a.op, &cf) == ORF_OK);
    REQUIRE(orf_central_factors_count(cf) == 2);
    CHECK(std::string(orf_central_factors_poly(cf, 0)) == "Y");
    CHECK(orf_central_factors_multiplicity(cf, 0) == 1);
    CHECK(std::string(orf_central_factors_poly(cf, 1)) == "Y + 2");
    orf_central_factors_free(cf);
}

TEST_CASE("factorization round trip through the C API") {
    Field f(3, 1);
    Op a(f, "D^3 - x^3");
    orf_factorization* fac = nullptr;
    REQUIRE(orf_factor(a.op, 1, &fac) == ORF_OK);
    CHECK(orf_factorization_complete(fac) == 1);
    REQUIRE(orf_factorization_size(fac) == 3);

    Op prod(f, "1");
    orf_op* acc = prod.op;
    prod.op = nullptr;
    for (size_t i = 0; i < 3; ++i) {
        orf_op* fi = nullptr;
        REQUIRE(orf_factorization_factor(fac, i, &fi) == ORF_OK);
        CHECK(orf_op_order(fi) == 1);
        CHECK(std::string(orf_factorization_certificate(fac, i)) == "order-one");
        orf_op* next = nullptr;
        REQUIRE(orf_op_mul(acc, fi, &next) == ORF_OK);
        orf_op_free(acc);
        orf_op_free(fi);
        acc = next;
    }
    orf_ratfun* unit = nullptr;
    REQUIRE(orf_factorization_unit(fac, &unit) == ORF_OK);
    orf_op* full = nullptr;
    REQUIRE(orf_op_mul_ratfun(unit, acc, &full) == ORF_OK);
    CHECK(orf_op_equal(full, a.op) == 1);
    orf_op_free(full);
    orf_op_free(acc);
    orf_ratfun_free(unit);
    orf_factorization_free(fac);
}

TEST_CASE("unsupported factorization returns a partial chain and exit-worthy status") {
    Field f(3, 1);
    Op a(f, "D^3 - x");
    orf_factorization* fac = nullptr;
    CHECK(orf_factor(a.op, 1, &fac) == ORF_ERR_UNSUPPORTED);
    REQUIRE(fac != nullptr);
    CHECK(orf_factorization_complete(fac) == 0);
    CHECK(orf_factorization_size(fac) == 1);
    CHECK(std::string(orf_factorization_certificate(fac, 0)) == "unsupported");
    orf_factorization_free(fac);
}

TEST_CASE("irreducibility queries") {
    Field f(2, 1);
    Op a(f, "D^2 + 1/x^2");
    int irr = 0;
    char* cert = nullptr;
    orf_op* witness = nullptr;
    CHECK(orf_is_irreducible(a.op, &irr, &cert, &witness) == ORF_OK);
    CHECK(irr == 1);
    CHECK(take(cert) == "p-riccati-unsolvable");
    CHECK(witness == nullptr);

    Field f5(5, 1);
    Op b(f5, "D^2 - D");
    CHECK(orf_is_irreducible(b.op, &irr, &cert, &witness) == ORF_OK);
    CHECK(irr == 0);
    CHECK(take(cert) != "");
    REQUIRE(witness != nullptr);
    CHECK(orf_op_order(witness) == 1);
    orf_op_free(witness);
}

TEST_CASE("p-Riccati endpoint") {
    Field f(3, 1);
    int solvable = 0;
    orf_ratfun* sol = nullptr;
    char* bound = nullptr;
    CHECK(orf_riccati(f.f, "x^3", &solvable, &sol, &bound) == ORF_OK);
    CHECK(solvable == 1);
    char* s = nullptr;
    CHECK(orf_ratfun_to_string(sol, &s) == ORF_OK);
    CHECK(take(s) == "x");
    CHECK(take(bound) == "1*inf");  // degree bound at infinity
    orf_ratfun_free(sol);

    Field f2(2, 1);
    CHECK(orf_riccati(f2.f, "1/x^2", &solvable, &sol, &bound) == ORF_OK);
    CHECK(solvable == 0);
    CHECK(sol == nullptr);
    CHECK(take(bound) == "1*(x) + 0*inf");

    // nonconstant y is a math error
    CHECK(orf_riccati(f.f, "x", &solvable, &sol, &bound) == ORF_ERR_MATH);
}
