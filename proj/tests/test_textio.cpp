// Copyright (c) 2026 The orefactor authors.
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "textio.hpp"
#include "testutil.hpp"

using namespace orefactor;
using testutil::random_op;

namespace {

FqPoly poly_of(const Field& F, std::initializer_list<long long> coeffs) {
    FqPoly out;
    for (auto c : coeffs) out.c.push_back(F.from_int(c));
    poly_trim(out);
    return out;
}

RatFun rf_of(const Field& F, std::initializer_list<long long> num,
             std::initializer_list<long long> den = {1}) {
    return rf_make(F, poly_of(F, num), poly_of(F, den));
}

}  // namespace

TEST_CASE("parsing spot checks") {
    Field F5(5, 1);
    // D*x = x*D + 1 (Leibniz at parse time)
    OreOp dx = parse_operator(F5, "D*x");
    OreOp expect;
    expect.c = {rf_one(), rf_of(F5, {0, 1})};
    CHECK(dx == expect);

    OreOp big = parse_operator(F5, "(x^2+1)*D^2 + x*D + 3");
    CHECK(big.ord() == 2);
    CHECK(big.c[2] == rf_of(F5, {1, 0, 1}));
    CHECK(big.c[1] == rf_of(F5, {0, 1}));
    CHECK(big.c[0] == rf_of(F5, {3}));

    Field F2(2, 1);
    OreOp schroedinger = parse_operator(F2, "D^2 - 1/x^2");
    CHECK(schroedinger.c[0] == rf_of(F2, {1}, {0, 0, 1}));
    CHECK(schroedinger.c[2] == rf_one());

    // integers reduce mod p
    CHECK(parse_operator(F5, "7") == parse_operator(F5, "2"));
    // whitespace is free
    CHECK(parse_operator(F5, " D ^ 2 - D ") == parse_operator(F5, "D^2-D"));
}

TEST_CASE("syntax errors carry positions") {
    Field F(5, 1);
    CHECK_THROWS_AS(parse_operator(F, "D +"), error);
    CHECK_THROWS_AS(parse_operator(F, "(D"), error);
    CHECK_THROWS_AS(parse_operator(F, "D)"), error);
    CHECK_THROWS_AS(parse_operator(F, "y + 1"), error);
    CHECK_THROWS_AS(parse_operator(F, "1/0"), error);
    CHECK_THROWS_AS(parse_operator(F, "1/(D)"), error);
    try {
        parse_operator(F, "x + $");
        FAIL("expected syntax error");
    } catch (const error& e) {
        CHECK(e.code() == errc::syntax_error);
        CHECK(e.pos() == 4);
    }
    // D is rejected in rational function context
    CHECK_THROWS_AS(parse_ratfun(F, "D + 1"), error);
    CHECK(parse_ratfun(F, "x^2/(x+1)") == rf_of(F, {0, 0, 1}, {1, 1}));
}

TEST_CASE("z constants over extension fields") {
    Field F4(2, 2);
    OreOp op = parse_operator(F4, "(z+1)*D + z");
    CHECK(op.c[1] == rf_const(F4.add(F4.gen(), 1)));
    CHECK(op.c[0] == rf_const(F4.gen()));
    CHECK(op_to_string(F4, op) == "(z+1)*D + z");

    Field F5(5, 1);
    CHECK_THROWS_AS(parse_operator(F5, "z + 1"), error);
}

TEST_CASE("canonical printing examples") {
    Field F5(5, 1);
    CHECK(op_to_string(F5, parse_operator(F5, "D^2 - D")) == "D^2 + 4*D");
    CHECK(op_to_string(F5, parse_operator(F5, "0")) == "0");
    CHECK(op_to_string(F5, parse_operator(F5, "D*x")) == "x*D + 1");
    CHECK(op_to_string(F5, parse_operator(F5, "1/x*D + (x+1)/(x^2+x)")) ==
          "1/x*D + 1/x");
    CHECK(ratfun_to_string(F5, rf_of(F5, {1, 1}, {0, 0, 1})) == "(x + 1)/x^2");

    Field F2(2, 1);
    CHECK(op_to_string(F2, parse_operator(F2, "D^2 - 1/x^2")) == "D^2 + 1/x^2");
}

TEST_CASE("print/parse round trip on random operators") {
    for (auto [p, k] : {std::pair<unsigned, unsigned>{2, 1}, {3, 1}, {5, 1}, {2, 2}}) {
        Field F(p, k);
        std::mt19937_64 rng(606 + p * 10 + k);
        for (int i = 0; i < 40; ++i) {
            OreOp l = random_op(F, rng, 3, 2);
            std::string s = op_to_string(F, l);
            CHECK(parse_operator(F, s) == l);
            CHECK(op_to_string(F, parse_operator(F, s)) == s);
        }
    }
}

TEST_CASE("ypoly printing uses t and Y") {
    Field F(3, 1);
    YPoly n = YPoly::y();
    n.c[0] = rf_neg(F, rf_make(F, poly_of(F, {0, 1}), poly_of(F, {1, 1})));
    CHECK(ypoly_to_string(F, n) == "Y + 2*t/(t + 1)");
}

TEST_CASE("divisor printing") {
    Field F(3, 1);
    Divisor d;
    d.add(Place::finite(poly_of(F, {0, 1})), 2);
    d.add(Place::infinity(), 1);
    CHECK(divisor_to_string(F, d) == "2*(x) + 1*inf");
    CHECK(divisor_to_string(F, Divisor{}) == "0");
}

TEST_CASE("field specs") {
    CHECK(parse_field_spec("GF(5)") == std::pair<unsigned, unsigned>{5, 1});
    CHECK(parse_field_spec("GF(2^4)") == std::pair<unsigned, unsigned>{2, 4});
    CHECK_THROWS_AS(parse_field_spec("GF()"), error);
    CHECK_THROWS_AS(parse_field_spec("5"), error);
    Field F(7, 2);
    CHECK(field_to_string(F) == "GF(7^2)");
    CHECK(field_to_string(Field(7, 1)) == "GF(7)");
}
