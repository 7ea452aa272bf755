// Copyright (c) 2026 The orefactor authors.
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ratfun.hpp"
#include "testutil.hpp"

using namespace orefactor;
using testutil::random_ratfun;

namespace {

FqPoly poly_of(const Field& F, std::initializer_list<long long> coeffs) {
    FqPoly out;
    for (auto c : coeffs) out.c.push_back(F.from_int(c));
    poly_trim(out);
    return out;
}

RatFun rf_of(const Field& F, std::initializer_list<long long> num,
             std::initializer_list<long long> den) {
    return rf_make(F, poly_of(F, num), poly_of(F, den));
}

}  // namespace

TEST_CASE("valuations") {
    Field F(5, 1);
    RatFun f = rf_of(F, {1}, {1, -2, 1});  // 1/(x-1)^2
    CHECK(rf_valuation(F, f, Place::finite(poly_of(F, {-1, 1}))) == -2);

    RatFun g = rf_of(F, {1, 0, 0, 1}, {0, 1});  // x^2 + 1/x
    CHECK(rf_valuation(F, g, Place::infinity()) == -2);

    RatFun h = rf_of(F, {0, 0, 0, 1}, {1, 0, 0, 1});  // x^3/(x^3+1)
    CHECK(rf_valuation(F, h, Place::finite(poly_of(F, {0, 1}))) == 3);

    CHECK(rf_valuation(F, rf_zero(), Place::infinity()) == kValInfinity);
}

TEST_CASE("simple residues") {
    Field F(5, 1);
    RatFun f = rf_of(F, {1}, {-1, 1});  // 1/(x-1)
    CHECK(rf_residue(F, f, Place::finite(poly_of(F, {-1, 1}))) == poly_of(F, {1}));
    // regular point: zero residue
    CHECK(rf_residue(F, f, Place::finite(poly_of(F, {0, 1}))).is_zero());
    // pole of order two is rejected
    RatFun g = rf_of(F, {1}, {1, -2, 1});
    CHECK_THROWS_AS(rf_residue(F, g, Place::finite(poly_of(F, {-1, 1}))), error);
}

TEST_CASE("residue at a degree-two place is normalized by the uniformizer") {
    Field F(3, 1);
    FqPoly pi = poly_of(F, {1, 0, 1});  // x^2+1, irreducible over F_3
    // the expansion of x/(x^2+1) w.r.t. the uniformizer pi: the 1/pi
    // coefficient is x, and dividing by pi' = 2x leaves the class of 2
    RatFun f = rf_of(F, {0, 1}, {1, 0, 1});
    CHECK(rf_residue(F, f, Place::finite(pi)) == poly_of(F, {2}));
}

TEST_CASE("residues of logarithmic derivatives are the valuation mod p") {
    Field F(3, 1);
    for (auto pi : {poly_of(F, {1, 1}), poly_of(F, {1, 0, 1}), poly_of(F, {1, 2, 0, 1})}) {
        REQUIRE(poly_irreducible(F, pi));
        for (long m = 1; m <= 5; ++m) {
            RatFun g = rf_from_poly(poly_pow(F, pi, m));
            RatFun ld = rf_log_derivative(F, g);
            long v = rf_valuation(F, ld, Place::finite(pi));
            if (m % 3 == 0) {
                CHECK(v >= 0);  // the pole vanishes in characteristic 3
            } else {
                auto cls = rf_residue(F, ld, Place::finite(pi));
                auto val = residue_prime_value(F, cls);
                REQUIRE(val.has_value());
                CHECK(*val == static_cast<unsigned>(m % 3));
            }
        }
    }
}

TEST_CASE("residue additivity") {
    Field F(5, 1);
    std::mt19937_64 rng(11);
    Place P = Place::finite(poly_of(F, {0, 1}));
    int used = 0;
    for (int i = 0; i < 200 && used < 100; ++i) {
        RatFun f = random_ratfun(F, rng, 3);
        RatFun g = random_ratfun(F, rng, 3);
        if (rf_valuation(F, f, P) < -1 || rf_valuation(F, g, P) < -1) continue;
        if (rf_valuation(F, rf_add(F, f, g), P) < -1) continue;
        ++used;
        FqPoly lhs = rf_residue(F, rf_add(F, f, g), P);
        FqPoly rhs = poly_add(F, rf_residue(F, f, P), rf_residue(F, g, P));
        CHECK(lhs == rhs);
    }
    CHECK(used >= 50);
}

TEST_CASE("partial fractions: frozen examples") {
    Field F5(5, 1);
    // 1/(x(x-1)) = -1/x + 1/(x-1): solve A(x-1) + Bx = 1 at x = 0, 1
    RatFun f = rf_of(F5, {1}, {0, -1, 1});
    auto pf = rf_partial_fractions(F5, f);
    CHECK(pf.poly.is_zero());
    REQUIRE(pf.terms.size() == 2);
    CHECK(pf.terms[0].pi == poly_of(F5, {0, 1}));
    CHECK(pf.terms[0].num == poly_of(F5, {4}));  // -1
    CHECK(pf.terms[1].pi == poly_of(F5, {-1, 1}));
    CHECK(pf.terms[1].num == poly_of(F5, {1}));
    CHECK(rf_from_partial(F5, pf) == f);

    Field F3(3, 1);
    auto pf2 = rf_partial_fractions(F3, rf_of(F3, {0, 0, 1}, {1}));
    CHECK(pf2.poly == poly_of(F3, {0, 0, 1}));
    CHECK(pf2.terms.empty());

    Field F2(2, 1);
    auto pf3 = rf_partial_fractions(F2, rf_of(F2, {1, 0, 0, 1}, {0, 1}));
    CHECK(pf3.poly == poly_of(F2, {0, 0, 1}));  // long division: x^2
    REQUIRE(pf3.terms.size() == 1);
    CHECK(pf3.terms[0].pi == poly_of(F2, {0, 1}));
    CHECK(pf3.terms[0].e == 1);
    CHECK(pf3.terms[0].num == poly_of(F2, {1}));
}

TEST_CASE("partial fractions round trip on random inputs") {
    for (unsigned p : {2u, 3u, 5u}) {
        Field F(p, 1);
        std::mt19937_64 rng(p);
        for (int i = 0; i < 60; ++i) {
            RatFun f = random_ratfun(F, rng, 4);
            CHECK(rf_from_partial(F, rf_partial_fractions(F, f)) == f);
        }
    }
}

TEST_CASE("derivatives") {
    Field F3(3, 1);
    CHECK(rf_derivative(F3, rf_of(F3, {0, 0, 0, 1}, {1})).is_zero());  // (x^3)' = 0

    // (1/x)^(p-1) = -1/x^p by Wilson's theorem; also check the iteration
    for (unsigned p : {3u, 5u, 7u}) {
        Field F(p, 1);
        RatFun inv_x = rf_of(F, {1}, {0, 1});
        RatFun via_iteration = inv_x;
        for (unsigned i = 0; i < p - 1; ++i) via_iteration = rf_derivative(F, via_iteration);
        CHECK(rf_derivative(F, inv_x, p - 1) == via_iteration);
        FqPoly xp;
        xp.c.assign(p + 1, 0);
        xp.c[p] = 1;
        CHECK(via_iteration == rf_neg(F, rf_make(F, FqPoly::constant(1), xp)));
    }

    // the p-th derivative kills everything
    Field F5(5, 1);
    std::mt19937_64 rng(3);
    for (int i = 0; i < 50; ++i)
        CHECK(rf_derivative(F5, random_ratfun(F5, rng, 4), 5).is_zero());
}

TEST_CASE("constant view") {
    Field F3(3, 1);
    RatFun f = rf_of(F3, {0, 0, 0, 1, 0, 0, 1}, {1});  // x^3 + x^6
    RatFun g = rf_constant_view(F3, f);
    CHECK(g == rf_of(F3, {0, 1, 1}, {1}));  // t + t^2
    CHECK(rf_inflate_p(F3, g) == f);

    Field F5(5, 1);
    RatFun h = rf_of(F5, {0, 0, 0, 0, 0, 1}, {1, 0, 0, 0, 0, 1});  // x^5/(x^5+1)
    CHECK(rf_constant_view(F5, h) == rf_of(F5, {0, 1}, {1, 1}));

    CHECK_THROWS_AS(rf_constant_view(F5, rf_x()), error);
}

TEST_CASE("logarithmic derivative") {
    Field F5(5, 1);
    CHECK(rf_log_derivative(F5, rf_x()) == rf_of(F5, {1}, {0, 1}));
    CHECK(rf_log_derivative(F5, rf_of(F5, {0, 0, 1}, {1})) == rf_of(F5, {2}, {0, 1}));
    // quotient rule: ((x-1)/x)'/((x-1)/x) = 1/(x-1) - 1/x
    RatFun g = rf_of(F5, {-1, 1}, {0, 1});
    RatFun expect = rf_sub(F5, rf_of(F5, {1}, {-1, 1}), rf_of(F5, {1}, {0, 1}));
    CHECK(rf_log_derivative(F5, g) == expect);
    CHECK_THROWS_AS(rf_log_derivative(F5, rf_zero()), error);
    // additivity under multiplication
    std::mt19937_64 rng(17);
    for (int i = 0; i < 40; ++i) {
        RatFun a = random_ratfun(F5, rng, 3, true);
        RatFun b = random_ratfun(F5, rng, 3, true);
        CHECK(rf_log_derivative(F5, rf_mul(F5, a, b)) ==
              rf_add(F5, rf_log_derivative(F5, a), rf_log_derivative(F5, b)));
    }
}

TEST_CASE("principal divisors have degree zero") {
    for (unsigned p : {2u, 3u, 5u}) {
        Field F(p, 1);
        std::mt19937_64 rng(100 + p);
        for (int i = 0; i < 34; ++i) {
            RatFun f = random_ratfun(F, rng, 4, true);
            CHECK(rf_divisor(F, f).degree() == 0);
        }
    }
    // and over an extension field
    Field F4(2, 2);
    std::mt19937_64 rng(9);
    for (int i = 0; i < 20; ++i) {
        RatFun f = random_ratfun(F4, rng, 3, true);
        CHECK(rf_divisor(F4, f).degree() == 0);
    }
}

TEST_CASE("divisor bookkeeping") {
    Field F(3, 1);
    Divisor d;
    d.add(Place::finite(poly_of(F, {0, 1})), 2);
    d.add(Place::infinity(), -1);
    d.add(Place::finite(poly_of(F, {1, 0, 1})), 1);
    CHECK(d.degree() == 2 - 1 + 2);
    d.add(Place::finite(poly_of(F, {0, 1})), -2);
    CHECK(d.at(Place::finite(poly_of(F, {0, 1}))) == 0);
    CHECK(d.coeff.size() == 2);
}
