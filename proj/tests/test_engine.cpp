// Copyright (c) 2026 The orefactor authors.
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "engine.hpp"
#include "testutil.hpp"

using namespace orefactor;
using testutil::random_monic_first_order;
using testutil::random_ratfun;

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

OreOp first_order(const Field& F, const RatFun& a) {  // D - a
    OreOp out;
    out.c = {rf_neg(F, a), rf_one()};
    return out;
}

OreOp op_dp_minus(const Field& F, const RatFun& y) {  // D^p - y
    OreOp out;
    out.c.assign(F.p() + 1, rf_zero());
    out.c[0] = rf_neg(F, y);
    out.c[F.p()] = rf_one();
    return out;
}

RatFun x_pow(const Field& F, unsigned e) {
    FqPoly p;
    p.c.assign(e + 1, 0);
    p.c[e] = 1;
    return rf_from_poly(p);
}

YPoly linear_n(const Field& F, const RatFun& c_in_t) {  // Y - c(t)
    YPoly out = YPoly::y();
    out.c[0] = rf_neg(F, c_in_t);
    return out;
}

OreOp parse_like(const Field& F) {
    // (D - x^2)(D - 1/(x+1)) * (D - 1)
    OreOp a = first_order(F, x_pow(F, 2));
    OreOp b = first_order(F, rf_of(F, {1}, {1, 1}));
    OreOp c = first_order(F, rf_one());
    return ore_mul(F, ore_mul(F, a, b), c);
}

OreOp chain_product(const Field& F, const FactorChain& ch) {
    OreOp prod = OreOp::from_ratfun(ch.unit);
    for (auto& f : ch.factors) prod = ore_mul(F, prod, f);
    return prod;
}

}  // namespace

TEST_CASE("isotypic split of D^2 - D over F_5") {
    Field F(5, 1);
    OreOp l = ore_mul(F, OreOp::d(), first_order(F, rf_one()));  // D(D-1) = D^2 - D
    auto comps = isotypic_split(F, l);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0].n == YPoly::y());
    CHECK(comps[0].nu == 1);
    CHECK(comps[0].factor == OreOp::d());
    CHECK(comps[1].n == linear_n(F, rf_one()));
    CHECK(comps[1].nu == 1);
    CHECK(comps[1].factor == first_order(F, rf_one()));
    CHECK(ore_mul(F, comps[0].factor, comps[1].factor) == l);
}

TEST_CASE("isotypic split of D^2 and D-1") {
    Field F(3, 1);
    OreOp d2 = ore_mul(F, OreOp::d(), OreOp::d());
    auto comps = isotypic_split(F, d2);
    REQUIRE(comps.size() == 1);
    CHECK(comps[0].n == YPoly::y());
    CHECK(comps[0].nu == 2);
    CHECK(comps[0].factor == d2);

    auto comps2 = isotypic_split(F, first_order(F, rf_one()));
    REQUIRE(comps2.size() == 1);
    CHECK(comps2[0].n == linear_n(F, rf_one()));
    CHECK(comps2[0].nu == 1);
}

TEST_CASE("power refinement") {
    Field F(3, 1);
    // D^3 - x^3 is already a divisor of N(D^p)
    OreOp l = op_dp_minus(F, x_pow(F, 3));
    auto blocks = power_refine(F, l, linear_n(F, rf_x()), 3);
    REQUIRE(blocks.size() == 1);
    CHECK(blocks[0] == l);

    // (D-x)(D-x): two blocks, each right-dividing D^3 - x^3
    OreOp sq = ore_mul(F, first_order(F, rf_x()), first_order(F, rf_x()));
    auto blocks2 = power_refine(F, sq, linear_n(F, rf_x()), 2);
    OreOp prod = OreOp::one();
    for (auto& b : blocks2) {
        CHECK(ore_right_divides(F, b, l));
        prod = ore_mul(F, prod, b);
    }
    CHECK(prod == sq);

    // D^2 with N = Y, nu = 2: the filtration stalls at B_1 = D^2
    OreOp d2 = ore_mul(F, OreOp::d(), OreOp::d());
    auto blocks3 = power_refine(F, d2, YPoly::y(), 2);
    OreOp prod3 = OreOp::one();
    for (auto& b : blocks3) prod3 = ore_mul(F, prod3, b);
    CHECK(prod3 == d2);
}

TEST_CASE("embedding classification") {
    Field F(3, 1);
    // N = Y - t/(t+1): base-field case with y = x^3/(x^3+1)
    YPoly n1 = linear_n(F, rf_of(F, {0, 1}, {1, 1}));
    auto e1 = classify_embedding(F, n1);
    CHECK_FALSE(e1.constant_case);
    CHECK(e1.y_image == rf_of(F, {0, 0, 0, 1}, {1, 0, 0, 1}));

    // N = Y^2 + Y + 1 over F_2: constant coefficients, root in F_4
    Field F2(2, 1);
    YPoly n2;
    n2.c = {rf_one(), rf_one(), rf_one()};
    auto e2 = classify_embedding(F2, n2);
    CHECK(e2.constant_case);
    REQUIRE(e2.ext != nullptr);
    CHECK(e2.ext->q() == 4);
    CHECK(e2.beta == e2.ext->gen());  // omega, the smaller root
    CHECK(e2.y_image == rf_const(e2.beta));

    // N = Y^2 - t over F_5: a genuine curve, out of scope
    Field F5(5, 1);
    YPoly n3;
    n3.c = {rf_neg(F5, rf_x()), rf_zero(), rf_one()};
    CHECK_THROWS_WITH_AS(classify_embedding(F5, n3),
                         doctest::Contains("function field"), error);

    // N = Y^3 - t over F_3: inseparable
    Field F3(3, 1);
    YPoly n4;
    n4.c.assign(4, rf_zero());
    n4.c[0] = rf_neg(F3, rf_x());
    n4.c[3] = rf_one();
    CHECK_THROWS_AS(classify_embedding(F3, n4), error);
}

TEST_CASE("phi inverse") {
    Field F(3, 1);
    auto e1 = classify_embedding(F, linear_n(F, rf_x()));
    CHECK(phi_inverse(F, e1, rf_x()) == first_order(F, rf_x()));

    Field F2(2, 1);
    YPoly n2;
    n2.c = {rf_one(), rf_one(), rf_one()};
    auto e2 = classify_embedding(F2, n2);
    const Field& F4 = *e2.ext;
    // f = omega + 1 -> D - D^2 - 1 = D^2 + D + 1 in characteristic 2
    OreOp got = phi_inverse(F2, e2, rf_const(F4.add(e2.beta, 1)));
    OreOp expect;
    expect.c = {rf_one(), rf_one(), rf_one()};
    CHECK(got == expect);
    // f = x * omega -> D - x D^2
    OreOp got2 = phi_inverse(F2, e2, rf_scale(F4, rf_x(), e2.beta));
    OreOp expect2;
    expect2.c = {rf_zero(), rf_one(), rf_neg(F2, rf_x())};
    CHECK(got2 == expect2);
}

TEST_CASE("irreducible right divisor of D^3 - x^3 over F_3") {
    Field F(3, 1);
    OreOp l = op_dp_minus(F, x_pow(F, 3));
    Certificate cert;
    OreOp m = irreducible_right_divisor(F, l, linear_n(F, rf_x()), &cert);
    CHECK(m.ord() == 1);
    CHECK(ore_right_divides(F, m, l));
    CHECK(cert == Certificate::minimal_order);
}

TEST_CASE("irreducible right divisor in the constant-field case") {
    Field F(2, 1);
    // L = D^4 + D^2 + 1 = (D^2 + D + 1)^2, N = Y^2 + Y + 1
    OreOp l;
    l.c = {rf_one(), rf_zero(), rf_one(), rf_zero(), rf_one()};
    YPoly n;
    n.c = {rf_one(), rf_one(), rf_one()};
    Certificate cert;
    OreOp m = irreducible_right_divisor(F, l, n, &cert);
    OreOp expect;
    expect.c = {rf_one(), rf_one(), rf_one()};
    CHECK(m == expect);
    CHECK(ore_right_divides(F, m, l));
    CHECK(ore_mul(F, m, m) == l);
}

TEST_CASE("division algebra: D^2 + 1/x^2 over F_2 is irreducible") {
    Field F(2, 1);
    OreOp l;
    l.c = {rf_of(F, {1}, {0, 0, 1}), rf_zero(), rf_one()};
    Certificate cert;
    OreOp m = irreducible_right_divisor(F, l, linear_n(F, rf_of(F, {1}, {0, 1})), &cert);
    CHECK(m == l);
    CHECK(cert == Certificate::riccati_unsolvable);

    auto res = is_irreducible(F, l);
    CHECK(res.irreducible);
    CHECK(res.cert == Certificate::riccati_unsolvable);
}

TEST_CASE("factor completely: frozen examples") {
    Field F5(5, 1);
    // (D-1) * D
    OreOp l = ore_mul(F5, first_order(F5, rf_one()), OreOp::d());
    auto chain = factor_completely(F5, l);
    CHECK(chain.factors.size() == 2);
    CHECK(chain_product(F5, chain) == l);
    for (auto& f : chain.factors) CHECK(f.ord() == 1);

    // D^3 - x^3 over F_3: three first-order factors
    Field F3(3, 1);
    OreOp cube = op_dp_minus(F3, x_pow(F3, 3));
    auto chain2 = factor_completely(F3, cube);
    CHECK(chain2.factors.size() == 3);
    for (auto& f : chain2.factors) CHECK(f.ord() == 1);
    CHECK(chain_product(F3, chain2) == cube);

    // D^2 + 1/x^2 over F_2: irreducible
    Field F2(2, 1);
    OreOp irr;
    irr.c = {rf_of(F2, {1}, {0, 0, 1}), rf_zero(), rf_one()};
    auto chain3 = factor_completely(F2, irr);
    CHECK(chain3.factors.size() == 1);
    CHECK(chain3.certs[0] == Certificate::riccati_unsolvable);

    // D^4 + D^2 + 1 over F_2: square of an order-2 irreducible
    OreOp quart;
    quart.c = {rf_one(), rf_zero(), rf_one(), rf_zero(), rf_one()};
    auto chain4 = factor_completely(F2, quart);
    REQUIRE(chain4.factors.size() == 2);
    OreOp expect;
    expect.c = {rf_one(), rf_one(), rf_one()};
    CHECK(chain4.factors[0] == expect);
    CHECK(chain4.factors[1] == expect);
    CHECK(chain_product(F2, chain4) == quart);
    for (auto& f : chain4.factors) CHECK(is_irreducible(F2, f).irreducible);
}

TEST_CASE("factor completely: random products round trip") {
    for (unsigned p : {3u, 5u}) {
        Field F(p, 1);
        std::mt19937_64 rng(31337 + p);
        for (int i = 0; i < 10; ++i) {
            std::uniform_int_distribution<int> dcount(1, 3);
            int count = dcount(rng);
            OreOp l = OreOp::one();
            for (int j = 0; j < count; ++j)
                l = ore_mul(F, l, random_monic_first_order(F, rng, 1));
            auto chain = factor_completely(F, l);
            CHECK(chain_product(F, chain) == l);
            for (auto& f : chain.factors) {
                auto res = is_irreducible(F, f);
                CHECK(res.irreducible);
            }
        }
    }
}

TEST_CASE("non-monic operators carry their unit") {
    Field F(3, 1);
    OreOp l = ore_scale(F, rf_of(F, {0, 2}), ore_mul(F, OreOp::d(), OreOp::d()));
    auto chain = factor_completely(F, l);
    CHECK(chain.unit == rf_of(F, {0, 2}));
    CHECK(chain_product(F, chain) == l);
}

TEST_CASE("lclm decomposition of D^p - x^p") {
    for (unsigned p : {3u, 5u}) {
        Field F(p, 1);
        OreOp l = op_dp_minus(F, x_pow(F, p));
        auto parts = lclm_decomposition(F, l, linear_n(F, rf_x()));
        REQUIRE(parts.size() == p);
        for (auto& m : parts) CHECK(m.ord() == 1);
        CHECK(ore_lclm_many(F, parts) == l);
    }
}

TEST_CASE("lclm decomposition of a proper divisor") {
    Field F(3, 1);
    OreOp dmx = first_order(F, rf_x());  // D - x divides D^3 - x^3
    auto parts = lclm_decomposition(F, dmx, linear_n(F, rf_x()));
    REQUIRE(parts.size() == 3);
    int nontrivial = 0;
    for (auto& m : parts)
        if (m.ord() >= 1) {
            ++nontrivial;
            CHECK(m == dmx);
        }
    CHECK(nontrivial == 1);
}

TEST_CASE("lclm decomposition in the constant-field case") {
    Field F(2, 1);
    OreOp l;  // D^4 + D^2 + 1 = N(D^2) for N = Y^2 + Y + 1
    l.c = {rf_one(), rf_zero(), rf_one(), rf_zero(), rf_one()};
    YPoly n;
    n.c = {rf_one(), rf_one(), rf_one()};
    auto parts = lclm_decomposition(F, l, n);
    REQUIRE(parts.size() == 2);
    for (auto& m : parts) CHECK(m.ord() == 2);
    CHECK(ore_lclm_many(F, parts) == l);
}

TEST_CASE("is_irreducible finds witnesses") {
    Field F(5, 1);
    OreOp l = ore_mul(F, OreOp::d(), first_order(F, rf_one()));
    auto res = is_irreducible(F, l);
    CHECK_FALSE(res.irreducible);
    REQUIRE(res.witness.has_value());
    CHECK(res.witness->ord() == 1);
    CHECK(ore_right_divides(F, *res.witness, l));

    CHECK(is_irreducible(F, first_order(F, rf_x())).irreducible);
}

TEST_CASE("unsupported: inseparable central factor") {
    Field F(3, 1);
    OreOp l = op_dp_minus(F, rf_x());  // D^3 - x, chi = Y^3 - t
    try {
        factor_completely(F, l);
        FAIL("expected unsupported_error");
    } catch (const unsupported_error& e) {
        CHECK(e.code() == errc::unsupported_inseparable);
        REQUIRE(e.partial().factors.size() == 1);
        CHECK(e.partial().factors[0] == l);
        CHECK(e.partial().certs[0] == Certificate::unsupported);
        CHECK_FALSE(e.partial().complete);
    }
}

TEST_CASE("unsupported: curve-valued central factor") {
    Field F(3, 1);
    // D^6 - x^3: chi = (Y^2 - t)^3, and Y^2 - t is separable over F_3(t)
    // but its residue ring is the function field of a curve
    OreOp l;
    l.c.assign(7, rf_zero());
    l.c[0] = rf_neg(F, x_pow(F, 3));
    l.c[6] = rf_one();
    try {
        factor_completely(F, l);
        FAIL("expected unsupported_error");
    } catch (const unsupported_error& e) {
        CHECK(e.code() == errc::unsupported_central_field);
        OreOp prod = OreOp::one();
        for (auto& f : e.partial().factors) prod = ore_mul(F, prod, f);
        CHECK(prod == l);
    }
}

TEST_CASE("the seed changes internal randomness but not the factors") {
    for (std::uint64_t seed : {0ull, 12345ull, 987654321ull}) {
        Field F(5, 1, seed);
        OreOp l = parse_like(F);
        auto chain = factor_completely(F, l);
        Field F0(5, 1, 0);
        auto base = factor_completely(F0, l);
        REQUIRE(chain.factors.size() == base.factors.size());
        for (std::size_t i = 0; i < chain.factors.size(); ++i)
            CHECK(chain.factors[i] == base.factors[i]);
    }
}

TEST_CASE("central commutation of produced cofactors") {
    Field F(3, 1);
    OreOp nop = op_dp_minus(F, x_pow(F, 3));
    OreOp dmx = first_order(F, rf_x());
    OreOp lprime = ore_exact_right_quotient(F, nop, dmx);
    CHECK(ore_mul(F, lprime, dmx) == nop);
    CHECK(ore_mul(F, dmx, lprime) == nop);
}
