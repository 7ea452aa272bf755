// Copyright (c) 2026 The orefactor authors.
// SPDX-License-Identifier: Apache-2.0
//
// Rational functions over F_q, the derivation d/dx, places and divisors of
// the rational function field, valuations, residues, partial fractions and
// the constant subfield F_q(x^p).

#ifndef OREFACTOR_RATFUN_HPP
#define OREFACTOR_RATFUN_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "gf.hpp"

namespace orefactor {

// Reduced fraction num/den with den monic; zero is {0, 1}.
struct RatFun {
    FqPoly num;
    FqPoly den = FqPoly::constant(1);

    bool is_zero() const { return num.is_zero(); }
    bool is_poly() const { return den.degree() == 0; }

    bool operator==(const RatFun& o) const { return num == o.num && den == o.den; }
    bool operator!=(const RatFun& o) const { return !(*this == o); }
};

RatFun rf_make(const Field& F, FqPoly num, FqPoly den);
RatFun rf_from_poly(FqPoly p);
RatFun rf_const(fq a);
inline RatFun rf_zero() { return {}; }
inline RatFun rf_one() { return rf_const(1); }
inline RatFun rf_x() { return rf_from_poly(FqPoly::x()); }

RatFun rf_add(const Field& F, const RatFun& a, const RatFun& b);
RatFun rf_sub(const Field& F, const RatFun& a, const RatFun& b);
RatFun rf_neg(const Field& F, const RatFun& a);
RatFun rf_mul(const Field& F, const RatFun& a, const RatFun& b);
RatFun rf_inv(const Field& F, const RatFun& a);  // division_by_zero on 0
RatFun rf_div(const Field& F, const RatFun& a, const RatFun& b);
RatFun rf_pow(const Field& F, RatFun a, long long e);
RatFun rf_scale(const Field& F, const RatFun& a, fq s);

// n-th derivative; the p-th derivative of anything is 0.
RatFun rf_derivative(const Field& F, const RatFun& f, unsigned n = 1);
bool rf_is_constant(const Field& F, const RatFun& f);  // f' == 0
RatFun rf_log_derivative(const Field& F, const RatFun& g);  // zero_input on 0
RatFun rf_pow_p(const Field& F, const RatFun& f);  // f^p, by Frobenius on coefficients

// f with f' = 0 is g(x^p); returns g (in the variable t). not_constant otherwise.
RatFun rf_constant_view(const Field& F, const RatFun& f);
// substitute t = x^p: the inverse of rf_constant_view.
RatFun rf_inflate_p(const Field& F, const RatFun& g);

// ---------------------------------------------------------------------------
// places and divisors of F_q(x)

struct Place {
    FqPoly pi;       // monic irreducible; ignored when infinite
    bool infinite = false;

    static Place finite(FqPoly pi) { return {std::move(pi), false}; }
    static Place infinity() { return {{}, true}; }

    int degree() const { return infinite ? 1 : pi.degree(); }

    bool operator==(const Place& o) const {
        return infinite == o.infinite && (infinite || pi == o.pi);
    }
};

struct PlaceLess {
    bool operator()(const Place& a, const Place& b) const {
        if (a.infinite != b.infinite) return !a.infinite;  // infinity sorts last
        if (a.infinite) return false;
        return poly_less(a.pi, b.pi);
    }
};

struct Divisor {
    std::map<Place, long, PlaceLess> coeff;

    long at(const Place& P) const {
        auto it = coeff.find(P);
        return it == coeff.end() ? 0 : it->second;
    }
    void add(const Place& P, long n) {
        if (n == 0) return;
        auto [it, fresh] = coeff.emplace(P, 0);
        it->second += n;
        if (it->second == 0) coeff.erase(it);
    }
    long degree() const {
        long d = 0;
        for (auto& [P, n] : coeff) d += n * P.degree();
        return d;
    }
};

constexpr long kValInfinity = 1LL << 60;  // valuation of 0

long poly_valuation(const Field& F, const FqPoly& f, const FqPoly& pi);
long rf_valuation(const Field& F, const RatFun& f, const Place& P);

// finite poles of f with their orders, sorted
std::vector<std::pair<Place, long>> rf_poles(const Field& F, const RatFun& f);

// divisor of f (all places including infinity); zero_input on f = 0
Divisor rf_divisor(const Field& F, const RatFun& f);

// Residue of the differential f dx at a finite place, as an element of the
// residue field F_q[x]/(pi): the 1/pi coefficient of the pi-adic expansion
// of f, divided by pi' (the expansion is taken w.r.t. the uniformizer pi).
// Requires v_P(f) >= -1; higher_order_pole otherwise.
FqPoly rf_residue(const Field& F, const RatFun& f, const Place& P);

// the residue class as an element of F_p, when it lies in the prime field
std::optional<unsigned> residue_prime_value(const Field& F, const FqPoly& cls);

struct PartialFractions {
    struct Term {
        FqPoly pi;   // monic irreducible
        int e;       // exponent >= 1
        FqPoly num;  // deg < deg pi
    };
    FqPoly poly;
    std::vector<Term> terms;  // grouped by pi, e increasing
};

PartialFractions rf_partial_fractions(const Field& F, const RatFun& f);
RatFun rf_from_partial(const Field& F, const PartialFractions& pf);

// coefficient-wise lift through a field embedding
RatFun rf_map(const FieldEmbedding& emb, const RatFun& f);

}  // namespace orefactor

#endif
