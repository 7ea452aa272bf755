// Copyright (c) 2026 The orefactor authors.
// SPDX-License-Identifier: Apache-2.0
//
// Dense polynomials in one formal variable with RatFun coefficients. Used
// both for characteristic polynomials over K (coefficients in x) and for
// central polynomials over the constant field (coefficients in t).

#ifndef OREFACTOR_YPOLY_HPP
#define OREFACTOR_YPOLY_HPP

#include <utility>
#include <vector>

#include "ore.hpp"
#include "ratfun.hpp"

namespace orefactor {

struct YPoly {
    std::vector<RatFun> c;

    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    const RatFun& lc() const { return c.back(); }
    bool is_monic() const { return !c.empty() && c.back() == rf_one(); }

    static YPoly zero() { return {}; }
    static YPoly constant(RatFun a) { return a.is_zero() ? YPoly{} : YPoly{{std::move(a)}}; }
    static YPoly y() { return {{rf_zero(), rf_one()}}; }

    bool operator==(const YPoly& o) const { return c == o.c; }
    bool operator!=(const YPoly& o) const { return !(*this == o); }
};

void yp_trim(YPoly& a);
YPoly yp_add(const Field& F, const YPoly& a, const YPoly& b);
YPoly yp_sub(const Field& F, const YPoly& a, const YPoly& b);
YPoly yp_neg(const Field& F, const YPoly& a);
YPoly yp_mul(const Field& F, const YPoly& a, const YPoly& b);
YPoly yp_scale(const Field& F, const YPoly& a, const RatFun& s);
YPoly yp_pow(const Field& F, YPoly a, unsigned e);
std::pair<YPoly, YPoly> yp_divmod(const Field& F, const YPoly& a, const YPoly& b);
YPoly yp_exact_div(const Field& F, const YPoly& a, const YPoly& b);
YPoly yp_gcd(const Field& F, YPoly a, YPoly b);  // monic
YPoly yp_monic(const Field& F, const YPoly& a);
YPoly yp_derivative_y(const Field& F, const YPoly& a);
YPoly yp_derivative_t(const Field& F, const YPoly& a);  // coefficient-wise d/dt

// substitution Y -> Y^p and its inverse (degree must be divisible by p)
YPoly yp_inflate_y(const Field& F, const YPoly& a, unsigned p);
YPoly yp_deflate_y(const Field& F, const YPoly& a, unsigned p);

// a together with all coefficients p-th powers in F_q(t); yp_pth_root takes
// the root coefficient-wise and deflates the variable.
bool yp_is_pth_power(const Field& F, const YPoly& a);
YPoly yp_pth_root(const Field& F, const YPoly& a);
bool rf_is_pth_power(const Field& F, const RatFun& f);
RatFun rf_pth_root(const Field& F, const RatFun& f);

// N(D^p): substitute Y -> D^p and t -> x^p in a central polynomial.
OreOp yp_to_operator(const Field& F, const YPoly& n);

// canonical order for deterministic output
bool yp_less(const YPoly& a, const YPoly& b);
bool rf_less(const RatFun& a, const RatFun& b);

YPoly yp_map(const FieldEmbedding& emb, const YPoly& a);

}  // namespace orefactor

#endif
