// Copyright (c) 2026 The orefactor authors.
// SPDX-License-Identifier: Apache-2.0

#include "ypoly.hpp"

namespace orefactor {

void yp_trim(YPoly& a) {
    while (!a.c.empty() && a.c.back().is_zero()) a.c.pop_back();
}

YPoly yp_add(const Field& F, const YPoly& a, const YPoly& b) {
    YPoly out;
    out.c.resize(std::max(a.c.size(), b.c.size()));
    for (std::size_t i = 0; i < out.c.size(); ++i) {
        const RatFun& x = i < a.c.size() ? a.c[i] : rf_zero();
        const RatFun& y = i < b.c.size() ? b.c[i] : rf_zero();
        out.c[i] = rf_add(F, x, y);
    }
    yp_trim(out);
    return out;
}

YPoly yp_neg(const Field& F, const YPoly& a) {
    YPoly out = a;
    for (auto& x : out.c) x = rf_neg(F, x);
    return out;
}

YPoly yp_sub(const Field& F, const YPoly& a, const YPoly& b) {
    return yp_add(F, a, yp_neg(F, b));
}

YPoly yp_mul(const Field& F, const YPoly& a, const YPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    YPoly out;
    out.c.assign(a.c.size() + b.c.size() - 1, rf_zero());
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j) {
            if (b.c[j].is_zero()) continue;
            out.c[i + j] = rf_add(F, out.c[i + j], rf_mul(F, a.c[i], b.c[j]));
        }
    }
    yp_trim(out);
    return out;
}

YPoly yp_scale(const Field& F, const YPoly& a, const RatFun& s) {
    if (s.is_zero()) return {};
    YPoly out = a;
    for (auto& x : out.c) x = rf_mul(F, x, s);
    return out;
}

YPoly yp_pow(const Field& F, YPoly a, unsigned e) {
    YPoly r = YPoly::constant(rf_one());
    while (e) {
        if (e & 1) r = yp_mul(F, r, a);
        a = yp_mul(F, a, a);
        e >>= 1;
    }
    return r;
}

std::pair<YPoly, YPoly> yp_divmod(const Field& F, const YPoly& a, const YPoly& b) {
    if (b.is_zero()) raise(errc::division_by_zero, "polynomial division by zero");
    YPoly q, r = a;
    int db = b.degree();
    RatFun lbinv = rf_inv(F, b.lc());
    while (!r.is_zero() && r.degree() >= db) {
        int shift = r.degree() - db;
        RatFun c = rf_mul(F, r.lc(), lbinv);
        if (q.c.size() < static_cast<std::size_t>(shift + 1))
            q.c.resize(shift + 1, rf_zero());
        q.c[shift] = c;
        for (int j = 0; j <= db; ++j)
            r.c[j + shift] = rf_sub(F, r.c[j + shift], rf_mul(F, c, b.c[j]));
        yp_trim(r);
    }
    yp_trim(q);
    return {q, r};
}

YPoly yp_exact_div(const Field& F, const YPoly& a, const YPoly& b) {
    auto [q, r] = yp_divmod(F, a, b);
    check_invariant(r.is_zero(), "inexact polynomial division");
    return q;
}

YPoly yp_monic(const Field& F, const YPoly& a) {
    if (a.is_zero() || a.is_monic()) return a;
    return yp_scale(F, a, rf_inv(F, a.lc()));
}

YPoly yp_gcd(const Field& F, YPoly a, YPoly b) {
    while (!b.is_zero()) {
        YPoly r = yp_divmod(F, a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return yp_monic(F, a);
}

YPoly yp_derivative_y(const Field& F, const YPoly& a) {
    YPoly out;
    if (a.c.size() <= 1) return out;
    out.c.resize(a.c.size() - 1);
    for (std::size_t i = 1; i < a.c.size(); ++i)
        out.c[i - 1] = rf_scale(F, a.c[i], F.from_int(static_cast<long long>(i)));
    yp_trim(out);
    return out;
}

YPoly yp_derivative_t(const Field& F, const YPoly& a) {
    YPoly out = a;
    for (auto& x : out.c) x = rf_derivative(F, x);
    yp_trim(out);
    return out;
}

YPoly yp_inflate_y(const Field& F, const YPoly& a, unsigned p) {
    (void)F;
    if (a.is_zero()) return {};
    YPoly out;
    out.c.assign(static_cast<std::size_t>(a.degree()) * p + 1, rf_zero());
    for (std::size_t i = 0; i < a.c.size(); ++i) out.c[i * p] = a.c[i];
    return out;
}

YPoly yp_deflate_y(const Field& F, const YPoly& a, unsigned p) {
    (void)F;
    if (a.is_zero()) return {};
    YPoly out;
    out.c.assign(a.degree() / p + 1, rf_zero());
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i].is_zero()) continue;
        check_invariant(i % p == 0, "deflation: exponent not divisible by p");
        out.c[i / p] = a.c[i];
    }
    yp_trim(out);
    return out;
}

bool rf_is_pth_power(const Field& F, const RatFun& f) {
    return poly_is_pth_power(F, f.num) && poly_is_pth_power(F, f.den);
}

RatFun rf_pth_root(const Field& F, const RatFun& f) {
    if (f.is_zero()) return {};
    return {poly_pth_root(F, f.num), poly_pth_root(F, f.den)};
}

bool yp_is_pth_power(const Field& F, const YPoly& a) {
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i].is_zero()) continue;
        if (i % F.p() != 0 || !rf_is_pth_power(F, a.c[i])) return false;
    }
    return true;
}

YPoly yp_pth_root(const Field& F, const YPoly& a) {
    check_invariant(yp_is_pth_power(F, a), "yp_pth_root: not a p-th power");
    YPoly out = yp_deflate_y(F, a, F.p());
    for (auto& x : out.c) x = rf_pth_root(F, x);
    return out;
}

OreOp yp_to_operator(const Field& F, const YPoly& n) {
    OreOp out;
    if (n.is_zero()) return out;
    out.c.assign(static_cast<std::size_t>(n.degree()) * F.p() + 1, rf_zero());
    for (std::size_t i = 0; i < n.c.size(); ++i)
        out.c[i * F.p()] = rf_inflate_p(F, n.c[i]);
    ore_trim(out);
    return out;
}

bool rf_less(const RatFun& a, const RatFun& b) {
    if (a.den != b.den) return poly_less(a.den, b.den);
    return poly_less(a.num, b.num);
}

bool yp_less(const YPoly& a, const YPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (std::size_t i = a.c.size(); i-- > 0;)
        if (a.c[i] != b.c[i]) return rf_less(a.c[i], b.c[i]);
    return false;
}

YPoly yp_map(const FieldEmbedding& emb, const YPoly& a) {
    YPoly out;
    out.c.reserve(a.c.size());
    for (auto& x : a.c) out.c.push_back(rf_map(emb, x));
    return out;
}

}  // namespace orefactor
