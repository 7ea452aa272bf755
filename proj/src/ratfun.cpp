// Copyright (c) 2026 The orefactor authors.
// SPDX-License-Identifier: Apache-2.0

#include "ratfun.hpp"

#include <algorithm>

namespace orefactor {

RatFun rf_make(const Field& F, FqPoly num, FqPoly den) {
    if (den.is_zero()) raise(errc::division_by_zero, "zero denominator");
    if (num.is_zero()) return {};
    FqPoly g = poly_gcd(F, num, den);
    if (g.degree() > 0) {
        num = poly_divmod(F, num, g).first;
        den = poly_divmod(F, den, g).first;
    }
    fq lead = den.lc();
    if (lead != 1) {
        fq linv = F.inv(lead);
        num = poly_scale(F, num, linv);
        den = poly_scale(F, den, linv);
    }
    return {std::move(num), std::move(den)};
}

RatFun rf_from_poly(FqPoly p) {
    if (p.is_zero()) return {};
    return {std::move(p), FqPoly::constant(1)};
}

RatFun rf_const(fq a) {
    if (a == 0) return {};
    return {FqPoly::constant(a), FqPoly::constant(1)};
}

RatFun rf_add(const Field& F, const RatFun& a, const RatFun& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    FqPoly num = poly_add(F, poly_mul(F, a.num, b.den), poly_mul(F, b.num, a.den));
    return rf_make(F, std::move(num), poly_mul(F, a.den, b.den));
}

RatFun rf_neg(const Field& F, const RatFun& a) {
    RatFun out = a;
    out.num = poly_neg(F, out.num);
    return out;
}

RatFun rf_sub(const Field& F, const RatFun& a, const RatFun& b) {
    return rf_add(F, a, rf_neg(F, b));
}

RatFun rf_mul(const Field& F, const RatFun& a, const RatFun& b) {
    if (a.is_zero() || b.is_zero()) return {};
    // cross-reduce before multiplying to limit swell
    FqPoly g1 = poly_gcd(F, a.num, b.den);
    FqPoly g2 = poly_gcd(F, b.num, a.den);
    FqPoly an = g1.degree() > 0 ? poly_divmod(F, a.num, g1).first : a.num;
    FqPoly bd = g1.degree() > 0 ? poly_divmod(F, b.den, g1).first : b.den;
    FqPoly bn = g2.degree() > 0 ? poly_divmod(F, b.num, g2).first : b.num;
    FqPoly ad = g2.degree() > 0 ? poly_divmod(F, a.den, g2).first : a.den;
    return rf_make(F, poly_mul(F, an, bn), poly_mul(F, ad, bd));
}

RatFun rf_inv(const Field& F, const RatFun& a) {
    if (a.is_zero()) raise(errc::division_by_zero, "inverse of zero");
    return rf_make(F, a.den, a.num);
}

RatFun rf_div(const Field& F, const RatFun& a, const RatFun& b) {
    return rf_mul(F, a, rf_inv(F, b));
}

RatFun rf_pow(const Field& F, RatFun a, long long e) {
    if (e < 0) {
        a = rf_inv(F, a);
        e = -e;
    }
    RatFun r = rf_one();
    while (e) {
        if (e & 1) r = rf_mul(F, r, a);
        a = rf_mul(F, a, a);
        e >>= 1;
    }
    return r;
}

RatFun rf_scale(const Field& F, const RatFun& a, fq s) {
    if (s == 0 || a.is_zero()) return {};
    return {poly_scale(F, a.num, s), a.den};
}

RatFun rf_derivative(const Field& F, const RatFun& f, unsigned n) {
    RatFun cur = f;
    for (unsigned i = 0; i < n && !cur.is_zero(); ++i) {
        FqPoly num = poly_sub(F, poly_mul(F, poly_derivative(F, cur.num), cur.den),
                              poly_mul(F, cur.num, poly_derivative(F, cur.den)));
        cur = rf_make(F, std::move(num), poly_mul(F, cur.den, cur.den));
    }
    return cur;
}

bool rf_is_constant(const Field& F, const RatFun& f) {
    return rf_derivative(F, f).is_zero();
}

RatFun rf_log_derivative(const Field& F, const RatFun& g) {
    if (g.is_zero()) raise(errc::zero_input, "logarithmic derivative of zero");
    return rf_div(F, rf_derivative(F, g), g);
}

namespace {

FqPoly poly_pow_p(const Field& F, const FqPoly& a) {
    FqPoly out;
    if (a.is_zero()) return out;
    out.c.assign(static_cast<std::size_t>(a.degree()) * F.p() + 1, 0);
    for (std::size_t i = 0; i < a.c.size(); ++i)
        out.c[i * F.p()] = F.pow(a.c[i], F.p());
    return out;
}

}  // namespace

RatFun rf_pow_p(const Field& F, const RatFun& f) {
    if (f.is_zero()) return {};
    return {poly_pow_p(F, f.num), poly_pow_p(F, f.den)};
}

RatFun rf_constant_view(const Field& F, const RatFun& f) {
    if (f.is_zero()) return {};
    auto deflate = [&](const FqPoly& a) -> FqPoly {
        FqPoly out;
        out.c.assign(a.degree() / F.p() + 1, 0);
        for (std::size_t i = 0; i < a.c.size(); ++i) {
            if (a.c[i] == 0) continue;
            if (i % F.p() != 0)
                raise(errc::not_constant, "derivative is nonzero: not in F_q(x^p)");
            out.c[i / F.p()] = a.c[i];
        }
        poly_trim(out);
        return out;
    };
    if (!rf_is_constant(F, f))
        raise(errc::not_constant, "derivative is nonzero: not in F_q(x^p)");
    RatFun g{deflate(f.num), deflate(f.den)};
    check_invariant(rf_inflate_p(F, g) == f, "constant view does not substitute back");
    return g;
}

RatFun rf_inflate_p(const Field& F, const RatFun& g) {
    if (g.is_zero()) return {};
    auto inflate = [&](const FqPoly& a) {
        FqPoly out;
        out.c.assign(static_cast<std::size_t>(a.degree()) * F.p() + 1, 0);
        for (std::size_t i = 0; i < a.c.size(); ++i) out.c[i * F.p()] = a.c[i];
        return out;
    };
    return {inflate(g.num), inflate(g.den)};
}

// ---------------------------------------------------------------------------
// places, valuations, residues

long poly_valuation(const Field& F, const FqPoly& f, const FqPoly& pi) {
    if (f.is_zero()) return kValInfinity;
    long v = 0;
    FqPoly cur = f;
    while (true) {
        auto [q, r] = poly_divmod(F, cur, pi);
        if (!r.is_zero()) return v;
        ++v;
        cur = std::move(q);
    }
}

long rf_valuation(const Field& F, const RatFun& f, const Place& P) {
    if (f.is_zero()) return kValInfinity;
    if (P.infinite) return f.den.degree() - f.num.degree();
    // num and den are coprime: at most one side carries the place
    long vn = poly_valuation(F, f.num, P.pi);
    if (vn > 0) return vn;
    return -poly_valuation(F, f.den, P.pi);
}

std::vector<std::pair<Place, long>> rf_poles(const Field& F, const RatFun& f) {
    std::vector<std::pair<Place, long>> out;
    if (f.is_zero() || f.den.degree() == 0) return out;
    for (auto& [pi, m] : poly_factor(F, f.den))
        out.emplace_back(Place::finite(pi), static_cast<long>(m));
    return out;
}

Divisor rf_divisor(const Field& F, const RatFun& f) {
    if (f.is_zero()) raise(errc::zero_input, "divisor of zero");
    Divisor d;
    for (auto& [pi, m] : poly_factor(F, f.num)) d.add(Place::finite(pi), m);
    for (auto& [pi, m] : poly_factor(F, f.den)) d.add(Place::finite(pi), -m);
    d.add(Place::infinity(), f.den.degree() - f.num.degree());
    return d;
}

FqPoly rf_residue(const Field& F, const RatFun& f, const Place& P) {
    if (P.infinite) raise(errc::invalid_argument, "residue: finite place required");
    if (f.is_zero()) return {};
    long v = rf_valuation(F, f, P);
    if (v >= 0) return {};
    if (v < -1) raise(errc::higher_order_pole, "residue at a pole of order > 1");
    // f = num / (pi * d2)  with pi not dividing num, d2
    FqPoly d2 = poly_divmod(F, f.den, P.pi).first;
    FqPoly a = poly_mod(F, poly_mul(F, poly_mod(F, f.num, P.pi), poly_inv_mod(F, d2, P.pi)),
                        P.pi);
    // expansion w.r.t. the uniformizer pi: divide the 1/pi coefficient by pi'
    FqPoly dpi = poly_derivative(F, P.pi);
    return poly_mod(F, poly_mul(F, a, poly_inv_mod(F, dpi, P.pi)), P.pi);
}

std::optional<unsigned> residue_prime_value(const Field& F, const FqPoly& cls) {
    if (cls.is_zero()) return 0u;
    if (cls.degree() > 0) return std::nullopt;
    if (!F.in_prime_field(cls.c[0])) return std::nullopt;
    return static_cast<unsigned>(cls.c[0]);
}

PartialFractions rf_partial_fractions(const Field& F, const RatFun& f) {
    PartialFractions out;
    if (f.is_zero()) return out;
    auto [q, r] = poly_divmod(F, f.num, f.den);
    out.poly = q;
    if (r.is_zero()) return out;
    auto factors = poly_factor(F, f.den);
    for (auto& [pi, e] : factors) {
        // principal part at pi: (r * (den/pi^e)^{-1} mod pi^e), then pi-adic digits
        FqPoly pie = poly_pow(F, pi, e);
        FqPoly rest = poly_divmod(F, f.den, pie).first;
        FqPoly part = poly_mod(F, r, pie);
        if (rest.degree() > 0 || rest.c[0] != 1)
            part = poly_mod(F, poly_mul(F, part, poly_inv_mod(F, rest, pie)), pie);
        for (int j = 1; j <= e; ++j) {
            auto [hi, digit] = poly_divmod(F, part, pi);
            if (!digit.is_zero())
                out.terms.push_back({pi, e - j + 1, digit});
            part = std::move(hi);
        }
        check_invariant(part.is_zero(), "partial fraction expansion overflow");
        // reorder the terms of this place by increasing exponent
        std::sort(out.terms.end() - std::count_if(out.terms.begin(), out.terms.end(),
                                                  [&](const auto& t) { return t.pi == pi; }),
                  out.terms.end(), [](const auto& a, const auto& b) { return a.e < b.e; });
    }
    return out;
}

RatFun rf_from_partial(const Field& F, const PartialFractions& pf) {
    RatFun out = rf_from_poly(pf.poly);
    for (auto& t : pf.terms) {
        RatFun term = rf_make(F, t.num, poly_pow(F, t.pi, t.e));
        out = rf_add(F, out, term);
    }
    return out;
}

RatFun rf_map(const FieldEmbedding& emb, const RatFun& f) {
    return {emb.map_poly(f.num), emb.map_poly(f.den)};
}

}  // namespace orefactor
