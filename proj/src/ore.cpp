// Copyright (c) 2026 The orefactor authors.
// SPDX-License-Identifier: Apache-2.0

#include "ore.hpp"

namespace orefactor {

void ore_trim(OreOp& a) {
    while (!a.c.empty() && a.c.back().is_zero()) a.c.pop_back();
}

OreOp ore_add(const Field& F, const OreOp& a, const OreOp& b) {
    OreOp out;
    out.c.resize(std::max(a.c.size(), b.c.size()));
    for (std::size_t i = 0; i < out.c.size(); ++i) {
        const RatFun& x = i < a.c.size() ? a.c[i] : rf_zero();
        const RatFun& y = i < b.c.size() ? b.c[i] : rf_zero();
        out.c[i] = rf_add(F, x, y);
    }
    ore_trim(out);
    return out;
}

OreOp ore_neg(const Field& F, const OreOp& a) {
    OreOp out = a;
    for (auto& x : out.c) x = rf_neg(F, x);
    return out;
}

OreOp ore_sub(const Field& F, const OreOp& a, const OreOp& b) {
    return ore_add(F, a, ore_neg(F, b));
}

OreOp ore_scale(const Field& F, const RatFun& u, const OreOp& a) {
    if (u.is_zero()) return {};
    OreOp out = a;
    for (auto& x : out.c) x = rf_mul(F, u, x);
    ore_trim(out);
    return out;
}

OreOp ore_apply_d(const Field& F, const OreOp& a) {
    // D * (sum a_i D^i) = sum a_i D^(i+1) + a_i' D^i
    OreOp out;
    out.c.assign(a.c.size() + 1, rf_zero());
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        out.c[i + 1] = rf_add(F, out.c[i + 1], a.c[i]);
        out.c[i] = rf_add(F, out.c[i], rf_derivative(F, a.c[i]));
    }
    ore_trim(out);
    return out;
}

OreOp ore_mul(const Field& F, const OreOp& a, const OreOp& b) {
    if (a.is_zero() || b.is_zero()) return {};
    OreOp out;
    OreOp dib = b;  // D^i * b
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (!a.c[i].is_zero()) out = ore_add(F, out, ore_scale(F, a.c[i], dib));
        if (i + 1 < a.c.size()) dib = ore_apply_d(F, dib);
    }
    return out;
}

RatFun ore_apply(const Field& F, const OreOp& l, const RatFun& f) {
    RatFun out;
    RatFun der = f;
    for (std::size_t i = 0; i < l.c.size(); ++i) {
        if (!l.c[i].is_zero()) out = rf_add(F, out, rf_mul(F, l.c[i], der));
        if (i + 1 < l.c.size()) der = rf_derivative(F, der);
    }
    return out;
}

std::pair<OreOp, OreOp> ore_divmod(const Field& F, const OreOp& a, const OreOp& b, Side side) {
    if (b.is_zero()) raise(errc::division_by_zero_operator, "division by the zero operator");
    OreOp q, r = a;
    while (!r.is_zero() && r.ord() >= b.ord()) {
        RatFun c = rf_div(F, r.lc(), b.lc());
        OreOp term;
        term.c.assign(r.ord() - b.ord() + 1, rf_zero());
        term.c.back() = c;
        q = ore_add(F, q, term);
        OreOp prod = side == Side::right ? ore_mul(F, term, b) : ore_mul(F, b, term);
        r = ore_sub(F, r, prod);
    }
    return {q, r};
}

bool ore_right_divides(const Field& F, const OreOp& b, const OreOp& a) {
    if (b.is_zero()) return a.is_zero();
    return ore_divmod(F, a, b, Side::right).second.is_zero();
}

OreOp ore_exact_right_quotient(const Field& F, const OreOp& a, const OreOp& b) {
    auto [q, r] = ore_divmod(F, a, b, Side::right);
    if (!r.is_zero())
        raise(errc::inexact_division, "operator does not divide on the right");
    return q;
}

std::pair<RatFun, OreOp> ore_monic(const Field& F, const OreOp& a) {
    if (a.is_zero()) return {rf_zero(), OreOp{}};
    RatFun u = a.lc();
    return {u, ore_scale(F, rf_inv(F, u), a)};
}

OreOp ore_gcrd(const Field& F, OreOp a, OreOp b) {
    if (a.is_zero() && b.is_zero())
        raise(errc::invalid_argument, "gcrd of two zero operators");
    while (!b.is_zero()) {
        OreOp r = ore_divmod(F, a, b, Side::right).second;
        a = std::move(b);
        b = std::move(r);
    }
    return ore_monic(F, a).second;
}

OreOp ore_lclm(const Field& F, const OreOp& a, const OreOp& b) {
    if (a.is_zero() || b.is_zero())
        raise(errc::invalid_argument, "lclm with a zero operator");
    // extended Euclid on the right: track u_i with r_i = u_i*a + v_i*b;
    // at r_k = 0, u_k*a is the least common left multiple.
    OreOp r0 = a, r1 = b;
    OreOp u0 = OreOp::one(), u1 = OreOp::zero();
    while (!r1.is_zero()) {
        auto [q, r2] = ore_divmod(F, r0, r1, Side::right);
        OreOp u2 = ore_sub(F, u0, ore_mul(F, q, u1));
        r0 = std::move(r1);
        r1 = std::move(r2);
        u0 = std::move(u1);
        u1 = std::move(u2);
    }
    OreOp m = ore_mul(F, u1, a);
    check_invariant(!m.is_zero(), "lclm vanished");
    return ore_monic(F, m).second;
}

OreOp ore_lclm_many(const Field& F, const std::vector<OreOp>& ops) {
    OreOp acc;
    bool first = true;
    for (const auto& op : ops) {
        if (op.is_zero()) continue;
        if (op.ord() == 0) {
            if (first) { acc = OreOp::one(); first = false; }
            continue;
        }
        if (first) {
            acc = ore_monic(F, op).second;
            first = false;
        } else if (acc.ord() == 0) {
            acc = ore_monic(F, op).second;
        } else {
            acc = ore_lclm(F, acc, op);
        }
    }
    if (first) raise(errc::invalid_argument, "lclm of an empty list");
    return acc;
}

OreOp ore_map(const FieldEmbedding& emb, const OreOp& a) {
    OreOp out;
    out.c.reserve(a.c.size());
    for (auto& x : a.c) out.c.push_back(rf_map(emb, x));
    return out;
}

}  // namespace orefactor
