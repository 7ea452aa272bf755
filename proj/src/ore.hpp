// Copyright (c) 2026 The orefactor authors.
// SPDX-License-Identifier: Apache-2.0
//
// The ring K<D> of linear differential operators over K = F_q(x), with the
// commutation rule D*a = a*D + a'. Euclidean division on both sides, gcrd,
// lclm via the extended remainder sequence, and exact quotients.

#ifndef OREFACTOR_ORE_HPP
#define OREFACTOR_ORE_HPP

#include <utility>
#include <vector>

#include "ratfun.hpp"

namespace orefactor {

// Dense operator sum c_i D^i; no trailing zero coefficients, zero = empty.
struct OreOp {
    std::vector<RatFun> c;

    int ord() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    const RatFun& lc() const { return c.back(); }

    static OreOp zero() { return {}; }
    static OreOp one() { return {{rf_one()}}; }
    static OreOp d() { return {{rf_zero(), rf_one()}}; }
    static OreOp from_ratfun(const RatFun& f) {
        return f.is_zero() ? OreOp{} : OreOp{{f}};
    }

    bool operator==(const OreOp& o) const { return c == o.c; }
    bool operator!=(const OreOp& o) const { return c != o.c; }
};

void ore_trim(OreOp& a);
OreOp ore_add(const Field& F, const OreOp& a, const OreOp& b);
OreOp ore_sub(const Field& F, const OreOp& a, const OreOp& b);
OreOp ore_neg(const Field& F, const OreOp& a);
OreOp ore_mul(const Field& F, const OreOp& a, const OreOp& b);
OreOp ore_scale(const Field& F, const RatFun& u, const OreOp& a);  // u * a
OreOp ore_apply_d(const Field& F, const OreOp& a);                 // D * a

// L(f) = sum c_i f^(i)
RatFun ore_apply(const Field& F, const OreOp& l, const RatFun& f);

enum class Side { right, left };

// right: a = q*b + r; left: a = b*q + r; ord r < ord b in both cases.
std::pair<OreOp, OreOp> ore_divmod(const Field& F, const OreOp& a, const OreOp& b, Side side);

bool ore_right_divides(const Field& F, const OreOp& b, const OreOp& a);  // b | a on the right
OreOp ore_exact_right_quotient(const Field& F, const OreOp& a, const OreOp& b);  // a = q*b

// monic greatest common right divisor (not both zero)
OreOp ore_gcrd(const Field& F, OreOp a, OreOp b);
// monic least common left multiple (both nonzero)
OreOp ore_lclm(const Field& F, const OreOp& a, const OreOp& b);
OreOp ore_lclm_many(const Field& F, const std::vector<OreOp>& ops);

// unit u and monic m with a = u * m
std::pair<RatFun, OreOp> ore_monic(const Field& F, const OreOp& a);

OreOp ore_map(const FieldEmbedding& emb, const OreOp& a);

}  // namespace orefactor

#endif
