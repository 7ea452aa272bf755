// Copyright (c) 2026 The orefactor authors.
// SPDX-License-Identifier: Apache-2.0
//
// The p-Riccati equation f^(p-1) + f^p = y over F_Q(x) for constant y
// (y' = 0): pole bounds, the additive map rho, and the F_p-linear solver
// over the finite candidate space the bounds cut out.

#ifndef OREFACTOR_PRICCATI_HPP
#define OREFACTOR_PRICCATI_HPP

#include <optional>

#include "ratfun.hpp"

namespace orefactor {

// rho(f) = f^(p-1) + f^p; additive and F_p-linear in f.
RatFun rho(const Field& F, const RatFun& f);

// Allowed pole orders for a solution: max(floor(m_P/p), 1) at each finite
// pole of y of order m_P, and degree at most max(floor(m_inf/p), 0) at
// infinity. A solution with poles confined to poles(y) and infinity exists
// whenever the equation is solvable at all.
struct PoleBound {
    std::vector<std::pair<Place, long>> finite;  // sorted by PlaceLess
    long inf_degree = 0;

    Divisor as_divisor() const {
        Divisor d;
        for (auto& [P, n] : finite) d.add(P, n);
        d.add(Place::infinity(), inf_degree);
        return d;
    }
};

PoleBound pole_bound(const Field& F, const RatFun& y);  // not_constant if y' != 0

struct RiccatiSolution {
    std::optional<RatFun> particular;  // empty = no solution exists
    PoleBound bound;
};

// Solves rho(f) = y exactly over the bounded candidate space; returns the
// solution with free coordinates zeroed in the echelonized system (the
// least one in the canonical atom order). not_constant if y' != 0.
RiccatiSolution solve_p_riccati(const Field& F, const RatFun& y);

// f0 + g'/g; preserves rho. zero_input on g = 0.
RatFun shift_solution(const Field& F, const RatFun& f0, const RatFun& g);

}  // namespace orefactor

#endif
