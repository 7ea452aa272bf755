// Copyright (c) 2026 The orefactor authors.
// SPDX-License-Identifier: Apache-2.0
//
// Commutative factorization in F_q(t)[Y]: squarefree decomposition that is
// correct over the imperfect coefficient field (descending through both Y^p
// and t^p), and complete irreducible factorization by evaluation, Hensel
// lifting and subset recombination.

#ifndef OREFACTOR_CENTRALFACTOR_HPP
#define OREFACTOR_CENTRALFACTOR_HPP

#include <vector>

#include "ypoly.hpp"

namespace orefactor {

// f = prod g_j^j, g_j squarefree and pairwise coprime; f monic in Y.
std::vector<std::pair<YPoly, int>> central_squarefree(const Field& F, const YPoly& f);

struct CentralFactorization {
    std::vector<std::pair<YPoly, int>> factors;  // monic irreducible, sorted
};

// Complete irreducible factorization of a monic f in F_q(t)[Y]. Every
// emitted factor is verified by exact division; deterministic for a fixed
// field seed.
CentralFactorization factor_central(const Field& F, const YPoly& f);

// true iff dN/dY != 0 (N not a polynomial in Y^p)
bool separability_check(const Field& F, const YPoly& n);

}  // namespace orefactor

#endif
