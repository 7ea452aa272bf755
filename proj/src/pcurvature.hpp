// Copyright (c) 2026 The orefactor authors.
// SPDX-License-Identifier: Apache-2.0
//
// The p-curvature of a differential operator: the matrix of left
// multiplication by D^p on K<D>/K<D>L, and its characteristic polynomial,
// which has constant coefficients and therefore lives in F_q(t)[Y], t = x^p.

#ifndef OREFACTOR_PCURVATURE_HPP
#define OREFACTOR_PCURVATURE_HPP

#include <vector>

#include "ypoly.hpp"

namespace orefactor {

struct PCurvMat {
    // column j holds the coordinates of D^(p+j) mod L in basis 1, D, ..., D^(r-1)
    std::vector<std::vector<RatFun>> col;

    int size() const { return static_cast<int>(col.size()); }
};

// ord L >= 1; L is normalized monic internally.
PCurvMat pcurvature_matrix(const Field& F, const OreOp& l);

// det(Y*I - M) over K, computed by Hessenberg reduction with exact
// arithmetic; monic in Y with coefficients in K.
YPoly charpoly_over_k(const Field& F, const PCurvMat& m);

// charpoly with every coefficient rewritten through the constant view into
// F_q(t); internal_invariant if a coefficient fails the constancy check.
YPoly central_charpoly(const Field& F, const PCurvMat& m);

}  // namespace orefactor

#endif
