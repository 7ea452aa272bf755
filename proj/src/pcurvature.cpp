// Copyright (c) 2026 The orefactor authors.
// SPDX-License-Identifier: Apache-2.0

#include "pcurvature.hpp"

namespace orefactor {

namespace {

// one application of D to a reduced representative (coordinates in the basis
// 1, D, ..., D^(r-1)); l is monic of order r.
std::vector<RatFun> reduce_step(const Field& F, const OreOp& l,
                                const std::vector<RatFun>& v) {
    const std::size_t r = v.size();
    std::vector<RatFun> out(r, rf_zero());
    // D * sum v_i D^i = sum v_i' D^i + v_i D^(i+1); then D^r = -sum l_i D^i
    for (std::size_t i = 0; i < r; ++i) out[i] = rf_derivative(F, v[i]);
    for (std::size_t i = 0; i + 1 < r; ++i) out[i + 1] = rf_add(F, out[i + 1], v[i]);
    if (!v[r - 1].is_zero())
        for (std::size_t i = 0; i < r; ++i)
            out[i] = rf_sub(F, out[i], rf_mul(F, v[r - 1], l.c[i]));
    return out;
}

}  // namespace

PCurvMat pcurvature_matrix(const Field& F, const OreOp& l) {
    if (l.ord() < 1) raise(errc::invalid_argument, "p-curvature needs order >= 1");
    OreOp m = ore_monic(F, l).second;
    const std::size_t r = static_cast<std::size_t>(m.ord());
    // walk D^1, D^2, ... mod L once; columns are D^(p+j) mod L
    std::vector<RatFun> v(r, rf_zero());
    v[0] = rf_one();
    PCurvMat out;
    out.col.resize(r);
    for (unsigned s = 1; s < F.p() + r; ++s) {
        v = reduce_step(F, m, v);
        if (s >= F.p()) out.col[s - F.p()] = v;
    }
    check_invariant(out.col.size() == r, "p-curvature column count");
    return out;
}

namespace {

// characteristic polynomial of an upper Hessenberg matrix via the standard
// recurrence p_m = (Y - h_mm) p_{m-1} - sum_i h_im * (prod subdiag) p_{i-1}
YPoly hessenberg_charpoly(const Field& F, std::vector<std::vector<RatFun>> h) {
    const std::size_t n = h.size();
    const RatFun zero = rf_zero();
    // reduce to Hessenberg form by exact similarity transforms; pivots are
    // chosen with the smallest denominator (then numerator) degree.
    for (std::size_t j = 0; j + 2 < n; ++j) {
        std::size_t piv = 0;
        bool found = false;
        for (std::size_t i = j + 1; i < n; ++i) {
            if (h[i][j].is_zero()) continue;
            if (!found) { piv = i; found = true; continue; }
            const RatFun& a = h[i][j];
            const RatFun& b = h[piv][j];
            int da = a.den.degree() * 4 + a.num.degree();
            int db = b.den.degree() * 4 + b.num.degree();
            if (da < db) piv = i;
        }
        if (!found) continue;
        if (piv != j + 1) {
            // swap rows and columns piv <-> j+1 (a similarity)
            std::swap(h[piv], h[j + 1]);
            for (std::size_t i = 0; i < n; ++i) std::swap(h[i][piv], h[i][j + 1]);
        }
        RatFun inv = rf_inv(F, h[j + 1][j]);
        for (std::size_t i = j + 2; i < n; ++i) {
            if (h[i][j].is_zero()) continue;
            RatFun f = rf_mul(F, h[i][j], inv);
            // row_i -= f * row_{j+1}; col_{j+1} += f * col_i
            for (std::size_t cc = 0; cc < n; ++cc)
                h[i][cc] = rf_sub(F, h[i][cc], rf_mul(F, f, h[j + 1][cc]));
            for (std::size_t rr = 0; rr < n; ++rr)
                h[rr][j + 1] = rf_add(F, h[rr][j + 1], rf_mul(F, f, h[rr][i]));
        }
    }
    std::vector<YPoly> p(n + 1);
    p[0] = YPoly::constant(rf_one());
    for (std::size_t m = 1; m <= n; ++m) {
        YPoly lin = YPoly::y();
        lin.c[0] = rf_neg(F, h[m - 1][m - 1]);
        p[m] = yp_mul(F, lin, p[m - 1]);
        RatFun prod = rf_one();  // h[m-1][m-2] * h[m-2][m-3] * ... down to h[i][i-1]
        for (std::size_t i = m - 1; i >= 1; --i) {
            prod = rf_mul(F, prod, h[i][i - 1]);
            if (prod.is_zero()) break;
            RatFun w = rf_mul(F, h[i - 1][m - 1], prod);
            if (!w.is_zero())
                p[m] = yp_sub(F, p[m], yp_scale(F, p[i - 1], w));
        }
    }
    return p[n];
}

}  // namespace

YPoly charpoly_over_k(const Field& F, const PCurvMat& m) {
    const std::size_t n = m.col.size();
    std::vector<std::vector<RatFun>> h(n, std::vector<RatFun>(n, rf_zero()));
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) h[i][j] = m.col[j][i];
    return hessenberg_charpoly(F, std::move(h));
}

YPoly central_charpoly(const Field& F, const PCurvMat& m) {
    YPoly chi = charpoly_over_k(F, m);
    YPoly out;
    out.c.reserve(chi.c.size());
    for (auto& coeff : chi.c) {
        if (!rf_is_constant(F, coeff))
            raise(errc::internal_invariant,
                  "characteristic polynomial coefficient is not a constant");
        out.c.push_back(rf_constant_view(F, coeff));
    }
    return out;
}

}  // namespace orefactor
