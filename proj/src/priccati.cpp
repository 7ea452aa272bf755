// Copyright (c) 2026 The orefactor authors.
// SPDX-License-Identifier: Apache-2.0

#include "priccati.hpp"

#include <algorithm>

namespace orefactor {

RatFun rho(const Field& F, const RatFun& f) {
    return rf_add(F, rf_derivative(F, f, F.p() - 1), rf_pow_p(F, f));
}

PoleBound pole_bound(const Field& F, const RatFun& y) {
    if (!rf_is_constant(F, y))
        raise(errc::not_constant, "p-Riccati right-hand side must be a constant");
    PoleBound out;
    for (auto& [P, m] : rf_poles(F, y))
        out.finite.emplace_back(P, std::max<long>(m / F.p(), 1));
    std::sort(out.finite.begin(), out.finite.end(),
              [](const auto& a, const auto& b) { return PlaceLess{}(a.first, b.first); });
    long m_inf = y.is_zero() ? 0 : -(y.den.degree() - y.num.degree());
    out.inf_degree = std::max<long>(m_inf / static_cast<long>(F.p()), 0);
    return out;
}

namespace {

// The ambient space rho maps the candidates into: polynomials of degree up
// to inf_cap plus principal parts of order up to cap_P at each finite place.
struct Ambient {
    const Field* F;
    std::vector<std::pair<FqPoly, long>> pis;  // (pi, cap)
    long inf_cap = 0;
    std::size_t slots = 0;  // FqElem slots

    std::size_t dim() const { return slots * F->k(); }
};

Ambient make_ambient(const Field& F, const PoleBound& b, const RatFun& y) {
    Ambient a;
    a.F = &F;
    long m_inf = y.is_zero() ? 0 : -(y.den.degree() - y.num.degree());
    a.inf_cap = std::max(static_cast<long>(F.p()) * b.inf_degree, std::max(m_inf, 0L));
    for (auto& [P, n] : b.finite) {
        long m = -rf_valuation(F, y, P);
        a.pis.emplace_back(P.pi, std::max(static_cast<long>(F.p()) * n, m));
    }
    a.slots = static_cast<std::size_t>(a.inf_cap + 1);
    for (auto& [pi, cap] : a.pis)
        a.slots += static_cast<std::size_t>(cap) * static_cast<std::size_t>(pi.degree());
    return a;
}

// F_p coordinates of w; internal_invariant if w falls outside the space.
std::vector<unsigned> ambient_coords(const Ambient& a, const RatFun& w) {
    const Field& F = *a.F;
    std::vector<unsigned> out(a.dim(), 0);
    if (w.is_zero()) return out;
    auto put = [&](std::size_t s, fq v) {
        for (unsigned d = 0; d < F.k(); ++d) out[s * F.k() + d] = F.coeff(v, d);
    };
    auto [q, r] = poly_divmod(F, w.num, w.den);
    check_invariant(q.degree() <= a.inf_cap, "ambient: degree at infinity exceeds the cap");
    for (int i = 0; i <= q.degree(); ++i) put(i, q.c[i]);
    std::size_t slot = static_cast<std::size_t>(a.inf_cap + 1);
    FqPoly residual = w.den;  // the part of the denominator not yet explained
    for (auto& [pi, cap] : a.pis) {
        long f = poly_valuation(F, w.den, pi);
        check_invariant(f <= cap, "ambient: pole order exceeds the cap");
        if (f > 0) {
            FqPoly pef = poly_pow(F, pi, f);
            FqPoly rest = poly_divmod(F, w.den, pef).first;
            residual = poly_divmod(F, residual, pef).first;
            FqPoly part = poly_mod(F, r, pef);
            part = poly_mod(F, poly_mul(F, part, poly_inv_mod(F, rest, pef)), pef);
            for (long j = 1; j <= f; ++j) {
                auto [hi, digit] = poly_divmod(F, part, pi);
                long e = f - j + 1;  // digit belongs to 1/pi^e
                std::size_t base = slot + static_cast<std::size_t>((e - 1) * pi.degree());
                for (int u = 0; u < pi.degree(); ++u)
                    put(base + static_cast<std::size_t>(u),
                        u <= digit.degree() ? digit.c[u] : 0);
                part = std::move(hi);
            }
        }
        slot += static_cast<std::size_t>(cap) * static_cast<std::size_t>(pi.degree());
    }
    check_invariant(residual.degree() == 0, "ambient: pole outside the support");
    return out;
}

}  // namespace

RiccatiSolution solve_p_riccati(const Field& F, const RatFun& y) {
    RiccatiSolution out;
    out.bound = pole_bound(F, y);

    // candidate atoms in canonical order: monomials up to the infinity
    // bound, then x^u/pi^e per finite place, each tensored with the z-power
    // basis of F_Q over F_p
    std::vector<RatFun> atoms;
    for (long j = 0; j <= out.bound.inf_degree; ++j)
        for (unsigned v = 0; v < F.k(); ++v) {
            FqPoly mono;
            mono.c.assign(static_cast<std::size_t>(j) + 1, 0);
            mono.c[static_cast<std::size_t>(j)] = F.pow(F.gen(), v);
            atoms.push_back(rf_from_poly(mono));
        }
    for (auto& [P, cap] : out.bound.finite)
        for (long e = 1; e <= cap; ++e)
            for (int u = 0; u < P.pi.degree(); ++u)
                for (unsigned v = 0; v < F.k(); ++v) {
                    FqPoly mono;
                    mono.c.assign(static_cast<std::size_t>(u) + 1, 0);
                    mono.c[static_cast<std::size_t>(u)] = F.pow(F.gen(), v);
                    atoms.push_back(rf_make(F, mono, poly_pow(F, P.pi, e)));
                }

    Ambient amb = make_ambient(F, out.bound, y);
    const std::size_t rows = amb.dim(), cols = atoms.size();
    std::vector<std::vector<unsigned>> m(rows, std::vector<unsigned>(cols + 1, 0));
    for (std::size_t c = 0; c < cols; ++c) {
        auto col = ambient_coords(amb, rho(F, atoms[c]));
        for (std::size_t r = 0; r < rows; ++r) m[r][c] = col[r];
    }
    {
        auto rhs = ambient_coords(amb, y);
        for (std::size_t r = 0; r < rows; ++r) m[r][cols] = rhs[r];
    }

    // Gaussian elimination over F_p; the particular solution zeroes every
    // free column, i.e. the least solution in the atom order.
    const unsigned p = F.p();
    auto inv_p = [&](unsigned x) {
        unsigned r = 1, b = x % p, e = p - 2;
        while (e) {
            if (e & 1) r = (r * b) % p;
            b = (b * b) % p;
            e >>= 1;
        }
        return r;
    };
    std::vector<long> pivot_of_col(cols, -1);
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t sel = row;
        while (sel < rows && m[sel][col] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(m[sel], m[row]);
        unsigned iv = inv_p(m[row][col]);
        for (auto& x : m[row]) x = (x * iv) % p;
        for (std::size_t r2 = 0; r2 < rows; ++r2) {
            if (r2 == row || m[r2][col] == 0) continue;
            unsigned cmul = m[r2][col];
            for (std::size_t cc = col; cc <= cols; ++cc)
                m[r2][cc] = (m[r2][cc] + p - (cmul * m[row][cc]) % p) % p;
        }
        pivot_of_col[col] = static_cast<long>(row);
        ++row;
    }
    for (std::size_t r2 = row; r2 < rows; ++r2)
        if (m[r2][cols] != 0) return out;  // inconsistent: no solution exists

    RatFun f;
    for (std::size_t c = 0; c < cols; ++c) {
        if (pivot_of_col[c] < 0) continue;
        unsigned v = m[static_cast<std::size_t>(pivot_of_col[c])][cols];
        if (v) f = rf_add(F, f, rf_scale(F, atoms[c], F.from_int(v)));
    }
    check_invariant(rho(F, f) == y, "p-Riccati solver returned a non-solution");
    out.particular = f;
    return out;
}

RatFun shift_solution(const Field& F, const RatFun& f0, const RatFun& g) {
    return rf_add(F, f0, rf_log_derivative(F, g));
}

}  // namespace orefactor
