// Copyright (c) 2026 The orefactor authors.
// SPDX-License-Identifier: Apache-2.0
//
// Notes:
//   Squarefree decomposition over F_q(t) cannot assume a perfect coefficient
//   field: an irreducible polynomial in Y^p is squarefree but killed by
//   d/dY. The decomposition below peels the separable multiplicities with
//   the usual gcd ladder, deflates Y^p, and separates genuine p-th powers
//   from inseparable irreducibles with a gcd against d/dt.
//
//   Irreducible factorization follows the classical bivariate scheme: clear
//   and monicize to F_q[t][Y], evaluate t at a point keeping the image
//   squarefree (extending the constant field when needed), factor the image,
//   lift (t-a)-adically to precision deg_t + 1, and recombine subsets with
//   trial division. A monic factor of a monic G in F_q[t][Y] has t-degree
//   at most deg_t(G), so that precision is enough to recognize true factors
//   exactly.

#include "centralfactor.hpp"

#include <algorithm>
#include <optional>

namespace orefactor {

namespace {

void sqf_rec(const Field& F, const YPoly& f, int mult,
             std::vector<std::pair<YPoly, int>>& out);

// g monic with dg/dY = 0
void sqf_insep(const Field& F, const YPoly& g, int mult,
               std::vector<std::pair<YPoly, int>>& out) {
    if (g.degree() <= 0) return;
    if (yp_is_pth_power(F, g)) {
        sqf_rec(F, yp_pth_root(F, g), mult * static_cast<int>(F.p()), out);
        return;
    }
    YPoly h = yp_deflate_y(F, g, F.p());
    std::vector<std::pair<YPoly, int>> hparts;
    sqf_rec(F, h, 1, hparts);
    for (auto& [u, m] : hparts) {
        YPoly big = yp_inflate_y(F, u, F.p());
        // the p-th power part of u(Y^p) is exactly gcd with the t-derivative
        YPoly dt = yp_derivative_t(F, big);
        YPoly d = dt.is_zero() ? big : yp_gcd(F, big, dt);
        if (d.degree() > 0) {
            out.emplace_back(yp_pth_root(F, d), mult * m * static_cast<int>(F.p()));
            big = yp_exact_div(F, big, d);
        }
        if (big.degree() > 0) out.emplace_back(big, mult * m);
    }
}

void sqf_rec(const Field& F, const YPoly& f, int mult,
             std::vector<std::pair<YPoly, int>>& out) {
    if (f.degree() <= 0) return;
    YPoly fy = yp_derivative_y(F, f);
    if (fy.is_zero()) {
        sqf_insep(F, f, mult, out);
        return;
    }
    YPoly t = yp_gcd(F, f, fy);
    YPoly w = yp_exact_div(F, f, t);
    int i = 1;
    while (w.degree() > 0) {
        YPoly y = yp_gcd(F, w, t);
        YPoly z = yp_exact_div(F, w, y);
        if (z.degree() > 0) out.emplace_back(yp_monic(F, z), mult * i);
        w = std::move(y);
        t = yp_exact_div(F, t, w);
        ++i;
    }
    sqf_insep(F, t, mult, out);
}

}  // namespace

std::vector<std::pair<YPoly, int>> central_squarefree(const Field& F, const YPoly& f) {
    if (f.is_zero() || !f.is_monic())
        raise(errc::invalid_argument, "squarefree decomposition expects a monic input");
    std::vector<std::pair<YPoly, int>> raw;
    sqf_rec(F, f, 1, raw);
    // merge parts sharing a multiplicity (they are coprime)
    std::sort(raw.begin(), raw.end(),
              [](const auto& a, const auto& b) { return a.second < b.second; });
    std::vector<std::pair<YPoly, int>> out;
    for (auto& [g, m] : raw) {
        if (!out.empty() && out.back().second == m)
            out.back().first = yp_mul(F, out.back().first, g);
        else
            out.emplace_back(g, m);
    }
    return out;
}

bool separability_check(const Field& F, const YPoly& n) {
    return !yp_derivative_y(F, n).is_zero();
}

// ---------------------------------------------------------------------------
// irreducible factorization of a separable squarefree monic polynomial

namespace {

// identity embedding adapter when no extension is needed
struct Lift {
    const Field* big;
    const FieldEmbedding* emb;  // null = identity

    fq up(fq a) const { return emb ? emb->map(a) : a; }
    FqPoly up_poly(const FqPoly& a) const { return emb ? emb->map_poly(a) : a; }
    std::optional<FqPoly> down_poly(const FqPoly& a) const {
        if (!emb) return a;
        return emb->preimage_poly(a);
    }
};

// c(a + tau) as a polynomial in tau
FqPoly taylor_shift(const Field& F, const FqPoly& c, fq a) {
    FqPoly res;
    FqPoly lin{{a, 1}};
    poly_trim(lin);
    for (std::size_t i = c.c.size(); i-- > 0;) {
        res = poly_mul(F, res, lin);
        res = poly_add(F, res, FqPoly::constant(c.c[i]));
    }
    return res;
}

// polynomial in Y whose coefficients are truncated series in tau
struct SPoly {
    std::vector<FqPoly> c;

    int degree() const { return static_cast<int>(c.size()) - 1; }
};

void sp_truncate(const Field& F, SPoly& a, unsigned m) {
    (void)F;
    for (auto& x : a.c)
        if (x.c.size() > m) {
            x.c.resize(m);
            poly_trim(x);
        }
}

SPoly sp_mul(const Field& F, const SPoly& a, const SPoly& b, unsigned m) {
    SPoly out;
    if (a.c.empty() || b.c.empty()) return out;
    out.c.assign(a.c.size() + b.c.size() - 1, FqPoly::zero());
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j) {
            if (b.c[j].is_zero()) continue;
            out.c[i + j] = poly_add(F, out.c[i + j], poly_mul(F, a.c[i], b.c[j]));
        }
    }
    sp_truncate(F, out, m);
    return out;
}

SPoly sp_sub(const Field& F, const SPoly& a, const SPoly& b) {
    SPoly out;
    out.c.resize(std::max(a.c.size(), b.c.size()));
    for (std::size_t i = 0; i < out.c.size(); ++i) {
        const FqPoly& x = i < a.c.size() ? a.c[i] : FqPoly::zero();
        const FqPoly& y = i < b.c.size() ? b.c[i] : FqPoly::zero();
        out.c[i] = poly_sub(F, x, y);
    }
    return out;
}

// the Y-polynomial formed by the tau^l coefficients
FqPoly sp_slice(const SPoly& a, unsigned l) {
    FqPoly out;
    out.c.resize(a.c.size());
    for (std::size_t i = 0; i < a.c.size(); ++i)
        out.c[i] = l < a.c[i].c.size() ? a.c[i].c[l] : 0;
    poly_trim(out);
    return out;
}

struct HenselTower {
    const Field* big;
    fq a;                         // evaluation point
    unsigned m;                   // precision
    std::vector<SPoly> lifted;    // monic in Y
    std::vector<FqPoly> base;     // factors mod tau
    std::vector<FqPoly> bezout;   // (prod_{j!=i} base_j)^-1 mod base_i
};

// linear multifactor lifting of G = prod lifted (mod tau^m)
void hensel_lift(const Field& B, HenselTower& tw, const SPoly& g) {
    const unsigned m = tw.m;
    for (unsigned l = 1; l < m; ++l) {
        SPoly prod;
        prod.c = {FqPoly::constant(1)};
        for (auto& f : tw.lifted) prod = sp_mul(B, prod, f, l + 1);
        FqPoly e = sp_slice(sp_sub(B, g, prod), l);
        if (e.is_zero()) continue;
        for (std::size_t i = 0; i < tw.lifted.size(); ++i) {
            FqPoly delta = poly_mod(B, poly_mul(B, e, tw.bezout[i]), tw.base[i]);
            if (delta.is_zero()) continue;
            // add tau^l * delta to factor i
            SPoly& f = tw.lifted[i];
            for (std::size_t d = 0; d < delta.c.size(); ++d) {
                if (delta.c[d] == 0) continue;
                if (f.c.size() <= d) f.c.resize(d + 1, FqPoly::zero());
                while (f.c[d].c.size() <= l) f.c[d].c.push_back(0);
                f.c[d].c[l] = B.add(f.c[d].c[l], delta.c[d]);
                poly_trim(f.c[d]);
            }
        }
    }
}

// monic factor of G (over F_q[t][Y]) from a subset of lifted factors, if its
// coefficients descend to F_q; candidate coefficients are polynomials in t.
std::optional<YPoly> subset_candidate(const Field& B, const Lift& lift,
                                      const HenselTower& tw,
                                      const std::vector<std::size_t>& idx) {
    SPoly prod;
    prod.c = {FqPoly::constant(1)};
    for (auto i : idx) prod = sp_mul(B, prod, tw.lifted[i], tw.m);
    YPoly out;
    out.c.reserve(prod.c.size());
    for (auto& series : prod.c) {
        FqPoly in_t = taylor_shift(B, series, B.neg(tw.a));  // tau = t - a
        auto down = lift.down_poly(in_t);
        if (!down) return std::nullopt;
        out.c.push_back(rf_from_poly(*down));
    }
    yp_trim(out);
    return out;
}

void factor_separable(const Field& F, const YPoly& v, std::vector<YPoly>& out);

// factor a monic squarefree separable G with coefficients in F_q[t]
void factor_monic_poly_coeffs(const Field& F, const YPoly& g, std::vector<YPoly>& out) {
    const int r = g.degree();
    // evaluation field: F itself, then extensions of doubling degree
    std::uint64_t state = F.seed();
    for (auto& coeff : g.c)
        for (auto& cc : coeff.num.c) state = hash_mix(state, cc);
    for (unsigned e = 1;; e *= 2) {
        Field ext = e == 1 ? F : Field(F.p(), F.k() * e, F.seed());
        std::optional<FieldEmbedding> emb;
        if (e > 1) emb.emplace(F, ext);
        Lift lift{&ext, emb ? &*emb : nullptr};

        std::vector<FqPoly> gcoeff_big(g.c.size());
        unsigned degt = 0;
        for (std::size_t i = 0; i < g.c.size(); ++i) {
            gcoeff_big[i] = lift.up_poly(g.c[i].num);
            degt = std::max<unsigned>(degt, std::max(0, gcoeff_big[i].degree()));
        }
        const unsigned m = degt + 1;

        std::uint64_t tries = std::max<std::uint64_t>(2 * ext.q(), 64);
        for (std::uint64_t attempt = 0; attempt < tries; ++attempt) {
            fq a = splitmix64(state) % ext.q();
            FqPoly image;
            image.c.resize(g.c.size());
            for (std::size_t i = 0; i < g.c.size(); ++i)
                image.c[i] = poly_eval(ext, gcoeff_big[i], a);
            poly_trim(image);
            if (image.degree() != r) continue;
            if (poly_gcd(ext, image, poly_derivative(ext, image)).degree() != 0)
                continue;  // image not squarefree

            auto base = poly_factor(ext, image);
            std::vector<FqPoly> parts;
            for (auto& [h, mult] : base) {
                check_invariant(mult == 1, "squarefree image with repeated factor");
                parts.push_back(h);
            }
            if (parts.size() == 1) {
                out.push_back(g);
                return;
            }

            HenselTower tw;
            tw.big = &ext;
            tw.a = a;
            tw.m = m;
            tw.base = parts;
            tw.bezout.resize(parts.size());
            for (std::size_t i = 0; i < parts.size(); ++i) {
                FqPoly rest = FqPoly::constant(1);
                for (std::size_t j = 0; j < parts.size(); ++j)
                    if (j != i) rest = poly_mod(ext, poly_mul(ext, rest, parts[j]), parts[i]);
                tw.bezout[i] = poly_inv_mod(ext, rest, parts[i]);
            }
            tw.lifted.resize(parts.size());
            for (std::size_t i = 0; i < parts.size(); ++i) {
                tw.lifted[i].c.resize(parts[i].c.size());
                for (std::size_t d = 0; d < parts[i].c.size(); ++d)
                    tw.lifted[i].c[d] = FqPoly::constant(parts[i].c[d]);
            }
            SPoly gs;
            gs.c.resize(gcoeff_big.size());
            for (std::size_t i = 0; i < gcoeff_big.size(); ++i)
                gs.c[i] = taylor_shift(ext, gcoeff_big[i], a);
            hensel_lift(ext, tw, gs);

            // subset recombination with trial division
            YPoly rem = g;
            std::vector<std::size_t> alive(parts.size());
            for (std::size_t i = 0; i < alive.size(); ++i) alive[i] = i;
            std::size_t card = 1;
            while (2 * card <= alive.size()) {
                bool found = false;
                std::vector<std::size_t> pick(card);
                // enumerate subsets of `alive` of size `card`
                std::vector<std::size_t> comb(card);
                for (std::size_t i = 0; i < card; ++i) comb[i] = i;
                while (true) {
                    for (std::size_t i = 0; i < card; ++i) pick[i] = alive[comb[i]];
                    auto cand = subset_candidate(ext, lift, tw, pick);
                    if (cand) {
                        auto [q, rr] = yp_divmod(F, rem, *cand);
                        if (rr.is_zero()) {
                            out.push_back(*cand);
                            rem = q;
                            std::vector<std::size_t> next;
                            for (auto idx : alive)
                                if (std::find(pick.begin(), pick.end(), idx) == pick.end())
                                    next.push_back(idx);
                            alive = std::move(next);
                            found = true;
                            break;
                        }
                    }
                    // next combination
                    std::size_t i = card;
                    while (i > 0 && comb[i - 1] == alive.size() - card + (i - 1)) --i;
                    if (i == 0) break;
                    ++comb[i - 1];
                    for (std::size_t j = i; j < card; ++j) comb[j] = comb[j - 1] + 1;
                }
                if (!found) ++card;
            }
            if (rem.degree() > 0) out.push_back(rem);
            return;
        }
        if (ext.q() > (std::uint64_t(1) << 16))
            raise(errc::internal_invariant, "no good evaluation point found");
    }
}

// factor a monic squarefree separable polynomial over F_q(t)
void factor_separable(const Field& F, const YPoly& v, std::vector<YPoly>& out) {
    if (v.degree() <= 0) return;
    if (v.degree() == 1) {
        out.push_back(v);
        return;
    }
    // clear denominators: d = lcm of coefficient denominators
    FqPoly d = FqPoly::constant(1);
    for (auto& coeff : v.c) {
        FqPoly g = poly_gcd(F, d, coeff.den);
        d = poly_mul(F, poly_divmod(F, d, g).first, coeff.den);
    }
    const int r = v.degree();
    // monicize: G(Y) = d^(r-1) * (cleared v)(Y/d) stays monic with F_q[t] coefficients
    YPoly g;
    g.c.resize(v.c.size());
    for (int i = 0; i <= r; ++i) {
        // v_i * d^(r-i) is a polynomial
        RatFun w = rf_mul(F, v.c[i], rf_from_poly(poly_pow(F, d, r - i)));
        check_invariant(w.is_poly(), "monicization left a denominator");
        g.c[i] = w;
    }
    std::vector<YPoly> gfactors;
    factor_monic_poly_coeffs(F, g, gfactors);
    // map back: factor(Y) -> monic factor(d*Y) / d^deg
    for (auto& gf : gfactors) {
        int s = gf.degree();
        YPoly back;
        back.c.resize(gf.c.size());
        for (int i = 0; i <= s; ++i)
            back.c[i] = rf_div(F, gf.c[i], rf_from_poly(poly_pow(F, d, s - i)));
        check_invariant(back.is_monic(), "back substitution lost monicity");
        out.push_back(back);
    }
}

// factor a monic squarefree polynomial (separable or not) over F_q(t)
void factor_squarefree_central(const Field& F, const YPoly& g, std::vector<YPoly>& out) {
    if (g.degree() <= 0) return;
    YPoly gy = yp_derivative_y(F, g);
    YPoly insep = gy.is_zero() ? g : yp_gcd(F, g, gy);
    YPoly sep = yp_exact_div(F, g, insep);
    if (sep.degree() > 0) factor_separable(F, sep, out);
    if (insep.degree() > 0) {
        // all coefficients sit on powers of Y^p; factors inflate from the
        // deflation (u(Y^p) stays irreducible since the input is squarefree)
        YPoly h = yp_deflate_y(F, insep, F.p());
        std::vector<YPoly> sub;
        factor_squarefree_central(F, h, sub);
        for (auto& u : sub) out.push_back(yp_inflate_y(F, u, F.p()));
    }
}

}  // namespace

CentralFactorization factor_central(const Field& F, const YPoly& f) {
    if (f.is_zero() || !f.is_monic())
        raise(errc::invalid_argument, "factor_central expects a monic input");
    CentralFactorization out;
    for (auto& [g, m] : central_squarefree(F, f)) {
        std::vector<YPoly> irr;
        factor_squarefree_central(F, g, irr);
        for (auto& n : irr) out.factors.emplace_back(n, m);
    }
    std::sort(out.factors.begin(), out.factors.end(),
              [](const auto& a, const auto& b) { return yp_less(a.first, b.first); });
    // verification: the product must reproduce the input exactly
    YPoly prod = YPoly::constant(rf_one());
    for (auto& [n, m] : out.factors)
        prod = yp_mul(F, prod, yp_pow(F, n, static_cast<unsigned>(m)));
    check_invariant(prod == f, "factorization product mismatch");
    return out;
}

}  // namespace orefactor
