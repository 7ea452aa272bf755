// Copyright (c) 2026 The orefactor authors.
// SPDX-License-Identifier: Apache-2.0

#include "engine.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace orefactor {

std::vector<IsotypicComponent> isotypic_split(const Field& F, const OreOp& l) {
    if (l.ord() < 1) raise(errc::invalid_argument, "isotypic split needs order >= 1");
    OreOp m = ore_monic(F, l).second;
    YPoly chi = central_charpoly(F, pcurvature_matrix(F, m));
    auto fac = factor_central(F, chi);
    const std::size_t n = fac.factors.size();
    std::vector<IsotypicComponent> comps(n);
    OreOp cur = m;
    for (std::size_t i = n; i-- > 0;) {
        auto& [ni, nui] = fac.factors[i];
        OreOp nop = yp_to_operator(F, yp_pow(F, ni, static_cast<unsigned>(nui)));
        OreOp g = ore_gcrd(F, cur, nop);
        comps[i] = {ni, nui, g};
        cur = ore_exact_right_quotient(F, cur, g);
    }
    check_invariant(cur == OreOp::one(), "isotypic peeling left a nontrivial cofactor");
    // product reconstruction
    OreOp prod = OreOp::one();
    for (auto& c : comps) prod = ore_mul(F, prod, c.factor);
    check_invariant(prod == m, "isotypic product does not reproduce the operator");
    // lclm reconstruction of the direct sum decomposition
    std::vector<OreOp> parts;
    for (auto& [ni, nui] : fac.factors) {
        OreOp nop = yp_to_operator(F, yp_pow(F, ni, static_cast<unsigned>(nui)));
        parts.push_back(ore_gcrd(F, m, nop));
    }
    check_invariant(ore_lclm_many(F, parts) == m,
                    "isotypic lclm does not reproduce the operator");
    return comps;
}

std::vector<OreOp> power_refine(const Field& F, const OreOp& l, const YPoly& n, int nu) {
    if (l.ord() < 1) raise(errc::invalid_argument, "power refinement needs order >= 1");
    OreOp m = ore_monic(F, l).second;
    check_invariant(m.ord() == nu * n.degree(), "order does not match N^nu");
    OreOp nop = yp_to_operator(F, n);
    std::vector<OreOp> rev;  // rightmost block first
    OreOp prev = OreOp::one();
    YPoly npow = YPoly::constant(rf_one());
    for (int i = 1; i <= nu && prev != m; ++i) {
        npow = yp_mul(F, npow, n);
        OreOp bi = ore_gcrd(F, m, yp_to_operator(F, npow));
        OreOp qi = ore_exact_right_quotient(F, bi, prev);
        if (qi.ord() > 0) {
            check_invariant(ore_right_divides(F, qi, nop),
                            "refined block does not divide N(D^p)");
            rev.push_back(qi);
        }
        prev = std::move(bi);
    }
    check_invariant(prev == m, "power filtration did not exhaust the operator");
    std::reverse(rev.begin(), rev.end());
    return rev;
}

CentralEmbedding classify_embedding(const Field& F, const YPoly& n) {
    if (!separability_check(F, n))
        raise(errc::unsupported_inseparable,
              "central factor generates an inseparable extension");
    CentralEmbedding out;
    out.n_degree = static_cast<unsigned>(n.degree());
    if (n.degree() == 1) {
        // N = Y - c(t); the equation lives over the base field
        out.y_image = rf_inflate_p(F, rf_neg(F, n.c[0]));
        return out;
    }
    for (auto& coeff : n.c)
        if (!coeff.is_zero() && (coeff.num.degree() > 0 || coeff.den.degree() > 0))
            raise(errc::unsupported_central_field,
                  "central factor of degree > 1 with nonconstant coefficients "
                  "(residue field is a function field of a curve)");
    out.constant_case = true;
    const unsigned d = out.n_degree;
    out.ext = std::make_shared<Field>(F.p(), F.k() * d, F.seed());
    out.emb = std::make_shared<FieldEmbedding>(F, *out.ext);
    // the smallest root of N in F_{q^d}
    FqPoly np;
    np.c.reserve(n.c.size());
    for (auto& coeff : n.c)
        np.c.push_back(coeff.is_zero() ? 0 : out.emb->map(coeff.num.c[0]));
    poly_trim(np);
    auto roots = poly_roots(*out.ext, np);
    check_invariant(!roots.empty(), "irreducible central factor has no root upstairs");
    out.beta = roots.front();
    out.y_image = rf_const(out.beta);
    return out;
}

namespace {

// write an extension element as sum_{u,j} c_{u,j} emb(z^u) beta^j and return
// the F_q coordinates along the beta powers
std::vector<fq> beta_decompose(const Field& F, const CentralEmbedding& ce, fq value) {
    const Field& E = *ce.ext;
    const unsigned k = F.k(), d = ce.n_degree, big = E.k();
    std::vector<fq> basis(k * d);
    {
        fq bj = 1;
        for (unsigned j = 0; j < d; ++j) {
            for (unsigned u = 0; u < k; ++u)
                basis[j * k + u] = E.mul(bj, ce.emb->map(F.pow(F.gen(), u)));
            bj = E.mul(bj, ce.beta);
        }
    }
    const unsigned p = F.p();
    std::vector<std::vector<unsigned>> m(big, std::vector<unsigned>(k * d + 1, 0));
    for (unsigned r = 0; r < big; ++r) {
        for (unsigned c = 0; c < k * d; ++c) m[r][c] = E.coeff(basis[c], r);
        m[r][k * d] = E.coeff(value, r);
    }
    auto inv_p = [&](unsigned x) {
        unsigned r = 1, b = x % p, e = p - 2;
        while (e) {
            if (e & 1) r = (r * b) % p;
            b = (b * b) % p;
            e >>= 1;
        }
        return r;
    };
    std::vector<int> piv(k * d, -1);
    unsigned row = 0;
    for (unsigned col = 0; col < k * d && row < big; ++col) {
        unsigned sel = row;
        while (sel < big && m[sel][col] == 0) ++sel;
        if (sel == big) continue;
        std::swap(m[sel], m[row]);
        unsigned iv = inv_p(m[row][col]);
        for (auto& x : m[row]) x = (x * iv) % p;
        for (unsigned r2 = 0; r2 < big; ++r2) {
            if (r2 == row || m[r2][col] == 0) continue;
            unsigned cm = m[r2][col];
            for (unsigned cc = 0; cc <= k * d; ++cc)
                m[r2][cc] = (m[r2][cc] + p - (cm * m[row][cc]) % p) % p;
        }
        piv[col] = static_cast<int>(row);
        ++row;
    }
    for (unsigned r2 = row; r2 < big; ++r2)
        check_invariant(m[r2][k * d] == 0, "beta powers do not span the extension");
    std::vector<fq> coords(d, 0);
    for (unsigned j = 0; j < d; ++j) {
        std::vector<unsigned> digits(k, 0);
        for (unsigned u = 0; u < k; ++u)
            if (piv[j * k + u] >= 0) digits[u] = m[piv[j * k + u]][k * d];
        coords[j] = F.from_coeffs(digits);
    }
    return coords;
}

// f over F_{q^d}(x) as sum a_j(x) beta^j with a_j over F_q(x)
std::vector<RatFun> field_decompose(const Field& F, const CentralEmbedding& ce,
                                    const RatFun& f) {
    const Field& E = *ce.ext;
    const unsigned d = ce.n_degree;
    std::vector<RatFun> out(d, rf_zero());
    if (f.is_zero()) return out;
    // multiply by the Galois conjugates of the denominator so it descends
    auto conj_poly = [&](const FqPoly& a, unsigned i) {
        FqPoly r = a;
        for (auto& c : r.c) c = E.frobenius(c, F.k() * i);
        return r;
    };
    FqPoly num = f.num, den = f.den;
    for (unsigned i = 1; i < d; ++i) {
        FqPoly cj = conj_poly(f.den, i);
        num = poly_mul(E, num, cj);
        den = poly_mul(E, den, cj);
    }
    auto den_down = ce.emb->preimage_poly(den);
    check_invariant(den_down.has_value(), "conjugated denominator did not descend");
    // decompose the numerator coefficient-wise along the beta powers
    std::vector<FqPoly> parts(d);
    for (int i = 0; i <= num.degree(); ++i) {
        auto coords = beta_decompose(F, ce, num.c[static_cast<std::size_t>(i)]);
        for (unsigned j = 0; j < d; ++j) {
            if (coords[j] == 0) continue;
            auto& pj = parts[j];
            if (pj.c.size() <= static_cast<std::size_t>(i)) pj.c.resize(i + 1, 0);
            pj.c[static_cast<std::size_t>(i)] = coords[j];
        }
    }
    for (unsigned j = 0; j < d; ++j) {
        poly_trim(parts[j]);
        out[j] = rf_make(F, parts[j], *den_down);
    }
    return out;
}

}  // namespace

OreOp phi_inverse(const Field& F, const CentralEmbedding& ce, const RatFun& f) {
    const unsigned p = F.p();
    if (!ce.constant_case) {
        OreOp out = OreOp::d();
        return ore_sub(F, out, OreOp::from_ratfun(f));
    }
    auto parts = field_decompose(F, ce, f);
    OreOp sum;
    sum.c.assign(p * (ce.n_degree - 1) + 1, rf_zero());
    for (unsigned j = 0; j < ce.n_degree; ++j) sum.c[p * j] = parts[j];
    ore_trim(sum);
    return ore_sub(F, OreOp::d(), sum);
}

namespace {

// per-component context for divisor extraction
struct NContext {
    YPoly n;
    OreOp nop;  // N(D^p), monic
    CentralEmbedding ce;
    std::optional<RatFun> riccati;  // over ce.field(F)

    const Field& kn(const Field& base) const { return ce.field(base); }
};

NContext make_ncontext(const Field& F, const YPoly& n) {
    NContext ctx;
    ctx.n = n;
    ctx.nop = yp_to_operator(F, n);
    ctx.ce = classify_embedding(F, n);
    ctx.riccati = solve_p_riccati(ctx.kn(F), ctx.ce.y_image).particular;
    return ctx;
}

OreOp extract_divisor(const Field& F, const NContext& ctx, const OreOp& l,
                      Certificate* cert) {
    const unsigned p = F.p();
    const unsigned d = ctx.ce.n_degree;
    OreOp lm = ore_monic(F, l).second;
    if (!ctx.riccati) {
        // division algebra: N(D^p) has no nontrivial divisor at all
        check_invariant(lm == ctx.nop, "proper divisor inside a division algebra");
        if (cert) *cert = Certificate::riccati_unsolvable;
        return lm;
    }
    if (lm.ord() == static_cast<int>(d)) {
        // already of the minimal module dimension, hence irreducible
        if (cert) *cert = Certificate::minimal_order;
        return lm;
    }
    OreOp lprime = ore_exact_right_quotient(F, ctx.nop, lm);
    check_invariant(ore_mul(F, lm, lprime) == ctx.nop,
                    "central cofactor does not commute");
    const Field& kn = ctx.kn(F);
    RatFun xk = rf_one();
    for (unsigned s = 0; s < p; ++s) {
        RatFun fs = s == 0 ? *ctx.riccati : shift_solution(kn, *ctx.riccati, xk);
        OreOp a = phi_inverse(F, ctx.ce, fs);
        OreOp m = ore_gcrd(F, ctx.nop, a);
        OreOp cand = ore_exact_right_quotient(F, ore_lclm_many(F, {m, lprime}), lprime);
        if (cand.ord() >= 1) {
            check_invariant(cand.ord() == static_cast<int>(d),
                            "extracted divisor has the wrong order");
            check_invariant(ore_right_divides(F, cand, lm),
                            "extracted operator does not divide on the right");
            if (cert) *cert = Certificate::minimal_order;
            return cand;
        }
        xk = rf_mul(kn, xk, rf_x());  // next shift: f + (s+1)/x
    }
    raise(errc::internal_invariant, "no shift produced a nontrivial divisor");
}

// factor one block (a right divisor of N(D^p)) into irreducibles
void factor_block(const Field& F, const NContext& ctx, const OreOp& block,
                  std::vector<OreOp>& factors, std::vector<Certificate>& certs) {
    std::vector<OreOp> rev;
    std::vector<Certificate> rev_certs;
    OreOp cur = block;
    while (cur.ord() > 0) {
        Certificate cert;
        OreOp m = extract_divisor(F, ctx, cur, &cert);
        rev.push_back(m);
        rev_certs.push_back(cert);
        if (m.ord() == cur.ord()) break;
        cur = ore_exact_right_quotient(F, ore_monic(F, cur).second, m);
        check_invariant(ore_right_divides(F, cur, ctx.nop),
                        "cofactor left the divisor lattice of N(D^p)");
    }
    for (std::size_t i = rev.size(); i-- > 0;) {
        factors.push_back(rev[i]);
        certs.push_back(rev_certs[i]);
    }
}

struct ComponentResult {
    std::vector<OreOp> factors;
    std::vector<Certificate> certs;
    bool complete = true;
    std::string message;
    errc code = errc::internal_invariant;
};

ComponentResult process_component(const Field& F, const IsotypicComponent& comp) {
    ComponentResult res;
    auto blocks = power_refine(F, comp.factor, comp.n, comp.nu);
    try {
        NContext ctx = make_ncontext(F, comp.n);
        for (auto& b : blocks) factor_block(F, ctx, b, res.factors, res.certs);
    } catch (const error& e) {
        if (e.code() != errc::unsupported_central_field &&
            e.code() != errc::unsupported_inseparable)
            throw;
        // keep the coarse refinement; it still multiplies back to the component
        res.factors = blocks;
        res.certs.assign(blocks.size(), Certificate::unsupported);
        res.complete = false;
        res.message = e.what();
        res.code = e.code();
    }
    return res;
}

}  // namespace

const char* certificate_name(Certificate c) {
    switch (c) {
        case Certificate::order_one: return "order-one";
        case Certificate::minimal_order: return "minimal-order";
        case Certificate::riccati_unsolvable: return "p-riccati-unsolvable";
        case Certificate::unsupported: return "unsupported";
    }
    return "?";
}

OreOp irreducible_right_divisor(const Field& F, const OreOp& l, const YPoly& n,
                                Certificate* cert) {
    if (l.ord() < 1) raise(errc::invalid_argument, "divisor extraction needs order >= 1");
    NContext ctx = make_ncontext(F, n);
    check_invariant(ore_right_divides(F, ore_monic(F, l).second, ctx.nop),
                    "operator does not divide N(D^p)");
    return extract_divisor(F, ctx, l, cert);
}

std::vector<OreOp> lclm_decomposition(const Field& F, const OreOp& l, const YPoly& n) {
    NContext ctx = make_ncontext(F, n);
    OreOp lm = ore_monic(F, l).second;
    check_invariant(ore_right_divides(F, lm, ctx.nop), "operator does not divide N(D^p)");
    if (!ctx.riccati)
        raise(errc::invalid_argument, "p-Riccati equation has no solution");
    OreOp lprime = ore_exact_right_quotient(F, ctx.nop, lm);
    const Field& kn = ctx.kn(F);
    std::vector<OreOp> out;
    RatFun xk = rf_one();
    for (unsigned s = 0; s < F.p(); ++s) {
        RatFun fs = s == 0 ? *ctx.riccati : shift_solution(kn, *ctx.riccati, xk);
        OreOp a = phi_inverse(F, ctx.ce, fs);
        OreOp m = ore_gcrd(F, ctx.nop, a);
        out.push_back(ore_exact_right_quotient(F, ore_lclm_many(F, {m, lprime}), lprime));
        xk = rf_mul(kn, xk, rf_x());
    }
    check_invariant(ore_lclm_many(F, out) == lm,
                    "shifted divisors do not reconstruct the operator");
    return out;
}

FactorChain factor_completely(const Field& F, const OreOp& l, unsigned threads) {
    if (l.ord() < 1) raise(errc::invalid_argument, "factorization needs order >= 1");
    auto [unit, m] = ore_monic(F, l);
    FactorChain chain;
    chain.unit = unit;
    auto comps = isotypic_split(F, m);
    std::vector<ComponentResult> results(comps.size());
    if (threads > 1 && comps.size() > 1) {
        std::vector<std::thread> pool;
        std::atomic<std::size_t> next{0};
        std::vector<std::exception_ptr> errors(comps.size());
        unsigned nt = std::min<unsigned>(threads, comps.size());
        for (unsigned t = 0; t < nt; ++t)
            pool.emplace_back([&] {
                while (true) {
                    std::size_t i = next.fetch_add(1);
                    if (i >= comps.size()) return;
                    try {
                        results[i] = process_component(F, comps[i]);
                    } catch (...) {
                        errors[i] = std::current_exception();
                    }
                }
            });
        for (auto& th : pool) th.join();
        for (auto& e : errors)
            if (e) std::rethrow_exception(e);
    } else {
        for (std::size_t i = 0; i < comps.size(); ++i)
            results[i] = process_component(F, comps[i]);
    }
    std::string message;
    errc code = errc::unsupported_central_field;
    for (auto& res : results) {
        chain.factors.insert(chain.factors.end(), res.factors.begin(), res.factors.end());
        chain.certs.insert(chain.certs.end(), res.certs.begin(), res.certs.end());
        if (!res.complete) {
            chain.complete = false;
            message = res.message;
            code = res.code;
        }
    }
    // first-order factors carry the simplest certificate
    for (std::size_t i = 0; i < chain.factors.size(); ++i)
        if (chain.factors[i].ord() == 1 && chain.certs[i] == Certificate::minimal_order)
            chain.certs[i] = Certificate::order_one;
    OreOp prod = OreOp::from_ratfun(chain.unit);
    for (auto& f : chain.factors) prod = ore_mul(F, prod, f);
    check_invariant(prod == l, "factor chain does not multiply back");
    if (!chain.complete) throw unsupported_error(code, message, chain);
    return chain;
}

IrreducibilityResult is_irreducible(const Field& F, const OreOp& l) {
    if (l.ord() < 1) raise(errc::invalid_argument, "irreducibility needs order >= 1");
    IrreducibilityResult res;
    if (l.ord() == 1) {
        res.irreducible = true;
        res.cert = Certificate::order_one;
        return res;
    }
    FactorChain chain = factor_completely(F, l);
    if (chain.factors.size() == 1) {
        res.irreducible = true;
        res.cert = chain.certs[0];
        return res;
    }
    res.irreducible = false;
    res.cert = chain.certs.back();
    res.witness = chain.factors.back();  // the rightmost factor divides l
    return res;
}

}  // namespace orefactor
