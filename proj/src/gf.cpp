// Copyright (c) 2026 The orefactor authors.
// SPDX-License-Identifier: Apache-2.0
//
// Notes:
//   [1] D. Knuth. The Art of Computer Programming, vol. 2, 3rd ed., 4.6.2.
//   [2] J. von zur Gathen, J. Gerhard. Modern Computer Algebra, ch. 14
//       (distinct-degree / equal-degree splitting).
//   [3] H. Cohen. A Course in Computational Algebraic Number Theory, 3.4.

#include "gf.hpp"

#include <algorithm>

namespace orefactor {

namespace {

constexpr std::uint64_t kTableCap = 1u << 16;

bool is_prime_small(unsigned n) {
    if (n < 2) return false;
    for (unsigned d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Field

fq Field::from_int(long long v) const {
    long long r = v % static_cast<long long>(p_);
    if (r < 0) r += p_;
    return static_cast<fq>(r);
}

unsigned Field::coeff(fq a, unsigned i) const {
    for (unsigned j = 0; j < i; ++j) a /= p_;
    return static_cast<unsigned>(a % p_);
}

fq Field::from_coeffs(const std::vector<unsigned>& c) const {
    check_invariant(c.size() <= k_, "from_coeffs: too many coefficients");
    fq v = 0;
    for (std::size_t i = c.size(); i-- > 0;) v = v * p_ + (c[i] % p_);
    return v;
}

fq Field::add(fq a, fq b) const {
    if (p_ == 2) return a ^ b;
    fq out = 0, mul = 1;
    for (unsigned i = 0; i < k_; ++i) {
        out += mul * ((a % p_ + b % p_) % p_);
        a /= p_;
        b /= p_;
        mul *= p_;
    }
    return out;
}

fq Field::neg(fq a) const {
    if (p_ == 2) return a;
    fq out = 0, mul = 1;
    for (unsigned i = 0; i < k_; ++i) {
        out += mul * ((p_ - a % p_) % p_);
        a /= p_;
        mul *= p_;
    }
    return out;
}

fq Field::sub(fq a, fq b) const { return add(a, neg(b)); }

fq Field::mul_slow(fq a, fq b) const {
    if (a == 0 || b == 0) return 0;
    // schoolbook product of digit vectors, then reduction by the modulus
    std::vector<unsigned> da(k_), db(k_), prod(2 * k_ - 1, 0);
    fq t = a;
    for (unsigned i = 0; i < k_; ++i) { da[i] = t % p_; t /= p_; }
    t = b;
    for (unsigned i = 0; i < k_; ++i) { db[i] = t % p_; t /= p_; }
    for (unsigned i = 0; i < k_; ++i) {
        if (!da[i]) continue;
        for (unsigned j = 0; j < k_; ++j)
            prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
    }
    for (std::size_t i = prod.size(); i-- > k_;) {
        unsigned c = prod[i];
        if (!c) continue;
        prod[i] = 0;
        // x^i = x^(i-k) * (-(m_0 + ... + m_{k-1} x^{k-1}))
        for (unsigned j = 0; j < k_; ++j) {
            unsigned sub = (c * modulus_[j]) % p_;
            prod[i - k_ + j] = (prod[i - k_ + j] + p_ - sub) % p_;
        }
    }
    fq out = 0;
    for (std::size_t i = k_; i-- > 0;) out = out * p_ + prod[i];
    return out;
}

fq Field::inv_slow(fq a) const {
    if (a == 0) raise(errc::division_by_zero, "inverse of zero field element");
    // extended Euclid in F_p[z] between a (as a polynomial) and the modulus
    using Vec = std::vector<unsigned>;
    auto deg = [](const Vec& v) {
        for (std::size_t i = v.size(); i-- > 0;)
            if (v[i]) return static_cast<int>(i);
        return -1;
    };
    auto inv_p = [&](unsigned x) {
        unsigned r = 1, b = x % p_, e = p_ - 2;
        while (e) {
            if (e & 1) r = (r * b) % p_;
            b = (b * b) % p_;
            e >>= 1;
        }
        return r;
    };
    Vec r0(modulus_.begin(), modulus_.end());
    Vec r1(k_, 0);
    fq t = a;
    for (unsigned i = 0; i < k_; ++i) { r1[i] = t % p_; t /= p_; }
    Vec s0(k_ + 1, 0), s1(k_ + 1, 0);
    s1[0] = 1;  // s tracks the coefficient of a
    while (deg(r1) > 0) {
        int d0 = deg(r0), d1 = deg(r1);
        while (d0 >= d1) {
            unsigned c = (r0[d0] * inv_p(r1[d1])) % p_;
            unsigned shift = d0 - d1;
            for (int j = 0; j <= d1; ++j)
                r0[j + shift] = (r0[j + shift] + p_ - (c * r1[j]) % p_) % p_;
            for (unsigned j = 0; j + shift < s0.size(); ++j)
                s0[j + shift] = (s0[j + shift] + p_ - (c * s1[j]) % p_) % p_;
            d0 = deg(r0);
            if (d0 < 0) break;
        }
        std::swap(r0, r1);
        std::swap(s0, s1);
    }
    check_invariant(deg(r1) == 0, "field modulus not irreducible");
    unsigned scale = inv_p(r1[0]);
    fq out = 0;
    for (std::size_t i = k_; i-- > 0;)
        out = out * p_ + (i < s1.size() ? (s1[i] * scale) % p_ : 0);
    return out;
}

fq Field::mul(fq a, fq b) const {
    if (a == 0 || b == 0) return 0;
    if (has_tables_)
        return exp_[(log_[a] + log_[b]) % (q_ - 1)];
    return mul_slow(a, b);
}

fq Field::inv(fq a) const {
    if (a == 0) raise(errc::division_by_zero, "inverse of zero field element");
    if (has_tables_)
        return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
    return inv_slow(a);
}

fq Field::pow(fq a, std::uint64_t e) const {
    if (a == 0) return e == 0 ? 1 : 0;
    if (has_tables_) {
        std::uint64_t le = (static_cast<std::uint64_t>(log_[a]) * (e % (q_ - 1))) % (q_ - 1);
        return exp_[le];
    }
    fq r = 1;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

fq Field::frobenius(fq a, unsigned e) const {
    e %= k_;
    std::uint64_t exp = 1;
    for (unsigned i = 0; i < e; ++i) exp *= p_;
    return pow(a, exp);
}

fq Field::pth_root(fq a) const {
    return frobenius(a, k_ - 1);
}

void Field::init_tables() {
    q_ = 1;
    for (unsigned i = 0; i < k_; ++i) {
        check_invariant(q_ <= (std::uint64_t(1) << 62) / p_, "q does not fit a native integer");
        q_ *= p_;
    }
    if (q_ > kTableCap) return;
    // find the smallest generator of the multiplicative group
    auto divisors = prime_divisors(q_ - 1);
    fq g = 0;
    for (fq cand = q_ > 2 ? 2 : 1; cand < q_; ++cand) {
        bool ok = true;
        for (auto r : divisors) {
            fq t = cand;
            std::uint64_t e = (q_ - 1) / r;
            fq acc = 1;
            while (e) {
                if (e & 1) acc = mul_slow(acc, t);
                t = mul_slow(t, t);
                e >>= 1;
            }
            if (acc == 1) { ok = false; break; }
        }
        if (ok) { g = cand; break; }
    }
    check_invariant(g != 0 || q_ == 2, "no multiplicative generator found");
    if (q_ == 2) g = 1;
    exp_.resize(q_ - 1);
    log_.assign(q_, 0);
    fq cur = 1;
    for (std::uint64_t i = 0; i < q_ - 1; ++i) {
        exp_[i] = static_cast<std::uint32_t>(cur);
        log_[cur] = static_cast<std::uint32_t>(i);
        cur = mul_slow(cur, g);
    }
    check_invariant(cur == 1, "generator order mismatch");
    has_tables_ = true;
}

Field::Field(unsigned p, unsigned k, const std::vector<unsigned>& modulus, std::uint64_t seed)
    : p_(p), k_(k), seed_(seed), modulus_(modulus) {
    if (!is_prime_small(p) || p > 13)
        raise(errc::invalid_argument, "characteristic must be a prime <= 13");
    if (k < 1) raise(errc::invalid_argument, "extension degree must be >= 1");
    if (modulus_.size() != k_ + 1 || modulus_.back() != 1)
        raise(errc::invalid_argument, "modulus must be monic of degree k");
    for (auto& c : modulus_) c %= p_;
    init_tables();
    if (k_ > 1) {
        Field base(p, 1, std::vector<unsigned>{0, 1}, seed);
        FqPoly m;
        for (auto c : modulus_) m.c.push_back(c);
        poly_trim(m);
        if (!poly_irreducible(base, m))
            raise(errc::invalid_argument, "modulus is not irreducible over F_p");
    }
}

Field::Field(unsigned p, unsigned k, std::uint64_t seed) : p_(p), k_(k), seed_(seed) {
    if (!is_prime_small(p) || p > 13)
        raise(errc::invalid_argument, "characteristic must be a prime <= 13");
    if (k < 1) raise(errc::invalid_argument, "extension degree must be >= 1");
    if (k == 1) {
        modulus_ = {0, 1};  // F_p[z]/(z)
        init_tables();
        return;
    }
    // lexicographically smallest monic irreducible of degree k over F_p
    Field base(p, 1, seed);
    std::uint64_t count = 1;
    for (unsigned i = 0; i < k; ++i) count *= p;
    for (std::uint64_t tail = 0; tail < count; ++tail) {
        FqPoly cand;
        std::uint64_t t = tail;
        for (unsigned i = 0; i < k; ++i) { cand.c.push_back(t % p); t /= p; }
        cand.c.push_back(1);
        if (poly_irreducible(base, cand)) {
            modulus_.resize(k + 1);
            for (unsigned i = 0; i <= k; ++i) modulus_[i] = static_cast<unsigned>(cand.c[i]);
            init_tables();
            return;
        }
    }
    raise(errc::internal_invariant, "no irreducible modulus found");
}

// ---------------------------------------------------------------------------
// FqPoly arithmetic

void poly_trim(FqPoly& a) {
    while (!a.c.empty() && a.c.back() == 0) a.c.pop_back();
}

FqPoly poly_add(const Field& F, const FqPoly& a, const FqPoly& b) {
    FqPoly out;
    out.c.resize(std::max(a.c.size(), b.c.size()), 0);
    for (std::size_t i = 0; i < out.c.size(); ++i) {
        fq x = i < a.c.size() ? a.c[i] : 0;
        fq y = i < b.c.size() ? b.c[i] : 0;
        out.c[i] = F.add(x, y);
    }
    poly_trim(out);
    return out;
}

FqPoly poly_neg(const Field& F, const FqPoly& a) {
    FqPoly out = a;
    for (auto& x : out.c) x = F.neg(x);
    return out;
}

FqPoly poly_sub(const Field& F, const FqPoly& a, const FqPoly& b) {
    return poly_add(F, a, poly_neg(F, b));
}

FqPoly poly_mul(const Field& F, const FqPoly& a, const FqPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    FqPoly out;
    out.c.assign(a.c.size() + b.c.size() - 1, 0);
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j) {
            if (b.c[j] == 0) continue;
            out.c[i + j] = F.add(out.c[i + j], F.mul(a.c[i], b.c[j]));
        }
    }
    poly_trim(out);
    return out;
}

FqPoly poly_scale(const Field& F, const FqPoly& a, fq s) {
    if (s == 0) return {};
    FqPoly out = a;
    for (auto& x : out.c) x = F.mul(x, s);
    return out;
}

std::pair<FqPoly, FqPoly> poly_divmod(const Field& F, const FqPoly& a, const FqPoly& b) {
    if (b.is_zero()) raise(errc::division_by_zero, "polynomial division by zero");
    FqPoly r = a, q;
    int db = b.degree();
    if (a.degree() < db) return {q, r};
    q.c.assign(a.degree() - db + 1, 0);
    fq lbinv = F.inv(b.lc());
    while (r.degree() >= db) {
        int shift = r.degree() - db;
        fq c = F.mul(r.lc(), lbinv);
        q.c[shift] = c;
        for (int j = 0; j <= db; ++j)
            r.c[j + shift] = F.sub(r.c[j + shift], F.mul(c, b.c[j]));
        poly_trim(r);
    }
    poly_trim(q);
    return {q, r};
}

FqPoly poly_mod(const Field& F, const FqPoly& a, const FqPoly& b) {
    return poly_divmod(F, a, b).second;
}

FqPoly poly_monic(const Field& F, const FqPoly& a) {
    if (a.is_zero() || a.lc() == 1) return a;
    return poly_scale(F, a, F.inv(a.lc()));
}

FqPoly poly_gcd(const Field& F, FqPoly a, FqPoly b) {
    while (!b.is_zero()) {
        FqPoly r = poly_mod(F, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return poly_monic(F, a);
}

std::pair<FqPoly, FqPoly> poly_half_xgcd(const Field& F, const FqPoly& a, const FqPoly& b) {
    FqPoly r0 = a, r1 = b;
    FqPoly s0 = FqPoly::constant(1), s1;
    while (!r1.is_zero()) {
        auto [q, r2] = poly_divmod(F, r0, r1);
        FqPoly s2 = poly_sub(F, s0, poly_mul(F, q, s1));
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    return {r0, s0};  // s0 * a = r0 (mod b)
}

FqPoly poly_inv_mod(const Field& F, const FqPoly& a, const FqPoly& m) {
    auto [g, u] = poly_half_xgcd(F, poly_mod(F, a, m), m);
    if (g.degree() != 0)
        raise(errc::division_by_zero, "element not invertible modulo m");
    return poly_mod(F, poly_scale(F, u, F.inv(g.c[0])), m);
}

FqPoly poly_derivative(const Field& F, const FqPoly& a) {
    FqPoly out;
    if (a.c.size() <= 1) return out;
    out.c.resize(a.c.size() - 1);
    for (std::size_t i = 1; i < a.c.size(); ++i)
        out.c[i - 1] = F.mul(a.c[i], F.from_int(static_cast<long long>(i)));
    poly_trim(out);
    return out;
}

fq poly_eval(const Field& F, const FqPoly& a, fq x) {
    fq r = 0;
    for (std::size_t i = a.c.size(); i-- > 0;) r = F.add(F.mul(r, x), a.c[i]);
    return r;
}

FqPoly poly_pow(const Field& F, FqPoly a, std::uint64_t e) {
    FqPoly r = FqPoly::constant(1);
    while (e) {
        if (e & 1) r = poly_mul(F, r, a);
        a = poly_mul(F, a, a);
        e >>= 1;
    }
    return r;
}

FqPoly poly_pow_mod(const Field& F, FqPoly a, std::uint64_t e, const FqPoly& m) {
    FqPoly r = FqPoly::constant(1);
    a = poly_mod(F, a, m);
    while (e) {
        if (e & 1) r = poly_mod(F, poly_mul(F, r, a), m);
        a = poly_mod(F, poly_mul(F, a, a), m);
        e >>= 1;
    }
    return r;
}

FqPoly poly_compose_mod(const Field& F, const FqPoly& g, const FqPoly& h, const FqPoly& m) {
    FqPoly r;
    for (std::size_t i = g.c.size(); i-- > 0;) {
        r = poly_mod(F, poly_mul(F, r, h), m);
        r = poly_add(F, r, FqPoly::constant(g.c[i]));
    }
    return r;
}

bool poly_is_pth_power(const Field& F, const FqPoly& f) {
    for (std::size_t i = 0; i < f.c.size(); ++i)
        if (f.c[i] != 0 && i % F.p() != 0) return false;
    return true;
}

FqPoly poly_pth_root(const Field& F, const FqPoly& f) {
    check_invariant(poly_is_pth_power(F, f), "poly_pth_root: not in F_q[x^p]");
    FqPoly out;
    if (f.is_zero()) return out;
    out.c.assign(f.degree() / F.p() + 1, 0);
    for (std::size_t i = 0; i < f.c.size(); i += F.p())
        out.c[i / F.p()] = F.pth_root(f.c[i]);
    poly_trim(out);
    return out;
}

// ---------------------------------------------------------------------------
// irreducibility, squarefree decomposition, factorization

bool poly_irreducible(const Field& F, const FqPoly& f) {
    if (f.degree() < 1) return false;
    if (f.degree() == 1) return true;
    FqPoly m = poly_monic(F, f);
    unsigned n = static_cast<unsigned>(m.degree());
    FqPoly x = FqPoly::x();
    FqPoly h = poly_pow_mod(F, x, F.q(), m);  // x^q mod m
    // x^(q^j) mod m for j = 1..n by iterated composition (Rabin's test)
    std::vector<FqPoly> frob(n + 1);
    frob[1] = h;
    for (unsigned j = 2; j <= n; ++j) frob[j] = poly_compose_mod(F, frob[j - 1], h, m);
    if (poly_sub(F, frob[n], x) != FqPoly::zero()) return false;
    for (auto r : prime_divisors(n)) {
        unsigned j = n / static_cast<unsigned>(r);
        FqPoly g = poly_gcd(F, poly_sub(F, frob[j], x), m);
        if (g.degree() != 0) return false;
    }
    return true;
}

namespace {

void squarefree_rec(const Field& F, FqPoly f, int base, std::vector<std::pair<FqPoly, int>>& out) {
    if (f.degree() <= 0) return;
    FqPoly fp = poly_derivative(F, f);
    if (fp.is_zero()) {
        squarefree_rec(F, poly_pth_root(F, f), base * static_cast<int>(F.p()), out);
        return;
    }
    FqPoly t = poly_gcd(F, f, fp);
    FqPoly w = poly_divmod(F, f, t).first;
    int i = 1;
    while (w.degree() > 0) {
        FqPoly y = poly_gcd(F, w, t);
        FqPoly z = poly_divmod(F, w, y).first;
        if (z.degree() > 0) out.emplace_back(poly_monic(F, z), base * i);
        w = std::move(y);
        t = poly_divmod(F, t, w).first;
        ++i;
    }
    squarefree_rec(F, t, base, out);
}

// deterministic PRNG stream bound to the field seed and the input
std::uint64_t poly_stream_seed(const Field& F, const FqPoly& f, std::uint64_t salt) {
    std::uint64_t h = hash_mix(F.seed(), salt);
    h = hash_mix(h, F.q());
    for (auto c : f.c) h = hash_mix(h, c);
    return h;
}

FqPoly random_poly(const Field& F, std::uint64_t& state, int deg_below) {
    FqPoly r;
    for (int i = 0; i < deg_below; ++i)
        r.c.push_back(splitmix64(state) % F.q());
    poly_trim(r);
    return r;
}

// split a product of distinct irreducibles of degree d (Cantor-Zassenhaus)
void edf(const Field& F, const FqPoly& f, unsigned d, std::uint64_t& state,
         std::vector<FqPoly>& out) {
    if (f.degree() == static_cast<int>(d)) {
        out.push_back(poly_monic(F, f));
        return;
    }
    while (true) {
        FqPoly r = random_poly(F, state, f.degree());
        if (r.degree() < 1) continue;
        FqPoly g;
        if (F.p() == 2) {
            // trace map over F_2: r + r^2 + ... + r^(2^(k*d-1))
            FqPoly tr = r, sq = r;
            for (unsigned i = 1; i < F.k() * d; ++i) {
                sq = poly_mod(F, poly_mul(F, sq, sq), f);
                tr = poly_add(F, tr, sq);
            }
            g = poly_gcd(F, tr, f);
        } else {
            // norm to F_q then the (q-1)/2 power: r^((q^d-1)/2) mod f
            FqPoly nrm = r, rq = r;
            for (unsigned i = 1; i < d; ++i) {
                rq = poly_pow_mod(F, rq, F.q(), f);
                nrm = poly_mod(F, poly_mul(F, nrm, rq), f);
            }
            FqPoly s = poly_pow_mod(F, nrm, (F.q() - 1) / 2, f);
            g = poly_gcd(F, poly_sub(F, s, FqPoly::constant(1)), f);
        }
        if (g.degree() > 0 && g.degree() < f.degree()) {
            edf(F, g, d, state, out);
            edf(F, poly_divmod(F, f, g).first, d, state, out);
            return;
        }
    }
}

std::vector<FqPoly> factor_squarefree(const Field& F, const FqPoly& f) {
    std::vector<FqPoly> out;
    FqPoly w = poly_monic(F, f);
    if (w.degree() < 1) return out;
    std::uint64_t state = poly_stream_seed(F, w, 0x5eedf00dULL);
    FqPoly m = w;  // fixed modulus for the Frobenius chain
    FqPoly x = FqPoly::x();
    FqPoly h = poly_pow_mod(F, x, F.q(), m);
    FqPoly hd = h;
    for (unsigned d = 1; 2 * d <= static_cast<unsigned>(w.degree()); ++d) {
        if (d > 1) hd = poly_compose_mod(F, hd, h, m);
        FqPoly g = poly_gcd(F, w, poly_sub(F, hd, x));
        if (g.degree() > 0) {
            edf(F, g, d, state, out);
            w = poly_divmod(F, w, g).first;
        }
    }
    if (w.degree() > 0) out.push_back(w);
    return out;
}

}  // namespace

std::vector<std::pair<FqPoly, int>> poly_squarefree(const Field& F, const FqPoly& f) {
    if (f.is_zero()) raise(errc::invalid_argument, "squarefree decomposition of zero");
    std::vector<std::pair<FqPoly, int>> out;
    squarefree_rec(F, poly_monic(F, f), 1, out);
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.second < b.second; });
    return out;
}

std::vector<std::pair<FqPoly, int>> poly_factor(const Field& F, const FqPoly& f) {
    if (f.is_zero()) raise(errc::invalid_argument, "factorization of zero");
    std::vector<std::pair<FqPoly, int>> out;
    for (auto& [g, m] : poly_squarefree(F, f))
        for (auto& h : factor_squarefree(F, g))
            out.emplace_back(h, m);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return poly_less(a.first, b.first);
    });
    return out;
}

std::vector<fq> poly_roots(const Field& F, const FqPoly& f) {
    std::vector<fq> out;
    if (f.degree() < 1) return out;
    // restrict to the part splitting over F_q: gcd(f, x^q - x)
    FqPoly x = FqPoly::x();
    FqPoly xq = poly_pow_mod(F, x, F.q(), poly_monic(F, f));
    FqPoly lin = poly_gcd(F, f, poly_sub(F, xq, x));
    if (lin.degree() < 1) return out;
    for (auto& [g, m] : poly_factor(F, lin)) {
        (void)m;
        if (g.degree() == 1) out.push_back(F.neg(g.c[0]));
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool poly_less(const FqPoly& a, const FqPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (std::size_t i = a.c.size(); i-- > 0;)
        if (a.c[i] != b.c[i]) return a.c[i] < b.c[i];
    return false;
}

// ---------------------------------------------------------------------------
// FieldEmbedding

FieldEmbedding::FieldEmbedding(const Field& from, const Field& to) : from_(&from), to_(&to) {
    if (from.p() != to.p() || to.k() % from.k() != 0)
        raise(errc::invalid_argument, "no embedding between these fields");
    FqPoly m;  // the small modulus, viewed over the big field (F_p coefficients)
    for (auto c : from.modulus()) m.c.push_back(c);
    poly_trim(m);
    auto roots = poly_roots(to, m);
    check_invariant(!roots.empty(), "small modulus has no root in the big field");
    gen_image_ = roots.front();
    gen_powers_.resize(from.k());
    fq cur = 1;
    for (unsigned i = 0; i < from.k(); ++i) {
        gen_powers_[i] = cur;
        cur = to.mul(cur, gen_image_);
    }
    basis_digits_.resize(from.k());
    for (unsigned i = 0; i < from.k(); ++i) {
        basis_digits_[i].resize(to.k());
        for (unsigned j = 0; j < to.k(); ++j)
            basis_digits_[i][j] = to.coeff(gen_powers_[i], j);
    }
}

fq FieldEmbedding::map(fq a) const {
    fq out = 0;
    for (unsigned i = 0; i < from_->k(); ++i)
        out = to_->add(out, to_->mul(gen_powers_[i], from_->coeff(a, i)));
    return out;
}

std::optional<fq> FieldEmbedding::preimage(fq a) const {
    const unsigned p = from_->p();
    const unsigned rows = to_->k(), cols = from_->k();
    // solve sum_i c_i * basis_i = digits(a) over F_p
    std::vector<std::vector<unsigned>> m(rows, std::vector<unsigned>(cols + 1, 0));
    for (unsigned r = 0; r < rows; ++r) {
        for (unsigned c = 0; c < cols; ++c) m[r][c] = basis_digits_[c][r];
        m[r][cols] = to_->coeff(a, r);
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
    std::vector<int> pivot_of_col(cols, -1);
    unsigned row = 0;
    for (unsigned col = 0; col < cols && row < rows; ++col) {
        unsigned sel = row;
        while (sel < rows && m[sel][col] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(m[sel], m[row]);
        unsigned iv = inv_p(m[row][col]);
        for (auto& x : m[row]) x = (x * iv) % p;
        for (unsigned r2 = 0; r2 < rows; ++r2) {
            if (r2 == row || m[r2][col] == 0) continue;
            unsigned c2 = m[r2][col];
            for (unsigned cc = 0; cc <= cols; ++cc)
                m[r2][cc] = (m[r2][cc] + p - (c2 * m[row][cc]) % p) % p;
        }
        pivot_of_col[col] = static_cast<int>(row);
        ++row;
    }
    for (unsigned r2 = row; r2 < rows; ++r2)
        if (m[r2][cols] != 0) return std::nullopt;  // inconsistent: not in the image
    std::vector<unsigned> sol(cols, 0);
    for (unsigned c = 0; c < cols; ++c)
        if (pivot_of_col[c] >= 0) sol[c] = m[pivot_of_col[c]][cols];
    return from_->from_coeffs(sol);
}

FqPoly FieldEmbedding::map_poly(const FqPoly& a) const {
    FqPoly out;
    out.c.reserve(a.c.size());
    for (auto x : a.c) out.c.push_back(map(x));
    return out;
}

std::optional<FqPoly> FieldEmbedding::preimage_poly(const FqPoly& a) const {
    FqPoly out;
    out.c.reserve(a.c.size());
    for (auto x : a.c) {
        auto pre = preimage(x);
        if (!pre) return std::nullopt;
        out.c.push_back(*pre);
    }
    return out;
}

}  // namespace orefactor
