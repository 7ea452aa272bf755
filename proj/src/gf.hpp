// Copyright (c) 2026 The orefactor authors.
// SPDX-License-Identifier: Apache-2.0
//
// Arithmetic in F_q = F_p[z]/(m) for small primes p, and univariate
// polynomial algorithms over F_q (gcd, squarefree decomposition,
// irreducibility, full factorization, Frobenius and p-th roots).

#ifndef OREFACTOR_GF_HPP
#define OREFACTOR_GF_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "common.hpp"

namespace orefactor {

// Packed element of F_q: value = sum c_i * p^i with c_i in [0, p).
using fq = std::uint64_t;

// The field context. Elements are packed integers; all arithmetic goes
// through this class. Immutable after construction, safe to share.
class Field {
public:
    // F_q with the lexicographically smallest monic irreducible modulus of
    // degree k over F_p. seed drives the randomized factoring subroutines.
    Field(unsigned p, unsigned k, std::uint64_t seed = 0);

    // Explicit modulus (coefficients c_0..c_k, monic irreducible).
    Field(unsigned p, unsigned k, const std::vector<unsigned>& modulus, std::uint64_t seed);

    unsigned p() const { return p_; }
    unsigned k() const { return k_; }
    std::uint64_t q() const { return q_; }
    std::uint64_t seed() const { return seed_; }
    const std::vector<unsigned>& modulus() const { return modulus_; }

    bool same(const Field& other) const {
        return p_ == other.p_ && k_ == other.k_ && modulus_ == other.modulus_;
    }

    fq zero() const { return 0; }
    fq one() const { return 1; }
    fq gen() const { return k_ > 1 ? p_ : 0; }  // class of z (k = 1: z = 0 in F_p[z]/(z))
    fq from_int(long long v) const;

    fq add(fq a, fq b) const;
    fq sub(fq a, fq b) const;
    fq neg(fq a) const;
    fq mul(fq a, fq b) const;
    fq inv(fq a) const;  // throws division_by_zero on 0
    fq div(fq a, fq b) const { return mul(a, inv(b)); }
    fq pow(fq a, std::uint64_t e) const;
    fq frobenius(fq a, unsigned e) const;  // a^(p^e)
    fq pth_root(fq a) const;               // unique b with b^p = a

    bool in_prime_field(fq a) const { return a < p_; }

    unsigned coeff(fq a, unsigned i) const;  // i-th z-coefficient
    fq from_coeffs(const std::vector<unsigned>& c) const;

private:
    void init_tables();

    unsigned p_ = 2;
    unsigned k_ = 1;
    std::uint64_t q_ = 2;
    std::uint64_t seed_ = 0;
    std::vector<unsigned> modulus_;  // c_0..c_k, monic

    // discrete log tables (built when q fits); otherwise slow path
    bool has_tables_ = false;
    std::vector<std::uint32_t> exp_;  // exp_[i] = g^i, length q-1
    std::vector<std::uint32_t> log_;  // log_[a] for a != 0

    fq mul_slow(fq a, fq b) const;
    fq inv_slow(fq a) const;
};

// Dense univariate polynomial over F_q; no trailing zeros, zero = empty.
struct FqPoly {
    std::vector<fq> c;

    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }
    fq lc() const { return c.empty() ? 0 : c.back(); }

    static FqPoly zero() { return {}; }
    static FqPoly constant(fq a) { return a ? FqPoly{{a}} : FqPoly{}; }
    static FqPoly x() { return FqPoly{{0, 1}}; }

    bool operator==(const FqPoly& o) const { return c == o.c; }
    bool operator!=(const FqPoly& o) const { return c != o.c; }
};

void poly_trim(FqPoly& a);
FqPoly poly_add(const Field& F, const FqPoly& a, const FqPoly& b);
FqPoly poly_sub(const Field& F, const FqPoly& a, const FqPoly& b);
FqPoly poly_neg(const Field& F, const FqPoly& a);
FqPoly poly_mul(const Field& F, const FqPoly& a, const FqPoly& b);
FqPoly poly_scale(const Field& F, const FqPoly& a, fq s);
std::pair<FqPoly, FqPoly> poly_divmod(const Field& F, const FqPoly& a, const FqPoly& b);
FqPoly poly_mod(const Field& F, const FqPoly& a, const FqPoly& b);
FqPoly poly_gcd(const Field& F, FqPoly a, FqPoly b);  // monic (or zero)
// g = gcd, and u with u*a = g mod b (full Bezout pair not needed here)
std::pair<FqPoly, FqPoly> poly_half_xgcd(const Field& F, const FqPoly& a, const FqPoly& b);
FqPoly poly_inv_mod(const Field& F, const FqPoly& a, const FqPoly& m);
FqPoly poly_monic(const Field& F, const FqPoly& a);
FqPoly poly_derivative(const Field& F, const FqPoly& a);
fq poly_eval(const Field& F, const FqPoly& a, fq x);
FqPoly poly_pow(const Field& F, FqPoly a, std::uint64_t e);
FqPoly poly_pow_mod(const Field& F, FqPoly a, std::uint64_t e, const FqPoly& m);
FqPoly poly_compose_mod(const Field& F, const FqPoly& g, const FqPoly& h, const FqPoly& m);

// f = g(x^p) with all coefficients p-th powers -> the p-th root of f.
FqPoly poly_pth_root(const Field& F, const FqPoly& f);
bool poly_is_pth_power(const Field& F, const FqPoly& f);

bool poly_irreducible(const Field& F, const FqPoly& f);

// f = prod g_j^j with g_j squarefree, monic, pairwise coprime (f != 0).
std::vector<std::pair<FqPoly, int>> poly_squarefree(const Field& F, const FqPoly& f);

// Complete monic-irreducible factorization, deterministic for a fixed
// Field seed; factors sorted by (degree, packed coefficient order).
std::vector<std::pair<FqPoly, int>> poly_factor(const Field& F, const FqPoly& f);

std::vector<fq> poly_roots(const Field& F, const FqPoly& f);  // sorted, distinct

// Canonical order for deterministic outputs.
bool poly_less(const FqPoly& a, const FqPoly& b);

// Embedding F_{p^k} -> F_{p^(k*e)} determined by the smallest root of the
// small field's modulus in the big field.
class FieldEmbedding {
public:
    FieldEmbedding(const Field& from, const Field& to);

    const Field& from() const { return *from_; }
    const Field& to() const { return *to_; }

    fq map(fq a) const;
    std::optional<fq> preimage(fq a) const;
    bool in_image(fq a) const { return preimage(a).has_value(); }

    FqPoly map_poly(const FqPoly& a) const;
    std::optional<FqPoly> preimage_poly(const FqPoly& a) const;

private:
    const Field* from_;
    const Field* to_;
    fq gen_image_;
    std::vector<fq> gen_powers_;                      // gen_image_^i, i < from.k
    std::vector<std::vector<unsigned>> basis_digits_;  // digit vectors of gen powers
};

}  // namespace orefactor

#endif
