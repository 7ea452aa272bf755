// Copyright (c) 2026 The orefactor authors.
// SPDX-License-Identifier: Apache-2.0

#include "orefactor.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <string>

#include "engine.hpp"
#include "textio.hpp"

using namespace orefactor;

namespace {

thread_local std::string g_last_error;

orf_status status_of(const error& e) {
    g_last_error = e.what();
    switch (e.code()) {
        case errc::syntax_error: return ORF_ERR_SYNTAX;
        case errc::invalid_argument: return ORF_ERR_ARGUMENT;
        case errc::unsupported_central_field:
        case errc::unsupported_inseparable: return ORF_ERR_UNSUPPORTED;
        case errc::internal_invariant: return ORF_ERR_INTERNAL;
        default: return ORF_ERR_MATH;
    }
}

template <typename Fn>
orf_status guarded(Fn&& fn) {
    try {
        fn();
        return ORF_OK;
    } catch (const error& e) {
        return status_of(e);
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return ORF_ERR_INTERNAL;
    }
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

orf_status bad_argument(const char* msg) {
    g_last_error = msg;
    return ORF_ERR_ARGUMENT;
}

using FieldPtr = std::shared_ptr<const Field>;

}  // namespace

struct orf_field {
    FieldPtr f;
};
struct orf_op {
    FieldPtr f;
    OreOp op;
};
struct orf_ratfun {
    FieldPtr f;
    RatFun rf;
};
struct orf_factorization {
    FieldPtr f;
    FactorChain chain;
};
struct orf_matrix {
    int n = 0;
    std::vector<std::string> entries;  // row-major
};
struct orf_central_factors {
    std::vector<std::string> polys;
    std::vector<int> mults;
};

namespace {

orf_status op_binary(const orf_op* a, const orf_op* b, orf_op** out,
                     OreOp (*fn)(const Field&, const OreOp&, const OreOp&)) {
    if (!a || !b || !out) return bad_argument("null argument");
    if (!a->f->same(*b->f)) return bad_argument("operands live over different fields");
    return guarded([&] { *out = new orf_op{a->f, fn(*a->f, a->op, b->op)}; });
}

}  // namespace

extern "C" {

const char* orf_last_error(void) { return g_last_error.c_str(); }

void orf_string_free(char* s) { std::free(s); }

orf_status orf_field_new(unsigned p, unsigned k, uint64_t seed, orf_field** out) {
    if (!out) return bad_argument("null output pointer");
    return guarded([&] { *out = new orf_field{std::make_shared<Field>(p, k, seed)}; });
}

void orf_field_free(orf_field* f) { delete f; }

orf_status orf_field_spec(const orf_field* f, char** out) {
    if (!f || !out) return bad_argument("null argument");
    return guarded([&] { *out = dup_string(field_to_string(*f->f)); });
}

orf_status orf_field_modulus(const orf_field* f, char** out) {
    if (!f || !out) return bad_argument("null argument");
    return guarded([&] {
        FqPoly m;
        for (auto cc : f->f->modulus()) m.c.push_back(cc);
        poly_trim(m);
        *out = dup_string(poly_to_string(*f->f, m, 'z'));
    });
}

unsigned orf_field_p(const orf_field* f) { return f ? f->f->p() : 0; }
unsigned orf_field_k(const orf_field* f) { return f ? f->f->k() : 0; }

orf_status orf_op_parse(const orf_field* f, const char* text, orf_op** out) {
    if (!f || !text || !out) return bad_argument("null argument");
    return guarded([&] { *out = new orf_op{f->f, parse_operator(*f->f, text)}; });
}

void orf_op_free(orf_op* op) { delete op; }

orf_status orf_op_to_string(const orf_op* op, char** out) {
    if (!op || !out) return bad_argument("null argument");
    return guarded([&] { *out = dup_string(op_to_string(*op->f, op->op)); });
}

int orf_op_order(const orf_op* op) { return op ? op->op.ord() : -1; }

int orf_op_equal(const orf_op* a, const orf_op* b) {
    if (!a || !b) return 0;
    return a->f->same(*b->f) && a->op == b->op ? 1 : 0;
}

orf_status orf_op_add(const orf_op* a, const orf_op* b, orf_op** out) {
    return op_binary(a, b, out,
                     +[](const Field& F, const OreOp& x, const OreOp& y) {
                         return ore_add(F, x, y);
                     });
}

orf_status orf_op_mul(const orf_op* a, const orf_op* b, orf_op** out) {
    return op_binary(a, b, out,
                     +[](const Field& F, const OreOp& x, const OreOp& y) {
                         return ore_mul(F, x, y);
                     });
}

orf_status orf_op_gcrd(const orf_op* a, const orf_op* b, orf_op** out) {
    return op_binary(a, b, out,
                     +[](const Field& F, const OreOp& x, const OreOp& y) {
                         return ore_gcrd(F, x, y);
                     });
}

orf_status orf_op_lclm(const orf_op* a, const orf_op* b, orf_op** out) {
    return op_binary(a, b, out,
                     +[](const Field& F, const OreOp& x, const OreOp& y) {
                         return ore_lclm(F, x, y);
                     });
}

orf_status orf_op_mul_ratfun(const orf_ratfun* u, const orf_op* a, orf_op** out) {
    if (!u || !a || !out) return bad_argument("null argument");
    if (!u->f->same(*a->f)) return bad_argument("operands live over different fields");
    return guarded([&] { *out = new orf_op{a->f, ore_scale(*a->f, u->rf, a->op)}; });
}

orf_status orf_op_coeff(const orf_op* op, unsigned i, orf_ratfun** out) {
    if (!op || !out) return bad_argument("null argument");
    return guarded([&] {
        RatFun c = i < op->op.c.size() ? op->op.c[i] : rf_zero();
        *out = new orf_ratfun{op->f, c};
    });
}

orf_status orf_ratfun_parse(const orf_field* f, const char* text, orf_ratfun** out) {
    if (!f || !text || !out) return bad_argument("null argument");
    return guarded([&] { *out = new orf_ratfun{f->f, parse_ratfun(*f->f, text)}; });
}

void orf_ratfun_free(orf_ratfun* r) { delete r; }

orf_status orf_ratfun_to_string(const orf_ratfun* r, char** out) {
    if (!r || !out) return bad_argument("null argument");
    return guarded([&] { *out = dup_string(ratfun_to_string(*r->f, r->rf)); });
}

int orf_ratfun_num_degree(const orf_ratfun* r) { return r ? r->rf.num.degree() : -1; }
int orf_ratfun_den_degree(const orf_ratfun* r) { return r ? r->rf.den.degree() : -1; }

uint64_t orf_ratfun_num_coeff(const orf_ratfun* r, unsigned i) {
    if (!r || i >= r->rf.num.c.size()) return 0;
    return r->rf.num.c[i];
}

uint64_t orf_ratfun_den_coeff(const orf_ratfun* r, unsigned i) {
    if (!r || i >= r->rf.den.c.size()) return 0;
    return r->rf.den.c[i];
}

orf_status orf_pcurvature(const orf_op* op, orf_matrix** out) {
    if (!op || !out) return bad_argument("null argument");
    return guarded([&] {
        PCurvMat m = pcurvature_matrix(*op->f, op->op);
        auto* res = new orf_matrix;
        res->n = m.size();
        res->entries.reserve(static_cast<std::size_t>(res->n) * res->n);
        for (int i = 0; i < res->n; ++i)
            for (int j = 0; j < res->n; ++j)
                res->entries.push_back(ratfun_to_string(*op->f, m.col[j][i]));
        *out = res;
    });
}

void orf_matrix_free(orf_matrix* m) { delete m; }

int orf_matrix_size(const orf_matrix* m) { return m ? m->n : 0; }

const char* orf_matrix_entry(const orf_matrix* m, int row, int col) {
    if (!m || row < 0 || col < 0 || row >= m->n || col >= m->n) return "";
    return m->entries[static_cast<std::size_t>(row) * m->n + col].c_str();
}

orf_status orf_charpoly(const orf_op* op, char** out) {
    if (!op || !out) return bad_argument("null argument");
    return guarded([&] {
        YPoly chi = central_charpoly(*op->f, pcurvature_matrix(*op->f, op->op));
        *out = dup_string(ypoly_to_string(*op->f, chi));
    });
}

orf_status orf_charfactor(const orf_op* op, orf_central_factors** out) {
    if (!op || !out) return bad_argument("null argument");
    return guarded([&] {
        YPoly chi = central_charpoly(*op->f, pcurvature_matrix(*op->f, op->op));
        auto fac = factor_central(*op->f, chi);
        auto* res = new orf_central_factors;
        for (auto& [n, m] : fac.factors) {
            res->polys.push_back(ypoly_to_string(*op->f, n));
            res->mults.push_back(m);
        }
        *out = res;
    });
}

void orf_central_factors_free(orf_central_factors* cf) { delete cf; }

size_t orf_central_factors_count(const orf_central_factors* cf) {
    return cf ? cf->polys.size() : 0;
}

const char* orf_central_factors_poly(const orf_central_factors* cf, size_t i) {
    return cf && i < cf->polys.size() ? cf->polys[i].c_str() : "";
}

int orf_central_factors_multiplicity(const orf_central_factors* cf, size_t i) {
    return cf && i < cf->mults.size() ? cf->mults[i] : 0;
}

orf_status orf_factor(const orf_op* op, unsigned threads, orf_factorization** out) {
    if (!op || !out) return bad_argument("null argument");
    *out = nullptr;
    try {
        FactorChain chain = factor_completely(*op->f, op->op, threads ? threads : 1);
        *out = new orf_factorization{op->f, std::move(chain)};
        return ORF_OK;
    } catch (const unsupported_error& e) {
        *out = new orf_factorization{op->f, e.partial()};
        g_last_error = e.what();
        return ORF_ERR_UNSUPPORTED;
    } catch (const error& e) {
        return status_of(e);
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return ORF_ERR_INTERNAL;
    }
}

void orf_factorization_free(orf_factorization* f) { delete f; }

size_t orf_factorization_size(const orf_factorization* f) {
    return f ? f->chain.factors.size() : 0;
}

orf_status orf_factorization_factor(const orf_factorization* f, size_t i, orf_op** out) {
    if (!f || !out || i >= f->chain.factors.size()) return bad_argument("bad index");
    *out = new orf_op{f->f, f->chain.factors[i]};
    return ORF_OK;
}

const char* orf_factorization_certificate(const orf_factorization* f, size_t i) {
    if (!f || i >= f->chain.certs.size()) return "";
    return certificate_name(f->chain.certs[i]);
}

orf_status orf_factorization_unit(const orf_factorization* f, orf_ratfun** out) {
    if (!f || !out) return bad_argument("null argument");
    *out = new orf_ratfun{f->f, f->chain.unit};
    return ORF_OK;
}

int orf_factorization_complete(const orf_factorization* f) {
    return f && f->chain.complete ? 1 : 0;
}

orf_status orf_is_irreducible(const orf_op* op, int* irreducible, char** certificate,
                              orf_op** witness) {
    if (!op || !irreducible) return bad_argument("null argument");
    if (witness) *witness = nullptr;
    return guarded([&] {
        auto res = is_irreducible(*op->f, op->op);
        *irreducible = res.irreducible ? 1 : 0;
        if (certificate) *certificate = dup_string(certificate_name(res.cert));
        if (witness && res.witness) *witness = new orf_op{op->f, *res.witness};
    });
}

orf_status orf_riccati(const orf_field* f, const char* y_text, int* solvable,
                       orf_ratfun** solution, char** bound) {
    if (!f || !y_text || !solvable) return bad_argument("null argument");
    if (solution) *solution = nullptr;
    return guarded([&] {
        RatFun y = parse_ratfun(*f->f, y_text);
        auto res = solve_p_riccati(*f->f, y);
        *solvable = res.particular ? 1 : 0;
        if (solution && res.particular) *solution = new orf_ratfun{f->f, *res.particular};
        if (bound) *bound = dup_string(pole_bound_to_string(*f->f, res.bound));
    });
}

}  // extern "C"
