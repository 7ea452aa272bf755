// Copyright (c) 2026 The orefactor authors.
// SPDX-License-Identifier: Apache-2.0

#include "textio.hpp"

#include <cctype>
#include <sstream>

namespace orefactor {

namespace {

struct Parser {
    const Field& F;
    std::string_view text;
    std::size_t pos = 0;
    bool allow_d;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    [[noreturn]] void fail(const std::string& msg) {
        raise(errc::syntax_error, msg + " at position " + std::to_string(pos), pos);
    }
    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    OreOp parse_expr() {
        OreOp acc = parse_term();
        while (true) {
            if (eat('+'))
                acc = ore_add(F, acc, parse_term());
            else if (eat('-'))
                acc = ore_sub(F, acc, parse_term());
            else
                return acc;
        }
    }

    OreOp parse_term() {
        OreOp acc = parse_factor();
        while (true) {
            if (eat('*')) {
                acc = ore_mul(F, acc, parse_factor());
            } else if (eat('/')) {
                OreOp rhs = parse_factor();
                if (rhs.ord() > 0) fail("division by an operator");
                if (rhs.is_zero()) fail("division by zero");
                acc = ore_mul(F, acc, OreOp::from_ratfun(rf_inv(F, rhs.c[0])));
            } else {
                return acc;
            }
        }
    }

    OreOp parse_factor() {
        if (eat('-')) return ore_neg(F, parse_factor());
        OreOp base = parse_base();
        if (eat('^')) {
            bool neg = eat('-');
            long long e = parse_integer();
            if (base.ord() > 0) {
                if (neg) fail("negative power of an operator");
                OreOp r = OreOp::one();
                for (long long i = 0; i < e; ++i) r = ore_mul(F, r, base);
                return r;
            }
            if (base.is_zero()) {
                if (e == 0 && !neg) return OreOp::one();
                if (neg) fail("negative power of zero");
                return OreOp::zero();
            }
            return OreOp::from_ratfun(rf_pow(F, base.c[0], neg ? -e : e));
        }
        return base;
    }

    long long parse_integer() {
        skip_ws();
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            fail("expected an integer");
        long long v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            v = v * 10 + (text[pos] - '0');
            if (v > (1LL << 40)) fail("integer literal too large");
            ++pos;
        }
        return v;
    }

    OreOp parse_base() {
        skip_ws();
        if (pos >= text.size()) fail("unexpected end of input");
        char c = text[pos];
        if (c == '(') {
            ++pos;
            OreOp inner = parse_expr();
            if (!eat(')')) fail("expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c)))
            return OreOp::from_ratfun(rf_const(F.from_int(parse_integer())));
        if (c == 'x') {
            ++pos;
            return OreOp::from_ratfun(rf_x());
        }
        if (c == 'z') {
            ++pos;
            if (F.k() == 1) fail("z is not defined over a prime field");
            return OreOp::from_ratfun(rf_const(F.gen()));
        }
        if (c == 'D') {
            ++pos;
            if (!allow_d) fail("D is not allowed in a rational function");
            return OreOp::d();
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    OreOp run() {
        OreOp out = parse_expr();
        skip_ws();
        if (pos != text.size()) fail("trailing input");
        return out;
    }
};

}  // namespace

OreOp parse_operator(const Field& F, std::string_view text) {
    Parser p{F, text, 0, true};
    return p.run();
}

RatFun parse_ratfun(const Field& F, std::string_view text) {
    Parser p{F, text, 0, false};
    OreOp op = p.run();
    if (op.ord() > 0) raise(errc::syntax_error, "expected a rational function", 0);
    return op.is_zero() ? rf_zero() : op.c[0];
}

// ---------------------------------------------------------------------------
// printing

std::string elem_to_string(const Field& F, fq a) {
    if (a < F.p()) return std::to_string(a);
    std::string out;
    for (unsigned i = F.k(); i-- > 0;) {
        unsigned c = F.coeff(a, i);
        if (!c) continue;
        if (!out.empty()) out += "+";
        if (i == 0) {
            out += std::to_string(c);
            continue;
        }
        if (c != 1) out += std::to_string(c) + "*";
        out += i == 1 ? "z" : "z^" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
}

namespace {

bool elem_is_simple(const Field& F, fq a) {
    // a single monomial in z parses without parentheses inside a product
    unsigned nonzero = 0;
    for (unsigned i = 0; i < F.k(); ++i)
        if (F.coeff(a, i)) ++nonzero;
    return nonzero <= 1;
}

std::string monomial_to_string(const Field& F, fq coeff, unsigned e, char var) {
    std::string cs = elem_to_string(F, coeff);
    bool needs_parens = !elem_is_simple(F, coeff);
    if (e == 0) return needs_parens ? "(" + cs + ")" : cs;
    std::string xs = e == 1 ? std::string(1, var) : std::string(1, var) + "^" + std::to_string(e);
    if (coeff == 1) return xs;
    if (needs_parens) return "(" + cs + ")*" + xs;
    return cs + "*" + xs;
}

bool poly_is_single_term(const FqPoly& a) {
    unsigned nonzero = 0;
    for (auto c : a.c)
        if (c) ++nonzero;
    return nonzero <= 1;
}

}  // namespace

std::string poly_to_string(const Field& F, const FqPoly& a, char var) {
    if (a.is_zero()) return "0";
    std::string out;
    for (std::size_t i = a.c.size(); i-- > 0;) {
        if (a.c[i] == 0) continue;
        if (!out.empty()) out += " + ";
        out += monomial_to_string(F, a.c[i], static_cast<unsigned>(i), var);
    }
    return out;
}

std::string ratfun_to_string(const Field& F, const RatFun& f, char var) {
    if (f.is_zero()) return "0";
    std::string ns = poly_to_string(F, f.num, var);
    if (f.is_poly()) return ns;
    // den is monic, so a single-term den is a pure power and needs no parens
    bool np = !poly_is_single_term(f.num);
    bool dp = !poly_is_single_term(f.den);
    std::string ds = poly_to_string(F, f.den, var);
    std::string out = np ? "(" + ns + ")" : ns;
    out += "/";
    out += dp ? "(" + ds + ")" : ds;
    return out;
}

namespace {

std::string generic_op_to_string(const Field& F, const std::vector<RatFun>& coeffs,
                                 char var, char cvar) {
    std::string out;
    for (std::size_t i = coeffs.size(); i-- > 0;) {
        if (coeffs[i].is_zero()) continue;
        if (!out.empty()) out += " + ";
        if (i == 0) {
            out += ratfun_to_string(F, coeffs[i], cvar);
            continue;
        }
        std::string vs =
            i == 1 ? std::string(1, var) : std::string(1, var) + "^" + std::to_string(i);
        if (coeffs[i] == rf_one()) {
            out += vs;
            continue;
        }
        std::string cs = ratfun_to_string(F, coeffs[i], cvar);
        // fractions are product-safe (n/d*D = (n/d)*D); only a multi-term
        // polynomial coefficient needs wrapping
        bool parens = coeffs[i].is_poly() && !poly_is_single_term(coeffs[i].num);
        if (parens)
            out += "(" + cs + ")*" + vs;
        else
            out += cs + "*" + vs;
    }
    return out.empty() ? "0" : out;
}

}  // namespace

std::string op_to_string(const Field& F, const OreOp& l) {
    return generic_op_to_string(F, l.c, 'D', 'x');
}

std::string ypoly_to_string(const Field& F, const YPoly& n, char var, char cvar) {
    return generic_op_to_string(F, n.c, var, cvar);
}

std::string divisor_to_string(const Field& F, const Divisor& d) {
    if (d.coeff.empty()) return "0";
    std::string out;
    for (auto& [P, n] : d.coeff) {
        if (!out.empty()) out += " + ";
        out += std::to_string(n) + "*";
        out += P.infinite ? "inf" : "(" + poly_to_string(F, P.pi, 'x') + ")";
    }
    return out;
}

std::string pole_bound_to_string(const Field& F, const PoleBound& b) {
    std::string out;
    for (auto& [P, n] : b.finite)
        out += std::to_string(n) + "*(" + poly_to_string(F, P.pi, 'x') + ") + ";
    out += std::to_string(b.inf_degree) + "*inf";
    return out;
}

std::string field_to_string(const Field& F) {
    if (F.k() == 1) return "GF(" + std::to_string(F.p()) + ")";
    return "GF(" + std::to_string(F.p()) + "^" + std::to_string(F.k()) + ")";
}

std::pair<unsigned, unsigned> parse_field_spec(std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.size() < 5 || (s.substr(0, 3) != "GF(" && s.substr(0, 3) != "gf(") || s.back() != ')')
        raise(errc::syntax_error, "field spec must look like GF(p) or GF(p^k)", 0);
    std::string inner = s.substr(3, s.size() - 4);
    unsigned long p = 0, k = 1;
    std::size_t caret = inner.find('^');
    try {
        if (caret == std::string::npos) {
            p = std::stoul(inner);
        } else {
            p = std::stoul(inner.substr(0, caret));
            k = std::stoul(inner.substr(caret + 1));
        }
    } catch (const std::exception&) {
        raise(errc::syntax_error, "field spec must look like GF(p) or GF(p^k)", 0);
    }
    if (p < 2 || k < 1) raise(errc::syntax_error, "bad field parameters", 0);
    return {static_cast<unsigned>(p), static_cast<unsigned>(k)};
}

}  // namespace orefactor
