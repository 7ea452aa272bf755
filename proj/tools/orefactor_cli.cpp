// Copyright (c) 2026 The orefactor authors.
// SPDX-License-Identifier: Apache-2.0
//
// Command line front end. Talks to the core exclusively through the C API.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "orefactor.h"

using nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUser = 1;
constexpr int kExitUnsupported = 2;
constexpr int kExitInternal = 3;

struct Options {
    std::string field = "GF(5)";
    std::uint64_t seed = 0;
    bool json = false;
    bool timing = false;
    bool verify = false;
    unsigned threads = 1;
    std::vector<std::string> args;
};

[[noreturn]] void die(int code, const std::string& msg) {
    std::cerr << "error: " << msg << "\n";
    std::exit(code);
}

int exit_code_of(orf_status s) {
    switch (s) {
        case ORF_OK: return kExitOk;
        case ORF_ERR_UNSUPPORTED: return kExitUnsupported;
        case ORF_ERR_INTERNAL: return kExitInternal;
        default: return kExitUser;
    }
}

void check(orf_status s) {
    if (s != ORF_OK) die(exit_code_of(s), orf_last_error());
}

std::string take_string(char* s) {
    std::string out = s ? s : "";
    orf_string_free(s);
    return out;
}

// "GF(p)" or "GF(p^k)"
std::pair<unsigned, unsigned> parse_field(const std::string& spec) {
    unsigned p = 0, k = 1;
    if (std::sscanf(spec.c_str(), "GF(%u^%u)", &p, &k) == 2) return {p, k};
    if (std::sscanf(spec.c_str(), "GF(%u)", &p) == 1) return {p, 1};
    die(kExitUser, "field spec must look like GF(p) or GF(p^k): " + spec);
}

struct FieldHandle {
    orf_field* f = nullptr;
    ~FieldHandle() { orf_field_free(f); }
};

struct OpHandle {
    orf_op* op = nullptr;
    OpHandle() = default;
    explicit OpHandle(orf_op* o) : op(o) {}
    OpHandle(OpHandle&& o) noexcept : op(o.op) { o.op = nullptr; }
    OpHandle& operator=(OpHandle&& o) noexcept {
        std::swap(op, o.op);
        return *this;
    }
    OpHandle(const OpHandle&) = delete;
    ~OpHandle() { orf_op_free(op); }
};

std::string read_operand(const std::string& arg) {
    if (arg != "-") return arg;
    std::string all, line;
    while (std::getline(std::cin, line)) {
        if (!all.empty()) all += '\n';
        all += line;
    }
    return all;
}

ordered_json field_json(const orf_field* f) {
    char* mod = nullptr;
    check(orf_field_modulus(f, &mod));
    return ordered_json{
        {"p", orf_field_p(f)}, {"k", orf_field_k(f)}, {"modulus", take_string(mod)}};
}

ordered_json ratfun_json(const orf_ratfun* r) {
    ordered_json num = ordered_json::array(), den = ordered_json::array();
    for (int i = 0; i <= orf_ratfun_num_degree(r); ++i)
        num.push_back(orf_ratfun_num_coeff(r, static_cast<unsigned>(i)));
    for (int i = 0; i <= orf_ratfun_den_degree(r); ++i)
        den.push_back(orf_ratfun_den_coeff(r, static_cast<unsigned>(i)));
    return ordered_json{{"num", num}, {"den", den}};
}

ordered_json op_coeffs_json(const orf_op* op) {
    ordered_json out = ordered_json::array();
    int r = orf_op_order(op);
    for (int i = 0; i <= r; ++i) {
        orf_ratfun* c = nullptr;
        check(orf_op_coeff(op, static_cast<unsigned>(i), &c));
        out.push_back(ratfun_json(c));
        orf_ratfun_free(c);
    }
    return out;
}

int run_factor(const Options& opt, const orf_field* field, const std::string& expr) {
    OpHandle op;
    check(orf_op_parse(field, expr.c_str(), &op.op));
    auto start = std::chrono::steady_clock::now();
    orf_factorization* fac = nullptr;
    orf_status st = orf_factor(op.op, opt.threads, &fac);
    double ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - start)
                    .count();
    if (st != ORF_OK && st != ORF_ERR_UNSUPPORTED) die(exit_code_of(st), orf_last_error());
    std::unique_ptr<orf_factorization, void (*)(orf_factorization*)> guard(
        fac, orf_factorization_free);

    bool verified = false;
    if (opt.verify) {
        // multiply the chain back and compare with the input
        orf_ratfun* unit = nullptr;
        check(orf_factorization_unit(fac, &unit));
        OpHandle prod;
        check(orf_op_parse(field, "1", &prod.op));
        for (std::size_t i = 0; i < orf_factorization_size(fac); ++i) {
            OpHandle fi;
            check(orf_factorization_factor(fac, i, &fi.op));
            orf_op* next = nullptr;
            check(orf_op_mul(prod.op, fi.op, &next));
            prod = OpHandle(next);
        }
        orf_op* scaled = nullptr;
        check(orf_op_mul_ratfun(unit, prod.op, &scaled));
        orf_ratfun_free(unit);
        OpHandle full(scaled);
        verified = orf_op_equal(full.op, op.op) == 1;
    }

    if (opt.json) {
        ordered_json j;
        j["schema"] = 1;
        j["command"] = "factor";
        j["field"] = field_json(field);
        char* optext = nullptr;
        check(orf_op_to_string(op.op, &optext));
        j["operator"] = take_string(optext);
        orf_ratfun* unit = nullptr;
        check(orf_factorization_unit(fac, &unit));
        j["unit"] = ratfun_json(unit);
        orf_ratfun_free(unit);
        ordered_json factors = ordered_json::array();
        ordered_json certs = ordered_json::array();
        for (std::size_t i = 0; i < orf_factorization_size(fac); ++i) {
            OpHandle fi;
            check(orf_factorization_factor(fac, i, &fi.op));
            char* text = nullptr;
            check(orf_op_to_string(fi.op, &text));
            factors.push_back(ordered_json{{"order", orf_op_order(fi.op)},
                                           {"text", take_string(text)},
                                           {"coeffs", op_coeffs_json(fi.op)}});
            certs.push_back(orf_factorization_certificate(fac, i));
        }
        j["factors"] = factors;
        j["certificates"] = certs;
        j["complete"] = orf_factorization_complete(fac) == 1;
        if (opt.verify) j["verified"] = verified;
        if (opt.timing) j["timings"] = ordered_json{{"total_ms", ms}};
        std::cout << j.dump(2) << "\n";
    } else {
        orf_ratfun* unit = nullptr;
        check(orf_factorization_unit(fac, &unit));
        char* us = nullptr;
        check(orf_ratfun_to_string(unit, &us));
        orf_ratfun_free(unit);
        std::cout << "unit: " << take_string(us) << "\n";
        for (std::size_t i = 0; i < orf_factorization_size(fac); ++i) {
            OpHandle fi;
            check(orf_factorization_factor(fac, i, &fi.op));
            char* text = nullptr;
            check(orf_op_to_string(fi.op, &text));
            std::cout << "factor " << (i + 1) << ": " << take_string(text) << "  ["
                      << orf_factorization_certificate(fac, i) << "]\n";
        }
        if (!orf_factorization_complete(fac))
            std::cout << "partial: " << orf_last_error() << "\n";
        if (opt.verify) std::cout << "verify: " << (verified ? "PASS" : "FAIL") << "\n";
        if (opt.timing) std::cout << "time_ms: " << ms << "\n";
    }
    if (opt.verify && !verified) return kExitInternal;
    return st == ORF_ERR_UNSUPPORTED ? kExitUnsupported : kExitOk;
}

int run_pcurvature(const Options& opt, const orf_field* field, const std::string& expr) {
    OpHandle op;
    check(orf_op_parse(field, expr.c_str(), &op.op));
    orf_matrix* m = nullptr;
    check(orf_pcurvature(op.op, &m));
    std::unique_ptr<orf_matrix, void (*)(orf_matrix*)> guard(m, orf_matrix_free);
    int n = orf_matrix_size(m);
    if (opt.json) {
        ordered_json rows = ordered_json::array();
        for (int i = 0; i < n; ++i) {
            ordered_json row = ordered_json::array();
            for (int j = 0; j < n; ++j) row.push_back(orf_matrix_entry(m, i, j));
            rows.push_back(row);
        }
        ordered_json j{{"schema", 1},
                       {"command", "pcurvature"},
                       {"field", field_json(field)},
                       {"matrix", rows}};
        std::cout << j.dump(2) << "\n";
    } else {
        for (int i = 0; i < n; ++i) {
            std::cout << "[ ";
            for (int j = 0; j < n; ++j)
                std::cout << orf_matrix_entry(m, i, j) << (j + 1 < n ? ", " : " ");
            std::cout << "]\n";
        }
    }
    return kExitOk;
}

int run_charpoly(const Options& opt, const orf_field* field, const std::string& expr) {
    OpHandle op;
    check(orf_op_parse(field, expr.c_str(), &op.op));
    char* text = nullptr;
    check(orf_charpoly(op.op, &text));
    std::string s = take_string(text);
    if (opt.json) {
        ordered_json j{{"schema", 1},
                       {"command", "charpoly"},
                       {"field", field_json(field)},
                       {"charpoly", s}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << s << "\n";
    }
    return kExitOk;
}

int run_charfactor(const Options& opt, const orf_field* field, const std::string& expr) {
    OpHandle op;
    check(orf_op_parse(field, expr.c_str(), &op.op));
    orf_central_factors* cf = nullptr;
    check(orf_charfactor(op.op, &cf));
    std::unique_ptr<orf_central_factors, void (*)(orf_central_factors*)> guard(
        cf, orf_central_factors_free);
    if (opt.json) {
        ordered_json factors = ordered_json::array();
        for (std::size_t i = 0; i < orf_central_factors_count(cf); ++i)
            factors.push_back(
                ordered_json{{"poly", orf_central_factors_poly(cf, i)},
                             {"multiplicity", orf_central_factors_multiplicity(cf, i)}});
        ordered_json j{{"schema", 1},
                       {"command", "charfactor"},
                       {"field", field_json(field)},
                       {"factors", factors}};
        std::cout << j.dump(2) << "\n";
    } else {
        for (std::size_t i = 0; i < orf_central_factors_count(cf); ++i)
            std::cout << "multiplicity " << orf_central_factors_multiplicity(cf, i) << ": "
                      << orf_central_factors_poly(cf, i) << "\n";
    }
    return kExitOk;
}

int run_pair(const Options& opt, const orf_field* field, const std::string& verb,
             const std::string& ea, const std::string& eb) {
    OpHandle a, b;
    check(orf_op_parse(field, ea.c_str(), &a.op));
    check(orf_op_parse(field, eb.c_str(), &b.op));
    orf_op* r = nullptr;
    check(verb == "gcrd" ? orf_op_gcrd(a.op, b.op, &r) : orf_op_lclm(a.op, b.op, &r));
    OpHandle res(r);
    char* text = nullptr;
    check(orf_op_to_string(res.op, &text));
    std::string s = take_string(text);
    if (opt.json) {
        ordered_json j{{"schema", 1},
                       {"command", verb},
                       {"field", field_json(field)},
                       {"result", s}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << s << "\n";
    }
    return kExitOk;
}

int run_riccati(const Options& opt, const orf_field* field, const std::string& expr) {
    int solvable = 0;
    orf_ratfun* sol = nullptr;
    char* bound = nullptr;
    check(orf_riccati(field, expr.c_str(), &solvable, &sol, &bound));
    std::string bs = take_string(bound);
    std::string ss;
    if (solvable) {
        char* text = nullptr;
        check(orf_ratfun_to_string(sol, &text));
        ss = take_string(text);
        orf_ratfun_free(sol);
    }
    if (opt.json) {
        ordered_json j{{"schema", 1},
                       {"command", "riccati"},
                       {"field", field_json(field)},
                       {"bound", bs},
                       {"solvable", solvable == 1}};
        j["solution"] = solvable ? ordered_json(ss) : ordered_json(nullptr);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "bound: " << bs << "\n";
        if (solvable)
            std::cout << "solution: " << ss << "\n";
        else
            std::cout << "NO SOLUTION\n";
    }
    return kExitOk;
}

int run_verify(const Options& opt, const orf_field* field, const std::string& expr) {
    OpHandle op;
    check(orf_op_parse(field, expr.c_str(), &op.op));
    orf_factorization* fac = nullptr;
    orf_status st = orf_factor(op.op, opt.threads, &fac);
    if (st != ORF_OK && st != ORF_ERR_UNSUPPORTED) die(exit_code_of(st), orf_last_error());
    std::unique_ptr<orf_factorization, void (*)(orf_factorization*)> guard(
        fac, orf_factorization_free);
    bool all_ok = true;

    orf_ratfun* unit = nullptr;
    check(orf_factorization_unit(fac, &unit));
    OpHandle prod;
    check(orf_op_parse(field, "1", &prod.op));
    for (std::size_t i = 0; i < orf_factorization_size(fac); ++i) {
        OpHandle fi;
        check(orf_factorization_factor(fac, i, &fi.op));
        orf_op* next = nullptr;
        check(orf_op_mul(prod.op, fi.op, &next));
        prod = OpHandle(next);
    }
    orf_op* scaled = nullptr;
    check(orf_op_mul_ratfun(unit, prod.op, &scaled));
    orf_ratfun_free(unit);
    OpHandle full(scaled);
    bool recon = orf_op_equal(full.op, op.op) == 1;
    all_ok &= recon;
    std::cout << "reconstruction: " << (recon ? "PASS" : "FAIL") << "\n";

    bool incomplete = orf_factorization_complete(fac) == 0;
    for (std::size_t i = 0; i < orf_factorization_size(fac); ++i) {
        OpHandle fi;
        check(orf_factorization_factor(fac, i, &fi.op));
        std::string cert = orf_factorization_certificate(fac, i);
        if (cert == "unsupported") {
            std::cout << "factor " << (i + 1) << ": SKIP (unsupported central field)\n";
            continue;
        }
        int irr = 0;
        check(orf_is_irreducible(fi.op, &irr, nullptr, nullptr));
        std::cout << "factor " << (i + 1) << " irreducible: " << (irr ? "PASS" : "FAIL")
                  << "\n";
        all_ok &= irr == 1;
    }
    if (!all_ok) return kExitInternal;
    return incomplete ? kExitUnsupported : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact factorization of linear differential operators over F_q(x)"};
    app.require_subcommand(1);

    Options opt;
    std::vector<CLI::App*> subs;
    auto add_common = [&](CLI::App* s, int n_args, const char* arg_name) {
        s->add_option("--field", opt.field, "coefficient field, GF(p) or GF(p^k)");
        s->add_option("--seed", opt.seed, "seed for randomized subroutines");
        s->add_flag("--json", opt.json, "print machine-readable JSON");
        s->add_flag("--timing", opt.timing, "report wall-clock time");
        s->add_option("expr", opt.args, arg_name)->expected(n_args)->required();
        subs.push_back(s);
        return s;
    };

    auto* factor = add_common(app.add_subcommand("factor", "factor an operator"), 1,
                              "operator expression ('-' reads stdin)");
    factor->add_flag("--verify", opt.verify, "multiply the factors back and check");
    factor->add_option("--threads", opt.threads, "process components in parallel");
    add_common(app.add_subcommand("pcurvature", "print the p-curvature matrix"), 1,
               "operator expression");
    add_common(app.add_subcommand("charpoly",
                                  "characteristic polynomial of the p-curvature"),
               1, "operator expression");
    add_common(app.add_subcommand("charfactor",
                                  "factor the characteristic polynomial over F_q(t)"),
               1, "operator expression");
    add_common(app.add_subcommand("gcrd", "greatest common right divisor"), 2,
               "two operator expressions");
    add_common(app.add_subcommand("lclm", "least common left multiple"), 2,
               "two operator expressions");
    add_common(app.add_subcommand("riccati", "solve f^(p-1) + f^p = y"), 1,
               "constant rational function y");
    auto* verify = add_common(app.add_subcommand("verify", "factor, then check the result"),
                              1, "operator expression");
    verify->add_option("--threads", opt.threads, "process components in parallel");

    CLI11_PARSE(app, argc, argv);

    auto [p, k] = parse_field(opt.field);
    FieldHandle field;
    orf_status st = orf_field_new(p, k, opt.seed, &field.f);
    if (st != ORF_OK) die(kExitUser, orf_last_error());

    std::string verb = app.get_subcommands().front()->get_name();
    std::string arg0 = read_operand(opt.args.at(0));

    if (verb == "factor") return run_factor(opt, field.f, arg0);
    if (verb == "pcurvature") return run_pcurvature(opt, field.f, arg0);
    if (verb == "charpoly") return run_charpoly(opt, field.f, arg0);
    if (verb == "charfactor") return run_charfactor(opt, field.f, arg0);
    if (verb == "gcrd" || verb == "lclm")
        return run_pair(opt, field.f, verb, arg0, opt.args.at(1));
    if (verb == "riccati") return run_riccati(opt, field.f, arg0);
    if (verb == "verify") return run_verify(opt, field.f, arg0);
    die(kExitUser, "unknown command " + verb);
}
