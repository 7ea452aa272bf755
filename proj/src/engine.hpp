// Copyright (c) 2026 The orefactor authors.
// SPDX-License-Identifier: Apache-2.0
//
// The factorization pipeline: isotypic splitting along the characteristic
// polynomial of the p-curvature, refinement to divisors of N(D^p),
// constant-field embeddings for the two genus-0 central cases, and
// irreducible right divisor extraction through p-Riccati solutions.

#ifndef OREFACTOR_ENGINE_HPP
#define OREFACTOR_ENGINE_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "centralfactor.hpp"
#include "pcurvature.hpp"
#include "priccati.hpp"

namespace orefactor {

struct IsotypicComponent {
    YPoly n;       // monic irreducible over F_q(t)
    int nu;        // multiplicity in the characteristic polynomial
    OreOp factor;  // monic; the components multiply back to L in order
};

// L = comp[0].factor * comp[1].factor * ... ; also asserts the lclm form
// L = lclm_i gcrd(L, N_i^nu_i(D^p)). ord L >= 1.
std::vector<IsotypicComponent> isotypic_split(const Field& F, const OreOp& l);

// Refines one isotypic component into blocks right-dividing N(D^p) via the
// filtration B_i = gcrd(L, N(D^p)^i); returns the blocks in product order.
std::vector<OreOp> power_refine(const Field& F, const OreOp& l, const YPoly& n, int nu);

// Where the p-Riccati equation for N lives. Either the base rational field
// itself (deg N = 1) or a constant-field extension (N with coefficients in
// F_q); anything else is out of scope for genus 0.
struct CentralEmbedding {
    bool constant_case = false;  // true: K_N = F_{q^d}(x) with y_N a constant
    unsigned n_degree = 1;       // d = deg_Y N
    RatFun y_image;              // over field(): c(x^p) or the constant root
    std::shared_ptr<const Field> ext;           // constant case only
    std::shared_ptr<const FieldEmbedding> emb;  // F_q -> F_{q^d}
    fq beta = 0;                 // root of N in the extension

    const Field& field(const Field& base) const { return ext ? *ext : base; }
};

// unsupported_central_field / unsupported_inseparable when out of scope
CentralEmbedding classify_embedding(const Field& F, const YPoly& n);

// Preimage of D - f under the isomorphism sending D^p to y_N: writes
// f = sum a_j(x) beta^j and substitutes beta^j -> D^pj.
OreOp phi_inverse(const Field& F, const CentralEmbedding& emb, const RatFun& f);

enum class Certificate {
    order_one,            // first order, trivially irreducible
    minimal_order,        // order = deg_Y N, the minimal module dimension
    riccati_unsolvable,   // N(D^p) generates a division algebra
    unsupported,          // block left coarse: central field out of scope
};

const char* certificate_name(Certificate c);

// One irreducible right divisor of L (which must right-divide N(D^p)), or L
// itself with a riccati_unsolvable certificate.
OreOp irreducible_right_divisor(const Field& F, const OreOp& l, const YPoly& n,
                                Certificate* cert = nullptr);

// The p operators L_{f + k/x}; their lclm reproduces monic L exactly.
std::vector<OreOp> lclm_decomposition(const Field& F, const OreOp& l, const YPoly& n);

struct FactorChain {
    RatFun unit;                       // leading coefficient of L
    std::vector<OreOp> factors;        // monic, in product order
    std::vector<Certificate> certs;    // parallel to factors
    bool complete = true;              // false: some blocks left coarse
};

class unsupported_error : public error {
public:
    unsupported_error(errc code, const std::string& what, FactorChain partial)
        : error(code, what), partial_(std::move(partial)) {}
    const FactorChain& partial() const { return partial_; }

private:
    FactorChain partial_;
};

// Complete factorization into certified irreducibles; throws
// unsupported_error carrying the coarse partial chain when a component
// needs an out-of-scope central field. ord L >= 1.
FactorChain factor_completely(const Field& F, const OreOp& l, unsigned threads = 1);

struct IrreducibilityResult {
    bool irreducible = false;
    Certificate cert = Certificate::order_one;
    std::optional<OreOp> witness;  // a proper right divisor when reducible
};

IrreducibilityResult is_irreducible(const Field& F, const OreOp& l);

}  // namespace orefactor

#endif
