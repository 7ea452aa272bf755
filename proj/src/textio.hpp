// Copyright (c) 2026 The orefactor authors.
// SPDX-License-Identifier: Apache-2.0
//
// Expression parsing and canonical printing. Grammar: + - * / ^ ( ), the
// variable x, the operator symbol D (noncommuting), field constants as
// integers or polynomials in z. Printing is canonical: parse(print(v)) == v.

#ifndef OREFACTOR_TEXTIO_HPP
#define OREFACTOR_TEXTIO_HPP

#include <string>
#include <string_view>

#include "engine.hpp"

namespace orefactor {

OreOp parse_operator(const Field& F, std::string_view text);
RatFun parse_ratfun(const Field& F, std::string_view text);

std::string elem_to_string(const Field& F, fq a);
std::string poly_to_string(const Field& F, const FqPoly& a, char var = 'x');
std::string ratfun_to_string(const Field& F, const RatFun& f, char var = 'x');
std::string op_to_string(const Field& F, const OreOp& l);
std::string ypoly_to_string(const Field& F, const YPoly& n, char var = 'Y', char cvar = 't');
std::string divisor_to_string(const Field& F, const Divisor& d);
std::string pole_bound_to_string(const Field& F, const PoleBound& b);
std::string field_to_string(const Field& F);

// "GF(5)" or "GF(2^3)" -> (p, k); syntax_error otherwise
std::pair<unsigned, unsigned> parse_field_spec(std::string_view text);

}  // namespace orefactor

#endif
