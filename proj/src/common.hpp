// Copyright (c) 2026 The orefactor authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef OREFACTOR_COMMON_HPP
#define OREFACTOR_COMMON_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace orefactor {

enum class errc {
    invalid_argument,
    division_by_zero,
    division_by_zero_operator,
    not_constant,
    higher_order_pole,
    inexact_division,
    zero_input,
    syntax_error,
    unsupported_central_field,
    unsupported_inseparable,
    internal_invariant,
};

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what, std::size_t pos = npos)
        : std::runtime_error(what), code_(code), pos_(pos) {}

    errc code() const { return code_; }
    std::size_t pos() const { return pos_; }  // byte offset for syntax errors

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

private:
    errc code_;
    std::size_t pos_;
};

[[noreturn]] inline void raise(errc c, const std::string& msg, std::size_t pos = error::npos) {
    throw error(c, msg, pos);
}

inline void check_invariant(bool ok, const char* msg) {
    if (!ok) raise(errc::internal_invariant, msg);
}

// splitmix64, used to derive per-call deterministic streams from a seed.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::uint64_t hash_mix(std::uint64_t h, std::uint64_t v) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

}  // namespace orefactor

#endif
