#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace rroot {

/// Arbitrary-precision natural number.
using Natural = mpz_class;

/// Parses a decimal string, or hexadecimal with a `0x` prefix.
/// Throws std::invalid_argument on malformed or negative input.
Natural parse_natural(std::string_view text);

std::string to_string(const Natural& n);

/// Returns the value as uint64; throws std::overflow_error if it does not fit.
std::uint64_t to_u64(const Natural& n);

Natural ipow(std::uint64_t base, unsigned exponent);

/// floor(sqrt(n))
Natural isqrt(const Natural& n);

bool is_small_prime(std::uint64_t n);

}  // namespace rroot
