#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

namespace sfg {

/// Arbitrary-precision nonnegative counter used for every exact count.
using BigInt = mpz_class;

std::string to_decimal(const BigInt& value);

/// Returns k when value == 2^k, nullopt otherwise (including value <= 0).
std::optional<std::uint64_t> exact_log2(const BigInt& value);

/// 2^exponent.
BigInt pow2(std::uint64_t exponent);

/// Number of bits needed to represent |value| (0 for zero).
std::uint64_t bit_length(const BigInt& value);

}  // namespace sfg
