#include "sfg/bigint.hpp"

namespace sfg {

std::string to_decimal(const BigInt& value) { return value.get_str(10); }

std::optional<std::uint64_t> exact_log2(const BigInt& value) {
  if (sgn(value) <= 0) return std::nullopt;
  const mp_bitcnt_t low = mpz_scan1(value.get_mpz_t(), 0);
  if (mpz_sizeinbase(value.get_mpz_t(), 2) != low + 1) return std::nullopt;
  return static_cast<std::uint64_t>(low);
}

BigInt pow2(std::uint64_t exponent) {
  BigInt result;
  mpz_setbit(result.get_mpz_t(), static_cast<mp_bitcnt_t>(exponent));
  return result;
}

std::uint64_t bit_length(const BigInt& value) {
  if (sgn(value) == 0) return 0;
  return mpz_sizeinbase(value.get_mpz_t(), 2);
}

}  // namespace sfg
