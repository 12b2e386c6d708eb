#pragma once

// Number-theoretic-transform multiplication over the prime
// P = 2^64 - 2^32 + 1, with 16-bit digits. A product of length-L digit
// vectors has coefficients below L * 2^32, so every length up to 2^31 is
// exact and no CRT is needed.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <vector>

namespace cmprime::detail {

using Coeffs = std::vector<std::uint64_t>;

/// Smallest log2 length able to hold a product of operands of the given bit
/// sizes.
unsigned ntt_log_length(std::size_t bits_a, std::size_t bits_b);

/// Forward transform of |x| at length 2^log_len.
Coeffs ntt_forward(const mpz_class& x, unsigned log_len);

/// Pointwise product of two transforms followed by the inverse transform and
/// carry propagation.
mpz_class ntt_product(const Coeffs& a_hat, const Coeffs& b_hat, unsigned log_len);

/// a * b for nonnegative a, b.
mpz_class ntt_multiply(const mpz_class& a, const mpz_class& b);

/// Barrett reduction modulo a fixed n where every multiplication, including
/// the two inside the reduction, goes through the transform.
class BarrettNtt {
 public:
  explicit BarrettNtt(const mpz_class& n);

  /// a * b mod n for a, b in [0, n).
  mpz_class multiply(const mpz_class& a, const mpz_class& b) const;
  mpz_class square(const mpz_class& a) const;

  /// x mod n for 0 <= x < 2^(2 * bits(n)).
  mpz_class reduce(const mpz_class& x) const;

 private:
  mpz_class n_;
  mpz_class mu_;  // floor(4^k / n)
  std::size_t k_;
  unsigned log_len_;
  Coeffs mu_hat_;
  Coeffs n_hat_;
};

}  // namespace cmprime::detail
