#pragma once

/**
 * @file modarith.hpp
 * @brief Arbitrary-precision arithmetic in Z/NZ.
 *
 * Residues are always canonical representatives in [0, N). All arithmetic
 * goes through a Modulus, which owns N and the multiplication kernel:
 *
 *  - MulKernel::Gmp  GMP's mpz multiply + division. Fastest at every size
 *                    this project exercises.
 *  - MulKernel::Ntt  number-theoretic-transform multiplication with Barrett
 *                    reduction. Quasi-linear at every operand size, so the
 *                    cost of a modular product tracks O(n log n).
 *
 * Both kernels produce bit-identical residues.
 */

#include <gmpxx.h>

#include <cstddef>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>

namespace cmprime {

using BigInt = mpz_class;

enum class MulKernel { Gmp, Ntt };

std::string to_string(MulKernel kernel);
MulKernel parse_kernel(const std::string& name);

namespace detail {
class BarrettNtt;
}

class Modulus;

/// Canonical residue in [0, N). Only a Modulus can create one.
class Residue {
 public:
  Residue() = default;

  const BigInt& value() const noexcept { return v_; }
  std::string to_string() const { return v_.get_str(); }

  friend bool operator==(const Residue& a, const Residue& b) {
    return a.v_ == b.v_;
  }

 private:
  friend class Modulus;
  explicit Residue(BigInt v) : v_(std::move(v)) {}

  BigInt v_;
};

/// gcd(a, N) > 1 reported by a failed inversion.
struct NotInvertible {
  BigInt gcd;
};

class Modulus {
 public:
  /// Throws std::invalid_argument unless n >= 2.
  explicit Modulus(BigInt n, MulKernel kernel = MulKernel::Gmp);

  const BigInt& value() const noexcept { return n_; }
  MulKernel kernel() const noexcept { return kernel_; }
  std::size_t bits() const;

  /// Reduces any integer, negative ones included.
  Residue reduce(const BigInt& x) const;
  Residue from_int(long x) const;
  Residue zero() const { return Residue(BigInt(0)); }
  Residue one() const;

  bool is_zero(const Residue& a) const { return sgn(a.v_) == 0; }

  Residue add(const Residue& a, const Residue& b) const;
  Residue sub(const Residue& a, const Residue& b) const;
  Residue neg(const Residue& a) const;
  Residue mul(const Residue& a, const Residue& b) const;
  Residue sqr(const Residue& a) const;
  /// Multiplication by a word-sized constant; linear time for both kernels.
  Residue mul_si(const Residue& a, long c) const;

  /// base^exponent. Throws std::invalid_argument for a negative exponent.
  Residue pow(const Residue& base, const BigInt& exponent) const;

  std::variant<Residue, NotInvertible> inverse(const Residue& a) const;

 private:
  BigInt n_;
  MulKernel kernel_;
  std::shared_ptr<const detail::BarrettNtt> ntt_;

  Residue reduce_product(BigInt&& product) const;
};

Residue mod_pow(const Modulus& mod, const Residue& base, const BigInt& exponent);
std::variant<Residue, NotInvertible> mod_inv(const Modulus& mod, const Residue& a);

/// gcd(0, 0) = 0; result is nonnegative.
BigInt gcd(const BigInt& a, const BigInt& b);

/// Jacobi symbol (a/n). Throws std::invalid_argument unless n is odd and >= 1.
int jacobi(const BigInt& a, const BigInt& n);

/// Tonelli–Shanks square root modulo a prime p. Returns std::nullopt when a
/// is a non-residue. On composite p it terminates but the result is
/// unspecified.
std::optional<Residue> sqrt_mod(const Residue& a, const Modulus& p);

}  // namespace cmprime
