#pragma once

// Arithmetic in O_H / (p_k) = Z/F_kZ for prime F_k, where H = Q(sqrt(-3),
// sqrt(5)) and p_k = 1 + 2 beta^k with beta = (sqrt(5) + sqrt(-3)) / 2.
// Used to check the structure of E_d mod p_k: the action of
// alpha = beta^2 = (1 + sqrt(-15)) / 2 on x-coordinates, the 2-power order of
// P_d, the 2-torsion point the prover lands on, and the group order.

#include <array>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "cmprime/ecring.hpp"

namespace cmprime {

struct HResidueContext {
  unsigned long k = 0;
  Modulus mod;
  Residue d;      ///< sqrt(5)
  Residue t;      ///< sqrt(-3)
  Residue beta;   ///< (d + t) / 2
  Residue alpha;  ///< beta^2
  Residue u;      ///< d t = sqrt(-15)
};

/// Throws PreconditionError unless test15(k) proves F_k prime. Signs of d and
/// t are chosen so that 1 + 2 beta^k = 0.
HResidueContext build_context(unsigned long k);

/// Names of the broken context invariants; empty when all hold.
std::vector<std::string> context_violations(const HResidueContext& ctx);

/// E_d for the context's d.
RingCurve context_curve(const HResidueContext& ctx);

struct XPoint {
  Residue X, Z;
};

/// X' = (X^2 - a4 Z^2)^2 - 8 a6 X Z^3, Z' = 4 Z (X^3 + a4 X Z^2 + a6 Z^3).
XPoint x_double(const XPoint& p, const RingCurve& c);

/// Which square root of -15 the map's sqrt(-15) coefficients are read as.
enum class Conjugation { Direct, Swapped };  // u = d t, u = -d t

const char* to_string(Conjugation c);

struct PoleAtX {};

/// x(alpha Q) = f(x) / g(x) with f quartic and g cubic.
class AlphaMap {
 public:
  AlphaMap(const HResidueContext& ctx, Conjugation conj);

  /// Ascending-degree coefficients.
  const std::array<Residue, 5>& f() const noexcept { return f_; }
  const std::array<Residue, 4>& g() const noexcept { return g_; }

  std::variant<Residue, PoleAtX> at(const Residue& x) const;
  /// Homogenized: (X : Z) -> (f(X, Z) : g(X, Z) Z).
  XPoint apply(const XPoint& p) const;

 private:
  Modulus mod_;
  std::array<Residue, 5> f_;
  std::array<Residue, 4> g_;
};

std::variant<Residue, PoleAtX> alpha_x(const Residue& x, const HResidueContext& ctx,
                                       Conjugation conj = Conjugation::Direct);

/// x(alpha^2 Q) is a root of the quadratic whose roots are x(alpha Q +- 4Q),
/// as alpha^2 = alpha - 4. False also when the test is undefined at q
/// (a pole, or x(alpha Q) = x(4Q)).
bool minimal_polynomial_holds(const AlphaMap& map, const RingCurve& c, const Residue& x);

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct MainTheoremReport {
  unsigned long k = 0;
  Conjugation convention = Conjugation::Direct;
  std::vector<CheckResult> checks;

  bool all_pass() const;
  /// One "check <name> PASS|FAIL" line per check, with details.
  std::string to_text() const;
};

/// Runs the structural checks for prime F_k. `samples` random points feed the
/// minimal-polynomial check.
MainTheoremReport verify_mainthm_checks(unsigned long k, unsigned samples = 50);

/// 7 (844583 - 377709 d + 26683 t - 11933 u) / 2: the x-coordinate of the
/// 2-torsion point reached by 2^(2k+1) P_d.
Residue torsion_x(const HResidueContext& ctx);

inline constexpr std::uint64_t kCountPointsBudget = std::uint64_t{1} << 24;

/// #E_d(F) by summing Legendre symbols over every x. Throws PreconditionError
/// if F_k exceeds kCountPointsBudget.
BigInt count_points(unsigned long k, unsigned jobs = 1);

/// Every x in [0, F) with g(x) = 0. Same budget as count_points.
std::vector<std::uint64_t> alpha_poles(const AlphaMap& map, const Modulus& mod);

}  // namespace cmprime
