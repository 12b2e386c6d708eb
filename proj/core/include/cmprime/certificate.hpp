#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "cmprime/modarith.hpp"

namespace cmprime {

inline constexpr const char* kCertificateFormat = "cm15-cert-v1";

/// Primality proof for F_k: the point P_d = (0, Py) on y^2 = x^3 + a4 x + a6
/// over Z/FZ, with d^2 = 5, and the projective point reached after
/// `doublings` doublings, whose y-coordinate is 0 and whose z is a unit.
struct Certificate {
  unsigned long k = 0;
  BigInt F, d, a4, a6, Py;
  std::uint64_t doublings = 0;
  BigInt final_x, final_z;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

class CertificateFormatError : public std::runtime_error {
 public:
  explicit CertificateFormatError(const std::string& what) : std::runtime_error(what) {}
};

/// One JSON object. Big integers are decimal strings.
std::string to_json(const Certificate& c);

/// Whitespace-insensitive. Rejects missing, extra or mistyped keys, a wrong
/// format tag, and any number that is not a plain nonnegative decimal.
Certificate certificate_from_json(const std::string& text);

struct CertificateReport {
  bool ok = true;
  std::vector<std::string> failures;  ///< names of the invariants that broke
};

/// Recomputes every invariant, including F = F_k and the whole doubling chain.
CertificateReport verify_certificate(const Certificate& c, MulKernel kernel = MulKernel::Gmp);

/// The torsion x-coordinate x/z against +-2643963 d - 5912081. Diagnostic
/// only; see README for why this identity does not hold.
bool strict_torsion_check(const Certificate& c);

}  // namespace cmprime
