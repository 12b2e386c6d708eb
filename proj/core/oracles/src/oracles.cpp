#include "cmprime_oracles/oracles.hpp"

#include <stdexcept>

namespace cmprime::oracle {
namespace {

bool strong_witness(const mpz_class& n, const mpz_class& a, const mpz_class& q, unsigned long s) {
  const mpz_class n1 = n - 1;
  mpz_class x;
  mpz_powm(x.get_mpz_t(), a.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
  if (x == 1 || x == n1) return false;
  for (unsigned long i = 1; i < s; ++i) {
    x = x * x % n;
    if (x == n1) return false;
  }
  return true;
}

using u64 = std::uint64_t;

u64 mulmod(u64 a, u64 b, u64 p) { return a * b % p; }  // p < 2^24

u64 powmod(u64 b, u64 e, u64 p) {
  u64 r = 1 % p;
  b %= p;
  for (; e; e >>= 1) {
    if (e & 1) r = mulmod(r, b, p);
    b = mulmod(b, b, p);
  }
  return r;
}

u64 inv(u64 a, u64 p) { return powmod(a, p - 2, p); }

}  // namespace

MrResult miller_rabin(const mpz_class& n) {
  if (n < 2) throw std::invalid_argument("miller_rabin: n < 2");
  static const unsigned kSmall[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
  for (unsigned p : kSmall) {
    if (n == p) return MrResult::ProbablePrime;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return MrResult::Composite;
  }
  mpz_class q = n - 1;
  const unsigned long s = mpz_scan1(q.get_mpz_t(), 0);
  mpz_fdiv_q_2exp(q.get_mpz_t(), q.get_mpz_t(), s);

  static const mpz_class kDeterministic("3317044064679887385961981");
  if (n < kDeterministic) {
    for (unsigned a : kSmall) {
      if (strong_witness(n, a, q, s)) return MrResult::Composite;
    }
    return MrResult::ProbablePrime;
  }
  // Seeded by n so that every run draws the same bases.
  gmp_randclass rng(gmp_randinit_mt);
  rng.seed(n);
  const mpz_class span = n - 3;
  for (int round = 0; round < 64; ++round) {
    const mpz_class a = rng.get_z_range(span) + 2;
    if (strong_witness(n, a, q, s)) return MrResult::Composite;
  }
  return MrResult::ProbablePrime;
}

ProthResult proth_oracle(std::uint64_t h, unsigned e) {
  if (h % 2 == 0 || e == 0 || e >= 4096) throw std::invalid_argument("proth_oracle: bad h or e");
  mpz_class two_e = 1;
  mpz_mul_2exp(two_e.get_mpz_t(), two_e.get_mpz_t(), e);
  // Below h < 2^e the -1 criterion is a proof; above it only a necessary
  // condition, so a -1 there is confirmed with Miller-Rabin.
  const bool proof = mpz_class(static_cast<unsigned long>(h)) < two_e;
  const mpz_class n = mpz_class(static_cast<unsigned long>(h)) * two_e + 1;
  for (unsigned long a = 2; a <= 100; ++a) {
    if (mpz_jacobi(mpz_class(a).get_mpz_t(), n.get_mpz_t()) != -1) continue;
    mpz_class r;
    const mpz_class half = (n - 1) / 2;
    mpz_powm(r.get_mpz_t(), mpz_class(a).get_mpz_t(), half.get_mpz_t(), n.get_mpz_t());
    if (r == n - 1) {
      if (proof || miller_rabin(n) == MrResult::ProbablePrime) return ProthResult::Prime;
      return ProthResult::Composite;
    }
    if (r != 1) return ProthResult::Composite;
    return miller_rabin(n) == MrResult::Composite ? ProthResult::Composite
                                                  : ProthResult::Inconclusive;
  }
  return ProthResult::Inconclusive;
}

AffinePoint affine_group_law(const AffinePoint& P, const AffinePoint& Q, const PrimeCurve& c) {
  const u64 p = c.p;
  if (P.infinity) return Q;
  if (Q.infinity) return P;
  u64 lambda;
  if (P.x == Q.x) {
    if ((P.y + Q.y) % p == 0) return AffinePoint{0, 0, true};
    lambda = mulmod((3 * mulmod(P.x, P.x, p) + c.a) % p, inv(2 * P.y % p, p), p);
  } else {
    lambda = mulmod((Q.y + p - P.y) % p, inv((Q.x + p - P.x) % p, p), p);
  }
  const u64 x3 = (mulmod(lambda, lambda, p) + 2 * p - P.x - Q.x) % p;
  const u64 y3 = (mulmod(lambda, (P.x + p - x3) % p, p) + p - P.y) % p;
  return AffinePoint{x3, y3, false};
}

bool on_curve(const AffinePoint& P, const PrimeCurve& c) {
  if (P.infinity) return true;
  const u64 p = c.p;
  const u64 rhs = (mulmod(mulmod(P.x, P.x, p), P.x, p) + mulmod(c.a, P.x, p) + c.b) % p;
  return mulmod(P.y, P.y, p) == rhs;
}

bool is_prime_trial(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

}  // namespace cmprime::oracle
