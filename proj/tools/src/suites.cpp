#include "cmprime_cli/suites.hpp"

#include <random>

#include "cmprime/ecring.hpp"
#include "cmprime_oracles/oracles.hpp"

namespace cmprime::cli {
namespace {

using u64 = std::uint64_t;

struct Sample {
  u64 n, a, b, x, y;
};

// A random curve through a random point: b is solved for.
Sample draw(std::mt19937_64& rng, u64 n) {
  std::uniform_int_distribution<u64> r(0, n - 1);
  Sample s{n, r(rng), 0, r(rng), r(rng)};
  const u64 x3 = s.x * s.x % n * s.x % n;
  s.b = ((s.y * s.y % n) + 2 * n - x3 - s.a * s.x % n) % n;
  return s;
}

bool singular(const Sample& s) {
  const u64 n = s.n;
  const u64 disc = (4 * (s.a * s.a % n * s.a % n) + 27 * (s.b * s.b % n)) % n;
  return disc == 0;
}

}  // namespace

SuiteReport field_agreement_suite(unsigned prime_samples, unsigned composite_samples,
                                  std::uint64_t seed) {
  SuiteReport report;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<u64> pick(5, (u64{1} << 20) - 1);
  auto fail = [&](const Sample& s, const char* what) {
    if (report.failures.size() < 20) {
      report.failures.push_back(std::string(what) + " n=" + std::to_string(s.n) +
                                " a=" + std::to_string(s.a) + " b=" + std::to_string(s.b) +
                                " P=(" + std::to_string(s.x) + "," + std::to_string(s.y) + ")");
    }
  };

  unsigned done = 0;
  while (done < prime_samples) {
    const u64 p = pick(rng) | 1;
    if (!oracle::is_prime_trial(p)) continue;
    const Sample s = draw(rng, p);
    if (singular(s)) continue;
    ++done;

    const Modulus mod{BigInt(static_cast<unsigned long>(p))};
    const RingCurve c = make_curve(mod, BigInt(static_cast<unsigned long>(s.a)),
                                   BigInt(static_cast<unsigned long>(s.b)));
    const RingPoint P = affine_point(mod, BigInt(static_cast<unsigned long>(s.x)),
                                     BigInt(static_cast<unsigned long>(s.y)));
    const RingPoint D = double_point(P, c);
    if (!is_on_curve(D, c)) fail(s, "closure");

    const oracle::PrimeCurve oc{p, s.a, s.b};
    const oracle::AffinePoint op{s.x, s.y, false};
    const oracle::AffinePoint expect = oracle::affine_group_law(op, op, oc);
    if (expect.infinity) {
      if (!mod.is_zero(D.z)) fail(s, "expected zero");
    } else {
      auto n = normalize(D, mod);
      if (!std::holds_alternative<RingPoint>(n)) {
        fail(s, "z not invertible");
      } else {
        const RingPoint& q = std::get<RingPoint>(n);
        if (q.x.value() != static_cast<unsigned long>(expect.x) ||
            q.y.value() != static_cast<unsigned long>(expect.y)) {
          fail(s, "disagrees with affine law");
        }
      }
    }

    // Rescaling the input by a unit rescales the output.
    const Residue lambda = mod.reduce(BigInt(static_cast<unsigned long>(pick(rng) % (p - 1) + 1)));
    const RingPoint scaled{mod.mul(P.x, lambda), mod.mul(P.y, lambda), lambda};
    const RingPoint Ds = double_point(scaled, c);
    if (!(mod.mul(Ds.x, D.z) == mod.mul(D.x, Ds.z)) ||
        !(mod.mul(Ds.y, D.z) == mod.mul(D.y, Ds.z))) {
      fail(s, "not projectively invariant");
    }
  }

  done = 0;
  while (done < composite_samples) {
    const u64 n = pick(rng) | 1;
    if (oracle::is_prime_trial(n)) continue;
    const Sample s = draw(rng, n);
    ++done;
    const Modulus mod{BigInt(static_cast<unsigned long>(n))};
    const RingCurve c = make_curve(mod, BigInt(static_cast<unsigned long>(s.a)),
                                   BigInt(static_cast<unsigned long>(s.b)));
    RingPoint P = affine_point(mod, BigInt(static_cast<unsigned long>(s.x)),
                               BigInt(static_cast<unsigned long>(s.y)));
    for (int i = 0; i < 4; ++i) {
      P = double_point(P, c);
      if (!is_on_curve(P, c)) {
        fail(s, "closure over a composite modulus");
        break;
      }
    }
  }
  report.samples = prime_samples + composite_samples;
  return report;
}

}  // namespace cmprime::cli
