#include "cmprime/theorems.hpp"

#include <algorithm>

#include "cmprime/sequence.hpp"

namespace cmprime {
namespace {

void record(SweepReport& r, std::string what) {
  if (r.violations.size() < 20) r.violations.push_back(std::move(what));
  ++r.violation_count;
}

}  // namespace

SweepReport divisibility_sweep(unsigned long k_max) {
  SweepReport r;
  FkGenerator gen;
  gen.next();
  BigInt prev;
  for (unsigned long k = 1; k <= k_max; ++k) {
    const FkValue v = gen.next();
    const auto predicted = predicted_small_divisors(k);
    bool any = false;
    for (unsigned p : kSmallDivisorPrimes) {
      const bool divides = mpz_divisible_ui_p(v.F.get_mpz_t(), p) != 0;
      const bool expect = std::find(predicted.begin(), predicted.end(), p) != predicted.end();
      any = any || divides;
      if (divides != expect) {
        record(r, "k=" + std::to_string(k) + " p=" + std::to_string(p) +
                      (divides ? " divides but is not predicted" : " predicted but does not divide"));
      }
    }
    if (mpz_fdiv_ui(v.F.get_mpz_t(), 8) != 5) record(r, "k=" + std::to_string(k) + " F mod 8 != 5");
    if (k % 4 != 2) {
      const unsigned long m5 = mpz_fdiv_ui(v.F.get_mpz_t(), 5);
      if (m5 != 1 && m5 != 4) record(r, "k=" + std::to_string(k) + " F mod 5 not +-1");
    }
    if (in_set(k, IndexSet::T3) && !any) {
      record(r, "k=" + std::to_string(k) + " in T3 without a small divisor");
    }
    if (k > 1 && !(prev < v.F)) record(r, "k=" + std::to_string(k) + " F not increasing");
    prev = v.F;
    ++r.checked;
  }
  return r;
}

SweepReport closed_form_sweep(unsigned long k_max) {
  SweepReport r;
  std::vector<FkModStream> streams;
  for (unsigned p : kSmallDivisorPrimes) streams.emplace_back(p);
  FkGenerator gen;
  for (unsigned long k = 0; k <= k_max; ++k) {
    const FkValue v = gen.next();
    if (v.F != fk_closed_form(k)) record(r, "k=" + std::to_string(k) + " closed form differs");
    for (std::size_t i = 0; i < streams.size(); ++i) {
      if (streams[i].next() != mpz_fdiv_ui(v.F.get_mpz_t(), kSmallDivisorPrimes[i])) {
        record(r, "k=" + std::to_string(k) + " stream mod " + std::to_string(kSmallDivisorPrimes[i]));
      }
    }
    ++r.checked;
  }
  return r;
}

bool set_identity_holds() {
  const auto lifted = residue_set(IndexSet::T1).lift(240);
  const auto derived =
      lifted.intersect(residue_set(IndexSet::T2)).minus(residue_set(IndexSet::T3));
  return derived == residue_set(IndexSet::S);
}

}  // namespace cmprime
