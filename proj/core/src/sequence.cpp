#include "cmprime/sequence.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "cmprime/errors.hpp"

namespace cmprime {
namespace {

BigInt pow4(unsigned long e) {
  BigInt r = 1;
  mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), 2 * e);
  return r;
}

constexpr std::array<unsigned, 21> kS{9,   19,  39,  45,  59,  63,  67,  85,  105, 123, 129,
                                      133, 159, 169, 173, 181, 183, 221, 223, 225, 229};
constexpr std::array<unsigned, 26> kT1{3,  9,  13, 19, 21, 27, 31, 39,  45,  47,  49,  53,  59,
                                       61, 63, 65, 67, 81, 85, 91, 101, 103, 105, 109, 113, 117};
constexpr std::array<unsigned, 64> kT2{
    1,   5,   7,   9,   17,  19,  23,  27,  31,  35,  39,  41,  43,  45,  51,  55,
    59,  63,  67,  69,  71,  81,  83,  85,  89,  95,  97,  99,  105, 119, 123, 129,
    131, 133, 137, 141, 143, 145, 149, 157, 159, 161, 169, 173, 181, 183, 191, 193,
    195, 197, 199, 201, 209, 211, 213, 215, 221, 223, 225, 227, 229, 235, 237, 239};
constexpr std::array<unsigned, 7> kT3{27, 31, 81, 141, 201, 211, 237};

template <std::size_t N>
std::vector<unsigned> to_vec(const std::array<unsigned, N>& a) {
  return {a.begin(), a.end()};
}

}  // namespace

BigInt fk_recurrence(unsigned long k) {
  BigInt prev = 9, cur = 61;
  if (k == 0) return prev;
  BigInt p4 = pow4(3);  // 4^(k+2) at k = 1
  for (unsigned long i = 2; i <= k; ++i) {
    p4 <<= 2;
    BigInt next = cur - 4 * prev + p4 + 4;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

BigInt lucas_t(unsigned long k) {
  // (V_n, V_(n+1)) with Q^n = 4^n, walking the bits of k from the top.
  BigInt v = 2, w = 1;
  unsigned long n = 0;
  for (int bit = 63; bit >= 0; --bit) {
    if (n == 0 && ((k >> bit) & 1UL) == 0) continue;
    const BigInt qn = pow4(n);
    if ((k >> bit) & 1UL) {
      BigInt v2 = v * w - qn;
      BigInt w2 = w * w - 2 * (qn << 2);
      v = std::move(v2);
      w = std::move(w2);
      n = 2 * n + 1;
    } else {
      BigInt v2 = v * v - 2 * qn;
      BigInt w2 = v * w - qn;
      v = std::move(v2);
      w = std::move(w2);
      n = 2 * n;
    }
  }
  return v;
}

BigInt fk_closed_form(unsigned long k) { return 1 - 4 * lucas_t(k) + pow4(k + 2); }

FkValue fk_exact(unsigned long k) {
  BigInt t = lucas_t(k);
  BigInt closed = 1 - 4 * t + pow4(k + 2);
  BigInt rec = fk_recurrence(k);
  if (closed != rec) {
    throw InternalInconsistency("F_" + std::to_string(k) +
                                ": recurrence and closed form disagree");
  }
  return FkValue{k, std::move(rec), std::move(t)};
}

FkGenerator::FkGenerator() : f_prev_(0), f_cur_(9), t_prev_(0), t_cur_(2), pow4_(16) {}

FkValue FkGenerator::next() {
  if (f_cur_ != 1 - 4 * t_cur_ + pow4_) {
    throw InternalInconsistency("F_" + std::to_string(k_) +
                                ": recurrence and Lucas sequence disagree");
  }
  FkValue out{k_, f_cur_, t_cur_};
  BigInt f_next, t_next;
  BigInt p4_next = pow4_ << 2;
  if (k_ == 0) {
    f_next = 61;
    t_next = 1;
  } else {
    f_next = f_cur_ - 4 * f_prev_ + p4_next + 4;
    t_next = t_cur_ - 4 * t_prev_;
  }
  f_prev_ = std::move(f_cur_);
  f_cur_ = std::move(f_next);
  t_prev_ = std::move(t_cur_);
  t_cur_ = std::move(t_next);
  pow4_ = std::move(p4_next);
  ++k_;
  return out;
}

FkModStream::FkModStream(std::uint64_t m) : m_(m) {
  if (m < 2) throw std::invalid_argument("FkModStream: modulus must be >= 2");
}

std::uint64_t FkModStream::next() {
  using u128 = unsigned __int128;
  std::uint64_t out;
  if (k_ == 0) {
    out = 9 % m_;
    pow4_ = 64 % m_;  // 4^(k+2) for the next index
    f_cur_ = out;
  } else if (k_ == 1) {
    out = 61 % m_;
    f_prev_ = f_cur_;
    f_cur_ = out;
  } else {
    pow4_ = static_cast<std::uint64_t>(static_cast<u128>(pow4_) * 4 % m_);
    const u128 four_prev = static_cast<u128>(f_prev_) * 4 % m_;
    u128 v = static_cast<u128>(f_cur_) + m_ - four_prev;
    v += pow4_;
    v += 4 % m_;
    out = static_cast<std::uint64_t>(v % m_);
    f_prev_ = f_cur_;
    f_cur_ = out;
  }
  ++k_;
  return out;
}

std::vector<std::uint64_t> fk_mod_stream(unsigned long k_max, std::uint64_t m) {
  FkModStream s(m);
  std::vector<std::uint64_t> out;
  out.reserve(k_max + 1);
  for (unsigned long k = 0; k <= k_max; ++k) out.push_back(s.next());
  return out;
}

ResidueClassSet::ResidueClassSet(unsigned modulus, std::vector<unsigned> residues)
    : modulus_(modulus), residues_(std::move(residues)) {
  if (modulus_ == 0) throw std::invalid_argument("ResidueClassSet: modulus must be positive");
  for (auto& r : residues_) r %= modulus_;
  std::sort(residues_.begin(), residues_.end());
  residues_.erase(std::unique(residues_.begin(), residues_.end()), residues_.end());
}

bool ResidueClassSet::contains(unsigned long k) const {
  return std::binary_search(residues_.begin(), residues_.end(),
                            static_cast<unsigned>(k % modulus_));
}

ResidueClassSet ResidueClassSet::lift(unsigned new_modulus) const {
  if (new_modulus == 0 || new_modulus % modulus_ != 0) {
    throw std::invalid_argument("ResidueClassSet::lift: new modulus must be a multiple");
  }
  std::vector<unsigned> out;
  for (unsigned base = 0; base < new_modulus; base += modulus_) {
    for (unsigned r : residues_) out.push_back(base + r);
  }
  return ResidueClassSet(new_modulus, std::move(out));
}

ResidueClassSet ResidueClassSet::intersect(const ResidueClassSet& other) const {
  if (other.modulus_ != modulus_) throw std::invalid_argument("intersect: moduli differ");
  std::vector<unsigned> out;
  std::set_intersection(residues_.begin(), residues_.end(), other.residues_.begin(),
                        other.residues_.end(), std::back_inserter(out));
  return ResidueClassSet(modulus_, std::move(out));
}

ResidueClassSet ResidueClassSet::minus(const ResidueClassSet& other) const {
  if (other.modulus_ != modulus_) throw std::invalid_argument("minus: moduli differ");
  std::vector<unsigned> out;
  std::set_difference(residues_.begin(), residues_.end(), other.residues_.begin(),
                      other.residues_.end(), std::back_inserter(out));
  return ResidueClassSet(modulus_, std::move(out));
}

const ResidueClassSet& residue_set(IndexSet which) {
  static const ResidueClassSet s(240, to_vec(kS));
  static const ResidueClassSet t1(120, to_vec(kT1));
  static const ResidueClassSet t2(240, to_vec(kT2));
  static const ResidueClassSet t3(240, to_vec(kT3));
  switch (which) {
    case IndexSet::S: return s;
    case IndexSet::T1: return t1;
    case IndexSet::T2: return t2;
    case IndexSet::T3: return t3;
  }
  throw std::invalid_argument("residue_set: unknown set");
}

bool in_set(unsigned long k, IndexSet which) { return residue_set(which).contains(k); }

std::vector<unsigned> predicted_small_divisors(unsigned long k) {
  std::vector<unsigned> out;
  if (k % 2 == 0) out.push_back(3);
  if (k % 4 == 2) out.push_back(5);
  if (k % 24 == 16) out.push_back(7);
  if (k % 60 == 48) out.push_back(11);
  if (k % 15 == 6 || k % 15 == 12) out.push_back(31);
  if (k % 30 == 1) out.push_back(61);
  return out;
}

}  // namespace cmprime
