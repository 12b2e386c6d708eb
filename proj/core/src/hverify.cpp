#include "cmprime/hverify.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <thread>

#include "cmprime/errors.hpp"
#include "cmprime/prover15.hpp"
#include "cmprime/sequence.hpp"

namespace cmprime {
namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

Residue half(const Modulus& m, const Residue& a) {
  return m.mul(a, std::get<Residue>(m.inverse(m.from_int(2))));
}

// Big constants enter as decimal strings so nothing overflows a long.
Residue lin(const Modulus& m, const char* c0, const char* ct, const char* cd, const char* cu,
            const Residue& t, const Residue& d, const Residue& u) {
  BigInt v = BigInt(c0) + BigInt(ct) * t.value() + BigInt(cd) * d.value() +
             BigInt(cu) * u.value();
  return m.reduce(v);
}

int jacobi_u64(u64 a, u64 n) {
  int s = 1;
  a %= n;
  while (a != 0) {
    while ((a & 1) == 0) {
      a >>= 1;
      const u64 r = n & 7;
      if (r == 3 || r == 5) s = -s;
    }
    std::swap(a, n);
    if ((a & 3) == 3 && (n & 3) == 3) s = -s;
    a %= n;
  }
  return n == 1 ? s : 0;
}

XPoint apply_n(const AlphaMap& map, XPoint p, unsigned long n) {
  for (unsigned long i = 0; i < n; ++i) p = map.apply(p);
  return p;
}

XPoint double_n(XPoint p, unsigned n, const RingCurve& c) {
  for (unsigned i = 0; i < n; ++i) p = x_double(p, c);
  return p;
}

bool b_checks_hold(const HResidueContext& ctx, const RingCurve& curve, Conjugation conj) {
  const Modulus& m = ctx.mod;
  const AlphaMap map(ctx, conj);
  const XPoint p{m.zero(), m.one()};
  const XPoint a_k1 = apply_n(map, p, ctx.k - 1);
  const XPoint zero = double_n(map.apply(a_k1), 2, curve);
  const XPoint nonzero = double_n(a_k1, 3, curve);
  return m.is_zero(zero.Z) && gcd(nonzero.Z.value(), m.value()) == 1;
}

}  // namespace

HResidueContext build_context(unsigned long k) {
  const Verdict v = test15(k);
  if (!is_prime(v)) {
    throw PreconditionError("build_context: F_" + std::to_string(k) + " is not proven prime");
  }
  const FkValue fk = fk_exact(k);
  const Modulus mod(fk.F);
  const Residue d0 = std::get<Residue>(derive_sqrt5(mod));
  const auto t0 = sqrt_mod(mod.from_int(-3), mod);
  if (!t0) throw InternalInconsistency("-3 has no square root modulo a prime F_k");

  for (const Residue& d : {d0, mod.neg(d0)}) {
    for (const Residue& t : {*t0, mod.neg(*t0)}) {
      const Residue beta = half(mod, mod.add(d, t));
      const Residue p_k = mod.add(mod.one(), mod.mul_si(mod.pow(beta, k), 2));
      if (mod.is_zero(p_k)) {
        return HResidueContext{k, mod, d, t, beta, mod.sqr(beta), mod.mul(d, t)};
      }
    }
  }
  throw InternalInconsistency("no sign choice of sqrt(5), sqrt(-3) gives 1 + 2 beta^k = 0");
}

std::vector<std::string> context_violations(const HResidueContext& ctx) {
  const Modulus& m = ctx.mod;
  std::vector<std::string> out;
  if (!(m.sqr(ctx.d) == m.from_int(5))) out.emplace_back("d^2 = 5");
  if (!(m.sqr(ctx.t) == m.from_int(-3))) out.emplace_back("t^2 = -3");
  if (!(m.sqr(ctx.u) == m.from_int(-15))) out.emplace_back("u^2 = -15");
  if (!(ctx.u == m.mul(ctx.d, ctx.t))) out.emplace_back("u = d t");
  if (!(ctx.beta == half(m, m.add(ctx.d, ctx.t)))) out.emplace_back("beta = (d + t) / 2");
  if (!(ctx.alpha == m.sqr(ctx.beta))) out.emplace_back("alpha = beta^2");
  if (!(ctx.alpha == half(m, m.add(m.one(), ctx.u)))) out.emplace_back("alpha = (1 + u) / 2");
  if (!m.is_zero(m.add(m.one(), m.mul_si(m.pow(ctx.beta, ctx.k), 2)))) {
    out.emplace_back("1 + 2 beta^k = 0");
  }
  if (!(m.mul(ctx.beta, half(m, m.sub(ctx.d, ctx.t))) == m.from_int(2))) {
    out.emplace_back("beta conj(beta) = 2");
  }
  return out;
}

RingCurve context_curve(const HResidueContext& ctx) { return curve15(ctx.mod, ctx.d); }

XPoint x_double(const XPoint& p, const RingCurve& c) {
  const Modulus& m = c.mod;
  const Residue x2 = m.sqr(p.X);
  const Residue z2 = m.sqr(p.Z);
  const Residue z3 = m.mul(z2, p.Z);
  const Residue a4z2 = m.mul(c.a4, z2);
  XPoint out;
  out.X = m.sub(m.sqr(m.sub(x2, a4z2)), m.mul_si(m.mul(c.a6, m.mul(p.X, z3)), 8));
  const Residue cubic =
      m.add(m.add(m.mul(x2, p.X), m.mul(p.X, a4z2)), m.mul(c.a6, z3));
  out.Z = m.mul_si(m.mul(p.Z, cubic), 4);
  return out;
}

const char* to_string(Conjugation c) { return c == Conjugation::Direct ? "u = d t" : "u = -d t"; }

AlphaMap::AlphaMap(const HResidueContext& ctx, Conjugation conj) : mod_(ctx.mod) {
  const Modulus& m = mod_;
  const Residue& t = ctx.t;
  const Residue& d = ctx.d;
  const Residue u = conj == Conjugation::Direct ? ctx.u : m.neg(ctx.u);
  f_[0] = lin(m, "3260424679620398892", "5199743168890017300", "-1458106243829837028",
              "-2325395838235649676", t, d, u);
  f_[1] = lin(m, "-1639595729268", "-1831800977776", "733249501264", "819206301452", t, d, u);
  f_[2] = lin(m, "257691", "185465", "-119511", "-75313", t, d, u);
  f_[3] = half(m, lin(m, "646275", "-96341", "289023", "-43085", t, d, u));
  f_[4] = lin(m, "299537289", "0", "133957148", "0", t, d, u);
  g_[0] = lin(m, "547023393084", "809830063056", "-244636298480", "-362167014244", t, d, u);
  g_[1] = lin(m, "-337071", "-275233", "140091", "133721", t, d, u);
  g_[2] = half(m, lin(m, "-1938825", "1059751", "-867069", "473935", t, d, u));
  g_[3] = half(m, lin(m, "-2096761023", "669785740", "-937700036", "299537289", t, d, u));
}

std::variant<Residue, PoleAtX> AlphaMap::at(const Residue& x) const {
  const Modulus& m = mod_;
  Residue fx = f_[4];
  for (int i = 3; i >= 0; --i) fx = m.add(m.mul(fx, x), f_[i]);
  Residue gx = g_[3];
  for (int i = 2; i >= 0; --i) gx = m.add(m.mul(gx, x), g_[i]);
  auto inv = m.inverse(gx);
  if (!std::holds_alternative<Residue>(inv)) return PoleAtX{};
  return m.mul(fx, std::get<Residue>(inv));
}

XPoint AlphaMap::apply(const XPoint& p) const {
  const Modulus& m = mod_;
  // Horner in X with powers of Z folded in.
  Residue zp = m.one();
  Residue fx = f_[4];
  for (int i = 3; i >= 0; --i) {
    zp = m.mul(zp, p.Z);
    fx = m.add(m.mul(fx, p.X), m.mul(f_[i], zp));
  }
  zp = m.one();
  Residue gx = g_[3];
  for (int i = 2; i >= 0; --i) {
    zp = m.mul(zp, p.Z);
    gx = m.add(m.mul(gx, p.X), m.mul(g_[i], zp));
  }
  return XPoint{fx, m.mul(gx, p.Z)};
}

std::variant<Residue, PoleAtX> alpha_x(const Residue& x, const HResidueContext& ctx,
                                       Conjugation conj) {
  return AlphaMap(ctx, conj).at(x);
}

bool minimal_polynomial_holds(const AlphaMap& map, const RingCurve& c, const Residue& x) {
  const Modulus& m = c.mod;
  auto affine = [&](const XPoint& p) -> std::optional<Residue> {
    auto inv = m.inverse(p.Z);
    if (!std::holds_alternative<Residue>(inv)) return std::nullopt;
    return m.mul(p.X, std::get<Residue>(inv));
  };
  const XPoint q{x, m.one()};
  const XPoint aq = map.apply(q);
  const auto x1 = affine(aq);
  const auto x2 = affine(double_n(q, 2, c));
  const auto x3 = affine(map.apply(aq));
  if (!x1 || !x2 || !x3 || *x1 == *x2) return false;

  const Residue sum = m.add(*x1, *x2);
  const Residue prod = m.mul(*x1, *x2);
  const Residue diff2 = m.sqr(m.sub(*x1, *x2));
  const Residue b4 = m.mul_si(c.a6, 4);
  const Residue s_num = m.add(m.mul_si(m.mul(m.add(prod, c.a4), sum), 2), b4);
  const Residue p_num = m.sub(m.sqr(m.sub(prod, c.a4)), m.mul(b4, sum));
  const Residue lhs =
      m.add(m.sub(m.mul(diff2, m.sqr(*x3)), m.mul(s_num, *x3)), p_num);
  return m.is_zero(lhs);
}

bool MainTheoremReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.pass; });
}

std::string MainTheoremReport::to_text() const {
  std::ostringstream os;
  os << "# k=" << k << " convention: " << to_string(convention) << "\n";
  for (const auto& c : checks) {
    os << "check k=" << k << " " << c.name << " " << (c.pass ? "PASS" : "FAIL");
    if (!c.detail.empty()) os << " (" << c.detail << ")";
    os << "\n";
  }
  return os.str();
}

Residue torsion_x(const HResidueContext& ctx) {
  const Modulus& m = ctx.mod;
  const Residue inner = lin(m, "844583", "26683", "-377709", "-11933", ctx.t, ctx.d, ctx.u);
  return half(m, m.mul_si(inner, 7));
}

MainTheoremReport verify_mainthm_checks(unsigned long k, unsigned samples) {
  MainTheoremReport report;
  report.k = k;
  auto add = [&](std::string name, bool pass, std::string detail = {}) {
    report.checks.push_back({std::move(name), pass, std::move(detail)});
  };

  const HResidueContext ctx = build_context(k);
  const Modulus& m = ctx.mod;
  const auto broken = context_violations(ctx);
  {
    std::string detail;
    for (const auto& b : broken) detail += (detail.empty() ? "" : ", ") + b;
    add("context-invariants", broken.empty(), detail);
  }
  if (!broken.empty()) return report;

  const Prime proof = std::get<Prime>(test15(k));
  const Certificate& cert = *proof.certificate;
  add("context-d-is-certificate-d", cert.d == ctx.d.value(),
      cert.d == ctx.d.value() ? "" : "prover chain ran on the conjugate curve");

  const RingCurve curve = context_curve(ctx);

  // Exactly one reading of sqrt(-15) in the map must give the module action.
  const bool direct = b_checks_hold(ctx, curve, Conjugation::Direct);
  const bool swapped = b_checks_hold(ctx, curve, Conjugation::Swapped);
  report.convention = direct || !swapped ? Conjugation::Direct : Conjugation::Swapped;
  add("alpha-convention", direct != swapped,
      std::string("direct=") + (direct ? "ok" : "no") + " swapped=" + (swapped ? "ok" : "no"));

  const AlphaMap map(ctx, report.convention);
  {
    std::mt19937_64 rng(k);
    unsigned tried = 0, held = 0;
    gmp_randclass gr(gmp_randinit_default);
    gr.seed(rng());
    while (tried < samples) {
      const Residue x = m.reduce(gr.get_z_range(m.value()));
      const Residue rhs =
          m.add(m.add(m.mul(m.sqr(x), x), m.mul(curve.a4, x)), curve.a6);
      if (jacobi(rhs.value(), m.value()) != 1) continue;
      ++tried;
      if (minimal_polynomial_holds(map, curve, x)) ++held;
    }
    add("alpha-minimal-polynomial", held == tried,
        std::to_string(held) + "/" + std::to_string(tried) + " points");
  }

  const XPoint p{m.zero(), m.one()};
  const XPoint a_k1 = apply_n(map, p, k - 1);
  add("b-4alpha^k-P-zero", m.is_zero(double_n(map.apply(a_k1), 2, curve).Z));
  add("b-8alpha^(k-1)-P-strongly-nonzero",
      gcd(double_n(a_k1, 3, curve).Z.value(), m.value()) == 1);

  const XPoint half_chain = double_n(p, 2 * k + 1, curve);
  const XPoint full_chain = x_double(half_chain, curve);
  add("c-2^(2k+2)P-zero", m.is_zero(full_chain.Z));
  add("c-2^(2k+1)P-strongly-nonzero", gcd(half_chain.Z.value(), m.value()) == 1);

  const Residue zi_x = std::get<Residue>(m.inverse(half_chain.Z));
  const Residue final_x = m.mul(half_chain.X, zi_x);
  {
    const Residue cx = m.mul(m.reduce(cert.final_x),
                             std::get<Residue>(m.inverse(m.reduce(cert.final_z))));
    add("c-matches-prover-chain", cert.d == ctx.d.value() && cx == final_x);
  }

  add("d-torsion-x-stated", strict_torsion_check(cert),
      "x = " + final_x.to_string() + ", +-2643963 d - 5912081 = " +
          m.reduce(BigInt(2643963) * ctx.d.value() - 5912081).to_string() + ", " +
          m.reduce(BigInt(-2643963) * ctx.d.value() - 5912081).to_string());
  add("d-torsion-x-closed-form", final_x == torsion_x(ctx),
      "7 (844583 - 377709 d + 26683 t - 11933 u) / 2");
  return report;
}

BigInt count_points(unsigned long k, unsigned jobs) {
  const HResidueContext ctx = build_context(k);
  if (ctx.mod.value() > kCountPointsBudget) {
    throw PreconditionError("count_points: F_k exceeds the 2^24 budget");
  }
  const RingCurve c = context_curve(ctx);
  const u64 p = ctx.mod.value().get_ui();
  const u64 a4 = c.a4.value().get_ui();
  const u64 a6 = c.a6.value().get_ui();
  jobs = std::max(1U, jobs);
  std::vector<long long> partial(jobs, 0);
  auto shard = [&](unsigned j) {
    long long s = 0;
    for (u64 x = j; x < p; x += jobs) {
      const u64 rhs = static_cast<u64>(((static_cast<u128>(x) * x % p * x) + a4 * x + a6) % p);
      s += jacobi_u64(rhs, p);
    }
    partial[j] = s;
  };
  std::vector<std::thread> workers;
  for (unsigned j = 1; j < jobs; ++j) workers.emplace_back(shard, j);
  shard(0);
  for (auto& w : workers) w.join();
  long long total = 0;
  for (long long s : partial) total += s;
  return BigInt(static_cast<unsigned long>(p + 1)) + BigInt(static_cast<long>(total));
}

std::vector<std::uint64_t> alpha_poles(const AlphaMap& map, const Modulus& mod) {
  if (mod.value() > kCountPointsBudget) {
    throw PreconditionError("alpha_poles: modulus exceeds the 2^24 budget");
  }
  const u64 p = mod.value().get_ui();
  std::array<u64, 4> g{};
  for (int i = 0; i < 4; ++i) g[i] = map.g()[i].value().get_ui();
  std::vector<u64> out;
  for (u64 x = 0; x < p; ++x) {
    u64 v = g[3];
    for (int i = 2; i >= 0; --i) v = static_cast<u64>((static_cast<u128>(v) * x + g[i]) % p);
    if (v == 0) out.push_back(x);
  }
  return out;
}

}  // namespace cmprime
