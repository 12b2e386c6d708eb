#include "cmprime/certificate.hpp"

#include <json.hpp>

#include <regex>
#include <set>

#include "cmprime/prover15.hpp"
#include "cmprime/sequence.hpp"

namespace cmprime {
namespace {

using nlohmann::json;

const std::set<std::string> kKeys{"format", "k", "F", "d", "a4", "a6", "Py",
                                  "doublings", "final_x", "final_z"};

BigInt decimal_field(const json& j, const char* key) {
  const json& v = j.at(key);
  if (!v.is_string()) throw CertificateFormatError(std::string(key) + ": expected a string");
  const auto& s = v.get_ref<const std::string&>();
  static const std::regex digits("0|[1-9][0-9]*");
  if (!std::regex_match(s, digits)) {
    throw CertificateFormatError(std::string(key) + ": not a nonnegative decimal");
  }
  return BigInt(s);
}

std::uint64_t count_field(const json& j, const char* key) {
  const json& v = j.at(key);
  if (!v.is_number_unsigned()) {
    throw CertificateFormatError(std::string(key) + ": expected a nonnegative integer");
  }
  return v.get<std::uint64_t>();
}

}  // namespace

std::string to_json(const Certificate& c) {
  json j;
  j["format"] = kCertificateFormat;
  j["k"] = c.k;
  j["F"] = c.F.get_str();
  j["d"] = c.d.get_str();
  j["a4"] = c.a4.get_str();
  j["a6"] = c.a6.get_str();
  j["Py"] = c.Py.get_str();
  j["doublings"] = c.doublings;
  j["final_x"] = c.final_x.get_str();
  j["final_z"] = c.final_z.get_str();
  return j.dump(2) + "\n";
}

Certificate certificate_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw CertificateFormatError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw CertificateFormatError("expected a JSON object");
  for (const auto& [key, _] : j.items()) {
    if (!kKeys.count(key)) throw CertificateFormatError("unexpected key: " + key);
  }
  for (const auto& key : kKeys) {
    if (!j.contains(key)) throw CertificateFormatError("missing key: " + key);
  }
  if (!j["format"].is_string() || j["format"] != kCertificateFormat) {
    throw CertificateFormatError("unsupported format tag");
  }
  Certificate c;
  const std::uint64_t k = count_field(j, "k");
  if (k > 100'000'000) throw CertificateFormatError("k out of range");
  c.k = static_cast<unsigned long>(k);
  c.F = decimal_field(j, "F");
  c.d = decimal_field(j, "d");
  c.a4 = decimal_field(j, "a4");
  c.a6 = decimal_field(j, "a6");
  c.Py = decimal_field(j, "Py");
  c.doublings = count_field(j, "doublings");
  c.final_x = decimal_field(j, "final_x");
  c.final_z = decimal_field(j, "final_z");
  return c;
}

CertificateReport verify_certificate(const Certificate& c, MulKernel kernel) {
  CertificateReport report;
  auto fail = [&](const char* what) {
    report.ok = false;
    report.failures.emplace_back(what);
  };

  if (!in_set(c.k, IndexSet::S)) fail("k-in-S");
  if (c.F != fk_exact(c.k).F) {
    fail("F-equals-F_k");
    return report;  // nothing else is meaningful modulo the wrong number
  }
  if (c.doublings != 2 * static_cast<std::uint64_t>(c.k) + 1) fail("doublings");

  const Modulus mod(c.F, kernel);
  for (const BigInt* v : {&c.d, &c.a4, &c.a6, &c.Py, &c.final_x, &c.final_z}) {
    if (sgn(*v) < 0 || *v >= c.F) {
      fail("residues-reduced");
      return report;
    }
  }
  const Residue d = mod.reduce(c.d);
  if (!(mod.sqr(d) == mod.from_int(5))) fail("d-squared-is-5");

  const RingCurve curve = curve15(mod, d);
  const RingPoint p = point15(mod, d);
  if (!(curve.a4.value() == c.a4)) fail("a4");
  if (!(curve.a6.value() == c.a6)) fail("a6");
  if (!(p.y.value() == c.Py)) fail("Py");
  if (discriminant_gcd(curve) != 1) fail("discriminant-unit");

  const RingCurve stated{mod, mod.reduce(c.a4), mod.reduce(c.a6)};
  const RingPoint start = affine_point(mod, 0, c.Py);
  if (!is_on_curve(start, stated)) fail("P-on-curve");

  if (gcd(c.final_z, c.F) != 1) fail("final-z-unit");

  auto chained = double_chain(start, c.doublings, stated);
  if (std::holds_alternative<Degenerate>(chained)) {
    fail("chain-degenerate");
    return report;
  }
  const RingPoint& q = std::get<RingPoint>(chained);
  if (!mod.is_zero(q.y)) fail("final-y-zero");
  if (gcd(q.z.value(), c.F) != 1) fail("recomputed-z-unit");
  const Residue fx = mod.reduce(c.final_x), fz = mod.reduce(c.final_z);
  if (!(mod.mul(fx, q.z) == mod.mul(q.x, fz)) || mod.is_zero(fz)) fail("final-point-matches");
  return report;
}

bool strict_torsion_check(const Certificate& c) {
  const Modulus mod(c.F);
  auto zi = mod.inverse(mod.reduce(c.final_z));
  if (!std::holds_alternative<Residue>(zi)) return false;
  const Residue x = mod.mul(mod.reduce(c.final_x), std::get<Residue>(zi));
  const BigInt lin = BigInt(2643963) * c.d;
  return x == mod.reduce(lin - 5912081) || x == mod.reduce(-lin - 5912081);
}

}  // namespace cmprime
