#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cmprime_cli/cli.hpp"

using cmprime::cli::run;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result call(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("cmprime_cli_test_" + name);
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p);
  std::stringstream s;
  s << f.rdbuf();
  return s.str();
}

}  // namespace

TEST(Cli, Test15Prime) {
  const Result r = call({"test15", "--k", "9"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "F_9 is prime\n");
}

TEST(Cli, Test15Composite) {
  const Result r = call({"test15", "--k", "19"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out, "F_19 is composite: step1-non-residue\n");
}

TEST(Cli, Test15OutsideS) { EXPECT_EQ(call({"test15", "--k", "27"}).code, 2); }

TEST(Cli, CertificateRoundTrip) {
  const auto path = temp_path("c123.json");
  ASSERT_EQ(call({"test15", "--k", "123", "--cert", path.string()}).code, 0);
  const Result v = call({"verify", "--cert", path.string()});
  EXPECT_EQ(v.code, 0);
  EXPECT_EQ(v.out, "certificate valid: F_123 is prime\n");

  const Result strict = call({"verify", "--cert", path.string(), "--strict-torsion"});
  EXPECT_EQ(strict.code, 0);
  EXPECT_NE(strict.out.find("strict torsion: FAIL"), std::string::npos);

  std::string text = slurp(path);
  text.replace(text.find("\"doublings\": 247"), 16, "\"doublings\": 246");
  const auto bad = temp_path("c123_bad.json");
  std::ofstream(bad) << text;
  const Result t = call({"verify", "--cert", bad.string()});
  EXPECT_EQ(t.code, 1);
  EXPECT_NE(t.out.find("final-y-zero"), std::string::npos);

  std::ofstream(bad) << "{ \"format\": \"cm15-cert-v1\" }";
  EXPECT_EQ(call({"verify", "--cert", bad.string()}).code, 2);
  EXPECT_EQ(call({"verify", "--cert", temp_path("missing.json").string()}).code, 2);
  std::filesystem::remove(path);
  std::filesystem::remove(bad);
}

TEST(Cli, Test2) {
  EXPECT_EQ(call({"test2", "--k", "8"}).code, 2);
  const Result nine = call({"test2", "--k", "9"});
  EXPECT_EQ(nine.code, 1);
  EXPECT_NE(nine.out.find("factor 11"), std::string::npos);
  EXPECT_EQ(call({"test2", "--k", "17"}).code, 0);
  EXPECT_EQ(call({"test2", "--k", "25"}).code, 1);
}

TEST(Cli, SieveOutput) {
  const Result r = call({"sieve", "--kmax", "240", "--bound", "61", "--log"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("k=9\n", 0), 0u);
  EXPECT_NE(r.out.find("elim k=181 p=61\n"), std::string::npos);

  const auto path = temp_path("sieve.txt");
  EXPECT_EQ(call({"sieve", "--kmax", "240", "--bound", "61", "--out", path.string()}).code, 0);
  const std::string text = slurp(path);
  EXPECT_EQ(text.find("elim"), std::string::npos);
  EXPECT_EQ(text.rfind("k=9\n", 0), 0u);
  std::filesystem::remove(path);
}

TEST(Cli, SearchFindsTheKnownPrimes) {
  const Result r = call({"search", "--kmax", "600", "--bound", "100000"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "F_9 is prime\nF_123 is prime\n");
  const Result j = call({"search", "--kmax", "600", "--bound", "100000", "--jobs", "3"});
  EXPECT_EQ(j.out, r.out);
}

TEST(Cli, SearchWritesCertificates) {
  const auto dir = temp_path("certs");
  std::filesystem::remove_all(dir);
  ASSERT_EQ(call({"search", "--kmax", "130", "--bound", "1000", "--certdir", dir.string()}).code, 0);
  EXPECT_TRUE(std::filesystem::exists(dir / "F_9.json"));
  EXPECT_EQ(call({"verify", "--cert", (dir / "F_123.json").string()}).code, 0);
  std::filesystem::remove_all(dir);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(call({}).code, 2);
  EXPECT_EQ(call({"frobnicate"}).code, 2);
  EXPECT_EQ(call({"test15"}).code, 2);
  EXPECT_EQ(call({"test15", "--k", "nine"}).code, 2);
  EXPECT_EQ(call({"test15", "--k", "9", "--kernel", "fft"}).code, 2);
  EXPECT_EQ(call({"sieve", "--kmax", "5", "--bound", "100"}).code, 2);
  EXPECT_EQ(call({"--help"}).code, 0);
}

TEST(Cli, CheckTheoremsFailsOnlyOnTheStatedTorsionIdentity) {
  const Result r = call({"check-theorems", "--k", "9"});
  EXPECT_EQ(r.code, 1);
  std::istringstream lines(r.out);
  std::string line;
  int fails = 0;
  while (std::getline(lines, line)) {
    if (line.find(" FAIL") == std::string::npos) continue;
    ++fails;
    EXPECT_EQ(line.rfind("check k=9 d-torsion-x-stated FAIL", 0), 0u) << line;
  }
  EXPECT_EQ(fails, 1);
  EXPECT_NE(r.out.find("check k=9 point-count PASS (4194304)"), std::string::npos);
  EXPECT_NE(r.out.find("check set-identity PASS"), std::string::npos);
}
