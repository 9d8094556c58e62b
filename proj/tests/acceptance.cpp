// Acceptance run: one PASS/FAIL line per criterion, all checks exact.

#include <ucz/generators.hpp>
#include <ucz/invariants.hpp>
#include <ucz/kostant.hpp>
#include <ucz/suites.hpp>
#include <ucz/wonderful.hpp>

#include "oracles.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <vector>

using namespace ucz;

namespace {

constexpr std::uint64_t kSeed = 42;
constexpr int kSamples = 100;
const std::vector<std::string> kAll = {"A1", "A2", "A3", "B2", "G2"};
const std::vector<std::string> kTypeA = {"A1", "A2", "A3"};

std::map<std::string, LieAlgebra> algebras;
std::map<std::pair<std::string, std::string>, SuiteResult> cache;

const LieAlgebra& algebra(const std::string& label) {
  auto it = algebras.find(label);
  if (it == algebras.end()) it = algebras.emplace(label, LieAlgebra::build(label)).first;
  return it->second;
}

const SuiteResult& suite(const std::string& label, const std::string& name) {
  const auto key = std::make_pair(label, name);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, run_suite(algebra(label), name, kSeed, kSamples)).first;
  return it->second;
}

// Collects failure reasons for one criterion.
struct Criterion {
  std::vector<std::string> problems;

  void expect(bool ok, const std::string& what) {
    if (!ok) problems.push_back(what);
  }

  // The named check ran, every sample held, and at least `min_total` samples ran.
  void check(const std::string& label, const std::string& name, const std::string& check,
             int min_total = 1) {
    const CheckDetail* d = suite(label, name).find(check);
    const std::string where = label + " " + check;
    if (!d) return expect(false, where + ": missing");
    expect(d->total >= min_total, where + ": only " + std::to_string(d->total) + " samples");
    expect(d->passed == d->total, where + ": " + std::to_string(d->passed) + "/" +
                                      std::to_string(d->total) + (d->failure ? " (" + *d->failure + ")" : ""));
  }

  void value(const std::string& label, const std::string& name, const std::string& check,
             const std::string& expected) {
    const CheckDetail* d = suite(label, name).find(check);
    if (!d) return expect(false, label + " " + check + ": missing");
    expect(d->got == expected, label + " " + check + ": got " + d->got + ", expected " + expected);
  }
};

std::string degrees_of(const std::string& label) {
  const LieAlgebra& L = algebra(label);
  const KostantSlice S = build_slice(L, build_principal_triple(L));
  std::string out = "(";
  for (std::size_t i = 0; i < S.degrees().size(); ++i)
    out += (i ? "," : "") + std::to_string(S.degrees()[i]);
  return out + ")";
}

void c1(Criterion& c) {
  for (const auto& a : kAll) c.check(a, "kostant", "sl2 relations", 3);
}

void c2(Criterion& c) {
  for (const auto& a : kAll) {
    c.check(a, "kostant", "centralizer dimension");
    c.value(a, "kostant", "centralizer dimension", std::to_string(algebra(a).rank()));
    c.check(a, "kostant", "slice degrees");
  }
  const std::map<std::string, std::string> table = {
      {"A2", "(2,3)"}, {"A3", "(2,3,4)"}, {"B2", "(2,4)"}, {"G2", "(2,6)"}};
  for (const auto& [a, expected] : table) {
    const std::string got = degrees_of(a);
    c.expect(got == expected, a + " degrees " + got);
  }
}

void c3(Criterion& c) {
  for (const auto& a : kAll)
    for (const char* check : {"normalization terminates", "normalization lands on the slice",
                              "normalization idempotent", "normalization order independent"})
      c.check(a, "kostant", check, kSamples);
  for (const auto& a : kTypeA) c.check(a, "kostant", "normalization preserves invariants", kSamples);
  c.check("A1", "kostant", "sl2 closed form", kSamples);
}

void c4(Criterion& c) {
  for (const auto& a : kTypeA) {
    c.check(a, "kostant", "slice roundtrip", kSamples);
    c.check(a, "kostant", "slice converse roundtrip", kSamples);
  }
}

void c5(Criterion& c) {
  for (const auto& a : kAll) {
    const int subsets = 1 << algebra(a).rank();
    for (const char* check : {"fiber algebra dimension", "fiber algebra closed under bracket",
                              "stabilizer contains fiber with codimension l - |I|",
                              "orbit dimension matches stabilizer"})
      c.check(a, "wonderful", check, subsets);
  }
}

void c6(Criterion& c) {
  for (const auto& a : kTypeA) {
    c.check(a, "moment", "forward inclusion", kSamples);
    c.check(a, "moment", "split pair converse", kSamples);
    c.check(a, "moment", "invariants ignore the nilradical", kSamples);
  }
}

void c7(Criterion& c) {
  c.check("A2", "moment", "jacobian rank at regular pairs", 50);
  c.check("A2", "moment", "jacobian rank at zero");
}

void c8(Criterion& c) {
  for (const auto& a : kAll)
    for (const char* check : {"bivector inverts omega", "stratum rank", "sigma Casimirs on strata"})
      c.check(a, "logsympl", check);
  c.check("A1", "logsympl", "rank table");
  c.value("A1", "logsympl", "rank table", "{{}:6, {1}:4}");
}

void c9(Criterion& c) {
  for (const auto& a : kAll) {
    const int subsets = 1 << algebra(a).rank();
    c.check(a, "logsympl", "same leaf matches center projection", kSamples * subsets);
    c.check(a, "logsympl", "chart and leaf data coherent", kSamples * subsets);
  }
}

void c10(Criterion& c) {
  for (const auto& a : {"A1", "A2"}) {
    c.check(a, "reduction", "N x N freeness", kSamples);
    c.check(a, "reduction", "level set roundtrip", kSamples);
    c.check(a, "reduction", "reduction is N x N invariant", kSamples);
  }
}

void c11(Criterion& c) {
  {
    const LieAlgebra& L = algebra("A1");
    const auto points = torus_fixed_fiber_points(L, L.h(0), GroupElement::identity(2));
    c.expect(points.size() == 2, "A1: " + std::to_string(points.size()) + " points");
    for (const auto& p : points)
      c.expect(translate_contains(p, L.h(0), L.h(0)), "A1: point misses (xi, xi)");
  }
  {
    const LieAlgebra& L = algebra("A2");
    Mat d = Mat::Zero(3, 3);
    d(0, 0) = 1, d(1, 1) = 2, d(2, 2) = -3;
    const Vec xi = L.from_matrix(d);
    const auto points = torus_fixed_fiber_points(L, xi, GroupElement::identity(3));
    const std::size_t expected = oracle::brute_force_fixed_points(L, d, Mat::Identity(3, 3));
    c.expect(points.size() == expected, "A2: " + std::to_string(points.size()) + " points, oracle " +
                                            std::to_string(expected));
    for (const auto& p : points) c.expect(translate_contains(p, xi, xi), "A2: point misses (xi, xi)");
  }
  c.check("A1", "wonderful", "torus-fixed points");
  c.check("A2", "wonderful", "torus-fixed points");
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<void(Criterion&)>>> criteria = {
      {"sl2 relations", c1},
      {"centralizer dimension and slice degrees", c2},
      {"free action and normalization", c3},
      {"section of the adjoint quotient", c4},
      {"fiber algebras and stabilizers", c5},
      {"moment image", c6},
      {"jacobian rank", c7},
      {"log-symplectic structure", c8},
      {"symplectic leaves", c9},
      {"level-set reduction", c10},
      {"torus-fixed boundary points", c11},
  };
  const auto start = std::chrono::steady_clock::now();
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Criterion c;
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.problems.push_back(std::string("exception: ") + e.what());
    }
    const bool ok = c.problems.empty();
    failed += !ok;
    std::printf("[%s] %2zu %s\n", ok ? "PASS" : "FAIL", i + 1, criteria[i].first);
    for (const auto& p : c.problems) std::printf("       %s\n", p.c_str());
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%zu/%zu criteria passed in %.1f s (seed %llu, %d samples)\n", criteria.size() - failed,
              criteria.size(), seconds, static_cast<unsigned long long>(kSeed), kSamples);
  return failed == 0 ? 0 : 1;
}
