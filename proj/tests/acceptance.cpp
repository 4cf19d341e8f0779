// Acceptance gate: ten end-to-end criteria with pinned budgets.  Each
// criterion prints exactly one PASS/FAIL line; the binary exits nonzero if
// any criterion fails its check or its time budget.

#include "dpb/classify.hpp"
#include "dpb/exprio.hpp"

#include "test_support.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

using namespace dpb;
using testsupport::random_tpoly;
using testsupport::random_antisym;

namespace {

int g_failures = 0;

void criterion(int number, const char* description, double budget_seconds,
               const std::function<bool()>& body) {
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = body();
    } catch (const std::exception& e) {
        std::fprintf(stderr, "criterion %d threw: %s\n", number, e.what());
        ok = false;
    }
    double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                         .count();
    bool in_budget = elapsed <= budget_seconds;
    if (!(ok && in_budget)) ++g_failures;
    std::printf("[%s] criterion %2d (%6.2fs / budget %gs): %s\n",
                ok && in_budget ? "PASS" : "FAIL", number, elapsed, budget_seconds,
                description);
    std::fflush(stdout);
}

const AlgebraSig kZ1{CoeffRing::integers(), 1};
const AlgebraSig kZ2{CoeffRing::integers(), 2};
const AlgebraSig kZ3{CoeffRing::integers(), 3};

std::vector<TensorPoly> gens(const AlgebraSig& sig, std::initializer_list<int> idx) {
    std::vector<TensorPoly> out;
    for (int i : idx) out.push_back(TensorPoly::generator(sig, i));
    return out;
}

}  // namespace

int main() {
    criterion(1, "canonical tri-derivation has the eight-term expansion", 1.0, [] {
        TensorPoly phi3 = universal_mder(kZ3, gens(kZ3, {1, 2, 3}));
        TensorPoly expected = parse_tpoly(
            "t1*t3#t2#1 - t1*t3#1#t2 - t1#t2#t3 + t1#1#t2*t3"
            " - t3#t1*t2#1 + t3#t1#t2 + 1#t1*t2#t3 - 1#t1#t2*t3",
            kZ3, 3);
        return phi3 == expected;
    });

    criterion(2, "standardize inverts tabulation for 200 random elements", 30.0, [] {
        std::mt19937_64 rng(1001);
        for (int step = 0; step < 200; ++step) {
            int n = 2 + step % 2;
            TensorPoly theta = random_tpoly(rng, kZ2, n, 6, 6, 9);
            GenTable table = standard_mder_table(theta);
            if (!check_multiderivation(table).passed) return false;
            StandardizeResult r = standardize(table);
            if (r.status != StandardizeStatus::Standard) return false;
            if (*r.theta != theta) return false;
        }
        return true;
    });

    criterion(3, "three-parameter family: Poisson iff lambda*nu = mu^2, over Z and Q",
              10.0, [] {
                  for (const CoeffRing& ring :
                       {CoeffRing::integers(), CoeffRing::rationals()}) {
                      for (long la = -2; la <= 2; ++la)
                          for (long mu = -2; mu <= 2; ++mu)
                              for (long nu = -2; nu <= 2; ++nu) {
                                  // rt_is_poisson cross-checks the closed form
                                  // against the full decision procedure and
                                  // throws if they ever disagree.
                                  bool verdict =
                                      rt_is_poisson(make_rt_family(ring, la, mu, nu));
                                  if (verdict != (la * nu == mu * mu)) return false;
                              }
                  }
                  return true;
              });

    criterion(4, "homogeneous scan to degree 7: Poisson singles are exactly (1,0), (3,1)",
              60.0, [] {
                  auto entries = rt_homogeneous_scan(7, CoeffRing::rationals());
                  std::set<std::pair<int, int>> poisson_singles;
                  for (const auto& e : entries) {
                      if (e.splits.size() == 1 && e.poisson)
                          poisson_singles.insert({e.degree, e.splits[0]});
                      if (e.splits.size() == 2 && e.poisson) return false;
                  }
                  return poisson_singles ==
                         std::set<std::pair<int, int>>{{1, 0}, {3, 1}};
              });

    criterion(5,
              "kernel scans stay empty: exhaustive (728 candidates) and 10^4 seeded samples",
              300.0, [] {
                  ScanParams p1;  // 2 generators, degree 2, height 1, Z
                  ScanReport r1 = kernel_scan(p1);
                  if (!(r1.exhaustive && r1.num_checked == 728 &&
                        r1.num_square_ok == 728 && r1.kernel_elements.empty() &&
                        r1.square_check_failures.empty()))
                      return false;
                  ScanParams p2;
                  p2.max_degree = 3;
                  p2.mode = ScanMode::Sample;
                  p2.num_samples = 10000;
                  p2.seed = 20260814;
                  ScanReport r2 = kernel_scan(p2);
                  return !r2.exhaustive && r2.num_checked == 10000 &&
                         r2.num_square_ok == 10000 && r2.kernel_elements.empty() &&
                         r2.square_check_failures.empty();
              });

    criterion(6, "Jacobiator of a standard bracket = standard bracket of J(psi), 100 trials",
              60.0, [] {
                  std::mt19937_64 rng(1006);
                  for (int step = 0; step < 100; ++step) {
                      TensorPoly psi = random_antisym(rng, kZ2, 4, 4, 9);
                      if (jacobiator_table(standard_mder_table(psi)) !=
                          standard_mder_table(standard_jacobiator(psi)))
                          return false;
                  }
                  return true;
              });

    criterion(7, "standard brackets induce the zero bracket: 100 x 20 evaluations", 30.0,
              [] {
                  std::mt19937_64 rng(1007);
                  for (int step = 0; step < 100; ++step) {
                      TensorPoly theta = random_tpoly(rng, kZ2, 2, 4, 5, 9);
                      GenTable table = standard_mder_table(theta);
                      for (int pair = 0; pair < 20; ++pair) {
                          TensorPoly a = random_tpoly(rng, kZ2, 1, 2, 3, 9);
                          TensorPoly b = random_tpoly(rng, kZ2, 1, 2, 3, 9);
                          if (!induced_bracket(table, a, b).is_zero()) return false;
                      }
                  }
                  return true;
              });

    criterion(8, "t (x) 1 - 1 (x) t on R[t] is exotic yet double Poisson", 1.0, [] {
        GenTable table(kZ1, 2);
        table.set({1, 1}, parse_tpoly("t1#1 - 1#t1", kZ1, 2));
        if (standardize(table).status != StandardizeStatus::Exotic) return false;
        return check_double_poisson(table).is_double_poisson;
    });

    criterion(9, "extreme homogeneous layers of Poisson family members stay Poisson",
              10.0, [] {
                  for (long la = -2; la <= 2; ++la)
                      for (long mu = -2; mu <= 2; ++mu)
                          for (long nu = -2; nu <= 2; ++nu) {
                              if (la * nu != mu * mu) continue;
                              GenTable t = rt_family_table(
                                  make_rt_family(CoeffRing::integers(), la, mu, nu));
                              if (!check_double_poisson(min_homogeneous_component(t))
                                       .is_double_poisson)
                                  return false;
                              if (!check_double_poisson(max_homogeneous_component(t))
                                       .is_double_poisson)
                                  return false;
                          }
                  return true;
              });

    criterion(10, "10^5 fuzzed parses never crash; 10^3 canonical round-trips are exact",
              60.0, [] {
                  std::mt19937_64 rng(1010);
                  const char alphabet[] = "t0123456789#*^+- /m();=\n";
                  const std::vector<AlgebraSig> sigs{
                      kZ1, kZ2, {CoeffRing::rationals(), 2},
                      {CoeffRing::integers_mod(4), 2}};
                  for (int step = 0; step < 100000; ++step) {
                      std::string s;
                      std::size_t len = rng() % 24;
                      for (std::size_t i = 0; i < len; ++i)
                          s += alphabet[rng() % (sizeof(alphabet) - 1)];
                      const AlgebraSig& sig = sigs[rng() % sigs.size()];
                      try {
                          TensorPoly p = parse_tpoly(s, sig, 1 + (int)(rng() % 3));
                          (void)p;
                      } catch (const ParseError&) {
                          // rejected inputs must fail with a diagnostic, not crash
                      }
                  }
                  for (int step = 0; step < 1000; ++step) {
                      const AlgebraSig& sig = sigs[rng() % sigs.size()];
                      int arity = 1 + (int)(rng() % 3);
                      TensorPoly p = random_tpoly(rng, sig, arity, 5, 5, 9);
                      std::string text = p.str();
                      TensorPoly q = parse_tpoly(text, sig, arity);
                      if (q != p || q.str() != text) return false;
                  }
                  return true;
              });

    if (g_failures == 0) {
        std::printf("acceptance: all 10 criteria passed\n");
        return 0;
    }
    std::printf("acceptance: %d of 10 criteria FAILED\n", g_failures);
    return 1;
}
