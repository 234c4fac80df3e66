// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include "e8/acampo.hpp"
#include "e8/catalog.hpp"
#include "e8/oracle.hpp"
#include "e8/reconstruct.hpp"

#include "invariants.hpp"

#include <chrono>
#include <cstdio>
#include <set>
#include <sstream>
#include <string>

using namespace e8;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

// Every graph produced below, for the Mumford check.
std::vector<DualGraph> generated;
// Every one-branch curve series produced below.
std::vector<BinomialProduct> one_branch;
// Multi-branch curve graphs, for the ratio check.
std::vector<DualGraph> multi_branch;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void report(int n, bool ok, const std::string& detail) {
  std::printf("criterion %2d: %s  %s\n", n, ok ? "PASS" : "FAIL", detail.c_str());
  std::fflush(stdout);
  failures += !ok;
}

bool round_trip(const DualGraph& g, ElementKind kind) {
  try {
    const bool curve = kind == ElementKind::curve;
    const auto p = curve ? poincare_curve(g) : poincare_divisorial(g);
    DualGraph h;
    if (p.variables() == 1)
      h = curve ? reconstruct_curve(p) : reconstruct_divisor(p);
    else
      h = curve ? reconstruct_curve_collection(p) : reconstruct_divisor_collection(p);
    return canonically_isomorphic(g, h);
  } catch (const std::exception&) {
    return false;
  }
}

void e8_matrix() {
  const long expected[8][8] = {{4, 7, 10, 5, 8, 6, 4, 2},      {7, 14, 20, 10, 16, 12, 8, 4},
                               {10, 20, 30, 15, 24, 18, 12, 6}, {5, 10, 15, 8, 12, 9, 6, 3},
                               {8, 16, 24, 12, 20, 15, 10, 5},  {6, 12, 18, 9, 15, 12, 8, 4},
                               {4, 8, 12, 6, 10, 8, 6, 3},      {2, 4, 6, 3, 5, 4, 3, 2}};
  const DualGraph g = e8_minimal_graph();
  const auto start = Clock::now();
  const auto m = multiplicity_matrix(g);
  const double elapsed = seconds_since(start);
  bool ok = m.size() == 8;
  for (int i = 0; i < 8 && ok; ++i)
    for (int j = 0; j < 8; ++j)
      ok = ok && m(g.index_of(std::to_string(i + 1)), g.index_of(std::to_string(j + 1))) ==
                     expected[i][j];
  std::ostringstream d;
  d << "64 entries exact, " << elapsed * 1e3 << " ms";
  report(1, ok && elapsed < 1e-3, d.str());
}

void example_curves() {
  const auto expected = parse_product("(1-t^4)^-1 (1-t^6)^-1 (1-t^9)^-1 (1-t^12) (1-t^18)");
  const DualGraph a = curvette_graph(6), b = a4_over_d8_graph();
  const auto pa = poincare_curve(a), pb = poincare_curve(b);
  const bool iso = canonically_isomorphic(a, b);
  report(2, pa == expected && pb == expected && !iso,
         to_string(pa) + " for both, graphs " + (iso ? "isomorphic" : "non-isomorphic"));
}

void example_divisors() {
  const auto expected =
      parse_product("(1-t^4)^-1 (1-t^6)^-1 (1-t^9)^-1 (1-t^12) (1-t^18) (1-t^19)^-1");
  const auto pa = poincare_divisorial(free_chain_divisor(6, 7));
  const auto pb = poincare_divisorial(a4_over_d8_divisor());
  report(3, pa == expected && pb == expected, to_string(pa) + " for both");
}

void two_curvettes() {
  const auto expected = parse_product("(1-t^(2,3))^-1 (1-t^(10,15))");
  const DualGraph g = curvettes_1_and_4();
  const auto p = poincare_curve(g);
  bool inverted = false;
  try {
    inverted = canonically_isomorphic(reconstruct_curve_collection(p), g);
  } catch (const ReconstructionError&) {
  }
  report(4, p == expected && inverted,
         to_string(p) + (inverted ? ", inverted" : ", not inverted"));
}

void factorization() {
  Rng rng(2024);
  std::uniform_int_distribution<int> vars(1, 3), count(1, 6), exponent(0, 20), power(-3, 3);
  const long n = 60;
  const auto start = Clock::now();
  int passed = 0;
  const int total = 500;
  for (int trial = 0; trial < total; ++trial) {
    const std::size_t r = static_cast<std::size_t>(vars(rng));
    BinomialProduct p(r);
    for (int f = count(rng); f > 0; --f) {
      ExponentVector m(r);
      do {
        for (auto& x : m) x = exponent(rng);
      } while (total_degree(m) == 0);
      int s = 0;
      while (s == 0) s = power(rng);
      p.multiply(m, s);
    }
    passed += factorize(expand(p, n)) == p;
  }
  const double elapsed = seconds_since(start);
  std::ostringstream d;
  d << passed << "/" << total << " at N = " << n << ", " << elapsed << " s";
  report(5, passed == total && elapsed < 30, d.str());
}

void single_curves() {
  Rng rng(101);
  const int total = 250;
  int passed = 0, inserted = 0;
  std::size_t max_g = 0;
  std::set<int> cases, bases;
  const auto start = Clock::now();
  for (int trial = 0; trial < total; ++trial) {
    const int c = 1 + trial % 5;
    const auto spec = random_single_spec(rng, c, false);
    const DualGraph g = build(single_configuration(spec, ElementKind::curve)).graph;
    generated.push_back(g);
    one_branch.push_back(poincare_curve(g));
    const bool ok = round_trip(g, ElementKind::curve);
    passed += ok;
    if (ok) cases.insert(c);
    if (spec.sigma0.insertion)
      ++inserted;
    else
      bases.insert(spec.sigma0.vertex);
    max_g = std::max(max_g, spec.gens.g());
  }
  const double elapsed = seconds_since(start);
  std::ostringstream d;
  d << passed << "/" << total << ", cases " << cases.size() << "/5, base vertices "
    << bases.size() << "/7, " << inserted << " on inserted vertices, g <= " << max_g << ", "
    << elapsed << " s";
  report(6,
         passed == total && cases.size() == 5 && bases.size() == 7 && inserted > 0 && max_g <= 2 &&
             elapsed < 60,
         d.str());
}

void single_divisors() {
  Rng rng(202);
  const int total = 250;
  int passed = 0;
  std::set<Integer> tails;
  for (int trial = 0; trial < total; ++trial) {
    const auto spec = random_single_spec(rng, 1 + trial % 5, true);
    const DualGraph g = build(single_configuration(spec, ElementKind::divisor)).graph;
    generated.push_back(g);
    passed += round_trip(g, ElementKind::divisor);
    tails.insert(spec.tail);
  }
  const bool all_tails = tails.size() == 8 && *tails.begin() == 0 && *tails.rbegin() == 7;
  std::ostringstream d;
  d << passed << "/" << total << ", tail lengths 0..7 " << (all_tails ? "all" : "not all")
    << " present";
  report(7, passed == total && all_tails, d.str());
}

void collections(int criterion, ElementKind kind, std::vector<int> sizes, int per_size) {
  Rng rng(criterion * 1000 + 7);
  int passed = 0, total = 0;
  for (int r : sizes)
    for (int trial = 0; trial < per_size; ++trial) {
      const DualGraph g = random_graph(rng, {12, r, kind, true}, trial % 13, r);
      generated.push_back(g);
      if (kind == ElementKind::curve) multi_branch.push_back(g);
      passed += round_trip(g, kind);
      ++total;
    }
  std::ostringstream d;
  d << passed << "/" << total << " with r in {";
  for (std::size_t k = 0; k < sizes.size(); ++k) d << (k ? "," : "") << sizes[k];
  d << "}";
  report(criterion, passed == total && total >= 100, d.str());
}

void ratios() {
  for (const DualGraph& g : oracle_enumerate({2, 3, ElementKind::curve, true})) {
    generated.push_back(g);
    if (g.branches().size() > 1) multi_branch.push_back(g);
  }
  std::size_t geodesics = 0;
  std::size_t bad = 0;
  for (const DualGraph& g : multi_branch)
    bad += !testing::q_monotone(g, &geodesics);
  std::ostringstream d;
  d << multi_branch.size() << " graphs, " << geodesics << " geodesics, " << bad << " violations";
  report(10, bad == 0 && geodesics >= 500, d.str());
}

void mumford() {
  std::size_t bad = 0, vertices = 0;
  for (const DualGraph& g : generated) {
    bad += !testing::mumford_residual_zero(g);
    vertices += g.size();
  }
  std::ostringstream d;
  d << generated.size() << " graphs, " << vertices << " vertices, " << bad << " nonzero";
  report(11, bad == 0 && !generated.empty(), d.str());
}

void alexander_shape() {
  std::size_t bad = 0;
  for (BinomialProduct p : one_branch) {
    p.multiply(1, 1);
    Integer degree = 0;
    for (const auto& [m, s] : p.factors()) degree += s * m[0];
    if (degree < 0) {
      ++bad;
      continue;
    }
    const long top = static_cast<long>(degree);
    const long n = top + 50;
    const auto s = expand(p, n);
    for (long k = top + 1; k <= n; ++k)
      if (s.coefficient({k}) != 0) {
        ++bad;
        break;
      }
  }
  std::ostringstream d;
  d << one_branch.size() << " series, " << bad << " not polynomial";
  report(12, bad == 0 && !one_branch.empty(), d.str());
}

}  // namespace

int main() {
  const auto start = Clock::now();
  e8_matrix();
  example_curves();
  example_divisors();
  two_curvettes();
  factorization();
  single_curves();
  single_divisors();
  collections(8, ElementKind::divisor, {2, 3}, 60);
  collections(9, ElementKind::curve, {2, 3, 4}, 40);
  ratios();
  mumford();
  alexander_shape();
  std::printf("total %.1f s, %d failed\n", seconds_since(start), failures);
  return failures == 0 ? 0 : 1;
}
