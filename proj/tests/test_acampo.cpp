#include "support.hpp"

#include "e8/acampo.hpp"
#include "e8/catalog.hpp"
#include "e8/oracle.hpp"
#include "e8/reconstruct.hpp"

#include <doctest.h>

using namespace e8;

namespace {

const BinomialProduct kCollision =
    parse_product("(1-t^4)^-1 (1-t^6)^-1 (1-t^9)^-1 (1-t^12) (1-t^18)");

// The graph with the arrows of one branch removed and later branches shifted down.
DualGraph without_branch(const DualGraph& g, int branch) {
  DualGraph h;
  for (const auto& v : g.vertices()) h.add_vertex(v.id, v.self_intersection, v.base);
  for (auto [a, b] : g.edges()) h.add_edge(a, b);
  for (const auto& a : g.arrows())
    if (a.branch != branch) h.add_arrow(a.branch > branch ? a.branch - 1 : a.branch, a.at);
  return h;
}

DualGraph with_marks(const DualGraph& g, const std::vector<std::size_t>& keep) {
  DualGraph h;
  for (const auto& v : g.vertices()) h.add_vertex(v.id, v.self_intersection, v.base);
  for (auto [a, b] : g.edges()) h.add_edge(a, b);
  for (std::size_t k : keep) h.add_mark(g.marks()[k]);
  return h;
}

}  // namespace

TEST_CASE("curve series of known graphs") {
  CHECK(poincare_curve(curvette_graph(6)) == kCollision);
  CHECK(poincare_curve(a4_over_d8_graph()) == kCollision);
  CHECK(poincare_curve(curvette_graph(4)) == parse_product("(1-t^3)^-1 (1-t^5)^-1 (1-t^15)"));
  CHECK(poincare_curve(curvettes_1_and_4()) == parse_product("(1-t^(2,3))^-1 (1-t^(10,15))"));
  CHECK_THROWS_AS(poincare_curve(e8_minimal_graph()), GraphError);
}

TEST_CASE("divisorial series of known graphs") {
  CHECK(poincare_divisorial(free_chain_divisor(6, 0)) ==
        parse_product("(1-t^4)^-1 (1-t^6)^-1 (1-t^9)^-1 (1-t^18)"));
  const auto chain = parse_product("(1-t^4)^-1 (1-t^6)^-1 (1-t^9)^-1 (1-t^12) (1-t^18) (1-t^19)^-1");
  CHECK(poincare_divisorial(free_chain_divisor(6, 7)) == chain);
  CHECK(poincare_divisorial(a4_over_d8_divisor()) == chain);
  CHECK_THROWS(poincare_divisorial(e8_minimal_graph()));

  DualGraph two = e8_minimal_graph();
  two.add_mark(two.index_of("1"));
  two.add_mark(two.index_of("4"));
  const auto p = poincare_divisorial(two);
  CHECK(p.variables() == 2);
  const auto m = e8_multiplicities();
  for (const auto& [n, s] : p.factors()) {
    bool found = false;
    for (int v = 0; v < 8; ++v) found = found || (n[0] == m[v][0] && n[1] == m[v][3]);
    CHECK(found);
  }
  CHECK(project(p, {0}) == poincare_divisorial(free_chain_divisor(1, 0)));
  CHECK(project(p, {1}) == poincare_divisorial(free_chain_divisor(4, 0)));
}

TEST_CASE("curvette series is D(t) times one binomial") {
  Rng rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const BasePoint b = random_sigma0(rng);
    const DualGraph g = build({ElementKind::curve, {{b, {}}}, {}}).graph;
    const auto d = sigma0_data(b);
    BinomialProduct expected = d_series(d, 1);
    expected.multiply({d.self}, 1);
    CHECK(poincare_curve(g) == expected);
  }
}

TEST_CASE("one-branch series times (1 - t) is a polynomial") {
  Rng rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const DualGraph g = random_graph(rng, {8, 1, ElementKind::curve, false}, trial % 9, 1);
    BinomialProduct p = poincare_curve(g);
    p.multiply({1}, 1);
    Integer degree = 0;
    for (const auto& [m, s] : p.factors())
      if (s > 0) degree += s * m[0];
    const long n = static_cast<long>(degree) + 40;
    const auto s = expand(p, n);
    for (long k = static_cast<long>(degree) + 1; k <= n; ++k) CHECK(s.coefficient({k}) == 0);
  }
}

TEST_CASE("projection formula for divisors") {
  Rng rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const DualGraph g = random_graph(rng, {7, 3, ElementKind::divisor, true}, trial % 8, 2);
    const auto p = poincare_divisorial(g);
    const std::size_t r = g.marks().size();
    for (std::size_t i = 0; i < r; ++i) {
      CHECK(project(p, {i}) == poincare_divisorial(with_marks(g, {i})));
      for (std::size_t j = i + 1; j < r; ++j)
        CHECK(project(p, {i, j}) == poincare_divisorial(with_marks(g, {i, j})));
    }
  }
}

TEST_CASE("deleting a branch") {
  Rng rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const DualGraph g = random_graph(rng, {7, 3, ElementKind::curve, true}, trial % 8, 2);
    const auto p = poincare_curve(g);
    const auto m = multiplicity_matrix(g);
    const int r = static_cast<int>(g.branches().size());
    for (int i = 1; i <= r; ++i) {
      VertexIndex arrow = 0;
      for (const auto& a : g.arrows())
        if (a.branch == i) arrow = a.at;
      std::vector<std::size_t> keep;
      ExponentVector extra;
      for (int k = 1; k <= r; ++k)
        if (k != i) {
          keep.push_back(static_cast<std::size_t>(k - 1));
          VertexIndex other = 0;
          for (const auto& a : g.arrows())
            if (a.branch == k) other = a.at;
          extra.push_back(m(arrow, other));
        }
      BinomialProduct rhs = poincare_curve(without_branch(g, i));
      rhs.multiply(extra, 1);
      const auto lhs = project(p, keep);
      CHECK(lhs == rhs);
      CHECK(expand(lhs, 24) == expand(rhs, 24));
    }
  }
}
