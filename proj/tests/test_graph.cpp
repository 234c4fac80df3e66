#include "support.hpp"

#include "e8/oracle.hpp"

#include <doctest.h>

#include <algorithm>

using namespace e8;
using e8::testing::Rational;

namespace {

const std::vector<std::vector<long>> kE8{
    {4, 7, 10, 5, 8, 6, 4, 2},       {7, 14, 20, 10, 16, 12, 8, 4},
    {10, 20, 30, 15, 24, 18, 12, 6}, {5, 10, 15, 8, 12, 9, 6, 3},
    {8, 16, 24, 12, 20, 15, 10, 5},  {6, 12, 18, 9, 15, 12, 8, 4},
    {4, 8, 12, 6, 10, 8, 6, 3},      {2, 4, 6, 3, 5, 4, 3, 2}};

VertexIndex at(const DualGraph& g, const std::string& id) { return g.index_of(id); }

std::vector<DualGraph> random_graphs(int count, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<DualGraph> out;
  for (int i = 0; i < count; ++i) {
    const OracleBounds b{10, 3, i % 2 ? ElementKind::curve : ElementKind::divisor, i % 3 != 0};
    out.push_back(random_graph(rng, b, static_cast<int>(rng() % 11), 1));
  }
  return out;
}

}  // namespace

TEST_CASE("minimal E8 graph shape") {
  const DualGraph g = e8_minimal_graph();
  REQUIRE(g.size() == 8);
  const std::vector<std::size_t> degrees{1, 2, 3, 1, 2, 2, 2, 1};
  for (int v = 1; v <= 8; ++v) {
    CHECK(g.degree(at(g, std::to_string(v))) == degrees[v - 1]);
    CHECK(g.vertex(at(g, std::to_string(v))).self_intersection == -2);
    CHECK(g.vertex(at(g, std::to_string(v))).base == v);
  }
  CHECK(std::count(degrees.begin(), degrees.end(), 3u) == 1);
  CHECK(g.arrows().empty());
  CHECK(g.marks().empty());
  CHECK(negated_determinant(g) == 1);
}

TEST_CASE("E8 multiplicity matrix") {
  const DualGraph g = e8_minimal_graph();
  const auto m = multiplicity_matrix(g);
  const auto ref = e8::testing::minus_inverse(g);
  for (int i = 1; i <= 8; ++i)
    for (int j = 1; j <= 8; ++j) {
      const VertexIndex a = at(g, std::to_string(i)), b = at(g, std::to_string(j));
      CHECK(m(a, b) == kE8[i - 1][j - 1]);
      CHECK(Rational(m(a, b)) == ref[a][b]);
    }
  // m_{i8} <= m_{i1} <= m_{ik} for 1 < k < 8
  for (int i = 0; i < 8; ++i) {
    CHECK(kE8[i][7] <= kE8[i][0]);
    for (int k = 1; k < 7; ++k) CHECK(kE8[i][0] <= kE8[i][k]);
  }
}

TEST_CASE("single -1 vertex has multiplicity 1") {
  DualGraph g;
  g.add_vertex("a", -1);
  CHECK(multiplicity_matrix(g)(0, 0) == 1);
}

TEST_CASE("blow-up arithmetic") {
  const DualGraph g = e8_minimal_graph();
  SUBCASE("intersection point of two -2 vertices") {
    const DualGraph h = blow_up(g, {BlowupKind::intersection_point, "6", "7", {}, ""});
    REQUIRE(h.size() == 9);
    const VertexIndex n = 8;
    CHECK(h.vertex(n).self_intersection == -1);
    CHECK(h.vertex(at(h, "6")).self_intersection == -3);
    CHECK(h.vertex(at(h, "7")).self_intersection == -3);
    CHECK(h.has_edge(n, at(h, "6")));
    CHECK(h.has_edge(n, at(h, "7")));
    CHECK_FALSE(h.has_edge(at(h, "6"), at(h, "7")));
  }
  SUBCASE("seven free blow-ups from vertex 6") {
    DualGraph h = g;
    std::string last = "6";
    for (int k = 0; k < 7; ++k) {
      const VertexIndex v = blow_up_in_place(h, {BlowupKind::smooth_point, last, "", {}, ""});
      last = h.vertex(v).id;
    }
    CHECK(h.size() == 15);
    CHECK(h.vertex(at(h, last)).self_intersection == -1);
    CHECK(h.degree(at(h, last)) == 1);
    CHECK(h.vertex(at(h, "6")).self_intersection == -3);
    for (std::size_t v = 8; v + 1 < h.size(); ++v) CHECK(h.vertex(v).self_intersection == -2);
  }
  SUBCASE("arrows riding the point move to the new vertex") {
    DualGraph h = g;
    h.add_arrow(1, at(h, "6"));
    h.add_arrow(2, at(h, "6"));
    const VertexIndex v = blow_up_in_place(h, {BlowupKind::smooth_point, "6", "", {2}, "x"});
    CHECK(h.arrows_at(v) == 1);
    CHECK(h.arrows_at(at(h, "6")) == 1);
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(blow_up(g, {BlowupKind::smooth_point, "99", "", {}, ""}), GraphError);
    CHECK_THROWS_AS(blow_up(g, {BlowupKind::intersection_point, "1", "8", {}, ""}), GraphError);
  }
}

TEST_CASE("blow-ups keep a unimodular tree") {
  for (const auto& g : random_graphs(100, 3)) {
    CHECK(g.edges().size() + 1 == g.size());
    CHECK(negated_determinant(g) == 1);
    CHECK_NOTHROW(g.validate());
    const auto m = multiplicity_matrix(g);
    const auto ref = e8::testing::minus_inverse(g);
    for (VertexIndex a = 0; a < g.size(); ++a)
      for (VertexIndex b = 0; b < g.size(); ++b) {
        CHECK(m(a, b) >= 1);
        CHECK(m(a, b) == m(b, a));
        CHECK(Rational(m(a, b)) == ref[a][b]);
      }
  }
}

TEST_CASE("three-tails insertions") {
  CHECK(canonically_isomorphic(build_pi_prime({}), e8_minimal_graph()));

  const EdgeInsertion ins{3, 4, 1, 1};
  const DualGraph g = build_pi_prime({ins});
  const auto m = multiplicity_matrix(g);
  CHECK(m(at(g, "8"), pi_prime_vertex(g, ins)) == 9);

  Rng rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    const auto [i, j] = e8_edges()[rng() % e8_edges().size()];
    Integer s1 = 1 + rng() % 9, s2 = 1 + rng() % 9;
    if (gcd(s1, s2) != 1) continue;
    const EdgeInsertion e{i, j, s1, s2};
    const DualGraph h = build_pi_prime({e});
    const auto mh = multiplicity_matrix(h);
    const VertexIndex s = pi_prime_vertex(h, e);
    for (int k = 1; k <= 8; ++k)
      CHECK(mh(at(h, std::to_string(k)), s) == s1 * kE8[k - 1][i - 1] + s2 * kE8[k - 1][j - 1]);
    CHECK(negated_determinant(h) == 1);
  }
  CHECK_THROWS_AS(build_pi_prime({{3, 4, 2, 4}}), GraphError);
  CHECK_THROWS_AS(build_pi_prime({{3, 4, 0, 1}}), GraphError);
  CHECK_THROWS_AS(build_pi_prime({{1, 3, 1, 1}}), GraphError);
}

TEST_CASE("multiplicities from arrows and the Mumford identity") {
  DualGraph g = e8_minimal_graph();
  g.add_arrow(1, at(g, "6"));
  auto mult = multiplicities_from_arrows(g);
  std::vector<Integer> col6;
  for (int k = 1; k <= 8; ++k) col6.push_back(mult.at(1)[at(g, std::to_string(k))]);
  CHECK(col6 == std::vector<Integer>{6, 12, 18, 9, 15, 12, 8, 4});

  g.add_arrow(1, at(g, "6"));
  mult = multiplicities_from_arrows(g);
  for (int k = 1; k <= 8; ++k) CHECK(mult.at(1)[at(g, std::to_string(k))] == 2 * col6[k - 1]);

  CHECK_THROWS_AS(multiplicities_from_arrows(e8_minimal_graph()), GraphError);

  for (const auto& h : random_graphs(100, 5)) {
    if (h.arrows().empty()) continue;
    const auto q = intersection_matrix(h);
    for (const auto& [branch, m] : multiplicities_from_arrows(h))
      for (VertexIndex a = 0; a < h.size(); ++a) {
        Integer residual = 0;
        for (const auto& arrow : h.arrows())
          if (arrow.branch == branch && arrow.at == a) residual += 1;
        for (VertexIndex s = 0; s < h.size(); ++s) residual += m[s] * q[s][a];
        CHECK(residual == 0);
      }
  }
}

TEST_CASE("Euler characteristic of the smooth part") {
  DualGraph g = e8_minimal_graph();
  g.add_arrow(1, at(g, "2"));
  CHECK(euler_smooth_part(g, at(g, "2"), true) == -1);
  CHECK(euler_smooth_part(g, at(g, "2"), false) == 0);
  CHECK(euler_smooth_part(g, at(g, "3"), false) == -1);
  CHECK(euler_smooth_part(g, at(g, "8"), false) == 1);
}

TEST_CASE("geodesics") {
  const DualGraph g = e8_minimal_graph();
  CHECK(geodesic(g, at(g, "5"), at(g, "5")) == std::vector<VertexIndex>{at(g, "5")});
  CHECK(geodesic(g, at(g, "1"), at(g, "4")) ==
        std::vector<VertexIndex>{at(g, "1"), at(g, "2"), at(g, "3"), at(g, "4")});
  for (const auto& h : random_graphs(40, 9))
    for (VertexIndex a = 0; a < h.size(); a += 2)
      for (VertexIndex b = 0; b < h.size(); b += 3) {
        const auto p = geodesic(h, a, b);
        CHECK(p == e8::testing::bfs_path(h, a, b));
        CHECK(std::vector<VertexIndex>(p.rbegin(), p.rend()) == geodesic(h, b, a));
      }
}

TEST_CASE("canonical isomorphism") {
  DualGraph curvette = e8_minimal_graph();
  curvette.add_arrow(1, at(curvette, "6"));
  CHECK(canonically_isomorphic(curvette, curvette));

  DualGraph a4 = e8_minimal_graph();
  const VertexIndex v9 = blow_up_in_place(a4, {BlowupKind::smooth_point, "8", "", {}, ""});
  const VertexIndex v10 =
      blow_up_in_place(a4, {BlowupKind::smooth_point, a4.vertex(v9).id, "", {}, ""});
  const VertexIndex v11 =
      blow_up_in_place(a4, {BlowupKind::smooth_point, a4.vertex(v10).id, "", {}, ""});
  const VertexIndex v12 = blow_up_in_place(
      a4, {BlowupKind::intersection_point, a4.vertex(v10).id, a4.vertex(v11).id, {}, ""});
  a4.add_arrow(1, v12);
  CHECK_FALSE(canonically_isomorphic(curvette, a4));

  DualGraph other = e8_minimal_graph();
  other.add_arrow(2, at(other, "6"));
  CHECK_FALSE(canonically_isomorphic(curvette, other));
  CHECK(canonically_isomorphic(curvette, other, {{2, 1}}));

  Rng rng(23);
  for (const auto& g : random_graphs(60, 13)) {
    std::vector<std::size_t> order(g.size());
    for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
    std::shuffle(order.begin(), order.end(), rng);
    CHECK(canonical_form(g) == canonical_form(e8::testing::relabeled(g, order)));
  }
}

TEST_CASE("JSON round trip and DOT") {
  for (const auto& g : random_graphs(30, 29)) {
    const std::string text = to_json(g);
    const DualGraph back = graph_from_json(text);
    CHECK(to_json(back) == text);
    CHECK(canonically_isomorphic(g, back));
  }
  DualGraph g = e8_minimal_graph();
  g.add_mark(at(g, "6"));
  g.add_arrow(1, at(g, "2"));
  const std::string dot = to_dot(g);
  CHECK(dot.find("\"6 (-2)\"") != std::string::npos);
  CHECK(dot.find("doublecircle") != std::string::npos);
  CHECK_THROWS_AS(graph_from_json("{\"vertices\": 3}"), GraphError);
  CHECK_THROWS_AS(graph_from_json("not json"), GraphError);
}
