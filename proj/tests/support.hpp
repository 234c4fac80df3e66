#ifndef E8_TESTS_SUPPORT_HPP
#define E8_TESTS_SUPPORT_HPP

// Independent reference computations shared by the test binaries.

#include "e8/graph.hpp"
#include "e8/series.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <deque>
#include <optional>
#include <vector>

namespace e8::testing {

using Rational = boost::multiprecision::cpp_rational;

/// -(intersection matrix)^{-1} by Gauss-Jordan over the rationals.
inline std::vector<std::vector<Rational>> minus_inverse(const DualGraph& g) {
  const auto q = intersection_matrix(g);
  const std::size_t n = q.size();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(q[i][j]);
    a[i][n + i] = -1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (a[p][c] == 0) ++p;
    std::swap(a[p], a[c]);
    const Rational pivot = a[c][c];
    for (auto& x : a[c]) x /= pivot;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      const Rational f = a[r][c];
      for (std::size_t k = 0; k < 2 * n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  std::vector<std::vector<Rational>> out(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i][j] = a[i][n + j];
  return out;
}

/// Coefficients 0..n of num/den for one-variable polynomials with den[0] = 1,
/// by plain long division.
inline std::vector<Integer> divide_series(std::vector<Integer> num, const std::vector<Integer>& den,
                                          std::size_t n) {
  num.resize(n + 1, 0);
  std::vector<Integer> q(n + 1, 0);
  for (std::size_t k = 0; k <= n; ++k) {
    q[k] = num[k];
    for (std::size_t j = 1; j < den.size() && k + j <= n; ++j) num[k + j] -= q[k] * den[j];
  }
  return q;
}

/// prod (1 - t^m) as a dense polynomial.
inline std::vector<Integer> binomials(const std::vector<long>& exps) {
  std::vector<Integer> p{1};
  for (long m : exps) {
    std::vector<Integer> next(p.size() + static_cast<std::size_t>(m), 0);
    for (std::size_t i = 0; i < p.size(); ++i) {
      next[i] += p[i];
      next[i + static_cast<std::size_t>(m)] -= p[i];
    }
    p = std::move(next);
  }
  return p;
}

/// Path a -> b by breadth-first search.
inline std::vector<VertexIndex> bfs_path(const DualGraph& g, VertexIndex a, VertexIndex b) {
  std::vector<std::optional<VertexIndex>> parent(g.size());
  std::deque<VertexIndex> queue{a};
  parent[a] = a;
  while (!queue.empty()) {
    const VertexIndex v = queue.front();
    queue.pop_front();
    for (VertexIndex w : g.neighbors(v))
      if (!parent[w]) {
        parent[w] = v;
        queue.push_back(w);
      }
  }
  std::vector<VertexIndex> path{b};
  while (path.back() != a) path.push_back(*parent[path.back()]);
  return {path.rbegin(), path.rend()};
}

/// Same graph with vertex ids renamed and vertices stored in another order.
inline DualGraph relabeled(const DualGraph& g, const std::vector<std::size_t>& order) {
  DualGraph h;
  std::vector<VertexIndex> where(g.size());
  for (std::size_t k : order) {
    const auto& v = g.vertex(k);
    where[k] = h.add_vertex("v" + std::to_string(k * 7 + 3), v.self_intersection, v.base);
  }
  for (auto [a, b] : g.edges()) h.add_edge(where[a], where[b]);
  for (const auto& a : g.arrows()) h.add_arrow(a.branch, where[a.at]);
  for (VertexIndex m : g.marks()) h.add_mark(where[m]);
  return h;
}

}  // namespace e8::testing

#endif  // E8_TESTS_SUPPORT_HPP
