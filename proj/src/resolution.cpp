#include "e8/resolution.hpp"

namespace e8 {

bool operator==(const BasePoint& a, const BasePoint& b) {
  if (a.insertion.has_value() != b.insertion.has_value()) return false;
  if (!a.insertion) return a.vertex == b.vertex;
  const auto& x = *a.insertion;
  const auto& y = *b.insertion;
  if (x.i == y.i && x.j == y.j) return x.s1 == y.s1 && x.s2 == y.s2;
  return x.i == y.j && x.j == y.i && x.s1 == y.s2 && x.s2 == y.s1;
}

bool operator==(const PointDescriptor& a, const PointDescriptor& b) {
  return a.kind == b.kind && a.a == b.a && a.b == b.b;
}

namespace {

VertexIndex place_point(DualGraph& g, const PointDescriptor& d, int position,
                        const std::vector<VertexIndex>& prefix, VertexIndex host) {
  auto at = [&](int k) { return k < 0 ? host : prefix.at(static_cast<std::size_t>(k)); };
  if (d.kind == PointDescriptor::Kind::free_point) {
    if (d.a != position - 1) throw GraphError("free point must lie on the previous divisor");
    return blow_up_in_place(g, {BlowupKind::smooth_point, g.vertex(at(d.a)).id, "", {}, ""});
  }
  if (d.b != position - 1 || d.a < -1 || d.a >= d.b)
    throw GraphError("satellite point must lie on the previous divisor");
  const VertexIndex u = at(d.a), v = at(d.b);
  if (!g.has_edge(u, v)) throw GraphError("satellite point on divisors that do not meet");
  return blow_up_in_place(
      g, {BlowupKind::intersection_point, g.vertex(u).id, g.vertex(v).id, {}, ""});
}

}  // namespace

std::vector<VertexIndex> apply_points(DualGraph& g, VertexIndex host,
                                      const std::vector<PointDescriptor>& points) {
  std::vector<VertexIndex> made;
  for (std::size_t p = 0; p < points.size(); ++p)
    made.push_back(place_point(g, points[p], static_cast<int>(p), made, host));
  return made;
}

Resolution build(const Configuration& config) {
  const std::size_t n = config.elements.size();
  if (n == 0) throw GraphError("configuration has no elements");
  if (!config.shared.empty()) {
    if (config.shared.size() != n) throw GraphError("shared depth matrix has the wrong size");
    for (std::size_t i = 0; i < n; ++i) {
      if (config.shared[i].size() != n) throw GraphError("shared depth matrix has the wrong size");
      for (std::size_t j = 0; j < n; ++j)
        if (i != j && config.shared[i][j] != config.shared[j][i])
          throw GraphError("shared depth matrix is not symmetric");
    }
  }

  std::vector<EdgeInsertion> insertions;
  for (const auto& e : config.elements)
    if (e.sigma0.insertion) insertions.push_back(*e.sigma0.insertion);
  Resolution out{build_pi_prime(insertions), {}, {}, {}};
  DualGraph& g = out.graph;
  for (const auto& e : config.elements) {
    if (e.sigma0.insertion) {
      out.sigma0.push_back(pi_prime_vertex(g, *e.sigma0.insertion));
    } else {
      const auto v = g.base_vertex(e.sigma0.vertex);
      if (!v) throw GraphError("sigma0 must be a base vertex 1..8");
      out.sigma0.push_back(*v);
    }
  }

  const bool curves = config.kind == ElementKind::curve;
  std::vector<std::size_t> length(n);
  for (std::size_t i = 0; i < n; ++i) {
    length[i] = config.elements[i].points.size();
    if (curves)
      for (std::size_t j = 0; j < n; ++j)
        if (j != i) length[i] = std::max(length[i], config.depth(i, j));
  }
  auto descriptor = [&](std::size_t i, std::size_t p) {
    const auto& own = config.elements[i].points;
    return p < own.size() ? own[p] : PointDescriptor::free_on(static_cast<int>(p) - 1);
  };

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const std::size_t d = config.depth(i, j);
      if (d == 0) continue;
      if (!(config.elements[i].sigma0 == config.elements[j].sigma0))
        throw GraphError("elements sharing points must start at the same component");
      if (d > std::min(length[i], length[j]))
        throw GraphError("shared depth exceeds an element's path");
      for (std::size_t p = 0; p < d; ++p)
        if (!(descriptor(i, p) == descriptor(j, p)))
          throw GraphError("elements disagree on a shared point");
      if (d < std::min(length[i], length[j])) {
        const auto a = descriptor(i, d), b = descriptor(j, d);
        if (a == b && a.kind == PointDescriptor::Kind::satellite)
          throw GraphError("elements diverge at the same satellite point");
      }
    }

  out.nodes.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto& nodes = out.nodes[i];
    for (std::size_t p = 0; p < length[i]; ++p) {
      std::optional<VertexIndex> shared;
      for (std::size_t j = 0; j < i; ++j)
        if (config.depth(i, j) > p) {
          if (shared && *shared != out.nodes[j][p])
            throw GraphError("shared depths are not consistent");
          shared = out.nodes[j][p];
        }
      nodes.push_back(shared ? *shared
                             : place_point(g, descriptor(i, p), static_cast<int>(p), nodes,
                                           out.sigma0[i]));
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t last = curves ? length[i] : config.elements[i].points.size();
    const VertexIndex at = last == 0 ? out.sigma0[i] : out.nodes[i][last - 1];
    out.end.push_back(at);
    if (curves) {
      g.add_arrow(static_cast<int>(i) + 1, at);
    } else {
      for (VertexIndex m : g.marks())
        if (m == at) throw GraphError("two divisors end at the same component");
      g.add_mark(at);
    }
  }
  return out;
}

bool is_minimal(const DualGraph& g, ElementKind kind) {
  for (VertexIndex v = 0; v < g.size(); ++v) {
    if (g.vertex(v).self_intersection != -1) continue;
    if (kind == ElementKind::curve) {
      if (g.degree(v) + g.arrows_at(v) < 3) return false;
    } else if (std::find(g.marks().begin(), g.marks().end(), v) == g.marks().end()) {
      return false;
    }
  }
  return true;
}

}  // namespace e8
