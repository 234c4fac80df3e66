#ifndef E8_RESOLUTION_HPP
#define E8_RESOLUTION_HPP

// Resolutions described as blow-up paths over the three-tails resolution.
//
// Every element (a curve branch or a divisor) starts at a component sigma0 of
// the three-tails graph and follows a sequence of infinitely near points.
// Elements share their first d_ij points; the shared prefixes form a trie.

#include "e8/graph.hpp"

#include <algorithm>
#include <optional>
#include <vector>

namespace e8 {

/// Either a base vertex 1..8 or a vertex inserted on an E8 edge.
struct BasePoint {
  int vertex = 0;
  std::optional<EdgeInsertion> insertion;

  static BasePoint at_vertex(int v) { return {v, std::nullopt}; }
  static BasePoint on_edge(EdgeInsertion ins) { return {0, std::move(ins)}; }
};

bool operator==(const BasePoint& a, const BasePoint& b);

/// A point on the divisor created at position `a` (free) or the intersection
/// of the divisors at positions a and b (satellite). Position -1 is sigma0.
struct PointDescriptor {
  enum class Kind { free_point, satellite };
  Kind kind = Kind::free_point;
  int a = -1;
  int b = -1;

  static PointDescriptor free_on(int a) { return {Kind::free_point, a, -1}; }
  static PointDescriptor satellite_of(int a, int b) {
    return {Kind::satellite, std::min(a, b), std::max(a, b)};
  }
};

bool operator==(const PointDescriptor& a, const PointDescriptor& b);

struct ElementPath {
  BasePoint sigma0;
  std::vector<PointDescriptor> points;
};

enum class ElementKind { curve, divisor };

struct Configuration {
  ElementKind kind = ElementKind::curve;
  std::vector<ElementPath> elements;
  /// Symmetric matrix of shared prefix lengths; the diagonal is ignored.
  /// Empty means no sharing.
  std::vector<std::vector<std::size_t>> shared;

  std::size_t depth(std::size_t i, std::size_t j) const {
    return shared.empty() ? 0 : shared[i][j];
  }
};

struct Resolution {
  DualGraph graph;
  std::vector<VertexIndex> sigma0;
  /// Vertex of every point of every element, including the implicit free
  /// points a curve follows while it stays with another branch.
  std::vector<std::vector<VertexIndex>> nodes;
  /// Vertex carrying the arrow or mark of each element.
  std::vector<VertexIndex> end;
};

/// Builds the graph. Arrows get branch i + 1 for element i; marks follow the
/// element order. Throws GraphError on inconsistent configurations.
Resolution build(const Configuration& config);

/// Applies a single path over `host`, returning the created vertices.
std::vector<VertexIndex> apply_points(DualGraph& g, VertexIndex host,
                                      const std::vector<PointDescriptor>& points);

/// Minimal embedded resolution test for curves (every -1 vertex meets at
/// least three other components or arrows) and minimality for divisors
/// (every -1 vertex is marked).
bool is_minimal(const DualGraph& g, ElementKind kind);

}  // namespace e8

#endif  // E8_RESOLUTION_HPP
