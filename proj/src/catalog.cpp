#include "e8/catalog.hpp"

namespace e8 {

namespace {

using PD = PointDescriptor;

const std::vector<PointDescriptor> a4_points{PD::free_on(-1), PD::free_on(0), PD::free_on(1),
                                             PD::satellite_of(1, 2)};

}  // namespace

DualGraph curvette_graph(int v) {
  return build({ElementKind::curve, {{BasePoint::at_vertex(v), {}}}, {}}).graph;
}

DualGraph a4_over_d8_graph() {
  return build({ElementKind::curve, {{BasePoint::at_vertex(8), a4_points}}, {}}).graph;
}

DualGraph free_chain_divisor(int v, int steps) {
  std::vector<PointDescriptor> points;
  for (int k = 0; k < steps; ++k) points.push_back(PD::free_on(k - 1));
  return build({ElementKind::divisor, {{BasePoint::at_vertex(v), points}}, {}}).graph;
}

DualGraph a4_over_d8_divisor() {
  auto points = a4_points;
  points.push_back(PD::free_on(3));
  return build({ElementKind::divisor, {{BasePoint::at_vertex(8), points}}, {}}).graph;
}

DualGraph curvettes_1_and_4() {
  return build({ElementKind::curve,
                {{BasePoint::at_vertex(1), {}}, {BasePoint::at_vertex(4), {}}},
                {}})
      .graph;
}

}  // namespace e8
