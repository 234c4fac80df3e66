#ifndef E8_CATALOG_HPP
#define E8_CATALOG_HPP

// Small hand-built graphs with known series, used by the CLI and the tests.

#include "e8/resolution.hpp"

namespace e8 {

/// Minimal E8 graph with one arrow at base vertex v.
DualGraph curvette_graph(int v);

/// Minimal resolution of an A4 branch (u^5 + v^2 = 0) transversal to D8 at a
/// smooth point: chain 8-9-10-12-11 with the arrow at 12.
DualGraph a4_over_d8_graph();

/// Divisor created by `steps` successive free blow-ups starting at a smooth
/// point of base vertex v (steps = 0 marks v itself).
DualGraph free_chain_divisor(int v, int steps);

/// The A4 graph above with a smooth point of vertex 12 blown up and marked.
DualGraph a4_over_d8_divisor();

/// Arrows of branches 1 and 2 at base vertices 1 and 4.
DualGraph curvettes_1_and_4();

}  // namespace e8

#endif  // E8_CATALOG_HPP
