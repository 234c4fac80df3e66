#ifndef E8_ACAMPO_HPP
#define E8_ACAMPO_HPP

// Poincaré series of curve and divisorial valuations read off a resolution
// graph as a product over its components.

#include "e8/graph.hpp"
#include "e8/series.hpp"

namespace e8 {

/// prod over vertices of (1 - t^{m_sigma})^{-chi}, chi counting arrows.
/// Variables follow the ascending branch indices of the arrows.
BinomialProduct poincare_curve(const DualGraph& g);
BinomialProduct poincare_curve(const DualGraph& g, const MultiplicityMatrix& m);

/// Same product with chi ignoring arrows and m_sigma = (m_{sigma, mark_i})
/// over the marks in their stored order.
BinomialProduct poincare_divisorial(const DualGraph& g);
BinomialProduct poincare_divisorial(const DualGraph& g, const MultiplicityMatrix& m);

}  // namespace e8

#endif  // E8_ACAMPO_HPP
