#include "e8/acampo.hpp"

namespace e8 {

BinomialProduct poincare_curve(const DualGraph& g, const MultiplicityMatrix& m) {
  if (g.arrows().empty()) throw GraphError("curve series needs at least one arrow");
  const auto mult = multiplicities_from_arrows(g, m);
  BinomialProduct p(mult.size());
  for (VertexIndex v = 0; v < g.size(); ++v) {
    const int chi = euler_smooth_part(g, v, true);
    if (chi == 0) continue;
    ExponentVector e;
    for (const auto& [branch, column] : mult) e.push_back(column[v]);
    p.multiply(e, Integer(-chi));
  }
  return p;
}

BinomialProduct poincare_curve(const DualGraph& g) {
  return poincare_curve(g, multiplicity_matrix(g));
}

BinomialProduct poincare_divisorial(const DualGraph& g, const MultiplicityMatrix& m) {
  if (g.marks().empty()) throw GraphError("divisorial series needs at least one mark");
  BinomialProduct p(g.marks().size());
  for (VertexIndex v = 0; v < g.size(); ++v) {
    const int chi = euler_smooth_part(g, v, false);
    if (chi == 0) continue;
    ExponentVector e;
    for (VertexIndex mark : g.marks()) e.push_back(m(v, mark));
    p.multiply(e, Integer(-chi));
  }
  return p;
}

BinomialProduct poincare_divisorial(const DualGraph& g) {
  return poincare_divisorial(g, multiplicity_matrix(g));
}

}  // namespace e8
