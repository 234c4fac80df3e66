#include "e8/reconstruct.hpp"

#include "e8/acampo.hpp"

namespace e8 {

RatioPoint RatioPoint::of(const Integer& m8, const Integer& m1, const Integer& m4) {
  const Integer g = gcd(gcd(m8, m1), m4);
  if (g == 0) throw ReconstructionError("degenerate ratio point");
  return {m8 / g, m1 / g, m4 / g};
}

SigmaZeroData sigma0_data(const BasePoint& b) {
  const auto& base = e8_multiplicities();
  SigmaZeroData d;
  if (!b.insertion) {
    if (b.vertex < 1 || b.vertex > 8) throw ReconstructionError("base vertex out of range");
    for (int k = 0; k < 8; ++k) d.column[k] = base[b.vertex - 1][k];
    d.self = base[b.vertex - 1][b.vertex - 1];
    return d;
  }
  const auto& ins = *b.insertion;
  for (int k = 0; k < 8; ++k)
    d.column[k] = ins.s1 * base[ins.i - 1][k] + ins.s2 * base[ins.j - 1][k];
  const DualGraph g = build_pi_prime({ins});
  const VertexIndex v = pi_prime_vertex(g, ins);
  d.self = multiplicity_matrix(g)(v, v);
  return d;
}

namespace {

std::vector<Integer> scalar_denominators(const BinomialProduct& p) {
  if (p.variables() != 1) throw ReconstructionError("expected a one-variable series");
  std::vector<Integer> out;
  for (const auto& m : p.denominators()) out.push_back(m[0]);
  return out;
}

std::vector<Integer> scalar_numerators(const BinomialProduct& p) {
  std::vector<Integer> out;
  for (const auto& m : p.numerators()) out.push_back(m[0]);
  return out;
}

BasePoint solve_on_edge(int i, int j, const Integer& a, const Integer& b) {
  // s1 a + s2 b = 0 with a, b of opposite signs.
  const Integer s1 = abs(b), s2 = abs(a);
  const Integer g = gcd(s1, s2);
  return BasePoint::on_edge({i, j, s1 / g, s2 / g});
}

}  // namespace

SigmaZeroResult identify_sigma0(const BinomialProduct& p) {
  const auto m = scalar_denominators(p);
  if (m.empty()) throw ReconstructionError("series has no -1 factor");
  const auto& base = e8_multiplicities();
  auto col = [&](int v, int k) { return Integer(base[v - 1][k - 1]); };

  BasePoint sigma0;
  if (m.size() < 2 || m[1] > 2 * m[0]) {
    sigma0 = BasePoint::at_vertex(1);
  } else if (3 * m[1] != 5 * m[0]) {
    bool found = false;
    for (int v = 1; v <= 8 && !found; ++v)
      if (v != 3 && v != 4 && m[1] * col(v, 8) == m[0] * col(v, 1)) {
        sigma0 = BasePoint::at_vertex(v);
        found = true;
      }
    for (auto [i, j] : e8_edges()) {
      if (found) break;
      if (i == 3 && j == 4) continue;
      const Integer a = m[0] * col(i, 1) - m[1] * col(i, 8);
      const Integer b = m[0] * col(j, 1) - m[1] * col(j, 8);
      if (a * b < 0) {
        sigma0 = solve_on_edge(i, j, a, b);
        found = true;
      }
    }
    if (!found) throw ReconstructionError("ratio m2/m1 matches no component");
  } else if (m.size() < 3 || 3 * m[2] >= 8 * m[0]) {
    sigma0 = BasePoint::at_vertex(4);
  } else {
    // Segment [Q3, Q4]: m3/m1 = (15 s1 + 8 s2) / (6 s1 + 3 s2).
    const Integer a = 15 * m[0] - 6 * m[2];
    const Integer b = 8 * m[0] - 3 * m[2];
    if (a == 0)
      sigma0 = BasePoint::at_vertex(3);
    else if (a < 0)
      sigma0 = solve_on_edge(3, 4, a, b);
    else
      throw ReconstructionError("ratio m3/m1 matches no component");
  }

  const auto d = sigma0_data(sigma0);
  if (m[0] % d.column[7] != 0) throw ReconstructionError("intersection number is not integral");
  const Integer ell = m[0] / d.column[7];
  if (sigma0.vertex != 1 && m[1] != ell * d.column[0])
    throw ReconstructionError("second exponent does not match the component");
  return {sigma0, ell};
}

BinomialProduct d_series(const SigmaZeroData& d, const Integer& ell) {
  BinomialProduct p(1);
  p.multiply({ell * d.column[0]}, -1);
  p.multiply({ell * d.column[3]}, -1);
  p.multiply({ell * d.column[7]}, -1);
  p.multiply({ell * d.column[2]}, 1);
  return p;
}

namespace {

struct BranchRemainder {
  SigmaZeroResult where;
  SigmaZeroData data;
  Integer base;  // ell * m_{sigma0 sigma0}
  BinomialProduct rest;
};

BranchRemainder peel_d(const BinomialProduct& p) {
  BranchRemainder out{identify_sigma0(p), {}, 0, BinomialProduct(1)};
  out.data = sigma0_data(out.where.sigma0);
  out.base = out.where.ell * out.data.self;
  BinomialProduct known = d_series(out.data, out.where.ell);
  known.multiply({out.base}, 1);
  out.rest = divide(p, known);
  return out;
}

std::vector<PointDescriptor> with_tail(std::vector<PointDescriptor> points, const Integer& k) {
  for (Integer i = 0; i < k; ++i)
    points.push_back(PointDescriptor::free_on(static_cast<int>(points.size()) - 1));
  return points;
}

DualGraph single_graph(const ElementPath& path, ElementKind kind) {
  return build({kind, {path}, {}}).graph;
}

void verify(const DualGraph& g, const BinomialProduct& p, ElementKind kind) {
  const auto q = kind == ElementKind::curve ? poincare_curve(g) : poincare_divisorial(g);
  if (q != p) throw ReconstructionError("reconstructed graph has a different series");
}

}  // namespace

ElementPath reconstruct_curve_path(const BinomialProduct& p) {
  try {
    const auto r = peel_d(p);
    ElementPath path{r.where.sigma0, {}};
    if (r.where.ell == 1) {
      if (!r.rest.empty()) throw ReconstructionError("curvette series has extra factors");
    } else {
      const auto m = scalar_denominators(r.rest);
      if (m.empty()) throw ReconstructionError("B(t) has no denominator");
      const Integer mu = m[0] - r.base;
      const int c = classify_case(r.where.ell, mu);
      std::size_t used = 0;
      const auto s = recover_generators(c, m, r.where.ell, mu, r.base, &used);
      if (used != m.size()) throw ReconstructionError("B(t) has unused denominators");
      path.points = branch_points(s, attachment(s, r.where.ell)).points;
    }
    verify(single_graph(path, ElementKind::curve), p, ElementKind::curve);
    return path;
  } catch (const BranchError& e) {
    throw ReconstructionError(e.what());
  } catch (const GraphError& e) {
    throw ReconstructionError(e.what());
  }
}

DualGraph reconstruct_curve(const BinomialProduct& p) {
  return single_graph(reconstruct_curve_path(p), ElementKind::curve);
}

namespace {

ElementPath divisor_candidate(const BranchRemainder& r) {
  const Integer& ell = r.where.ell;
  ElementPath path{r.where.sigma0, {}};
  const auto m = scalar_denominators(r.rest);
  const auto n = scalar_numerators(r.rest);
  if (ell == 1) {
    // A tail of free points over a curvette at sigma0.
    if (m.size() != 1 || !n.empty()) throw ReconstructionError("B_v(t) does not fit case 1");
    const Integer k = m[0] - r.data.self;
    if (k < 1) throw ReconstructionError("negative tail length");
    path.points = with_tail({}, k);
    return path;
  }
  if (m.empty()) throw ReconstructionError("B_v(t) has no denominator");
  const Integer mu = m[0] - r.base;
  const int c = classify_case(ell, mu);
  const SemigroupGenerators smooth{{1}};
  if (c == 2) {
    Integer k = 0;
    if (m.size() == 2 && n.size() == 1)
      k = m[1] - n[0];
    else if (m.size() != 1 || !n.empty())
      throw ReconstructionError("B_v(t) does not fit case 2");
    path.points = with_tail(branch_points(smooth, attachment(smooth, ell)).points, k);
    return path;
  }
  // The tail adds one denominator beyond the generators: if the first r - 1
  // denominators already bring the gcd down to 1, the last one is sigma*.
  const std::size_t r_count = m.size();
  bool tail = false;
  if (r_count >= 2 && n.size() + 1 == r_count) {
    try {
      std::size_t used = 0;
      const std::vector<Integer> head(m.begin(), m.end() - 1);
      recover_generators(c, head, ell, mu, r.base, &used);
      tail = used == head.size();
    } catch (const BranchError&) {
      tail = false;
    }
  }
  std::size_t used = 0;
  const std::vector<Integer> gens_m(m.begin(), tail ? m.end() - 1 : m.end());
  const auto s = recover_generators(c, gens_m, ell, mu, r.base, &used);
  if (used != gens_m.size()) throw ReconstructionError("B_v(t) has unused denominators");
  const Integer k = tail ? m.back() - n.back() : Integer(0);
  if (tail && k < 1) throw ReconstructionError("negative tail length");
  path.points = with_tail(branch_points(s, attachment(s, ell)).points, k);
  return path;
}

}  // namespace

ElementPath reconstruct_divisor_path(const BinomialProduct& p) {
  try {
    const auto r = peel_d(p);
    ElementPath path{r.where.sigma0, {}};
    const BinomialProduct d = d_series(r.data, 1);
    if (!(r.where.ell == 1 && p == d)) path = divisor_candidate(r);
    verify(single_graph(path, ElementKind::divisor), p, ElementKind::divisor);
    return path;
  } catch (const BranchError& e) {
    throw ReconstructionError(e.what());
  } catch (const GraphError& e) {
    throw ReconstructionError(e.what());
  }
}

DualGraph reconstruct_divisor(const BinomialProduct& p) {
  return single_graph(reconstruct_divisor_path(p), ElementKind::divisor);
}

ExponentVector split_vertex(const BinomialProduct& pair, const ExponentVector& direction) {
  if (pair.variables() != 2 || direction.size() != 2)
    throw ReconstructionError("split_vertex needs two variables");
  std::optional<ExponentVector> best;
  for (const auto& [m, s] : pair.factors()) {
    if (m[0] * direction[1] != m[1] * direction[0]) continue;
    if (!best || (m[0] >= (*best)[0] && m[1] >= (*best)[1])) {
      best = m;
    } else if (!(m[0] <= (*best)[0] && m[1] <= (*best)[1])) {
      throw ReconstructionError("no componentwise maximum among proportional factors");
    }
  }
  if (!best) throw ReconstructionError("no factor with the splitting ratio");
  return *best;
}

}  // namespace e8
