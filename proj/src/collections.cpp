#include "e8/acampo.hpp"
#include "e8/reconstruct.hpp"

#include <algorithm>
#include <numeric>

namespace e8 {

namespace {

BinomialProduct series_of(const DualGraph& g, ElementKind kind) {
  return kind == ElementKind::curve ? poincare_curve(g) : poincare_divisorial(g);
}

std::vector<std::size_t> all_but(std::size_t r, std::size_t skip) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < r; ++k)
    if (k != skip) out.push_back(k);
  return out;
}

// Point p of a path, where a curve that ran out of own points keeps going
// through free points of its last divisor.
std::optional<PointDescriptor> point_at(const ElementPath& e, std::size_t p, ElementKind kind) {
  if (p < e.points.size()) return e.points[p];
  if (kind == ElementKind::divisor) return std::nullopt;
  return PointDescriptor::free_on(static_cast<int>(p) - 1);
}

Configuration pair_config(const ElementPath& a, const ElementPath& b, std::size_t d,
                          ElementKind kind) {
  return {kind, {a, b}, {{0, d}, {d, 0}}};
}

// Shared depth of two elements over the same sigma0, fixed by the series of
// the pair. For curves `contact` bounds the search: it is the intersection
// multiplicity of the two branches, which grows with the depth.
std::size_t pair_depth(const ElementPath& a, const ElementPath& b, const BinomialProduct& target,
                       ElementKind kind, const std::optional<Integer>& contact) {
  std::optional<ExponentVector> split;
  try {
    const auto dens = target.denominators();
    if (!dens.empty()) split = split_vertex(target, dens.front());
  } catch (const ReconstructionError&) {
    // The splitting vertex may carry a zero Euler characteristic; fall back
    // to checking every depth.
  }

  struct Candidate {
    std::size_t d;
    Resolution res;
    bool split_match;
  };
  std::vector<Candidate> candidates;
  for (std::size_t d = 0;; ++d) {
    if (d > 0) {
      const auto pa = point_at(a, d - 1, kind), pb = point_at(b, d - 1, kind);
      if (!pa || !pb || !(*pa == *pb)) break;
    }
    Resolution res;
    try {
      res = build(pair_config(a, b, d, kind));
    } catch (const GraphError&) {
      continue;
    }
    const auto m = multiplicity_matrix(res.graph);
    if (contact && m(res.end[0], res.end[1]) > *contact) break;
    const VertexIndex node = d == 0 ? res.sigma0[0] : res.nodes[0][d - 1];
    const bool match = split && m(node, res.end[0]) == (*split)[0] &&
                       m(node, res.end[1]) == (*split)[1];
    candidates.push_back({d, std::move(res), match});
  }
  std::stable_partition(candidates.begin(), candidates.end(),
                        [](const Candidate& c) { return c.split_match; });
  for (const auto& c : candidates)
    if (series_of(c.res.graph, kind) == target) return c.d;
  throw ReconstructionError("no shared depth reproduces the series of a pair");
}

void verify(const Configuration& config, const BinomialProduct& p) {
  const auto g = build(config).graph;
  if (!is_minimal(g, config.kind)) throw ReconstructionError("reconstructed graph is not minimal");
  if (series_of(g, config.kind) != p)
    throw ReconstructionError("reconstructed graph has a different series");
}

template <class F>
auto translating(F&& f) {
  try {
    return f();
  } catch (const BranchError& e) {
    throw ReconstructionError(e.what());
  } catch (const GraphError& e) {
    throw ReconstructionError(e.what());
  } catch (const SeriesError& e) {
    throw ReconstructionError(e.what());
  }
}

}  // namespace

Configuration reconstruct_divisor_configuration(const BinomialProduct& p) {
  return translating([&] {
    const std::size_t r = p.variables();
    Configuration config{ElementKind::divisor, {}, {}};
    for (std::size_t i = 0; i < r; ++i)
      config.elements.push_back(reconstruct_divisor_path(project(p, {i})));
    config.shared.assign(r, std::vector<std::size_t>(r, 0));
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = i + 1; j < r; ++j) {
        if (!(config.elements[i].sigma0 == config.elements[j].sigma0)) continue;
        const std::size_t d = pair_depth(config.elements[i], config.elements[j],
                                         project(p, {i, j}), ElementKind::divisor, std::nullopt);
        config.shared[i][j] = config.shared[j][i] = d;
      }
    verify(config, p);
    return config;
  });
}

DualGraph reconstruct_divisor_collection(const BinomialProduct& p) {
  return build(reconstruct_divisor_configuration(p)).graph;
}

namespace {

// Curvettes at D1 and D4: the only collection where no factor of the series
// is the multiplicity vector of an arrow vertex.
std::optional<Configuration> curvettes_at_1_and_4(const BinomialProduct& p) {
  if (p.variables() != 2) return std::nullopt;
  const ElementPath at1{BasePoint::at_vertex(1), {}}, at4{BasePoint::at_vertex(4), {}};
  if (p == BinomialProduct(2, {{{2, 3}, -1}, {{10, 15}, 1}}))
    return Configuration{ElementKind::curve, {at1, at4}, {}};
  if (p == BinomialProduct(2, {{{3, 2}, -1}, {{15, 10}, 1}}))
    return Configuration{ElementKind::curve, {at4, at1}, {}};
  return std::nullopt;
}

bool dominates(const ExponentVector& a, const ExponentVector& b, std::size_t i) {
  // a / a_i >= b / b_i componentwise
  for (std::size_t c = 0; c < a.size(); ++c)
    if (a[c] * b[i] < b[c] * a[i]) return false;
  return true;
}

struct PeelCandidate {
  std::size_t branch;
  ExponentVector m;  // proposed multiplicity vector of the arrow vertex
};

// For every branch i the factors whose exponent, scaled by its i-th entry, is
// minimal. Those sharing a factor form A(k); the branch to peel is the one
// with the largest entry. Branches whose D8 entry is 2 are curvettes at D1,
// whose vertex never shows up, so they go last.
std::vector<PeelCandidate> peel_candidates(const BinomialProduct& p) {
  const std::size_t r = p.variables();
  std::vector<ExponentVector> ns;
  for (const auto& [n, s] : p.factors()) ns.push_back(n);
  const auto dens = p.denominators();
  if (dens.empty()) throw ReconstructionError("series has no -1 factor");
  const ExponentVector& m8 = dens.front();

  std::map<ExponentVector, std::vector<std::size_t>, GradedLess> a_sets;
  for (std::size_t i = 0; i < r; ++i)
    for (const auto& n : ns) {
      const bool minimal = std::all_of(ns.begin(), ns.end(),
                                       [&](const ExponentVector& o) { return dominates(o, n, i); });
      if (minimal) a_sets[n].push_back(i);
    }

  std::vector<PeelCandidate> first, last;
  for (auto& [n, a] : a_sets) {
    std::stable_sort(a.begin(), a.end(),
                     [&](std::size_t x, std::size_t y) { return n[x] > n[y]; });
    for (std::size_t i : a) (m8[i] == 2 ? last : first).push_back({i, n});
  }
  first.insert(first.end(), last.begin(), last.end());
  return first;
}

Configuration join(const ElementPath& peeled, std::size_t at, const Configuration& rest,
                   const BinomialProduct& p, const ExponentVector& m) {
  const std::size_t r = rest.elements.size() + 1;
  Configuration config{ElementKind::curve, rest.elements, {}};
  config.elements.insert(config.elements.begin() + static_cast<long>(at), peeled);
  config.shared.assign(r, std::vector<std::size_t>(r, 0));
  auto old = [&](std::size_t k) { return k < at ? k : k - 1; };
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      if (i != at && j != at) config.shared[i][j] = rest.depth(old(i), old(j));

  const Resolution rest_res = build(rest);
  const auto rest_m = multiplicity_matrix(rest_res.graph);
  for (std::size_t j = 0; j < r; ++j) {
    if (j == at || !(config.elements[j].sigma0 == peeled.sigma0)) continue;
    // Pair series: strip the factors of every other branch.
    BinomialProduct target = project(p, {at, j});
    for (std::size_t k = 0; k < r; ++k) {
      if (k == at || k == j) continue;
      target.multiply({m[k], rest_m(rest_res.end[old(k)], rest_res.end[old(j)])}, -1);
    }
    const std::size_t d = pair_depth(peeled, config.elements[j], target, ElementKind::curve, m[j]);
    config.shared[at][j] = config.shared[j][at] = d;
  }
  return config;
}

Configuration curve_configuration(const BinomialProduct& p);

// Removes branch `at` (resolved as `peeled`, with contacts m) and rebuilds
// the rest recursively.
Configuration peel(const BinomialProduct& p, std::size_t at, const ElementPath& peeled,
                   const ExponentVector& m) {
  const auto keep = all_but(p.variables(), at);
  ExponentVector restricted;
  for (std::size_t k : keep) restricted.push_back(m[k]);
  BinomialProduct remaining = project(p, keep);
  remaining.multiply(restricted, -1);
  Configuration config = join(peeled, at, curve_configuration(remaining), p, m);
  verify(config, p);
  return config;
}

Configuration curve_configuration(const BinomialProduct& p) {
  const std::size_t r = p.variables();
  if (r == 1) return {ElementKind::curve, {reconstruct_curve_path(p)}, {}};
  if (auto special = curvettes_at_1_and_4(p)) return *special;

  for (const auto& c : peel_candidates(p)) {
    try {
      BinomialProduct single = project(p, {c.branch});
      for (std::size_t i = 0; i < r; ++i)
        if (i != c.branch) single.multiply({c.m[i]}, -1);
      return peel(p, c.branch, reconstruct_curve_path(single), c.m);
    } catch (const std::runtime_error&) {
      // wrong guess for the arrow vertex; try the next factor
    }
  }
  // A curvette at D1 can sit on a vertex whose factor cancels against D4.
  // Its own series is known, so the contacts with the other branches are
  // the remaining factors of its projection, in some order.
  const ElementPath d1{BasePoint::at_vertex(1), {}};
  const BinomialProduct d1_series = poincare_curve(build({ElementKind::curve, {d1}, {}}).graph);
  const ExponentVector m8 = p.denominators().front();
  for (std::size_t i = 0; i < r; ++i) {
    if (m8[i] != 2) continue;
    const BinomialProduct contacts = divide(project(p, {i}), d1_series);
    std::vector<Integer> values;
    bool numerators_only = true;
    for (const auto& [n, s] : contacts.factors()) {
      numerators_only = numerators_only && s > 0;
      for (Integer k = 0; k < s; ++k) values.push_back(n[0]);
    }
    if (!numerators_only || values.size() != r - 1) continue;
    std::sort(values.begin(), values.end());
    do {
      ExponentVector m(r, 0);
      for (std::size_t k = 0, v = 0; k < r; ++k)
        if (k != i) m[k] = values[v++];
      try {
        return peel(p, i, d1, m);
      } catch (const std::runtime_error&) {
      }
    } while (std::next_permutation(values.begin(), values.end()));
  }
  throw ReconstructionError("no branch of the curve could be separated");
}

}  // namespace

Configuration reconstruct_curve_configuration(const BinomialProduct& p) {
  return translating([&] { return curve_configuration(p); });
}

DualGraph reconstruct_curve_collection(const BinomialProduct& p) {
  return build(reconstruct_curve_configuration(p)).graph;
}

}  // namespace e8
