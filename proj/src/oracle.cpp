#include "e8/oracle.hpp"

#include <algorithm>
#include <set>

namespace e8 {

namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

SemigroupGenerators random_generators(Rng& rng, bool wide_first_pair) {
  while (true) {
    const int g = uniform(rng, 1, 2);
    std::vector<Integer> N(g), e(g + 1);
    for (auto& n : N) n = uniform(rng, 2, 3);
    e[g] = 1;
    for (int k = g; k >= 1; --k) e[k - 1] = N[k - 1] * e[k];
    SemigroupGenerators s{{e[0]}};
    for (int j = 1; j <= g; ++j) {
      const Integer floor_value = j == 1 ? Integer(e[0] * (wide_first_pair ? 2 : 1))
                                         : Integer(N[j - 2] * s.beta[j - 1]);
      Integer c = floor_value / e[j] + 1 + uniform(rng, 0, 8);
      while (gcd(c, N[j - 1]) != 1) ++c;
      s.beta.push_back(c * e[j]);
    }
    if (admissible(s)) return s;
  }
}

bool d8(const DualGraph& g, VertexIndex v) { return g.vertex(v).base == 8; }

bool decoratable(const DualGraph& g, VertexIndex v, const OracleBounds& b) {
  return !(b.avoid_d8 && d8(g, v));
}

// Arrows (curves) or marks (divisors) still needed for minimality.
std::size_t required(const DualGraph& g, VertexIndex v, ElementKind kind) {
  if (g.vertex(v).self_intersection != -1) return 0;
  if (kind == ElementKind::divisor) return 1;
  return g.degree(v) >= 3 ? 0 : 3 - g.degree(v);
}

DualGraph decorate(const DualGraph& g, const std::vector<VertexIndex>& at, ElementKind kind) {
  DualGraph out = g;
  for (std::size_t i = 0; i < at.size(); ++i) {
    if (kind == ElementKind::curve)
      out.add_arrow(static_cast<int>(i) + 1, at[i]);
    else
      out.add_mark(at[i]);
  }
  return out;
}

std::vector<BlowupStep> blowup_choices(const DualGraph& g, const OracleBounds& b) {
  std::vector<BlowupStep> out;
  for (VertexIndex v = 0; v < g.size(); ++v)
    if (!(b.avoid_d8 && d8(g, v)))
      out.push_back({BlowupKind::smooth_point, g.vertex(v).id, "", {}, ""});
  for (auto [u, v] : g.edges())
    out.push_back({BlowupKind::intersection_point, g.vertex(u).id, g.vertex(v).id, {}, ""});
  return out;
}

}  // namespace

BasePoint random_sigma0(Rng& rng) {
  if (uniform(rng, 0, 1) == 0) return BasePoint::at_vertex(uniform(rng, 1, 7));
  const auto [i, j] = e8_edges()[uniform(rng, 0, static_cast<int>(e8_edges().size()) - 1)];
  while (true) {
    const Integer s1 = uniform(rng, 1, 5), s2 = uniform(rng, 1, 5);
    if (gcd(s1, s2) == 1) return BasePoint::on_edge({i, j, s1, s2});
  }
}

SingleSpec random_single_spec(Rng& rng, int branch_case, bool divisor) {
  SingleSpec spec;
  spec.sigma0 = random_sigma0(rng);
  switch (branch_case) {
    case 1:
      spec.gens = {{1}};
      spec.attach = attachment(spec.gens, 1);
      break;
    case 2:
      spec.gens = {{1}};
      spec.attach = attachment(spec.gens, uniform(rng, 2, 6));
      break;
    case 3:
      spec.gens = random_generators(rng, false);
      spec.attach = attachment(spec.gens, spec.gens.beta[0]);
      break;
    case 4:
      spec.gens = random_generators(rng, false);
      spec.attach = attachment(spec.gens, spec.gens.beta[1]);
      break;
    case 5: {
      spec.gens = random_generators(rng, true);
      const Integer& b0 = spec.gens.beta[0];
      const Integer top = (spec.gens.beta[1] - 1) / b0;  // largest k with k b0 < b1
      const Integer k = 2 + Integer(uniform(rng, 0, static_cast<int>(top) - 2));
      spec.attach = attachment(spec.gens, k * b0);
      break;
    }
    default:
      throw BranchError("case must be 1..5");
  }
  if (divisor) spec.tail = uniform(rng, 0, 7);
  return spec;
}

Configuration single_configuration(const SingleSpec& spec, ElementKind kind) {
  auto points = branch_points(spec.gens, spec.attach).points;
  if (kind == ElementKind::divisor)
    for (Integer i = 0; i < spec.tail; ++i)
      points.push_back(PointDescriptor::free_on(static_cast<int>(points.size()) - 1));
  return {kind, {{spec.sigma0, points}}, {}};
}

std::vector<DualGraph> oracle_enumerate(const OracleBounds& bounds) {
  std::vector<DualGraph> level{e8_minimal_graph()}, shapes = level;
  std::set<std::string> seen{canonical_form(level[0])};
  for (int b = 1; b <= bounds.max_blowups; ++b) {
    std::vector<DualGraph> next;
    for (const auto& g : level)
      for (const auto& step : blowup_choices(g, bounds)) {
        DualGraph h = blow_up(g, step);
        if (seen.insert(canonical_form(h)).second) next.push_back(h);
      }
    shapes.insert(shapes.end(), next.begin(), next.end());
    level = std::move(next);
  }

  std::vector<DualGraph> out;
  std::set<std::string> decorated;
  const bool curves = bounds.kind == ElementKind::curve;
  for (const auto& g : shapes) {
    std::vector<VertexIndex> allowed;
    for (VertexIndex v = 0; v < g.size(); ++v)
      if (decoratable(g, v, bounds)) allowed.push_back(v);
    // Walk all selections of n vertices (with repetition for curves), then
    // every ordering of them.
    for (int n = 1; n <= bounds.max_elements; ++n) {
      std::vector<std::size_t> pick(n, 0);
      while (true) {
        std::vector<VertexIndex> at;
        for (auto p : pick) at.push_back(allowed[p]);
        bool distinct = curves || std::set<VertexIndex>(at.begin(), at.end()).size() == at.size();
        if (distinct) {
          std::sort(at.begin(), at.end());
          do {
            DualGraph h = decorate(g, at, bounds.kind);
            if (is_minimal(h, bounds.kind) && decorated.insert(canonical_form(h)).second)
              out.push_back(std::move(h));
          } while (std::next_permutation(at.begin(), at.end()));
        }
        int k = n - 1;
        while (k >= 0 && pick[k] + 1 == allowed.size()) --k;
        if (k < 0) break;
        ++pick[k];
        for (int i = k + 1; i < n; ++i) pick[i] = pick[k];
      }
    }
  }
  return out;
}

DualGraph random_graph(Rng& rng, const OracleBounds& bounds, int blowups, int min_elements) {
  while (true) {
    DualGraph g = e8_minimal_graph();
    std::vector<VertexIndex> recent;
    for (int step = 0; step < blowups; ++step) {
      VertexIndex target;
      if (!recent.empty() && uniform(rng, 0, 9) < 6)
        target = recent[uniform(rng, std::max(0, static_cast<int>(recent.size()) - 3),
                                static_cast<int>(recent.size()) - 1)];
      else
        target = static_cast<VertexIndex>(uniform(rng, 0, static_cast<int>(g.size()) - 1));
      const bool smooth_ok = !(bounds.avoid_d8 && d8(g, target));
      BlowupStep s;
      if (smooth_ok && uniform(rng, 0, 1) == 0) {
        s = {BlowupKind::smooth_point, g.vertex(target).id, "", {}, ""};
      } else {
        const auto& nb = g.neighbors(target);
        const VertexIndex other = nb[uniform(rng, 0, static_cast<int>(nb.size()) - 1)];
        s = {BlowupKind::intersection_point, g.vertex(target).id, g.vertex(other).id, {}, ""};
      }
      recent.push_back(blow_up_in_place(g, s));
    }

    std::vector<VertexIndex> at;
    for (VertexIndex v = 0; v < g.size(); ++v)
      for (std::size_t k = 0; k < required(g, v, bounds.kind); ++k) at.push_back(v);
    const int lo = std::max(static_cast<int>(at.size()), min_elements);
    if (lo > bounds.max_elements) continue;
    const int count = uniform(rng, lo, bounds.max_elements);
    std::vector<VertexIndex> allowed;
    for (VertexIndex v = 0; v < g.size(); ++v)
      if (decoratable(g, v, bounds) &&
          (bounds.kind == ElementKind::curve || std::find(at.begin(), at.end(), v) == at.end()))
        allowed.push_back(v);
    // Favour the newest components for extra decorations as well.
    std::vector<VertexIndex> pool = allowed;
    for (VertexIndex v : recent)
      if (std::find(allowed.begin(), allowed.end(), v) != allowed.end()) pool.push_back(v);
    bool ok = true;
    while (static_cast<int>(at.size()) < count && ok) {
      if (pool.empty()) {
        ok = false;
        break;
      }
      const std::size_t k = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(pool.size()) - 1));
      const VertexIndex v = pool[k];
      at.push_back(v);
      if (bounds.kind == ElementKind::divisor)
        pool.erase(std::remove(pool.begin(), pool.end(), v), pool.end());
    }
    if (!ok) continue;
    std::shuffle(at.begin(), at.end(), rng);
    DualGraph h = decorate(g, at, bounds.kind);
    if (is_minimal(h, bounds.kind)) return h;
  }
}

}  // namespace e8
