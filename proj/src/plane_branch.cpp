#include "e8/plane_branch.hpp"

namespace e8 {

GcdSequence derive_e_N(const SemigroupGenerators& s) {
  if (s.beta.empty()) throw BranchError("empty generator sequence");
  GcdSequence out;
  for (std::size_t k = 0; k < s.beta.size(); ++k) {
    if (s.beta[k] <= 0) throw BranchError("generators must be positive");
    if (k == 0) {
      out.e.push_back(s.beta[0]);
      continue;
    }
    if (s.beta[k] <= s.beta[k - 1]) throw BranchError("generators must increase");
    const Integer e = gcd(out.e.back(), s.beta[k]);
    if (e >= out.e.back()) throw BranchError("gcd sequence must strictly decrease");
    out.N.push_back(out.e.back() / e);
    out.e.push_back(e);
  }
  if (out.e.back() != 1) throw BranchError("generators must have gcd 1");
  return out;
}

void check_admissible(const SemigroupGenerators& s) {
  const auto d = derive_e_N(s);
  for (std::size_t k = 1; k + 1 < s.beta.size(); ++k)
    if (s.beta[k + 1] <= d.N[k - 1] * s.beta[k])
      throw BranchError("generator beta_" + std::to_string(k + 1) + " is too small");
}

bool admissible(const SemigroupGenerators& s) {
  try {
    check_admissible(s);
    return true;
  } catch (const BranchError&) {
    return false;
  }
}

std::vector<Integer> puiseux_exponents(const SemigroupGenerators& s) {
  const auto d = derive_e_N(s);
  std::vector<Integer> b;
  if (s.g() == 0) return b;
  b.push_back(s.beta[1]);
  for (std::size_t j = 1; j < s.g(); ++j)
    b.push_back(s.beta[j + 1] - d.N[j - 1] * s.beta[j] + b.back());
  return b;
}

BranchAttachment attachment(const SemigroupGenerators& s, const Integer& ell) {
  check_admissible(s);
  if (ell < 1) throw BranchError("intersection multiplicity must be positive");
  if (s.g() == 0) {
    if (ell == 1) return {1, 0, 1, 0};
    return {ell, 1, 2, 0};
  }
  const Integer& b0 = s.beta[0];
  const Integer& b1 = s.beta[1];
  if (ell == b0) return {ell, b1, 3, 0};
  if (ell == b1) return {ell, b0, 4, 0};
  if (ell % b0 == 0 && ell > b0 && ell < b1) return {ell, b0, 5, ell / b0};
  throw BranchError("no branch with these generators meets the component with multiplicity " +
                    ell.str());
}

int classify_case(const Integer& ell, const Integer& mu) {
  if (ell == 1) return 1;
  if (mu < 1) throw BranchError("mu must be positive");
  if (mu == 1) return 2;
  if (mu > ell) return 3;
  if (mu == ell) throw BranchError("mu equals ell");
  return ell % mu == 0 ? 5 : 4;
}

LocalData local_data(const SemigroupGenerators& s, const BranchAttachment& a) {
  const auto b = puiseux_exponents(s);
  switch (a.branch_case) {
    case 1:
      return {1, {}};
    case 2:
      return {a.ell, {1}};
    case 3:
      return {s.beta[0], b};
    case 4: {
      LocalData d{b[0], {s.beta[0]}};
      for (std::size_t j = 1; j < b.size(); ++j) d.q.push_back(b[j] - b[0] + s.beta[0]);
      return d;
    }
    case 5: {
      const Integer kn = a.k * s.beta[0];
      LocalData d{kn, {s.beta[0]}};
      for (const auto& x : b) d.q.push_back(x - kn + s.beta[0]);
      return d;
    }
  }
  throw BranchError("unknown case");
}

BranchPoints branch_points(const LocalData& d) {
  BranchPoints out;
  Integer ell = d.ell;
  std::vector<Integer> q = d.q;
  int host = -1;
  while (ell > 1) {
    if (q.empty()) throw BranchError("local data ends before the branch is resolved");
    if (q[0] <= 0) throw BranchError("local exponents must be positive");
    const Integer e = gcd(ell, q[0]);
    if (e == ell) throw BranchError("local exponent is not characteristic");
    const Integer b = ell / e, a = q[0] / e;
    // Stern-Brocot descent towards (b, a); left starts at the host divisor,
    // right at the (virtual) curve y = 0.
    Integer lp = 1, lr = 0, rp = 0, rr = 1;
    int left = host, right = -2;
    while (true) {
      const int pos = static_cast<int>(out.points.size());
      out.points.push_back(right == -2 ? PointDescriptor::free_on(left)
                                       : PointDescriptor::satellite_of(left, right));
      const Integer p = lp + rp, r = lr + rr;
      if (p == b && r == a) break;
      if (a * p < r * b) {
        right = pos;
        rp = p;
        rr = r;
      } else {
        left = pos;
        lp = p;
        lr = r;
      }
    }
    host = static_cast<int>(out.points.size()) - 1;
    out.ruptures.push_back(static_cast<std::size_t>(host));
    for (std::size_t j = 1; j < q.size(); ++j) q[j] -= q[0];
    q.erase(q.begin());
    ell = e;
  }
  if (!q.empty()) throw BranchError("local data has unused exponents");
  return out;
}

BranchPoints branch_points(const SemigroupGenerators& s, const BranchAttachment& a) {
  return branch_points(local_data(s, a));
}

DualGraph gamma1_from_generators(const SemigroupGenerators& s, const BranchAttachment& a) {
  DualGraph g;
  const VertexIndex host = g.add_vertex("0", -1);
  const auto made = apply_points(g, host, branch_points(s, a).points);
  g.add_arrow(1, made.empty() ? host : made.back());
  return g;
}

DualGraph local_resolution(const std::vector<PointDescriptor>& points) {
  DualGraph g;
  std::vector<VertexIndex> made;
  for (std::size_t p = 0; p < points.size(); ++p) {
    const auto& d = points[p];
    if (p == 0) {
      if (d.kind != PointDescriptor::Kind::free_point || d.a != -1)
        throw GraphError("first point must be a free point of sigma0");
      made.push_back(g.add_vertex(g.next_id(), -1));
      continue;
    }
    BlowupStep step;
    if (d.kind == PointDescriptor::Kind::free_point) {
      step = {BlowupKind::smooth_point, g.vertex(made.at(d.a)).id, "", {}, ""};
    } else if (d.a == -1) {
      // The other branch of the crossing is sigma0, which is not exceptional here.
      step = {BlowupKind::smooth_point, g.vertex(made.at(d.b)).id, "", {}, ""};
    } else {
      step = {BlowupKind::intersection_point, g.vertex(made.at(d.a)).id,
              g.vertex(made.at(d.b)).id, {}, ""};
    }
    made.push_back(blow_up_in_place(g, step));
  }
  return g;
}

namespace {

// N_from * ... * N_to with N[k - 1] = N_k; 1 when the range is empty.
Integer n_product(const std::vector<Integer>& N, std::size_t from, std::size_t to) {
  Integer p = 1;
  for (std::size_t k = from; k <= to && k >= 1; ++k) p *= N.at(k - 1);
  return p;
}

}  // namespace

Gamma1Multiplicities gamma1_multiplicities(const SemigroupGenerators& s,
                                           const BranchAttachment& a,
                                           const Integer& m_base) {
  Gamma1Multiplicities out;
  if (a.branch_case == 1) return out;
  if (a.branch_case == 2) {
    out.tau = {m_base + 1};
    out.delta = a.ell * (m_base + 1);
    return out;
  }
  const auto d = derive_e_N(s);
  const std::size_t g = s.g();
  out.tau.push_back(m_base + s.beta[0]);
  for (std::size_t j = 1; j <= g; ++j) {
    Integer lead;
    switch (a.branch_case) {
      case 3:
        lead = n_product(d.N, 1, j - 1) * m_base;
        break;
      case 4:
        lead = n_product(d.N, 2, j - 1) * (s.beta[1] / d.e[1]) * m_base;
        break;
      case 5:
        lead = n_product(d.N, 1, j - 1) * a.k * m_base;
        break;
      default:
        throw BranchError("unknown case");
    }
    if (a.branch_case == 4 && j == 1) {
      // The first deadend is the vertex meeting sigma0; its weight along
      // sigma0 is the length of the first Euclidean step.
      const Integer steps = (s.beta[1] + s.beta[0] - 1) / s.beta[0];
      out.tau.push_back(steps * m_base + s.beta[1]);
      out.rupture.push_back(lead + d.N[0] * s.beta[1]);
      continue;
    }
    out.tau.push_back(lead + s.beta[j]);
    out.rupture.push_back(d.N[j - 1] * out.tau.back());
  }
  out.delta = a.branch_case == 3   ? out.tau[0]
              : a.branch_case == 4 ? out.tau[1]
                                   : a.k * out.tau[0];
  for (std::size_t j = 1; j <= g; ++j) {
    if (out.tau[j] <= out.tau[j - 1]) throw BranchError("deadend multiplicities must increase");
    if (out.rupture[j - 1] <= out.tau[j]) throw BranchError("rupture below its deadend");
    if (j < g && out.rupture[j - 1] >= out.tau[j + 1])
      throw BranchError("rupture above the next deadend");
  }
  return out;
}

SemigroupGenerators recover_generators(int branch_case, const std::vector<Integer>& m,
                                       const Integer& ell, const Integer& mu,
                                       const Integer& m_base, std::size_t* used) {
  auto need = [&](std::size_t i) -> const Integer& {
    if (i >= m.size()) throw BranchError("too few exponents to recover the generators");
    return m[i];
  };
  if (classify_case(ell, mu) != branch_case) throw BranchError("case does not match ell and mu");
  std::size_t consumed = 0;
  SemigroupGenerators s;
  if (branch_case == 1) {
    s.beta = {1};
  } else if (branch_case == 2) {
    if (need(0) != m_base + 1) throw BranchError("first exponent does not fit case 2");
    s.beta = {1};
    consumed = 1;
  } else {
    if (need(0) != m_base + mu) throw BranchError("first exponent does not fit the case");
    Integer k = 1;
    switch (branch_case) {
      case 3:
        s.beta = {ell, mu};
        consumed = 1;
        break;
      case 4:
        s.beta = {mu, ell};
        consumed = 1;
        break;
      default:
        k = ell / mu;
        s.beta = {mu, need(1) - k * m_base};
        consumed = 2;
        break;
    }
    std::vector<Integer> e{s.beta[0]}, N;
    auto extend = [&](const Integer& b) {
      const Integer next = gcd(e.back(), b);
      if (next >= e.back())
        throw BranchError("recovered generators are not a plane-branch semigroup");
      N.push_back(e.back() / next);
      e.push_back(next);
    };
    extend(s.beta[1]);
    while (e.back() > 1) {
      const std::size_t j = s.beta.size();
      Integer lead;
      if (branch_case == 3)
        lead = n_product(N, 1, j - 1) * m_base;
      else if (branch_case == 4)
        lead = n_product(N, 2, j - 1) * (s.beta[1] / e[1]) * m_base;
      else
        lead = n_product(N, 1, j - 1) * k * m_base;
      const Integer b = need(consumed) - lead;
      if (b <= s.beta.back()) throw BranchError("recovered generators must increase");
      extend(b);
      s.beta.push_back(b);
      ++consumed;
    }
  }
  check_admissible(s);
  attachment(s, ell);  // rejects impossible tangency
  if (used) *used = consumed;
  return s;
}

}  // namespace e8
