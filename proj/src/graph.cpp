#include "e8/graph.hpp"

#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <deque>
#include <set>
#include <sstream>
#include <tuple>

namespace e8 {

// ---------------------------------------------------------------- DualGraph

VertexIndex DualGraph::add_vertex(std::string id, int self_intersection,
                                  std::optional<int> base) {
  if (ids_.count(id) != 0) throw GraphError("duplicate vertex id '" + id + "'");
  const VertexIndex v = vertices_.size();
  ids_.emplace(id, v);
  vertices_.push_back(Vertex{std::move(id), self_intersection, base});
  adjacency_.emplace_back();
  return v;
}

void DualGraph::add_edge(VertexIndex a, VertexIndex b) {
  if (a >= size() || b >= size()) throw GraphError("edge endpoint out of range");
  if (a == b) throw GraphError("loop at vertex '" + vertices_[a].id + "'");
  if (has_edge(a, b)) throw GraphError("duplicate edge");
  edges_.emplace_back(a, b);
  adjacency_[a].push_back(b);
  adjacency_[b].push_back(a);
}

void DualGraph::remove_edge(VertexIndex a, VertexIndex b) {
  auto it = std::find_if(edges_.begin(), edges_.end(), [&](const auto& e) {
    return (e.first == a && e.second == b) || (e.first == b && e.second == a);
  });
  if (it == edges_.end()) throw GraphError("no such edge");
  edges_.erase(it);
  auto drop = [](std::vector<VertexIndex>& adj, VertexIndex x) {
    adj.erase(std::find(adj.begin(), adj.end(), x));
  };
  drop(adjacency_[a], b);
  drop(adjacency_[b], a);
}

void DualGraph::add_arrow(int branch, VertexIndex at) {
  if (at >= size()) throw GraphError("arrow target out of range");
  if (branch < 1) throw GraphError("branch indices start at 1");
  arrows_.push_back(Arrow{branch, at});
}

void DualGraph::add_mark(VertexIndex at) {
  if (at >= size()) throw GraphError("mark target out of range");
  if (std::find(marks_.begin(), marks_.end(), at) != marks_.end())
    throw GraphError("vertex '" + vertices_[at].id + "' marked twice");
  marks_.push_back(at);
}

void DualGraph::set_self_intersection(VertexIndex v, int value) {
  vertices_.at(v).self_intersection = value;
}

void DualGraph::move_arrow(std::size_t arrow_index, VertexIndex to) {
  arrows_.at(arrow_index).at = to;
}

std::size_t DualGraph::arrows_at(VertexIndex v) const {
  return static_cast<std::size_t>(std::count_if(
      arrows_.begin(), arrows_.end(), [v](const Arrow& a) { return a.at == v; }));
}

bool DualGraph::has_edge(VertexIndex a, VertexIndex b) const {
  const auto& adj = adjacency_.at(a);
  return std::find(adj.begin(), adj.end(), b) != adj.end();
}

std::optional<VertexIndex> DualGraph::find(const std::string& id) const {
  auto it = ids_.find(id);
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

VertexIndex DualGraph::index_of(const std::string& id) const {
  auto v = find(id);
  if (!v) throw GraphError("unknown vertex '" + id + "'");
  return *v;
}

std::optional<VertexIndex> DualGraph::base_vertex(int label) const {
  for (VertexIndex v = 0; v < size(); ++v)
    if (vertices_[v].base == label) return v;
  return std::nullopt;
}

std::vector<int> DualGraph::branches() const {
  std::set<int> s;
  for (const auto& a : arrows_) s.insert(a.branch);
  return {s.begin(), s.end()};
}

std::string DualGraph::next_id() const {
  long best = 0;
  for (const auto& v : vertices_) {
    long x = 0;
    auto [p, ec] = std::from_chars(v.id.data(), v.id.data() + v.id.size(), x);
    if (ec == std::errc() && p == v.id.data() + v.id.size()) best = std::max(best, x);
  }
  std::string id = std::to_string(best + 1);
  while (ids_.count(id) != 0) id += "'";
  return id;
}

namespace {

// Parent array and breadth-first order of the tree rooted at root.
void bfs(const DualGraph& g, VertexIndex root, std::vector<VertexIndex>& order,
         std::vector<VertexIndex>& parent) {
  const VertexIndex none = g.size();
  order.clear();
  parent.assign(g.size(), none);
  std::vector<char> seen(g.size(), 0);
  order.push_back(root);
  seen[root] = 1;
  for (std::size_t k = 0; k < order.size(); ++k) {
    const VertexIndex v = order[k];
    for (VertexIndex u : g.neighbors(v)) {
      if (seen[u]) continue;
      seen[u] = 1;
      parent[u] = v;
      order.push_back(u);
    }
  }
}

// det of -(D.D) restricted to each rooted subtree, and the product of the
// children's values.
struct SubtreeDets {
  std::vector<Integer> full;      // det of subtree(v)
  std::vector<Integer> children;  // prod over children c of det subtree(c)
};

SubtreeDets subtree_dets(const DualGraph& g, const std::vector<VertexIndex>& order,
                         const std::vector<VertexIndex>& parent) {
  SubtreeDets d;
  d.full.assign(g.size(), 0);
  d.children.assign(g.size(), 1);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const VertexIndex v = *it;
    std::vector<VertexIndex> kids;
    for (VertexIndex u : g.neighbors(v))
      if (parent[u] == v) kids.push_back(u);
    Integer prod = 1;
    for (VertexIndex c : kids) prod *= d.full[c];
    Integer value = Integer(-g.vertex(v).self_intersection) * prod;
    for (VertexIndex c : kids) {
      Integer others = d.children[c];
      for (VertexIndex c2 : kids)
        if (c2 != c) others *= d.full[c2];
      value -= others;
    }
    d.full[v] = value;
    d.children[v] = prod;
  }
  return d;
}

}  // namespace

void DualGraph::validate() const {
  if (vertices_.empty()) throw GraphError("empty graph");
  if (edges_.size() + 1 != vertices_.size()) throw GraphError("graph is not a tree");
  std::vector<VertexIndex> order, parent;
  bfs(*this, 0, order, parent);
  if (order.size() != size()) throw GraphError("graph is not connected");
  for (const auto& v : vertices_)
    if (v.self_intersection > -1)
      throw GraphError("self-intersection of '" + v.id + "' must be negative");
  const SubtreeDets d = subtree_dets(*this, order, parent);
  for (VertexIndex v = 0; v < size(); ++v)
    if (d.full[v] <= 0) throw GraphError("intersection form is not negative definite");
  if (d.full[0] != 1) throw GraphError("intersection form is not unimodular");
}

// ------------------------------------------------------------ construction

const std::vector<std::pair<int, int>>& e8_edges() {
  static const std::vector<std::pair<int, int>> edges = {
      {1, 2}, {2, 3}, {3, 4}, {3, 5}, {5, 6}, {6, 7}, {7, 8}};
  return edges;
}

const std::vector<std::vector<long>>& e8_multiplicities() {
  static const std::vector<std::vector<long>> m = {
      {4, 7, 10, 5, 8, 6, 4, 2},         {7, 14, 20, 10, 16, 12, 8, 4},
      {10, 20, 30, 15, 24, 18, 12, 6},   {5, 10, 15, 8, 12, 9, 6, 3},
      {8, 16, 24, 12, 20, 15, 10, 5},    {6, 12, 18, 9, 15, 12, 8, 4},
      {4, 8, 12, 6, 10, 8, 6, 3},        {2, 4, 6, 3, 5, 4, 3, 2}};
  return m;
}

DualGraph e8_minimal_graph() {
  DualGraph g;
  for (int k = 1; k <= 8; ++k) g.add_vertex(std::to_string(k), -2, k);
  for (auto [i, j] : e8_edges())
    g.add_edge(static_cast<VertexIndex>(i - 1), static_cast<VertexIndex>(j - 1));
  return g;
}

VertexIndex blow_up_in_place(DualGraph& g, const BlowupStep& step) {
  const std::string id = step.new_id.empty() ? g.next_id() : step.new_id;
  auto carried = [&](int branch) {
    return std::find(step.carried_branches.begin(), step.carried_branches.end(),
                     branch) != step.carried_branches.end();
  };
  if (step.kind == BlowupKind::smooth_point) {
    const VertexIndex t = g.index_of(step.target);
    const VertexIndex v = g.add_vertex(id, -1);
    g.add_edge(t, v);
    g.set_self_intersection(t, g.vertex(t).self_intersection - 1);
    for (std::size_t k = 0; k < g.arrows().size(); ++k)
      if (g.arrows()[k].at == t && carried(g.arrows()[k].branch)) g.move_arrow(k, v);
    g.record({step, id});
    return v;
  }
  const VertexIndex a = g.index_of(step.target);
  const VertexIndex b = g.index_of(step.other);
  if (!g.has_edge(a, b))
    throw GraphError("'" + step.target + "' and '" + step.other + "' do not meet");
  g.remove_edge(a, b);
  const VertexIndex v = g.add_vertex(id, -1);
  g.add_edge(a, v);
  g.add_edge(v, b);
  g.set_self_intersection(a, g.vertex(a).self_intersection - 1);
  g.set_self_intersection(b, g.vertex(b).self_intersection - 1);
  for (std::size_t k = 0; k < g.arrows().size(); ++k) {
    const auto& arrow = g.arrows()[k];
    if ((arrow.at == a || arrow.at == b) && carried(arrow.branch)) g.move_arrow(k, v);
  }
  g.record({step, id});
  return v;
}

DualGraph blow_up(const DualGraph& g, const BlowupStep& step) {
  DualGraph out = g;
  blow_up_in_place(out, step);
  return out;
}

DualGraph blow_down(const DualGraph& g, VertexIndex v) {
  if (g.vertex(v).self_intersection != -1) throw GraphError("only (-1)-curves contract");
  if (g.degree(v) > 2) throw GraphError("contraction would break normal crossings");
  if (g.arrows_at(v) != 0 ||
      std::find(g.marks().begin(), g.marks().end(), v) != g.marks().end())
    throw GraphError("decorated vertex cannot be contracted");
  DualGraph out;
  std::vector<VertexIndex> remap(g.size(), g.size());
  for (VertexIndex u = 0; u < g.size(); ++u) {
    if (u == v) continue;
    int self = g.vertex(u).self_intersection;
    if (g.has_edge(u, v)) self += 1;
    remap[u] = out.add_vertex(g.vertex(u).id, self, g.vertex(u).base);
  }
  for (auto [a, b] : g.edges())
    if (a != v && b != v) out.add_edge(remap[a], remap[b]);
  if (g.degree(v) == 2)
    out.add_edge(remap[g.neighbors(v)[0]], remap[g.neighbors(v)[1]]);
  for (const auto& a : g.arrows()) out.add_arrow(a.branch, remap[a.at]);
  for (VertexIndex m : g.marks()) out.add_mark(remap[m]);
  return out;
}

// ------------------------------------------------------------ linear algebra

std::vector<std::vector<Integer>> intersection_matrix(const DualGraph& g) {
  std::vector<std::vector<Integer>> m(g.size(), std::vector<Integer>(g.size(), 0));
  for (VertexIndex v = 0; v < g.size(); ++v) m[v][v] = g.vertex(v).self_intersection;
  for (auto [a, b] : g.edges()) m[a][b] = m[b][a] = 1;
  return m;
}

Integer negated_determinant(const DualGraph& g) {
  std::vector<VertexIndex> order, parent;
  bfs(g, 0, order, parent);
  if (order.size() != g.size()) throw GraphError("graph is not connected");
  return subtree_dets(g, order, parent).full[0];
}

// Column delta of -(D.D)^{-1} is the product of the determinants of the
// components of the graph with the geodesic [sigma, delta] removed.
MultiplicityMatrix multiplicity_matrix(const DualGraph& g) {
  g.validate();
  const std::size_t n = g.size();
  MultiplicityMatrix m(n);
  std::vector<VertexIndex> order, parent;
  for (VertexIndex delta = 0; delta < n; ++delta) {
    bfs(g, delta, order, parent);
    const SubtreeDets d = subtree_dets(g, order, parent);
    if (d.full[delta] != 1) throw GraphError("intersection form is not unimodular");
    m(delta, delta) = d.children[delta];
    for (std::size_t k = 1; k < order.size(); ++k) {
      const VertexIndex u = order[k];
      const Integer& above = m(parent[u], delta);
      if (above % d.full[u] != 0) throw GraphError("non-integral multiplicity");
      m(u, delta) = above / d.full[u] * d.children[u];
    }
  }
  return m;
}

std::map<int, std::vector<Integer>> multiplicities_from_arrows(
    const DualGraph& g, const MultiplicityMatrix& m) {
  std::map<int, std::vector<Integer>> out;
  for (const auto& a : g.arrows()) {
    auto& col = out[a.branch];
    if (col.empty()) col.assign(g.size(), 0);
    for (VertexIndex s = 0; s < g.size(); ++s) col[s] += m(s, a.at);
  }
  return out;
}

std::map<int, std::vector<Integer>> multiplicities_from_arrows(const DualGraph& g) {
  if (g.arrows().empty()) throw GraphError("graph has no arrows");
  return multiplicities_from_arrows(g, multiplicity_matrix(g));
}

int euler_smooth_part(const DualGraph& g, VertexIndex v, bool count_arrows) {
  int chi = 2 - static_cast<int>(g.degree(v));
  if (count_arrows) chi -= static_cast<int>(g.arrows_at(v));
  return chi;
}

std::vector<VertexIndex> geodesic(const DualGraph& g, VertexIndex a, VertexIndex b) {
  std::vector<VertexIndex> order, parent;
  bfs(g, b, order, parent);
  std::vector<VertexIndex> path{a};
  while (path.back() != b) {
    const VertexIndex p = parent[path.back()];
    if (p == g.size()) throw GraphError("vertices are not connected");
    path.push_back(p);
  }
  return path;
}

// ------------------------------------------------------------ canonical form

namespace {

std::string encode(const DualGraph& g, VertexIndex v, VertexIndex from,
                   const std::vector<std::string>& labels) {
  std::vector<std::string> kids;
  for (VertexIndex u : g.neighbors(v))
    if (u != from) kids.push_back(encode(g, u, v, labels));
  std::sort(kids.begin(), kids.end());
  std::string s = "(" + labels[v];
  for (const auto& k : kids) s += k;
  return s + ")";
}

std::vector<VertexIndex> centers(const DualGraph& g) {
  std::vector<std::size_t> deg(g.size());
  std::vector<VertexIndex> layer;
  for (VertexIndex v = 0; v < g.size(); ++v) {
    deg[v] = g.degree(v);
    if (deg[v] <= 1) layer.push_back(v);
  }
  std::size_t remaining = g.size();
  while (remaining > 2) {
    remaining -= layer.size();
    std::vector<VertexIndex> next;
    for (VertexIndex v : layer)
      for (VertexIndex u : g.neighbors(v))
        if (--deg[u] == 1) next.push_back(u);
    layer = std::move(next);
  }
  return layer;
}

}  // namespace

std::string canonical_form(const DualGraph& g, const std::map<int, int>& relabel) {
  if (g.size() == 0) return "()";
  std::vector<std::string> labels(g.size());
  std::vector<std::vector<int>> arrows(g.size());
  for (const auto& a : g.arrows()) {
    auto it = relabel.find(a.branch);
    arrows[a.at].push_back(it == relabel.end() ? a.branch : it->second);
  }
  std::vector<std::vector<int>> marks(g.size());
  for (std::size_t k = 0; k < g.marks().size(); ++k)
    marks[g.marks()[k]].push_back(static_cast<int>(k + 1));
  for (VertexIndex v = 0; v < g.size(); ++v) {
    std::ostringstream os;
    os << g.vertex(v).self_intersection << ':';
    if (g.vertex(v).base) os << *g.vertex(v).base;
    std::sort(arrows[v].begin(), arrows[v].end());
    os << ":a";
    for (int b : arrows[v]) os << b << ',';
    os << ":m";
    for (int k : marks[v]) os << k << ',';
    labels[v] = os.str();
  }
  std::string best;
  for (VertexIndex c : centers(g)) {
    std::string s = encode(g, c, g.size(), labels);
    if (best.empty() || s < best) best = std::move(s);
  }
  return best;
}

bool canonically_isomorphic(const DualGraph& a, const DualGraph& b,
                            const std::map<int, int>& relabel_b) {
  if (a.size() != b.size() || a.arrows().size() != b.arrows().size() ||
      a.marks().size() != b.marks().size())
    return false;
  return canonical_form(a) == canonical_form(b, relabel_b);
}

// ------------------------------------------------------------------ pi prime

namespace {

using InsertionKey = std::tuple<int, int, Integer, Integer>;

VertexIndex insert_on_edge(DualGraph& g, const EdgeInsertion& ins,
                           std::map<InsertionKey, VertexIndex>& made) {
  int i = ins.i, j = ins.j;
  Integer s1 = ins.s1, s2 = ins.s2;
  if (i > j) {
    std::swap(i, j);
    std::swap(s1, s2);
  }
  if (std::find(e8_edges().begin(), e8_edges().end(), std::make_pair(i, j)) ==
      e8_edges().end())
    throw GraphError("(" + std::to_string(i) + "," + std::to_string(j) +
                     ") is not an edge of E8");
  if (s1 <= 0 || s2 <= 0) throw GraphError("insertion weights must be positive");
  if (gcd(s1, s2) != 1) throw GraphError("insertion weights must be coprime");
  Integer lp = 1, lq = 0, rp = 0, rq = 1;
  VertexIndex left = *g.base_vertex(i), right = *g.base_vertex(j);
  while (true) {
    const Integer p = lp + rp, q = lq + rq;
    const InsertionKey key{i, j, p, q};
    VertexIndex mid;
    if (auto it = made.find(key); it != made.end()) {
      mid = it->second;
    } else {
      BlowupStep step{BlowupKind::intersection_point, g.vertex(left).id,
                      g.vertex(right).id, {}, {}};
      mid = blow_up_in_place(g, step);
      made.emplace(key, mid);
    }
    if (p == s1 && q == s2) return mid;
    if (s2 * p < q * s1) {
      right = mid;
      rp = p;
      rq = q;
    } else {
      left = mid;
      lp = p;
      lq = q;
    }
  }
}

}  // namespace

DualGraph build_pi_prime(const std::vector<EdgeInsertion>& insertions) {
  DualGraph g = e8_minimal_graph();
  std::map<InsertionKey, VertexIndex> made;
  for (const auto& ins : insertions) insert_on_edge(g, ins, made);
  return g;
}

VertexIndex pi_prime_vertex(const DualGraph& g, const EdgeInsertion& ins) {
  const auto bi = g.base_vertex(ins.i), bj = g.base_vertex(ins.j);
  if (!bi || !bj) throw GraphError("graph lacks E8 base tags");
  const MultiplicityMatrix m = multiplicity_matrix(g);
  std::vector<VertexIndex> base(8);
  for (int k = 1; k <= 8; ++k) base[k - 1] = *g.base_vertex(k);
  for (VertexIndex v : geodesic(g, *bi, *bj)) {
    bool match = true;
    for (int k = 0; k < 8 && match; ++k)
      match = m(base[k], v) == ins.s1 * m(base[k], *bi) + ins.s2 * m(base[k], *bj);
    if (match) return v;
  }
  throw GraphError("insertion not present in graph");
}

// -------------------------------------------------------------- formats

std::string to_json(const DualGraph& g) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["vertices"] = ordered_json::array();
  for (const auto& v : g.vertices()) {
    ordered_json jv;
    jv["id"] = v.id;
    jv["self"] = v.self_intersection;
    jv["base"] = v.base ? ordered_json(*v.base) : ordered_json(nullptr);
    j["vertices"].push_back(jv);
  }
  j["edges"] = ordered_json::array();
  for (auto [a, b] : g.edges())
    j["edges"].push_back(ordered_json::array({g.vertex(a).id, g.vertex(b).id}));
  j["arrows"] = ordered_json::array();
  for (const auto& a : g.arrows()) {
    ordered_json ja;
    ja["branch"] = a.branch;
    ja["at"] = g.vertex(a.at).id;
    j["arrows"].push_back(ja);
  }
  j["marks"] = ordered_json::array();
  for (VertexIndex m : g.marks()) j["marks"].push_back(g.vertex(m).id);
  return j.dump(2) + "\n";
}

DualGraph graph_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw GraphError(std::string("malformed graph JSON: ") + e.what());
  }
  DualGraph g;
  try {
    for (const auto& jv : j.at("vertices")) {
      std::optional<int> base;
      if (jv.contains("base") && !jv.at("base").is_null()) base = jv.at("base").get<int>();
      g.add_vertex(jv.at("id").get<std::string>(), jv.at("self").get<int>(), base);
    }
    for (const auto& je : j.at("edges"))
      g.add_edge(g.index_of(je.at(0).get<std::string>()),
                 g.index_of(je.at(1).get<std::string>()));
    if (j.contains("arrows"))
      for (const auto& ja : j.at("arrows"))
        g.add_arrow(ja.at("branch").get<int>(), g.index_of(ja.at("at").get<std::string>()));
    if (j.contains("marks"))
      for (const auto& jm : j.at("marks")) g.add_mark(g.index_of(jm.get<std::string>()));
  } catch (const nlohmann::json::exception& e) {
    throw GraphError(std::string("malformed graph JSON: ") + e.what());
  }
  g.validate();
  return g;
}

std::string to_dot(const DualGraph& g) {
  std::ostringstream os;
  os << "graph resolution {\n";
  std::vector<char> marked(g.size(), 0);
  for (VertexIndex m : g.marks()) marked[m] = 1;
  for (VertexIndex v = 0; v < g.size(); ++v) {
    os << "  \"" << g.vertex(v).id << "\" [label=\"" << g.vertex(v).id << " ("
       << g.vertex(v).self_intersection << ")\"";
    if (marked[v]) os << ", shape=doublecircle";
    os << "];\n";
  }
  for (auto [a, b] : g.edges())
    os << "  \"" << g.vertex(a).id << "\" -- \"" << g.vertex(b).id << "\";\n";
  for (std::size_t k = 0; k < g.arrows().size(); ++k) {
    const auto& a = g.arrows()[k];
    os << "  \"arrow" << k << "\" [shape=plaintext, label=\"C" << a.branch << "\"];\n";
    os << "  \"" << g.vertex(a.at).id << "\" -- \"arrow" << k
       << "\" [dir=forward, arrowhead=normal];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace e8
