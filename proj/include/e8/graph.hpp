#ifndef E8_GRAPH_HPP
#define E8_GRAPH_HPP

// Decorated dual resolution graphs over the E8 surface singularity.
//
// A graph is a tree of exceptional components. Each vertex carries its
// self-intersection and, for components of the minimal resolution, the label
// 1..8 of the E8 component it descends from. Arrows record where the strict
// transform of branch i meets the exceptional divisor; marks (in variable
// order) record the components defining divisorial valuations.

#include "e8/integer.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace e8 {

using VertexIndex = std::size_t;

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Vertex {
  std::string id;
  int self_intersection = -1;
  std::optional<int> base;
};

struct Arrow {
  int branch = 1;
  VertexIndex at = 0;
};

enum class BlowupKind { smooth_point, intersection_point };

/// One blow-up of the resolution process. For a smooth point the target is a
/// single vertex; for an intersection point it is the edge (target, other).
/// Arrows of the branches listed in carried_branches ride the blown-up point
/// and move to the new vertex.
struct BlowupStep {
  BlowupKind kind = BlowupKind::smooth_point;
  std::string target;
  std::string other;
  std::vector<int> carried_branches;
  std::string new_id;  // empty: pick the next free numeric id
};

struct BlowupRecord {
  BlowupStep step;
  std::string created;
};

class DualGraph {
 public:
  VertexIndex add_vertex(std::string id, int self_intersection,
                         std::optional<int> base = std::nullopt);
  void add_edge(VertexIndex a, VertexIndex b);
  void remove_edge(VertexIndex a, VertexIndex b);
  void add_arrow(int branch, VertexIndex at);
  void add_mark(VertexIndex at);
  void set_self_intersection(VertexIndex v, int value);
  void move_arrow(std::size_t arrow_index, VertexIndex to);
  void record(BlowupRecord rec) { history_.push_back(std::move(rec)); }

  std::size_t size() const { return vertices_.size(); }
  const Vertex& vertex(VertexIndex v) const { return vertices_.at(v); }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<std::pair<VertexIndex, VertexIndex>>& edges() const {
    return edges_;
  }
  const std::vector<VertexIndex>& neighbors(VertexIndex v) const {
    return adjacency_.at(v);
  }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const std::vector<VertexIndex>& marks() const { return marks_; }
  const std::vector<BlowupRecord>& history() const { return history_; }

  std::size_t degree(VertexIndex v) const { return adjacency_.at(v).size(); }
  std::size_t arrows_at(VertexIndex v) const;
  bool has_edge(VertexIndex a, VertexIndex b) const;
  std::optional<VertexIndex> find(const std::string& id) const;
  VertexIndex index_of(const std::string& id) const;  // throws GraphError
  std::optional<VertexIndex> base_vertex(int label) const;

  /// Distinct branch indices carrying arrows, ascending.
  std::vector<int> branches() const;

  /// Smallest numeric id larger than every numeric id in use.
  std::string next_id() const;

  /// Checks tree shape, negative self-intersections, unimodular negative
  /// definite intersection form and decoration targets. Throws GraphError.
  void validate() const;

 private:
  std::vector<Vertex> vertices_;
  std::vector<std::vector<VertexIndex>> adjacency_;
  std::vector<std::pair<VertexIndex, VertexIndex>> edges_;
  std::vector<Arrow> arrows_;
  std::vector<VertexIndex> marks_;
  std::vector<BlowupRecord> history_;
  std::map<std::string, VertexIndex> ids_;
};

/// Exact integer matrix indexed like the vertices of its graph.
class MultiplicityMatrix {
 public:
  MultiplicityMatrix() = default;
  explicit MultiplicityMatrix(std::size_t n) : n_(n), data_(n * n) {}

  std::size_t size() const { return n_; }
  const Integer& operator()(VertexIndex a, VertexIndex b) const {
    return data_[a * n_ + b];
  }
  Integer& operator()(VertexIndex a, VertexIndex b) { return data_[a * n_ + b]; }

 private:
  std::size_t n_ = 0;
  std::vector<Integer> data_;
};

/// Minimal resolution of E8: vertices "1".."8", chain 1-2-3-5-6-7-8 with 4
/// attached to 3, all self-intersections -2.
DualGraph e8_minimal_graph();

DualGraph blow_up(const DualGraph& g, const BlowupStep& step);

/// In-place variant used by builders; returns the new vertex.
VertexIndex blow_up_in_place(DualGraph& g, const BlowupStep& step);

/// Contracts a (-1)-vertex with at most two neighbours and no decorations.
DualGraph blow_down(const DualGraph& g, VertexIndex v);

/// (D_a . D_b): self-intersection on the diagonal, 1 on edges.
std::vector<std::vector<Integer>> intersection_matrix(const DualGraph& g);

/// det(-(D_a . D_b)), computed by elimination along the tree.
Integer negated_determinant(const DualGraph& g);

/// m = -(D . D)^{-1}. Throws GraphError unless the form is unimodular and
/// negative definite.
MultiplicityMatrix multiplicity_matrix(const DualGraph& g);

/// m^i_sigma for every branch i: the sum over arrows of branch i of the
/// corresponding matrix columns.
std::map<int, std::vector<Integer>> multiplicities_from_arrows(
    const DualGraph& g, const MultiplicityMatrix& m);
std::map<int, std::vector<Integer>> multiplicities_from_arrows(
    const DualGraph& g);

/// Euler characteristic of the part of D_v not meeting other components
/// (and, if count_arrows, not meeting strict transforms).
int euler_smooth_part(const DualGraph& g, VertexIndex v, bool count_arrows);

/// Vertex path a -> b inclusive.
std::vector<VertexIndex> geodesic(const DualGraph& g, VertexIndex a,
                                  VertexIndex b);

/// Canonical string of the decorated tree. Arrow branch indices are replaced
/// by relabel[branch] when a relabeling is supplied.
std::string canonical_form(const DualGraph& g,
                           const std::map<int, int>& relabel = {});

bool canonically_isomorphic(const DualGraph& a, const DualGraph& b,
                            const std::map<int, int>& relabel_b = {});

/// One vertex inserted between two adjacent E8 components i < j, with
/// m_{k,new} = s1 m_{ki} + s2 m_{kj}.
struct EdgeInsertion {
  int i = 0;
  int j = 0;
  Integer s1;
  Integer s2;
};

/// Graph of the resolution obtained from the minimal one by blowing up only
/// intersection points so that each requested vertex appears.
DualGraph build_pi_prime(const std::vector<EdgeInsertion>& insertions);

/// Vertex carrying the given insertion in a graph returned by build_pi_prime.
VertexIndex pi_prime_vertex(const DualGraph& g, const EdgeInsertion& ins);

/// E8 edges as (i, j) with i < j.
const std::vector<std::pair<int, int>>& e8_edges();

/// Row-major 8x8 matrix of the minimal resolution, indices 1..8 -> 0..7.
const std::vector<std::vector<long>>& e8_multiplicities();

std::string to_json(const DualGraph& g);
DualGraph graph_from_json(const std::string& text);

std::string to_dot(const DualGraph& g);

}  // namespace e8

#endif  // E8_GRAPH_HPP
