#ifndef E8_ORACLE_HPP
#define E8_ORACLE_HPP

// Seeded generators of decorated resolution graphs used to validate the
// reconstruction algorithms.

#include "e8/plane_branch.hpp"

#include <random>
#include <vector>

namespace e8 {

using Rng = std::mt19937_64;

/// One branch or divisor described by its semigroup and position.
struct SingleSpec {
  BasePoint sigma0;
  SemigroupGenerators gens;
  BranchAttachment attach;
  Integer tail = 0;  // divisors only
};

/// sigma0 is a base vertex 1..7 or a vertex inserted on any E8 edge.
BasePoint random_sigma0(Rng& rng);

/// Random admissible generators with g in {1, 2} fitting the given case
/// (3, 4 or 5), or (1) for cases 1 and 2.
SingleSpec random_single_spec(Rng& rng, int branch_case, bool divisor);

Configuration single_configuration(const SingleSpec& spec, ElementKind kind);

struct OracleBounds {
  int max_blowups = 0;
  int max_elements = 1;
  ElementKind kind = ElementKind::curve;
  bool avoid_d8 = true;  // no smooth blow-ups on D8, no decorations on D8
};

/// All minimal decorated graphs reachable with at most max_blowups blow-ups
/// and between 1 and max_elements arrows (curves) or marks (divisors),
/// deduplicated by canonical form. Feasible only for small bounds.
std::vector<DualGraph> oracle_enumerate(const OracleBounds& bounds);

/// One random minimal decorated graph with exactly `blowups` blow-ups and
/// between min_elements and max_elements decorations. Blow-ups favour
/// recently created components so that elements share long paths.
DualGraph random_graph(Rng& rng, const OracleBounds& bounds, int blowups, int min_elements);

}  // namespace e8

#endif  // E8_ORACLE_HPP
