#ifndef E8_PLANE_BRANCH_HPP
#define E8_PLANE_BRANCH_HPP

// Semigroups of plane branches and the graph of a branch over a smooth point
// of a component sigma0.

#include "e8/resolution.hpp"

#include <stdexcept>
#include <vector>

namespace e8 {

class BranchError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Minimal generators beta_0 < ... < beta_g of the value semigroup.
struct SemigroupGenerators {
  std::vector<Integer> beta;

  std::size_t g() const { return beta.size() - 1; }
  friend bool operator==(const SemigroupGenerators&, const SemigroupGenerators&) = default;
};

/// e_k = gcd(beta_0..beta_k) for k = 0..g and N_k = e_{k-1}/e_k stored as
/// N[k - 1] for k = 1..g.
struct GcdSequence {
  std::vector<Integer> e;
  std::vector<Integer> N;
};

/// Throws BranchError unless the gcds strictly decrease to 1.
GcdSequence derive_e_N(const SemigroupGenerators& s);

/// Also requires beta_{k+1} > N_k beta_k. Throws BranchError.
void check_admissible(const SemigroupGenerators& s);
bool admissible(const SemigroupGenerators& s);

/// Characteristic exponents beta_1..beta_g of a Puiseux parametrization.
std::vector<Integer> puiseux_exponents(const SemigroupGenerators& s);

/// Intersection data of the branch with D_sigma0 at the point P.
/// mu is the table value: 1 in case 2, beta_1 in case 3, beta_0 in cases 4
/// and 5, 0 in case 1. k is the tangency factor of case 5.
struct BranchAttachment {
  Integer ell = 1;
  Integer mu = 0;
  int branch_case = 1;
  Integer k = 0;
};

/// Attachment for a branch with generators s meeting D_sigma0 with
/// multiplicity ell. Throws BranchError when no such position exists.
BranchAttachment attachment(const SemigroupGenerators& s, const Integer& ell);

/// Case number from ell and mu = m_1(B) - ell m_{sigma0 sigma0}.
int classify_case(const Integer& ell, const Integer& mu);

/// Parametrization x = tau^ell, y = sum tau^{q_j} with D_sigma0 = {x = 0},
/// keeping only the exponents where the gcd with ell and earlier ones drops.
struct LocalData {
  Integer ell;
  std::vector<Integer> q;
};

LocalData local_data(const SemigroupGenerators& s, const BranchAttachment& a);

/// Infinitely near points resolving the branch together with D_sigma0.
struct BranchPoints {
  std::vector<PointDescriptor> points;
  std::vector<std::size_t> ruptures;  // positions of the rupture vertices
};

BranchPoints branch_points(const LocalData& d);
BranchPoints branch_points(const SemigroupGenerators& s, const BranchAttachment& a);

/// Graph of the branch over a lone (-1)-vertex standing in for D_sigma0,
/// with the arrow of branch 1 at delta_g.
DualGraph gamma1_from_generators(const SemigroupGenerators& s, const BranchAttachment& a);

/// The branch resolution in a smooth germ, without D_sigma0. Intersection
/// numbers with curvettes are read off its multiplicity matrix.
DualGraph local_resolution(const std::vector<PointDescriptor>& points);

/// Multiplicities m_{delta_g, x} for x = delta, tau_0..tau_g and
/// delta_1..delta_g, given m_base = m_{delta_g sigma0}.
struct Gamma1Multiplicities {
  Integer delta;
  std::vector<Integer> tau;
  std::vector<Integer> rupture;
};

Gamma1Multiplicities gamma1_multiplicities(const SemigroupGenerators& s,
                                           const BranchAttachment& a,
                                           const Integer& m_base);

/// Inverts gamma1_multiplicities from the increasing denominators of B(t).
/// Consumes entries of m until the gcd of the generators reaches 1 and stores
/// the number consumed in *used. Throws BranchError on inconsistent data.
SemigroupGenerators recover_generators(int branch_case, const std::vector<Integer>& m,
                                       const Integer& ell, const Integer& mu,
                                       const Integer& m_base, std::size_t* used = nullptr);

}  // namespace e8

#endif  // E8_PLANE_BRANCH_HPP
