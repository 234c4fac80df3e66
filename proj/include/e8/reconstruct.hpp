#ifndef E8_RECONSTRUCT_HPP
#define E8_RECONSTRUCT_HPP

// Recovering the minimal resolution from a Poincaré series.
//
// Every reconstruction recomputes the series of its answer and throws
// ReconstructionError when it differs from the input. Results are only
// meaningful when no element originates from a smooth point of D8.

#include "e8/plane_branch.hpp"
#include "e8/series.hpp"

#include <array>
#include <stdexcept>

namespace e8 {

class ReconstructionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Projective point (m_{sigma 8}, m_{sigma 1}, m_{sigma 4}) normalized by gcd.
struct RatioPoint {
  Integer m8, m1, m4;

  static RatioPoint of(const Integer& m8, const Integer& m1, const Integer& m4);
  friend bool operator==(const RatioPoint&, const RatioPoint&) = default;
};

struct SigmaZeroResult {
  BasePoint sigma0;
  Integer ell;
};

/// Multiplicities of a three-tails component against the base vertices
/// (column[k - 1] = m_{sigma0 k}) and with itself.
struct SigmaZeroData {
  std::array<Integer, 8> column;
  Integer self;
  RatioPoint ratio() const { return RatioPoint::of(column[7], column[0], column[3]); }
};

SigmaZeroData sigma0_data(const BasePoint& b);

/// sigma0 and ell from the ascending -1 exponents of a one-variable series.
SigmaZeroResult identify_sigma0(const BinomialProduct& p);

/// D(t) for the given component and intersection multiplicity.
BinomialProduct d_series(const SigmaZeroData& d, const Integer& ell);

/// Single irreducible curve.
ElementPath reconstruct_curve_path(const BinomialProduct& p);
DualGraph reconstruct_curve(const BinomialProduct& p);

/// Single divisorial valuation.
ElementPath reconstruct_divisor_path(const BinomialProduct& p);
DualGraph reconstruct_divisor(const BinomialProduct& p);

/// Among the factors of a two-variable series whose exponent is proportional
/// to `direction` (normally (m_{8 sigma1}, m_{8 sigma2})), the componentwise
/// largest. Throws ReconstructionError when there is none or no maximum.
ExponentVector split_vertex(const BinomialProduct& pair, const ExponentVector& direction);

/// Collections of divisorial valuations (one mark per variable).
Configuration reconstruct_divisor_configuration(const BinomialProduct& p);
DualGraph reconstruct_divisor_collection(const BinomialProduct& p);

/// Reducible curves (one branch per variable).
Configuration reconstruct_curve_configuration(const BinomialProduct& p);
DualGraph reconstruct_curve_collection(const BinomialProduct& p);

}  // namespace e8

#endif  // E8_RECONSTRUCT_HPP
