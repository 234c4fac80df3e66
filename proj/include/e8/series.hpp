#ifndef E8_SERIES_HPP
#define E8_SERIES_HPP

// Integer power series in r variables: finite binomial products
// prod (1 - t^m)^{s_m} and their truncated expansions.

#include "e8/integer.hpp"

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace e8 {

class SeriesError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using ExponentVector = std::vector<Integer>;

Integer total_degree(const ExponentVector& m);

/// Graded lexicographic order: total degree first, then lexicographic.
struct GradedLess {
  bool operator()(const ExponentVector& a, const ExponentVector& b) const;
};

class BinomialProduct {
 public:
  using Factors = std::map<ExponentVector, Integer, GradedLess>;

  BinomialProduct() = default;
  explicit BinomialProduct(std::size_t variables) : r_(variables) {}
  BinomialProduct(std::size_t variables,
                  std::initializer_list<std::pair<ExponentVector, Integer>> fs);

  std::size_t variables() const { return r_; }
  const Factors& factors() const { return factors_; }
  bool empty() const { return factors_.empty(); }

  /// Exponent s_m of (1 - t^m); zero when absent.
  Integer exponent(const ExponentVector& m) const;

  /// Multiplies by (1 - t^m)^s, dropping the factor if its exponent becomes 0.
  void multiply(const ExponentVector& m, const Integer& s);
  void multiply(long m, const Integer& s);  // r == 1 convenience

  BinomialProduct inverse() const;

  /// Exponent vectors of factors with negative exponents, each repeated
  /// |s| times, ascending. For r == 1 these are the m_1 <= m_2 <= ...
  std::vector<ExponentVector> denominators() const;
  std::vector<ExponentVector> numerators() const;

  friend bool operator==(const BinomialProduct& a, const BinomialProduct& b) {
    return a.r_ == b.r_ && a.factors_ == b.factors_;
  }
  friend bool operator!=(const BinomialProduct& a, const BinomialProduct& b) {
    return !(a == b);
  }

 private:
  std::size_t r_ = 1;
  Factors factors_;
};

/// Coefficients of a series in r variables for all monomials of total degree
/// at most N. Stored densely over the box [0, N]^r.
class TruncatedSeries {
 public:
  TruncatedSeries(std::size_t variables, long truncation);

  std::size_t variables() const { return r_; }
  long truncation() const { return n_; }

  const Integer& coefficient(const std::vector<long>& exponent) const;
  void set(const std::vector<long>& exponent, Integer value);

  /// Multiplies in place by (1 - t^m)^s, truncated.
  void multiply_binomial(const ExponentVector& m, const Integer& s);

  /// Same result, computed out of place with the monomials shared among
  /// OpenMP threads.
  void multiply_binomial_parallel(const ExponentVector& m, const Integer& s);

  /// Monomials of total degree <= N in graded lexicographic order.
  const std::vector<std::size_t>& graded_indices() const;
  std::vector<long> exponent_of(std::size_t index) const;
  const Integer& at(std::size_t index) const { return data_[index]; }

  /// Nonzero terms in graded lexicographic order.
  std::vector<std::pair<std::vector<long>, Integer>> terms() const;

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b);
  friend bool operator!=(const TruncatedSeries& a, const TruncatedSeries& b) {
    return !(a == b);
  }

 private:
  std::size_t index_of(const std::vector<long>& exponent) const;
  void step_multiply(const std::vector<long>& m, std::size_t offset, bool divide);
  void convolve_binomial(const std::vector<long>& m, std::size_t offset, long reach,
                         const Integer& s, bool parallel);

  std::size_t r_;
  long n_;
  std::vector<std::size_t> stride_;
  std::vector<Integer> data_;
  mutable std::vector<std::size_t> graded_;
};

TruncatedSeries expand(const BinomialProduct& p, long truncation);

/// expand() with every factor applied by multiply_binomial_parallel.
TruncatedSeries expand_parallel(const BinomialProduct& p, long truncation);

/// Unique exponents s_m, |m| <= N, with expand(result, N) == s.
BinomialProduct factorize(const TruncatedSeries& s);

/// Product of two binomial products (exponents add).
BinomialProduct combine(const BinomialProduct& p, const BinomialProduct& q);

/// p / q.
BinomialProduct divide(const BinomialProduct& p, const BinomialProduct& q);

/// Substitutes t_k = 1 for every coordinate k (0-based) not in keep.
BinomialProduct project(const BinomialProduct& p, const std::vector<std::size_t>& keep);

/// Product form, e.g. "(1-t^4)^-1 (1-t^6)^-1 (1-t^12)".
std::string to_string(const BinomialProduct& p);
BinomialProduct parse_product(const std::string& text, std::size_t variables = 0);

/// Polynomial form, e.g. "1 + t + 2 t^3 [trunc 30]".
std::string to_string(const TruncatedSeries& s);
TruncatedSeries parse_polynomial(const std::string& text);

}  // namespace e8

#endif  // E8_SERIES_HPP
