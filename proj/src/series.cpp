#include "e8/series.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace e8 {

Integer total_degree(const ExponentVector& m) {
  Integer d = 0;
  for (const auto& x : m) d += x;
  return d;
}

bool GradedLess::operator()(const ExponentVector& a, const ExponentVector& b) const {
  const Integer da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  return a < b;
}

// ----------------------------------------------------------- BinomialProduct

BinomialProduct::BinomialProduct(
    std::size_t variables, std::initializer_list<std::pair<ExponentVector, Integer>> fs)
    : r_(variables) {
  for (const auto& [m, s] : fs) multiply(m, s);
}

Integer BinomialProduct::exponent(const ExponentVector& m) const {
  auto it = factors_.find(m);
  return it == factors_.end() ? Integer(0) : it->second;
}

void BinomialProduct::multiply(const ExponentVector& m, const Integer& s) {
  if (m.size() != r_) throw SeriesError("exponent vector has the wrong length");
  bool positive = false;
  for (const auto& x : m) {
    if (x < 0) throw SeriesError("negative exponent in binomial");
    positive = positive || x > 0;
  }
  if (!positive) throw SeriesError("binomial (1 - t^0) is not allowed");
  if (s == 0) return;
  auto [it, inserted] = factors_.emplace(m, s);
  if (!inserted) {
    it->second += s;
    if (it->second == 0) factors_.erase(it);
  }
}

void BinomialProduct::multiply(long m, const Integer& s) {
  multiply(ExponentVector{Integer(m)}, s);
}

BinomialProduct BinomialProduct::inverse() const {
  BinomialProduct out(r_);
  for (const auto& [m, s] : factors_) out.factors_.emplace(m, -s);
  return out;
}

std::vector<ExponentVector> BinomialProduct::denominators() const {
  std::vector<ExponentVector> out;
  for (const auto& [m, s] : factors_)
    for (Integer k = 0; k < -s; ++k) out.push_back(m);
  return out;
}

std::vector<ExponentVector> BinomialProduct::numerators() const {
  std::vector<ExponentVector> out;
  for (const auto& [m, s] : factors_)
    for (Integer k = 0; k < s; ++k) out.push_back(m);
  return out;
}

BinomialProduct combine(const BinomialProduct& p, const BinomialProduct& q) {
  if (p.variables() != q.variables()) throw SeriesError("variable count mismatch");
  BinomialProduct out = p;
  for (const auto& [m, s] : q.factors()) out.multiply(m, s);
  return out;
}

BinomialProduct divide(const BinomialProduct& p, const BinomialProduct& q) {
  return combine(p, q.inverse());
}

BinomialProduct project(const BinomialProduct& p, const std::vector<std::size_t>& keep) {
  for (std::size_t k : keep)
    if (k >= p.variables()) throw SeriesError("projection index out of range");
  BinomialProduct out(keep.size());
  for (const auto& [m, s] : p.factors()) {
    ExponentVector restricted;
    for (std::size_t k : keep) restricted.push_back(m[k]);
    if (total_degree(restricted) == 0)
      throw SeriesError("a factor vanishes on the kept variables");
    out.multiply(restricted, s);
  }
  return out;
}

// ----------------------------------------------------------- TruncatedSeries

TruncatedSeries::TruncatedSeries(std::size_t variables, long truncation)
    : r_(variables), n_(truncation) {
  if (variables == 0) throw SeriesError("at least one variable required");
  if (truncation < 0) throw SeriesError("truncation must be nonnegative");
  std::size_t size = 1;
  for (std::size_t k = 0; k < r_; ++k) {
    stride_.push_back(size);
    size *= static_cast<std::size_t>(n_ + 1);
    if (size > 50'000'000) throw SeriesError("truncated series too large");
  }
  data_.assign(size, 0);
  data_[0] = 1;
}

std::size_t TruncatedSeries::index_of(const std::vector<long>& e) const {
  if (e.size() != r_) throw SeriesError("exponent has the wrong length");
  std::size_t idx = 0;
  long deg = 0;
  for (std::size_t k = 0; k < r_; ++k) {
    if (e[k] < 0) throw SeriesError("negative exponent");
    deg += e[k];
    idx += static_cast<std::size_t>(e[k]) * stride_[k];
  }
  if (deg > n_) throw SeriesError("monomial beyond truncation");
  return idx;
}

const Integer& TruncatedSeries::coefficient(const std::vector<long>& e) const {
  return data_[index_of(e)];
}

void TruncatedSeries::set(const std::vector<long>& e, Integer value) {
  data_[index_of(e)] = std::move(value);
}

std::vector<long> TruncatedSeries::exponent_of(std::size_t index) const {
  std::vector<long> e(r_);
  for (std::size_t k = 0; k < r_; ++k) {
    e[k] = static_cast<long>(index % static_cast<std::size_t>(n_ + 1));
    index /= static_cast<std::size_t>(n_ + 1);
  }
  return e;
}

const std::vector<std::size_t>& TruncatedSeries::graded_indices() const {
  if (!graded_.empty()) return graded_;
  std::vector<std::pair<std::vector<long>, std::size_t>> all;
  for (std::size_t i = 0; i < data_.size(); ++i) {
    auto e = exponent_of(i);
    if (std::accumulate(e.begin(), e.end(), 0L) <= n_) all.emplace_back(std::move(e), i);
  }
  std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) {
    const long da = std::accumulate(a.first.begin(), a.first.end(), 0L);
    const long db = std::accumulate(b.first.begin(), b.first.end(), 0L);
    return da != db ? da < db : a.first < b.first;
  });
  for (const auto& [e, i] : all) graded_.push_back(i);
  return graded_;
}

// One factor (1 - t^m)^{+1} (descending sweep) or (1 - t^m)^{-1} (ascending).
void TruncatedSeries::step_multiply(const std::vector<long>& m, std::size_t offset,
                                    bool divide) {
  const auto& order = graded_indices();
  auto covers = [&](std::size_t idx) {
    for (std::size_t k = 0; k < r_; ++k) {
      if (static_cast<long>(idx % static_cast<std::size_t>(n_ + 1)) < m[k]) return false;
      idx /= static_cast<std::size_t>(n_ + 1);
    }
    return true;
  };
  if (divide) {
    for (std::size_t idx : order)
      if (covers(idx)) data_[idx] += data_[idx - offset];
  } else {
    for (auto it = order.rbegin(); it != order.rend(); ++it)
      if (covers(*it)) data_[*it] -= data_[*it - offset];
  }
}

void TruncatedSeries::multiply_binomial(const ExponentVector& m, const Integer& s) {
  if (m.size() != r_) throw SeriesError("exponent vector has the wrong length");
  if (s == 0) return;
  const Integer deg = total_degree(m);
  if (deg == 0) throw SeriesError("binomial (1 - t^0) is not allowed");
  if (deg > n_) return;
  std::vector<long> mm(r_);
  std::size_t offset = 0;
  for (std::size_t k = 0; k < r_; ++k) {
    mm[k] = static_cast<long>(m[k]);
    offset += static_cast<std::size_t>(mm[k]) * stride_[k];
  }
  const long reach = n_ / static_cast<long>(deg);
  if (abs(s) <= reach) {
    for (Integer k = 0; k < abs(s); ++k) step_multiply(mm, offset, s < 0);
    return;
  }
  convolve_binomial(mm, offset, reach, s, false);
}

void TruncatedSeries::multiply_binomial_parallel(const ExponentVector& m, const Integer& s) {
  if (m.size() != r_) throw SeriesError("exponent vector has the wrong length");
  if (s == 0) return;
  const Integer deg = total_degree(m);
  if (deg == 0) throw SeriesError("binomial (1 - t^0) is not allowed");
  if (deg > n_) return;
  std::vector<long> mm(r_);
  std::size_t offset = 0;
  for (std::size_t k = 0; k < r_; ++k) {
    mm[k] = static_cast<long>(m[k]);
    offset += static_cast<std::size_t>(mm[k]) * stride_[k];
  }
  convolve_binomial(mm, offset, n_ / static_cast<long>(deg), s, true);
}

void TruncatedSeries::convolve_binomial(const std::vector<long>& mm, std::size_t offset,
                                        long reach, const Integer& s, bool parallel) {
  // Generalized binomial series: coefficient of x^j in (1 - x)^s.
  std::vector<Integer> c(static_cast<std::size_t>(reach) + 1);
  c[0] = 1;
  for (long j = 1; j <= reach; ++j) c[j] = -c[j - 1] * (s - (j - 1)) / j;
  std::vector<Integer> out(data_.size(), 0);
  const auto& order = graded_indices();
  const long count = static_cast<long>(order.size());
#pragma omp parallel for schedule(dynamic, 64) if (parallel)
  for (long q = 0; q < count; ++q) {
    const std::size_t idx = order[static_cast<std::size_t>(q)];
    const auto e = exponent_of(idx);
    Integer acc = 0;
    for (long j = 0; j <= reach; ++j) {
      bool ok = true;
      for (std::size_t k = 0; k < r_ && ok; ++k) ok = e[k] >= j * mm[k];
      if (!ok) break;
      acc += c[j] * data_[idx - static_cast<std::size_t>(j) * offset];
    }
    out[idx] = std::move(acc);
  }
  data_ = std::move(out);
}

std::vector<std::pair<std::vector<long>, Integer>> TruncatedSeries::terms() const {
  std::vector<std::pair<std::vector<long>, Integer>> out;
  for (std::size_t idx : graded_indices())
    if (data_[idx] != 0) out.emplace_back(exponent_of(idx), data_[idx]);
  return out;
}

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
  return a.r_ == b.r_ && a.n_ == b.n_ && a.data_ == b.data_;
}

TruncatedSeries expand(const BinomialProduct& p, long truncation) {
  TruncatedSeries s(p.variables(), truncation);
  for (const auto& [m, e] : p.factors()) s.multiply_binomial(m, e);
  return s;
}

TruncatedSeries expand_parallel(const BinomialProduct& p, long truncation) {
  TruncatedSeries s(p.variables(), truncation);
  for (const auto& [m, e] : p.factors()) s.multiply_binomial_parallel(m, e);
  return s;
}

BinomialProduct factorize(const TruncatedSeries& s) {
  if (s.at(0) != 1) throw SeriesError("constant term must be 1");
  TruncatedSeries rest = s;
  BinomialProduct out(s.variables());
  for (std::size_t idx : s.graded_indices()) {
    if (idx == 0) continue;
    const Integer c = rest.at(idx);
    if (c == 0) continue;
    const auto e = rest.exponent_of(idx);
    ExponentVector m(e.begin(), e.end());
    // (1 - t^m)^{-c} = 1 + c t^m + ..., so s_m = -c.
    out.multiply(m, -c);
    rest.multiply_binomial(m, c);
  }
  return out;
}

// ------------------------------------------------------------ text formats

namespace {

std::string monomial(const std::vector<std::string>& e) {
  if (e.size() == 1) return e[0] == "1" ? "t" : "t^" + e[0];
  std::string s = "t^(";
  for (std::size_t k = 0; k < e.size(); ++k) s += (k ? "," : "") + e[k];
  return s + ")";
}

class Scanner {
 public:
  explicit Scanner(std::string text) : s_(std::move(text)) {}
  void skip_space() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool done() {
    skip_space();
    return pos_ >= s_.size();
  }
  bool accept(char c) {
    skip_space();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  bool accept_word(const std::string& w) {
    skip_space();
    if (s_.compare(pos_, w.size(), w) == 0) {
      pos_ += w.size();
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  bool peek_digit() {
    skip_space();
    return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]));
  }
  Integer integer() {
    skip_space();
    bool negative = false;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
      negative = s_[pos_] == '-';
      ++pos_;
    }
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    Integer v(s_.substr(start, pos_ - start));
    return negative ? Integer(-v) : v;
  }
  // "t", "t^k" or "t^(a,b,...)" with the leading 't' already consumed.
  ExponentVector exponent() {
    if (!accept('^')) return {Integer(1)};
    if (!accept('(')) return {integer()};
    ExponentVector e{integer()};
    while (accept(',')) e.push_back(integer());
    expect(')');
    return e;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw SeriesError("cannot parse series at offset " + std::to_string(pos_) + ": " + what);
  }

 private:
  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string to_string(const BinomialProduct& p) {
  if (p.empty()) return "1";
  std::string out;
  for (const auto& [m, s] : p.factors()) {
    std::vector<std::string> e;
    for (const auto& x : m) e.push_back(x.str());
    if (!out.empty()) out += ' ';
    out += "(1-" + monomial(e) + ")";
    if (s != 1) out += "^" + s.str();
  }
  return out;
}

BinomialProduct parse_product(const std::string& text, std::size_t variables) {
  Scanner sc(text);
  if (sc.done()) sc.fail("empty input");
  std::vector<std::pair<ExponentVector, Integer>> fs;
  if (sc.accept('1')) {
    if (!sc.done()) sc.fail("trailing input after 1");
  } else {
    while (!sc.done()) {
      sc.expect('(');
      sc.expect('1');
      sc.expect('-');
      if (!sc.accept('t')) sc.fail("expected 't'");
      ExponentVector m = sc.exponent();
      sc.expect(')');
      Integer s = 1;
      if (sc.accept('^')) s = sc.integer();
      fs.emplace_back(std::move(m), s);
    }
  }
  std::size_t r = variables;
  for (const auto& f : fs) {
    if (r == 0) r = f.first.size();
    if (f.first.size() != r) sc.fail("inconsistent number of variables");
  }
  BinomialProduct p(r == 0 ? 1 : r);
  for (const auto& [m, s] : fs) p.multiply(m, s);
  return p;
}

std::string to_string(const TruncatedSeries& s) {
  std::string out;
  for (const auto& [e, c] : s.terms()) {
    const bool constant = std::all_of(e.begin(), e.end(), [](long x) { return x == 0; });
    const Integer mag = abs(c);
    std::string body;
    if (constant) {
      body = mag.str();
    } else {
      std::vector<std::string> es;
      for (long x : e) es.push_back(std::to_string(x));
      body = (mag == 1 ? "" : mag.str() + " ") + monomial(es);
    }
    if (out.empty())
      out = (c < 0 ? "-" : "") + body;
    else
      out += (c < 0 ? " - " : " + ") + body;
  }
  if (out.empty()) out = "0";
  return out + " [trunc " + std::to_string(s.truncation()) + "]";
}

TruncatedSeries parse_polynomial(const std::string& text) {
  const auto open = text.rfind("[trunc");
  if (open == std::string::npos) throw SeriesError("polynomial form needs [trunc N]");
  Scanner tail(text.substr(open + 6));
  const long n = static_cast<long>(tail.integer());
  tail.expect(']');
  if (!tail.done()) tail.fail("trailing input after truncation");

  const std::string body = text.substr(0, open);
  Scanner sc(body);
  std::vector<std::pair<ExponentVector, Integer>> terms;
  bool first = true;
  while (!sc.done()) {
    Integer sign = 1;
    if (sc.accept('-')) {
      sign = -1;
    } else if (!sc.accept('+') && !first) {
      sc.fail("expected '+' or '-'");
    }
    first = false;
    Integer coeff = 1;
    bool have_coeff = false;
    if (sc.peek_digit()) {
      coeff = sc.integer();
      have_coeff = true;
    }
    ExponentVector e;
    if (sc.accept('t')) {
      e = sc.exponent();
    } else if (!have_coeff) {
      sc.fail("expected a term");
    }
    terms.emplace_back(std::move(e), sign * coeff);
  }
  std::size_t r = 0;
  for (const auto& t : terms)
    if (!t.first.empty()) {
      if (r == 0) r = t.first.size();
      if (t.first.size() != r) sc.fail("inconsistent number of variables");
    }
  TruncatedSeries s(r == 0 ? 1 : r, n);
  s.set(std::vector<long>((r == 0 ? 1 : r), 0), 0);
  for (const auto& [m, c] : terms) {
    std::vector<long> e(r == 0 ? 1 : r, 0);
    for (std::size_t k = 0; k < m.size(); ++k) e[k] = static_cast<long>(m[k]);
    s.set(e, s.coefficient(e) + c);
  }
  return s;
}

}  // namespace e8
