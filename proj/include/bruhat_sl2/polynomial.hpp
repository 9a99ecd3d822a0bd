#ifndef BRUHAT_SL2_POLYNOMIAL_HPP
#define BRUHAT_SL2_POLYNOMIAL_HPP

#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "bruhat_sl2/bigint.hpp"
#include "bruhat_sl2/errors.hpp"

namespace bruhat_sl2 {

/// Multivariate polynomial over arbitrary-precision integers, stored as a
/// map from exponent vectors (fixed length nvars) to nonzero coefficients.
/// Term iteration is lexicographic in the exponent vector.
class MultiPolynomial {
 public:
  explicit MultiPolynomial(int nvars) : nvars_(nvars) {
    if (nvars < 1) throw Error("MultiPolynomial: nvars must be >= 1");
  }

  static MultiPolynomial constant(int nvars, const Int& c) {
    MultiPolynomial p(nvars);
    p.add_term(std::vector<int>(static_cast<std::size_t>(nvars), 0), c);
    return p;
  }

  static MultiPolynomial monomial(std::vector<int> exp, const Int& c = Int{1}) {
    MultiPolynomial p(static_cast<int>(exp.size()));
    p.add_term(std::move(exp), c);
    return p;
  }

  int nvars() const { return nvars_; }
  const std::map<std::vector<int>, Int>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  const Int& coefficient(const std::vector<int>& exp) const {
    static const Int zero{0};
    auto it = terms_.find(exp);
    return it == terms_.end() ? zero : it->second;
  }

  void add_term(std::vector<int> exp, const Int& c) {
    if (static_cast<int>(exp.size()) != nvars_)
      throw DimensionMismatch("add_term: exponent length " + std::to_string(exp.size()) +
                              " vs nvars " + std::to_string(nvars_));
    for (int e : exp)
      if (e < 0) throw Error("add_term: negative exponent");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(std::move(exp), c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  MultiPolynomial operator+(const MultiPolynomial& other) const {
    check_nvars(other);
    MultiPolynomial out = *this;
    for (const auto& [e, c] : other.terms_) out.add_term(e, c);
    return out;
  }

  MultiPolynomial operator-(const MultiPolynomial& other) const {
    check_nvars(other);
    MultiPolynomial out = *this;
    for (const auto& [e, c] : other.terms_) out.add_term(e, -c);
    return out;
  }

  MultiPolynomial scaled(const Int& factor) const {
    MultiPolynomial out(nvars_);
    if (factor == 0) return out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, c * factor);
    return out;
  }

  /// Evaluation at x_1 = ... = x_n = 1, i.e. the coefficient sum.
  Int eval_ones() const {
    Int total{0};
    for (const auto& [e, c] : terms_) {
      (void)e;
      total += c;
    }
    return total;
  }

  /// Total degree when homogeneous; throws otherwise.
  int homogeneous_degree() const {
    if (terms_.empty()) return 0;
    int deg = -1;
    for (const auto& [e, c] : terms_) {
      (void)c;
      const int d = std::accumulate(e.begin(), e.end(), 0);
      if (deg < 0)
        deg = d;
      else if (d != deg)
        throw Error("polynomial is not homogeneous");
    }
    return deg;
  }

  bool is_homogeneous() const {
    try {
      homogeneous_degree();
      return true;
    } catch (const Error&) {
      return false;
    }
  }

  /// d/dx_i, 1-based variable index.
  MultiPolynomial partial(int i) const {
    check_var(i);
    MultiPolynomial out(nvars_);
    for (const auto& [e, c] : terms_) {
      const int a = e[static_cast<std::size_t>(i) - 1];
      if (a == 0) continue;
      std::vector<int> d = e;
      d[static_cast<std::size_t>(i) - 1] = a - 1;
      out.add_term(std::move(d), c * a);
    }
    return out;
  }

  friend bool operator==(const MultiPolynomial& a, const MultiPolynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

 private:
  void check_nvars(const MultiPolynomial& other) const {
    if (nvars_ != other.nvars_)
      throw DimensionMismatch("nvars mismatch: " + std::to_string(nvars_) + " vs " +
                              std::to_string(other.nvars_));
  }
  void check_var(int i) const {
    if (i < 1 || i > nvars_)
      throw Error("variable index " + std::to_string(i) + " out of range 1.." +
                  std::to_string(nvars_));
  }

  int nvars_;
  std::map<std::vector<int>, Int> terms_;
};

/// Newton divided difference N_i f = (f - s_i f) / (x_i - x_{i+1}), computed
/// per monomial through the telescoping expansion of
/// (x_i^a x_{i+1}^b - x_i^b x_{i+1}^a) / (x_i - x_{i+1}); this keeps the
/// whole computation in integer arithmetic.  The quotient is always exact
/// because the numerator is antisymmetric in x_i, x_{i+1}.
inline MultiPolynomial divided_difference(const MultiPolynomial& f, int i) {
  const int n = f.nvars();
  if (i < 1 || i >= n)
    throw Error("divided_difference: index " + std::to_string(i) + " out of range 1.." +
                std::to_string(n - 1));
  MultiPolynomial out(n);
  for (const auto& [e, c] : f.terms()) {
    const int a = e[static_cast<std::size_t>(i) - 1];
    const int b = e[static_cast<std::size_t>(i)];
    if (a == b) continue;
    const int lo = std::min(a, b), hi = std::max(a, b);
    const Int coeff = a > b ? c : -c;
    std::vector<int> exp = e;
    for (int t = 0; t < hi - lo; ++t) {
      exp[static_cast<std::size_t>(i) - 1] = hi - 1 - t;
      exp[static_cast<std::size_t>(i)] = lo + t;
      out.add_term(exp, coeff);
    }
  }
  return out;
}

}  // namespace bruhat_sl2

#endif  // BRUHAT_SL2_POLYNOMIAL_HPP
