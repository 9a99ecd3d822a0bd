#ifndef BRUHAT_SL2_SL2_HPP
#define BRUHAT_SL2_SL2_HPP

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "bruhat_sl2/bigint.hpp"
#include "bruhat_sl2/errors.hpp"
#include "bruhat_sl2/interval.hpp"
#include "bruhat_sl2/linear_operator.hpp"
#include "bruhat_sl2/permutation.hpp"

namespace bruhat_sl2 {

/// A_i(sigma): values sigma_k with k > i+1 lying strictly between sigma_i
/// and sigma_{i+1}.  Invariant under the swap s_i: A_i(sigma) = A_i(sigma s_i).
inline std::set<int> set_A(const Permutation& sigma, int i) {
  const int n = sigma.size();
  if (i < 1 || i >= n) throw Error("set_A: index " + std::to_string(i) + " out of range");
  const int lo = std::min(sigma(i), sigma(i + 1));
  const int hi = std::max(sigma(i), sigma(i + 1));
  std::set<int> out;
  for (int k = i + 2; k <= n; ++k)
    if (lo < sigma(k) && sigma(k) < hi) out.insert(sigma(k));
  return out;
}

/// B_i(sigma, pi): values sigma_k with k > i+1 whose pi^{-1}-images lie
/// strictly between pi^{-1}(sigma_i) and pi^{-1}(sigma_{i+1}).
inline std::set<int> set_B(const Permutation& sigma, int i, const Permutation& pi) {
  const int n = sigma.size();
  if (i < 1 || i >= n) throw Error("set_B: index " + std::to_string(i) + " out of range");
  if (pi.size() != n) throw DimensionMismatch("set_B: sigma and pi have different sizes");
  const Permutation pinv = inverse(pi);
  const int lo = std::min(pinv(sigma(i)), pinv(sigma(i + 1)));
  const int hi = std::max(pinv(sigma(i)), pinv(sigma(i + 1)));
  std::set<int> out;
  for (int k = i + 2; k <= n; ++k)
    if (lo < pinv(sigma(k)) && pinv(sigma(k)) < hi) out.insert(sigma(k));
  return out;
}

namespace detail {

// Core of the up-weight with preconditions already established:
// sigma precdot sigma t_{ij} and both endpoints below pi.
inline int weight_unchecked(const Permutation& sigma, int i, int j, const Permutation& pi_inv) {
  const int n = sigma.size();
  const int a = sigma(i), b = sigma(j);
  int first = 0, second = 0;
  for (int k = j + 1; k <= n; ++k) {
    const int c = sigma(k);
    if (a < c && c < b) ++first;
    const int pc = pi_inv(c);
    if (pi_inv(b) < pc && pc < pi_inv(a)) ++second;
  }
  return 1 + first + second;
}

}  // namespace detail

/// The up weight wt^pi(sigma, sigma t_{ij}) of a strong-order cover inside
/// [e,pi]_R:
///   1 + #{ k > j : sigma_i < sigma_k < sigma_j }
///     + #{ k > j : pi^{-1}(sigma_j) < pi^{-1}(sigma_k) < pi^{-1}(sigma_i) }.
/// The formula is only meaningful on covers; anything else is a hard error.
inline int weight(const Permutation& sigma, int i, int j, const Permutation& pi) {
  const int n = sigma.size();
  if (pi.size() != n) throw DimensionMismatch("weight: sigma and pi have different sizes");
  if (i < 1 || j > n || i >= j)
    throw Error("weight: bad positions (" + std::to_string(i) + "," + std::to_string(j) + ")");
  if (sigma(i) >= sigma(j))
    throw NotAStrongCover("weight: sigma_i >= sigma_j at (" + std::to_string(i) + "," +
                          std::to_string(j) + ")");
  for (int k = i + 1; k < j; ++k)
    if (sigma(i) < sigma(k) && sigma(k) < sigma(j))
      throw NotAStrongCover("weight: intermediate value blocks (" + std::to_string(i) + "," +
                            std::to_string(j) + ")");
  const InvMask pi_mask = inversion_mask(pi);
  if (!inversion_mask(sigma).subset_of(pi_mask))
    throw NotInInterval("weight: " + to_string(sigma) + " is not below " + to_string(pi));
  const Permutation target = right_multiply_transposition(sigma, i, j);
  if (!inversion_mask(target).subset_of(pi_mask))
    throw NotInInterval("weight: " + to_string(target) + " is not below " + to_string(pi));
  return detail::weight_unchecked(sigma, i, j, inverse(pi));
}

/// Raising operator: E sigma = sum over strong covers sigma t_{ij} inside
/// the interval of wt^pi(sigma, sigma t_{ij}) sigma t_{ij}.
inline SparseIntMatrix build_E(const WeakInterval& I) {
  SparseIntMatrix E(I.size());
  const Permutation& pi_inv = I.top_inverse();
  for (int c = 0; c < I.size(); ++c) {
    const Permutation& sigma = I.element(c);
    for (const auto& cov : I.strong_up_covers()[static_cast<std::size_t>(c)])
      E.set(cov.target, c, detail::weight_unchecked(sigma, cov.i, cov.j, pi_inv));
  }
  return E;
}

/// Lowering operator: F sigma = sum over weak descents of i * sigma s_i.
inline SparseIntMatrix build_F(const WeakInterval& I) {
  SparseIntMatrix F(I.size());
  const int n = I.n();
  for (int c = 0; c < I.size(); ++c) {
    const Permutation& sigma = I.element(c);
    for (int i = 1; i < n; ++i) {
      if (!sigma.has_right_descent(i)) continue;
      // down covers stay in the interval automatically
      F.set(I.index_of(right_multiply_simple(sigma, i)), c, i);
    }
  }
  return F;
}

/// Cartan operator: H sigma = (2 l(sigma) - l(pi)) sigma.
inline SparseIntMatrix build_H(const WeakInterval& I) {
  SparseIntMatrix H(I.size());
  for (int c = 0; c < I.size(); ++c)
    H.set(c, c, 2 * I.length_of(c) - I.top_length());
  return H;
}

struct Sl2Violation {
  std::string relation;  // "HE", "HF" or "EF"
  Permutation row;       // element pair of the offending entry
  Permutation col;
  Int expected;
  Int actual;
};

struct Sl2Report {
  explicit Sl2Report(Permutation top) : pi(std::move(top)) {}

  Permutation pi;
  int interval_size = 0;
  bool he_ok = false;
  bool hf_ok = false;
  bool ef_ok = false;
  std::vector<Sl2Violation> violations;  // first few offending entries

  bool passed() const { return he_ok && hf_ok && ef_ok; }
};

inline constexpr std::size_t kMaxReportedViolations = 10;

/// Checks [H,E] = 2E, [H,F] = -2F and [E,F] = H entrywise over the integers
/// on the interval below pi.
inline Sl2Report verify_sl2(const Permutation& pi,
                            std::size_t max_elements = WeakInterval::kDefaultMaxElements) {
  const WeakInterval I = build_interval(pi, max_elements);
  const SparseIntMatrix E = build_E(I);
  const SparseIntMatrix F = build_F(I);
  const SparseIntMatrix H = build_H(I);

  Sl2Report report(pi);
  report.interval_size = I.size();
  auto check = [&](const char* name, const SparseIntMatrix& got, const SparseIntMatrix& want) {
    if (got == want) return true;
    const SparseIntMatrix diff = got - want;
    for (const auto& [rc, v] : diff.entries()) {
      if (report.violations.size() >= kMaxReportedViolations) break;
      (void)v;
      report.violations.push_back({name, I.element(rc.first), I.element(rc.second),
                                   want.at(rc.first, rc.second), got.at(rc.first, rc.second)});
    }
    return false;
  };
  report.he_ok = check("HE", commutator(H, E), E.scaled(2));
  report.hf_ok = check("HF", commutator(H, F), F.scaled(-2));
  report.ef_ok = check("EF", commutator(E, F), H);
  return report;
}

}  // namespace bruhat_sl2

#endif  // BRUHAT_SL2_SL2_HPP
