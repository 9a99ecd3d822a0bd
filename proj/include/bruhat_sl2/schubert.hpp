#ifndef BRUHAT_SL2_SCHUBERT_HPP
#define BRUHAT_SL2_SCHUBERT_HPP

#include <map>
#include <mutex>
#include <numeric>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "bruhat_sl2/bigint.hpp"
#include "bruhat_sl2/errors.hpp"
#include "bruhat_sl2/interval.hpp"
#include "bruhat_sl2/permutation.hpp"
#include "bruhat_sl2/polynomial.hpp"
#include "bruhat_sl2/sl2.hpp"

namespace bruhat_sl2 {

/// The staircase exponent rho_n = (n-1, n-2, ..., 1, 0).
inline std::vector<int> staircase(int n) {
  std::vector<int> rho(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) rho[static_cast<std::size_t>(i)] = n - 1 - i;
  return rho;
}

/// Memoized Schubert polynomials under the convention
///   S_{w_0} = x^{rho_n},   S_{s_i sigma} = N_i S_sigma  when l(s_i sigma) = l(sigma) - 1.
/// Left multiplication by s_i exchanges the *values* i and i+1, so the
/// recursion climbs to w_0 by repeatedly swapping an ascending value pair.
/// Thread-safe: lookups and inserts are serialized on one mutex.
class SchubertTable {
 public:
  MultiPolynomial schubert(const Permutation& sigma) {
    std::lock_guard<std::mutex> lock(mu_);
    return compute(sigma);
  }

 private:
  const MultiPolynomial& compute(const Permutation& sigma) {
    auto it = memo_.find(sigma.word());
    if (it != memo_.end()) return it->second;
    const int n = sigma.size();
    if (sigma == longest_element(n)) {
      auto [pos, inserted] = memo_.emplace(sigma.word(), MultiPolynomial::monomial(staircase(n)));
      (void)inserted;
      return pos->second;
    }
    // smallest value v appearing before v+1; s_v sigma is one step longer
    int v = 0;
    for (int cand = 1; cand < n && v == 0; ++cand)
      if (sigma.position_of(cand) < sigma.position_of(cand + 1)) v = cand;
    if (v == 0) throw Error("no ascent found below w_0");  // unreachable
    const MultiPolynomial& taller = compute(left_multiply_simple(sigma, v));
    MultiPolynomial result = divided_difference(taller, v);
    auto [pos, inserted] = memo_.emplace(sigma.word(), std::move(result));
    (void)inserted;
    return pos->second;
  }

  std::mutex mu_;
  std::unordered_map<std::vector<int>, MultiPolynomial, WordHash> memo_;
};

/// S_sigma(1, ..., 1): the monomial count of the Schubert polynomial with
/// multiplicity.  Strictly positive.
inline Int principal_specialization(SchubertTable& table, const Permutation& sigma) {
  return table.schubert(sigma).eval_ones();
}

/// All reduced words of sigma, built right to left over right descents.
inline std::vector<std::vector<int>> reduced_words(const Permutation& sigma) {
  if (sigma.is_identity()) return {{}};
  std::vector<std::vector<int>> out;
  for (int i = 1; i < sigma.size(); ++i) {
    if (!sigma.has_right_descent(i)) continue;
    for (auto& w : reduced_words(right_multiply_simple(sigma, i))) {
      w.push_back(i);
      out.push_back(std::move(w));
    }
  }
  return out;
}

namespace detail {

inline void macdonald_dfs(const Permutation& sigma, const Int& running, Int& total) {
  if (sigma.is_identity()) {
    total += running;
    return;
  }
  for (int i = 1; i < sigma.size(); ++i)
    if (sigma.has_right_descent(i))
      macdonald_dfs(right_multiply_simple(sigma, i), running * i, total);
}

}  // namespace detail

/// Macdonald's identity: S_sigma(1,...,1) = (sum over reduced words of the
/// product of the letters) / l(sigma)!.  The division must come out exact;
/// a remainder signals an implementation bug and raises InexactDivision.
inline Int macdonald_sum(const Permutation& sigma) {
  Int total{0};
  detail::macdonald_dfs(sigma, Int{1}, total);
  return exact_div(total, factorial(static_cast<unsigned long>(length(sigma))), "macdonald_sum");
}

/// The exponent beta of the single monomial S_pi = x^beta; defined exactly
/// when pi avoids 132.
inline std::vector<int> schubert_monomial_exponent(SchubertTable& table, const Permutation& pi) {
  if (!avoids_132(pi)) throw Non132Avoiding(to_string(pi) + " contains the pattern 132");
  const MultiPolynomial poly = table.schubert(pi);
  if (poly.term_count() != 1 || poly.terms().begin()->second != 1)
    throw TheoremViolation("Schubert polynomial of 132-avoiding " + to_string(pi) +
                           " is not a single monomial");
  return poly.terms().begin()->first;
}

/// Bihomogeneous form of S_sigma relative to the monomial of S_pi: each
/// x^alpha becomes x^alpha y^{beta - alpha}.  Only the x-exponents are
/// stored; the y-exponent of a term is beta - alpha by construction, which
/// bakes the bidegree invariant into the representation.
struct PaddedPolynomial {
  std::vector<int> beta;
  std::map<std::vector<int>, Int> terms;

  int nvars() const { return static_cast<int>(beta.size()); }
  bool is_zero() const { return terms.empty(); }

  void add_term(std::vector<int> alpha, const Int& c) {
    if (alpha.size() != beta.size()) throw DimensionMismatch("padded term length mismatch");
    for (std::size_t i = 0; i < alpha.size(); ++i)
      if (alpha[i] < 0 || alpha[i] > beta[i])
        throw PaddingViolation("x-exponent escapes 0..beta in coordinate " + std::to_string(i + 1));
    if (c == 0) return;
    auto [it, inserted] = terms.try_emplace(std::move(alpha), c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms.erase(it);
    }
  }

  void add_scaled(const PaddedPolynomial& other, const Int& factor) {
    if (beta != other.beta) throw DimensionMismatch("padded polynomials over different beta");
    for (const auto& [a, c] : other.terms) add_term(a, c * factor);
  }

  /// Common |alpha| of all terms; throws if terms mix x-degrees.
  int x_degree() const {
    int deg = -1;
    for (const auto& [a, c] : terms) {
      (void)c;
      const int d = std::accumulate(a.begin(), a.end(), 0);
      if (deg < 0)
        deg = d;
      else if (d != deg)
        throw Error("padded polynomial is not x-homogeneous");
    }
    return deg < 0 ? 0 : deg;
  }

  Int eval_ones() const {
    Int total{0};
    for (const auto& [a, c] : terms) {
      (void)a;
      total += c;
    }
    return total;
  }

  friend bool operator==(const PaddedPolynomial& p, const PaddedPolynomial& q) {
    return p.beta == q.beta && p.terms == q.terms;
  }
};

/// The pi-padded Schubert polynomial of sigma <= pi.
inline PaddedPolynomial pad(SchubertTable& table, const Permutation& sigma,
                            const Permutation& pi) {
  if (sigma.size() != pi.size()) throw DimensionMismatch("pad: sigma and pi differ in size");
  std::vector<int> beta = schubert_monomial_exponent(table, pi);  // checks 132-avoidance
  if (!weak_leq(sigma, pi))
    throw NotBelowPi(to_string(sigma) + " is not below " + to_string(pi) +
                     " in the right weak order");
  PaddedPolynomial padded;
  padded.beta = std::move(beta);
  const MultiPolynomial poly = table.schubert(sigma);
  for (const auto& [alpha, c] : poly.terms())
    padded.add_term(alpha, c);  // alpha <= beta is verified entry by entry
  return padded;
}

/// nabla = sum_i y_i d/dx_i.  Lowers x-degree by one.
inline PaddedPolynomial nabla(const PaddedPolynomial& p) {
  PaddedPolynomial out;
  out.beta = p.beta;
  for (const auto& [alpha, c] : p.terms) {
    for (std::size_t i = 0; i < alpha.size(); ++i) {
      if (alpha[i] == 0) continue;
      std::vector<int> a = alpha;
      --a[i];
      out.add_term(std::move(a), c * alpha[i]);
    }
  }
  return out;
}

/// Delta = sum_i x_i d/dy_i.  Raises x-degree by one; the y-exponent of a
/// term is beta - alpha, so the derivative coefficient is beta_i - alpha_i.
inline PaddedPolynomial delta(const PaddedPolynomial& p) {
  PaddedPolynomial out;
  out.beta = p.beta;
  for (const auto& [alpha, c] : p.terms) {
    for (std::size_t i = 0; i < alpha.size(); ++i) {
      const int y_exp = p.beta[i] - alpha[i];
      if (y_exp == 0) continue;
      std::vector<int> a = alpha;
      ++a[i];
      out.add_term(std::move(a), c * y_exp);
    }
  }
  return out;
}

/// Weighted counts of saturated strong-order chains from each element up to
/// the top of the interval, indexed canonically.  Dynamic programming down
/// the ranks; the weights are the up weights of E.
inline std::vector<Int> chain_sums_to_top(const WeakInterval& I) {
  const int count = I.size();
  std::vector<Int> sums(static_cast<std::size_t>(count), Int{0});
  sums[static_cast<std::size_t>(count) - 1] = 1;  // the top is the last canonical element
  const Permutation& pi_inv = I.top_inverse();
  for (int idx = count - 2; idx >= 0; --idx) {
    const Permutation& sigma = I.element(idx);
    Int acc{0};
    for (const auto& cov : I.strong_up_covers()[static_cast<std::size_t>(idx)])
      acc += Int(detail::weight_unchecked(sigma, cov.i, cov.j, pi_inv)) *
             sums[static_cast<std::size_t>(cov.target)];
    sums[static_cast<std::size_t>(idx)] = std::move(acc);
  }
  return sums;
}

/// The strong-order chain formula: S_sigma(1,...,1) equals the weighted
/// count of saturated chains sigma -> pi inside [e,pi]_R divided by
/// (l(pi) - l(sigma))!, for any 132-avoiding pi above sigma.
inline Int chain_sum(const Permutation& sigma, const Permutation& pi,
                     std::size_t max_elements = WeakInterval::kDefaultMaxElements) {
  const WeakInterval I = build_interval(pi, max_elements);  // checks 132-avoidance
  const auto idx = I.find(sigma);
  if (!idx)
    throw NotBelowPi(to_string(sigma) + " is not below " + to_string(pi) +
                     " in the right weak order");
  const std::vector<Int> sums = chain_sums_to_top(I);
  const unsigned long codim =
      static_cast<unsigned long>(I.top_length() - I.length_of(*idx));
  return exact_div(sums[static_cast<std::size_t>(*idx)], factorial(codim), "chain_sum");
}

/// Which Lehmer-code convention matches the monomial exponent of S_pi.
/// Recorded per pi rather than assumed anywhere.
enum class CodeConvention { code_of_pi, code_of_inverse, both, neither };

inline CodeConvention beta_code_convention(SchubertTable& table, const Permutation& pi) {
  const std::vector<int> beta = schubert_monomial_exponent(table, pi);
  const bool direct = beta == lehmer_code(pi);
  const bool inv = beta == lehmer_code(inverse(pi));
  if (direct && inv) return CodeConvention::both;
  if (direct) return CodeConvention::code_of_pi;
  if (inv) return CodeConvention::code_of_inverse;
  return CodeConvention::neither;
}

}  // namespace bruhat_sl2

#endif  // BRUHAT_SL2_SCHUBERT_HPP
