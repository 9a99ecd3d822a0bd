#ifndef BRUHAT_SL2_DIAGNOSTICS_HPP
#define BRUHAT_SL2_DIAGNOSTICS_HPP

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "bruhat_sl2/errors.hpp"
#include "bruhat_sl2/interval.hpp"
#include "bruhat_sl2/permutation.hpp"
#include "bruhat_sl2/sl2.hpp"

namespace bruhat_sl2 {

namespace detail {

// The structures in this header encode facts that hold below a 132-avoiding
// top, so both hypotheses are enforced here.
inline void require_in_interval(const Permutation& sigma, const Permutation& pi) {
  if (sigma.size() != pi.size())
    throw DimensionMismatch("sigma and pi have different sizes");
  if (!avoids_132(pi)) throw Non132Avoiding(to_string(pi) + " contains the pattern 132");
  if (!inversion_mask(sigma).subset_of(inversion_mask(pi)))
    throw NotInInterval(to_string(sigma) + " is not below " + to_string(pi) +
                        " in the right weak order");
}

}  // namespace detail

/// Indices i for which the swap s_i is forbidden: sigma s_i leaves [e,pi]_R.
/// Every forbidden swap is length-increasing with A_i = B_i = empty; that is
/// asserted here because the rest of the diagnostics machinery leans on it.
inline std::set<int> forbidden_swaps(const Permutation& sigma, const Permutation& pi) {
  detail::require_in_interval(sigma, pi);
  const int n = sigma.size();
  const InvMask pi_mask = inversion_mask(pi);
  std::set<int> out;
  for (int i = 1; i < n; ++i) {
    const int a = sigma(i), b = sigma(i + 1);
    if (a > b) continue;  // descent: sigma s_i < sigma <= pi, always allowed
    if (pi_mask.test(inversion_pair_index(b, a))) continue;
    if (!set_A(sigma, i).empty() || !set_B(sigma, i, pi).empty())
      throw TheoremViolation("forbidden swap s_" + std::to_string(i) + " at " + to_string(sigma) +
                             " has nonempty A or B");
    out.insert(i);
  }
  return out;
}

/// The sign grid: rows 1..n-1, columns 0..n.  Column 0 flags forbidden
/// swaps; column j >= 1 holds lambda_i * mu_j, where lambda_i is the
/// direction of the swap s_i and mu_j records one-sided membership of j in
/// A_i versus B_i.
class SignGrid {
 public:
  explicit SignGrid(int n)
      : n_(n), cells_(static_cast<std::size_t>(n - 1),
                      std::vector<int>(static_cast<std::size_t>(n) + 1, 0)) {}

  int n() const { return n_; }
  int at(int i, int j) const {
    return cells_[static_cast<std::size_t>(i) - 1][static_cast<std::size_t>(j)];
  }
  void set(int i, int j, int v) {
    cells_[static_cast<std::size_t>(i) - 1][static_cast<std::size_t>(j)] = v;
  }

  /// sum_{i,j} i * S_ij; equals C(n,2) - l(pi) for every sigma in the interval.
  long weighted_sum() const {
    long total = 0;
    for (int i = 1; i < n_; ++i)
      for (int j = 0; j <= n_; ++j) total += static_cast<long>(i) * at(i, j);
    return total;
  }

  /// sum_i i * S_ij of a single column.
  long column_weighted_sum(int j) const {
    long total = 0;
    for (int i = 1; i < n_; ++i) total += static_cast<long>(i) * at(i, j);
    return total;
  }

  std::vector<std::pair<std::pair<int, int>, int>> nonzero_cells() const {
    std::vector<std::pair<std::pair<int, int>, int>> out;
    for (int i = 1; i < n_; ++i)
      for (int j = 0; j <= n_; ++j)
        if (at(i, j) != 0) out.push_back({{i, j}, at(i, j)});
    return out;
  }

 private:
  int n_;
  std::vector<std::vector<int>> cells_;
};

inline SignGrid sign_grid(const Permutation& sigma, const Permutation& pi) {
  detail::require_in_interval(sigma, pi);
  const int n = sigma.size();
  const std::set<int> forbidden = forbidden_swaps(sigma, pi);
  SignGrid grid(n);
  for (int i = 1; i < n; ++i) {
    if (forbidden.count(i)) {
      grid.set(i, 0, 1);
      continue;  // A_i = B_i = empty, so the rest of the row is zero
    }
    const int lambda = sigma(i) < sigma(i + 1) ? 1 : -1;
    const std::set<int> a = set_A(sigma, i);
    const std::set<int> b = set_B(sigma, i, pi);
    for (int j = 1; j <= n; ++j) {
      const bool in_a = a.count(j) > 0;
      const bool in_b = b.count(j) > 0;
      if (in_a == in_b) continue;
      grid.set(i, j, lambda * (in_a ? 1 : -1));
    }
  }
  return grid;
}

enum class Quadrant { I, II, III, IV };

inline const char* quadrant_name(Quadrant q) {
  switch (q) {
    case Quadrant::I: return "I";
    case Quadrant::II: return "II";
    case Quadrant::III: return "III";
    case Quadrant::IV: return "IV";
  }
  return "?";
}

struct PathPoint {
  int x;  // sigma_i
  int y;  // pi^{-1}(sigma_i)
  Quadrant quadrant;
};

/// The permutation path for a column value j: points (sigma_i, pi^{-1}
/// sigma_i) for i = 1..k-1 where k = sigma^{-1}(j), with pivot lines
/// x = sigma_k and y = pi^{-1}(sigma_k).  The final step of the drawn path
/// runs from the last point to the pivot itself.
struct PermutationPath {
  int column_value = 0;    // j
  int pivot_position = 0;  // k
  int pivot_x = 0;
  int pivot_y = 0;
  std::vector<PathPoint> points;

  int quadrant_iii_count() const {
    int c = 0;
    for (const auto& p : points)
      if (p.quadrant == Quadrant::III) ++c;
    return c;
  }
};

inline PermutationPath permutation_path(const Permutation& sigma, const Permutation& pi, int j) {
  detail::require_in_interval(sigma, pi);
  const int n = sigma.size();
  if (j < 1 || j > n) throw Error("permutation_path: column value out of range");
  const Permutation pinv = inverse(pi);
  PermutationPath path;
  path.column_value = j;
  path.pivot_position = sigma.position_of(j);
  path.pivot_x = j;
  path.pivot_y = pinv(j);
  for (int i = 1; i < path.pivot_position; ++i) {
    const int x = sigma(i);
    const int y = pinv(x);
    // distinct values keep every point off the pivot lines
    Quadrant q;
    if (x > path.pivot_x)
      q = y > path.pivot_y ? Quadrant::I : Quadrant::IV;
    else
      q = y > path.pivot_y ? Quadrant::II : Quadrant::III;
    path.points.push_back({x, y, q});
  }
  return path;
}

/// Verifies the geometric facts the diagonal computation rests on, for one
/// path.  Returns human-readable violations; empty means all hold.
///  - no point interior to Quadrant I and no step pointing down-left;
///  - up-right steps happen exactly at forbidden swaps and cross no pivot line;
///  - II/III and IV/III crossings carry the documented sign-grid entries;
///  - same-quadrant or II/IV steps have sign 0;
///  - the Quadrant III census matches the non-inverted values below j in pi;
///  - the column sum of the sign grid matches the census minus the
///    correction term from column 0.
inline std::vector<std::string> check_path_lemmas(const Permutation& sigma, const Permutation& pi,
                                                  int j) {
  const PermutationPath path = permutation_path(sigma, pi, j);
  const SignGrid grid = sign_grid(sigma, pi);
  const std::set<int> forbidden = forbidden_swaps(sigma, pi);
  const Permutation pinv = inverse(pi);
  const int k = path.pivot_position;
  std::vector<std::string> bad;
  auto complain = [&](const std::string& msg) {
    bad.push_back("sigma=" + to_string(sigma) + " pi=" + to_string(pi) +
                  " j=" + std::to_string(j) + ": " + msg);
  };

  for (const auto& p : path.points)
    if (p.x > path.pivot_x && p.y > path.pivot_y)
      complain("point in the interior of Quadrant I");

  // step i runs from point i to point i+1, the last one into the pivot
  for (int i = 1; i <= k - 1; ++i) {
    const int x0 = path.points[static_cast<std::size_t>(i) - 1].x;
    const int y0 = path.points[static_cast<std::size_t>(i) - 1].y;
    const int x1 = i == k - 1 ? path.pivot_x : path.points[static_cast<std::size_t>(i)].x;
    const int y1 = i == k - 1 ? path.pivot_y : path.points[static_cast<std::size_t>(i)].y;
    if (x1 < x0 && y1 < y0) complain("step " + std::to_string(i) + " points down-left");
    const bool up_right = x1 > x0 && y1 > y0;
    if (up_right != (forbidden.count(i) > 0))
      complain("step " + std::to_string(i) + " up-right != forbidden");
    // crossing the pivot lines is exactly membership of j in A_i / B_i
    const bool crosses_x = (x0 < path.pivot_x) != (x1 < path.pivot_x) && x1 != path.pivot_x;
    const bool crosses_y = (y0 < path.pivot_y) != (y1 < path.pivot_y) && y1 != path.pivot_y;
    if (crosses_x != (set_A(sigma, i).count(j) > 0))
      complain("step " + std::to_string(i) + " x-crossing disagrees with A membership");
    if (crosses_y != (set_B(sigma, i, pi).count(j) > 0))
      complain("step " + std::to_string(i) + " y-crossing disagrees with B membership");
    if (up_right && (crosses_x || crosses_y))
      complain("forbidden step " + std::to_string(i) + " crosses a pivot line");
    if (i >= k - 1) continue;  // the pivot endpoint carries no quadrant
    const Quadrant q0 = path.points[static_cast<std::size_t>(i) - 1].quadrant;
    const Quadrant q1 = path.points[static_cast<std::size_t>(i)].quadrant;
    const int s = grid.at(i, j);
    if (q0 == q1 ||
        (q0 == Quadrant::II && q1 == Quadrant::IV) ||
        (q0 == Quadrant::IV && q1 == Quadrant::II)) {
      if (s != 0) complain("step " + std::to_string(i) + " expected sign 0");
    } else if (q0 == Quadrant::II && q1 == Quadrant::III) {
      if (!(x1 > x0 && y1 < y0) || s != -1)
        complain("II->III step " + std::to_string(i) + " wrong direction or sign");
    } else if (q0 == Quadrant::III && q1 == Quadrant::II) {
      if (!(x1 < x0 && y1 > y0) || s != 1)
        complain("III->II step " + std::to_string(i) + " wrong direction or sign");
    } else if (q0 == Quadrant::IV && q1 == Quadrant::III) {
      if (!(x1 < x0 && y1 > y0) || s != -1)
        complain("IV->III step " + std::to_string(i) + " wrong direction or sign");
    } else if (q0 == Quadrant::III && q1 == Quadrant::IV) {
      if (!(x1 > x0 && y1 < y0) || s != 1)
        complain("III->IV step " + std::to_string(i) + " wrong direction or sign");
    }
  }

  int expected_iii = 0;
  for (int v = 1; v < j; ++v)
    if (pinv(v) < pinv(j)) ++expected_iii;
  if (path.quadrant_iii_count() != expected_iii)
    complain("Quadrant III census " + std::to_string(path.quadrant_iii_count()) + " != " +
             std::to_string(expected_iii));

  long correction = 0;
  if (k >= 2) correction = static_cast<long>(k - 1) * grid.at(k - 1, 0);
  if (grid.column_weighted_sum(j) != expected_iii - correction)
    complain("column sum " + std::to_string(grid.column_weighted_sum(j)) + " != " +
             std::to_string(expected_iii) + " - " + std::to_string(correction));
  return bad;
}

/// The completed diamond over sigma and tau (same length, both below pi):
/// alpha = sigma s_m covers sigma in weak order and covers tau in strong
/// order; beta = tau s_m is covered by tau in weak order and by sigma in
/// strong order.  alpha exists iff beta exists, and both are unique.
struct DiamondPair {
  Permutation alpha;
  Permutation beta;
  int m;  // alpha = sigma s_m and beta = tau s_m
};

inline std::optional<DiamondPair> diamond_complete(const Permutation& sigma,
                                                   const Permutation& tau,
                                                   const Permutation& pi) {
  if (sigma == tau) throw Error("diamond_complete: sigma and tau must differ");
  detail::require_in_interval(sigma, pi);
  detail::require_in_interval(tau, pi);
  if (length(sigma) != length(tau))
    throw Error("diamond_complete: sigma and tau must have equal length");
  const int n = sigma.size();
  const InvMask pi_mask = inversion_mask(pi);

  std::set<std::vector<int>> tau_strong_targets;
  for (const auto& cov : strong_up_covers(tau)) tau_strong_targets.insert(cov.target.word());

  std::optional<DiamondPair> found;
  int alpha_count = 0, beta_count = 0;
  std::optional<int> alpha_m, beta_m;
  for (int m = 1; m < n; ++m) {
    if (!sigma.has_right_descent(m)) {
      const Permutation alpha = right_multiply_simple(sigma, m);
      if (inversion_mask(alpha).subset_of(pi_mask) && tau_strong_targets.count(alpha.word())) {
        ++alpha_count;
        alpha_m = m;
      }
    }
    if (tau.has_right_descent(m)) {
      const Permutation beta = right_multiply_simple(tau, m);
      for (const auto& cov : strong_up_covers(beta)) {
        if (cov.target == sigma) {
          ++beta_count;
          beta_m = m;
          break;
        }
      }
    }
  }
  if (alpha_count > 1 || beta_count > 1)
    throw TheoremViolation("diamond over " + to_string(sigma) + ", " + to_string(tau) +
                           " is not unique");
  if ((alpha_count == 1) != (beta_count == 1) ||
      (alpha_count == 1 && *alpha_m != *beta_m))
    throw TheoremViolation("diamond over " + to_string(sigma) + ", " + to_string(tau) +
                           " exists in only one direction");
  if (alpha_count == 0) return std::nullopt;
  found = DiamondPair{right_multiply_simple(sigma, *alpha_m),
                      right_multiply_simple(tau, *alpha_m), *alpha_m};
  return found;
}

}  // namespace bruhat_sl2

#endif  // BRUHAT_SL2_DIAGNOSTICS_HPP
