#ifndef BRUHAT_SL2_INTERVAL_HPP
#define BRUHAT_SL2_INTERVAL_HPP

#include <algorithm>
#include <cstddef>
#include <deque>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "bruhat_sl2/errors.hpp"
#include "bruhat_sl2/permutation.hpp"

namespace bruhat_sl2 {

enum class OrderKind { weak, strong };

/// Right weak order: u <= v iff inv(u) is contained in inv(v).
inline bool weak_leq(const Permutation& u, const Permutation& v) {
  if (u.size() != v.size())
    throw DimensionMismatch("weak_leq: sizes " + std::to_string(u.size()) + " vs " +
                            std::to_string(v.size()));
  if (u.size() <= kMaxMaskN) return inversion_mask(u).subset_of(inversion_mask(v));
  return inversions(u).subset_of(inversions(v));
}

/// Strong (Bruhat) order comparability via the dominance criterion:
/// u <= v iff #{a <= i : u_a >= j} <= #{a <= i : v_a >= j} for all i, j.
inline bool strong_leq(const Permutation& u, const Permutation& v) {
  const int n = u.size();
  if (n != v.size())
    throw DimensionMismatch("strong_leq: sizes " + std::to_string(u.size()) + " vs " +
                            std::to_string(v.size()));
  for (int i = 1; i <= n; ++i) {
    for (int j = 2; j <= n; ++j) {
      int cu = 0, cv = 0;
      for (int a = 1; a <= i; ++a) {
        if (u(a) >= j) ++cu;
        if (v(a) >= j) ++cv;
      }
      if (cu > cv) return false;
    }
  }
  return true;
}

struct StrongCoverStep {
  int i;
  int j;
  Permutation target;
};

/// All strong-order covers sigma t_{ij} of sigma in S_n: sigma_i < sigma_j
/// and no intermediate position holds a value strictly between them.
inline std::vector<StrongCoverStep> strong_up_covers(const Permutation& sigma) {
  const int n = sigma.size();
  std::vector<StrongCoverStep> covers;
  for (int i = 1; i < n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (sigma(i) >= sigma(j)) continue;
      bool blocked = false;
      for (int k = i + 1; k < j; ++k) {
        if (sigma(i) < sigma(k) && sigma(k) < sigma(j)) {
          blocked = true;
          break;
        }
      }
      if (!blocked) covers.push_back({i, j, right_multiply_transposition(sigma, i, j)});
    }
  }
  return covers;
}

/// The weak-order interval [e,pi]_R as an explicit ranked poset.
///
/// Elements are stored in a canonical order (length, then lexicographic
/// one-line word) so that matrix indexing and serialization are
/// reproducible.  Immutable after construction; safe for shared reads.
class WeakInterval {
 public:
  static constexpr std::size_t kDefaultMaxElements = 500000;

  struct WeakCover {
    int i;       // sigma lessdot sigma s_i
    int target;  // canonical index of sigma s_i
  };
  struct StrongCover {
    int i;
    int j;       // sigma precdot sigma t_{ij}
    int target;  // canonical index of sigma t_{ij}
  };

  const Permutation& top() const { return pi_; }
  const InvMask& top_mask() const { return pi_mask_; }
  const Permutation& top_inverse() const { return pi_inverse_; }
  int n() const { return pi_.size(); }
  int size() const { return static_cast<int>(elements_.size()); }
  int top_length() const { return top_length_; }

  const std::vector<Permutation>& elements() const { return elements_; }
  const Permutation& element(int idx) const { return elements_[static_cast<std::size_t>(idx)]; }
  int length_of(int idx) const { return lengths_[static_cast<std::size_t>(idx)]; }
  const std::vector<std::vector<int>>& ranks() const { return ranks_; }
  std::vector<int> rank_sizes() const {
    std::vector<int> sizes;
    sizes.reserve(ranks_.size());
    for (const auto& r : ranks_) sizes.push_back(static_cast<int>(r.size()));
    return sizes;
  }

  const std::vector<std::vector<WeakCover>>& weak_up_covers() const { return weak_covers_; }
  const std::vector<std::vector<StrongCover>>& strong_up_covers() const { return strong_covers_; }

  std::optional<int> find(const Permutation& sigma) const {
    auto it = index_.find(sigma.word());
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  bool contains(const Permutation& sigma) const { return find(sigma).has_value(); }
  int index_of(const Permutation& sigma) const {
    auto idx = find(sigma);
    if (!idx)
      throw NotInInterval(to_string(sigma) + " is not in the interval below " + to_string(pi_));
    return *idx;
  }

  friend WeakInterval build_interval(const Permutation& pi, std::size_t max_elements);

 private:
  explicit WeakInterval(Permutation pi)
      : pi_(std::move(pi)), pi_inverse_(inverse(pi_)), pi_mask_(inversion_mask(pi_)) {}

  Permutation pi_;
  Permutation pi_inverse_;
  InvMask pi_mask_;
  int top_length_ = 0;
  std::vector<Permutation> elements_;
  std::vector<int> lengths_;
  std::vector<std::vector<int>> ranks_;
  std::vector<std::vector<WeakCover>> weak_covers_;
  std::vector<std::vector<StrongCover>> strong_covers_;
  std::unordered_map<std::vector<int>, int, WordHash> index_;
};

/// Builds [e,pi]_R by breadth-first closure from the identity under
/// length-increasing right multiplications by s_i that stay below pi.
/// Weak-order intervals are exactly the sets reachable this way, so the BFS
/// enumerates precisely { sigma : inv(sigma) subseteq inv(pi) }.
inline WeakInterval build_interval(const Permutation& pi,
                                   std::size_t max_elements = WeakInterval::kDefaultMaxElements) {
  if (!avoids_132(pi))
    throw Non132Avoiding(to_string(pi) + " contains the pattern 132");
  const int n = pi.size();
  if (n > kMaxMaskN)
    throw IntervalTooLarge("interval construction supports n <= " + std::to_string(kMaxMaskN));

  WeakInterval I(pi);
  const InvMask& pi_mask = I.pi_mask_;

  std::unordered_map<std::vector<int>, int, WordHash> seen;
  std::vector<Permutation> found;
  std::deque<Permutation> frontier;
  Permutation e = identity(n);
  seen.emplace(e.word(), 0);
  found.push_back(e);
  frontier.push_back(e);
  while (!frontier.empty()) {
    Permutation sigma = std::move(frontier.front());
    frontier.pop_front();
    for (int i = 1; i < n; ++i) {
      const int a = sigma(i), b = sigma(i + 1);
      if (a > b) continue;  // descent: goes down, already enumerated
      // sigma s_i adds exactly the inversion (b, a); it stays below pi
      // iff pi also inverts that pair.
      if (!pi_mask.test(inversion_pair_index(b, a))) continue;
      Permutation tau = right_multiply_simple(sigma, i);
      if (seen.count(tau.word())) continue;
      if (found.size() >= max_elements)
        throw IntervalTooLarge("interval below " + to_string(pi) + " exceeds bound of " +
                               std::to_string(max_elements) + " elements");
      seen.emplace(tau.word(), 0);
      found.push_back(tau);
      frontier.push_back(tau);
    }
  }

  std::sort(found.begin(), found.end(), [](const Permutation& x, const Permutation& y) {
    const int lx = length(x), ly = length(y);
    if (lx != ly) return lx < ly;
    return x < y;
  });

  I.elements_ = std::move(found);
  const int count = I.size();
  I.top_length_ = length(pi);
  I.lengths_.reserve(static_cast<std::size_t>(count));
  I.ranks_.assign(static_cast<std::size_t>(I.top_length_) + 1, {});
  for (int idx = 0; idx < count; ++idx) {
    const int len = length(I.elements_[static_cast<std::size_t>(idx)]);
    I.lengths_.push_back(len);
    I.ranks_[static_cast<std::size_t>(len)].push_back(idx);
    I.index_.emplace(I.elements_[static_cast<std::size_t>(idx)].word(), idx);
  }

  I.weak_covers_.resize(static_cast<std::size_t>(count));
  I.strong_covers_.resize(static_cast<std::size_t>(count));
  for (int idx = 0; idx < count; ++idx) {
    const Permutation& sigma = I.elements_[static_cast<std::size_t>(idx)];
    auto& weak = I.weak_covers_[static_cast<std::size_t>(idx)];
    for (int i = 1; i < n; ++i) {
      const int a = sigma(i), b = sigma(i + 1);
      if (a < b && pi_mask.test(inversion_pair_index(b, a)))
        weak.push_back({i, I.index_.at(right_multiply_simple(sigma, i).word())});
    }
    auto& strong = I.strong_covers_[static_cast<std::size_t>(idx)];
    for (int i = 1; i < n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        const int a = sigma(i), b = sigma(j);
        if (a >= b) continue;
        // Cover test and incremental membership test in one scan: the swap
        // replaces inversions (a,c) by (b,c) for intermediate values c < a
        // and (c,b) by (c,a) for c > b, and adds (b,a).
        if (!pi_mask.test(inversion_pair_index(b, a))) continue;
        bool ok = true;
        for (int k = i + 1; k < j && ok; ++k) {
          const int c = sigma(k);
          if (a < c && c < b)
            ok = false;  // not a cover
          else if (c < a)
            ok = pi_mask.test(inversion_pair_index(b, c));
          else
            ok = pi_mask.test(inversion_pair_index(c, a));
        }
        if (!ok) continue;
        auto it = I.index_.find(right_multiply_transposition(sigma, i, j).word());
        if (it == I.index_.end())
          throw TheoremViolation("incremental membership accepted a cover outside the interval");
        strong.push_back({i, j, it->second});
      }
    }
  }
  return I;
}

}  // namespace bruhat_sl2

#endif  // BRUHAT_SL2_INTERVAL_HPP
