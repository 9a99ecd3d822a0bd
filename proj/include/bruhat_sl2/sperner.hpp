#ifndef BRUHAT_SL2_SPERNER_HPP
#define BRUHAT_SL2_SPERNER_HPP

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bruhat_sl2/bigint.hpp"
#include "bruhat_sl2/errors.hpp"
#include "bruhat_sl2/interval.hpp"
#include "bruhat_sl2/linear_operator.hpp"
#include "bruhat_sl2/permutation.hpp"
#include "bruhat_sl2/sl2.hpp"

namespace bruhat_sl2 {

/// Matrix of F^{r-2i} restricted to domain rank r-i and codomain rank i,
/// where r = l(pi).  Columns follow the canonical order of rank r-i,
/// rows the canonical order of rank i.  Computed by iterated sparse
/// matrix-vector products, never by powering the full operator.
inline IntMatrix fpower_restricted(const WeakInterval& I, const SparseIntMatrix& F, int i) {
  const int r = I.top_length();
  if (i < 0 || 2 * i > r)
    throw Error("fpower_restricted: rank index " + std::to_string(i) + " outside 0..r/2");
  const auto& domain = I.ranks()[static_cast<std::size_t>(r - i)];
  const auto& codomain = I.ranks()[static_cast<std::size_t>(i)];
  if (domain.size() != codomain.size())
    throw DimensionMismatch("rank sizes " + std::to_string(domain.size()) + " vs " +
                            std::to_string(codomain.size()) +
                            " differ; palindromicity violated");
  const int power = r - 2 * i;
  IntMatrix m(codomain.size(), std::vector<Int>(domain.size(), Int{0}));
  for (std::size_t col = 0; col < domain.size(); ++col) {
    std::vector<Int> vec(static_cast<std::size_t>(I.size()), Int{0});
    vec[static_cast<std::size_t>(domain[col])] = 1;
    for (int p = 0; p < power; ++p) vec = F.apply(vec);
    for (std::size_t row = 0; row < codomain.size(); ++row)
      m[row][col] = vec[static_cast<std::size_t>(codomain[row])];
  }
  return m;
}

enum class SpernerVerdict { certified, refuted, inconclusive };

inline const char* to_string(SpernerVerdict v) {
  switch (v) {
    case SpernerVerdict::certified: return "certified";
    case SpernerVerdict::refuted: return "refuted";
    case SpernerVerdict::inconclusive: return "inconclusive";
  }
  return "?";
}

/// Result of the rank-isomorphism certification.  "certified" means every
/// restricted F-power between mirrored ranks has full rank, which is
/// Stanley's criterion for the strong Sperner property.  "refuted" would
/// contradict the theorem and is treated as a build-stopping event by the
/// test suite; "inconclusive" records only that the size bound was hit.
struct SpernerCertificate {
  explicit SpernerCertificate(Permutation top) : pi(std::move(top)) {}

  Permutation pi;
  SpernerVerdict verdict = SpernerVerdict::inconclusive;
  std::vector<int> rank_sizes;
  std::vector<int> fpower_ranks;       // per i = 0..floor(r/2)
  std::vector<bool> fpower_full_rank;  // same indexing
  std::string note;
};

inline SpernerCertificate certify_sperner(
    const Permutation& pi, std::size_t max_elements = WeakInterval::kDefaultMaxElements) {
  if (!avoids_132(pi)) throw Non132Avoiding(to_string(pi) + " contains the pattern 132");
  SpernerCertificate cert(pi);
  std::optional<WeakInterval> interval;
  try {
    interval = build_interval(pi, max_elements);
  } catch (const IntervalTooLarge& e) {
    cert.verdict = SpernerVerdict::inconclusive;
    cert.note = e.what();
    return cert;
  }
  const WeakInterval& I = *interval;
  cert.rank_sizes = I.rank_sizes();
  const int r = I.top_length();
  for (int i = 0; 2 * i <= r; ++i) {
    if (cert.rank_sizes[static_cast<std::size_t>(i)] !=
        cert.rank_sizes[static_cast<std::size_t>(r - i)]) {
      cert.verdict = SpernerVerdict::refuted;
      cert.note = "rank sizes not palindromic at i=" + std::to_string(i);
      return cert;
    }
  }
  const SparseIntMatrix F = build_F(I);
  bool all_full = true;
  for (int i = 0; 2 * i <= r; ++i) {
    const IntMatrix m = fpower_restricted(I, F, i);
    const int rank = exact_rank(m);
    const int want = cert.rank_sizes[static_cast<std::size_t>(i)];
    cert.fpower_ranks.push_back(rank);
    cert.fpower_full_rank.push_back(rank == want);
    if (rank != want) all_full = false;
  }
  cert.verdict = all_full ? SpernerVerdict::certified : SpernerVerdict::refuted;
  if (!all_full) cert.note = "a restricted F-power is singular";
  return cert;
}

/// Exact maximum antichain size of the chosen order on the interval,
/// independent of the algebraic machinery: by Dilworth's theorem the answer
/// equals the minimum chain cover, computed as |P| minus a maximum matching
/// in the bipartite comparability graph (Koenig).
inline int max_antichain_oracle(const WeakInterval& I, OrderKind order) {
  const int count = I.size();
  std::vector<InvMask> masks;
  masks.reserve(static_cast<std::size_t>(count));
  for (const auto& e : I.elements()) masks.push_back(inversion_mask(e));
  std::vector<std::vector<int>> above(static_cast<std::size_t>(count));
  for (int u = 0; u < count; ++u) {
    for (int v = 0; v < count; ++v) {
      if (I.length_of(u) >= I.length_of(v)) continue;
      const bool comparable =
          order == OrderKind::weak
              ? masks[static_cast<std::size_t>(u)].subset_of(masks[static_cast<std::size_t>(v)])
              : strong_leq(I.element(u), I.element(v));
      if (comparable) above[static_cast<std::size_t>(u)].push_back(v);
    }
  }
  std::vector<int> match(static_cast<std::size_t>(count), -1);
  std::vector<char> used;
  auto try_augment = [&](auto&& self, int u) -> bool {
    for (int v : above[static_cast<std::size_t>(u)]) {
      if (used[static_cast<std::size_t>(v)]) continue;
      used[static_cast<std::size_t>(v)] = 1;
      if (match[static_cast<std::size_t>(v)] < 0 || self(self, match[static_cast<std::size_t>(v)])) {
        match[static_cast<std::size_t>(v)] = u;
        return true;
      }
    }
    return false;
  };
  int matching = 0;
  for (int u = 0; u < count; ++u) {
    used.assign(static_cast<std::size_t>(count), 0);
    if (try_augment(try_augment, u)) ++matching;
  }
  return count - matching;
}

/// Maximum size of a union of k antichains in the weak order on the
/// interval, by exhaustive search.  A subset is a union of k antichains
/// exactly when it contains no chain of k+1 elements (Mirsky), which the
/// search tracks incrementally while pruning against the best bound.
inline int k_sperner_bruteforce(const WeakInterval& I, int k, int max_elements_for_bruteforce = 24) {
  const int count = I.size();
  if (count > max_elements_for_bruteforce)
    throw TooLargeForBruteForce("interval has " + std::to_string(count) +
                                " elements; brute force bound is " +
                                std::to_string(max_elements_for_bruteforce));
  if (k < 1) throw Error("k_sperner_bruteforce: k must be positive");
  std::vector<InvMask> masks;
  masks.reserve(static_cast<std::size_t>(count));
  for (const auto& e : I.elements()) masks.push_back(inversion_mask(e));
  // less[u][v] for u < v in weak order; canonical order makes u < v imply u before v
  std::vector<std::vector<char>> less(static_cast<std::size_t>(count),
                                      std::vector<char>(static_cast<std::size_t>(count), 0));
  for (int u = 0; u < count; ++u)
    for (int v = u + 1; v < count; ++v)
      less[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] =
          I.length_of(u) < I.length_of(v) &&
          masks[static_cast<std::size_t>(u)].subset_of(masks[static_cast<std::size_t>(v)]);

  int best = 0;
  std::vector<int> chosen;          // canonical indices in the current subset
  std::vector<int> chain_at;        // longest chain within the subset ending at chosen[t]
  auto rec = [&](auto&& self, int idx, int taken) -> void {
    if (taken + (count - idx) <= best) return;  // cannot beat the incumbent
    if (idx == count) {
      if (taken > best) best = taken;
      return;
    }
    // include idx if it does not create a (k+1)-chain
    int longest = 1;
    for (std::size_t t = 0; t < chosen.size(); ++t) {
      if (less[static_cast<std::size_t>(chosen[t])][static_cast<std::size_t>(idx)])
        longest = std::max(longest, chain_at[t] + 1);
    }
    if (longest <= k) {
      chosen.push_back(idx);
      chain_at.push_back(longest);
      self(self, idx + 1, taken + 1);
      chosen.pop_back();
      chain_at.pop_back();
    }
    self(self, idx + 1, taken);
  };
  rec(rec, 0, 0);
  return best;
}

/// Independent cross-checks packaged for the certificate / CLI.  The
/// strong-order antichain bound is reported for exploration only; no theorem
/// is asserted about it.
struct SpernerOracleResults {
  int max_antichain_weak = 0;
  int max_antichain_strong = 0;
  int max_rank_size = 0;
  bool antichain_agrees = false;
  std::vector<int> k_union_sizes;  // k = 1..r+1; empty when brute force is infeasible
  std::vector<int> top_rank_sums;  // sums of the k largest rank sizes
  bool k_sperner_agrees = true;
};

inline SpernerOracleResults run_sperner_oracles(const WeakInterval& I,
                                                int bruteforce_bound = 24) {
  SpernerOracleResults res;
  res.max_antichain_weak = max_antichain_oracle(I, OrderKind::weak);
  res.max_antichain_strong = max_antichain_oracle(I, OrderKind::strong);
  for (int s : I.rank_sizes()) res.max_rank_size = std::max(res.max_rank_size, s);
  res.antichain_agrees = res.max_antichain_weak == res.max_rank_size;
  std::vector<int> sorted_sizes = I.rank_sizes();
  std::sort(sorted_sizes.begin(), sorted_sizes.end(), std::greater<int>());
  if (I.size() <= bruteforce_bound) {
    int sum = 0;
    for (std::size_t k = 1; k <= sorted_sizes.size(); ++k) {
      sum += sorted_sizes[k - 1];
      res.top_rank_sums.push_back(sum);
      res.k_union_sizes.push_back(k_sperner_bruteforce(I, static_cast<int>(k), bruteforce_bound));
      if (res.k_union_sizes.back() != sum) res.k_sperner_agrees = false;
    }
  }
  return res;
}

}  // namespace bruhat_sl2

#endif  // BRUHAT_SL2_SPERNER_HPP
