#ifndef BRUHAT_SL2_PERMUTATION_HPP
#define BRUHAT_SL2_PERMUTATION_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "bruhat_sl2/errors.hpp"

namespace bruhat_sl2 {

/// A permutation of {1,...,n} in one-line notation sigma_1 ... sigma_n.
/// Positions and values are 1-based throughout the public interface.
/// Instances are immutable values; every operation returns a fresh object.
class Permutation {
 public:
  explicit Permutation(std::vector<int> word) : word_(std::move(word)) { validate(); }

  int size() const { return static_cast<int>(word_.size()); }

  /// Value at 1-based position i.
  int operator()(int i) const { return word_[static_cast<std::size_t>(i) - 1]; }

  /// 1-based position of a value, i.e. sigma^{-1}(value).
  int position_of(int value) const {
    for (int i = 1; i <= size(); ++i)
      if ((*this)(i) == value) return i;
    throw Error("position_of: value " + std::to_string(value) + " out of range");
  }

  const std::vector<int>& word() const { return word_; }

  bool is_identity() const {
    for (int i = 1; i <= size(); ++i)
      if ((*this)(i) != i) return false;
    return true;
  }

  /// True when sigma_i > sigma_{i+1} (so sigma s_i < sigma in weak order).
  bool has_right_descent(int i) const {
    check_simple_index(i);
    return (*this)(i) > (*this)(i + 1);
  }

  friend bool operator==(const Permutation& a, const Permutation& b) { return a.word_ == b.word_; }
  friend bool operator!=(const Permutation& a, const Permutation& b) { return !(a == b); }
  /// Lexicographic order on the one-line word; used for canonical orderings.
  friend bool operator<(const Permutation& a, const Permutation& b) { return a.word_ < b.word_; }

 private:
  void check_simple_index(int i) const {
    if (i < 1 || i >= size())
      throw Error("simple-reflection index " + std::to_string(i) + " out of range for n=" +
                  std::to_string(size()));
  }

  void validate() const {
    const int n = size();
    if (n == 0) throw ParseError("permutation must have at least one entry");
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    for (int v : word_) {
      if (v < 1 || v > n)
        throw ParseError("value " + std::to_string(v) + " out of range 1.." + std::to_string(n));
      if (seen[static_cast<std::size_t>(v)])
        throw ParseError("duplicate value " + std::to_string(v));
      seen[static_cast<std::size_t>(v)] = 1;
    }
    for (int v = 1; v <= n; ++v)
      if (!seen[static_cast<std::size_t>(v)])
        throw ParseError("missing value " + std::to_string(v));
  }

  std::vector<int> word_;
};

struct WordHash {
  std::size_t operator()(const std::vector<int>& w) const {
    std::size_t h = 1469598103934665603ull;
    for (int v : w) h = (h ^ static_cast<std::size_t>(v)) * 1099511628211ull;
    return h;
  }
};

/// The set of value pairs (a, b) with a > b and a appearing before b.
struct InversionSet {
  std::set<std::pair<int, int>> pairs;

  int size() const { return static_cast<int>(pairs.size()); }
  bool contains(int a, int b) const { return pairs.count({a, b}) > 0; }
  bool subset_of(const InversionSet& other) const {
    return std::includes(other.pairs.begin(), other.pairs.end(), pairs.begin(), pairs.end());
  }
  friend bool operator==(const InversionSet& x, const InversionSet& y) { return x.pairs == y.pairs; }
};

// Packed inversion sets: one bit per value pair (a,b), a > b.  Covers
// n <= kMaxMaskN, far past anything the interval machinery can hold.
inline constexpr int kMaxMaskN = 23;

struct InvMask {
  std::array<std::uint64_t, 4> bits{};

  void set(int idx) { bits[static_cast<std::size_t>(idx >> 6)] |= std::uint64_t{1} << (idx & 63); }
  bool test(int idx) const {
    return (bits[static_cast<std::size_t>(idx >> 6)] >> (idx & 63)) & 1u;
  }
  bool subset_of(const InvMask& o) const {
    for (std::size_t w = 0; w < bits.size(); ++w)
      if (bits[w] & ~o.bits[w]) return false;
    return true;
  }
  int count() const {
    int c = 0;
    for (auto w : bits) c += __builtin_popcountll(w);
    return c;
  }
  friend bool operator==(const InvMask& x, const InvMask& y) { return x.bits == y.bits; }
};

/// Bit index of the value pair (a, b) with a > b >= 1.
inline int inversion_pair_index(int a, int b) { return (a - 1) * (a - 2) / 2 + (b - 1); }

inline InvMask inversion_mask(const Permutation& sigma) {
  const int n = sigma.size();
  if (n > kMaxMaskN)
    throw IntervalTooLarge("inversion masks support n <= " + std::to_string(kMaxMaskN) +
                           ", got n = " + std::to_string(n));
  InvMask m;
  for (int i = 1; i < n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (sigma(i) > sigma(j)) m.set(inversion_pair_index(sigma(i), sigma(j)));
  return m;
}

inline Permutation identity(int n) {
  if (n < 1) throw Error("identity: n must be >= 1");
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  return Permutation(std::move(w));
}

/// The longest element w_0 = n, n-1, ..., 1 of length n(n-1)/2.
inline Permutation longest_element(int n) {
  if (n < 1) throw Error("longest_element: n must be >= 1");
  std::vector<int> w(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = n - i;
  return Permutation(std::move(w));
}

/// Coxeter length, equal to the number of inversions.
inline int length(const Permutation& sigma) {
  const int n = sigma.size();
  int count = 0;
  for (int i = 1; i < n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (sigma(i) > sigma(j)) ++count;
  return count;
}

inline InversionSet inversions(const Permutation& sigma) {
  const int n = sigma.size();
  InversionSet inv;
  for (int i = 1; i < n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (sigma(i) > sigma(j)) inv.pairs.insert({sigma(i), sigma(j)});
  return inv;
}

inline Permutation inverse(const Permutation& sigma) {
  const int n = sigma.size();
  std::vector<int> w(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) w[static_cast<std::size_t>(sigma(i)) - 1] = i;
  return Permutation(std::move(w));
}

/// sigma * t_{ij}: the one-line word with the entries at positions i and j
/// exchanged.  Requires 1 <= i < j <= n.
inline Permutation right_multiply_transposition(const Permutation& sigma, int i, int j) {
  const int n = sigma.size();
  if (i < 1 || j > n || i >= j)
    throw Error("right_multiply_transposition: bad positions (" + std::to_string(i) + "," +
                std::to_string(j) + ") for n=" + std::to_string(n));
  std::vector<int> w = sigma.word();
  std::swap(w[static_cast<std::size_t>(i) - 1], w[static_cast<std::size_t>(j) - 1]);
  return Permutation(std::move(w));
}

/// sigma * s_i, the adjacent-position swap.
inline Permutation right_multiply_simple(const Permutation& sigma, int i) {
  return right_multiply_transposition(sigma, i, i + 1);
}

/// s_i * sigma: exchanges the *values* i and i+1 in the one-line word.
/// Raises length exactly when i appears before i+1.
inline Permutation left_multiply_simple(const Permutation& sigma, int i) {
  const int n = sigma.size();
  if (i < 1 || i >= n)
    throw Error("left_multiply_simple: index " + std::to_string(i) + " out of range");
  std::vector<int> w = sigma.word();
  for (auto& v : w) {
    if (v == i)
      v = i + 1;
    else if (v == i + 1)
      v = i;
  }
  return Permutation(std::move(w));
}

/// True iff some index subsequence of sigma is in the same relative order as
/// the pattern p.  Plain backtracking search; the patterns in play are tiny.
inline bool contains_pattern(const Permutation& sigma, const Permutation& pattern) {
  const int n = sigma.size();
  const int k = pattern.size();
  if (k > n)
    throw Error("contains_pattern: pattern length " + std::to_string(k) +
                " exceeds host length " + std::to_string(n));
  std::vector<int> chosen;
  chosen.reserve(static_cast<std::size_t>(k));
  auto consistent = [&](int v) {
    const int t = static_cast<int>(chosen.size());
    for (int s = 0; s < t; ++s)
      if ((pattern(s + 1) < pattern(t + 1)) != (chosen[static_cast<std::size_t>(s)] < v))
        return false;
    return true;
  };
  auto rec = [&](auto&& self, int start) -> bool {
    const int t = static_cast<int>(chosen.size());
    if (t == k) return true;
    for (int pos = start; pos <= n - (k - t) + 1; ++pos) {
      const int v = sigma(pos);
      if (!consistent(v)) continue;
      chosen.push_back(v);
      if (self(self, pos + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  return rec(rec, 1);
}

inline bool avoids_132(const Permutation& sigma) {
  if (sigma.size() < 3) return true;
  return !contains_pattern(sigma, Permutation({1, 3, 2}));
}

/// The unique maximum-length permutation that is increasing at every
/// position in J.  The word is a concatenation of increasing blocks (blocks
/// delimited by the complement of J), filled with the largest values first.
inline Permutation parabolic_max(int n, const std::set<int>& J) {
  if (n < 1) throw Error("parabolic_max: n must be >= 1");
  for (int i : J)
    if (i < 1 || i >= n)
      throw Error("parabolic_max: index " + std::to_string(i) + " not in 1.." +
                  std::to_string(n - 1));
  std::vector<std::vector<int>> blocks{{1}};
  for (int i = 1; i < n; ++i) {
    if (J.count(i))
      blocks.back().push_back(i + 1);
    else
      blocks.push_back({i + 1});
  }
  std::vector<int> w(static_cast<std::size_t>(n));
  int high = n;
  for (const auto& blk : blocks) {
    const int sz = static_cast<int>(blk.size());
    for (int t = 0; t < sz; ++t)
      w[static_cast<std::size_t>(blk[static_cast<std::size_t>(t)]) - 1] = high - sz + 1 + t;
    high -= sz;
  }
  return Permutation(std::move(w));
}

/// Lehmer code: c_i = #{ j > i : sigma_j < sigma_i }.  Sums to length(sigma).
inline std::vector<int> lehmer_code(const Permutation& sigma) {
  const int n = sigma.size();
  std::vector<int> code(static_cast<std::size_t>(n), 0);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (sigma(j) < sigma(i)) ++code[static_cast<std::size_t>(i) - 1];
  return code;
}

/// Comma-separated one-line notation, e.g. "5,6,7,3,2,4,1,8".
inline std::string to_string(const Permutation& sigma) {
  std::string out;
  for (int i = 1; i <= sigma.size(); ++i) {
    if (i > 1) out += ',';
    out += std::to_string(sigma(i));
  }
  return out;
}

/// Strict parser for the comma-separated format.  Rejects non-bijections
/// with a diagnostic naming the offending value; empty entries (including a
/// trailing comma) are errors.
inline Permutation parse_permutation(const std::string& text) {
  std::vector<int> w;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    std::string token =
        comma == std::string::npos ? text.substr(start) : text.substr(start, comma - start);
    // tolerate surrounding spaces, nothing else
    const std::size_t b = token.find_first_not_of(" \t");
    const std::size_t e = token.find_last_not_of(" \t");
    if (b == std::string::npos) throw ParseError("empty entry in permutation '" + text + "'");
    token = token.substr(b, e - b + 1);
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw ParseError("bad integer '" + token + "' in permutation '" + text + "'");
    }
    if (used != token.size())
      throw ParseError("bad integer '" + token + "' in permutation '" + text + "'");
    w.push_back(v);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return Permutation(std::move(w));  // validate() names duplicates / missing values
}

}  // namespace bruhat_sl2

#endif  // BRUHAT_SL2_PERMUTATION_HPP
