#include <doctest.h>

#include <set>

#include "bruhat_sl2/permutation.hpp"
#include "test_helpers.hpp"

using namespace bruhat_sl2;
using test_helpers::avoiders_132;
using test_helpers::contains_132_bruteforce;
using test_helpers::symmetric_group;

TEST_CASE("identity and longest element") {
  CHECK(identity(3).word() == std::vector<int>{1, 2, 3});
  CHECK(identity(1).word() == std::vector<int>{1});
  CHECK(identity(8).word() == std::vector<int>{1, 2, 3, 4, 5, 6, 7, 8});
  CHECK(length(identity(8)) == 0);
  CHECK_THROWS_AS(identity(0), Error);

  CHECK(longest_element(3).word() == std::vector<int>{3, 2, 1});
  CHECK(length(longest_element(3)) == 3);
  CHECK(longest_element(4).word() == std::vector<int>{4, 3, 2, 1});
  CHECK(length(longest_element(4)) == 6);
  CHECK(longest_element(2).word() == std::vector<int>{2, 1});
  CHECK(length(longest_element(2)) == 1);
  for (int n = 1; n <= 8; ++n) CHECK(length(longest_element(n)) == n * (n - 1) / 2);
}

TEST_CASE("length and inversion sets") {
  CHECK(length(Permutation({3, 2, 1})) == 3);
  CHECK(length(Permutation({1, 2, 3})) == 0);
  CHECK(length(Permutation({5, 6, 7, 3, 2, 4, 1, 8})) == 16);

  CHECK(inversions(Permutation({2, 1})).pairs == std::set<std::pair<int, int>>{{2, 1}});
  CHECK(inversions(Permutation({1, 3, 2})).pairs == std::set<std::pair<int, int>>{{3, 2}});
  CHECK(inversions(Permutation({3, 1, 2})).pairs ==
        std::set<std::pair<int, int>>{{3, 1}, {3, 2}});

  // l(sigma) = |inv(sigma)| exhaustively
  for (int n = 1; n <= 6; ++n)
    for (const auto& sigma : symmetric_group(n)) CHECK(length(sigma) == inversions(sigma).size());
}

TEST_CASE("inversion masks agree with explicit sets") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& sigma : symmetric_group(n)) {
      const InvMask mask = inversion_mask(sigma);
      const InversionSet inv = inversions(sigma);
      CHECK(mask.count() == inv.size());
      for (const auto& [a, b] : inv.pairs) CHECK(mask.test(inversion_pair_index(a, b)));
    }
  }
}

TEST_CASE("inverse") {
  CHECK(inverse(Permutation({2, 3, 1})) == Permutation({3, 1, 2}));
  CHECK(inverse(Permutation({1, 2, 3})) == Permutation({1, 2, 3}));
  CHECK(inverse(Permutation({3, 2, 1})) == Permutation({3, 2, 1}));
  for (const auto& sigma : symmetric_group(5)) {
    CHECK(inverse(inverse(sigma)) == sigma);
    CHECK(length(inverse(sigma)) == length(sigma));
    // composition check: sigma(inverse(sigma)(v)) = v
    for (int v = 1; v <= 5; ++v) CHECK(sigma(inverse(sigma)(v)) == v);
  }
}

TEST_CASE("right multiplication by transpositions") {
  CHECK(right_multiply_transposition(Permutation({1, 2, 3}), 1, 2) == Permutation({2, 1, 3}));
  CHECK(right_multiply_transposition(Permutation({2, 1, 3}), 1, 3) == Permutation({3, 1, 2}));
  CHECK(right_multiply_transposition(Permutation({3, 1, 2}), 2, 3) == Permutation({3, 2, 1}));
  CHECK_THROWS_AS(right_multiply_transposition(Permutation({1, 2, 3}), 2, 2), Error);
  CHECK_THROWS_AS(right_multiply_transposition(Permutation({1, 2, 3}), 0, 2), Error);
  CHECK_THROWS_AS(right_multiply_transposition(Permutation({1, 2, 3}), 1, 4), Error);
}

TEST_CASE("left multiplication swaps values") {
  // s_1 * 321 exchanges the values 1 and 2
  CHECK(left_multiply_simple(Permutation({3, 2, 1}), 1) == Permutation({3, 1, 2}));
  CHECK(left_multiply_simple(Permutation({3, 2, 1}), 2) == Permutation({2, 3, 1}));
  for (const auto& sigma : symmetric_group(4)) {
    for (int i = 1; i < 4; ++i) {
      const Permutation lhs = left_multiply_simple(sigma, i);
      const int delta = length(lhs) - length(sigma);
      CHECK((delta == 1 || delta == -1));
      CHECK((delta == 1) == (sigma.position_of(i) < sigma.position_of(i + 1)));
    }
  }
}

TEST_CASE("pattern containment") {
  CHECK(contains_pattern(Permutation({1, 3, 2}), Permutation({1, 3, 2})));
  CHECK_FALSE(contains_pattern(Permutation({5, 6, 7, 3, 2, 4, 1, 8}), Permutation({1, 3, 2})));
  CHECK_FALSE(contains_pattern(Permutation({3, 2, 1}), Permutation({1, 2})));
  CHECK_THROWS_AS(contains_pattern(Permutation({2, 1}), Permutation({1, 3, 2})), Error);

  for (int n = 1; n <= 7; ++n)
    for (const auto& sigma : symmetric_group(n))
      CHECK(avoids_132(sigma) == !contains_132_bruteforce(sigma));
}

TEST_CASE("132-avoiders are counted by Catalan numbers") {
  const int catalan[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430};
  for (int n = 1; n <= 8; ++n) {
    int count = 0;
    for (const auto& sigma : symmetric_group(n))
      if (avoids_132(sigma)) ++count;
    CHECK(count == catalan[n]);
  }
}

TEST_CASE("parabolic maxima") {
  CHECK(parabolic_max(3, {}) == Permutation({3, 2, 1}));
  CHECK(parabolic_max(3, {1, 2}) == Permutation({1, 2, 3}));
  // brute force over S_4 restricted to sigma_2 < sigma_3 gives a unique
  // maximizer of length 5
  CHECK(parabolic_max(4, {2}) == Permutation({4, 2, 3, 1}));
  CHECK(length(parabolic_max(4, {2})) == 5);

  for (int n = 1; n <= 6; ++n) {
    const auto group = symmetric_group(n);
    for (int bits = 0; bits < (1 << (n - 1)); ++bits) {
      std::set<int> J;
      for (int i = 1; i < n; ++i)
        if (bits & (1 << (i - 1))) J.insert(i);
      const Permutation claimed = parabolic_max(n, J);
      CHECK(avoids_132(claimed));
      int best_len = -1;
      int best_count = 0;
      for (const auto& sigma : group) {
        bool admissible = true;
        for (int i : J)
          if (sigma(i) > sigma(i + 1)) admissible = false;
        if (!admissible) continue;
        const int len = length(sigma);
        if (len > best_len) {
          best_len = len;
          best_count = 1;
        } else if (len == best_len) {
          ++best_count;
        }
      }
      CHECK(best_count == 1);  // the maximizer is unique
      CHECK(length(claimed) == best_len);
      for (int i : J) CHECK(claimed(i) < claimed(i + 1));
    }
  }
}

TEST_CASE("lehmer code") {
  CHECK(lehmer_code(Permutation({1, 2, 3})) == std::vector<int>{0, 0, 0});
  CHECK(lehmer_code(Permutation({3, 2, 1})) == std::vector<int>{2, 1, 0});
  CHECK(lehmer_code(Permutation({3, 1, 2})) == std::vector<int>{2, 0, 0});
  for (const auto& sigma : symmetric_group(5)) {
    const auto code = lehmer_code(sigma);
    int total = 0;
    for (int c : code) total += c;
    CHECK(total == length(sigma));
  }
}

TEST_CASE("text round trip and strict parsing") {
  CHECK(to_string(Permutation({5, 6, 7, 3, 2, 4, 1, 8})) == "5,6,7,3,2,4,1,8");
  CHECK(parse_permutation("5,6,7,3,2,4,1,8") == Permutation({5, 6, 7, 3, 2, 4, 1, 8}));
  CHECK(parse_permutation(" 2, 1 ") == Permutation({2, 1}));
  for (const auto& sigma : symmetric_group(5))
    CHECK(parse_permutation(to_string(sigma)) == sigma);

  CHECK_THROWS_WITH_AS(parse_permutation("1,1"), doctest::Contains("duplicate value 1"),
                       ParseError);
  CHECK_THROWS_WITH_AS(parse_permutation("1,3"), doctest::Contains("out of range"), ParseError);
  CHECK_THROWS_WITH_AS((void)Permutation({1, 2, 4, 4}), doctest::Contains("duplicate value 4"),
                       ParseError);
  CHECK_THROWS_AS(parse_permutation("1,,2"), ParseError);
  CHECK_THROWS_AS(parse_permutation("a,b"), ParseError);
  CHECK_THROWS_AS(parse_permutation(""), ParseError);
  CHECK_THROWS_AS(parse_permutation("0,1"), ParseError);
  CHECK_THROWS_AS(parse_permutation("1,2,"), ParseError);
  CHECK_THROWS_AS(parse_permutation(",1,2"), ParseError);
  CHECK_THROWS_AS(parse_permutation("1 2"), ParseError);
  CHECK_THROWS_AS(parse_permutation("2,1.5"), ParseError);
  CHECK_THROWS_AS(parse_permutation("-1,2"), ParseError);
}
