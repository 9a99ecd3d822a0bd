#include <doctest.h>

#include "bruhat_sl2/sperner.hpp"
#include "test_helpers.hpp"

using namespace bruhat_sl2;
using test_helpers::avoiders_132;

TEST_CASE("restricted F powers on small intervals") {
  {
    const WeakInterval I = build_interval(longest_element(3));
    const SparseIntMatrix F = build_F(I);
    const IntMatrix bottom = fpower_restricted(I, F, 0);
    REQUIRE(bottom.size() == 1);
    REQUIRE(bottom[0].size() == 1);
    // F^3 from w_0 to e sums the letter products of both reduced words
    CHECK(bottom[0][0] == 6);
    const IntMatrix middle = fpower_restricted(I, F, 1);
    CHECK(exact_rank(middle) == 2);
  }
  {
    const WeakInterval I = build_interval(Permutation({2, 3, 1}));
    const SparseIntMatrix F = build_F(I);
    const IntMatrix bottom = fpower_restricted(I, F, 0);
    CHECK(bottom[0][0] == 2);  // the single descent chain multiplies 1 * 2
  }
  {
    // even top length: F^0 restricted to the middle rank is the identity
    const WeakInterval I = build_interval(Permutation({2, 3, 1}));
    const SparseIntMatrix F = build_F(I);
    const IntMatrix mid = fpower_restricted(I, F, 1);
    REQUIRE(mid.size() == 1);
    CHECK(mid[0][0] == 1);
  }
  {
    const WeakInterval I = build_interval(longest_element(3));
    const SparseIntMatrix F = build_F(I);
    CHECK_THROWS_AS(fpower_restricted(I, F, 2), Error);
  }
}

TEST_CASE("F power down the whole interval is strictly positive") {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& pi : avoiders_132(n)) {
      const WeakInterval I = build_interval(pi);
      const SparseIntMatrix F = build_F(I);
      const IntMatrix bottom = fpower_restricted(I, F, 0);
      REQUIRE(bottom.size() == 1);
      REQUIRE(bottom[0].size() == 1);
      CHECK(bottom[0][0] > 0);
    }
  }
}

TEST_CASE("certificates") {
  const SpernerCertificate trivial = certify_sperner(Permutation({2, 1}));
  CHECK(trivial.verdict == SpernerVerdict::certified);
  CHECK(trivial.rank_sizes == std::vector<int>{1, 1});
  CHECK(trivial.fpower_ranks == std::vector<int>{1});

  CHECK_THROWS_AS(certify_sperner(Permutation({1, 3, 2})), Non132Avoiding);

  const SpernerCertificate bounded = certify_sperner(longest_element(4), 5);
  CHECK(bounded.verdict == SpernerVerdict::inconclusive);
  CHECK_FALSE(bounded.note.empty());

  for (int n = 1; n <= 4; ++n) {
    for (const auto& pi : avoiders_132(n)) {
      const SpernerCertificate cert = certify_sperner(pi);
      CHECK(cert.verdict == SpernerVerdict::certified);
      for (bool full : cert.fpower_full_rank) CHECK(full);
    }
  }

  // parabolic quotient tops are covered by the theorem as well
  const SpernerCertificate quotient = certify_sperner(parabolic_max(5, {2, 3}));
  CHECK(quotient.verdict == SpernerVerdict::certified);
}

TEST_CASE("max antichain oracle") {
  const WeakInterval chain = build_interval(Permutation({2, 3, 1}));
  CHECK(max_antichain_oracle(chain, OrderKind::weak) == 1);
  CHECK(max_antichain_oracle(chain, OrderKind::strong) == 1);

  const WeakInterval s3 = build_interval(longest_element(3));
  CHECK(max_antichain_oracle(s3, OrderKind::weak) == 2);
  CHECK(max_antichain_oracle(s3, OrderKind::strong) == 2);

  // on certified intervals the weak-order antichain bound meets the largest rank
  for (int n = 1; n <= 5; ++n) {
    for (const auto& pi : avoiders_132(n)) {
      const WeakInterval I = build_interval(pi);
      int max_rank = 0;
      for (int s : I.rank_sizes()) max_rank = std::max(max_rank, s);
      CHECK(max_antichain_oracle(I, OrderKind::weak) == max_rank);
    }
  }
}

TEST_CASE("k-Sperner brute force") {
  const WeakInterval s3 = build_interval(longest_element(3));
  CHECK(k_sperner_bruteforce(s3, 1) == 2);
  CHECK(k_sperner_bruteforce(s3, 2) == 4);
  CHECK(k_sperner_bruteforce(s3, 3) == 5);
  CHECK(k_sperner_bruteforce(s3, 4) == 6);
  CHECK(k_sperner_bruteforce(s3, 10) == 6);
  CHECK_THROWS_AS(k_sperner_bruteforce(s3, 0), Error);
  CHECK_THROWS_AS(k_sperner_bruteforce(build_interval(longest_element(4)), 1, 20),
                  TooLargeForBruteForce);

  // chain: k antichains cover exactly k elements
  const WeakInterval chain = build_interval(Permutation({2, 3, 1}));
  for (int k = 1; k <= 3; ++k) CHECK(k_sperner_bruteforce(chain, k) == k);
}

TEST_CASE("k-Sperner brute force matches top rank sums on feasible intervals") {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& pi : avoiders_132(n)) {
      const WeakInterval I = build_interval(pi);
      if (I.size() > 24) continue;
      const SpernerOracleResults oracle = run_sperner_oracles(I);
      CHECK(oracle.antichain_agrees);
      CHECK(oracle.k_sperner_agrees);
      CHECK(oracle.k_union_sizes == oracle.top_rank_sums);
    }
  }
}
