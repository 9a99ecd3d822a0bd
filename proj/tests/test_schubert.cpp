#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <thread>
#include <vector>

#include "bruhat_sl2/schubert.hpp"
#include "test_helpers.hpp"

using namespace bruhat_sl2;
using test_helpers::avoiders_132;
using test_helpers::symmetric_group;

namespace {

// Independent recomputation of the Schubert recursion that always climbs to
// w_0 through the *largest* ascending value, where the library picks the
// smallest.  Agreement means the result is chain independent.
MultiPolynomial schubert_largest_ascent(const Permutation& sigma) {
  const int n = sigma.size();
  if (sigma == longest_element(n)) return MultiPolynomial::monomial(staircase(n));
  for (int v = n - 1; v >= 1; --v) {
    if (sigma.position_of(v) < sigma.position_of(v + 1))
      return divided_difference(schubert_largest_ascent(left_multiply_simple(sigma, v)), v);
  }
  throw Error("unreachable");
}

// Explicit saturated-chain enumeration with multiplicative weights; the DP
// in chain_sums_to_top must match it wherever enumeration is feasible.
void enumerate_chains(const WeakInterval& I, int idx, const Int& running, Int& total,
                      long& chains) {
  if (idx == I.size() - 1) {  // reached the top
    total += running;
    ++chains;
    return;
  }
  const Permutation& sigma = I.element(idx);
  for (const auto& cov : I.strong_up_covers()[static_cast<std::size_t>(idx)])
    enumerate_chains(I, cov.target,
                     running * weight(sigma, cov.i, cov.j, I.top()), total, chains);
}

}  // namespace

TEST_CASE("schubert polynomials on S_3") {
  SchubertTable table;
  CHECK(table.schubert(longest_element(3)) == MultiPolynomial::monomial({2, 1, 0}));
  CHECK(table.schubert(Permutation({3, 1, 2})) == MultiPolynomial::monomial({1, 1, 0}));
  CHECK(table.schubert(Permutation({2, 3, 1})) == MultiPolynomial::monomial({2, 0, 0}));
  CHECK(table.schubert(Permutation({2, 1, 3})) == MultiPolynomial::monomial({1, 0, 0}));
  MultiPolynomial s132(3);
  s132.add_term({1, 0, 0}, 1);
  s132.add_term({0, 1, 0}, 1);
  CHECK(table.schubert(Permutation({1, 3, 2})) == s132);
  CHECK(table.schubert(identity(3)) == MultiPolynomial::constant(3, 1));
}

TEST_CASE("schubert recursion is chain independent") {
  SchubertTable table;
  for (int n = 2; n <= 5; ++n)
    for (const auto& sigma : symmetric_group(n))
      CHECK(table.schubert(sigma) == schubert_largest_ascent(sigma));
}

TEST_CASE("degrees, staircase bound, distinctness") {
  SchubertTable table;
  for (int n = 1; n <= 5; ++n) {
    const auto rho = staircase(n);
    std::set<std::map<std::vector<int>, Int>> seen;
    for (const auto& sigma : symmetric_group(n)) {
      const MultiPolynomial s = table.schubert(sigma);
      CHECK(s.homogeneous_degree() == length(sigma));
      for (const auto& [exp, coeff] : s.terms()) {
        CHECK(coeff > 0);  // Schubert coefficients are nonnegative
        for (int i = 0; i < n; ++i)
          CHECK(exp[static_cast<std::size_t>(i)] <= rho[static_cast<std::size_t>(i)]);
      }
      seen.insert(s.terms());
    }
    int fact = 1;
    for (int k = 2; k <= n; ++k) fact *= k;
    CHECK(static_cast<int>(seen.size()) == fact);  // n! distinct basis elements
  }
}

TEST_CASE("single monomial iff 132-avoiding") {
  SchubertTable table;
  for (int n = 1; n <= 5; ++n)
    for (const auto& sigma : symmetric_group(n))
      CHECK((table.schubert(sigma).term_count() == 1) == avoids_132(sigma));
}

TEST_CASE("principal specializations") {
  SchubertTable table;
  CHECK(principal_specialization(table, identity(4)) == 1);
  CHECK(principal_specialization(table, Permutation({1, 3, 2})) == 2);
  for (int n = 1; n <= 5; ++n)
    for (const auto& sigma : avoiders_132(n))
      CHECK(principal_specialization(table, sigma) == 1);
}

TEST_CASE("reduced words") {
  CHECK(reduced_words(identity(2)) == std::vector<std::vector<int>>{{}});
  CHECK(reduced_words(Permutation({2, 1})) == std::vector<std::vector<int>>{{1}});
  const auto words = reduced_words(longest_element(3));
  const std::set<std::vector<int>> got(words.begin(), words.end());
  CHECK(got == std::set<std::vector<int>>{{1, 2, 1}, {2, 1, 2}});
  // every word multiplies back to sigma and has minimal length
  for (const auto& sigma : symmetric_group(4)) {
    for (const auto& word : reduced_words(sigma)) {
      CHECK(static_cast<int>(word.size()) == length(sigma));
      Permutation acc = identity(4);
      for (int letter : word) acc = right_multiply_simple(acc, letter);
      CHECK(acc == sigma);
    }
  }
}

TEST_CASE("macdonald sums") {
  CHECK(macdonald_sum(Permutation({2, 1})) == 1);
  CHECK(macdonald_sum(longest_element(3)) == 1);  // (1*2*1 + 2*1*2) / 3! = 1
  SchubertTable table;
  for (int n = 1; n <= 5; ++n)
    for (const auto& sigma : symmetric_group(n))
      CHECK(macdonald_sum(sigma) == principal_specialization(table, sigma));
}

TEST_CASE("padding") {
  SchubertTable table;
  const Permutation pi = longest_element(3);
  CHECK(schubert_monomial_exponent(table, pi) == std::vector<int>{2, 1, 0});

  const PaddedPolynomial top = pad(table, pi, pi);
  CHECK(top.terms.size() == 1);
  CHECK(top.terms.begin()->first == std::vector<int>{2, 1, 0});
  CHECK(top.x_degree() == 3);

  const PaddedPolynomial bottom = pad(table, identity(3), pi);
  CHECK(bottom.terms.size() == 1);
  CHECK(bottom.terms.begin()->first == std::vector<int>{0, 0, 0});
  CHECK(bottom.x_degree() == 0);

  const PaddedPolynomial mid = pad(table, Permutation({3, 1, 2}), pi);
  CHECK(mid.terms.size() == 1);
  CHECK(mid.terms.begin()->first == std::vector<int>{1, 1, 0});

  CHECK_THROWS_AS(pad(table, identity(3), Permutation({1, 3, 2})), Non132Avoiding);
  CHECK_THROWS_AS(pad(table, Permutation({1, 3, 2}), Permutation({2, 3, 1})), NotBelowPi);

  // alpha <= beta pointwise for every sigma <= pi, n <= 5
  for (int n = 2; n <= 5; ++n) {
    for (const auto& pi_top : avoiders_132(n)) {
      const WeakInterval I = build_interval(pi_top);
      const std::vector<int> beta = schubert_monomial_exponent(table, pi_top);
      for (const auto& sigma : I.elements()) {
        const PaddedPolynomial p = pad(table, sigma, pi_top);  // add_term enforces alpha <= beta
        CHECK(p.beta == beta);
        CHECK(p.x_degree() == length(sigma));
        CHECK(p.eval_ones() == principal_specialization(table, sigma));
      }
    }
  }
}

TEST_CASE("nabla and delta basics") {
  SchubertTable table;
  const Permutation pi = longest_element(3);
  const PaddedPolynomial top = pad(table, pi, pi);  // x^(2,1,0)
  const PaddedPolynomial dtop = nabla(top);
  // product rule: 2 x^(1,1,0) y_1 + 1 x^(2,0,0) y_2
  CHECK(dtop.terms.size() == 2);
  CHECK(dtop.terms.at({1, 1, 0}) == 2);
  CHECK(dtop.terms.at({2, 0, 0}) == 1);

  CHECK(delta(top).is_zero());                        // y-degree 0 input
  CHECK(nabla(pad(table, identity(3), pi)).is_zero());  // constant in x

  // Delta on the padded polynomial of 312 returns the top monomial
  const PaddedPolynomial mid = pad(table, Permutation({3, 1, 2}), pi);
  const PaddedPolynomial up = delta(mid);
  CHECK(up.terms.size() == 1);
  CHECK(up.terms.at({2, 1, 0}) == 1);
}

TEST_CASE("nabla expands over weak covers and delta over strong covers") {
  SchubertTable table;
  for (int n = 2; n <= 4; ++n) {
    for (const auto& pi : avoiders_132(n)) {
      const WeakInterval I = build_interval(pi);
      for (int idx = 0; idx < I.size(); ++idx) {
        const Permutation& sigma = I.element(idx);
        const PaddedPolynomial padded = pad(table, sigma, pi);

        PaddedPolynomial weak_sum;
        weak_sum.beta = padded.beta;
        for (int i = 1; i < n; ++i)
          if (sigma.has_right_descent(i))
            weak_sum.add_scaled(pad(table, right_multiply_simple(sigma, i), pi), i);
        CHECK(nabla(padded) == weak_sum);

        PaddedPolynomial strong_sum;
        strong_sum.beta = padded.beta;
        for (const auto& cov : I.strong_up_covers()[static_cast<std::size_t>(idx)])
          strong_sum.add_scaled(pad(table, I.element(cov.target), pi),
                                weight(sigma, cov.i, cov.j, pi));
        CHECK(delta(padded) == strong_sum);
      }
    }
  }
}

TEST_CASE("iterated delta reaches the top monomial with a factorial") {
  SchubertTable table;
  for (const auto& pi : avoiders_132(4)) {
    const WeakInterval I = build_interval(pi);
    const std::vector<int> beta = schubert_monomial_exponent(table, pi);
    for (const auto& sigma : I.elements()) {
      PaddedPolynomial p = pad(table, sigma, pi);
      const int codim = length(pi) - length(sigma);
      for (int t = 0; t < codim; ++t) p = delta(p);
      REQUIRE(p.terms.size() == 1);
      CHECK(p.terms.begin()->first == beta);
      CHECK(p.terms.begin()->second ==
            factorial(static_cast<unsigned long>(codim)) *
                principal_specialization(table, sigma));
    }
  }
}

TEST_CASE("chain sums on S_3") {
  CHECK(chain_sum(longest_element(3), longest_element(3)) == 1);  // empty chain
  CHECK(chain_sum(identity(3), longest_element(3)) == 1);
  CHECK(chain_sum(Permutation({1, 3, 2}), longest_element(3)) == 2);
  CHECK_THROWS_AS(chain_sum(identity(3), Permutation({1, 3, 2})), Non132Avoiding);
  CHECK_THROWS_AS(chain_sum(Permutation({1, 3, 2}), Permutation({2, 3, 1})), NotBelowPi);
}

TEST_CASE("chain DP equals explicit chain enumeration") {
  for (int n = 2; n <= 4; ++n) {
    for (const auto& pi : avoiders_132(n)) {
      const WeakInterval I = build_interval(pi);
      const std::vector<Int> sums = chain_sums_to_top(I);
      for (int idx = 0; idx < I.size(); ++idx) {
        Int total{0};
        long chains = 0;
        enumerate_chains(I, idx, Int{1}, total, chains);
        CHECK(chains <= 10000);
        CHECK(total == sums[static_cast<std::size_t>(idx)]);
      }
    }
  }
}

TEST_CASE("chain formula agrees with the other routes and is pi independent") {
  SchubertTable table;
  for (int n = 1; n <= 4; ++n) {
    for (const auto& sigma : symmetric_group(n)) {
      const Int expected = principal_specialization(table, sigma);
      for (const auto& pi : avoiders_132(n)) {
        if (!weak_leq(sigma, pi)) continue;
        CHECK(chain_sum(sigma, pi) == expected);
      }
    }
  }
}

TEST_CASE("the memo table is safe under concurrent mixed lookups") {
  SchubertTable serial;
  const auto group = symmetric_group(5);
  std::vector<MultiPolynomial> expected;
  expected.reserve(group.size());
  for (const auto& sigma : group) expected.push_back(serial.schubert(sigma));

  SchubertTable shared;
  std::vector<std::vector<char>> ok(4, std::vector<char>(group.size(), 0));
  std::vector<std::thread> pool;
  for (int w = 0; w < 4; ++w) {
    pool.emplace_back([&, w] {
      // stagger the iteration so threads collide on fresh entries
      for (std::size_t t = 0; t < group.size(); ++t) {
        const std::size_t i = (t * 7 + static_cast<std::size_t>(w) * 31) % group.size();
        ok[static_cast<std::size_t>(w)][i] = shared.schubert(group[i]) == expected[i];
      }
    });
  }
  for (auto& t : pool) t.join();
  for (const auto& row : ok)
    for (char v : row) CHECK(v == 1);
}

TEST_CASE("the monomial exponent of a 132-avoider is the code of its inverse") {
  // recorded observation, not an assumption anywhere in the engine
  SchubertTable table;
  for (int n = 1; n <= 5; ++n) {
    for (const auto& pi : avoiders_132(n)) {
      const CodeConvention conv = beta_code_convention(table, pi);
      CHECK((conv == CodeConvention::code_of_inverse || conv == CodeConvention::both));
      CHECK(schubert_monomial_exponent(table, pi) == lehmer_code(inverse(pi)));
    }
  }
}
