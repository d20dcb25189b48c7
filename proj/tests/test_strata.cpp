#include "doctest.h"

#include <random>
#include <set>

#include "helpers.hpp"
#include "segre/euler.hpp"
#include "segre/strata.hpp"

using namespace segre;

namespace {

// Sign of det [[a, b], [c, d]].
char sign_of(const Rational& v) { return v.is_zero() ? '0' : (v.sign() > 0 ? '+' : '-'); }

}  // namespace

TEST_CASE("41 strata with the expected chi counts, each realized by its witness") {
  const auto strata = enumerate_strata_n1();
  REQUIRE(strata.size() == 41);
  std::set<std::vector<std::string>> distinct;
  for (std::size_t s = 0; s < strata.size(); ++s) {
    const auto& st = strata[s];
    distinct.insert(st.pattern.names());
    if (s > 0) CHECK(strata[s - 1].chi >= st.chi);
    CHECK_FALSE(st.witness_recipe.empty());
    const auto w = witness_for_stratum(st, 7);
    INFO(st.witness_recipe);
    CHECK(vanishing_pattern(w) == st.pattern);
    CHECK(mldeg_value(w) == st.chi);
    CHECK(classify_pattern_n1(st.pattern).chi == st.chi);
  }
  CHECK(distinct.size() == 41);
  CHECK(strata.front().chi == 6);
  CHECK(strata.back().chi == 1);
  CHECK(strata.front().pattern.vanishing.empty());
  CHECK(strata.back().pattern.vanishing.size() == 7);
}

TEST_CASE("witnesses are reproducible and vary with the seed") {
  const auto strata = enumerate_strata_n1();
  const auto& s = strata[5];
  CHECK(witness_for_stratum(s, 3) == witness_for_stratum(s, 3));
  CHECK(vanishing_pattern(witness_for_stratum(s, 4)) == s.pattern);
}

TEST_CASE("infeasible patterns are rejected") {
  // A square cup without H cannot occur.
  const auto cup = parse_pattern(1, std::vector<std::string>{"F[0*(0,1)]", "F[1*(0,1)]", "F[*0(0,1)]"});
  CHECK_FALSE(classify_pattern_n1(cup).feasible);
  CHECK_THROWS(witness_for_pattern_n1(cup, 1));
}

TEST_CASE("vanishing patterns transform with the symmetries") {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 300; ++t) {
    const int n = 1 + static_cast<int>(rng() % 3);
    const auto w = testing::structured_tensor(n, rng);
    const auto p = vanishing_pattern(w);
    std::vector<int> sigma(static_cast<std::size_t>(n + 1));
    std::iota(sigma.begin(), sigma.end(), 0);
    std::shuffle(sigma.begin(), sigma.end(), rng);
    CHECK(vanishing_pattern(permute_slices(w, sigma)) == testing::relabel_slices(p, sigma));
    CHECK(vanishing_pattern(swap_xy(w)) == testing::relabel_swap(p));
  }
}

TEST_CASE("sign pattern of a tensor") {
  std::mt19937_64 rng(10);
  for (int t = 0; t < 200; ++t) {
    const auto w = testing::random_tensor(1, rng, 5);
    const std::string s = sign_pattern(w);
    REQUIRE(s.size() == 7);
    CHECK(s[0] == sign_of(w(0, 0, 0) * w(0, 1, 1) - w(0, 1, 0) * w(0, 0, 1)));
    CHECK(s[2] == sign_of(w(0, 0, 0) * w(1, 0, 1) - w(1, 0, 0) * w(0, 0, 1)));
    CHECK(s[4] == sign_of(w(0, 0, 0) * w(1, 1, 0) - w(0, 1, 0) * w(1, 0, 0)));
    CHECK(s[6] == sign_of(eval_hyp222(w, 0, 1)));
  }
  CHECK_THROWS_AS(sign_pattern(testing::example_w()), InvalidArgument);
}

TEST_CASE("negative hyperdeterminant patterns") {
  CHECK(flip_minor_signs("++++++-") == "-------");
  CHECK(flip_minor_signs("+-0+-0+") == "-+0-+0+");
  const auto mapped = negative_h_patterns();
  const auto& raw = tabulated_negative_h_patterns();
  for (std::size_t a = 0; a < 4; ++a) CHECK(mapped[a] == flip_minor_signs(raw[a]));

  const auto sample = sample_sign_patterns(20000, 10, 1);
  CHECK(sample.samples == 20000);
  long total = sample.skipped;
  std::set<std::string> negative;
  for (const auto& [p, c] : sample.discovered) {
    total += c;
    CHECK(p.find('0') == std::string::npos);
    if (p.back() == '-') negative.insert(p);
  }
  CHECK(total == 20000);
  for (const auto& p : negative) CHECK(std::find(mapped.begin(), mapped.end(), p) != mapped.end());

  for (const auto& p : mapped) {
    const auto found = search_sign_pattern(p, 5);
    REQUIRE(found.has_value());
    CHECK(sign_pattern(*found) == p);
  }
  CHECK_THROWS_AS(sample_sign_patterns(10, 1, 1), InvalidArgument);
}
