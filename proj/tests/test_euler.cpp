#include "doctest.h"

#include <array>
#include <map>
#include <random>
#include <vector>

#include "helpers.hpp"
#include "segre/euler.hpp"

using namespace segre;
using testing::example_w;
using testing::example_w_prime;

namespace {

std::vector<std::vector<int>> subsets_of_size(int m, std::size_t size) {
  std::vector<std::vector<int>> out;
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    std::vector<int> s;
    for (int k = 0; k < m; ++k) {
      if (mask & (1u << k)) s.push_back(k);
    }
    if (s.size() == size) out.push_back(s);
  }
  return out;
}

// Sum over nonempty row and column sets of (-1)^(|R|+|C|) rank, with ranks
// taken from minors rather than elimination.
long matrix_mldeg_by_minors(const RatMatrix& m) {
  long total = 0;
  for (unsigned rm = 1; rm < (1u << m.rows()); ++rm) {
    for (unsigned cm = 1; cm < (1u << m.cols()); ++cm) {
      std::vector<std::size_t> rs, cs;
      for (std::size_t a = 0; a < m.rows(); ++a) {
        if (rm & (1u << a)) rs.push_back(a);
      }
      for (std::size_t a = 0; a < m.cols(); ++a) {
        if (cm & (1u << a)) cs.push_back(a);
      }
      const long r = static_cast<long>(testing::rank_by_minors(m.submatrix(rs, cs)));
      total += ((rs.size() + cs.size()) % 2 ? -r : r);
    }
  }
  return total;
}

}  // namespace

TEST_CASE("worked 2x2x3 examples: chi of the full intersection and ml degree") {
  const std::array<int, 3> all{0, 1, 2};
  CHECK(chi_VI(example_w(), all) == 2);
  CHECK(chi_VI(example_w_prime(), all) == 1);
  CHECK(mldeg_value(example_w()) == 8);
  CHECK(mldeg_value(example_w_prime()) == 9);
  CHECK(vanishing_pattern(example_w()) == vanishing_pattern(example_w_prime()));
  CHECK(mldeg(example_w()).chi_Y == -8);
}

TEST_CASE("hook-chain tensor has ml degree 7 by both routes") {
  const auto w = testing::hook_chain_example();
  CHECK(mldeg_value(w) == 7);
  const auto p = mldeg_point_formula(w);
  REQUIRE(p.has_value());
  CHECK(*p == 7);
}

TEST_CASE("single slices: chi is 4 minus the rank") {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 200; ++t) {
    const auto w = testing::structured_tensor(2, rng);
    for (int k = 0; k <= 2; ++k) {
      const std::array<int, 1> one{k};
      const RatMatrix s{{w(0, 0, k), w(0, 1, k)}, {w(1, 0, k), w(1, 1, k)}};
      CHECK(chi_VI(w, one) == 4 - static_cast<int>(testing::rank_by_minors(s)));
    }
  }
}

TEST_CASE("closed form agrees with the gcd route on every case") {
  std::mt19937_64 rng(2);
  std::map<PairType, int> pair_seen;
  std::map<ClosedFormCase, int> case_seen;
  for (int t = 0; t < 6000; ++t) {
    const auto w = (t % 3 == 0) ? testing::random_tensor(2, rng, 2) : testing::structured_tensor(2, rng);
    for (std::size_t size : {2u, 3u}) {
      for (const auto& s : subsets_of_size(3, size)) {
        const auto res = chi_VI_closed_form_case(w, s);
        CHECK(res.chi == chi_VI(w, s));
        ++case_seen[res.which];
        if (size == 2) ++pair_seen[classify_type(w, s[0], s[1])];
      }
    }
  }
  for (PairType p : {PairType::I, PairType::II, PairType::III, PairType::IV_rows, PairType::IV_cols, PairType::V}) {
    INFO(to_string(p));
    CHECK(pair_seen[p] > 0);
  }
  for (ClosedFormCase c :
       {ClosedFormCase::PairByType, ClosedFormCase::TripleEmpty, ClosedFormCase::TripleAnyV,
        ClosedFormCase::TripleIIWithIIorIII, ClosedFormCase::TripleIIOther, ClosedFormCase::TripleAllIII,
        ClosedFormCase::TripleNoTypeI, ClosedFormCase::TripleOneOrTwoI, ClosedFormCase::TripleTwoIWithIVcols,
        ClosedFormCase::TripleThreeIRankDeficient, ClosedFormCase::TripleThreeIFullRank}) {
    INFO(to_string(c));
    CHECK(case_seen[c] > 0);
  }
}

TEST_CASE("pair types map to their chi values") {
  std::mt19937_64 rng(3);
  const std::map<PairType, int> expected{{PairType::I, 2},       {PairType::II, 2},      {PairType::III, 3},
                                         {PairType::IV_rows, 2}, {PairType::IV_cols, 2}, {PairType::V, 1}};
  for (int t = 0; t < 2000; ++t) {
    const auto w = testing::structured_tensor(1, rng);
    const std::array<int, 2> both{0, 1};
    CHECK(chi_VI(w, both) == expected.at(classify_type(w, 0, 1)));
  }
  CHECK_THROWS_AS(classify_type(example_w(), 1, 0), InvalidArgument);
}

TEST_CASE("coordinate strata") {
  const auto w = example_w();
  const std::array<int, 2> pair{0, 1};
  // Face y = 0 restricted to slices 0,1 has rank 1 (F[*0(0,1)] vanishes).
  CHECK(chi_VI_XJ(w, pair, AxisZeros{std::nullopt, 1}) == 1);
  CHECK(chi_VI_XJ(w, pair, AxisZeros{std::nullopt, 0}) == 0);
  CHECK(chi_VI_XJ(w, pair, AxisZeros{0, 0}) == 0);
  CHECK(all_axis_zeros().size() == 9);
  CHECK(AxisZeros{1, 0}.str() == "[x1,y0]");
  const std::array<int, 1> one{0};
  CHECK(chi_VI_XJ(w, one, AxisZeros{0, std::nullopt}) == 1);
  CHECK_THROWS_AS(chi_VI_XJ(w, std::array<int, 2>{1, 0}, AxisZeros{}), InvalidArgument);
}

TEST_CASE("generic tensors reach (n+1)(n+2) and nothing exceeds it") {
  std::mt19937_64 rng(4);
  for (int n = 1; n <= 6; ++n) {
    CHECK(mldeg_value(testing::random_tensor(n, rng, 1000)) == (n + 1) * (n + 2));
  }
  for (int t = 0; t < 300; ++t) {
    const int n = 1 + static_cast<int>(rng() % 4);
    const auto w = testing::structured_tensor(n, rng);
    const long d = mldeg_value(w);
    CHECK(d >= 1);
    CHECK(d <= (n + 1) * (n + 2));
  }
}

TEST_CASE("all-ones tensor has ml degree 1") {
  for (int n = 1; n <= 5; ++n) CHECK(mldeg_value(ScalingTensor::ones(n)) == 1);
}

TEST_CASE("symmetries preserve the ml degree") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 200; ++t) {
    const int n = 1 + static_cast<int>(rng() % 3);
    const auto w = testing::structured_tensor(n, rng);
    const long d = mldeg_value(w);
    std::vector<int> sigma(static_cast<std::size_t>(n + 1));
    std::iota(sigma.begin(), sigma.end(), 0);
    std::shuffle(sigma.begin(), sigma.end(), rng);
    CHECK(mldeg_value(permute_slices(w, sigma)) == d);
    CHECK(mldeg_value(swap_xy(w)) == d);
    const std::array<Rational, 2> a{testing::random_nonzero(rng), testing::random_nonzero(rng)};
    const std::array<Rational, 2> b{testing::random_nonzero(rng), testing::random_nonzero(rng)};
    std::vector<Rational> c;
    for (int k = 0; k <= n; ++k) c.push_back(testing::random_nonzero(rng));
    CHECK(mldeg_value(torus_rescale(w, a, b, c)) == d);
    CHECK(mldeg(w).chi_Y == ((n + 1) % 2 ? -d : d));
  }
}

TEST_CASE("duplicating the last slice keeps the ml degree") {
  std::mt19937_64 rng(6);
  for (int t = 0; t < 200; ++t) {
    const int n = 1 + static_cast<int>(rng() % 3);
    const auto w = testing::structured_tensor(n, rng);
    CHECK(mldeg_value(duplicate_last_slice(w)) == mldeg_value(w));
  }
}

TEST_CASE("point formula matches the engine away from vanishing 2x2x3 hyperdeterminants") {
  std::mt19937_64 rng(7);
  int compared = 0, declined = 0;
  for (int t = 0; t < 400; ++t) {
    const int n = 2 + static_cast<int>(rng() % 2);
    const auto w = testing::structured_tensor(n, rng);
    const auto p = mldeg_point_formula(w);
    if (p) {
      CHECK(*p == mldeg_value(w));
      ++compared;
    } else {
      ++declined;
    }
  }
  CHECK(compared > 50);
  CHECK(declined > 0);
  CHECK_FALSE(mldeg_point_formula(example_w()).has_value());
}

TEST_CASE("matrix ml degree") {
  CHECK(mldeg_matrix(RatMatrix{{1, 1}, {1, 1}}) == 1);
  CHECK(mldeg_matrix(RatMatrix{{1, 2}, {3, 5}}) == 2);
  CHECK(mldeg_matrix(RatMatrix{{1, 2, 3}, {5, 7, 11}}) == 3);
  CHECK(mldeg_matrix(RatMatrix{{1, 2, 3, 5}, {7, 11, 13, 19}}) == 4);
  CHECK(mldeg_matrix(RatMatrix{{1, 2, 3}, {5, 7, 11}, {13, 17, 23}}) == 6);
  CHECK_THROWS_AS(mldeg_matrix(RatMatrix{{1, 0}, {1, 1}}), InvalidArgument);
  std::mt19937_64 rng(8);
  for (int t = 0; t < 100; ++t) {
    const std::size_t rows = 2 + rng() % 2, cols = 2 + rng() % 3;
    RatMatrix m(rows, cols);
    for (std::size_t a = 0; a < rows; ++a) {
      for (std::size_t b = 0; b < cols; ++b) m(a, b) = testing::random_nonzero(rng, 2);
    }
    CHECK(mldeg_matrix(m) == matrix_mldeg_by_minors(m));
  }
}
