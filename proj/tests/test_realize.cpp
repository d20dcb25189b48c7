#include "doctest.h"

#include <random>

#include "segre/euler.hpp"
#include "segre/realize.hpp"

using namespace segre;

namespace {

std::vector<FactorId> subset(const std::vector<FactorId>& family, unsigned mask) {
  std::vector<FactorId> out;
  for (std::size_t a = 0; a < family.size(); ++a) {
    if (mask & (1u << a)) out.push_back(family[a]);
  }
  return out;
}

void check_subset(int n, const std::vector<FactorId>& chosen, std::uint64_t seed) {
  const auto w = generic_solution(n, chosen, seed);
  CHECK(vanishing_pattern(w) == make_pattern(n, chosen));
  CHECK(mldeg_value(w) == (n + 1) * (n + 2) - static_cast<long>(chosen.size()));
}

}  // namespace

TEST_CASE("alternating hook family") {
  const auto h = alt_hooks(2);
  REQUIRE(h.size() == 4);
  CHECK(h[0] == FactorId::face_y(0, 0, 1));
  CHECK(h[1] == FactorId::face_x(1, 0, 1));
  CHECK(h[2] == FactorId::face_y(1, 1, 2));
  CHECK(h[3] == FactorId::face_x(0, 1, 2));
  for (int n = 1; n <= 5; ++n) {
    CHECK(alt_hooks(n).size() == static_cast<std::size_t>(2 * n));
    CHECK(hook_family(n).back() == FactorId::slice_minor(n));
  }
  CHECK_THROWS_AS(alt_hooks(0), InvalidArgument);
}

TEST_CASE("every hook subset vanishes freely and drops the degree by its size, n = 1, 2") {
  for (int n = 1; n <= 2; ++n) {
    const auto family = hook_family(n);
    for (unsigned mask = 0; mask < (1u << family.size()); ++mask) {
      INFO("n=" << n << " mask=" << mask);
      check_subset(n, subset(family, mask), mask + 1);
    }
  }
}

TEST_CASE("random hook subsets for n = 3") {
  std::mt19937_64 rng(12);
  const auto family = hook_family(3);
  for (int t = 0; t < 200; ++t) {
    const auto mask = static_cast<unsigned>(rng() % (1u << family.size()));
    INFO("mask=" << mask);
    check_subset(3, subset(family, mask), static_cast<std::uint64_t>(t));
  }
}

TEST_CASE("generic_solution rejects foreign constraints") {
  const std::vector<FactorId> bad{FactorId::face_x(0, 0, 1)};
  CHECK_THROWS_AS(generic_solution(1, bad, 1), InvalidArgument);
}

TEST_CASE("realize reaches every degree from 1 to (n+1)(n+2)") {
  for (int n = 1; n <= 4; ++n) {
    for (int r = 1; r <= (n + 1) * (n + 2); ++r) {
      INFO("n=" << n << " r=" << r);
      const auto w = realize(n, r);
      CHECK(w.n() == n);
      CHECK(mldeg_value(w) == r);
    }
  }
  CHECK(realize(2, 9, 4) == realize(2, 9, 4));
  CHECK_THROWS_AS(realize(2, 0), InvalidArgument);
  CHECK_THROWS_AS(realize(2, 13), InvalidArgument);
  CHECK_THROWS_AS(realize(0, 1), InvalidArgument);
}
