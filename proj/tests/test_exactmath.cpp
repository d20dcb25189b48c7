#include "doctest.h"

#include <random>

#include "helpers.hpp"
#include "segre/exactmath.hpp"

using namespace segre;

TEST_CASE("rational parsing and canonical strings") {
  CHECK(Rational::parse("6/4").str() == "3/2");
  CHECK(Rational::parse("-6/4").str() == "-3/2");
  CHECK(Rational::parse("10/5").str() == "2");
  CHECK(Rational::parse("0/7").str() == "0");
  CHECK(Rational::parse("123456789012345678901234567890").str() == "123456789012345678901234567890");
  CHECK_THROWS_AS(Rational::parse("1.5"), ParseError);
  CHECK_THROWS_AS(Rational::parse("1/0"), DivisionByZero);
  CHECK_THROWS_AS(Rational::parse(""), ParseError);
  CHECK_THROWS_AS(Rational::parse("3/"), ParseError);
  CHECK_THROWS_AS(Rational::parse("x"), ParseError);
}

TEST_CASE("rational arithmetic is exact") {
  const Rational a(1, 3), b(1, 6);
  CHECK(a + b == Rational(1, 2));
  CHECK(a - b == b);
  CHECK(a * b == Rational(1, 18));
  CHECK(a / b == Rational(2));
  CHECK_THROWS_AS(a / Rational(0), DivisionByZero);
  CHECK(Rational(9, 4).is_square());
  CHECK(Rational(9, 4).sqrt() == Rational(3, 2));
  CHECK_FALSE(Rational(2).is_square());
  CHECK_FALSE(Rational(-4).is_square());
  CHECK(Rational(-3) < Rational(1, 2));
  CHECK(abs(Rational(-7, 3)) == Rational(7, 3));
}

TEST_CASE("determinants: Bareiss against the Leibniz expansion") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> e(-6, 6), d(1, 5);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t size = 1 + static_cast<std::size_t>(trial % 5);
    RatMatrix m(size, size);
    for (std::size_t r = 0; r < size; ++r) {
      for (std::size_t c = 0; c < size; ++c) m(r, c) = Rational(e(rng), d(rng));
    }
    CHECK(determinant(m) == testing::leibniz_det(m));
  }
  CHECK_THROWS_AS(determinant(RatMatrix(2, 3)), DimensionMismatch);
}

TEST_CASE("rank: Bareiss against the largest nonvanishing minor") {
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<int> e(-2, 2), shape(1, 4);
  for (int trial = 0; trial < 300; ++trial) {
    const auto rows = static_cast<std::size_t>(shape(rng));
    const auto cols = static_cast<std::size_t>(shape(rng));
    RatMatrix m(rows, cols);
    // Small entries with many zeros make rank drops common.
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = Rational(e(rng), 1 + (trial % 3));
    }
    CHECK(rank(m) == testing::rank_by_minors(m));
  }
  CHECK(rank(RatMatrix{{1, 2}, {2, 4}}) == 1);
  CHECK(rank(RatMatrix{{1, 2, 3}, {2, 1, 4}, {3, 4, 6}}) == 3);
  CHECK(rank(RatMatrix(3, 2)) == 0);
}

TEST_CASE("binary forms") {
  const BinaryForm f{1, -3, 2};  // (y0 - y1)(y0 - 2 y1)
  CHECK(f.discriminant() == Rational(1));
  CHECK(f.evaluate(1, 1).is_zero());
  CHECK(f.evaluate(2, 1).is_zero());
  CHECK((BinaryForm::linear(1, -1) * BinaryForm::linear(1, -2)) == f);
  CHECK_THROWS_AS(f * BinaryForm::linear(1, 1), InvalidArgument);
  CHECK_THROWS_AS((BinaryForm{1, 2, 3, 4}), InvalidArgument);
  CHECK(BinaryForm{0, 2, 4}.normalized() == BinaryForm{0, 1, 2});
  CHECK(distinct_root_count(f) == RootCount{false, 2});
  CHECK(distinct_root_count(BinaryForm{1, 2, 1}) == RootCount{false, 1});
  CHECK(distinct_root_count(BinaryForm{1, 0, 1}) == RootCount{false, 2});  // complex pair
  CHECK(distinct_root_count(BinaryForm{0, 0, 1}) == RootCount{false, 1});  // y1^2: double root (1:0)
  CHECK(distinct_root_count(BinaryForm{0, 1, 0}) == RootCount{false, 2});  // y0 y1
  CHECK(distinct_root_count(BinaryForm::zero(2)).identically_zero);
  CHECK(distinct_root_count(BinaryForm{5}) == RootCount{false, 0});
}

TEST_CASE("binary gcd against products of known linear factors") {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<int> e(-3, 3);
  const auto linear = [&] {
    while (true) {
      const int a = e(rng), b = e(rng);
      if (a != 0 || b != 0) return BinaryForm::linear(a, b);
    }
  };
  const auto proportional = [](const BinaryForm& p, const BinaryForm& q) {
    return (p.coeff(0) * q.coeff(1) - p.coeff(1) * q.coeff(0)).is_zero();
  };
  for (int trial = 0; trial < 300; ++trial) {
    const BinaryForm common = linear();
    const BinaryForm a = linear(), b = linear();
    const BinaryForm g = binary_gcd({common * a, common * b});
    CHECK(divides(g, common * a));
    CHECK(divides(g, common * b));
    CHECK(divides(common.normalized(), g));
    const int expected = proportional(a, b) ? 2 : 1;
    CHECK(g.degree() == expected);
    // Coprime quadratics: gcd is constant.
    const BinaryForm p = BinaryForm{1, 0, 1}, q = BinaryForm{1, 0, 4};
    CHECK(binary_gcd({p, q}).is_constant());
  }
  CHECK(binary_gcd({BinaryForm::zero(2), BinaryForm{1, -3, 2}}) == BinaryForm{1, -3, 2});
  CHECK(binary_gcd({BinaryForm::zero(2), BinaryForm::zero(1)}).is_zero());
  CHECK_THROWS_AS(binary_gcd(std::span<const BinaryForm>{}), InvalidArgument);
}
