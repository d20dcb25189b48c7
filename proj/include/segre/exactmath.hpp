#pragma once

// Exact scalars and the small amount of exact linear algebra and binary-form
// arithmetic the rest of the library is built on.

#include <gmpxx.h>

#include <array>
#include <compare>
#include <concepts>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "segre/errors.hpp"

namespace segre {

/// Arbitrary-precision rational number, always kept in canonical form
/// (positive denominator, numerator and denominator coprime).
class Rational {
 public:
  Rational() = default;
  template <std::integral T>
  Rational(T v) : q_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)
  Rational(long num, long den);
  explicit Rational(mpq_class q);
  explicit Rational(const mpz_class& z) : q_(z) {}

  /// Parses "p" or "p/q" (optional sign, decimal digits only).
  static Rational parse(std::string_view text);

  std::string str() const;

  bool is_zero() const { return sgn(q_) == 0; }
  int sign() const { return sgn(q_); }
  bool is_integer() const { return q_.get_den() == 1; }
  mpz_class num() const { return q_.get_num(); }
  mpz_class den() const { return q_.get_den(); }
  const mpq_class& value() const { return q_; }

  /// Number of bits in the larger of numerator and denominator.
  std::size_t bit_size() const;

  /// True iff this is the square of a rational number.
  bool is_square() const;
  /// Exact square root; requires is_square().
  Rational sqrt() const;

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class q_{0};
};

Rational abs(const Rational& r);

/// Dense row-major matrix of rationals.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols);
  RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  /// Submatrix on the given row and column index lists.
  RatMatrix submatrix(std::span<const std::size_t> row_idx,
                      std::span<const std::size_t> col_idx) const;

  friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Exact rank via fraction-free (Bareiss) elimination on the
/// denominator-cleared integer matrix.
std::size_t rank(const RatMatrix& m);

/// Exact determinant of a square matrix (fraction-free elimination).
Rational determinant(const RatMatrix& m);

/// Homogeneous form c0*y0^d + c1*y0^(d-1)*y1 + ... + cd*y1^d with d <= 2.
///
/// The degree is the formal degree: a nonzero form of degree d has exactly d
/// projective roots counted with multiplicity, and a vanishing leading
/// coefficient c0 means the root (1:0) is present.
class BinaryForm {
 public:
  static constexpr int kMaxDegree = 2;

  /// The constant form 1.
  BinaryForm();
  /// Coefficients c0..cd; throws InvalidArgument when more than three.
  explicit BinaryForm(std::vector<Rational> coeffs);
  BinaryForm(std::initializer_list<Rational> coeffs)
      : BinaryForm(std::vector<Rational>(coeffs)) {}

  static BinaryForm zero(int degree = 0);
  /// a*y0 + b*y1
  static BinaryForm linear(const Rational& a, const Rational& b) { return BinaryForm({a, b}); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Rational& coeff(int i) const { return coeffs_.at(static_cast<std::size_t>(i)); }
  std::span<const Rational> coeffs() const { return coeffs_; }

  bool is_zero() const;
  /// Nonzero and of degree 0.
  bool is_constant() const { return degree() == 0 && !is_zero(); }

  Rational evaluate(const Rational& y0, const Rational& y1) const;

  /// c1^2 - 4 c0 c2; requires degree 2.
  Rational discriminant() const;

  /// Scaled so that the first nonzero coefficient is 1 (zero stays zero).
  BinaryForm normalized() const;

  /// Product; throws InvalidArgument when the degrees sum past 2.
  friend BinaryForm operator*(const BinaryForm& a, const BinaryForm& b);
  friend BinaryForm operator-(const BinaryForm& a, const BinaryForm& b);
  friend BinaryForm operator+(const BinaryForm& a, const BinaryForm& b);
  BinaryForm scaled(const Rational& s) const;

  std::string str() const;

  friend bool operator==(const BinaryForm&, const BinaryForm&) = default;

 private:
  std::vector<Rational> coeffs_;
};

/// Greatest common divisor of a nonempty list of forms, normalized so its
/// leading nonzero coefficient is 1.  Identically zero inputs are ignored;
/// if every input is zero the zero form is returned.
BinaryForm binary_gcd(std::span<const BinaryForm> forms);
BinaryForm binary_gcd(std::initializer_list<BinaryForm> forms);

/// True iff `d` divides `f` exactly (every form divides zero; zero divides
/// only zero).
bool divides(const BinaryForm& d, const BinaryForm& f);

struct RootCount {
  bool identically_zero = false;
  int distinct = 0;
  friend bool operator==(const RootCount&, const RootCount&) = default;
};

/// Number of distinct projective roots of f.
RootCount distinct_root_count(const BinaryForm& f);

}  // namespace segre
