#include "segre/exactmath.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

namespace segre {

// ---------------------------------------------------------------- Rational

Rational::Rational(long num, long den) {
  if (den == 0) throw DivisionByZero();
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational::Rational(mpq_class q) : q_(std::move(q)) {
  if (q_.get_den() == 0) throw DivisionByZero();
  q_.canonicalize();
}

namespace {

bool valid_integer(std::string_view s, bool allow_sign) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
  if (i == s.size()) return false;
  return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(i), s.end(),
                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; });
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);
  if (!valid_integer(num, true) || (slash != std::string_view::npos && !valid_integer(den, false))) {
    throw ParseError("not a rational number: \"" + std::string(text) + "\"");
  }
  std::string n(num);
  if (!n.empty() && n[0] == '+') n.erase(0, 1);
  mpz_class zn(n, 10);
  mpz_class zd(1);
  if (!den.empty()) zd = mpz_class(std::string(den), 10);
  if (zd == 0) throw DivisionByZero();
  mpq_class q(zn, zd);
  q.canonicalize();
  return Rational(std::move(q));
}

std::string Rational::str() const { return q_.get_str(10); }

std::size_t Rational::bit_size() const {
  return std::max(mpz_sizeinbase(q_.get_num_mpz_t(), 2), mpz_sizeinbase(q_.get_den_mpz_t(), 2));
}

bool Rational::is_square() const {
  if (sign() < 0) return false;
  return mpz_perfect_square_p(q_.get_num_mpz_t()) != 0 &&
         mpz_perfect_square_p(q_.get_den_mpz_t()) != 0;
}

Rational Rational::sqrt() const {
  if (!is_square()) throw InvalidArgument("sqrt of a non-square rational " + str());
  mpz_class n, d;
  mpz_sqrt(n.get_mpz_t(), q_.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), q_.get_den_mpz_t());
  return Rational(mpq_class(n, d));
}

Rational& Rational::operator+=(const Rational& o) {
  q_ += o.q_;
  return *this;
}
Rational& Rational::operator-=(const Rational& o) {
  q_ -= o.q_;
  return *this;
}
Rational& Rational::operator*=(const Rational& o) {
  q_ *= o.q_;
  return *this;
}
Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DivisionByZero();
  q_ /= o.q_;
  return *this;
}

Rational Rational::operator-() const {
  Rational r;
  r.q_ = -q_;
  return r;
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

// --------------------------------------------------------------- RatMatrix

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionMismatch("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

RatMatrix RatMatrix::submatrix(std::span<const std::size_t> row_idx,
                               std::span<const std::size_t> col_idx) const {
  RatMatrix out(row_idx.size(), col_idx.size());
  for (std::size_t r = 0; r < row_idx.size(); ++r) {
    for (std::size_t c = 0; c < col_idx.size(); ++c) {
      if (row_idx[r] >= rows_ || col_idx[c] >= cols_) throw IndexOutOfRange("submatrix index");
      out(r, c) = (*this)(row_idx[r], col_idx[c]);
    }
  }
  return out;
}

namespace {

// Rows scaled by the lcm of their denominators; row scaling preserves rank
// and changes the determinant by the product of the scale factors.
std::vector<std::vector<mpz_class>> integer_rows(const RatMatrix& m, mpq_class* scale) {
  std::vector<std::vector<mpz_class>> a(m.rows(), std::vector<mpz_class>(m.cols()));
  if (scale) *scale = 1;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    mpz_class l = 1;
    for (std::size_t c = 0; c < m.cols(); ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).value().get_den_mpz_t());
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const mpq_class& v = m(r, c).value();
      a[r][c] = v.get_num() * (l / v.get_den());
    }
    if (scale) *scale *= l;
  }
  return a;
}

// Bareiss elimination in place; returns the rank and the sign of the row
// permutation applied.
std::size_t bareiss(std::vector<std::vector<mpz_class>>& a, std::size_t cols, int* perm_sign) {
  const std::size_t rows = a.size();
  mpz_class prev = 1;
  std::size_t r = 0;
  int sgn_perm = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      std::swap(a[p], a[r]);
      sgn_perm = -sgn_perm;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        mpz_class t = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  if (perm_sign) *perm_sign = sgn_perm;
  return r;
}

}  // namespace

std::size_t rank(const RatMatrix& m) {
  auto a = integer_rows(m, nullptr);
  return bareiss(a, m.cols(), nullptr);
}

Rational determinant(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("determinant of a non-square matrix");
  if (m.rows() == 0) return Rational(1);
  mpq_class scale;
  auto a = integer_rows(m, &scale);
  int sgn_perm = 1;
  if (bareiss(a, m.cols(), &sgn_perm) < m.rows()) return Rational(0);
  mpq_class d(a.back().back() * sgn_perm);
  d /= scale;
  return Rational(std::move(d));
}

// -------------------------------------------------------------- BinaryForm

BinaryForm::BinaryForm() : coeffs_{Rational(1)} {}

BinaryForm::BinaryForm(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw InvalidArgument("binary form needs at least one coefficient");
  if (coeffs_.size() > kMaxDegree + 1) {
    throw InvalidArgument("binary forms of degree > 2 are not supported");
  }
}

BinaryForm BinaryForm::zero(int degree) {
  return BinaryForm(std::vector<Rational>(static_cast<std::size_t>(degree) + 1));
}

bool BinaryForm::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c.is_zero(); });
}

Rational BinaryForm::evaluate(const Rational& y0, const Rational& y1) const {
  const int d = degree();
  Rational acc;
  for (int i = 0; i <= d; ++i) {
    Rational term = coeffs_[static_cast<std::size_t>(i)];
    for (int e = 0; e < d - i; ++e) term *= y0;
    for (int e = 0; e < i; ++e) term *= y1;
    acc += term;
  }
  return acc;
}

Rational BinaryForm::discriminant() const {
  if (degree() != 2) throw InvalidArgument("discriminant needs a degree-2 form");
  return coeffs_[1] * coeffs_[1] - Rational(4) * coeffs_[0] * coeffs_[2];
}

BinaryForm BinaryForm::normalized() const {
  for (const auto& c : coeffs_) {
    if (!c.is_zero()) return scaled(Rational(1) / c);
  }
  return *this;
}

BinaryForm BinaryForm::scaled(const Rational& s) const {
  BinaryForm out = *this;
  for (auto& c : out.coeffs_) c *= s;
  return out;
}

BinaryForm operator*(const BinaryForm& a, const BinaryForm& b) {
  const int d = a.degree() + b.degree();
  if (d > BinaryForm::kMaxDegree) throw InvalidArgument("product exceeds degree 2");
  std::vector<Rational> c(static_cast<std::size_t>(d) + 1);
  for (int i = 0; i <= a.degree(); ++i) {
    for (int j = 0; j <= b.degree(); ++j) c[static_cast<std::size_t>(i + j)] += a.coeff(i) * b.coeff(j);
  }
  return BinaryForm(std::move(c));
}

BinaryForm operator+(const BinaryForm& a, const BinaryForm& b) {
  if (a.degree() != b.degree()) throw InvalidArgument("adding forms of different degree");
  std::vector<Rational> c(a.coeffs_);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += b.coeffs_[i];
  return BinaryForm(std::move(c));
}

BinaryForm operator-(const BinaryForm& a, const BinaryForm& b) { return a + b.scaled(Rational(-1)); }

std::string BinaryForm::str() const {
  static const char* const kMono[3][3] = {
      {"", "", ""}, {"y0", "y1", ""}, {"y0^2", "y0*y1", "y1^2"}};
  const int d = degree();
  std::string out;
  for (int i = 0; i <= d; ++i) {
    const Rational& c = coeffs_[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    std::string mono = kMono[d][i];
    std::string cs = c.str();
    if (!out.empty()) {
      if (c.sign() < 0) {
        out += " - ";
        cs = (-c).str();
      } else {
        out += " + ";
      }
    }
    if (mono.empty()) {
      out += cs;
    } else if (cs == "1") {
      out += mono;
    } else if (cs == "-1") {
      out += "-" + mono;
    } else {
      out += cs + "*" + mono;
    }
  }
  return out.empty() ? "0" : out;
}

// ---------------------------------------------------- univariate helpers
//
// A nonzero form f of degree d factors as y1^m * P(y0/y1) * y1^(d-m-deg P)
// where P(t) = sum_i c_i t^(d-i).  We keep P with index = power of t.

namespace {

using Poly = std::vector<Rational>;  // coefficient of t^e at index e, no trailing zeros

void trim(Poly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

struct Dehomogenized {
  int y1_power = 0;  // multiplicity of the root (1:0)
  Poly p;
};

Dehomogenized dehomogenize(const BinaryForm& f) {
  const int d = f.degree();
  Dehomogenized out;
  out.p.resize(static_cast<std::size_t>(d) + 1);
  for (int i = 0; i <= d; ++i) out.p[static_cast<std::size_t>(d - i)] = f.coeff(i);
  trim(out.p);
  out.y1_power = d - (static_cast<int>(out.p.size()) - 1);
  return out;
}

Poly poly_rem(Poly a, const Poly& b) {
  while (a.size() >= b.size()) {
    const Rational factor = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= factor * b[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

Poly monic(Poly p) {
  const Rational lead = p.back();
  for (auto& c : p) c /= lead;
  return p;
}

Poly poly_gcd(Poly a, Poly b) {
  while (!b.empty()) {
    Poly r = poly_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(std::move(a));
}

BinaryForm homogenize(int y1_power, const Poly& p) {
  const int deg_p = static_cast<int>(p.size()) - 1;
  const int d = y1_power + deg_p;
  std::vector<Rational> c(static_cast<std::size_t>(d) + 1);
  for (int e = 0; e <= deg_p; ++e) c[static_cast<std::size_t>(d - e)] = p[static_cast<std::size_t>(e)];
  return BinaryForm(std::move(c));
}

}  // namespace

BinaryForm binary_gcd(std::span<const BinaryForm> forms) {
  if (forms.empty()) throw InvalidArgument("binary_gcd of an empty list");
  bool any = false;
  int y1_power = 0;
  Poly g;
  for (const auto& f : forms) {
    if (f.is_zero()) continue;
    Dehomogenized dh = dehomogenize(f);
    if (!any) {
      y1_power = dh.y1_power;
      g = monic(std::move(dh.p));
      any = true;
    } else {
      y1_power = std::min(y1_power, dh.y1_power);
      g = poly_gcd(std::move(g), dh.p);
    }
  }
  if (!any) return BinaryForm::zero();
  return homogenize(y1_power, g).normalized();
}

BinaryForm binary_gcd(std::initializer_list<BinaryForm> forms) {
  return binary_gcd(std::span<const BinaryForm>(forms.begin(), forms.size()));
}

bool divides(const BinaryForm& d, const BinaryForm& f) {
  if (f.is_zero()) return true;
  if (d.is_zero()) return false;
  const Dehomogenized dd = dehomogenize(d);
  const Dehomogenized df = dehomogenize(f);
  if (dd.y1_power > df.y1_power) return false;
  return poly_rem(df.p, dd.p).empty();
}

RootCount distinct_root_count(const BinaryForm& f) {
  if (f.is_zero()) return {true, 0};
  switch (f.degree()) {
    case 0:
      return {false, 0};
    case 1:
      return {false, 1};
    default:
      return {false, f.discriminant().is_zero() ? 1 : 2};
  }
}

}  // namespace segre
