#pragma once

// Sparse multivariate polynomials over Q in at most kMaxVars variables,
// ordered by graded reverse lexicographic order, and a Buchberger
// completion sufficient for counting the points of zero-dimensional ideals.

#include <gmpxx.h>

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace segre {

inline constexpr int kMaxVars = 8;

struct Monomial {
  std::array<std::uint8_t, kMaxVars> e{};
  int degree = 0;

  static Monomial var(int v, int power = 1);
  Monomial operator*(const Monomial& o) const;
  bool divides(const Monomial& o) const;
  /// o / this; requires divides(o).
  Monomial quotient_of(const Monomial& o) const;
  Monomial lcm(const Monomial& o) const;
  bool coprime(const Monomial& o) const;
  /// Index of the variable if this is a pure power x_v^a with a > 0.
  std::optional<int> pure_power_variable() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// grevlex: > 0 iff a is greater than b.
int grevlex_compare(const Monomial& a, const Monomial& b);

struct Term {
  Monomial m;
  mpq_class c;
  friend bool operator==(const Term& a, const Term& b) { return a.m == b.m && a.c == b.c; }
};

/// Terms strictly decreasing in grevlex, no zero coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  static Polynomial constant(const mpq_class& c);
  static Polynomial variable(int v);
  /// Terms must already be strictly decreasing with nonzero coefficients.
  static Polynomial from_sorted_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  const std::vector<Term>& terms() const { return terms_; }
  const Term& leading() const { return terms_.front(); }
  int total_degree() const;
  std::size_t max_coeff_bits() const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scaled(const mpq_class& c) const;
  Polynomial shifted(const Monomial& m) const;
  /// this - c * m * g, the elementary reduction step.
  Polynomial minus_multiple(const mpq_class& c, const Monomial& m, const Polynomial& g) const;
  /// Divide by the leading coefficient.
  Polynomial monic() const;
  /// Formal partial derivative.
  Polynomial derivative(int v) const;

  std::string str(const std::vector<std::string>& names) const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void add_term(Monomial m, mpq_class c);  // used during construction only
  std::vector<Term> terms_;
};

struct GroebnerBudget {
  std::size_t max_basis = 4000;
  std::size_t max_coeff_bits = std::size_t{1} << 20;
};

/// Reduced-leading-term Groebner basis (monic, tails fully reduced) of the
/// ideal generated by `input`.  Throws ResourceBudgetExceeded when the
/// basis or a coefficient outgrows the budget.
std::vector<Polynomial> groebner_basis(const std::vector<Polynomial>& input, int num_vars,
                                       const GroebnerBudget& budget = {});

/// Number of monomials outside the leading-term ideal of `basis`.  Throws
/// NotZeroDimensional when some variable has no pure-power leading term.
std::size_t standard_monomial_count(const std::vector<Polynomial>& basis, int num_vars);

}  // namespace segre
