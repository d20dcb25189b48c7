#include "segre/oracle.hpp"

#include <algorithm>
#include <map>
#include <random>

namespace segre {

// ----------------------------------------------------------------- data

DataVector::DataVector(std::vector<std::size_t> shape, std::vector<long> u) : shape_(std::move(shape)), u_(std::move(u)) {
  for (long v : u_) {
    if (v < 1) throw InvalidArgument("data entries must be positive integers");
    total_ += v;
  }
}

DataVector DataVector::for_tensor(int n, const std::vector<std::vector<std::vector<long>>>& u) {
  if (n < 1) throw DimensionMismatch("n must be at least 1");
  if (u.size() != 2) throw DimensionMismatch("data must have shape 2 x 2 x (n+1)");
  std::vector<long> flat;
  for (const auto& plane : u) {
    if (plane.size() != 2) throw DimensionMismatch("data must have shape 2 x 2 x (n+1)");
    for (const auto& fiber : plane) {
      if (fiber.size() != static_cast<std::size_t>(n + 1)) throw DimensionMismatch("data must have shape 2 x 2 x (n+1)");
      flat.insert(flat.end(), fiber.begin(), fiber.end());
    }
  }
  return DataVector({2, 2, static_cast<std::size_t>(n + 1)}, std::move(flat));
}

DataVector DataVector::for_matrix(const std::vector<std::vector<long>>& u) {
  if (u.empty() || u.front().empty()) throw DimensionMismatch("empty data matrix");
  std::vector<long> flat;
  for (const auto& row : u) {
    if (row.size() != u.front().size()) throw DimensionMismatch("ragged data matrix");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return DataVector({u.size(), u.front().size()}, std::move(flat));
}

namespace {

std::vector<long> draw(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> dist(1, 1000);
  std::vector<long> out(count);
  for (auto& v : out) v = dist(rng);
  return out;
}

}  // namespace

DataVector DataVector::random_tensor(int n, std::uint64_t seed) {
  if (n < 1) throw DimensionMismatch("n must be at least 1");
  const auto m = static_cast<std::size_t>(n + 1);
  return DataVector({2, 2, m}, draw(4 * m, seed));
}

DataVector DataVector::random_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed) {
  if (rows == 0 || cols == 0) throw DimensionMismatch("empty data matrix");
  return DataVector({rows, cols}, draw(rows * cols, seed));
}

long DataVector::at(std::size_t a, std::size_t b, std::size_t c) const {
  if (shape_.size() == 2) {
    if (a >= shape_[0] || b >= shape_[1] || c != 0) throw IndexOutOfRange("data index");
    return u_[a * shape_[1] + b];
  }
  if (a >= shape_[0] || b >= shape_[1] || c >= shape_[2]) throw IndexOutOfRange("data index");
  return u_[(a * shape_[1] + b) * shape_[2] + c];
}

// --------------------------------------------------------- score systems

namespace {

Polynomial constant(const Rational& r) { return Polynomial::constant(r.value()); }
Polynomial constant(long v) { return Polynomial::constant(mpq_class(v)); }

// v-th variable times the partial derivative in v: the part of f whose
// terms contain that variable (f is multilinear).
Polynomial euler_part(const Polynomial& f, int v) { return Polynomial::variable(v) * f.derivative(v); }

Polynomial saturation(const std::vector<int>& vars, int s, const Polynomial& f) {
  Polynomial prod = Polynomial::variable(s) * f;
  for (int v : vars) prod = prod * Polynomial::variable(v);
  return prod - constant(1);
}

}  // namespace

ScoreSystem score_system(const ScalingTensor& w, const DataVector& u) {
  const int n = w.n();
  if (u.shape() != std::vector<std::size_t>{2, 2, static_cast<std::size_t>(n + 1)}) {
    throw DimensionMismatch("data shape does not match the tensor");
  }
  if (n + 3 > kMaxVars) throw InvalidArgument("too many slices for the oracle");
  // Variables: 0 = x1, 1 = y1, 2..n+1 = z1..zn, n+2 = s.
  ScoreSystem sys;
  sys.variables = {"x1", "y1"};
  for (int k = 1; k <= n; ++k) sys.variables.push_back("z" + std::to_string(k));
  sys.variables.push_back("s");

  const Polynomial x = Polynomial::variable(0);
  const Polynomial y = Polynomial::variable(1);
  Polynomial f;
  std::vector<Polynomial> slice_poly;
  for (int k = 0; k <= n; ++k) {
    const Polynomial fk = constant(w(0, 0, k)) + constant(w(1, 0, k)) * x + constant(w(0, 1, k)) * y +
                          constant(w(1, 1, k)) * x * y;
    slice_poly.push_back(fk);
    f = f + (k == 0 ? fk : Polynomial::variable(k + 1) * fk);
  }
  sys.likelihood_denominator = f;

  long ux = 0, uy = 0;
  std::vector<long> uz(static_cast<std::size_t>(n + 1), 0);
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      for (std::size_t k = 0; k <= static_cast<std::size_t>(n); ++k) {
        const long v = u.at(i, j, k);
        if (i == 1) ux += v;
        if (j == 1) uy += v;
        uz[k] += v;
      }
    }
  }
  const Polynomial total = constant(u.total());
  sys.equations.push_back(constant(ux) * f - total * euler_part(f, 0));
  sys.equations.push_back(constant(uy) * f - total * euler_part(f, 1));
  for (int k = 1; k <= n; ++k) {
    sys.equations.push_back(constant(uz[static_cast<std::size_t>(k)]) * f -
                            total * Polynomial::variable(k + 1) * slice_poly[static_cast<std::size_t>(k)]);
  }
  std::vector<int> torus;
  for (int v = 0; v <= n + 1; ++v) torus.push_back(v);
  sys.equations.push_back(saturation(torus, n + 2, f));
  return sys;
}

ScoreSystem score_system_matrix(const RatMatrix& w, const DataVector& u) {
  const std::size_t rows = w.rows();
  const std::size_t cols = w.cols();
  if (rows < 2 || cols < 2) throw DimensionMismatch("matrix must be at least 2 x 2");
  if (u.shape() != std::vector<std::size_t>{rows, cols}) throw DimensionMismatch("data shape does not match the matrix");
  const int m = static_cast<int>(rows) - 1;
  const int nn = static_cast<int>(cols) - 1;
  if (m + nn + 1 > kMaxVars) throw InvalidArgument("matrix too large for the oracle");
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (w(r, c).is_zero()) throw InvalidArgument("matrix entry (" + std::to_string(r) + "," + std::to_string(c) + ") is zero");
    }
  }
  // Variables: x1..xm, y1..yn, s.
  ScoreSystem sys;
  for (int a = 1; a <= m; ++a) sys.variables.push_back("x" + std::to_string(a));
  for (int b = 1; b <= nn; ++b) sys.variables.push_back("y" + std::to_string(b));
  sys.variables.push_back("s");

  auto xv = [&](std::size_t r) { return r == 0 ? constant(1) : Polynomial::variable(static_cast<int>(r) - 1); };
  auto yv = [&](std::size_t c) { return c == 0 ? constant(1) : Polynomial::variable(m + static_cast<int>(c) - 1); };
  Polynomial f;
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) f = f + constant(w(r, c)) * xv(r) * yv(c);
  }
  sys.likelihood_denominator = f;

  const Polynomial total = constant(u.total());
  for (std::size_t r = 1; r < rows; ++r) {
    long ur = 0;
    for (std::size_t c = 0; c < cols; ++c) ur += u.at(r, c);
    sys.equations.push_back(constant(ur) * f - total * euler_part(f, static_cast<int>(r) - 1));
  }
  for (std::size_t c = 1; c < cols; ++c) {
    long uc = 0;
    for (std::size_t r = 0; r < rows; ++r) uc += u.at(r, c);
    sys.equations.push_back(constant(uc) * f - total * euler_part(f, m + static_cast<int>(c) - 1));
  }
  std::vector<int> torus;
  for (int v = 0; v < m + nn; ++v) torus.push_back(v);
  sys.equations.push_back(saturation(torus, m + nn, f));
  return sys;
}

// -------------------------------------------------------------- counting

namespace {

long count_system(const ScoreSystem& sys, const GroebnerBudget& budget) {
  const int vars = static_cast<int>(sys.variables.size());
  const auto basis = groebner_basis(sys.equations, vars, budget);
  return static_cast<long>(standard_monomial_count(basis, vars));
}

CountResult consensus(std::vector<std::pair<std::uint64_t, long>> trials) {
  CountResult out;
  std::map<long, int> freq;
  for (const auto& [s, c] : trials) ++freq[c];
  int best = -1;
  for (const auto& [c, f] : freq) {
    if (f > best) {
      best = f;
      out.count = c;
    }
  }
  out.stable = freq.size() == 1;
  out.trials = std::move(trials);
  return out;
}

// Per-trial seeds: decorrelated from the user seed by a splitmix step.
std::uint64_t trial_seed(std::uint64_t seed, int t) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(t + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace

long count_critical_points(const ScalingTensor& w, const DataVector& u, const GroebnerBudget& budget) {
  if (w.n() > 2) throw InvalidArgument("the oracle supports n <= 2");
  return count_system(score_system(w, u), budget);
}

long count_critical_points_matrix(const RatMatrix& w, const DataVector& u, const GroebnerBudget& budget) {
  if (w.rows() + w.cols() > 6) throw InvalidArgument("the two-factor oracle supports m + n <= 4");
  return count_system(score_system_matrix(w, u), budget);
}

CountResult oracle_mldeg(const ScalingTensor& w, int trials, std::uint64_t seed, const GroebnerBudget& budget) {
  if (trials < 2) throw InvalidArgument("oracle needs at least 2 trials");
  std::vector<std::pair<std::uint64_t, long>> results;
  for (int t = 0; t < trials; ++t) {
    const std::uint64_t s = trial_seed(seed, t);
    results.emplace_back(s, count_critical_points(w, DataVector::random_tensor(w.n(), s), budget));
  }
  return consensus(std::move(results));
}

CountResult oracle_mldeg_matrix(const RatMatrix& w, int trials, std::uint64_t seed, const GroebnerBudget& budget) {
  if (trials < 2) throw InvalidArgument("oracle needs at least 2 trials");
  std::vector<std::pair<std::uint64_t, long>> results;
  for (int t = 0; t < trials; ++t) {
    const std::uint64_t s = trial_seed(seed, t);
    results.emplace_back(s, count_critical_points_matrix(w, DataVector::random_matrix(w.rows(), w.cols(), s), budget));
  }
  return consensus(std::move(results));
}

}  // namespace segre
