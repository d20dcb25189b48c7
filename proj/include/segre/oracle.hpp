#pragma once

// Independent ML-degree check: count the critical points of the
// log-likelihood by completing the saturated score equations to a Groebner
// basis and counting standard monomials.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "segre/exactmath.hpp"
#include "segre/polynomial.hpp"
#include "segre/tensor.hpp"

namespace segre {

/// Positive integer counts laid out like the tensor (or matrix) entries.
class DataVector {
 public:
  /// Counts for a 2 x 2 x (n+1) tensor, indexed u[i][j][k].
  static DataVector for_tensor(int n, const std::vector<std::vector<std::vector<long>>>& u);
  /// Counts for an r x c matrix, indexed u[i][j].
  static DataVector for_matrix(const std::vector<std::vector<long>>& u);
  /// Entries uniform in [1, 1000] from the given generator.
  static DataVector random_tensor(int n, std::uint64_t seed);
  static DataVector random_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed);

  const std::vector<std::size_t>& shape() const { return shape_; }
  /// Row-major over shape().
  const std::vector<long>& values() const { return u_; }
  long at(std::size_t a, std::size_t b, std::size_t c = 0) const;
  long total() const { return total_; }

 private:
  DataVector(std::vector<std::size_t> shape, std::vector<long> u);
  std::vector<std::size_t> shape_;
  std::vector<long> u_;
  long total_ = 0;
};

struct ScoreSystem {
  std::vector<std::string> variables;  // last one is the saturation variable
  std::vector<Polynomial> equations;   // score equations, then the saturation equation
  Polynomial likelihood_denominator;   // f in the affine chart
};

/// Unknowns x1, y1, z1..zn, s.  Score equations
///   u_{1++} f - u x1 f_x,  u_{+1+} f - u y1 f_y,  u_{++k} f - u z_k f_k,
/// then s x1 y1 z1..zn f - 1.
ScoreSystem score_system(const ScalingTensor& w, const DataVector& u);

/// Two-factor analogue for an (m+1) x (n+1) scaling matrix: unknowns
/// x1..xm, y1..yn, s.
ScoreSystem score_system_matrix(const RatMatrix& w, const DataVector& u);

/// Number of solutions of the saturated system (with multiplicity; generic
/// data makes them simple).  Supports n <= 2, and matrices with m + n <= 4.
long count_critical_points(const ScalingTensor& w, const DataVector& u, const GroebnerBudget& budget = {});
long count_critical_points_matrix(const RatMatrix& w, const DataVector& u, const GroebnerBudget& budget = {});

struct CountResult {
  long count = 0;
  bool stable = false;
  std::vector<std::pair<std::uint64_t, long>> trials;  // (seed, count)
};

/// Runs `trials` random data vectors with seeds derived from `seed`; the
/// reported count is the most frequent one and `stable` says all agreed.
CountResult oracle_mldeg(const ScalingTensor& w, int trials, std::uint64_t seed, const GroebnerBudget& budget = {});
CountResult oracle_mldeg_matrix(const RatMatrix& w, int trials, std::uint64_t seed, const GroebnerBudget& budget = {});

}  // namespace segre
