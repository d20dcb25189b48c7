#pragma once

// Euler characteristics of the intersections V_I = V(q_k : k in I) in
// P^1 x P^1 and the ML degree of the scaled Segre product P^1 x P^1 x P^n
// assembled from them by inclusion-exclusion.

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "segre/adet.hpp"
#include "segre/exactmath.hpp"
#include "segre/tensor.hpp"

namespace segre {

/// T_I(y): one row per slice k in I, entries (w00k y0 + w01k y1, w10k y0 + w11k y1).
class PencilMatrix {
 public:
  PencilMatrix(const ScalingTensor& w, std::vector<int> slices);

  std::span<const int> slices() const { return slices_; }
  /// Entry at row position `row` (into slices()) and column 0 or 1.
  const BinaryForm& entry(std::size_t row, int col) const { return entries_.at(2 * row + static_cast<std::size_t>(col)); }

  /// det of the rows for slice indices ka and kb (both in slices()).
  BinaryForm minor(int ka, int kb) const;
  std::vector<BinaryForm> all_minors() const;

  /// True iff some y makes T_I(y) the zero matrix, i.e. all entry forms
  /// share their (unique) root.
  bool has_rank_zero_point() const;

 private:
  std::size_t position(int k) const;

  std::vector<int> slices_;
  std::vector<BinaryForm> entries_;
};

/// Throws InvalidArgument for an empty or out-of-range slice set.
PencilMatrix pencil(const ScalingTensor& w, std::span<const int> slices);

/// Types of T_ij(y).  IV is split by which flattening of the 2x2x2
/// subtensor has rank 1: rows of T proportional (mode 3) or columns (mode 1).
enum class PairType { I, II, III, IV_rows, IV_cols, V };
std::string_view to_string(PairType t);

PairType classify_type(const ScalingTensor& w, int i, int j);

/// chi(V_I) via the gcd of the 2-minors of T_I(y) and rank-0 detection;
/// for |I| = 1 it is 4 - rank of the slice.
int chi_VI(const ScalingTensor& w, std::span<const int> slices);

/// Which case of the explicit classification produced a closed-form value.
enum class ClosedFormCase {
  PairByType,          // |I| = 2
  TripleEmpty,         // H[k1,k2,k3] != 0
  TripleAnyV,
  TripleIIWithIIorIII,
  TripleIIOther,
  TripleAllIII,
  TripleNoTypeI,
  TripleOneOrTwoI,     // remaining types III / IV_rows (or a single type I)
  TripleTwoIWithIVcols,
  TripleThreeIRankDeficient,
  TripleThreeIFullRank,
};
std::string_view to_string(ClosedFormCase c);

struct ClosedFormResult {
  int chi = 0;
  ClosedFormCase which = ClosedFormCase::PairByType;
};

/// chi(V_I) for |I| in {2, 3} from the pair types alone (plus the rank of
/// the mode-3 flattening when all three pairs are type I).
ClosedFormResult chi_VI_closed_form_case(const ScalingTensor& w, std::span<const int> slices);
int chi_VI_closed_form(const ScalingTensor& w, std::span<const int> slices);

/// Coordinates set to zero: J = (J1, J2) with J1, J2 proper subsets of
/// {0, 1}; `x = c` means x_c = 0.
struct AxisZeros {
  std::optional<int> x;
  std::optional<int> y;
  int size() const { return (x ? 1 : 0) + (y ? 1 : 0); }
  std::string str() const;
  friend bool operator==(const AxisZeros&, const AxisZeros&) = default;
};

/// All nine choices of J.
std::vector<AxisZeros> all_axis_zeros();

int chi_VI_XJ(const ScalingTensor& w, std::span<const int> slices, const AxisZeros& j);

struct MLDegreeTerm {
  std::vector<int> slices;
  AxisZeros zeros;
  int chi = 0;
  /// "I=[0,2];J=[x1]"
  std::string key() const;
};

struct MLDegreeReport {
  long mldeg = 0;
  long chi_Y = 0;  // (-1)^(n+1) * mldeg
  std::vector<MLDegreeTerm> terms;
  VanishingPattern factor_pattern;
};

/// ML degree via inclusion-exclusion over nonempty I and the coordinate
/// strata J.  Enumerates 2^(n+1) - 1 slice subsets, so it is meant for
/// moderate n (n <= 12 runs in well under a second).
MLDegreeReport mldeg(const ScalingTensor& w);
long mldeg_value(const ScalingTensor& w);

/// ML degree of the scaled Segre product of two simplices:
/// sum over nonempty row/column sets of (-1)^(|R|+|C|) rank(M_RC).
/// Throws InvalidArgument on a zero entry.
long mldeg_matrix(const RatMatrix& m);

/// The quadric-arrangement shortcut
///   mldeg = -( sum_k chi(Q_k) - sum_{j<k} chi(Q_j cap Q_k) ),
/// valid only when no 2x2x3 hyperdeterminant vanishes (nullopt otherwise).
std::optional<long> mldeg_point_formula(const ScalingTensor& w);

}  // namespace segre
