#pragma once

// Factors of the principal A-determinant of P^1 x P^1 x P^n:
//   - the slice minors        F[**k]        = det W_{..k}
//   - the face minors         F[i*(k1,k2)]  = det W_{i.(k1,k2)}
//                             F[*j(k1,k2)]  = det W_{.j(k1,k2)}
//   - the 2x2x2 hyperdeterminants H[k1,k2]
//   - the 2x2x3 hyperdeterminants H[k1,k2,k3]

#include <array>
#include <compare>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "segre/exactmath.hpp"
#include "segre/tensor.hpp"

namespace segre {

enum class FactorKind { SliceMinor = 0, FaceMinorX = 1, FaceMinorY = 2, Hyp222 = 3, Hyp223 = 4 };

/// Identifies one factor.  `face` is i for FaceMinorX and j for FaceMinorY
/// (0 otherwise); `ks` holds the strictly increasing slice indices, padded
/// with -1.  The defaulted ordering is the canonical factor order.
struct FactorId {
  FactorKind kind = FactorKind::SliceMinor;
  int face = 0;
  std::array<int, 3> ks{-1, -1, -1};

  static FactorId slice_minor(int k) { return {FactorKind::SliceMinor, 0, {k, -1, -1}}; }
  static FactorId face_x(int i, int k1, int k2) { return {FactorKind::FaceMinorX, i, {k1, k2, -1}}; }
  static FactorId face_y(int j, int k1, int k2) { return {FactorKind::FaceMinorY, j, {k1, k2, -1}}; }
  static FactorId hyp222(int k1, int k2) { return {FactorKind::Hyp222, 0, {k1, k2, -1}}; }
  static FactorId hyp223(int k1, int k2, int k3) { return {FactorKind::Hyp223, 0, {k1, k2, k3}}; }

  /// Canonical name, e.g. "F[**0]", "F[1*(0,2)]", "F[*0(1,2)]", "H[0,1]", "H[0,1,2]".
  std::string name() const;
  static FactorId parse(std::string_view name);

  bool is_minor() const { return kind <= FactorKind::FaceMinorY; }
  bool is_hyperdeterminant() const { return !is_minor(); }
  /// Slice indices actually used.
  std::span<const int> slices() const;

  /// Tensor entries (i, j, k) a minor depends on; empty for hyperdeterminants.
  std::vector<std::array<int, 3>> variables() const;

  friend auto operator<=>(const FactorId&, const FactorId&) = default;
};

/// Every factor for a given n, in canonical order.  Count is
/// (n+1) + 4 C(n+1,2) + C(n+1,2) + C(n+1,3).
std::vector<FactorId> all_factors(int n);
std::size_t factor_count(int n);

/// Throws InvalidArgument if `id` is not a valid factor for this n.
void validate_factor(const FactorId& id, int n);

struct VanishingPattern {
  int n = 1;
  std::set<FactorId> vanishing;

  bool contains(const FactorId& id) const { return vanishing.count(id) != 0; }
  std::vector<std::string> names() const;
  std::vector<FactorId> minors() const;

  friend bool operator==(const VanishingPattern&, const VanishingPattern&) = default;
};

VanishingPattern make_pattern(int n, std::span<const FactorId> factors);
VanishingPattern parse_pattern(int n, std::span<const std::string> names);

// ---- evaluation on raw entry accessors (used by the witness constructors,
// which manipulate entries before they become a validated tensor)

/// Value of a minor with entries read through `w(i, j, k)`.
template <class Entries>
Rational minor_value(const FactorId& id, const Entries& w) {
  const int k1 = id.ks[0];
  const int k2 = id.ks[1];
  switch (id.kind) {
    case FactorKind::SliceMinor:
      return w(0, 0, k1) * w(1, 1, k1) - w(0, 1, k1) * w(1, 0, k1);
    case FactorKind::FaceMinorX:
      return w(id.face, 0, k1) * w(id.face, 1, k2) - w(id.face, 1, k1) * w(id.face, 0, k2);
    case FactorKind::FaceMinorY:
      return w(0, id.face, k1) * w(1, id.face, k2) - w(1, id.face, k1) * w(0, id.face, k2);
    default:
      throw InvalidArgument("minor_value called on " + id.name());
  }
}

/// The 12-term 2x2x2 hyperdeterminant of slices k1, k2.
template <class Entries>
Rational hyp222_value(int k1, int k2, const Entries& w) {
  const Rational a = w(0, 0, k1) * w(1, 1, k2) - w(0, 0, k2) * w(1, 1, k1);
  const Rational b = w(0, 1, k1) * w(1, 0, k2) - w(0, 1, k2) * w(1, 0, k1);
  const Rational x0 = w(0, 0, k1) * w(0, 1, k2) - w(0, 1, k1) * w(0, 0, k2);
  const Rational x1 = w(1, 0, k1) * w(1, 1, k2) - w(1, 1, k1) * w(1, 0, k2);
  const Rational d = a - b;
  return d * d - Rational(4) * x0 * x1;
}

// ---- operations on validated tensors

/// Exact value of a minor.  Throws InvalidArgument for non-minor ids.
Rational eval_minor(const ScalingTensor& w, const FactorId& id);

/// Exact value of H[k1,k2]; requires k1 < k2.
Rational eval_hyp222(const ScalingTensor& w, int k1, int k2);

/// det T_{k1 k2}(y), the degree-2 binary form whose discriminant is H[k1,k2].
BinaryForm pair_determinant(const ScalingTensor& w, int k1, int k2);

/// True iff q_k1, q_k2, q_k3 have a common zero in P^1 x P^1, i.e. the
/// three pair determinants share a projective root.
bool hyp223_vanishes(const ScalingTensor& w, int k1, int k2, int k3);

/// True iff the factor vanishes at w.
bool factor_vanishes(const ScalingTensor& w, const FactorId& id);

VanishingPattern vanishing_pattern(const ScalingTensor& w);

// ---- combinatorics of vanishing minors

struct StructureReport {
  std::vector<std::vector<FactorId>> hooks;
  std::vector<std::vector<FactorId>> mirrors;
  std::vector<std::vector<FactorId>> square_cups;
  std::vector<std::vector<FactorId>> cubic_frames;
};

/// True iff the minor lies in the 2x2x2 subtensor on slices (k1, k2).
bool minor_in_cube(const FactorId& minor, int k1, int k2);

/// Hooks, mirrors, square cups and cubic frames formed by the vanishing
/// minors of `pattern` (hyperdeterminants in the pattern are ignored).
StructureReport detect_structures(const VanishingPattern& pattern);

/// True iff the minor set is forced to make a hyperdeterminant vanish: it
/// contains a square cup, or two minors of the same face inside one 2x2x3
/// subtensor.
bool forces_H(std::span<const FactorId> minors);

// ---- n = 1

enum class SymmetryClass { Empty, Single, Pair, Corner, Frame, Full };
std::string_view to_string(SymmetryClass c);

struct N1Classification {
  bool feasible = false;
  int chi = 0;  // Euler characteristic magnitude, 1..6 when feasible
  SymmetryClass symmetry_class = SymmetryClass::Empty;
};

/// Stratum of an n = 1 vanishing pattern, or infeasible.  Throws
/// InvalidArgument when the pattern is not over the n = 1 factor set.
N1Classification classify_pattern_n1(const VanishingPattern& pattern);

}  // namespace segre
