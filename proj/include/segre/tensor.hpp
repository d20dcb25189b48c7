#pragma once

// The 2 x 2 x (n+1) scaling tensor W = (w_ijk) and its views.
//
// Index convention: w(i, j, k) is the coefficient of x_i y_j z_k, so slice k
// holds the coefficients of the bilinear form
//   q_k = w00k x0y0 + w01k x0y1 + w10k x1y0 + w11k x1y1.

#include <array>
#include <span>
#include <vector>

#include "segre/exactmath.hpp"

namespace segre {

enum class Axis { X, Y };

class ScalingTensor {
 public:
  /// Entries given as w[i][j][k]; throws DimensionMismatch or ZeroEntry.
  static ScalingTensor make(int n, const std::vector<std::vector<std::vector<Rational>>>& w);

  /// One array (w00k, w01k, w10k, w11k) per slice k, i.e. the coefficient
  /// lists of q_0, ..., q_n.
  static ScalingTensor from_slices(const std::vector<std::array<Rational, 4>>& slices);

  /// Every entry equal to 1.
  static ScalingTensor ones(int n);

  int n() const { return n_; }
  int slice_count() const { return n_ + 1; }

  const Rational& operator()(int i, int j, int k) const { return w_[index(i, j, k)]; }
  const Rational& at(int i, int j, int k) const;

  /// W_{..k} = [[w00k, w01k], [w10k, w11k]].
  RatMatrix slice(int k) const;
  std::array<Rational, 4> slice_entries(int k) const;

  /// Face W_{i..} (axis X) or W_{.j.} (axis Y) as a 2 x (n+1) matrix whose
  /// row is the remaining binary index and whose column is k.
  RatMatrix face_matrix(Axis axis, int index) const;

  /// Mode-s flattening restricted to the slice set `ks` (all slices when
  /// empty).  Mode 3: |ks| x 4 with columns (00, 01, 10, 11).  Mode 1:
  /// 2 x 2|ks|, row i, columns (k, j).  Mode 2: 2 x 2|ks|, row j, columns (i, k).
  RatMatrix flattening(int mode, std::span<const int> ks = {}) const;

  friend bool operator==(const ScalingTensor&, const ScalingTensor&) = default;

 private:
  ScalingTensor(int n, std::vector<Rational> w) : n_(n), w_(std::move(w)) {}
  std::size_t index(int i, int j, int k) const {
    return static_cast<std::size_t>(k) * 4 + static_cast<std::size_t>(i) * 2 + static_cast<std::size_t>(j);
  }
  friend ScalingTensor torus_rescale(const ScalingTensor&, std::span<const Rational>,
                                     std::span<const Rational>, std::span<const Rational>);

  int n_ = 0;
  std::vector<Rational> w_;
};

/// w'_ijk = a_i b_j c_k w_ijk.  Throws InvalidArgument on a zero scalar.
ScalingTensor torus_rescale(const ScalingTensor& w, std::span<const Rational> a,
                            std::span<const Rational> b, std::span<const Rational> c);

/// Slice k of the result is slice sigma[k] of w.
ScalingTensor permute_slices(const ScalingTensor& w, std::span<const int> sigma);

/// w'_ijk = w_jik.
ScalingTensor swap_xy(const ScalingTensor& w);

/// Appends a copy of the last slice (n grows by one).
ScalingTensor duplicate_last_slice(const ScalingTensor& w);

}  // namespace segre
