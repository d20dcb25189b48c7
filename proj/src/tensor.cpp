#include "segre/tensor.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace segre {

namespace {

void check_entries(int n, const std::vector<Rational>& w) {
  for (int k = 0; k <= n; ++k) {
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        if (w[static_cast<std::size_t>(k) * 4 + static_cast<std::size_t>(i) * 2 + static_cast<std::size_t>(j)].is_zero()) {
          throw ZeroEntry(i, j, k);
        }
      }
    }
  }
}

}  // namespace

ScalingTensor ScalingTensor::make(int n, const std::vector<std::vector<std::vector<Rational>>>& w) {
  if (n < 1) throw DimensionMismatch("n must be at least 1, got " + std::to_string(n));
  if (w.size() != 2) throw DimensionMismatch("first tensor mode must have size 2");
  std::vector<Rational> flat(static_cast<std::size_t>(n + 1) * 4);
  for (int i = 0; i < 2; ++i) {
    if (w[static_cast<std::size_t>(i)].size() != 2) throw DimensionMismatch("second tensor mode must have size 2");
    for (int j = 0; j < 2; ++j) {
      const auto& fiber = w[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      if (fiber.size() != static_cast<std::size_t>(n + 1)) {
        throw DimensionMismatch("third tensor mode must have size n+1 = " + std::to_string(n + 1));
      }
      for (int k = 0; k <= n; ++k) {
        flat[static_cast<std::size_t>(k) * 4 + static_cast<std::size_t>(i) * 2 + static_cast<std::size_t>(j)] =
            fiber[static_cast<std::size_t>(k)];
      }
    }
  }
  check_entries(n, flat);
  return ScalingTensor(n, std::move(flat));
}

ScalingTensor ScalingTensor::from_slices(const std::vector<std::array<Rational, 4>>& slices) {
  if (slices.size() < 2) throw DimensionMismatch("need at least two slices");
  const int n = static_cast<int>(slices.size()) - 1;
  std::vector<Rational> flat;
  flat.reserve(slices.size() * 4);
  for (const auto& s : slices) flat.insert(flat.end(), s.begin(), s.end());
  check_entries(n, flat);
  return ScalingTensor(n, std::move(flat));
}

ScalingTensor ScalingTensor::ones(int n) {
  if (n < 1) throw DimensionMismatch("n must be at least 1");
  return ScalingTensor(n, std::vector<Rational>(static_cast<std::size_t>(n + 1) * 4, Rational(1)));
}

const Rational& ScalingTensor::at(int i, int j, int k) const {
  if (i < 0 || i > 1 || j < 0 || j > 1 || k < 0 || k > n_) {
    throw IndexOutOfRange("tensor index (" + std::to_string(i) + "," + std::to_string(j) + "," +
                          std::to_string(k) + ") out of range for n=" + std::to_string(n_));
  }
  return (*this)(i, j, k);
}

RatMatrix ScalingTensor::slice(int k) const {
  if (k < 0 || k > n_) throw IndexOutOfRange("slice index " + std::to_string(k));
  return RatMatrix{{(*this)(0, 0, k), (*this)(0, 1, k)}, {(*this)(1, 0, k), (*this)(1, 1, k)}};
}

std::array<Rational, 4> ScalingTensor::slice_entries(int k) const {
  if (k < 0 || k > n_) throw IndexOutOfRange("slice index " + std::to_string(k));
  return {(*this)(0, 0, k), (*this)(0, 1, k), (*this)(1, 0, k), (*this)(1, 1, k)};
}

RatMatrix ScalingTensor::face_matrix(Axis axis, int index) const {
  if (index < 0 || index > 1) throw IndexOutOfRange("face index " + std::to_string(index));
  RatMatrix m(2, static_cast<std::size_t>(n_ + 1));
  for (int r = 0; r < 2; ++r) {
    for (int k = 0; k <= n_; ++k) {
      m(static_cast<std::size_t>(r), static_cast<std::size_t>(k)) =
          axis == Axis::X ? (*this)(index, r, k) : (*this)(r, index, k);
    }
  }
  return m;
}

RatMatrix ScalingTensor::flattening(int mode, std::span<const int> ks) const {
  std::vector<int> all;
  if (ks.empty()) {
    all.resize(static_cast<std::size_t>(n_ + 1));
    std::iota(all.begin(), all.end(), 0);
    ks = all;
  }
  for (int k : ks) {
    if (k < 0 || k > n_) throw IndexOutOfRange("flattening slice index " + std::to_string(k));
  }
  const std::size_t m = ks.size();
  switch (mode) {
    case 3: {
      RatMatrix out(m, 4);
      for (std::size_t r = 0; r < m; ++r) {
        const auto e = slice_entries(ks[r]);
        for (std::size_t c = 0; c < 4; ++c) out(r, c) = e[c];
      }
      return out;
    }
    case 1: {
      RatMatrix out(2, 2 * m);
      for (int i = 0; i < 2; ++i) {
        for (std::size_t r = 0; r < m; ++r) {
          for (int j = 0; j < 2; ++j) out(static_cast<std::size_t>(i), 2 * r + static_cast<std::size_t>(j)) = (*this)(i, j, ks[r]);
        }
      }
      return out;
    }
    case 2: {
      RatMatrix out(2, 2 * m);
      for (int j = 0; j < 2; ++j) {
        for (int i = 0; i < 2; ++i) {
          for (std::size_t r = 0; r < m; ++r) {
            out(static_cast<std::size_t>(j), static_cast<std::size_t>(i) * m + r) = (*this)(i, j, ks[r]);
          }
        }
      }
      return out;
    }
    default:
      throw InvalidArgument("flattening mode must be 1, 2 or 3");
  }
}

ScalingTensor torus_rescale(const ScalingTensor& w, std::span<const Rational> a,
                            std::span<const Rational> b, std::span<const Rational> c) {
  if (a.size() != 2 || b.size() != 2 || c.size() != static_cast<std::size_t>(w.n() + 1)) {
    throw DimensionMismatch("torus_rescale scalar counts must be 2, 2 and n+1");
  }
  auto nonzero = [](const Rational& s) { return !s.is_zero(); };
  if (!std::all_of(a.begin(), a.end(), nonzero) || !std::all_of(b.begin(), b.end(), nonzero) ||
      !std::all_of(c.begin(), c.end(), nonzero)) {
    throw InvalidArgument("torus_rescale scalars must be nonzero");
  }
  std::vector<Rational> out(w.w_.size());
  for (int k = 0; k <= w.n(); ++k) {
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        out[w.index(i, j, k)] = a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)] *
                                c[static_cast<std::size_t>(k)] * w(i, j, k);
      }
    }
  }
  return ScalingTensor(w.n(), std::move(out));
}

ScalingTensor permute_slices(const ScalingTensor& w, std::span<const int> sigma) {
  const int count = w.slice_count();
  if (sigma.size() != static_cast<std::size_t>(count)) throw DimensionMismatch("permutation size must be n+1");
  std::vector<bool> seen(static_cast<std::size_t>(count));
  for (int s : sigma) {
    if (s < 0 || s >= count || seen[static_cast<std::size_t>(s)]) throw InvalidArgument("not a permutation of the slices");
    seen[static_cast<std::size_t>(s)] = true;
  }
  std::vector<std::array<Rational, 4>> slices;
  for (int k = 0; k < count; ++k) slices.push_back(w.slice_entries(sigma[static_cast<std::size_t>(k)]));
  return ScalingTensor::from_slices(slices);
}

ScalingTensor swap_xy(const ScalingTensor& w) {
  std::vector<std::array<Rational, 4>> slices;
  for (int k = 0; k <= w.n(); ++k) slices.push_back({w(0, 0, k), w(1, 0, k), w(0, 1, k), w(1, 1, k)});
  return ScalingTensor::from_slices(slices);
}

ScalingTensor duplicate_last_slice(const ScalingTensor& w) {
  std::vector<std::array<Rational, 4>> slices;
  for (int k = 0; k <= w.n(); ++k) slices.push_back(w.slice_entries(k));
  slices.push_back(slices.back());
  return ScalingTensor::from_slices(slices);
}

}  // namespace segre
