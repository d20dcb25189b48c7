#pragma once

// Test-side generators and independent reference computations.

#include <algorithm>
#include <array>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "segre/adet.hpp"
#include "segre/exactmath.hpp"
#include "segre/tensor.hpp"

namespace testing {

using namespace segre;

inline Rational random_nonzero(std::mt19937_64& rng, int bound = 9) {
  std::uniform_int_distribution<int> mag(1, bound);
  return Rational(mag(rng) * ((rng() & 1) ? 1 : -1));
}

inline ScalingTensor random_tensor(int n, std::mt19937_64& rng, int bound = 9) {
  std::vector<std::array<Rational, 4>> slices;
  for (int k = 0; k <= n; ++k) {
    slices.push_back({random_nonzero(rng, bound), random_nonzero(rng, bound), random_nonzero(rng, bound), random_nonzero(rng, bound)});
  }
  return ScalingTensor::from_slices(slices);
}

inline ScalingTensor slices(std::vector<std::array<Rational, 4>> s) { return ScalingTensor::from_slices(s); }

// The 2x2x3 counterexample pair.
inline ScalingTensor example_w() { return slices({{1, 3, 2, 4}, {2, 1, 4, 6}, {3, 4, 6, 10}}); }
inline ScalingTensor example_w_prime() { return slices({{1, 3, 2, 4}, {2, 1, 4, 6}, {3, 3, 6, 1}}); }
// f0 = 2 + x + 5y + 2xy, f1 = 2 + 2x + 5y + 2xy, f2 = 1 + x + y + xy
inline ScalingTensor hook_chain_example() { return slices({{2, 5, 1, 2}, {2, 5, 2, 2}, {1, 1, 1, 1}}); }

/// Slices drawn to hit degenerate configurations often: rank-one slices,
/// copies, row or column rescalings and sums of earlier slices.
inline ScalingTensor structured_tensor(int n, std::mt19937_64& rng) {
  std::vector<std::array<Rational, 4>> s;
  std::uniform_int_distribution<int> pick(0, 5);
  const auto small = [&] { return random_nonzero(rng, 3); };
  while (static_cast<int>(s.size()) <= n) {
    std::array<Rational, 4> e;
    const int how = s.empty() ? pick(rng) % 2 : pick(rng);
    if (how == 0) {
      e = {small(), small(), small(), small()};
    } else if (how == 1) {
      const Rational a0 = small(), a1 = small(), b0 = small(), b1 = small();
      e = {a0 * b0, a0 * b1, a1 * b0, a1 * b1};
    } else {
      const auto& p = s[static_cast<std::size_t>(rng() % s.size())];
      const Rational c0 = small(), c1 = small();
      if (how == 2) {
        e = {c0 * p[0], c0 * p[1], c0 * p[2], c0 * p[3]};
      } else if (how == 3) {
        e = {c0 * p[0], c0 * p[1], c1 * p[2], c1 * p[3]};
      } else if (how == 4) {
        e = {c0 * p[0], c1 * p[1], c0 * p[2], c1 * p[3]};
      } else {
        const auto& q = s[static_cast<std::size_t>(rng() % s.size())];
        for (std::size_t t = 0; t < 4; ++t) e[t] = c0 * p[t] + c1 * q[t];
      }
    }
    if (std::any_of(e.begin(), e.end(), [](const Rational& v) { return v.is_zero(); })) continue;
    s.push_back(e);
  }
  return ScalingTensor::from_slices(s);
}

/// Leibniz expansion.
inline Rational leibniz_det(const RatMatrix& m) {
  std::vector<std::size_t> perm(m.rows());
  std::iota(perm.begin(), perm.end(), 0);
  Rational total = 0;
  do {
    Rational term = 1;
    int inversions = 0;
    for (std::size_t a = 0; a < perm.size(); ++a) {
      term *= m(a, perm[a]);
      for (std::size_t b = a + 1; b < perm.size(); ++b) inversions += perm[a] > perm[b];
    }
    total += inversions % 2 ? -term : term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

/// Largest r such that some r x r minor is nonzero.
inline std::size_t rank_by_minors(const RatMatrix& m) {
  const std::size_t top = std::min(m.rows(), m.cols());
  for (std::size_t r = top; r > 0; --r) {
    std::vector<bool> rsel(m.rows(), false), csel(m.cols(), false);
    std::fill(rsel.begin(), rsel.begin() + static_cast<std::ptrdiff_t>(r), true);
    do {
      std::fill(csel.begin(), csel.end(), false);
      std::fill(csel.begin(), csel.begin() + static_cast<std::ptrdiff_t>(r), true);
      do {
        std::vector<std::size_t> ri, ci;
        for (std::size_t a = 0; a < m.rows(); ++a) {
          if (rsel[a]) ri.push_back(a);
        }
        for (std::size_t a = 0; a < m.cols(); ++a) {
          if (csel[a]) ci.push_back(a);
        }
        if (!leibniz_det(m.submatrix(ri, ci)).is_zero()) return r;
      } while (std::prev_permutation(csel.begin(), csel.end()));
    } while (std::prev_permutation(rsel.begin(), rsel.end()));
  }
  return 0;
}

/// Vanishing pattern expected after permuting slices (slice k of the
/// result is old slice sigma[k]).
inline VanishingPattern relabel_slices(const VanishingPattern& p, const std::vector<int>& sigma) {
  std::vector<int> inverse(sigma.size());
  for (std::size_t k = 0; k < sigma.size(); ++k) inverse[static_cast<std::size_t>(sigma[k])] = static_cast<int>(k);
  VanishingPattern out{p.n, {}};
  for (FactorId f : p.vanishing) {
    const std::size_t used = f.slices().size();
    for (std::size_t a = 0; a < used; ++a) f.ks[a] = inverse[static_cast<std::size_t>(f.ks[a])];
    std::sort(f.ks.begin(), f.ks.begin() + static_cast<std::ptrdiff_t>(used));
    out.vanishing.insert(f);
  }
  return out;
}

/// Vanishing pattern expected after exchanging the x and y modes.
inline VanishingPattern relabel_swap(const VanishingPattern& p) {
  VanishingPattern out{p.n, {}};
  for (FactorId f : p.vanishing) {
    if (f.kind == FactorKind::FaceMinorX) {
      f.kind = FactorKind::FaceMinorY;
    } else if (f.kind == FactorKind::FaceMinorY) {
      f.kind = FactorKind::FaceMinorX;
    }
    out.vanishing.insert(f);
  }
  return out;
}

}  // namespace testing
