#pragma once

// Shared machinery for building tensors with prescribed vanishing minors:
// a mutable draft of entries, the entry pool, and a solve order in which
// each minor is zeroed through an entry no later minor touches.

#include <array>
#include <optional>
#include <random>
#include <span>
#include <utility>
#include <vector>

#include "segre/adet.hpp"
#include "segre/exactmath.hpp"
#include "segre/tensor.hpp"

namespace segre::detail {

class Draft {
 public:
  explicit Draft(int n) : n_(n), e_(static_cast<std::size_t>(n + 1) * 4) {}

  int n() const { return n_; }
  Rational& operator()(int i, int j, int k) { return e_[index(i, j, k)]; }
  const Rational& operator()(int i, int j, int k) const { return e_[index(i, j, k)]; }

  bool all_nonzero() const {
    for (const auto& v : e_) {
      if (v.is_zero()) return false;
    }
    return true;
  }

  /// Throws ZeroEntry when some entry vanished.
  ScalingTensor tensor() const {
    std::vector<std::array<Rational, 4>> slices;
    for (int k = 0; k <= n_; ++k) slices.push_back({(*this)(0, 0, k), (*this)(0, 1, k), (*this)(1, 0, k), (*this)(1, 1, k)});
    return ScalingTensor::from_slices(slices);
  }

  static Draft of(const ScalingTensor& w) {
    Draft d(w.n());
    for (int k = 0; k <= w.n(); ++k) {
      for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) d(i, j, k) = w(i, j, k);
      }
    }
    return d;
  }

 private:
  std::size_t index(int i, int j, int k) const {
    return static_cast<std::size_t>(k) * 4 + static_cast<std::size_t>(i) * 2 + static_cast<std::size_t>(j);
  }
  int n_;
  std::vector<Rational> e_;
};

/// p / d with p a prime below 100 and d in 1..7.
inline Rational pool_entry(std::mt19937_64& rng) {
  static constexpr std::array<int, 25> primes{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41,
                                              43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};
  std::uniform_int_distribution<std::size_t> pick(0, primes.size() - 1);
  std::uniform_int_distribution<int> den(1, 7);
  const int p = primes[pick(rng)];
  const int d = den(rng);
  return Rational(p, d);
}

inline Draft random_draft(int n, std::mt19937_64& rng) {
  Draft d(n);
  for (int k = 0; k <= n; ++k) {
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) d(i, j, k) = pool_entry(rng);
    }
  }
  return d;
}

using Entry = std::array<int, 3>;

/// Order for zeroing `minors` one at a time: each minor is paired with an
/// entry absent from every minor solved before it, so later solves never
/// undo earlier ones.  Found by peeling off, from the back, a minor that
/// owns an entry no other remaining minor uses.  nullopt if stuck.
inline std::optional<std::vector<std::pair<FactorId, Entry>>> solve_order(std::span<const FactorId> minors) {
  std::vector<FactorId> rest(minors.begin(), minors.end());
  std::vector<std::pair<FactorId, Entry>> reversed;
  while (!rest.empty()) {
    bool peeled = false;
    for (std::size_t a = 0; a < rest.size() && !peeled; ++a) {
      for (const Entry& v : rest[a].variables()) {
        bool shared = false;
        for (std::size_t b = 0; b < rest.size() && !shared; ++b) {
          if (b == a) continue;
          for (const Entry& u : rest[b].variables()) shared = shared || u == v;
        }
        if (!shared) {
          reversed.emplace_back(rest[a], v);
          rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(a));
          peeled = true;
          break;
        }
      }
    }
    if (!peeled) return std::nullopt;
  }
  return std::vector<std::pair<FactorId, Entry>>(reversed.rbegin(), reversed.rend());
}

/// Set entry v so that `minor` vanishes (the minor is affine-linear in any
/// one of its entries).  False when the coefficient of v is zero or the
/// solution is zero.
inline bool zero_minor_via(Draft& d, const FactorId& minor, const Entry& v) {
  Rational& slot = d(v[0], v[1], v[2]);
  slot = Rational(0);
  const Rational at0 = minor_value(minor, d);
  slot = Rational(1);
  const Rational slope = minor_value(minor, d) - at0;
  if (slope.is_zero()) return false;
  slot = -at0 / slope;
  return !slot.is_zero();
}

inline bool force_minors(Draft& d, const std::vector<std::pair<FactorId, Entry>>& order) {
  for (const auto& [minor, v] : order) {
    if (!zero_minor_via(d, minor, v)) return false;
  }
  return true;
}

}  // namespace segre::detail
