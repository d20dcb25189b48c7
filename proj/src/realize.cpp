#include "segre/realize.hpp"

#include <algorithm>
#include <random>

#include "forcing.hpp"
#include "segre/strata.hpp"

namespace segre {

std::vector<FactorId> alt_hooks(int n) {
  if (n < 1) throw InvalidArgument("n must be at least 1");
  std::vector<FactorId> out;
  for (int c = 0; c < n; ++c) {
    if (c % 2 == 0) {
      out.push_back(FactorId::face_y(0, c, c + 1));
      out.push_back(FactorId::face_x(1, c, c + 1));
    } else {
      out.push_back(FactorId::face_y(1, c, c + 1));
      out.push_back(FactorId::face_x(0, c, c + 1));
    }
  }
  return out;
}

std::vector<FactorId> hook_family(int n) {
  auto out = alt_hooks(n);
  out.push_back(FactorId::slice_minor(n));
  return out;
}

ScalingTensor generic_solution(int n, std::span<const FactorId> constraints, std::uint64_t seed) {
  const auto family = hook_family(n);
  for (const auto& c : constraints) {
    if (std::find(family.begin(), family.end(), c) == family.end()) {
      throw InvalidArgument(c.name() + " is not an alternating hook minor or F[**n]");
    }
  }
  const VanishingPattern target = make_pattern(n, constraints);
  const auto order = detail::solve_order(constraints);
  if (!order) throw GenerationFailed("constraint set has no triangular solve order");

  std::mt19937_64 rng(seed);
  constexpr int kAttempts = 200;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    detail::Draft d = detail::random_draft(n, rng);
    if (!detail::force_minors(d, *order) || !d.all_nonzero()) continue;
    ScalingTensor w = d.tensor();
    if (vanishing_pattern(w) == target) return w;
  }
  throw GenerationFailed("no generic solution found after " + std::to_string(kAttempts) + " attempts");
}

ScalingTensor realize(int n, int r, std::uint64_t seed) {
  if (n < 1) throw InvalidArgument("n must be at least 1");
  const int top = (n + 1) * (n + 2);
  if (r < 1 || r > top) {
    throw InvalidArgument("r must lie in [1, " + std::to_string(top) + "], got " + std::to_string(r));
  }
  if (r >= n * (n + 1) + 1) {
    const auto family = hook_family(n);
    const std::span<const FactorId> chosen(family.data(), static_cast<std::size_t>(top - r));
    return generic_solution(n, chosen, seed);
  }
  if (n == 1) {
    // r = 2 and r = 1 lie below the hook range for n = 1.
    const auto strata = enumerate_strata_n1();
    const auto it = std::find_if(strata.begin(), strata.end(), [&](const Stratum& s) {
      return s.chi == r && (r == 1 || s.pattern.contains(FactorId::face_x(0, 0, 1)) && s.pattern.contains(FactorId::face_y(0, 0, 1)));
    });
    return witness_for_stratum(*it, seed);
  }
  return duplicate_last_slice(realize(n - 1, r, seed));
}

}  // namespace segre
