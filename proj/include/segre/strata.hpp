#pragma once

// The Euler stratification of P^1 x P^1 x P^1 scalings: the 41 feasible
// vanishing patterns, a witness tensor for each, and the sign-pattern
// sampling experiment over the seven factors.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "segre/adet.hpp"
#include "segre/tensor.hpp"

namespace segre {

struct Stratum {
  VanishingPattern pattern;
  int chi = 0;
  std::string witness_recipe;
  SymmetryClass symmetry_class = SymmetryClass::Empty;
};

/// All 41 strata, ordered by decreasing chi and then by pattern.
std::vector<Stratum> enumerate_strata_n1();

/// A tensor whose vanishing pattern is exactly s.pattern.  Throws
/// GenerationFailed if the retry budget runs out.
ScalingTensor witness_for_stratum(const Stratum& s, std::uint64_t seed);

/// Witness for an arbitrary n = 1 pattern, when the pattern is feasible.
ScalingTensor witness_for_pattern_n1(const VanishingPattern& pattern, std::uint64_t seed);

/// Seven characters over {+, -, 0} for the factors in the order
/// F[0*], F[1*], F[*0], F[*1], F[**0], F[**1], H of an n = 1 tensor.
std::string sign_pattern(const ScalingTensor& w);

/// The four negative-hyperdeterminant patterns exactly as tabulated in the
/// literature, whose minors carry the opposite orientation to det above.
const std::array<std::string, 4>& tabulated_negative_h_patterns();

/// Negate the six minor signs, leaving the hyperdeterminant sign alone.
std::string flip_minor_signs(const std::string& pattern);

/// The four negative-hyperdeterminant patterns in this library's
/// orientation: the tabulated ones with minor signs flipped.
std::array<std::string, 4> negative_h_patterns();

struct SignSample {
  long samples = 0;
  long skipped = 0;                       // draws with some factor exactly zero
  std::map<std::string, long> discovered;  // pattern -> number of draws
};

/// Draws tensors with integer entries uniform in [-bound, bound] \ {0}.
SignSample sample_sign_patterns(long samples, int bound, std::uint64_t seed);

/// Stochastic local search for a tensor with the given (zero-free) sign
/// pattern; nullopt if none is found within `steps` moves.
std::optional<ScalingTensor> search_sign_pattern(const std::string& target, std::uint64_t seed, long steps = 200000);

}  // namespace segre
