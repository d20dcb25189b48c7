#pragma once

// Tensors with any prescribed ML degree r in [1, (n+1)(n+2)], built from
// independently vanishing alternating hook minors and slice duplication.

#include <cstdint>
#include <span>
#include <vector>

#include "segre/adet.hpp"
#include "segre/tensor.hpp"

namespace segre {

/// The 2n alternating hook minors: for consecutive slices (c, c+1),
/// {F[*0], F[1*]} when c is even and {F[*1], F[0*]} when c is odd.
std::vector<FactorId> alt_hooks(int n);

/// alt_hooks(n) followed by F[**n]: the family whose subsets vanish freely.
std::vector<FactorId> hook_family(int n);

/// A tensor where exactly the factors in `constraints` vanish.  Requires
/// constraints to be a subset of hook_family(n).  Throws GenerationFailed
/// after the retry budget.
ScalingTensor generic_solution(int n, std::span<const FactorId> constraints, std::uint64_t seed);

/// A tensor with ML degree r.  Throws InvalidArgument when r is out of range.
ScalingTensor realize(int n, int r, std::uint64_t seed = 1);

}  // namespace segre
