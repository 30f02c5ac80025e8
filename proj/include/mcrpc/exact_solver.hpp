#pragma once

#include "mcrpc/ring_model.hpp"
#include "mcrpc/solve_result.hpp"

namespace mcrpc {

inline constexpr std::size_t kExactDemandLimit = 25;

/// Minimum clique value over all 2^|D| routings. Among optimal routings the
/// lexicographically smallest side vector (+ before -) is returned.
/// Throws SizeLimitError above 25 demands.
SolveResult solve_exact(const Instance& instance);

/// Same minimum restricted to routings without collisions. The all-plus
/// routing is always collision-free, so the restricted set is never empty.
SolveResult solve_exact_collision_free(const Instance& instance);

}  // namespace mcrpc
