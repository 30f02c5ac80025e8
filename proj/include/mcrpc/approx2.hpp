#pragma once

#include "mcrpc/ring_model.hpp"
#include "mcrpc/solve_result.hpp"

namespace mcrpc {

/// Each demand takes its side with fewer nodes; ties go to Plus.
Routing shortest_side_routing(const Instance& instance);

/// Clique value of the shortest-side routing; at most twice the optimum.
SolveResult solve_approx2(const Instance& instance);

}  // namespace mcrpc
