#pragma once

#include <cstddef>
#include <vector>

#include "mcrpc/ring_model.hpp"
#include "mcrpc/solve_result.hpp"

namespace mcrpc {

/// How the rest of the instance sits relative to an anchor demand p.
struct ParallelProfile {
  std::size_t anchor = 0;
  /// Demands parallel to p whose ends differ from p's, ascending index.
  std::vector<std::size_t> parallel;
  /// For each entry of `parallel`, the side of that demand whose route lies
  /// inside the side of p holding both its ends.
  std::vector<Side> canonical;
  std::size_t count_plus = 0;   // canonical routes inside p+
  std::size_t count_minus = 0;  // canonical routes inside p-
  /// Everything else: p itself, its multiples, and the demands crossing it.
  std::vector<std::size_t> free;
};

ParallelProfile parallel_profile(const Instance& instance, std::size_t p);

/// Largest free-set size over all anchors. Throws EmptyInstanceError.
std::size_t parameter_k(const Instance& instance);

/// p is critical for the routing when every demand in its parallel set uses
/// its canonical side.
bool is_critical(const Instance& instance, const Routing& routing, std::size_t p);

inline constexpr std::size_t kFptParameterLimit = 25;

/// Exact solver for uniform weights. For each anchor, fixes the canonical
/// sides on its parallel set and enumerates the free set; `evaluated` counts
/// the routings scored and never exceeds |D| * 2^k.
/// Throws NonUniformWeightsError, or SizeLimitError when k > 25.
SolveResult solve_fpt(const Instance& instance);

}  // namespace mcrpc
