#include "mcrpc/exact_solver.hpp"

#include <string>

#include "mcrpc/errors.hpp"
#include "mcrpc/routing_eval.hpp"

namespace mcrpc {

namespace {

SolveResult enumerate(const Instance& instance, bool collision_free_only) {
  const std::size_t m = instance.size();
  if (m > kExactDemandLimit) {
    throw SizeLimitError("exact enumeration limited to " + std::to_string(kExactDemandLimit) +
                         " demands, got " + std::to_string(m));
  }
  return with_evaluator(instance, [&](auto& evaluator, const Rational& unit) {
    using W = std::decay_t<decltype(evaluator.weights().front())>;
    std::optional<W> best;
    std::uint64_t best_code = 0;
    SolveResult result;

    Routing routing = Routing::all(m, Side::Plus);
    const std::uint64_t total = std::uint64_t{1} << m;
    // Demand 0 is the most significant bit, so counter order is lexicographic.
    for (std::uint64_t code = 0; code < total; ++code) {
      for (std::size_t k = 0; k < m; ++k) {
        routing.sides[k] = ((code >> (m - 1 - k)) & 1U) ? Side::Minus : Side::Plus;
      }
      if (collision_free_only && !evaluator.collision_free(routing)) continue;
      ++result.evaluated;
      W value = evaluator.value(routing, best);
      if (!best || value < *best) {
        best = value;
        best_code = code;
      }
    }
    for (std::size_t k = 0; k < m; ++k) {
      routing.sides[k] = ((best_code >> (m - 1 - k)) & 1U) ? Side::Minus : Side::Plus;
    }
    result.routing = routing;
    result.witness = routing_clique(instance, routing);
    result.value = result.witness.weight;
    if (best && result.value != Rational(*best) * unit) {
      throw Error("internal: enumeration value disagrees with clique engine");
    }
    return result;
  });
}

}  // namespace

SolveResult solve_exact(const Instance& instance) { return enumerate(instance, false); }

SolveResult solve_exact_collision_free(const Instance& instance) {
  return enumerate(instance, true);
}

}  // namespace mcrpc
