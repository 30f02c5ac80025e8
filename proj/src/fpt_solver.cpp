#include "mcrpc/fpt_solver.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>

#include "mcrpc/errors.hpp"
#include "mcrpc/routing_eval.hpp"

namespace mcrpc {

namespace {

bool ends_within(const Demand& q, const Demand& p, int n, Side side) {
  return route_has_node(p, n, side, q.i) && route_has_node(p, n, side, q.j);
}

}  // namespace

ParallelProfile parallel_profile(const Instance& instance, std::size_t p) {
  const auto& anchor = instance.demand(p);
  const int n = instance.ring_size();
  ParallelProfile profile;
  profile.anchor = p;
  for (std::size_t q = 0; q < instance.size(); ++q) {
    const auto& other = instance.demand(q);
    if (q == p || other.same_ends(anchor) || crosses(instance, p, q)) {
      profile.free.push_back(q);
      continue;
    }
    bool in_plus = ends_within(other, anchor, n, Side::Plus);
    bool in_minus = ends_within(other, anchor, n, Side::Minus);
    if (in_plus == in_minus) {
      throw Error("internal: demand " + std::to_string(q) + " is parallel to " +
                  std::to_string(p) + " but not on exactly one of its sides");
    }
    Side host = in_plus ? Side::Plus : Side::Minus;
    auto host_arcs = route_arcs(instance, p, host);
    std::optional<Side> inside;
    for (auto s : {Side::Plus, Side::Minus}) {
      if (route_arcs(instance, q, s).is_subset_of(host_arcs)) inside = s;
    }
    if (!inside) {
      throw Error("internal: no route of demand " + std::to_string(q) + " fits inside side " +
                  side_char(host) + " of " + std::to_string(p));
    }
    profile.parallel.push_back(q);
    profile.canonical.push_back(*inside);
    ++(host == Side::Plus ? profile.count_plus : profile.count_minus);
  }
  return profile;
}

std::size_t parameter_k(const Instance& instance) {
  if (instance.empty()) throw EmptyInstanceError("parameter k is undefined without demands");
  std::size_t k = 0;
  for (std::size_t p = 0; p < instance.size(); ++p) {
    k = std::max(k, parallel_profile(instance, p).free.size());
  }
  return k;
}

bool is_critical(const Instance& instance, const Routing& routing, std::size_t p) {
  check_routing(instance, routing);
  auto profile = parallel_profile(instance, p);
  for (std::size_t t = 0; t < profile.parallel.size(); ++t) {
    if (routing[profile.parallel[t]] != profile.canonical[t]) return false;
  }
  return true;
}

SolveResult solve_fpt(const Instance& instance) {
  if (!instance.has_uniform_weights()) {
    throw NonUniformWeightsError("the parameterized solver requires all weights equal");
  }
  SolveResult result;
  const std::size_t m = instance.size();
  if (m == 0) return result;

  std::vector<ParallelProfile> profiles;
  for (std::size_t p = 0; p < m; ++p) profiles.push_back(parallel_profile(instance, p));
  std::size_t k = 0;
  for (const auto& pr : profiles) k = std::max(k, pr.free.size());
  if (k > kFptParameterLimit) {
    throw SizeLimitError("parameter k = " + std::to_string(k) + " exceeds limit " +
                         std::to_string(kFptParameterLimit));
  }

  RoutingEvaluator<std::int64_t> evaluator(instance, std::vector<std::int64_t>(m, 1));
  std::optional<std::int64_t> best;
  Routing best_routing;
  Routing routing = Routing::all(m, Side::Plus);

  for (const auto& profile : profiles) {
    for (std::size_t t = 0; t < profile.parallel.size(); ++t) {
      routing.sides[profile.parallel[t]] = profile.canonical[t];
    }
    const std::size_t f = profile.free.size();
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << f); ++code) {
      for (std::size_t t = 0; t < f; ++t) {
        routing.sides[profile.free[t]] =
            ((code >> (f - 1 - t)) & 1U) ? Side::Minus : Side::Plus;
      }
      ++result.evaluated;
      // Unit weights: any early stop at best + 1 proves the routing is worse.
      std::optional<std::int64_t> stop;
      if (best) stop = *best + 1;
      std::int64_t value = evaluator.value(routing, stop);
      if (!best || value < *best || (value == *best && routing < best_routing)) {
        best = value;
        best_routing = routing;
      }
    }
  }

  result.routing = best_routing;
  result.witness = routing_clique(instance, best_routing);
  result.value = result.witness.weight;
  if (result.value != Rational(*best) * instance.demand(0).w) {
    throw Error("internal: parameterized search value disagrees with clique engine");
  }
  return result;
}

}  // namespace mcrpc
