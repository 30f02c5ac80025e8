#include "mcrpc/approx2.hpp"

#include "mcrpc/routing_eval.hpp"

namespace mcrpc {

Routing shortest_side_routing(const Instance& instance) {
  Routing routing;
  routing.sides.reserve(instance.size());
  const int n = instance.ring_size();
  for (const auto& d : instance.demands()) {
    bool plus = route_node_count(d, n, Side::Plus) <= route_node_count(d, n, Side::Minus);
    routing.sides.push_back(plus ? Side::Plus : Side::Minus);
  }
  return routing;
}

SolveResult solve_approx2(const Instance& instance) {
  SolveResult result;
  result.routing = shortest_side_routing(instance);
  result.witness = routing_clique(instance, result.routing);
  result.value = result.witness.weight;
  result.evaluated = 1;
  return result;
}

}  // namespace mcrpc
