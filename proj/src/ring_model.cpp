#include "mcrpc/ring_model.hpp"

#include <string>

#include "mcrpc/errors.hpp"

namespace mcrpc {

Instance::Instance(int ring_size, std::vector<Demand> demands)
    : ring_size_(ring_size), demands_(std::move(demands)) {
  if (ring_size_ < 3) {
    throw InvalidInstanceError("ring size must be at least 3, got " + std::to_string(ring_size_));
  }
  for (std::size_t k = 0; k < demands_.size(); ++k) {
    const auto& d = demands_[k];
    if (!(1 <= d.i && d.i < d.j && d.j <= ring_size_)) {
      throw InvalidInstanceError("demand " + std::to_string(k) + " = (" + std::to_string(d.i) +
                                 "," + std::to_string(d.j) + ") violates 1 <= i < j <= " +
                                 std::to_string(ring_size_));
    }
    if (d.w < 0) {
      throw InvalidInstanceError("demand " + std::to_string(k) + " has negative weight " +
                                 to_string(d.w));
    }
  }
}

const Demand& Instance::demand(std::size_t index) const {
  if (index >= demands_.size()) {
    throw IndexError("demand index " + std::to_string(index) + " out of range (size " +
                     std::to_string(demands_.size()) + ")");
  }
  return demands_[index];
}

Rational Instance::total_weight() const {
  Rational total = 0;
  for (const auto& d : demands_) total += d.w;
  return total;
}

bool Instance::has_uniform_weights() const {
  for (const auto& d : demands_) {
    if (d.w != demands_.front().w) return false;
  }
  return true;
}

Routing Routing::parse(std::string_view text) {
  Routing r;
  r.sides.reserve(text.size());
  for (char c : text) {
    if (c == '+') {
      r.sides.push_back(Side::Plus);
    } else if (c == '-') {
      r.sides.push_back(Side::Minus);
    } else {
      throw InvalidInstanceError(std::string("routing side must be '+' or '-', got '") + c + "'");
    }
  }
  return r;
}

std::string Routing::str() const {
  std::string out;
  out.reserve(sides.size());
  for (auto s : sides) out.push_back(side_char(s));
  return out;
}

ArcSet route_arcs(const Instance& instance, std::size_t demand_index, Side side) {
  const auto& d = instance.demand(demand_index);
  ArcSet plus(instance.ring_size());
  for (int arc = d.i; arc < d.j; ++arc) plus.insert(arc);
  return side == Side::Plus ? plus : plus.complement();
}

Route make_route(const Instance& instance, std::size_t demand_index, Side side) {
  return Route{demand_index, side, route_arcs(instance, demand_index, side)};
}

bool route_has_node(const Demand& demand, int ring_size, Side side, int node) {
  (void)ring_size;
  bool inside = demand.i <= node && node <= demand.j;
  bool on_end = node == demand.i || node == demand.j;
  return side == Side::Plus ? inside : (!inside || on_end);
}

int route_node_count(const Demand& demand, int ring_size, Side side) {
  int plus = demand.j - demand.i + 1;
  return side == Side::Plus ? plus : ring_size - (demand.j - demand.i) + 1;
}

bool routes_share_arc(const Route& a, const Route& b) { return a.arcs.intersects(b.arcs); }

bool crosses(const Instance& instance, std::size_t p, std::size_t q) {
  const auto& dp = instance.demand(p);
  const auto& dq = instance.demand(q);
  int n = instance.ring_size();
  auto ends_on = [&](Side side) {
    return static_cast<int>(route_has_node(dq, n, side, dp.i)) +
           static_cast<int>(route_has_node(dq, n, side, dp.j));
  };
  return ends_on(Side::Plus) == 1 && ends_on(Side::Minus) == 1;
}

bool collides(const Instance& instance, std::size_t p, Side side_p, std::size_t q, Side side_q) {
  if (crosses(instance, p, q)) {
    throw CrossingPairError("demands " + std::to_string(p) + " and " + std::to_string(q) +
                            " cross; collision is defined for parallel demands only");
  }
  if (instance.demand(p).same_ends(instance.demand(q))) return false;
  auto a = route_arcs(instance, p, side_p);
  auto b = route_arcs(instance, q, side_q);
  return (a | b).full() && a.intersects(b);
}

std::size_t collision_count(const Instance& instance, const Routing& routing) {
  check_routing(instance, routing);
  std::size_t count = 0;
  for (std::size_t p = 0; p < instance.size(); ++p) {
    for (std::size_t q = p + 1; q < instance.size(); ++q) {
      if (crosses(instance, p, q)) continue;
      if (collides(instance, p, routing[p], q, routing[q])) ++count;
    }
  }
  return count;
}

std::size_t ConflictGraph::edge_count() const {
  std::size_t count = 0;
  for (std::size_t a = 0; a < size_; ++a) {
    for (std::size_t b = a + 1; b < size_; ++b) count += adjacent(a, b) ? 1 : 0;
  }
  return count;
}

ConflictGraph conflict_adjacency(const Instance& instance, const Routing& routing) {
  check_routing(instance, routing);
  std::vector<ArcSet> arcs;
  arcs.reserve(instance.size());
  for (std::size_t k = 0; k < instance.size(); ++k) {
    arcs.push_back(route_arcs(instance, k, routing[k]));
  }
  ConflictGraph graph(instance.size());
  for (std::size_t a = 0; a < arcs.size(); ++a) {
    for (std::size_t b = a + 1; b < arcs.size(); ++b) {
      if (arcs[a].intersects(arcs[b])) graph.connect(a, b);
    }
  }
  return graph;
}

void check_routing(const Instance& instance, const Routing& routing) {
  if (routing.size() != instance.size()) {
    throw InvalidInstanceError("routing has " + std::to_string(routing.size()) +
                               " sides for " + std::to_string(instance.size()) + " demands");
  }
}

}  // namespace mcrpc
