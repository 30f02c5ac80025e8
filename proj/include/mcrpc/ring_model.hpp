#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mcrpc/arc_set.hpp"
#include "mcrpc/rational.hpp"

namespace mcrpc {

/// Which way round the ring a demand travels. Minus routes use arc (n,1).
enum class Side : unsigned char { Plus, Minus };

inline Side opposite(Side s) { return s == Side::Plus ? Side::Minus : Side::Plus; }
inline char side_char(Side s) { return s == Side::Plus ? '+' : '-'; }

/// Origin-destination pair (i, j) with 1 <= i < j <= n.
struct Demand {
  int i = 0;
  int j = 0;
  Rational w;

  bool same_ends(const Demand& other) const { return i == other.i && j == other.j; }
  bool operator==(const Demand& other) const {
    return i == other.i && j == other.j && w == other.w;
  }
};

/// Ring of n >= 3 nodes plus an ordered list of weighted demands. The list
/// order is the demand index used by every routing and report.
class Instance {
 public:
  Instance() = default;
  Instance(int ring_size, std::vector<Demand> demands);

  int ring_size() const { return ring_size_; }
  std::size_t size() const { return demands_.size(); }
  bool empty() const { return demands_.empty(); }
  std::span<const Demand> demands() const { return demands_; }
  const Demand& demand(std::size_t index) const;

  Rational total_weight() const;
  bool has_uniform_weights() const;

  bool operator==(const Instance& other) const = default;

 private:
  int ring_size_ = 0;
  std::vector<Demand> demands_;
};

/// One side per demand, aligned with the instance's demand order.
struct Routing {
  std::vector<Side> sides;

  std::size_t size() const { return sides.size(); }
  Side operator[](std::size_t k) const { return sides[k]; }

  static Routing all(std::size_t count, Side side) { return {std::vector<Side>(count, side)}; }
  /// Parses a string over {'+', '-'}.
  static Routing parse(std::string_view text);
  std::string str() const;

  bool operator==(const Routing& other) const = default;
  bool operator<(const Routing& other) const { return sides < other.sides; }
};

struct Route {
  std::size_t demand = 0;
  Side side = Side::Plus;
  ArcSet arcs;
};

ArcSet route_arcs(const Instance& instance, std::size_t demand_index, Side side);
Route make_route(const Instance& instance, std::size_t demand_index, Side side);

/// Whether node lies on the path p+ = [i, j] or p- = [j, i].
bool route_has_node(const Demand& demand, int ring_size, Side side, int node);

/// Number of nodes on the chosen path; |V(p+)| + |V(p-)| = n + 2.
int route_node_count(const Demand& demand, int ring_size, Side side);

bool routes_share_arc(const Route& a, const Route& b);

/// Chords of p and q intersect strictly inside the circle. Multiples never cross.
bool crosses(const Instance& instance, std::size_t p, std::size_t q);
inline bool parallel(const Instance& instance, std::size_t p, std::size_t q) {
  return !crosses(instance, p, q);
}

/// Routes of two parallel demands overlap and together cover the ring.
/// Throws CrossingPairError when p and q cross.
bool collides(const Instance& instance, std::size_t p, Side side_p, std::size_t q, Side side_q);

std::size_t collision_count(const Instance& instance, const Routing& routing);

/// Intersection graph of the chosen routes over demand indices.
class ConflictGraph {
 public:
  explicit ConflictGraph(std::size_t size = 0) : size_(size), adjacent_(size * size, false) {}

  std::size_t size() const { return size_; }
  bool adjacent(std::size_t a, std::size_t b) const { return adjacent_[a * size_ + b]; }
  void connect(std::size_t a, std::size_t b) {
    adjacent_[a * size_ + b] = true;
    adjacent_[b * size_ + a] = true;
  }
  std::size_t edge_count() const;

 private:
  std::size_t size_;
  std::vector<bool> adjacent_;
};

ConflictGraph conflict_adjacency(const Instance& instance, const Routing& routing);

/// Throws InvalidInstanceError unless the routing has one side per demand.
void check_routing(const Instance& instance, const Routing& routing);

}  // namespace mcrpc
