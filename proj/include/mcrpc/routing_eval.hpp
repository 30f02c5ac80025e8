#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mcrpc/clique_engine.hpp"
#include "mcrpc/detail/clique_search.hpp"
#include "mcrpc/rational.hpp"
#include "mcrpc/ring_model.hpp"

namespace mcrpc {

/// H_R as an arc family: the chosen route of every demand, labelled by demand index.
WeightedArcFamily<Rational> routing_family(const Instance& instance, const Routing& routing);

/// omega(H_R, w) with its canonical witness (labels are demand indices).
CliqueWitness<Rational> routing_clique(const Instance& instance, const Routing& routing);

/// Label of route (demand, side) inside the all-routes family H.
inline int route_label(std::size_t demand, Side side) {
  return static_cast<int>(2 * demand + (side == Side::Minus ? 1 : 0));
}
inline std::size_t label_demand(int label) { return static_cast<std::size_t>(label / 2); }
inline Side label_side(int label) { return label % 2 == 0 ? Side::Plus : Side::Minus; }

/// Integer weights proportional to the instance weights, when they fit in
/// 62 bits: weight_k = scaled[k] * unit.
struct ScaledWeights {
  std::vector<std::int64_t> scaled;
  Rational unit;
};
std::optional<ScaledWeights> integer_weights(const Instance& instance);

/// Repeated clique evaluation of routings of one instance. Route geometry is
/// computed once; each call only assembles the chosen routes' adjacency.
template <class W>
class RoutingEvaluator {
 public:
  RoutingEvaluator(const Instance& instance, std::vector<W> weights)
      : instance_(instance),
        weights_(std::move(weights)),
        route_share_(2 * instance.size()),
        collide_(4 * instance.size() * instance.size(), false) {
    const std::size_t m = instance.size();
    std::vector<ArcSet> arcs;
    for (std::size_t d = 0; d < m; ++d) {
      const auto& dem = instance.demand(d);
      plus_range_.push_back({dem.i, dem.j});
      arcs.push_back(route_arcs(instance, d, Side::Plus));
      arcs.push_back(route_arcs(instance, d, Side::Minus));
    }
    for (std::size_t a = 0; a < 2 * m; ++a) {
      for (std::size_t b = a + 1; b < 2 * m; ++b) {
        if (arcs[a].intersects(arcs[b])) route_share_.connect(a, b);
      }
    }
    for (std::size_t p = 0; p < m; ++p) {
      for (std::size_t q = p + 1; q < m; ++q) {
        if (crosses(instance, p, q)) continue;
        for (auto sp : {Side::Plus, Side::Minus}) {
          for (auto sq : {Side::Plus, Side::Minus}) {
            if (collides(instance, p, sp, q, sq)) {
              std::size_t a = 2 * p + (sp == Side::Minus), b = 2 * q + (sq == Side::Minus);
              collide_[a * 2 * m + b] = collide_[b * 2 * m + a] = true;
            }
          }
        }
      }
    }
  }

  const std::vector<W>& weights() const { return weights_; }

  /// Clique value of the routing. With stop_at the search may return early
  /// with any value >= stop_at once the routing is known to reach it.
  W value(const Routing& routing, std::optional<W> stop_at = std::nullopt) {
    const std::size_t m = instance_.size();
    const int n = instance_.ring_size();

    // Heaviest arc load via a difference array over arcs 1..n.
    load_.assign(static_cast<std::size_t>(n) + 2, W{0});
    for (std::size_t d = 0; d < m; ++d) {
      auto [i, j] = plus_range_[d];
      if (routing[d] == Side::Plus) {
        load_[i] += weights_[d];
        load_[j] -= weights_[d];
      } else {
        load_[1] += weights_[d];
        load_[i] -= weights_[d];
        load_[j] += weights_[d];
      }
    }
    W helly{0}, running{0};
    for (int arc = 1; arc <= n; ++arc) {
      running += load_[arc];
      if (helly < running) helly = running;
    }
    if (stop_at && !(helly < *stop_at)) return helly;

    chosen_.clear();
    positive_weights_.clear();
    for (std::size_t d = 0; d < m; ++d) {
      if (W{0} < weights_[d]) {
        chosen_.push_back(2 * d + (routing[d] == Side::Minus ? 1 : 0));
        positive_weights_.push_back(weights_[d]);
      }
    }
    detail::BitMatrix adjacency(chosen_.size());
    for (std::size_t a = 0; a < chosen_.size(); ++a) {
      for (std::size_t b = a + 1; b < chosen_.size(); ++b) {
        if (route_share_.adjacent(chosen_[a], chosen_[b])) adjacency.connect(a, b);
      }
    }
    detail::CliqueSearch<W> search(positive_weights_, adjacency, helly, stop_at);
    return search.run().weight;
  }

  bool collision_free(const Routing& routing) const {
    const std::size_t m = instance_.size();
    for (std::size_t p = 0; p < m; ++p) {
      std::size_t a = 2 * p + (routing[p] == Side::Minus);
      for (std::size_t q = p + 1; q < m; ++q) {
        std::size_t b = 2 * q + (routing[q] == Side::Minus);
        if (collide_[a * 2 * m + b]) return false;
      }
    }
    return true;
  }

 private:
  const Instance& instance_;
  std::vector<W> weights_;
  std::vector<std::pair<int, int>> plus_range_;
  detail::BitMatrix route_share_;
  std::vector<bool> collide_;
  std::vector<W> load_;
  std::vector<std::size_t> chosen_;
  std::vector<W> positive_weights_;
};

/// Runs fn(evaluator, unit) with integer weights when the instance allows it,
/// otherwise with exact rational weights and unit 1. Values returned by the
/// evaluator times unit are instance weights.
template <class Fn>
decltype(auto) with_evaluator(const Instance& instance, Fn&& fn) {
  if (auto scaled = integer_weights(instance)) {
    RoutingEvaluator<std::int64_t> evaluator(instance, std::move(scaled->scaled));
    return fn(evaluator, scaled->unit);
  }
  std::vector<Rational> weights;
  for (const auto& d : instance.demands()) weights.push_back(d.w);
  RoutingEvaluator<Rational> evaluator(instance, std::move(weights));
  return fn(evaluator, Rational(1));
}

}  // namespace mcrpc
