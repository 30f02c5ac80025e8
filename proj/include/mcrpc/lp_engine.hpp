#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <vector>

#include "mcrpc/clique_engine.hpp"
#include "mcrpc/rational.hpp"
#include "mcrpc/ring_model.hpp"

namespace mcrpc {

/// A point of the clique-routing relaxation: demand p sends fraction x_p of
/// its weight along p+ and y_p = 1 - x_p along p-, and every clique of routes
/// carries at most `bound`.
struct FractionalSolution {
  std::vector<Rational> x;
  Rational bound;

  Rational y(std::size_t p) const { return Rational(1) - x[p]; }
  Rational fraction(std::size_t p, Side side) const { return side == Side::Plus ? x[p] : y(p); }
  bool is_fractional(std::size_t p) const { return sgn(x[p]) > 0 && x[p] < 1; }
};

/// A clique of the all-routes intersection graph, as route labels
/// (2p for p+, 2p+1 for p-), ascending.
struct CliqueConstraint {
  std::vector<int> routes;

  /// Left-hand side sum_{p+ in C} w_p x_p + sum_{p- in C} w_p y_p at a point.
  Rational load(const Instance& instance, const FractionalSolution& point) const;
  bool operator==(const CliqueConstraint& other) const = default;
  auto operator<=>(const CliqueConstraint& other) const = default;
};

struct LpConfig {
  std::size_t max_cuts = 10000;
  /// When set, every generated cut is written here, one per line.
  std::ostream* cut_log = nullptr;
};

/// All 2|D| routes weighted by the routed amounts w_p x_p and w_p y_p.
WeightedArcFamily<Rational> fractional_route_family(const Instance& instance,
                                                    const FractionalSolution& point);

/// The heaviest clique of routes if it exceeds point.bound, otherwise none.
std::optional<CliqueConstraint> separate(const Instance& instance,
                                         const FractionalSolution& point);

struct Relaxation {
  Rational optimum;  // OPT_f
  FractionalSolution point;
  std::vector<CliqueConstraint> cuts;  // initial arc cliques first, then separated ones
  std::size_t separated = 0;           // cuts added by separation
};

/// Solves the LP relaxation by cutting planes. Starts from the arc-load
/// cliques and adds the separated clique until none is violated.
/// Throws IterationLimitError past config.max_cuts separated cuts.
Relaxation solve_relaxation(const Instance& instance, const LpConfig& config = {});

/// Moves routed weight between fractional parallel pairs until the
/// fractional demands pairwise cross. The heaviest clique never grows.
FractionalSolution normalize_parallel(const Instance& instance, FractionalSolution point);

/// Plus when y_p <= x_p. Throws Error if two fractional demands are parallel.
Routing round_crossing(const Instance& instance, const FractionalSolution& point);

struct LpResult {
  Rational fractional_optimum;  // OPT_f
  FractionalSolution relaxed;   // point returned by the relaxation
  FractionalSolution normalized;
  std::vector<std::size_t> crossing_support;  // Q: fractional demands after normalization
  Rational crossing_weight;                   // w(Q)
  Routing routing;
  Rational value;  // clique value of the rounded routing
  CliqueWitness<Rational> witness;
  Rational certified_bound;  // OPT_f + w(Q) / 2
  bool bound_holds = false;
  std::size_t cuts = 0;
};

/// Relaxation, parallel re-routing and threshold rounding; the rounded value
/// is at most OPT_f + w(Q)/2, hence at most 3/2 of the optimum.
LpResult solve_lp32(const Instance& instance, const LpConfig& config = {});

}  // namespace mcrpc
