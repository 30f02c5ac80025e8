#include "mcrpc/lp_engine.hpp"

#include <set>
#include <string>

#include "mcrpc/errors.hpp"
#include "mcrpc/rational_simplex.hpp"
#include "mcrpc/routing_eval.hpp"

namespace mcrpc {

Rational CliqueConstraint::load(const Instance& instance, const FractionalSolution& point) const {
  Rational total = 0;
  for (int label : routes) {
    auto p = label_demand(label);
    total += instance.demand(p).w * point.fraction(p, label_side(label));
  }
  return total;
}

WeightedArcFamily<Rational> fractional_route_family(const Instance& instance,
                                                    const FractionalSolution& point) {
  if (point.x.size() != instance.size()) {
    throw InvalidInstanceError("fractional point has " + std::to_string(point.x.size()) +
                               " entries for " + std::to_string(instance.size()) + " demands");
  }
  WeightedArcFamily<Rational> family(instance.ring_size());
  for (std::size_t p = 0; p < instance.size(); ++p) {
    const auto& w = instance.demand(p).w;
    for (auto side : {Side::Plus, Side::Minus}) {
      family.add(route_arcs(instance, p, side), w * point.fraction(p, side),
                 route_label(p, side));
    }
  }
  return family;
}

std::optional<CliqueConstraint> separate(const Instance& instance,
                                         const FractionalSolution& point) {
  auto heaviest = max_weight_clique(fractional_route_family(instance, point));
  if (heaviest.weight > point.bound) return CliqueConstraint{heaviest.labels};
  return std::nullopt;
}

namespace {

std::ostream& print_cut(std::ostream& os, const CliqueConstraint& cut) {
  os << '{';
  for (std::size_t k = 0; k < cut.routes.size(); ++k) {
    if (k) os << ' ';
    os << label_demand(cut.routes[k]) << side_char(label_side(cut.routes[k]));
  }
  return os << '}';
}

// Rows in the variables (x_0 .. x_{m-1}, u) with K = W - u, where W is the
// total weight. The all-minus point x = 0, u = 0 satisfies every row.
class CutRows {
 public:
  CutRows(const Instance& instance, RationalSimplex& simplex)
      : instance_(instance), simplex_(simplex), total_(instance.total_weight()) {}

  const Rational& total() const { return total_; }

  bool add(const CliqueConstraint& cut) {
    if (!known_.insert(cut).second) return false;
    const std::size_t m = instance_.size();
    std::vector<Rational> coefficients(m + 1, Rational(0));
    Rational minus_weight = 0;
    for (int label : cut.routes) {
      auto p = label_demand(label);
      const auto& w = instance_.demand(p).w;
      if (label_side(label) == Side::Plus) {
        coefficients[p] += w;
      } else {
        coefficients[p] -= w;
        minus_weight += w;
      }
    }
    coefficients[m] = 1;
    simplex_.add_row(coefficients, total_ - minus_weight);
    return true;
  }

 private:
  const Instance& instance_;
  RationalSimplex& simplex_;
  Rational total_;
  std::set<CliqueConstraint> known_;
};

}  // namespace

Relaxation solve_relaxation(const Instance& instance, const LpConfig& config) {
  const std::size_t m = instance.size();
  Relaxation result;
  result.point.bound = 0;
  if (m == 0) return result;

  std::vector<Rational> objective(m + 1, Rational(0));
  objective[m] = 1;
  RationalSimplex simplex(objective);
  CutRows rows(instance, simplex);

  for (std::size_t p = 0; p < m; ++p) {
    std::vector<Rational> unit(m + 1, Rational(0));
    unit[p] = 1;
    simplex.add_row(unit, Rational(1));
  }
  {
    std::vector<Rational> cap(m + 1, Rational(0));
    cap[m] = 1;
    simplex.add_row(cap, rows.total());
  }

  // Routes through a common arc form a clique; one row per distinct arc set.
  for (int arc = 1; arc <= instance.ring_size(); ++arc) {
    CliqueConstraint cut;
    for (std::size_t p = 0; p < m; ++p) {
      const auto& d = instance.demand(p);
      if (sgn(d.w) == 0) continue;
      bool on_plus = d.i <= arc && arc < d.j;
      cut.routes.push_back(route_label(p, on_plus ? Side::Plus : Side::Minus));
    }
    if (cut.routes.empty()) continue;
    if (rows.add(cut)) result.cuts.push_back(cut);
  }

  for (;;) {
    simplex.solve();
    auto values = simplex.solution();
    result.point.x.assign(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(m));
    result.point.bound = rows.total() - values[m];

    auto violated = separate(instance, result.point);
    if (!violated) break;
    if (result.separated >= config.max_cuts) {
      throw IterationLimitError("cutting planes exceeded " + std::to_string(config.max_cuts) +
                                " separated cuts");
    }
    if (config.cut_log) {
      print_cut(*config.cut_log << "cut " << result.separated + 1 << ' ', *violated)
          << " load " << to_string(violated->load(instance, result.point)) << " > "
          << to_string(result.point.bound) << '\n';
    }
    if (!rows.add(*violated)) {
      throw Error("internal: separation returned a cut that is already in the model");
    }
    result.cuts.push_back(*violated);
    ++result.separated;
  }
  result.optimum = result.point.bound;
  return result;
}

namespace {

struct Transfer {
  std::size_t inner_demand;  // its route `inner_side` lies inside ...
  Side inner_side;
  std::size_t outer_demand;  // ... this demand's route `outer_side`
  Side outer_side;
};

std::optional<Transfer> nested_routes(const Instance& instance, std::size_t p, std::size_t q) {
  for (auto [a, b] : {std::pair{p, q}, std::pair{q, p}}) {
    for (auto sa : {Side::Plus, Side::Minus}) {
      auto inner = route_arcs(instance, a, sa);
      for (auto sb : {Side::Plus, Side::Minus}) {
        if (inner.is_subset_of(route_arcs(instance, b, sb))) return Transfer{a, sa, b, sb};
      }
    }
  }
  return std::nullopt;
}

void set_fraction(FractionalSolution& point, std::size_t p, Side side, const Rational& value) {
  point.x[p] = side == Side::Plus ? value : Rational(1 - value);
}

}  // namespace

FractionalSolution normalize_parallel(const Instance& instance, FractionalSolution point) {
  const std::size_t m = instance.size();
  if (point.x.size() != m) {
    throw InvalidInstanceError("fractional point does not match the instance");
  }
  // Weightless demands carry nothing; settle them on Plus.
  for (std::size_t p = 0; p < m; ++p) {
    if (sgn(instance.demand(p).w) == 0 && point.is_fractional(p)) point.x[p] = 1;
  }

  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t p = 0; p < m && !changed; ++p) {
      if (!point.is_fractional(p)) continue;
      for (std::size_t q = p + 1; q < m && !changed; ++q) {
        if (!point.is_fractional(q) || crosses(instance, p, q)) continue;
        auto t = nested_routes(instance, p, q);
        if (!t) throw Error("internal: parallel demands without nested routes");

        // Shift weight onto the inner route and off the outer one, by as
        // much as both can give; at least one demand becomes integral.
        const auto& wa = instance.demand(t->inner_demand).w;
        const auto& wb = instance.demand(t->outer_demand).w;
        Rational leaving_inner = wa * point.fraction(t->inner_demand, opposite(t->inner_side));
        Rational on_outer = wb * point.fraction(t->outer_demand, t->outer_side);
        Rational amount = leaving_inner < on_outer ? leaving_inner : on_outer;

        set_fraction(point, t->inner_demand, t->inner_side,
                     point.fraction(t->inner_demand, t->inner_side) + amount / wa);
        set_fraction(point, t->outer_demand, t->outer_side,
                     point.fraction(t->outer_demand, t->outer_side) - amount / wb);
        changed = true;
      }
    }
  }
  return point;
}

Routing round_crossing(const Instance& instance, const FractionalSolution& point) {
  const std::size_t m = instance.size();
  if (point.x.size() != m) {
    throw InvalidInstanceError("fractional point does not match the instance");
  }
  for (std::size_t p = 0; p < m; ++p) {
    if (!point.is_fractional(p)) continue;
    for (std::size_t q = p + 1; q < m; ++q) {
      if (point.is_fractional(q) && !crosses(instance, p, q)) {
        throw Error("fractional demands " + std::to_string(p) + " and " + std::to_string(q) +
                    " are parallel; normalize the point before rounding");
      }
    }
  }
  Routing routing;
  for (std::size_t p = 0; p < m; ++p) {
    routing.sides.push_back(point.y(p) <= point.x[p] ? Side::Plus : Side::Minus);
  }
  return routing;
}

LpResult solve_lp32(const Instance& instance, const LpConfig& config) {
  LpResult result;
  auto relaxation = solve_relaxation(instance, config);
  result.fractional_optimum = relaxation.optimum;
  result.relaxed = relaxation.point;
  result.cuts = relaxation.cuts.size();
  result.normalized = normalize_parallel(instance, relaxation.point);

  result.crossing_weight = 0;
  for (std::size_t p = 0; p < instance.size(); ++p) {
    if (result.normalized.is_fractional(p)) {
      result.crossing_support.push_back(p);
      result.crossing_weight += instance.demand(p).w;
    }
  }
  result.routing = round_crossing(instance, result.normalized);
  result.witness = routing_clique(instance, result.routing);
  result.value = result.witness.weight;
  result.certified_bound = result.fractional_optimum + result.crossing_weight / 2;
  result.bound_holds = result.value <= result.certified_bound;
  return result;
}

}  // namespace mcrpc
