// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "mcrpc/approx2.hpp"
#include "mcrpc/clique_engine.hpp"
#include "mcrpc/exact_solver.hpp"
#include "mcrpc/fpt_solver.hpp"
#include "mcrpc/instances.hpp"
#include "mcrpc/lp_engine.hpp"
#include "mcrpc/routing_eval.hpp"
#include "oracles.hpp"

using namespace mcrpc;

namespace {

struct Verdict {
  bool pass = false;
  std::string detail;
};

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
};

std::string fmt(const char* format, auto... args) {
  char buffer[512];
  std::snprintf(buffer, sizeof buffer, format, args...);
  return buffer;
}

// Parameters for batch instance t: n in [4, 16], |D| in [1, max_demands].
Instance batch_instance(std::uint64_t t, std::size_t max_demands, bool uniform) {
  std::mt19937_64 pick(1000003 * t + 17);
  int n = 4 + static_cast<int>(pick() % 13);
  std::size_t m = 1 + pick() % max_demands;
  return gen_random(n, m, 10, uniform, t);
}

Verdict fig2_caption() {
  Timer timer;
  auto fig2 = fixture("fig2");
  // [5,1], [3,2], [6,3], [4,5], [4,8], [8,6] in the instance's demand order.
  auto routing = Routing::parse("---++-");
  auto value = routing_clique(fig2, routing).weight;
  auto load = max_arc_load(routing_family(fig2, routing));
  double s = timer.seconds();
  return {value == 4 && s < 1.0,
          "clique weight " + to_string(value) + " (expected 4), max arc load " + to_string(load) +
              fmt(", %.3f s", s)};
}

Verdict reduction() {
  Timer a;
  auto even = solve_exact(gen_partition_reduction(PartitionSpec({1, 2, 3, 4}))).value;
  double sa = a.seconds();
  Timer b;
  auto odd = solve_exact(gen_partition_reduction(PartitionSpec({2, 2, 2}))).value;
  double sb = b.seconds();
  return {even == 15 && odd > 9 && sa < 10 && sb < 10,
          "{1,2,3,4} -> " + to_string(even) + fmt(" (%.3f s)", sa) + ", {2,2,2} -> " +
              to_string(odd) + fmt(" (%.3f s)", sb)};
}

struct BatchOutcome {
  std::size_t instances = 0;
  std::size_t approx_violations = 0;
  std::size_t lp_ratio_violations = 0;
  std::size_t lp_bound_violations = 0;
  std::size_t relaxation_violations = 0;
  Rational worst_approx = 0;
  Rational worst_lp = 0;
  double approx_seconds = 0;
  double lp_seconds = 0;
};

BatchOutcome weighted_batch() {
  BatchOutcome out;
  for (std::uint64_t t = 0; t < 200; ++t) {
    auto inst = batch_instance(t, 10, false);
    auto exact = solve_exact(inst).value;
    ++out.instances;

    Timer a;
    auto approx = solve_approx2(inst).value;
    out.approx_seconds += a.seconds();
    if (approx > 2 * exact) ++out.approx_violations;
    if (sgn(exact) > 0) out.worst_approx = std::max(out.worst_approx, Rational(approx / exact));

    Timer l;
    auto lp = solve_lp32(inst);
    out.lp_seconds += l.seconds();
    if (2 * lp.value > 3 * exact) ++out.lp_ratio_violations;
    if (lp.value > lp.fractional_optimum + lp.crossing_weight / 2) ++out.lp_bound_violations;
    if (lp.fractional_optimum > exact) ++out.relaxation_violations;
    if (sgn(exact) > 0) out.worst_lp = std::max(out.worst_lp, Rational(lp.value / exact));
  }
  return out;
}

Verdict crossing_triple() {
  Instance triple(6, {{1, 4, Rational(1)}, {2, 5, Rational(1)}, {3, 6, Rational(1)}});
  auto full = oracle::full_enumeration_lp(triple);
  auto cutting = solve_relaxation(triple).optimum;
  auto exact = solve_exact(triple).value;
  return {full == Rational(3, 2) && exact == 3 && cutting == full,
          "full-enumeration OPT_f " + to_string(full) + ", cutting-plane OPT_f " +
              to_string(cutting) + ", exact " + to_string(exact)};
}

Verdict collision_free_uniform() {
  std::size_t violations = 0, instances = 0;
  for (std::uint64_t t = 0; t < 200; ++t) {
    auto inst = batch_instance(5000 + t, 10, true);
    ++instances;
    if (solve_exact_collision_free(inst).value != solve_exact(inst).value) ++violations;
  }
  return {violations == 0, fmt("%zu uniform instances, %zu violations", instances, violations)};
}

Verdict fig5_search() {
  Timer timer;
  auto weights = search_fig5_weights();
  double s = timer.seconds();
  auto inst = fixture("fig5");
  auto opt = solve_exact(inst).value;
  auto free = solve_exact_collision_free(inst).value;
  bool agrees = oracle::optimum(inst) == opt && oracle::optimum(inst, true) == free;
  return {opt == 5 && free >= 6 && agrees && s < 1.0,
          fmt("weights (%d,%d,%d,%d) on chords (1,4),(2,3),(5,8),(6,7); optimum ", weights[0],
              weights[1], weights[2], weights[3]) +
              to_string(opt) + ", collision-free optimum " + to_string(free) +
              fmt(", search %.3f s", s)};
}

Verdict fpt_uniform() {
  std::size_t value_violations = 0, work_violations = 0, instances = 0;
  for (std::uint64_t t = 0; t < 200; ++t) {
    auto inst = batch_instance(9000 + t, 12, true);
    ++instances;
    auto fpt = solve_fpt(inst);
    if (fpt.value != solve_exact(inst).value) ++value_violations;
    if (fpt.evaluated > inst.size() * (std::uint64_t{1} << parameter_k(inst))) ++work_violations;
  }
  auto k = parameter_k(fixture("fig2"));
  return {value_violations == 0 && work_violations == 0 && k == 3,
          fmt("%zu instances, %zu value and %zu work-bound violations; fig2 k = %zu", instances,
              value_violations, work_violations, k)};
}

ArcSet arc_path(int n, int from, int to) {
  ArcSet arcs(n);
  for (int node = from; node != to; node = node % n + 1) arcs.insert(node);
  return arcs;
}

// Three arcs that pairwise overlap but jointly cover the ring.
bool has_non_helly_triple(const WeightedArcFamily<Rational>& family) {
  const auto& m = family.members();
  for (std::size_t a = 0; a < m.size(); ++a) {
    for (std::size_t b = a + 1; b < m.size(); ++b) {
      if (!m[a].arcs.intersects(m[b].arcs)) continue;
      for (std::size_t c = b + 1; c < m.size(); ++c) {
        if (m[a].arcs.intersects(m[c].arcs) && m[b].arcs.intersects(m[c].arcs) &&
            (m[a].arcs & m[b].arcs & m[c].arcs).empty()) {
          return true;
        }
      }
    }
  }
  return false;
}

Verdict clique_oracle() {
  WeightedArcFamily<Rational> example(8);
  example.add(arc_path(8, 1, 5), 1, 0);
  example.add(arc_path(8, 4, 8), 1, 1);
  example.add(arc_path(8, 7, 2), 1, 2);
  bool example_ok = max_weight_clique(example).weight == 3 && max_arc_load(example) == 2;

  std::mt19937_64 rng(424242);
  std::size_t families = 0, mismatches = 0, non_helly = 0, non_helly_optimum = 0;
  for (int trial = 0; trial < 500; ++trial) {
    int n = 4 + static_cast<int>(rng() % 13);
    std::size_t size = 1 + rng() % 18;
    WeightedArcFamily<Rational> family(n);
    int label = 0;
    if (trial % 3 == 0 && size >= 3) {
      // Plant three arcs splitting the ring into overlapping thirds.
      int a = 1 + static_cast<int>(rng() % n);
      int third = std::max(1, n / 3);
      for (int k = 0; k < 3; ++k) {
        int from = (a - 1 + k * third) % n + 1;
        int to = (from - 1 + third + 1) % n + 1;
        if (k == 2) to = (a - 1 + 1) % n + 1;
        family.add(arc_path(n, from, to), make_rational(1 + rng() % 9, 1 + rng() % 2), label++);
      }
    }
    while (family.members().size() < size) {
      int from = 1 + static_cast<int>(rng() % n);
      int to = (from - 1 + 1 + static_cast<int>(rng() % (n - 1))) % n + 1;
      family.add(arc_path(n, from, to), make_rational(rng() % 10, 1 + rng() % 3), label++);
    }
    ++families;
    auto fast = max_weight_clique(family);
    auto slow = brute_force_max_clique(family);
    if (fast.weight != slow.weight) ++mismatches;
    if (has_non_helly_triple(family)) ++non_helly;
    if (fast.weight > max_arc_load(family)) ++non_helly_optimum;
  }
  return {example_ok && mismatches == 0 && families >= 500 && non_helly >= 50,
          fmt("%zu families, %zu mismatches, %zu with a non-Helly clique, %zu whose optimum "
              "beats every arc load; {[1,5],[4,8],[7,2]} ",
              families, mismatches, non_helly, non_helly_optimum) +
              (example_ok ? "-> 3" : "wrong")};
}

struct Prop5Instance {
  Instance instance;
  bool pairwise_crossing_sides = false;
};

// D = D(p) u {p} with p = demand 0 and at least as many canonical routes
// inside p+ as inside p-.
Prop5Instance prop5_instance(std::mt19937_64& rng) {
  for (;;) {
    int n = 6 + static_cast<int>(rng() % 9);
    int i = 1 + static_cast<int>(rng() % (n - 3));
    int j = i + 2 + static_cast<int>(rng() % (n - i - 1));
    std::vector<int> plus_nodes, minus_nodes;
    for (int v = i; v <= j; ++v) plus_nodes.push_back(v);
    for (int v = j; v != i; v = v % n + 1) minus_nodes.push_back(v);
    minus_nodes.push_back(i);

    std::vector<Demand> demands{{i, j, Rational(1)}};
    std::size_t others = 1 + rng() % 8;
    std::size_t attempts = 0;
    while (demands.size() < others + 1 && attempts++ < 200) {
      const auto& side = rng() % 2 ? plus_nodes : minus_nodes;
      int a = side[rng() % side.size()], b = side[rng() % side.size()];
      if (a == b) continue;
      Demand d{std::min(a, b), std::max(a, b), Rational(1)};
      if (d.same_ends(demands[0])) continue;
      demands.push_back(d);
    }
    Instance inst(n, demands);
    auto profile = parallel_profile(inst, 0);
    if (profile.parallel.size() + 1 != inst.size()) continue;
    if (profile.count_plus < profile.count_minus) continue;

    // Each side's demands pairwise cross.
    bool crossing_sides = true;
    for (std::size_t a = 0; a < profile.parallel.size(); ++a) {
      for (std::size_t b = a + 1; b < profile.parallel.size(); ++b) {
        auto pa = profile.parallel[a], pb = profile.parallel[b];
        bool same_side = route_arcs(inst, pa, profile.canonical[a])
                             .is_subset_of(route_arcs(inst, 0, Side::Plus)) ==
                         route_arcs(inst, pb, profile.canonical[b])
                             .is_subset_of(route_arcs(inst, 0, Side::Plus));
        if (same_side && !crosses(inst, pa, pb)) crossing_sides = false;
      }
    }
    return {inst, crossing_sides};
  }
}

Verdict prop5(std::string& info) {
  std::mt19937_64 rng(55);
  std::size_t instances = 0, violations = 0, collided = 0;
  std::size_t sub_instances = 0, sub_violations = 0;
  std::string first;
  for (int t = 0; t < 150; ++t) {
    auto [inst, crossing_sides] = prop5_instance(rng);
    auto profile = parallel_profile(inst, 0);
    Routing routing = Routing::all(inst.size(), Side::Plus);
    routing.sides[0] = Side::Minus;
    for (std::size_t k = 0; k < profile.parallel.size(); ++k) {
      routing.sides[profile.parallel[k]] = profile.canonical[k];
    }
    auto value = routing_clique(inst, routing).weight;
    auto exact = solve_exact(inst).value;
    Rational formula(static_cast<long>(std::max(profile.count_plus, profile.count_minus + 1)));
    bool free = collision_count(inst, routing) == 0;
    bool ok = free && value == exact && value == formula;
    ++instances;
    if (!free) ++collided;
    if (!ok) {
      ++violations;
      if (first.empty()) {
        std::ostringstream s;
        s << "n=" << inst.ring_size() << " D=";
        for (const auto& d : inst.demands()) s << '(' << d.i << ',' << d.j << ')';
        s << " routing value " << to_string(value) << ", exact " << to_string(exact)
          << ", max(c+, c-+1) = " << to_string(formula);
        first = s.str();
      }
    }
    if (crossing_sides) {
      ++sub_instances;
      if (!ok) ++sub_violations;
    }
  }
  info = fmt("pairwise-crossing sides subclass: %zu instances, %zu violations", sub_instances,
             sub_violations);
  return {violations == 0,
          fmt("%zu instances, %zu violations (%zu with collisions)", instances, violations,
              collided) +
              (first.empty() ? "" : "; first: " + first)};
}

}  // namespace

int main() {
  int failed = 0;
  auto report = [&](int number, const char* title, const std::function<Verdict()>& check) {
    Timer timer;
    Verdict v;
    try {
      v = check();
    } catch (const std::exception& e) {
      v = {false, std::string("threw: ") + e.what()};
    }
    if (!v.pass) ++failed;
    std::cout << "criterion " << number << ": " << (v.pass ? "PASS" : "FAIL") << "  " << title
              << " -- " << v.detail << fmt(" [%.2f s]", timer.seconds()) << std::endl;
  };

  report(1, "eight-node example routing has clique weight 4", fig2_caption);
  report(2, "partition reduction soundness", reduction);

  BatchOutcome batch;
  double batch_seconds = 0;
  {
    Timer timer;
    batch = weighted_batch();
    batch_seconds = timer.seconds();
  }
  report(3, "2-approximation on 200 weighted instances", [&] {
    return Verdict{batch.instances >= 200 && batch.approx_violations == 0 && batch_seconds < 300,
                   fmt("%zu instances, %zu violations, worst ratio ", batch.instances,
                       batch.approx_violations) +
                       to_string(batch.worst_approx) +
                       fmt(", approx2 %.3f s, batch %.2f s", batch.approx_seconds, batch_seconds)};
  });
  report(4, "3/2 LP rounding on the same batch", [&] {
    bool ok = batch.lp_ratio_violations == 0 && batch.lp_bound_violations == 0 &&
              batch.relaxation_violations == 0 && batch_seconds < 900;
    return Verdict{ok, fmt("ratio violations %zu, certificate violations %zu, OPT_f > OPT %zu, "
                           "worst ratio ",
                           batch.lp_ratio_violations, batch.lp_bound_violations,
                           batch.relaxation_violations) +
                           to_string(batch.worst_lp) + fmt(", lp32 %.2f s", batch.lp_seconds)};
  });
  report(5, "crossing-triple integrality gap", crossing_triple);
  report(6, "collision-free optimum under uniform weights", collision_free_uniform);
  report(7, "weighted collision-free gap on fig5", fig5_search);
  report(8, "FPT value and work bound", fpt_uniform);
  report(9, "clique engine vs brute force", clique_oracle);
  std::string info;
  report(10, "anchor routing formula max(c+, c-+1)", [&] { return prop5(info); });
  std::cout << "info: criterion 10 " << info << std::endl;

  std::cout << (failed == 0 ? "all criteria passed" : fmt("%d criteria failed", failed))
            << std::endl;
  return failed == 0 ? 0 : 1;
}
