#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "mcrpc/arc_set.hpp"
#include "mcrpc/detail/clique_search.hpp"
#include "mcrpc/errors.hpp"

namespace mcrpc {

template <class W>
struct ArcMember {
  ArcSet arcs;
  W weight{};
  int label = 0;
};

/// Weighted circular arcs on one ring. Members are proper ring paths with
/// nonnegative weights and distinct labels.
template <class W>
class WeightedArcFamily {
 public:
  explicit WeightedArcFamily(int ring_size) : ring_size_(ring_size) {}

  int ring_size() const { return ring_size_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  const std::vector<ArcMember<W>>& members() const { return members_; }

  void add(ArcSet arcs, W weight, int label) {
    if (arcs.ring_size() != ring_size_) {
      throw InvalidInstanceError("member arcs on a ring of size " +
                                 std::to_string(arcs.ring_size()) + ", family ring is " +
                                 std::to_string(ring_size_));
    }
    if (!arcs.is_proper_path()) {
      throw InvalidInstanceError("member " + std::to_string(label) +
                                 " is not a contiguous proper ring path");
    }
    if (weight < W{0}) {
      throw InvalidInstanceError("member " + std::to_string(label) + " has negative weight");
    }
    for (const auto& m : members_) {
      if (m.label == label) {
        throw InvalidInstanceError("duplicate member label " + std::to_string(label));
      }
    }
    members_.push_back({std::move(arcs), std::move(weight), label});
  }

 private:
  int ring_size_;
  std::vector<ArcMember<W>> members_;
};

/// A set of pairwise arc-sharing members, labels ascending, with their total
/// weight. Zero-weight members are never listed.
template <class W>
struct CliqueWitness {
  std::vector<int> labels;
  W weight{};
};

/// Total weight of members whose path uses the given arc.
template <class W>
W arc_load(const WeightedArcFamily<W>& family, int arc) {
  if (arc < 1 || arc > family.ring_size()) {
    throw IndexError("arc " + std::to_string(arc) + " outside 1.." +
                     std::to_string(family.ring_size()));
  }
  W load{0};
  for (const auto& m : family.members()) {
    if (m.arcs.contains(arc)) load += m.weight;
  }
  return load;
}

/// Largest arc load; every arc's members form a clique, so this is a lower
/// bound on the clique value.
template <class W>
W max_arc_load(const WeightedArcFamily<W>& family) {
  W best{0};
  for (int arc = 1; arc <= family.ring_size(); ++arc) {
    W load = arc_load(family, arc);
    if (best < load) best = load;
  }
  return best;
}

/// Maximum-weight clique of the family's intersection graph.
///
/// The heaviest arc load gives the best clique sharing a common arc; cliques
/// with no common arc are then found by branch and bound over the positive
/// members in label order, seeded with that load as a lower bound. Among
/// optima the lexicographically smallest label set is returned.
template <class W>
CliqueWitness<W> max_weight_clique(const WeightedArcFamily<W>& family) {
  std::vector<const ArcMember<W>*> positive;
  for (const auto& m : family.members()) {
    if (W{0} < m.weight) positive.push_back(&m);
  }
  std::sort(positive.begin(), positive.end(),
            [](const auto* a, const auto* b) { return a->label < b->label; });

  detail::BitMatrix adjacency(positive.size());
  std::vector<W> weights;
  weights.reserve(positive.size());
  for (std::size_t a = 0; a < positive.size(); ++a) {
    weights.push_back(positive[a]->weight);
    for (std::size_t b = a + 1; b < positive.size(); ++b) {
      if (positive[a]->arcs.intersects(positive[b]->arcs)) adjacency.connect(a, b);
    }
  }

  detail::CliqueSearch<W> search(weights, adjacency, max_arc_load(family), std::nullopt);
  auto found = search.run();

  CliqueWitness<W> witness;
  witness.weight = found.weight;
  for (auto v : found.members) witness.labels.push_back(positive[v]->label);
  return witness;
}

inline constexpr std::size_t kBruteForceCliqueLimit = 25;

/// Exhaustive reference: walks every clique of the family explicitly, with no
/// weight-based pruning. Throws SizeLimitError above 25 members.
template <class W>
CliqueWitness<W> brute_force_max_clique(const WeightedArcFamily<W>& family) {
  if (family.size() > kBruteForceCliqueLimit) {
    throw SizeLimitError("brute-force clique search limited to " +
                         std::to_string(kBruteForceCliqueLimit) + " members, got " +
                         std::to_string(family.size()));
  }
  const auto& members = family.members();
  std::vector<std::size_t> order(members.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](auto a, auto b) { return members[a].label < members[b].label; });

  CliqueWitness<W> best;
  std::vector<std::size_t> chosen;

  auto consider = [&](W weight) {
    std::vector<int> labels;
    for (auto k : chosen) {
      if (W{0} < members[k].weight) labels.push_back(members[k].label);
    }
    if (best.weight < weight || (weight == best.weight && labels < best.labels)) {
      best.weight = weight;
      best.labels = std::move(labels);
    }
  };

  auto walk = [&](auto&& self, std::size_t pos, W weight) -> void {
    if (pos == order.size()) {
      consider(weight);
      return;
    }
    const auto& candidate = members[order[pos]];
    bool fits = std::all_of(chosen.begin(), chosen.end(), [&](std::size_t k) {
      return members[k].arcs.intersects(candidate.arcs);
    });
    if (fits) {
      chosen.push_back(order[pos]);
      self(self, pos + 1, weight + candidate.weight);
      chosen.pop_back();
    }
    self(self, pos + 1, weight);
  };
  walk(walk, 0, W{0});
  return best;
}

}  // namespace mcrpc
