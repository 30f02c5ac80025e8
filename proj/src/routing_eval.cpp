#include "mcrpc/routing_eval.hpp"

namespace mcrpc {

WeightedArcFamily<Rational> routing_family(const Instance& instance, const Routing& routing) {
  check_routing(instance, routing);
  WeightedArcFamily<Rational> family(instance.ring_size());
  for (std::size_t d = 0; d < instance.size(); ++d) {
    family.add(route_arcs(instance, d, routing[d]), instance.demand(d).w, static_cast<int>(d));
  }
  return family;
}

CliqueWitness<Rational> routing_clique(const Instance& instance, const Routing& routing) {
  return max_weight_clique(routing_family(instance, routing));
}

std::optional<ScaledWeights> integer_weights(const Instance& instance) {
  mpz_class common = 1;
  for (const auto& d : instance.demands()) {
    mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), d.w.get_den().get_mpz_t());
  }
  // Keep any clique sum comfortably inside int64.
  const mpz_class limit = mpz_class(1) << 62;
  ScaledWeights out;
  out.unit = Rational(mpz_class(1), common);
  mpz_class total = 0;
  for (const auto& d : instance.demands()) {
    mpz_class scaled = d.w.get_num() * (common / d.w.get_den());
    total += scaled;
    if (total >= limit) return std::nullopt;
    out.scaled.push_back(static_cast<std::int64_t>(scaled.get_si()));
  }
  return out;
}

}  // namespace mcrpc
