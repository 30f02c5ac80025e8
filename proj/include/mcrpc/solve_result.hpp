#pragma once

#include <cstdint>

#include "mcrpc/clique_engine.hpp"
#include "mcrpc/rational.hpp"
#include "mcrpc/ring_model.hpp"

namespace mcrpc {

struct SolveResult {
  Routing routing;
  Rational value;
  CliqueWitness<Rational> witness;  // labels are demand indices
  std::uint64_t evaluated = 0;      // routings whose clique value was computed
};

}  // namespace mcrpc
