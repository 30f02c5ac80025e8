#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "mcrpc/errors.hpp"
#include "mcrpc/exact_solver.hpp"
#include "mcrpc/instances.hpp"
#include "mcrpc/routing_eval.hpp"
#include "oracles.hpp"

using namespace mcrpc;

namespace {

// Smallest routing (+ before -) reaching the optimum, by brute force.
Routing first_optimal(const Instance& inst, bool collision_free_only) {
  const std::size_t m = inst.size();
  auto best = oracle::optimum(inst, collision_free_only);
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << m); ++code) {
    Routing r = Routing::all(m, Side::Plus);
    for (std::size_t p = 0; p < m; ++p) {
      if ((code >> (m - 1 - p)) & 1U) r.sides[p] = Side::Minus;
    }
    if (collision_free_only && oracle::collisions(inst, r) != 0) continue;
    if (oracle::routing_value(inst, r) == best) return r;
  }
  throw std::logic_error("no optimal routing");
}

}  // namespace

TEST_CASE("fixtures") {
  auto fig2 = solve_exact(fixture("fig2"));
  CHECK(fig2.value == 3);
  CHECK(fig2.value == oracle::optimum(fixture("fig2")));
  CHECK(fig2.evaluated <= 64);

  CHECK(solve_exact(fixture("fig3")).value == 15);

  auto fig5 = fixture("fig5");
  CHECK(solve_exact(fig5).value == 5);
  CHECK(solve_exact_collision_free(fig5).value >= 6);
  CHECK(solve_exact_collision_free(fig5).value == oracle::optimum(fig5, true));
}

TEST_CASE("partition reduction") {
  // {1,2,3,4} splits evenly: value 3M/2 with M = 10.
  CHECK(solve_exact(gen_partition_reduction(PartitionSpec({1, 2, 3, 4}))).value == 15);
  // {2,2,2} does not: strictly above 3M/2 = 9.
  auto odd = solve_exact(gen_partition_reduction(PartitionSpec({2, 2, 2})));
  CHECK(odd.value > 9);
  CHECK(odd.value == oracle::optimum(gen_partition_reduction(PartitionSpec({2, 2, 2}))));
}

TEST_CASE("small cases") {
  auto empty = solve_exact(Instance(6, {}));
  CHECK(empty.value == 0);
  CHECK(empty.routing.size() == 0);

  auto single = solve_exact(Instance(6, {{2, 5, Rational(7, 2)}}));
  CHECK(single.value == Rational(7, 2));
  CHECK(single.routing == Routing::parse("+"));

  auto zero = solve_exact(Instance(6, {{2, 5, Rational(0)}, {1, 3, Rational(0)}}));
  CHECK(zero.value == 0);
  CHECK(zero.routing == Routing::parse("++"));
  CHECK(zero.witness.labels.empty());
}

TEST_CASE("size guard") {
  std::vector<Demand> many;
  for (int k = 0; k < 26; ++k) many.push_back({1, 2, Rational(1)});
  CHECK_THROWS_AS(solve_exact(Instance(4, many)), SizeLimitError);
  CHECK_THROWS_AS(solve_exact_collision_free(Instance(4, many)), SizeLimitError);
}

TEST_CASE("random instances against exhaustive enumeration") {
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    int n = 4 + static_cast<int>(seed % 9);
    auto inst = gen_random(n, 1 + seed % 7, 6, seed % 3 == 0, seed);
    auto result = solve_exact(inst);
    REQUIRE(result.value == oracle::optimum(inst));
    REQUIRE(result.routing == first_optimal(inst, false));
    REQUIRE(oracle::routing_value(inst, result.routing) == result.value);
    REQUIRE(routing_clique(inst, result.routing).weight == result.value);
    REQUIRE(result.witness.weight == result.value);

    auto free = solve_exact_collision_free(inst);
    REQUIRE(free.value == oracle::optimum(inst, true));
    REQUIRE(free.routing == first_optimal(inst, true));
    REQUIRE(collision_count(inst, free.routing) == 0);
    REQUIRE(free.value >= result.value);
  }
}

TEST_CASE("optimum is below random routings") {
  std::mt19937_64 rng(3);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto inst = gen_random(12, 10, 9, false, seed);
    auto best = solve_exact(inst).value;
    for (int k = 0; k < 100; ++k) {
      REQUIRE(best <= routing_clique(inst, oracle::routing_from_mask(inst.size(), rng())).weight);
    }
  }
  Instance one(6, {{2, 5, Rational(5)}});
  CHECK(solve_exact_collision_free(one).value == solve_exact(one).value);
}

TEST_CASE("fractional weights") {
  Instance inst(7, {{1, 4, Rational(1, 3)}, {2, 6, Rational(5, 2)}, {3, 7, Rational(3, 4)},
                    {1, 5, Rational(2)}});
  CHECK(solve_exact(inst).value == oracle::optimum(inst));
}

TEST_CASE("invariant under demand order and rotation") {
  for (std::uint64_t seed = 500; seed < 560; ++seed) {
    auto inst = gen_random(9, 6, 5, false, seed);
    auto base = solve_exact(inst).value;

    std::vector<Demand> reversed(inst.demands().rbegin(), inst.demands().rend());
    REQUIRE(solve_exact(Instance(9, reversed)).value == base);

    std::vector<Demand> rotated;
    for (const auto& d : inst.demands()) {
      int a = d.i % 9 + 1, b = d.j % 9 + 1;
      rotated.push_back({std::min(a, b), std::max(a, b), d.w});
    }
    REQUIRE(solve_exact(Instance(9, rotated)).value == base);
  }
}
