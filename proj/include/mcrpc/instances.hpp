#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mcrpc/rational.hpp"
#include "mcrpc/ring_model.hpp"

namespace mcrpc {

/// Multiset for the Partition reduction. An odd total is fixed by doubling
/// every entry, which preserves the answer.
class PartitionSpec {
 public:
  explicit PartitionSpec(std::vector<std::int64_t> values);

  const std::vector<std::int64_t>& values() const { return values_; }
  std::int64_t total() const { return total_; }
  bool doubled() const { return doubled_; }
  std::size_t size() const { return values_.size(); }

 private:
  std::vector<std::int64_t> values_;
  std::int64_t total_ = 0;
  bool doubled_ = false;
};

/// Ring of 2r + 4 nodes: poles (1,2) and (r+3, r+4) of weight M, then chords
/// (3+i, 5+i+r) carrying the multiset entries. The instance has clique
/// value 3M/2 exactly when the multiset splits into equal halves.
Instance gen_partition_reduction(const PartitionSpec& spec);

/// Reproducible random instance. Uses std::mt19937_64 seeded with `seed`
/// and reduces raw 64-bit draws by modulo:
///   origin      a = 1 + draw % n
///   destination b = 1 + draw % (n - 1), bumped by one if b >= a
///   demand      (min(a, b), max(a, b))
///   weight      1 + draw % max_weight   (skipped when uniform; weight 1)
/// Draws happen in that order per demand.
Instance gen_random(int n, std::size_t count, std::int64_t max_weight, bool uniform,
                    std::uint64_t seed);

/// Chords of the weighted instance where collision-free routings lose.
inline constexpr std::array<std::pair<int, int>, 4> kFig5Chords{{{1, 4}, {2, 3}, {5, 8}, {6, 7}}};

/// Searches the permutations of {1,2,3,4} over kFig5Chords in lexicographic
/// order for the first assignment with optimum 5 and collision-free optimum
/// of at least 6. Throws Fig5ReconstructionError if none exists.
std::array<int, 4> search_fig5_weights();

/// "fig2", "fig3" or "fig5". Throws InvalidInstanceError for other names.
Instance fixture(std::string_view name);
std::vector<std::string> fixture_names();

/// JSON document {"n": 8, "demands": [{"u": 1, "v": 5, "w": "1"}, ...]}.
/// Weights are JSON integers or exact strings ("3/2", "0.25").
Instance parse_instance(std::string_view text);
std::string format_instance(const Instance& instance);
Instance load_instance(const std::filesystem::path& path);
void save_instance(const Instance& instance, const std::filesystem::path& path);

/// A routing document: the instance fields plus "sides" (a string over + and -)
/// and an optional claimed "value". Other keys are reports and are ignored.
struct RoutingDocument {
  Routing routing;
  std::optional<Rational> value;
  std::optional<Instance> instance;  // present when the file embeds the demands
};
RoutingDocument parse_routing(std::string_view text);
RoutingDocument load_routing(const std::filesystem::path& path);

}  // namespace mcrpc
