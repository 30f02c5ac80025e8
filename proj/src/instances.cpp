#include "mcrpc/instances.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "mcrpc/errors.hpp"
#include "mcrpc/exact_solver.hpp"

namespace mcrpc {

using nlohmann::json;

PartitionSpec::PartitionSpec(std::vector<std::int64_t> values) : values_(std::move(values)) {
  if (values_.empty()) throw InvalidInstanceError("partition multiset is empty");
  for (auto v : values_) {
    if (v <= 0) throw InvalidInstanceError("partition entries must be positive");
    total_ += v;
  }
  if (total_ % 2 != 0) {
    for (auto& v : values_) v *= 2;
    total_ *= 2;
    doubled_ = true;
  }
}

Instance gen_partition_reduction(const PartitionSpec& spec) {
  const int r = static_cast<int>(spec.size());
  const Rational pole_weight(spec.total());
  std::vector<Demand> demands;
  demands.push_back({1, 2, pole_weight});
  demands.push_back({r + 3, r + 4, pole_weight});
  for (int k = 0; k < r; ++k) {
    demands.push_back({3 + k, 3 + k + r + 2, Rational(spec.values()[k])});
  }
  return Instance(2 * r + 4, std::move(demands));
}

Instance gen_random(int n, std::size_t count, std::int64_t max_weight, bool uniform,
                    std::uint64_t seed) {
  if (n < 3) throw InvalidInstanceError("random instances need n >= 3");
  if (count < 1) throw InvalidInstanceError("random instances need at least one demand");
  if (max_weight < 1) throw InvalidInstanceError("max weight must be at least 1");

  std::mt19937_64 engine(seed);
  const auto nodes = static_cast<std::uint64_t>(n);
  std::vector<Demand> demands;
  demands.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    int a = 1 + static_cast<int>(engine() % nodes);
    int b = 1 + static_cast<int>(engine() % (nodes - 1));
    if (b >= a) ++b;
    Rational w = 1;
    if (!uniform) w = Rational(1 + static_cast<long>(engine() % static_cast<std::uint64_t>(max_weight)));
    demands.push_back({std::min(a, b), std::max(a, b), w});
  }
  return Instance(n, std::move(demands));
}

namespace {

Instance fig5_instance(const std::array<int, 4>& weights) {
  std::vector<Demand> demands;
  for (std::size_t k = 0; k < kFig5Chords.size(); ++k) {
    demands.push_back({kFig5Chords[k].first, kFig5Chords[k].second, Rational(weights[k])});
  }
  return Instance(8, std::move(demands));
}

// First qualifying permutation found by search_fig5_weights().
constexpr std::array<int, 4> kFig5Weights{1, 2, 3, 4};

}  // namespace

std::array<int, 4> search_fig5_weights() {
  std::array<int, 4> weights{1, 2, 3, 4};
  do {
    auto instance = fig5_instance(weights);
    if (solve_exact(instance).value == 5 && solve_exact_collision_free(instance).value >= 6) {
      return weights;
    }
  } while (std::next_permutation(weights.begin(), weights.end()));
  throw Fig5ReconstructionError(
      "no assignment of weights 1..4 to the four chords gives optimum 5 with every "
      "collision-free routing at 6 or more");
}

Instance fixture(std::string_view name) {
  if (name == "fig2") {
    std::vector<Demand> demands;
    for (auto [i, j] : {std::pair{1, 5}, {2, 3}, {3, 6}, {4, 5}, {4, 8}, {6, 8}}) {
      demands.push_back({i, j, Rational(1)});
    }
    return Instance(8, std::move(demands));
  }
  if (name == "fig3") return gen_partition_reduction(PartitionSpec({1, 2, 3, 4}));
  if (name == "fig5") return fig5_instance(kFig5Weights);
  throw InvalidInstanceError("unknown fixture '" + std::string(name) + "'");
}

std::vector<std::string> fixture_names() { return {"fig2", "fig3", "fig5"}; }

namespace {

std::string line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1, column = 1;
  for (std::size_t k = 0; k < byte && k < text.size(); ++k) {
    if (text[k] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(line_column(text, e.byte == 0 ? 0 : e.byte - 1), "malformed JSON");
  }
}

int read_int(const json& value, const std::string& where) {
  if (!value.is_number_integer()) throw ParseError(where, "expected an integer");
  auto v = value.get<std::int64_t>();
  if (v < INT32_MIN || v > INT32_MAX) throw ParseError(where, "integer out of range");
  return static_cast<int>(v);
}

Rational read_weight(const json& value, const std::string& where) {
  Rational w;
  if (value.is_number_integer()) {
    w = Rational(value.dump());
  } else if (value.is_string()) {
    try {
      w = parse_rational(value.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw ParseError(where, e.what());
    }
  } else if (value.is_number_float()) {
    throw ParseError(where, "non-integer weights must be written as strings, e.g. \"3/2\"");
  } else {
    throw ParseError(where, "expected an integer or a string weight");
  }
  if (w < 0) throw ParseError(where, "weight must be nonnegative");
  return w;
}

void reject_unknown(const json& object, std::initializer_list<std::string_view> allowed,
                    const std::string& where) {
  for (const auto& item : object.items()) {
    if (std::find(allowed.begin(), allowed.end(), item.key()) == allowed.end()) {
      throw ParseError(where.empty() ? item.key() : where + "." + item.key(), "unknown field");
    }
  }
}

Instance instance_from_json(const json& doc) {
  if (!doc.is_object()) throw ParseError("document", "expected a JSON object");
  if (!doc.contains("n")) throw ParseError("n", "missing field");
  if (!doc.contains("demands")) throw ParseError("demands", "missing field");
  const int n = read_int(doc["n"], "n");
  if (n < 3) throw ParseError("n", "ring size must be at least 3");
  const auto& list = doc["demands"];
  if (!list.is_array()) throw ParseError("demands", "expected an array");

  std::vector<Demand> demands;
  for (std::size_t k = 0; k < list.size(); ++k) {
    const std::string where = "demands[" + std::to_string(k) + "]";
    const auto& item = list[k];
    if (!item.is_object()) throw ParseError(where, "expected an object {u, v, w}");
    reject_unknown(item, {"u", "v", "w"}, where);
    for (const char* key : {"u", "v", "w"}) {
      if (!item.contains(key)) throw ParseError(where + "." + key, "missing field");
    }
    Demand d{read_int(item["u"], where + ".u"), read_int(item["v"], where + ".v"),
             read_weight(item["w"], where + ".w")};
    if (!(1 <= d.i && d.i < d.j && d.j <= n)) {
      throw ParseError(where, "ends must satisfy 1 <= u < v <= n");
    }
    demands.push_back(std::move(d));
  }
  return Instance(n, std::move(demands));
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path.string(), "cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

Instance parse_instance(std::string_view text) {
  auto doc = parse_json(text);
  if (doc.is_object()) reject_unknown(doc, {"n", "demands", "name"}, "");
  return instance_from_json(doc);
}

std::string format_instance(const Instance& instance) {
  std::ostringstream out;
  out << "{\n  \"n\": " << instance.ring_size() << ",\n  \"demands\": [";
  for (std::size_t k = 0; k < instance.size(); ++k) {
    const auto& d = instance.demand(k);
    json item = {{"u", d.i}, {"v", d.j}, {"w", to_string(d.w)}};
    out << (k ? ",\n    " : "\n    ") << item.dump();
  }
  out << (instance.empty() ? "]\n}\n" : "\n  ]\n}\n");
  return out.str();
}

Instance load_instance(const std::filesystem::path& path) {
  auto text = read_file(path);
  try {
    return parse_instance(text);
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.location, e.detail);
  }
}

void save_instance(const Instance& instance, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << format_instance(instance);
}

RoutingDocument parse_routing(std::string_view text) {
  auto doc = parse_json(text);
  if (!doc.is_object()) throw ParseError("document", "expected a JSON object");
  if (!doc.contains("sides") || !doc["sides"].is_string()) {
    throw ParseError("sides", "expected a string over '+' and '-'");
  }
  RoutingDocument out;
  try {
    out.routing = Routing::parse(doc["sides"].get<std::string>());
  } catch (const InvalidInstanceError& e) {
    throw ParseError("sides", e.what());
  }
  if (doc.contains("value")) out.value = read_weight(doc["value"], "value");
  if (doc.contains("n") || doc.contains("demands")) out.instance = instance_from_json(doc);
  return out;
}

RoutingDocument load_routing(const std::filesystem::path& path) {
  auto text = read_file(path);
  try {
    return parse_routing(text);
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.location, e.detail);
  }
}

}  // namespace mcrpc
