#include "cli.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "mcrpc/approx2.hpp"
#include "mcrpc/errors.hpp"
#include "mcrpc/exact_solver.hpp"
#include "mcrpc/fpt_solver.hpp"
#include "mcrpc/instances.hpp"
#include "mcrpc/lp_engine.hpp"
#include "mcrpc/routing_eval.hpp"

namespace mcrpc::cli {

namespace {

using Json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

const std::vector<std::string> kAlgorithms{"exact", "approx2", "lp32", "fpt"};

// Files win over fixture names so a local "fig2" file is still readable.
Instance read_instance(const std::string& source) {
  if (!std::filesystem::exists(source)) {
    for (const auto& name : fixture_names()) {
      if (name == source) return fixture(name);
    }
  }
  return load_instance(source);
}

Json instance_json(const Instance& instance) {
  Json doc;
  doc["n"] = instance.ring_size();
  doc["demands"] = Json::array();
  for (const auto& d : instance.demands()) {
    doc["demands"].push_back({{"u", d.i}, {"v", d.j}, {"w", to_string(d.w)}});
  }
  return doc;
}

Json witness_json(const CliqueWitness<Rational>& witness) {
  Json labels = Json::array();
  for (int label : witness.labels) labels.push_back(label);
  return labels;
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  Routing routing;
  Rational value;
  Json report;
};

Outcome run_algorithm(const std::string& algo, const Instance& instance, bool collision_free) {
  Json report;
  report["algorithm"] = algo;
  Outcome outcome;

  auto fill = [&](const SolveResult& r) {
    outcome.routing = r.routing;
    outcome.value = r.value;
    report["sides"] = r.routing.str();
    report["value"] = to_string(r.value);
    report["witness"] = witness_json(r.witness);
    report["evaluated"] = r.evaluated;
  };

  if (algo == "exact") {
    fill(collision_free ? solve_exact_collision_free(instance) : solve_exact(instance));
    if (collision_free) report["collision_free_only"] = true;
  } else if (algo == "approx2") {
    fill(solve_approx2(instance));
  } else if (algo == "fpt") {
    fill(solve_fpt(instance));
    if (!instance.empty()) {
      auto k = parameter_k(instance);
      report["k"] = k;
      report["work_bound"] = instance.size() * (std::uint64_t{1} << k);
    }
  } else if (algo == "lp32") {
    auto lp = solve_lp32(instance);
    outcome.routing = lp.routing;
    outcome.value = lp.value;
    report["sides"] = lp.routing.str();
    report["value"] = to_string(lp.value);
    report["witness"] = witness_json(lp.witness);
    report["opt_f"] = to_string(lp.fractional_optimum);
    report["crossing_support"] = lp.crossing_support;
    report["crossing_weight"] = to_string(lp.crossing_weight);
    report["certified_bound"] = to_string(lp.certified_bound);
    report["bound_holds"] = lp.bound_holds;
    report["cuts"] = lp.cuts;
  } else {
    throw InvalidInstanceError("unknown algorithm '" + algo + "'");
  }
  report["collisions"] = collision_count(instance, outcome.routing);
  outcome.report = std::move(report);
  return outcome;
}

void print_text(const Json& report, std::ostream& out) {
  for (const auto& [key, value] : report.items()) {
    out << key << ": ";
    if (value.is_string()) {
      out << value.get<std::string>();
    } else if (value.is_array()) {
      for (std::size_t k = 0; k < value.size(); ++k) out << (k ? " " : "") << value[k].dump();
    } else {
      out << value.dump();
    }
    out << '\n';
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error("cannot write " + path);
  file << text;
}

std::optional<Rational> ratio(const Rational& value, const Rational& optimum) {
  if (sgn(optimum) == 0) {
    if (sgn(value) == 0) return Rational(1);
    return std::nullopt;
  }
  return value / optimum;
}

std::string ratio_text(const std::optional<Rational>& r) {
  if (!r) return "inf";
  std::ostringstream s;
  s << to_string(*r) << " (" << std::fixed << std::setprecision(3) << to_double(*r) << ')';
  return s.str();
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> items;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');) {
    if (!item.empty()) items.push_back(item);
  }
  return items;
}

void check_algorithms(const std::vector<std::string>& algos) {
  for (const auto& a : algos) {
    if (std::find(kAlgorithms.begin(), kAlgorithms.end(), a) == kAlgorithms.end()) {
      throw CLI::ValidationError("--algos", "unknown algorithm '" + a + "'");
    }
  }
}

struct BatchOptions {
  std::string algos = "approx2,lp32";
  int trials = 20;
  int n = 10;
  int demands = 8;
  std::int64_t max_weight = 10;
  bool uniform = false;
  std::uint64_t seed = 1;
};

void add_batch_options(CLI::App* cmd, BatchOptions& o) {
  cmd->add_option("--algos", o.algos, "Comma-separated algorithms")->capture_default_str();
  cmd->add_option("--trials", o.trials, "Number of instances")->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--n", o.n, "Ring size")->check(CLI::Range(3, 1 << 20))->capture_default_str();
  cmd->add_option("--demands", o.demands, "Demands per instance")->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--max-weight", o.max_weight, "Largest random weight")
      ->check(CLI::PositiveNumber)->capture_default_str();
  cmd->add_flag("--uniform", o.uniform, "Unit weights");
  cmd->add_option("--seed", o.seed, "Seed of the first instance; trial t uses seed + t")
      ->capture_default_str();
}

Instance batch_instance(const BatchOptions& o, int trial) {
  return gen_random(o.n, static_cast<std::size_t>(o.demands), o.max_weight, o.uniform,
                    o.seed + static_cast<std::uint64_t>(trial));
}

// Why an algorithm cannot run on this instance, if it cannot.
std::optional<std::string> skip_reason(const std::string& algo, const Instance& instance) {
  if (algo == "exact" && instance.size() > kExactDemandLimit) return "skipped";
  if (algo == "fpt") {
    if (!instance.has_uniform_weights()) return "n/a";
    if (parameter_k(instance) > kFptParameterLimit) return "skipped";
  }
  return std::nullopt;
}

int cmd_compare(const BatchOptions& o, bool as_json, std::ostream& out) {
  auto algos = split_list(o.algos);
  check_algorithms(algos);
  algos.erase(std::remove(algos.begin(), algos.end(), "exact"), algos.end());

  Json rows = Json::array();
  std::map<std::string, std::optional<Rational>> worst;
  std::map<std::string, bool> unbounded;

  for (int t = 0; t < o.trials; ++t) {
    auto instance = batch_instance(o, t);
    Json row;
    row["trial"] = t;
    row["seed"] = o.seed + static_cast<std::uint64_t>(t);
    std::optional<Rational> optimum;
    if (auto why = skip_reason("exact", instance)) {
      row["exact"] = *why;
    } else {
      optimum = solve_exact(instance).value;
      row["exact"] = to_string(*optimum);
    }
    for (const auto& algo : algos) {
      if (auto why = skip_reason(algo, instance)) {
        row[algo] = {{"value", *why}};
        continue;
      }
      auto outcome = run_algorithm(algo, instance, false);
      Json cell{{"value", to_string(outcome.value)}};
      if (optimum) {
        auto r = ratio(outcome.value, *optimum);
        cell["ratio"] = r ? to_string(*r) : "inf";
        if (!r) {
          unbounded[algo] = true;
        } else if (!worst[algo] || *worst[algo] < *r) {
          worst[algo] = r;
        }
      } else {
        cell["ratio"] = "skipped";
      }
      row[algo] = cell;
    }
    rows.push_back(row);
  }

  Json summary;
  for (const auto& algo : algos) {
    if (unbounded[algo]) {
      summary[algo] = "inf";
    } else if (worst[algo]) {
      summary[algo] = to_string(*worst[algo]);
    } else {
      summary[algo] = "skipped";
    }
  }

  if (as_json) {
    Json doc{{"trials", o.trials}, {"n", o.n}, {"demands", o.demands}, {"seed", o.seed},
             {"uniform", o.uniform}, {"rows", rows}, {"worst_ratio", summary}};
    out << doc.dump(2) << '\n';
    return kOk;
  }

  out << std::left << std::setw(7) << "trial" << std::setw(10) << "exact";
  for (const auto& algo : algos) out << std::setw(10) << algo << std::setw(12) << "ratio";
  out << '\n';
  for (const auto& row : rows) {
    out << std::setw(7) << row["trial"].get<int>() << std::setw(10)
        << row["exact"].get<std::string>();
    for (const auto& algo : algos) {
      const auto& cell = row[algo];
      out << std::setw(10) << cell["value"].get<std::string>() << std::setw(12)
          << (cell.contains("ratio") ? cell["ratio"].get<std::string>() : "-");
    }
    out << '\n';
  }
  for (const auto& algo : algos) {
    out << "worst " << algo << ": ";
    if (unbounded[algo]) {
      out << "inf\n";
    } else if (worst[algo]) {
      out << ratio_text(worst[algo]) << '\n';
    } else {
      out << "skipped\n";
    }
  }
  return kOk;
}

int cmd_bench(const BatchOptions& o, bool as_json, std::ostream& out) {
  auto algos = split_list(o.algos);
  check_algorithms(algos);

  struct Tally {
    double seconds = 0;
    int runs = 0;
    int skipped = 0;
    std::uint64_t evaluated = 0;
    std::uint64_t bound = 0;
    double worst_fill = 0;  // evaluated / (|D| 2^k), FPT only
  };
  std::map<std::string, Tally> tally;

  for (int t = 0; t < o.trials; ++t) {
    auto instance = batch_instance(o, t);
    for (const auto& algo : algos) {
      auto& entry = tally[algo];
      if (skip_reason(algo, instance)) {
        ++entry.skipped;
        continue;
      }
      auto start = Clock::now();
      if (algo == "fpt") {
        auto r = solve_fpt(instance);
        entry.seconds += seconds_since(start);
        auto bound = instance.size() * (std::uint64_t{1} << parameter_k(instance));
        entry.evaluated += r.evaluated;
        entry.bound += bound;
        entry.worst_fill = std::max(entry.worst_fill, static_cast<double>(r.evaluated) / bound);
      } else {
        run_algorithm(algo, instance, false);
        entry.seconds += seconds_since(start);
      }
      ++entry.runs;
    }
  }

  Json doc{{"trials", o.trials}, {"n", o.n}, {"demands", o.demands}, {"seed", o.seed},
           {"uniform", o.uniform}};
  Json results = Json::object();
  for (const auto& algo : algos) {
    const auto& e = tally[algo];
    Json r{{"runs", e.runs}, {"skipped", e.skipped}, {"total_seconds", e.seconds},
           {"mean_ms", e.runs ? 1000 * e.seconds / e.runs : 0.0}};
    if (algo == "fpt" && e.runs) {
      r["evaluated"] = e.evaluated;
      r["work_bound"] = e.bound;
      r["worst_fill"] = e.worst_fill;
    }
    results[algo] = r;
  }
  doc["algorithms"] = results;
  if (as_json) {
    out << doc.dump(2) << '\n';
    return kOk;
  }
  out << std::left << std::setw(10) << "algo" << std::setw(7) << "runs" << std::setw(9)
      << "skipped" << std::setw(14) << "total s" << std::setw(12) << "mean ms" << '\n';
  for (const auto& algo : algos) {
    const auto& r = results[algo];
    out << std::setw(10) << algo << std::setw(7) << r["runs"].get<int>() << std::setw(9)
        << r["skipped"].get<int>() << std::setw(14) << std::setprecision(6)
        << r["total_seconds"].get<double>() << std::setw(12) << r["mean_ms"].get<double>()
        << '\n';
    if (r.contains("evaluated")) {
      out << "  fpt work: " << r["evaluated"].get<std::uint64_t>() << " routings scored, bound "
          << "sum |D|*2^k = " << r["work_bound"].get<std::uint64_t>()
          << ", worst per-instance fill " << r["worst_fill"].get<double>() << '\n';
    }
  }
  return kOk;
}

int cmd_verify(const std::string& input, const std::string& routing_path, bool as_json,
               std::ostream& out) {
  auto doc = load_routing(routing_path);
  std::optional<Instance> instance = doc.instance;
  if (!input.empty()) {
    auto given = read_instance(input);
    if (instance && !(*instance == given)) {
      throw InvalidInstanceError("routing file embeds a different instance than --input");
    }
    instance = given;
  }
  if (!instance) {
    throw InvalidInstanceError("no instance: pass --input or embed n and demands in the routing");
  }
  check_routing(*instance, doc.routing);
  auto witness = routing_clique(*instance, doc.routing);
  bool match = doc.value && *doc.value == witness.weight;

  Json report;
  report["sides"] = doc.routing.str();
  report["value"] = to_string(witness.weight);
  report["claimed"] = doc.value ? Json(to_string(*doc.value)) : Json(nullptr);
  report["witness"] = witness_json(witness);
  report["collisions"] = collision_count(*instance, doc.routing);
  report["match"] = match;
  if (as_json) {
    out << report.dump(2) << '\n';
  } else {
    print_text(report, out);
  }
  return match ? kOk : kMismatch;
}

std::vector<std::int64_t> parse_set(const std::string& text) {
  std::vector<std::int64_t> values;
  for (const auto& item : split_list(text)) {
    try {
      std::size_t used = 0;
      values.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw CLI::ValidationError("--set", "not an integer: '" + item + "'");
    }
  }
  return values;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Minimum clique routing on rings"};
  app.name("mcrpc");
  app.require_subcommand(1);

  bool as_json = false;
  app.add_flag("--json", as_json, "Structured output");

  auto* solve = app.add_subcommand("solve", "Route an instance with one algorithm");
  std::string algo = "exact", input, output;
  bool collision_free = false;
  solve->add_option("--algo", algo, "exact, approx2, lp32 or fpt")
      ->check(CLI::IsMember(kAlgorithms))
      ->capture_default_str();
  solve->add_option("--input", input, "Instance file or fixture name")->required();
  solve->add_option("--output", output, "Write the routing document here");
  solve->add_flag("--collision-free", collision_free, "exact: only collision-free routings");
  solve->add_flag("--json", as_json, "Structured output");

  auto* verify = app.add_subcommand("verify", "Check a routing document's claimed value");
  std::string routing_path, verify_input;
  verify->add_option("--routing", routing_path, "Routing document")->required();
  verify->add_option("--input", verify_input, "Instance file or fixture name");
  verify->add_flag("--json", as_json, "Structured output");

  auto* generate = app.add_subcommand("generate", "Write an instance");
  generate->require_subcommand(1);
  std::string gen_output;
  generate->add_option("--output", gen_output, "File to write (default: stdout)");
  auto* partition = generate->add_subcommand("partition", "Partition reduction instance");
  std::string set_text;
  partition->add_option("--set", set_text, "Comma-separated positive integers")->required();
  partition->add_option("--output", gen_output, "File to write (default: stdout)");
  auto* random = generate->add_subcommand("random", "Seeded random instance");
  int gen_n = 10, gen_demands = 8;
  std::int64_t gen_max_weight = 10;
  bool gen_uniform = false;
  std::uint64_t gen_seed = 1;
  random->add_option("--n", gen_n, "Ring size")->capture_default_str();
  random->add_option("--demands", gen_demands, "Number of demands")->capture_default_str();
  random->add_option("--max-weight", gen_max_weight, "Largest weight")->capture_default_str();
  random->add_flag("--uniform", gen_uniform, "Unit weights");
  random->add_option("--seed", gen_seed, "Seed")->capture_default_str();
  random->add_option("--output", gen_output, "File to write (default: stdout)");
  auto* fixture_cmd = generate->add_subcommand("fixture", "Built-in example instance");
  std::string fixture_name;
  fixture_cmd->add_option("--name", fixture_name, "fig2, fig3 or fig5")
      ->required()
      ->check(CLI::IsMember(fixture_names()));
  fixture_cmd->add_option("--output", gen_output, "File to write (default: stdout)");

  BatchOptions compare_options, bench_options;
  bench_options.algos = "exact,approx2,lp32,fpt";
  auto* compare = app.add_subcommand("compare", "Ratios against the exact optimum on a batch");
  add_batch_options(compare, compare_options);
  compare->add_flag("--json", as_json, "Structured output");
  auto* bench = app.add_subcommand("bench", "Wall-clock time per algorithm on a batch");
  add_batch_options(bench, bench_options);
  bench->add_flag("--json", as_json, "Structured output");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*solve) {
      auto instance = read_instance(input);
      if (collision_free && algo != "exact") {
        throw CLI::ValidationError("--collision-free", "only applies to --algo exact");
      }
      auto outcome = run_algorithm(algo, instance, collision_free);
      if (!output.empty()) {
        Json doc = instance_json(instance);
        for (const auto& [key, value] : outcome.report.items()) doc[key] = value;
        write_text_file(output, doc.dump(2) + "\n");
      }
      if (as_json) {
        out << outcome.report.dump(2) << '\n';
      } else {
        print_text(outcome.report, out);
      }
      return kOk;
    }
    if (*verify) return cmd_verify(verify_input, routing_path, as_json, out);
    if (*generate) {
      Instance instance;
      if (*partition) {
        PartitionSpec spec(parse_set(set_text));
        if (spec.doubled()) err << "note: odd total, every entry doubled\n";
        instance = gen_partition_reduction(spec);
      } else if (*random) {
        if (gen_demands < 1) throw CLI::ValidationError("--demands", "must be positive");
        instance = gen_random(gen_n, static_cast<std::size_t>(gen_demands), gen_max_weight,
                              gen_uniform, gen_seed);
      } else {
        instance = fixture(fixture_name);
      }
      if (gen_output.empty()) {
        out << format_instance(instance);
      } else {
        save_instance(instance, gen_output);
      }
      return kOk;
    }
    if (*compare) return cmd_compare(compare_options, as_json, out);
    if (*bench) return cmd_bench(bench_options, as_json, out);
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const InvalidInstanceError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const NonUniformWeightsError& e) {
    err << "NonUniformWeightsError: " << e.what() << '\n';
    return kUsage;
  } catch (const SizeLimitError& e) {
    err << "SizeLimitError: " << e.what() << '\n';
    return kUsage;
  } catch (const EmptyInstanceError& e) {
    err << "EmptyInstanceError: " << e.what() << '\n';
    return kUsage;
  } catch (const CrossingPairError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const IndexError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kInternal;
}

}  // namespace mcrpc::cli
