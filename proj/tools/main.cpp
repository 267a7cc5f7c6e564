// gaugerank - command-line surface over the factor-search toolkit.
//
// Subcommands: decide, enumerate, count, shatter, partition,
// catalog (build/validate), bench. Outputs are JSON (or JSON-lines /
// CSV where declared); feasibility lives in the payload, not the exit
// code. Exit codes: 0 computed, 2 input error, 3 resource-guard refusal.
// Set LANDSCAPE_RANK_LOG for diagnostics on stderr.

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gaugerank/bench.hpp"
#include "gaugerank/errors.hpp"
#include "gaugerank/factor_search.hpp"
#include "gaugerank/json_io.hpp"
#include "gaugerank/lie_catalog.hpp"
#include "gaugerank/partitions.hpp"
#include "gaugerank/rank_algebra.hpp"
#include "gaugerank/subset_sum.hpp"

namespace {

using gaugerank::json;

bool log_enabled() {
  static const bool enabled = [] {
    const char* v = std::getenv("LANDSCAPE_RANK_LOG");
    return v != nullptr && *v != '\0' && std::string(v) != "0";
  }();
  return enabled;
}

void log_diag(const std::string& msg) {
  if (log_enabled()) std::cerr << "[gaugerank] " << msg << '\n';
}

void emit(const json& j, bool compact) {
  if (compact)
    std::cout << j.dump() << '\n';
  else
    std::cout << j.dump(2) << '\n';
}

std::vector<std::int64_t> parse_int_list(const std::string& text,
                                         const char* what) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      size_t pos = 0;
      out.push_back(std::stoll(item, &pos));
      if (pos != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw gaugerank::parse_error(std::string("cannot parse ") + what +
                                   " entry \"" + item + "\" as an integer");
    }
  }
  if (out.empty())
    throw gaugerank::parse_error(std::string("empty ") + what + " list");
  return out;
}

struct QueryFlags {
  std::string catalog_path;
  std::string query_path;        // full query document, alternative input
  std::int64_t alpha = 0;
  std::int64_t max_copies = 0;   // 0 = unbounded
  std::int64_t max_shatter = 0;  // 0 = unbounded
};

void add_query_flags(CLI::App* cmd, QueryFlags& flags) {
  cmd->add_option("--catalog", flags.catalog_path, "catalog JSON file");
  cmd->add_option("--alpha", flags.alpha, "target rank");
  cmd->add_option("--query", flags.query_path,
                  "full query JSON file (instead of --catalog/--alpha)");
  cmd->add_option("--max-copies", flags.max_copies,
                  "cap on copies of one group (default unbounded)");
  cmd->add_option("--max-shatter", flags.max_shatter,
                  "cap on the number of factors (default unbounded)");
}

gaugerank::FactorQuery load_query(const QueryFlags& flags) {
  if (!flags.query_path.empty()) {
    if (!flags.catalog_path.empty() || flags.alpha != 0)
      throw gaugerank::parse_error(
          "--query replaces --catalog and --alpha; give one or the other");
    auto query = gaugerank::query_from_json(
        gaugerank::read_json_file(flags.query_path));
    log_diag("query \"" + flags.query_path + "\": " +
             std::to_string(query.catalog.entries.size()) +
             " catalog entries, alpha " + std::to_string(query.target_rank));
    return query;
  }
  if (flags.catalog_path.empty() || flags.alpha == 0)
    throw gaugerank::parse_error(
        "need --catalog with --alpha, or a --query file");
  gaugerank::GroupCatalog catalog = gaugerank::load_catalog(flags.catalog_path);
  log_diag("catalog \"" + flags.catalog_path + "\": " +
           std::to_string(catalog.entries.size()) + " entries");
  return gaugerank::FactorQuery::make(
      std::move(catalog), flags.alpha,
      flags.max_shatter > 0 ? std::optional<std::int64_t>(flags.max_shatter)
                            : std::nullopt,
      flags.max_copies > 0 ? std::optional<std::int64_t>(flags.max_copies)
                           : std::nullopt);
}

json factor_list_json(const std::vector<gaugerank::LieGroupSpec>& factors) {
  json arr = json::array();
  for (const auto& spec : factors) arr.push_back(gaugerank::spec_to_json(spec));
  return arr;
}

int cmd_decide(const QueryFlags& query_flags, const std::string& instance_path,
               const std::string& algo, const std::string& witness_csv,
               bool compact) {
  // Raw subset-sum instance path.
  if (!instance_path.empty()) {
    const gaugerank::SubsetSumInstance instance =
        gaugerank::instance_from_json(gaugerank::read_json_file(instance_path));
    if (!witness_csv.empty()) {
      gaugerank::Certificate cert;
      for (const std::int64_t i : parse_int_list(witness_csv, "witness")) {
        if (i < 0) {
          emit(json{{"valid", false}}, compact);
          return 0;
        }
        cert.indices.push_back(static_cast<std::size_t>(i));
      }
      emit(json{{"valid", gaugerank::verify_certificate(instance, cert)}},
           compact);
      return 0;
    }
    const gaugerank::Decision decision =
        algo == "brute" ? gaugerank::brute_force_subset_sum(instance)
                        : gaugerank::decide_subset_sum(instance);
    emit(gaugerank::decision_to_json(decision), compact);
    return 0;
  }

  // Catalog + target-rank path, through the subset-sum reduction.
  const gaugerank::FactorQuery query = load_query(query_flags);
  const gaugerank::ReducedInstance reduced = gaugerank::to_subset_sum(query);
  log_diag("reduction: " + std::to_string(reduced.values.size()) + " slots");
  json out;
  if (reduced.infeasible_by_construction()) {
    out["feasible"] = false;
    out["witness"] = nullptr;
  } else {
    const gaugerank::Decision decision =
        gaugerank::decide_subset_sum(reduced.to_instance());
    out["feasible"] = decision.feasible;
    if (decision.witness) {
      auto factors = reduced.factors_for(*decision.witness);
      std::sort(factors.begin(), factors.end(), gaugerank::rank_order_less);
      out["witness"] = factor_list_json(factors);
    } else {
      out["witness"] = nullptr;
    }
  }
  emit(out, compact);
  return 0;
}

int cmd_maxsum(const std::string& instance_path, double epsilon, bool approx,
               bool compact) {
  const gaugerank::SubsetSumInstance instance =
      gaugerank::instance_from_json(gaugerank::read_json_file(instance_path));
  json out;
  if (approx) {
    out["max_sum"] = gaugerank::approx_max_subset_sum(instance, epsilon);
    out["exact"] = false;
    out["epsilon"] = epsilon;
  } else {
    out["max_sum"] = gaugerank::exact_max_subset_sum(instance);
    out["exact"] = true;
  }
  emit(out, compact);
  return 0;
}

int cmd_enumerate(const QueryFlags& query_flags, std::uint64_t limit) {
  const gaugerank::FactorQuery query = load_query(query_flags);
  std::uint64_t emitted = 0;
  gaugerank::enumerate_factorizations(
      query, [&](const gaugerank::Factorization& f) {
        json line;
        line["factors"] = factor_list_json(f.factors);
        line["shatter"] = f.shatter;
        line["rank"] = f.total_rank;
        std::cout << line.dump() << '\n';
        return ++emitted < limit;
      });
  log_diag("enumerated " + std::to_string(emitted) + " factorizations");
  return 0;
}

int cmd_count(const QueryFlags& query_flags, bool compact) {
  const gaugerank::FactorQuery query = load_query(query_flags);
  json out;
  out["alpha"] = query.target_rank;
  out["count"] = gaugerank::count_factorizations(query).str();
  emit(out, compact);
  return 0;
}

int cmd_shatter(const QueryFlags& query_flags, bool compact) {
  const gaugerank::FactorQuery query = load_query(query_flags);
  const auto dist = gaugerank::shatter_distribution(query);
  gaugerank::bigint total = 0;
  json map = json::object();
  for (const auto& [m, count] : dist) {
    map[std::to_string(m)] = count.str();
    total += count;
  }
  json out;
  out["alpha"] = query.target_rank;
  out["distribution"] = map;
  out["total"] = total.str();
  emit(out, compact);
  return 0;
}

int cmd_partition(std::int64_t n, bool enumerate, std::uint64_t limit,
                  bool compact) {
  if (enumerate) {
    std::uint64_t emitted = 0;
    gaugerank::partition_enumerate(
        n, [&](const std::vector<std::int64_t>& parts) {
          std::cout << json(parts).dump() << '\n';
          return ++emitted < limit;
        });
    return 0;
  }
  const auto check = gaugerank::check_exponential_bound(n);
  json out;
  out["n"] = n;
  out["exact"] = check.partition_count.str();
  out["bound_2_pow_n_minus_1"] = check.bound.str();
  out["holds_strictly"] = check.holds_strictly;
  try {
    const double asym = gaugerank::partition_asymptotic(n);
    out["asymptotic"] = asym;
    out["asymptotic_over_exact"] =
        asym / check.partition_count.convert_to<double>();
  } catch (const gaugerank::resource_error&) {
    // Too large for a double; report the log instead.
    out["asymptotic"] = nullptr;
    out["asymptotic_log_e"] = gaugerank::partition_asymptotic_log(n);
  }
  emit(out, compact);
  return 0;
}

int cmd_catalog_build(std::int64_t max_rank, const std::string& families_csv,
                      bool simply_laced, const std::string& out_path,
                      bool compact) {
  std::vector<gaugerank::LieFamily> families;
  if (families_csv.empty()) {
    families = gaugerank::all_families();
  } else {
    std::stringstream ss(families_csv);
    std::string name;
    while (std::getline(ss, name, ','))
      families.push_back(gaugerank::family_from_name(name));
  }
  const gaugerank::GroupCatalog catalog =
      gaugerank::build_catalog(max_rank, families, simply_laced);
  if (out_path.empty()) {
    emit(gaugerank::catalog_to_json(catalog), compact);
  } else {
    gaugerank::save_catalog(catalog, out_path);
    emit(json{{"written", out_path},
              {"entries", catalog.entries.size()}},
         compact);
  }
  return 0;
}

int cmd_catalog_validate(const std::string& path, bool compact) {
  const gaugerank::GroupCatalog catalog = gaugerank::load_catalog(path);
  json by_rank = json::object();
  for (std::int64_t r = 1; r <= catalog.max_rank; ++r) {
    const auto groups = gaugerank::groups_of_rank(catalog, r);
    if (groups.empty()) continue;
    json names = json::array();
    for (const auto& spec : groups) names.push_back(gaugerank::label(spec));
    by_rank[std::to_string(r)] = names;
  }
  json out;
  out["valid"] = true;
  out["entries"] = catalog.entries.size();
  out["max_rank"] = catalog.max_rank;
  out["simply_laced_only"] = catalog.simply_laced_only;
  out["groups_by_rank"] = by_rank;
  emit(out, compact);
  return 0;
}

int cmd_bench(const std::string& sizes_spec, const std::string& targets_csv,
              std::int64_t dp_n, std::int64_t trials, std::uint64_t seed,
              double epsilon, const std::string& out_path, bool compact) {
  gaugerank::BenchConfig config;
  config.trials = trials;
  config.seed = seed;
  config.epsilon = epsilon;
  config.target_axis_size = dp_n;
  if (!sizes_spec.empty()) {
    // MIN:MAX:STEP or a comma list.
    if (sizes_spec.find(':') != std::string::npos) {
      std::stringstream ss(sizes_spec);
      std::string part;
      std::vector<std::int64_t> range;
      while (std::getline(ss, part, ':'))
        range.push_back(parse_int_list(part, "sizes")[0]);
      if (range.size() != 3 || range[2] < 1 || range[0] > range[1])
        throw gaugerank::parse_error("--sizes expects MIN:MAX:STEP");
      config.sizes.clear();
      for (std::int64_t n = range[0]; n <= range[1]; n += range[2])
        config.sizes.push_back(n);
    } else {
      config.sizes = parse_int_list(sizes_spec, "sizes");
    }
  }
  if (!targets_csv.empty())
    config.targets = parse_int_list(targets_csv, "targets");
  if (trials < 1) throw gaugerank::validation_error("--trials must be >= 1");

  const auto records = gaugerank::run_bench(config);
  gaugerank::write_bench_csv(records, out_path);
  emit(json{{"written", out_path}, {"rows", records.size()}}, compact);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gauge-group rank factorization toolkit"};
  app.require_subcommand(1);
  bool compact = false;
  app.add_flag("--json", compact,
               "compact single-line JSON output (default pretty-prints)");

  QueryFlags decide_flags, enumerate_flags, count_flags, shatter_flags;

  // decide
  auto* decide = app.add_subcommand(
      "decide", "is any factorization of rank alpha possible?");
  std::string decide_instance, decide_algo = "dp", decide_witness;
  decide->add_option("--catalog", decide_flags.catalog_path,
                     "catalog JSON file");
  decide->add_option("--alpha", decide_flags.alpha, "target rank");
  decide->add_option("--query", decide_flags.query_path,
                     "full query JSON file (instead of --catalog/--alpha)");
  decide->add_option("--max-copies", decide_flags.max_copies,
                     "cap on copies of one group");
  decide->add_option("--max-shatter", decide_flags.max_shatter,
                     "cap on the number of factors");
  decide->add_option("--instance", decide_instance,
                     "raw subset-sum instance JSON file (alternative input)");
  decide->add_option("--algo", decide_algo, "dp (default) or brute")
      ->check(CLI::IsMember({"dp", "brute"}));
  decide->add_option("--witness", decide_witness,
                     "verify this comma-separated index certificate instead "
                     "of solving");

  // maxsum flags live on decide --instance via --max-sum
  bool decide_maxsum = false, decide_approx = false;
  double epsilon = 0.1;
  decide->add_flag("--max-sum", decide_maxsum,
                   "optimization form: largest subset sum <= target");
  decide->add_flag("--approx", decide_approx,
                   "with --max-sum: use the FPTAS instead of exact search");
  decide->add_option("--epsilon", epsilon, "FPTAS accuracy (0 < eps < 1)");

  // enumerate / count / shatter
  auto* enumerate =
      app.add_subcommand("enumerate", "stream factorizations as JSON lines");
  std::uint64_t limit = UINT64_MAX;
  add_query_flags(enumerate, enumerate_flags);
  enumerate->add_option("--limit", limit, "truncate the stream after N lines");

  auto* count =
      app.add_subcommand("count", "count factorizations without enumerating");
  add_query_flags(count, count_flags);

  auto* shatter = app.add_subcommand(
      "shatter", "factorization counts keyed by factor count m");
  add_query_flags(shatter, shatter_flags);

  // partition
  auto* partition = app.add_subcommand(
      "partition", "exact p(n), asymptotic and the 2^(n-1) bound");
  std::int64_t partition_n = 0;
  bool partition_enum = false;
  std::uint64_t partition_limit = UINT64_MAX;
  partition->add_option("--n", partition_n, "the integer to partition")
      ->required();
  partition->add_flag("--enumerate", partition_enum,
                      "stream the partitions themselves as JSON lines");
  partition->add_option("--limit", partition_limit,
                        "truncate the enumeration stream");

  // catalog build / validate
  auto* catalog = app.add_subcommand("catalog", "build or validate catalogs");
  catalog->require_subcommand(1);
  auto* build = catalog->add_subcommand("build", "materialize a catalog");
  std::int64_t build_max_rank = 8;
  std::string build_families, build_out;
  bool build_simply_laced = false;
  build->add_option("--max-rank", build_max_rank, "largest admitted rank")
      ->required();
  build->add_option("--families", build_families,
                    "comma list (default: all of A,B,C,D,E6,E7,E8,F4,G2,U1)");
  build->add_flag("--simply-laced", build_simply_laced,
                  "keep only simply-laced families");
  build->add_option("--out", build_out, "write here instead of stdout");

  auto* validate =
      catalog->add_subcommand("validate", "load a catalog and report on it");
  std::string validate_path;
  validate->add_option("path", validate_path, "catalog JSON file")->required();

  // bench
  auto* bench = app.add_subcommand(
      "bench", "timed solver runs over seeded instances, CSV output");
  std::string bench_sizes, bench_targets, bench_out;
  std::int64_t bench_dp_n = 18, bench_trials = 5;
  std::uint64_t bench_seed = 1;
  bench->add_option("--sizes", bench_sizes,
                    "size axis, MIN:MAX:STEP or comma list (default 20,24)");
  bench->add_option("--targets", bench_targets,
                    "target axis (default 1000,10000,100000,1000000)");
  bench->add_option("--dp-n", bench_dp_n, "instance size on the target axis");
  bench->add_option("--trials", bench_trials, "instances per axis point");
  bench->add_option("--seed", bench_seed, "instance generation seed");
  bench->add_option("--epsilon", epsilon, "FPTAS accuracy for fptas rows");
  bench->add_option("--out", bench_out, "CSV output path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (decide->parsed()) {
      if (decide_maxsum) {
        if (decide_instance.empty())
          throw gaugerank::parse_error("--max-sum needs --instance");
        return cmd_maxsum(decide_instance, epsilon, decide_approx, compact);
      }
      if (decide_instance.empty() && decide_flags.query_path.empty() &&
          (decide_flags.catalog_path.empty() || decide_flags.alpha == 0))
        throw gaugerank::parse_error(
            "decide needs --instance, --query, or --catalog with --alpha");
      return cmd_decide(decide_flags, decide_instance, decide_algo,
                        decide_witness, compact);
    }
    if (enumerate->parsed()) return cmd_enumerate(enumerate_flags, limit);
    if (count->parsed()) return cmd_count(count_flags, compact);
    if (shatter->parsed()) return cmd_shatter(shatter_flags, compact);
    if (partition->parsed())
      return cmd_partition(partition_n, partition_enum, partition_limit,
                           compact);
    if (catalog->parsed()) {
      if (build->parsed())
        return cmd_catalog_build(build_max_rank, build_families,
                                 build_simply_laced, build_out, compact);
      return cmd_catalog_validate(validate_path, compact);
    }
    if (bench->parsed())
      return cmd_bench(bench_sizes, bench_targets, bench_dp_n, bench_trials,
                       bench_seed, epsilon, bench_out, compact);
    return 2;
  } catch (const gaugerank::resource_error& e) {
    std::cerr << "resource guard: " << e.what() << '\n';
    return 3;
  } catch (const gaugerank::parse_error& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return 2;
  } catch (const gaugerank::validation_error& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
