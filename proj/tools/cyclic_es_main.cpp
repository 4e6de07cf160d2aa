// cyclic-es: command-line front end for the cyclic Erdos-Szekeres toolkit.
//
// Every run emits exactly one JSON document on stdout (CSV only on explicit
// --format csv) and exits with 0 on success, 1 for domain errors raised by
// operations, 2 for usage or input-parse errors.

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "cyclic_es/extremal.hpp"
#include "cyclic_es/grid.hpp"
#include "cyclic_es/json_io.hpp"
#include "cyclic_es/monotone.hpp"
#include "cyclic_es/stochastic.hpp"

namespace {

using cyclic_es::Error;
using cyclic_es::errc;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitDomainError = 1;
constexpr int kExitUsageError = 2;

void emit(const json& doc) { std::cout << doc.dump(2) << "\n"; }

int emit_ok(const std::string& command, json input_echo, json payload) {
  emit(json{{"command", command},
            {"input_echo", std::move(input_echo)},
            {"payload", std::move(payload)},
            {"exit_code", kExitOk}});
  return kExitOk;
}

int emit_error(const std::string& command, json input_echo, const Error& e,
               int exit_code) {
  json error{{"code", cyclic_es::errc_name(e.code())}, {"message", e.what()}};
  if (const auto* ne = dynamic_cast<const cyclic_es::NotExtremalError*>(&e);
      ne != nullptr && ne->witness().has_value()) {
    error["witness"] = cyclic_es::witness_to_json(*ne->witness());
  }
  emit(json{{"command", command},
            {"input_echo", std::move(input_echo)},
            {"error", std::move(error)},
            {"exit_code", exit_code}});
  return exit_code;
}

std::uint64_t parse_uint64(const std::string& text, const char* what) {
  std::uint64_t value = 0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw Error(errc::parse_error, std::string("ParseError: ") + what +
                                       " '" + text +
                                       "' is not an unsigned integer");
  }
  return value;
}

std::uint64_t enumeration_budget() {
  const char* env = std::getenv("CYCLIC_ES_BUDGET");
  if (env == nullptr || *env == '\0') {
    return cyclic_es::kDefaultEnumerationBudget;
  }
  return parse_uint64(env, "CYCLIC_ES_BUDGET");
}

// Tableau arguments accept inline JSON or @path-to-file.
json json_argument(const std::string& arg, const char* what) {
  std::string text = arg;
  if (!arg.empty() && arg.front() == '@') {
    std::ifstream in(arg.substr(1));
    if (!in) {
      throw Error(errc::parse_error, std::string("ParseError: cannot read ") +
                                         what + " file '" + arg.substr(1) +
                                         "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    text = buffer.str();
  }
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded()) {
    throw Error(errc::parse_error,
                std::string("ParseError: ") + what + " is not valid JSON");
  }
  return doc;
}

struct AnalyzeArgs {
  std::string permutation;
  bool cyclic = false;
  std::optional<int> k;
  std::optional<int> l;
};

int run_analyze(const AnalyzeArgs& args) {
  json echo{{"permutation", args.permutation}, {"cyclic", args.cyclic}};
  if (args.k) echo["k"] = *args.k;
  if (args.l) echo["l"] = *args.l;
  std::optional<cyclic_es::Permutation> linear;
  std::optional<cyclic_es::CyclicPermutation> cycle;
  try {
    if (args.k.has_value() != args.l.has_value()) {
      throw Error(errc::parse_error,
                  "ParseError: --k and --l must be given together");
    }
    if (args.k && (*args.k < 1 || *args.l < 1)) {
      // Validated while reading inputs: analysis itself is total, so the
      // command never exits 1.
      throw Error(errc::invalid_bound, "InvalidBound: k and l must be >= 1");
    }
    if (args.cyclic) {
      cycle = cyclic_es::parse_cyclic_permutation(args.permutation);
    } else {
      linear = cyclic_es::parse_permutation(args.permutation);
    }
  } catch (const Error& e) {
    return emit_error("analyze", echo, e, kExitUsageError);
  }
  try {
    json payload;
    if (args.cyclic) {
      payload["n"] = cycle->size();
      payload["canonical"] = cyclic_es::cyclic_to_json(*cycle);
      const int lis = cyclic_es::cyclic_lis_length(*cycle);
      const int lds = cyclic_es::cyclic_lds_length(*cycle);
      payload["cyclic_lis"] = lis;
      payload["cyclic_lds"] = lds;
      payload["increasing_witness"] = cyclic_es::witness_to_json(
          cyclic_es::cyclic_witness(*cycle, cyclic_es::Direction::increasing));
      payload["decreasing_witness"] = cyclic_es::witness_to_json(
          cyclic_es::cyclic_witness(*cycle, cyclic_es::Direction::decreasing));
      if (args.k) {
        payload["erdos_szekeres"] =
            json{{"k", *args.k},
                 {"l", *args.l},
                 {"cyclic_lis", lis},
                 {"cyclic_lds", lds},
                 {"satisfies", lis >= *args.k + 1 || lds >= *args.l + 1}};
      }
    } else {
      payload["n"] = linear->size();
      payload["permutation"] = cyclic_es::permutation_to_json(*linear);
      payload["lis"] = cyclic_es::lis_length(*linear);
      payload["lds"] = cyclic_es::lds_length(*linear);
      payload["increasing_witness"] = cyclic_es::witness_to_json(
          cyclic_es::linear_witness(*linear, cyclic_es::Direction::increasing));
      payload["decreasing_witness"] = cyclic_es::witness_to_json(
          cyclic_es::linear_witness(*linear, cyclic_es::Direction::decreasing));
      if (args.k) {
        payload["erdos_szekeres"] = cyclic_es::erdos_szekeres_report_to_json(
            cyclic_es::erdos_szekeres_check(*linear, *args.k, *args.l));
      }
    }
    return emit_ok("analyze", echo, payload);
  } catch (const Error& e) {
    return emit_error("analyze", echo, e, kExitDomainError);
  }
}

struct ConstructArgs {
  int k = 0;
  int l = 0;
  std::string structure;
};

int run_construct(const ConstructArgs& args) {
  json echo{{"k", args.k}, {"l", args.l}, {"structure", args.structure}};
  try {
    const auto structure = args.structure == "i"
                               ? cyclic_es::ExtremalStructure::i
                               : cyclic_es::ExtremalStructure::ii;
    const cyclic_es::CyclicPermutation cycle =
        cyclic_es::construct_extremal(args.k, args.l, structure);
    json payload{
        {"k", args.k},
        {"l", args.l},
        {"structure", args.structure},
        {"n", cycle.size()},
        {"cycle", cyclic_es::cyclic_to_json(cycle)},
        {"verify", cyclic_es::extremal_report_to_json(
                       cyclic_es::verify_extremal(cycle, args.k, args.l))},
        {"partition", cyclic_es::partition_witness_to_json(
                          cyclic_es::partition_witness(args.k, args.l,
                                                       structure))},
    };
    return emit_ok("construct", echo, payload);
  } catch (const Error& e) {
    return emit_error("construct", echo, e, kExitDomainError);
  }
}

int run_count(int k, int l) {
  json echo{{"k", k}, {"l", l}};
  try {
    json payload{
        {"k", k},
        {"l", l},
        {"syt", cyclic_es::bigcount_to_json(cyclic_es::count_syt_rect(l, k))},
        {"extremal_linear", cyclic_es::bigcount_to_json(
                                cyclic_es::count_extremal_linear(k, l))},
    };
    return emit_ok("count", echo, payload);
  } catch (const Error& e) {
    return emit_error("count", echo, e, kExitDomainError);
  }
}

struct BijectionArgs {
  std::string forward_permutation;
  bool inverse = false;
  std::optional<int> k;
  std::optional<int> l;
  std::string ranking;
  std::string valuation;
};

int run_bijection(const BijectionArgs& args) {
  json echo{{"mode", args.inverse ? "inverse" : "forward"}};
  if (!args.inverse) {
    echo["permutation"] = args.forward_permutation;
    std::optional<cyclic_es::Permutation> p;
    try {
      if (!args.k || !args.l) {
        throw Error(errc::parse_error,
                    "ParseError: --forward requires --k and --l");
      }
      echo["k"] = *args.k;
      echo["l"] = *args.l;
      p = cyclic_es::parse_permutation(args.forward_permutation);
    } catch (const Error& e) {
      return emit_error("bijection", echo, e, kExitUsageError);
    }
    try {
      const auto [ranking, valuation] = cyclic_es::phi(*p, *args.k, *args.l);
      json payload{
          {"k", *args.k},
          {"l", *args.l},
          {"permutation", cyclic_es::permutation_to_json(*p)},
          {"ranking", cyclic_es::tableau_to_json(ranking)},
          {"valuation", cyclic_es::tableau_to_json(valuation)},
      };
      return emit_ok("bijection", echo, payload);
    } catch (const Error& e) {
      return emit_error("bijection", echo, e, kExitDomainError);
    }
  }
  std::optional<cyclic_es::YoungTableau> ranking;
  std::optional<cyclic_es::YoungTableau> valuation;
  try {
    ranking =
        cyclic_es::tableau_from_json(json_argument(args.ranking, "--ranking"));
    echo["ranking"] = cyclic_es::tableau_to_json(*ranking);
    valuation = cyclic_es::tableau_from_json(
        json_argument(args.valuation, "--valuation"));
    echo["valuation"] = cyclic_es::tableau_to_json(*valuation);
  } catch (const Error& e) {
    return emit_error("bijection", echo, e, kExitUsageError);
  }
  try {
    const cyclic_es::Permutation p =
        cyclic_es::phi_inverse(*ranking, *valuation);
    json payload{
        {"k", ranking->cols()},
        {"l", ranking->rows()},
        {"ranking", cyclic_es::tableau_to_json(*ranking)},
        {"valuation", cyclic_es::tableau_to_json(*valuation)},
        {"permutation", cyclic_es::permutation_to_json(p)},
    };
    return emit_ok("bijection", echo, payload);
  } catch (const Error& e) {
    return emit_error("bijection", echo, e, kExitDomainError);
  }
}

struct EnumerateArgs {
  int k = 0;
  int l = 0;
  std::optional<std::uint64_t> limit;
  std::uint64_t offset = 0;
  std::string format = "json";
};

int run_enumerate(const EnumerateArgs& args) {
  json echo{{"k", args.k},
            {"l", args.l},
            {"offset", args.offset},
            {"limit", args.limit ? json(*args.limit) : json(nullptr)},
            {"format", args.format}};
  std::uint64_t budget = 0;
  try {
    budget = enumeration_budget();
  } catch (const Error& e) {
    return emit_error("enumerate", echo, e, kExitUsageError);
  }
  try {
    const std::vector<cyclic_es::CyclicPermutation> all =
        cyclic_es::enumerate_extremal(args.k, args.l, budget);
    const std::uint64_t total = all.size();
    const std::uint64_t begin = std::min(args.offset, total);
    const std::uint64_t end =
        args.limit ? std::min(begin + *args.limit, total) : total;
    if (args.format == "csv") {
      std::ostringstream out;
      out << "index,cycle\n";
      for (std::uint64_t idx = begin; idx < end; ++idx) {
        // The cycle text contains commas, so the field is quoted.
        out << idx << ",\"" << all[idx].to_text() << "\"\n";
      }
      std::cout << out.str();
      return kExitOk;
    }
    json cycles = json::array();
    for (std::uint64_t idx = begin; idx < end; ++idx) {
      cycles.push_back(cyclic_es::cyclic_to_json(all[idx]));
    }
    json payload{
        {"k", args.k},           {"l", args.l},
        {"total", total},        {"offset", begin},
        {"returned", end - begin}, {"cycles", std::move(cycles)},
    };
    return emit_ok("enumerate", echo, payload);
  } catch (const Error& e) {
    return emit_error("enumerate", echo, e, kExitDomainError);
  }
}

int run_verify_alpha(int k, int l) {
  json echo{{"k", k}, {"l", l}};
  std::uint64_t budget = 0;
  try {
    budget = enumeration_budget();
  } catch (const Error& e) {
    return emit_error("verify-alpha", echo, e, kExitUsageError);
  }
  try {
    const cyclic_es::AlphaReport report =
        cyclic_es::verify_alpha_exhaustive(k, l, budget);
    return emit_ok("verify-alpha", echo,
                   cyclic_es::alpha_report_to_json(report));
  } catch (const Error& e) {
    return emit_error("verify-alpha", echo, e, kExitDomainError);
  }
}

struct EstimateMuArgs {
  std::string n_list;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  std::string format = "json";
};

int run_estimate_mu(const EstimateMuArgs& args) {
  json echo{{"n", args.n_list},
            {"samples", args.samples},
            {"seed", args.seed},
            {"format", args.format}};
  std::vector<int> sizes;
  try {
    for (int v : cyclic_es::parse_value_list(args.n_list)) sizes.push_back(v);
  } catch (const Error& e) {
    return emit_error("estimate-mu", echo, e, kExitUsageError);
  }
  try {
    std::vector<cyclic_es::MuEstimate> estimates;
    estimates.reserve(sizes.size());
    for (int n : sizes) {
      estimates.push_back(cyclic_es::estimate_mu(n, args.samples, args.seed));
    }
    if (args.format == "csv") {
      std::ostringstream out;
      out << "n,samples,seed,mean,std_error,ratio\n";
      out.precision(17);
      for (const auto& est : estimates) {
        out << est.n << "," << est.samples << "," << est.seed << ","
            << est.mean << "," << est.std_error << "," << est.ratio << "\n";
      }
      std::cout << out.str();
      return kExitOk;
    }
    json payload;
    if (estimates.size() == 1) {
      payload = cyclic_es::mu_estimate_to_json(estimates.front());
    } else {
      json rows = json::array();
      for (const auto& est : estimates) {
        rows.push_back(cyclic_es::mu_estimate_to_json(est));
      }
      payload = json{{"estimates", std::move(rows)}};
    }
    return emit_ok("estimate-mu", echo, payload);
  } catch (const Error& e) {
    return emit_error("estimate-mu", echo, e, kExitDomainError);
  }
}

struct GridExportArgs {
  std::string permutation;
  int k = 0;
  int l = 0;
};

int run_grid_export(const GridExportArgs& args) {
  json echo{{"permutation", args.permutation}, {"k", args.k}, {"l", args.l}};
  std::optional<cyclic_es::Permutation> p;
  try {
    p = cyclic_es::parse_permutation(args.permutation);
  } catch (const Error& e) {
    return emit_error("grid-export", echo, e, kExitUsageError);
  }
  try {
    const cyclic_es::GridDrawing drawing =
        cyclic_es::grid_drawing(*p, args.k, args.l);
    json payload = cyclic_es::grid_drawing_to_json(drawing);
    payload["k"] = args.k;
    payload["l"] = args.l;
    payload["permutation"] = cyclic_es::permutation_to_json(*p);
    return emit_ok("grid-export", echo, payload);
  } catch (const Error& e) {
    return emit_error("grid-export", echo, e, kExitDomainError);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact analysis of monotone sub-permutations of linear and cyclic "
      "permutations"};
  app.require_subcommand(1);

  AnalyzeArgs analyze_args;
  auto* analyze = app.add_subcommand(
      "analyze", "Monotone profile and witnesses of a permutation");
  analyze->add_option("permutation", analyze_args.permutation,
                      "Comma-separated values, e.g. \"(6,1,4,2,7,3,5)\"")
      ->required();
  analyze->add_flag("--cyclic", analyze_args.cyclic,
                    "Treat the input as a cyclic permutation");
  analyze->add_option("--k", analyze_args.k, "Erdos-Szekeres bound k");
  analyze->add_option("--l", analyze_args.l, "Erdos-Szekeres bound l");

  ConstructArgs construct_args;
  auto* construct = app.add_subcommand(
      "construct", "Closed-form extremal cycle of length (k-1)(l-1)+1");
  construct->add_option("k", construct_args.k, "Bound k")->required();
  construct->add_option("l", construct_args.l, "Bound l")->required();
  construct
      ->add_option("--structure", construct_args.structure,
                   "Which closed form to build")
      ->required()
      ->check(CLI::IsMember({"i", "ii"}));

  int count_k = 0;
  int count_l = 0;
  auto* count = app.add_subcommand(
      "count", "Hook-length counts: SYT of l x k and |S_{k,l}|");
  count->add_option("k", count_k, "Bound k")->required();
  count->add_option("l", count_l, "Bound l")->required();

  BijectionArgs bijection_args;
  auto* bijection = app.add_subcommand(
      "bijection", "Tableau-pair bijection on S_{k,l}, either direction");
  auto* fwd = bijection->add_option("--forward",
                                    bijection_args.forward_permutation,
                                    "Permutation text to map forward");
  auto* inv = bijection->add_flag("--inverse", bijection_args.inverse,
                                  "Reconstruct from --ranking/--valuation");
  bijection->add_option("--k", bijection_args.k, "Bound k");
  bijection->add_option("--l", bijection_args.l, "Bound l");
  auto* rk = bijection->add_option("--ranking", bijection_args.ranking,
                                   "Ranking tableau (JSON or @file)");
  auto* vl = bijection->add_option("--valuation", bijection_args.valuation,
                                   "Valuation tableau (JSON or @file)");
  fwd->excludes(inv);
  inv->needs(rk);
  inv->needs(vl);

  EnumerateArgs enumerate_args;
  auto* enumerate = app.add_subcommand(
      "enumerate", "All extremal cycles C_{k,l}, lexicographic");
  enumerate->add_option("k", enumerate_args.k, "Bound k")->required();
  enumerate->add_option("l", enumerate_args.l, "Bound l")->required();
  enumerate->add_option("--limit", enumerate_args.limit,
                        "Return at most this many cycles");
  enumerate->add_option("--offset", enumerate_args.offset,
                        "Skip this many cycles first");
  enumerate
      ->add_option("--format", enumerate_args.format, "json (default) or csv")
      ->check(CLI::IsMember({"json", "csv"}));

  int verify_k = 0;
  int verify_l = 0;
  auto* verify_alpha = app.add_subcommand(
      "verify-alpha", "Exhaustively confirm alpha(k,l) = (k-1)(l-1)+2");
  verify_alpha->add_option("k", verify_k, "Bound k")->required();
  verify_alpha->add_option("l", verify_l, "Bound l")->required();

  EstimateMuArgs estimate_args;
  auto* estimate = app.add_subcommand(
      "estimate-mu", "Monte-Carlo estimate of the mean cyclic LIS length");
  estimate
      ->add_option("n", estimate_args.n_list,
                   "Cycle length, or comma-separated list for a sweep")
      ->required();
  estimate->add_option("samples", estimate_args.samples, "Samples per n")
      ->required();
  estimate->add_option("--seed", estimate_args.seed, "Base seed (default 0)");
  estimate
      ->add_option("--format", estimate_args.format, "json (default) or csv")
      ->check(CLI::IsMember({"json", "csv"}));

  GridExportArgs grid_args;
  auto* grid_export = app.add_subcommand(
      "grid-export", "Planar straight-line drawing data for a member of "
                     "S_{k,l}");
  grid_export->add_option("permutation", grid_args.permutation,
                          "Permutation text")
      ->required();
  grid_export->add_option("k", grid_args.k, "Bound k")->required();
  grid_export->add_option("l", grid_args.l, "Bound l")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    emit(json{{"command", "usage"},
              {"input_echo", nullptr},
              {"error", json{{"code", "UsageError"}, {"message", e.what()}}},
              {"exit_code", kExitUsageError}});
    return kExitUsageError;
  }

  try {
    if (analyze->parsed()) return run_analyze(analyze_args);
    if (construct->parsed()) return run_construct(construct_args);
    if (count->parsed()) return run_count(count_k, count_l);
    if (bijection->parsed()) {
      if (!bijection_args.inverse && bijection_args.forward_permutation.empty()) {
        const Error e(errc::parse_error,
                      "ParseError: bijection needs --forward or --inverse");
        return emit_error("bijection", nullptr, e, kExitUsageError);
      }
      return run_bijection(bijection_args);
    }
    if (enumerate->parsed()) return run_enumerate(enumerate_args);
    if (verify_alpha->parsed()) return run_verify_alpha(verify_k, verify_l);
    if (estimate->parsed()) return run_estimate_mu(estimate_args);
    if (grid_export->parsed()) return run_grid_export(grid_args);
  } catch (const Error& e) {
    // Fallback for configuration-level failures (e.g. a bad budget env var).
    return emit_error(app.get_subcommands().front()->get_name(), nullptr, e,
                      kExitUsageError);
  }
  return kExitUsageError;
}
