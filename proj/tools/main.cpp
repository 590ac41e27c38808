#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "revpref/analysis.hpp"
#include "revpref/generators.hpp"
#include "revpref/json_io.hpp"
#include "revpref/verifier.hpp"

namespace {

using revpref::ordered_json;

// Exit codes: 0 = success/verified, 1 = usage or ingestion error,
// 2 = verification counterexample found.
constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitCounterexample = 2;

void emit(const ordered_json& j, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::ofstream out(out_path);
    if (!out) {
      throw revpref::Error(revpref::Errc::parse_error,
                           "cannot open output file '" + out_path + "'");
    }
    out << j.dump(2) << "\n";
  }
}

revpref::PartialChoiceDataset load_dataset(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw revpref::Error(revpref::Errc::parse_error,
                         "cannot open dataset file '" + path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return revpref::dataset_from_string(buf.str());
}

/// "a>b~c>d": '>' separates indifference classes listed best-first,
/// '~' separates tied alternatives.
revpref::ChoiceCorrespondence correspondence_from_expression(const std::string& expr) {
  std::vector<std::vector<std::string>> tiers;
  std::vector<std::string> labels;
  std::stringstream tier_stream(expr);
  std::string tier;
  while (std::getline(tier_stream, tier, '>')) {
    std::vector<std::string> group;
    std::stringstream alt_stream(tier);
    std::string alt;
    while (std::getline(alt_stream, alt, '~')) {
      if (alt.empty()) {
        throw revpref::Error(revpref::Errc::parse_error,
                             "empty alternative in preference expression");
      }
      group.push_back(alt);
      labels.push_back(alt);
    }
    tiers.push_back(std::move(group));
  }
  revpref::Universe universe(std::move(labels));
  std::vector<int> rank(universe.size());
  int r = 0;
  for (const auto& group : tiers) {
    for (const auto& alt : group) rank[universe.index_of(alt)] = r;
    ++r;
  }
  revpref::BinaryRelation weak(universe.size());
  for (int x = 0; x < universe.size(); ++x) {
    for (int y = 0; y < universe.size(); ++y) {
      if (rank[x] <= rank[y]) weak.set(x, y);
    }
  }
  return revpref::from_preference(universe, revpref::strict_from_weak(weak));
}

int run(int argc, char** argv) {
  CLI::App app{"Choice-data analysis: revealed preferences, axiom checks, "
               "exhaustive verification"};
  app.require_subcommand(1);

  bool as_text = false;
  bool as_json = false;
  app.add_flag("--text", as_text, "human-readable output (analyze)");
  app.add_flag("--json", as_json, "JSON output (default)");

  // analyze
  std::string analyze_path;
  std::string completion;
  auto* analyze_cmd = app.add_subcommand("analyze", "run all checkers on a dataset file");
  analyze_cmd->add_option("path", analyze_path, "dataset JSON file")->required();
  analyze_cmd->add_option("--complete", completion,
                          "completion policy applied before checking (full-menu|fail)");

  // verify
  std::string claim;
  int verify_n = 4;
  int shards = 1, shard = 0;
  auto* verify_cmd =
      app.add_subcommand("verify", "exhaustively verify one claim over all "
                                   "correspondences on n alternatives");
  verify_cmd
      ->add_option("--claim", claim,
                   "prop-tau|prop-rho|theorem1|lemma1|warp|delta")
      ->required();
  verify_cmd->add_option("--n", verify_n, "universe size (default 4)");
  verify_cmd->add_option("--shards", shards, "number of index-range shards");
  verify_cmd->add_option("--shard", shard, "shard to run (0-based)");

  // generate
  std::string fixture_name, from_pref, range_expr, out_path;
  int gen_n = 0, gen_count = 1;
  std::uint64_t gen_seed = 0;
  auto* generate_cmd = app.add_subcommand("generate", "emit dataset files");
  generate_cmd->add_option("--fixture", fixture_name,
                           "example1|example2|luce-raiffa|set-reference");
  generate_cmd->add_option("--from-preference", from_pref,
                           "preference expression, e.g. \"a>b~c>d\"");
  generate_cmd->add_option("--n", gen_n, "universe size");
  generate_cmd->add_option("--seed", gen_seed, "random seed");
  generate_cmd->add_option("--count", gen_count, "number of sampled datasets");
  generate_cmd->add_option("--range", range_expr,
                           "enumerate correspondences with index in lo..hi");
  generate_cmd->add_option("--out", out_path, "output file (default: stdout)");

  CLI11_PARSE(app, argc, argv);

  if (analyze_cmd->parsed()) {
    auto dataset = load_dataset(analyze_path);
    std::optional<revpref::CompletionPolicy> policy;
    if (!completion.empty()) {
      policy = revpref::completion_policy_from_string(completion);
    }
    ordered_json report = revpref::analysis_to_json(revpref::analyze(dataset, policy));
    if (as_text) {
      std::cout << revpref::render_analysis_text(report);
    } else {
      std::cout << report.dump(2) << "\n";
    }
    return kExitOk;
  }

  if (verify_cmd->parsed()) {
    auto report =
        revpref::verify(revpref::claim_from_string(claim), verify_n, shards, shard);
    std::cout << revpref::verification_report_to_json(report).dump(2) << "\n";
    return report.verified() ? kExitOk : kExitCounterexample;
  }

  // generate
  if (!fixture_name.empty()) {
    emit(revpref::dataset_to_json(revpref::fixture(fixture_name).data), out_path);
    return kExitOk;
  }
  if (!from_pref.empty()) {
    emit(revpref::correspondence_to_json(correspondence_from_expression(from_pref)),
         out_path);
    return kExitOk;
  }
  if (!range_expr.empty()) {
    auto sep = range_expr.find("..");
    if (sep == std::string::npos || gen_n == 0) {
      throw revpref::Error(revpref::Errc::parse_error,
                           "--range needs lo..hi and --n");
    }
    std::uint64_t lo = std::stoull(range_expr.substr(0, sep));
    std::uint64_t hi = std::stoull(range_expr.substr(sep + 2));
    ordered_json out = ordered_json::array();
    revpref::CorrespondenceEnumerator e(gen_n, lo, hi);
    while (e.next()) out.push_back(revpref::correspondence_to_json(e.current()));
    emit(out, out_path);
    return kExitOk;
  }
  if (gen_n == 0) {
    throw revpref::Error(revpref::Errc::parse_error,
                         "generate needs --fixture, --from-preference, --range or --n");
  }
  ordered_json out = ordered_json::array();
  revpref::sample_each(gen_n, gen_count, gen_seed,
                       [&out](const revpref::ChoiceCorrespondence& c) {
                         out.push_back(revpref::correspondence_to_json(c));
                       });
  emit(gen_count == 1 ? out[0] : out, out_path);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const revpref::Error& e) {
    std::cerr << revpref::error_to_json(e).dump(2) << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << ordered_json{{"error", {{"code", "Internal"}, {"message", e.what()}}}}
                     .dump(2)
              << "\n";
    return kExitError;
  }
}
