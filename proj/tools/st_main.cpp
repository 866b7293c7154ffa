#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "stpart/campaign.hpp"

namespace {

using stpart::harness::CampaignConfig;
using stpart::harness::CampaignReport;
using stpart::harness::Command;
using stpart::harness::UsageError;

struct CommonOpts {
  std::string n_range;
  long long node_limit = 1'000'000'000;
  long long time_limit_ms = 0;
  std::string json_path;
  int parallel = 1;
};

void add_budget_opts(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--node-limit", o.node_limit, "abort a search after this many nodes")
      ->capture_default_str();
  cmd->add_option("--time-limit-ms", o.time_limit_ms, "wall clock budget per search, 0 for none")
      ->capture_default_str();
  cmd->add_option("--json", o.json_path, "write the JSON-lines report here instead of stdout");
}

void add_campaign_opts(CLI::App* cmd, CommonOpts& o) {
  add_budget_opts(cmd, o);
  cmd->add_option("--parallel", o.parallel, "worker threads for independent cells")
      ->capture_default_str()
      ->check(CLI::Range(1, 256));
}

CampaignConfig base_config(const CommonOpts& o, Command command) {
  CampaignConfig cfg;
  cfg.command = command;
  if (o.node_limit > 0) cfg.budget.node_limit = o.node_limit;
  if (o.time_limit_ms > 0) cfg.budget.time_limit = std::chrono::milliseconds(o.time_limit_ms);
  cfg.parallelism = o.parallel;
  return cfg;
}

void apply_range(CampaignConfig& cfg, const CommonOpts& o, const std::string& what) {
  auto [lo, hi] = stpart::harness::detail::parse_range(o.n_range, what);
  cfg.n_lo = lo;
  cfg.n_hi = hi;
}

int emit(const CampaignReport& report, const CommonOpts& o) {
  if (o.json_path.empty()) {
    stpart::harness::write_report(std::cout, report);
  } else {
    std::ofstream out(o.json_path);
    if (!out) throw UsageError("cannot open '" + o.json_path + "' for writing");
    stpart::harness::write_report(out, report);
    std::cout << report.command << ": " << report.overall_status() << " ("
              << report.cells.size() << " cells, " << report.count("fail") << " fail, "
              << report.count("inconclusive") << " inconclusive)\n";
  }
  return report.exit_code();
}

// Streaming commands honor --json by redirecting the whole stream.
int emit_stream(const std::function<int(std::ostream&)>& run, const CommonOpts& o) {
  if (o.json_path.empty()) return run(std::cout);
  std::ofstream out(o.json_path);
  if (!out) throw UsageError("cannot open '" + o.json_path + "' for writing");
  return run(out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact search and verification for star-triangle edge partitions of K_n\n"
               "and minimum colorings of the Kneser graph KG(n,2)"};
  app.require_subcommand(1);
  std::function<int()> action;

  CommonOpts theorem_opts;
  theorem_opts.n_range = "3..8";
  auto* theorem = app.add_subcommand(
      "verify-theorem", "every minimum partition of K_n has exactly one triangle");
  theorem->add_option("--n", theorem_opts.n_range, "range of n, lo..hi or single value")
      ->capture_default_str();
  add_campaign_opts(theorem, theorem_opts);
  theorem->callback([&] {
    action = [&] {
      CampaignConfig cfg = base_config(theorem_opts, Command::verify_theorem);
      apply_range(cfg, theorem_opts, "verify-theorem --n");
      return emit(stpart::harness::run_verify_theorem(cfg), theorem_opts);
    };
  });

  CommonOpts lemma_opts;
  std::string lemma_hosts = "default";
  bool lemma_self_test = false;
  auto* lemmas = app.add_subcommand(
      "verify-lemmas", "structural lemmas hold on every minimum partition of the given hosts");
  lemmas->add_option("--hosts", lemma_hosts, "k:lo..hi, all:v, file:PATH, or default")
      ->capture_default_str();
  lemmas->add_flag("--self-test", lemma_self_test,
                   "also feed the checkers a corrupted partition and require a report");
  add_campaign_opts(lemmas, lemma_opts);
  lemmas->callback([&] {
    action = [&] {
      CampaignConfig cfg = base_config(lemma_opts, Command::verify_lemmas);
      cfg.hosts = lemma_hosts;
      cfg.self_test = lemma_self_test;
      return emit(stpart::harness::run_verify_lemmas(cfg), lemma_opts);
    };
  });

  CommonOpts corollary_opts;
  corollary_opts.n_range = "4..8";
  bool corollary_exhaustive = false;
  auto* corollaries = app.add_subcommand(
      "verify-corollaries", "extracted colorful multipartite witnesses verify for every tuple");
  corollaries->add_option("--n", corollary_opts.n_range, "range of n, lo..hi or single value")
      ->capture_default_str();
  corollaries->add_flag("--exhaustive-cross-check", corollary_exhaustive,
                        "cross-check every partition by search, not one per cell");
  add_campaign_opts(corollaries, corollary_opts);
  corollaries->callback([&] {
    action = [&] {
      CampaignConfig cfg = base_config(corollary_opts, Command::verify_corollaries);
      cfg.exhaustive_cross_check = corollary_exhaustive;
      apply_range(cfg, corollary_opts, "verify-corollaries --n");
      return emit(stpart::harness::run_verify_corollaries(cfg), corollary_opts);
    };
  });

  CommonOpts remark_opts;
  remark_opts.n_range = "6..9";
  auto* remark = app.add_subcommand(
      "verify-remark", "the shifted standard coloring has its stated extremal properties");
  remark->add_option("--n", remark_opts.n_range, "range of n, lo..hi or single value")
      ->capture_default_str();
  add_campaign_opts(remark, remark_opts);
  remark->callback([&] {
    action = [&] {
      CampaignConfig cfg = base_config(remark_opts, Command::verify_remark);
      apply_range(cfg, remark_opts, "verify-remark --n");
      return emit(stpart::harness::run_verify_remark(cfg), remark_opts);
    };
  });

  CommonOpts chromatic_opts;
  int chromatic_k = 2;
  auto* chromatic =
      app.add_subcommand("chromatic", "chi(KG(n,k)) = n - 2k + 2 via independent routes");
  chromatic->add_option("--n", chromatic_opts.n_range, "range of n, lo..hi or single value")
      ->required();
  chromatic->add_option("--k", chromatic_k, "subset size")->capture_default_str();
  add_campaign_opts(chromatic, chromatic_opts);
  chromatic->callback([&] {
    action = [&] {
      CampaignConfig cfg = base_config(chromatic_opts, Command::chromatic);
      cfg.k = chromatic_k;
      apply_range(cfg, chromatic_opts, "chromatic --n");
      return emit(stpart::harness::run_chromatic(cfg), chromatic_opts);
    };
  });

  CommonOpts enum_opts;
  std::string enum_host;
  int enum_size = -1;
  auto* enumerate =
      app.add_subcommand("enumerate", "stream every partition of a host at a given size");
  enumerate->add_option("--host", enum_host, "k:n or file:PATH")->required();
  enumerate->add_option("--size", enum_size, "exact number of parts")->required();
  add_budget_opts(enumerate, enum_opts);
  enumerate->callback([&] {
    action = [&] {
      CampaignConfig cfg = base_config(enum_opts, Command::enumerate_partitions);
      cfg.host = enum_host;
      cfg.size = enum_size;
      return emit_stream(
          [&cfg](std::ostream& out) { return stpart::harness::run_enumerate(cfg, out); },
          enum_opts);
    };
  });

  CommonOpts classify_opts;
  std::string classify_coloring, classify_partition;
  auto* classify =
      app.add_subcommand("classify", "validate and classify a serialized coloring or partition");
  classify->add_option("--coloring", classify_coloring, "coloring JSON file");
  classify->add_option("--partition", classify_partition, "partition JSON file");
  add_budget_opts(classify, classify_opts);
  classify->callback([&] {
    action = [&] {
      CampaignConfig cfg = base_config(classify_opts, Command::classify);
      cfg.coloring_path = classify_coloring;
      cfg.partition_path = classify_partition;
      return emit_stream(
          [&cfg](std::ostream& out) { return stpart::harness::run_classify(cfg, out); },
          classify_opts);
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 64;
  }

  try {
    return action ? action() : 64;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 64;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 64;
  }
}
