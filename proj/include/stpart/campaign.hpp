#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <exception>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <json.hpp>

#include "stpart/budget.hpp"
#include "stpart/chromatic.hpp"
#include "stpart/colorful_search.hpp"
#include "stpart/coloring.hpp"
#include "stpart/constructions.hpp"
#include "stpart/enumerate.hpp"
#include "stpart/graph.hpp"
#include "stpart/json_io.hpp"
#include "stpart/lemmas.hpp"
#include "stpart/st_partition.hpp"
#include "stpart/theorems.hpp"

namespace stpart::harness {

using core::SimpleGraph;
using model::Coloring;
using model::STPartition;
using search::BudgetExhausted;
using search::SearchBudget;

// Bad invocation parameters: out-of-range sweeps, malformed specs, unusable
// input files. The CLI maps this to exit code 64.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

enum class Command {
  verify_theorem,
  verify_lemmas,
  verify_corollaries,
  verify_remark,
  chromatic,
  enumerate_partitions,
  classify,
};

inline std::string command_name(Command c) {
  switch (c) {
    case Command::verify_theorem: return "verify-theorem";
    case Command::verify_lemmas: return "verify-lemmas";
    case Command::verify_corollaries: return "verify-corollaries";
    case Command::verify_remark: return "verify-remark";
    case Command::chromatic: return "chromatic";
    case Command::enumerate_partitions: return "enumerate";
    case Command::classify: return "classify";
  }
  return "?";
}

struct CampaignConfig {
  Command command = Command::verify_theorem;
  int n_lo = 0, n_hi = 0;
  int k = 2;  // chromatic only
  SearchBudget budget;
  int parallelism = 1;
  std::string hosts = "default";        // verify-lemmas
  bool self_test = false;               // verify-lemmas
  bool exhaustive_cross_check = false;  // verify-corollaries
  std::string host;                     // enumerate
  int size = -1;                        // enumerate
  std::string coloring_path;            // classify
  std::string partition_path;           // classify
};

struct CellVerdict {
  std::string cell;
  std::string status = "pass";  // pass / fail / inconclusive
  std::string detail;
  long long partitions = 0;  // partitions enumerated in this cell
  long long witnesses = 0;   // witnesses or certificates checked
  long long mirrored = 0;    // bipartite extractions that used the mirrored form
  nlohmann::ordered_json counterexample;  // replayable payload, null unless fail

  void fail(std::string why, nlohmann::ordered_json evidence = nlohmann::ordered_json()) {
    status = "fail";
    detail = std::move(why);
    counterexample = std::move(evidence);
  }

  // Budget ran out before the cell could decide; never downgrades a fail.
  void undecided(std::string why) {
    if (status == "fail") return;
    status = "inconclusive";
    detail = std::move(why);
  }
};

struct CampaignReport {
  std::string command;
  std::vector<CellVerdict> cells;
  double wall_ms = 0;

  long long count(const std::string& status) const {
    long long c = 0;
    for (const CellVerdict& v : cells)
      if (v.status == status) ++c;
    return c;
  }
  long long partitions_total() const {
    long long c = 0;
    for (const CellVerdict& v : cells) c += v.partitions;
    return c;
  }
  long long witnesses_total() const {
    long long c = 0;
    for (const CellVerdict& v : cells) c += v.witnesses;
    return c;
  }
  std::string overall_status() const {
    if (count("fail") > 0) return "fail";
    if (count("inconclusive") > 0) return "inconclusive";
    return "pass";
  }
  int exit_code() const {
    std::string s = overall_status();
    return s == "pass" ? 0 : s == "fail" ? 1 : 2;
  }
};

// One JSON object per cell, then a summary object. Timing lives only in the
// summary so everything else is reproducible byte for byte.
inline void write_report(std::ostream& out, const CampaignReport& r) {
  for (const CellVerdict& c : r.cells) {
    nlohmann::ordered_json line{{"type", "cell"},         {"cell", c.cell},
                        {"status", c.status},     {"detail", c.detail},
                        {"partitions", c.partitions}, {"witnesses", c.witnesses}};
    if (c.mirrored > 0) line["mirrored"] = c.mirrored;
    if (!c.counterexample.is_null()) line["counterexample"] = c.counterexample;
    out << line.dump() << "\n";
  }
  nlohmann::ordered_json summary{{"type", "summary"},
                         {"schema", 1},
                         {"command", r.command},
                         {"overall_status", r.overall_status()},
                         {"cells", static_cast<long long>(r.cells.size())},
                         {"pass", r.count("pass")},
                         {"fail", r.count("fail")},
                         {"inconclusive", r.count("inconclusive")},
                         {"partitions_total", r.partitions_total()},
                         {"witnesses_total", r.witnesses_total()},
                         {"wall_ms", r.wall_ms}};
  out << summary.dump() << "\n";
}

namespace detail {

struct WallTimer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
  }
};

// Cells are independent; workers pull indices from a counter and write only
// their own slot, so the report is identical at any parallelism level.
template <class Fn>
inline void run_cells(int parallelism, std::vector<CellVerdict>& cells, Fn&& body) {
  int count = static_cast<int>(cells.size());
  if (parallelism <= 1 || count <= 1) {
    for (int i = 0; i < count; ++i) body(cells[i], i);
    return;
  }
  std::atomic<int> next{0};
  int workers = std::min(parallelism, count);
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) body(cells[i], i);
      } catch (...) {
        errors[static_cast<std::size_t>(w)] = std::current_exception();
      }
    });
  }
  for (std::thread& t : pool) t.join();
  for (std::exception_ptr& e : errors)
    if (e) std::rethrow_exception(e);
}

inline int parse_small_int(const std::string& t, const std::string& what) {
  if (t.empty() || t.size() > 4 || t.find_first_not_of("0123456789") != std::string::npos) {
    throw UsageError(what + ": expected a small non-negative integer, got '" + t + "'");
  }
  return std::stoi(t);
}

// "3..8" or a single "5".
inline std::pair<int, int> parse_range(const std::string& s, const std::string& what) {
  std::size_t dots = s.find("..");
  if (dots == std::string::npos) {
    int v = parse_small_int(s, what);
    return {v, v};
  }
  return {parse_small_int(s.substr(0, dots), what),
          parse_small_int(s.substr(dots + 2), what)};
}

inline void require_range(int lo, int hi, int cap_lo, int cap_hi, const std::string& what) {
  if (!(cap_lo <= lo && lo <= hi && hi <= cap_hi)) {
    throw UsageError(what + ": need " + std::to_string(cap_lo) + " <= lo <= hi <= " +
                     std::to_string(cap_hi) + ", got " + std::to_string(lo) + ".." +
                     std::to_string(hi));
  }
}

inline std::string host_label(const SimpleGraph& g) {
  std::string s = "v" + std::to_string(g.vertex_count()) + ":";
  bool first = true;
  for (const core::Edge& e : g.edges()) {
    if (!first) s += ",";
    first = false;
    s += std::to_string(e.first) + std::to_string(e.second);
  }
  return s;
}

// Every connected graph on labeled vertex sets {1..2} .. {1..vmax} with at
// least one edge. No isomorphism reduction.
inline std::vector<std::pair<std::string, SimpleGraph>> connected_hosts_up_to(int vmax) {
  if (vmax < 2 || vmax > 6) throw UsageError("hosts all:v supports 2 <= v <= 6");
  std::vector<std::pair<std::string, SimpleGraph>> out;
  for (int v = 2; v <= vmax; ++v) {
    std::vector<core::Edge> full = core::complete_graph(v).edges();
    int m = static_cast<int>(full.size());
    for (std::uint64_t mask = 1; mask < (1ull << m); ++mask) {
      std::vector<core::Edge> edges;
      for (int i = 0; i < m; ++i)
        if ((mask >> i) & 1) edges.push_back(full[static_cast<std::size_t>(i)]);
      SimpleGraph g(v, std::move(edges));
      if (!g.connected()) continue;
      std::string label = host_label(g);
      out.emplace_back(std::move(label), std::move(g));
    }
  }
  return out;
}

inline std::vector<std::pair<std::string, SimpleGraph>> parse_hosts_spec(const std::string& spec) {
  std::vector<std::pair<std::string, SimpleGraph>> out;
  auto add_complete = [&out](int lo, int hi) {
    if (!(3 <= lo && lo <= hi && hi <= 10)) {
      throw UsageError("hosts k:lo..hi needs 3 <= lo <= hi <= 10");
    }
    for (int n = lo; n <= hi; ++n) out.emplace_back("K" + std::to_string(n), core::complete_graph(n));
  };
  if (spec == "default") {
    out = connected_hosts_up_to(5);
    add_complete(6, 7);
    return out;
  }
  if (spec.rfind("k:", 0) == 0) {
    auto [lo, hi] = parse_range(spec.substr(2), "hosts k:");
    add_complete(lo, hi);
    return out;
  }
  if (spec.rfind("all:", 0) == 0) {
    return connected_hosts_up_to(parse_small_int(spec.substr(4), "hosts all:"));
  }
  if (spec.rfind("file:", 0) == 0) {
    std::string path = spec.substr(5);
    std::ifstream in(path);
    if (!in) throw UsageError("hosts file: cannot open '" + path + "'");
    try {
      SimpleGraph g = core::read_graph(in);
      out.emplace_back(path, std::move(g));
    } catch (const std::invalid_argument& e) {
      throw UsageError("hosts file '" + path + "': " + e.what());
    }
    return out;
  }
  throw UsageError("unrecognized hosts spec '" + spec +
                   "' (want k:lo..hi, all:v, file:PATH, or default)");
}

// "k:6" or "file:PATH", a single graph.
inline SimpleGraph parse_single_host(const std::string& spec) {
  if (spec.rfind("k:", 0) == 0) {
    int n = parse_small_int(spec.substr(2), "host k:");
    if (n < 2 || n > 12) throw UsageError("host k:n needs 2 <= n <= 12");
    return core::complete_graph(n);
  }
  if (spec.rfind("file:", 0) == 0) {
    std::string path = spec.substr(5);
    std::ifstream in(path);
    if (!in) throw UsageError("host file: cannot open '" + path + "'");
    try {
      return core::read_graph(in);
    } catch (const std::invalid_argument& e) {
      throw UsageError("host file '" + path + "': " + e.what());
    }
  }
  throw UsageError("unrecognized host spec '" + spec + "' (want k:n or file:PATH)");
}

inline std::vector<std::array<int, 3>> compositions3(int total) {
  std::vector<std::array<int, 3>> out;
  for (int a = 1; a + 2 <= total; ++a)
    for (int b = 1; a + b + 1 <= total; ++b) out.push_back({a, b, total - a - b});
  return out;
}

inline std::string tuple_name(const std::vector<int>& sizes) {
  std::string s = "(";
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(sizes[i]);
  }
  return s + ")";
}

// First minimum partition whose triangle count is not one, for failure
// reports. Null when the budget runs out first.
inline nlohmann::ordered_json first_offending_partition(int n, const SearchBudget& budget) {
  nlohmann::ordered_json out;
  try {
    SimpleGraph host = core::complete_graph(n);
    int min_size = search::min_st_partition_size(host, budget);
    search::enumerate_st_partitions(host, min_size, budget, [&](const STPartition& p) {
      int tri = 0;
      for (const model::STPart& part : p.parts)
        if (part.is_triangle()) ++tri;
      if (tri != 1) {
        out = model::partition_to_json(p);
        return false;
      }
      return true;
    });
  } catch (const BudgetExhausted&) {
  }
  return out;
}

inline nlohmann::ordered_json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  nlohmann::ordered_json j;
  try {
    in >> j;
  } catch (const nlohmann::ordered_json::exception& e) {
    throw UsageError("bad JSON in '" + path + "': " + e.what());
  }
  return j;
}

}  // namespace detail

// For each n: minimum size is n-2, every minimum partition has exactly one
// triangle, and restricting to stars alone costs one extra part.
inline CampaignReport run_verify_theorem(const CampaignConfig& cfg) {
  detail::require_range(cfg.n_lo, cfg.n_hi, 3, 10, "verify-theorem --n");
  detail::WallTimer timer;
  CampaignReport report;
  report.command = "verify-theorem";
  for (int n = cfg.n_lo; n <= cfg.n_hi; ++n) {
    CellVerdict cell;
    cell.cell = "n=" + std::to_string(n);
    report.cells.push_back(std::move(cell));
  }
  detail::run_cells(cfg.parallelism, report.cells, [&cfg](CellVerdict& cell, int idx) {
    int n = cfg.n_lo + idx;
    search::TheoremVerdict v = search::verify_theorem_for(n, cfg.budget);
    cell.partitions = v.optimal_count;
    if (v.status == "fail") {
      cell.fail(v.detail, detail::first_offending_partition(n, cfg.budget));
      return;
    }
    if (v.status == "inconclusive") {
      cell.undecided(v.detail);
      return;
    }
    int star_min = 0;
    try {
      star_min = search::min_star_partition_size(core::complete_graph(n), cfg.budget);
    } catch (const BudgetExhausted&) {
      cell.undecided("star-only minimum undetermined within budget");
      return;
    }
    if (star_min != n - 1) {
      cell.fail("star-only minimum is " + std::to_string(star_min) + ", expected " +
                std::to_string(n - 1));
      return;
    }
    cell.detail = "min size " + std::to_string(v.min_size) + ", " +
                  std::to_string(v.optimal_count) +
                  " minimum partitions, each with exactly one triangle; star-only minimum " +
                  std::to_string(star_min);
  });
  report.wall_ms = timer.ms();
  return report;
}

// Every minimum partition of every host satisfies both structural lemmas:
// at most one vertex per triangle centers a star, and a vertex outside all
// triangles with two or more triangle neighbors centers one.
inline CampaignReport run_verify_lemmas(const CampaignConfig& cfg) {
  std::vector<std::pair<std::string, SimpleGraph>> hosts = detail::parse_hosts_spec(cfg.hosts);
  detail::WallTimer timer;
  CampaignReport report;
  report.command = "verify-lemmas";
  for (const auto& [label, g] : hosts) {
    CellVerdict cell;
    cell.cell = label;
    report.cells.push_back(std::move(cell));
  }
  if (cfg.self_test) {
    CellVerdict cell;
    cell.cell = "self-test";
    report.cells.push_back(std::move(cell));
  }
  detail::run_cells(cfg.parallelism, report.cells, [&cfg, &hosts](CellVerdict& cell, int idx) {
    if (idx == static_cast<int>(hosts.size())) {
      // Corrupted partition: valid exact cover of K_4, but every triangle
      // vertex centers a star and vertex 4 centers none. Both checkers must
      // flag it or they are blind.
      SimpleGraph k4 = core::complete_graph(4);
      STPartition bad{k4,
                      {model::STPart(model::Triangle(1, 2, 3)), model::STPart(model::Star(1, {4})),
                       model::STPart(model::Star(2, {4})), model::STPart(model::Star(3, {4}))}};
      bool tri = !model::check_lemma_min_tri(bad).empty();
      bool tri1 = !model::check_lemma_min_tri1(bad).empty();
      if (tri && tri1) {
        cell.detail = "both checkers flagged the corrupted partition";
        cell.witnesses = 2;
      } else {
        cell.fail(std::string("checker missed the corrupted partition: ") +
                      (tri ? "" : "min-tri silent ") + (tri1 ? "" : "min-tri1 silent"),
                  model::partition_to_json(bad));
      }
      return;
    }
    const SimpleGraph& h = hosts[static_cast<std::size_t>(idx)].second;
    int min_size = 0;
    try {
      min_size = search::min_st_partition_size(h, cfg.budget);
    } catch (const BudgetExhausted&) {
      cell.undecided("minimum size undetermined within budget");
      return;
    }
    long long seen = 0;
    std::string why;
    nlohmann::ordered_json evidence;
    search::EnumerationReport rep =
        search::enumerate_st_partitions(h, min_size, cfg.budget, [&](const STPartition& p) {
          ++seen;
          auto tri = model::check_lemma_min_tri(p);
          auto tri1 = model::check_lemma_min_tri1(p);
          if (tri.empty() && tri1.empty()) return true;
          why = tri.empty() ? tri1.front().describe() : tri.front().describe();
          evidence = {{"partition", model::partition_to_json(p)}, {"violation", why}};
          return false;
        });
    cell.partitions = seen;
    if (!why.empty()) {
      cell.fail(why, std::move(evidence));
      return;
    }
    if (!rep.exhausted) {
      cell.undecided("enumeration budget exhausted after " + std::to_string(seen) +
                     " partitions");
      return;
    }
    cell.detail = "minimum size " + std::to_string(min_size) + "; " + std::to_string(seen) +
                  " minimum partitions, no violations";
  });
  report.wall_ms = timer.ms();
  return report;
}

// For every minimum partition of K_n and every size tuple, the extracted
// multipartite witness verifies; an independent search cross-checks
// existence on the first partition of each cell, or on all of them with
// exhaustive_cross_check.
inline CampaignReport run_verify_corollaries(const CampaignConfig& cfg) {
  detail::require_range(cfg.n_lo, cfg.n_hi, 4, 8, "verify-corollaries --n");
  struct PlannedCell {
    int n = 0;
    bool tripartite = false;
    std::vector<int> sizes;
  };
  std::vector<PlannedCell> plan;
  detail::WallTimer timer;
  CampaignReport report;
  report.command = "verify-corollaries";
  for (int n = cfg.n_lo; n <= cfg.n_hi; ++n) {
    for (int l = 0; l <= n - 2; ++l) plan.push_back({n, false, {l, n - 2 - l}});
    if (n >= 6) {
      for (const std::array<int, 3>& t : detail::compositions3(n - 3)) {
        plan.push_back({n, true, {t[0], t[1], t[2]}});
      }
    }
  }
  for (const PlannedCell& pc : plan) {
    CellVerdict cell;
    cell.cell = "n=" + std::to_string(pc.n) + (pc.tripartite ? " tripartite " : " bipartite ") +
                detail::tuple_name(pc.sizes);
    report.cells.push_back(std::move(cell));
  }
  detail::run_cells(cfg.parallelism, report.cells, [&cfg, &plan](CellVerdict& cell, int idx) {
    const PlannedCell& pc = plan[static_cast<std::size_t>(idx)];
    SimpleGraph host = core::complete_graph(pc.n);
    long long seen = 0, checked = 0, crosses = 0;
    std::string why;
    bool cross_undetermined = false;
    nlohmann::ordered_json evidence;
    search::EnumerationReport rep =
        search::enumerate_st_partitions(host, pc.n - 2, cfg.budget, [&](const STPartition& p) {
          ++seen;
          constructions::MultipartiteWitness w =
              pc.tripartite
                  ? constructions::extract_colorful_tripartite(p, pc.sizes[0], pc.sizes[1],
                                                               pc.sizes[2])
                  : constructions::extract_colorful_bipartite(p, pc.sizes[0], pc.sizes[1]);
          if (w.mirrored) ++cell.mirrored;
          Coloring c = model::partition_to_coloring(p);
          constructions::WitnessCheck chk = constructions::verify_colorful_multipartite(c, w);
          ++checked;
          if (!chk.ok) {
            why = chk.violation;
            evidence = {{"partition", model::partition_to_json(p)},
                        {"witness", constructions::witness_to_json(w)},
                        {"violation", chk.violation}};
            return false;
          }
          if (cfg.exhaustive_cross_check || seen == 1) {
            std::vector<int> sizes;
            for (const std::vector<core::KSubset>& side : w.parts)
              if (!side.empty()) sizes.push_back(static_cast<int>(side.size()));
            search::ColorfulSearchResult res =
                search::search_colorful_multipartite(c, sizes, cfg.budget);
            ++crosses;
            if (res.outcome == search::SearchOutcome::none) {
              why = "independent search found no witness for " + detail::tuple_name(sizes);
              evidence = {{"partition", model::partition_to_json(p)},
                          {"witness", constructions::witness_to_json(w)}};
              return false;
            }
            if (res.outcome == search::SearchOutcome::undetermined) cross_undetermined = true;
          }
          return true;
        });
    cell.partitions = seen;
    cell.witnesses = checked;
    if (!why.empty()) {
      cell.fail(why, std::move(evidence));
      return;
    }
    if (!rep.exhausted) {
      cell.undecided("enumeration budget exhausted after " + std::to_string(seen) +
                     " partitions");
      return;
    }
    if (cross_undetermined) {
      cell.undecided("cross-check search budget exhausted");
      return;
    }
    cell.detail = std::to_string(checked) + " witnesses verified, " + std::to_string(crosses) +
                  " cross-checked by search";
  });
  report.wall_ms = timer.ms();
  return report;
}

// The shifted coloring is proper with n-2 classes of which one is not
// star-shaped, admits no colorful cycle, admits no colorful complete
// tripartite graph on n-2 vertices, but does on n-3.
inline CampaignReport run_verify_remark(const CampaignConfig& cfg) {
  detail::require_range(cfg.n_lo, cfg.n_hi, 6, 9, "verify-remark --n");
  struct PlannedCell {
    int n = 0;
    enum class Kind { structure, no_cycle, impossible, existence } kind = Kind::structure;
    std::vector<int> sizes;
  };
  using Kind = PlannedCell::Kind;
  std::vector<PlannedCell> plan;
  detail::WallTimer timer;
  CampaignReport report;
  report.command = "verify-remark";
  for (int n = cfg.n_lo; n <= cfg.n_hi; ++n) {
    plan.push_back({n, Kind::structure, {}});
    plan.push_back({n, Kind::no_cycle, {}});
    for (const std::array<int, 3>& t : detail::compositions3(n - 2)) {
      plan.push_back({n, Kind::impossible, {t[0], t[1], t[2]}});
    }
    plan.push_back({n, Kind::existence, {}});
  }
  for (const PlannedCell& pc : plan) {
    CellVerdict cell;
    std::string what = pc.kind == Kind::structure    ? "structure"
                       : pc.kind == Kind::no_cycle   ? "no-colorful-cycle"
                       : pc.kind == Kind::impossible ? "no-tripartite " + detail::tuple_name(pc.sizes)
                                                     : "tripartite-exists-at-" +
                                                           std::to_string(pc.n - 3);
    cell.cell = "n=" + std::to_string(pc.n) + " " + what;
    report.cells.push_back(std::move(cell));
  }
  detail::run_cells(cfg.parallelism, report.cells, [&cfg, &plan](CellVerdict& cell, int idx) {
    const PlannedCell& pc = plan[static_cast<std::size_t>(idx)];
    constructions::RemarkColoring rc = constructions::remark_coloring(pc.n);
    const Coloring& c = rc.coloring;
    switch (pc.kind) {
      case Kind::structure: {
        model::ProperCheck prop = model::is_proper_coloring(c);
        if (!prop.proper) {
          cell.fail("coloring is improper: " + prop.witness->first.key() + " and " +
                        prop.witness->second.key() + " share a color",
                    model::coloring_to_json(c));
          return;
        }
        if (c.class_count() != pc.n - 2) {
          cell.fail("expected " + std::to_string(pc.n - 2) + " classes, found " +
                        std::to_string(c.class_count()),
                    model::coloring_to_json(c));
          return;
        }
        int odd = model::count_non_star_shaped(c);
        if (odd != 1) {
          cell.fail("expected exactly one non-star-shaped class, found " + std::to_string(odd),
                    model::coloring_to_json(c));
          return;
        }
        cell.witnesses = 3;
        cell.detail = "proper, " + std::to_string(pc.n - 2) +
                      " classes, one non-star-shaped class";
        return;
      }
      case Kind::no_cycle: {
        constructions::CycleCheck chk = constructions::no_colorful_cycle_certificate(c);
        if (!chk.ok) {
          nlohmann::ordered_json cyc(chk.cycle);
          cell.fail("colorful cycle exists",
                    nlohmann::ordered_json{{"cycle", cyc}, {"coloring", model::coloring_to_json(c)}});
          return;
        }
        cell.witnesses = 1;
        cell.detail = "no colorful cycle";
        return;
      }
      case Kind::impossible: {
        search::ColorfulSearchResult res =
            search::search_colorful_multipartite(c, pc.sizes, cfg.budget);
        if (res.outcome == search::SearchOutcome::found) {
          cell.fail("colorful complete tripartite " + detail::tuple_name(pc.sizes) +
                        " exists on " + std::to_string(pc.n - 2) + " vertices",
                    nlohmann::ordered_json{{"witness", constructions::witness_to_json(*res.witness)},
                                   {"coloring", model::coloring_to_json(c)}});
          return;
        }
        if (res.outcome == search::SearchOutcome::undetermined) {
          cell.undecided("search budget exhausted");
          return;
        }
        cell.witnesses = 1;
        cell.detail = "no witness, as required";
        return;
      }
      case Kind::existence: {
        bool any_undetermined = false;
        for (const std::array<int, 3>& t : detail::compositions3(pc.n - 3)) {
          search::ColorfulSearchResult res =
              search::search_colorful_multipartite(c, {t[0], t[1], t[2]}, cfg.budget);
          if (res.outcome == search::SearchOutcome::found) {
            cell.witnesses = 1;
            cell.detail = "witness found for " +
                          detail::tuple_name({t[0], t[1], t[2]}) + " summing to " +
                          std::to_string(pc.n - 3);
            return;
          }
          if (res.outcome == search::SearchOutcome::undetermined) any_undetermined = true;
        }
        if (any_undetermined) {
          cell.undecided("search budget exhausted before any witness was found");
          return;
        }
        cell.fail("no colorful complete tripartite graph on " + std::to_string(pc.n - 3) +
                      " vertices",
                  model::coloring_to_json(c));
        return;
      }
    }
  });
  report.wall_ms = timer.ms();
  return report;
}

// chi(KG(n,k)) = n - 2k + 2, checked against every applicable independent
// route: minimum partition size when k = 2 and n <= 10, branch and bound on
// the Kneser graph itself when it has at most 25 vertices.
inline CampaignReport run_chromatic(const CampaignConfig& cfg) {
  if (cfg.k < 1) throw UsageError("chromatic --k: need k >= 1");
  if (cfg.n_lo > cfg.n_hi || cfg.n_lo < 2 * cfg.k - 1 || cfg.n_hi > 64) {
    throw UsageError("chromatic --n: need 2k-1 <= lo <= hi <= 64");
  }
  for (int n = cfg.n_lo; n <= cfg.n_hi; ++n) {
    bool st_route = cfg.k == 2 && n <= 10;
    bool oracle_route = core::binomial(n, cfg.k) <= 25;
    if (!st_route && !oracle_route) {
      throw UsageError("chromatic: no route applies for n=" + std::to_string(n) +
                       ", k=" + std::to_string(cfg.k) +
                       " (need k=2 with n <= 10, or C(n,k) <= 25)");
    }
  }
  detail::WallTimer timer;
  CampaignReport report;
  report.command = "chromatic";
  for (int n = cfg.n_lo; n <= cfg.n_hi; ++n) {
    CellVerdict cell;
    cell.cell = "n=" + std::to_string(n) + " k=" + std::to_string(cfg.k);
    report.cells.push_back(std::move(cell));
  }
  detail::run_cells(cfg.parallelism, report.cells, [&cfg](CellVerdict& cell, int idx) {
    int n = cfg.n_lo + idx;
    int expected = n - 2 * cfg.k + 2;
    std::string routes = "formula " + std::to_string(expected);
    try {
      if (cfg.k == 2 && n <= 10) {
        int via_parts = search::min_st_partition_size(core::complete_graph(n), cfg.budget);
        ++cell.witnesses;
        routes += "; minimum partition size " + std::to_string(via_parts);
        if (via_parts != expected) {
          cell.fail(routes + " disagree");
          return;
        }
      }
      if (core::binomial(n, cfg.k) <= 25) {
        int via_bb = search::exact_chromatic_number(
            core::kneser_graph(core::KneserDescriptor{n, cfg.k}), cfg.budget);
        ++cell.witnesses;
        routes += "; branch and bound " + std::to_string(via_bb);
        if (via_bb != expected) {
          cell.fail(routes + " disagree");
          return;
        }
      }
    } catch (const BudgetExhausted&) {
      cell.undecided(routes + "; remaining route undetermined within budget");
      return;
    }
    cell.detail = routes;
  });
  report.wall_ms = timer.ms();
  return report;
}

inline CampaignReport run_campaign(const CampaignConfig& cfg) {
  switch (cfg.command) {
    case Command::verify_theorem: return run_verify_theorem(cfg);
    case Command::verify_lemmas: return run_verify_lemmas(cfg);
    case Command::verify_corollaries: return run_verify_corollaries(cfg);
    case Command::verify_remark: return run_verify_remark(cfg);
    case Command::chromatic: return run_chromatic(cfg);
    default: throw UsageError("run_campaign: streaming command, use its own entry point");
  }
}

// Streams one partition per line, then a summary. Exit 0 when the
// enumeration is complete, 2 when the budget cut it short.
inline int run_enumerate(const CampaignConfig& cfg, std::ostream& out) {
  SimpleGraph host = detail::parse_single_host(cfg.host);
  if (cfg.size < 0) throw UsageError("enumerate: need --size >= 0");
  search::EnumerationReport rep =
      search::enumerate_st_partitions(host, cfg.size, cfg.budget, [&out](const STPartition& p) {
        out << model::partition_to_json(p).dump() << "\n";
        return true;
      });
  nlohmann::ordered_json histogram = nlohmann::ordered_json::object();
  for (const auto& [tri, count] : rep.triangle_histogram)
    histogram[std::to_string(tri)] = count;
  nlohmann::ordered_json summary{{"type", "summary"},
                         {"schema", 1},
                         {"command", "enumerate"},
                         {"size", cfg.size},
                         {"partitions", rep.partitions_found},
                         {"triangle_histogram", histogram},
                         {"exhausted", rep.exhausted},
                         {"nodes", rep.nodes}};
  out << summary.dump() << "\n";
  return rep.exhausted ? 0 : 2;
}

// Loads a serialized coloring (or partition), reports structure line by
// line. Exit 1 when the object is not a valid proper object of its kind, so
// embedded counterexamples reproduce their failure here.
inline int run_classify(const CampaignConfig& cfg, std::ostream& out) {
  if (cfg.coloring_path.empty() == cfg.partition_path.empty()) {
    throw UsageError("classify: need exactly one of --coloring or --partition");
  }
  bool ok = true;
  long long lemma_violations = 0;
  std::optional<Coloring> coloring;
  if (!cfg.partition_path.empty()) {
    STPartition p = model::partition_from_json(detail::load_json_file(cfg.partition_path));
    model::ValidationReport val = model::validate_partition(p);
    for (const model::EdgeFault& f : val.faults) {
      out << nlohmann::ordered_json{{"type", "fault"}, {"detail", f.describe()}}.dump() << "\n";
      ok = false;
    }
    if (val.ok()) {
      for (const auto& v : model::check_lemma_min_tri(p)) {
        out << nlohmann::ordered_json{{"type", "lemma-violation"},
                              {"lemma", "min-tri"},
                              {"detail", v.describe()}}
                   .dump()
            << "\n";
        ++lemma_violations;
      }
      for (const auto& v : model::check_lemma_min_tri1(p)) {
        out << nlohmann::ordered_json{{"type", "lemma-violation"},
                              {"lemma", "min-tri1"},
                              {"detail", v.describe()}}
                   .dump()
            << "\n";
        ++lemma_violations;
      }
      if (p.host.is_complete() && p.host.vertex_count() >= 3) {
        coloring = model::partition_to_coloring(p);
      } else {
        out << nlohmann::ordered_json{{"type", "note"},
                              {"detail", "host is not a complete graph on >= 3 vertices; "
                                         "no class view"}}
                   .dump()
            << "\n";
      }
    }
  } else {
    coloring = model::coloring_from_json(detail::load_json_file(cfg.coloring_path));
  }

  int classes = 0, non_star = 0;
  bool proper = true;
  if (coloring) {
    model::ProperCheck prop = model::is_proper_coloring(*coloring);
    proper = prop.proper;
    if (!prop.proper) {
      ok = false;
      out << nlohmann::ordered_json{{"type", "improper"},
                            {"pair", {prop.witness->first.key(), prop.witness->second.key()}}}
                 .dump()
          << "\n";
    }
    classes = coloring->class_count();
    for (const auto& [color, cls] : coloring->classes()) {
      model::Classification kind = model::classify_class(cls);
      nlohmann::ordered_json line{{"type", "class"},
                          {"color", color},
                          {"size", static_cast<long long>(cls.members.size())}};
      if (const auto* star = std::get_if<model::StarShaped>(&kind)) {
        line["kind"] = "star-shaped";
        line["common"] = star->common;
      } else if (std::holds_alternative<model::TriangleClass>(kind)) {
        line["kind"] = "triangle";
        ++non_star;
      } else {
        line["kind"] = "not-intersecting";
        ++non_star;
      }
      out << line.dump() << "\n";
    }
  }
  nlohmann::ordered_json summary{{"type", "summary"},
                         {"schema", 1},
                         {"command", "classify"},
                         {"proper", proper},
                         {"classes", classes},
                         {"non_star_shaped", non_star},
                         {"lemma_violations", lemma_violations},
                         {"overall_status", ok ? "pass" : "fail"}};
  out << summary.dump() << "\n";
  return ok ? 0 : 1;
}

}  // namespace stpart::harness
