#include <catch2/catch_amalgamated.hpp>

#include "stpart/chromatic.hpp"
#include "stpart/colorful_search.hpp"
#include "stpart/constructions.hpp"
#include "stpart/enumerate.hpp"
#include "stpart/theorems.hpp"

using namespace stpart::core;
using namespace stpart::model;
using namespace stpart::search;
using stpart::constructions::remark_coloring;
using stpart::constructions::verify_colorful_multipartite;

TEST_CASE("exact chromatic numbers of known graphs") {
  REQUIRE(exact_chromatic_number(complete_graph(7)) == 7);
  REQUIRE(exact_chromatic_number(SimpleGraph(4, {})) == 1);
  REQUIRE(exact_chromatic_number(SimpleGraph(2, {{1, 2}})) == 2);
  // odd cycle
  REQUIRE(exact_chromatic_number(SimpleGraph(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}})) == 3);
  // Petersen graph, as the Kneser graph KG(5,2)
  REQUIRE(exact_chromatic_number(complement_of_line_graph(complete_graph(5))) == 3);
  REQUIRE(exact_chromatic_number(kneser_graph(KneserDescriptor{5, 2})) == 3);
  REQUIRE(exact_chromatic_number(complement_of_line_graph(complete_graph(7))) == 5);
  REQUIRE(exact_chromatic_number(kneser_graph(KneserDescriptor{6, 3})) == 2);
  REQUIRE_THROWS_AS(exact_chromatic_number(SimpleGraph(0, {})), std::invalid_argument);
}

TEST_CASE("chromatic number of KG(n,2) equals the minimum partition size") {
  for (int n = 3; n <= 7; ++n) {
    int chi = exact_chromatic_number(complement_of_line_graph(complete_graph(n)));
    REQUIRE(chi == n - 2);
    REQUIRE(chi == min_st_partition_size(complete_graph(n)));
  }
}

TEST_CASE("chromatic search respects its budget") {
  SearchBudget tiny;
  tiny.node_limit = 1;
  // the greedy bound already closes complete graphs, so use the Kneser graph
  REQUIRE_THROWS_AS(
      exact_chromatic_number(complement_of_line_graph(complete_graph(7)), tiny),
      BudgetExhausted);
}

TEST_CASE("colorful multipartite search on the remark coloring") {
  Coloring c7 = remark_coloring(7).coloring;  // 5 classes

  SECTION("no witness on n-2 vertices") {
    for (std::vector<int> sizes : {std::vector<int>{1, 2, 2}, {2, 2, 1}, {1, 1, 3}}) {
      auto res = search_colorful_multipartite(c7, sizes);
      REQUIRE(res.outcome == SearchOutcome::none);
      REQUIRE_FALSE(res.witness.has_value());
    }
  }
  SECTION("witness on n-3 vertices, and it verifies") {
    auto res = search_colorful_multipartite(c7, {1, 1, 2});
    REQUIRE(res.outcome == SearchOutcome::found);
    REQUIRE(res.witness.has_value());
    REQUIRE(res.witness->parts.size() == 3);
    REQUIRE(res.witness->parts[0].size() == 1);
    REQUIRE(res.witness->parts[2].size() == 2);
    REQUIRE(verify_colorful_multipartite(c7, *res.witness).ok);
  }
  SECTION("deterministic first witness") {
    auto a = search_colorful_multipartite(c7, {1, 1, 2});
    auto b = search_colorful_multipartite(c7, {1, 1, 2});
    REQUIRE(a.witness->parts == b.witness->parts);
  }
  SECTION("tiny budget is undetermined") {
    SearchBudget tiny;
    tiny.node_limit = 1;
    auto res = search_colorful_multipartite(c7, {1, 2, 2}, tiny);
    REQUIRE(res.outcome == SearchOutcome::undetermined);
  }
  SECTION("parameter validation") {
    REQUIRE_THROWS_AS(search_colorful_multipartite(c7, {}), std::invalid_argument);
    REQUIRE_THROWS_AS(search_colorful_multipartite(c7, {0, 2}), std::invalid_argument);
    REQUIRE_THROWS_AS(search_colorful_multipartite(c7, {3, 3}), std::invalid_argument);
  }
}

TEST_CASE("colorful bipartite witnesses exist in optimal partition colorings") {
  SimpleGraph k6 = complete_graph(6);
  int found = 0;
  for (const STPartition& p : all_st_partitions(k6, 4)) {
    Coloring c = partition_to_coloring(p);
    auto res = search_colorful_multipartite(c, {2, 2});
    REQUIRE(res.outcome == SearchOutcome::found);
    REQUIRE(verify_colorful_multipartite(c, *res.witness).ok);
    ++found;
  }
  REQUIRE(found == 160);
}

TEST_CASE("theorem verdicts") {
  SECTION("small sweep passes with the expected counts") {
    auto verdicts = verify_theorem(3, 6);
    REQUIRE(verdicts.size() == 4);
    long long expected[] = {1, 4, 20, 160};
    for (std::size_t i = 0; i < verdicts.size(); ++i) {
      REQUIRE(verdicts[i].status == "pass");
      REQUIRE(verdicts[i].min_size == verdicts[i].n - 2);
      REQUIRE(verdicts[i].optimal_count == expected[i]);
      REQUIRE(verdicts[i].triangle_histogram ==
              std::map<int, long long>{{1, expected[i]}});
    }
  }
  SECTION("budget exhaustion is inconclusive, not wrong") {
    SearchBudget tiny;
    tiny.node_limit = 3;
    auto v = verify_theorem_for(7, tiny);
    REQUIRE(v.status == "inconclusive");
  }
  SECTION("range validation") {
    REQUIRE_THROWS_AS(verify_theorem_for(2), std::invalid_argument);
    REQUIRE_THROWS_AS(verify_theorem(5, 4), std::invalid_argument);
  }
}

TEST_CASE("proof subgoals") {
  auto goals = verify_case_subgoals();
  REQUIRE(goals.size() == 3);
  for (const auto& g : goals) {
    INFO(g.name << ": " << g.detail);
    REQUIRE(g.pass);
  }
  REQUIRE(goals[0].name == "k6-no-disjoint-triangle-pair");
  REQUIRE(goals[1].name == "k5-no-sharing-triangle-pair");
  REQUIRE(goals[2].name == "triangle-count-equation");
}
