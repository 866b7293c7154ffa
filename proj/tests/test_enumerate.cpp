#include <catch2/catch_amalgamated.hpp>

#include "stpart/enumerate.hpp"
#include "support/oracles.hpp"

using namespace stpart::core;
namespace testing = stpart::testing;
using namespace stpart::model;
using namespace stpart::search;

namespace {

std::set<testing::CanonicalPartition> enumerated_canonical(const SimpleGraph& host, int size,
                                                           bool allow_triangles = true) {
  std::set<testing::CanonicalPartition> out;
  enumerate_st_partitions(
      host, size, {},
      [&](const STPartition& p) {
        auto canon = testing::canonical_of(p);
        REQUIRE(out.insert(canon).second);  // no duplicate part-edge-set multisets
        REQUIRE(validate_partition(p).ok());
        return true;
      },
      allow_triangles);
  return out;
}

}  // namespace

TEST_CASE("forced partitions of tiny complete graphs") {
  SECTION("K_3 at size 1 is the single triangle") {
    auto ps = all_st_partitions(complete_graph(3), 1);
    REQUIRE(ps.size() == 1);
    REQUIRE(ps[0].parts[0] == STPart(Triangle(1, 2, 3)));
  }
  SECTION("K_4 at size 2: one triangle plus the star at the omitted vertex") {
    auto ps = all_st_partitions(complete_graph(4), 2);
    REQUIRE(ps.size() == 4);
    for (const STPartition& p : ps) {
      REQUIRE(p.parts.size() == 2);
      int triangles = 0, stars = 0;
      for (const STPart& part : p.parts) part.is_triangle() ? ++triangles : ++stars;
      REQUIRE(triangles == 1);
      REQUIRE(stars == 1);
    }
  }
  SECTION("empty host at size 0 has exactly the empty partition") {
    SimpleGraph empty(3, {});
    long long count = 0;
    auto report = enumerate_st_partitions(empty, 0, {}, [&](const STPartition& p) {
      ++count;
      REQUIRE(p.parts.empty());
      return true;
    });
    REQUIRE(count == 1);
    REQUIRE(report.partitions_found == 1);
    REQUIRE(enumerate_st_partitions(empty, 1, {}, [](auto&) { return true; }).partitions_found ==
            0);
  }
}

TEST_CASE("enumerator agrees with the labeled-assignment oracle") {
  // all graphs on <= 4 vertices, all sizes; the <= 5-edge sweep over
  // 5-vertex hosts runs in the acceptance suite
  for (int n = 2; n <= 4; ++n) {
    SimpleGraph full = complete_graph(n);
    int m = full.edge_count();
    for (int bits = 0; bits < (1 << m); ++bits) {
      std::vector<Edge> edges;
      for (int i = 0; i < m; ++i)
        if ((bits >> i) & 1) edges.push_back(full.edges()[i]);
      SimpleGraph host(n, std::move(edges));
      for (int size = 0; size <= host.edge_count(); ++size) {
        INFO("host bits " << bits << " size " << size);
        REQUIRE(enumerated_canonical(host, size) ==
                testing::brute_force_st_partitions(host, size));
        REQUIRE(enumerated_canonical(host, size, false) ==
                testing::brute_force_st_partitions(host, size, false));
      }
    }
  }
}

TEST_CASE("enumerator agrees with the oracle on a 5-vertex spot check") {
  SimpleGraph host(5, {{1, 2}, {1, 3}, {2, 3}, {2, 4}, {4, 5}});
  for (int size = 1; size <= 5; ++size) {
    REQUIRE(enumerated_canonical(host, size) == testing::brute_force_st_partitions(host, size));
  }
}

TEST_CASE("minimum partition sizes of complete graphs") {
  REQUIRE(min_st_partition_size(complete_graph(3)) == 1);
  REQUIRE(min_st_partition_size(complete_graph(4)) == 2);
  REQUIRE(min_st_partition_size(complete_graph(5)) == 3);
  REQUIRE(min_st_partition_size(complete_graph(6)) == 4);
  REQUIRE_THROWS_AS(min_st_partition_size(SimpleGraph(2, {})), std::invalid_argument);
}

TEST_CASE("minimum star-only partition sizes") {
  REQUIRE(min_star_partition_size(complete_graph(2)) == 1);
  REQUIRE(min_star_partition_size(complete_graph(4)) == 3);
  REQUIRE(min_star_partition_size(complete_graph(6)) == 5);
  // triangles help: strict gap for n >= 4
  for (int n = 4; n <= 6; ++n) {
    REQUIRE(min_star_partition_size(complete_graph(n)) ==
            min_st_partition_size(complete_graph(n)) + 1);
  }
}

TEST_CASE("optimal partition counts and triangle histograms") {
  // counts follow from the forced structure: C(n,3) triangle choices times
  // independent center choices for the off-triangle edges; cross-checked
  // against the assignment oracle for K_4 above
  struct Expected {
    int n;
    long long count;
  };
  for (auto [n, count] : {Expected{3, 1}, Expected{4, 4}, Expected{5, 20}, Expected{6, 160}}) {
    auto report = enumerate_st_partitions(complete_graph(n), n - 2, {},
                                          [](const STPartition&) { return true; });
    REQUIRE(report.partitions_found == count);
    REQUIRE(report.exhausted);
    REQUIRE(report.triangle_histogram == std::map<int, long long>{{1, count}});
  }
}

TEST_CASE("budget limits stop the search without wrong answers") {
  SECTION("node limit marks the report not exhausted") {
    auto report = enumerate_st_partitions(complete_graph(6), 4, {{}, 10, {}},
                                          [](const STPartition&) { return true; });
    REQUIRE_FALSE(report.exhausted);
  }
  SECTION("min size reports undetermined instead of guessing") {
    REQUIRE_THROWS_AS(min_st_partition_size(complete_graph(6), {{}, 10, {}}), BudgetExhausted);
  }
  SECTION("max_parts cap reports undetermined") {
    REQUIRE_THROWS_AS(min_st_partition_size(complete_graph(6), {2, {}, {}}), BudgetExhausted);
  }
}

TEST_CASE("single-threaded determinism") {
  auto run = [] {
    std::vector<testing::CanonicalPartition> seq;
    enumerate_st_partitions(complete_graph(5), 3, {}, [&](const STPartition& p) {
      seq.push_back(testing::canonical_of(p));
      return true;
    });
    return seq;
  };
  REQUIRE(run() == run());
}
