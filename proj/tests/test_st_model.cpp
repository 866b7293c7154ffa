#include <catch2/catch_amalgamated.hpp>

#include "stpart/coloring.hpp"
#include "stpart/enumerate.hpp"
#include "stpart/st_partition.hpp"
#include "support/oracles.hpp"

using namespace stpart::core;
namespace testing = stpart::testing;
using namespace stpart::model;
using namespace stpart::search;

TEST_CASE("part construction invariants") {
  REQUIRE_THROWS_AS(Star(1, {}), std::invalid_argument);
  REQUIRE_THROWS_AS(Star(1, {1, 2}), std::invalid_argument);
  REQUIRE_THROWS_AS(Star(1, {2, 2}), std::invalid_argument);
  REQUIRE_THROWS_AS(Triangle(1, 1, 2), std::invalid_argument);
  REQUIRE(Triangle(3, 1, 2).vertices == std::array<int, 3>{1, 2, 3});
  REQUIRE(STPart(Star(4, {1, 3, 2})).edges() ==
          std::vector<Edge>{{1, 4}, {2, 4}, {3, 4}});
  REQUIRE(STPart(Triangle(1, 2, 3)).edges() == std::vector<Edge>{{1, 2}, {1, 3}, {2, 3}});
}

TEST_CASE("validate_partition reports exact-cover faults") {
  SimpleGraph k3 = complete_graph(3);
  SECTION("exact cover is ok") {
    REQUIRE(validate_partition({k3, {Triangle(1, 2, 3)}}).ok());
  }
  SECTION("uncovered edge") {
    auto r = validate_partition({k3, {Star(1, {2, 3})}});
    REQUIRE_FALSE(r.ok());
    REQUIRE(r.faults.size() == 1);
    REQUIRE(r.faults[0].kind == EdgeFault::Kind::uncovered);
    REQUIRE(r.faults[0].edge == Edge{2, 3});
  }
  SECTION("doubly covered edge") {
    auto r = validate_partition({k3, {Triangle(1, 2, 3), Star(1, {2})}});
    REQUIRE_FALSE(r.ok());
    REQUIRE(r.faults.size() == 1);
    REQUIRE(r.faults[0].kind == EdgeFault::Kind::doubly_covered);
    REQUIRE(r.faults[0].edge == Edge{1, 2});
  }
  SECTION("edge outside host") {
    auto r = validate_partition({SimpleGraph(4, {{1, 2}}), {Star(1, {2, 3})}});
    REQUIRE_FALSE(r.ok());
    REQUIRE(r.faults[0].kind == EdgeFault::Kind::outside_host);
  }
}

TEST_CASE("classify_class on 2-subset families") {
  auto cls = [](std::vector<KSubset> members) { return ColorClass{std::move(members)}; };

  auto star = classify_class(cls({{1, 2}, {1, 3}, {1, 4}}));
  REQUIRE(std::get<StarShaped>(star).common == std::vector<int>{1});

  REQUIRE(std::holds_alternative<TriangleClass>(classify_class(cls({{1, 2}, {1, 3}, {2, 3}}))));
  REQUIRE(std::holds_alternative<NotIntersecting>(classify_class(cls({{1, 2}, {3, 4}}))));

  // two edges of a triangle form a star, not a triangle
  auto two = classify_class(cls({{1, 2}, {1, 3}}));
  REQUIRE(std::get<StarShaped>(two).common == std::vector<int>{1});

  // a single edge keeps both endpoints as center candidates
  auto single = classify_class(cls({{2, 7}}));
  REQUIRE(std::get<StarShaped>(single).common == std::vector<int>{2, 7});

  REQUIRE_THROWS_AS(classify_class(ColorClass{}), std::invalid_argument);
}

TEST_CASE("is_star_shaped for general k") {
  REQUIRE(is_star_shaped(ColorClass{{KSubset{1, 2, 3}, KSubset{1, 4, 5}}}));
  REQUIRE_FALSE(is_star_shaped(ColorClass{{KSubset{1, 2}, KSubset{1, 3}, KSubset{2, 3}}}));
  REQUIRE(is_star_shaped(ColorClass{{KSubset{2, 7}}}));
  REQUIRE_THROWS_AS(is_star_shaped(ColorClass{}), std::invalid_argument);
}

namespace {

Coloring min_element_coloring(int n) {
  std::map<KSubset, int> assignment;
  for (const KSubset& v : k_subsets(n, 2)) {
    int c = v.elements()[0];
    assignment[v] = std::min(c, n - 1);  // classes min=1..n-1; {n-1,n} joins min=n-1
  }
  return Coloring(KneserDescriptor(n, 2), std::move(assignment));
}

}  // namespace

TEST_CASE("coloring construction and properness") {
  SECTION("partial assignment is rejected") {
    std::map<KSubset, int> partial{{KSubset{1, 2}, 1}};
    REQUIRE_THROWS_AS(Coloring(KneserDescriptor(3, 2), partial), std::invalid_argument);
  }
  SECTION("constant coloring of KG(5,2) is improper with a disjoint witness") {
    std::map<KSubset, int> constant;
    for (const KSubset& v : k_subsets(5, 2)) constant[v] = 1;
    Coloring c(KneserDescriptor(5, 2), constant);
    auto check = is_proper_coloring(c);
    REQUIRE_FALSE(check.proper);
    REQUIRE(check.witness == std::pair{KSubset{1, 2}, KSubset{3, 4}});
  }
  SECTION("min-element coloring is proper") {
    auto check = is_proper_coloring(min_element_coloring(6));
    REQUIRE(check.proper);
    REQUIRE(count_non_star_shaped(min_element_coloring(6)) == 0);
    REQUIRE(min_element_coloring(6).class_count() == 5);
  }
}

TEST_CASE("partition_to_coloring") {
  SECTION("single triangle on K_3") {
    Coloring c = partition_to_coloring({complete_graph(3), {Triangle(1, 2, 3)}});
    REQUIRE(c.class_count() == 1);
    REQUIRE(is_proper_coloring(c).proper);
  }
  SECTION("triangle plus star on K_4 colors the perfect matching KG(4,2)") {
    Coloring c = partition_to_coloring(
        {complete_graph(4), {Triangle(1, 2, 3), Star(4, {1, 2, 3})}});
    REQUIRE(c.class_count() == 2);
    REQUIRE(is_proper_coloring(c).proper);
    REQUIRE(c.color_of(KSubset{1, 2}) == 1);
    REQUIRE(c.color_of(KSubset{1, 4}) == 2);
  }
  SECTION("invalid partition is rejected with the report") {
    STPartition bad{complete_graph(3), {Star(1, {2, 3})}};
    REQUIRE_THROWS_WITH(partition_to_coloring(bad),
                        Catch::Matchers::ContainsSubstring("uncovered"));
  }
  SECTION("non-complete host is rejected") {
    STPartition p{SimpleGraph(3, {{1, 2}, {1, 3}}), {Star(1, {2, 3})}};
    REQUIRE(validate_partition(p).ok());
    REQUIRE_THROWS_AS(partition_to_coloring(p), std::invalid_argument);
  }
}

TEST_CASE("coloring_to_partition") {
  SECTION("forced classes on K_4") {
    std::map<KSubset, int> assignment;
    for (const KSubset& v : k_subsets(4, 2)) assignment[v] = v.contains(4) ? 2 : 1;
    Coloring c(KneserDescriptor(4, 2), assignment);
    STPartition p = coloring_to_partition(c);
    REQUIRE(p.parts.size() == 2);
    REQUIRE(p.parts[0] == STPart(Triangle(1, 2, 3)));
    REQUIRE(p.parts[1] == STPart(Star(4, {1, 2, 3})));
  }
  SECTION("single-edge class picks the minimum as center") {
    Coloring c(KneserDescriptor(2, 2), {{KSubset{1, 2}, 1}});
    STPartition p = coloring_to_partition(c);
    REQUIRE(p.parts.size() == 1);
    REQUIRE(p.parts[0] == STPart(Star(1, {2})));
  }
  SECTION("improper coloring is rejected with the witness pair") {
    std::map<KSubset, int> constant;
    for (const KSubset& v : k_subsets(4, 2)) constant[v] = 1;
    Coloring c(KneserDescriptor(4, 2), constant);
    REQUIRE_THROWS_WITH(coloring_to_partition(c),
                        Catch::Matchers::ContainsSubstring("1,2"));
  }
}

TEST_CASE("round trip preserves part edge sets on enumerated partitions") {
  for (int n = 2; n <= 5; ++n) {
    SimpleGraph host = complete_graph(n);
    for (int size = 1; size <= std::min(5, host.edge_count()); ++size) {
      for (const STPartition& p : all_st_partitions(host, size)) {
        STPartition back = coloring_to_partition(partition_to_coloring(p));
        REQUIRE(testing::canonical_of(back) == testing::canonical_of(p));
      }
    }
  }
}

TEST_CASE("proper colorings of KG(n,2) classify as stars or triangles only") {
  // the correspondence, restated testably on every proper coloring we can build
  for (int n = 4; n <= 6; ++n) {
    Coloring c = min_element_coloring(n);
    for (const auto& [id, cls] : c.classes()) {
      REQUIRE_FALSE(std::holds_alternative<NotIntersecting>(classify_class(cls)));
    }
    REQUIRE(count_non_star_shaped(c) ==
            static_cast<int>(std::count_if(c.classes().begin(), c.classes().end(), [](auto& kv) {
              return std::holds_alternative<TriangleClass>(classify_class(kv.second));
            })));
  }
}

TEST_CASE("normalization renumbers classes by smallest member") {
  std::map<KSubset, int> assignment;
  for (const KSubset& v : k_subsets(4, 2)) assignment[v] = v.contains(4) ? 7 : 9;
  Coloring c(KneserDescriptor(4, 2), assignment);
  Coloring norm = c.normalized();
  REQUIRE(norm.class_count() == 2);
  REQUIRE(norm.color_of(KSubset{1, 2}) == 1);  // class containing {1,2} is lex-first
  REQUIRE(norm.color_of(KSubset{1, 4}) == 2);
  REQUIRE_THROWS_AS(Coloring(KneserDescriptor(4, 2),
                             [] {
                               std::map<KSubset, int> bad;
                               for (const KSubset& v : k_subsets(4, 2)) bad[v] = 0;
                               return bad;
                             }()),
                    std::invalid_argument);
}
