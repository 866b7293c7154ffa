#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <set>
#include <variant>

#include "stpart/constructions.hpp"
#include "stpart/enumerate.hpp"
#include "support/oracles.hpp"

using namespace stpart::core;
namespace testing = stpart::testing;
using namespace stpart::model;
using namespace stpart::constructions;
using stpart::search::all_st_partitions;

TEST_CASE("standard coloring is proper with n-2k+2 classes") {
  Coloring c5 = standard_optimal_coloring(5, 2);
  REQUIRE(is_proper_coloring(c5).proper);
  REQUIRE(c5.class_count() == 3);

  Coloring c6 = standard_optimal_coloring(6, 2);
  REQUIRE(is_proper_coloring(c6).proper);
  REQUIRE(c6.class_count() == 4);
  // classes 1..3 share their minimum; the last class, everything in {4,5,6},
  // is a triangle and the only class with empty common intersection
  REQUIRE(count_non_star_shaped(c6) == 1);
  REQUIRE(c6.color_of(KSubset{1, 6}) == 1);
  REQUIRE(c6.color_of(KSubset{3, 4}) == 3);
  REQUIRE(c6.color_of(KSubset{4, 6}) == 4);

  Coloring c3 = standard_optimal_coloring(3, 2);
  REQUIRE(c3.class_count() == 1);
  REQUIRE(std::holds_alternative<TriangleClass>(classify_class(c3.classes().at(1))));

  REQUIRE_THROWS_AS(standard_optimal_coloring(2, 2), std::invalid_argument);
  REQUIRE_THROWS_AS(standard_optimal_coloring(5, 0), std::invalid_argument);

  for (int k = 1; k <= 3; ++k) {
    for (int n = 2 * k - 1; n <= 9; ++n) {
      Coloring c = standard_optimal_coloring(n, k);
      REQUIRE(is_proper_coloring(c).proper);
      REQUIRE(c.class_count() == n - 2 * k + 2);
    }
  }
}

TEST_CASE("remark coloring values and structure") {
  RemarkColoring rc = remark_coloring(6);
  REQUIRE(rc.raw_colors.at(KSubset{1, 2}) == 3);
  REQUIRE(rc.raw_colors.at(KSubset{2, 5}) == 5);
  REQUIRE(rc.raw_colors.at(KSubset{4, 6}) == 4);
  REQUIRE(remark_raw_color(1, 2) == 3);
  REQUIRE(remark_raw_color(2, 5) == 5);
  REQUIRE(remark_raw_color(4, 6) == 4);
  REQUIRE_THROWS_AS(remark_raw_color(3, 3), std::invalid_argument);
  REQUIRE_THROWS_AS(remark_raw_color(5, 2), std::invalid_argument);

  for (const auto& [v, raw] : rc.raw_colors) {
    REQUIRE(rc.coloring.color_of(v) == raw - 2);
  }

  for (int n = 3; n <= 12; ++n) {
    RemarkColoring r = remark_coloring(n);
    REQUIRE(is_proper_coloring(r.coloring).proper);
    REQUIRE(r.coloring.class_count() == n - 2);
    REQUIRE(count_non_star_shaped(r.coloring) == 1);
  }
  REQUIRE_THROWS_AS(remark_coloring(2), std::invalid_argument);
}

TEST_CASE("bipartite extraction on the K_4 example") {
  SimpleGraph k4 = complete_graph(4);
  STPartition p{k4, {STPart(Triangle(1, 2, 3)), STPart(Star(4, {1, 2, 3}))}};
  MultipartiteWitness w = extract_colorful_bipartite(p, 1, 1);
  REQUIRE_FALSE(w.mirrored);
  REQUIRE(w.parts == std::vector<std::vector<KSubset>>{{KSubset{1, 4}}, {KSubset{2, 3}}});
  REQUIRE(verify_colorful_multipartite(partition_to_coloring(p), w).ok);
}

TEST_CASE("degenerate tuples and the mirrored flag") {
  SimpleGraph k5 = complete_graph(5);
  STPartition p{k5,
                {STPart(Triangle(1, 2, 3)), STPart(Star(4, {1, 2, 3})),
                 STPart(Star(5, {1, 2, 3, 4}))}};
  Coloring c = partition_to_coloring(p);

  MultipartiteWitness left = extract_colorful_bipartite(p, 0, 3);
  REQUIRE_FALSE(left.mirrored);
  REQUIRE(left.parts[0].empty());
  REQUIRE(left.parts[1].size() == 3);
  REQUIRE(verify_colorful_multipartite(c, left).ok);

  MultipartiteWitness right = extract_colorful_bipartite(p, 3, 0);
  REQUIRE(right.mirrored);
  REQUIRE(right.parts[0].size() == 3);
  REQUIRE(right.parts[1].empty());
  REQUIRE(verify_colorful_multipartite(c, right).ok);
}

TEST_CASE("extraction parameter errors") {
  SimpleGraph k6 = complete_graph(6);
  STPartition p{k6,
                {STPart(Triangle(1, 2, 3)), STPart(Star(4, {1, 2, 3})),
                 STPart(Star(5, {1, 2, 3, 4})), STPart(Star(6, {1, 2, 3, 4, 5}))}};
  REQUIRE_THROWS_AS(extract_colorful_bipartite(p, 1, 1), std::invalid_argument);
  REQUIRE_THROWS_AS(extract_colorful_bipartite(p, -1, 5), std::invalid_argument);
  REQUIRE_THROWS_AS(extract_colorful_tripartite(p, 0, 1, 2), std::invalid_argument);
  REQUIRE_THROWS_AS(extract_colorful_tripartite(p, 1, 1, 2), std::invalid_argument);

  // not optimal: K_4 in three parts
  SimpleGraph k4 = complete_graph(4);
  STPartition loose{k4, {STPart(Star(1, {2, 3, 4})), STPart(Star(2, {3, 4})), STPart(Star(3, {4}))}};
  REQUIRE_THROWS_AS(extract_colorful_bipartite(loose, 1, 1), std::invalid_argument);

  // invalid cover
  STPartition broken{k4, {STPart(Triangle(1, 2, 3)), STPart(Star(4, {1, 2}))}};
  REQUIRE_THROWS_AS(extract_colorful_bipartite(broken, 1, 1), std::invalid_argument);

  // tripartite needs n >= 6
  SimpleGraph k5 = complete_graph(5);
  STPartition p5{k5,
                 {STPart(Triangle(1, 2, 3)), STPart(Star(4, {1, 2, 3})),
                  STPart(Star(5, {1, 2, 3, 4}))}};
  REQUIRE_THROWS_AS(extract_colorful_tripartite(p5, 1, 1, 0), std::invalid_argument);

  SimpleGraph path(3, {{1, 2}, {2, 3}});
  STPartition not_complete{path, {STPart(Star(2, {1, 3}))}};
  REQUIRE_THROWS_AS(extract_colorful_bipartite(not_complete, 0, 1), std::invalid_argument);
}

TEST_CASE("every optimal partition yields verifying witnesses for every tuple") {
  for (int n = 4; n <= 6; ++n) {
    SimpleGraph host = complete_graph(n);
    for (const STPartition& p : all_st_partitions(host, n - 2)) {
      Coloring c = partition_to_coloring(p);
      for (int l = 0; l <= n - 2; ++l) {
        MultipartiteWitness w = extract_colorful_bipartite(p, l, n - 2 - l);
        REQUIRE(static_cast<int>(w.parts[0].size() + w.parts[1].size()) == n - 2);
        auto chk = verify_colorful_multipartite(c, w);
        INFO("n=" << n << " l=" << l << " " << chk.violation);
        REQUIRE(chk.ok);
      }
      if (n >= 6) {
        for (int a = 1; a + 2 <= n - 3; ++a) {
          for (int b = 1; a + b + 1 <= n - 3; ++b) {
            MultipartiteWitness w = extract_colorful_tripartite(p, a, b, n - 3 - a - b);
            auto chk = verify_colorful_multipartite(c, w);
            INFO("n=" << n << " tuple (" << a << "," << b << "," << (n - 3 - a - b) << ") "
                      << chk.violation);
            REQUIRE(chk.ok);
          }
        }
      }
    }
  }
}

TEST_CASE("witness verification catches violations") {
  SimpleGraph k4 = complete_graph(4);
  STPartition p{k4, {STPart(Triangle(1, 2, 3)), STPart(Star(4, {1, 2, 3}))}};
  Coloring c = partition_to_coloring(p);

  SECTION("color collision") {
    MultipartiteWitness w;
    w.parts = {{KSubset{1, 2}}, {KSubset{1, 3}}};  // both in the triangle class
    auto chk = verify_colorful_multipartite(c, w);
    REQUIRE_FALSE(chk.ok);
    REQUIRE(chk.violation.find("color collision") != std::string::npos);
  }
  SECTION("cross pair not adjacent") {
    MultipartiteWitness w;
    w.parts = {{KSubset{1, 2}}, {KSubset{1, 4}}};  // distinct colors, share vertex 1
    auto chk = verify_colorful_multipartite(c, w);
    REQUIRE_FALSE(chk.ok);
    REQUIRE(chk.violation.find("not adjacent") != std::string::npos);
  }
  SECTION("vertices within one part may collide on nothing") {
    MultipartiteWitness w;
    w.parts = {{KSubset{1, 4}, KSubset{2, 3}}};  // one part, no cross pairs
    REQUIRE(verify_colorful_multipartite(c, w).ok);
  }
}

TEST_CASE("colorful cycle certificate agrees with the brute-force oracle") {
  for (int n = 4; n <= 7; ++n) {
    RemarkColoring rc = remark_coloring(n);
    CycleCheck chk = no_colorful_cycle_certificate(rc.coloring);
    bool oracle = testing::brute_force_has_rainbow_cycle(rc.coloring);
    REQUIRE(chk.ok == !oracle);
    REQUIRE(chk.ok);  // the remark promises none

    Coloring std_c = standard_optimal_coloring(n, 2);
    CycleCheck chk2 = no_colorful_cycle_certificate(std_c);
    REQUIRE(chk2.ok == !testing::brute_force_has_rainbow_cycle(std_c));
  }
}

TEST_CASE("a found colorful cycle is reported as a closed walk") {
  // three vertices, three colors: the one triangle is colorful
  std::map<KSubset, int> tri;
  tri[KSubset{1, 2}] = 1;
  tri[KSubset{1, 3}] = 2;
  tri[KSubset{2, 3}] = 3;
  Coloring c3(KneserDescriptor{3, 2}, tri);
  CycleCheck chk = no_colorful_cycle_certificate(c3);
  REQUIRE_FALSE(chk.ok);
  REQUIRE(chk.cycle.size() == 3);
  std::set<int> used;
  for (std::size_t i = 0; i < chk.cycle.size(); ++i) {
    int u = chk.cycle[i], v = chk.cycle[(i + 1) % chk.cycle.size()];
    REQUIRE(used.insert(c3.color_of(KSubset{std::min(u, v), std::max(u, v)})).second);
  }
}
