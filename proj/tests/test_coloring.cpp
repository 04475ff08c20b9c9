#include <doctest.h>

#include "cubic/coloring.hpp"
#include "cubic/cuts_joins.hpp"
#include "cubic/generators.hpp"

using namespace cubic;

TEST_CASE("three_edge_coloring") {
  auto k4 = three_edge_coloring(make_k4());
  REQUIRE(k4.has_value());
  CHECK(is_proper_three_coloring(make_k4(), *k4));

  auto prism = three_edge_coloring(make_prism(3));
  REQUIRE(prism.has_value());
  CHECK(is_proper_three_coloring(make_prism(3), *prism));

  CHECK_FALSE(three_edge_coloring(make_petersen()).has_value());
  CHECK_THROWS_WITH_AS(three_edge_coloring(make_petersen(), 10), doctest::Contains("ResourceCap"),
                       error);
}

TEST_CASE("colour classes of a proper colouring partition into perfect matchings") {
  for (const CubicGraph& g : {make_k4(), make_k33(), make_prism(4), make_moebius_ladder(4)}) {
    auto col = three_edge_coloring(g);
    REQUIRE(col.has_value());
    auto classes = col->classes(g);
    int total = 0;
    for (const auto& cls : classes) {
      CHECK(is_perfect_matching(g, cls));
      total += cls.count();
    }
    CHECK(total == g.m());
  }
}

TEST_CASE("chromatic_index") {
  CHECK(chromatic_index(make_k4()) == 3);
  CHECK(chromatic_index(make_petersen()) == 4);
  CHECK(chromatic_index(make_flower_snark(5)) == 4);
  CHECK(chromatic_index(make_generalized_petersen(7, 2)) == 3);
}

TEST_CASE("pm_without_odd_cut") {
  auto k4 = pm_without_odd_cut(make_k4());
  REQUIRE(k4.has_value());

  CHECK_FALSE(pm_without_odd_cut(make_petersen()).has_value());

  auto k33 = pm_without_odd_cut(make_k33());
  REQUIRE(k33.has_value());
  CHECK_FALSE(odd_cut_inside(make_k33(), k33->edges).has_value());
}

TEST_CASE("coloring_from_pm") {
  CubicGraph k4 = make_k4();
  auto m = pm_without_odd_cut(k4);
  REQUIRE(m.has_value());
  EdgeColoring col = coloring_from_pm(k4, *m);
  CHECK(is_proper_three_coloring(k4, col));
  CHECK(col.colour_class(k4.m(), Colour::alpha) == m->edges);

  CubicGraph k33 = make_k33();
  auto m33 = pm_without_odd_cut(k33);
  REQUIRE(m33.has_value());
  EdgeColoring col33 = coloring_from_pm(k33, *m33);
  CHECK(is_proper_three_coloring(k33, col33));
  CHECK(col33.colour_class(k33.m(), Colour::alpha) == m33->edges);

  CubicGraph p = make_petersen();
  auto pm = enumerate_perfect_matchings(p)[0];
  CHECK_THROWS_WITH_AS(coloring_from_pm(p, pm), doctest::Contains("OddCycleInTwoFactor"), error);
}

TEST_CASE("colourability equivalence with odd-cut-free matchings") {
  for (const CubicGraph& g :
       {make_k4(), make_k33(), make_prism(3), make_prism(4), make_moebius_ladder(3),
        make_moebius_ladder(4), make_petersen(), make_generalized_petersen(6, 2),
        make_random_bridgeless(10, 77), make_random_bridgeless(12, 78)}) {
    bool colourable = three_edge_coloring(g).has_value();
    bool pm_exists = pm_without_odd_cut(g).has_value();
    CHECK(colourable == pm_exists);
  }
}
