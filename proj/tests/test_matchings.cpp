#include <doctest.h>

#include "cubic/coloring.hpp"
#include "cubic/generators.hpp"
#include "cubic/matchings.hpp"

using namespace cubic;

namespace {

// Independent oracle: A is balanced iff some perfect matching meets M
// exactly in A.
bool balanced_oracle(const CubicGraph& g, const Matching& m, const EdgeSet& a,
                     const std::vector<Matching>& all) {
  for (const auto& mp : all)
    if ((m.edges & mp.edges) == a) return true;
  return false;
}

}  // namespace

TEST_CASE("perfect matching counts: k4, k33, petersen") {
  CHECK(enumerate_perfect_matchings(make_k4()).size() == 3);
  CHECK(enumerate_perfect_matchings(make_k33()).size() == 6);   // permanent of J_3
  CHECK(enumerate_perfect_matchings(make_petersen()).size() == 6);
  CHECK_THROWS_WITH_AS(enumerate_perfect_matchings(make_petersen(), 3),
                       doctest::Contains("ResourceCap"), error);
}

TEST_CASE("enumeration is lexicographic and hosts are stamped") {
  CubicGraph g = make_petersen();
  auto pms = enumerate_perfect_matchings(g);
  for (size_t i = 1; i < pms.size(); ++i)
    CHECK(pms[i - 1].edges.to_vector() < pms[i].edges.to_vector());
  for (const auto& m : pms) {
    CHECK(m.host == g.hash());
    CHECK(is_perfect_matching(g, m.edges));
  }
}

TEST_CASE("two_factor shapes") {
  CubicGraph p = make_petersen();
  for (const auto& m : enumerate_perfect_matchings(p)) {
    TwoFactor tf = two_factor(p, m);
    REQUIRE(tf.cycles.size() == 2);
    CHECK(tf.cycles[0].length() == 5);
    CHECK(tf.cycles[1].length() == 5);
    CHECK(tf.cycles[0].is_closed());
    // Cycles ordered by smallest vertex and rooted there.
    CHECK(tf.cycles[0].front() == 0);
  }

  CubicGraph k4 = make_k4();
  for (const auto& m : enumerate_perfect_matchings(k4)) {
    TwoFactor tf = two_factor(k4, m);
    REQUIRE(tf.cycles.size() == 1);
    CHECK(tf.cycles[0].length() == 4);
  }

  // K33 minus any perfect matching is a single 6-cycle (bipartite, no odd
  // cycles, and simple graphs exclude a 4+2 split).
  CubicGraph k33 = make_k33();
  for (const auto& m : enumerate_perfect_matchings(k33)) {
    TwoFactor tf = two_factor(k33, m);
    REQUIRE(tf.cycles.size() == 1);
    CHECK(tf.cycles[0].length() == 6);
  }

  Matching not_perfect(k4, EdgeSet::of(k4.m(), {0}));
  CHECK_THROWS_WITH_AS(two_factor(k4, not_perfect), doctest::Contains("NotPerfect"), error);
}

TEST_CASE("two_factor covers all vertices; odd cycle count is even") {
  for (const CubicGraph& g : {make_petersen(), make_prism(5), make_flower_snark(5),
                              make_random_bridgeless(12, 3)}) {
    for (const auto& m : enumerate_perfect_matchings(g)) {
      TwoFactor tf = two_factor(g, m);
      int verts = 0;
      for (const auto& c : tf.cycles) {
        CHECK(c.length() >= 3);
        verts += c.length();
      }
      CHECK(verts == g.n());
      CHECK(tf.odd_cycle_count() % 2 == 0);
    }
  }
}

TEST_CASE("oddness") {
  CHECK(oddness(make_k4()) == 0);
  CHECK(oddness(make_petersen()) == 2);
  CHECK(oddness(make_flower_snark(5)) == 2);
}

TEST_CASE("balanced subsets on the petersen graph") {
  CubicGraph p = make_petersen();
  auto pms = enumerate_perfect_matchings(p);
  const Matching& m = pms[0];

  // The empty set is balanced iff every 2-factor cycle is even; both
  // petersen cycles are odd.
  CHECK_FALSE(is_balanced(p, m, EdgeSet(p.m())));

  // Any single matching edge is balanced: the other matching through that
  // edge meets M exactly there (pairwise intersections have size one).
  auto edges = m.edges.to_vector();
  CHECK(is_balanced(p, m, EdgeSet::of(p.m(), {edges[0]})));

  // No 3-subset is balanced: pairwise intersections never reach size 3.
  bool any3 = false;
  for (int i = 0; i < 5 && !any3; ++i)
    for (int j = i + 1; j < 5 && !any3; ++j)
      for (int k = j + 1; k < 5 && !any3; ++k)
        any3 = is_balanced(p, m, EdgeSet::of(p.m(), {edges[i], edges[j], edges[k]}));
  CHECK_FALSE(any3);

  // A = M is balanced with witness M itself.
  CHECK(is_balanced(p, m, m.edges));
  CHECK(extend_balanced(p, m, m.edges) == m);

  EdgeSet not_subset = EdgeSet::of(p.m(), {edges[0] == 0 ? 1 : 0});
  not_subset = not_subset - m.edges;
  if (!not_subset.empty())
    CHECK_THROWS_WITH_AS(is_balanced(p, m, not_subset), doctest::Contains("NotSubset"), error);
}

TEST_CASE("balanced empty set on colourable graphs") {
  // prism 2-factors: with the rung matching both triangles stay, which is
  // unbalanced; the oracle agrees case by case.
  for (const CubicGraph& g : {make_k4(), make_prism(4), make_k33()}) {
    auto pms = enumerate_perfect_matchings(g);
    for (const auto& m : pms) {
      bool even_cycles = two_factor(g, m).odd_cycle_count() == 0;
      CHECK(is_balanced(g, m, EdgeSet(g.m())) == even_cycles);
    }
  }
}

TEST_CASE("balanced oracle equivalence at small orders") {
  for (const CubicGraph& g :
       {make_k4(), make_k33(), make_prism(3), make_prism(4), make_petersen(),
        make_random_bridgeless(8, 11)}) {
    auto pms = enumerate_perfect_matchings(g);
    for (const auto& m : pms) {
      auto medges = m.edges.to_vector();
      int k = int(medges.size());
      for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
        EdgeSet a(g.m());
        for (int i = 0; i < k; ++i)
          if (mask & (1u << i)) a.add(medges[i]);
        CHECK(is_balanced(g, m, a) == balanced_oracle(g, m, a, pms));
      }
    }
  }
}

TEST_CASE("extend_balanced postconditions") {
  for (const CubicGraph& g : {make_petersen(), make_prism(4), make_random_bridgeless(10, 2)}) {
    auto pms = enumerate_perfect_matchings(g);
    for (const auto& m : pms) {
      auto medges = m.edges.to_vector();
      int k = int(medges.size());
      for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
        EdgeSet a(g.m());
        for (int i = 0; i < k; ++i)
          if (mask & (1u << i)) a.add(medges[i]);
        if (!is_balanced(g, m, a)) continue;
        Matching mp = extend_balanced(g, m, a);
        CHECK(is_perfect_matching(g, mp.edges));
        CHECK((m.edges & mp.edges) == a);
        // The definition is symmetric in the witness.
        CHECK(is_balanced(g, mp, a));
      }
    }
  }
  CubicGraph p = make_petersen();
  auto pms = enumerate_perfect_matchings(p);
  CHECK_THROWS_WITH_AS(
      extend_balanced(p, pms[0], EdgeSet::of(p.m(), {pms[0].edges.to_vector()[0],
                                                     pms[0].edges.to_vector()[1]})),
      doctest::Contains("NotBalanced"), error);
}

TEST_CASE("fan-raspaud triples") {
  // K4: the three colour classes are pairwise disjoint.
  CubicGraph k4 = make_k4();
  auto t = fan_raspaud_search(k4);
  REQUIRE(t.has_value());
  CHECK((t->m1.edges & t->m2.edges).empty());
  CHECK((t->m1.edges & t->m3.edges).empty());
  CHECK((t->m2.edges & t->m3.edges).empty());

  CubicGraph p = make_petersen();
  auto tp = fan_raspaud_search(p);
  REQUIRE(tp.has_value());
  CHECK((tp->m1.edges & tp->m2.edges & tp->m3.edges).empty());
  for (const auto& m : {tp->m1, tp->m2, tp->m3}) CHECK(is_perfect_matching(p, m.edges));

  // No pair of distinct petersen matchings is disjoint: every pair meets in
  // exactly one edge, and each edge lies in exactly two matchings.
  auto pms = enumerate_perfect_matchings(p);
  std::vector<int> edge_cover(p.m(), 0);
  for (size_t i = 0; i < pms.size(); ++i) {
    pms[i].edges.for_each([&](int e) { ++edge_cover[e]; });
    for (size_t j = i + 1; j < pms.size(); ++j)
      CHECK((pms[i].edges & pms[j].edges).count() == 1);
  }
  for (int e = 0; e < p.m(); ++e) CHECK(edge_cover[e] == 2);
}
