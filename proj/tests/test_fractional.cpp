#include <doctest.h>

#include "cubic/fractional.hpp"
#include "cubic/generators.hpp"

using namespace cubic;

namespace {

// Definition-level oracle: every odd subset, no reductions.
bool fractional_oracle(const CubicGraph& g, const FractionalWeights& w) {
  for (int e = 0; e < g.m(); ++e)
    if (w.w[e] < 0 || w.w[e] > 1) return false;
  for (int v = 0; v < g.n(); ++v) {
    Rational s = 0;
    for (int e : g.incident_edges(v)) s += w.w[e];
    if (s != 1) return false;
  }
  for (std::uint32_t mask = 1; mask < (1u << g.n()); ++mask) {
    if (__builtin_popcount(mask) % 2 == 0) continue;
    VertexSet x(g.n());
    for (int v = 0; v < g.n(); ++v)
      if (mask & (1u << v)) x.add(v);
    if (w.total(boundary(g, x)) < 1) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("uniform third weights") {
  for (const CubicGraph& g : {make_k4(), make_petersen(), make_prism(4)}) {
    auto w = FractionalWeights::uniform(g, Rational(1, 3));
    CHECK(is_fractional_pm(g, w));
  }
}

TEST_CASE("matching-complement pattern") {
  CubicGraph k4 = make_k4();
  auto m = enumerate_perfect_matchings(k4)[0];
  auto w = FractionalWeights::two_valued(k4, m, Rational(0), Rational(1, 2));
  CHECK(is_fractional_pm(k4, w));

  // On the petersen graph the matching is itself an odd cut of weight zero.
  CubicGraph p = make_petersen();
  auto mp = enumerate_perfect_matchings(p)[0];
  auto wp = FractionalWeights::two_valued(p, mp, Rational(0), Rational(1, 2));
  CHECK_FALSE(is_fractional_pm(p, wp));
}

TEST_CASE("broken vertex sums are rejected") {
  CubicGraph k4 = make_k4();
  auto w = FractionalWeights::uniform(k4, Rational(1, 2));
  CHECK_FALSE(is_fractional_pm(k4, w));
  auto w2 = FractionalWeights::uniform(k4, Rational(2));
  CHECK_FALSE(is_fractional_pm(k4, w2));
}

TEST_CASE("connected-set reduction agrees with the full scan") {
  for (const CubicGraph& g :
       {make_k4(), make_k33(), make_prism(4), make_petersen(), make_moebius_ladder(5),
        make_random_bridgeless(12, 31)}) {
    auto pms = enumerate_perfect_matchings(g);
    std::vector<FractionalWeights> candidates;
    candidates.push_back(FractionalWeights::uniform(g, Rational(1, 3)));
    candidates.push_back(FractionalWeights::two_valued(g, pms[0], Rational(0), Rational(1, 2)));
    candidates.push_back(FractionalWeights::two_valued(g, pms[0], Rational(1, 5), Rational(2, 5)));
    candidates.push_back(FractionalWeights::two_valued(g, pms[0], Rational(1, 7), Rational(3, 7)));
    for (const auto& w : candidates) CHECK(is_fractional_pm(g, w) == fractional_oracle(g, w));
  }
}

TEST_CASE("certificate path for larger orders") {
  CubicGraph j5 = make_flower_snark(5);
  auto pms = enumerate_perfect_matchings(j5);
  const Matching& m = pms[0];

  auto direct_check = [&](const FractionalWeights& w) {
    for (std::uint32_t mask = 1; mask < (1u << j5.n()); ++mask) {
      int pc = __builtin_popcount(mask);
      if (pc % 2 == 0 || pc > j5.n() / 2) continue;
      VertexSet x(j5.n());
      for (int v = 0; v < j5.n(); ++v)
        if (mask & (1u << v)) x.add(v);
      if (w.total(boundary(j5, x)) < 1) return false;
    }
    return true;
  };

  // Honest certificate from a full odd-subset scan.
  int min_nontrivial = j5.m();
  int cap_at_min = 0;
  for (std::uint32_t mask = 1; mask < (1u << j5.n()); ++mask) {
    int pc = __builtin_popcount(mask);
    if (pc % 2 == 0 || pc > j5.n() / 2 || pc == 1) continue;
    VertexSet x(j5.n());
    for (int v = 0; v < j5.n(); ++v)
      if (mask & (1u << v)) x.add(v);
    EdgeSet cut = boundary(j5, x);
    int size = cut.count();
    int inter = (cut & m.edges).count();
    if (size < min_nontrivial) {
      min_nontrivial = size;
      cap_at_min = inter;
    } else if (size == min_nontrivial) {
      cap_at_min = std::max(cap_at_min, inter);
    }
  }
  CHECK(min_nontrivial == 5);  // the snark is cyclically 5-edge-connected
  CutStructureCertificate cert{m, min_nontrivial, cap_at_min};

  // 1/5 on the matching, 2/5 off: valid whatever the matching contains,
  // since every nontrivial odd cut carries at least five edges.
  auto w5 = FractionalWeights::two_valued(j5, m, Rational(1, 5), Rational(2, 5));
  CHECK_THROWS_WITH_AS(is_fractional_pm(j5, w5), doctest::Contains("TooLarge"), error);
  CHECK(is_fractional_pm(j5, w5, 16, &cert));
  CHECK(direct_check(w5));

  // 1/7 pattern: this matching fully contains an odd 5-cut, so both the
  // certificate route and the direct scan must reject it.
  auto w7 = FractionalWeights::two_valued(j5, m, Rational(1, 7), Rational(3, 7));
  CHECK(is_fractional_pm(j5, w7, 16, &cert) == direct_check(w7));
  CHECK_FALSE(direct_check(w7));
}

TEST_CASE("polytope_select respects the objective guarantee") {
  CubicGraph p = make_petersen();
  auto pms = enumerate_perfect_matchings(p);

  auto w = FractionalWeights::uniform(p, Rational(1, 3));
  auto ones = ObjectiveVector::ones(p);
  Matching any = polytope_select(p, w, ones);
  CHECK(ones.dot(any.edges) == Rational(5));
  CHECK(ones.dot(w) == Rational(5));

  auto c = ObjectiveVector::ones_minus(p, pms[0]);
  Matching off = polytope_select(p, w, c);
  CHECK(c.dot(off.edges) == Rational(4));  // distinct matchings differ in 4 edges
  CHECK(c.dot(off.edges) >= c.dot(w));     // 4 >= 10/3

  CubicGraph k4 = make_k4();
  auto m0 = enumerate_perfect_matchings(k4)[0];
  auto wk = FractionalWeights::two_valued(k4, m0, Rational(0), Rational(1, 2));
  auto ck = ObjectiveVector::ones_minus(k4, m0);
  Matching disj = polytope_select(k4, wk, ck);
  CHECK(ck.dot(disj.edges) == Rational(k4.n() / 2));
  CHECK((disj.edges & m0.edges).empty());
}

TEST_CASE("tight cuts constrain the selection") {
  // With the 0/half pattern the tight cuts include every cut of the even
  // 2-factor side; the selected matching meets each exactly once.
  CubicGraph k33 = make_k33();
  auto m0 = enumerate_perfect_matchings(k33)[0];
  auto w = FractionalWeights::two_valued(k33, m0, Rational(0), Rational(1, 2));
  REQUIRE(is_fractional_pm(k33, w));
  auto c = ObjectiveVector::ones_minus(k33, m0);
  Matching sel = polytope_select(k33, w, c);
  CHECK((sel.edges & m0.edges).empty());
}

TEST_CASE("theorem3_check") {
  CubicGraph p = make_petersen();
  auto rep = theorem3_check(p);
  REQUIRE(rep.m_found);
  CHECK(rep.intersection_size == 1);
  CHECK(rep.bound == Rational(1));
  CHECK(rep.bound_ok);
  CHECK(rep.no_odd_cut);

  CubicGraph k4 = make_k4();
  auto rk = theorem3_check(k4);
  REQUIRE(rk.m_found);
  CHECK(rk.intersection_size == 0);
  CHECK(rk.bound_ok);
  CHECK(rk.no_odd_cut);

  CubicGraph j5 = make_flower_snark(5);
  auto rj = theorem3_check(j5);
  REQUIRE(rj.m_found);
  CHECK(rj.intersection_size <= 2);
  CHECK(rj.bound_ok);
  CHECK(rj.no_odd_cut);
}

TEST_CASE("theorem45_check on the petersen graph") {
  CubicGraph p = make_petersen();
  auto rep = theorem45_check(p);
  REQUIRE(rep.applicable);
  CHECK(rep.k == 5);
  CHECK(rep.s == 7);
  CHECK(rep.pair_bound == Rational(10, 14));
  CHECK(rep.min_pair_intersection == 1);
  CHECK_FALSE(rep.alternative1);  // 1 > 10/14
  CHECK(rep.alternative2);        // every matching contains an odd 5-cut
  REQUIRE(rep.alt2_example.has_value());
  CHECK(rep.alt2_example->cut.count() == 5);
  CHECK(rep.dichotomy_ok);
  CHECK(rep.theorem5_applies);  // k >= 4, threshold 2*7*5 = 70 > 10
  CHECK(rep.ms_witness_found);
}

TEST_CASE("theorem45_check elsewhere") {
  auto rk4 = theorem45_check(make_k4());
  CHECK_FALSE(rk4.applicable);

  // Moebius ladder on 8 vertices is cyclically 4-connected and colourable:
  // the disjoint pair realises alternative 1.
  auto rm = theorem45_check(make_moebius_ladder(4));
  REQUIRE(rm.applicable);
  CHECK(rm.k == 4);
  CHECK(rm.s == 7);
  CHECK(rm.min_pair_intersection == 0);
  CHECK(rm.alternative1);
  CHECK(rm.dichotomy_ok);
  if (rm.theorem5_applies) CHECK(rm.ms_witness_found);
}

TEST_CASE("minimal odd cut scan matches hand counts") {
  // K4: only the four vertex stars.
  auto cuts = minimal_odd_cuts_of_size(make_k4(), 3);
  CHECK(cuts.size() == 4);
  // Petersen: vertex stars only at size 3 (it is cyclically 5-connected).
  auto pcuts = minimal_odd_cuts_of_size(make_petersen(), 3);
  CHECK(pcuts.size() == 10);
  auto p5 = minimal_odd_cuts_of_size(make_petersen(), 5);
  for (const auto& c : p5) CHECK(c.count() == 5);
  CHECK(!p5.empty());
}
