#include <doctest.h>

#include <functional>
#include <set>

#include "cubic/generators.hpp"
#include "cubic/graph.hpp"

using namespace cubic;

namespace {

std::vector<std::pair<int, int>> k4_pairs() {
  return {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
}

// Two K4's with one edge subdivided each, connector vertices joined: cubic
// with exactly one bridge.
CubicGraph bridged_gadget() {
  std::vector<std::pair<int, int>> e = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 4}, {3, 4},
                                        {5, 6}, {5, 7}, {5, 8}, {6, 7}, {6, 8}, {7, 9}, {8, 9},
                                        {4, 9}};
  return CubicGraph::build(10, e);
}

}  // namespace

TEST_CASE("build_graph validates and canonicalizes") {
  CubicGraph g = build_graph(4, k4_pairs());
  CHECK(g.n() == 4);
  CHECK(g.m() == 6);
  for (int e = 1; e < g.m(); ++e) CHECK(g.edge(e - 1) < g.edge(e));

  CubicGraph p = make_petersen();
  CHECK(p.n() == 10);
  CHECK(p.m() == 15);

  auto missing = k4_pairs();
  missing.pop_back();
  CHECK_THROWS_WITH_AS(build_graph(4, missing), doctest::Contains("NotCubic"), error);
  CHECK_THROWS_AS(build_graph(4, {{0, 0}, {0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}}), error);
  CHECK_THROWS_AS(build_graph(5, k4_pairs()), error);
  CHECK_THROWS_WITH_AS(
      build_graph(8, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3},
                      {4, 5}, {4, 6}, {4, 7}, {5, 6}, {5, 7}, {6, 7}}),
      doctest::Contains("Disconnected"), error);
}

TEST_CASE("boundary basics") {
  CubicGraph g = build_graph(4, k4_pairs());
  VertexSet x = VertexSet::of(4, {0});
  EdgeSet b = boundary(g, x);
  CHECK(b.count() == 3);
  for (int e : g.incident_edges(0)) CHECK(b.contains(e));

  CHECK(boundary(g, VertexSet(4)).empty());

  CubicGraph p = make_petersen();
  VertexSet outer = VertexSet::of(10, {0, 1, 2, 3, 4});
  EdgeSet spokes = boundary(p, outer);
  CHECK(spokes.count() == 5);
  for (int i = 0; i < 5; ++i) CHECK(spokes.contains(p.edge_id(i, 5 + i)));
}

TEST_CASE("boundary parity and complement symmetry") {
  for (const CubicGraph& g : {make_petersen(), make_prism(4), make_k33()}) {
    for (std::uint32_t mask = 0; mask < (1u << g.n()); mask += 37) {
      VertexSet x(g.n());
      for (int v = 0; v < g.n(); ++v)
        if (mask & (1u << v)) x.add(v);
      EdgeSet b = boundary(g, x);
      CHECK(b.count() % 2 == x.count() % 2);
      CHECK(boundary(g, x.complement()) == b);
    }
  }
}

TEST_CASE("components_after_removal") {
  CubicGraph g = build_graph(4, k4_pairs());
  auto whole = components_after_removal(g, EdgeSet(g.m()));
  CHECK(whole.size() == 1);
  CHECK(whole[0].vertices.count() == 4);

  EdgeSet pm = EdgeSet::of(g.m(), {g.edge_id(0, 1), g.edge_id(2, 3)});
  auto comps = components_after_removal(g, pm);
  CHECK(comps.size() == 1);
  CHECK(comps[0].edges.size() == 4);

  CubicGraph p = make_petersen();
  EdgeSet spokes(p.m());
  for (int i = 0; i < 5; ++i) spokes.add(p.edge_id(i, 5 + i));
  auto pcomps = components_after_removal(p, spokes);
  REQUIRE(pcomps.size() == 2);
  CHECK(pcomps[0].vertices.count() == 5);
  CHECK(pcomps[1].vertices.count() == 5);
  CHECK(pcomps[0].vertices.contains(0));
}

TEST_CASE("bridges") {
  CHECK(bridges(make_petersen()).empty());
  CHECK(bridges(build_graph(4, k4_pairs())).empty());

  CubicGraph g = bridged_gadget();
  EdgeSet b = bridges(g);
  CHECK(b.count() == 1);
  CHECK(b.contains(g.edge_id(4, 9)));
}

TEST_CASE("bridgeless graphs have every edge on a cycle") {
  for (const CubicGraph& g : {make_petersen(), make_prism(3), make_moebius_ladder(4)}) {
    REQUIRE(bridges(g).empty());
    for (int e = 0; e < g.m(); ++e) {
      EdgeSet removed = EdgeSet::of(g.m(), {e});
      auto comps = components_after_removal(g, removed);
      CHECK(comps.size() == 1);  // endpoints still connected without the edge
    }
  }
}

namespace {

// Exhaustive oracle: smallest cut separating two cycle-containing sides,
// scanning every bipartition.
int cyclic_cut_oracle(const CubicGraph& g) {
  int best = -1;
  for (std::uint32_t mask = 1; mask + 1 < (1u << g.n()); ++mask) {
    VertexSet x(g.n());
    for (int v = 0; v < g.n(); ++v)
      if (mask & (1u << v)) x.add(v);
    if (!has_cycle_within(g, x) || !has_cycle_within(g, x.complement())) continue;
    int c = boundary(g, x).count();
    if (best < 0 || c < best) best = c;
  }
  return best;
}

}  // namespace

TEST_CASE("cyclic edge connectivity") {
  CubicGraph prism3 = make_prism(3);
  CyclicCutWitness w;
  auto prism = cyclic_edge_connectivity(prism3, 1000000, &w);
  REQUIRE(std::holds_alternative<int>(prism));
  CHECK(std::get<int>(prism) == 3);
  CHECK(w.cut.count() == 3);
  CHECK(has_cycle_within(prism3, w.side));
  CHECK(has_cycle_within(prism3, w.side.complement()));

  auto pet = cyclic_edge_connectivity(make_petersen());
  REQUIRE(std::holds_alternative<int>(pet));
  CHECK(std::get<int>(pet) == 5);

  CHECK(std::holds_alternative<Unbounded>(cyclic_edge_connectivity(build_graph(4, k4_pairs()))));
  CHECK(std::holds_alternative<Unbounded>(cyclic_edge_connectivity(make_k33())));

  for (const CubicGraph& g :
       {make_prism(3), make_prism(4), make_moebius_ladder(4), make_petersen(),
        make_generalized_petersen(6, 2), make_random_bridgeless(12, 5)}) {
    auto cc = cyclic_edge_connectivity(g);
    REQUIRE(std::holds_alternative<int>(cc));
    CHECK(std::get<int>(cc) == cyclic_cut_oracle(g));
  }
  CubicGraph p = make_petersen();
  CHECK(std::get<int>(cyclic_edge_connectivity(p)) <= girth(p));
}

TEST_CASE("hamiltonian path search") {
  CubicGraph k4 = build_graph(4, k4_pairs());
  auto hp = find_hamiltonian_path(k4);
  REQUIRE(hp.has_value());
  CHECK(hp->verts() == std::vector<int>{0, 1, 2, 3});

  CubicGraph p = make_petersen();
  auto php = find_hamiltonian_path(p);
  REQUIRE(php.has_value());
  CHECK(php->is_path());
  CHECK(php->length() == 9);

  CHECK_THROWS_WITH_AS(find_hamiltonian_path(p, 5), doctest::Contains("ResourceCap"), error);
}

TEST_CASE("petersen has no hamiltonian cycle") {
  CubicGraph p = make_petersen();
  std::vector<int> order;
  std::vector<char> used(p.n(), 0);
  int closed = 0;
  std::function<void(int)> dfs = [&](int v) {
    order.push_back(v);
    used[v] = 1;
    if (int(order.size()) == p.n()) {
      if (p.adjacent(order.back(), order.front())) ++closed;
    } else {
      for (int u : p.neighbors(v))
        if (!used[u]) dfs(u);
    }
    used[v] = 0;
    order.pop_back();
  };
  dfs(0);  // a hamiltonian cycle would pass through vertex 0
  CHECK(closed == 0);
}

TEST_CASE("walks: order, subwalk, concatenation") {
  CubicGraph g = make_prism(3);  // triangles 012 and 345, rungs i to i+3
  Walk w = Walk::trace(g, {0, 1, 2, 0, 3, 4});
  CHECK(w.length() == 5);
  CHECK_FALSE(w.is_path());
  CHECK(w.precedes(1, 3));
  CHECK_FALSE(w.precedes(3, 1));

  Walk sub = w.subwalk(1, 4);
  CHECK(sub.front() == 1);
  CHECK(sub.back() == 4);
  CHECK(sub.length() == 4);

  Walk a = Walk::trace(g, {0, 1, 4});
  Walk b = Walk::trace(g, {4, 3, 0});
  Walk ab = a.concat(b);
  CHECK(ab.verts() == std::vector<int>{0, 1, 4, 3, 0});
  CHECK(ab.subwalk_pos(0, 2).verts() == a.verts());
  CHECK_THROWS_AS(a.concat(a), error);

  CHECK(w.edge_set(g.m()).count() == 5);
  CHECK(Walk::trace(g, {0, 1}).reversed().verts() == std::vector<int>{1, 0});
}
