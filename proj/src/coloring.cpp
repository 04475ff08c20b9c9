#include "cubic/coloring.hpp"

#include "cubic/cuts_joins.hpp"

namespace cubic {

const char* colour_name(Colour c) {
  switch (c) {
    case Colour::alpha: return "alpha";
    case Colour::beta: return "beta";
    case Colour::gamma: return "gamma";
    case Colour::delta: return "delta";
  }
  return "?";
}

bool is_proper_three_coloring(const CubicGraph& g, const EdgeColoring& col) {
  if (int(col.assignment.size()) != g.m()) return false;
  for (int v = 0; v < g.n(); ++v) {
    bool used[3] = {false, false, false};
    for (int e : g.incident_edges(v)) {
      int c = int(col.assignment[e]);
      if (c > 2 || used[c]) return false;
      used[c] = true;
    }
  }
  return true;
}

namespace {

bool colour_rec(const CubicGraph& g, int e, std::vector<Colour>& col, std::vector<std::array<bool, 3>>& used,
                long long& budget) {
  if (--budget < 0) throw error(errc::resource_cap, "colouring node budget exhausted");
  if (e == g.m()) return true;
  auto [u, v] = g.edge(e);
  for (int c = 0; c < 3; ++c) {
    if (used[u][c] || used[v][c]) continue;
    used[u][c] = used[v][c] = true;
    col[e] = Colour(c);
    if (colour_rec(g, e + 1, col, used, budget)) return true;
    used[u][c] = used[v][c] = false;
  }
  return false;
}

}  // namespace

std::optional<EdgeColoring> three_edge_coloring(const CubicGraph& g, long long node_budget) {
  EdgeColoring col;
  col.assignment.assign(g.m(), Colour::alpha);
  std::vector<std::array<bool, 3>> used(g.n(), {false, false, false});
  long long budget = node_budget;
  if (!colour_rec(g, 0, col.assignment, used, budget)) return std::nullopt;
  col.proper = true;
  return col;
}

int chromatic_index(const CubicGraph& g, long long node_budget) {
  return three_edge_coloring(g, node_budget) ? 3 : 4;
}

std::optional<Matching> pm_without_odd_cut(const CubicGraph& g, long long cap) {
  for (const auto& m : enumerate_perfect_matchings(g, cap))
    if (!odd_cut_inside(g, m.edges)) return m;
  return std::nullopt;
}

EdgeColoring coloring_from_pm(const CubicGraph& g, const Matching& m) {
  auto tf = two_factor(g, m);
  for (const auto& cyc : tf.cycles)
    if (cyc.length() & 1)
      throw error(errc::odd_cycle_in_two_factor, "2-factor has an odd cycle");
  EdgeColoring col;
  col.assignment.assign(g.m(), Colour::alpha);
  for (const auto& cyc : tf.cycles) {
    const auto& es = cyc.edges();
    for (int i = 0; i < int(es.size()); ++i)
      col.assignment[es[i]] = (i % 2 == 0) ? Colour::beta : Colour::gamma;
  }
  col.proper = true;
  if (!is_proper_three_coloring(g, col))
    throw error(errc::invariant_violation, "alternating colouring is not proper");
  return col;
}

}  // namespace cubic
