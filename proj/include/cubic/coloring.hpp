#ifndef CUBIC_COLORING_HPP
#define CUBIC_COLORING_HPP

#include <array>
#include <optional>

#include "cubic/graph.hpp"
#include "cubic/matchings.hpp"

namespace cubic {

// Edge colours. Proper 3-edge-colourings use alpha/beta/gamma; the path
// colouring of the traceable pipeline adds delta.
enum class Colour : std::uint8_t { alpha = 0, beta = 1, gamma = 2, delta = 3 };

const char* colour_name(Colour c);

struct EdgeColoring {
  std::vector<Colour> assignment;  // indexed by edge id
  bool proper = false;

  Colour at(int e) const { return assignment[e]; }
  EdgeSet colour_class(int edge_universe, Colour c) const {
    EdgeSet s(edge_universe);
    for (int e = 0; e < int(assignment.size()); ++e)
      if (assignment[e] == c) s.add(e);
    return s;
  }
  // The three classes of a proper colouring, alpha/beta/gamma order.
  std::array<EdgeSet, 3> classes(const CubicGraph& g) const {
    return {colour_class(g.m(), Colour::alpha), colour_class(g.m(), Colour::beta),
            colour_class(g.m(), Colour::gamma)};
  }
};

bool is_proper_three_coloring(const CubicGraph& g, const EdgeColoring& col);

// Deterministic backtracking over edges in identifier order, colours tried
// alpha < beta < gamma. Returns nullopt only after completing the search.
std::optional<EdgeColoring> three_edge_coloring(const CubicGraph& g, long long node_budget = 50000000);

// 3 or 4; cubic graphs admit nothing else.
int chromatic_index(const CubicGraph& g, long long node_budget = 50000000);

// First perfect matching (enumeration order) containing no odd edge cut.
std::optional<Matching> pm_without_odd_cut(const CubicGraph& g, long long cap = 10000000);

// Proper colouring with alpha = M and beta/gamma alternating around the even
// cycles of G_M, beta first at each cycle's start.
EdgeColoring coloring_from_pm(const CubicGraph& g, const Matching& m);

}  // namespace cubic

#endif
