#ifndef CUBIC_MATCHINGS_HPP
#define CUBIC_MATCHINGS_HPP

#include <optional>
#include <vector>

#include "cubic/graph.hpp"

namespace cubic {

// A matching, tied to its host graph by content hash.
struct Matching {
  EdgeSet edges;
  std::uint64_t host = 0;

  Matching() = default;
  Matching(const CubicGraph& g, EdgeSet e) : edges(std::move(e)), host(g.hash()) {}

  bool operator==(const Matching& o) const { return host == o.host && edges == o.edges; }
};

bool is_matching(const CubicGraph& g, const EdgeSet& edges);
bool is_perfect_matching(const CubicGraph& g, const EdgeSet& edges);
void require_host(const CubicGraph& g, const Matching& m);

// The 2-factor left by deleting a perfect matching: vertex-disjoint cycles,
// ordered by smallest contained vertex, each starting at its smallest vertex
// and stepping first to the smaller cycle-neighbor.
struct TwoFactor {
  std::vector<Walk> cycles;  // closed walks, front() == back()
  Matching complement_of;

  int odd_cycle_count() const {
    int c = 0;
    for (const auto& w : cycles) c += w.length() & 1;
    return c;
  }
};

// All perfect matchings, in lexicographic order of their sorted edge lists.
// Backtracks on the lowest-indexed uncovered vertex; throws resource_cap when
// more than `cap` matchings exist.
std::vector<Matching> enumerate_perfect_matchings(const CubicGraph& g, long long cap = 10000000);

TwoFactor two_factor(const CubicGraph& g, const Matching& m);

// Minimum number of odd cycles over all 2-factors; even for every cubic graph.
int oddness(const CubicGraph& g, long long cap = 10000000);

// A <= M is balanced when some perfect matching M' has M & M' == A, i.e. the
// components of G_M minus the vertices of A are odd paths or even cycles.
// An isolated vertex is a zero-edge path, hence even, hence disqualifying.
bool is_balanced(const CubicGraph& g, const Matching& m, const EdgeSet& a);

// Builds that M': A plus a perfect matching of G_M - V(A) drawn from E - M.
Matching extend_balanced(const CubicGraph& g, const Matching& m, const EdgeSet& a);

struct FanRaspaudTriple {
  Matching m1, m2, m3;
};

// Three perfect matchings with empty common intersection. For chromatic
// index 3 the colour classes answer directly; otherwise search each M for two
// disjoint balanced subsets and extend both.
std::optional<FanRaspaudTriple> fan_raspaud_search(const CubicGraph& g, long long cap = 10000000);

}  // namespace cubic

#endif
