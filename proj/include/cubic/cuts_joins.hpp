#ifndef CUBIC_CUTS_JOINS_HPP
#define CUBIC_CUTS_JOINS_HPP

#include <optional>
#include <utility>

#include "cubic/graph.hpp"
#include "cubic/matchings.hpp"

namespace cubic {

// An odd edge cut with its witnessing vertex side. `minimal` records that
// both sides induce connected subgraphs.
struct CutCertificate {
  VertexSet x;
  EdgeSet cut;
  bool minimal = false;
};

// A certificate with delta(X) inside S and |X| odd, if one exists. Existence
// reduces to some component of (V, E - S) having odd order; the returned side
// is repaired to a minimal cut by moving to an odd component of the
// complement when needed.
std::optional<CutCertificate> odd_cut_inside(const CubicGraph& g, const EdgeSet& s);

// True when every vertex has odd degree in (V, J); in a cubic graph that is
// the parity-matching condition defining a join.
bool is_join(const CubicGraph& g, const EdgeSet& j);

// A join J with J and S disjoint, if one exists. Equivalent to finding an
// even edge set F containing S: F' inside E - S must repair the odd-degree
// vertices of S, a parity correction solved on a spanning forest of
// (V, E - S). Fails exactly when S contains an odd edge cut.
std::optional<EdgeSet> join_avoiding(const CubicGraph& g, const EdgeSet& s);

struct MsWitness {
  Matching m1, m2;
  EdgeSet intersection;
};

// Pair of perfect matchings whose intersection contains no odd edge cut,
// preferring minimum intersection size; nullopt only after exhausting all
// pairs (a counterexample to the conjecture this searches for).
std::optional<MsWitness> ms_witness(const CubicGraph& g, long long cap = 10000000);

struct KrWitness {
  Matching m1, m2;
  EdgeSet join;
};

// MS pair plus a join avoiding the intersection.
std::optional<KrWitness> kr_witness(const CubicGraph& g, long long cap = 10000000);

}  // namespace cubic

#endif
