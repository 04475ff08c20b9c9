#ifndef CUBIC_FRACTIONAL_HPP
#define CUBIC_FRACTIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <functional>
#include <optional>

#include "cubic/cuts_joins.hpp"
#include "cubic/graph.hpp"
#include "cubic/matchings.hpp"

namespace cubic {

// All weight arithmetic is exact; tightness tests are equality tests.
using Rational = boost::multiprecision::cpp_rational;

struct FractionalWeights {
  std::vector<Rational> w;  // per edge
  std::uint64_t host = 0;

  FractionalWeights() = default;
  FractionalWeights(const CubicGraph& g, std::vector<Rational> weights)
      : w(std::move(weights)), host(g.hash()) {}

  // Two-valued pattern: one weight on a matching, another off it.
  static FractionalWeights two_valued(const CubicGraph& g, const Matching& m, const Rational& on,
                                      const Rational& off);
  static FractionalWeights uniform(const CubicGraph& g, const Rational& value);

  Rational total(const EdgeSet& a) const;
};

struct ObjectiveVector {
  std::vector<Rational> c;

  static ObjectiveVector ones(const CubicGraph& g);
  // 1 - indicator(M): scalar product with a matching counts edges off M.
  static ObjectiveVector ones_minus(const CubicGraph& g, const Matching& m);

  Rational dot(const EdgeSet& a) const;
  Rational dot(const FractionalWeights& w) const;
};

// For orders beyond the odd-set enumeration cap, the caller may vouch for the
// odd-cut structure instead: every odd cut with more than one vertex on each
// side has at least `special_size` edges, and those with exactly
// `special_size` edges carry at most `matching_cap_at_special` edges of the
// pattern matching. Only valid together with a two-valued weight vector.
struct CutStructureCertificate {
  Matching pattern;
  int special_size = 0;
  int matching_cap_at_special = 0;
};

// The three defining conditions: 0 <= w(e) <= 1, unit vertex stars, and
// w(delta X) >= 1 for every odd X. Odd sets are enumerated over connected X
// only (an odd X always has an odd connected component with a lighter
// boundary), or discharged analytically from a structure certificate.
bool is_fractional_pm(const CubicGraph& g, const FractionalWeights& w, int oddset_cap = 16,
                      const CutStructureCertificate* certificate = nullptr);

// Perfect matching maximizing c against w's polytope membership guarantee:
// the result respects |M & C| = 1 on every tight cut and satisfies
// c.chi(M) >= c.w. Tie-break: first maximizer in enumeration order.
Matching polytope_select(const CubicGraph& g, const FractionalWeights& w, const ObjectiveVector& c,
                         int oddset_cap = 16, long long matching_cap = 10000000);

struct Theorem3Report {
  bool m_found = false;        // a matching meeting every 3-cut once exists
  Matching m, m_prime;
  EdgeSet intersection;
  int intersection_size = 0;
  Rational bound;              // n/10
  bool bound_ok = false;       // |M & M'| <= floor(n/10)
  bool no_odd_cut = false;     // intersection contains no odd edge cut
  std::vector<EdgeSet> three_cuts;  // all minimal odd cuts of size 3
};

// Small-order bound: pick M meeting all 3-cuts in one edge, pick M' with the
// smallest intersection, check the n/10 bound and that nothing odd survives
// inside the intersection. Violations are reported, never thrown.
Theorem3Report theorem3_check(const CubicGraph& g, long long cap = 10000000);

struct BoundReport {
  bool applicable = false;     // cyclic edge connectivity is a finite k >= 3
  int k = 0;
  int s = 0;                   // 2*floor(k/2) + 3
  Rational pair_bound;         // n / (2s)
  Rational secondary_bound;    // n / (2(s-2))
  bool alternative1 = false;   // some pair has |M & M'| <= n/(2s)
  bool alternative2 = false;   // every M fully contains an odd cut of size s-2
  int min_pair_intersection = -1;
  std::optional<std::pair<int, int>> alt1_pair;  // indices into enumeration order
  std::optional<CutCertificate> alt2_example;    // cut inside the first matching
  bool theorem5_applies = false;  // k >= 4 and n below 2s(s-2)
  bool ms_witness_found = false;
  bool dichotomy_ok = false;   // at least one alternative holds
};

// Checks the cyclic-connectivity dichotomy by enumeration and, when the
// order is small enough for the k >= 4 consequence, that an MS witness
// exists.
BoundReport theorem45_check(const CubicGraph& g, long long cap = 10000000,
                            long long cycle_cap = 1000000);

// ----- enumeration helpers (shared with tests) -----

// Connected induced subgraphs, each visited once, deterministic order.
void for_each_connected_subset(const CubicGraph& g, const std::function<void(const VertexSet&)>& f);

// Minimal odd cuts of exactly `size` edges, by full odd-subset scan
// (feasible for n <= 24; in a bridgeless cubic graph size-3 boundaries are
// automatically minimal).
std::vector<EdgeSet> minimal_odd_cuts_of_size(const CubicGraph& g, int size);

// Odd cuts fully contained in a perfect matching: their vertex sides are
// exactly odd unions of 2-factor cycles; minimal ones have connected sides.
std::optional<CutCertificate> odd_cut_inside_matching_of_size(const CubicGraph& g, const Matching& m,
                                                              int size);

}  // namespace cubic

#endif
