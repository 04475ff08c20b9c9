#ifndef CUBIC_TRACEABLE_HPP
#define CUBIC_TRACEABLE_HPP

#include <array>
#include <optional>
#include <string>
#include <variant>

#include "cubic/coloring.hpp"
#include "cubic/graph.hpp"
#include "cubic/matchings.hpp"

namespace cubic {

// Construction trace: every lemma application is asserted as it happens, and
// the branch counters let tests prove that each construction branch ran.
struct PipelineTrace {
  int reroute_kept = 0;     // walk already carries the gamma-chain
  int reroute_swapped = 0;  // suffixes exchanged through the cycle
  int wi_disjoint = 0;      // continuation avoids the beta-chain
  int wi_case1 = 0;         // re-entry edge points toward the chain end
  int wi_case2 = 0;         // re-entry edge points away from it
  std::vector<std::string> lines;

  void note(std::string s) { lines.push_back(std::move(s)); }
};

// Colouring induced by a Hamiltonian path: path edges alternate alpha/beta
// starting with alpha, chords are gamma except one delta edge at each end of
// the path. Everything downstream works in the relabeled view where vertex p
// is the p-th path vertex, so path edge j joins vertices j and j+1 and is
// alpha exactly when j is even.
struct PathColoring {
  Walk path;             // original labels
  EdgeColoring colours;  // original edge ids, alpha/beta/gamma/delta
  Matching m_alpha;      // original edge ids

  CubicGraph relabeled;
  std::vector<int> orig_vertex;    // relabeled vertex -> original vertex
  std::vector<int> pos_of;         // original vertex -> relabeled vertex
  std::vector<int> orig_edge;      // relabeled edge id -> original edge id
  std::vector<int> rel_edge;       // original edge id -> relabeled edge id
  std::vector<Colour> rel_colour;  // by relabeled edge id
  std::vector<int> path_edge_rel;  // j -> relabeled id of edge (j, j+1)
  std::vector<int> path_index_of;  // relabeled edge id -> j, or -1 for chords
  int delta_start = -1;            // relabeled ids of the two delta edges
  int delta_end = -1;

  bool is_alpha(int rel_eid) const { return rel_colour[rel_eid] == Colour::alpha; }
  EdgeSet alpha_edges_of(const Walk& w) const;  // relabeled ids, deduplicated
  Matching to_original(const EdgeSet& rel_edges) const;
  Walk walk_to_original(const Walk& rel_walk) const;
};

// The 2-factor of the alpha matching with path-index bookkeeping. Exactly two
// odd cycles, one holding the first path vertex and one the last.
struct OddPairDecomposition {
  std::vector<Walk> cycles;      // relabeled closed walks
  std::vector<int> cycle_min;    // smallest path-edge index on the cycle
  std::vector<int> cycle_max;    // largest
  std::vector<int> cycle_of;     // relabeled vertex -> cycle index
  int c_first = -1;              // cycle containing vertex 0
  int c_last = -1;               // cycle containing vertex n-1

  bool on_cycle(int cycle, int rel_vertex) const { return cycle_of[rel_vertex] == cycle; }
};

struct GammaSequence {
  std::vector<int> cycles;  // indices into the decomposition, Gamma_1 .. Gamma_h
  int h() const { return int(cycles.size()); }
};

// The auxiliary graph: surviving path edges plus, for each interior sequence
// cycle, two bookkeeping edges that stand for the odd arcs obtained by
// removing that cycle's boundary path edges. Its three path components carry
// the three walks.
struct AuxiliaryGraph {
  struct AdditionalEdge {
    int a = 0, b = 0;   // endpoints (relabeled vertices)
    Walk represents;    // the odd arc, oriented a -> b
    int cycle = -1;     // decomposition cycle index
    bool starts_at_min = false;  // arc endpoint at min, not min+1
  };
  struct HPath {
    std::vector<int> verts;
    // step[i]: >= 0 is a relabeled edge id, -1-k is additional edge k
    std::vector<int> steps;
  };
  std::vector<char> surviving;  // by path-edge index j
  std::vector<AdditionalEdge> additional;
  std::array<HPath, 3> components;  // ordered by left endpoint
};

struct WalkTriple {
  std::array<Walk, 3> walks;  // relabeled labels
  std::array<int, 3> q;       // endpoint on the first odd cycle
  std::array<int, 3> q_prime; // endpoint on the last odd cycle
};

// ----- operations -----

PathColoring color_along_path(const CubicGraph& g, const Walk& hamiltonian_path);

// Either a proper colouring (no odd cycle appeared, the chromatic-index-3
// escape) or the two-odd-cycle decomposition.
std::variant<EdgeColoring, OddPairDecomposition> decompose(const CubicGraph& g, const PathColoring& pc);

GammaSequence gamma_sequence(const PathColoring& pc, const OddPairDecomposition& dec);

AuxiliaryGraph build_auxiliary(const PathColoring& pc, const OddPairDecomposition& dec,
                               const GammaSequence& seq);

WalkTriple derive_walks(const PathColoring& pc, const OddPairDecomposition& dec,
                        const GammaSequence& seq, const AuxiliaryGraph& aux, PipelineTrace* trace = nullptr);

// A walk well-intersects a 2-factor cycle when it misses it entirely or when
// the endpoints of its alpha edges cut the cycle into odd arcs.
bool well_intersects(const PathColoring& pc, const OddPairDecomposition& dec, const Walk& walk,
                     int cycle, std::string* note = nullptr);

// The two arcs of an interior sequence cycle obtained by deleting its min and
// max path edges; first starts at vertex min, second at min+1.
std::pair<Walk, Walk> split_cycle_arcs(const PathColoring& pc, const OddPairDecomposition& dec,
                                       int cycle);

// Arcs are crossing when one of them runs from vertex min to vertex max.
bool is_crossing(const PathColoring& pc, const OddPairDecomposition& dec, int cycle);

// Anchors of one rerouting step through an interior cycle.
struct RerouteAnchors {
  int cycle = -1;        // decomposition cycle index
  int seq_pos = -1;      // position in the gamma sequence
  int x = -1, x_prime = -1;    // first cycle vertices of the two walks
  int y = -1, y_prime = -1;    // endpoints of the max path edge, y on R
  int pos_x_r = -1;            // position of x in R
  int pos_y_r = -1;            // position of y in R
  int pos_x_rp = -1;           // position of x' in R'
  int pos_y_rp = -1;           // position of y' in R'
  bool swapped = false;
};

struct ReroutePair {
  Walk r, r_prime;
  RerouteAnchors anchors;
};

// Reroutes two walks meeting an interior cycle so that R crosses it on a
// gamma-chain ending at one endpoint of the max path edge. Postconditions of
// the construction are asserted before returning.
ReroutePair reroute_pair(const PathColoring& pc, const OddPairDecomposition& dec,
                         const GammaSequence& seq, const Walk& q, const Walk& q_prime, int seq_pos,
                         PipelineTrace& trace);

struct WellIntersectingPair {
  Walk s, s_prime;
  int sigma_r = -1, sigma_rp = -1;    // sequence positions the walks continue to
  int pos_far_r = -1;                 // position in R of the continuation vertex
  int pos_far_rp = -1;
  bool s_ends_on_r = true;            // S reaches R's continuation point (else R's partner's)
};

// Applies the beta-chain case analysis so that S well-intersects the cycle.
WellIntersectingPair make_well_intersecting(const PathColoring& pc, const OddPairDecomposition& dec,
                                            const GammaSequence& seq, const ReroutePair& rr,
                                            PipelineTrace& trace);

// ----- end-to-end -----

struct WalkCertificate {
  Matching m;          // extended matching, original ids
  EdgeSet a;           // its intersection with the alpha matching
  EdgeSet join1, join2;
  Walk s;              // the final walk, original labels
};

struct TraceableWitness {
  Matching m_alpha;
  std::array<WalkCertificate, 3> per_walk;
  PipelineTrace trace;
};

struct TraceableEscape {
  EdgeColoring coloring;
};

struct NotTraceable {};

using TraceableOutcome = std::variant<NotTraceable, TraceableEscape, TraceableWitness>;

// Bundle handed to special_cases and to the CLI.
struct PipelineState {
  PathColoring pc;
  OddPairDecomposition dec;
  GammaSequence seq;
  AuxiliaryGraph aux;
  WalkTriple walks;
};

// Runs the shared front end: Hamiltonian path, path colouring, decomposition,
// sequence, auxiliary graph, walks.
std::variant<NotTraceable, TraceableEscape, PipelineState> prepare_pipeline(
    const CubicGraph& g, long long node_budget = 10000000);

// Full construction: three derived walks, their balanced alpha sets, the
// extended matchings and both joins each, all re-verified.
TraceableOutcome theorem6_pipeline(const CubicGraph& g, long long node_budget = 10000000);

// Same but starting from a prepared state, so traces and fixtures can share
// the front end.
TraceableWitness theorem6_from_state(const CubicGraph& g, const PipelineState& st,
                                     PipelineTrace trace = {});

enum class SpecialCase { two_cycles, three_cycles, non_crossing };

struct SpecialCaseResult {
  SpecialCase which;
  Matching m_alpha;
  std::vector<Matching> matchings;  // 3 for two_cycles, else 2
  PipelineTrace trace;
};

// The Fan-Raspaud specialisations: h == 2, h == 3, or every interior cycle
// non-crossing. Returns nothing when no case applies.
std::optional<SpecialCaseResult> special_cases(const CubicGraph& g, const PipelineState& st);

}  // namespace cubic

#endif
