#ifndef CUBIC_GRAPH_HPP
#define CUBIC_GRAPH_HPP

#include <array>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace cubic {

// Error taxonomy shared by all modules. The CLI maps these to exit codes.
enum class errc {
  not_cubic,
  not_simple,
  disconnected,
  not_perfect,
  not_subset,
  not_balanced,
  not_hamiltonian,
  odd_cycle_in_two_factor,
  no_feasible_matching,
  no_perfect_matching,
  malformed_graph6,
  too_large,
  bad_params,
  resource_cap,
  invariant_violation,
  construction_error,
};

const char* errc_name(errc c);

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

// Dense bitset over identifiers 0..universe-1, tagged so vertex sets and
// edge sets are distinct types.
template <class Tag>
class IndexSet {
 public:
  IndexSet() : universe_(0) {}
  explicit IndexSet(int universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}

  static IndexSet full(int universe) {
    IndexSet s(universe);
    for (int i = 0; i < universe; ++i) s.add(i);
    return s;
  }
  static IndexSet of(int universe, std::initializer_list<int> xs) {
    IndexSet s(universe);
    for (int x : xs) s.add(x);
    return s;
  }
  static IndexSet of(int universe, const std::vector<int>& xs) {
    IndexSet s(universe);
    for (int x : xs) s.add(x);
    return s;
  }

  int universe() const { return universe_; }

  void add(int i) {
    check(i);
    words_[i >> 6] |= (std::uint64_t{1} << (i & 63));
  }
  void remove(int i) {
    check(i);
    words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
  }
  bool contains(int i) const {
    if (i < 0 || i >= universe_) return false;
    return (words_[i >> 6] >> (i & 63)) & 1;
  }

  int count() const {
    int c = 0;
    for (auto w : words_) c += __builtin_popcountll(w);
    return c;
  }
  bool empty() const {
    for (auto w : words_) if (w) return false;
    return true;
  }
  bool odd() const { return count() & 1; }

  bool is_subset_of(const IndexSet& o) const {
    same(o);
    for (size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }
  bool intersects(const IndexSet& o) const {
    same(o);
    for (size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }

  IndexSet operator|(const IndexSet& o) const { return zip(o, [](std::uint64_t a, std::uint64_t b) { return a | b; }); }
  IndexSet operator&(const IndexSet& o) const { return zip(o, [](std::uint64_t a, std::uint64_t b) { return a & b; }); }
  IndexSet operator^(const IndexSet& o) const { return zip(o, [](std::uint64_t a, std::uint64_t b) { return a ^ b; }); }
  IndexSet operator-(const IndexSet& o) const { return zip(o, [](std::uint64_t a, std::uint64_t b) { return a & ~b; }); }
  IndexSet complement() const {
    IndexSet r(universe_);
    for (int i = 0; i < universe_; ++i) if (!contains(i)) r.add(i);
    return r;
  }

  bool operator==(const IndexSet& o) const { return universe_ == o.universe_ && words_ == o.words_; }
  bool operator!=(const IndexSet& o) const { return !(*this == o); }
  // Lexicographic on the ascending member list; used for deterministic ordering.
  bool operator<(const IndexSet& o) const { return to_vector() < o.to_vector(); }

  std::vector<int> to_vector() const {
    std::vector<int> v;
    v.reserve(count());
    for (size_t wi = 0; wi < words_.size(); ++wi) {
      std::uint64_t w = words_[wi];
      while (w) {
        int b = __builtin_ctzll(w);
        v.push_back(int(wi * 64 + b));
        w &= w - 1;
      }
    }
    return v;
  }

  template <class F>
  void for_each(F&& f) const {
    for (size_t wi = 0; wi < words_.size(); ++wi) {
      std::uint64_t w = words_[wi];
      while (w) {
        int b = __builtin_ctzll(w);
        f(int(wi * 64 + b));
        w &= w - 1;
      }
    }
  }

 private:
  void check(int i) const {
    if (i < 0 || i >= universe_)
      throw error(errc::bad_params, "index " + std::to_string(i) + " outside universe of size " + std::to_string(universe_));
  }
  void same(const IndexSet& o) const {
    if (universe_ != o.universe_)
      throw error(errc::bad_params, "set universes differ");
  }
  template <class F>
  IndexSet zip(const IndexSet& o, F f) const {
    same(o);
    IndexSet r(universe_);
    for (size_t i = 0; i < words_.size(); ++i) r.words_[i] = f(words_[i], o.words_[i]);
    return r;
  }

  int universe_;
  std::vector<std::uint64_t> words_;
};

struct VertexTag {};
struct EdgeTag {};
using VertexSet = IndexSet<VertexTag>;
using EdgeSet = IndexSet<EdgeTag>;

// Immutable simple connected 3-regular graph. Edge identifiers are dense and
// assigned by sorting endpoint pairs (min,max), so certificates are stable.
class CubicGraph {
 public:
  static CubicGraph build(int n, std::vector<std::pair<int, int>> pairs);

  int n() const { return n_; }
  int m() const { return int(edges_.size()); }
  std::uint64_t hash() const { return hash_; }

  const std::pair<int, int>& edge(int id) const { return edges_[id]; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  // Edge ids at v, ascending.
  const std::array<int, 3>& incident_edges(int v) const { return inc_[v]; }
  // Neighbor across incident_edges(v)[k].
  const std::array<int, 3>& neighbors(int v) const { return adj_[v]; }
  int edge_id(int u, int v) const;  // -1 when absent
  bool adjacent(int u, int v) const { return edge_id(u, v) >= 0; }
  int other_end(int edge_id, int v) const;

  VertexSet vertex_set() const { return VertexSet::full(n_); }
  EdgeSet edge_set() const { return EdgeSet::full(m()); }
  EdgeSet empty_edge_set() const { return EdgeSet(m()); }
  VertexSet empty_vertex_set() const { return VertexSet(n_); }

 private:
  CubicGraph() = default;
  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::array<int, 3>> inc_;
  std::vector<std::array<int, 3>> adj_;
  std::vector<int> eid_;  // n*n lookup table
  std::uint64_t hash_ = 0;
};

// A walk: vertex sequence v0..vl and edge sequence e1..el, vertices and
// edges may repeat. Supports the first-occurrence order, sub-walk
// extraction between first occurrences, and concatenation at a shared
// vertex.
class Walk {
 public:
  Walk() = default;
  explicit Walk(int start) : verts_{start} {}
  Walk(std::vector<int> verts, std::vector<int> edges);

  static Walk trace(const CubicGraph& g, const std::vector<int>& verts);

  int length() const { return int(edges_.size()); }
  int front() const { return verts_.front(); }
  int back() const { return verts_.back(); }
  const std::vector<int>& verts() const { return verts_; }
  const std::vector<int>& edges() const { return edges_; }

  void append_step(const CubicGraph& g, int edge_id);

  std::optional<int> first_pos(int v) const;
  // z precedes t in the order induced by first occurrences.
  bool precedes(int z, int t) const;
  Walk subwalk(int z, int t) const;             // between first occurrences
  Walk subwalk_pos(int i, int j) const;         // inclusive vertex positions
  Walk concat(const Walk& other) const;         // back() must equal other.front()
  Walk reversed() const;

  bool is_path() const;                          // no repeated vertex
  bool is_closed() const { return verts_.size() > 1 && verts_.front() == verts_.back(); }
  bool contains_vertex(int v) const { return first_pos(v).has_value(); }
  bool contains_edge(int e) const;
  EdgeSet edge_set(int edge_universe) const;
  VertexSet vertex_set(int vertex_universe) const;

  void validate(const CubicGraph& g) const;

 private:
  std::vector<int> verts_;
  std::vector<int> edges_;
};

struct Component {
  VertexSet vertices;
  std::vector<int> edges;  // induced edge ids, ascending
};

// ----- graph_core operations -----

CubicGraph build_graph(int n, std::vector<std::pair<int, int>> pairs);

// Set of edges with exactly one end in X.
EdgeSet boundary(const CubicGraph& g, const VertexSet& x);

// Connected components of (V, E - removed), ordered by smallest vertex.
std::vector<Component> components_after_removal(const CubicGraph& g, const EdgeSet& removed);

// Edges whose removal disconnects the graph; empty iff bridgeless.
EdgeSet bridges(const CubicGraph& g);

struct Unbounded {
  bool operator==(const Unbounded&) const { return true; }
};
using CyclicConnectivity = std::variant<int, Unbounded>;

struct CyclicCutWitness {
  int size = 0;
  VertexSet side;   // one cycle-containing side
  EdgeSet cut;
};

// Minimum size of an edge cut separating two cycle-containing components,
// or Unbounded when the graph has no two vertex-disjoint cycles.
// Desk-scale: enumerate chordless cycles (any cycle-containing side of a cut
// contains one), then run max-flow between each vertex-disjoint pair.
CyclicConnectivity cyclic_edge_connectivity(const CubicGraph& g, long long cycle_cap = 1000000,
                                            CyclicCutWitness* witness = nullptr);

// Deterministic depth-first search: start vertices ascending, neighbors
// ascending, first Hamiltonian path returned. Throws resource_cap when the
// node budget is exhausted before the search completes.
std::optional<Walk> find_hamiltonian_path(const CubicGraph& g, long long node_budget = 10000000);

// ----- helpers shared across modules -----

bool is_connected(const CubicGraph& g, const VertexSet& inside);  // induced subgraph connectivity
bool has_cycle_within(const CubicGraph& g, const VertexSet& inside);
int girth(const CubicGraph& g);

// All chordless cycles as vertex sets, deterministic order.
std::vector<VertexSet> chordless_cycles(const CubicGraph& g, long long cap);

// Minimum edge cut separating 'source' from 'sink' (vertex sets contracted),
// computed by augmenting paths on unit capacities. Stops early and returns
// 'limit' when the flow reaches it.
int min_edge_cut_between(const CubicGraph& g, const VertexSet& source, const VertexSet& sink,
                         int limit, EdgeSet* cut_edges = nullptr);

}  // namespace cubic

#endif
