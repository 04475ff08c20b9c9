#include "cubic/graph.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>

namespace cubic {

const char* errc_name(errc c) {
  switch (c) {
    case errc::not_cubic: return "NotCubic";
    case errc::not_simple: return "NotSimple";
    case errc::disconnected: return "Disconnected";
    case errc::not_perfect: return "NotPerfect";
    case errc::not_subset: return "NotSubset";
    case errc::not_balanced: return "NotBalanced";
    case errc::not_hamiltonian: return "NotHamiltonian";
    case errc::odd_cycle_in_two_factor: return "OddCycleInTwoFactor";
    case errc::no_feasible_matching: return "NoFeasibleMatching";
    case errc::no_perfect_matching: return "NoPerfectMatching";
    case errc::malformed_graph6: return "MalformedGraph6";
    case errc::too_large: return "TooLarge";
    case errc::bad_params: return "BadParams";
    case errc::resource_cap: return "ResourceCap";
    case errc::invariant_violation: return "InvariantViolation";
    case errc::construction_error: return "ConstructionError";
  }
  return "UnknownError";
}

CubicGraph CubicGraph::build(int n, std::vector<std::pair<int, int>> pairs) {
  if (n < 4 || n % 2 != 0)
    throw error(errc::not_cubic, "vertex count must be even and at least 4, got " + std::to_string(n));
  for (auto& [u, v] : pairs) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw error(errc::bad_params, "endpoint outside 0.." + std::to_string(n - 1));
    if (u == v) throw error(errc::not_simple, "loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
  }
  std::sort(pairs.begin(), pairs.end());
  for (size_t i = 1; i < pairs.size(); ++i)
    if (pairs[i] == pairs[i - 1])
      throw error(errc::not_simple, "parallel edge " + std::to_string(pairs[i].first) + "-" +
                                        std::to_string(pairs[i].second));

  std::vector<int> deg(n, 0);
  for (auto& [u, v] : pairs) {
    ++deg[u];
    ++deg[v];
  }
  for (int v = 0; v < n; ++v)
    if (deg[v] != 3)
      throw error(errc::not_cubic, "vertex " + std::to_string(v) + " has degree " + std::to_string(deg[v]));

  CubicGraph g;
  g.n_ = n;
  g.edges_ = std::move(pairs);
  g.inc_.assign(n, {-1, -1, -1});
  g.adj_.assign(n, {-1, -1, -1});
  g.eid_.assign(size_t(n) * n, -1);
  std::vector<int> slot(n, 0);
  for (int id = 0; id < int(g.edges_.size()); ++id) {
    auto [u, v] = g.edges_[id];
    g.inc_[u][slot[u]] = id;
    g.adj_[u][slot[u]++] = v;
    g.inc_[v][slot[v]] = id;
    g.adj_[v][slot[v]++] = u;
    g.eid_[size_t(u) * n + v] = id;
    g.eid_[size_t(v) * n + u] = id;
  }
  // Edge list is sorted by endpoints, so each vertex's incident ids ascend,
  // and the matching neighbor lists ascend with them.

  // Connectivity.
  std::vector<char> seen(n, 0);
  std::deque<int> q{0};
  seen[0] = 1;
  int reached = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    for (int w : g.adj_[v])
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        q.push_back(w);
      }
  }
  if (reached != n) throw error(errc::disconnected, "graph is not connected");

  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint64_t x) {
    h ^= x;
    h *= 1099511628211ull;
  };
  mix(std::uint64_t(n));
  for (auto& [u, v] : g.edges_) mix((std::uint64_t(u) << 32) | std::uint64_t(v));
  g.hash_ = h;
  return g;
}

int CubicGraph::edge_id(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) return -1;
  return eid_[size_t(u) * n_ + v];
}

int CubicGraph::other_end(int edge_id, int v) const {
  auto [a, b] = edges_[edge_id];
  if (v == a) return b;
  if (v == b) return a;
  throw error(errc::bad_params, "vertex not on edge");
}

CubicGraph build_graph(int n, std::vector<std::pair<int, int>> pairs) {
  return CubicGraph::build(n, std::move(pairs));
}

// ----- Walk -----

Walk::Walk(std::vector<int> verts, std::vector<int> edges)
    : verts_(std::move(verts)), edges_(std::move(edges)) {
  if (verts_.empty() || edges_.size() + 1 != verts_.size())
    throw error(errc::bad_params, "walk must have one more vertex than edges");
}

Walk Walk::trace(const CubicGraph& g, const std::vector<int>& verts) {
  if (verts.empty()) throw error(errc::bad_params, "empty walk");
  Walk w(verts.front());
  for (size_t i = 1; i < verts.size(); ++i) {
    int e = g.edge_id(verts[i - 1], verts[i]);
    if (e < 0)
      throw error(errc::bad_params, "vertices " + std::to_string(verts[i - 1]) + "," +
                                        std::to_string(verts[i]) + " are not adjacent");
    w.append_step(g, e);
  }
  return w;
}

void Walk::append_step(const CubicGraph& g, int edge_id) {
  int next = g.other_end(edge_id, verts_.back());
  verts_.push_back(next);
  edges_.push_back(edge_id);
}

std::optional<int> Walk::first_pos(int v) const {
  for (size_t i = 0; i < verts_.size(); ++i)
    if (verts_[i] == v) return int(i);
  return std::nullopt;
}

bool Walk::precedes(int z, int t) const {
  auto pz = first_pos(z), pt = first_pos(t);
  if (!pz || !pt) return false;
  return *pz < *pt;
}

Walk Walk::subwalk(int z, int t) const {
  auto pz = first_pos(z), pt = first_pos(t);
  if (!pz || !pt || *pz > *pt)
    throw error(errc::bad_params, "subwalk endpoints not ordered on walk");
  return subwalk_pos(*pz, *pt);
}

Walk Walk::subwalk_pos(int i, int j) const {
  if (i < 0 || j >= int(verts_.size()) || i > j)
    throw error(errc::bad_params, "subwalk positions out of range");
  Walk w;
  w.verts_.assign(verts_.begin() + i, verts_.begin() + j + 1);
  w.edges_.assign(edges_.begin() + i, edges_.begin() + j);
  return w;
}

Walk Walk::concat(const Walk& other) const {
  if (back() != other.front())
    throw error(errc::bad_params, "concatenation requires a shared vertex");
  Walk w = *this;
  w.verts_.insert(w.verts_.end(), other.verts_.begin() + 1, other.verts_.end());
  w.edges_.insert(w.edges_.end(), other.edges_.begin(), other.edges_.end());
  return w;
}

Walk Walk::reversed() const {
  Walk w = *this;
  std::reverse(w.verts_.begin(), w.verts_.end());
  std::reverse(w.edges_.begin(), w.edges_.end());
  return w;
}

bool Walk::is_path() const {
  std::vector<int> v = verts_;
  std::sort(v.begin(), v.end());
  return std::adjacent_find(v.begin(), v.end()) == v.end();
}

bool Walk::contains_edge(int e) const {
  return std::find(edges_.begin(), edges_.end(), e) != edges_.end();
}

EdgeSet Walk::edge_set(int edge_universe) const {
  EdgeSet s(edge_universe);
  for (int e : edges_) s.add(e);
  return s;
}

VertexSet Walk::vertex_set(int vertex_universe) const {
  VertexSet s(vertex_universe);
  for (int v : verts_) s.add(v);
  return s;
}

void Walk::validate(const CubicGraph& g) const {
  for (size_t i = 0; i < edges_.size(); ++i) {
    auto [a, b] = g.edge(edges_[i]);
    int u = verts_[i], v = verts_[i + 1];
    if (!((a == u && b == v) || (a == v && b == u)))
      throw error(errc::invariant_violation, "walk step " + std::to_string(i) + " does not match its edge");
  }
}

// ----- structural queries -----

EdgeSet boundary(const CubicGraph& g, const VertexSet& x) {
  EdgeSet out(g.m());
  for (int id = 0; id < g.m(); ++id) {
    auto [u, v] = g.edge(id);
    if (x.contains(u) != x.contains(v)) out.add(id);
  }
  return out;
}

std::vector<Component> components_after_removal(const CubicGraph& g, const EdgeSet& removed) {
  std::vector<char> seen(g.n(), 0);
  std::vector<Component> out;
  for (int s = 0; s < g.n(); ++s) {
    if (seen[s]) continue;
    Component comp{VertexSet(g.n()), {}};
    std::deque<int> q{s};
    seen[s] = 1;
    while (!q.empty()) {
      int v = q.front();
      q.pop_front();
      comp.vertices.add(v);
      for (int k = 0; k < 3; ++k) {
        int e = g.incident_edges(v)[k];
        if (removed.contains(e)) continue;
        int w = g.neighbors(v)[k];
        if (!seen[w]) {
          seen[w] = 1;
          q.push_back(w);
        }
      }
    }
    for (int e = 0; e < g.m(); ++e) {
      if (removed.contains(e)) continue;
      auto [u, v] = g.edge(e);
      if (comp.vertices.contains(u) && comp.vertices.contains(v)) comp.edges.push_back(e);
    }
    out.push_back(std::move(comp));
  }
  return out;
}

namespace {

bool connected_after_removal(const CubicGraph& g, int removed_edge) {
  std::vector<char> seen(g.n(), 0);
  std::deque<int> q{0};
  seen[0] = 1;
  int reached = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    for (int k = 0; k < 3; ++k) {
      int e = g.incident_edges(v)[k];
      if (e == removed_edge) continue;
      int w = g.neighbors(v)[k];
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        q.push_back(w);
      }
    }
  }
  return reached == g.n();
}

}  // namespace

EdgeSet bridges(const CubicGraph& g) {
  EdgeSet out(g.m());
  for (int e = 0; e < g.m(); ++e)
    if (!connected_after_removal(g, e)) out.add(e);
  return out;
}

bool is_connected(const CubicGraph& g, const VertexSet& inside) {
  auto verts = inside.to_vector();
  if (verts.empty()) return true;
  std::vector<char> seen(g.n(), 0);
  std::deque<int> q{verts[0]};
  seen[verts[0]] = 1;
  int reached = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    for (int w : g.neighbors(v))
      if (inside.contains(w) && !seen[w]) {
        seen[w] = 1;
        ++reached;
        q.push_back(w);
      }
  }
  return reached == int(verts.size());
}

bool has_cycle_within(const CubicGraph& g, const VertexSet& inside) {
  // A subgraph contains a cycle iff some component has as many edges as vertices.
  int verts = inside.count();
  if (verts < 3) return false;
  int edges = 0;
  for (int e = 0; e < g.m(); ++e) {
    auto [u, v] = g.edge(e);
    if (inside.contains(u) && inside.contains(v)) ++edges;
  }
  if (edges >= verts) return true;
  // Forest check per component: total edges < total vertices can still hide a
  // cycle next to isolated vertices, so check components individually.
  std::vector<char> seen(g.n(), 0);
  for (int s : inside.to_vector()) {
    if (seen[s]) continue;
    int cv = 0, ce = 0;
    std::deque<int> q{s};
    seen[s] = 1;
    std::vector<int> comp;
    while (!q.empty()) {
      int v = q.front();
      q.pop_front();
      comp.push_back(v);
      ++cv;
      for (int w : g.neighbors(v)) {
        if (!inside.contains(w)) continue;
        if (!seen[w]) {
          seen[w] = 1;
          q.push_back(w);
        }
      }
    }
    for (int v : comp)
      for (int w : g.neighbors(v))
        if (inside.contains(w) && w > v) ++ce;
    if (ce >= cv) return true;
  }
  return false;
}

int girth(const CubicGraph& g) {
  // BFS from every vertex; shortest cycle through the root is detected when a
  // non-tree edge closes two branches.
  int best = g.n() + 1;
  for (int s = 0; s < g.n(); ++s) {
    std::vector<int> dist(g.n(), -1), parent(g.n(), -1);
    std::deque<int> q{s};
    dist[s] = 0;
    while (!q.empty()) {
      int v = q.front();
      q.pop_front();
      for (int w : g.neighbors(v)) {
        if (w == parent[v]) continue;
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          parent[w] = v;
          q.push_back(w);
        } else {
          best = std::min(best, dist[v] + dist[w] + 1);
        }
      }
    }
  }
  return best;
}

std::vector<VertexSet> chordless_cycles(const CubicGraph& g, long long cap) {
  // Canonical form: root is the smallest cycle vertex, the second vertex is
  // smaller than the last, and no chord exists among chosen vertices.
  std::vector<VertexSet> out;
  std::vector<int> path;
  std::vector<char> used(g.n(), 0);
  long long produced = 0;

  auto emit = [&]() {
    if (++produced > cap)
      throw error(errc::resource_cap, "chordless cycle enumeration exceeded cap of " + std::to_string(cap));
    VertexSet s(g.n());
    for (int v : path) s.add(v);
    out.push_back(std::move(s));
  };

  std::function<void(int)> extend = [&](int root) {
    int v = path.back();
    for (int w : g.neighbors(v)) {
      if (w == root && path.size() >= 3) {
        if (path[1] < path.back()) {
          // Chordless: only the closing edge may join non-consecutive vertices.
          bool ok = true;
          for (size_t i = 0; ok && i + 2 < path.size(); ++i)
            for (size_t j = i + 2; ok && j < path.size(); ++j) {
              if (i == 0 && j + 1 == path.size()) continue;
              if (g.adjacent(path[i], path[j])) ok = false;
            }
          if (ok) emit();
        }
        continue;
      }
      if (w <= root || used[w]) continue;
      // Prune: w may only touch the path at v (and possibly the root).
      bool chord = false;
      for (size_t i = 0; i + 1 < path.size(); ++i)
        if (path[i] == w || (i > 0 && g.adjacent(path[i], w))) {
          chord = true;
          break;
        }
      if (chord) continue;
      used[w] = 1;
      path.push_back(w);
      extend(root);
      path.pop_back();
      used[w] = 0;
    }
  };

  for (int root = 0; root < g.n(); ++root) {
    path = {root};
    std::fill(used.begin(), used.end(), 0);
    used[root] = 1;
    extend(root);
  }
  return out;
}

int min_edge_cut_between(const CubicGraph& g, const VertexSet& source, const VertexSet& sink,
                         int limit, EdgeSet* cut_edges) {
  // Unit-capacity augmenting paths; each undirected edge carries one unit in
  // either direction. Flow is bounded by 3*min(|source|,|sink|), tiny here.
  int m = g.m();
  std::vector<int> flow(m, 0);  // +1 along (min,max) orientation, -1 against
  auto residual = [&](int e, int from) {
    auto [a, b] = g.edge(e);
    int f = (from == a) ? flow[e] : -flow[e];
    return 1 - f;  // capacity 1 each direction, net flow in [-1,1]
  };
  int total = 0;
  std::vector<int> pre_v(g.n()), pre_e(g.n());
  while (total < limit) {
    std::fill(pre_v.begin(), pre_v.end(), -2);
    std::deque<int> q;
    source.for_each([&](int s) {
      pre_v[s] = -1;
      q.push_back(s);
    });
    int hit = -1;
    while (!q.empty() && hit < 0) {
      int v = q.front();
      q.pop_front();
      for (int k = 0; k < 3 && hit < 0; ++k) {
        int e = g.incident_edges(v)[k];
        int w = g.neighbors(v)[k];
        if (pre_v[w] != -2 || residual(e, v) <= 0) continue;
        pre_v[w] = v;
        pre_e[w] = e;
        if (sink.contains(w)) {
          hit = w;
          break;
        }
        q.push_back(w);
      }
    }
    if (hit < 0) break;
    for (int v = hit; pre_v[v] != -1; v = pre_v[v]) {
      int e = pre_e[v];
      auto [a, b] = g.edge(e);
      int from = pre_v[v];
      flow[e] += (from == a) ? 1 : -1;
    }
    ++total;
  }
  if (total < limit && cut_edges) {
    // Source side of the residual graph gives the cut.
    std::vector<char> side(g.n(), 0);
    std::deque<int> q;
    source.for_each([&](int s) {
      side[s] = 1;
      q.push_back(s);
    });
    while (!q.empty()) {
      int v = q.front();
      q.pop_front();
      for (int k = 0; k < 3; ++k) {
        int e = g.incident_edges(v)[k];
        int w = g.neighbors(v)[k];
        if (!side[w] && residual(e, v) > 0) {
          side[w] = 1;
          q.push_back(w);
        }
      }
    }
    *cut_edges = EdgeSet(m);
    for (int e = 0; e < m; ++e) {
      auto [a, b] = g.edge(e);
      if (side[a] != side[b]) cut_edges->add(e);
    }
  }
  return total;
}

CyclicConnectivity cyclic_edge_connectivity(const CubicGraph& g, long long cycle_cap,
                                            CyclicCutWitness* witness) {
  // Both sides of a minimal cycle-separating cut contain a chordless cycle,
  // so the minimum over chordless pairs is exact.
  auto cycles = chordless_cycles(g, cycle_cap);
  int best = g.m() + 1;
  int besti = -1, bestj = -1;
  for (size_t i = 0; i < cycles.size(); ++i) {
    for (size_t j = i + 1; j < cycles.size(); ++j) {
      if (cycles[i].intersects(cycles[j])) continue;
      int cut = min_edge_cut_between(g, cycles[i], cycles[j], best);
      if (cut < best) {
        best = cut;
        besti = int(i);
        bestj = int(j);
      }
    }
  }
  if (besti < 0) return Unbounded{};
  if (witness) {
    EdgeSet cut(g.m());
    min_edge_cut_between(g, cycles[besti], cycles[bestj], best + 1, &cut);
    std::vector<char> side(g.n(), 0);
    // Recover the source side from the cut.
    std::deque<int> q;
    cycles[besti].for_each([&](int s) {
      side[s] = 1;
      q.push_back(s);
    });
    while (!q.empty()) {
      int v = q.front();
      q.pop_front();
      for (int k = 0; k < 3; ++k) {
        int e = g.incident_edges(v)[k];
        int w = g.neighbors(v)[k];
        if (!cut.contains(e) && !side[w]) {
          side[w] = 1;
          q.push_back(w);
        }
      }
    }
    witness->size = best;
    witness->cut = cut;
    witness->side = VertexSet(g.n());
    for (int v = 0; v < g.n(); ++v)
      if (side[v]) witness->side.add(v);
  }
  return best;
}

namespace {

bool ham_dfs(const CubicGraph& g, int v, int depth, std::vector<char>& used, std::vector<int>& order,
             long long& budget) {
  if (--budget < 0) throw error(errc::resource_cap, "hamiltonian path node budget exhausted");
  order.push_back(v);
  if (depth == g.n()) return true;
  for (int w : g.neighbors(v)) {
    if (used[w]) continue;
    used[w] = 1;
    if (ham_dfs(g, w, depth + 1, used, order, budget)) return true;
    used[w] = 0;
  }
  order.pop_back();
  return false;
}

}  // namespace

std::optional<Walk> find_hamiltonian_path(const CubicGraph& g, long long node_budget) {
  long long budget = node_budget;
  for (int s = 0; s < g.n(); ++s) {
    std::vector<char> used(g.n(), 0);
    std::vector<int> order;
    used[s] = 1;
    if (ham_dfs(g, s, 1, used, order, budget)) return Walk::trace(g, order);
  }
  return std::nullopt;
}

}  // namespace cubic
