#include "cubic/cuts_joins.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace cubic {

std::optional<CutCertificate> odd_cut_inside(const CubicGraph& g, const EdgeSet& s) {
  auto comps = components_after_removal(g, s);
  const VertexSet* odd_side = nullptr;
  for (const auto& c : comps)
    if (c.vertices.odd()) {
      odd_side = &c.vertices;
      break;
    }
  if (!odd_side) return std::nullopt;

  CutCertificate cert;
  cert.x = *odd_side;
  cert.cut = boundary(g, cert.x);
  // The side is a component of G - S, so its whole boundary lies in S and it
  // induces a connected subgraph. If the complement splits, one of its
  // components is odd (the total complement order is odd) and switching to it
  // leaves a connected complement: every other complement piece attaches to
  // the original side through boundary edges.
  VertexSet rest = cert.x.complement();
  if (!is_connected(g, rest)) {
    EdgeSet all_cut = cert.cut;
    std::vector<char> seen(g.n(), 0);
    std::optional<VertexSet> pick;
    for (int v : rest.to_vector()) {
      if (seen[v]) continue;
      VertexSet comp(g.n());
      std::deque<int> q{v};
      seen[v] = 1;
      while (!q.empty()) {
        int u = q.front();
        q.pop_front();
        comp.add(u);
        for (int w : g.neighbors(u))
          if (rest.contains(w) && !seen[w]) {
            seen[w] = 1;
            q.push_back(w);
          }
      }
      if (comp.odd()) {
        pick = comp;
        break;
      }
    }
    if (pick) {
      cert.x = *pick;
      cert.cut = boundary(g, cert.x);
    }
  }
  if (!cert.cut.is_subset_of(s))
    throw error(errc::invariant_violation, "odd cut escaped the candidate set");
  cert.minimal = is_connected(g, cert.x) && is_connected(g, cert.x.complement());
  return cert;
}

bool is_join(const CubicGraph& g, const EdgeSet& j) {
  std::vector<int> deg(g.n(), 0);
  j.for_each([&](int e) {
    auto [u, v] = g.edge(e);
    ++deg[u];
    ++deg[v];
  });
  for (int v = 0; v < g.n(); ++v)
    if (deg[v] % 2 == 0) return false;
  return true;
}

std::optional<EdgeSet> join_avoiding(const CubicGraph& g, const EdgeSet& s) {
  // Want even F = S + F' with F' inside E - S; then J = E - F is a join
  // avoiding S. F' must have odd degree exactly at the odd-degree vertices
  // of S. Solve per component of (V, E - S) on a spanning forest: keep the
  // forest edges whose below-subtree holds an odd number of targets.
  std::vector<int> sdeg(g.n(), 0);
  s.for_each([&](int e) {
    auto [u, v] = g.edge(e);
    ++sdeg[u];
    ++sdeg[v];
  });

  std::vector<int> parent(g.n(), -1), parent_edge(g.n(), -1), order;
  std::vector<char> seen(g.n(), 0);
  for (int root = 0; root < g.n(); ++root) {
    if (seen[root]) continue;
    int first = int(order.size());
    seen[root] = 1;
    order.push_back(root);
    std::deque<int> q{root};
    while (!q.empty()) {
      int v = q.front();
      q.pop_front();
      for (int k = 0; k < 3; ++k) {
        int e = g.incident_edges(v)[k];
        int w = g.neighbors(v)[k];
        if (s.contains(e) || seen[w]) continue;
        seen[w] = 1;
        parent[w] = v;
        parent_edge[w] = e;
        order.push_back(w);
        q.push_back(w);
      }
    }
    int odd_targets = 0;
    for (int i = first; i < int(order.size()); ++i) odd_targets += sdeg[order[i]] & 1;
    if (odd_targets & 1) return std::nullopt;  // component parity obstruction
  }

  std::vector<int> subtree_parity(g.n(), 0);
  for (int v = 0; v < g.n(); ++v) subtree_parity[v] = sdeg[v] & 1;
  EdgeSet correction(g.m());
  for (int i = int(order.size()) - 1; i >= 0; --i) {
    int v = order[i];
    if (parent[v] < 0) continue;
    if (subtree_parity[v] & 1) correction.add(parent_edge[v]);
    subtree_parity[parent[v]] ^= subtree_parity[v] & 1;
  }

  EdgeSet f = s | correction;
  EdgeSet j = g.edge_set() - f;
  if (j.intersects(s) || !is_join(g, j))
    throw error(errc::invariant_violation, "parity correction produced a non-join");
  return j;
}

std::optional<MsWitness> ms_witness(const CubicGraph& g, long long cap) {
  auto pms = enumerate_perfect_matchings(g, cap);
  struct Pair {
    int size, i, j;
  };
  std::vector<Pair> pairs;
  pairs.reserve(pms.size() * (pms.size() + 1) / 2);
  for (int i = 0; i < int(pms.size()); ++i)
    for (int j = i; j < int(pms.size()); ++j)
      pairs.push_back({(pms[i].edges & pms[j].edges).count(), i, j});
  std::stable_sort(pairs.begin(), pairs.end(),
                   [](const Pair& a, const Pair& b) { return a.size < b.size; });
  for (const auto& p : pairs) {
    EdgeSet inter = pms[p.i].edges & pms[p.j].edges;
    if (!odd_cut_inside(g, inter))
      return MsWitness{pms[p.i], pms[p.j], inter};
  }
  return std::nullopt;
}

std::optional<KrWitness> kr_witness(const CubicGraph& g, long long cap) {
  auto ms = ms_witness(g, cap);
  if (!ms) return std::nullopt;
  auto j = join_avoiding(g, ms->intersection);
  if (!j)
    throw error(errc::invariant_violation,
                "intersection has no odd cut yet admits no avoiding join");
  return KrWitness{ms->m1, ms->m2, *j};
}

}  // namespace cubic
