#include "cubic/matchings.hpp"

#include <algorithm>

#include "cubic/coloring.hpp"

namespace cubic {

void require_host(const CubicGraph& g, const Matching& m) {
  if (m.host != g.hash())
    throw error(errc::bad_params, "matching belongs to a different graph");
}

bool is_matching(const CubicGraph& g, const EdgeSet& edges) {
  std::vector<char> covered(g.n(), 0);
  bool ok = true;
  edges.for_each([&](int e) {
    auto [u, v] = g.edge(e);
    if (covered[u] || covered[v]) ok = false;
    covered[u] = covered[v] = 1;
  });
  return ok;
}

bool is_perfect_matching(const CubicGraph& g, const EdgeSet& edges) {
  return is_matching(g, edges) && edges.count() == g.n() / 2;
}

namespace {

void enumerate_rec(const CubicGraph& g, std::vector<char>& covered, int covered_count, EdgeSet& chosen,
                   std::vector<Matching>& out, long long cap) {
  if (covered_count == g.n()) {
    if ((long long)out.size() >= cap)
      throw error(errc::resource_cap, "perfect matching count exceeds cap of " + std::to_string(cap));
    out.emplace_back();
    out.back().edges = chosen;
    return;
  }
  int v = 0;
  while (covered[v]) ++v;
  // Covering the lowest uncovered vertex keeps the output lexicographic:
  // every remaining edge has both ends above v, so the edge chosen here is
  // the smallest identifier still to be added.
  for (int k = 0; k < 3; ++k) {
    int e = g.incident_edges(v)[k];
    int w = g.neighbors(v)[k];
    if (covered[w]) continue;
    covered[v] = covered[w] = 1;
    chosen.add(e);
    enumerate_rec(g, covered, covered_count + 2, chosen, out, cap);
    chosen.remove(e);
    covered[v] = covered[w] = 0;
  }
}

}  // namespace

std::vector<Matching> enumerate_perfect_matchings(const CubicGraph& g, long long cap) {
  if (cap < 1) throw error(errc::bad_params, "cap must be positive");
  std::vector<Matching> out;
  std::vector<char> covered(g.n(), 0);
  EdgeSet chosen(g.m());
  enumerate_rec(g, covered, 0, chosen, out, cap);
  for (auto& m : out) m.host = g.hash();
  return out;
}

TwoFactor two_factor(const CubicGraph& g, const Matching& m) {
  require_host(g, m);
  if (!is_perfect_matching(g, m.edges))
    throw error(errc::not_perfect, "two_factor needs a perfect matching");
  TwoFactor tf;
  tf.complement_of = m;
  std::vector<char> seen(g.n(), 0);
  for (int s = 0; s < g.n(); ++s) {
    if (seen[s]) continue;
    // Walk the cycle from its smallest vertex toward the smaller neighbor.
    std::vector<int> order{s};
    seen[s] = 1;
    int prev = -1, cur = s;
    while (true) {
      int next = -1;
      for (int k = 0; k < 3; ++k) {
        int e = g.incident_edges(cur)[k];
        int w = g.neighbors(cur)[k];
        if (m.edges.contains(e) || w == prev) continue;
        next = w;
        break;  // incident lists ascend, so the first hit is the smaller neighbor
      }
      if (next == s) break;
      order.push_back(next);
      seen[next] = 1;
      prev = cur;
      cur = next;
    }
    order.push_back(s);
    tf.cycles.push_back(Walk::trace(g, order));
  }
  return tf;
}

int oddness(const CubicGraph& g, long long cap) {
  auto pms = enumerate_perfect_matchings(g, cap);
  if (pms.empty()) throw error(errc::no_perfect_matching, "graph has no perfect matching");
  int best = g.n();
  for (const auto& m : pms) best = std::min(best, two_factor(g, m).odd_cycle_count());
  return best;
}

bool is_balanced(const CubicGraph& g, const Matching& m, const EdgeSet& a) {
  require_host(g, m);
  if (!a.is_subset_of(m.edges)) throw error(errc::not_subset, "A must be a subset of M");
  // Components of G_M - V(A): walk the 2-factor cycles with A's endpoints
  // deleted and check each surviving piece.
  std::vector<char> removed(g.n(), 0);
  a.for_each([&](int e) {
    auto [u, v] = g.edge(e);
    removed[u] = removed[v] = 1;
  });
  auto tf = two_factor(g, m);
  for (const auto& cyc : tf.cycles) {
    const auto& vs = cyc.verts();
    int len = cyc.length();
    int marked = 0;
    for (int i = 0; i < len; ++i) marked += removed[vs[i]];
    if (marked == 0) {
      if (len & 1) return false;  // untouched odd cycle
      continue;
    }
    // Arc lengths between consecutive removed vertices; a surviving path of
    // d-1 vertices has d-2 edges, so d must be odd (d == 1 leaves nothing).
    int first = -1;
    for (int i = 0; i < len; ++i)
      if (removed[vs[i]]) {
        first = i;
        break;
      }
    int prev = first;
    for (int i = first + 1; i <= first + len; ++i) {
      int idx = i % len;
      if (!removed[vs[idx]]) continue;
      int d = i - prev;
      if (d % 2 == 0) return false;
      prev = i;
    }
  }
  return true;
}

Matching extend_balanced(const CubicGraph& g, const Matching& m, const EdgeSet& a) {
  if (!is_balanced(g, m, a)) throw error(errc::not_balanced, "A is not a balanced subset of M");
  std::vector<char> removed(g.n(), 0);
  a.for_each([&](int e) {
    auto [u, v] = g.edge(e);
    removed[u] = removed[v] = 1;
  });
  EdgeSet result = a;
  auto tf = two_factor(g, m);
  for (const auto& cyc : tf.cycles) {
    const auto& vs = cyc.verts();
    const auto& es = cyc.edges();
    int len = cyc.length();
    bool touched = false;
    for (int i = 0; i < len; ++i) touched |= removed[vs[i]] != 0;
    if (!touched) {
      // Even cycle: take the alternating class containing the first edge.
      for (int i = 0; i < len; i += 2) result.add(es[i]);
      continue;
    }
    // Each surviving arc is an odd path; its unique perfect matching takes
    // every other edge starting at the arc's first surviving vertex.
    int first = -1;
    for (int i = 0; i < len; ++i)
      if (removed[vs[i]]) {
        first = i;
        break;
      }
    int prev = first;
    for (int i = first + 1; i <= first + len; ++i) {
      if (!removed[vs[i % len]]) continue;
      // Arc occupies cycle edges prev..i-1 (indices mod len); interior path
      // edges are prev+1..i-2, matched as prev+1, prev+3, ...
      for (int j = prev + 1; j + 1 <= i - 1; j += 2) result.add(es[j % len]);
      prev = i;
    }
  }
  Matching out(g, result);
  if (!is_perfect_matching(g, out.edges) || (out.edges & m.edges) != a)
    throw error(errc::invariant_violation, "extension did not reproduce A exactly");
  return out;
}

std::optional<FanRaspaudTriple> fan_raspaud_search(const CubicGraph& g, long long cap) {
  if (auto col = three_edge_coloring(g)) {
    auto classes = col->classes(g);
    return FanRaspaudTriple{Matching(g, classes[0]), Matching(g, classes[1]), Matching(g, classes[2])};
  }
  auto pms = enumerate_perfect_matchings(g, cap);
  for (const auto& m : pms) {
    auto medges = m.edges.to_vector();
    int k = int(medges.size());
    if (k > 30) throw error(errc::resource_cap, "balanced subset search too large");
    std::vector<EdgeSet> balanced;
    for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
      EdgeSet a(g.m());
      for (int i = 0; i < k; ++i)
        if (mask & (1u << i)) a.add(medges[i]);
      if (is_balanced(g, m, a)) balanced.push_back(std::move(a));
    }
    for (size_t i = 0; i < balanced.size(); ++i)
      for (size_t j = i + 1; j < balanced.size(); ++j) {
        if (balanced[i].intersects(balanced[j])) continue;
        Matching m2 = extend_balanced(g, m, balanced[i]);
        Matching m3 = extend_balanced(g, m, balanced[j]);
        return FanRaspaudTriple{m, m2, m3};
      }
  }
  return std::nullopt;
}

}  // namespace cubic
