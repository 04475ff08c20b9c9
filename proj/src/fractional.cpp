#include "cubic/fractional.hpp"

#include <algorithm>
#include <set>

namespace cubic {

FractionalWeights FractionalWeights::two_valued(const CubicGraph& g, const Matching& m,
                                                const Rational& on, const Rational& off) {
  require_host(g, m);
  std::vector<Rational> w(g.m(), off);
  m.edges.for_each([&](int e) { w[e] = on; });
  return FractionalWeights(g, std::move(w));
}

FractionalWeights FractionalWeights::uniform(const CubicGraph& g, const Rational& value) {
  return FractionalWeights(g, std::vector<Rational>(g.m(), value));
}

Rational FractionalWeights::total(const EdgeSet& a) const {
  Rational s = 0;
  a.for_each([&](int e) { s += w[e]; });
  return s;
}

ObjectiveVector ObjectiveVector::ones(const CubicGraph& g) {
  return ObjectiveVector{std::vector<Rational>(g.m(), Rational(1))};
}

ObjectiveVector ObjectiveVector::ones_minus(const CubicGraph& g, const Matching& m) {
  require_host(g, m);
  std::vector<Rational> c(g.m(), Rational(1));
  m.edges.for_each([&](int e) { c[e] = 0; });
  return ObjectiveVector{std::move(c)};
}

Rational ObjectiveVector::dot(const EdgeSet& a) const {
  Rational s = 0;
  a.for_each([&](int e) { s += c[e]; });
  return s;
}

Rational ObjectiveVector::dot(const FractionalWeights& w) const {
  Rational s = 0;
  for (size_t e = 0; e < c.size(); ++e) s += c[e] * w.w[e];
  return s;
}

void for_each_connected_subset(const CubicGraph& g, const std::function<void(const VertexSet&)>& f) {
  // Standard rooted enumeration: sets are rooted at their minimum vertex;
  // each frontier vertex is either taken or banned for the whole subtree.
  int n = g.n();
  std::vector<char> in(n, 0), banned(n, 0);
  VertexSet current(n);

  std::function<void(int, std::vector<int>)> grow = [&](int root, std::vector<int> frontier) {
    f(current);
    for (size_t idx = 0; idx < frontier.size(); ++idx) {
      int v = frontier[idx];
      if (banned[v] || in[v]) continue;
      in[v] = 1;
      current.add(v);
      std::vector<int> next(frontier.begin() + idx + 1, frontier.end());
      for (int w : g.neighbors(v))
        if (w > root && !in[w] && !banned[w]) next.push_back(w);
      grow(root, std::move(next));
      current.remove(v);
      in[v] = 0;
      banned[v] = 1;  // exclude from later branches at this level
    }
    for (size_t idx = 0; idx < frontier.size(); ++idx) banned[frontier[idx]] = 0;
  };

  for (int root = 0; root < n; ++root) {
    in[root] = 1;
    current.add(root);
    std::vector<int> frontier;
    for (int w : g.neighbors(root))
      if (w > root) frontier.push_back(w);
    std::sort(frontier.begin(), frontier.end());
    grow(root, std::move(frontier));
    current.remove(root);
    in[root] = 0;
  }
}

namespace {

bool check_certificate_path(const CubicGraph& g, const FractionalWeights& w,
                            const CutStructureCertificate& cert) {
  // Requires a two-valued pattern; otherwise the analytic bound is unusable.
  Rational on, off;
  bool have_on = false, have_off = false;
  for (int e = 0; e < g.m(); ++e) {
    if (cert.pattern.edges.contains(e)) {
      if (have_on && w.w[e] != on) throw error(errc::too_large, "weights are not two-valued on the pattern");
      on = w.w[e];
      have_on = true;
    } else {
      if (have_off && w.w[e] != off) throw error(errc::too_large, "weights are not two-valued off the pattern");
      off = w.w[e];
      have_off = true;
    }
  }
  // A cut meeting a perfect matching does so in an odd number of edges when
  // the side is odd. min weight over odd compositions m*on + (t-m)*off is
  // attained at an endpoint, and grows with t, so two sizes suffice:
  // the special size (with its matching cap) and the next odd size.
  auto min_weight = [&](int t, int m_cap) {
    int m_hi = std::min(m_cap, t % 2 ? t : t - 1);
    Rational lo = Rational(1) * on + Rational(t - 1) * off;       // m = 1
    Rational hi = Rational(m_hi) * on + Rational(t - m_hi) * off;  // m maximal
    return std::min(lo, hi);
  };
  if (min_weight(cert.special_size, cert.matching_cap_at_special) < 1) return false;
  if (min_weight(cert.special_size + 2, cert.special_size + 2) < 1) return false;
  return true;
}

}  // namespace

bool is_fractional_pm(const CubicGraph& g, const FractionalWeights& w, int oddset_cap,
                      const CutStructureCertificate* certificate) {
  if (w.host != g.hash()) throw error(errc::bad_params, "weights belong to a different graph");
  for (int e = 0; e < g.m(); ++e)
    if (w.w[e] < 0 || w.w[e] > 1) return false;
  for (int v = 0; v < g.n(); ++v) {
    Rational s = 0;
    for (int e : g.incident_edges(v)) s += w.w[e];
    if (s != 1) return false;
  }
  if (g.n() > oddset_cap) {
    if (!certificate) throw error(errc::too_large, "order exceeds the odd-set cap and no structure certificate was given");
    return check_certificate_path(g, w, *certificate);
  }
  bool ok = true;
  for_each_connected_subset(g, [&](const VertexSet& x) {
    if (!ok || !x.odd()) return;
    if (x.count() == 1 || x.count() == g.n() - 1) return;  // vertex stars already checked
    if (w.total(boundary(g, x)) < 1) ok = false;
  });
  return ok;
}

namespace {

std::vector<EdgeSet> tight_cuts(const CubicGraph& g, const FractionalWeights& w) {
  std::set<std::vector<int>> seen;
  std::vector<EdgeSet> cuts;
  for_each_connected_subset(g, [&](const VertexSet& x) {
    if (!x.odd() || x.count() == 1 || x.count() == g.n() - 1) return;
    if (!is_connected(g, x.complement())) return;  // only inclusion-minimal cuts
    EdgeSet cut = boundary(g, x);
    if (w.total(cut) != 1) return;
    auto key = cut.to_vector();
    if (seen.insert(key).second) cuts.push_back(std::move(cut));
  });
  return cuts;
}

}  // namespace

Matching polytope_select(const CubicGraph& g, const FractionalWeights& w, const ObjectiveVector& c,
                         int oddset_cap, long long matching_cap) {
  if (!is_fractional_pm(g, w, oddset_cap))
    throw error(errc::bad_params, "weights are not a fractional perfect matching");
  auto cuts = tight_cuts(g, w);
  auto pms = enumerate_perfect_matchings(g, matching_cap);
  const Matching* best = nullptr;
  Rational best_value = 0;
  for (const auto& m : pms) {
    bool feasible = true;
    for (const auto& cut : cuts)
      if ((m.edges & cut).count() != 1) {
        feasible = false;
        break;
      }
    if (!feasible) continue;
    Rational value = c.dot(m.edges);
    if (!best || value > best_value) {
      best = &m;
      best_value = value;
    }
  }
  if (!best)
    throw error(errc::no_feasible_matching, "no perfect matching meets every tight cut exactly once");
  if (best_value < c.dot(w))
    throw error(errc::no_feasible_matching, "selected matching scores below the fractional objective");
  return *best;
}

std::vector<EdgeSet> minimal_odd_cuts_of_size(const CubicGraph& g, int size) {
  // Scan edge subsets of the given size in lexicographic order. A subset is a
  // minimal cut exactly when its removal leaves two components and every
  // chosen edge runs between them.
  std::vector<EdgeSet> out;
  std::vector<int> pick(size);
  std::function<void(int, int)> rec = [&](int next, int depth) {
    if (depth == size) {
      EdgeSet cand(g.m());
      for (int e : pick) cand.add(e);
      auto comps = components_after_removal(g, cand);
      if (comps.size() != 2) return;
      if (!comps[0].vertices.odd()) return;  // sides have equal parity
      for (int e : pick) {
        auto [u, v] = g.edge(e);
        if (comps[0].vertices.contains(u) == comps[0].vertices.contains(v)) return;
      }
      out.push_back(std::move(cand));
      return;
    }
    for (int e = next; e < g.m(); ++e) {
      pick[depth] = e;
      rec(e + 1, depth + 1);
    }
  };
  rec(0, 0);
  return out;
}

std::optional<CutCertificate> odd_cut_inside_matching_of_size(const CubicGraph& g, const Matching& m,
                                                              int size) {
  auto tf = two_factor(g, m);
  int k = int(tf.cycles.size());
  if (k > 30) throw error(errc::too_large, "too many 2-factor cycles");
  std::vector<VertexSet> cyc_verts;
  for (const auto& c : tf.cycles) cyc_verts.push_back(c.vertex_set(g.n()));
  for (std::uint32_t mask = 1; mask + 1 < (1u << k); ++mask) {
    VertexSet x(g.n());
    int verts = 0;
    for (int i = 0; i < k; ++i)
      if (mask & (1u << i)) {
        x = x | cyc_verts[i];
        verts += tf.cycles[i].length();
      }
    if (!(verts & 1)) continue;
    EdgeSet cut = boundary(g, x);
    if (cut.count() != size) continue;
    if (!is_connected(g, x) || !is_connected(g, x.complement())) continue;
    return CutCertificate{x, cut, true};
  }
  return std::nullopt;
}

Theorem3Report theorem3_check(const CubicGraph& g, long long cap) {
  Theorem3Report rep;
  rep.bound = Rational(g.n(), 10);
  rep.intersection = g.empty_edge_set();
  rep.three_cuts = minimal_odd_cuts_of_size(g, 3);
  // Drop vertex stars: every perfect matching meets them once by definition.
  std::vector<EdgeSet> nontrivial;
  for (const auto& c : rep.three_cuts) {
    bool star = false;
    for (int v = 0; v < g.n(); ++v) {
      auto inc = g.incident_edges(v);
      if (c.contains(inc[0]) && c.contains(inc[1]) && c.contains(inc[2])) {
        star = true;
        break;
      }
    }
    if (!star) nontrivial.push_back(c);
  }

  auto pms = enumerate_perfect_matchings(g, cap);
  const Matching* chosen = nullptr;
  for (const auto& m : pms) {
    bool ok = true;
    for (const auto& c : nontrivial)
      if ((m.edges & c).count() != 1) {
        ok = false;
        break;
      }
    if (ok) {
      chosen = &m;
      break;
    }
  }
  if (!chosen) return rep;  // sensational: the guaranteed matching is missing
  rep.m_found = true;
  rep.m = *chosen;

  int best = g.n();
  for (const auto& m2 : pms) {
    if (&m2 == chosen) continue;
    int inter = (chosen->edges & m2.edges).count();
    if (inter < best) {
      best = inter;
      rep.m_prime = m2;
    }
  }
  if (pms.size() == 1) {
    rep.m_prime = *chosen;
    best = g.n() / 2;
  }
  rep.intersection = rep.m.edges & rep.m_prime.edges;
  rep.intersection_size = rep.intersection.count();
  rep.bound_ok = Rational(rep.intersection_size) <= rep.bound;
  rep.no_odd_cut = !odd_cut_inside(g, rep.intersection).has_value();
  return rep;
}

BoundReport theorem45_check(const CubicGraph& g, long long cap, long long cycle_cap) {
  BoundReport rep;
  auto cc = cyclic_edge_connectivity(g, cycle_cap);
  if (std::holds_alternative<Unbounded>(cc)) return rep;
  rep.k = std::get<int>(cc);
  if (rep.k < 3) return rep;
  rep.applicable = true;
  rep.s = 2 * (rep.k / 2) + 3;
  rep.pair_bound = Rational(g.n(), 2 * rep.s);
  rep.secondary_bound = Rational(g.n(), 2 * (rep.s - 2));

  auto pms = enumerate_perfect_matchings(g, cap);
  rep.min_pair_intersection = g.n();
  for (int i = 0; i < int(pms.size()); ++i)
    for (int j = i + 1; j < int(pms.size()); ++j) {
      int inter = (pms[i].edges & pms[j].edges).count();
      if (inter < rep.min_pair_intersection) {
        rep.min_pair_intersection = inter;
        rep.alt1_pair = {i, j};
      }
    }
  rep.alternative1 =
      rep.alt1_pair && Rational(rep.min_pair_intersection) <= rep.pair_bound;

  rep.alternative2 = true;
  for (const auto& m : pms) {
    auto cut = odd_cut_inside_matching_of_size(g, m, rep.s - 2);
    if (!cut) {
      rep.alternative2 = false;
      break;
    }
    if (!rep.alt2_example) rep.alt2_example = cut;
  }
  if (!rep.alternative2) rep.alt2_example.reset();
  rep.dichotomy_ok = rep.alternative1 || rep.alternative2;

  if (rep.k >= 4 && Rational(g.n()) < Rational(2 * rep.s * (rep.s - 2))) {
    rep.theorem5_applies = true;
    rep.ms_witness_found = ms_witness(g, cap).has_value();
  }
  return rep;
}

}  // namespace cubic
