#include "cubic/report.hpp"

#include <chrono>
#include <sstream>

#include "cubic/coloring.hpp"
#include "cubic/cuts_joins.hpp"
#include "cubic/fractional.hpp"
#include "cubic/matchings.hpp"
#include "cubic/traceable.hpp"

namespace cubic {

using nlohmann::json;

nlohmann::json edge_list_json(const CubicGraph& g, const EdgeSet& edges) {
  json arr = json::array();
  edges.for_each([&](int e) {
    auto [u, v] = g.edge(e);
    arr.push_back({e, u, v});
  });
  return arr;
}

EdgeSet edge_set_from_json(const CubicGraph& g, const nlohmann::json& arr) {
  EdgeSet s(g.m());
  for (const auto& item : arr) {
    int e = item.at(0).get<int>();
    int u = item.at(1).get<int>();
    int v = item.at(2).get<int>();
    auto [a, b] = g.edge(e);
    if (std::min(u, v) != a || std::max(u, v) != b)
      throw error(errc::bad_params, "certificate edge does not match the graph");
    s.add(e);
  }
  return s;
}

namespace {

std::string rational_str(const Rational& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

json vertex_list_json(const VertexSet& x) { return json(x.to_vector()); }

json header(const CatalogEntry& entry) {
  json j;
  j["schema"] = kSchemaVersion;
  j["tool"] = kToolVersion;
  j["id"] = entry.id;
  j["source"] = entry.source;
  j["n"] = entry.graph.n();
  j["m"] = entry.graph.m();
  return j;
}

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  long long ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                                 t0)
        .count();
  }
};

void raise_status(RunStatus& cur, RunStatus s) {
  if (int(s) > int(cur)) cur = s;
}

json invariants_body(const CatalogEntry& entry, const CheckOptions& opts) {
  const CubicGraph& g = entry.graph;
  json j;
  j["bridgeless"] = bridges(g).empty();
  j["girth"] = girth(g);
  j["chromatic_index"] = chromatic_index(g, opts.cap_nodes);
  j["oddness"] = oddness(g, opts.cap_matchings);
  auto cc = cyclic_edge_connectivity(g, opts.cap_cycles);
  if (std::holds_alternative<Unbounded>(cc))
    j["cyclic_edge_connectivity"] = "unbounded";
  else
    j["cyclic_edge_connectivity"] = std::get<int>(cc);
  j["perfect_matchings"] = int(enumerate_perfect_matchings(g, opts.cap_matchings).size());
  return j;
}

json ms_body(const CatalogEntry& entry, const CheckOptions& opts, RunStatus& status) {
  const CubicGraph& g = entry.graph;
  json j;
  auto ms = ms_witness(g, opts.cap_matchings);
  j["found"] = ms.has_value();
  if (!ms) {
    raise_status(status, RunStatus::witness_missing);
    return j;
  }
  // Independent re-verification before emission.
  if (!is_perfect_matching(g, ms->m1.edges) || !is_perfect_matching(g, ms->m2.edges) ||
      odd_cut_inside(g, ms->m1.edges & ms->m2.edges).has_value())
    throw error(errc::invariant_violation, "ms witness failed re-verification");
  j["m1"] = edge_list_json(g, ms->m1.edges);
  j["m2"] = edge_list_json(g, ms->m2.edges);
  j["intersection"] = edge_list_json(g, ms->intersection);
  j["intersection_size"] = ms->intersection.count();
  return j;
}

json kr_body(const CatalogEntry& entry, const CheckOptions& opts, RunStatus& status) {
  const CubicGraph& g = entry.graph;
  json j;
  auto kr = kr_witness(g, opts.cap_matchings);
  j["found"] = kr.has_value();
  if (!kr) {
    raise_status(status, RunStatus::witness_missing);
    return j;
  }
  EdgeSet triple = kr->m1.edges & kr->m2.edges & kr->join;
  if (!is_perfect_matching(g, kr->m1.edges) || !is_perfect_matching(g, kr->m2.edges) ||
      !is_join(g, kr->join) || !triple.empty())
    throw error(errc::invariant_violation, "kr witness failed re-verification");
  j["m1"] = edge_list_json(g, kr->m1.edges);
  j["m2"] = edge_list_json(g, kr->m2.edges);
  j["join"] = edge_list_json(g, kr->join);
  return j;
}

json fr_body(const CatalogEntry& entry, const CheckOptions& opts, RunStatus& status) {
  const CubicGraph& g = entry.graph;
  json j;
  auto fr = fan_raspaud_search(g, opts.cap_matchings);
  j["found"] = fr.has_value();
  if (!fr) {
    raise_status(status, RunStatus::witness_missing);
    return j;
  }
  EdgeSet triple = fr->m1.edges & fr->m2.edges & fr->m3.edges;
  if (!is_perfect_matching(g, fr->m1.edges) || !is_perfect_matching(g, fr->m2.edges) ||
      !is_perfect_matching(g, fr->m3.edges) || !triple.empty())
    throw error(errc::invariant_violation, "fr witness failed re-verification");
  j["m1"] = edge_list_json(g, fr->m1.edges);
  j["m2"] = edge_list_json(g, fr->m2.edges);
  j["m3"] = edge_list_json(g, fr->m3.edges);
  return j;
}

json thm1_body(const CatalogEntry& entry, const CheckOptions& opts, RunStatus& status) {
  const CubicGraph& g = entry.graph;
  json j;
  auto col = three_edge_coloring(g, opts.cap_nodes);
  auto pm = pm_without_odd_cut(g, opts.cap_matchings);
  j["three_edge_colourable"] = col.has_value();
  j["pm_without_odd_cut_exists"] = pm.has_value();
  j["equivalent"] = col.has_value() == pm.has_value();
  if (!j["equivalent"].get<bool>()) raise_status(status, RunStatus::witness_missing);
  if (col) {
    if (!is_proper_three_coloring(g, *col))
      throw error(errc::invariant_violation, "colouring failed re-verification");
    json classes = json::array();
    for (const auto& cls : col->classes(g)) classes.push_back(edge_list_json(g, cls));
    j["colour_classes"] = classes;
  }
  if (pm) {
    if (odd_cut_inside(g, pm->edges).has_value())
      throw error(errc::invariant_violation, "matching failed the odd-cut re-check");
    j["pm_without_odd_cut"] = edge_list_json(g, pm->edges);
  }
  return j;
}

json thm3_body(const CatalogEntry& entry, const CheckOptions& opts, RunStatus& status) {
  const CubicGraph& g = entry.graph;
  json j;
  if (g.n() >= 50) {
    j["applicable"] = false;
    return j;
  }
  j["applicable"] = true;
  auto rep = theorem3_check(g, opts.cap_matchings);
  j["m_found"] = rep.m_found;
  j["three_cut_count"] = int(rep.three_cuts.size());
  j["note"] = "intersection tested against odd edge cuts";
  if (!rep.m_found) {
    raise_status(status, RunStatus::witness_missing);
    return j;
  }
  j["m"] = edge_list_json(g, rep.m.edges);
  j["m_prime"] = edge_list_json(g, rep.m_prime.edges);
  j["intersection"] = edge_list_json(g, rep.intersection);
  j["intersection_size"] = rep.intersection_size;
  j["bound"] = rational_str(rep.bound);
  j["bound_ok"] = rep.bound_ok;
  j["no_odd_cut"] = rep.no_odd_cut;
  if (!rep.bound_ok || !rep.no_odd_cut) raise_status(status, RunStatus::witness_missing);
  return j;
}

json thm45_body(const CatalogEntry& entry, const CheckOptions& opts, RunStatus& status) {
  const CubicGraph& g = entry.graph;
  json j;
  auto rep = theorem45_check(g, opts.cap_matchings, opts.cap_cycles);
  j["applicable"] = rep.applicable;
  if (!rep.applicable) return j;
  j["k"] = rep.k;
  j["s"] = rep.s;
  j["pair_bound"] = rational_str(rep.pair_bound);
  j["secondary_bound"] = rational_str(rep.secondary_bound);
  j["min_pair_intersection"] = rep.min_pair_intersection;
  j["alternative1"] = rep.alternative1;
  j["alternative2"] = rep.alternative2;
  j["dichotomy_ok"] = rep.dichotomy_ok;
  if (rep.alt2_example) {
    j["alt2_cut"] = edge_list_json(g, rep.alt2_example->cut);
    j["alt2_side"] = vertex_list_json(rep.alt2_example->x);
  }
  j["theorem5_applies"] = rep.theorem5_applies;
  if (rep.theorem5_applies) j["ms_witness_found"] = rep.ms_witness_found;
  if (!rep.dichotomy_ok || (rep.theorem5_applies && !rep.ms_witness_found))
    raise_status(status, RunStatus::witness_missing);
  return j;
}

json traceable_body(const CatalogEntry& entry, const CheckOptions& opts, RunStatus& status) {
  const CubicGraph& g = entry.graph;
  json j;
  auto prep = prepare_pipeline(g, opts.cap_nodes);
  if (std::holds_alternative<NotTraceable>(prep)) {
    j["status"] = "not_traceable";
    return j;
  }
  if (std::holds_alternative<TraceableEscape>(prep)) {
    const auto& esc = std::get<TraceableEscape>(prep);
    if (!is_proper_three_coloring(g, esc.coloring))
      throw error(errc::invariant_violation, "escape colouring failed re-verification");
    j["status"] = "escape";
    json classes = json::array();
    for (const auto& cls : esc.coloring.classes(g)) classes.push_back(edge_list_json(g, cls));
    j["colour_classes"] = classes;
    return j;
  }
  const auto& st = std::get<PipelineState>(prep);
  j["status"] = "witness";
  j["h"] = st.seq.h();
  j["cycles"] = int(st.dec.cycles.size());

  TraceableWitness wit = theorem6_from_state(g, st);
  j["m_alpha"] = edge_list_json(g, wit.m_alpha.edges);
  json per = json::array();
  for (const auto& cert : wit.per_walk) {
    EdgeSet inter = wit.m_alpha.edges & cert.m.edges;
    if (!is_perfect_matching(g, cert.m.edges) || inter != cert.a ||
        odd_cut_inside(g, inter).has_value() || !is_join(g, cert.join1) ||
        !is_join(g, cert.join2) || !(inter & cert.join1).empty() || !(inter & cert.join2).empty())
      throw error(errc::invariant_violation, "walk certificate failed re-verification");
    json w;
    w["m"] = edge_list_json(g, cert.m.edges);
    w["a"] = edge_list_json(g, cert.a);
    w["join1"] = edge_list_json(g, cert.join1);
    w["join2"] = edge_list_json(g, cert.join2);
    w["walk"] = cert.s.verts();
    per.push_back(std::move(w));
  }
  j["walks"] = std::move(per);
  j["branch_counts"] = {{"reroute_kept", wit.trace.reroute_kept},
                        {"reroute_swapped", wit.trace.reroute_swapped},
                        {"wi_disjoint", wit.trace.wi_disjoint},
                        {"wi_case1", wit.trace.wi_case1},
                        {"wi_case2", wit.trace.wi_case2}};

  auto special = special_cases(g, st);
  if (special) {
    json s;
    s["case"] = special->which == SpecialCase::two_cycles    ? "two_cycles"
                : special->which == SpecialCase::three_cycles ? "three_cycles"
                                                              : "non_crossing";
    json ms = json::array();
    for (const auto& m : special->matchings) {
      if (!is_perfect_matching(g, m.edges))
        throw error(errc::invariant_violation, "special-case matching failed re-verification");
      ms.push_back(edge_list_json(g, m.edges));
    }
    // The Fan-Raspaud style triple: alpha matching with the first two.
    EdgeSet triple =
        special->m_alpha.edges & special->matchings[0].edges & special->matchings[1].edges;
    if (!triple.empty())
      throw error(errc::invariant_violation, "special-case triple intersection is nonempty");
    s["matchings"] = std::move(ms);
    j["special_case"] = std::move(s);
  }
  (void)status;
  return j;
}

}  // namespace

GraphReport invariants_report(const CatalogEntry& entry, const CheckOptions& opts) {
  GraphReport rep;
  Timer t;
  rep.body = header(entry);
  rep.body["invariants"] = invariants_body(entry, opts);
  if (opts.timings) rep.body["elapsed_ms"] = t.ms();
  return rep;
}

GraphReport check_report(const CatalogEntry& entry, const std::string& kind,
                         const CheckOptions& opts) {
  GraphReport rep;
  Timer t;
  rep.body = header(entry);
  if (kind == "ms")
    rep.body["ms"] = ms_body(entry, opts, rep.status);
  else if (kind == "kr")
    rep.body["kr"] = kr_body(entry, opts, rep.status);
  else if (kind == "fr")
    rep.body["fr"] = fr_body(entry, opts, rep.status);
  else if (kind == "thm1")
    rep.body["thm1"] = thm1_body(entry, opts, rep.status);
  else if (kind == "thm3")
    rep.body["thm3"] = thm3_body(entry, opts, rep.status);
  else if (kind == "thm45")
    rep.body["thm45"] = thm45_body(entry, opts, rep.status);
  else
    throw error(errc::bad_params, "unknown check '" + kind + "'");
  if (opts.timings) rep.body["elapsed_ms"] = t.ms();
  return rep;
}

GraphReport construct_report(const CatalogEntry& entry, const CheckOptions& opts) {
  GraphReport rep;
  Timer t;
  rep.body = header(entry);
  rep.body["traceable"] = traceable_body(entry, opts, rep.status);
  if (opts.timings) rep.body["elapsed_ms"] = t.ms();
  return rep;
}

GraphReport full_report(const CatalogEntry& entry, const CheckOptions& opts) {
  GraphReport rep;
  Timer t;
  rep.body = header(entry);
  rep.body["invariants"] = invariants_body(entry, opts);
  rep.body["ms"] = ms_body(entry, opts, rep.status);
  rep.body["kr"] = kr_body(entry, opts, rep.status);
  rep.body["fr"] = fr_body(entry, opts, rep.status);
  rep.body["thm1"] = thm1_body(entry, opts, rep.status);
  rep.body["thm3"] = thm3_body(entry, opts, rep.status);
  rep.body["thm45"] = thm45_body(entry, opts, rep.status);
  rep.body["traceable"] = traceable_body(entry, opts, rep.status);
  if (opts.timings) rep.body["elapsed_ms"] = t.ms();
  return rep;
}

std::vector<std::string> reverify_report(const CubicGraph& g, const nlohmann::json& body) {
  std::vector<std::string> failures;
  auto expect = [&](bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  };
  try {
    if (body.contains("ms") && body["ms"].value("found", false)) {
      EdgeSet m1 = edge_set_from_json(g, body["ms"]["m1"]);
      EdgeSet m2 = edge_set_from_json(g, body["ms"]["m2"]);
      expect(is_perfect_matching(g, m1) && is_perfect_matching(g, m2), "ms: not perfect");
      expect(!odd_cut_inside(g, m1 & m2).has_value(), "ms: odd cut in intersection");
    }
    if (body.contains("kr") && body["kr"].value("found", false)) {
      EdgeSet m1 = edge_set_from_json(g, body["kr"]["m1"]);
      EdgeSet m2 = edge_set_from_json(g, body["kr"]["m2"]);
      EdgeSet jn = edge_set_from_json(g, body["kr"]["join"]);
      expect(is_perfect_matching(g, m1) && is_perfect_matching(g, m2), "kr: not perfect");
      expect(is_join(g, jn), "kr: not a join");
      expect((m1 & m2 & jn).empty(), "kr: triple nonempty");
    }
    if (body.contains("fr") && body["fr"].value("found", false)) {
      EdgeSet m1 = edge_set_from_json(g, body["fr"]["m1"]);
      EdgeSet m2 = edge_set_from_json(g, body["fr"]["m2"]);
      EdgeSet m3 = edge_set_from_json(g, body["fr"]["m3"]);
      expect(is_perfect_matching(g, m1) && is_perfect_matching(g, m2) && is_perfect_matching(g, m3),
             "fr: not perfect");
      expect((m1 & m2 & m3).empty(), "fr: triple nonempty");
    }
    if (body.contains("thm3") && body["thm3"].value("m_found", false)) {
      EdgeSet m = edge_set_from_json(g, body["thm3"]["m"]);
      EdgeSet mp = edge_set_from_json(g, body["thm3"]["m_prime"]);
      EdgeSet inter = edge_set_from_json(g, body["thm3"]["intersection"]);
      expect((m & mp) == inter, "thm3: intersection mismatch");
      expect(!odd_cut_inside(g, inter).has_value(), "thm3: odd cut inside");
    }
    if (body.contains("traceable") && body["traceable"].value("status", "") == "witness") {
      EdgeSet ma = edge_set_from_json(g, body["traceable"]["m_alpha"]);
      expect(is_perfect_matching(g, ma), "traceable: alpha not perfect");
      for (const auto& w : body["traceable"]["walks"]) {
        EdgeSet m = edge_set_from_json(g, w["m"]);
        EdgeSet a = edge_set_from_json(g, w["a"]);
        EdgeSet j1 = edge_set_from_json(g, w["join1"]);
        EdgeSet j2 = edge_set_from_json(g, w["join2"]);
        expect(is_perfect_matching(g, m), "traceable: matching not perfect");
        expect((ma & m) == a, "traceable: A mismatch");
        expect(!odd_cut_inside(g, ma & m).has_value(), "traceable: odd cut");
        expect(is_join(g, j1) && is_join(g, j2), "traceable: join check");
        expect((ma & m & j1).empty() && (ma & m & j2).empty(), "traceable: triple nonempty");
      }
    }
  } catch (const error& e) {
    failures.push_back(std::string("exception: ") + e.what());
  }
  return failures;
}

}  // namespace cubic
