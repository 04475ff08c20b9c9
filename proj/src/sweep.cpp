#include "cubic/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace cubic {

namespace {

GraphReport one_report(const CatalogEntry& entry, const std::string& what,
                       const CheckOptions& opts) {
  try {
    if (what == "all") return full_report(entry, opts);
    if (what == "invariants") return invariants_report(entry, opts);
    if (what == "traceable") return construct_report(entry, opts);
    return check_report(entry, what, opts);
  } catch (const error& e) {
    GraphReport rep;
    rep.body["schema"] = kSchemaVersion;
    rep.body["tool"] = kToolVersion;
    rep.body["id"] = entry.id;
    rep.body["error"] = e.what();
    rep.status = (e.code() == errc::resource_cap || e.code() == errc::too_large)
                     ? RunStatus::resource_cap
                     : RunStatus::input_error;
    return rep;
  }
}

}  // namespace

SweepResult run_sweep(const std::vector<CatalogEntry>& catalog, const std::string& what,
                      const CheckOptions& opts, int jobs) {
  if (jobs < 1) jobs = 1;
  std::vector<GraphReport> reports(catalog.size());
  std::atomic<size_t> next{0};
  auto worker = [&]() {
    while (true) {
      size_t i = next.fetch_add(1);
      if (i >= catalog.size()) break;
      reports[i] = one_report(catalog[i], what, opts);
    }
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  std::vector<size_t> order(catalog.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    return reports[a].body["id"].get<std::string>() < reports[b].body["id"].get<std::string>();
  });

  SweepResult out;
  for (size_t i : order) {
    out.jsonl += reports[i].body.dump();
    out.jsonl += '\n';
    if (int(reports[i].status) > int(out.status)) out.status = reports[i].status;
  }
  return out;
}

}  // namespace cubic
