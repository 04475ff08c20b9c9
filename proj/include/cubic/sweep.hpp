#ifndef CUBIC_SWEEP_HPP
#define CUBIC_SWEEP_HPP

#include <string>
#include <vector>

#include "cubic/catalog.hpp"
#include "cubic/report.hpp"

namespace cubic {

struct SweepResult {
  std::string jsonl;  // one report per line, sorted by id
  RunStatus status = RunStatus::ok;
};

// Runs the requested section ("all", "invariants", "ms", ..., "traceable")
// over the catalog with a worker pool. Workers share nothing; the merged
// output is sorted by id, so it does not depend on the job count.
SweepResult run_sweep(const std::vector<CatalogEntry>& catalog, const std::string& what,
                      const CheckOptions& opts, int jobs);

}  // namespace cubic

#endif
