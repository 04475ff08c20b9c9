#include "cubic/catalog.hpp"

#include <fstream>

#include "cubic/graph6.hpp"

namespace cubic {

std::vector<CatalogEntry> named_catalog() {
  std::vector<CatalogEntry> out;
  out.push_back({"k4", "k4", make_k4()});
  out.push_back({"k33", "k33", make_k33()});
  for (int m = 3; m <= 6; ++m)
    out.push_back({"prism_" + std::to_string(m), "prism(" + std::to_string(m) + ")", make_prism(m)});
  for (int m = 3; m <= 6; ++m)
    out.push_back({"moebius_" + std::to_string(m), "moebius_ladder(" + std::to_string(m) + ")",
                   make_moebius_ladder(m)});
  out.push_back({"petersen", "generalized_petersen(5,2)", make_petersen()});
  for (int m = 5; m <= 9; ++m)
    out.push_back({"gp_" + std::to_string(m) + "_2",
                   "generalized_petersen(" + std::to_string(m) + ",2)",
                   make_generalized_petersen(m, 2)});
  out.push_back({"flower_5", "flower_snark(5)", make_flower_snark(5)});
  return out;
}

std::vector<CatalogEntry> acceptance_catalog() {
  auto out = named_catalog();
  for (int n : {8, 10, 12, 14}) {
    for (int i = 0; i < 100; ++i) {
      std::uint64_t seed = 1000 * n + i;
      std::string id = "rand_" + std::to_string(n) + "_" + std::to_string(i);
      out.push_back({id, "random_bridgeless(" + std::to_string(n) + "," + std::to_string(seed) + ")",
                     make_random_bridgeless(n, seed)});
    }
  }
  return out;
}

std::vector<CatalogEntry> catalog_from_graph6(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw error(errc::bad_params, "cannot open catalog file " + path);
  std::vector<CatalogEntry> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '>') continue;
    out.push_back({"g6_" + std::to_string(lineno), path + ":" + std::to_string(lineno),
                   parse_graph6(line)});
  }
  return out;
}

}  // namespace cubic
