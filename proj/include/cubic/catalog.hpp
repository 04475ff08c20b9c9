#ifndef CUBIC_CATALOG_HPP
#define CUBIC_CATALOG_HPP

#include <string>
#include <vector>

#include "cubic/generators.hpp"
#include "cubic/graph.hpp"

namespace cubic {

struct CatalogEntry {
  std::string id;      // unique within a run
  std::string source;  // generator call or file:line provenance
  CubicGraph graph;
};

// The named test battery: k4, k33, prisms and Moebius ladders m = 3..6,
// petersen, generalized Petersen (m,2) for m = 5..9, flower snark 5.
std::vector<CatalogEntry> named_catalog();

// Named battery plus 100 random bridgeless graphs for each order in
// {8, 10, 12, 14}; seeds are fixed so the catalog is reproducible.
std::vector<CatalogEntry> acceptance_catalog();

std::vector<CatalogEntry> catalog_from_graph6(const std::string& path);

}  // namespace cubic

#endif
