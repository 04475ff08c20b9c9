#ifndef CUBIC_GENERATORS_HPP
#define CUBIC_GENERATORS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "cubic/graph.hpp"

namespace cubic {

CubicGraph make_k4();
CubicGraph make_k33();
CubicGraph make_prism(int m);           // two m-cycles joined by rungs, n = 2m
CubicGraph make_moebius_ladder(int m);  // 2m-cycle plus m diameters
CubicGraph make_petersen();
CubicGraph make_generalized_petersen(int m, int t);
CubicGraph make_flower_snark(int m);    // m odd, at least 5; n = 4m

// Rejection-sampled random pairing: retry until the pairing is a simple,
// connected, bridgeless cubic graph. Deterministic for a given seed.
CubicGraph make_random_bridgeless(int n, std::uint64_t seed);

// Dispatch by name with positional parameters, e.g. ("prism", {4}).
CubicGraph generate(const std::string& name, const std::vector<long long>& params);

}  // namespace cubic

#endif
