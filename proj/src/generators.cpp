#include "cubic/generators.hpp"

#include <numeric>
#include <random>

namespace cubic {

CubicGraph make_k4() {
  return CubicGraph::build(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

CubicGraph make_k33() {
  std::vector<std::pair<int, int>> e;
  for (int a = 0; a < 3; ++a)
    for (int b = 3; b < 6; ++b) e.emplace_back(a, b);
  return CubicGraph::build(6, std::move(e));
}

CubicGraph make_prism(int m) {
  if (m < 3) throw error(errc::bad_params, "prism needs m >= 3");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < m; ++i) {
    e.emplace_back(i, (i + 1) % m);
    e.emplace_back(m + i, m + (i + 1) % m);
    e.emplace_back(i, m + i);
  }
  return CubicGraph::build(2 * m, std::move(e));
}

CubicGraph make_moebius_ladder(int m) {
  if (m < 3) throw error(errc::bad_params, "moebius ladder needs m >= 3");
  int n = 2 * m;
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  for (int i = 0; i < m; ++i) e.emplace_back(i, i + m);
  return CubicGraph::build(n, std::move(e));
}

CubicGraph make_generalized_petersen(int m, int t) {
  if (m < 3 || t < 1 || 2 * t == m || t >= m)
    throw error(errc::bad_params, "generalized petersen needs m >= 3, 1 <= t < m/2 or m/2 < t < m");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < m; ++i) {
    e.emplace_back(i, (i + 1) % m);       // outer cycle
    e.emplace_back(m + i, m + (i + t) % m);  // inner star polygon
    e.emplace_back(i, m + i);             // spokes
  }
  return CubicGraph::build(2 * m, std::move(e));
}

CubicGraph make_petersen() { return make_generalized_petersen(5, 2); }

CubicGraph make_flower_snark(int m) {
  if (m < 5 || m % 2 == 0) throw error(errc::bad_params, "flower snark needs odd m >= 5");
  // Vertices: hub a_i = i, b_i = m+i, c_i = 2m+i, d_i = 3m+i.
  // Each hub joins b_i, c_i, d_i; the b's form an m-cycle; the c's and d's
  // together form a single 2m-cycle.
  auto a = [&](int i) { return i; };
  auto b = [&](int i) { return m + i; };
  auto c = [&](int i) { return 2 * m + i; };
  auto d = [&](int i) { return 3 * m + i; };
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < m; ++i) {
    e.emplace_back(a(i), b(i));
    e.emplace_back(a(i), c(i));
    e.emplace_back(a(i), d(i));
    e.emplace_back(b(i), b((i + 1) % m));
  }
  for (int i = 0; i + 1 < m; ++i) {
    e.emplace_back(c(i), c(i + 1));
    e.emplace_back(d(i), d(i + 1));
  }
  e.emplace_back(c(m - 1), d(0));
  e.emplace_back(d(m - 1), c(0));
  return CubicGraph::build(4 * m, std::move(e));
}

namespace {

// Bounded draw by rejection so results do not depend on library internals.
std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) {
  std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

}  // namespace

CubicGraph make_random_bridgeless(int n, std::uint64_t seed) {
  if (n < 4 || n % 2 != 0) throw error(errc::bad_params, "order must be even and at least 4");
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 100000; ++attempt) {
    // Configuration model: pair up 3n half-edges.
    std::vector<int> stubs(3 * n);
    for (int i = 0; i < 3 * n; ++i) stubs[i] = i / 3;
    for (int i = 3 * n - 1; i > 0; --i) {
      int j = int(draw_below(rng, std::uint64_t(i) + 1));
      std::swap(stubs[i], stubs[j]);
    }
    std::vector<std::pair<int, int>> pairs;
    bool simple = true;
    for (int i = 0; i < 3 * n && simple; i += 2) {
      int u = stubs[i], v = stubs[i + 1];
      if (u == v) simple = false;
      if (u > v) std::swap(u, v);
      pairs.emplace_back(u, v);
    }
    if (!simple) continue;
    std::sort(pairs.begin(), pairs.end());
    if (std::adjacent_find(pairs.begin(), pairs.end()) != pairs.end()) continue;
    try {
      CubicGraph g = CubicGraph::build(n, std::move(pairs));
      if (bridges(g).empty()) return g;
    } catch (const error&) {
      continue;  // disconnected pairing
    }
  }
  throw error(errc::resource_cap, "random generator did not find a bridgeless graph");
}

CubicGraph generate(const std::string& name, const std::vector<long long>& params) {
  auto want = [&](size_t k) {
    if (params.size() != k)
      throw error(errc::bad_params, name + " expects " + std::to_string(k) + " parameter(s)");
  };
  if (name == "k4") {
    want(0);
    return make_k4();
  }
  if (name == "k33") {
    want(0);
    return make_k33();
  }
  if (name == "prism") {
    want(1);
    return make_prism(int(params[0]));
  }
  if (name == "moebius_ladder") {
    want(1);
    return make_moebius_ladder(int(params[0]));
  }
  if (name == "petersen") {
    want(0);
    return make_petersen();
  }
  if (name == "generalized_petersen") {
    want(2);
    return make_generalized_petersen(int(params[0]), int(params[1]));
  }
  if (name == "flower_snark") {
    want(1);
    return make_flower_snark(int(params[0]));
  }
  if (name == "random_bridgeless") {
    want(2);
    return make_random_bridgeless(int(params[0]), std::uint64_t(params[1]));
  }
  throw error(errc::bad_params, "unknown generator '" + name + "'");
}

}  // namespace cubic
