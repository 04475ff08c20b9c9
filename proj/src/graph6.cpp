#include "cubic/graph6.hpp"

namespace cubic {

CubicGraph parse_graph6(const std::string& raw) {
  std::string line = raw;
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.pop_back();
  if (line.rfind(">>graph6<<", 0) == 0) line = line.substr(10);
  if (line.empty()) throw error(errc::malformed_graph6, "empty line");
  if (line[0] == '~') throw error(errc::too_large, "orders above 62 are not supported");
  int n = line[0] - 63;
  if (n < 1 || n > 62) throw error(errc::malformed_graph6, "bad order byte");
  long long bits = (long long)n * (n - 1) / 2;
  long long need = (bits + 5) / 6;
  if ((long long)line.size() != 1 + need)
    throw error(errc::malformed_graph6, "expected " + std::to_string(1 + need) + " bytes, got " +
                                            std::to_string(line.size()));
  std::vector<std::pair<int, int>> pairs;
  long long k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      int byte = line[1 + k / 6] - 63;
      if (byte < 0 || byte > 63) throw error(errc::malformed_graph6, "byte outside printable range");
      int bit = (byte >> (5 - k % 6)) & 1;
      if (bit) pairs.emplace_back(i, j);
    }
  }
  return CubicGraph::build(n, std::move(pairs));
}

std::string write_graph6(const CubicGraph& g) {
  int n = g.n();
  if (n > 62) throw error(errc::too_large, "orders above 62 are not supported");
  long long bits = (long long)n * (n - 1) / 2;
  std::string out(1 + size_t((bits + 5) / 6), char(63));
  out[0] = char(63 + n);
  long long k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      if (g.adjacent(i, j)) out[1 + k / 6] += char(1 << (5 - k % 6));
    }
  }
  return out;
}

}  // namespace cubic
