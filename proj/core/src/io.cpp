// Copyright 2026 The rdalpha Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "rdalpha/io.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include "rdalpha/error.hpp"

namespace rdalpha {
namespace {

constexpr std::string_view kHeader = ">>graph6<<";
constexpr int kBias = 63;

bool printable(unsigned char c) { return c >= 63 && c <= 126; }

}  // namespace

Graph parse_graph6(std::string_view text) {
  std::size_t base = 0;
  if (text.substr(0, kHeader.size()) == kHeader) {
    text.remove_prefix(kHeader.size());
    base = kHeader.size();
  }
  if (!text.empty() && text.back() == '\n') text.remove_suffix(1);
  if (!text.empty() && text.back() == '\r') text.remove_suffix(1);

  if (text.empty()) throw ParseError("graph6: empty input", base);
  const auto first = static_cast<unsigned char>(text[0]);
  if (!printable(first))
    throw ParseError("graph6: byte out of range", base);
  if (first == 126)
    throw ParseError("graph6: long form (n > 62) is not supported", base);
  const int n = first - kBias;
  if (n < 1) throw ParseError("graph6: graph must have at least one vertex", base);

  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t expected = 1 + (bits + 5) / 6;
  for (std::size_t i = 1; i < text.size() && i < expected; ++i)
    if (!printable(static_cast<unsigned char>(text[i])))
      throw ParseError("graph6: byte out of range", base + i);
  if (text.size() < expected)
    throw ParseError("graph6: invalid length, expected " +
                         std::to_string(expected) + " bytes",
                     base + text.size());
  if (text.size() > expected)
    throw ParseError("graph6: trailing garbage", base + expected);

  std::vector<Edge> edges;
  std::size_t k = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++k) {
      const int chunk = static_cast<unsigned char>(text[1 + k / 6]) - kBias;
      if (chunk & (1 << (5 - static_cast<int>(k % 6)))) edges.emplace_back(i, j);
    }
  for (; k % 6 != 0; ++k) {
    const int chunk = static_cast<unsigned char>(text[1 + k / 6]) - kBias;
    if (chunk & (1 << (5 - static_cast<int>(k % 6))))
      throw ParseError("graph6: nonzero padding bit", base + 1 + k / 6);
  }
  return Graph(n, edges);
}

std::string to_graph6(const Graph &g) {
  const int n = g.order();
  if (n > kGraph6MaxOrder)
    throw InvalidArgumentError("graph6: long form (n > 62) is not supported");
  std::string out(1, static_cast<char>(n + kBias));
  int chunk = 0;
  int used = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      chunk = (chunk << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++used == 6) {
        out.push_back(static_cast<char>(chunk + kBias));
        chunk = used = 0;
      }
    }
  if (used > 0) out.push_back(static_cast<char>((chunk << (6 - used)) + kBias));
  return out;
}

std::vector<Graph> read_graph6_stream(std::istream &in) {
  std::vector<Graph> out;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (first && line == kHeader) {
      first = false;
      continue;
    }
    first = false;
    if (line.empty()) continue;
    out.push_back(parse_graph6(line));
  }
  return out;
}

Graph read_edge_list(std::istream &in) {
  std::string line;
  std::size_t lineno = 0;
  auto next_line = [&](std::string &dst) {
    while (std::getline(in, dst)) {
      ++lineno;
      auto pos = dst.find_first_not_of(" \t\r");
      if (pos == std::string::npos || dst[pos] == '#') continue;
      return true;
    }
    return false;
  };

  if (!next_line(line)) throw ParseError("edge list: missing header", lineno);
  std::istringstream head(line);
  long n = 0, m = 0;
  std::string extra;
  if (!(head >> n >> m) || (head >> extra) || n < 1 || m < 0)
    throw ParseError("edge list: header must be 'n m'", lineno);

  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long e = 0; e < m; ++e) {
    if (!next_line(line))
      throw ParseError("edge list: expected " + std::to_string(m) + " edges",
                       lineno);
    std::istringstream row(line);
    long u = 0, v = 0;
    if (!(row >> u >> v) || (row >> extra))
      throw ParseError("edge list: edge line must be 'u v'", lineno);
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw ParseError("edge list: vertex out of range", lineno);
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  if (next_line(line)) throw ParseError("edge list: trailing data", lineno);
  try {
    return Graph(static_cast<int>(n), edges);
  } catch (const InvalidArgumentError &e) {
    throw ParseError(std::string("edge list: ") + e.what(), lineno);
  }
}

void write_edge_list(std::ostream &out, const Graph &g) {
  out << g.order() << ' ' << g.size() << '\n';
  for (const auto &[u, v] : g.edges()) out << u << ' ' << v << '\n';
}

}  // namespace rdalpha
