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

#ifndef RDALPHA_IO_HPP
#define RDALPHA_IO_HPP

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "rdalpha/graph.hpp"

namespace rdalpha {

/// Largest order representable by the short graph6 form.
inline constexpr int kGraph6MaxOrder = 62;

/**
 * Parses one graph6 line (short form, n <= 62). An optional ">>graph6<<"
 * header and a single trailing "\n" / "\r\n" are accepted. Anything else
 * that is not exactly the encoded length, any byte outside 63..126 and any
 * nonzero padding bit raise ParseError with the byte offset.
 */
Graph parse_graph6(std::string_view text);

/// Short-form graph6 encoding without header or newline.
std::string to_graph6(const Graph &g);

/// One graph per non-empty line; a header on the first line is skipped.
std::vector<Graph> read_graph6_stream(std::istream &in);

/// Edge-list text: "n m" header line, then m lines "u v" (0-indexed).
/// Blank lines and lines starting with '#' are ignored.
Graph read_edge_list(std::istream &in);
void write_edge_list(std::ostream &out, const Graph &g);

}  // namespace rdalpha

#endif  // RDALPHA_IO_HPP
