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

#ifndef RDALPHA_TOOLS_CLI_HPP
#define RDALPHA_TOOLS_CLI_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "rdalpha/closed_forms.hpp"
#include "rdalpha/extremal.hpp"
#include "rdalpha/graph.hpp"
#include "rdalpha/matrices.hpp"

namespace rdalpha::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitRefuted = 2,
  kExitTie = 3,
  kExitBudget = 4,
};

enum class Format { table, json };

enum class SourceKind { graph6, graph6_file, edge_list, construct };

struct InputSource {
  SourceKind kind = SourceKind::construct;
  std::string value;
};

struct RunConfig {
  std::string command;
  std::optional<InputSource> input;
  std::vector<double> alphas{0.0};
  double tolerance = 1e-12;
  Format format = Format::table;
  std::string output;
  // verify-extremal
  int n = 0;
  std::string constraint;
  int value = 0;
  // closed-form
  std::vector<int> cluster;
  std::string variant = "independent";
};

/// Builds a graph from "name:params", e.g. "complete:4", "bipartite:2,3",
/// "turan:6,3", "multipartite:2,2,2", "kite:6,2", "petersen" or
/// "join:cycle:4+complete:1". Throws InvalidArgumentError on bad specs.
Graph construct_graph(std::string_view spec);

/// Closed-form spectrum for a constructor spec, or for any regular graph of
/// diameter 2. Throws InvalidArgumentError when no closed form applies.
ClosedFormSpectrum closed_form_for(std::string_view spec, Alpha alpha);

/// Graphs named by the input source (a graph6 file may hold several).
std::vector<Graph> load_graphs(const InputSource &source);

/// Rounds to 12 significant digits; -0 becomes 0.
double round12(double x);

nlohmann::ordered_json spectrum_report(const Graph &g, Alpha alpha);
nlohmann::ordered_json bounds_report(const Graph &g, Alpha alpha);
nlohmann::ordered_json psd_report(const Graph &g, double tol);
nlohmann::ordered_json closed_form_report(const Graph &g, const ClosedFormSpectrum &s, Alpha alpha);
nlohmann::ordered_json extremal_report(const ExtremalReport &r);

/// Aligned plain-text rendering of an array of report objects.
void render_table(std::ostream &out, const nlohmann::ordered_json &reports);

/// Parses argv-style arguments (args[0] is the program name), runs the
/// command and returns the process exit code.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace rdalpha::cli

#endif  // RDALPHA_TOOLS_CLI_HPP
