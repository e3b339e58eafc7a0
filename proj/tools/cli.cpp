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

#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>

#include <CLI11.hpp>

#include "rdalpha/bounds.hpp"
#include "rdalpha/canonical.hpp"
#include "rdalpha/constructors.hpp"
#include "rdalpha/distances.hpp"
#include "rdalpha/eigen.hpp"
#include "rdalpha/error.hpp"
#include "rdalpha/invariants.hpp"
#include "rdalpha/io.hpp"
#include "rdalpha/psd.hpp"

namespace rdalpha::cli {
namespace {

using Json = nlohmann::ordered_json;

struct ConstructorSpec {
  std::string name;
  std::string_view rest;
  std::vector<int> params;
};

std::vector<int> parse_ints(std::string_view text) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const std::string_view item = text.substr(pos, comma - pos);
    int v = 0;
    const auto [end, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (ec != std::errc() || end != item.data() + item.size() || item.empty())
      throw InvalidArgumentError("bad integer parameter '" + std::string(item) + "'");
    out.push_back(v);
    pos = comma + 1;
  }
  return out;
}

ConstructorSpec split_spec(std::string_view spec) {
  const std::size_t colon = spec.find(':');
  ConstructorSpec s;
  s.name = std::string(spec.substr(0, colon));
  s.rest = colon == std::string_view::npos ? std::string_view{} : spec.substr(colon + 1);
  if (s.name != "join") s.params = parse_ints(s.rest);
  return s;
}

void expect(const ConstructorSpec &s, std::size_t count) {
  if (s.params.size() != count)
    throw InvalidArgumentError(s.name + " expects " + std::to_string(count) +
                               " parameter(s), got " + std::to_string(s.params.size()));
}

std::pair<std::string_view, std::string_view> join_operands(std::string_view rest) {
  const std::size_t plus = rest.find('+');
  if (plus == std::string_view::npos)
    throw InvalidArgumentError("join expects two specs separated by '+'");
  return {rest.substr(0, plus), rest.substr(plus + 1)};
}

std::vector<int> turan_parts(int n, int r) {
  if (r < 1 || r > n) throw InvalidArgumentError("turan: need 1 <= r <= n");
  std::vector<int> parts(r, n / r);
  for (int i = 0; i < n % r; ++i) ++parts[i];
  return parts;
}

Json numbers(const std::vector<double> &values) {
  Json a = Json::array();
  for (double v : values) a.push_back(round12(v));
  return a;
}

std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string scalar_text(const Json &v) {
  if (v.is_null()) return "-";
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  if (v.is_number()) return format_number(v.get<double>());
  return v.dump();
}

void render_object(std::ostream &out, const Json &obj, const std::string &prefix);

void render_rows(std::ostream &out, const Json &rows) {
  std::vector<std::string> keys;
  for (const auto &[k, v] : rows.front().items()) keys.push_back(k);
  std::vector<std::vector<std::string>> cells;
  std::vector<std::size_t> width(keys.size());
  for (std::size_t c = 0; c < keys.size(); ++c) width[c] = keys[c].size();
  for (const Json &row : rows) {
    std::vector<std::string> line;
    for (std::size_t c = 0; c < keys.size(); ++c) {
      line.push_back(row.contains(keys[c]) ? scalar_text(row[keys[c]]) : "-");
      width[c] = std::max(width[c], line.back().size());
    }
    cells.push_back(std::move(line));
  }
  auto emit = [&](const std::vector<std::string> &line) {
    out << " ";
    for (std::size_t c = 0; c < line.size(); ++c) {
      out << ' ' << line[c];
      if (c + 1 < line.size()) out << std::string(width[c] - line[c].size(), ' ');
    }
    out << '\n';
  };
  emit(keys);
  for (const auto &line : cells) emit(line);
}

void render_object(std::ostream &out, const Json &obj, const std::string &prefix) {
  std::size_t pad = 0;
  for (const auto &[k, v] : obj.items()) pad = std::max(pad, prefix.size() + k.size());
  for (const auto &[k, v] : obj.items()) {
    const std::string key = prefix + k;
    if (v.is_object()) {
      render_object(out, v, key + ".");
    } else if (v.is_array() && !v.empty() && v.front().is_object()) {
      out << key << ":\n";
      render_rows(out, v);
    } else if (v.is_array()) {
      out << key << std::string(pad - key.size() + 2, ' ');
      for (std::size_t i = 0; i < v.size(); ++i) out << (i ? " " : "") << scalar_text(v[i]);
      out << '\n';
    } else {
      out << key << std::string(pad - key.size() + 2, ' ') << scalar_text(v) << '\n';
    }
  }
}

ClosedFormSpectrum cluster_spectrum(const Graph &g, const std::vector<int> &members,
                                    const std::string &variant, Alpha alpha) {
  ClusterVariant v;
  if (variant == "independent")
    v = ClusterVariant::independent;
  else if (variant == "clique")
    v = ClusterVariant::clique;
  else
    throw InvalidArgumentError("variant must be independent or clique");
  const ClusterSpec spec = make_cluster(g, members, v);
  const ClusterQuotient q = cluster_quotient(g, spec, v, alpha);
  ClosedFormSpectrum s;
  s.source = "cluster_" + variant;
  s.parameters = {{"c", static_cast<double>(members.size())},
                  {"t", spec.transmission},
                  {"alpha", alpha.value()}};
  s.families.emplace_back(q.repeated_eigenvalue, q.multiplicity);
  for (double l : q.quotient.eigenvalues()) s.families.emplace_back(l, 1);
  return s;
}

std::optional<PsdThreshold> closed_form_threshold(const Graph &g) {
  const int n = g.order();
  if (n < 2) return std::nullopt;
  if (is_transmission_regular(g, 1e-8)) return alpha0_transmission_regular(g);
  if (n < 4 || n > kCanonicalMaxOrder) return std::nullopt;
  if (const auto sides = bipartition(g)) {
    const int ones = static_cast<int>(std::count(sides->begin(), sides->end(), 1));
    const int a = std::min(ones, n - ones);
    if (g.size() == a * (n - a)) return alpha0_complete_bipartite(a, n);
  }
  if (g.size() == 2 * (n - 1) && are_isomorphic(g, make::wheel(n))) return alpha0_wheel(n);
  return std::nullopt;
}

std::vector<Alpha> validated_alphas(const std::vector<double> &values) {
  if (values.empty()) throw InvalidArgumentError("--alpha needs at least one value");
  std::vector<Alpha> out;
  for (double v : values) out.emplace_back(v);
  return out;
}

void emit(const Json &reports, Format format, std::ostream &out) {
  if (format == Format::json)
    out << reports.dump(2) << '\n';
  else
    render_table(out, reports);
}

}  // namespace

Graph construct_graph(std::string_view spec) {
  const ConstructorSpec s = split_spec(spec);
  const auto &p = s.params;
  if (s.name == "join") {
    const auto [a, b] = join_operands(s.rest);
    return make::join(construct_graph(a), construct_graph(b));
  }
  if (s.name == "complete") return expect(s, 1), make::complete(p[0]);
  if (s.name == "edgeless") return expect(s, 1), make::edgeless(p[0]);
  if (s.name == "path") return expect(s, 1), make::path(p[0]);
  if (s.name == "cycle") return expect(s, 1), make::cycle(p[0]);
  if (s.name == "star") return expect(s, 1), make::star(p[0]);
  if (s.name == "wheel") return expect(s, 1), make::wheel(p[0]);
  if (s.name == "bipartite") return expect(s, 2), make::complete_bipartite(p[0], p[1]);
  if (s.name == "split") return expect(s, 2), make::complete_split(p[0], p[1]);
  if (s.name == "turan") return expect(s, 2), make::turan(p[0], p[1]);
  if (s.name == "kite") return expect(s, 2), build_kite(p[0], p[1]);
  if (s.name == "multipartite") return make::complete_multipartite(p);
  if (s.name == "petersen") return expect(s, 0), make::petersen();
  throw InvalidArgumentError("unknown constructor '" + s.name + "'");
}

ClosedFormSpectrum closed_form_for(std::string_view spec, Alpha alpha) {
  const ConstructorSpec s = split_spec(spec);
  const auto &p = s.params;
  if (s.name == "complete") return expect(s, 1), spectrum_complete(p[0], alpha);
  if (s.name == "bipartite") return expect(s, 2), spectrum_complete_bipartite(p[0], p[1], alpha);
  if (s.name == "star") {
    expect(s, 1);
    if (p[0] < 2) throw InvalidArgumentError("star: n must be >= 2");
    return spectrum_complete_bipartite(1, p[0] - 1, alpha);
  }
  if (s.name == "split") return expect(s, 2), spectrum_complete_split(p[0], p[1], alpha);
  if (s.name == "wheel") return expect(s, 1), spectrum_wheel(p[0], alpha);
  if (s.name == "multipartite") return spectrum_multipartite(p, alpha);
  if (s.name == "turan") {
    expect(s, 2);
    const std::vector<int> parts = turan_parts(p[0], p[1]);
    return spectrum_multipartite(parts, alpha);
  }
  if (s.name == "join") {
    const auto [a, b] = join_operands(s.rest);
    return spectrum_join_regular(regular_spectrum(construct_graph(a)),
                                 regular_spectrum(construct_graph(b)), alpha);
  }
  const Graph g = construct_graph(spec);
  try {
    return spectrum_regular_diam2(g, alpha);
  } catch (const InvalidArgumentError &) {
    throw InvalidArgumentError("no closed form applies to '" + std::string(spec) + "'");
  }
}

std::vector<Graph> load_graphs(const InputSource &source) {
  switch (source.kind) {
    case SourceKind::graph6: return {parse_graph6(source.value)};
    case SourceKind::construct: return {construct_graph(source.value)};
    case SourceKind::graph6_file:
    case SourceKind::edge_list: {
      std::ifstream in(source.value);
      if (!in) throw InvalidArgumentError("cannot open '" + source.value + "'");
      if (source.kind == SourceKind::edge_list) return {read_edge_list(in)};
      std::vector<Graph> graphs = read_graph6_stream(in);
      if (graphs.empty()) throw InvalidArgumentError("no graphs in '" + source.value + "'");
      return graphs;
    }
  }
  return {};
}

double round12(double x) {
  if (!std::isfinite(x)) return x;
  const double r = std::stod(format_number(x));
  return r == 0.0 ? 0.0 : r;
}

Json spectrum_report(const Graph &g, Alpha alpha) {
  const MatrixBundle b = build_bundle(g);
  const Spectrum s = sym_eigen(rd_alpha(b, alpha));
  double harary = 0.0;
  for (double t : b.transmissions) harary += 0.5 * t;
  Json r;
  r["graph6"] = to_graph6(g);
  r["n"] = g.order();
  r["alpha"] = alpha.value();
  r["eigenvalues"] = numbers(s.eigenvalues);
  r["harary"] = round12(harary);
  r["energy"] = round12(rd_alpha_energy(g, alpha));
  r["transmissions"] = numbers(b.transmissions);
  return r;
}

Json bounds_report(const Graph &g, Alpha alpha) {
  const SpectralTargets t = spectral_targets(g, alpha);
  Json r;
  r["graph6"] = to_graph6(g);
  r["n"] = g.order();
  r["alpha"] = alpha.value();
  r["spectral_radius"] = round12(t.spectral_radius);
  r["min_eigenvalue"] = round12(t.min_eigenvalue);
  r["rq_spectral_radius"] = round12(t.rq_spectral_radius);
  Json records = Json::array();
  int violations = 0;
  for (const BoundRecord &b : full_bound_report(g, alpha)) {
    const bool holds = bound_holds(b, t);
    violations += holds ? 0 : 1;
    Json rec;
    rec["name"] = b.name;
    rec["kind"] = to_string(b.kind);
    rec["target"] = to_string(b.target);
    rec["value"] = round12(b.value);
    rec["applicable"] = b.applicable;
    rec["holds"] = holds;
    rec["equality_expected"] = b.equality_expected;
    rec["basis"] = b.basis;
    rec["reason"] = b.reason;
    records.push_back(std::move(rec));
  }
  r["violations"] = violations;
  r["records"] = std::move(records);
  return r;
}

Json psd_report(const Graph &g, double tol) {
  const PsdThreshold t = alpha0_bisection(g, tol);
  Json r;
  r["graph6"] = to_graph6(g);
  r["n"] = g.order();
  r["alpha0"] = round12(t.alpha0);
  r["method"] = to_string(t.method);
  r["residual"] = round12(t.residual);
  r["note"] = t.note;
  if (const auto cf = closed_form_threshold(g)) {
    Json c;
    c["alpha0"] = round12(cf->alpha0);
    c["note"] = cf->note;
    c["difference"] = round12(std::abs(cf->alpha0 - t.alpha0));
    r["closed_form"] = std::move(c);
  } else {
    r["closed_form"] = nullptr;
  }
  return r;
}

Json closed_form_report(const Graph &g, const ClosedFormSpectrum &s, Alpha alpha) {
  const std::vector<double> numeric = sym_eigen(rd_alpha(g, alpha)).eigenvalues;
  const std::vector<double> closed = s.values();
  Json r;
  r["graph6"] = to_graph6(g);
  r["n"] = g.order();
  r["alpha"] = alpha.value();
  r["source"] = s.source;
  Json params;
  for (const auto &[k, v] : s.parameters) params[k] = v;
  r["parameters"] = std::move(params);
  Json families = Json::array();
  for (const auto &[v, m] : s.families) families.push_back({{"value", round12(v)}, {"multiplicity", m}});
  r["families"] = std::move(families);
  r["closed_form"] = numbers(closed);
  r["numeric"] = numbers(numeric);
  r["max_deviation"] = multiset_distance(closed, numeric);
  return r;
}

Json extremal_report(const ExtremalReport &x) {
  Json r;
  r["n"] = x.n;
  r["constraint"] = to_string(x.constraint);
  r["value"] = x.value;
  r["alpha"] = x.alpha;
  r["exploratory"] = x.exploratory;
  r["class_size"] = x.class_size;
  r["rho_max"] = round12(x.rho_max);
  r["maximizers"] = x.maximizers;
  r["runner_up_gap"] = std::isfinite(x.runner_up_gap) ? Json(round12(x.runner_up_gap)) : Json();
  r["predicted"] = Json::array({x.predicted});
  r["verdict"] = to_string(x.verdict);
  if (x.constraint == Constraint::independence_number) {
    r["bound"] = round12(x.bound);
    r["bound_violations"] = x.bound_violations;
    r["bound_attained_by"] = x.bound_attained_by;
  }
  return r;
}

void render_table(std::ostream &out, const Json &reports) {
  bool first = true;
  for (const Json &report : reports) {
    if (!first) out << '\n';
    first = false;
    if (report.is_object())
      render_object(out, report, "");
    else
      out << scalar_text(report) << '\n';
  }
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Spectra, bounds and extremal checks for reciprocal distance matrices",
               "rdalpha"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string graph6, graph6_file, edge_list, construct, format = "table";

  auto add_input = [&](CLI::App *sub) {
    sub->add_option("--graph6", graph6, "Graph in graph6 format");
    sub->add_option("--graph6-file", graph6_file, "File with one graph6 string per line");
    sub->add_option("--edge-list", edge_list, "Edge-list file: 'n m' header, then 'u v' lines");
    sub->add_option("--construct", construct,
                    "Named graph: complete:N path:N cycle:N star:N wheel:N bipartite:A,B "
                    "split:A,B turan:N,R multipartite:N1,N2,... kite:N,R petersen "
                    "edgeless:N join:SPEC+SPEC");
  };
  auto add_output = [&](CLI::App *sub) {
    sub->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"table", "json"}));
    sub->add_option("--output,-o", cfg.output, "Write to this file instead of stdout");
  };
  auto add_alpha = [&](CLI::App *sub) {
    sub->add_option("--alpha", cfg.alphas, "Alpha values in [0, 1], comma separated")
        ->delimiter(',');
  };

  CLI::App *spectrum = app.add_subcommand("spectrum", "Eigenvalues, Harary index, energy");
  CLI::App *bounds = app.add_subcommand("bounds", "Spectral-radius bound records");
  CLI::App *psd = app.add_subcommand("psd", "Smallest alpha making RD_alpha PSD");
  CLI::App *closed = app.add_subcommand("closed-form", "Closed-form spectrum vs eigensolve");
  CLI::App *extremal = app.add_subcommand("verify-extremal", "Exhaustive extremal search");
  CLI::App *enumerate = app.add_subcommand("enumerate", "Connected graphs up to isomorphism");
  CLI::App *matrix = app.add_subcommand("matrix", "Print RD_alpha");

  for (CLI::App *sub : {spectrum, bounds, psd, closed, matrix}) add_input(sub);
  for (CLI::App *sub : {spectrum, bounds, closed, extremal, matrix}) add_alpha(sub);
  for (CLI::App *sub : {spectrum, bounds, psd, closed, extremal, enumerate, matrix})
    add_output(sub);
  psd->add_option("--tol", cfg.tolerance, "Bisection bracket width (>= 1e-12)");
  closed->add_option("--cluster", cfg.cluster, "Cluster vertices, comma separated")
      ->delimiter(',');
  closed->add_option("--variant", cfg.variant, "Cluster kind")
      ->check(CLI::IsMember({"independent", "clique"}));
  extremal->add_option("--n", cfg.n, "Order")->required();
  extremal->add_option("--constraint", cfg.constraint, "Constrained invariant")
      ->required()
      ->check(CLI::IsMember({"vertex-connectivity", "edge-connectivity", "chromatic-number",
                             "independence-number"}));
  extremal->add_option("--value", cfg.value, "Value of the constrained invariant")->required();
  enumerate->add_option("--n", cfg.n, "Order")->required();

  std::vector<const char *> argv;
  for (const std::string &a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  cfg.command = app.get_subcommands().front()->get_name();
  cfg.format = format == "json" ? Format::json : Format::table;

  int sources = 0;
  for (const auto &[kind, text] : {std::pair{SourceKind::graph6, &graph6},
                                   std::pair{SourceKind::graph6_file, &graph6_file},
                                   std::pair{SourceKind::edge_list, &edge_list},
                                   std::pair{SourceKind::construct, &construct}})
    if (!text->empty()) {
      ++sources;
      cfg.input = InputSource{kind, *text};
    }

  std::ostringstream buffer;
  int code = kExitOk;
  try {
    const bool needs_graph = cfg.command != "verify-extremal" && cfg.command != "enumerate";
    if (needs_graph && sources != 1)
      throw InvalidArgumentError("exactly one of --graph6, --graph6-file, --edge-list, "
                                 "--construct is required");
    const std::vector<Alpha> alphas = validated_alphas(cfg.alphas);
    Json reports = Json::array();

    if (cfg.command == "spectrum" || cfg.command == "bounds") {
      for (const Graph &g : load_graphs(*cfg.input))
        for (Alpha a : alphas)
          reports.push_back(cfg.command == "spectrum" ? spectrum_report(g, a)
                                                      : bounds_report(g, a));
    } else if (cfg.command == "psd") {
      for (const Graph &g : load_graphs(*cfg.input)) reports.push_back(psd_report(g, cfg.tolerance));
    } else if (cfg.command == "closed-form") {
      for (const Graph &g : load_graphs(*cfg.input))
        for (Alpha a : alphas) {
          ClosedFormSpectrum s;
          if (!cfg.cluster.empty())
            s = cluster_spectrum(g, cfg.cluster, cfg.variant, a);
          else if (cfg.input->kind == SourceKind::construct)
            s = closed_form_for(cfg.input->value, a);
          else
            s = spectrum_regular_diam2(g, a);
          reports.push_back(closed_form_report(g, s, a));
        }
    } else if (cfg.command == "verify-extremal") {
      GraphCatalog catalog;
      const Constraint c = parse_constraint(cfg.constraint);
      bool refuted = false, tie = false;
      for (Alpha a : alphas) {
        const ExtremalReport r = verify_extremal(catalog, c, cfg.n, cfg.value, a);
        refuted = refuted || r.verdict == Verdict::refuted;
        tie = tie || r.verdict == Verdict::tie;
        reports.push_back(extremal_report(r));
      }
      code = refuted ? kExitRefuted : tie ? kExitTie : kExitOk;
    } else if (cfg.command == "enumerate") {
      if (cfg.n > kEnumerationMaxOrder)
        throw BudgetExceededError("enumerate", cfg.n, kEnumerationMaxOrder);
      if (cfg.n < 1) throw InvalidArgumentError("--n must be >= 1");
      for (const Graph &g : enumerate_connected_graphs(cfg.n)) reports.push_back(to_graph6(g));
    } else if (cfg.command == "matrix") {
      for (const Graph &g : load_graphs(*cfg.input))
        for (Alpha a : alphas) {
          const Matrix m = rd_alpha(g, a);
          Json rows = Json::array();
          for (int i = 0; i < m.rows(); ++i) {
            const auto row = m.row(i);
            rows.push_back(numbers(std::vector<double>(row.begin(), row.end())));
          }
          if (cfg.format == Format::table) {
            buffer << "graph6 " << to_graph6(g) << "  alpha " << format_number(a.value()) << '\n';
            dump_matrix(buffer, m);
          }
          reports.push_back({{"graph6", to_graph6(g)}, {"alpha", a.value()}, {"matrix", rows}});
        }
    }

    if (cfg.command != "matrix" || cfg.format == Format::json) emit(reports, cfg.format, buffer);
  } catch (const BudgetExceededError &e) {
    err << "rdalpha: " << e.what() << '\n';
    return kExitBudget;
  } catch (const std::exception &e) {
    err << "rdalpha: " << e.what() << '\n';
    return kExitUsage;
  }

  if (cfg.output.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(cfg.output);
    if (!(file << buffer.str())) {
      err << "rdalpha: cannot write '" << cfg.output << "'\n";
      return kExitUsage;
    }
  }
  return code;
}

}  // namespace rdalpha::cli
