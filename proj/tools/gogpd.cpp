// gogpd: command-line front end for the graph-of-groups library.
//
// Exit codes: 0 success / Candidate / Consistent, 1 Obstructed, 2 input error,
// 3 Inconclusive / Unresolved.

#include "gog/checks.hpp"
#include "gog/chiswell.hpp"
#include "gog/enumerate.hpp"
#include "gog/graph_builders.hpp"
#include "gog/json_io.hpp"
#include "gog/presentation.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace gog;
namespace fs = std::filesystem;

namespace {

constexpr int kOk = 0, kObstructed = 1, kInputError = 2, kOpen = 3;

struct Flags {
  std::string graph, group, json, word, theta, filters, bounds = "2,4", progress;
  std::string groups = "V4", edge_groups = "Z2";
  int n = 4, radius = 8, k = 2, threads = 1;
  bool reversing = false, resume = false;
};

GraphInput load_graph(const Flags& f) {
  if (f.graph.empty()) throw Error(ErrorKind::BadInput, "--graph is required");
  const fs::path p(f.graph);
  return graph_from_json(read_json_file(p), p.parent_path());
}

void write_json(const Flags& f, const Json& j) {
  if (f.json.empty()) return;
  std::ofstream out(f.json);
  if (!out) throw Error(ErrorKind::BadInput, "cannot write " + f.json);
  out << j.dump(2) << '\n';
}

std::vector<std::string> split(const std::string& csv, char sep = ',') {
  std::vector<std::string> out;
  std::stringstream in(csv);
  for (std::string item; std::getline(in, item, sep);)
    if (!item.empty()) out.push_back(item);
  return out;
}

void check_n(int n) {
  if (n < 4 || n % 2 != 0)
    throw Error(ErrorKind::InvalidDimension, "--n must be even and at least 4 (odd n is a different regime)");
}

int run_validate(const Flags& f) {
  const GraphInput in = load_graph(f);
  Json j;
  bool ok = true;
  for (const auto& finding : validate(in.graph)) {
    std::cout << finding.name << ": " << (finding.holds ? "yes" : "no");
    if (!finding.witness.empty()) std::cout << " (" << finding.witness << ")";
    std::cout << '\n';
    j["findings"][finding.name] = {{"holds", finding.holds}, {"witness", finding.witness}};
    ok = ok && finding.holds;
  }
  for (int e = 0; e < in.graph.edge_count(); ++e) {
    const std::string s = classify_edge(in.graph, e).str();
    std::cout << "edge " << in.graph.edge(e).id << ": " << s << '\n';
    j["edges"][in.graph.edge(e).id] = s;
  }
  write_json(f, j);
  return ok ? kOk : kInputError;
}

int run_present(const Flags& f) {
  const GraphInput in = load_graph(f);
  const Presentation p = fundamental_presentation(in.graph);
  const AbelianGroupInvariants ab = abelianization(p);
  std::cout << p.str() << '\n' << "abelianization: " << ab.str() << '\n';
  Json j;
  j["generators"] = p.generators;
  j["relators"] = Json::array();
  for (const auto& r : p.relators) j["relators"].push_back(p.word_str(r));
  j["abelianization"] = to_json(ab);
  write_json(f, j);
  return kOk;
}

int run_euler(const Flags& f) {
  const GraphInput in = load_graph(f);
  const std::string chi = to_string(virtual_euler(in.graph));
  const char* ends = to_string(ends_count(in.graph));
  std::cout << chi << '\n' << "ends: " << ends << '\n';
  write_json(f, Json{{"euler", chi}, {"ends", ends}});
  return kOk;
}

int run_tree(const Flags& f) {
  const GraphInput in = load_graph(f);
  const BassSerre bs(in.graph);
  const TreeBall ball = bs.ball(bs.root(), f.radius);
  std::vector<int> shells(static_cast<std::size_t>(f.radius) + 1, 0);
  for (int d : ball.distance) ++shells[static_cast<std::size_t>(d)];
  std::cout << "vertices: " << ball.vertices.size() << ", edges: " << ball.edges.size() << '\n';
  for (int r = 0; r <= f.radius; ++r) std::cout << "  distance " << r << ": " << shells[r] << '\n';
  Json j;
  j["radius"] = f.radius;
  j["vertices"] = ball.vertices.size();
  j["edges"] = ball.edges.size();
  j["shells"] = shells;
  write_json(f, j);
  return kOk;
}

// The --word element, or every vertex class representative when it is absent.
std::vector<std::pair<std::string, NormalForm>> targets(const BassSerre& bs, const Flags& f) {
  std::vector<std::pair<std::string, NormalForm>> out;
  if (!f.word.empty()) {
    out.emplace_back(f.word, parse_word(bs, f.word));
    return out;
  }
  const GraphOfGroups& g = bs.graph();
  for (const auto& [v, x] : bs.vertex_class_reps())
    out.emplace_back(g.vertex(v).id + ":" + g.group(v).element_name(x), bs.vertex_element(v, x));
  return out;
}

int run_fixed(const Flags& f) {
  const GraphInput in = load_graph(f);
  const BassSerre bs(in.graph);
  Json j = Json::array();
  int code = kOk;
  for (const auto& [label, w] : targets(bs, f)) {
    const FixedSubtreeReport r = bs.fixed_subtree(w, f.radius);
    std::cout << label << ": " << to_string(r.kind) << ", order " << r.order << ", " << r.vertices.size()
              << " vertices found, xi " << (r.xi ? std::to_string(*r.xi) : "infinite") << ", normalizer "
              << to_string(bs.normalizer_class(r));
    if (r.kind == FixedKind::Line) std::cout << ", translation length " << r.translation_length;
    if (!r.note.empty()) std::cout << " (" << r.note << ")";
    std::cout << '\n';
    Json rj = to_json(bs, r);
    rj["element"] = label;
    j.push_back(rj);
    if (r.kind == FixedKind::Unresolved) code = kOpen;
  }
  write_json(f, j);
  return code;
}

int run_chiswell(const Flags& f) {
  const GraphInput in = load_graph(f);
  const BassSerre bs(in.graph);
  Json j = Json::array();
  bool obstructed = false, open = false;
  for (const auto& [label, w] : targets(bs, f)) {
    const ChiswellResult r = hchis_obstruction(bs, in.omega, w, f.radius, f.reversing);
    std::cout << label << ": " << to_string(r.verdict) << " (" << r.witness << ")\n";
    Json rj = to_json(bs, r);
    rj["element"] = label;
    j.push_back(rj);
    obstructed = obstructed || r.verdict == ChiswellVerdict::Obstructed;
    open = open || r.verdict == ChiswellVerdict::Inconclusive;
  }
  write_json(f, j);
  return obstructed ? kObstructed : open ? kOpen : kOk;
}

int run_check(const Flags& f) {
  check_n(f.n);
  const GraphInput in = load_graph(f);
  const CheckReport r = run_checks(in.graph, in.omega, f.n, f.radius, split(f.filters));
  for (const auto& c : r.checks) {
    std::cout << "(" << c.id << ") " << c.name << ": " << to_string(c.status);
    if (!c.witness.empty()) std::cout << ": " << c.witness;
    std::cout << '\n';
  }
  std::cout << "verdict: " << to_string(r.overall);
  if (r.overall == Verdict::Obstructed) {
    std::cout << " by";
    for (const auto& id : r.failing()) std::cout << " (" << id << ")";
  }
  std::cout << '\n';
  write_json(f, to_json(r));
  switch (r.overall) {
    case Verdict::Obstructed: return kObstructed;
    case Verdict::Unresolved: return kOpen;
    case Verdict::Candidate: return kOk;
  }
  return kOpen;
}

int run_torus(const Flags& f) {
  if (f.k < 1) throw Error(ErrorKind::InvalidDimension, "--k must be positive");
  MappingTorusInput in;
  if (!f.graph.empty()) {
    const auto extracted = mapping_torus_extraction(load_graph(f).graph);
    if (const auto* no = std::get_if<NotSemidirect>(&extracted)) {
      std::cout << "not a mapping torus: " << no->reason << '\n';
      write_json(f, Json{{"verdict", "NotSemidirect"}, {"reason", no->reason}});
      return kInputError;
    }
    in = std::get<MappingTorusInput>(extracted);
  } else {
    if (f.group.empty() || f.theta.empty()) throw Error(ErrorKind::BadInput, "torus needs --graph, or --group with --theta");
    const fs::path p(f.group);
    in.group = group_from_json(read_json_file(p), p.parent_path());
    const Json theta = Json::parse(f.theta, nullptr, false);
    if (theta.is_number_integer()) {
      in.theta = cyclic_power_map(in.group, theta.get<int>());
    } else if (theta.is_array()) {
      in.theta.images = theta.get<std::vector<int>>();
    } else {
      throw Error(ErrorKind::BadInput, "--theta is a power j (cyclic groups) or a JSON element map");
    }
  }
  in.k = f.k;
  try {
    const TorusVerdict v = theorem_d_check(in);
    std::cout << v.str() << '\n' << v.reason << '\n';
    write_json(f, to_json(v));
    return v.realizable ? kOk : kObstructed;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::UnsupportedGroup) throw;
    std::cout << "verdict withheld: " << e.what() << '\n';
    write_json(f, Json{{"verdict", "Unsupported"}, {"reason", e.what()}});
    return kOpen;
  }
}

int run_enumerate(const Flags& f) {
  check_n(f.n);
  const auto bounds = split(f.bounds);
  if (bounds.size() != 2) throw Error(ErrorKind::BadInput, "--bounds takes V,E");
  Catalog c;
  try {
    c.max_vertices = std::stoi(bounds[0]);
    c.max_edges = std::stoi(bounds[1]);
  } catch (const std::exception&) {
    throw Error(ErrorKind::BadInput, "--bounds takes two integers");
  }
  c.n = f.n;
  for (const auto& name : split(f.groups)) c.groups.push_back(group_from_json(Json(name), fs::current_path()));
  for (const auto& name : split(f.edge_groups)) c.edge_groups.push_back(group_from_json(Json(name), fs::current_path()));
  EnumerationOptions opts;
  opts.filters = split(f.filters);
  opts.max_radius = f.radius;
  opts.threads = f.threads;
  opts.progress_path = f.progress;
  opts.resume = f.resume;
  std::ofstream lines;
  if (!f.json.empty()) {
    lines.open(f.json, opts.resume ? std::ios::app : std::ios::trunc);
    if (!lines) throw Error(ErrorKind::BadInput, "cannot write " + f.json);
  }
  const long count = enumerate_graphs(c, opts, [&](const EnumeratedGraph& e) {
    std::cout << "#" << e.index << ": " << e.graph.vertex_count() << " vertices, " << e.graph.edge_count()
              << " edges, euler " << to_string(virtual_euler(e.graph)) << ", " << to_string(e.report.overall) << '\n';
    if (lines) lines << to_json(e).dump() << '\n' << std::flush;
  });
  std::cout << count << " survivor" << (count == 1 ? "" : "s") << '\n';
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graphs of finite groups and PD_n necessary conditions"};
  app.require_subcommand(1);
  Flags f;
  auto graph_flag = [&](CLI::App* s) { s->add_option("--graph", f.graph, "graph JSON file"); };
  auto common = [&](CLI::App* s) {
    s->add_option("--json", f.json, "also write a JSON report here");
    s->add_option("--radius", f.radius, "search radius in the Bass-Serre tree")->check(CLI::NonNegativeNumber);
  };
  std::map<CLI::App*, int (*)(const Flags&)> handlers;
  auto sub = [&](const char* name, const char* help, int (*fn)(const Flags&)) {
    CLI::App* s = app.add_subcommand(name, help);
    common(s);
    handlers[s] = fn;
    return s;
  };
  graph_flag(sub("validate", "check well-formedness, reducedness, indecomposability", run_validate));
  graph_flag(sub("present", "presentation and abelianization of the fundamental group", run_present));
  graph_flag(sub("euler", "virtual Euler characteristic and ends", run_euler));
  graph_flag(sub("tree", "ball in the Bass-Serre tree around the base vertex", run_tree));
  for (auto [name, fn] : {std::pair{"fixed", run_fixed}, std::pair{"chiswell", run_chiswell}}) {
    CLI::App* s = sub(name, name == std::string("fixed") ? "fixed subtree of a finite-order element"
                                                         : "Chiswell exactness test for a finite-order element",
                      fn);
    graph_flag(s);
    s->add_option("--word", f.word, "element, e.g. \"v:a t:e v:b t:e^-1\"; default: all vertex class representatives");
    if (name == std::string("chiswell")) s->add_flag("--reversing", f.reversing, "allow omega(w) = -1");
  }
  CLI::App* check = sub("check", "run the necessary-condition battery", run_check);
  graph_flag(check);
  check->add_option("--n", f.n, "dimension (even, at least 4)");
  check->add_option("--filters", f.filters, "comma-separated check ids a..l");
  CLI::App* torus = sub("torus", "mapping-torus realizability", run_torus);
  graph_flag(torus);
  torus->add_option("--group", f.group, "group JSON file or catalog name");
  torus->add_option("--theta", f.theta, "power j for cyclic groups, or a JSON element map");
  torus->add_option("--k", f.k, "n = 2k");
  CLI::App* en = sub("enumerate", "search a catalog of small graphs of groups", run_enumerate);
  en->add_option("--groups", f.groups, "vertex groups, comma-separated catalog names or files");
  en->add_option("--edge-groups", f.edge_groups, "edge groups, comma-separated");
  en->add_option("--bounds", f.bounds, "max vertices and edges, V,E");
  en->add_option("--n", f.n, "dimension (even, at least 4)");
  en->add_option("--filters", f.filters, "comma-separated check ids a..l");
  en->add_option("--threads", f.threads, "worker threads")->check(CLI::PositiveNumber);
  en->add_option("--progress", f.progress, "progress file: index of the last emitted candidate");
  en->add_flag("--resume", f.resume, "continue after the index in the progress file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }
  try {
    for (auto& [s, fn] : handlers)
      if (s->parsed()) return fn(f);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n'
              << "input formats are described in README.md under \"Input formats\"\n";
    return kInputError;
  }
  return kInputError;
}
