#include "tempex/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <set>
#include <sstream>
#include <tuple>

namespace tempex {

Mode mode_of(const AnyGraph& g) {
  return std::holds_alternative<StrictTemporalGraph>(g) ? Mode::Strict : Mode::NonStrict;
}

Vertex vertex_count(const AnyGraph& g) {
  return std::visit([](const auto& x) { return x.vertex_count(); }, g);
}

namespace {

/// Yields the tokens of each meaningful line and remembers `# start v`.
class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  bool next() {
    std::string line;
    while (std::getline(in_, line)) {
      ++number_;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      const auto first = line.find_first_not_of(" \t");
      if (first == std::string::npos) continue;
      if (line[first] == '#') {
        note_comment(line.substr(first + 1));
        continue;
      }
      line_ = std::move(line);
      tokens_ = split(line_);
      return true;
    }
    return false;
  }

  const std::string& line() const noexcept { return line_; }
  const std::vector<std::string>& tokens() const noexcept { return tokens_; }
  std::optional<Vertex> start() const noexcept { return start_; }

  [[noreturn]] void fail(const std::string& what) const {
    throw InputError("line " + std::to_string(number_) + ": " + what);
  }

  std::int64_t integer(const std::string& tok) const {
    std::int64_t value = 0;
    const auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || end != tok.data() + tok.size()) fail("expected an integer, got '" + tok + "'");
    return value;
  }

  std::int32_t bounded(const std::string& tok, std::int64_t lo, std::int64_t hi,
                       const char* what) const {
    const std::int64_t v = integer(tok);
    if (v < lo || v > hi) {
      fail(std::string(what) + " " + tok + " outside [" + std::to_string(lo) + ", " +
           std::to_string(hi) + "]");
    }
    return static_cast<std::int32_t>(v);
  }

  static std::vector<std::string> split(const std::string& text) {
    std::istringstream ss(text);
    std::vector<std::string> out;
    for (std::string tok; ss >> tok;) out.push_back(tok);
    return out;
  }

 private:
  void note_comment(const std::string& body) {
    const auto toks = split(body);
    if (toks.size() == 2 && toks[0] == "start") {
      start_ = bounded(toks[1], 0, std::numeric_limits<Vertex>::max(), "start vertex");
    }
  }

  std::istream& in_;
  std::size_t number_ = 0;
  std::string line_;
  std::vector<std::string> tokens_;
  std::optional<Vertex> start_;
};

constexpr std::int64_t kMaxId = std::numeric_limits<std::int32_t>::max() - 1;

StrictTemporalGraph read_strict_body(LineReader& r, Vertex n, Time lifetime) {
  std::vector<TimeEdge> edges;
  std::set<std::tuple<Time, Vertex, Vertex>> seen;
  while (r.next()) {
    const auto& tok = r.tokens();
    if (tok.size() != 3) r.fail("expected '<t> <u> <v>'");
    if (lifetime == 0) r.fail("time-edge in a graph with lifetime 0");
    if (n == 0) r.fail("time-edge in a graph without vertices");
    const Time t = r.bounded(tok[0], 1, lifetime, "timestep");
    const Vertex u = r.bounded(tok[1], 0, n - 1, "vertex");
    const Vertex v = r.bounded(tok[2], 0, n - 1, "vertex");
    if (u >= v) r.fail("time-edge endpoints must satisfy u < v");
    if (!seen.emplace(t, u, v).second) r.fail("duplicate time-edge");
    edges.push_back({t, u, v});
  }
  return StrictTemporalGraph::from_time_edges(n, lifetime, edges);
}

NonStrictTemporalGraph read_ns_body(LineReader& r, Vertex n, Time lifetime) {
  std::vector<Partition> steps;
  for (Time t = 1; t <= lifetime; ++t) {
    if (!r.next()) throw InputError("expected " + std::to_string(lifetime) + " step lines, got " +
                                    std::to_string(t - 1));
    const std::string& line = r.line();
    const auto colon = line.find(':');
    if (colon == std::string::npos) r.fail("expected 'T <t>: ...'");
    const auto head = LineReader::split(line.substr(0, colon));
    if (head.size() != 2 || head[0] != "T") r.fail("expected 'T <t>: ...'");
    if (r.integer(head[1]) != t) r.fail("expected step " + std::to_string(t));
    Partition part;
    std::string rest = line.substr(colon + 1);
    std::size_t from = 0;
    while (true) {
      const auto bar = rest.find('|', from);
      const auto piece = LineReader::split(rest.substr(from, bar == std::string::npos ? bar : bar - from));
      if (piece.empty()) r.fail("empty component");
      std::vector<Vertex> comp;
      for (const auto& tok : piece) comp.push_back(r.bounded(tok, 0, std::max<Vertex>(n - 1, 0), "vertex"));
      part.push_back(std::move(comp));
      if (bar == std::string::npos) break;
      from = bar + 1;
    }
    steps.push_back(std::move(part));
  }
  if (r.next()) r.fail("unexpected line after the last step");
  try {
    return NonStrictTemporalGraph(n, lifetime, std::move(steps));
  } catch (const InputError& e) {
    throw InputError(std::string("invalid non-strict graph: ") + e.what());
  }
}

std::ifstream open(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  return in;
}

void write_list(std::ostream& out, std::span<const Vertex> vs) {
  for (Vertex v : vs) out << ' ' << v;
}

}  // namespace

GraphFile read_graph(std::istream& in) {
  LineReader r(in);
  if (!r.next()) throw InputError("empty graph file");
  const auto& tok = r.tokens();
  if (tok.size() != 3 || (tok[0] != "STRICT" && tok[0] != "NONSTRICT")) {
    r.fail("expected header 'STRICT <n> <L>' or 'NONSTRICT <n> <L>'");
  }
  const bool strict = tok[0] == "STRICT";
  const Vertex n = r.bounded(tok[1], 0, kMaxId, "vertex count");
  const Time lifetime = r.bounded(tok[2], 0, kMaxId, "lifetime");
  AnyGraph g = strict ? AnyGraph(read_strict_body(r, n, lifetime))
                      : AnyGraph(read_ns_body(r, n, lifetime));
  return {std::move(g), r.start()};
}

GraphFile read_graph_file(const std::string& path) {
  auto in = open(path);
  return read_graph(in);
}

void write_graph(std::ostream& out, const AnyGraph& g, std::optional<Vertex> start) {
  if (const auto* sg = std::get_if<StrictTemporalGraph>(&g)) {
    out << "STRICT " << sg->vertex_count() << ' ' << sg->lifetime() << '\n';
    if (start) out << "# start " << *start << '\n';
    for (Time t = 1; t <= sg->lifetime(); ++t) {
      for (const Edge& e : sg->layer(t)) out << t << ' ' << e.u << ' ' << e.v << '\n';
    }
    return;
  }
  const auto& ng = std::get<NonStrictTemporalGraph>(g);
  out << "NONSTRICT " << ng.vertex_count() << ' ' << ng.lifetime() << '\n';
  if (start) out << "# start " << *start << '\n';
  for (Time t = 1; t <= ng.lifetime(); ++t) {
    out << "T " << t << ':';
    const auto& part = ng.step(t);
    for (std::size_t j = 0; j < part.size(); ++j) {
      if (j > 0) out << " |";
      write_list(out, part[j]);
    }
    out << '\n';
  }
}

TargetSpec read_targets(std::istream& in) {
  LineReader r(in);
  std::optional<TargetSpec> spec;
  std::vector<std::vector<Vertex>> sets;
  while (r.next()) {
    const auto& tok = r.tokens();
    std::vector<Vertex> vs;
    for (std::size_t i = 1; i < tok.size(); ++i) vs.push_back(r.bounded(tok[i], 0, kMaxId, "vertex"));
    if (tok[0] == "X") {
      if (spec || !sets.empty()) r.fail("only one target line of kind X is allowed");
      spec = TargetSpec::fixed(std::move(vs));
    } else if (tok[0] == "K") {
      if (spec || !sets.empty()) r.fail("only one target line of kind K is allowed");
      if (vs.size() != 1) r.fail("expected 'K <k>'");
      spec = TargetSpec::of_count(vs[0]);
    } else if (tok[0] == "SET") {
      if (spec) r.fail("SET lines cannot follow an X or K line");
      if (vs.empty()) r.fail("empty SET");
      sets.push_back(std::move(vs));
    } else {
      r.fail("unknown target line '" + tok[0] + "'");
    }
  }
  if (spec) return *spec;
  return TargetSpec::of_sets(std::move(sets));
}

TargetSpec read_targets_file(const std::string& path) {
  auto in = open(path);
  return read_targets(in);
}

void write_targets(std::ostream& out, const TargetSpec& t) {
  switch (t.kind) {
    case TargetSpec::Kind::All:
      throw InputError("the exploration target has no file form");
    case TargetSpec::Kind::Fixed:
      out << 'X';
      write_list(out, t.vertices);
      out << '\n';
      return;
    case TargetSpec::Kind::Count:
      out << "K " << t.count << '\n';
      return;
    case TargetSpec::Kind::Sets:
      for (const auto& s : t.sets) {
        out << "SET";
        write_list(out, s);
        out << '\n';
      }
      return;
  }
}

SourceInstance read_source(std::istream& in) {
  LineReader r(in);
  if (!r.next()) throw InputError("empty source instance file");
  const auto& tok = r.tokens();
  if (tok.size() != 4 || (tok[0] != "HS" && tok[0] != "SC")) r.fail("expected 'HS|SC <n> <m> <k>'");
  SourceInstance src;
  src.kind = tok[0] == "HS" ? SourceKind::HittingSet : SourceKind::SetCover;
  src.system.n = r.bounded(tok[1], 0, kMaxId, "element count");
  const std::int32_t m = r.bounded(tok[2], 0, kMaxId, "set count");
  src.system.k = r.bounded(tok[3], 0, kMaxId, "budget");
  while (r.next()) {
    const auto& line = r.tokens();
    if (line[0] != "SET") r.fail("expected 'SET <a...>'");
    if (line.size() < 2) r.fail("empty SET");
    std::vector<std::int32_t> set;
    for (std::size_t i = 1; i < line.size(); ++i) {
      set.push_back(r.bounded(line[i], 0, std::max(src.system.n - 1, 0), "element"));
    }
    src.system.sets.push_back(std::move(set));
  }
  if (static_cast<std::int32_t>(src.system.sets.size()) != m) {
    throw InputError("header announces " + std::to_string(m) + " sets, file has " +
                     std::to_string(src.system.sets.size()));
  }
  src.system.validate();
  return src;
}

SourceInstance read_source_file(const std::string& path) {
  auto in = open(path);
  return read_source(in);
}

void write_source(std::ostream& out, const SourceInstance& src) {
  out << (src.kind == SourceKind::HittingSet ? "HS " : "SC ") << src.system.n << ' '
      << src.system.sets.size() << ' ' << src.system.k << '\n';
  for (const auto& s : src.system.sets) {
    out << "SET";
    write_list(out, s);
    out << '\n';
  }
}

void write_result(std::ostream& out, const TourResult& r, const AnyGraph& g, bool quiet) {
  if (!r.yes) {
    out << "NO\n";
    return;
  }
  out << "YES " << r.arrival << '\n';
  if (quiet || !r.walk) return;
  if (const auto* sw = std::get_if<StrictWalk>(&*r.walk)) {
    out << "START " << sw->start << ' ' << sw->start_time << '\n';
    for (const Traversal& e : sw->traversals) {
      out << "EDGE " << e.time << ' ' << e.from << ' ' << e.to << '\n';
    }
    return;
  }
  const auto& nw = std::get<NonStrictWalk>(*r.walk);
  const auto& ng = std::get<NonStrictTemporalGraph>(g);
  for (ComponentRef c : nw.steps) {
    out << "STEP " << c.time << " COMP";
    write_list(out, ng.component(c));
    out << '\n';
  }
}

ParsedResult read_result(std::istream& in, const AnyGraph& g, Vertex start) {
  LineReader r(in);
  ParsedResult out;
  if (!r.next()) throw InputError("empty result");
  const auto& head = r.tokens();
  if (head.size() == 1 && head[0] == "NO") {
    if (r.next()) r.fail("unexpected line after NO");
    return out;
  }
  if (head.size() != 2 || head[0] != "YES") r.fail("expected 'YES <arrival>' or 'NO'");
  out.yes = true;
  out.arrival = r.bounded(head[1], 0, kMaxId, "arrival");

  if (mode_of(g) == Mode::Strict) {
    if (!r.next()) return out;
    const auto& st = r.tokens();
    if (st.size() != 3 || st[0] != "START") r.fail("expected 'START <v> <t0>'");
    StrictWalk w{r.bounded(st[1], 0, kMaxId, "vertex"), r.bounded(st[2], 0, kMaxId, "timestep"), {},
                 out.arrival};
    while (r.next()) {
      const auto& e = r.tokens();
      if (e.size() != 4 || e[0] != "EDGE") r.fail("expected 'EDGE <t> <u> <v>'");
      w.traversals.push_back({r.bounded(e[1], 0, kMaxId, "timestep"), r.bounded(e[2], 0, kMaxId, "vertex"),
                              r.bounded(e[3], 0, kMaxId, "vertex")});
    }
    out.walk = std::move(w);
    return out;
  }

  const auto& ng = std::get<NonStrictTemporalGraph>(g);
  NonStrictWalk w{start, {}, out.arrival};
  bool any = false;
  while (r.next()) {
    any = true;
    const auto& e = r.tokens();
    if (e.size() < 4 || e[0] != "STEP" || e[2] != "COMP") r.fail("expected 'STEP <t> COMP <v...>'");
    const Time t = r.bounded(e[1], 1, std::max<Time>(ng.lifetime(), 1), "timestep");
    if (t > ng.lifetime()) r.fail("step beyond the lifetime");
    std::vector<Vertex> listed;
    for (std::size_t i = 3; i < e.size(); ++i) {
      listed.push_back(r.bounded(e[i], 0, std::max<Vertex>(ng.vertex_count() - 1, 0), "vertex"));
    }
    const ComponentRef c = ng.component_of(t, listed.front());
    const auto comp = ng.component(c);
    if (!std::equal(comp.begin(), comp.end(), listed.begin(), listed.end())) {
      r.fail("listed vertices are not a component of step " + std::to_string(t));
    }
    w.steps.push_back(c);
  }
  if (any || ng.lifetime() == 0) out.walk = std::move(w);
  return out;
}

}  // namespace tempex
