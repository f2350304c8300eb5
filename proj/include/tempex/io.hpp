#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <variant>

#include "tempex/graph.hpp"
#include "tempex/reductions.hpp"
#include "tempex/tour_dp.hpp"

namespace tempex {

using AnyGraph = std::variant<StrictTemporalGraph, NonStrictTemporalGraph>;

Mode mode_of(const AnyGraph& g);
Vertex vertex_count(const AnyGraph& g);

/// A graph file plus the start vertex named by an optional `# start <v>`
/// comment line.
struct GraphFile {
  AnyGraph graph;
  std::optional<Vertex> start;
};

/// Reads either format, chosen by the header (`STRICT n L` or
/// `NONSTRICT n L`). Blank lines and lines starting with '#' are skipped.
/// Errors are InputError with the offending line number.
GraphFile read_graph(std::istream& in);
GraphFile read_graph_file(const std::string& path);

/// Canonical form: header, optional start comment, then time-edges in
/// (t, u, v) order or one `T t:` line per step.
void write_graph(std::ostream& out, const AnyGraph& g, std::optional<Vertex> start = {});

/// `X v...` (one line), `K k` (one line) or any number of `SET v...` lines.
/// A file without target lines is the empty set family.
TargetSpec read_targets(std::istream& in);
TargetSpec read_targets_file(const std::string& path);
void write_targets(std::ostream& out, const TargetSpec& t);

enum class SourceKind { HittingSet, SetCover };

struct SourceInstance {
  SourceKind kind = SourceKind::HittingSet;
  SetSystem system;
};

/// `HS n m k` or `SC n m k`, then exactly m `SET v...` lines.
SourceInstance read_source(std::istream& in);
SourceInstance read_source_file(const std::string& path);
void write_source(std::ostream& out, const SourceInstance& src);

/// `YES <arrival>` or `NO`, then unless `quiet` the certificate:
/// `START v t0` and `EDGE t u v` lines for strict walks, `STEP t COMP v...`
/// lines for non-strict ones.
void write_result(std::ostream& out, const TourResult& r, const AnyGraph& g, bool quiet = false);

struct ParsedResult {
  bool yes = false;
  Time arrival = kInfinity;
  std::optional<Walk> walk;
};

/// Inverse of write_result. Non-strict certificates do not name the start
/// vertex, so it is passed in. Listed components must match the graph.
ParsedResult read_result(std::istream& in, const AnyGraph& g, Vertex start);

}  // namespace tempex
