#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "tourney/tournament.hpp"
#include "tourney/verify.hpp"

namespace tourney {

// Tournament file format:
//   line 1        decimal order n
//   lines 2..n+1  exactly n characters from {0,1}; row x column y is 1 iff
//                 x beats y
// Every line ends in '\n'; no other whitespace, nothing after row n.

/// Throws ParseError (with 1-based line/column) on syntax errors and
/// InvalidTournament when the matrix breaks the tournament axioms.
Tournament parse_tournament(std::string_view text);
std::string format_tournament(const Tournament& t);

/// Throws std::runtime_error if the file cannot be opened.
Tournament read_tournament(const std::filesystem::path& path);
void write_tournament(const Tournament& t, const std::filesystem::path& path);

struct DotOptions {
  /// Per-vertex label; empty means the integer id.
  std::vector<std::string> labels;
  /// Order-36 only: wrap blocks and their triangles in nested clusters.
  bool paper_clusters = false;
};

/// Graphviz digraph with one edge x -> y per dominant pair.
std::string export_dot(const Tournament& t, const DotOptions& opts = {});

/// Report document (schema: schemas/report.schema.json).
std::string report_to_json(const paper36::VerificationReport& report);

}  // namespace tourney
